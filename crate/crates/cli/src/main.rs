use std::process::ExitCode;

mod pipeline;

fn main() -> ExitCode {
    ExitCode::from(pipeline::run(std::env::args_os()))
}
