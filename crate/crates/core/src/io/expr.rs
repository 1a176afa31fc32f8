//! A small polynomial expression syntax: `2*y2_1*x0_1 - 1/2*x0_1^2 + t^-1`.

use crate::error::{Error, Result};
use crate::graded::{Element, SignatureRef};
use crate::scalar::Field;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits at top-level `+`/`-`, keeping the sign with each term. A `-`
/// directly after `^` belongs to an exponent.
fn split_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev = None;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        if (ch == '+' || ch == '-') && prev != Some('^') && prev != Some('*') {
            if !cur.is_empty() {
                out.push((neg, std::mem::take(&mut cur)));
                neg = false;
            }
            neg ^= ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push((neg, cur));
    }
    out
}

pub fn parse_expression<F: Field>(sig: &SignatureRef, s: &str) -> Result<Element<F>> {
    let mut acc = Element::zero(sig);
    if s.trim() == "0" || s.trim().is_empty() {
        return Ok(acc);
    }
    for (neg, term) in split_terms(s) {
        let mut coef = F::one();
        let mut factors: Vec<(String, i32)> = Vec::new();
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(bad(format!("empty factor in `{term}`")));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                let c: F = factor.parse().map_err(|_| bad(format!("bad coefficient `{factor}`")))?;
                coef = coef * c;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<i32>().map_err(|_| bad(format!("bad exponent in `{factor}`")))?),
                None => (factor, 1),
            };
            factors.push((name.to_string(), exp));
        }
        let refs: Vec<(&str, i32)> = factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        let m = Element::monomial(sig, if neg { -coef } else { coef }, &refs)?;
        acc += &m;
    }
    Ok(acc)
}
