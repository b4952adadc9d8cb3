use num_traits::One;

use super::uea::{UEAElement, Word};
use super::SuperDims;
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};

/// Parses the rendering produced by `Display`, e.g.
/// `"3/2*E(1,2)E(2,1) - E(1b,1b) + 2"`.
pub fn parse_uea(dims: SuperDims, s: &str) -> Result<UEAElement> {
    let mut out = UEAElement::zero(dims);
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() || s == "0" {
        return Ok(out);
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && !cur.is_empty() && !cur.ends_with('/') => {
                terms.push(std::mem::take(&mut cur));
            }
            _ => {}
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let (w, c) = parse_term(dims, &t)?;
        out.add_term(w, c);
    }
    Ok(out)
}

fn parse_term(dims: SuperDims, t: &str) -> Result<(Word, Rational)> {
    let bad = || Error::Parse(format!("cannot parse term {t:?}"));
    let (sign, body) = match t.strip_prefix('-') {
        Some(b) => (-Rational::one(), b),
        None => (Rational::one(), t.strip_prefix('+').unwrap_or(t)),
    };
    let (coef, word) = match body.find('E') {
        Some(0) => (Rational::one(), body),
        Some(p) => {
            let c = body[..p].strip_suffix('*').ok_or_else(bad)?;
            (parse_rational(c)?, &body[p..])
        }
        None => (parse_rational(body)?, ""),
    };
    let mut w = Vec::new();
    let mut rest = word;
    while !rest.is_empty() {
        let inner = rest.strip_prefix("E(").ok_or_else(bad)?;
        let close = inner.find(')').ok_or_else(bad)?;
        let (i, j) = inner[..close].split_once(',').ok_or_else(bad)?;
        w.push((dims.parse_label(i)? as u8, dims.parse_label(j)? as u8));
        rest = &inner[close + 1..];
    }
    Ok((w, sign * coef))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlie::gelfand_element;

    #[test]
    fn round_trip() {
        let dims = SuperDims::new(2, 1);
        for d in 1..=3 {
            let g = gelfand_element(dims, d).unwrap();
            assert_eq!(parse_uea(dims, &g.to_string()).unwrap(), g);
        }
        let a = parse_uea(dims, "3/2*E(1,2)E(2,1) - 1/3*E(1b,1b) + 2").unwrap();
        assert_eq!(a.to_string(), "2 + 3/2*E(1,2)E(2,1) - 1/3*E(1b,1b)");
        assert!(parse_uea(dims, "E(3,1)").is_err());
        assert!(parse_uea(dims, "E(1,2b)").is_err());
    }
}
