//! Exact rational scalars: parsing, formatting, and exact roots.
//!
//! The wire format for a rational is either a JSON integer or a string
//! "p/q" (also accepted: a plain integer in string form). Nothing in this
//! crate ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat_from_i64(value: i64) -> Rat {
    Rat::from_integer(Int::from(value))
}

/// Parses "p/q" or a plain integer string.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let parse_err = |detail: &str| Error::Parse {
        what: format!("rational '{text}'"),
        detail: detail.into(),
    };
    let trimmed = text.trim();
    match trimmed.split_once('/') {
        None => {
            let p: Int = trimmed.parse().map_err(|_| parse_err("not an integer"))?;
            Ok(Rat::from_integer(p))
        }
        Some((num, den)) => {
            let p: Int = num.trim().parse().map_err(|_| parse_err("bad numerator"))?;
            let q: Int = den
                .trim()
                .parse()
                .map_err(|_| parse_err("bad denominator"))?;
            if q.is_zero() {
                return Err(parse_err("zero denominator"));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// "p" when the value is an integer, "p/q" otherwise.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Reads a rational out of a JSON number or "p/q" string.
pub fn rat_from_json(value: &serde_json::Value) -> Result<Rat> {
    match value {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rat_from_i64(i))
            } else {
                Err(Error::Parse {
                    what: format!("rational {n}"),
                    detail: "only integers and 'p/q' strings are accepted".into(),
                })
            }
        }
        serde_json::Value::String(s) => parse_rat(s),
        other => Err(Error::Parse {
            what: format!("rational {other}"),
            detail: "expected an integer or a 'p/q' string".into(),
        }),
    }
}

/// Writes a rational as a JSON integer when it fits in i64, else as a string.
pub fn rat_to_json(value: &Rat) -> serde_json::Value {
    if value.denom().is_one() {
        if let Some(i) = value.numer().to_i64() {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::from(format_rat(value))
}

/// Exact k-th root when one exists in the rationals; None otherwise.
/// Negative inputs admit roots only for odd k.
pub fn exact_nth_root(value: &Rat, k: u32) -> Option<Rat> {
    assert!(k >= 1);
    if k == 1 {
        return Some(value.clone());
    }
    if value.is_zero() {
        return Some(Rat::zero());
    }
    if value.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let num = int_nth_root(&value.numer().abs(), k)?;
    let den = int_nth_root(value.denom(), k)?;
    let mut root = Rat::new(num, den);
    if value.is_negative() {
        root = -root;
    }
    Some(root)
}

fn int_nth_root(value: &Int, k: u32) -> Option<Int> {
    let root = value.nth_root(k);
    if num_traits::pow(root.clone(), k as usize) == *value {
        Some(root)
    } else {
        None
    }
}
