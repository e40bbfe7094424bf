//! Exact rationals as `numerator/denominator` strings, so values survive
//! serialization without loss.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::str::FromStr;

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|e| format!("bad numerator `{numer}`: {e}"))?;
    let denom = BigInt::from_str(denom).map_err(|e| format!("bad denominator `{denom}`: {e}"))?;
    if denom == BigInt::from(0) {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(BigRational::new(numer, denom))
}
