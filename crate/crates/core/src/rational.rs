//! Small exact-arithmetic helpers shared across the crate: rational
//! parsing in the `p/q` text convention, denominator clearing, and
//! integer square roots used by the pruning bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Parses a rational written as `p/q` or as a plain integer `p`.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}"))),
        Some((num, den)) => {
            let n = num
                .trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad numerator {num:?}: {e}")))?;
            let d = den
                .trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad denominator {den:?}: {e}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Formats a rational in lowest terms as `p/q`, or `p` when the
/// denominator is one. This is the only machine serialization used for
/// rationals; floats never appear in machine output.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

/// Least common multiple of the denominators of `values`.
pub fn lcm_of_denoms(values: &[BigRational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Clears denominators: returns `scale` and the integer vector
/// `scale * values`, with each entry checked against `limit` so the
/// downstream i128 arithmetic cannot overflow.
pub fn scale_to_integers(values: &[BigRational], limit: i128) -> crate::Result<(BigInt, Vec<i128>)> {
    let scale = lcm_of_denoms(values);
    let mut out = Vec::with_capacity(values.len());
    for v in values {
        let scaled = (v * BigRational::from_integer(scale.clone())).to_integer();
        let as_i128 = scaled.to_i128().ok_or_else(|| {
            Error::MagnitudeOverflow(format!("scaled coordinate {scaled} exceeds i128"))
        })?;
        if as_i128.abs() > limit {
            return Err(Error::MagnitudeOverflow(format!(
                "scaled coordinate {as_i128} exceeds supported bound {limit}"
            )));
        }
        out.push(as_i128);
    }
    Ok((scale, out))
}

/// Total bit size of the numerators and denominators, used for the
/// reduction iteration cap.
pub fn bit_size(values: &[BigRational]) -> usize {
    values
        .iter()
        .map(|v| (v.numer().abs().bits() + v.denom().bits()) as usize)
        .sum()
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt_u128(v: u128) -> u128 {
    if v < 2 {
        return v;
    }
    let mut x = 1u128 << (v.ilog2() / 2 + 1);
    loop {
        let y = (x + v / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    debug_assert!(x * x <= v && (x + 1).checked_mul(x + 1).is_none_or(|s| s > v));
    x
}

/// Largest `b ≥ 0` with `b(b+1) ≤ budget`, or `None` if `budget < 0`.
pub(crate) fn max_with_pronic_at_most(budget: i128) -> Option<i128> {
    if budget < 0 {
        return None;
    }
    // b(b+1) ≤ t  ⟺  b ≤ (−1 + √(1+4t))/2
    let b = ((isqrt_u128(1 + 4 * budget as u128) - 1) / 2) as i128;
    debug_assert!(b * (b + 1) <= budget && (b + 1) * (b + 2) > budget);
    Some(b)
}
