//! Exact rational scalars and a few helpers shared by the algebra modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical reduced form.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}

/// `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Nearest rational to `value` with denominator at most `max_den`, accepted only when
/// within `1e-6 * max(1, |value|)`. Denominators are tried in increasing order.
pub fn round_to_rational(value: f64, max_den: i64) -> Option<Rational> {
    if !value.is_finite() {
        return None;
    }
    let tol = 1e-6 * value.abs().max(1.0);
    for den in 1..=max_den {
        let num = (value * den as f64).round();
        if (num / den as f64 - value).abs() < tol {
            let num = BigInt::from(num as i128);
            return Some(Rational::new(num, BigInt::from(den)));
        }
    }
    None
}

/// Solves `a * x = b` exactly. The system may be overdetermined; `None` when it is
/// inconsistent or the solution is not unique.
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let p = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// Joins `coefficient * monomial` terms the way a computer-algebra system prints a sum:
/// unit coefficients are dropped, signs become binary operators, an empty monomial string
/// denotes the constant term. Returns `"0"` for an empty sum.
pub(crate) fn format_sum<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Rational, String)>,
{
    let mut out = String::new();
    for (coeff, mono) in terms {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        let abs = coeff.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
