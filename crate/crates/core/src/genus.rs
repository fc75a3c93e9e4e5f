//! Elliptic genus as a universal combination of Chern numbers.
//!
//! With Chern roots `x_1, ..., x_d`, the integrand (already multiplied by `y^{d/2}`) is
//!
//! ```text
//! prod_i (1 - y e^{-x_i}) x_i / (1 - e^{-x_i})
//!        prod_{n >= 1} (1 - y q^n e^{-x_i}) (1 - y^{-1} q^n e^{x_i}) / ((1 - q^n e^{-x_i}) (1 - q^n e^{x_i}))
//! ```
//!
//! Everything except the first factor is `exp` of a power series in `x`, hence `exp` of a
//! linear combination of power sums `p_m = sum_i x_i^m`. The factor `prod_i (1 - y e^{-x_i})`
//! is `sum_k (-y)^k e_k(e^{-x_1}, ...)`, obtained from power sums by Newton's identities.
//! Power sums are finally rewritten in the elementary symmetric polynomials `c_k`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ci::{chern_number_with, Manifold};
use crate::error::Result;
use crate::homog::{Mode, DEFAULT_SEED};
use crate::poly::CohomologyClass;
use crate::qseries::{y_monomial_string, LaurentY, QYSeries};
use crate::rational::{factorial, format_sum, int, rat, Rational};

/// Polynomial in `p_1, ..., p_d` (exponent vectors) truncated above weighted degree `d`.
type PowerSumPoly = HashMap<Vec<u32>, QYSeries>;

fn weight(e: &[u32]) -> usize {
    e.iter().enumerate().map(|(i, &k)| (i + 1) * k as usize).sum()
}

fn ps_add_into(acc: &mut PowerSumPoly, key: Vec<u32>, value: QYSeries) {
    if value.is_zero() {
        return;
    }
    let sum = match acc.remove(&key) {
        Some(old) => &old + &value,
        None => value,
    };
    if !sum.is_zero() {
        acc.insert(key, sum);
    }
}

fn ps_mul(a: &PowerSumPoly, b: &PowerSumPoly, d: usize) -> PowerSumPoly {
    let mut out = PowerSumPoly::new();
    for (ka, va) in a {
        let wa = weight(ka);
        for (kb, vb) in b {
            if wa + weight(kb) > d {
                continue;
            }
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            ps_add_into(&mut out, key, va * vb);
        }
    }
    out
}

fn ps_constant(d: usize, value: QYSeries) -> PowerSumPoly {
    let mut out = PowerSumPoly::new();
    ps_add_into(&mut out, vec![0; d], value);
    out
}

fn ps_scaled_var(d: usize, m: usize, value: QYSeries) -> PowerSumPoly {
    let mut key = vec![0; d];
    key[m - 1] = 1;
    let mut out = PowerSumPoly::new();
    ps_add_into(&mut out, key, value);
    out
}

/// `[a_0, ..., a_d]` with `log prod_{n >= 1} (...)(...)/((...)(...)) = sum_m a_m x^m`.
fn log_product_coefficients(d: usize, k: u32) -> Vec<QYSeries> {
    (0..=d)
        .map(|m| {
            let mut terms: BTreeMap<u32, LaurentY> = BTreeMap::new();
            for n in 1..=k {
                for r in 1..=k / n {
                    let ri = r as i64;
                    let sign = if m % 2 == 0 { int(1) } else { int(-1) };
                    let rm = Rational::from_integer(ri.into()).pow(m as i32);
                    let neg_rm = &sign * &rm;
                    // -y^r (-r)^m - y^{-r} r^m + (-r)^m + r^m
                    let lp = LaurentY::from_terms([
                        (ri, -neg_rm.clone()),
                        (-ri, -rm.clone()),
                        (0, &neg_rm + &rm),
                    ]);
                    let scale = rat(1, ri) / factorial(m as u32);
                    let e = terms.entry(n * r).or_insert_with(LaurentY::zero);
                    *e = &*e + &lp.scale(&scale);
                }
            }
            QYSeries::from_q_terms(k, terms)
        })
        .collect()
}

/// `[l_1, ..., l_d]` with `log(x / (1 - e^{-x})) = sum_m l_m x^m`.
fn log_todd_coefficients(d: usize) -> Vec<Rational> {
    let t = crate::bundles::todd_series(d);
    // log of a series with constant term 1: l' = t' / t
    let mut l = vec![Rational::zero(); d + 1];
    for m in 1..=d {
        // m t_m = sum_{j=1}^m j l_j t_{m-j}
        let mut s = int(m as i64) * &t[m];
        for j in 1..m {
            s -= int(j as i64) * &l[j] * &t[m - j];
        }
        l[m] = s / int(m as i64);
    }
    l.remove(0);
    l
}

/// `p_m` in terms of `e_1, ..., e_d`, as polynomials in `d` variables (`c_{i+1}` is variable `i`).
pub fn power_sums_in_elementary(d: usize) -> Vec<CohomologyClass> {
    let e = |k: usize| {
        if k == 0 {
            CohomologyClass::one(d)
        } else {
            CohomologyClass::var(d, k - 1)
        }
    };
    let mut p: Vec<CohomologyClass> = vec![CohomologyClass::zero(d)];
    for m in 1..=d {
        let mut s = e(m).scale(&int(m as i64));
        for i in 1..m {
            let sign = if (i - 1) % 2 == 0 { int(1) } else { int(-1) };
            s = &s - &(&e(m - i) * &p[i]).scale(&sign);
        }
        let sign = if (m - 1) % 2 == 0 { int(1) } else { int(-1) };
        p.push(s.scale(&sign));
    }
    p.remove(0);
    p
}

/// `e_m` in terms of `p_1, ..., p_d`, as polynomials in `d` variables (`p_{i+1}` is variable `i`).
pub fn elementary_in_power_sums(d: usize) -> Vec<CohomologyClass> {
    let mut e: Vec<CohomologyClass> = vec![CohomologyClass::one(d)];
    for m in 1..=d {
        let mut s = CohomologyClass::zero(d);
        for i in 1..=m {
            let sign = if (i - 1) % 2 == 0 { int(1) } else { int(-1) };
            s = &s + &(&e[m - i] * &CohomologyClass::var(d, i - 1)).scale(&sign);
        }
        e.push(s.scale(&rat(1, m as i64)));
    }
    e.remove(0);
    e
}

/// The elliptic genus integrand as a `q`-series whose coefficients are weighted-degree-`d`
/// polynomials in the Chern classes `c_1, ..., c_d`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernSymbolSeries {
    dim: usize,
    order: u32,
    /// Chern monomial (exponents of `c_1..c_d`) to its series coefficient.
    terms: BTreeMap<Vec<u32>, QYSeries>,
}

/// Polynomial in `c_1, ..., c_d`, printed with those names.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernPolynomial(pub CohomologyClass);

impl fmt::Display for ChernPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format_with(&|i| format!("c{}", i + 1)))
    }
}

impl ChernSymbolSeries {
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Chern monomials (exponent vectors of `c_1..c_d`) with their series coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QYSeries)> + '_ {
        self.terms.iter()
    }

    /// The polynomial in `c_1..c_d` multiplying `q^n y^e`.
    pub fn coeff(&self, n: u32, e: i64) -> ChernPolynomial {
        ChernPolynomial(CohomologyClass::from_terms(
            self.dim,
            self.terms.iter().map(|(m, s)| (m.clone(), s.coeff(n).coeff(e))),
        ))
    }

    /// Substitutes values for the Chern monomials.
    pub fn evaluate(&self, mut value: impl FnMut(&[u32]) -> Result<Rational>) -> Result<QYSeries> {
        let mut acc = QYSeries::zero(self.order);
        for (m, s) in &self.terms {
            let v = value(m)?;
            if !v.is_zero() {
                acc = &acc + &s.scale(&v);
            }
        }
        Ok(acc)
    }

    /// For each `q^n`, the `y`-exponents present together with their `c`-polynomials.
    fn grouped(&self) -> BTreeMap<u32, BTreeMap<i64, CohomologyClass>> {
        let mut out: BTreeMap<u32, BTreeMap<i64, CohomologyClass>> = BTreeMap::new();
        for (m, s) in &self.terms {
            for (k, lp) in s.iter() {
                for (e, c) in lp.terms() {
                    let slot = out
                        .entry(k / 2)
                        .or_default()
                        .entry(e)
                        .or_insert_with(|| CohomologyClass::zero(self.dim));
                    *slot = &*slot + &CohomologyClass::from_terms(self.dim, [(m.clone(), c.clone())]);
                }
            }
        }
        for by_y in out.values_mut() {
            by_y.retain(|_, p| !p.is_zero());
        }
        out.retain(|_, by_y| !by_y.is_empty());
        out
    }
}

fn chern_name(i: usize) -> String {
    format!("c{}", i + 1)
}

fn join(parts: &[&str]) -> String {
    parts.iter().filter(|s| !s.is_empty()).copied().collect::<Vec<_>>().join("*")
}

/// Terms `(coefficient, monomial)` of a Laurent polynomial in `y` over `Q[c]`, with
/// multi-term coefficients wrapped in parentheses.
fn laurent_terms(by_y: &BTreeMap<i64, CohomologyClass>, suffix: &str) -> Vec<(Rational, String)> {
    by_y.iter()
        .map(|(&e, p)| {
            let y = y_monomial_string(e);
            let mut it = p.terms();
            match (it.next(), it.next()) {
                (Some((m, c)), None) => (c.clone(), join(&[&m.format_with(&chern_name), &y, suffix])),
                _ => (int(1), join(&[&format!("({})", p.format_with(&chern_name)), &y, suffix])),
            }
        })
        .collect()
}

/// `1/24*c1*c2 + (-1/24*c1*c2 + 1/2*c3)*y + ... + ((...)*y^-1 + ...)*q + O(q^2)`.
impl fmt::Display for ChernSymbolSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Rational, String)> = Vec::new();
        for (n, by_y) in self.grouped() {
            let q = match n {
                0 => String::new(),
                1 => "q".to_string(),
                n => format!("q^{n}"),
            };
            let single = by_y.len() == 1 && by_y.values().all(|p| p.terms().count() == 1);
            if n == 0 || single {
                terms.extend(laurent_terms(&by_y, &q));
            } else {
                let inner = format_sum(laurent_terms(&by_y, ""));
                terms.push((int(1), format!("({inner})*{q}")));
            }
        }
        let big_o = match self.order + 1 {
            1 => "O(q)".to_string(),
            n => format!("O(q^{n})"),
        };
        if terms.is_empty() {
            f.write_str(&big_o)
        } else {
            write!(f, "{} + {big_o}", format_sum(terms))
        }
    }
}

/// The elliptic genus integrand of a `dim`-dimensional manifold through `q^k`, multiplied by
/// `y^{dim/2}` and reduced to its weighted-degree-`dim` part.
pub fn elliptic_genus_chernnum(dim: usize, k: u32) -> ChernSymbolSeries {
    let d = dim;
    let one = QYSeries::one(k);
    let constant = |r: &Rational| one.scale(r);

    // exp(sum_m (l_m + a_m) p_m) with exp(d a_0) pulled out
    let a = log_product_coefficients(d, k);
    let l = log_todd_coefficients(d);
    let mut expo = ps_constant(d, a[0].scale(&int(d as i64)).exp());
    for m in 1..=d {
        let coeff = &a[m] + &constant(&l[m - 1]);
        let mut factor = ps_constant(d, one.clone());
        let mut power = ps_constant(d, one.clone());
        let var = ps_scaled_var(d, m, coeff);
        for j in 1..=d / m {
            power = ps_mul(&power, &var, d);
            let scaled: PowerSumPoly = power
                .iter()
                .map(|(key, v)| (key.clone(), v.scale(&(int(1) / factorial(j as u32)))))
                .collect();
            for (key, v) in scaled {
                ps_add_into(&mut factor, key, v);
            }
        }
        expo = ps_mul(&expo, &factor, d);
    }

    // prod_i (1 - y z_i) with z_i = e^{-x_i}: power sums P_m(z) = sum_j (-m)^j / j! p_j
    let z_power_sum = |m: usize| {
        let mut out = ps_constant(d, constant(&int(d as i64)));
        for j in 1..=d {
            let c = Rational::from_integer((-(m as i64)).into()).pow(j as i32) / factorial(j as u32);
            let mut key = vec![0; d];
            key[j - 1] = 1;
            ps_add_into(&mut out, key, constant(&c));
        }
        out
    };
    let big_p: Vec<PowerSumPoly> = (1..=d).map(z_power_sum).collect();
    let mut e_z: Vec<PowerSumPoly> = vec![ps_constant(d, one.clone())];
    for m in 1..=d {
        let mut s = PowerSumPoly::new();
        for i in 1..=m {
            let sign = if (i - 1) % 2 == 0 { int(1) } else { int(-1) };
            for (key, v) in ps_mul(&e_z[m - i], &big_p[i - 1], d) {
                ps_add_into(&mut s, key, v.scale(&sign));
            }
        }
        let s = s.into_iter().map(|(key, v)| (key, v.scale(&rat(1, m as i64)))).collect();
        e_z.push(s);
    }
    let mut y_factor = PowerSumPoly::new();
    for (p, ep) in e_z.iter().enumerate() {
        let coeff = LaurentY::monomial(p as i64, if p % 2 == 0 { int(1) } else { int(-1) });
        for (key, v) in ep {
            ps_add_into(&mut y_factor, key.clone(), v.mul_laurent(&coeff));
        }
    }

    let integrand = ps_mul(&expo, &y_factor, d);

    // keep weight d and rewrite p_m in c_1..c_d
    let p_in_c = power_sums_in_elementary(d);
    let mut terms: BTreeMap<Vec<u32>, QYSeries> = BTreeMap::new();
    for (key, series) in integrand.iter().filter(|(key, _)| weight(key) == d) {
        let poly = key
            .iter()
            .enumerate()
            .fold(CohomologyClass::one(d), |acc, (i, &e)| &acc * &p_in_c[i].pow(e));
        for (mono, c) in poly.terms() {
            let entry = terms
                .entry(mono.exponents().to_vec())
                .or_insert_with(|| QYSeries::zero(k));
            *entry = &*entry + &series.scale(c);
        }
    }
    terms.retain(|_, s| !s.is_zero());
    ChernSymbolSeries {
        dim: d,
        order: k,
        terms,
    }
}

/// Degree list `[1, 1, 2, ...]` of a Chern monomial given by exponents of `c_1..c_d`.
fn degrees_of(mono: &[u32]) -> Vec<usize> {
    mono.iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
        .collect()
}

/// Elliptic genus of `m` times `y^{dim/2}` through `q^k`.
pub fn elliptic_genus<M: Manifold>(m: &M, k: u32, mode: Mode) -> Result<QYSeries> {
    elliptic_genus_with(m, k, mode, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

pub fn elliptic_genus_with<M: Manifold>(m: &M, k: u32, mode: Mode, rng: &mut dyn RngCore) -> Result<QYSeries> {
    let symbolic = elliptic_genus_chernnum(m.dimension(), k);
    let mut cache: HashMap<Vec<usize>, Rational> = HashMap::new();
    symbolic.evaluate(|mono| {
        let degrees = degrees_of(mono);
        if let Some(v) = cache.get(&degrees) {
            return Ok(v.clone());
        }
        let v = chern_number_with(m, &degrees, mode, rng)?;
        cache.insert(degrees, v.clone());
        Ok(v)
    })
}

/// `sum_p chi(Omega^p) (-y)^p`, the `q^0` term of [`elliptic_genus`].
pub fn chi_y<M: Manifold>(m: &M, mode: Mode) -> Result<LaurentY> {
    Ok(elliptic_genus(m, 0, mode)?.coeff(0))
}

/// `y^{-floor(d/2)}` times the genus, the normalization in which it is a weak Jacobi form of
/// weight 0 and index `d/2` (times `y^{1/2}` for odd `d`).
pub fn jacobi_normalized(genus: &QYSeries, dim: usize) -> QYSeries {
    genus.shift_y(-((dim / 2) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_todd() {
        // log(x/(1-e^{-x})) = x/2 - x^2/24 + x^4/2880 + ...
        assert_eq!(log_todd_coefficients(4), vec![rat(1, 2), rat(-1, 24), int(0), rat(1, 2880)]);
    }

    #[test]
    fn newton_roundtrip() {
        let d = 6;
        let p = power_sums_in_elementary(d);
        let e = elementary_in_power_sums(d);
        for (m, em) in e.iter().enumerate() {
            let back = em.substitute(&p);
            assert_eq!(back, CohomologyClass::var(d, m), "e_{}", m + 1);
        }
        assert_eq!(p[1].format_with(&chern_name), "c1^2 - 2*c2");
    }

    #[test]
    fn dimension_one() {
        let s = elliptic_genus_chernnum(1, 0);
        assert_eq!(s.to_string(), "1/2*c1 + 1/2*c1*y + O(q)");
    }

    #[test]
    fn threefold_to_first_order() {
        let s = elliptic_genus_chernnum(3, 1);
        assert_eq!(
            s.to_string(),
            "1/24*c1*c2 + (-1/24*c1*c2 + 1/2*c3)*y + (-1/24*c1*c2 + 1/2*c3)*y^2 + 1/24*c1*c2*y^3 + \
             ((-1/2*c1^3 + 19/24*c1*c2 - 1/2*c3)*y^-1 + (3/2*c1^3 - 27/8*c1*c2) + \
             (-c1^3 + 31/12*c1*c2 + 1/2*c3)*y + (-c1^3 + 31/12*c1*c2 + 1/2*c3)*y^2 + \
             (3/2*c1^3 - 27/8*c1*c2)*y^3 + (-1/2*c1^3 + 19/24*c1*c2 - 1/2*c3)*y^4)*q + O(q^2)"
        );
        assert_eq!(s.coeff(0, 0).to_string(), "1/24*c1*c2");
    }

    #[test]
    fn surface_chi_y() {
        // Noether: chi(O) = (c1^2 + c2)/12; chi(Omega^1) = (c1^2 - 5 c2)/6
        let s = elliptic_genus_chernnum(2, 0);
        assert_eq!(s.coeff(0, 0).to_string(), "1/12*c1^2 + 1/12*c2");
        assert_eq!(s.coeff(0, 1).to_string(), "-1/6*c1^2 + 5/6*c2");
        assert_eq!(s.coeff(0, 2).to_string(), "1/12*c1^2 + 1/12*c2");
    }
}
