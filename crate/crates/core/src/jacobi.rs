//! Weak Jacobi forms of even weight as `(q, y)` expansions.
//!
//! The ring of weak Jacobi forms of even weight and integral index is the polynomial ring
//! over `C[E_4, E_6]` generated by `phi_{0,1}` and `phi_{-2,1}`. Half-integral index forms of
//! weight 0 are obtained by multiplying with `phi_{0,3/2}`, which is always returned
//! pre-multiplied by `y^{1/2}` so that every exponent of `y` is an integer.

use crate::error::{Error, Result};
use crate::qseries::{eisenstein, eta, theta, QYSeries};
use crate::rational::{int, solve_linear, Rational};

/// `phi_{0,1} = 4 * sum_{i=2,3,4} (theta_i(q,y) / theta_i(q,1))^2`.
///
/// # Panics
/// If half-integral powers of `q` survive, which would mean the theta conventions are
/// inconsistent.
pub fn phi_0_1(prec: u32) -> QYSeries {
    let mut acc = QYSeries::zero(prec);
    for i in 2..=4 {
        let t = theta(i, prec, 1);
        let ratio = t.div(&t.at_y_one()).expect("theta_i(q,1) is a unit for i = 2, 3, 4");
        let sq = ratio.pow(2).into_series().expect("prefactors of the squared ratio cancel");
        acc = &acc + &sq;
    }
    let acc = acc.scale(&int(4));
    acc.to_integral_q().expect("half-integral q terms of phi_{0,1} must cancel")
}

/// `phi_{-2,1} = -theta_1(q,y)^2 / eta(q)^6`.
pub fn phi_m2_1(prec: u32) -> QYSeries {
    let ratio = theta(1, prec, 1)
        .pow(2)
        .div(&eta(prec).pow(6))
        .expect("eta^6 is a unit");
    let value = ratio.neg().into_series().expect("q^{1/4} prefactors of theta_1^2 and eta^6 cancel");
    value.to_integral_q().expect("phi_{-2,1} has integral q exponents")
}

/// `y^{1/2} * phi_{0,3/2}` where `phi_{0,3/2} = theta_1(q, y^2) / theta_1(q, y)`.
pub fn phi_0_3half(prec: u32) -> QYSeries {
    let ratio = theta(1, prec, 2)
        .div(&theta(1, prec, 1))
        .expect("y - 1 divides y^2 - 1 and the series part is a unit");
    ratio
        .shift_y_half(1)
        .into_series()
        .and_then(|s| s.to_integral_q())
        .expect("y^{1/2} phi_{0,3/2} has integral exponents")
}

/// One monomial `E_4^a E_6^b phi_{0,1}^c phi_{-2,1}^d` (times `y^{1/2} phi_{0,3/2}` when
/// `half` is set) with its expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiBasisElement {
    pub e4: u32,
    pub e6: u32,
    pub phi_0_1: u32,
    pub phi_m2_1: u32,
    pub half: bool,
    pub weight: i64,
    pub double_index: u32,
    pub value: QYSeries,
}

impl JacobiBasisElement {
    /// Human-readable name such as `E4*phi_0_1*phi_-2_1^2`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        let mut push = |name: &str, e: u32| match e {
            0 => {}
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{e}")),
        };
        push("E4", self.e4);
        push("E6", self.e6);
        push("phi_0_1", self.phi_0_1);
        push("phi_-2_1", self.phi_m2_1);
        if self.half {
            parts.push("phi_0_3/2".to_string());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent tuples `(a, b, c, d)` with `4a + 6b - 2d = weight`, `c + d = index`, in
/// descending lexicographic order of `(c, d, a, b)`.
pub fn basis_exponents(weight: i64, index: u32) -> Result<Vec<(u32, u32, u32, u32)>> {
    if weight % 2 != 0 {
        return Err(Error::OddWeight(weight));
    }
    let mut out = Vec::new();
    for c in (0..=index).rev() {
        let d = index - c;
        let target = weight + 2 * d as i64;
        if target < 0 {
            continue;
        }
        for a in (0..=target / 4).rev() {
            let rest = target - 4 * a;
            if rest % 6 == 0 {
                out.push((a as u32, (rest / 6) as u32, c, d));
            }
        }
    }
    Ok(out)
}

/// All monomials in `E_4, E_6, phi_{0,1}, phi_{-2,1}` of the given weight and index, expanded
/// through `q^prec`. Ordered by descending `phi_{0,1}` exponent.
pub fn basis_integral(weight: i64, index: u32, prec: u32) -> Result<Vec<JacobiBasisElement>> {
    let exps = basis_exponents(weight, index)?;
    if exps.is_empty() {
        return Ok(Vec::new());
    }
    let gens = [eisenstein(4, prec), eisenstein(6, prec), phi_0_1(prec), phi_m2_1(prec)];
    Ok(exps
        .into_iter()
        .map(|(a, b, c, d)| {
            let value = [a, b, c, d]
                .iter()
                .zip(&gens)
                .fold(QYSeries::one(prec), |acc, (&e, g)| &acc * &g.pow(e));
            JacobiBasisElement {
                e4: a,
                e6: b,
                phi_0_1: c,
                phi_m2_1: d,
                half: false,
                weight,
                double_index: 2 * index,
                value,
            }
        })
        .collect())
}

/// Basis for index `double_index / 2`. Even `double_index` delegates to [`basis_integral`];
/// odd `double_index` multiplies the integral basis of index `(double_index - 3) / 2` by
/// `y^{1/2} phi_{0,3/2}`.
pub fn basis_half_integral(weight: i64, double_index: u32, prec: u32) -> Result<Vec<JacobiBasisElement>> {
    if weight % 2 != 0 {
        return Err(Error::OddWeight(weight));
    }
    if double_index.is_multiple_of(2) {
        return basis_integral(weight, double_index / 2, prec);
    }
    if double_index < 3 {
        return Ok(Vec::new());
    }
    let lifted = basis_integral(weight, (double_index - 3) / 2, prec)?;
    if lifted.is_empty() {
        return Ok(lifted);
    }
    let phi = phi_0_3half(prec);
    Ok(lifted
        .into_iter()
        .map(|el| JacobiBasisElement {
            half: true,
            double_index,
            value: &el.value * &phi,
            ..el
        })
        .collect())
}

/// Coefficients expressing `f` in the span of `basis`: solved on the `q^0` coefficients and
/// then verified on every coefficient through the common precision. `None` if `f` is not in
/// the span.
pub fn express_in_basis(f: &QYSeries, basis: &[JacobiBasisElement]) -> Option<Vec<Rational>> {
    let order = basis
        .iter()
        .map(|b| b.value.order())
        .chain(std::iter::once(f.order()))
        .min()?;
    let system = |orders: &[u32]| {
        let mut exps: Vec<(u32, i64)> = Vec::new();
        for &n in orders {
            let mut ys: Vec<i64> = f.coeff(n).terms().map(|(e, _)| e).collect();
            for b in basis {
                ys.extend(b.value.coeff(n).terms().map(|(e, _)| e));
            }
            ys.sort_unstable();
            ys.dedup();
            exps.extend(ys.into_iter().map(|e| (n, e)));
        }
        let a: Vec<Vec<Rational>> = exps
            .iter()
            .map(|&(n, e)| basis.iter().map(|b| b.value.coeff(n).coeff(e)).collect())
            .collect();
        let rhs: Vec<Rational> = exps.iter().map(|&(n, e)| f.coeff(n).coeff(e)).collect();
        (a, rhs)
    };
    if basis.is_empty() {
        return (0..=order).all(|n| f.coeff(n).is_zero()).then(Vec::new);
    }
    let (a, rhs) = system(&[0]);
    let coeffs = solve_linear(&a, &rhs).or_else(|| {
        let all: Vec<u32> = (0..=order).collect();
        let (a, rhs) = system(&all);
        solve_linear(&a, &rhs)
    })?;
    for n in 0..=order {
        let mut combo = f.coeff(n);
        for (c, b) in coeffs.iter().zip(basis) {
            combo = &combo - &b.value.coeff(n).scale(c);
        }
        if !combo.is_zero() {
            return None;
        }
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::LaurentY;
    use crate::rational::int;

    #[test]
    fn phi_0_1_constant_term() {
        let p = phi_0_1(3);
        assert_eq!(p.coeff(0), LaurentY::from_ints(&[(-1, 1), (0, 10), (1, 1)]));
        assert_eq!(p.coeff(0).eval_one(), int(12));
        assert!(!p.is_half_q());
    }

    #[test]
    fn phi_m2_1_constant_term() {
        let p = phi_m2_1(3);
        let c0 = p.coeff(0);
        assert_eq!(c0, LaurentY::from_ints(&[(-1, 1), (0, -2), (1, 1)]));
        assert_eq!(c0.eval_one(), int(0));
        assert_eq!(c0.eval(&int(-1)), int(-4));
    }

    #[test]
    fn phi_0_3half_constant_term() {
        let p = phi_0_3half(3);
        let c0 = p.coeff(0);
        assert_eq!(c0, LaurentY::from_ints(&[(0, 1), (1, 1)]));
        assert_eq!(c0.eval(&int(-1)), int(0));
        let e4phi = &eisenstein(4, 3) * &phi_m2_1(3);
        assert_eq!((&p * &e4phi).coeff(0), LaurentY::from_ints(&[(-1, 1), (0, -1), (1, -1), (2, 1)]));
    }

    #[test]
    fn trivial_and_empty_bases() {
        let b = basis_integral(0, 0, 4).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].value, QYSeries::one(4));
        assert!(basis_integral(2, 0, 4).unwrap().is_empty());
        assert!(basis_half_integral(0, 1, 4).unwrap().is_empty());
        assert!(matches!(basis_integral(3, 1, 2), Err(Error::OddWeight(3))));
        assert!(matches!(basis_half_integral(-1, 5, 2), Err(Error::OddWeight(-1))));
    }

    #[test]
    fn exponent_order_matches_listing() {
        assert_eq!(basis_exponents(0, 3).unwrap(), vec![(0, 0, 3, 0), (1, 0, 1, 2), (0, 1, 0, 3)]);
        // two solutions at fixed (c, d): a descending
        assert_eq!(basis_exponents(12, 0).unwrap(), vec![(3, 0, 0, 0), (0, 2, 0, 0)]);
    }

    #[test]
    fn even_double_index_delegates() {
        let a = basis_half_integral(0, 6, 3).unwrap();
        let b = basis_integral(0, 3, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn labels() {
        let b = basis_integral(0, 3, 1).unwrap();
        assert_eq!(b[1].label(), "E4*phi_0_1*phi_-2_1^2");
        assert_eq!(basis_integral(0, 0, 1).unwrap()[0].label(), "1");
    }

    #[test]
    fn decomposition_recovers_coefficients() {
        let basis = basis_integral(0, 2, 4).unwrap();
        let f = &basis[0].value.scale(&int(3)) - &basis[1].value.scale(&int(5));
        let coeffs = express_in_basis(&f, &basis).unwrap();
        assert_eq!(coeffs, vec![int(3), int(-5)]);
        let g = &f + &QYSeries::from_q_terms(4, [(2, LaurentY::y_pow(1))]);
        assert_eq!(express_in_basis(&g, &basis), None);
    }
}
