//! Truncated power series in `q` whose coefficients are Laurent polynomials in `y`.
//!
//! Exponents of `q` are stored doubled so that `q^{1/2}` is representable; a series with
//! doubled precision `P` retains the coefficients of `q^{k/2}` for `0 <= k <= P`.
//! Theta functions and `eta` carry fractional prefactors (`q^{1/8}`, `y^{1/2}`, `-i`) that
//! are kept outside the series in a [`Prefactored`] value until they cancel.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_sum, int, rat, Rational};

/// Laurent polynomial in `y` with exact rational coefficients. No zero coefficient is stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentY {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentY {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `y^exp`
    pub fn y_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    /// Integer coefficients, convenient for literals: `from_ints(&[(-1, 1), (0, 10), (1, 1)])`.
    pub fn from_ints(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((exp, coeff))` when this is a single nonzero monomial, i.e. a unit of the ring.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (e, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `y^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e + shift, v.clone())).collect(),
        }
    }

    /// Substitutes `y -> y^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, v)| (e * k, v.clone())))
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(y.clone(), e as usize)
            } else {
                num_traits::pow(y.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    pub fn eval_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentY) -> Option<LaurentY> {
        let (dmin, dmax) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.terms[&dmax].clone();
        let mut rem = self.clone();
        let mut quot = LaurentY::zero();
        while let Some(rmax) = rem.max_exp() {
            // degree span of the remainder must stay at least that of the divisor
            if rmax - rem.min_exp()? < dmax - dmin {
                return None;
            }
            let c = &rem.terms[&rmax] / &lead;
            let e = rmax - dmax;
            quot.add_term(e, &c);
            for (&de, dc) in &divisor.terms {
                rem.add_term(de + e, &-(dc * &c));
            }
        }
        Some(quot)
    }
}

impl Add for &LaurentY {
    type Output = LaurentY;
    fn add(self, rhs: &LaurentY) -> LaurentY {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentY {
    type Output = LaurentY;
    fn sub(self, rhs: &LaurentY) -> LaurentY {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Mul for &LaurentY {
    type Output = LaurentY;
    fn mul(self, rhs: &LaurentY) -> LaurentY {
        let mut out = LaurentY::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentY {
    type Output = LaurentY;
    fn neg(self) -> LaurentY {
        self.scale(&-Rational::one())
    }
}

pub(crate) fn y_monomial_string(exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => "y".to_string(),
        e => format!("y^{e}"),
    }
}

impl fmt::Display for LaurentY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_sum(self.terms.iter().map(|(&e, c)| (c.clone(), y_monomial_string(e))));
        f.write_str(&s)
    }
}

/// Truncated series `sum_k a_k(y) q^{k/2}`, `0 <= k <= P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QYSeries {
    prec: u32,
    half_q: bool,
    coeffs: BTreeMap<u32, LaurentY>,
}

impl QYSeries {
    /// The zero series known through `q^order`.
    pub fn zero(order: u32) -> Self {
        Self::with_doubled_precision(2 * order, false)
    }

    pub fn one(order: u32) -> Self {
        Self::constant(LaurentY::one(), order)
    }

    pub fn constant(c: LaurentY, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.set_coeff_doubled(0, c);
        s
    }

    pub fn with_doubled_precision(prec: u32, half_q: bool) -> Self {
        Self {
            prec,
            half_q,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a series from integer-`q` coefficients `(n, a_n)`; terms beyond `q^order` are dropped.
    pub fn from_q_terms<I: IntoIterator<Item = (u32, LaurentY)>>(order: u32, terms: I) -> Self {
        let mut s = Self::zero(order);
        for (n, c) in terms {
            if 2 * n <= s.prec {
                let sum = &s.coeff_doubled(2 * n) + &c;
                s.set_coeff_doubled(2 * n, sum);
            }
        }
        s
    }

    /// `c * q^{k/2}` with doubled precision `prec`.
    pub fn monomial_doubled(k: u32, c: LaurentY, prec: u32) -> Self {
        let mut s = Self::with_doubled_precision(prec, k % 2 == 1);
        if k <= prec {
            s.set_coeff_doubled(k, c);
        }
        s
    }

    pub(crate) fn set_coeff_doubled(&mut self, k: u32, c: LaurentY) {
        if k > self.prec {
            return;
        }
        if k % 2 == 1 && !c.is_zero() {
            self.half_q = true;
        }
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    /// Largest retained doubled exponent.
    pub fn doubled_precision(&self) -> u32 {
        self.prec
    }

    /// Largest integer `n` such that the `q^n` coefficient is known.
    pub fn order(&self) -> u32 {
        self.prec / 2
    }

    pub fn is_half_q(&self) -> bool {
        self.half_q
    }

    pub fn coeff_doubled(&self, k: u32) -> LaurentY {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^n`.
    pub fn coeff(&self, n: u32) -> LaurentY {
        self.coeff_doubled(2 * n)
    }

    /// Nonzero coefficients keyed by doubled exponent.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &LaurentY)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest doubled exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn truncate(&self, prec: u32) -> Self {
        let prec = prec.min(self.prec);
        Self {
            prec,
            half_q: self.half_q,
            coeffs: self.coeffs.range(..=prec).map(|(&k, c)| (k, c.clone())).collect(),
        }
    }

    /// Same series with its precision lowered to `q^order`.
    pub fn truncate_order(&self, order: u32) -> Self {
        self.truncate(2 * order)
    }

    fn map_coeffs(&self, f: impl Fn(&LaurentY) -> LaurentY) -> Self {
        let mut out = Self::with_doubled_precision(self.prec, self.half_q);
        for (&k, c) in &self.coeffs {
            out.set_coeff_doubled(k, f(c));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|v| v.scale(c))
    }

    pub fn mul_laurent(&self, l: &LaurentY) -> Self {
        self.map_coeffs(|v| v * l)
    }

    /// Multiplies by `y^shift`.
    pub fn shift_y(&self, shift: i64) -> Self {
        self.map_coeffs(|v| v.shift(shift))
    }

    /// Substitutes `y -> y^k`.
    pub fn substitute_y_power(&self, k: i64) -> Self {
        self.map_coeffs(|v| v.substitute_power(k))
    }

    /// Specializes `y = 1`.
    pub fn eval_y_one(&self) -> Self {
        self.map_coeffs(|v| LaurentY::constant(v.eval_one()))
    }

    /// Multiplies by `q^{shift/2}`; the precision grows by the same amount.
    pub fn shift_q_doubled(&self, shift: u32) -> Self {
        let mut out = Self::with_doubled_precision(self.prec + shift, self.half_q || shift % 2 == 1);
        for (&k, c) in &self.coeffs {
            out.set_coeff_doubled(k + shift, c.clone());
        }
        out
    }

    /// The same series flagged as integral in `q`, or `None` if some `q^{n+1/2}` term survives.
    pub fn to_integral_q(&self) -> Option<Self> {
        if self.coeffs.keys().any(|k| k % 2 == 1) {
            return None;
        }
        let mut out = self.clone();
        out.half_q = false;
        Some(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::with_doubled_precision(self.prec, false);
        acc.set_coeff_doubled(0, LaurentY::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a series whose constant term is a unit (a single y-monomial).
    pub fn inverse(&self) -> Result<Self> {
        let b0 = self.coeff_doubled(0);
        let Some((e, c)) = b0.as_monomial() else {
            return Err(Error::DivisionByNonUnit(format!("constant term `{b0}` is not a monomial")));
        };
        let b0_inv = LaurentY::monomial(-e, c.recip());
        let step = if self.half_q { 1 } else { 2 };
        let mut out = Self::with_doubled_precision(self.prec, self.half_q);
        out.set_coeff_doubled(0, b0_inv.clone());
        let mut n = step;
        while n <= self.prec {
            let mut acc = LaurentY::zero();
            for (&j, bj) in self.coeffs.range(1..=n) {
                if let Some(r) = out.coeffs.get(&(n - j)) {
                    acc = &acc + &(bj * r);
                }
            }
            out.set_coeff_doubled(n, -&(&acc * &b0_inv));
            n += step;
        }
        Ok(out)
    }

    /// `self / divisor`. The divisor's lowest coefficient must be a y-monomial and its
    /// `q`-valuation must not exceed that of the dividend.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        let Some(v) = divisor.valuation() else {
            return Err(Error::DivisionByNonUnit("division by the zero series".into()));
        };
        if let Some(va) = self.valuation() {
            if va < v {
                return Err(Error::DivisionByNonUnit(format!(
                    "divisor valuation q^({v}/2) exceeds dividend valuation q^({va}/2)"
                )));
            }
        }
        let prec = self.prec.min(divisor.prec);
        if v > prec {
            return Err(Error::DivisionByNonUnit("divisor vanishes to the known precision".into()));
        }
        let down = |s: &Self| {
            let mut out = Self::with_doubled_precision(prec - v, s.half_q);
            for (&k, c) in s.coeffs.range(v..=prec) {
                out.set_coeff_doubled(k - v, c.clone());
            }
            out
        };
        let num = down(self);
        let den = down(divisor);
        Ok(&num * &den.inverse()?)
    }

    /// `exp` of a series without constant term.
    pub fn exp(&self) -> Self {
        assert!(self.coeff_doubled(0).is_zero(), "exp needs a series with zero constant term");
        let step = if self.half_q { 1 } else { 2 };
        let mut out = Self::with_doubled_precision(self.prec, self.half_q);
        out.set_coeff_doubled(0, LaurentY::one());
        let mut n = step;
        while n <= self.prec {
            let mut acc = LaurentY::zero();
            for (&j, sj) in self.coeffs.range(1..=n) {
                if let Some(e) = out.coeffs.get(&(n - j)) {
                    acc = &acc + &(sj * e).scale(&int(j as i64));
                }
            }
            out.set_coeff_doubled(n, acc.scale(&rat(1, n as i64)));
            n += step;
        }
        out
    }
}

impl Add for &QYSeries {
    type Output = QYSeries;
    fn add(self, rhs: &QYSeries) -> QYSeries {
        let prec = self.prec.min(rhs.prec);
        let mut out = self.truncate(prec);
        out.half_q |= rhs.half_q;
        for (&k, c) in rhs.coeffs.range(..=prec) {
            let sum = &out.coeff_doubled(k) + c;
            out.set_coeff_doubled(k, sum);
        }
        out
    }
}

impl Sub for &QYSeries {
    type Output = QYSeries;
    fn sub(self, rhs: &QYSeries) -> QYSeries {
        self + &-rhs
    }
}

impl Neg for &QYSeries {
    type Output = QYSeries;
    fn neg(self) -> QYSeries {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &QYSeries {
    type Output = QYSeries;
    fn mul(self, rhs: &QYSeries) -> QYSeries {
        let prec = self.prec.min(rhs.prec);
        let mut acc: BTreeMap<u32, LaurentY> = BTreeMap::new();
        for (&a, ca) in self.coeffs.range(..=prec) {
            for (&b, cb) in rhs.coeffs.range(..=prec - a) {
                let slot = acc.entry(a + b).or_default();
                *slot = &*slot + &(ca * cb);
            }
        }
        let mut out = QYSeries::with_doubled_precision(prec, self.half_q || rhs.half_q);
        for (k, c) in acc {
            out.set_coeff_doubled(k, c);
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QYSeries {
            type Output = QYSeries;
            fn $m(self, rhs: QYSeries) -> QYSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr for LaurentY {
            type Output = LaurentY;
            fn $m(self, rhs: LaurentY) -> LaurentY {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn q_monomial_string(k: u32) -> String {
    match k {
        2 => "q".to_string(),
        k if k % 2 == 0 => format!("q^{}", k / 2),
        k => format!("q^({k}/2)"),
    }
}

/// Sage-style rendering: `-100*y - 100*y^2 + (100*y^-1 - 100*y)*q + O(q^3)`.
impl fmt::Display for QYSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (&k, c) in &self.coeffs {
            if k == 0 {
                parts.push(c.to_string());
                continue;
            }
            let q = q_monomial_string(k);
            let text = match c.as_monomial() {
                Some((e, v)) => {
                    let mono = if e == 0 { q } else { format!("{}*{q}", y_monomial_string(e)) };
                    format_sum([(v.clone(), mono)])
                }
                None => format!("({c})*{q}"),
            };
            parts.push(text);
        }
        let big_o = if self.prec.is_multiple_of(2) || !self.half_q {
            format!("O({})", q_monomial_string(2 * (self.prec / 2 + 1)))
        } else {
            format!("O({})", q_monomial_string(self.prec + 1))
        };
        let mut out = String::new();
        for p in parts {
            if out.is_empty() {
                out.push_str(&p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&p);
            }
        }
        if out.is_empty() {
            f.write_str(&big_o)
        } else {
            write!(f, "{out} + {big_o}")
        }
    }
}

/// A series together with prefactors that are not representable inside [`QYSeries`]:
/// `i^{i_power} * q^{q_shift} * y^{y_half/2} * front(y) * series`.
#[derive(Clone, Debug, PartialEq)]
pub struct Prefactored {
    pub q_shift: Rational,
    pub i_power: u8,
    pub y_half: i64,
    pub front: LaurentY,
    pub series: QYSeries,
}

impl Prefactored {
    pub fn plain(series: QYSeries) -> Self {
        Self {
            q_shift: Rational::zero(),
            i_power: 0,
            y_half: 0,
            front: LaurentY::one(),
            series,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            q_shift: &self.q_shift + &rhs.q_shift,
            i_power: (self.i_power + rhs.i_power) % 4,
            y_half: self.y_half + rhs.y_half,
            front: &self.front * &rhs.front,
            series: &self.series * &rhs.series,
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let front = self.front.div_exact(&rhs.front).ok_or_else(|| {
            Error::DivisionByNonUnit(format!("`{}` does not divide `{}`", rhs.front, self.front))
        })?;
        Ok(Self {
            q_shift: &self.q_shift - &rhs.q_shift,
            i_power: (self.i_power + 4 - rhs.i_power) % 4,
            y_half: self.y_half - rhs.y_half,
            front,
            series: self.series.checked_div(&rhs.series)?,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut front = LaurentY::one();
        for _ in 0..n {
            front = &front * &self.front;
        }
        Self {
            q_shift: &self.q_shift * int(n as i64),
            i_power: ((self.i_power as u32 * n) % 4) as u8,
            y_half: self.y_half * n as i64,
            front,
            series: self.series.pow(n),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            i_power: (self.i_power + 2) % 4,
            ..self.clone()
        }
    }

    /// Multiplies by `y^{k/2}`.
    pub fn shift_y_half(&self, k: i64) -> Self {
        Self {
            y_half: self.y_half + k,
            ..self.clone()
        }
    }

    /// Specializes `y = 1` (so `y^{1/2} = 1`).
    pub fn at_y_one(&self) -> Self {
        Self {
            q_shift: self.q_shift.clone(),
            i_power: self.i_power,
            y_half: 0,
            front: LaurentY::constant(self.front.eval_one()),
            series: self.series.eval_y_one(),
        }
    }

    /// Folds all prefactors into the series; `None` unless the phase is real, the `y` power
    /// is integral and the `q` shift is a non-negative multiple of `1/2`.
    pub fn into_series(&self) -> Option<QYSeries> {
        if self.i_power % 2 != 0 || self.y_half % 2 != 0 {
            return None;
        }
        let doubled = &self.q_shift * int(2);
        if !doubled.is_integer() || doubled.is_negative() {
            return None;
        }
        let shift = u32::try_from(doubled.to_integer()).ok()?;
        let sign = if self.i_power == 2 { -Rational::one() } else { Rational::one() };
        let front = self.front.shift(self.y_half / 2).scale(&sign);
        Some(self.series.mul_laurent(&front).shift_q_doubled(shift))
    }
}

/// `prod_{n=1}^{N} (1 + sign * q^{n - offset/2} * y^{s})` for `n` with exponent within `prec`.
fn triple_factor(prec: u32, sign: i64, half_offset: bool, y_exp: i64) -> QYSeries {
    let mut acc = QYSeries::with_doubled_precision(prec, half_offset);
    acc.set_coeff_doubled(0, LaurentY::one());
    let mut n = 1;
    loop {
        let k = if half_offset { 2 * n - 1 } else { 2 * n };
        if k > prec {
            break;
        }
        let mut factor = QYSeries::with_doubled_precision(prec, half_offset);
        factor.set_coeff_doubled(0, LaurentY::one());
        factor.set_coeff_doubled(k, LaurentY::monomial(y_exp, int(sign)));
        acc = &acc * &factor;
        n += 1;
    }
    acc
}

/// `prod_{n>=1} (1 - q^n)` through `q^prec`: the Dedekind eta function without its `q^{1/24}`.
pub fn eta_pow24_root_free(prec: u32) -> QYSeries {
    triple_factor(2 * prec, -1, false, 0)
}

/// `eta(q) = q^{1/24} prod (1 - q^n)`.
pub fn eta(prec: u32) -> Prefactored {
    Prefactored {
        q_shift: rat(1, 24),
        ..Prefactored::plain(eta_pow24_root_free(prec))
    }
}

/// Jacobi theta function `theta_i(q, y^{y_scale})` via the triple product, with conventions
///
/// * `theta_1 = -i q^{1/8} (y^{1/2} - y^{-1/2}) prod (1-q^n)(1-q^n y)(1-q^n/y)`
/// * `theta_2 = q^{1/8} (y^{1/2} + y^{-1/2}) prod (1-q^n)(1+q^n y)(1+q^n/y)`
/// * `theta_3 = prod (1-q^n)(1+q^{n-1/2} y)(1+q^{n-1/2}/y)`
/// * `theta_4 = prod (1-q^n)(1-q^{n-1/2} y)(1-q^{n-1/2}/y)`
///
/// The `y^{+-1/2}` factor is returned as `y_half = -y_scale` and `front = y^{y_scale} -+ 1`.
///
/// # Panics
/// If `i` is not in `1..=4` or `y_scale == 0`.
pub fn theta(i: u8, prec: u32, y_scale: i64) -> Prefactored {
    assert!((1..=4).contains(&i), "theta index must be 1..=4");
    assert!(y_scale >= 1, "y_scale must be positive");
    let p = 2 * prec;
    let eta_part = triple_factor(p, -1, false, 0);
    match i {
        1 | 2 => {
            let sign = if i == 1 { -1 } else { 1 };
            let series = &(&eta_part * &triple_factor(p, sign, false, y_scale))
                * &triple_factor(p, sign, false, -y_scale);
            Prefactored {
                q_shift: rat(1, 8),
                i_power: if i == 1 { 3 } else { 0 },
                y_half: -y_scale,
                front: LaurentY::from_terms([(y_scale, int(1)), (0, int(sign))]),
                series,
            }
        }
        _ => {
            let sign = if i == 3 { 1 } else { -1 };
            let series = &(&eta_part * &triple_factor(p, sign, true, y_scale))
                * &triple_factor(p, sign, true, -y_scale);
            Prefactored::plain(series)
        }
    }
}

fn divisor_power_sum(n: u32, k: u32) -> i64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| (d as i64).pow(k)).sum()
}

/// Normalized Eisenstein series `E_4 = 1 + 240 sum sigma_3(n) q^n` or
/// `E_6 = 1 - 504 sum sigma_5(n) q^n`.
///
/// # Panics
/// If `k` is not 4 or 6.
pub fn eisenstein(k: u32, prec: u32) -> QYSeries {
    let (scale, power) = match k {
        4 => (240, 3),
        6 => (-504, 5),
        _ => panic!("only E_4 and E_6 are provided"),
    };
    let terms = (1..=prec).map(|n| (n, LaurentY::constant(int(scale * divisor_power_sum(n, power)))));
    let mut s = QYSeries::from_q_terms(prec, terms);
    s.set_coeff_doubled(0, LaurentY::one());
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(order: u32, coeffs: &[i64]) -> QYSeries {
        QYSeries::from_q_terms(
            order,
            coeffs.iter().enumerate().map(|(n, &c)| (n as u32, LaurentY::constant(int(c)))),
        )
    }

    #[test]
    fn difference_of_squares() {
        let a = q_poly(2, &[1, 1]);
        let b = q_poly(2, &[1, -1]);
        assert_eq!(&a * &b, q_poly(2, &[1, 0, -1]));
    }

    #[test]
    fn geometric_series() {
        let one = QYSeries::one(3);
        let d = q_poly(3, &[1, -1]);
        assert_eq!(one.checked_div(&d).unwrap(), q_poly(3, &[1, 1, 1, 1]));
    }

    #[test]
    fn identity_divisor() {
        let a = QYSeries::from_q_terms(4, [(0, LaurentY::one()), (1, LaurentY::monomial(1, int(-1)))]);
        assert_eq!(a.checked_div(&QYSeries::one(4)).unwrap(), a);
    }

    #[test]
    fn non_unit_divisor_is_rejected() {
        let d = QYSeries::constant(LaurentY::from_ints(&[(0, 1), (1, -1)]), 3);
        assert!(matches!(QYSeries::one(3).checked_div(&d), Err(Error::DivisionByNonUnit(_))));
        let qd = q_poly(3, &[0, 1]);
        assert!(matches!(QYSeries::one(3).checked_div(&qd), Err(Error::DivisionByNonUnit(_))));
    }

    #[test]
    fn division_with_common_valuation() {
        // (q + q^2) / q = 1 + q, known one order less
        let a = q_poly(3, &[0, 1, 1]);
        let b = q_poly(3, &[0, 1]);
        assert_eq!(a.checked_div(&b).unwrap(), q_poly(2, &[1, 1]));
    }

    #[test]
    fn eta_small_orders() {
        assert_eq!(eta_pow24_root_free(0), QYSeries::one(0));
        assert_eq!(eta_pow24_root_free(5), q_poly(5, &[1, -1, -1, 0, 0, 1]));
    }

    #[test]
    fn eisenstein_leading_terms() {
        assert_eq!(eisenstein(4, 1), q_poly(1, &[1, 240]));
        assert_eq!(eisenstein(6, 2), q_poly(2, &[1, -504, -16632]));
        assert_eq!(eisenstein(4, 0), QYSeries::one(0));
    }

    #[test]
    fn theta_three_at_one_is_a_lattice_sum() {
        let t = theta(3, 5, 1).at_y_one().into_series().unwrap();
        // sum_n q^{n^2/2}: doubled keys 0, 1, 4, 9
        let mut expected = QYSeries::with_doubled_precision(10, true);
        expected.set_coeff_doubled(0, LaurentY::one());
        expected.set_coeff_doubled(1, LaurentY::constant(int(2)));
        expected.set_coeff_doubled(4, LaurentY::constant(int(2)));
        expected.set_coeff_doubled(9, LaurentY::constant(int(2)));
        assert_eq!(t, expected);
    }

    #[test]
    fn theta_one_front_factor() {
        let t = theta(1, 2, 1);
        assert_eq!(t.y_half, -1);
        assert_eq!(t.front, LaurentY::from_ints(&[(0, -1), (1, 1)]));
        assert_eq!(t.series.coeff(0), LaurentY::one());
        assert_eq!(theta(1, 2, 1).at_y_one().front, LaurentY::zero());
    }

    #[test]
    fn theta_two_ratio_at_q_zero() {
        let r = theta(2, 3, 1).div(&theta(2, 3, 1).at_y_one()).unwrap();
        let sq = r.pow(2).into_series().unwrap();
        assert_eq!(
            sq.coeff(0),
            LaurentY::from_terms([(-1, rat(1, 4)), (0, rat(1, 2)), (1, rat(1, 4))])
        );
    }

    #[test]
    fn laurent_exact_division() {
        let num = LaurentY::from_ints(&[(2, 1), (0, -1)]);
        let den = LaurentY::from_ints(&[(1, 1), (0, -1)]);
        assert_eq!(num.div_exact(&den), Some(LaurentY::from_ints(&[(1, 1), (0, 1)])));
        assert_eq!(den.div_exact(&num), None);
        assert_eq!(LaurentY::from_ints(&[(3, 2)]).div_exact(&LaurentY::from_ints(&[(-1, 4)])),
            Some(LaurentY::from_terms([(4, rat(1, 2))])));
    }

    #[test]
    fn exp_of_q() {
        let s = q_poly(4, &[0, 1]);
        let e = s.exp();
        assert_eq!(e.coeff(3), LaurentY::constant(rat(1, 6)));
        assert_eq!(e.coeff(4), LaurentY::constant(rat(1, 24)));
    }

    #[test]
    fn display_matches_sage_style() {
        let s = QYSeries::from_q_terms(
            2,
            [
                (0, LaurentY::from_ints(&[(1, -100), (2, -100)])),
                (1, LaurentY::from_ints(&[(-1, 100), (1, -100)])),
                (2, LaurentY::from_ints(&[(4, 3)])),
            ],
        );
        assert_eq!(s.to_string(), "-100*y - 100*y^2 + (100*y^-1 - 100*y)*q + 3*y^4*q^2 + O(q^3)");
        assert_eq!(QYSeries::zero(1).to_string(), "O(q^2)");
    }
}
