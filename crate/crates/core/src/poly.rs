//! Polynomials in the ambient variables `x0, ..., x{n-1}` representing equivariant
//! cohomology classes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_sum, parse_rational, to_f64, Rational};
use crate::roots::Weight;

/// Exponent vector ordered by degree reverse lexicographic order, `x0 > x1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    /// Renders with `name(i)` for the `i`-th variable; empty for the unit monomial.
    pub fn format_with(&self, name: &dyn Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { name(i) } else { format!("{}^{e}", name(i)) })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&|i| format!("x{i}")))
    }
}

/// Sparse polynomial with rational coefficients in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl CohomologyClass {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, Rational::one());
        p
    }

    /// `sum_i w_i x_i`.
    pub fn linear_form(w: &Weight) -> Self {
        let n = w.dim();
        let mut p = Self::zero(n);
        for (i, c) in w.coords().iter().enumerate() {
            let mut m = Monomial::one(n);
            m.0[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rational)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Product with every term of degree above `max_degree` discarded.
    pub fn mul_truncated(&self, rhs: &Self, max_degree: u32) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &rhs.terms {
                if da + mb.degree() <= max_degree {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse as a power series truncated above `max_degree`. Requires constant term 1.
    pub fn inverse_truncated(&self, max_degree: u32) -> Result<Self> {
        let c0 = self.coeff(&vec![0; self.nvars]);
        if !c0.is_one() {
            return Err(Error::DivisionByNonUnit(format!("constant term {c0} is not 1")));
        }
        // 1 / (1 + u) = sum_k (-u)^k
        let minus_u = -&(self - &Self::one(self.nvars));
        let mut acc = Self::one(self.nvars);
        let mut power = Self::one(self.nvars);
        for _ in 0..max_degree {
            power = power.mul_truncated(&minus_u, max_degree);
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point dimension");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars, "point dimension");
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(to_f64(c), |acc, (&e, &x)| acc * x.powi(e as i32))
            })
            .sum()
    }

    /// Substitutes `x_i -> images[i]`.
    pub fn substitute(&self, images: &[CohomologyClass]) -> Self {
        assert_eq!(images.len(), self.nvars, "substitution arity");
        let nvars = images.first().map_or(self.nvars, |p| p.nvars);
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(nvars, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }
}

/// Elementary symmetric polynomials `e_0, ..., e_max` of the given classes.
pub fn elementary_symmetric(roots: &[CohomologyClass], nvars: usize, max: usize) -> Vec<CohomologyClass> {
    let mut e = vec![CohomologyClass::zero(nvars); max + 1];
    e[0] = CohomologyClass::one(nvars);
    for (k, r) in roots.iter().enumerate() {
        for j in (1..=max.min(k + 1)).rev() {
            let t = &e[j - 1] * r;
            e[j] = &e[j] + &t;
        }
    }
    e
}

impl Add for &CohomologyClass {
    type Output = CohomologyClass;
    fn add(self, rhs: &CohomologyClass) -> CohomologyClass {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CohomologyClass {
    type Output = CohomologyClass;
    fn sub(self, rhs: &CohomologyClass) -> CohomologyClass {
        self + &(-rhs)
    }
}

impl Neg for &CohomologyClass {
    type Output = CohomologyClass;
    fn neg(self) -> CohomologyClass {
        CohomologyClass {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &CohomologyClass {
    type Output = CohomologyClass;
    fn mul(self, rhs: &CohomologyClass) -> CohomologyClass {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl CohomologyClass {
    /// Sum in descending monomial order with custom variable names.
    pub fn format_with(&self, name: &dyn Fn(usize) -> String) -> String {
        format_sum(self.terms.iter().rev().map(|(m, c)| (c.clone(), m.format_with(name))))
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&|i| format!("x{i}")))
    }
}

/// Parses sums such as `6*x0^2 - 3*x0*x1 + 1/2*x3`. The number of variables is taken as one
/// more than the largest index that appears; use [`CohomologyClass::parse_in`] to fix it.
impl FromStr for CohomologyClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s)?;
        let nvars = terms
            .iter()
            .flat_map(|(vars, _)| vars.iter().map(|&(i, _)| i + 1))
            .max()
            .unwrap_or(0);
        Ok(build(nvars, terms))
    }
}

impl CohomologyClass {
    pub fn parse_in(nvars: usize, s: &str) -> Result<Self> {
        let terms = parse_terms(s)?;
        if let Some(&(i, _)) = terms.iter().flat_map(|(v, _)| v.iter()).find(|(i, _)| *i >= nvars) {
            return Err(Error::Parse(format!("variable x{i} out of range for {nvars} variables")));
        }
        Ok(build(nvars, terms))
    }
}

type ParsedTerm = (Vec<(usize, u32)>, Rational);

fn build(nvars: usize, terms: Vec<ParsedTerm>) -> CohomologyClass {
    let mut p = CohomologyClass::zero(nvars);
    for (vars, c) in terms {
        let mut m = Monomial::one(nvars);
        for (i, e) in vars {
            m.0[i] += e;
        }
        p.add_term(m, c);
    }
    p
}

fn parse_terms(s: &str) -> Result<Vec<ParsedTerm>> {
    let bad = |t: &str| Error::Parse(format!("cannot parse polynomial term `{t}`"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad(s));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (k, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && !(k > 0 && compact[..k].ends_with('^')) {
            if k > 0 {
                pieces.push((negative, std::mem::take(&mut current)));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    pieces.push((negative, current));

    let mut out = Vec::new();
    for (neg, piece) in pieces {
        if piece.is_empty() {
            return Err(bad(s));
        }
        let mut coeff = Rational::one();
        let mut vars = Vec::new();
        for factor in piece.split('*') {
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad(factor))?),
                    None => (rest, 1),
                };
                vars.push((idx.parse::<usize>().map_err(|_| bad(factor))?, exp));
            } else {
                coeff *= parse_rational(factor).map_err(|_| bad(factor))?;
            }
        }
        out.push((vars, if neg { -coeff } else { coeff }));
    }
    Ok(out)
}
