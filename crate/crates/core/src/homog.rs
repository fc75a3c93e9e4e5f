//! Generalized flag manifolds `G/P` and integration by torus localization.
//!
//! The torus fixed points of `G/P` are indexed by minimal coset representatives `w`. For a
//! class `f` given by an equivariant polynomial representative,
//!
//! ```text
//! int_{G/P} f = sum_w f(w^{-1} p) / prod_{alpha tangent} <alpha, w^{-1} p>
//! ```
//!
//! for any generic point `p`; the right-hand side does not depend on `p`.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundles::EquivariantVectorBundle;
use crate::error::{Error, Result};
use crate::poly::CohomologyClass;
use crate::rational::{format_rational, int, round_to_rational, to_f64, Rational};
use crate::roots::{ParabolicSubgroup, Weight, WeylElement};

/// Seed used by the convenience integration methods that take no generator.
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_f1a6;

/// How many random points to try before giving up on finding a non-degenerate one.
pub const MAX_DRAWS: usize = 32;

/// Largest denominator accepted when rounding a floating-point integral.
pub const FLOAT_MAX_DENOMINATOR: i64 = 1000;

const EXACT_RANGE: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Exact rational evaluation at random integer points, checked at a second point.
    #[default]
    Exact,
    /// `f64` evaluation at a random real point, rounded to a nearby rational.
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::Parse(format!("unknown mode `{other}` (expected exact or float)"))),
        }
    }
}

/// Scalars the localization sum can be evaluated in.
pub trait Scalar:
    Clone + Zero + One + PartialEq + for<'a> Add<&'a Self, Output = Self> + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self> + for<'a> Div<&'a Self, Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }
}

pub(crate) fn pair<S: Scalar>(w: &Weight, point: &[S]) -> S {
    w.coords()
        .iter()
        .zip(point)
        .filter(|(c, _)| !c.is_zero())
        .fold(S::zero(), |acc, (c, x)| acc + &(S::from_rational(c) * x))
}

/// Elementary symmetric functions `e_0..=e_max` of scalars.
pub(crate) fn elementary<S: Scalar>(values: &[S], max: usize) -> Vec<S> {
    let mut e = vec![S::zero(); max + 1];
    e[0] = S::one();
    for (k, v) in values.iter().enumerate() {
        for j in (1..=max.min(k + 1)).rev() {
            let t = e[j - 1].clone() * v;
            e[j] = e[j].clone() + &t;
        }
    }
    e
}

#[derive(Debug)]
struct SpaceData {
    parabolic: ParabolicSubgroup,
    fixed_points: Vec<WeylElement>,
}

/// The flag manifold `G/P`. Cheap to clone.
#[derive(Clone, Debug)]
pub struct HomogeneousSpace(Arc<SpaceData>);

impl PartialEq for HomogeneousSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.parabolic == other.0.parabolic
    }
}

impl HomogeneousSpace {
    pub fn new(parabolic: ParabolicSubgroup) -> Self {
        let fixed_points = parabolic.min_coset_reps();
        Self(Arc::new(SpaceData {
            parabolic,
            fixed_points,
        }))
    }

    pub fn parabolic(&self) -> &ParabolicSubgroup {
        &self.0.parabolic
    }

    pub fn dimension(&self) -> usize {
        self.0.parabolic.tangent_weights().len()
    }

    /// Number of polynomial variables, i.e. the ambient dimension of the root system.
    pub fn nvars(&self) -> usize {
        self.0.parabolic.root_system().ambient_dim()
    }

    pub fn tangent_weights(&self) -> &[Weight] {
        self.0.parabolic.tangent_weights()
    }

    /// Coset representatives indexing the torus fixed points.
    pub fn fixed_points(&self) -> &[WeylElement] {
        &self.0.fixed_points
    }

    pub fn euler_characteristic(&self) -> usize {
        self.0.fixed_points.len()
    }

    pub fn tangent_bundle(&self) -> EquivariantVectorBundle {
        EquivariantVectorBundle::from_weights(self.clone(), self.tangent_weights().to_vec())
    }

    pub fn cotangent_bundle(&self) -> EquivariantVectorBundle {
        self.tangent_bundle().dual()
    }

    /// `[c_0, ..., c_dim]` of the tangent bundle.
    pub fn chern_classes(&self) -> Vec<CohomologyClass> {
        self.tangent_bundle().chern_classes()
    }

    pub fn todd_classes(&self) -> Vec<CohomologyClass> {
        self.tangent_bundle().todd_classes()
    }

    pub fn integrate(&self, f: &CohomologyClass, mode: Mode) -> Result<Rational> {
        self.integrate_with(f, mode, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
    }

    /// Integral of the degree-`dim` component of `f`.
    pub fn integrate_with(&self, f: &CohomologyClass, mode: Mode, rng: &mut dyn RngCore) -> Result<Rational> {
        let top = f.homogeneous_component(self.dimension() as u32);
        if top.is_zero() {
            return Ok(Rational::zero());
        }
        self.integrate_by(mode, rng, |q| top.eval(q), |q| top.eval_f64(q))
    }

    /// The raw floating-point localization sum of the top-degree part of `f`, before rounding.
    pub fn integrate_float_raw(&self, f: &CohomologyClass, rng: &mut dyn RngCore) -> Result<f64> {
        let top = f.homogeneous_component(self.dimension() as u32);
        self.float_sum(rng, &mut |q| top.eval_f64(q))
    }

    /// The localization sum of `f` at `point`, or `None` if some tangent weight vanishes at a
    /// fixed point. For `f` homogeneous of degree `dim` the value does not depend on `point`.
    pub fn localization_sum(&self, f: &CohomologyClass, point: &[Rational]) -> Option<Rational> {
        self.localize(point, |q| f.eval(q))
    }

    /// `sum_w integrand(w^{-1} p) / prod_alpha <alpha, w^{-1} p>`; `None` on a vanishing
    /// denominator.
    pub fn localize<S: Scalar>(&self, point: &[S], mut integrand: impl FnMut(&[S]) -> S) -> Option<S> {
        assert_eq!(point.len(), self.nvars(), "point dimension");
        let rs = self.0.parabolic.root_system();
        let simple: Vec<(Vec<S>, Vec<S>)> = rs
            .simple_roots()
            .iter()
            .map(|a| {
                let coroot = a.scale(&(int(2) / a.norm2()));
                (
                    a.coords().iter().map(S::from_rational).collect(),
                    coroot.coords().iter().map(S::from_rational).collect(),
                )
            })
            .collect();
        let mut total = S::zero();
        for w in self.fixed_points() {
            let mut q = point.to_vec();
            for &i in w.word() {
                let (alpha, coroot) = &simple[i];
                let c = q.iter().zip(coroot).fold(S::zero(), |acc, (x, y)| acc + &(x.clone() * y));
                for (x, a) in q.iter_mut().zip(alpha) {
                    *x = x.clone() - &(c.clone() * a);
                }
            }
            let mut denom = S::one();
            for alpha in self.tangent_weights() {
                denom = denom * &pair(alpha, &q);
            }
            if denom == S::zero() {
                return None;
            }
            total = total + &(integrand(&q) / &denom);
        }
        Some(total)
    }

    pub(crate) fn integrate_by(
        &self,
        mode: Mode,
        rng: &mut dyn RngCore,
        mut exact: impl FnMut(&[Rational]) -> Rational,
        mut float: impl FnMut(&[f64]) -> f64,
    ) -> Result<Rational> {
        match mode {
            Mode::Exact => {
                let first = self.exact_sum(rng, &mut exact)?;
                let second = self.exact_sum(rng, &mut exact)?;
                if first != second {
                    return Err(Error::NonConstantLocalization(
                        format_rational(&first),
                        format_rational(&second),
                    ));
                }
                Ok(first)
            }
            Mode::Float => {
                let v = self.float_sum(rng, &mut float)?;
                round_to_rational(v, FLOAT_MAX_DENOMINATOR).ok_or(Error::FloatUnstable(v))
            }
        }
    }

    fn exact_sum(&self, rng: &mut dyn RngCore, f: &mut dyn FnMut(&[Rational]) -> Rational) -> Result<Rational> {
        for _ in 0..MAX_DRAWS {
            let p: Vec<Rational> = (0..self.nvars())
                .map(|_| int(rng.gen_range(-EXACT_RANGE..=EXACT_RANGE)))
                .collect();
            if let Some(v) = self.localize(&p, &mut *f) {
                return Ok(v);
            }
        }
        Err(Error::DegeneratePoint(MAX_DRAWS))
    }

    fn float_sum(&self, rng: &mut dyn RngCore, f: &mut dyn FnMut(&[f64]) -> f64) -> Result<f64> {
        for _ in 0..MAX_DRAWS {
            let p: Vec<f64> = (0..self.nvars()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            if let Some(v) = self.localize(&p, &mut *f) {
                if v.is_finite() {
                    return Ok(v);
                }
            }
        }
        Err(Error::DegeneratePoint(MAX_DRAWS))
    }
}

impl fmt::Display for HomogeneousSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.parabolic)
    }
}

impl FromStr for HomogeneousSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }
}
