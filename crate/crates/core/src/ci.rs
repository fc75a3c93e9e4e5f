//! Zero loci of general sections of equivariant bundles, and Chern numbers.
//!
//! For `X = Z(s)` with `s` a general section of `E` on `M`, adjunction gives
//! `c(TX) = c(TM) / c(E)` and `td(TX) = td(TM) / td(E)`, and `int_X f = int_M f c_top(E)`.

use num_traits::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundles::EquivariantVectorBundle;
use crate::error::{Error, Result};
use crate::homog::{elementary, pair, HomogeneousSpace, Mode, Scalar, DEFAULT_SEED};
use crate::poly::CohomologyClass;
use crate::rational::Rational;

/// A compact manifold whose characteristic classes localize to the torus fixed points of a
/// flag manifold.
pub trait Manifold {
    fn dimension(&self) -> usize;

    /// The flag manifold that integrals are computed on.
    fn ambient(&self) -> &HomogeneousSpace;

    fn chern_classes(&self) -> Vec<CohomologyClass>;

    fn todd_classes(&self) -> Vec<CohomologyClass>;

    fn integrate_with(&self, f: &CohomologyClass, mode: Mode, rng: &mut dyn RngCore) -> Result<Rational>;

    fn integrate(&self, f: &CohomologyClass, mode: Mode) -> Result<Rational> {
        self.integrate_with(f, mode, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
    }

    /// `c_0, ..., c_dim` of the tangent bundle at the fixed point with coordinates `q`,
    /// together with the factor that multiplies every integrand there.
    fn local_chern<S: Scalar>(&self, q: &[S]) -> (Vec<S>, S);
}

impl Manifold for HomogeneousSpace {
    fn dimension(&self) -> usize {
        HomogeneousSpace::dimension(self)
    }

    fn ambient(&self) -> &HomogeneousSpace {
        self
    }

    fn chern_classes(&self) -> Vec<CohomologyClass> {
        HomogeneousSpace::chern_classes(self)
    }

    fn todd_classes(&self) -> Vec<CohomologyClass> {
        HomogeneousSpace::todd_classes(self)
    }

    fn integrate_with(&self, f: &CohomologyClass, mode: Mode, rng: &mut dyn RngCore) -> Result<Rational> {
        HomogeneousSpace::integrate_with(self, f, mode, rng)
    }

    fn local_chern<S: Scalar>(&self, q: &[S]) -> (Vec<S>, S) {
        let values: Vec<S> = self.tangent_weights().iter().map(|a| pair(a, q)).collect();
        (elementary(&values, HomogeneousSpace::dimension(self)), S::one())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompleteIntersection {
    bundle: EquivariantVectorBundle,
    dimension: usize,
}

impl CompleteIntersection {
    pub fn new(bundle: EquivariantVectorBundle) -> Result<Self> {
        let dim = bundle.base().dimension();
        let rank = bundle.rank();
        if rank > dim {
            return Err(Error::NegativeDimension { rank, dim });
        }
        Ok(Self {
            bundle,
            dimension: dim - rank,
        })
    }

    pub fn bundle(&self) -> &EquivariantVectorBundle {
        &self.bundle
    }

    /// `c_rank(E)`, the class of `X` in the ambient space.
    pub fn euler_class(&self) -> CohomologyClass {
        let c = self.bundle.chern_classes();
        c[self.bundle.rank()].clone()
    }

    /// `total(M) / total(E)` split into graded pieces up to `dim X`.
    fn adjoin(&self, ambient: Vec<CohomologyClass>, bundle: Vec<CohomologyClass>) -> Vec<CohomologyClass> {
        let d = self.dimension as u32;
        let n = self.bundle.base().nvars();
        let sum = |v: Vec<CohomologyClass>| {
            v.iter()
                .take(self.dimension + 1)
                .fold(CohomologyClass::zero(n), |acc, c| &acc + c)
        };
        let inv = sum(bundle).inverse_truncated(d).expect("total classes start with 1");
        let total = sum(ambient).mul_truncated(&inv, d);
        (0..=d).map(|k| total.homogeneous_component(k)).collect()
    }
}

impl Manifold for CompleteIntersection {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn ambient(&self) -> &HomogeneousSpace {
        self.bundle.base()
    }

    fn chern_classes(&self) -> Vec<CohomologyClass> {
        self.adjoin(self.ambient().chern_classes(), self.bundle.chern_classes())
    }

    fn todd_classes(&self) -> Vec<CohomologyClass> {
        self.adjoin(self.ambient().todd_classes(), self.bundle.todd_classes())
    }

    fn integrate_with(&self, f: &CohomologyClass, mode: Mode, rng: &mut dyn RngCore) -> Result<Rational> {
        let top = f.homogeneous_component(self.dimension as u32);
        if top.is_zero() {
            return Ok(Rational::zero());
        }
        self.ambient().integrate_with(&(&top * &self.euler_class()), mode, rng)
    }

    fn local_chern<S: Scalar>(&self, q: &[S]) -> (Vec<S>, S) {
        let d = self.dimension;
        let (cm, _) = self.ambient().local_chern(q);
        let roots: Vec<S> = self.bundle.weights().iter().map(|w| pair(w, q)).collect();
        let ce = elementary(&roots, d);
        let mut inv = vec![S::zero(); d + 1];
        inv[0] = S::one();
        for m in 1..=d {
            let mut s = S::zero();
            for j in 1..=m {
                s = s + &(ce[j].clone() * &inv[m - j]);
            }
            inv[m] = S::zero() - &s;
        }
        let c = (0..=d)
            .map(|m| (0..=m).fold(S::zero(), |acc, j| acc + &(cm[j].clone() * &inv[m - j])))
            .collect();
        let euler = roots.iter().fold(S::one(), |acc, r| acc * r);
        (c, euler)
    }
}

/// `int_M prod_i c_{degrees[i]}`. Zero without integrating when the degrees do not sum to
/// `dim M`.
pub fn chern_number<M: Manifold>(m: &M, degrees: &[usize], mode: Mode) -> Result<Rational> {
    chern_number_with(m, degrees, mode, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

pub fn chern_number_with<M: Manifold>(
    m: &M,
    degrees: &[usize],
    mode: Mode,
    rng: &mut dyn RngCore,
) -> Result<Rational> {
    let dim = m.dimension();
    if let Some(&degree) = degrees.iter().find(|&&k| k == 0 || k > dim) {
        return Err(Error::DegreeOutOfRange { degree, dim });
    }
    if degrees.iter().sum::<usize>() != dim {
        return Ok(Rational::zero());
    }
    fn local<S: Scalar, M: Manifold>(m: &M, degrees: &[usize], q: &[S]) -> S {
        let (c, factor) = m.local_chern(q);
        degrees.iter().fold(factor, |acc, &k| acc * &c[k])
    }
    m.ambient()
        .integrate_by(mode, rng, |q| local(m, degrees, q), |q| local(m, degrees, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn hypersurface(space: &str, degree: i64) -> CompleteIntersection {
        let base: HomogeneousSpace = space.parse().unwrap();
        let mut hw = vec![0; base.parabolic().root_system().rank()];
        hw[0] = degree;
        CompleteIntersection::new(EquivariantVectorBundle::irreducible(&base, &hw).unwrap()).unwrap()
    }

    #[test]
    fn grassmannian_chern_numbers() {
        let gr: HomogeneousSpace = "A4[3]".parse().unwrap();
        assert_eq!(chern_number(&gr, &[1; 6], Mode::Exact).unwrap(), int(78125));
        assert_eq!(chern_number(&gr, &[1, 2, 3], Mode::Exact).unwrap(), int(4275));
        assert_eq!(chern_number(&gr, &[6], Mode::Exact).unwrap(), int(10));
        assert_eq!(chern_number(&gr, &[3, 4], Mode::Exact).unwrap(), int(0));
        assert_eq!(chern_number(&gr, &[1, 2, 3], Mode::Float).unwrap(), int(4275));
        assert!(matches!(chern_number(&gr, &[7], Mode::Exact), Err(Error::DegreeOutOfRange { degree: 7, dim: 6 })));
        assert!(matches!(chern_number(&gr, &[0, 6], Mode::Exact), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn quartic_k3() {
        let k3 = hypersurface("A3[1]", 4);
        assert_eq!(k3.dimension(), 2);
        let c = k3.chern_classes();
        // x0 + ... + x3 vanishes on the weight lattice of SL(4)
        assert_eq!(c[1].to_string(), "-x0 - x1 - x2 - x3");
        assert_eq!(k3.integrate(&c[2], Mode::Exact).unwrap(), int(24));
        assert_eq!(k3.integrate(&c[2], Mode::Float).unwrap(), int(24));
        assert_eq!(chern_number(&k3, &[2], Mode::Exact).unwrap(), int(24));
        assert_eq!(chern_number(&k3, &[1, 1], Mode::Exact).unwrap(), int(0));
        assert_eq!(k3.integrate(&k3.todd_classes()[2], Mode::Exact).unwrap(), int(2));
    }

    #[test]
    fn quintic_threefold() {
        let q = hypersurface("A4[1]", 5);
        let c = q.chern_classes();
        assert_eq!(c[1].to_string(), "-x0 - x1 - x2 - x3 - x4");
        assert_eq!(chern_number(&q, &[1, 2], Mode::Exact).unwrap(), int(0));
        assert_eq!(chern_number(&q, &[1, 1, 1], Mode::Exact).unwrap(), int(0));
        assert_eq!(q.integrate(&c[3], Mode::Exact).unwrap(), int(-200));
        assert_eq!(chern_number(&q, &[3], Mode::Exact).unwrap(), int(-200));
        assert_eq!(q.integrate(&CohomologyClass::one(5), Mode::Exact).unwrap(), int(0));
    }

    #[test]
    fn adjunction_identity() {
        let q = hypersurface("A4[1]", 5);
        let n = 5;
        let total = |v: Vec<CohomologyClass>| v.iter().fold(CohomologyClass::zero(n), |a, c| &a + c);
        let lhs = total(q.chern_classes()).mul_truncated(&total(q.bundle().chern_classes()), 3);
        let rhs = total(q.ambient().chern_classes()).truncate(3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_zero_and_too_large() {
        let p4: HomogeneousSpace = "A4[1]".parse().unwrap();
        let x = CompleteIntersection::new(EquivariantVectorBundle::zero(&p4)).unwrap();
        assert_eq!(x.chern_classes(), p4.chern_classes());
        assert_eq!(chern_number(&x, &[4], Mode::Exact).unwrap(), int(5));
        let big = EquivariantVectorBundle::completely_reducible(&p4, &vec![vec![1, 0, 0, 0]; 5]).unwrap();
        assert_eq!(
            CompleteIntersection::new(big),
            Err(Error::NegativeDimension { rank: 5, dim: 4 })
        );
    }
}
