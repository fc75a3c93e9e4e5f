//! Root systems of the finite Cartan types in their standard ambient coordinates.
//!
//! Coordinates follow the usual computer-algebra realizations: `A_n` in `R^{n+1}` with
//! `alpha_i = e_i - e_{i+1}` and `omega_i = e_1 + ... + e_i`; `B_n, C_n, D_n, F_4` in `R^n`;
//! `G_2` in `R^3`; `E_6, E_7, E_8` in `R^8`. Nodes are numbered from 1 in Bourbaki order.

mod freudenthal;
mod parabolic;
mod weyl;

pub use parabolic::ParabolicSubgroup;
pub use weyl::WeylElement;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, rat, solve_linear, Rational};

/// Vector in the ambient space of a root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| int(x)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.0[i] = Rational::one();
        w
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &Weight) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `<self, alpha^vee> = 2 (self, alpha) / (alpha, alpha)`.
    pub fn pair_coroot(&self, alpha: &Weight) -> Rational {
        self.dot(alpha) * int(2) / alpha.norm2()
    }

    /// Reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &Weight) -> Weight {
        let c = self.pair_coroot(alpha);
        self - &alpha.scale(&c)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite Cartan type such as `A4` or `F4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::UnknownType(format!("{family:?}{rank}")))
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::G => 3,
            Family::E => 8,
            _ => self.rank,
        }
    }

    /// `|W|` from the product of the degrees of the basic invariants.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(n + 1),
            (Family::B | Family::C, _) => (1u128 << n) * fact(n),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
            (Family::F, _) => 1152,
            (Family::G, _) => 12,
        }
    }

    fn simple_roots(&self) -> Vec<Weight> {
        let n = self.rank;
        let dim = self.ambient_dim();
        let e = |i: usize| Weight::unit(dim, i);
        let diff = |i: usize, j: usize| &e(i) - &e(j);
        match self.family {
            Family::A => (0..n).map(|i| diff(i, i + 1)).collect(),
            Family::B | Family::C | Family::D => {
                let mut roots: Vec<Weight> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
                roots.push(match self.family {
                    Family::B => e(n - 1),
                    Family::C => e(n - 1).scale(&int(2)),
                    _ => &e(n - 2) + &e(n - 1),
                });
                roots
            }
            Family::G => vec![Weight::from_ints(&[0, 1, -1]), Weight::from_ints(&[1, -2, 1])],
            Family::F => vec![
                Weight::from_ints(&[0, 1, -1, 0]),
                Weight::from_ints(&[0, 0, 1, -1]),
                Weight::from_ints(&[0, 0, 0, 1]),
                Weight(vec![rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)]),
            ],
            Family::E => {
                let h = rat(1, 2);
                let mut a1 = vec![-h.clone(); 8];
                a1[0] = h.clone();
                a1[7] = h;
                let mut roots = vec![Weight(a1), &e(0) + &e(1)];
                roots.extend((0..6).map(|i| diff(i + 1, i)));
                roots.truncate(n);
                roots
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        Self::new(family, rank).map_err(|_| Error::UnknownType(s.to_string()))
    }
}

/// Roots, fundamental weights and Cartan data of a finite root system.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    cartan_type: CartanType,
    simple_roots: Vec<Weight>,
    fundamental_weights: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let simple_roots = cartan_type.simple_roots();
        let n = simple_roots.len();
        let dim = cartan_type.ambient_dim();

        let fundamental_weights: Vec<Weight> = if cartan_type.family == Family::A {
            (0..n)
                .map(|i| Weight((0..dim).map(|j| if j <= i { int(1) } else { int(0) }).collect()))
                .collect()
        } else {
            // omega_i = sum_k (A^{-1})_{ik} alpha_k with A_{kj} = <alpha_k, alpha_j^vee>
            let a: Vec<Vec<Rational>> = (0..n)
                .map(|j| (0..n).map(|k| simple_roots[k].pair_coroot(&simple_roots[j])).collect())
                .collect();
            (0..n)
                .map(|i| {
                    let rhs: Vec<Rational> = (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect();
                    let m = solve_linear(&a, &rhs).expect("Cartan matrix is invertible");
                    m.iter()
                        .zip(&simple_roots)
                        .fold(Weight::zero(dim), |acc, (c, alpha)| &acc + &alpha.scale(c))
                })
                .collect()
        };

        let mut seen: HashSet<Weight> = simple_roots.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = simple_roots.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for alpha in &simple_roots {
                let s = r.reflect(alpha);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }

        let coords_of = |root: &Weight| -> Vec<i64> {
            (0..n)
                .map(|i| {
                    let c = root.dot(&fundamental_weights[i]) * int(2) / simple_roots[i].norm2();
                    debug_assert!(c.is_integer());
                    i64::try_from(c.to_integer()).expect("small root coordinate")
                })
                .collect()
        };
        let mut positive: Vec<(Vec<i64>, Weight)> = seen
            .into_iter()
            .map(|r| (coords_of(&r), r))
            .filter(|(c, _)| c.iter().all(|&x| x >= 0))
            .collect();
        positive.sort_by(|(a, _), (b, _)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let (positive_root_coords, positive_roots) = positive.into_iter().unzip();

        Self {
            cartan_type,
            simple_roots,
            fundamental_weights,
            positive_roots,
            positive_root_coords,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.cartan_type.ambient_dim()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    /// Positive roots ordered by height, then by descending simple-root coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Coefficients of each positive root in the basis of simple roots.
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    /// `A_{ij} = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|ai| {
                self.simple_roots
                    .iter()
                    .map(|aj| i64::try_from(ai.pair_coroot(aj).to_integer()).expect("small entry"))
                    .collect()
            })
            .collect()
    }

    pub fn weyl_group_order(&self) -> u128 {
        self.cartan_type.weyl_group_order()
    }

    /// Ambient vector `sum_i lambda_i omega_i`.
    pub fn from_fundamental(&self, lambda: &[Rational]) -> Result<Weight> {
        if lambda.len() != self.rank() {
            return Err(Error::WeightLength {
                expected: self.rank(),
                got: lambda.len(),
            });
        }
        Ok(lambda
            .iter()
            .zip(&self.fundamental_weights)
            .fold(Weight::zero(self.ambient_dim()), |acc, (c, w)| &acc + &w.scale(c)))
    }

    pub fn from_fundamental_ints(&self, lambda: &[i64]) -> Result<Weight> {
        let l: Vec<Rational> = lambda.iter().map(|&x| int(x)).collect();
        self.from_fundamental(&l)
    }

    /// Coordinates `<v, alpha_i^vee>` in the basis of fundamental weights.
    pub fn to_fundamental(&self, v: &Weight) -> Vec<Rational> {
        self.simple_roots.iter().map(|a| v.pair_coroot(a)).collect()
    }

    pub fn reflect(&self, v: &Weight, i: usize) -> Weight {
        v.reflect(&self.simple_roots[i])
    }

    /// Orbit of `v` under the Weyl group generated by the simple reflections.
    pub fn weyl_orbit(&self, v: &Weight) -> HashSet<Weight> {
        let mut seen = HashSet::from([v.clone()]);
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(u) = queue.pop_front() {
            for alpha in &self.simple_roots {
                let s = u.reflect(alpha);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        seen
    }

    /// `rho`: half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        half_sum(&self.positive_roots, self.ambient_dim())
    }

    pub fn is_positive_root(&self, v: &Weight) -> bool {
        self.positive_roots.contains(v)
    }
}

pub(crate) fn half_sum(roots: &[Weight], dim: usize) -> Weight {
    roots
        .iter()
        .fold(Weight::zero(dim), |acc, r| &acc + r)
        .scale(&rat(1, 2))
}

pub(crate) fn shared(cartan_type: CartanType) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(cartan_type))
}

pub(crate) fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [
            ("A1", 1), ("A4", 10), ("B2", 4), ("B3", 9), ("C3", 9), ("D4", 12), ("D5", 20),
            ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120),
        ] {
            assert_eq!(rs(t).positive_roots().len(), n, "{t}");
        }
    }

    #[test]
    fn a4_realization() {
        let r = rs("A4");
        assert_eq!(r.ambient_dim(), 5);
        assert_eq!(r.simple_roots()[2], Weight::from_ints(&[0, 0, 1, -1, 0]));
        assert_eq!(r.fundamental_weights()[2], Weight::from_ints(&[1, 1, 1, 0, 0]));
    }

    #[test]
    fn textbook_cartan_matrices() {
        assert_eq!(rs("A3").cartan_matrix(), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(rs("B2").cartan_matrix(), vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs("G2").cartan_matrix(), vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(
            rs("F4").cartan_matrix(),
            vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]]
        );
        assert_eq!(
            rs("C3").cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            rs("D4").cartan_matrix(),
            vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]]
        );
        let e6 = rs("E6").cartan_matrix();
        assert_eq!(e6[0], vec![2, 0, -1, 0, 0, 0]);
        assert_eq!(e6[1], vec![0, 2, 0, -1, 0, 0]);
        assert_eq!(e6[3], vec![0, -1, -1, 2, -1, 0]);
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"] {
            let r = rs(t);
            for (i, w) in r.fundamental_weights().iter().enumerate() {
                let f = r.to_fundamental(w);
                for (j, c) in f.iter().enumerate() {
                    assert_eq!(*c, int((i == j) as i64), "{t} omega_{i} vs alpha_{j}");
                }
            }
        }
        assert_eq!(rs("G2").fundamental_weights()[1], Weight::from_ints(&[2, -1, -1]));
        assert_eq!(rs("F4").fundamental_weights()[0], Weight::from_ints(&[1, 1, 0, 0]));
        assert_eq!(
            rs("F4").fundamental_weights()[2],
            Weight(vec![rat(3, 2), rat(1, 2), rat(1, 2), rat(1, 2)])
        );
    }

    #[test]
    fn orbits() {
        let a4 = rs("A4");
        assert_eq!(a4.weyl_orbit(&Weight::unit(5, 0)).len(), 5);
        assert_eq!(a4.weyl_orbit(&Weight::zero(5)).len(), 1);
        let g2 = rs("G2");
        let long = g2.simple_roots()[1].clone();
        let orbit = g2.weyl_orbit(&long);
        assert_eq!(orbit.len(), 6);
        assert!(orbit.iter().all(|r| r.norm2() == int(6)));
        assert_eq!(g2.weyl_orbit(&g2.rho()).len(), 12);
        assert_eq!(rs("F4").weyl_orbit(&rs("F4").rho()).len(), 1152);
        assert_eq!(rs("B3").weyl_orbit(&rs("B3").rho()).len() as u128, rs("B3").weyl_group_order());
    }

    #[test]
    fn fundamental_roundtrip() {
        let r = rs("F4");
        let lambda = vec![int(1), int(-2), int(3), int(0)];
        let v = r.from_fundamental(&lambda).unwrap();
        assert_eq!(r.to_fundamental(&v), lambda);
        assert!(matches!(
            r.from_fundamental_ints(&[1, 2]),
            Err(Error::WeightLength { expected: 4, got: 2 })
        ));
    }

    #[test]
    fn parse_cartan_types() {
        assert!("A0".parse::<CartanType>().is_err());
        assert!("C2".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("X3".parse::<CartanType>().is_err());
        assert_eq!("e8".parse::<CartanType>().unwrap().to_string(), "E8");
    }
}
