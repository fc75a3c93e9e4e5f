//! Completely reducible homogeneous vector bundles `G x_P V`, stored by their weights.
//!
//! Every characteristic class is computed from the weights through the splitting principle:
//! the linear forms of the weights are the equivariant Chern roots.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::homog::HomogeneousSpace;
use crate::poly::{elementary_symmetric, CohomologyClass};
use crate::rational::{factorial, int, Rational};
use crate::roots::Weight;

/// Coefficients `t_0..=t_n` of `x / (1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...`.
pub fn todd_series(n: usize) -> Vec<Rational> {
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    let a: Vec<Rational> = (0..=n)
        .map(|k| {
            let s = if k % 2 == 0 { int(1) } else { int(-1) };
            s / factorial(k as u32 + 1)
        })
        .collect();
    let mut t = vec![Rational::zero(); n + 1];
    t[0] = int(1);
    for m in 1..=n {
        let s = (1..=m).fold(Rational::zero(), |acc, j| acc + &a[j] * &t[m - j]);
        t[m] = -s;
    }
    t
}

/// `sum_k c_k l^k` truncated above degree `max`.
fn series_in(l: &CohomologyClass, coeffs: &[Rational], max: usize) -> CohomologyClass {
    let n = l.nvars();
    let mut acc = CohomologyClass::zero(n);
    let mut power = CohomologyClass::one(n);
    for (k, c) in coeffs.iter().enumerate().take(max + 1) {
        if k > 0 {
            power = power.mul_truncated(l, max as u32);
        }
        acc = &acc + &power.scale(c);
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivariantVectorBundle {
    base: HomogeneousSpace,
    weights: Vec<Weight>,
    components: Vec<Vec<i64>>,
}

impl EquivariantVectorBundle {
    /// Bundle from the highest weights (fundamental-weight coordinates) of its irreducible
    /// summands.
    pub fn completely_reducible(base: &HomogeneousSpace, highest_weights: &[Vec<i64>]) -> Result<Self> {
        let mut weights = Vec::new();
        for hw in highest_weights {
            for (w, m) in base.parabolic().weight_multiplicities(hw)? {
                weights.extend(std::iter::repeat_n(w, m as usize));
            }
        }
        weights.sort();
        Ok(Self {
            base: base.clone(),
            weights,
            components: highest_weights.to_vec(),
        })
    }

    pub fn irreducible(base: &HomogeneousSpace, highest_weight: &[i64]) -> Result<Self> {
        Self::completely_reducible(base, &[highest_weight.to_vec()])
    }

    /// Bundle with the given weight multiset and no recorded decomposition.
    pub fn from_weights(base: HomogeneousSpace, mut weights: Vec<Weight>) -> Self {
        weights.sort();
        Self {
            base,
            weights,
            components: Vec::new(),
        }
    }

    pub fn base(&self) -> &HomogeneousSpace {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// Weights with multiplicity, sorted.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Highest weights of the irreducible summands, when the bundle was built from them.
    pub fn components(&self) -> &[Vec<i64>] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, usize> {
        let mut m = BTreeMap::new();
        for w in &self.weights {
            *m.entry(w.clone()).or_insert(0) += 1;
        }
        m
    }

    fn roots(&self) -> Vec<CohomologyClass> {
        self.weights.iter().map(CohomologyClass::linear_form).collect()
    }

    fn dim(&self) -> usize {
        self.base.dimension()
    }

    /// `[c_0, ..., c_dim]`.
    pub fn chern_classes(&self) -> Vec<CohomologyClass> {
        elementary_symmetric(&self.roots(), self.base.nvars(), self.dim())
    }

    /// `[ch_0, ..., ch_dim]` with `ch_k = sum_i x_i^k / k!`.
    pub fn chern_character(&self) -> Vec<CohomologyClass> {
        let n = self.base.nvars();
        let roots = self.roots();
        (0..=self.dim())
            .map(|k| {
                let s = roots.iter().fold(CohomologyClass::zero(n), |acc, r| &acc + &r.pow(k as u32));
                s.scale(&(int(1) / factorial(k as u32)))
            })
            .collect()
    }

    /// Graded pieces `[td_0, ..., td_dim]` of `prod_i x_i / (1 - e^{-x_i})`.
    pub fn todd_classes(&self) -> Vec<CohomologyClass> {
        let d = self.dim();
        let t = todd_series(d);
        let total = self
            .roots()
            .iter()
            .fold(CohomologyClass::one(self.base.nvars()), |acc, r| {
                acc.mul_truncated(&series_in(r, &t, d), d as u32)
            });
        (0..=d).map(|k| total.homogeneous_component(k as u32)).collect()
    }

    pub fn dual(&self) -> Self {
        Self::from_weights(self.base.clone(), self.weights.iter().map(|w| -w).collect())
    }

    fn check_base(&self, other: &Self) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let weights = self.weights.iter().chain(&other.weights).cloned().collect();
        let mut out = Self::from_weights(self.base.clone(), weights);
        if !self.components.is_empty() && !other.components.is_empty() {
            out.components = self.components.iter().chain(&other.components).cloned().collect();
        }
        Ok(out)
    }

    pub fn tensor_product(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let weights = self
            .weights
            .iter()
            .flat_map(|u| other.weights.iter().map(move |v| u + v))
            .collect();
        Ok(Self::from_weights(self.base.clone(), weights))
    }

    /// `Sym^k`: sums over multisets of `k` weights.
    pub fn symmetric_power(&self, k: usize) -> Self {
        let mut out = Vec::new();
        let zero = Weight::zero(self.base.nvars());
        multisets(&self.weights, k, 0, zero, &mut out);
        Self::from_weights(self.base.clone(), out)
    }

    /// `Lambda^k`: sums over `k`-element sub-multisets chosen without replacement. The zero
    /// bundle when `k` exceeds the rank.
    pub fn wedge_power(&self, k: usize) -> Self {
        let mut out = Vec::new();
        let zero = Weight::zero(self.base.nvars());
        subsets(&self.weights, k, 0, zero, &mut out);
        Self::from_weights(self.base.clone(), out)
    }

    /// The zero bundle on `base`.
    pub fn zero(base: &HomogeneousSpace) -> Self {
        Self::from_weights(base.clone(), Vec::new())
    }
}

fn multisets(ws: &[Weight], k: usize, start: usize, acc: Weight, out: &mut Vec<Weight>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    for i in start..ws.len() {
        multisets(ws, k - 1, i, &acc + &ws[i], out);
    }
}

fn subsets(ws: &[Weight], k: usize, start: usize, acc: Weight, out: &mut Vec<Weight>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    for i in start..ws.len() {
        if ws.len() - i < k {
            break;
        }
        subsets(ws, k - 1, i + 1, &acc + &ws[i], out);
    }
}
