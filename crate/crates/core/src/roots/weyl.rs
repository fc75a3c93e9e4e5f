use std::collections::HashSet;

use super::{is_positive, RootSystem, Weight};

/// Weyl group element stored as a reduced word `s_{i_1} s_{i_2} ... s_{i_k}` (0-based nodes).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        Self { word: Vec::new() }
    }

    pub fn from_word(word: Vec<usize>) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `w(v)`: the rightmost reflection acts first.
    pub fn act(&self, rs: &RootSystem, v: &Weight) -> Weight {
        self.word.iter().rev().fold(v.clone(), |acc, &i| rs.reflect(&acc, i))
    }

    /// `w^{-1}(v)`.
    pub fn act_inverse(&self, rs: &RootSystem, v: &Weight) -> Weight {
        self.word.iter().fold(v.clone(), |acc, &i| rs.reflect(&acc, i))
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        let positive: HashSet<&Weight> = rs.positive_roots().iter().collect();
        rs.positive_roots()
            .iter()
            .filter(|a| !positive.contains(&self.act(rs, a)))
            .count()
    }
}

/// Minimal-length representatives of `W / W_J` where `J` is the set of `fixed` simple
/// reflections, enumerated breadth-first by length.
///
/// The representatives are read off from the orbit of a dominant vector whose stabilizer is
/// exactly `W_J`: a simple reflection is applied only when it strictly lowers the vector.
pub(crate) fn min_coset_reps(rs: &RootSystem, fixed: &[usize]) -> Vec<(WeylElement, Weight)> {
    let start = (0..rs.rank())
        .filter(|i| !fixed.contains(i))
        .fold(Weight::zero(rs.ambient_dim()), |acc, i| &acc + &rs.fundamental_weights()[i]);
    let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
    let mut out = vec![(WeylElement::identity(), start)];
    let mut frontier = 0;
    while frontier < out.len() {
        let end = out.len();
        for idx in frontier..end {
            for i in 0..rs.rank() {
                let (w, u) = &out[idx];
                if !is_positive(&u.pair_coroot(&rs.simple_roots()[i])) {
                    continue;
                }
                let next = rs.reflect(u, i);
                if seen.insert(next.clone()) {
                    let mut word = Vec::with_capacity(w.length() + 1);
                    word.push(i);
                    word.extend_from_slice(w.word());
                    out.push((WeylElement::from_word(word), next));
                }
            }
        }
        frontier = end;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    #[test]
    fn full_group_of_g2() {
        let rs = RootSystem::new("G2".parse::<CartanType>().unwrap());
        let reps = min_coset_reps(&rs, &[]);
        assert_eq!(reps.len(), 12);
        for (w, _) in &reps {
            assert_eq!(w.inversions(&rs), w.length());
        }
        let longest = reps.iter().map(|(w, _)| w.length()).max().unwrap();
        assert_eq!(longest, 6);
    }

    #[test]
    fn inverse_undoes_action() {
        let rs = RootSystem::new("B3".parse::<CartanType>().unwrap());
        let v = Weight::from_ints(&[3, -1, 7]);
        for (w, _) in min_coset_reps(&rs, &[1]) {
            assert_eq!(w.act_inverse(&rs, &w.act(&rs, &v)), v);
        }
    }
}
