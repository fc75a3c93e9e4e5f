use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};

use super::{half_sum, Weight};
use crate::rational::{int, Rational};

/// Freudenthal's recursion for the reductive group with the given simple and positive roots.
///
/// Weights are produced level by level below the highest weight `hw`; only weights with
/// nonzero multiplicity are expanded further. `hw` must be dominant for `simple`.
pub(crate) fn multiplicities(hw: &Weight, simple: &[Weight], positive: &[Weight]) -> BTreeMap<Weight, u64> {
    let rho = half_sum(positive, hw.dim());
    let top = (hw + &rho).norm2();
    let heights: Vec<i64> = positive.iter().map(|a| height(a, simple)).collect();

    // weight -> (level, multiplicity)
    let mut known: HashMap<Weight, (i64, Rational)> = HashMap::from([(hw.clone(), (0, int(1)))]);
    let mut frontier = vec![hw.clone()];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut candidates: Vec<Weight> = frontier.iter().flat_map(|nu| simple.iter().map(move |a| nu - a)).collect();
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for mu in candidates {
            if known.contains_key(&mu) {
                continue;
            }
            let denom = &top - (&mu + &rho).norm2();
            let m = if denom.is_zero() {
                Rational::zero()
            } else {
                let mut sum = Rational::zero();
                for (alpha, &h) in positive.iter().zip(&heights) {
                    let mut shifted = mu.clone();
                    for _ in 1..=level / h {
                        shifted = &shifted + alpha;
                        if let Some((_, m)) = known.get(&shifted) {
                            if !m.is_zero() {
                                sum += m * shifted.dot(alpha);
                            }
                        }
                    }
                }
                sum * int(2) / denom
            };
            if !m.is_zero() {
                next.push(mu.clone());
            }
            known.insert(mu, (level, m));
        }
        frontier = next;
    }
    known
        .into_iter()
        .filter(|(_, (_, m))| !m.is_zero())
        .map(|(w, (_, m))| {
            debug_assert!(m.is_integer());
            (w, m.to_integer().to_u64().expect("multiplicity fits in u64"))
        })
        .collect()
}

/// Height of `alpha` in terms of `simple`, solved through the Gram matrix.
fn height(alpha: &Weight, simple: &[Weight]) -> i64 {
    let gram: Vec<Vec<Rational>> = simple.iter().map(|a| simple.iter().map(|b| a.dot(b)).collect()).collect();
    let rhs: Vec<Rational> = simple.iter().map(|a| a.dot(alpha)).collect();
    let coords = crate::rational::solve_linear(&gram, &rhs).expect("simple roots are independent");
    coords
        .iter()
        .fold(Rational::zero(), |acc, c| acc + c)
        .to_integer()
        .to_i64()
        .expect("small height")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{CartanType, RootSystem};

    #[test]
    fn adjoint_of_a2() {
        let rs = RootSystem::new("A2".parse::<CartanType>().unwrap());
        let hw = rs.from_fundamental_ints(&[1, 1]).unwrap();
        let m = multiplicities(&hw, rs.simple_roots(), rs.positive_roots());
        assert_eq!(m.len(), 7);
        assert_eq!(m[&Weight::from_ints(&[1, 1, 1])], 2);
        assert_eq!(m.values().sum::<u64>(), 8);
    }

    #[test]
    fn g2_seven_dimensional() {
        let rs = RootSystem::new("G2".parse::<CartanType>().unwrap());
        let hw = rs.from_fundamental_ints(&[1, 0]).unwrap();
        let m = multiplicities(&hw, rs.simple_roots(), rs.positive_roots());
        assert_eq!(m.values().sum::<u64>(), 7);
        assert_eq!(m[&Weight::zero(3)], 1);
    }
}
