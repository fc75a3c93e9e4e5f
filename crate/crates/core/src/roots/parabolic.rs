use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::weyl::{min_coset_reps, WeylElement};
use super::{freudenthal, half_sum, shared, CartanType, Family, RootSystem, Weight};
use crate::error::{Error, Result};

/// Parabolic subgroup given by a crossed Dynkin diagram. Uncrossed nodes span the Levi.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicSubgroup {
    root_system: Arc<RootSystem>,
    /// 1-based, sorted.
    crossed: Vec<usize>,
    levi_nodes: Vec<usize>,
    levi_positive: Vec<Weight>,
    tangent: Vec<Weight>,
}

impl ParabolicSubgroup {
    pub fn new(cartan_type: CartanType, crossed: &[usize]) -> Result<Self> {
        let mut nodes = crossed.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.is_empty() {
            return Err(Error::InvalidCrossing("at least one node must be crossed".into()));
        }
        if let Some(&bad) = nodes.iter().find(|&&n| n == 0 || n > cartan_type.rank) {
            return Err(Error::InvalidCrossing(format!(
                "node {bad} is not a node of {cartan_type} (nodes are numbered 1..={})",
                cartan_type.rank
            )));
        }
        let rs = shared(cartan_type);
        let levi_nodes: Vec<usize> = (0..rs.rank()).filter(|i| !nodes.contains(&(i + 1))).collect();
        let (levi_positive, tangent): (Vec<_>, Vec<_>) = rs
            .positive_roots()
            .iter()
            .zip(rs.positive_root_coords())
            .partition(|(_, c)| nodes.iter().all(|&n| c[n - 1] == 0));
        Ok(Self {
            crossed: nodes,
            levi_nodes,
            levi_positive: levi_positive.into_iter().map(|(r, _)| r.clone()).collect(),
            tangent: tangent.into_iter().map(|(r, _)| r.clone()).collect(),
            root_system: rs,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn cartan_type(&self) -> CartanType {
        self.root_system.cartan_type()
    }

    /// Crossed nodes, numbered from 1.
    pub fn crossed(&self) -> &[usize] {
        &self.crossed
    }

    /// 0-based indices of the uncrossed nodes.
    pub fn levi_nodes(&self) -> &[usize] {
        &self.levi_nodes
    }

    /// Simple roots of the Levi factor.
    pub fn simple_roots(&self) -> Vec<Weight> {
        self.levi_nodes.iter().map(|&i| self.root_system.simple_roots()[i].clone()).collect()
    }

    /// Positive roots of the Levi factor.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.levi_positive
    }

    /// Positive roots of `G` that are not roots of the Levi: the weights of `T_{eP}(G/P)`.
    pub fn tangent_weights(&self) -> &[Weight] {
        &self.tangent
    }

    pub fn levi_rho(&self) -> Weight {
        half_sum(&self.levi_positive, self.root_system.ambient_dim())
    }

    /// `|W_L|`, counted as the orbit of a regular vector under the Levi reflections.
    pub fn levi_weyl_order(&self) -> usize {
        let rs = &self.root_system;
        let start = rs.rho();
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &i in &self.levi_nodes {
                let s = rs.reflect(&u, i);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        seen.len()
    }

    /// Minimal-length coset representatives `W^P`, in bijection with the torus fixed points
    /// of `G/P`.
    pub fn min_coset_reps(&self) -> Vec<WeylElement> {
        min_coset_reps(&self.root_system, &self.levi_nodes).into_iter().map(|(w, _)| w).collect()
    }

    pub fn is_p_dominant(&self, lambda: &[i64]) -> bool {
        lambda.len() == self.root_system.rank() && self.levi_nodes.iter().all(|&i| lambda[i] >= 0)
    }

    /// Weights with multiplicities of the irreducible Levi representation with highest weight
    /// `lambda` (given in fundamental-weight coordinates), in ambient coordinates.
    pub fn weight_multiplicities(&self, lambda: &[i64]) -> Result<BTreeMap<Weight, u64>> {
        let rank = self.root_system.rank();
        if lambda.len() != rank {
            return Err(Error::WeightLength {
                expected: rank,
                got: lambda.len(),
            });
        }
        if !self.is_p_dominant(lambda) {
            return Err(Error::NotPDominant(format!("{lambda:?} for {self}")));
        }
        let hw = self.root_system.from_fundamental_ints(lambda)?;
        Ok(freudenthal::multiplicities(
            &hw,
            &self.simple_roots(),
            &self.levi_positive,
        ))
    }

    /// ASCII crossed Dynkin diagram; crossed nodes are drawn as `X`.
    pub fn dynkin_diagram(&self) -> String {
        let ct = self.cartan_type();
        let n = ct.rank;
        let mark = |node: usize| if self.crossed.contains(&node) { 'X' } else { 'O' };
        let chain = |nodes: &[usize], bonds: &[&str]| {
            let mut line = String::new();
            let mut labels = String::new();
            for (k, &node) in nodes.iter().enumerate() {
                line.push(mark(node));
                labels.push_str(&format!("{node:<4}"));
                if k + 1 < nodes.len() {
                    line.push_str(bonds[k]);
                }
            }
            (line, labels.trim_end().to_string())
        };
        let simple_chain = |last_bond: &str| {
            let nodes: Vec<usize> = (1..=n).collect();
            let mut bonds = vec!["---"; n.saturating_sub(1)];
            if n >= 2 {
                bonds[n - 2] = last_bond;
            }
            chain(&nodes, &bonds)
        };
        // (optional branch node drawn above a position in the chain, chain line, labels)
        let (branch, line, labels) = match ct.family {
            Family::A => {
                let (l, b) = simple_chain("---");
                (None, l, b)
            }
            Family::B => {
                let (l, b) = simple_chain("=>=");
                (None, l, b)
            }
            Family::C => {
                let (l, b) = simple_chain("=<=");
                (None, l, b)
            }
            Family::F => {
                let (l, b) = chain(&[1, 2, 3, 4], &["---", "=>=", "---"]);
                (None, l, b)
            }
            Family::G => {
                let (l, b) = chain(&[1, 2], &["=<="]);
                (Some((None, 0usize)), l, b)
            }
            Family::D => {
                let nodes: Vec<usize> = (1..n).collect();
                let (l, b) = chain(&nodes, &vec!["---"; n - 2]);
                (Some((Some(n), n - 3)), l, b)
            }
            Family::E => {
                let mut nodes = vec![1];
                nodes.extend(3..=n);
                let (l, b) = chain(&nodes, &vec!["---"; n - 2]);
                (Some((Some(2), 2)), l, b)
            }
        };
        let mut out = String::new();
        match branch {
            Some((Some(node), pos)) => {
                let pad = " ".repeat(4 * pos);
                out.push_str(&format!("{pad}{} {node}\n{pad}|\n{pad}|\n", mark(node)));
            }
            Some((None, _)) => out.push_str("  3\n"),
            None => {}
        }
        out.push_str(&line);
        out.push('\n');
        out.push_str(&labels);
        out.push('\n');
        if self.crossed.len() == 1 {
            out.push_str(&format!("{ct} with node {} marked", self.crossed[0]));
        } else {
            let nodes: Vec<String> = self.crossed.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{ct} with nodes ({}) marked", nodes.join(", ")));
        }
        out
    }
}

impl fmt::Display for ParabolicSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.crossed.iter().map(ToString::to_string).collect();
        write!(f, "{}[{}]", self.cartan_type(), nodes.join(","))
    }
}

/// Parses `A4[3]`, `G2[1,2]`, `F4[2]`.
impl FromStr for ParabolicSubgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected a space like `A4[3]` or `G2[1,2]`, got `{s}`"));
        let (head, rest) = s.split_once('[').ok_or_else(bad)?;
        let body = rest.strip_suffix(']').ok_or_else(bad)?;
        let cartan_type: CartanType = head.parse()?;
        let crossed = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(cartan_type, &crossed)
    }
}
