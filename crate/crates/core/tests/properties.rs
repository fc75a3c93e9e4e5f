//! Randomized identities that hold independently of any tabulated value.

use proptest::prelude::*;

use ellgenus::bundles::EquivariantVectorBundle;
use ellgenus::ci::{chern_number, CompleteIntersection, Manifold};
use ellgenus::genus::{chi_y, elliptic_genus, elementary_in_power_sums, power_sums_in_elementary};
use ellgenus::homog::{HomogeneousSpace, Mode};
use ellgenus::poly::CohomologyClass;
use ellgenus::rational::{int, Rational};
use ellgenus::roots::ParabolicSubgroup;

const BASES: [&str; 10] = [
    "A1[1]", "A2[1]", "A2[1,2]", "A3[2]", "B2[1]", "B2[2]", "C3[1]", "G2[1]", "G2[2]", "D4[1]",
];

fn space(s: &str) -> HomogeneousSpace {
    s.parse().unwrap()
}

/// A p-dominant highest weight with small entries, from raw draws.
fn dominant(p: &ParabolicSubgroup, raw: &[i64]) -> Vec<i64> {
    (1..=p.root_system().rank())
        .map(|i| {
            let r = raw[i - 1];
            if p.crossed().contains(&i) {
                r
            } else {
                r.rem_euclid(2)
            }
        })
        .collect()
}

fn total(n: usize, v: Vec<CohomologyClass>) -> CohomologyClass {
    v.iter().fold(CohomologyClass::zero(n), |a, c| &a + c)
}

fn levi_dimension(p: &ParabolicSubgroup, lambda: &[i64]) -> Rational {
    let l = p.root_system().from_fundamental_ints(lambda).unwrap();
    let rho = p.levi_rho();
    let shifted = &l + &rho;
    p.positive_roots().iter().fold(int(1), |acc, a| acc * shifted.dot(a) / rho.dot(a))
}

/// Hypersurface of degree `deg` in `P^n`.
fn hypersurface(n: usize, deg: i64) -> CompleteIntersection {
    let base = space(&format!("A{n}[1]"));
    let mut hw = vec![0; n];
    hw[0] = deg;
    CompleteIntersection::new(EquivariantVectorBundle::irreducible(&base, &hw).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn whitney_sum(b in 0..BASES.len(), r1 in prop::collection::vec(-2i64..=2, 4), r2 in prop::collection::vec(-2i64..=2, 4)) {
        let base = space(BASES[b]);
        let p = base.parabolic();
        let e = EquivariantVectorBundle::irreducible(&base, &dominant(p, &r1)).unwrap();
        let f = EquivariantVectorBundle::irreducible(&base, &dominant(p, &r2)).unwrap();
        let n = base.nvars();
        let lhs = total(n, e.direct_sum(&f).unwrap().chern_classes());
        let rhs = total(n, e.chern_classes()).mul_truncated(&total(n, f.chern_classes()), base.dimension() as u32);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn freudenthal_matches_weyl_dimension(b in 0..BASES.len(), raw in prop::collection::vec(-3i64..=3, 4)) {
        let p: ParabolicSubgroup = BASES[b].parse().unwrap();
        let lambda = dominant(&p, &raw.iter().map(|r| r * 2).collect::<Vec<_>>());
        let mult = p.weight_multiplicities(&lambda).unwrap();
        let dim: u64 = mult.values().sum();
        prop_assert_eq!(int(dim as i64), levi_dimension(&p, &lambda));
        // the highest weight itself has multiplicity one
        let hw = p.root_system().from_fundamental_ints(&lambda).unwrap();
        prop_assert_eq!(mult.get(&hw).copied(), Some(1));
    }

    #[test]
    fn newton_identities(roots in prop::collection::vec(-9i64..=9, 1..=6)) {
        let d = roots.len();
        let xs: Vec<Rational> = roots.iter().map(|&r| int(r)).collect();
        let power: Vec<Rational> = (1..=d)
            .map(|k| xs.iter().fold(int(0), |acc, x| acc + num_traits::pow(x.clone(), k)))
            .collect();
        // e_k directly from the roots
        let mut e = vec![int(1)];
        for x in &xs {
            let mut next = e.clone();
            next.push(int(0));
            for k in 1..next.len() {
                next[k] = &e.get(k).cloned().unwrap_or_else(|| int(0)) + &(&e[k - 1] * x);
            }
            e = next;
        }
        let from_power: Vec<Rational> = elementary_in_power_sums(d).iter().map(|f| f.eval(&power)).collect();
        prop_assert_eq!(&from_power[..], &e[1..]);
        let back: Vec<Rational> = power_sums_in_elementary(d).iter().map(|f| f.eval(&e[1..])).collect();
        prop_assert_eq!(back, power);
    }

    #[test]
    fn localization_is_constant(b in 0..BASES.len(), seeds in prop::collection::vec(-1000i64..=1000, 16), split in 1usize..4) {
        let m = space(BASES[b]);
        let d = m.dimension();
        let c = m.chern_classes();
        let k = split.min(d);
        let f = &c[k].pow(1) * &c[1].pow((d - k) as u32);
        let p1: Vec<Rational> = seeds[..m.nvars()].iter().map(|&s| int(s)).collect();
        let p2: Vec<Rational> = seeds[8..8 + m.nvars()].iter().map(|&s| int(s + 7)).collect();
        if let (Some(a), Some(b)) = (m.localization_sum(&f, &p1), m.localization_sum(&f, &p2)) {
            prop_assert_eq!(&a, &b);
            prop_assert!(a.is_integer());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn chi_y_duality(n in 2usize..=4, deg in 1i64..=6) {
        let x = hypersurface(n, deg);
        let chi = chi_y(&x, Mode::Exact).unwrap();
        let d = x.dimension() as i64;
        prop_assert_eq!(chi.substitute_power(-1).shift(d), chi);
    }

    #[test]
    fn y_equals_one_gives_euler_number(n in 2usize..=4, deg in 1i64..=6) {
        let x = hypersurface(n, deg);
        let g = elliptic_genus(&x, 2, Mode::Exact).unwrap();
        let euler = chern_number(&x, &[x.dimension()], Mode::Exact).unwrap();
        prop_assert_eq!(g.coeff(0).eval_one(), euler);
        for q in 1..=g.order() {
            prop_assert_eq!(g.coeff(q).eval_one(), int(0));
        }
    }
}

#[test]
fn exact_and_float_agree() {
    for s in ["A3[2]", "B3[1]", "G2[1,2]"] {
        let m = space(s);
        let top = m.chern_classes()[m.dimension()].clone();
        assert_eq!(m.integrate(&top, Mode::Exact).unwrap(), int(m.euler_characteristic() as i64));
        assert_eq!(m.integrate(&top, Mode::Float).unwrap(), int(m.euler_characteristic() as i64));
    }
}
