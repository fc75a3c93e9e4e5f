//! Results checked against values derived by other means: closed-form Chern numbers of
//! projective space, Hodge numbers, and Schubert calculus.

use ellgenus::bundles::EquivariantVectorBundle;
use ellgenus::ci::{chern_number, CompleteIntersection};
use ellgenus::genus::{chi_y, elliptic_genus, elliptic_genus_chernnum};
use ellgenus::homog::{HomogeneousSpace, Mode};
use ellgenus::qseries::LaurentY;
use ellgenus::rational::{binomial, int, Rational};

fn projective(d: usize) -> HomogeneousSpace {
    format!("A{d}[1]").parse().unwrap()
}

/// `c(T P^d) = (1 + h)^{d+1}` with `int h^d = 1`.
fn projective_chern_number(d: usize, degrees: &[usize]) -> Rational {
    if degrees.iter().sum::<usize>() != d {
        return int(0);
    }
    degrees.iter().fold(int(1), |acc, &k| acc * int(binomial(d + 1, k) as i64))
}

#[test]
fn projective_genus_universal_vs_localized() {
    for d in 1..=4 {
        let pd = projective(d);
        let direct = elliptic_genus(&pd, 2, Mode::Exact).unwrap();
        let universal = elliptic_genus_chernnum(d, 2)
            .evaluate(|mono| {
                let degrees: Vec<usize> = mono
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
                    .collect();
                Ok(projective_chern_number(d, &degrees))
            })
            .unwrap();
        assert_eq!(direct, universal, "P^{d}");
    }
}

#[test]
fn projective_chi_y_is_geometric_sum() {
    // h^{p,p}(P^d) = 1 and nothing else
    for d in 1..=5 {
        let chi = chi_y(&projective(d), Mode::Exact).unwrap();
        assert_eq!(chi, LaurentY::from_ints(&(0..=d as i64).map(|p| (p, 1)).collect::<Vec<_>>()));
    }
}

#[test]
fn projective_line_genus() {
    // q^0 is chi_y; higher coefficients are invariant under y -> 1/y (up to y^1) and vanish at
    // y = 1 since the Euler number only sees q^0
    let g = elliptic_genus(&projective(1), 3, Mode::Exact).unwrap();
    assert_eq!(g.coeff(0).to_string(), "1 + y");
    for n in 1..=3 {
        let c = g.coeff(n);
        assert_eq!(c.substitute_power(-1).shift(1), c);
        assert_eq!(c.eval_one(), int(0));
    }
}

#[test]
fn cubic_surface_hodge_numbers() {
    // h^{1,1} = 7, so chi_y = 1 - (-7) y + y^2 with chi(O) = 1
    let p3 = projective(3);
    let x = CompleteIntersection::new(EquivariantVectorBundle::irreducible(&p3, &[3, 0, 0]).unwrap()).unwrap();
    assert_eq!(chi_y(&x, Mode::Exact).unwrap().to_string(), "1 + 7*y + y^2");
    assert_eq!(chern_number(&x, &[2], Mode::Exact).unwrap(), int(9));
    assert_eq!(chern_number(&x, &[1, 1], Mode::Exact).unwrap(), int(3));
}

#[test]
fn quartic_threefold() {
    // chi = -56; h^{1,1} = 1 and h^{2,1} = 30 give
    // 1 - (30 - 1) y - (30 - 1) y^2 + y^3
    let p4 = projective(4);
    let x = CompleteIntersection::new(EquivariantVectorBundle::irreducible(&p4, &[4, 0, 0, 0]).unwrap()).unwrap();
    assert_eq!(chern_number(&x, &[3], Mode::Exact).unwrap(), int(-56));
    assert_eq!(chi_y(&x, Mode::Exact).unwrap().to_string(), "1 - 29*y - 29*y^2 + y^3");
}

#[test]
fn grassmannian_schubert_degrees() {
    // deg Gr(2,4) = 2, deg Gr(2,5) = 5, deg Gr(2,6) = 14 in the Pluecker embedding
    for (space, dim, degree) in [("A3[2]", 4, 2), ("A4[2]", 6, 5), ("A5[2]", 8, 14)] {
        let gr: HomogeneousSpace = space.parse().unwrap();
        let n = gr.parabolic().root_system().rank() as i64 + 1;
        let c1 = &gr.chern_classes()[1];
        let value = gr.integrate(&c1.pow(dim), Mode::Exact).unwrap();
        // c1 = n * sigma_1
        assert_eq!(value, int(degree) * int(n).pow(dim as i32), "{space}");
    }
}

#[test]
fn euler_numbers_are_weyl_coset_counts() {
    for (space, count) in [("A3[2]", 6), ("B3[1]", 6), ("C3[3]", 8), ("G2[1,2]", 12), ("D4[1]", 8), ("F4[1]", 24)] {
        let m: HomogeneousSpace = space.parse().unwrap();
        assert_eq!(m.euler_characteristic(), count, "{space}");
        if m.dimension() <= 11 {
            assert_eq!(chern_number(&m, &[m.dimension()], Mode::Exact).unwrap(), int(count as i64));
        }
    }
}
