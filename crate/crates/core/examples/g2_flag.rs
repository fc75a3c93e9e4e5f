//! A Calabi-Yau threefold in the full flag manifold of G2, cut out by a section of
//! E(2,0) + E(0,1) + E(0,1).

use std::time::Instant;

use ellgenus::bundles::EquivariantVectorBundle;
use ellgenus::ci::{chern_number, CompleteIntersection};
use ellgenus::error::Error;
use ellgenus::genus::elliptic_genus;
use ellgenus::homog::{HomogeneousSpace, Mode};

fn main() -> Result<(), Error> {
    let flag: HomogeneousSpace = "G2[1,2]".parse()?;
    println!("{}\n", flag.parabolic().dynkin_diagram());
    println!("dim G/B = {}, fixed points = {}", flag.dimension(), flag.euler_characteristic());

    let e = EquivariantVectorBundle::completely_reducible(&flag, &[vec![2, 0], vec![0, 1], vec![0, 1]])?;
    let y = CompleteIntersection::new(e)?;
    println!("Euler number  {}", chern_number(&y, &[3], Mode::Exact)?);

    let start = Instant::now();
    let ell = elliptic_genus(&y, 3, Mode::Exact)?;
    println!("y^(3/2) * Ell {ell}");
    println!("({:.2?})", start.elapsed());
    Ok(())
}
