//! The quintic threefold, following the walkthrough: P^4, the bundle O(5), its zero locus.

use ellgenus::bundles::EquivariantVectorBundle;
use ellgenus::ci::{chern_number, CompleteIntersection, Manifold};
use ellgenus::error::Error;
use ellgenus::genus::elliptic_genus;
use ellgenus::homog::{HomogeneousSpace, Mode};

fn main() -> Result<(), Error> {
    let p4: HomogeneousSpace = "A4[1]".parse()?;
    println!("{}\n", p4.parabolic().dynkin_diagram());

    let o5 = EquivariantVectorBundle::irreducible(&p4, &[5, 0, 0, 0])?;
    let quintic = CompleteIntersection::new(o5)?;
    println!("dimension     {}", quintic.dimension());
    println!("c1            {}", quintic.chern_classes()[1]);
    println!("Euler number  {}", chern_number(&quintic, &[3], Mode::Exact)?);
    println!("y^(3/2) * Ell {}", elliptic_genus(&quintic, 2, Mode::Exact)?);
    Ok(())
}
