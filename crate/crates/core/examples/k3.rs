//! Quartic K3 surface in P^3: Euler number, chi_y genus and elliptic genus.

use ellgenus::bundles::EquivariantVectorBundle;
use ellgenus::ci::{CompleteIntersection, Manifold};
use ellgenus::error::Error;
use ellgenus::genus::{chi_y, elliptic_genus};
use ellgenus::homog::{HomogeneousSpace, Mode};

fn main() -> Result<(), Error> {
    let p3: HomogeneousSpace = "A3[1]".parse()?;
    let quartic = EquivariantVectorBundle::irreducible(&p3, &[4, 0, 0])?;
    let k3 = CompleteIntersection::new(quartic)?;

    let c = k3.chern_classes();
    println!("dimension  {}", k3.dimension());
    println!("int c2     {}", k3.integrate(&c[2], Mode::Float)?);
    println!("chi_y      {}", chi_y(&k3, Mode::Exact)?);
    println!("y * Ell    {}", elliptic_genus(&k3, 3, Mode::Exact)?);
    Ok(())
}
