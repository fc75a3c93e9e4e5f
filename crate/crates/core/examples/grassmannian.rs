//! Gr(3,5) as A4 with node 3 crossed: Chern classes and integrals in both modes.

use ellgenus::error::Error;
use ellgenus::homog::{HomogeneousSpace, Mode};

fn main() -> Result<(), Error> {
    let gr: HomogeneousSpace = "A4[3]".parse()?;
    println!("dimension {}", gr.dimension());
    let c = gr.chern_classes();
    for (i, ci) in c.iter().enumerate().take(3) {
        println!("c{i} = {ci}");
    }
    println!("int c6          = {}", gr.integrate(&c[6], Mode::Exact)?);
    let c1_6 = c[1].pow(6);
    println!("int c1^6 exact  = {}", gr.integrate(&c1_6, Mode::Exact)?);
    println!("int c1^6 float  = {}", gr.integrate(&c1_6, Mode::Float)?);
    println!("int td6         = {}", gr.integrate(&gr.todd_classes()[6], Mode::Exact)?);
    Ok(())
}
