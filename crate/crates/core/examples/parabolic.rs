//! Crossed Dynkin diagrams, Levi data and Levi weight multiplicities.

use ellgenus::error::Error;
use ellgenus::roots::ParabolicSubgroup;

fn main() -> Result<(), Error> {
    for name in ["A4[3]", "F4[2]", "D5[5]", "E6[1,6]", "G2[1]"] {
        let p: ParabolicSubgroup = name.parse()?;
        println!("{}", p.dynkin_diagram());
        println!(
            "|W| = {}, |W_L| = {}, fixed points = {}\n",
            p.root_system().weyl_group_order(),
            p.levi_weyl_order(),
            p.min_coset_reps().len()
        );
    }

    let p: ParabolicSubgroup = "A4[3]".parse()?;
    let show = |ws: &[ellgenus::roots::Weight]| ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    println!("Levi simple roots:   {}", show(&p.simple_roots()));
    println!("Levi positive roots: {}", show(p.positive_roots()));
    for lambda in [[1, 0, 3, 1], [0, 1, -1, 0]] {
        println!("weights of {lambda:?}:");
        for (w, m) in p.weight_multiplicities(&lambda)? {
            println!("  {w}: {m}");
        }
    }
    Ok(())
}
