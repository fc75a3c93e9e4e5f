//! Homogeneous bundles on P^4: classes of sums, products, symmetric and exterior powers.

use ellgenus::bundles::EquivariantVectorBundle;
use ellgenus::error::Error;
use ellgenus::homog::HomogeneousSpace;
use ellgenus::poly::CohomologyClass;

fn list(classes: &[CohomologyClass]) -> String {
    let parts: Vec<String> = classes.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn main() -> Result<(), Error> {
    let p4: HomogeneousSpace = "A4[1]".parse()?;
    let line = |d: i64| EquivariantVectorBundle::irreducible(&p4, &[d, 0, 0, 0]);
    let (o1, o2, o3) = (line(1)?, line(2)?, line(3)?);

    println!("ch O(1)        {}", list(&o1.chern_character()));
    println!("td O(1)        {}", list(&o1.todd_classes()));
    println!("c O(2)+O(3)    {}", list(&o2.direct_sum(&o3)?.chern_classes()));
    println!("c O(2)*O(3)    {}", list(&o2.tensor_product(&o3)?.chern_classes()));
    println!("c Sym^3 O(2)   {}", list(&o2.symmetric_power(3).chern_classes()));
    println!("c Wedge^2 O(2) {}", list(&o2.wedge_power(2).chern_classes()));

    let e = EquivariantVectorBundle::irreducible(&p4, &[0, 1, 0, 0])?;
    println!("rank of E(0,1,0,0) = {}", e.rank());
    for (i, c) in e.chern_classes().iter().enumerate() {
        println!("  c{i} = {c}");
    }
    println!("tangent   c1 = {}", p4.tangent_bundle().chern_classes()[1]);
    println!("cotangent c1 = {}", p4.cotangent_bundle().chern_classes()[1]);
    Ok(())
}
