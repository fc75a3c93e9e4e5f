//! Bases of weak Jacobi forms of weight 0 and index 3, and of weight 2 and index 5/2.

use ellgenus::jacobi::{basis_half_integral, basis_integral};

fn main() -> Result<(), ellgenus::error::Error> {
    println!("basis_integral(0, 3):");
    for el in basis_integral(0, 3, 6)? {
        println!("  {:<24} {}", el.label(), el.value);
    }
    println!("basis_half_integral(2, 5), multiplied by y^(1/2):");
    for el in basis_half_integral(2, 5, 6)? {
        println!("  {:<24} {}", el.label(), el.value);
    }
    Ok(())
}
