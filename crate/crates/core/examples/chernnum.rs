//! Chern numbers of Gr(3,5) and the universal elliptic genus of a threefold.

use ellgenus::ci::chern_number;
use ellgenus::error::Error;
use ellgenus::genus::elliptic_genus_chernnum;
use ellgenus::homog::{HomogeneousSpace, Mode};

fn main() -> Result<(), Error> {
    let gr: HomogeneousSpace = "A4[3]".parse()?;
    for degrees in [vec![1; 6], vec![1, 2, 3], vec![6], vec![3, 4]] {
        println!("{degrees:?} -> {}", chern_number(&gr, &degrees, Mode::Exact)?);
    }
    println!("\n{}", elliptic_genus_chernnum(3, 1));
    Ok(())
}
