pub mod bundles;
pub mod ci;
pub mod cli;
pub mod error;
pub mod genus;
pub mod homog;
pub mod jacobi;
pub mod poly;
pub mod qseries;
pub mod rational;
pub mod roots;
