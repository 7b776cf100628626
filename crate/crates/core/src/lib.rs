pub mod analysis;
pub mod brackets;
pub mod expr;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod random;
pub mod structures;
