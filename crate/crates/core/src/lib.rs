pub mod cli;
pub mod commuting;
pub mod groebner;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod shiftfam;
