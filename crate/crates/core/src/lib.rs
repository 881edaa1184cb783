pub mod catalog;
pub mod cli;
pub mod degen;
pub mod exact;
pub mod invariants;
pub mod linalg;
pub mod superalg;
