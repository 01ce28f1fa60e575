pub mod cover;
pub mod lattice;
pub mod named;
pub mod octavic;
pub mod poly;
pub mod quartic;
pub mod strata;
pub mod verify;
