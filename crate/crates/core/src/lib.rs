pub mod families;
pub mod graph;
pub mod io;
pub mod pregraph;
pub mod symmetry;
pub mod verify;
pub mod voltage;
