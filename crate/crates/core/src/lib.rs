pub mod arrangement;
pub mod cli;
pub mod critical;
pub mod csm;
pub mod exactmath;
pub mod newton;
pub mod polytope;
