pub mod error;
pub mod fano;
pub mod lattice;
pub mod picard;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod snc;
pub mod suites;

pub use error::{Error, Result};
