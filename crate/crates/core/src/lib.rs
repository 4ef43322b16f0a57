//! Exact biset algebra for small finite groups: Burnside rings, biset
//! composition, Green biset functors and their shifts, the category of
//! A-morphisms, commutants, centers and idempotent block decompositions.

pub mod bisets;
pub mod burnside;
pub mod center;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod green;
pub mod groups;
pub mod linalg;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
