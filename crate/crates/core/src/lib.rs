//! Cohomology of complements of toric arrangements attached to root systems,
//! computed as representations of the Weyl group.

pub mod characters;
pub mod cohomology;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod poset;
pub mod roots;
pub mod weyl;

pub use error::{Error, ErrorKind, Result};
pub use poly::Poly;
pub use roots::{CartanType, Family, RootSystem};
pub use weyl::{ConjugacyClasses, WeylGroup};
