//! Exhaustive verification of ring-theoretic properties over finite rings
//! given by explicit addition and multiplication tables.

pub mod axioms;
pub mod cli;
pub mod corpus;
pub mod element;
pub mod error;
pub mod expr;
pub mod predicates;
pub mod ring;
pub mod set;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use expr::{IdealSpec, RingExpr};
pub use ring::{build, build_str, Elem, Limits, RingTable};
pub use structure::IdealMask;
