//! Finite monoids, finite right acts over them, congruences on acts, and
//! certificates for the separability conditions RF, WSS, SSS and CS.

pub mod act;
pub mod catalog;
pub mod congruence;
pub mod error;
pub mod families;
pub mod monoid;
pub mod partition;
pub mod separability;
pub mod text;

pub use act::{ActHomomorphism, FiniteAct, PartialAct};
pub use congruence::{Congruence, SearchLimits};
pub use error::{Error, Result};
pub use monoid::FiniteMonoid;
pub use partition::Partition;
