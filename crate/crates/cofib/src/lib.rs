//! Finite posets, the chain-poset functor, colimits, and machine-checked
//! cofibrancy certificates for the Thomason model structure on posets.

pub mod canonical;
pub mod certfile;
pub mod certificate;
pub mod colimit;
pub mod enumerate;
pub mod error;
pub mod functors;
pub mod poset;
pub mod shapes;
pub mod suite;
pub mod text;
pub mod witness;

pub use error::{Error, Result};
pub use poset::{compose, is_monotone, MonotoneMap, Poset};
