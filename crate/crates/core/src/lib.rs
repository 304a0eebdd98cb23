//! Exact left Ore and denominator-set computations on finite rings.

pub mod analysis;
pub mod bitset;
pub mod config;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod ideals;
pub mod ore;
pub mod report;
pub mod ring;
pub mod theorems;

pub use bitset::ElementSet;
pub use config::Bounds;
pub use error::{Error, Result};
pub use ring::{build_ring, FiniteRing, RingMap, Side};
