//! Kashiwara-Nakashima tableau crystals of types A, B, C and D.
//!
//! The crate provides the tableau model of the crystals `B(λ)`, the column splitting maps
//! `φ` / `ψ`, the tableau maps `Φ` / `Ψ`, jeu de taquin, and enumeration of the crystals
//! counted by Littlewood-Richardson coefficients, together with the branching identity
//! relating them in the stable range.

pub mod admissibility;
pub mod cli;
pub mod column_maps;
pub mod crystal;
pub mod error;
pub mod lr;
pub mod partition;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::{Partition, ShapeStep};
pub use tableau::{Alphabet, Column, LieType, Letter, Tableau};
