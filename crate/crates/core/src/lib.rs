//! Ideal theory of finite integral commutative quantales.

pub mod classify;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod hom;
pub mod ideals;
pub mod io;
pub mod quantale;
pub mod verify;

pub use classify::{Classification, McSet, RadicalAlgorithm, Verdict};
pub use decompose::{Decomposition, DecompositionKind, UniquenessReport};
pub use error::{Error, Result};
pub use hom::{check_hom, QuantaleHom};
pub use ideals::{contraction, extension, ideal_quantale, Ideal, IdealQuantale};
pub use quantale::{Elem, ElemSet, FiniteQuantale};
