//! Text formats: `.quant` carriers, hom files and reports.

mod hom;
mod quant;
mod report;

pub use hom::{parse_hom, write_hom, HomSource};
pub use quant::{parse_quant, write_quant};
pub use report::{render, Format, Record};
