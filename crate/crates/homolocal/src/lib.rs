//! Exact homological invariants of truncated graded rings over prime fields.

pub mod complex;
pub mod criteria;
pub mod error;
pub mod field;
pub mod input;
pub mod koszul;
pub mod matrix;
pub mod module;
pub mod phi;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod ring;
pub mod series;
pub mod tasks;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use module::GradedModule;
pub use ring::{GradedRing, RingElement};
pub use series::{TruncatedSeries, ZPoly};
