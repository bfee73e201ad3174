//! Quadratic words over free groups: surface classification, normalization
//! to standard forms with machine-checked size certificates, the elimination
//! process on evaluated pairs, van Kampen diagram folding and unfolding, and
//! an end-to-end solution-shortening pipeline with certified length bounds.

pub mod endo;
pub mod error;
pub mod symbol;
pub mod word;

pub use endo::{CoefficientMap, ElementaryAuto, ElementaryProduct, Endomorphism, Relabel};
pub use error::{ParseError, QeqError};
pub use symbol::{Letter, Sign, Sort, Symbol};
pub use word::{is_conjugate, occurrence_count, parse_word, CyclicWord, Word};
