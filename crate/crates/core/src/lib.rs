//! Stabilizer codes over GF(2) through their check matrices.
//!
//! A code on `n` qubits with `n − k` generators is stored as the binary
//! check matrix `H = [H_X | H_Z]`. From it the crate computes syndromes,
//! decides whether the code is degenerate for Pauli errors up to a given
//! weight, finds the minimum distance, and estimates logical error rates
//! under Pauli noise with a minimum-weight lookup decoder.
//!
//! ```
//! use stabcode::{codes, degeneracy, distance};
//!
//! let shor = codes::shor();
//! let report = degeneracy::classify(&shor, 1).unwrap();
//! assert_eq!(report.verdict, degeneracy::Verdict::Degenerate);
//! let d = distance::min_distance(&shor, 9).unwrap();
//! assert_eq!(d.d, distance::Distance::Exact(3));
//! ```

pub mod channel;
pub mod code;
pub mod codefile;
pub mod codes;
pub mod degeneracy;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod gf2;
pub mod pauli;
pub mod standard_form;

pub use code::{validate, CheckMatrix, CssSplit, StabilizerCode, Syndrome, SyndromeMatrices};
pub use error::{Error, Result};
pub use gf2::{BitVector, Gf2Matrix};
pub use pauli::{PauliLetter, PauliOperator, SymplecticVector};
pub use standard_form::{standard_form, StandardForm};
