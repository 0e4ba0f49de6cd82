//! Symmetric and antisymmetric "test functions" for small quantum circuits.
//!
//! An admissible function `f` on `n` variables is an affine parity function.
//! Sandwiching its oracle `U_f` between two Hadamard layers maps every basis
//! state `±|x, 1⟩` to another basis state `±|y, 1⟩`, so a correct machine
//! reports the predicted output with probability one.
//!
//! - [`boolfunc`]: truth tables, the generator, admissibility, parity forms.
//! - [`statevec`]: real state vectors, Hadamard layers, basis detection.
//! - [`oracle`]: `U_f` as a pair swap and as an explicit matrix.
//! - [`pipeline`]: simulation, analytic prediction, inverse problem, faults.
//! - [`circuits`]: H/X/CNOT gate lists and equivalence checking.
//! - [`charts`]: function catalogs and input/output mapping charts.
//!
//! ```
//! use qtest_core::{boolfunc, pipeline, BasisKet};
//!
//! let f = boolfunc::parse_function("$3333").unwrap();
//! let input: BasisKet = "+00001".parse().unwrap();
//! let out = pipeline::run(&f, &input).unwrap();
//! assert_eq!(out.output.to_string(), "+00101");
//! ```

pub mod bits;
pub mod boolfunc;
pub mod charts;
pub mod circuits;
mod error;
pub mod oracle;
pub mod pipeline;
pub mod statevec;

pub use bits::{BitString, Sign};
pub use boolfunc::{FunctionClass, ParityForm, TruthTable};
pub use charts::{FunctionCatalog, MappingChart};
pub use circuits::{Circuit, Gate};
pub use error::{Error, Result};
pub use oracle::QuantumOracle;
pub use pipeline::{FaultSpec, Layer, PipelineResult, VerifyReport};
pub use statevec::{BasisKet, StateVector};
