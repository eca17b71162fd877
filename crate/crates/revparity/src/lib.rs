//! Turn irreversible or reversible Boolean specifications into
//! parity-preserving reversible specifications with a provably minimal
//! number of extra lines.
//!
//! A reversible circuit computes a bijection, so a specification with
//! duplicate output rows needs extra garbage outputs to become reversible.
//! If, additionally, every row's output parity is made to equal its input
//! parity, any single bit flip anywhere on the outputs is detectable by a
//! plain parity check. This crate derives such specifications mechanically:
//!
//! * [`ParityProfile`] groups table rows by output pattern and parity
//!   class; [`min_extra_bits`] computes the smallest number of extra
//!   output bits that can work.
//! * [`convert_irreversible`] appends exactly that many columns (an
//!   occurrence index per (pattern, parity class) group plus one parity
//!   bit) and the matching constant-0 ancilla inputs, producing a square,
//!   injective, parity-preserving table.
//! * [`convert_reversible`] handles bijections with at most one extra
//!   line, and [`complete_permutation`] extends a partial result to a
//!   full permutation of the widened input space.
//! * [`count_parity_preserving`] gives the exact number (2^{n−1}!)² of
//!   n-variable parity-preserving reversible functions, with a
//!   brute-force [`enumerate_parity_preserving`] oracle for n ≤ 3.
//! * [`pla`] reads and writes the PLA exchange format; [`bench`] runs
//!   whole directories of benchmarks and checks the O((n+m)·2ⁿ) runtime
//!   scaling empirically.
//!
//! # Quick start
//!
//! ```
//! use revparity::{convert_irreversible, verify, TruthTable};
//!
//! // The 2-bit half adder: inputs a b, outputs sum carry.
//! let half_adder = TruthTable::from_values(2, 2, &[0b00, 0b10, 0b10, 0b01])?;
//! let converted = convert_irreversible(&half_adder);
//!
//! assert_eq!(converted.garbage(), 2); // two extra output columns
//! assert_eq!(converted.ancilla(), 2); // two constant-0 inputs
//! assert!(verify(&converted).passed());
//! # Ok::<(), revparity::ModelError>(())
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p revparity --example half_adder       # flagship conversion
//! cargo run -p revparity --example full_adder       # parity-bit mechanics
//! cargo run -p revparity --example reversible_inputs # 0-vs-1 extra line
//! cargo run -p revparity --example counting         # exact function counts
//! cargo run -p revparity --example weight_functions # rd53..rd20_5 table
//! cargo run -p revparity --example completion       # full permutation
//! cargo run -p revparity --example fault_detection  # bit-flip coverage
//! cargo run -p revparity --example pla_roundtrip    # file format tour
//! cargo run -p revparity --example scaling          # runtime doubling
//! cargo run -p revparity --example batch_report     # CSV over many inputs
//! ```
//!
//! The `revparity` binary wraps the same pipeline for shell use; see the
//! README for the subcommands.

pub mod bench;
pub mod convert;
pub mod generate;
pub mod model;
pub mod parity;
pub mod pla;
pub mod report;

pub use convert::{
    complete_permutation, convert, convert_irreversible, convert_reversible, verify,
    AnnotatedTable, CompletionState, ConversionPlan, ConvertError, ParityReport,
};
pub use generate::{rd_generate, rd_name, rd_output_count};
pub use model::{BitRow, ModelError, ParityClass, TruthTable};
pub use parity::{
    bitflip_detectable, count_parity_preserving, enumerate_parity_preserving, min_extra_bits,
    single_bitflip_detectable, ParityError, ParityProfile, PatternGroup,
};
pub use pla::{
    parse_pla, read_annotated, write_pla, write_table_pla, ParseOptions, ParseWarning, ParsedPla,
    PlaDocument, PlaError,
};
pub use report::{write_csv, write_report, ConversionReport, ReportFormat, CSV_HEADER};
