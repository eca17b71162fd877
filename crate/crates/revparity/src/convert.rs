//! Conversion of Boolean specifications into parity-preserving reversible
//! specifications.
//!
//! The construction appends g extra output columns (garbage) and a ancilla
//! input columns so the result is square and injective on all defined rows:
//!
//! * the first g−1 garbage bits carry the row's zero-based occurrence index
//!   within its (output pattern, parity class) group, MSB first;
//! * the last garbage bit is set so the extended output's parity equals the
//!   input row's parity.
//!
//! Within a group the indices differ, and for equal indices across the two
//! parity classes of one pattern the parity bit differs, so extended
//! outputs are globally distinct. g is chosen from the largest
//! single-parity-class group (and never below what width equalization
//! needs), which is the provable minimum; a = m + g − n makes the
//! specification square. A reversible input needs at most one extra line;
//! an already parity-preserving reversible input is returned untouched.

use std::fmt;

use thiserror::Error;

use crate::model::{BitRow, TruthTable};
use crate::parity::{all_flips_detected, ceil_log2, ParityProfile};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConvertError {
    #[error("table is not reversible (not a bijection)")]
    NotReversible,
    #[error("cannot complete: {0}")]
    InfeasibleCompletion(String),
    #[error("{requested} inputs exceed the generator cap of {max}")]
    TooLarge { requested: usize, max: usize },
    #[error("malformed annotated table: {0}")]
    Malformed(String),
}

/// Line budget computed from a parity profile before converting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConversionPlan {
    distinguishing_bits: usize,
    garbage: usize,
    ancilla: usize,
    max_group: usize,
}

impl ConversionPlan {
    /// Derive the plan for an n-input, m-output profile.
    ///
    /// d = max(⌈log₂ max_class⌉, n − m − 1), g = d + 1, a = m + g − n.
    /// An input that is already square, parity-preserving and injective
    /// needs nothing: d = g = a = 0.
    pub fn from_profile(profile: &ParityProfile) -> Self {
        let n = profile.num_inputs();
        let m = profile.num_outputs();
        let max_group = profile.max_class();
        if n == m && profile.mismatch_free() && max_group <= 1 {
            return ConversionPlan {
                distinguishing_bits: 0,
                garbage: 0,
                ancilla: 0,
                max_group,
            };
        }
        // Pigeonhole makes ⌈log₂ max_class⌉ ≥ n − m − 1 already, but the
        // width floor is kept as an explicit guard.
        let width_floor = n.saturating_sub(m + 1);
        let distinguishing_bits = ceil_log2(max_group.max(1)).max(width_floor);
        let garbage = distinguishing_bits + 1;
        let ancilla = m + garbage - n;
        ConversionPlan {
            distinguishing_bits,
            garbage,
            ancilla,
            max_group,
        }
    }

    pub fn of(table: &TruthTable) -> Self {
        ConversionPlan::from_profile(&ParityProfile::of(table))
    }

    /// Garbage bits that encode occurrence indices (g − 1).
    pub fn distinguishing_bits(&self) -> usize {
        self.distinguishing_bits
    }

    /// Total extra output columns, the last one being the parity bit.
    pub fn garbage(&self) -> usize {
        self.garbage
    }

    /// Constant-0 extra input columns.
    pub fn ancilla(&self) -> usize {
        self.ancilla
    }

    /// Largest single-parity-class group size seen in the profile.
    pub fn max_group(&self) -> usize {
        self.max_group
    }

    /// A no-op plan: the input already is what the conversion produces.
    pub fn is_degenerate(&self) -> bool {
        self.garbage == 0
    }
}

/// Whether an annotated table defines rows only for ancilla = 0 or for
/// the whole extended input space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionState {
    Partial,
    Completed,
}

/// A parity-preserving reversible specification with labeled ancilla
/// input columns and garbage output columns.
///
/// Lines are ordered original inputs, then ancilla; original outputs,
/// then garbage (parity bit last). Rows are keyed by the full input
/// value; in the `Partial` state only the 2ⁿ rows with all ancilla bits
/// at 0 are defined.
#[derive(Clone, PartialEq, Eq)]
pub struct AnnotatedTable {
    original_inputs: usize,
    original_outputs: usize,
    ancilla: usize,
    garbage: usize,
    state: CompletionState,
    /// Partial: index = original minterm (full input = minterm << a).
    /// Completed: index = full input value.
    rows: Vec<u64>,
}

impl AnnotatedTable {
    fn check_dimensions(
        original_inputs: usize,
        original_outputs: usize,
        ancilla: usize,
        garbage: usize,
    ) -> Result<(), ConvertError> {
        if original_inputs == 0 {
            return Err(ConvertError::Malformed("zero original inputs".into()));
        }
        if original_inputs + ancilla != original_outputs + garbage {
            return Err(ConvertError::Malformed(format!(
                "not square: {original_inputs}+{ancilla} inputs vs {original_outputs}+{garbage} outputs"
            )));
        }
        if original_inputs + ancilla > crate::model::MAX_SUPPORTED_INPUTS {
            return Err(ConvertError::Malformed(format!(
                "{} total lines exceed the supported maximum of {}",
                original_inputs + ancilla,
                crate::model::MAX_SUPPORTED_INPUTS
            )));
        }
        Ok(())
    }

    fn check_rows(rows: &[u64], expected_len: usize, width: usize) -> Result<(), ConvertError> {
        if rows.len() != expected_len {
            return Err(ConvertError::Malformed(format!(
                "expected {expected_len} rows, got {}",
                rows.len()
            )));
        }
        if let Some(bad) = rows.iter().find(|&&v| width < 64 && v >> width != 0) {
            return Err(ConvertError::Malformed(format!(
                "output value {bad} does not fit in {width} bits"
            )));
        }
        Ok(())
    }

    /// Assemble a partial table from the 2ⁿ extended outputs of the
    /// ancilla-zero rows, in ascending original-minterm order. Only
    /// structural properties are checked here; semantic ones (parity,
    /// injectivity) are the business of [`verify`].
    pub fn from_defined_rows(
        original_inputs: usize,
        original_outputs: usize,
        ancilla: usize,
        garbage: usize,
        rows: Vec<u64>,
    ) -> Result<Self, ConvertError> {
        Self::check_dimensions(original_inputs, original_outputs, ancilla, garbage)?;
        Self::check_rows(&rows, 1 << original_inputs, original_outputs + garbage)?;
        let state = if ancilla == 0 {
            CompletionState::Completed
        } else {
            CompletionState::Partial
        };
        Ok(AnnotatedTable {
            original_inputs,
            original_outputs,
            ancilla,
            garbage,
            state,
            rows,
        })
    }

    /// Assemble a completed table from all 2^L extended outputs.
    pub fn from_completed_rows(
        original_inputs: usize,
        original_outputs: usize,
        ancilla: usize,
        garbage: usize,
        rows: Vec<u64>,
    ) -> Result<Self, ConvertError> {
        Self::check_dimensions(original_inputs, original_outputs, ancilla, garbage)?;
        Self::check_rows(
            &rows,
            1 << (original_inputs + ancilla),
            original_outputs + garbage,
        )?;
        Ok(AnnotatedTable {
            original_inputs,
            original_outputs,
            ancilla,
            garbage,
            state: CompletionState::Completed,
            rows,
        })
    }

    pub fn original_inputs(&self) -> usize {
        self.original_inputs
    }

    pub fn original_outputs(&self) -> usize {
        self.original_outputs
    }

    pub fn ancilla(&self) -> usize {
        self.ancilla
    }

    pub fn garbage(&self) -> usize {
        self.garbage
    }

    pub fn completion_state(&self) -> CompletionState {
        self.state
    }

    pub fn is_completed(&self) -> bool {
        self.state == CompletionState::Completed
    }

    /// Total lines L = n + a = m + g.
    pub fn lines(&self) -> usize {
        self.original_inputs + self.ancilla
    }

    pub fn output_width(&self) -> usize {
        self.original_outputs + self.garbage
    }

    pub fn defined_len(&self) -> usize {
        self.rows.len()
    }

    /// Iterate `(full input value, extended output value)` pairs over the
    /// defined rows, in ascending input order.
    pub fn defined_rows(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let shift = match self.state {
            CompletionState::Partial => self.ancilla,
            CompletionState::Completed => 0,
        };
        self.rows
            .iter()
            .enumerate()
            .map(move |(i, &out)| ((i as u64) << shift, out))
    }

    /// Extended output for a full input value, if that row is defined.
    pub fn output_for(&self, input: u64) -> Option<u64> {
        match self.state {
            CompletionState::Completed => self.rows.get(input as usize).copied(),
            CompletionState::Partial => {
                let mask = (1u64 << self.ancilla) - 1;
                if input & mask != 0 {
                    return None;
                }
                self.rows.get((input >> self.ancilla) as usize).copied()
            }
        }
    }

    pub fn input_bits(&self, input: u64) -> BitRow {
        BitRow::new(input, self.lines()).expect("input fits the line count")
    }

    pub fn output_bits(&self, output: u64) -> BitRow {
        BitRow::new(output, self.output_width()).expect("output fits the line count")
    }

    /// View a completed table as a plain square truth table.
    pub fn to_truth_table(&self) -> Option<TruthTable> {
        if self.state != CompletionState::Completed {
            return None;
        }
        Some(
            TruthTable::from_values(self.lines(), self.output_width(), &self.rows)
                .expect("completed annotated table is structurally valid"),
        )
    }

    /// True iff every simultaneous flip of exactly `flips` output bits on
    /// any defined row is caught by comparing parities.
    pub fn bitflip_detectable(&self, flips: usize) -> bool {
        all_flips_detected(
            self.defined_rows()
                .map(|(input, output)| (input.count_ones() % 2 == 1, output)),
            self.output_width(),
            flips,
        )
    }
}

impl fmt::Debug for AnnotatedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "AnnotatedTable n={} m={} a={} g={} {:?} [",
            self.original_inputs, self.original_outputs, self.ancilla, self.garbage, self.state
        )?;
        for (input, output) in self.defined_rows() {
            writeln!(
                f,
                "  {} -> {}",
                self.input_bits(input),
                self.output_bits(output)
            )?;
        }
        write!(f, "]")
    }
}

/// Verification verdict for an annotated table. Failures are report
/// fields, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    /// Defined output rows are pairwise distinct.
    pub injective: bool,
    /// Every defined row's extended output parity equals its input parity.
    pub parity_preserving: bool,
    /// n + a = m + g.
    pub width_balanced: bool,
    /// Every single output-bit flip on a defined row is parity-detectable.
    pub single_flip_detectable: bool,
    /// For completed tables: the map is a bijection on all 2^L rows.
    pub bijective: Option<bool>,
    /// Input value of the first row violating parity preservation.
    pub first_parity_violation: Option<u64>,
    /// Input values of the first pair of rows sharing an output.
    pub first_duplicate: Option<(u64, u64)>,
}

impl ParityReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.parity_preserving
            && self.width_balanced
            && self.single_flip_detectable
            && self.bijective.unwrap_or(true)
    }
}

/// Check the properties the conversion promises: injectivity of defined
/// rows, row-wise parity preservation, width balance, single-bit-flip
/// detectability, and full bijectivity for completed tables.
pub fn verify(table: &AnnotatedTable) -> ParityReport {
    let width_balanced =
        table.original_inputs() + table.ancilla() == table.original_outputs() + table.garbage();

    let space = 1usize << table.lines();
    let mut seen = vec![false; space];
    let mut injective = true;
    let mut first_duplicate = None;
    let mut parity_preserving = true;
    let mut first_parity_violation = None;
    for (input, output) in table.defined_rows() {
        if seen[output as usize] {
            injective = false;
            if first_duplicate.is_none() {
                let earlier = table
                    .defined_rows()
                    .find(|&(_, o)| o == output)
                    .map(|(i, _)| i)
                    .unwrap_or(input);
                first_duplicate = Some((earlier, input));
            }
        }
        seen[output as usize] = true;
        if (input.count_ones() % 2) != (output.count_ones() % 2) {
            parity_preserving = false;
            if first_parity_violation.is_none() {
                first_parity_violation = Some(input);
            }
        }
    }

    let single_flip_detectable = all_flips_detected(
        table
            .defined_rows()
            .map(|(input, output)| (input.count_ones() % 2 == 1, output)),
        table.output_width(),
        1,
    );

    let bijective = match table.completion_state() {
        CompletionState::Completed => Some(injective && table.defined_len() == space),
        CompletionState::Partial => None,
    };

    ParityReport {
        injective,
        parity_preserving,
        width_balanced,
        single_flip_detectable,
        bijective,
        first_parity_violation,
        first_duplicate,
    }
}

/// Convert any complete specification into a parity-preserving reversible
/// one with the minimal number of extra lines.
///
/// Rows are processed in ascending minterm order. Each row's extended
/// output is its original pattern, followed by its zero-based occurrence
/// index within its (pattern, parity class) group in d bits MSB first,
/// followed by one bit chosen to equalize input and output parity.
/// Reversible inputs are legal and produce singleton groups.
pub fn convert_irreversible(table: &TruthTable) -> AnnotatedTable {
    let profile = ParityProfile::of(table);
    let plan = ConversionPlan::from_profile(&profile);
    convert_with_plan(table, &plan)
}

fn convert_with_plan(table: &TruthTable, plan: &ConversionPlan) -> AnnotatedTable {
    let n = table.num_inputs();
    let m = table.num_outputs();
    let g = plan.garbage();
    let a = plan.ancilla();

    if plan.is_degenerate() {
        let rows = (0..table.row_count() as u64)
            .map(|i| table.output_value(i))
            .collect();
        return AnnotatedTable::from_defined_rows(n, m, 0, 0, rows)
            .expect("degenerate conversion is structurally valid");
    }

    let mut rows = Vec::with_capacity(table.row_count());
    let mut next_index = OccurrenceCounters::new(m);
    for minterm in 0..table.row_count() as u64 {
        let output = table.output(minterm);
        let input_parity = minterm.count_ones() % 2 == 1;
        let class = (input_parity != output.parity()) as usize;
        let index = next_index.bump(output.value(), class);
        debug_assert!(index < (1u64 << plan.distinguishing_bits()));
        let index_parity = index.count_ones() % 2 == 1;
        let parity_bit = (output.parity() ^ index_parity ^ input_parity) as u64;
        rows.push((output.value() << g) | (index << 1) | parity_bit);
    }
    AnnotatedTable::from_defined_rows(n, m, a, g, rows)
        .expect("conversion output is structurally valid")
}

/// Per-(pattern, parity class) occurrence counters; dense for narrow
/// output widths, map-backed otherwise.
enum OccurrenceCounters {
    Dense(Vec<[u64; 2]>),
    Sparse(std::collections::HashMap<u64, [u64; 2]>),
}

impl OccurrenceCounters {
    fn new(output_width: usize) -> Self {
        if output_width <= 20 {
            OccurrenceCounters::Dense(vec![[0; 2]; 1 << output_width])
        } else {
            OccurrenceCounters::Sparse(std::collections::HashMap::new())
        }
    }

    fn bump(&mut self, pattern: u64, class: usize) -> u64 {
        let slot = match self {
            OccurrenceCounters::Dense(v) => &mut v[pattern as usize][class],
            OccurrenceCounters::Sparse(m) => &mut m.entry(pattern).or_default()[class],
        };
        let index = *slot;
        *slot += 1;
        index
    }
}

/// Convert a reversible specification, adding at most one extra line.
///
/// An already parity-preserving input is returned unchanged (a = g = 0);
/// otherwise one constant-0 ancilla input and one garbage output are
/// appended, the garbage bit being 0 on parity-matching rows and 1 on
/// mismatching rows.
pub fn convert_reversible(table: &TruthTable) -> Result<AnnotatedTable, ConvertError> {
    if !table.is_reversible() {
        return Err(ConvertError::NotReversible);
    }
    let n = table.num_inputs();
    if table
        .is_parity_preserving()
        .expect("reversible implies square")
    {
        let rows = (0..table.row_count() as u64)
            .map(|i| table.output_value(i))
            .collect();
        return AnnotatedTable::from_defined_rows(n, n, 0, 0, rows);
    }
    let rows = (0..table.row_count() as u64)
        .map(|minterm| {
            let output = table.output(minterm);
            let mismatch = (output.parity() != (minterm.count_ones() % 2 == 1)) as u64;
            (output.value() << 1) | mismatch
        })
        .collect();
    AnnotatedTable::from_defined_rows(n, n, 1, 1, rows)
}

/// Convert a specification by the cheapest applicable route: the
/// reversible path for square bijections, the general construction
/// otherwise. Both routes agree wherever they overlap.
pub fn convert(table: &TruthTable) -> AnnotatedTable {
    if table.is_reversible() {
        convert_reversible(table).expect("checked reversible")
    } else {
        convert_irreversible(table)
    }
}

/// Extend a partial annotated table to a full parity-preserving bijection
/// on all 2^L rows.
///
/// Every undefined input row (ancilla ≠ 0) is assigned the smallest unused
/// output row of equal parity, scanning inputs in ascending order, so the
/// result is deterministic. Completed tables are returned unchanged.
pub fn complete_permutation(table: &AnnotatedTable) -> Result<AnnotatedTable, ConvertError> {
    if table.is_completed() {
        return Ok(table.clone());
    }
    let lines = table.lines();
    let space = 1usize << lines;
    let ancilla_mask = (1u64 << table.ancilla()) - 1;

    let mut used = vec![false; space];
    let mut used_by_class = [0usize; 2];
    let mut defined_by_class = [0usize; 2];
    for (input, output) in table.defined_rows() {
        if used[output as usize] {
            return Err(ConvertError::InfeasibleCompletion(format!(
                "defined rows are not injective at output {output}"
            )));
        }
        used[output as usize] = true;
        let out_parity = (output.count_ones() % 2) as usize;
        let in_parity = (input.count_ones() % 2) as usize;
        if out_parity != in_parity {
            return Err(ConvertError::InfeasibleCompletion(format!(
                "defined row {input} violates parity preservation"
            )));
        }
        used_by_class[out_parity] += 1;
        defined_by_class[in_parity] += 1;
    }

    // Feasibility: per class, undefined inputs must equal unused outputs.
    for parity in 0..2 {
        let total = space / 2;
        let undefined_inputs = total - defined_by_class[parity];
        let unused_outputs = total - used_by_class[parity];
        if undefined_inputs != unused_outputs {
            return Err(ConvertError::InfeasibleCompletion(format!(
                "parity class {parity}: {undefined_inputs} unassigned inputs vs {unused_outputs} free outputs"
            )));
        }
    }

    let mut rows = vec![0u64; space];
    for (input, output) in table.defined_rows() {
        rows[input as usize] = output;
    }
    let mut cursor = [0u64; 2];
    for input in 0..space as u64 {
        if input & ancilla_mask == 0 {
            continue; // defined row
        }
        let parity = (input.count_ones() % 2) as usize;
        let mut candidate = cursor[parity];
        while (candidate as usize) < space
            && (used[candidate as usize] || (candidate.count_ones() % 2) as usize != parity)
        {
            candidate += 1;
        }
        if candidate as usize >= space {
            return Err(ConvertError::InfeasibleCompletion(
                "ran out of free output rows".into(),
            ));
        }
        used[candidate as usize] = true;
        rows[input as usize] = candidate;
        cursor[parity] = candidate + 1;
    }

    AnnotatedTable::from_completed_rows(
        table.original_inputs(),
        table.original_outputs(),
        table.ancilla(),
        table.garbage(),
        rows,
    )
}
