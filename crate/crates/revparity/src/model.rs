//! Bit-level data model for Boolean specifications.
//!
//! A [`TruthTable`] is a complete single-output-row-per-minterm description
//! of an n-input, m-output Boolean function: exactly 2ⁿ output rows, where
//! row i belongs to the input minterm with unsigned value i. Bit order is
//! most-significant-bit first, i.e. the leftmost table column is the highest
//! bit of the minterm value.
//!
//! The elementary predicates everything else builds on live here too:
//! row parity, reversibility (bijectivity) and parity preservation.

use std::fmt;

use thiserror::Error;

/// Hard ceiling on table inputs; 2ⁿ rows must stay addressable in memory.
pub const MAX_SUPPORTED_INPUTS: usize = 30;

/// Widest representable row. Rows are packed into a `u64` value.
pub const MAX_ROW_WIDTH: usize = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    /// Parity preservation is only defined for equal-width specifications.
    #[error("width mismatch: {inputs} inputs vs {outputs} outputs")]
    WidthMismatch { inputs: usize, outputs: usize },
    #[error("a table needs at least one input variable")]
    ZeroInputs,
    #[error("{inputs} inputs exceed the supported maximum of {max}")]
    TooManyInputs { inputs: usize, max: usize },
    #[error("expected {expected} output rows, got {got}")]
    BadRowCount { expected: usize, got: usize },
    #[error("output row {index} has width {got}, expected {expected}")]
    BadRowWidth {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("invalid bit character {0:?}")]
    InvalidBit(char),
    #[error("row width {width} exceeds the supported maximum of {max}")]
    RowTooWide { width: usize, max: usize },
    #[error("value {value} does not fit in {width} bits")]
    ValueTooWide { value: u64, width: usize },
}

/// An ordered sequence of bits; the leftmost bit is the most significant
/// one and corresponds to the leftmost table column.
///
/// Rows compare equal iff both width and every bit position agree, so the
/// 2-bit row `01` differs from the 3-bit row `001`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitRow {
    width: usize,
    value: u64,
}

impl BitRow {
    /// Pack `value` into a row of `width` bits.
    pub fn new(value: u64, width: usize) -> Result<Self, ModelError> {
        if width > MAX_ROW_WIDTH {
            return Err(ModelError::RowTooWide {
                width,
                max: MAX_ROW_WIDTH,
            });
        }
        if width < 64 && value >> width != 0 {
            return Err(ModelError::ValueTooWide { value, width });
        }
        Ok(BitRow { width, value })
    }

    /// Parse a row from a binary string such as `"101"`. The empty string
    /// is the legal zero-width row.
    pub fn parse(s: &str) -> Result<Self, ModelError> {
        let mut value = 0u64;
        let mut width = 0usize;
        for c in s.chars() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                other => return Err(ModelError::InvalidBit(other)),
            };
            if width == MAX_ROW_WIDTH {
                return Err(ModelError::RowTooWide {
                    width: width + 1,
                    max: MAX_ROW_WIDTH,
                });
            }
            value = (value << 1) | bit;
            width += 1;
        }
        Ok(BitRow { width, value })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The row read as an unsigned integer, leftmost bit most significant.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_empty(&self) -> bool {
        self.width == 0
    }

    /// Bit at position `pos`, counting from the left (column order).
    pub fn bit(&self, pos: usize) -> u64 {
        assert!(pos < self.width, "bit position out of range");
        (self.value >> (self.width - 1 - pos)) & 1
    }

    /// The row with the bit at column `pos` flipped.
    pub fn flip(&self, pos: usize) -> Self {
        assert!(pos < self.width, "bit position out of range");
        BitRow {
            width: self.width,
            value: self.value ^ (1 << (self.width - 1 - pos)),
        }
    }

    /// This row followed by `other` (other occupies the low bits).
    pub fn concat(&self, other: &BitRow) -> Result<Self, ModelError> {
        let width = self.width + other.width;
        if width > MAX_ROW_WIDTH {
            return Err(ModelError::RowTooWide {
                width,
                max: MAX_ROW_WIDTH,
            });
        }
        Ok(BitRow {
            width,
            value: (self.value << other.width) | other.value,
        })
    }

    /// XOR of all bits: `true` iff the row holds an odd number of ones.
    /// The empty row has even parity.
    pub fn parity(&self) -> bool {
        self.value.count_ones() % 2 == 1
    }

    pub fn count_ones(&self) -> u32 {
        self.value.count_ones()
    }

    /// Iterate bits left to right.
    pub fn bits(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.width).map(move |pos| self.bit(pos))
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in 0..self.width {
            write!(f, "{}", self.bit(pos))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow(\"{self}\")")
    }
}

/// Whether the parity of an input row agrees with the parity of the output
/// row it maps to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Match,
    Mismatch,
}

impl ParityClass {
    pub fn of(input_parity: bool, output_parity: bool) -> Self {
        if input_parity == output_parity {
            ParityClass::Match
        } else {
            ParityClass::Mismatch
        }
    }

    pub fn other(&self) -> Self {
        match self {
            ParityClass::Match => ParityClass::Mismatch,
            ParityClass::Mismatch => ParityClass::Match,
        }
    }

    /// 0 for `Match`, 1 for `Mismatch`; doubles as an array index.
    pub fn index(&self) -> usize {
        match self {
            ParityClass::Match => 0,
            ParityClass::Mismatch => 1,
        }
    }
}

/// A complete truth table: 2ⁿ output rows of width m, one per input minterm
/// in ascending minterm order.
///
/// Tables are immutable after construction and safe to share between
/// threads.
#[derive(Clone, PartialEq, Eq)]
pub struct TruthTable {
    num_inputs: usize,
    num_outputs: usize,
    outputs: Vec<BitRow>,
}

impl TruthTable {
    /// Build a table from its output rows. Rejects zero-input tables,
    /// wrong row counts and rows of the wrong width.
    pub fn new(
        num_inputs: usize,
        num_outputs: usize,
        outputs: Vec<BitRow>,
    ) -> Result<Self, ModelError> {
        if num_inputs == 0 {
            return Err(ModelError::ZeroInputs);
        }
        if num_inputs > MAX_SUPPORTED_INPUTS {
            return Err(ModelError::TooManyInputs {
                inputs: num_inputs,
                max: MAX_SUPPORTED_INPUTS,
            });
        }
        if num_outputs > MAX_ROW_WIDTH {
            return Err(ModelError::RowTooWide {
                width: num_outputs,
                max: MAX_ROW_WIDTH,
            });
        }
        let expected = 1usize << num_inputs;
        if outputs.len() != expected {
            return Err(ModelError::BadRowCount {
                expected,
                got: outputs.len(),
            });
        }
        for (index, row) in outputs.iter().enumerate() {
            if row.width() != num_outputs {
                return Err(ModelError::BadRowWidth {
                    index,
                    expected: num_outputs,
                    got: row.width(),
                });
            }
        }
        Ok(TruthTable {
            num_inputs,
            num_outputs,
            outputs,
        })
    }

    /// Build a table by evaluating `f` on every minterm value.
    pub fn from_fn(
        num_inputs: usize,
        num_outputs: usize,
        f: impl Fn(u64) -> u64,
    ) -> Result<Self, ModelError> {
        if num_inputs == 0 {
            return Err(ModelError::ZeroInputs);
        }
        if num_inputs > MAX_SUPPORTED_INPUTS {
            return Err(ModelError::TooManyInputs {
                inputs: num_inputs,
                max: MAX_SUPPORTED_INPUTS,
            });
        }
        let rows = 1usize << num_inputs;
        let mut outputs = Vec::with_capacity(rows);
        for minterm in 0..rows as u64 {
            outputs.push(BitRow::new(f(minterm), num_outputs)?);
        }
        TruthTable::new(num_inputs, num_outputs, outputs)
    }

    /// Build a table from raw output values, row i holding `values[i]`.
    pub fn from_values(
        num_inputs: usize,
        num_outputs: usize,
        values: &[u64],
    ) -> Result<Self, ModelError> {
        let outputs = values
            .iter()
            .map(|&v| BitRow::new(v, num_outputs))
            .collect::<Result<Vec<_>, _>>()?;
        TruthTable::new(num_inputs, num_outputs, outputs)
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn num_outputs(&self) -> usize {
        self.num_outputs
    }

    /// Number of minterms, 2ⁿ.
    pub fn row_count(&self) -> usize {
        self.outputs.len()
    }

    /// The input minterm with value `minterm`, rendered as an n-bit row.
    pub fn input_row(&self, minterm: u64) -> BitRow {
        debug_assert!((minterm as usize) < self.row_count());
        BitRow {
            width: self.num_inputs,
            value: minterm,
        }
    }

    pub fn output(&self, minterm: u64) -> BitRow {
        self.outputs[minterm as usize]
    }

    pub fn output_value(&self, minterm: u64) -> u64 {
        self.outputs[minterm as usize].value
    }

    /// Iterate `(input row, output row)` pairs in ascending minterm order.
    pub fn rows(&self) -> impl Iterator<Item = (BitRow, BitRow)> + '_ {
        self.outputs
            .iter()
            .enumerate()
            .map(move |(i, out)| (self.input_row(i as u64), *out))
    }

    pub fn is_square(&self) -> bool {
        self.num_inputs == self.num_outputs
    }

    /// True iff the table is a bijection: n = m and the output rows are
    /// pairwise distinct (a permutation of {0, …, 2ⁿ−1}).
    pub fn is_reversible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut seen = vec![false; self.row_count()];
        for row in &self.outputs {
            let v = row.value() as usize;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// True iff every minterm's parity equals its output row's parity.
    ///
    /// Only defined for square tables; rejects others with
    /// [`ModelError::WidthMismatch`].
    pub fn is_parity_preserving(&self) -> Result<bool, ModelError> {
        if !self.is_square() {
            return Err(ModelError::WidthMismatch {
                inputs: self.num_inputs,
                outputs: self.num_outputs,
            });
        }
        Ok(self
            .rows()
            .all(|(input, output)| input.parity() == output.parity()))
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TruthTable {}x{} [", self.num_inputs, self.num_outputs)?;
        for (input, output) in self.rows() {
            writeln!(f, "  {input} -> {output}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, m: usize, values: &[u64]) -> TruthTable {
        TruthTable::from_values(n, m, values).unwrap()
    }

    #[test]
    fn parity_of_rows() {
        assert!(!BitRow::parse("101").unwrap().parity());
        assert!(BitRow::parse("01").unwrap().parity());
        assert!(!BitRow::parse("").unwrap().parity());
    }

    #[test]
    fn single_flip_always_toggles_parity() {
        // Exhaustive for small widths.
        for width in 0..=12usize {
            for value in 0..(1u64 << width) {
                let row = BitRow::new(value, width).unwrap();
                for pos in 0..width {
                    assert_ne!(row.flip(pos).parity(), row.parity());
                }
            }
        }
    }

    #[test]
    fn row_equality_requires_equal_width() {
        assert_ne!(BitRow::parse("01").unwrap(), BitRow::parse("001").unwrap());
        assert_eq!(BitRow::parse("01").unwrap(), BitRow::new(1, 2).unwrap());
    }

    #[test]
    fn row_rendering_is_msb_first() {
        let row = BitRow::new(0b100, 3).unwrap();
        assert_eq!(row.to_string(), "100");
        assert_eq!(row.bit(0), 1);
        assert_eq!(row.bit(2), 0);
        assert_eq!(row.flip(2).to_string(), "101");
    }

    #[test]
    fn half_adder_is_not_reversible() {
        let half_adder = table(2, 2, &[0b00, 0b10, 0b10, 0b01]);
        assert!(!half_adder.is_reversible());
    }

    #[test]
    fn identity_is_reversible_and_parity_preserving() {
        let identity = table(2, 2, &[0, 1, 2, 3]);
        assert!(identity.is_reversible());
        assert!(identity.is_parity_preserving().unwrap());
    }

    #[test]
    fn full_adder_is_not_reversible() {
        // 3 inputs, 2 outputs: not square, and "10" repeats.
        let full_adder = table(3, 2, &[0b00, 0b10, 0b10, 0b01, 0b10, 0b01, 0b01, 0b11]);
        assert!(!full_adder.is_reversible());
        assert_eq!(
            full_adder.is_parity_preserving(),
            Err(ModelError::WidthMismatch {
                inputs: 3,
                outputs: 2
            })
        );
    }

    #[test]
    fn fredkin_preserves_parity() {
        // Controlled swap: first bit controls, swaps the other two.
        let fredkin = table(
            3,
            3,
            &[0b000, 0b001, 0b010, 0b011, 0b100, 0b110, 0b101, 0b111],
        );
        assert!(fredkin.is_reversible());
        assert!(fredkin.is_parity_preserving().unwrap());
    }

    #[test]
    fn cnot_does_not_preserve_parity() {
        let cnot = table(2, 2, &[0b00, 0b01, 0b11, 0b10]);
        assert!(cnot.is_reversible());
        // Input 10 has odd parity, output 11 even.
        assert!(!cnot.is_parity_preserving().unwrap());
    }

    #[test]
    fn reversibility_is_invariant_under_row_relabeling() {
        let reversible = table(2, 2, &[2, 0, 3, 1]);
        let irreversible = table(2, 2, &[2, 0, 2, 1]);
        // Reordering the rows (relabeling minterms) never changes
        // distinctness of the outputs.
        for perm in [[0u64, 1, 2, 3], [3, 2, 1, 0], [1, 3, 0, 2]] {
            for t in [&reversible, &irreversible] {
                let relabeled =
                    TruthTable::from_values(2, 2, &perm.map(|i| t.output_value(i))).unwrap();
                assert_eq!(relabeled.is_reversible(), t.is_reversible());
            }
        }
    }

    #[test]
    fn one_forced_violation_breaks_parity_preservation() {
        let identity = table(2, 2, &[0, 1, 2, 3]);
        assert!(identity.is_parity_preserving().unwrap());
        // Flip one output bit in a single row: that row's parity no
        // longer matches and the table-level predicate must flip too.
        let broken = table(2, 2, &[0, 1, 2 ^ 0b01, 3]);
        assert!(!broken.is_parity_preserving().unwrap());
    }

    #[test]
    fn construction_rejects_malformed_tables() {
        assert_eq!(
            TruthTable::from_values(0, 1, &[]),
            Err(ModelError::ZeroInputs)
        );
        assert_eq!(
            TruthTable::from_values(2, 1, &[0, 1, 0]),
            Err(ModelError::BadRowCount {
                expected: 4,
                got: 3
            })
        );
        assert!(matches!(
            TruthTable::from_values(1, 1, &[2, 0]),
            Err(ModelError::ValueTooWide { .. })
        ));
        let bad_width = vec![BitRow::parse("00").unwrap(), BitRow::parse("0").unwrap()];
        assert_eq!(
            TruthTable::new(1, 2, bad_width),
            Err(ModelError::BadRowWidth {
                index: 1,
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn bitrow_parse_rejects_non_binary() {
        assert_eq!(BitRow::parse("10x"), Err(ModelError::InvalidBit('x')));
    }
}
