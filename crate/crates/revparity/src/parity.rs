//! Parity-structure analysis of a truth table.
//!
//! [`ParityProfile`] groups the rows of a table by output pattern and, within
//! each group, splits them into two classes: rows whose input parity matches
//! the output pattern's parity and rows whose parity mismatches. The largest
//! class anywhere in the profile drives [`min_extra_bits`], the smallest
//! number of extra output bits that can make the function reversible while
//! preserving parity.
//!
//! The module also carries the exact count of n-variable parity-preserving
//! reversible functions, its brute-force enumeration oracle, and the
//! bit-flip detectability checks that motivate the whole construction.

use itertools::Itertools;
use num_bigint::BigUint;
use thiserror::Error;

use crate::model::{BitRow, ParityClass, TruthTable};

/// Enumeration walks (2^{n-1}!)² complete permutations; beyond this it is
/// out of reach (n = 4 would already visit (8!)² ≈ 1.6·10⁹ functions).
pub const MAX_ENUMERABLE_INPUTS: usize = 3;

/// Output-pattern widths up to this size are tallied in a dense array
/// instead of a map.
const DENSE_PATTERN_LIMIT: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParityError {
    #[error("{inputs} inputs exceed the enumeration limit of {max}")]
    TooLarge { inputs: usize, max: usize },
    #[error("table is not parity preserving")]
    NotParityPreserving,
}

/// The rows sharing one distinct output pattern, split by parity class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternGroup {
    pattern: BitRow,
    match_count: usize,
    mismatch_count: usize,
}

impl PatternGroup {
    pub fn new(pattern: BitRow, match_count: usize, mismatch_count: usize) -> Self {
        PatternGroup {
            pattern,
            match_count,
            mismatch_count,
        }
    }

    pub fn pattern(&self) -> BitRow {
        self.pattern
    }

    /// Rows whose input parity equals the pattern's parity.
    pub fn match_count(&self) -> usize {
        self.match_count
    }

    /// Rows whose input parity differs from the pattern's parity.
    pub fn mismatch_count(&self) -> usize {
        self.mismatch_count
    }

    pub fn count(&self, class: ParityClass) -> usize {
        match class {
            ParityClass::Match => self.match_count,
            ParityClass::Mismatch => self.mismatch_count,
        }
    }

    /// Total rows mapping to this pattern.
    pub fn size(&self) -> usize {
        self.match_count + self.mismatch_count
    }

    /// Size of the bigger of the two parity classes.
    pub fn largest_class(&self) -> usize {
        self.match_count.max(self.mismatch_count)
    }
}

/// Per-pattern parity statistics of a table, groups in ascending pattern
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityProfile {
    num_inputs: usize,
    num_outputs: usize,
    groups: Vec<PatternGroup>,
}

impl ParityProfile {
    /// Tally the table: one group per distinct output row, counting rows
    /// by whether the input minterm's parity equals the output row's.
    pub fn of(table: &TruthTable) -> Self {
        let n = table.num_inputs();
        let m = table.num_outputs();
        let groups = if m <= DENSE_PATTERN_LIMIT {
            let mut counts = vec![[0usize; 2]; 1 << m];
            for minterm in 0..table.row_count() as u64 {
                let output = table.output(minterm);
                let class = ParityClass::of(minterm.count_ones() % 2 == 1, output.parity());
                counts[output.value() as usize][class.index()] += 1;
            }
            counts
                .iter()
                .enumerate()
                .filter(|(_, c)| c[0] + c[1] > 0)
                .map(|(value, c)| {
                    PatternGroup::new(BitRow::new(value as u64, m).unwrap(), c[0], c[1])
                })
                .collect()
        } else {
            let mut counts = std::collections::BTreeMap::<u64, [usize; 2]>::new();
            for minterm in 0..table.row_count() as u64 {
                let output = table.output(minterm);
                let class = ParityClass::of(minterm.count_ones() % 2 == 1, output.parity());
                counts.entry(output.value()).or_default()[class.index()] += 1;
            }
            counts
                .into_iter()
                .map(|(value, c)| PatternGroup::new(BitRow::new(value, m).unwrap(), c[0], c[1]))
                .collect()
        };
        ParityProfile {
            num_inputs: n,
            num_outputs: m,
            groups,
        }
    }

    /// Assemble a profile from raw groups; test and analysis plumbing.
    pub fn from_groups(num_inputs: usize, num_outputs: usize, groups: Vec<PatternGroup>) -> Self {
        debug_assert!(groups.iter().map(|g| g.pattern()).all_unique());
        let mut groups = groups;
        groups.sort_by_key(|g| g.pattern());
        ParityProfile {
            num_inputs,
            num_outputs,
            groups,
        }
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn num_outputs(&self) -> usize {
        self.num_outputs
    }

    pub fn groups(&self) -> &[PatternGroup] {
        &self.groups
    }

    /// Number of distinct output patterns, k.
    pub fn distinct_patterns(&self) -> usize {
        self.groups.len()
    }

    pub fn group(&self, pattern: BitRow) -> Option<&PatternGroup> {
        self.groups
            .binary_search_by_key(&pattern, |g| g.pattern())
            .ok()
            .map(|i| &self.groups[i])
    }

    /// Largest single-parity-class group size anywhere in the profile.
    pub fn max_class(&self) -> usize {
        self.groups
            .iter()
            .map(PatternGroup::largest_class)
            .max()
            .unwrap_or(0)
    }

    /// True iff no row mismatches parity. For square tables this is
    /// exactly parity preservation.
    pub fn mismatch_free(&self) -> bool {
        self.groups.iter().all(|g| g.mismatch_count() == 0)
    }

    pub fn total_rows(&self) -> usize {
        self.groups.iter().map(PatternGroup::size).sum()
    }
}

/// ⌈log₂ x⌉ for x ≥ 1, with ⌈log₂ 1⌉ = 0.
pub(crate) fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    if x <= 1 {
        0
    } else {
        ((x - 1).ilog2() + 1) as usize
    }
}

/// Minimum number of extra output bits needed to make the profiled
/// function reversible and parity-preserving.
///
/// Each parity class of c ≥ 1 rows needs ⌈log₂ c⌉ bits to tell its rows
/// apart plus one shared parity-correction bit; empty classes need
/// nothing. The answer is the maximum over all groups and classes, and
/// equals 1 exactly when every class holds at most one row.
pub fn min_extra_bits(profile: &ParityProfile) -> usize {
    profile
        .groups()
        .iter()
        .flat_map(|g| [g.match_count(), g.mismatch_count()])
        .filter(|&c| c >= 1)
        .map(|c| ceil_log2(c) + 1)
        .max()
        .unwrap_or(0)
}

/// Exact number of n-variable parity-preserving reversible Boolean
/// functions: (2^{n-1}!)².
///
/// The 2^{n-1} odd-parity input rows can map onto the odd-parity output
/// rows in 2^{n-1}! ways, independently of the 2^{n-1}! mappings of the
/// even-parity rows. Values explode quickly; callers get an exact
/// big integer.
pub fn count_parity_preserving(num_inputs: usize) -> BigUint {
    assert!(
        (1..=32).contains(&num_inputs),
        "count is only computable for 1 <= n <= 32"
    );
    let half = 1u64 << (num_inputs - 1);
    let factorial: BigUint = (1..=half).map(BigUint::from).product();
    &factorial * &factorial
}

/// Brute-force oracle for [`count_parity_preserving`]: construct every
/// permutation that maps odd-parity values to odd-parity values and
/// even to even, verify each table is parity preserving, and count them.
///
/// Only feasible for n ≤ 3.
pub fn enumerate_parity_preserving(num_inputs: usize) -> Result<u64, ParityError> {
    if num_inputs == 0 || num_inputs > MAX_ENUMERABLE_INPUTS {
        return Err(ParityError::TooLarge {
            inputs: num_inputs,
            max: MAX_ENUMERABLE_INPUTS,
        });
    }
    let rows = 1u64 << num_inputs;
    let odd: Vec<u64> = (0..rows).filter(|v| v.count_ones() % 2 == 1).collect();
    let even: Vec<u64> = (0..rows).filter(|v| v.count_ones() % 2 == 0).collect();

    let mut count = 0u64;
    for odd_perm in odd.iter().copied().permutations(odd.len()) {
        for even_perm in even.iter().copied().permutations(even.len()) {
            let mut values = vec![0u64; rows as usize];
            for (slot, value) in odd.iter().zip(&odd_perm) {
                values[*slot as usize] = *value;
            }
            for (slot, value) in even.iter().zip(&even_perm) {
                values[*slot as usize] = *value;
            }
            let table = TruthTable::from_values(num_inputs, num_inputs, &values)
                .expect("constructed permutation table is well-formed");
            assert!(
                table.is_parity_preserving().unwrap(),
                "class-respecting permutation must preserve parity"
            );
            count += 1;
        }
    }
    Ok(count)
}

/// True iff flipping any single output bit of any row yields a row whose
/// parity no longer matches the input's.
///
/// Requires a parity-preserving table; for those the check always
/// succeeds, which is the point of the construction; it is kept as an
/// explicit, exhaustive sanity oracle rather than a constant.
pub fn single_bitflip_detectable(table: &TruthTable) -> Result<bool, ParityError> {
    bitflip_detectable(table, 1)
}

/// True iff every simultaneous flip of exactly `flips` output bits is
/// detectable by a parity check on every row. Flipping an even number of
/// bits leaves parity unchanged, so for any parity-preserving table with
/// at least `flips` output bits this returns false for even `flips`.
pub fn bitflip_detectable(table: &TruthTable, flips: usize) -> Result<bool, ParityError> {
    match table.is_parity_preserving() {
        Ok(true) => {}
        _ => return Err(ParityError::NotParityPreserving),
    }
    Ok(all_flips_detected(
        table.rows().map(|(i, o)| (i.parity(), o.value())),
        table.num_outputs(),
        flips,
    ))
}

/// Shared with the converter's verification report: quantifies over every
/// `flips`-bit mask applied to every `(input parity, output value)` pair.
pub(crate) fn all_flips_detected(
    rows: impl Iterator<Item = (bool, u64)>,
    width: usize,
    flips: usize,
) -> bool {
    let masks = flip_masks(width, flips);
    for (input_parity, output) in rows {
        for mask in &masks {
            let flipped_parity = (output ^ mask).count_ones() % 2 == 1;
            if flipped_parity == input_parity {
                return false; // flip slips through the parity check
            }
        }
    }
    true
}

fn flip_masks(width: usize, flips: usize) -> Vec<u64> {
    let mut masks = Vec::new();
    collect_masks(width, flips, 0, 0, &mut masks);
    masks
}

fn collect_masks(width: usize, remaining: usize, start: usize, mask: u64, masks: &mut Vec<u64>) {
    if remaining == 0 {
        masks.push(mask);
        return;
    }
    for pos in start..width {
        collect_masks(width, remaining - 1, pos + 1, mask | (1 << pos), masks);
    }
}
