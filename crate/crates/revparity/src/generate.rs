//! Built-in benchmark generators.

use crate::convert::ConvertError;
use crate::model::TruthTable;

/// Generators refuse to materialize more than 2^24 rows.
pub const MAX_GENERATOR_INPUTS: usize = 24;

/// The input-weight function rdN_K: N inputs, K = ⌊log₂ N⌋ + 1 outputs,
/// output row = binary encoding (MSB first) of the number of ones in the
/// input minterm.
pub fn rd_generate(num_inputs: usize) -> Result<TruthTable, ConvertError> {
    if num_inputs == 0 || num_inputs > MAX_GENERATOR_INPUTS {
        return Err(ConvertError::TooLarge {
            requested: num_inputs,
            max: MAX_GENERATOR_INPUTS,
        });
    }
    let outputs = rd_output_count(num_inputs);
    Ok(
        TruthTable::from_fn(num_inputs, outputs, |minterm| minterm.count_ones() as u64)
            .expect("generator dimensions are within bounds"),
    )
}

/// K = ⌊log₂ N⌋ + 1, the width needed to encode any weight 0..=N.
pub fn rd_output_count(num_inputs: usize) -> usize {
    debug_assert!(num_inputs >= 1);
    (num_inputs.ilog2() + 1) as usize
}

/// Conventional benchmark name: `rd53`, `rd84`, `rd10_4`, `rd20_5`.
pub fn rd_name(num_inputs: usize) -> String {
    let outputs = rd_output_count(num_inputs);
    if num_inputs < 10 {
        format!("rd{num_inputs}{outputs}")
    } else {
        format!("rd{num_inputs}_{outputs}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parity::ParityProfile;

    #[test]
    fn rd3_outputs_are_popcounts() {
        let table = rd_generate(3).unwrap();
        assert_eq!(table.num_outputs(), 2);
        let values: Vec<u64> = (0..8).map(|i| table.output_value(i)).collect();
        assert_eq!(values, vec![0, 1, 1, 2, 1, 2, 2, 3]);
    }

    #[test]
    fn rd5_is_the_5_input_3_output_weight_function() {
        let table = rd_generate(5).unwrap();
        assert_eq!(table.num_inputs(), 5);
        assert_eq!(table.num_outputs(), 3);
        assert_eq!(table.output_value(0b11111), 5);
    }

    #[test]
    fn generator_cap() {
        assert_eq!(
            rd_generate(25),
            Err(ConvertError::TooLarge {
                requested: 25,
                max: 24
            })
        );
        assert!(rd_generate(0).is_err());
    }

    #[test]
    fn names_follow_the_benchmark_convention() {
        assert_eq!(rd_name(5), "rd53");
        assert_eq!(rd_name(7), "rd73");
        assert_eq!(rd_name(8), "rd84");
        assert_eq!(rd_name(10), "rd10_4");
        assert_eq!(rd_name(20), "rd20_5");
    }

    #[test]
    fn group_sizes_are_binomial_coefficients() {
        for n in 1..=10usize {
            let profile = ParityProfile::of(&rd_generate(n).unwrap());
            assert_eq!(profile.distinct_patterns(), n + 1);
            for group in profile.groups() {
                let weight = group.pattern().value() as usize;
                assert_eq!(group.size(), binomial(n, weight));
                // All rows of one weight share the same input parity, so
                // exactly one class of the group is populated.
                assert_eq!(group.largest_class(), group.size());
            }
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        // Pascal's rule; an independent route to the group sizes.
        let mut row = vec![1usize];
        for _ in 0..n {
            let mut next = vec![1];
            for pair in row.windows(2) {
                next.push(pair[0] + pair[1]);
            }
            next.push(1);
            row = next;
        }
        row[k]
    }
}
