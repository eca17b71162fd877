//! A converted specification defines rows only where the ancilla inputs
//! are 0. Completion assigns every remaining input row an unused output
//! row of equal parity, yielding a full parity-preserving permutation,
//! the form gate-level synthesis flows want.

use revparity::{complete_permutation, convert_irreversible, TruthTable};

fn main() {
    let half_adder = TruthTable::from_values(2, 2, &[0b00, 0b10, 0b10, 0b01]).unwrap();
    let partial = convert_irreversible(&half_adder);
    println!(
        "partial: {} of {} rows defined",
        partial.defined_len(),
        1 << partial.lines()
    );

    let completed = complete_permutation(&partial).unwrap();
    let full = completed.to_truth_table().unwrap();
    assert!(full.is_reversible());
    assert!(full.is_parity_preserving().unwrap());

    println!(
        "completed permutation of {{0..{}}}:",
        (1 << completed.lines()) - 1
    );
    for (input, output) in completed.defined_rows() {
        let origin = if input & 0b11 == 0 {
            "defined"
        } else {
            "filled"
        };
        println!(
            "  {} -> {}   ({origin})",
            completed.input_bits(input),
            completed.output_bits(output)
        );
    }
}
