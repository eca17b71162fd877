//! Why parity preservation matters: on the converted full adder, every
//! single output-bit flip lands in the wrong parity class and is caught,
//! while two simultaneous flips cancel and slip through, the classic
//! limit of a single parity bit.

use revparity::{convert_irreversible, TruthTable};

fn main() {
    let full_adder =
        TruthTable::from_values(3, 2, &[0b00, 0b10, 0b10, 0b01, 0b10, 0b01, 0b01, 0b11]).unwrap();
    let converted = convert_irreversible(&full_adder);
    let width = converted.output_width();

    println!(
        "single-flip detection:  {}",
        converted.bitflip_detectable(1)
    );
    println!(
        "double-flip detection:  {}",
        converted.bitflip_detectable(2)
    );
    println!(
        "triple-flip detection:  {}",
        converted.bitflip_detectable(3)
    );
    println!();

    // Show the mechanism on one row.
    let (input, output) = converted.defined_rows().nth(2).unwrap();
    let input_parity = input.count_ones() % 2;
    println!(
        "row {} -> {} (input parity {input_parity})",
        converted.input_bits(input),
        converted.output_bits(output)
    );
    for bit in 0..width {
        let flipped = output ^ (1u64 << bit);
        let caught = flipped.count_ones() % 2 != input_parity;
        println!(
            "  flip column {:>2}: {} parity {} -> {}",
            width - 1 - bit,
            converted.output_bits(flipped),
            flipped.count_ones() % 2,
            if caught { "detected" } else { "MISSED" }
        );
    }
    let double = output ^ 0b11;
    println!(
        "  flip two:       {} parity {} -> {}",
        converted.output_bits(double),
        double.count_ones() % 2,
        if double.count_ones() % 2 != input_parity {
            "detected"
        } else {
            "undetected (even flips cancel)"
        }
    );
}
