//! Walk through the full-adder conversion row by row, showing where each
//! garbage bit comes from: the occurrence index within the row's
//! (output pattern, parity class) group, then the parity-correction bit.

use revparity::{convert_irreversible, verify, ParityClass, TruthTable};

fn main() {
    let full_adder =
        TruthTable::from_values(3, 2, &[0b00, 0b10, 0b10, 0b01, 0b10, 0b01, 0b01, 0b11]).unwrap();

    let converted = convert_irreversible(&full_adder);
    let d = converted.garbage() - 1;
    println!(
        "{} garbage columns: {d} index bits + 1 parity bit; {} ancilla inputs\n",
        converted.garbage(),
        converted.ancilla()
    );

    println!("input  pattern  class     index  parity-bit  extended output");
    let mut counters = std::collections::HashMap::<(u64, usize), u64>::new();
    for (minterm, (input, output)) in full_adder.rows().enumerate() {
        let class = ParityClass::of(input.parity(), output.parity());
        let index = counters.entry((output.value(), class.index())).or_default();
        let ext_input = (minterm as u64) << converted.ancilla();
        let ext_output = converted.output_for(ext_input).unwrap();
        println!(
            "{input}    {output}       {:<9} {index:<6} {}           {}",
            format!("{class:?}"),
            ext_output & 1,
            converted.output_bits(ext_output),
        );
        *index += 1;
    }

    println!();
    let report = verify(&converted);
    assert!(report.passed());
    println!(
        "all rows distinct and parity-preserving: {}",
        report.passed()
    );
}
