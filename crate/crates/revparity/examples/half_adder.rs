//! Convert the 2-bit half adder into a parity-preserving reversible
//! specification and print both tables side by side.
//!
//! The half adder maps two outputs ("10") onto two different inputs, so it
//! is irreversible, and one row ("11" -> "01") flips parity. Two extra
//! output columns fix both: one distinguishing bit and one parity bit,
//! plus two constant-0 ancilla inputs to square the table.

use revparity::{convert_irreversible, verify, ConversionPlan, TruthTable};

fn main() {
    let half_adder = TruthTable::from_values(2, 2, &[0b00, 0b10, 0b10, 0b01]).unwrap();

    let plan = ConversionPlan::of(&half_adder);
    println!(
        "plan: distinguishing bits = {}, garbage = {}, ancilla = {}",
        plan.distinguishing_bits(),
        plan.garbage(),
        plan.ancilla()
    );
    println!();

    let converted = convert_irreversible(&half_adder);
    println!("in  -> out   |   in+ancilla -> out+garbage");
    println!("-------------+----------------------------");
    for (minterm, (input, output)) in half_adder.rows().enumerate() {
        let ext_input = (minterm as u64) << converted.ancilla();
        let ext_output = converted.output_for(ext_input).unwrap();
        println!(
            "{input}  -> {output}    |   {} -> {}",
            converted.input_bits(ext_input),
            converted.output_bits(ext_output),
        );
    }
    println!();

    let report = verify(&converted);
    println!("injective:             {}", report.injective);
    println!("parity preserving:     {}", report.parity_preserving);
    println!("single flip detectable: {}", report.single_flip_detectable);
    assert!(report.passed());
}
