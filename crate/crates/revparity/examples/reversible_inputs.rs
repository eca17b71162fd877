//! Reversible inputs need at most one extra line: none when the bijection
//! already preserves parity, exactly one otherwise.

use revparity::{convert_reversible, TruthTable};

fn show(name: &str, table: &TruthTable) {
    let converted = convert_reversible(table).unwrap();
    println!(
        "{name}: parity preserving = {}, extra lines = {}",
        table.is_parity_preserving().unwrap(),
        converted.ancilla()
    );
    for (input, output) in converted.defined_rows() {
        println!(
            "  {} -> {}",
            converted.input_bits(input),
            converted.output_bits(output)
        );
    }
    println!();
}

fn main() {
    // Controlled swap: every output row is a permutation of the input
    // row's bits, so parity is conserved and nothing changes.
    let fredkin = TruthTable::from_values(
        3,
        3,
        &[0b000, 0b001, 0b010, 0b011, 0b100, 0b110, 0b101, 0b111],
    )
    .unwrap();
    show("fredkin", &fredkin);

    // Controlled not: rows 10 and 11 flip parity, so one garbage column
    // records the mismatch and one ancilla squares the table.
    let cnot = TruthTable::from_values(2, 2, &[0b00, 0b01, 0b11, 0b10]).unwrap();
    show("cnot", &cnot);

    // The inverter flips parity on every row.
    let not_gate = TruthTable::from_values(1, 1, &[1, 0]).unwrap();
    show("not", &not_gate);
}
