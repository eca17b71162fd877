//! Tour of the PLA front end: parse a cube list with input don't-cares,
//! see the warnings, convert, and write the annotated result back out.

use revparity::{convert, parse_pla, read_annotated, write_pla, ParseOptions};

const MAJORITY_ONSET: &str = "\
# 3-input majority, on-set only
.i 3
.o 1
11- 1
1-1 1
-11 1
.e
";

fn main() {
    let options = ParseOptions::default();
    let parsed = parse_pla(MAJORITY_ONSET, &options).unwrap();
    for warning in &parsed.warnings {
        println!("warning: {warning}");
    }
    println!("expanded to {} rows:", parsed.table.row_count());
    for (input, output) in parsed.table.rows() {
        println!("  {input} {output}");
    }

    let converted = convert(&parsed.table);
    let text = write_pla(&converted);
    println!("\nconverted specification:\n{text}");

    let back = read_annotated(&text, &options).unwrap();
    assert_eq!(back, converted);
    println!("re-parsing the written file reproduces the table exactly");
}
