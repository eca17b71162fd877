//! Run the harness over a mixed list of sources (generator specs plus
//! the shipped fixture files) and print the CSV summary.

use std::path::Path;

use revparity::bench::{run_suite, Source};
use revparity::{write_csv, ParseOptions};

fn main() {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let sources = vec![
        Source::parse("rd:5"),
        Source::parse("rd:7"),
        Source::parse("rd:8"),
        Source::Pla(fixtures.join("half_adder.pla")),
        Source::Pla(fixtures.join("full_adder.pla")),
        Source::Pla(fixtures.join("cnot.pla")),
        Source::Pla(fixtures.join("fredkin.pla")),
    ];

    let records = run_suite(&sources, &ParseOptions::default());
    let mut reports = Vec::new();
    for record in &records {
        match &record.result {
            Ok(report) => reports.push(report.clone()),
            Err(reason) => eprintln!("failed: {}: {reason}", record.source),
        }
    }
    print!("{}", write_csv(&reports));
}
