//! Machine-readable summaries of a conversion: one record per function,
//! rendered either as key–value text or as CSV.

use std::fmt;

use crate::convert::{AnnotatedTable, ConversionPlan};
use crate::model::TruthTable;
use crate::parity::{min_extra_bits, ParityProfile};

/// Column order of the CSV rendering.
pub const CSV_HEADER: &str =
    "name,inputs,outputs,garbage,ancilla,runtime_ms,reversible,parity_preserving,bound";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    /// One `key: value` line per datum.
    Text,
    /// Header plus one comma-separated row.
    Csv,
}

/// Everything worth knowing about one converted function.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionReport {
    pub name: String,
    pub inputs: usize,
    pub outputs: usize,
    pub garbage: usize,
    pub ancilla: usize,
    /// Minimum extra bits required by the parity profile.
    pub bound: usize,
    /// Whether the input function was already a bijection.
    pub reversible: bool,
    /// Whether the input function was already parity preserving.
    pub parity_preserving: bool,
    pub runtime_ms: f64,
}

impl ConversionReport {
    /// Summarize a finished conversion of `table` into `converted`.
    pub fn summarize(
        name: impl Into<String>,
        table: &TruthTable,
        converted: &AnnotatedTable,
        runtime_ms: f64,
    ) -> Self {
        let profile = ParityProfile::of(table);
        ConversionReport {
            name: name.into(),
            inputs: table.num_inputs(),
            outputs: table.num_outputs(),
            garbage: converted.garbage(),
            ancilla: converted.ancilla(),
            bound: min_extra_bits(&profile),
            reversible: table.is_reversible(),
            parity_preserving: table.is_parity_preserving().unwrap_or(false),
            runtime_ms,
        }
    }

    /// Summarize a plan without materializing the conversion.
    pub fn from_plan(
        name: impl Into<String>,
        table: &TruthTable,
        plan: &ConversionPlan,
        runtime_ms: f64,
    ) -> Self {
        let profile = ParityProfile::of(table);
        ConversionReport {
            name: name.into(),
            inputs: table.num_inputs(),
            outputs: table.num_outputs(),
            garbage: plan.garbage(),
            ancilla: plan.ancilla(),
            bound: min_extra_bits(&profile),
            reversible: table.is_reversible(),
            parity_preserving: table.is_parity_preserving().unwrap_or(false),
            runtime_ms,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},{},{},{}",
            sanitize(&self.name),
            self.inputs,
            self.outputs,
            self.garbage,
            self.ancilla,
            self.runtime_ms,
            self.reversible,
            self.parity_preserving,
            self.bound
        )
    }
}

impl fmt::Display for ConversionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "inputs: {}", self.inputs)?;
        writeln!(f, "outputs: {}", self.outputs)?;
        writeln!(f, "garbage: {}", self.garbage)?;
        writeln!(f, "ancilla: {}", self.ancilla)?;
        writeln!(f, "runtime_ms: {:.3}", self.runtime_ms)?;
        writeln!(f, "reversible: {}", self.reversible)?;
        writeln!(f, "parity_preserving: {}", self.parity_preserving)?;
        write!(f, "bound: {}", self.bound)
    }
}

/// Render one record in the requested format.
pub fn write_report(report: &ConversionReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => format!("{report}\n"),
        ReportFormat::Csv => format!("{CSV_HEADER}\n{}\n", report.csv_row()),
    }
}

/// Render many records as one CSV document (header always present).
pub fn write_csv(reports: &[ConversionReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for report in reports {
        out.push_str(&report.csv_row());
        out.push('\n');
    }
    out
}

/// Function names land in CSV fields; keep them delimiter-free.
fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c == ',' || c == '"' || c == '\n' {
                '_'
            } else {
                c
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::{convert, convert_irreversible};
    use crate::generate::rd_generate;

    #[test]
    fn rd53_report_fields() {
        let table = rd_generate(5).unwrap();
        let converted = convert_irreversible(&table);
        let report = ConversionReport::summarize("rd53", &table, &converted, 0.18);
        assert_eq!(report.inputs, 5);
        assert_eq!(report.outputs, 3);
        assert_eq!(report.garbage, 5);
        assert_eq!(report.ancilla, 3);
        assert_eq!(report.bound, 5);
        assert!(!report.reversible);
        assert!(!report.parity_preserving);
    }

    #[test]
    fn half_adder_report_line_count_matches_columns() {
        let table = TruthTable::from_values(2, 2, &[0b00, 0b10, 0b10, 0b01]).unwrap();
        let converted = convert_irreversible(&table);
        let report = ConversionReport::summarize("half_adder", &table, &converted, 0.0);
        assert_eq!((report.garbage, report.ancilla), (2, 2));
        let text = write_report(&report, ReportFormat::Text);
        assert!(text.contains("garbage: 2\n"));
        assert!(text.contains("ancilla: 2\n"));
    }

    #[test]
    fn no_op_conversion_reports_zero_extra_lines() {
        let fredkin = TruthTable::from_values(3, 3, &[0, 1, 2, 3, 4, 6, 5, 7]).unwrap();
        let converted = convert(&fredkin);
        let report = ConversionReport::summarize("fredkin", &fredkin, &converted, 0.0);
        assert_eq!((report.garbage, report.ancilla), (0, 0));
        assert!(report.parity_preserving);
        assert!(report.reversible);
    }

    #[test]
    fn csv_rendering_is_stable() {
        let report = ConversionReport {
            name: "rd53".into(),
            inputs: 5,
            outputs: 3,
            garbage: 5,
            ancilla: 3,
            bound: 5,
            reversible: false,
            parity_preserving: false,
            runtime_ms: 0.18,
        };
        let csv = write_report(&report, ReportFormat::Csv);
        assert_eq!(
            csv,
            "name,inputs,outputs,garbage,ancilla,runtime_ms,reversible,parity_preserving,bound\n\
             rd53,5,3,5,3,0.180,false,false,5\n"
        );
    }

    #[test]
    fn names_with_delimiters_are_sanitized() {
        let mut report = ConversionReport {
            name: "odd,name".into(),
            inputs: 1,
            outputs: 1,
            garbage: 0,
            ancilla: 0,
            bound: 1,
            reversible: true,
            parity_preserving: true,
            runtime_ms: 0.0,
        };
        assert!(report.csv_row().starts_with("odd_name,"));
        report.name = "fine".into();
        assert!(report.csv_row().starts_with("fine,"));
    }
}
