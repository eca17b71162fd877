//! Batch harness: convert many sources (PLA files or generator specs) and
//! collect per-function reports, plus an empirical runtime-scaling check.

use std::path::{Path, PathBuf};
use std::time::Instant;

use thiserror::Error;

use crate::convert::{convert, verify};
use crate::generate::{rd_generate, rd_name};
use crate::model::TruthTable;
use crate::pla::{parse_pla, ParseOptions};
use crate::report::ConversionReport;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error("scaling check range is {min}..={max}, got {got}")]
    OutOfRange { got: usize, min: usize, max: usize },
}

/// Something the harness can turn into a truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Pla(PathBuf),
    /// The built-in input-weight generator, `rd:N`.
    Generator {
        inputs: usize,
    },
}

impl Source {
    /// `rd:N` selects the generator; anything else is a file path.
    pub fn parse(spec: &str) -> Source {
        if let Some(n) = spec.strip_prefix("rd:").and_then(|s| s.parse().ok()) {
            return Source::Generator { inputs: n };
        }
        Source::Pla(PathBuf::from(spec))
    }

    pub fn name(&self) -> String {
        match self {
            Source::Pla(path) => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
            Source::Generator { inputs } => rd_name(*inputs),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Source::Pla(path) => path.display().to_string(),
            Source::Generator { inputs } => format!("rd:{inputs}"),
        }
    }

    fn load(&self, options: &ParseOptions) -> Result<TruthTable, String> {
        match self {
            Source::Pla(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                parse_pla(&text, options)
                    .map(|parsed| parsed.table)
                    .map_err(|e| format!("{}: {e}", path.display()))
            }
            Source::Generator { inputs } => rd_generate(*inputs).map_err(|e| e.to_string()),
        }
    }
}

/// Outcome of one attempted conversion; failures carry the reason instead
/// of being dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub name: String,
    pub source: String,
    pub result: Result<ConversionReport, String>,
}

/// Convert every source in order. Parse failures become failed records;
/// nothing is fatal. Non-runtime fields are deterministic.
pub fn run_suite(sources: &[Source], options: &ParseOptions) -> Vec<BenchRecord> {
    sources
        .iter()
        .map(|source| {
            let name = source.name();
            let result = source.load(options).and_then(|table| {
                let start = Instant::now();
                let converted = convert(&table);
                let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
                let report = verify(&converted);
                if !report.passed() {
                    return Err(format!("internal verification failed: {report:?}"));
                }
                Ok(ConversionReport::summarize(
                    &name, &table, &converted, runtime_ms,
                ))
            });
            BenchRecord {
                name,
                source: source.describe(),
                result,
            }
        })
        .collect()
}

/// All `.pla` files directly inside `dir`, in name order.
pub fn pla_files_in(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|e| e == "pla").unwrap_or(false))
        .collect();
    files.sort();
    Ok(files)
}

/// One measured point of the scaling sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingPoint {
    pub inputs: usize,
    pub runtime_ms: f64,
}

pub const SCALING_MIN_INPUTS: usize = 10;
pub const SCALING_MAX_INPUTS: usize = 22;

/// Time the conversion of the input-weight function for n = 10..=max_n.
///
/// The conversion runs in O((n+m)·2ⁿ), so each step should take roughly
/// twice as long as the previous one; callers check the observed ratios.
/// Each size is measured as the median of three runs after one warm-up.
pub fn scaling_check(max_n: usize) -> Result<Vec<ScalingPoint>, BenchError> {
    if !(SCALING_MIN_INPUTS..=SCALING_MAX_INPUTS).contains(&max_n) {
        return Err(BenchError::OutOfRange {
            got: max_n,
            min: SCALING_MIN_INPUTS,
            max: SCALING_MAX_INPUTS,
        });
    }
    // Warm up allocator and caches.
    let warmup = rd_generate(SCALING_MIN_INPUTS).expect("within generator cap");
    std::hint::black_box(convert(&warmup));

    let mut points = Vec::new();
    for n in SCALING_MIN_INPUTS..=max_n {
        let table = rd_generate(n).expect("within generator cap");
        let mut samples = [0f64; 3];
        for sample in &mut samples {
            let start = Instant::now();
            std::hint::black_box(convert(&table));
            *sample = start.elapsed().as_secs_f64() * 1e3;
        }
        samples.sort_by(|a, b| a.total_cmp(b));
        points.push(ScalingPoint {
            inputs: n,
            runtime_ms: samples[1],
        });
    }
    Ok(points)
}

/// Runtime ratios between consecutive scaling points.
pub fn growth_ratios(points: &[ScalingPoint]) -> Vec<f64> {
    points
        .windows(2)
        .map(|pair| pair[1].runtime_ms / pair[0].runtime_ms)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_specs_parse() {
        assert_eq!(Source::parse("rd:8"), Source::Generator { inputs: 8 });
        assert_eq!(
            Source::parse("fixtures/half_adder.pla"),
            Source::Pla(PathBuf::from("fixtures/half_adder.pla"))
        );
        assert_eq!(Source::parse("rd:8").name(), "rd84");
    }

    #[test]
    fn suite_over_generators_matches_reference_counts() {
        let sources = [
            Source::Generator { inputs: 5 },
            Source::Generator { inputs: 7 },
            Source::Generator { inputs: 8 },
        ];
        let records = run_suite(&sources, &ParseOptions::default());
        let got: Vec<(usize, usize)> = records
            .iter()
            .map(|r| {
                let report = r.result.as_ref().unwrap();
                (report.garbage, report.ancilla)
            })
            .collect();
        assert_eq!(got, vec![(5, 3), (7, 3), (8, 4)]);
    }

    #[test]
    fn empty_source_list_yields_no_records() {
        assert!(run_suite(&[], &ParseOptions::default()).is_empty());
    }

    #[test]
    fn failures_are_recorded_not_fatal() {
        let sources = [
            Source::Pla(PathBuf::from("does/not/exist.pla")),
            Source::Generator { inputs: 5 },
        ];
        let records = run_suite(&sources, &ParseOptions::default());
        assert_eq!(records.len(), 2);
        assert!(records[0].result.is_err());
        assert!(records[1].result.is_ok());
    }

    #[test]
    fn suite_is_deterministic_apart_from_runtimes() {
        let sources = [Source::Generator { inputs: 6 }];
        let first = run_suite(&sources, &ParseOptions::default());
        let second = run_suite(&sources, &ParseOptions::default());
        let strip = |records: Vec<BenchRecord>| -> Vec<_> {
            records
                .into_iter()
                .map(|r| {
                    r.result.map(|mut report| {
                        report.runtime_ms = 0.0;
                        report
                    })
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(first), strip(second));
    }

    #[test]
    fn scaling_check_bounds() {
        assert!(scaling_check(23).is_err());
        assert!(scaling_check(9).is_err());
        let points = scaling_check(10).unwrap();
        assert_eq!(points.len(), 1);
        assert!(growth_ratios(&points).is_empty());
    }
}
