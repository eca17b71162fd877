//! PLA file format: parsing, don't-care expansion, and emission.
//!
//! The accepted dialect is the classic two-level description:
//!
//! ```text
//! # comment
//! .i 2
//! .o 2
//! .p 4          (optional, validated against the cube count)
//! .ilb a b      (optional input labels)
//! .ob s c       (optional output labels)
//! 00 00
//! -1 10         ('-' on the input side covers both values)
//! .e
//! ```
//!
//! Input patterns use {0,1,-}; output patterns use {0,1}. Output-side
//! '-' or '~' is tolerated and resolved to 0 with a warning, since the
//! conversion needs a fully specified function. Minterms covered by no
//! cube default to the all-zeros output row, again with a warning; a
//! strict mode turns every warning into an error, which is what several
//! benchmark sets distributed as on-set-only files need to stay usable
//! by default.
//!
//! Annotated specifications written by this module carry their ancilla
//! and garbage counts in leading `# ancilla N` / `# garbage N` comment
//! lines, keeping the body consumable by standard PLA tools.

use std::fmt;

use thiserror::Error;

use crate::convert::{AnnotatedTable, ConvertError};
use crate::model::{ModelError, TruthTable};

pub const DEFAULT_MAX_INPUTS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlaError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: cube width error: {message}")]
    Width { line: usize, message: String },
    #[error("conflicting outputs for minterm {minterm}: {first} vs {second}")]
    Conflict {
        minterm: String,
        first: String,
        second: String,
    },
    #[error("{inputs} inputs exceed the configured cap of {max} (raise with --max-n)")]
    TooManyInputs { inputs: usize, max: usize },
    #[error("strict mode: {0}")]
    Strict(String),
    #[error("not a valid annotated specification: {0}")]
    BadAnnotation(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl From<ConvertError> for PlaError {
    fn from(e: ConvertError) -> Self {
        PlaError::BadAnnotation(e.to_string())
    }
}

/// How leniently to parse.
#[derive(Debug, Clone)]
pub struct ParseOptions {
    /// Turn warnings (uncovered minterms, output don't-cares, `.p`
    /// mismatches) into errors.
    pub strict: bool,
    /// Reject documents with more than this many inputs; the dense
    /// expansion holds 2ⁿ rows in memory.
    pub max_inputs: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            strict: false,
            max_inputs: DEFAULT_MAX_INPUTS,
        }
    }
}

/// Non-fatal observations made while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWarning {
    /// Minterms covered by no cube were given the all-zeros output row.
    UncoveredMinterms { count: usize },
    /// Output-side don't-cares were resolved to 0.
    OutputDontCares { count: usize },
    /// The `.p` line disagrees with the actual cube count.
    CubeCountMismatch { declared: usize, actual: usize },
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWarning::UncoveredMinterms { count } => {
                write!(
                    f,
                    "{count} uncovered minterms defaulted to the all-zeros output"
                )
            }
            ParseWarning::OutputDontCares { count } => {
                write!(f, "{count} output don't-cares resolved to 0")
            }
            ParseWarning::CubeCountMismatch { declared, actual } => {
                write!(f, ".p declares {declared} cubes but {actual} are present")
            }
        }
    }
}

/// One product term: an input pattern over {0,1,-} stored as value/care
/// masks, and a fully resolved output value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cube {
    /// Bit i set iff input column i (counted from the right) is specified.
    pub care: u64,
    /// Values of the specified input columns; zero on don't-care columns.
    pub value: u64,
    /// Output row, don't-cares already resolved to 0.
    pub output: u64,
}

/// A syntactically checked PLA document, before expansion to a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaDocument {
    pub num_inputs: usize,
    pub num_outputs: usize,
    pub cubes: Vec<Cube>,
    pub declared_cubes: Option<usize>,
    pub input_labels: Option<Vec<String>>,
    pub output_labels: Option<Vec<String>>,
    /// Value of a `# ancilla N` comment, if present.
    pub ancilla: Option<usize>,
    /// Value of a `# garbage N` comment, if present.
    pub garbage: Option<usize>,
    output_dont_cares: usize,
}

/// A PLA expanded to a complete truth table.
#[derive(Debug, Clone)]
pub struct ParsedPla {
    pub table: TruthTable,
    /// Which minterms were explicitly covered by a cube.
    pub covered: Vec<bool>,
    pub warnings: Vec<ParseWarning>,
    pub ancilla: Option<usize>,
    pub garbage: Option<usize>,
}

impl ParsedPla {
    pub fn fully_covered(&self) -> bool {
        self.covered.iter().all(|&c| c)
    }

    pub fn covered_count(&self) -> usize {
        self.covered.iter().filter(|&&c| c).count()
    }
}

impl PlaDocument {
    /// Parse the textual form. Directive and cube syntax is checked here;
    /// coverage conflicts surface during [`PlaDocument::expand`].
    pub fn parse(text: &str, options: &ParseOptions) -> Result<Self, PlaError> {
        let mut num_inputs: Option<usize> = None;
        let mut num_outputs: Option<usize> = None;
        let mut declared_cubes: Option<usize> = None;
        let mut input_labels: Option<Vec<String>> = None;
        let mut output_labels: Option<Vec<String>> = None;
        let mut ancilla: Option<usize> = None;
        let mut garbage: Option<usize> = None;
        let mut cubes: Vec<Cube> = Vec::new();
        let mut output_dont_cares = 0usize;
        let mut terminated = false;

        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let mut words = comment.split_whitespace();
                match (words.next(), words.next()) {
                    (Some("ancilla"), Some(n)) => ancilla = n.parse().ok().or(ancilla),
                    (Some("garbage"), Some(n)) => garbage = n.parse().ok().or(garbage),
                    _ => {}
                }
                continue;
            }
            if terminated {
                return Err(PlaError::Syntax {
                    line: line_no,
                    message: "content after .e terminator".into(),
                });
            }
            if let Some(directive) = line.strip_prefix('.') {
                let mut words = directive.split_whitespace();
                let keyword = words.next().unwrap_or("");
                let rest: Vec<&str> = words.collect();
                match keyword {
                    "i" => {
                        if num_inputs.is_some() {
                            return Err(PlaError::Syntax {
                                line: line_no,
                                message: "duplicate .i directive".into(),
                            });
                        }
                        let n = parse_count(&rest, line_no, ".i")?;
                        if n == 0 {
                            return Err(PlaError::Syntax {
                                line: line_no,
                                message: ".i must be at least 1".into(),
                            });
                        }
                        let cap = options.max_inputs.min(crate::model::MAX_SUPPORTED_INPUTS);
                        if n > cap {
                            return Err(PlaError::TooManyInputs {
                                inputs: n,
                                max: cap,
                            });
                        }
                        num_inputs = Some(n);
                    }
                    "o" => {
                        if num_outputs.is_some() {
                            return Err(PlaError::Syntax {
                                line: line_no,
                                message: "duplicate .o directive".into(),
                            });
                        }
                        let m = parse_count(&rest, line_no, ".o")?;
                        if m == 0 {
                            return Err(PlaError::Syntax {
                                line: line_no,
                                message: ".o must be at least 1".into(),
                            });
                        }
                        num_outputs = Some(m);
                    }
                    "p" => declared_cubes = Some(parse_count(&rest, line_no, ".p")?),
                    "ilb" => input_labels = Some(rest.iter().map(|s| s.to_string()).collect()),
                    "ob" => output_labels = Some(rest.iter().map(|s| s.to_string()).collect()),
                    "type" => {
                        let kind = rest.first().copied().unwrap_or("");
                        if kind != "f" && kind != "fd" {
                            return Err(PlaError::Syntax {
                                line: line_no,
                                message: format!("unsupported .type {kind:?}"),
                            });
                        }
                    }
                    "e" | "end" => terminated = true,
                    other => {
                        return Err(PlaError::Syntax {
                            line: line_no,
                            message: format!("unsupported directive .{other}"),
                        });
                    }
                }
                continue;
            }

            // Cube line.
            let (n, m) = match (num_inputs, num_outputs) {
                (Some(n), Some(m)) => (n, m),
                _ => {
                    return Err(PlaError::Syntax {
                        line: line_no,
                        message: "cube before .i/.o declarations".into(),
                    });
                }
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(PlaError::Syntax {
                    line: line_no,
                    message: format!(
                        "expected '<input-pattern> <output-pattern>', got {} fields",
                        fields.len()
                    ),
                });
            }
            let (input_field, output_field) = (fields[0], fields[1]);
            if input_field.chars().count() != n {
                return Err(PlaError::Width {
                    line: line_no,
                    message: format!(
                        "input pattern {input_field:?} has {} columns, expected {n}",
                        input_field.chars().count()
                    ),
                });
            }
            if output_field.chars().count() != m {
                return Err(PlaError::Width {
                    line: line_no,
                    message: format!(
                        "output pattern {output_field:?} has {} columns, expected {m}",
                        output_field.chars().count()
                    ),
                });
            }
            let mut care = 0u64;
            let mut value = 0u64;
            for c in input_field.chars() {
                care <<= 1;
                value <<= 1;
                match c {
                    '0' => care |= 1,
                    '1' => {
                        care |= 1;
                        value |= 1;
                    }
                    '-' => {}
                    other => {
                        return Err(PlaError::Syntax {
                            line: line_no,
                            message: format!("invalid input character {other:?}"),
                        });
                    }
                }
            }
            let mut output = 0u64;
            for c in output_field.chars() {
                output <<= 1;
                match c {
                    '0' => {}
                    '1' => output |= 1,
                    '-' | '~' => output_dont_cares += 1,
                    other => {
                        return Err(PlaError::Syntax {
                            line: line_no,
                            message: format!("invalid output character {other:?}"),
                        });
                    }
                }
            }
            cubes.push(Cube {
                care,
                value,
                output,
            });
        }

        let num_inputs = num_inputs.ok_or_else(|| PlaError::Syntax {
            line: 0,
            message: "missing .i directive".into(),
        })?;
        let num_outputs = num_outputs.ok_or_else(|| PlaError::Syntax {
            line: 0,
            message: "missing .o directive".into(),
        })?;

        Ok(PlaDocument {
            num_inputs,
            num_outputs,
            cubes,
            declared_cubes,
            input_labels,
            output_labels,
            ancilla,
            garbage,
            output_dont_cares,
        })
    }

    /// Expand the cube list to a complete table. Overlapping cubes must
    /// agree on their outputs; uncovered minterms default to all zeros.
    pub fn expand(&self, options: &ParseOptions) -> Result<ParsedPla, PlaError> {
        let n = self.num_inputs;
        let rows = 1usize << n;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut values = vec![0u64; rows];
        let mut covered = vec![false; rows];
        let mut warnings = Vec::new();

        for cube in &self.cubes {
            // Walk every setting of the don't-care positions.
            let free = !cube.care & full;
            let mut subset = 0u64;
            loop {
                let minterm = cube.value | subset;
                let slot = minterm as usize;
                if covered[slot] && values[slot] != cube.output {
                    return Err(PlaError::Conflict {
                        minterm: render_bits(minterm, n),
                        first: render_bits(values[slot], self.num_outputs),
                        second: render_bits(cube.output, self.num_outputs),
                    });
                }
                values[slot] = cube.output;
                covered[slot] = true;
                if subset == free {
                    break;
                }
                subset = (subset.wrapping_sub(free)) & free;
            }
        }

        if self.output_dont_cares > 0 {
            warnings.push(ParseWarning::OutputDontCares {
                count: self.output_dont_cares,
            });
        }
        if let Some(declared) = self.declared_cubes {
            if declared != self.cubes.len() {
                warnings.push(ParseWarning::CubeCountMismatch {
                    declared,
                    actual: self.cubes.len(),
                });
            }
        }
        let uncovered = covered.iter().filter(|&&c| !c).count();
        if uncovered > 0 {
            warnings.push(ParseWarning::UncoveredMinterms { count: uncovered });
        }
        if options.strict {
            if let Some(w) = warnings.first() {
                return Err(PlaError::Strict(w.to_string()));
            }
        }

        let table = TruthTable::from_values(n, self.num_outputs, &values)?;
        Ok(ParsedPla {
            table,
            covered,
            warnings,
            ancilla: self.ancilla,
            garbage: self.garbage,
        })
    }
}

fn parse_count(fields: &[&str], line: usize, directive: &str) -> Result<usize, PlaError> {
    let field = fields.first().ok_or_else(|| PlaError::Syntax {
        line,
        message: format!("{directive} needs a number"),
    })?;
    field.parse().map_err(|_| PlaError::Syntax {
        line,
        message: format!("{directive} argument {field:?} is not a number"),
    })
}

fn render_bits(value: u64, width: usize) -> String {
    (0..width)
        .rev()
        .map(|pos| if (value >> pos) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Parse a PLA document and expand it to a complete truth table.
pub fn parse_pla(text: &str, options: &ParseOptions) -> Result<ParsedPla, PlaError> {
    PlaDocument::parse(text, options)?.expand(options)
}

/// Emit an annotated specification as a complete-minterm PLA. Ancilla and
/// garbage counts go into leading comment lines; every defined row becomes
/// one fully specified cube.
pub fn write_pla(table: &AnnotatedTable) -> String {
    let lines = table.lines();
    let width = table.output_width();
    let mut out = String::new();
    out.push_str(&format!("# ancilla {}\n", table.ancilla()));
    out.push_str(&format!("# garbage {}\n", table.garbage()));
    out.push_str(&format!(".i {lines}\n.o {width}\n"));
    for (input, output) in table.defined_rows() {
        out.push_str(&render_bits(input, lines));
        out.push(' ');
        out.push_str(&render_bits(output, width));
        out.push('\n');
    }
    out.push_str(".e\n");
    out
}

/// Emit a plain complete truth table as a PLA.
pub fn write_table_pla(table: &TruthTable) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        ".i {}\n.o {}\n",
        table.num_inputs(),
        table.num_outputs()
    ));
    for (input, output) in table.rows() {
        out.push_str(&format!("{input} {output}\n"));
    }
    out.push_str(".e\n");
    out
}

/// Reconstruct an annotated table from a PLA written by [`write_pla`].
///
/// The document must carry `# ancilla` / `# garbage` comments, be square,
/// and cover either exactly the ancilla-zero rows (a partial table) or
/// the whole input space (a completed one).
pub fn read_annotated(text: &str, options: &ParseOptions) -> Result<AnnotatedTable, PlaError> {
    let parsed = parse_pla(text, options)?;
    let (ancilla, garbage) = match (parsed.ancilla, parsed.garbage) {
        (Some(a), Some(g)) => (a, g),
        _ => {
            return Err(PlaError::BadAnnotation(
                "missing # ancilla / # garbage comments".into(),
            ));
        }
    };
    let table = &parsed.table;
    let lines = table.num_inputs();
    if table.num_outputs() != lines {
        return Err(PlaError::BadAnnotation(format!(
            "annotated table must be square, got {}x{}",
            lines,
            table.num_outputs()
        )));
    }
    if ancilla >= lines || garbage >= lines {
        return Err(PlaError::BadAnnotation(
            "ancilla/garbage counts exceed the line count".into(),
        ));
    }
    let n = lines - ancilla;
    let m = lines - garbage;

    if parsed.fully_covered() {
        let values: Vec<u64> = (0..table.row_count() as u64)
            .map(|i| table.output_value(i))
            .collect();
        return Ok(AnnotatedTable::from_completed_rows(
            n, m, ancilla, garbage, values,
        )?);
    }

    // Partial layout: exactly the rows with all ancilla bits at zero.
    let mask = (1u64 << ancilla) - 1;
    for (minterm, &is_covered) in parsed.covered.iter().enumerate() {
        let expected = minterm as u64 & mask == 0;
        if is_covered != expected {
            return Err(PlaError::BadAnnotation(format!(
                "row {} is {}covered but the ancilla-zero layout says it must {}be",
                render_bits(minterm as u64, lines),
                if is_covered { "" } else { "not " },
                if expected { "" } else { "not " },
            )));
        }
    }
    let values: Vec<u64> = (0..table.row_count() as u64)
        .filter(|v| v & mask == 0)
        .map(|v| table.output_value(v))
        .collect();
    Ok(AnnotatedTable::from_defined_rows(
        n, m, ancilla, garbage, values,
    )?)
}
