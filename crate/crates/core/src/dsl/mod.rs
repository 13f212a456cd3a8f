//! The knot-description language of `.rg` files: definitions, genus assertions and suite directives.
//!
//! ```text
//! knot k = surgery(s3knot(genus=5), 19/1)
//! assert rational_genus(k) == 9/38
//! knot b = torusbundle([1 3; 0 1])   # first basis vector is the knot
//! verify constants
//! ```

mod lexer;
mod parser;
mod run;

use thiserror::Error;

pub use lexer::Cmp;
pub use parser::{parse, Expr, SpecFile, Stmt, StmtKind};
pub use run::{run, LineKind, LineResult, LineVerdict, ReportFormat, Report, RunOptions, SuiteSummary, SUITES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: expected {}, found {found}", expected.join(" or "))]
    Syntax { line: usize, col: usize, expected: Vec<String>, found: String },
    #[error("line {line}: `{name}` is already defined")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: `{name}` is not defined")]
    UnknownName { line: usize, name: String },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::DuplicateName { line, .. }
            | ParseError::UnknownName { line, .. } => *line,
        }
    }
}
