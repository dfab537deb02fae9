//! Expression parsing, evaluation and file export for the `gk` CLI.

pub mod eval;
pub mod expr;
pub mod jsonio;
pub mod suite;

pub use eval::{check, eval, Backend, EvalContext, EvalError, Value, Verdict};
pub use expr::{parse, BinOp, Expr, GenKind, ParseError};
pub use suite::{parse_check, run_suite, SuiteError, SuiteOutcome};
