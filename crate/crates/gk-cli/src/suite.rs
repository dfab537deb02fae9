//! Suite files: one `lhs == rhs` check per line, `#` starts a comment.
//! Output is one line per check in input order plus a `PASSED x/y`
//! summary.

use std::io::Write;

use thiserror::Error;

use crate::eval::{check, EvalContext, EvalError};
use crate::expr::{parse, Expr, ParseError};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: expected '<lhs> == <rhs>'")]
    MissingSeparator { line: usize },
    #[error("line {line}: {source}")]
    Eval {
        line: usize,
        #[source]
        source: EvalError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub passed: usize,
    pub total: usize,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Split a check into its two sides, tracking the character offset of
/// the right side so parse errors point into the original string.
pub fn split_check(src: &str) -> Option<(&str, &str, usize)> {
    let byte_pos = src.find("==")?;
    let rhs_offset = src[..byte_pos].chars().count() + 2;
    Some((&src[..byte_pos], &src[byte_pos + 2..], rhs_offset))
}

/// Parse both sides of `lhs == rhs` with positions relative to `src`.
pub fn parse_check(src: &str) -> Result<Option<(Expr, Expr)>, ParseError> {
    let Some((lhs_src, rhs_src, rhs_offset)) = split_check(src) else {
        return Ok(None);
    };
    let lhs = parse(lhs_src)?;
    let rhs = parse(rhs_src).map_err(|e| e.offset_by(rhs_offset))?;
    Ok(Some((lhs, rhs)))
}

/// Run every check in `content`, writing one `ok`/`FAIL` line per check
/// and the trailing summary to `out`.
pub fn run_suite(
    content: &str,
    ctx: &EvalContext,
    tol: f64,
    out: &mut dyn Write,
) -> Result<SuiteOutcome, SuiteError> {
    let mut passed = 0usize;
    let mut total = 0usize;
    for (idx, raw) in content.lines().enumerate() {
        let line_no = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (lhs, rhs) = parse_check(text)
            .map_err(|source| SuiteError::Parse {
                line: line_no,
                source,
            })?
            .ok_or(SuiteError::MissingSeparator { line: line_no })?;
        let verdict = check(&lhs, &rhs, ctx, tol).map_err(|source| SuiteError::Eval {
            line: line_no,
            source,
        })?;
        total += 1;
        if verdict.pass {
            passed += 1;
            writeln!(out, "ok   {text}")?;
        } else {
            writeln!(out, "FAIL {text} (residual {:e})", verdict.residual)?;
        }
    }
    writeln!(out, "PASSED {passed}/{total}")?;
    Ok(SuiteOutcome { passed, total })
}
