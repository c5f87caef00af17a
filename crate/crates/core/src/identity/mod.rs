//! Named identities, a small two-sorted language for stating them, and the
//! suite that checks a triple against all of them.

mod ast;
mod builtin;
mod catalog;
mod eval;
mod parser;
mod suite;

pub use ast::{Identity, LExpr, MExpr, MapName, Var};
pub use catalog::{catalog, lookup, CatalogEntry, Combine};
pub use eval::{eval_at, eval_identity};
pub use parser::{parse_identity, parse_identity_file, ParseError, ParseErrorKind};
pub use suite::{
    check_entry, run_suite, run_suite_orbit, run_suite_with, EntryVerdict, IdentityReport, ReportEntry, Route, Status,
};
