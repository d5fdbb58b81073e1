//! Expression language and command-line front end for the `qca-core`
//! algebra.

pub mod app;
pub mod error;
pub mod eval;
pub mod json;
pub mod lexer;
pub mod parser;

pub use error::{CliError, Pos};
pub use eval::{Kind, Session, Value};
pub use parser::{parse, Expr};
