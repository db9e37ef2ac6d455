//! `tconj heis`: Heisenberg group arithmetic.
//!
//! Element arguments accept both the `((m,k),s)` triple form and generator
//! words such as `a^2 b^3`.

use clap::Subcommand;
use serde_json::json;

use tconj::heisenberg::{parse_element_or_word, GroupWord, HeisenbergElement};

use crate::output::{input_err, CliError, CommandOutput};

#[derive(Subcommand)]
pub enum HeisCmd {
    /// Product of two elements
    Mul { a: String, b: String },
    /// Inverse of an element
    Inv { element: String },
    /// Commutator [a, b] = a b a⁻¹ b⁻¹
    Comm { a: String, b: String },
    /// The 3x3 upper unitriangular matrix form
    Matrix { element: String },
    /// Evaluate a word in the generators a, b, c
    Eval { word: String },
}

fn parse(s: &str) -> Result<HeisenbergElement, CliError> {
    parse_element_or_word(s).map_err(input_err)
}

pub fn run(cmd: &HeisCmd) -> Result<CommandOutput, CliError> {
    match cmd {
        HeisCmd::Mul { a, b } => {
            let (x, y) = (parse(a)?, parse(b)?);
            let product = x.mul(y);
            Ok(CommandOutput::new(
                "heis mul",
                json!({ "a": x.to_string(), "b": y.to_string() }),
                json!({ "product": product.to_string() }),
                product.to_string(),
            ))
        }
        HeisCmd::Inv { element } => {
            let x = parse(element)?;
            let inverse = x.inv();
            Ok(CommandOutput::new(
                "heis inv",
                json!({ "element": x.to_string() }),
                json!({ "inverse": inverse.to_string() }),
                inverse.to_string(),
            ))
        }
        HeisCmd::Comm { a, b } => {
            let (x, y) = (parse(a)?, parse(b)?);
            let comm = x.commutator(y);
            Ok(CommandOutput::new(
                "heis comm",
                json!({ "a": x.to_string(), "b": y.to_string() }),
                json!({ "commutator": comm.to_string() }),
                comm.to_string(),
            ))
        }
        HeisCmd::Matrix { element } => {
            let x = parse(element)?;
            let rows = vec![vec![1, x.s, x.k], vec![0, 1, x.m], vec![0, 0, 1]];
            let human = rows
                .iter()
                .map(|r| format!("[{} {} {}]", r[0], r[1], r[2]))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(CommandOutput::new(
                "heis matrix",
                json!({ "element": x.to_string() }),
                json!({ "matrix": rows }),
                human,
            ))
        }
        HeisCmd::Eval { word } => {
            let w: GroupWord = word.parse().map_err(input_err)?;
            let value = w.eval();
            Ok(CommandOutput::new(
                "heis eval",
                json!({ "word": word }),
                json!({ "element": value.to_string() }),
                value.to_string(),
            ))
        }
    }
}
