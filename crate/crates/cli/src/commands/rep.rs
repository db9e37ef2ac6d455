//! `tconj rep`: irreducible representations, characters and the fixed
//! representation search.

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use tconj::heisenberg::{ball, parse_element_or_word};
use tconj::phase::RationalPhase;
use tconj::reps::{
    character, commutant_dimension, fixed_rep_search_in_ball, is_fixed_rep, rep_apply,
    CharacterValue, RepParams,
};
use tconj::twisted::Phi2Special;

use crate::output::{check_radius, input_err, CliError, CommandOutput};

#[derive(Args)]
pub struct ParamArgs {
    /// Dimension p (= denominator of eta)
    #[arg(long)]
    p: usize,
    /// xi as `num/den`, in [0, 1)
    #[arg(long)]
    xi: String,
    /// eta as `num/den`, an irreducible fraction of denominator p
    #[arg(long)]
    eta: String,
    /// alpha as `num/den`, in [0, 1)
    #[arg(long)]
    alpha: String,
}

impl ParamArgs {
    fn build(&self) -> Result<RepParams, CliError> {
        let parse = |s: &str| -> Result<RationalPhase, CliError> { s.parse().map_err(input_err) };
        RepParams::new(
            parse(&self.xi)?,
            parse(&self.eta)?,
            parse(&self.alpha)?,
            self.p,
        )
        .map_err(input_err)
    }

    fn echo(&self, params: &RepParams) -> Value {
        json!({
            "xi": params.xi().to_string(),
            "eta": params.eta().to_string(),
            "alpha": params.alpha().to_string(),
            "p": params.p(),
        })
    }
}

#[derive(Subcommand)]
pub enum RepCmd {
    /// The monomial operator of an element
    Apply {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        element: String,
    },
    /// Exact character value at an element
    Char {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        element: String,
    },
    /// Character table over an element ball
    CharTable {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 2)]
        radius: i64,
    },
    /// Search for representations fixed under precomposition with the
    /// special automorphism
    FixedSearch {
        #[arg(long)]
        p: usize,
        #[arg(long = "max-den", default_value_t = 4)]
        max_den: u64,
        /// Character-comparison ball radius (default 2p+2)
        #[arg(long)]
        radius: Option<i64>,
    },
    /// Dimension of the commutant (1 = irreducible)
    Commutant {
        #[command(flatten)]
        params: ParamArgs,
    },
}

fn char_json(value: &CharacterValue) -> Value {
    serde_json::to_value(value).expect("character serializes")
}

fn char_human(value: &CharacterValue) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let (re, im) = value.approx();
    let terms: Vec<String> = value
        .terms()
        .iter()
        .map(|t| format!("e^(2πi·{t})"))
        .collect();
    format!("{} ≈ {re:.6} + {im:.6}i", terms.join(" + "))
}

pub fn run(cmd: &RepCmd) -> Result<CommandOutput, CliError> {
    match cmd {
        RepCmd::Apply { params, element } => {
            let rp = params.build()?;
            let h = parse_element_or_word(element).map_err(input_err)?;
            let op = rep_apply(&rp, h);
            let human = (0..op.dim())
                .map(|j| {
                    let phase = &op.phases()[j];
                    if phase.is_zero() {
                        format!("e_{j} -> e_{}", op.perm()[j])
                    } else {
                        format!("e_{j} -> e^(2πi·{phase}) e_{}", op.perm()[j])
                    }
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(CommandOutput::new(
                "rep apply",
                json!({ "params": params.echo(&rp), "element": h.to_string() }),
                json!({
                    "p": op.dim(),
                    "perm": op.perm(),
                    "phases": op.phases().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                }),
                human,
            ))
        }
        RepCmd::Char { params, element } => {
            let rp = params.build()?;
            let h = parse_element_or_word(element).map_err(input_err)?;
            let value = character(&rp, h);
            Ok(CommandOutput::new(
                "rep char",
                json!({ "params": params.echo(&rp), "element": h.to_string() }),
                json!({ "value": char_json(&value) }),
                char_human(&value),
            ))
        }
        RepCmd::CharTable { params, radius } => {
            let rp = params.build()?;
            let radius = check_radius("--radius", *radius)?;
            let mut entries = vec![];
            let mut csv = String::from("element,terms,approx_re,approx_im\n");
            let mut human = String::new();
            for h in ball(radius) {
                let value = character(&rp, h);
                let (re, im) = value.approx();
                entries.push(json!({ "element": h.to_string(), "value": char_json(&value) }));
                csv.push_str(&format!(
                    "\"{}\",\"{}\",{re},{im}\n",
                    h,
                    value
                        .terms()
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(";")
                ));
                if !value.is_zero() {
                    human.push_str(&format!("{h}: {}\n", char_human(&value)));
                }
            }
            Ok(CommandOutput::new(
                "rep char-table",
                json!({ "params": params.echo(&rp), "radius": radius }),
                json!({ "params": params.echo(&rp), "entries": entries }),
                format!(
                    "nonzero entries on the radius-{radius} ball:\n{human}"
                ),
            )
            .with_csv(csv))
        }
        RepCmd::FixedSearch { p, max_den, radius } => {
            let phi = Phi2Special;
            let radius = check_radius("--radius", radius.unwrap_or(2 * *p as i64 + 2))?;
            let found =
                fixed_rep_search_in_ball(&phi, *p, *max_den, radius).map_err(input_err)?;
            let items: Vec<Value> = found
                .iter()
                .map(|rp| {
                    json!({
                        "xi": rp.xi().to_string(),
                        "eta": rp.eta().to_string(),
                        "alpha": rp.alpha().to_string(),
                        "p": rp.p(),
                    })
                })
                .collect();
            let human = if found.is_empty() {
                "no fixed representations in the searched grid".to_string()
            } else {
                found
                    .iter()
                    .map(|rp| {
                        format!(
                            "xi={} eta={} alpha={} (p={})",
                            rp.xi(),
                            rp.eta(),
                            rp.alpha(),
                            rp.p()
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            // sanity: everything reported must pass the membership test
            debug_assert!(found.iter().all(|rp| is_fixed_rep(rp, &phi, radius)));
            Ok(CommandOutput::new(
                "rep fixed-search",
                json!({ "p": p, "max_den": max_den, "radius": radius }),
                json!({ "count": found.len(), "found": items }),
                human,
            ))
        }
        RepCmd::Commutant { params } => {
            let rp = params.build()?;
            let dim = commutant_dimension(&rp);
            Ok(CommandOutput::new(
                "rep commutant",
                json!({ "params": params.echo(&rp) }),
                json!({ "dimension": dim }),
                format!("commutant dimension {dim} ({})", if dim == 1 { "irreducible" } else { "reducible" }),
            ))
        }
    }
}
