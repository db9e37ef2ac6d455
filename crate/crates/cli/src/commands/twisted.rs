//! `tconj twisted`: twisted conjugacy classes and Reidemeister numbers.

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use tconj::heisenberg::{ball, parse_element_or_word, HeisenbergElement};
use tconj::oracle::ClassPartition;
use tconj::twisted::{heisenberg_interface, Phi2Special, PhiN, TwistedError};

use crate::output::{check_radius, input_err, CliError, CommandOutput};

#[derive(Args)]
pub struct AutomorphismChoice {
    /// Family parameter N of the closed-form automorphism (R = 2N)
    #[arg(long = "N", value_name = "N", conflicts_with = "special_phi2")]
    n: Option<i64>,

    /// Use the fixed special automorphism with R = 2
    #[arg(long = "special-phi2")]
    special_phi2: bool,
}

impl AutomorphismChoice {
    fn phi_n(&self) -> Result<Option<PhiN>, CliError> {
        match (self.n, self.special_phi2) {
            (Some(n), false) => Ok(Some(PhiN::new(n).map_err(input_err)?)),
            (None, true) => Ok(None),
            _ => Err(CliError::Input(
                "choose an automorphism: --N <N> or --special-phi2".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
pub enum TwistedCmd {
    /// Closed-form class label of an element (family automorphism only)
    Classify {
        #[command(flatten)]
        phi: AutomorphismChoice,
        #[arg(long)]
        element: String,
    },
    /// Reidemeister number: closed-form class count for --N, oracle block
    /// count for --special-phi2
    Reidemeister {
        #[command(flatten)]
        phi: AutomorphismChoice,
        /// Element-ball radius (default: 2N for --N, 6 for --special-phi2)
        #[arg(long)]
        radius: Option<i64>,
        /// Conjugator-box radius for the oracle (default 8)
        #[arg(long = "conj-radius", default_value_t = 8)]
        conj_radius: i64,
    },
    /// Brute-force partition of an element ball into twisted classes
    OraclePartition {
        #[command(flatten)]
        phi: AutomorphismChoice,
        #[arg(long)]
        radius: Option<i64>,
        #[arg(long = "conj-radius", default_value_t = 8)]
        conj_radius: i64,
    },
}

fn blocks_json(partition: &ClassPartition<HeisenbergElement>) -> Vec<Value> {
    partition
        .blocks()
        .iter()
        .map(|b| json!({ "representative": b[0].to_string(), "size": b.len() }))
        .collect()
}

fn class_table_json(phi: &PhiN, radius: i64) -> (Vec<Value>, usize) {
    let table = phi.class_table(radius);
    let labels: Vec<Value> = table
        .iter()
        .map(|(label, count)| {
            json!({
                "r": label.r,
                "parity": label.parity,
                "representative": phi.class_representative(*label).to_string(),
                "count_in_ball": count,
            })
        })
        .collect();
    (labels, table.len())
}

fn diagnostic(e: TwistedError) -> CliError {
    match e {
        TwistedError::BallTooSmall { .. } => CliError::Diagnostic(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

pub fn run(cmd: &TwistedCmd) -> Result<CommandOutput, CliError> {
    match cmd {
        TwistedCmd::Classify { phi, element } => {
            let Some(phi) = phi.phi_n()? else {
                return Err(CliError::Input(
                    "closed-form classification exists only for the --N family; \
                     use `twisted oracle-partition --special-phi2`"
                        .into(),
                ));
            };
            let h = parse_element_or_word(element).map_err(input_err)?;
            let label = phi.class_label(h);
            let rep = phi.class_representative(label);
            Ok(CommandOutput::new(
                "twisted classify",
                json!({ "N": phi.n(), "element": h.to_string() }),
                json!({
                    "N": phi.n(),
                    "element": h.to_string(),
                    "label": { "r": label.r, "parity": label.parity },
                    "representative": rep.to_string(),
                }),
                format!("label (r={}, parity={}), representative {rep}", label.r, label.parity),
            ))
        }
        TwistedCmd::Reidemeister {
            phi,
            radius,
            conj_radius,
        } => match phi.phi_n()? {
            Some(phi) => {
                let radius = check_radius(
                    "--radius",
                    radius.unwrap_or_else(|| phi.default_ball_radius()),
                )?;
                let r = phi.reidemeister_number(radius).map_err(diagnostic)?;
                let (labels, _) = class_table_json(&phi, radius);
                let csv = csv_labels(&labels);
                Ok(CommandOutput::new(
                    "twisted reidemeister",
                    json!({ "N": phi.n(), "radius": radius }),
                    json!({ "N": phi.n(), "labels": labels, "reidemeister": r }),
                    format!("R = {r}"),
                )
                .with_csv(csv))
            }
            None => {
                let radius = check_radius("--radius", radius.unwrap_or(6))?;
                let conj_radius = check_radius("--conj-radius", *conj_radius)?;
                let iface = heisenberg_interface(Phi2Special);
                let partition = iface.partition_ball(&ball(radius), &ball(conj_radius));
                let blocks = blocks_json(&partition);
                let count = partition.class_count();
                let csv = csv_blocks(&blocks);
                Ok(CommandOutput::new(
                    "twisted reidemeister",
                    json!({ "special_phi2": true, "radius": radius, "conj_radius": conj_radius }),
                    json!({ "special_phi2": true, "blocks": blocks, "reidemeister": count }),
                    format!("R = {count} (oracle block count on the radius-{radius} ball)"),
                )
                .with_csv(csv))
            }
        },
        TwistedCmd::OraclePartition {
            phi,
            radius,
            conj_radius,
        } => {
            let (inputs, partition) = match phi.phi_n()? {
                Some(phi) => {
                    let radius = check_radius(
                        "--radius",
                        radius.unwrap_or_else(|| phi.default_ball_radius().min(6)),
                    )?;
                    let conj = check_radius("--conj-radius", *conj_radius)?;
                    let iface = heisenberg_interface(phi);
                    (
                        json!({ "N": phi.n(), "radius": radius, "conj_radius": conj }),
                        iface.partition_ball(&ball(radius), &ball(conj)),
                    )
                }
                None => {
                    let radius = check_radius("--radius", radius.unwrap_or(6))?;
                    let conj = check_radius("--conj-radius", *conj_radius)?;
                    let iface = heisenberg_interface(Phi2Special);
                    (
                        json!({ "special_phi2": true, "radius": radius, "conj_radius": conj }),
                        iface.partition_ball(&ball(radius), &ball(conj)),
                    )
                }
            };
            let blocks = blocks_json(&partition);
            let human = format!(
                "{} blocks\n{}",
                partition.class_count(),
                partition
                    .blocks()
                    .iter()
                    .map(|b| format!("  {} ({} elements)", b[0], b.len()))
                    .collect::<Vec<_>>()
                    .join("\n")
            );
            let csv = csv_blocks(&blocks);
            Ok(CommandOutput::new(
                "twisted oracle-partition",
                inputs,
                json!({ "block_count": partition.class_count(), "blocks": blocks }),
                human,
            )
            .with_csv(csv))
        }
    }
}

fn csv_labels(labels: &[Value]) -> String {
    let mut out = String::from("r,parity,representative,count_in_ball\n");
    for l in labels {
        out.push_str(&format!(
            "{},{},\"{}\",{}\n",
            l["r"], l["parity"],
            l["representative"].as_str().unwrap_or(""),
            l["count_in_ball"]
        ));
    }
    out
}

fn csv_blocks(blocks: &[Value]) -> String {
    let mut out = String::from("representative,size\n");
    for b in blocks {
        out.push_str(&format!(
            "\"{}\",{}\n",
            b["representative"].as_str().unwrap_or(""),
            b["size"]
        ));
    }
    out
}
