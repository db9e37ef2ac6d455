//! `tconj wreath`: wreath products of finitely generated abelian groups
//! with Z.
//!
//! Elements are given as JSON:
//! `{"k":2,"torsion":[2,3],"free":{"-2":3,"1":7},"tors":[{"copy":0,"factor":1,"residue":2}],"shift":4}`.
//! The `k` and `torsion` fields may be omitted when the `--k`/`--torsion`
//! flags fix the base group.

use std::collections::BTreeMap;

use clap::{Args, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Deserialize;
use serde_json::{json, Value};

use tconj::sampling::{random_base_element, random_torsion_element};
use tconj::wreath::{
    abelianize, commutator_closed_form, in_commutant, pi_matrix, preserves_base, AbelianSpec,
    ElementOrder, WreathAutomorphism, WreathElement,
};

use crate::output::{input_err, CliError, CommandOutput};

#[derive(Args)]
pub struct SpecArgs {
    /// Free rank k of the base group Z^k ⊕ torsion
    #[arg(long)]
    k: usize,
    /// Torsion factor orders, comma separated (e.g. `--torsion 2,3`)
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    torsion: Vec<i64>,
}

impl SpecArgs {
    fn build(&self) -> Result<AbelianSpec, CliError> {
        AbelianSpec::new(self.k, self.torsion.clone()).map_err(input_err)
    }
}

#[derive(Deserialize)]
struct TorsEntryJson {
    copy: i64,
    factor: usize,
    residue: i64,
}

#[derive(Deserialize)]
struct ElementJson {
    k: Option<usize>,
    torsion: Option<Vec<i64>>,
    #[serde(default)]
    free: BTreeMap<String, i64>,
    #[serde(default)]
    tors: Vec<TorsEntryJson>,
    #[serde(default)]
    shift: i64,
}

fn parse_element(spec: &AbelianSpec, text: &str) -> Result<WreathElement, CliError> {
    let raw: ElementJson = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("invalid element JSON: {e}")))?;
    if let Some(k) = raw.k {
        if k != spec.free_rank() {
            return Err(CliError::Input(format!(
                "element says k={k} but --k {} was given",
                spec.free_rank()
            )));
        }
    }
    if let Some(t) = &raw.torsion {
        if t != spec.torsion() {
            return Err(CliError::Input(format!(
                "element torsion {t:?} disagrees with --torsion {:?}",
                spec.torsion()
            )));
        }
    }
    let mut terms = vec![];
    for (e, c) in raw.free {
        let exp: i64 = e
            .parse()
            .map_err(|_| CliError::Input(format!("invalid exponent key `{e}`")))?;
        terms.push((exp, c));
    }
    WreathElement::new(
        spec.clone(),
        tconj::laurent::LaurentPoly::from_terms(terms),
        raw.tors.iter().map(|t| (t.copy, t.factor, t.residue)),
        raw.shift,
    )
    .map_err(input_err)
}

fn element_json(g: &WreathElement) -> Value {
    serde_json::to_value(g).expect("element serializes")
}

#[derive(Subcommand)]
pub enum WreathCmd {
    /// Product of two elements (positional JSON arguments)
    Mul {
        #[command(flatten)]
        spec: SpecArgs,
        a: String,
        b: String,
    },
    /// Inverse of an element
    Inv {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        element: String,
    },
    /// Commutator [a, b]; cross-checked against the closed form on
    /// torsion-free base groups
    Comm {
        #[command(flatten)]
        spec: SpecArgs,
        a: String,
        b: String,
    },
    /// Projection to the abelianization Z^{k+1} (torsion-free only)
    Abelianize {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        element: String,
    },
    /// Membership in the derived subgroup (torsion-free only)
    InCommutant {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        element: String,
    },
    /// Order of an element (finite or infinite)
    Order {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        element: String,
    },
    /// Build an automorphism from pieces, verify it, and report shifts,
    /// the induced abelianization matrix and subgroup preservation
    CheckAut {
        #[command(flatten)]
        spec: SpecArgs,
        /// Base matrix as JSON rows, e.g. `[[1,1],[0,1]]` (default identity)
        #[arg(long = "base-matrix")]
        base_matrix: Option<String>,
        /// Compose with the mirror (copy i -> -i, shift negated)
        #[arg(long)]
        mirror: bool,
        /// Inner conjugator element as JSON (default identity)
        #[arg(long)]
        inner: Option<String>,
        /// Unit multipliers for the torsion factors, comma separated
        /// (default all 1)
        #[arg(long = "torsion-units", value_delimiter = ',', num_args = 0..)]
        torsion_units: Option<Vec<i64>>,
        /// Number of random base/torsion samples for preservation checks
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

pub fn run(cmd: &WreathCmd) -> Result<CommandOutput, CliError> {
    match cmd {
        WreathCmd::Mul { spec, a, b } => {
            let spec = spec.build()?;
            let (x, y) = (parse_element(&spec, a)?, parse_element(&spec, b)?);
            let product = x.mul(&y).map_err(input_err)?;
            Ok(CommandOutput::new(
                "wreath mul",
                json!({ "a": element_json(&x), "b": element_json(&y) }),
                json!({ "product": element_json(&product) }),
                product.to_string(),
            ))
        }
        WreathCmd::Inv { spec, element } => {
            let spec = spec.build()?;
            let x = parse_element(&spec, element)?;
            let inverse = x.inv();
            Ok(CommandOutput::new(
                "wreath inv",
                json!({ "element": element_json(&x) }),
                json!({ "inverse": element_json(&inverse) }),
                inverse.to_string(),
            ))
        }
        WreathCmd::Comm { spec, a, b } => {
            let spec = spec.build()?;
            let (x, y) = (parse_element(&spec, a)?, parse_element(&spec, b)?);
            let comm = x.commutator(&y).map_err(input_err)?;
            let closed_form_agrees = if spec.is_torsion_free() {
                Some(commutator_closed_form(&x, &y).map_err(input_err)? == comm)
            } else {
                None
            };
            Ok(CommandOutput::new(
                "wreath comm",
                json!({ "a": element_json(&x), "b": element_json(&y) }),
                json!({
                    "commutator": element_json(&comm),
                    "closed_form_agrees": closed_form_agrees,
                }),
                comm.to_string(),
            ))
        }
        WreathCmd::Abelianize { spec, element } => {
            let spec = spec.build()?;
            let x = parse_element(&spec, element)?;
            let vector = abelianize(&x).map_err(input_err)?;
            Ok(CommandOutput::new(
                "wreath abelianize",
                json!({ "element": element_json(&x) }),
                json!({ "abelianization": vector }),
                format!("{vector:?}"),
            ))
        }
        WreathCmd::InCommutant { spec, element } => {
            let spec = spec.build()?;
            let x = parse_element(&spec, element)?;
            let answer = in_commutant(&x).map_err(input_err)?;
            Ok(CommandOutput::new(
                "wreath in-commutant",
                json!({ "element": element_json(&x) }),
                json!({ "in_commutant": answer }),
                answer.to_string(),
            ))
        }
        WreathCmd::Order { spec, element } => {
            let spec = spec.build()?;
            let x = parse_element(&spec, element)?;
            let (result, human) = match x.order() {
                ElementOrder::Finite(n) => (json!({ "order": n }), n.to_string()),
                ElementOrder::Infinite => (json!({ "order": "infinite" }), "infinite".into()),
            };
            Ok(CommandOutput::new(
                "wreath order",
                json!({ "element": element_json(&x) }),
                result,
                human,
            ))
        }
        WreathCmd::CheckAut {
            spec,
            base_matrix,
            mirror,
            inner,
            torsion_units,
            samples,
        } => {
            let spec = spec.build()?;
            let k = spec.free_rank();
            let base_rows: Vec<Vec<i64>> = match base_matrix {
                Some(text) => serde_json::from_str(text)
                    .map_err(|e| CliError::Input(format!("invalid base matrix JSON: {e}")))?,
                None => (0..k)
                    .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
                    .collect(),
            };
            let inner = match inner {
                Some(text) => parse_element(&spec, text)?,
                None => WreathElement::identity(spec.clone()),
            };
            let units = torsion_units
                .clone()
                .unwrap_or_else(|| vec![1; spec.torsion().len()]);
            let aut = WreathAutomorphism::new(spec.clone(), base_rows, *mirror, inner, units)
                .map_err(input_err)?;

            let images = aut.generator_images();
            let shifts: Vec<i64> = images.a_images().iter().map(|g| g.shift()).collect();
            let pi = pi_matrix(&images);
            let pi_rows = pi.to_i64_rows().ok_or_else(|| {
                CliError::Input("abelianization matrix entries exceed i64".into())
            })?;

            let mut rng = StdRng::seed_from_u64(0xC0FFEE);
            let base_samples: Vec<WreathElement> = (0..*samples)
                .map(|_| random_base_element(&mut rng, &spec))
                .collect();
            let base_ok = preserves_base(&aut, &base_samples).map_err(input_err)?;
            let nmax = spec.torsion_exponent();
            let mut torsion_ok = true;
            let mut torsion_killed = true;
            for _ in 0..*samples {
                let t = random_torsion_element(&mut rng, &spec);
                let img = aut.apply(&t).map_err(input_err)?;
                torsion_ok &= img.shift() == 0 && img.free_part().is_zero();
                torsion_killed &= img.pow(nmax).is_identity();
            }

            let human = format!(
                "verified automorphism\n  generator shifts: {shifts:?}\n  pi matrix: {pi_rows:?} \
                 (unimodular: {})\n  base preserved: {base_ok}\n  torsion preserved: {torsion_ok}\n  \
                 torsion killed by exponent {nmax}: {torsion_killed}",
                pi.is_unimodular()
            );
            Ok(CommandOutput::new(
                "wreath check-aut",
                json!({
                    "k": spec.free_rank(),
                    "torsion": spec.torsion(),
                    "mirror": mirror,
                    "samples": samples,
                }),
                json!({
                    "valid": true,
                    "generator_shifts": shifts,
                    "pi": pi_rows,
                    "pi_unimodular": pi.is_unimodular(),
                    "preserves_base": base_ok,
                    "preserves_torsion": torsion_ok,
                    "torsion_exponent": nmax,
                    "torsion_killed_by_exponent": torsion_killed,
                }),
                human,
            ))
        }
    }
}
