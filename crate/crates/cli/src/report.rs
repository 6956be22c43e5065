//! Machine-readable verification reports.

use hopf_galois::hopf::{AxiomReport, AxiomResult, Witness};
use serde::Serialize;
use serde_json::Value;

use crate::files::FORMAT_VERSION;

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct WitnessJson {
    pub index: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            index: w.index.clone(),
            lhs: w.lhs.clone(),
            rhs: w.rhs.clone(),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Detail {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl From<&AxiomResult> for Detail {
    fn from(r: &AxiomResult) -> Self {
        Detail {
            name: r.name.clone(),
            pass: r.pass,
            witness: r.witness.as_ref().map(WitnessJson::from),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Versions {
    pub format: u32,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    pub details: Vec<Detail>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub seed: u64,
    pub versions: Versions,
}

impl Report {
    pub fn new(check: &str, details: Vec<Detail>, seed: u64) -> Self {
        let pass = details.iter().all(|d| d.pass);
        let witness = details
            .iter()
            .find(|d| !d.pass)
            .and_then(|d| d.witness.as_ref())
            .map(|w| serde_json::to_value(w).expect("serializable"));
        Report {
            check: check.to_string(),
            pass,
            details,
            witness,
            seed,
            versions: Versions { format: FORMAT_VERSION },
        }
    }

    pub fn from_axioms(check: &str, rep: &AxiomReport, seed: u64) -> Self {
        Self::new(check, rep.results.iter().map(Detail::from).collect(), seed)
    }

    /// A single named outcome without a witness.
    pub fn single(check: &str, name: &str, pass: bool, seed: u64) -> Self {
        Self::new(
            check,
            vec![Detail {
                name: name.to_string(),
                pass,
                witness: None,
            }],
            seed,
        )
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
