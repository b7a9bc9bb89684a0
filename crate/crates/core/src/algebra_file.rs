//! JSON algebra-definition files.
//!
//! ```json
//! {"basis": ["E","H","P1","P2","N1","N2","M"],
//!  "brackets": [{"left":"N1","right":"P1","result":{"E":"m"}}],
//!  "params": {"k":"1/2","m":"2","l":"0"}}
//! ```
//!
//! A coefficient is either a rational string (`"p/q"`) or one of the parameter
//! names `k`, `m`, `l`, optionally preceded by `-`, resolved against `params`.
//! A bracket listed in one order implies its antisymmetric partner; listing both
//! orders is allowed only when they are negatives of each other.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_algebra::LieAlgebra;
use crate::rational::{format_rational, parse_rational, ExtensionParams, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ExtensionParams>,
}

/// Result of loading a definition: the algebra and its Jacobi defect.
#[derive(Debug, Clone)]
pub struct LoadedAlgebra {
    pub algebra: LieAlgebra,
    pub params: Option<ExtensionParams>,
    pub jacobi_defect: Rational,
}

fn resolve(value: &str, params: Option<&ExtensionParams>) -> Result<Rational> {
    let v = value.trim();
    let (negate, body) = match v.strip_prefix('-') {
        Some(rest) if matches!(rest.trim(), "k" | "m" | "l") => (true, rest.trim()),
        _ => (false, v),
    };
    let symbol = match body {
        "k" | "m" | "l" => {
            let p = params.ok_or_else(|| {
                Error::InvalidAlgebra(format!("coefficient `{value}` refers to a parameter but no params were given"))
            })?;
            Some(match body {
                "k" => p.k.clone(),
                "m" => p.m.clone(),
                _ => p.l.clone(),
            })
        }
        _ => None,
    };
    match symbol {
        Some(s) if negate => Ok(-s),
        Some(s) => Ok(s),
        None => parse_rational(v),
    }
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Builds the algebra, closing the bracket table under antisymmetry.
    pub fn load(&self) -> Result<LoadedAlgebra> {
        let mut alg = LieAlgebra::zero(self.basis.clone());
        let n = alg.dim();
        let mut seen: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for entry in &self.brackets {
            let i = alg.index_of(&entry.left)?;
            let j = alg.index_of(&entry.right)?;
            let mut coeffs = vec![Rational::zero(); n];
            for (label, value) in &entry.result {
                coeffs[alg.index_of(label)?] += resolve(value, self.params.as_ref())?;
            }
            if i == j && coeffs.iter().any(|c| !c.is_zero()) {
                return Err(Error::InvalidAlgebra(format!("[{0}, {0}] must vanish", entry.left)));
            }
            if seen.insert((i, j), coeffs.clone()).is_some() {
                return Err(Error::InvalidAlgebra(format!("bracket [{}, {}] given twice", entry.left, entry.right)));
            }
            if let Some(partner) = seen.get(&(j, i)) {
                if partner.iter().zip(&coeffs).any(|(a, b)| !(a + b).is_zero()) {
                    return Err(Error::InvalidAlgebra(format!(
                        "[{}, {}] and [{}, {}] are not antisymmetric",
                        entry.left, entry.right, entry.right, entry.left
                    )));
                }
            }
            for (k, c) in coeffs.into_iter().enumerate() {
                alg.set_bracket(i, j, k, c);
            }
        }
        let jacobi_defect = alg.jacobi_defect();
        Ok(LoadedAlgebra { algebra: alg, params: self.params.clone(), jacobi_defect })
    }

    /// Writes every nonzero bracket `[X_i, X_j]` with `i < j` as numeric rationals.
    pub fn from_algebra(alg: &LieAlgebra, params: Option<&ExtensionParams>) -> Self {
        let n = alg.dim();
        let labels = alg.labels();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let result: BTreeMap<String, String> = (0..n)
                    .filter(|&k| !alg.constant(i, j, k).is_zero())
                    .map(|k| (labels[k].clone(), format_rational(alg.constant(i, j, k))))
                    .collect();
                if !result.is_empty() {
                    brackets.push(BracketEntry { left: labels[i].clone(), right: labels[j].clone(), result });
                }
            }
        }
        Self { basis: labels.to_vec(), brackets, params: params.cloned() }
    }
}
