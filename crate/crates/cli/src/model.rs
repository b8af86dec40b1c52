//! JSON model files.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use coulombkit_core::coulomb::Model;
use coulombkit_core::exactring::{MonomialMap, Var};
use coulombkit_core::hypertoric::GaugeData;
use serde::{Deserialize, Serialize};

use crate::expr::{parse_monomial, ParseError};

/// On-disk description of a gauge datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub n: usize,
    pub k: usize,
    pub chi: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<usize>>,
    /// `a_i -> monomial`, e.g. `"a5": "a1^-1"`, applied to nonabelian output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_specialization: Option<BTreeMap<String, String>>,
    /// Optional names for the weight rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Shape(String),
    Invalid(coulombkit_core::Error),
    Specialization(String, ParseError),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "cannot read model: {e}"),
            LoadError::Json(e) => write!(f, "malformed model: {e}"),
            LoadError::Shape(why) => write!(f, "malformed model: {why}"),
            LoadError::Invalid(e) => write!(f, "invalid model: {e}"),
            LoadError::Specialization(key, e) => {
                write!(f, "invalid a_specialization for {key}: {e}")
            }
        }
    }
}

impl std::error::Error for LoadError {}

/// A validated model with its specialization map (identity if absent).
pub struct LoadedModel {
    pub file: ModelFile,
    pub model: Model,
    pub specialization: MonomialMap,
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<ModelFile, LoadError> {
        serde_json::from_str(text).map_err(LoadError::Json)
    }

    pub fn load(path: &Path) -> Result<ModelFile, LoadError> {
        Self::from_json(&std::fs::read_to_string(path).map_err(LoadError::Io)?)
    }

    /// Check the declared sizes and build the validated model.
    pub fn build(self) -> Result<LoadedModel, LoadError> {
        if self.chi.len() != self.n {
            return Err(LoadError::Shape(format!(
                "chi has {} rows, expected n = {}",
                self.chi.len(),
                self.n
            )));
        }
        if self.theta.len() != self.k {
            return Err(LoadError::Shape(format!(
                "theta has {} entries, expected k = {}",
                self.theta.len(),
                self.k
            )));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(LoadError::Shape(format!(
                    "{} labels for {} rows",
                    labels.len(),
                    self.n
                )));
            }
        }
        let mut data =
            GaugeData::new(self.chi.clone(), self.theta.clone()).map_err(LoadError::Invalid)?;
        if let Some(b) = &self.blocks {
            data = data.with_blocks(b.clone()).map_err(LoadError::Invalid)?;
        }
        let model = Model::new(data).map_err(LoadError::Invalid)?;
        let t = *model.table();
        let mut specialization = MonomialMap::identity();
        for (key, value) in self.a_specialization.iter().flatten() {
            let bad = |message: String| {
                LoadError::Specialization(key.clone(), ParseError { column: 1, message })
            };
            let i: usize = key
                .strip_prefix('a')
                .and_then(|r| r.parse().ok())
                .filter(|i| (1..=self.n).contains(i))
                .ok_or_else(|| bad("key must be a1..an".into()))?;
            let m =
                parse_monomial(value, &t).map_err(|e| LoadError::Specialization(key.clone(), e))?;
            if !m.free_of(t.s_range())
                || !m.free_of(t.kahler_range())
                || m.exponent(t.index(Var::QHalf)) != 0
            {
                return Err(bad("image must involve only a and h".into()));
            }
            specialization.set(t.index(Var::A(i - 1)), m);
        }
        Ok(LoadedModel {
            file: self,
            model,
            specialization,
        })
    }
}

/// Read, parse and validate a model file.
pub fn load_model(path: &Path) -> Result<LoadedModel, LoadError> {
    ModelFile::load(path)?.build()
}
