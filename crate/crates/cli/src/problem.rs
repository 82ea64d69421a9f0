//! Problem files: the semigroup, the ideal and the search settings.

use locoh_core::degrees::Module;
use locoh_core::semigroup::AffineSemigroup;
use locoh_core::Vector;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    #[default]
    Quotient,
    HoleModule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    /// Generator matrix, one row per coordinate of `Z^d`.
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    #[serde(default)]
    pub ideal: Vec<Vector>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub initial_box: Option<i64>,
    #[serde(default, rename = "char", skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    #[serde(default)]
    pub module_kind: ModuleKind,
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let prob: ProblemSpec =
            serde_json::from_str(text).map_err(|e| CliError::Validation(format!("malformed problem file: {e}")))?;
        prob.check_shape()?;
        Ok(prob)
    }

    fn check_shape(&self) -> Result<(), CliError> {
        let d = self.a.len();
        if d == 0 {
            return Err(CliError::Validation("A has no rows".into()));
        }
        let n = self.a[0].len();
        if n == 0 || self.a.iter().any(|r| r.len() != n) {
            return Err(CliError::Validation("A must be a nonempty rectangular matrix".into()));
        }
        if let Some(j) = (0..n).find(|&j| self.a.iter().all(|r| r[j] == 0)) {
            return Err(CliError::Validation(format!("column {j} of A is zero")));
        }
        if let Some(g) = self.ideal.iter().find(|g| g.len() != d) {
            return Err(CliError::Validation(format!("ideal generator {g:?} does not have {d} coordinates")));
        }
        if self.module_kind == ModuleKind::HoleModule && !self.ideal.is_empty() {
            return Err(CliError::Validation("the hole module takes no ideal".into()));
        }
        if matches!(self.initial_box, Some(b) if b < 1) {
            return Err(CliError::Validation("box must be positive".into()));
        }
        Ok(())
    }

    /// SHA-256 of the canonical serialization, so formatting changes in the
    /// file do not change the digest.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_vec(&serde_json::to_value(self).expect("problem serializes")).expect("json");
        hex::encode(Sha256::digest(canonical))
    }

    pub fn semigroup(&self) -> Result<AffineSemigroup, CliError> {
        Ok(AffineSemigroup::from_rows(&self.a)?)
    }

    /// The module described by the file; ideal generators are checked to
    /// lie in the semigroup.
    pub fn module(&self) -> Result<Module, CliError> {
        let q = self.semigroup()?;
        Ok(match self.module_kind {
            ModuleKind::Quotient => Module::quotient(q, self.ideal.clone())?,
            ModuleKind::HoleModule => Module::hole_module(q)?,
        })
    }

    /// Whether the module is the semigroup ring itself.
    pub fn is_ring(&self) -> bool {
        self.module_kind == ModuleKind::Quotient && self.ideal.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_formatting() {
        let a = ProblemSpec::parse(r#"{"A": [[1,1],[0,1]], "ideal": []}"#).unwrap();
        let b = ProblemSpec::parse("{\n  \"ideal\": [],\n  \"A\": [[1, 1], [0, 1]]\n}").unwrap();
        assert_eq!(a.digest(), b.digest());
        let c = ProblemSpec::parse(r#"{"A": [[1,1],[0,2]]}"#).unwrap();
        assert_ne!(a.digest(), c.digest());
    }

    #[test]
    fn rejects_bad_shapes() {
        for text in [
            r#"{"A": []}"#,
            r#"{"A": [[1,1],[0]]}"#,
            r#"{"A": [[1,0],[0,0]]}"#,
            r#"{"A": [[1,1]], "ideal": [[1,1]]}"#,
            r#"{"A": [[1]], "module_kind": "hole-module", "ideal": [[1]]}"#,
            r#"{"A": [[1]], "colour": 3}"#,
            r#"{"A": [[1]], "box": 0}"#,
        ] {
            assert!(matches!(ProblemSpec::parse(text), Err(CliError::Validation(_))), "{text}");
        }
    }

    #[test]
    fn ideal_outside_the_semigroup_is_rejected() {
        let prob = ProblemSpec::parse(r#"{"A": [[1,1,1,1],[0,1,3,4]], "ideal": [[1,2]]}"#).unwrap();
        assert!(matches!(prob.module(), Err(CliError::Validation(_))));
    }
}
