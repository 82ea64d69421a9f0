//! The bundled regression corpus and the `verify-examples` driver.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::{self, Command, Criterion, Settings};
use crate::problem::ProblemSpec;
use crate::CliError;

/// One command run against a fixture's problem, with its frozen results.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Run {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub criterion: Option<Criterion>,
    pub results: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub problem: ProblemSpec,
    pub runs: Vec<Run>,
}

const BUNDLED: &[(&str, &str)] = &[
    ("curve", include_str!("../fixtures/curve.json")),
    ("segre", include_str!("../fixtures/segre.json")),
    ("nonnormal-3d", include_str!("../fixtures/nonnormal-3d.json")),
    ("polytopal-4d", include_str!("../fixtures/polytopal-4d.json")),
    ("k-n", include_str!("../fixtures/k-n.json")),
    ("k-n2", include_str!("../fixtures/k-n2.json")),
];

fn parse_fixture(label: &str, text: &str) -> Result<Fixture, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Validation(format!("fixture {label}: {e}")))
}

pub fn bundled() -> Vec<Fixture> {
    BUNDLED.iter().map(|(name, text)| parse_fixture(name, text).expect("bundled fixtures parse")).collect()
}

/// Every `*.json` fixture in `dir`, by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Validation(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Validation(format!("{}: {e}", p.display())))?;
            parse_fixture(&p.display().to_string(), &text)
        })
        .collect()
}

/// First JSON path at which `got` and `want` differ.
fn first_difference(got: &Value, want: &Value, path: &str) -> Option<String> {
    match (got, want) {
        (Value::Object(a), Value::Object(b)) => {
            let keys: std::collections::BTreeSet<&String> = a.keys().chain(b.keys()).collect();
            keys.into_iter().find_map(|k| match (a.get(k), b.get(k)) {
                (Some(x), Some(y)) => first_difference(x, y, &format!("{path}/{k}")),
                _ => Some(format!("{path}/{k}")),
            })
        }
        (Value::Array(a), Value::Array(b)) if a.len() == b.len() => {
            a.iter().zip(b).enumerate().find_map(|(i, (x, y))| first_difference(x, y, &format!("{path}/{i}")))
        }
        _ => (got != want).then(|| if path.is_empty() { "/".to_string() } else { path.to_string() }),
    }
}

/// Reruns every fixture and compares with the frozen results. The
/// characteristic comes from `settings`, so the corpus can be replayed
/// over any field.
pub fn verify(fixtures: &[Fixture], settings: &Settings) -> (Value, Vec<String>) {
    let mut failed = Vec::new();
    let rows: Vec<Value> = fixtures
        .iter()
        .map(|fx| {
            let mut mismatches = Vec::new();
            for run in &fx.runs {
                let s = Settings { criterion: run.criterion.unwrap_or(Criterion::Chaff), ..*settings };
                let label = serde_json::to_value(run.command).expect("command name");
                match commands::run(run.command, &fx.problem, &s) {
                    Ok(out) => {
                        if let Some(path) = first_difference(&out.results, &run.results, "") {
                            mismatches.push(json!({"command": label, "path": path}));
                        }
                    }
                    Err(e) => mismatches.push(json!({"command": label, "error": e.to_string()})),
                }
            }
            if !mismatches.is_empty() {
                failed.push(fx.name.clone());
            }
            json!({"name": fx.name, "runs": fx.runs.len(), "passed": mismatches.is_empty(), "mismatches": mismatches})
        })
        .collect();
    (json!({"fixtures": rows, "passed": failed.is_empty()}), failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_are_well_formed() {
        let fx = bundled();
        assert_eq!(fx.len(), BUNDLED.len());
        for (f, (name, _)) in fx.iter().zip(BUNDLED) {
            assert_eq!(&f.name, name);
            assert!(!f.runs.is_empty());
        }
    }

    #[test]
    fn difference_paths() {
        let a = json!({"x": [1, 2, {"y": 3}], "z": true});
        assert_eq!(first_difference(&a, &a, ""), None);
        let b = json!({"x": [1, 2, {"y": 4}], "z": true});
        assert_eq!(first_difference(&a, &b, "").as_deref(), Some("/x/2/y"));
        let c = json!({"x": [1, 2], "z": true});
        assert_eq!(first_difference(&a, &c, "").as_deref(), Some("/x"));
        let d = json!({"x": [1, 2, {"y": 3}]});
        assert_eq!(first_difference(&a, &d, "").as_deref(), Some("/z"));
    }
}
