//! One function per subcommand, each producing the `results` object of a
//! report.

use std::collections::BTreeMap;

use locoh_core::cohomology::{
    cm_quotient, cm_semigroup_voidgrains, local_cohomology_series, trung_hoa, Field, IshidaSlices,
};
use locoh_core::degrees::SearchOptions;
use locoh_core::degspace::{DegreeSpace, RationalFunction, Series};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::problem::ProblemSpec;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// Cohomology of every chaff concentrates in the Krull dimension.
    Chaff,
    /// Only chaffs of degrees made of holes are examined (semigroup rings).
    VoidGrains,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Faces,
    Holes,
    Pairs,
    Grains,
    Cohomology,
    Hilbert,
    Cm,
    TrungHoa,
}

/// Resolved settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub initial_box: Option<i64>,
    pub box_cap: Option<i64>,
    pub field: Field,
    pub criterion: Criterion,
}

impl Settings {
    fn search(&self) -> SearchOptions {
        SearchOptions { initial_box: self.initial_box, box_cap: self.box_cap, ..SearchOptions::default() }
    }
}

/// Output of a command: its results plus any warnings it raised.
pub struct Outcome {
    pub results: Value,
    pub warnings: Vec<String>,
}

impl From<Value> for Outcome {
    fn from(results: Value) -> Self {
        Outcome { results, warnings: Vec::new() }
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report values serialize")
}

pub fn run(command: Command, prob: &ProblemSpec, settings: &Settings) -> Result<Outcome, CliError> {
    match command {
        Command::Faces => faces(prob),
        Command::Holes => holes(prob),
        Command::Pairs => pairs(prob, settings),
        Command::Grains => grains(prob, settings),
        Command::Cohomology => cohomology(prob, settings),
        Command::Hilbert => hilbert(prob, settings),
        Command::Cm => cm(prob, settings),
        Command::TrungHoa => trung_hoa_verdict(prob, settings),
    }
}

fn faces(prob: &ProblemSpec) -> Result<Outcome, CliError> {
    let q = prob.semigroup()?;
    let faces: Vec<Value> = q
        .faces
        .faces
        .iter()
        .map(|f| {
            json!({
                "id": f.id,
                "dim": f.dim,
                "generators": f.generator_indices,
                "tight_normals": f.tight_normals,
            })
        })
        .collect();
    Ok(json!({
        "dim": q.cone.dim,
        "facet_normals": q.cone.facet_normals,
        "equations": q.cone.equations,
        "pointed": q.is_pointed(),
        "faces": faces,
    })
    .into())
}

fn holes(prob: &ProblemSpec) -> Result<Outcome, CliError> {
    let q = prob.semigroup()?;
    let normal = q.is_normal()?;
    let holes = q.holes(64)?;
    let packets: Vec<Value> =
        holes.packets.iter().map(|p| json!({"base": p.base, "monoid_gens": p.monoid_gens})).collect();
    Ok(json!({
        "normal": normal,
        "hilbert_basis": q.hilbert_basis()?,
        "packets": packets,
        "level_bound": holes.level_bound,
    })
    .into())
}

fn pairs(prob: &ProblemSpec, settings: &Settings) -> Result<Outcome, CliError> {
    let m = prob.module()?;
    let all = m.all_degree_pairs(&settings.search())?;
    let locs: Vec<Value> = all
        .values()
        .map(|ps| {
            let pairs: Vec<Value> = ps.pairs.iter().map(|p| json!({"face": p.face, "shift": p.shift})).collect();
            let classes: Vec<Value> = m
                .overlap_classes(&ps.pairs)
                .iter()
                .map(|c| {
                    json!({
                        "face": c.face,
                        "key": c.key,
                        "shifts": c.members.iter().map(|p| &p.shift).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({
                "face": ps.loc_face,
                "face_generators": m.q.face_generators(ps.loc_face),
                "pairs": pairs,
                "classes": classes,
                "level_bound": ps.level_bound,
            })
        })
        .collect();
    let krull = m.krull_dim(&all[&m.q.apex()]);
    Ok(json!({"krull_dim": krull, "localizations": locs}).into())
}

fn signature_string(sig: &[bool]) -> String {
    sig.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn grains(prob: &ProblemSpec, settings: &Settings) -> Result<Outcome, CliError> {
    let m = prob.module()?;
    let ds = DegreeSpace::new(&m, &settings.search())?;
    let set = ds.grains()?;
    let grains: Vec<Value> = set
        .grains
        .iter()
        .map(|g| {
            json!({
                "signature": signature_string(&g.signature),
                "chaff": g.chaff,
                "sampled_points": g.points.len(),
                "first_point": g.points[0],
            })
        })
        .collect();
    let mut chaffs: Vec<&Vec<usize>> = set.grains.iter().map(|g| &g.chaff).collect();
    chaffs.sort();
    chaffs.dedup();
    Ok(json!({
        "half_width": set.half_width,
        "classes": ds.classes.len(),
        "grains": grains,
        "chaffs": chaffs,
    })
    .into())
}

fn cohomology(prob: &ProblemSpec, settings: &Settings) -> Result<Outcome, CliError> {
    let m = prob.module()?;
    let ds = DegreeSpace::new(&m, &settings.search())?;
    let set = ds.grains()?;
    let slices = IshidaSlices::new(&m.q, settings.field)?;
    let mut table: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for g in &set.grains {
        *table.entry(g.chaff.clone()).or_default() += 1;
    }
    let rows: Vec<Value> = table
        .iter()
        .map(|(chaff, &n)| json!({"chaff": chaff, "grains": n, "cohomology": slices.cohomology(chaff)}))
        .collect();
    Ok(json!({"half_width": set.half_width, "top": slices.top(), "chaffs": rows}).into())
}

/// `{num: [[c, e]...], den: [[[c, e]...]...]}` in canonical term order.
fn rational_value(r: &RationalFunction) -> Value {
    let mut num = r.num.clone();
    num.sort_by(|a, b| a.1.cmp(&b.1));
    let den: Vec<Vec<(i64, Vec<i64>)>> = r
        .den
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_by(|a, b| a.1.cmp(&b.1));
            f
        })
        .collect();
    json!({"num": num, "den": den})
}

fn series_value(index: usize, s: &Series, level: &[i64]) -> Value {
    let mut terms = s.terms.clone();
    terms.sort();
    json!({
        "index": index,
        "terms": terms,
        "rational": rational_value(&s.rational(level)),
        "exact": s.exact,
        "half_width": s.half_width,
    })
}

fn hilbert(prob: &ProblemSpec, settings: &Settings) -> Result<Outcome, CliError> {
    let m = prob.module()?;
    let ds = DegreeSpace::new(&m, &settings.search())?;
    let series = local_cohomology_series(&ds, settings.field)?;
    let level = m.q.level.clone().expect("pointed semigroup has a level");
    let warnings = series
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.exact)
        .map(|(i, s)| format!("H^{i} series did not stabilize; terms describe the box of half-width {}", s.half_width))
        .collect();
    let values: Vec<Value> = series.iter().enumerate().map(|(i, s)| series_value(i, s, &level)).collect();
    Ok(Outcome { results: json!({"series": values}), warnings })
}

fn cm(prob: &ProblemSpec, settings: &Settings) -> Result<Outcome, CliError> {
    let report = match settings.criterion {
        Criterion::Chaff => {
            let m = prob.module()?;
            let ds = DegreeSpace::new(&m, &settings.search())?;
            cm_quotient(&ds, settings.field)?
        }
        Criterion::VoidGrains => {
            if !prob.is_ring() {
                return Err(CliError::Validation("the void-grain criterion applies to semigroup rings only".into()));
            }
            cm_semigroup_voidgrains(&prob.semigroup()?, settings.field, &settings.search())?
        }
    };
    let mut v = to_value(&report);
    v["criterion"] = to_value(&settings.criterion);
    Ok(v.into())
}

fn trung_hoa_verdict(prob: &ProblemSpec, settings: &Settings) -> Result<Outcome, CliError> {
    if !prob.is_ring() {
        return Err(CliError::Validation("the Trung–Hoa criterion applies to semigroup rings only".into()));
    }
    let report = trung_hoa(&prob.semigroup()?, settings.field, &settings.search())?;
    Ok(to_value(&report).into())
}
