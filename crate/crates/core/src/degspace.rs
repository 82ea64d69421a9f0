//! The degree space of a module: grains, chaffs and generating functions.
//!
//! A point's extended signature records, for every localization and every
//! overlap class there, whether the point lies in the union of the class.
//! Grains are the classes of points with equal extended signature; the chaff
//! of a point is the set of localizations whose degree set contains it.
//!
//! Everything infinite is sampled on a coordinate box whose half-width grows
//! until the sampled structure stops changing.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::degrees::{DegreePair, Module, OverlapClass, PairSet, SearchOptions};
use crate::error::{Error, Result};
use crate::exact::{self, dot, rank_of, Vector};
use crate::polyhedra::combinations;

/// One membership bit per overlap class, in [`DegreeSpace::classes`] order.
pub type Signature = Vec<bool>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grain {
    pub signature: Signature,
    /// Localization faces whose degree set contains the grain.
    pub chaff: Vec<usize>,
    /// Points of the grain inside the sampling box, sorted.
    pub points: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrainSet {
    pub grains: Vec<Grain>,
    pub half_width: i64,
}

/// Degrees of the module inside a box, with their extended signatures.
#[derive(Debug)]
pub struct BoxSample {
    pub half_width: i64,
    pub points: Vec<(Vector, Signature)>,
}

/// `coeff · x^base / Π (1 − x^v)` over the directions `v`; equivalently the
/// indicator of `base + N(directions)` scaled by `coeff`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SeriesTerm {
    pub coeff: i64,
    pub base: Vector,
    pub directions: Vec<Vector>,
}

/// A multigraded series written as a finite sum of packet indicators.
///
/// `exact` is set when two consecutive sampling boxes produced the same
/// decomposition; otherwise the terms describe the largest box tried.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Series {
    pub dim: usize,
    pub terms: Vec<SeriesTerm>,
    pub exact: bool,
    pub half_width: i64,
}

/// Sparse Laurent polynomial: `(coefficient, exponent)` pairs.
pub type Laurent = Vec<(i64, Vector)>;

/// `num / Π den` with every denominator factor a binomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalFunction {
    pub num: Laurent,
    pub den: Vec<Laurent>,
}

impl SeriesTerm {
    pub fn contains(&self, a: &[i64]) -> bool {
        let diff = exact::sub(a, &self.base);
        if self.directions.is_empty() {
            return diff.iter().all(|&c| c == 0);
        }
        match exact::solve_in_span(&self.directions, &diff) {
            Some(lambda) => lambda.iter().all(|l| l.is_integer() && !l.is_negative()),
            None => false,
        }
    }
}

impl Series {
    pub fn zero(dim: usize) -> Self {
        Series { dim, terms: Vec::new(), exact: true, half_width: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, a: &[i64]) -> i64 {
        self.terms.iter().filter(|t| t.contains(a)).map(|t| t.coeff).sum()
    }

    /// Nonzero coefficients on `[-b, b]^d`.
    pub fn expand(&self, b: i64) -> BTreeMap<Vector, i64> {
        box_points(self.dim, b)
            .into_iter()
            .filter_map(|a| {
                let c = self.coefficient(&a);
                (c != 0).then_some((a, c))
            })
            .collect()
    }

    /// Collects the terms over a common denominator. Directions on which
    /// `level` is negative are written as `x^u − 1` with `u = −v`, so the
    /// series expands in the direction the packets point.
    pub fn rational(&self, level: &[i64]) -> RationalFunction {
        // factor key -> multiplicity needed
        let mut den: BTreeMap<Vector, usize> = BTreeMap::new();
        let mut parts: Vec<(Laurent, BTreeMap<Vector, usize>)> = Vec::new();
        for t in &self.terms {
            let mut base = t.base.clone();
            let mut facs: BTreeMap<Vector, usize> = BTreeMap::new();
            for v in &t.directions {
                if dot(level, v) < 0 {
                    // 1/(1 − x^v) = x^u / (x^u − 1)
                    base = exact::sub(&base, v);
                }
                *facs.entry(v.clone()).or_default() += 1;
            }
            for (v, &m) in &facs {
                let e = den.entry(v.clone()).or_default();
                *e = (*e).max(m);
            }
            parts.push((vec![(t.coeff, base)], facs));
        }
        let mut num: BTreeMap<Vector, i64> = BTreeMap::new();
        for (mut poly, facs) in parts {
            for (v, &need) in &den {
                for _ in facs.get(v).copied().unwrap_or(0)..need {
                    poly = mul_laurent(&poly, &factor(v, level));
                }
            }
            for (c, e) in poly {
                *num.entry(e).or_default() += c;
            }
        }
        RationalFunction {
            num: num.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (c, e)).collect(),
            den: den.iter().flat_map(|(v, &m)| std::iter::repeat_n(factor(v, level), m)).collect(),
        }
    }
}

fn factor(v: &[i64], level: &[i64]) -> Laurent {
    let zero = vec![0; v.len()];
    if dot(level, v) < 0 {
        vec![(1, exact::neg(v)), (-1, zero)]
    } else {
        vec![(1, zero), (-1, v.to_vec())]
    }
}

fn mul_laurent(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out: BTreeMap<Vector, i64> = BTreeMap::new();
    for (ca, ea) in a {
        for (cb, eb) in b {
            *out.entry(exact::add(ea, eb)).or_default() += ca * cb;
        }
    }
    out.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (c, e)).collect()
}

/// All points of `[-b, b]^d` in lexicographic order.
pub fn box_points(dim: usize, b: i64) -> Vec<Vector> {
    let mut out = vec![Vec::with_capacity(dim)];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vector| {
                (-b..=b).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

fn in_box(x: &[i64], b: i64) -> bool {
    x.iter().all(|c| c.abs() <= b)
}

fn l1(x: &[i64]) -> i64 {
    x.iter().map(|c| c.abs()).sum()
}

/// Greedy decomposition of a point set into disjoint packets
/// `p + N(V)`, with `V` drawn from `directions` and linearly independent.
///
/// Only points in `[-inner, inner]^d` start packets; containment is checked
/// against the whole `[-outer, outer]^d` sample.
pub fn peel(points: &HashSet<Vector>, dim: usize, inner: i64, outer: i64, directions: &[Vector]) -> Vec<(Vector, Vec<Vector>)> {
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for k in (1..=dim.min(directions.len())).rev() {
        for s in combinations(directions.len(), k) {
            let vs: Vec<Vector> = s.iter().map(|&i| directions[i].clone()).collect();
            if rank_of(&vs, dim) == k {
                subsets.push(s);
            }
        }
    }
    subsets.push(Vec::new());
    let margin = directions.iter().map(|v| v.iter().map(|c| c.abs()).max().unwrap_or(0)).max().unwrap_or(0)
        * dim as i64;

    let mut remaining: HashSet<Vector> = points.clone();
    let mut starts: Vec<&Vector> = points.iter().filter(|p| in_box(p, inner)).collect();
    starts.sort_by_key(|p| (l1(p), (*p).clone()));
    let mut out = Vec::new();
    for p in starts {
        if !remaining.contains(p) {
            continue;
        }
        for s in &subsets {
            let vs: Vec<Vector> = s.iter().map(|&i| directions[i].clone()).collect();
            if let Some(cover) = packet_cover(p, &vs, outer, margin, &remaining) {
                for x in &cover {
                    remaining.remove(x);
                }
                out.push((p.clone(), vs));
                break;
            }
        }
    }
    out.sort();
    out
}

/// Points of `p + N(vs)` inside the outer box, or `None` if one of them is
/// not in `remaining`.
fn packet_cover(p: &Vector, vs: &[Vector], outer: i64, margin: i64, remaining: &HashSet<Vector>) -> Option<Vec<Vector>> {
    let mut seen: HashSet<Vector> = HashSet::from([p.clone()]);
    let mut queue = VecDeque::from([p.clone()]);
    let mut cover = Vec::new();
    while let Some(x) = queue.pop_front() {
        if in_box(&x, outer) {
            if !remaining.contains(&x) {
                return None;
            }
            cover.push(x.clone());
        }
        for v in vs {
            let y = exact::add(&x, v);
            if in_box(&y, outer + margin) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Some(cover)
}

pub struct DegreeSpace<'m> {
    pub module: &'m Module,
    pub pairs: BTreeMap<usize, PairSet>,
    /// Overlap classes of every localization, ordered by localization face.
    pub classes: Vec<OverlapClass>,
    initial_box: i64,
    box_cap: i64,
    samples: Mutex<HashMap<i64, Arc<BoxSample>>>,
}

impl<'m> DegreeSpace<'m> {
    pub fn new(module: &'m Module, opts: &SearchOptions) -> Result<Self> {
        let pairs = module.all_degree_pairs(opts)?;
        let mut classes = Vec::new();
        for ps in pairs.values() {
            classes.extend(module.overlap_classes(&ps.pairs));
        }
        let apex = module.q.apex();
        let reach = pairs[&apex]
            .pairs
            .iter()
            .map(|p| &p.shift)
            .chain(module.ideal.iter())
            .flat_map(|v| v.iter().map(|c| c.abs()))
            .max()
            .unwrap_or(0);
        let initial_box = opts.initial_box.unwrap_or((2 * reach).max(4)).max(1);
        let box_cap = opts.box_cap.unwrap_or(4 * initial_box).max(initial_box);
        Ok(DegreeSpace { module, pairs, classes, initial_box, box_cap, samples: Mutex::new(HashMap::new()) })
    }

    pub fn dim(&self) -> usize {
        self.module.q.dim
    }

    pub fn initial_box(&self) -> i64 {
        self.initial_box
    }

    pub fn box_cap(&self) -> i64 {
        self.box_cap
    }

    pub fn classes_at(&self, loc: usize) -> Vec<&OverlapClass> {
        self.classes.iter().filter(|c| c.loc_face == loc).collect()
    }

    pub fn extended_signature(&self, a: &[i64]) -> Signature {
        self.classes.iter().map(|c| self.module.class_contains(c, a)).collect()
    }

    /// Localizations whose degree set meets the signature.
    pub fn chaff_of(&self, sig: &[bool]) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.classes.iter().zip(sig).filter(|(_, &b)| b).map(|(c, _)| c.loc_face).collect();
        out.dedup();
        out
    }

    /// Chaff computed directly from degree-set membership.
    pub fn raw_chaff(&self, a: &[i64]) -> Vec<usize> {
        self.module.q.face_ids().into_iter().filter(|&f| self.module.deg_member(f, a)).collect()
    }

    fn pair_points_in_box(&self, p: &DegreePair, b: i64) -> Vec<Vector> {
        let m = self.module;
        let red = m.reducer(p.loc_face);
        let w = m.level_at(p.loc_face);
        let wmax: i64 = w.iter().map(|c| c.abs() * b).sum();
        let gens: Vec<Vector> = m.q.face_generators(p.face).into_iter().filter(|g| !red.contains(g)).collect();
        let start = red.reduce(&p.shift);
        let mut seen: HashSet<Vector> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = red.reduce(&exact::add(&x, g));
                if dot(&w, &y) <= wmax && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().flat_map(|r| red.coset_points_in_box(&r, b)).collect()
    }

    /// Degrees of the module (over all localizations) inside `[-b, b]^d`.
    pub fn points_in_box(&self, b: i64) -> Vec<Vector> {
        let all: Vec<&DegreePair> = self.pairs.values().flat_map(|ps| ps.pairs.iter()).collect();
        let set: HashSet<Vector> = all.par_iter().flat_map_iter(|p| self.pair_points_in_box(p, b)).collect();
        let mut pts: Vec<Vector> = set.into_iter().collect();
        pts.sort();
        pts
    }

    pub fn sample(&self, b: i64) -> Arc<BoxSample> {
        if let Some(s) = self.samples.lock().expect("sample cache").get(&b) {
            return s.clone();
        }
        let pts = self.points_in_box(b);
        let points: Vec<(Vector, Signature)> = pts
            .into_par_iter()
            .map(|a| {
                let s = self.extended_signature(&a);
                (a, s)
            })
            .collect();
        let s = Arc::new(BoxSample { half_width: b, points });
        self.samples.lock().expect("sample cache").insert(b, s.clone());
        s
    }

    pub fn grains_in_box(&self, b: i64) -> Vec<Grain> {
        let sample = self.sample(b);
        let mut groups: BTreeMap<&Signature, Vec<Vector>> = BTreeMap::new();
        for (a, s) in &sample.points {
            groups.entry(s).or_default().push(a.clone());
        }
        let mut grains: Vec<Grain> = groups
            .into_iter()
            .map(|(s, points)| Grain { chaff: self.chaff_of(s), signature: s.clone(), points })
            .collect();
        grains.sort_by(|x, y| x.points[0].cmp(&y.points[0]));
        grains
    }

    /// Grains sampled on a box large enough that doubling it reveals no new
    /// extended signature.
    pub fn grains(&self) -> Result<GrainSet> {
        let mut b = self.initial_box;
        loop {
            if 2 * b > self.box_cap {
                return Err(Error::BoxInsufficient { what: "grain signatures".into(), cap: self.box_cap });
            }
            let here: HashSet<Signature> = self.sample(b).points.iter().map(|(_, s)| s.clone()).collect();
            let there: HashSet<Signature> = self.sample(2 * b).points.iter().map(|(_, s)| s.clone()).collect();
            if here == there {
                return Ok(GrainSet { grains: self.grains_in_box(b), half_width: b });
            }
            b *= 2;
        }
    }

    /// Primitive extreme-ray directions and their negatives.
    pub fn peel_directions(&self) -> Vec<Vector> {
        let q = &self.module.q;
        let mut dirs: Vec<Vector> = q
            .faces
            .nonempty()
            .filter(|f| f.dim == 1)
            .map(|f| exact::primitive(&q.generators[f.generator_indices[0]]))
            .collect();
        dirs.sort();
        dirs.dedup();
        let neg: Vec<Vector> = dirs.iter().map(|v| exact::neg(v)).collect();
        dirs.extend(neg);
        dirs
    }

    fn series_in_box(&self, b: i64, weight: &(dyn Fn(&[bool]) -> i64 + Sync)) -> Vec<SeriesTerm> {
        let sample = self.sample(b);
        let mut parts: BTreeMap<i64, HashSet<Vector>> = BTreeMap::new();
        for (a, s) in &sample.points {
            let w = weight(s);
            if w != 0 {
                parts.entry(w).or_default().insert(a.clone());
            }
        }
        let dirs = self.peel_directions();
        let mut terms: Vec<SeriesTerm> = parts
            .into_par_iter()
            .flat_map_iter(|(w, pts)| {
                peel(&pts, self.dim(), b / 2, b, &dirs)
                    .into_iter()
                    .map(move |(base, directions)| SeriesTerm { coeff: w, base, directions })
            })
            .collect();
        terms.sort();
        terms
    }

    /// Series `Σ weight(signature(a)) x^a` over the degree space.
    pub fn series(&self, weight: &(dyn Fn(&[bool]) -> i64 + Sync)) -> Series {
        let dim = self.dim();
        let mut b = self.initial_box.max(2);
        let mut prev = self.series_in_box(b, weight);
        while 2 * b <= self.box_cap {
            let next = self.series_in_box(2 * b, weight);
            if next == prev {
                return Series { dim, terms: next, exact: true, half_width: 2 * b };
            }
            prev = next;
            b *= 2;
        }
        Series { dim, terms: prev, exact: false, half_width: b }
    }

    /// Generating function of one grain.
    pub fn grain_series(&self, grain: &Grain) -> Series {
        let sig = grain.signature.clone();
        self.series(&move |s: &[bool]| i64::from(s == sig.as_slice()))
    }
}
