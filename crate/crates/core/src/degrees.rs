//! Degree sets of the localizations of `M = k[Q]/I` (and of the hole module
//! `k[Q_sat]/k[Q]`), their degree pairs, overlap classes and restriction
//! maps.
//!
//! Degree pairs at a localization `F` are written `(a, H ∪ (−F))` with
//! `F ⊆ H`; the packet is `a + NH + ZF`. Shifts are stored as canonical
//! representatives modulo `ZF`, which is exactly the unit group of the
//! packet, so two pairs are equal iff their stored shifts are equal.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, dot, LatticeReducer, Vector};
use crate::semigroup::{AffineSemigroup, MonoidOracle, Packet};

/// Largest number of candidate shifts examined at one level bound.
const SHIFT_POINT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    /// `k[Q]/I` for a monomial ideal `I` (possibly zero).
    Quotient,
    /// `k[Q_sat]/k[Q]`, whose degree set is the set of holes.
    HoleModule,
}

/// Bounds for searches that grow until their output stabilizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Initial level bound for degree-pair shifts; derived from the input
    /// when absent.
    pub initial_level: Option<i64>,
    /// Initial half-width of the coordinate box used for grains.
    pub initial_box: Option<i64>,
    /// Largest half-width the grain box may grow to.
    pub box_cap: Option<i64>,
    /// Searches stop with `BoxInsufficient` after growing by this factor.
    pub cap_factor: i64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { initial_level: None, initial_box: None, box_cap: None, cap_factor: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreePair {
    /// Face `F` of the localization.
    pub loc_face: usize,
    /// Face `H ⊇ F` of the pair.
    pub face: usize,
    /// Canonical representative of the shift modulo `ZF`.
    pub shift: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapClass {
    pub loc_face: usize,
    pub face: usize,
    /// Canonical representative modulo `ZH` shared by all members.
    pub key: Vector,
    pub members: Vec<DegreePair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSet {
    pub loc_face: usize,
    pub pairs: Vec<DegreePair>,
    pub level_bound: i64,
}

#[derive(Debug)]
pub struct Module {
    pub q: AffineSemigroup,
    pub ideal: Vec<Vector>,
    pub kind: ModuleKind,
    /// `N(H) + Z(F)` oracles keyed by `(F, H)`.
    packet_oracles: DashMap<(usize, usize), Arc<MonoidOracle>>,
    reducers: DashMap<usize, Arc<LatticeReducer>>,
}

impl Module {
    fn build(q: AffineSemigroup, ideal: Vec<Vector>, kind: ModuleKind) -> Result<Self> {
        if !q.is_pointed() {
            return Err(Error::NotPointed);
        }
        Ok(Module { q, ideal, kind, packet_oracles: DashMap::new(), reducers: DashMap::new() })
    }

    /// `k[Q]/I`; every ideal generator must lie in `Q`.
    pub fn quotient(q: AffineSemigroup, ideal: Vec<Vector>) -> Result<Self> {
        for g in &ideal {
            if !q.member(g)? {
                return Err(Error::Invalid(format!("ideal generator {g:?} is not in the semigroup")));
            }
        }
        Self::build(q, ideal, ModuleKind::Quotient)
    }

    /// `k[Q]` itself.
    pub fn ring(q: AffineSemigroup) -> Result<Self> {
        Self::build(q, Vec::new(), ModuleKind::Quotient)
    }

    pub fn hole_module(q: AffineSemigroup) -> Result<Self> {
        Self::build(q, Vec::new(), ModuleKind::HoleModule)
    }

    /// Canonical reduction modulo `ZF`.
    pub fn reducer(&self, face: usize) -> Arc<LatticeReducer> {
        self.reducers
            .entry(face)
            .or_insert_with(|| {
                Arc::new(LatticeReducer::new(self.q.dim, &self.q.face_generators(face)).expect("face lattice"))
            })
            .clone()
    }

    /// Oracle for `N(H) + Z(F)`.
    pub fn packet_oracle(&self, loc: usize, face: usize) -> Arc<MonoidOracle> {
        self.packet_oracles
            .entry((loc, face))
            .or_insert_with(|| {
                Arc::new(
                    MonoidOracle::new(self.q.dim, &self.q.face_generators(face), &self.q.face_generators(loc))
                        .expect("face monoid oracle"),
                )
            })
            .clone()
    }

    pub fn packet(&self, pair: &DegreePair) -> Packet {
        Packet {
            base: pair.shift.clone(),
            monoid_gens: self.q.face_generators(pair.face),
            lattice_gens: self.q.face_generators(pair.loc_face),
        }
    }

    pub fn pair_contains(&self, pair: &DegreePair, x: &[i64]) -> bool {
        self.packet_oracle(pair.loc_face, pair.face).contains(&exact::sub(x, &pair.shift))
    }

    /// `a ∈ Q_sat − NF`, i.e. `a ∈ ZQ` and nonnegative on every facet
    /// normal vanishing on `F`.
    pub fn sat_localized_member(&self, face: usize, a: &[i64]) -> bool {
        let f = self.q.faces.face(face);
        f.tight_normals.iter().all(|&i| dot(&self.q.cone.facet_normals[i], a) >= 0)
            && self.q.cone.equations.iter().all(|e| dot(e, a) == 0)
            && self.q.lattice.contains(a)
    }

    /// `a ∈ deg(M_F)`.
    pub fn deg_member(&self, face: usize, a: &[i64]) -> bool {
        match self.kind {
            ModuleKind::Quotient => {
                self.q.localization(face).contains(a)
                    && self.ideal.iter().all(|g| !self.q.localization(face).contains(&exact::sub(a, g)))
            }
            ModuleKind::HoleModule => {
                self.sat_localized_member(face, a) && !self.q.localization(face).contains(a)
            }
        }
    }

    /// Whether `a + NH + ZF ⊆ deg(M_F)` (for `F ⊆ H`).
    pub fn is_proper(&self, loc: usize, face: usize, a: &[i64]) -> bool {
        debug_assert!(self.q.faces.is_subface(loc, face));
        match self.kind {
            // Q − NF is a monoid containing NH, so only the ideal can interfere:
            // (a + NH) meets g + Q − NF iff a − g ∈ Q − NH.
            ModuleKind::Quotient => {
                self.q.localization(loc).contains(a)
                    && self.ideal.iter().all(|g| !self.q.localization(face).contains(&exact::sub(a, g)))
            }
            ModuleKind::HoleModule => {
                self.sat_localized_member(loc, a) && !self.q.localization(face).contains(a)
            }
        }
    }

    /// Level functional used to bound shift searches at `F`: vanishes on
    /// `F` and is positive on every generator outside it.
    pub fn level_at(&self, loc: usize) -> Vector {
        if loc == self.q.apex() {
            self.q.level.clone().expect("pointed")
        } else {
            self.q.localization(loc).level().to_vec()
        }
    }

    fn search_generators(&self) -> Result<Vec<Vector>> {
        match self.kind {
            ModuleKind::Quotient => Ok(self.q.generators.clone()),
            ModuleKind::HoleModule => self.q.hilbert_basis(),
        }
    }

    pub fn initial_level(&self, loc: usize) -> Result<i64> {
        let w = self.level_at(loc);
        let mut items = self.search_generators()?;
        items.extend(self.q.generators.iter().cloned());
        items.extend(self.ideal.iter().cloned());
        let m = items.iter().map(|x| dot(&w, x)).max().unwrap_or(1).max(1);
        Ok(2 * m)
    }

    /// Canonical representatives modulo `ZF` of degrees of `M_F` whose
    /// level is at most `bound`.
    pub fn degrees_up_to(&self, loc: usize, bound: i64) -> Result<Vec<Vector>> {
        let red = self.reducer(loc);
        let w = self.level_at(loc);
        let gens: Vec<Vector> = self.search_generators()?.into_iter().filter(|g| !red.contains(g)).collect();
        let start = vec![0; self.q.dim];
        let mut seen: HashSet<Vector> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = red.reduce(&exact::add(&x, g));
                if dot(&w, &y) <= bound && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            if seen.len() > SHIFT_POINT_BUDGET {
                return Err(Error::BoxInsufficient { what: "degree pair search".into(), cap: bound });
            }
        }
        let mut pts: Vec<Vector> = seen.into_par_iter().filter(|a| self.deg_member(loc, a)).collect();
        pts.sort_by_key(|x| (dot(&w, x), x.clone()));
        Ok(pts)
    }

    /// Faces `H ⊇ F` in dimension order.
    fn faces_over(&self, loc: usize) -> Vec<usize> {
        let mut v = self.q.localization_faces(loc);
        v.sort_by_key(|&h| (self.q.faces.face(h).dim, h));
        v
    }

    fn is_degree_pair(&self, loc: usize, face: usize, a: &[i64], red: &LatticeReducer) -> bool {
        if !self.is_proper(loc, face, a) {
            return false;
        }
        let lower = self.q.face_generators(face).into_iter().filter(|g| !red.contains(g)).any(|g| {
            let b = red.reduce(&exact::sub(a, &g));
            self.is_proper(loc, face, &b)
        });
        if lower {
            return false;
        }
        !self.q.faces.covers(face).into_iter().any(|h| self.is_proper(loc, h, a))
    }

    /// Degree pairs at `F` whose shift has level at most `bound`.
    pub fn degree_pairs_at_level(&self, loc: usize, bound: i64) -> Result<Vec<DegreePair>> {
        let red = self.reducer(loc);
        let faces = self.faces_over(loc);
        let degs = self.degrees_up_to(loc, bound)?;
        let mut pairs: Vec<DegreePair> = degs
            .par_iter()
            .flat_map_iter(|a| {
                faces
                    .iter()
                    .filter(|&&h| self.is_degree_pair(loc, h, a, &red))
                    .map(|&h| DegreePair { loc_face: loc, face: h, shift: a.clone() })
                    .collect::<Vec<_>>()
            })
            .collect();
        pairs.sort();
        Ok(pairs)
    }

    /// All degree pairs of `M_F`, growing the level bound until two
    /// consecutive bounds give the same set.
    pub fn degree_pairs(&self, loc: usize, opts: &SearchOptions) -> Result<PairSet> {
        if self.q.faces.face(loc).is_empty_face() {
            return Err(Error::Invalid("cannot localize at the empty face".into()));
        }
        let start = opts.initial_level.unwrap_or(self.initial_level(loc)?).max(1);
        let cap = start.saturating_mul(opts.cap_factor.max(2));
        let mut bound = start;
        let mut prev = self.degree_pairs_at_level(loc, bound)?;
        while bound < cap {
            bound *= 2;
            let next = self.degree_pairs_at_level(loc, bound)?;
            if next == prev {
                return Ok(PairSet { loc_face: loc, pairs: next, level_bound: bound });
            }
            prev = next;
        }
        Err(Error::BoxInsufficient { what: format!("degree pairs at face {loc}"), cap })
    }

    /// Degree pairs at every nonempty face.
    pub fn all_degree_pairs(&self, opts: &SearchOptions) -> Result<BTreeMap<usize, PairSet>> {
        self.q
            .face_ids()
            .into_par_iter()
            .map(|f| self.degree_pairs(f, opts).map(|p| (f, p)))
            .collect()
    }

    /// Krull dimension of `M`: the largest face dimension among the degree
    /// pairs of `M` itself (`-1` for the zero module).
    pub fn krull_dim(&self, pairs_at_apex: &PairSet) -> i32 {
        pairs_at_apex.pairs.iter().map(|p| self.q.faces.face(p.face).dim).max().unwrap_or(-1)
    }

    /// Groups pairs with the same face into overlap classes; two such pairs
    /// overlap iff their shifts agree modulo `ZH`.
    pub fn overlap_classes(&self, pairs: &[DegreePair]) -> Vec<OverlapClass> {
        let mut groups: BTreeMap<(usize, usize, Vector), Vec<DegreePair>> = BTreeMap::new();
        for p in pairs {
            let key = self.reducer(p.face).reduce(&p.shift);
            groups.entry((p.loc_face, p.face, key)).or_default().push(p.clone());
        }
        groups
            .into_iter()
            .map(|((loc_face, face, key), mut members)| {
                members.sort();
                OverlapClass { loc_face, face, key, members }
            })
            .collect()
    }

    /// The class at `target` (a face contained in the class's localization)
    /// whose union is the source union intersected with `deg(M_target)`.
    pub fn restrict<'c>(
        &self,
        class: &OverlapClass,
        target: usize,
        target_classes: &'c [OverlapClass],
    ) -> Result<&'c OverlapClass> {
        if !self.q.faces.is_subface(target, class.loc_face) {
            return Err(Error::Invalid("restriction target must be contained in the source localization".into()));
        }
        target_classes
            .iter()
            .find(|c| c.loc_face == target && c.face == class.face && c.key == class.key)
            .ok_or_else(|| {
                Error::LiftNotFound(format!(
                    "class with face {} and key {:?} from localization {} has no image at {}",
                    class.face, class.key, class.loc_face, target
                ))
            })
    }

    /// Lexicographically smallest degree pair at `target` lifting `pair`
    /// (same face, shift congruent modulo the source lattice).
    pub fn lift<'p>(&self, pair: &DegreePair, target: usize, target_pairs: &'p [DegreePair]) -> Result<&'p DegreePair> {
        let red = self.reducer(pair.loc_face);
        let want = red.reduce(&pair.shift);
        target_pairs
            .iter()
            .filter(|p| p.loc_face == target && p.face == pair.face && red.reduce(&p.shift) == want)
            .min_by(|a, b| a.shift.cmp(&b.shift))
            .ok_or_else(|| Error::LiftNotFound(format!("{pair:?} at {target}")))
    }

    /// `x ∈ ⋃ class`.
    pub fn class_contains(&self, class: &OverlapClass, x: &[i64]) -> bool {
        self.reducer(class.face).reduce(x) == class.key && class.members.iter().any(|p| self.pair_contains(p, x))
    }
}
