//! Graded pieces of the Ishida complex, Hilbert series of local cohomology
//! and Cohen–Macaulay tests.
//!
//! In degree `a` the Ishida complex of `M` has `C^k_a = ⊕ (M_F)_a` over the
//! `k`-dimensional faces `F` with `a ∈ deg(M_F)`, i.e. over the chaff of `a`.
//! Its cohomology depends on the chaff only, so everything here is computed
//! once per chaff.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use serde::Serialize;

use crate::degrees::{Module, SearchOptions};
use crate::degspace::{DegreeSpace, Series};
use crate::error::{Error, Result};
use crate::exact::{self, IntMatrix, Vector};
use crate::polyhedra::{transverse_section, TransverseSection};
use crate::semigroup::AffineSemigroup;

/// Coefficient field for ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Field {
    Rationals,
    /// `F_p` for a prime `p`.
    Prime(u64),
}

impl Field {
    pub fn new(characteristic: u64) -> Result<Self> {
        match characteristic {
            0 => Ok(Field::Rationals),
            p if is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::Invalid(format!("characteristic {p} is not 0 or a prime"))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Rank of an integer matrix over `field`.
pub fn rank_over(rows: &[Vec<i64>], field: Field) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        Field::Rationals => exact::rank(&IntMatrix::from_rows(rows)),
        Field::Prime(p) => rank_mod_p(rows, p),
    }
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i128;
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| (x as i128).rem_euclid(p)).collect()).collect();
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = mod_pow(a[r][c], p - 2, p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..cols {
                    a[i][j] = (a[i][j] - f * a[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

fn mod_pow(mut b: i128, mut e: i128, p: i128) -> i128 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// The degree-`a` piece of the Ishida complex for a given chaff.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedComplex {
    /// `faces[k]`: faces of dimension `k` in the chaff.
    pub faces: Vec<Vec<usize>>,
    /// `maps[k]`: coboundary `C^k → C^{k+1}`, rows indexed by `faces[k+1]`.
    pub maps: Vec<Vec<Vec<i64>>>,
}

impl GradedComplex {
    pub fn new(section: &TransverseSection, chaff: &[usize]) -> Self {
        let chaff: BTreeSet<usize> = chaff.iter().copied().collect();
        let faces: Vec<Vec<usize>> = section
            .faces_by_dim
            .iter()
            .map(|fs| fs.iter().copied().filter(|f| chaff.contains(f)).collect())
            .collect();
        let maps = (0..faces.len().saturating_sub(1))
            .map(|k| {
                faces[k + 1]
                    .iter()
                    .map(|&g| faces[k].iter().map(|&f| i64::from(section.epsilon(f, g))).collect())
                    .collect()
            })
            .collect();
        GradedComplex { faces, maps }
    }

    /// `dim H^k` for `k = 0..=d`.
    pub fn cohomology(&self, field: Field) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.iter().map(|m| rank_over(m, field)).collect();
        (0..self.faces.len())
            .map(|k| {
                let out = ranks.get(k).copied().unwrap_or(0);
                let inc = if k == 0 { 0 } else { ranks[k - 1] };
                self.faces[k].len() - out - inc
            })
            .collect()
    }
}

/// Cohomology of the Ishida slices, memoized per chaff.
pub struct IshidaSlices {
    pub section: TransverseSection,
    pub field: Field,
    cache: Mutex<HashMap<Vec<usize>, Vec<usize>>>,
}

impl IshidaSlices {
    pub fn new(q: &AffineSemigroup, field: Field) -> Result<Self> {
        Ok(IshidaSlices { section: transverse_section(&q.cone, &q.faces)?, field, cache: Mutex::new(HashMap::new()) })
    }

    pub fn top(&self) -> usize {
        self.section.top()
    }

    pub fn cohomology(&self, chaff: &[usize]) -> Vec<usize> {
        if let Some(h) = self.cache.lock().expect("slice cache").get(chaff) {
            return h.clone();
        }
        let h = GradedComplex::new(&self.section, chaff).cohomology(self.field);
        self.cache.lock().expect("slice cache").insert(chaff.to_vec(), h.clone());
        h
    }
}

/// `H^i_m(M)` as multigraded series, `i = 0..=d`.
pub fn local_cohomology_series(ds: &DegreeSpace, field: Field) -> Result<Vec<Series>> {
    let slices = IshidaSlices::new(&ds.module.q, field)?;
    Ok((0..=slices.top())
        .map(|i| {
            ds.series(&|sig: &[bool]| {
                let chaff = ds.chaff_of(sig);
                slices.cohomology(&chaff)[i] as i64
            })
        })
        .collect())
}

/// A chaff whose slice has cohomology outside the expected index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmWitness {
    pub chaff: Vec<usize>,
    /// A degree realizing the chaff.
    pub degree: Vector,
    /// `dim H^k` of the slice, `k = 0..=d`.
    pub cohomology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub cohen_macaulay: bool,
    /// Index at which all cohomology must concentrate.
    pub expected_index: i32,
    pub witness: Option<CmWitness>,
    /// Every chaff examined with its cohomology.
    pub chaffs: Vec<(Vec<usize>, Vec<usize>)>,
}

fn concentrated(chaffs: BTreeMap<Vec<usize>, (Vector, Vec<usize>)>, index: i32) -> CmReport {
    let witness = chaffs.iter().find_map(|(c, (a, h))| {
        let bad = h.iter().enumerate().any(|(k, &x)| x != 0 && k as i32 != index);
        bad.then(|| CmWitness { chaff: c.clone(), degree: a.clone(), cohomology: h.clone() })
    });
    CmReport {
        cohen_macaulay: witness.is_none(),
        expected_index: index,
        witness,
        chaffs: chaffs.into_iter().map(|(c, (_, h))| (c, h)).collect(),
    }
}

/// `M` is Cohen–Macaulay iff the slice of every chaff has cohomology only
/// in the Krull dimension of `M`.
pub fn cm_quotient(ds: &DegreeSpace, field: Field) -> Result<CmReport> {
    let m = ds.module;
    let ell = m.krull_dim(&ds.pairs[&m.q.apex()]);
    let slices = IshidaSlices::new(&m.q, field)?;
    let grains = ds.grains()?;
    let mut chaffs = BTreeMap::new();
    for g in &grains.grains {
        chaffs.entry(g.chaff.clone()).or_insert_with(|| (g.points[0].clone(), slices.cohomology(&g.chaff)));
    }
    Ok(concentrated(chaffs, ell))
}

/// `k[Q]` is Cohen–Macaulay iff every degree in a void grain has a
/// `k[Q]`-chaff whose slice has cohomology only in the top index.
pub fn cm_semigroup_voidgrains(q: &AffineSemigroup, field: Field, opts: &SearchOptions) -> Result<CmReport> {
    let holes = Module::hole_module(AffineSemigroup::new(q.dim, q.generators.clone())?)?;
    let ring = Module::ring(AffineSemigroup::new(q.dim, q.generators.clone())?)?;
    let slices = IshidaSlices::new(q, field)?;
    let top = slices.top() as i32;
    if q.is_normal()? {
        return Ok(concentrated(BTreeMap::new(), top));
    }
    let voids = DegreeSpace::new(&holes, opts)?;
    let grains = voids.grains()?;
    let mut chaffs = BTreeMap::new();
    for g in &grains.grains {
        for a in &g.points {
            let chaff: Vec<usize> = q.face_ids().into_iter().filter(|&f| ring.deg_member(f, a)).collect();
            chaffs.entry(chaff.clone()).or_insert_with(|| (a.clone(), slices.cohomology(&chaff)));
        }
    }
    Ok(concentrated(chaffs, top))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrungHoaReport {
    pub cohen_macaulay: bool,
    /// Whether the intersection of the facet localizations equals `Q`.
    pub tilde_equals_q: bool,
    /// A degree in that intersection but outside `Q`.
    pub tilde_witness: Option<Vector>,
    /// One entry per violated facet set examined.
    pub pi_complexes: Vec<PiComplex>,
}

/// The nerve `π_S` of a violated facet set `S` (indices into the facet
/// normals) with its reduced homology ranks, starting at `H̃_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiComplex {
    pub set: Vec<usize>,
    pub simplices: Vec<Vec<usize>>,
    pub reduced_homology: Vec<usize>,
}

impl PiComplex {
    pub fn acyclic(&self) -> bool {
        self.reduced_homology.iter().all(|&x| x == 0)
    }
}

/// Reduced homology ranks of a simplicial complex given by its faces
/// (nonempty vertex sets, closed under nonempty subsets).
pub fn reduced_homology(faces: &[Vec<usize>], field: Field) -> Vec<usize> {
    let maxdim = faces.iter().map(Vec::len).max().unwrap_or(0);
    // by_size[k]: faces with k vertices, k = 0 being the empty face
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); maxdim + 1];
    by_size[0].push(Vec::new());
    for f in faces {
        let mut f = f.clone();
        f.sort();
        by_size[f.len()].push(f);
    }
    for v in by_size.iter_mut() {
        v.sort();
        v.dedup();
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (f, i)).collect()).collect();
    // boundary from size k to size k-1
    let ranks: Vec<usize> = (1..=maxdim)
        .map(|k| {
            let rows: Vec<Vec<i64>> = by_size[k - 1]
                .iter()
                .map(|_| vec![0i64; by_size[k].len()])
                .collect();
            let mut rows = rows;
            for (j, f) in by_size[k].iter().enumerate() {
                for drop in 0..f.len() {
                    let mut g = f.clone();
                    g.remove(drop);
                    let i = index[k - 1][&g];
                    rows[i][j] = if drop % 2 == 0 { 1 } else { -1 };
                }
            }
            rank_over(&rows, field)
        })
        .collect();
    // reduced H_{k-1} lives at size k
    (0..=maxdim)
        .map(|k| {
            let out = if k == 0 { 0 } else { ranks[k - 1] };
            let inc = ranks.get(k).copied().unwrap_or(0);
            by_size[k].len() - out - inc
        })
        .collect()
}

/// The Trung–Hoa criterion: `Q` equals the intersection of its facet
/// localizations, and for every proper nonempty set `S` of facets that is
/// exactly the violated set of some real point, the nerve of the facets in
/// `S` (subsets meeting in more than the apex) is acyclic.
pub fn trung_hoa(q: &AffineSemigroup, field: Field, opts: &SearchOptions) -> Result<TrungHoaReport> {
    if !q.is_pointed() {
        return Err(Error::NotPointed);
    }
    let facets: Vec<usize> = q.faces.nonempty().filter(|f| f.dim == q.cone.dim as i32 - 1).map(|f| f.id).collect();
    // facet face id for each normal index
    let facet_of: BTreeMap<usize, usize> = facets
        .iter()
        .map(|&f| (q.faces.face(f).tight_normals[0], f))
        .collect();

    let tilde_witness = tilde_witness(q, &facet_of, opts)?;

    let m = q.cone.facet_normals.len();
    let arr = q.cone.arrangement();
    let mut pi_complexes = Vec::new();
    for mask in 1u64..(1u64 << m).saturating_sub(1) {
        let s: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let nonneg: BTreeSet<usize> = (0..m).filter(|i| mask >> i & 1 == 0).collect();
        if !arr.region_nonempty(&nonneg)? {
            continue;
        }
        let mut simplices = Vec::new();
        for sub in 1u64..(1u64 << s.len()) {
            let idx: Vec<usize> = (0..s.len()).filter(|j| sub >> j & 1 == 1).map(|j| s[j]).collect();
            let ids: Vec<usize> = idx.iter().map(|i| facet_of[i]).collect();
            if q.faces.face(q.faces.meet(&ids)).dim >= 1 {
                simplices.push(idx);
            }
        }
        let reduced_homology = reduced_homology(&simplices, field);
        pi_complexes.push(PiComplex { set: s, simplices, reduced_homology });
    }
    Ok(TrungHoaReport {
        cohen_macaulay: tilde_witness.is_none() && pi_complexes.iter().all(PiComplex::acyclic),
        tilde_equals_q: tilde_witness.is_none(),
        tilde_witness,
        pi_complexes,
    })
}

/// A point of `⋂ (Q − NF_i) \ Q`, searched along each hole packet
/// `h + NF`: a facet not containing `F` is eventually satisfied by moving
/// deep into `F`, so the packet meets the intersection iff `h` already lies
/// in the localization at every facet containing `F`.
fn tilde_witness(q: &AffineSemigroup, facet_of: &BTreeMap<usize, usize>, opts: &SearchOptions) -> Result<Option<Vector>> {
    let holes = q.holes(opts.cap_factor)?;
    let in_all = |x: &[i64]| -> Result<bool> {
        for &f in facet_of.values() {
            if !q.localized_member(f, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    for p in &holes.packets {
        let Some(face) = q.face_ids().into_iter().find(|&f| q.face_generators(f) == p.monoid_gens) else {
            return Err(Error::Invalid("hole packet is not supported on a face".into()));
        };
        let containing_ok = facet_of
            .values()
            .filter(|&&fi| q.faces.is_subface(face, fi))
            .all(|&fi| q.localized_member(fi, &p.base).unwrap_or(false));
        if !containing_ok {
            continue;
        }
        let step = p.monoid_gens.iter().fold(vec![0; q.dim], |acc, g| exact::add(&acc, g));
        let mut x = p.base.clone();
        for _ in 0..=64 {
            if in_all(&x)? && !q.member(&x)? {
                return Ok(Some(x));
            }
            x = exact::add(&x, &step);
        }
        return Err(Error::BoxInsufficient { what: "witness in the facet localizations".into(), cap: 64 });
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_mod_p_sees_torsion() {
        let m = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_over(&m, Field::Rationals), 2);
        assert_eq!(rank_over(&m, Field::Prime(2)), 0);
        assert_eq!(rank_over(&m, Field::Prime(3)), 2);
    }

    #[test]
    fn field_validation() {
        assert!(Field::new(4).is_err());
        assert_eq!(Field::new(0).unwrap(), Field::Rationals);
        assert_eq!(Field::new(7).unwrap(), Field::Prime(7));
    }

    #[test]
    fn reduced_homology_examples() {
        // two points: reduced H_0 = 1
        assert_eq!(reduced_homology(&[vec![0], vec![1]], Field::Rationals), vec![0, 1]);
        // an edge: acyclic
        assert!(reduced_homology(&[vec![0], vec![1], vec![0, 1]], Field::Rationals).iter().all(|&x| x == 0));
        // hollow triangle: reduced H_1 = 1
        let tri = vec![vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(reduced_homology(&tri, Field::Rationals), vec![0, 0, 1]);
        // void complex: reduced H_{-1} = 1
        assert_eq!(reduced_homology(&[], Field::Rationals), vec![1]);
    }

    #[test]
    fn full_chaff_of_normal_ring_is_top_only() {
        let q = AffineSemigroup::from_rows(&[vec![0, 1, 1, 0], vec![0, 0, 1, 1], vec![1, 1, 1, 1]]).unwrap();
        let slices = IshidaSlices::new(&q, Field::Rationals).unwrap();
        let all = q.face_ids();
        assert_eq!(slices.cohomology(&all), vec![0, 0, 0, 0]);
        // only the top face: H^3 = 1
        assert_eq!(slices.cohomology(&[q.top()]), vec![0, 0, 0, 1]);
    }

    #[test]
    fn trung_hoa_on_simple_cones() {
        let n2 = AffineSemigroup::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let r = trung_hoa(&n2, Field::Rationals, &SearchOptions::default()).unwrap();
        assert!(r.cohen_macaulay);
        let curve = AffineSemigroup::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).unwrap();
        let r = trung_hoa(&curve, Field::Rationals, &SearchOptions::default()).unwrap();
        assert!(!r.cohen_macaulay);
        assert!(!r.tilde_equals_q);
    }
}
