//! Affine semigroups `Q = NA`: membership in `Q` and in its localizations
//! `Q − NF = Q + ZF`, saturation, Hilbert bases and holes.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, dot, primitive, rank_of, solve_in_span, LatticeReducer, Vector};
use crate::polyhedra::{combinations, dual_description, face_lattice, Cone, FaceLattice};

/// Membership oracle for a finitely generated monoid plus a lattice,
/// `N(gens) + Z(lattice)`, where the lattice spans a face of the cone of the
/// generators (so the monoid becomes pointed modulo the lattice).
///
/// Results are memoized on canonical coset representatives; the cache is
/// shared between threads.
#[derive(Debug)]
pub struct MonoidOracle {
    dim: usize,
    gens: Vec<Vector>,
    /// positions of `gens` in the caller's generator list
    gen_index: Vec<usize>,
    reducer: LatticeReducer,
    inequalities: Vec<Vector>,
    equations: Vec<Vector>,
    level: Vector,
    memo: DashMap<Vector, bool>,
}

impl MonoidOracle {
    pub fn new(dim: usize, monoid_gens: &[Vector], lattice_gens: &[Vector]) -> Result<Self> {
        let mut all = monoid_gens.to_vec();
        all.extend(lattice_gens.iter().cloned());
        all.extend(lattice_gens.iter().map(|v| exact::neg(v)));
        let cone = dual_description(dim, &all)?;
        let mut level = vec![0i64; dim];
        for c in &cone.facet_normals {
            level = exact::add(&level, c);
        }
        let level = primitive(&level);

        // generators on the lineality space generate a group; fold them into
        // the lattice part
        let mut lattice = lattice_gens.to_vec();
        let mut gens = Vec::new();
        let mut gen_index = Vec::new();
        for (i, g) in monoid_gens.iter().enumerate() {
            if g.iter().all(|&x| x == 0) {
                continue;
            }
            if dot(&level, g) == 0 {
                lattice.push(g.clone());
            } else {
                gens.push(g.clone());
                gen_index.push(i);
            }
        }
        let reducer = LatticeReducer::new(dim, &lattice)?;
        Ok(MonoidOracle {
            dim,
            gens,
            gen_index,
            reducer,
            inequalities: cone.facet_normals,
            equations: cone.equations,
            level,
            memo: DashMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Functional vanishing on the lattice part and positive on every other
    /// generator.
    pub fn level(&self) -> &[i64] {
        &self.level
    }

    fn in_cone(&self, x: &[i64]) -> bool {
        self.inequalities.iter().all(|c| dot(c, x) >= 0) && self.equations.iter().all(|e| dot(e, x) == 0)
    }

    fn decide(&self, y: &Vector) -> Option<bool> {
        if let Some(v) = self.memo.get(y) {
            return Some(*v);
        }
        if y.iter().all(|&c| c == 0) {
            return Some(true);
        }
        if !self.in_cone(y) {
            return Some(false);
        }
        None
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.dim, "point of wrong dimension");
        let start = self.reducer.reduce(x);
        if let Some(b) = self.decide(&start) {
            return b;
        }
        // iterative depth-first search; the level strictly decreases along
        // every edge, so the search graph is acyclic and finite
        let mut stack: Vec<(Vector, usize)> = vec![(start, 0)];
        let mut ret: Option<bool> = None;
        while !stack.is_empty() {
            let top = stack.len() - 1;
            if let Some(b) = ret.take() {
                if b {
                    let (x, _) = stack.pop().unwrap();
                    self.memo.insert(x, true);
                    ret = Some(true);
                    continue;
                }
                stack[top].1 += 1;
            }
            let mut next = None;
            let mut found = false;
            while stack[top].1 < self.gens.len() {
                let y = self.reducer.reduce(&exact::sub(&stack[top].0, &self.gens[stack[top].1]));
                match self.decide(&y) {
                    Some(true) => {
                        found = true;
                        break;
                    }
                    Some(false) => stack[top].1 += 1,
                    None => {
                        next = Some(y);
                        break;
                    }
                }
            }
            if found {
                let (x, _) = stack.pop().unwrap();
                self.memo.insert(x, true);
                ret = Some(true);
            } else if let Some(y) = next {
                stack.push((y, 0));
            } else {
                let (x, _) = stack.pop().unwrap();
                self.memo.insert(x, false);
                ret = Some(false);
            }
        }
        ret.unwrap_or(false)
    }

    /// Coefficients on the caller's generator list writing `x` as an
    /// N-combination, when the lattice part is trivial.
    pub fn certificate(&self, x: &[i64], n_callers_gens: usize) -> Option<Vec<u64>> {
        if self.reducer.rank() != 0 || !self.contains(x) {
            return None;
        }
        let mut coeffs = vec![0u64; n_callers_gens];
        let mut cur = x.to_vec();
        while cur.iter().any(|&c| c != 0) {
            let i = (0..self.gens.len()).find(|&i| self.contains(&exact::sub(&cur, &self.gens[i])))?;
            coeffs[self.gen_index[i]] += 1;
            cur = exact::sub(&cur, &self.gens[i]);
        }
        Some(coeffs)
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }
}

/// `base + N(monoid_gens) + Z(lattice_gens)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Packet {
    pub base: Vector,
    pub monoid_gens: Vec<Vector>,
    pub lattice_gens: Vec<Vector>,
}

impl Packet {
    pub fn point(base: Vector) -> Self {
        Packet { base, monoid_gens: Vec::new(), lattice_gens: Vec::new() }
    }

    pub fn oracle(&self) -> Result<MonoidOracle> {
        MonoidOracle::new(self.base.len(), &self.monoid_gens, &self.lattice_gens)
    }

    pub fn contains_with(&self, oracle: &MonoidOracle, x: &[i64]) -> bool {
        oracle.contains(&exact::sub(x, &self.base))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleDecomposition {
    pub packets: Vec<Packet>,
    /// Level bound at which the decomposition stabilized.
    pub level_bound: i64,
}

impl HoleDecomposition {
    pub fn is_empty(&self) -> bool {
        self.packets.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub coefficients: Vec<u64>,
}

#[derive(Debug)]
pub struct AffineSemigroup {
    pub dim: usize,
    /// Columns of the generator matrix.
    pub generators: Vec<Vector>,
    pub cone: Cone,
    pub faces: FaceLattice,
    pub lattice: LatticeReducer,
    /// Strictly positive on every generator; the grading used for all
    /// bounded searches.
    pub level: Option<Vector>,
    localizations: Vec<OnceLock<MonoidOracle>>,
    hilbert: OnceLock<Vec<Vector>>,
}

/// Primitive integer functional taking the same positive value on every
/// generator, when one exists.
fn homogeneous_functional(dim: usize, gens: &[Vector]) -> Option<Vector> {
    let rows: Vec<Vector> = (0..dim).map(|j| gens.iter().map(|g| g[j]).collect()).collect();
    let sol = solve_in_span(&rows, &vec![1; gens.len()])?;
    let lcm = sol.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let w: Option<Vector> = sol.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer().to_i64()).collect();
    Some(primitive(&w?))
}

impl AffineSemigroup {
    pub fn new(dim: usize, generators: Vec<Vector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Invalid("an affine semigroup needs at least one generator".into()));
        }
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::Invalid("generators must be nonzero".into()));
            }
        }
        let cone = dual_description(dim, &generators)?;
        let faces = face_lattice(&cone);
        let lattice = LatticeReducer::new(dim, &generators)?;
        let level = homogeneous_functional(dim, &generators)
            .filter(|w| generators.iter().all(|g| dot(w, g) > 0))
            .or_else(|| cone.positive_functional());
        let localizations = (0..faces.len()).map(|_| OnceLock::new()).collect();
        Ok(AffineSemigroup { dim, generators, cone, faces, lattice, level, localizations, hilbert: OnceLock::new() })
    }

    /// Builds from the rows of a `d × n` matrix.
    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("ragged generator matrix".into()));
        }
        let cols = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Self::new(d, cols)
    }

    pub fn is_pointed(&self) -> bool {
        self.level.is_some()
    }

    pub fn level_of(&self, x: &[i64]) -> i64 {
        dot(self.level.as_ref().expect("pointed semigroup"), x)
    }

    /// Id of the apex `{0}`.
    pub fn apex(&self) -> usize {
        self.faces.nonempty().min_by_key(|f| f.dim).map(|f| f.id).unwrap()
    }

    pub fn top(&self) -> usize {
        self.faces.top
    }

    /// Generators of `Q` lying on the face.
    pub fn face_generators(&self, face: usize) -> Vec<Vector> {
        self.faces.face(face).generator_indices.iter().map(|&i| self.generators[i].clone()).collect()
    }

    /// Nonempty faces in id order.
    pub fn face_ids(&self) -> Vec<usize> {
        self.faces.nonempty().map(|f| f.id).collect()
    }

    /// Oracle for `Q − NF`.
    pub fn localization(&self, face: usize) -> &MonoidOracle {
        self.localizations[face].get_or_init(|| {
            MonoidOracle::new(self.dim, &self.generators, &self.face_generators(face))
                .expect("localization of an affine semigroup")
        })
    }

    pub fn member(&self, a: &[i64]) -> Result<bool> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        self.check_dim(a)?;
        Ok(self.localization(self.apex()).contains(a))
    }

    pub fn member_certificate(&self, a: &[i64]) -> Result<Option<MembershipCertificate>> {
        if !self.member(a)? {
            return Ok(None);
        }
        let coefficients = self
            .localization(self.apex())
            .certificate(a, self.generators.len())
            .expect("member has a certificate");
        Ok(Some(MembershipCertificate { coefficients }))
    }

    /// `a ∈ Q − NF`.
    pub fn localized_member(&self, face: usize, a: &[i64]) -> Result<bool> {
        self.check_dim(a)?;
        if self.faces.face(face).is_empty_face() {
            return Err(Error::Invalid("cannot localize at the empty face".into()));
        }
        Ok(self.localization(face).contains(a))
    }

    fn check_dim(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: a.len() });
        }
        Ok(())
    }

    /// Faces of `Q − NF`: the faces of `Q` containing `F`.
    pub fn localization_faces(&self, face: usize) -> Vec<usize> {
        self.faces.nonempty().filter(|g| self.faces.is_subface(face, g.id)).map(|g| g.id).collect()
    }

    /// Minimal generators of the saturation `ZQ ∩ R≥0 Q`.
    pub fn hilbert_basis(&self) -> Result<Vec<Vector>> {
        if let Some(h) = self.hilbert.get() {
            return Ok(h.clone());
        }
        let h = hilbert_basis(&self.cone, &self.lattice)?;
        Ok(self.hilbert.get_or_init(|| h).clone())
    }

    pub fn saturated_member(&self, x: &[i64]) -> bool {
        self.cone.contains(x) && self.lattice.contains(x)
    }

    pub fn is_normal(&self) -> Result<bool> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        for h in self.hilbert_basis()? {
            if !self.member(&h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Points of `N(gens)` shifted by `base` with level at most `bound`.
    pub fn monoid_points(&self, base: &[i64], gens: &[Vector], bound: i64) -> Vec<Vector> {
        let mut seen: HashSet<Vector> = HashSet::new();
        let mut queue = VecDeque::new();
        if self.level_of(base) <= bound {
            seen.insert(base.to_vec());
            queue.push_back(base.to_vec());
        }
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = exact::add(&x, g);
                if self.level_of(&y) <= bound && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Vector> = seen.into_iter().collect();
        out.sort_by_key(|x| (self.level_of(x), x.clone()));
        out
    }

    /// Holes `Q_sat ∖ Q` with level at most `bound`.
    pub fn holes_up_to(&self, bound: i64) -> Result<Vec<Vector>> {
        let hb = self.hilbert_basis()?;
        let sat = self.monoid_points(&vec![0; self.dim], &hb, bound);
        let mut out = Vec::new();
        for x in sat {
            if !self.member(&x)? {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Initial level bound for hole searches.
    pub fn initial_level_bound(&self) -> Result<i64> {
        let hb = self.hilbert_basis()?;
        let m = self.generators.iter().chain(hb.iter()).map(|g| self.level_of(g)).max().unwrap_or(1);
        Ok(2 * m.max(1))
    }

    fn hole_packets_at(&self, bound: i64) -> Result<Vec<Packet>> {
        let holes = self.holes_up_to(bound)?;
        if holes.len() > HOLE_POINT_BUDGET {
            return Err(Error::BoxInsufficient { what: "hole decomposition".into(), cap: bound });
        }
        let mut covered: HashSet<Vector> = HashSet::new();
        let mut packets = Vec::new();
        let mut faces: Vec<usize> = self.face_ids();
        faces.sort_by_key(|&f| (std::cmp::Reverse(self.faces.face(f).dim), f));
        for h in holes {
            if covered.contains(&h) {
                continue;
            }
            for &f in &faces {
                if self.localized_member(f, &h)? {
                    continue;
                }
                let gens = self.face_generators(f);
                let pts = self.monoid_points(&h, &gens, bound);
                if pts.iter().any(|p| covered.contains(p)) {
                    continue;
                }
                covered.extend(pts);
                packets.push(Packet { base: h.clone(), monoid_gens: gens, lattice_gens: Vec::new() });
                break;
            }
        }
        Ok(packets)
    }

    /// Decomposes the holes into disjoint translates of face monoids,
    /// doubling the level bound until two consecutive bounds agree.
    pub fn holes(&self, cap_factor: i64) -> Result<HoleDecomposition> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        if self.is_normal()? {
            return Ok(HoleDecomposition { packets: Vec::new(), level_bound: 0 });
        }
        let start = self.initial_level_bound()?;
        let cap = start * cap_factor.max(1);
        let mut bound = start;
        let mut prev = self.hole_packets_at(bound)?;
        while bound < cap {
            bound *= 2;
            let next = self.hole_packets_at(bound)?;
            if next == prev {
                return Ok(HoleDecomposition { packets: next, level_bound: bound });
            }
            prev = next;
        }
        Err(Error::BoxInsufficient { what: "hole decomposition".into(), cap })
    }
}

/// Largest number of sampled holes the greedy peeling is run on. Past this
/// the decomposition has not stabilized at any affordable bound.
const HOLE_POINT_BUDGET: usize = 20_000;

/// Minimal generators of `lattice ∩ cone` for a pointed cone whose span
/// contains the lattice.
pub fn hilbert_basis(cone: &Cone, lattice: &LatticeReducer) -> Result<Vec<Vector>> {
    if !cone.is_pointed() {
        return Err(Error::NotPointed);
    }
    let dim = cone.ambient_dim;
    let basis = lattice.basis();
    let k = basis.len();

    // extreme rays, scaled to primitive lattice vectors
    let lattice_l = face_lattice(cone);
    let mut rays: Vec<Vector> = Vec::new();
    for f in lattice_l.nonempty().filter(|f| f.dim == 1) {
        let g = &cone.generators[f.generator_indices[0]];
        let coords = exact::lattice_member(&exact::IntMatrix::from_columns(dim, &basis), g)?
            .ok_or_else(|| Error::Invalid("cone generator outside the lattice".into()))?;
        let gcd = coords.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
        let scaled: Vec<BigInt> = coords.iter().map(|c| c / &gcd).collect();
        let mut v = vec![0i64; dim];
        for (c, b) in scaled.iter().zip(&basis) {
            let c = c.to_i64().ok_or(Error::Overflow)?;
            v = exact::add(&v, &exact::scale(b, c));
        }
        rays.push(v);
    }
    rays.sort();

    let mut candidates: BTreeSet<Vector> = rays.iter().cloned().collect();
    for subset in combinations(rays.len(), k) {
        let sigma: Vec<Vector> = subset.iter().map(|&i| rays[i].clone()).collect();
        if rank_of(&sigma, dim) != k {
            continue;
        }
        // coordinates of the rays in the lattice basis
        let m_cols: Vec<Vector> = sigma
            .iter()
            .map(|r| {
                exact::lattice_member(&exact::IntMatrix::from_columns(dim, &basis), r)
                    .and_then(|c| exact::to_i64_vec(&c.expect("ray in lattice")))
            })
            .collect::<Result<_>>()?;
        let sub = LatticeReducer::new(k, &m_cols)?;
        let diag: Vec<i64> = sub.basis().iter().enumerate().map(|(i, row)| row[i]).collect();
        // canonical representatives of Z^k / (ray lattice) form a box
        let mut z = vec![0i64; k];
        loop {
            let mut g = vec![0i64; dim];
            for (zi, b) in z.iter().zip(&basis) {
                g = exact::add(&g, &exact::scale(b, *zi));
            }
            let lambda = solve_in_span(&sigma, &g).expect("point in span of a full simplicial cone");
            let mut p = vec![BigRational::zero(); dim];
            for (l, r) in lambda.iter().zip(&sigma) {
                let frac = l - l.floor();
                for (pj, rj) in p.iter_mut().zip(r) {
                    *pj += &frac * BigRational::from_integer(BigInt::from(*rj));
                }
            }
            let p: Vector = p
                .iter()
                .map(|q| q.to_integer().to_i64().ok_or(Error::Overflow))
                .collect::<Result<_>>()?;
            if p.iter().any(|&c| c != 0) {
                candidates.insert(p);
            }
            // advance the mixed-radix counter
            let mut i = 0;
            while i < k {
                z[i] += 1;
                if z[i] < diag[i] {
                    break;
                }
                z[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }

    let cands: Vec<Vector> = candidates.into_iter().collect();
    let irreducible: Vec<Vector> = cands
        .iter()
        .filter(|x| {
            !cands.iter().any(|c| c != *x && {
                let d = exact::sub(x, c);
                d.iter().any(|&t| t != 0) && cone.contains(&d)
            })
        })
        .cloned()
        .collect();
    debug_assert!(irreducible.iter().all(|x| x.iter().any(|c| c.is_positive() || c.is_negative())));
    Ok(irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn curve() -> AffineSemigroup {
        AffineSemigroup::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).unwrap()
    }

    fn segre() -> AffineSemigroup {
        AffineSemigroup::from_rows(&[vec![0, 1, 1, 0], vec![0, 0, 1, 1], vec![1, 1, 1, 1]]).unwrap()
    }

    fn ray(q: &AffineSemigroup, g: &[i64]) -> usize {
        let i = q.generators.iter().position(|x| x == g).unwrap();
        q.faces.find_by_generators(&[i]).unwrap()
    }

    #[test]
    fn curve_membership() {
        let q = curve();
        assert!(!q.member(&[1, 2]).unwrap());
        assert!(q.member(&[2, 2]).unwrap());
        assert!(q.member(&[0, 0]).unwrap());
        let cert = q.member_certificate(&[2, 2]).unwrap().unwrap();
        assert_eq!(cert.coefficients, vec![0, 2, 0, 0]);
        assert!(q.member_certificate(&[1, 2]).unwrap().is_none());
    }

    #[test]
    fn localized_membership() {
        let q = curve();
        let f1 = ray(&q, &[1, 0]);
        let f2 = ray(&q, &[1, 4]);
        assert!(q.localized_member(f2, &[1, 2]).unwrap());
        assert!(!q.localized_member(f1, &[0, -5]).unwrap());
        assert!(q.localized_member(f1, &[-7, 1]).unwrap());
        let s = segre();
        let a1 = ray(&s, &[0, 0, 1]);
        assert!(s.localized_member(a1, &[1, 0, 0]).unwrap());
        assert!(!s.member(&[1, 0, 0]).unwrap());
    }

    #[test]
    fn localization_at_extremes() {
        let q = curve();
        for a in [[1, 2], [3, 1], [0, -1], [5, 17]] {
            assert_eq!(q.localized_member(q.apex(), &a).unwrap(), q.member(&a).unwrap());
            assert_eq!(q.localized_member(q.top(), &a).unwrap(), q.lattice.contains(&a));
        }
    }

    #[test]
    fn hilbert_bases() {
        let c = dual_description(2, &[vec![1, 0], vec![1, 4]]).unwrap();
        let hb = hilbert_basis(&c, &LatticeReducer::new(2, &[vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(hb, vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3], vec![1, 4]]);
        let c = dual_description(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let hb = hilbert_basis(&c, &LatticeReducer::new(2, &[vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(hb, vec![vec![0, 1], vec![1, 0]]);
        let c = dual_description(2, &[vec![1, 2], vec![2, 1]]).unwrap();
        let hb = hilbert_basis(&c, &LatticeReducer::new(2, &[vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(hb, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn normality() {
        assert!(segre().is_normal().unwrap());
        assert!(!curve().is_normal().unwrap());
        assert!(AffineSemigroup::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap().is_normal().unwrap());
    }

    #[test]
    fn curve_holes() {
        let h = curve().holes(64).unwrap();
        assert_eq!(h.packets, vec![Packet::point(vec![1, 2])]);
    }

    #[test]
    fn xz_plane_holes() {
        let q = AffineSemigroup::from_rows(&[vec![1, 1, 1, 1, 1], vec![0, 0, 0, 1, 1], vec![0, 1, -2, 0, 1]]).unwrap();
        let h = q.holes(64).unwrap();
        assert_eq!(h.packets.len(), 1);
        assert_eq!(h.packets[0].base, vec![1, 0, -1]);
        assert_eq!(h.packets[0].monoid_gens, vec![vec![1, 0, -2]]);
    }

    #[test]
    fn localization_face_sets() {
        let s = segre();
        let a1 = ray(&s, &[0, 0, 1]);
        let faces = s.localization_faces(a1);
        assert_eq!(faces.len(), 4);
        assert!(faces.contains(&s.top()));
        assert_eq!(s.localization_faces(s.apex()).len(), 10);
        let q = curve();
        let f1 = ray(&q, &[1, 0]);
        assert_eq!(q.localization_faces(f1), vec![f1, q.top()]);
    }

    #[test]
    fn non_pointed_rejected_for_member() {
        let q = AffineSemigroup::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert_eq!(q.member(&[1, 1]), Err(Error::NotPointed));
    }
}
