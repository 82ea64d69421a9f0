//! Rational polyhedral cones: facet descriptions, face lattices, the
//! transverse section with an incidence function, and the hyperplane
//! arrangement of the facets.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, determinant, dot, kernel_basis, primitive, rank_of, IntMatrix, Vector};

/// A cone `{x : ⟨c,x⟩ ≥ 0 for every facet normal c, ⟨e,x⟩ = 0 for every
/// equation e}`, together with the generators it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub ambient_dim: usize,
    pub generators: Vec<Vector>,
    /// Primitive inner normals of the facets, in lexicographic order.
    pub facet_normals: Vec<Vector>,
    /// Primitive basis of the orthogonal complement of the linear span.
    pub equations: Vec<Vector>,
    pub dim: usize,
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn single_kernel_vector(rows: &[Vector], dim: usize) -> Option<Vector> {
    let m = if rows.is_empty() {
        IntMatrix::zeros(0, dim)
    } else {
        IntMatrix::from_rows(rows)
    };
    let k = kernel_basis(&m);
    if k.cols() != 1 {
        return None;
    }
    let v = exact::to_i64_vec(&k.column(0)).ok()?;
    Some(primitive(&v))
}

/// Converts a generator description into an irredundant inequality
/// description. Works for cones that are not full-dimensional or not
/// pointed.
pub fn dual_description(ambient_dim: usize, generators: &[Vector]) -> Result<Cone> {
    for g in generators {
        if g.len() != ambient_dim {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: g.len() });
        }
    }
    let gens: Vec<Vector> = generators.to_vec();
    let r = rank_of(&gens, ambient_dim);

    // orthogonal complement of the span
    let at = if gens.is_empty() {
        IntMatrix::zeros(0, ambient_dim)
    } else {
        IntMatrix::from_rows(&gens)
    };
    let mut equations: Vec<Vector> = kernel_basis(&at)
        .columns_i64()?
        .into_iter()
        .map(|v| primitive(&v))
        .collect();
    equations.sort();

    // distinct primitive directions keep the subset search small
    let mut dirs: Vec<Vector> = gens
        .iter()
        .filter(|g| g.iter().any(|&x| x != 0))
        .map(|g| primitive(g))
        .collect();
    dirs.sort();
    dirs.dedup();

    let mut normals: BTreeSet<Vector> = BTreeSet::new();
    if r > 0 {
        for subset in combinations(dirs.len(), r - 1) {
            let chosen: Vec<Vector> = subset.iter().map(|&i| dirs[i].clone()).collect();
            if rank_of(&chosen, ambient_dim) != r - 1 {
                continue;
            }
            let mut rows = chosen;
            rows.extend(equations.iter().cloned());
            let Some(c) = single_kernel_vector(&rows, ambient_dim) else {
                continue;
            };
            let signs: Vec<i64> = dirs.iter().map(|g| dot(&c, g).signum()).collect();
            if signs.iter().all(|&s| s >= 0) {
                normals.insert(c);
            } else if signs.iter().all(|&s| s <= 0) {
                normals.insert(exact::neg(&c));
            }
        }
    }
    Ok(Cone {
        ambient_dim,
        generators: gens,
        facet_normals: normals.into_iter().collect(),
        equations,
        dim: r,
    })
}

impl Cone {
    pub fn contains(&self, x: &[i64]) -> bool {
        self.facet_normals.iter().all(|c| dot(c, x) >= 0)
            && self.equations.iter().all(|e| dot(e, x) == 0)
    }

    pub fn is_pointed(&self) -> bool {
        let mut rows = self.facet_normals.clone();
        rows.extend(self.equations.iter().cloned());
        rank_of(&rows, self.ambient_dim) == self.ambient_dim
    }

    /// A primitive functional strictly positive on every generator, when the
    /// cone is pointed.
    pub fn positive_functional(&self) -> Option<Vector> {
        if !self.is_pointed() {
            return None;
        }
        let mut w = vec![0i64; self.ambient_dim];
        for c in &self.facet_normals {
            w = exact::add(&w, c);
        }
        let w = primitive(&w);
        if self.generators.iter().all(|g| dot(&w, g) > 0) {
            Some(w)
        } else {
            None
        }
    }

    pub fn arrangement(&self) -> Arrangement {
        Arrangement { normals: self.facet_normals.clone() }
    }
}

/// A face of a cone. The empty face has `dim == -1`; for a pointed cone the
/// apex has `dim == 0` and no generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Face {
    pub id: usize,
    /// Indices into the cone's generator list lying on the face.
    pub generator_indices: Vec<usize>,
    /// Indices of facet normals vanishing on the face.
    pub tight_normals: Vec<usize>,
    pub dim: i32,
}

impl Face {
    pub fn is_empty_face(&self) -> bool {
        self.dim < 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    /// `(smaller, larger)` id pairs with `smaller ⊊ larger`.
    pub order: Vec<(usize, usize)>,
    pub top: usize,
    pub bottom: usize,
    #[serde(skip)]
    contains: Vec<Vec<bool>>,
}

impl FaceLattice {
    /// `small ⊆ large` as faces.
    pub fn is_subface(&self, small: usize, large: usize) -> bool {
        self.contains[large][small]
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces other than the empty face.
    pub fn nonempty(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| !f.is_empty_face())
    }

    /// Faces covering `id` (one dimension up and containing it).
    pub fn covers(&self, id: usize) -> Vec<usize> {
        let d = self.faces[id].dim;
        self.faces
            .iter()
            .filter(|g| g.dim == d + 1 && self.is_subface(id, g.id))
            .map(|g| g.id)
            .collect()
    }

    /// Nonempty face whose generator set is exactly `gens` (sorted).
    pub fn find_by_generators(&self, gens: &[usize]) -> Option<usize> {
        let mut key = gens.to_vec();
        key.sort_unstable();
        self.faces
            .iter()
            .find(|f| !f.is_empty_face() && f.generator_indices == key)
            .map(|f| f.id)
    }

    /// Smallest face containing all of the given faces.
    pub fn join(&self, ids: &[usize]) -> usize {
        self.faces
            .iter()
            .filter(|g| ids.iter().all(|&f| self.is_subface(f, g.id)))
            .min_by_key(|g| (g.dim, g.id))
            .map(|g| g.id)
            .expect("face lattice has a top")
    }

    /// Largest face contained in all of the given faces.
    pub fn meet(&self, ids: &[usize]) -> usize {
        self.faces
            .iter()
            .filter(|g| ids.iter().all(|&f| self.is_subface(g.id, f)))
            .max_by_key(|g| (g.dim, std::cmp::Reverse(g.id)))
            .map(|g| g.id)
            .expect("face lattice has a bottom")
    }
}

/// Enumerates every face as the zero set of a set of facet normals.
pub fn face_lattice(cone: &Cone) -> FaceLattice {
    let n = cone.generators.len();
    let m = cone.facet_normals.len();
    let tight_on = |gens: &[usize]| -> Vec<usize> {
        (0..m)
            .filter(|&j| gens.iter().all(|&i| dot(&cone.facet_normals[j], &cone.generators[i]) == 0))
            .collect()
    };

    let top: Vec<usize> = (0..n).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([top.clone()]);
    seen.insert(top);
    while let Some(face) = queue.pop_front() {
        let tight = tight_on(&face);
        for j in 0..m {
            if tight.contains(&j) {
                continue;
            }
            let child: Vec<usize> = face
                .iter()
                .copied()
                .filter(|&i| dot(&cone.facet_normals[j], &cone.generators[i]) == 0)
                .collect();
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }

    let mut raw: Vec<(i32, Vec<usize>, Vec<usize>)> = seen
        .into_iter()
        .map(|gens| {
            let vecs: Vec<Vector> = gens.iter().map(|&i| cone.generators[i].clone()).collect();
            let dim = rank_of(&vecs, cone.ambient_dim) as i32;
            let tight = tight_on(&gens);
            (dim, gens, tight)
        })
        .collect();
    raw.push((-1, Vec::new(), (0..m).collect()));
    raw.sort();

    let faces: Vec<Face> = raw
        .into_iter()
        .enumerate()
        .map(|(id, (dim, generator_indices, tight_normals))| Face {
            id,
            generator_indices,
            tight_normals,
            dim,
        })
        .collect();

    let k = faces.len();
    let mut contains = vec![vec![false; k]; k];
    let mut order = Vec::new();
    for g in &faces {
        for f in &faces {
            let sub = if f.is_empty_face() {
                true
            } else if g.is_empty_face() {
                false
            } else {
                f.generator_indices.iter().all(|i| g.generator_indices.binary_search(i).is_ok())
                    && f.dim <= g.dim
            };
            contains[g.id][f.id] = sub;
            if sub && f.id != g.id {
                order.push((f.id, g.id));
            }
        }
    }
    let top = faces.iter().max_by_key(|f| f.dim).map(|f| f.id).unwrap();
    FaceLattice { faces, order, top, bottom: 0, contains }
}

/// The transverse section of a pointed cone: faces shifted down one
/// dimension (the apex becomes the empty face) with signed incidences.
#[derive(Clone, Debug)]
pub struct TransverseSection {
    /// `faces_by_dim[k]` holds the cone-face ids whose section has dimension
    /// `k - 1`, i.e. cone faces of dimension `k`.
    pub faces_by_dim: Vec<Vec<usize>>,
    /// Incidence `ε(F, G)` for cone faces `F ⊂ G`, `dim G = dim F + 1`.
    pub incidence: HashMap<(usize, usize), i8>,
}

impl TransverseSection {
    pub fn epsilon(&self, f: usize, g: usize) -> i8 {
        self.incidence.get(&(f, g)).copied().unwrap_or(0)
    }

    /// Top cohomological index (the dimension of the cone).
    pub fn top(&self) -> usize {
        self.faces_by_dim.len() - 1
    }

    /// Coboundary matrix from index `k` to `k + 1`, rows indexed by
    /// `faces_by_dim[k + 1]`, columns by `faces_by_dim[k]`.
    pub fn coboundary(&self, k: usize) -> Vec<Vec<i8>> {
        let (src, dst) = (&self.faces_by_dim[k], &self.faces_by_dim[k + 1]);
        dst.iter()
            .map(|&g| src.iter().map(|&f| self.epsilon(f, g)).collect())
            .collect()
    }
}

fn orientation_frame(cone: &Cone, face: &Face) -> Vec<Vector> {
    let mut frame: Vec<Vector> = Vec::new();
    for &i in &face.generator_indices {
        let mut trial = frame.clone();
        trial.push(cone.generators[i].clone());
        if rank_of(&trial, cone.ambient_dim) == trial.len() {
            frame = trial;
        }
        if frame.len() as i32 == face.dim {
            break;
        }
    }
    frame
}

pub fn transverse_section(cone: &Cone, lattice: &FaceLattice) -> Result<TransverseSection> {
    if !cone.is_pointed() {
        return Err(Error::NotPointed);
    }
    let top = cone.dim;
    let mut faces_by_dim = vec![Vec::new(); top + 1];
    for f in lattice.nonempty() {
        faces_by_dim[f.dim as usize].push(f.id);
    }
    let frames: HashMap<usize, Vec<Vector>> = lattice
        .nonempty()
        .map(|f| (f.id, orientation_frame(cone, f)))
        .collect();

    let mut incidence = HashMap::new();
    for k in 0..top {
        for &g in &faces_by_dim[k + 1] {
            let gface = lattice.face(g);
            let bg = &frames[&g];
            for &f in &faces_by_dim[k] {
                if !lattice.is_subface(f, g) {
                    continue;
                }
                let fface = lattice.face(f);
                let v = gface
                    .generator_indices
                    .iter()
                    .find(|i| fface.generator_indices.binary_search(i).is_err())
                    .map(|&i| cone.generators[i].clone())
                    .expect("a covering face has a generator outside the subface");
                let mut m = frames[&f].clone();
                m.push(v);
                // sign of det(B_G^T · M) equals the orientation sign of M in B_G
                let gram: Vec<Vec<i64>> = bg
                    .iter()
                    .map(|b| m.iter().map(|c| dot(b, c)).collect())
                    .collect();
                let det = determinant(&IntMatrix::from_rows(&gram));
                debug_assert!(!det.is_zero());
                incidence.insert((f, g), if det.is_positive() { 1 } else { -1 });
            }
        }
    }
    Ok(TransverseSection { faces_by_dim, incidence })
}

/// The linear hyperplane arrangement of a cone's facet normals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    pub normals: Vec<Vector>,
}

/// Indices `i` (0-based) with `⟨c_i, x⟩ ≥ 0`.
pub type RegionSignature = BTreeSet<usize>;

impl Arrangement {
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn region_signature(&self, x: &[i64]) -> RegionSignature {
        (0..self.normals.len()).filter(|&i| dot(&self.normals[i], x) >= 0).collect()
    }

    /// Membership in the closed cumulative region `R_S`.
    pub fn cumulative_region_member(&self, x: &[i64], s: &RegionSignature) -> bool {
        s.iter().all(|&i| dot(&self.normals[i], x) >= 0)
    }

    /// Whether some real point has region signature exactly `s`.
    pub fn region_nonempty(&self, s: &RegionSignature) -> Result<bool> {
        let Some(first) = self.normals.first() else {
            return Ok(true);
        };
        let dim = first.len();
        let signed: Vec<Vector> = (0..self.normals.len())
            .map(|i| if s.contains(&i) { self.normals[i].clone() } else { exact::neg(&self.normals[i]) })
            .collect();
        // C_S = cone(signed)^∨ is generated by the facet normals of
        // cone(signed) plus ± its equations.
        let dual = dual_description(dim, &signed)?;
        let mut gens = dual.facet_normals.clone();
        for e in &dual.equations {
            gens.push(e.clone());
            gens.push(exact::neg(e));
        }
        Ok((0..self.normals.len())
            .filter(|j| !s.contains(j))
            .all(|j| gens.iter().any(|g| dot(&self.normals[j], g) != 0)))
    }

    /// All signatures with a nonempty region.
    pub fn nonempty_regions(&self) -> Result<Vec<RegionSignature>> {
        let m = self.normals.len();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << m) {
            let s: RegionSignature = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            if self.region_nonempty(&s)? {
                out.push(s);
            }
        }
        out.sort();
        Ok(out)
    }
}
