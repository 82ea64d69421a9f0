//! Exact integer linear algebra: rank, kernels, Smith and Hermite forms,
//! lattice membership.
//!
//! Matrices carry arbitrary-precision entries. Lattice points elsewhere in the
//! crate are `i64` vectors; conversions out of [`IntMatrix`] are checked.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An integer lattice point.
pub type Vector = Vec<i64>;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have the
    /// same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    /// Builds a `dim × cols.len()` matrix whose columns are the given vectors.
    pub fn from_columns<C: AsRef<[i64]>>(dim: usize, cols: &[C]) -> Self {
        let mut m = Self::zeros(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            let col = col.as_ref();
            assert_eq!(col.len(), dim, "column of wrong dimension");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    /// Columns converted to machine integers.
    pub fn columns_i64(&self) -> Result<Vec<Vector>> {
        (0..self.cols).map(|c| to_i64_vec(&self.column(c))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(dst, c) + k * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, dst) + k * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

pub(crate) fn to_i64_vec(v: &[BigInt]) -> Result<Vector> {
    v.iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect()
}

pub(crate) fn to_big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let pivot = a.get(r, c).clone();
        for i in r + 1..rows {
            let lead = a.get(i, c).clone();
            for j in c..cols {
                let v = (&pivot * a.get(i, j) - &lead * a.get(r, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Rank of a list of vectors (as columns).
pub fn rank_of(vectors: &[Vector], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&IntMatrix::from_columns(dim, vectors))
}

/// Determinant of a square matrix (Bareiss).
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap_rows(p, k);
            sign = -sign;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
            a.set(i, k, BigInt::zero());
        }
        prev = pivot;
    }
    sign * a.get(n - 1, n - 1)
}

/// `U·A·V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries of `D`, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form by elementary row and column operations, pivoting on
/// the entry of least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // least nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if a.get(bi, bj).abs() <= x.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_snf(a, u, v);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / &pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / &pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(a.get(i, j) % &pivot).is_zero())
            });
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    finish_snf(a, u, v)
}

fn finish_snf(mut a: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> SnfResult {
    for t in 0..a.rows.min(a.cols) {
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, d: a, v }
}

/// Integer basis (as columns) of `{x ∈ Z^n : m·x = 0}`; zero columns when the
/// kernel is trivial.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let n = m.cols;
    let mut k = IntMatrix::zeros(n, n - r);
    for (out, j) in (r..n).enumerate() {
        for i in 0..n {
            k.set(i, out, snf.v.get(i, j).clone());
        }
    }
    k
}

/// Decides `v ∈ Z·columns(basis)`. Returns integer coefficients when it is.
pub fn lattice_member(basis: &IntMatrix, v: &[i64]) -> Result<Option<Vec<BigInt>>> {
    if basis.rows != v.len() {
        return Err(Error::DimensionMismatch { expected: basis.rows, found: v.len() });
    }
    let snf = smith_normal_form(basis);
    let uv = snf.u.mul_vec(&to_big_vec(v));
    let factors = snf.invariant_factors();
    let r = factors.len();
    if uv[r..].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let mut y = vec![BigInt::zero(); basis.cols];
    for i in 0..r {
        let (q, rem) = uv[i].div_rem(&factors[i]);
        if !rem.is_zero() {
            return Ok(None);
        }
        y[i] = q;
    }
    Ok(Some(snf.v.mul_vec(&y)))
}

/// Solves `cols · λ = target` over the rationals for linearly independent
/// columns; `None` if the target is outside their span.
pub fn solve_in_span(cols: &[Vector], target: &[i64]) -> Option<Vec<BigRational>> {
    let d = target.len();
    let k = cols.len();
    // augmented d × (k+1) elimination over Q
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> =
                cols.iter().map(|c| BigRational::from_integer(c[i].into())).collect();
            row.push(BigRational::from_integer(target[i].into()));
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..d).find(|&i| !a[i][c].is_zero()) else {
            return None; // dependent columns
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..d {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=k {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| a[i][k].clone()).collect())
}

/// Canonical coset representatives modulo a sublattice of `Z^d`, via a
/// row-style Hermite normal form of its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReducer {
    dim: usize,
    /// echelon rows with positive pivots; entries above each pivot reduced
    rows: Vec<(usize, Vector)>,
}

impl LatticeReducer {
    pub fn new(dim: usize, generators: &[Vector]) -> Result<Self> {
        let mut a: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| {
                assert_eq!(g.len(), dim, "generator of wrong dimension");
                to_big_vec(g)
            })
            .collect();
        let mut out: Vec<(usize, Vec<BigInt>)> = Vec::new();
        let mut r = 0;
        for c in 0..dim {
            loop {
                let nz: Vec<usize> = (r..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
                if nz.len() <= 1 {
                    break;
                }
                let m = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
                a.swap(r, m);
                for i in r + 1..a.len() {
                    if a[i][c].is_zero() {
                        continue;
                    }
                    let q = &a[i][c] / &a[r][c];
                    for j in 0..dim {
                        let delta = &q * &a[r][j];
                        a[i][j] -= delta;
                    }
                }
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if !q.is_zero() {
                    for j in 0..dim {
                        let delta = &q * &a[r][j];
                        a[i][j] -= delta;
                    }
                }
            }
            out.push((c, Vec::new()));
            r += 1;
        }
        let rows = out
            .into_iter()
            .enumerate()
            .map(|(i, (c, _))| Ok((c, to_i64_vec(&a[i])?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticeReducer { dim, rows })
    }

    /// The zero lattice.
    pub fn trivial(dim: usize) -> Self {
        LatticeReducer { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Hermite basis vectors of the lattice.
    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Canonical representative of `x + L`.
    pub fn reduce(&self, x: &[i64]) -> Vector {
        let mut v = x.to_vec();
        for (p, row) in &self.rows {
            let h = row[*p];
            let q = v[*p].div_euclid(h);
            if q != 0 {
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj = rj.checked_mul(q).and_then(|t| vj.checked_sub(t)).expect("coordinate overflow");
                }
            }
        }
        v
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.reduce(x).iter().all(|&c| c == 0)
    }

    /// Points of `base + L` with every coordinate in `[-half_width, half_width]`.
    ///
    /// The Hermite rows are in echelon form, so the coefficient of row `i`
    /// is confined by the pivot coordinate once the earlier coefficients
    /// are fixed.
    pub fn coset_points_in_box(&self, base: &[i64], half_width: i64) -> Vec<Vector> {
        let mut out = Vec::new();
        self.box_rec(0, base.to_vec(), half_width, &mut out);
        out
    }

    fn box_rec(&self, i: usize, x: Vector, b: i64, out: &mut Vec<Vector>) {
        if i == self.rows.len() {
            if x.iter().all(|c| c.abs() <= b) {
                out.push(x);
            }
            return;
        }
        let (p, row) = &self.rows[i];
        let h = row[*p];
        let lo = (-b - x[*p]).div_euclid(h) + i64::from((-b - x[*p]).rem_euclid(h) != 0);
        let hi = (b - x[*p]).div_euclid(h);
        for z in lo..=hi {
            self.box_rec(i + 1, add(&x, &scale(row, z)), b, out);
        }
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.checked_add(*y).expect("coordinate overflow")).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y).expect("coordinate overflow")).collect()
}

pub(crate) fn scale(a: &[i64], k: i64) -> Vector {
    a.iter().map(|x| x.checked_mul(k).expect("coordinate overflow")).collect()
}

pub(crate) fn neg(a: &[i64]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// Divides out the gcd of the entries; zero stays zero.
pub fn primitive(v: &[i64]) -> Vector {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn coset_box_matches_scan() {
        let red = LatticeReducer::new(3, &[vec![1, 4, 0], vec![0, 3, 2], vec![2, 2, 2]]).unwrap();
        let base = [1, -2, 5];
        let mut got = red.coset_points_in_box(&base, 4);
        got.sort();
        let mut want = Vec::new();
        for x in -4..=4 {
            for y in -4..=4 {
                for z in -4..=4 {
                    let p = vec![x, y, z];
                    if red.contains(&sub(&p, &base)) {
                        want.push(p);
                    }
                }
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&big(&[&[1, 1, 1, 1], &[0, 1, 3, 4]])), 2);
        assert_eq!(rank(&IntMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&big(&[&[2, 0], &[0, 3], &[2, 3]])), 2);
    }

    #[test]
    fn kernel_of_curve_matrix() {
        let m = big(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        // (2,-3,1,0) and (3,-4,0,1) lie in the integer span of the output
        for v in [[2, -3, 1, 0], [3, -4, 0, 1]] {
            assert!(lattice_member(&k, &v).unwrap().is_some());
        }
        // and the output lies in their span (same lattice)
        let expected = IntMatrix::from_columns(4, &[vec![2, -3, 1, 0], vec![3, -4, 0, 1]]);
        for c in k.columns_i64().unwrap() {
            assert!(lattice_member(&expected, &c).unwrap().is_some());
        }
    }

    #[test]
    fn kernel_trivial_and_small() {
        assert_eq!(kernel_basis(&IntMatrix::identity(2)).cols(), 0);
        let k = kernel_basis(&big(&[&[1, -1]]));
        assert_eq!(k.cols(), 1);
        let c = k.columns_i64().unwrap().remove(0);
        assert!(c == vec![1, 1] || c == vec![-1, -1]);
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&big(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, big(&[&[1, 0], &[0, 6]]));
        let s = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        let s = smith_normal_form(&big(&[&[4]]));
        assert_eq!(s.d, big(&[&[4]]));
        let a = big(&[&[2, 0], &[0, 3]]);
        assert!(s_check(&a));
    }

    fn s_check(a: &IntMatrix) -> bool {
        let s = smith_normal_form(a);
        s.u.mul(a).mul(&s.v) == s.d
    }

    #[test]
    fn lattice_member_examples() {
        let basis = IntMatrix::from_columns(2, &[vec![1, 1], vec![0, 3]]);
        assert!(lattice_member(&basis, &[1, 2]).unwrap().is_none());
        let w = lattice_member(&basis, &[1, 4]).unwrap().unwrap();
        assert_eq!(w, vec![BigInt::from(1), BigInt::from(1)]);
        let w = lattice_member(&basis, &[0, 0]).unwrap().unwrap();
        assert!(w.iter().all(Zero::is_zero));
        assert!(matches!(
            lattice_member(&basis, &[1, 2, 3]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reducer_is_canonical() {
        let red = LatticeReducer::new(2, &[vec![1, 4]]).unwrap();
        assert_eq!(red.reduce(&[2, 6]), vec![0, -2]);
        assert_eq!(red.reduce(&[0, -2]), vec![0, -2]);
        let red = LatticeReducer::new(3, &[vec![0, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(red.reduce(&[1, 0, 1]), vec![1, 0, 0]);
        assert_eq!(red.reduce(&[1, 1, 1]), vec![1, 0, 0]);
        let red = LatticeReducer::new(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(red.reduce(&[3, -1]), vec![1, 1]);
        assert!(red.contains(&[4, -6]));
    }

    #[test]
    fn determinant_and_solve() {
        assert_eq!(determinant(&big(&[&[1, 1], &[0, 4]])), BigInt::from(4));
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        let l = solve_in_span(&[vec![1, 0], vec![1, 4]], &[2, 4]).unwrap();
        assert_eq!(l, vec![BigRational::from_integer(1.into()), BigRational::from_integer(1.into())]);
        assert!(solve_in_span(&[vec![1, 0, 0]], &[0, 1, 0]).is_none());
    }
}
