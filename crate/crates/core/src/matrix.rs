//! Dense matrices over a [`RingSpec`] and the division-free algorithms on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{CommRing, RingElem, RingSpec};

/// Characteristic polynomial `det(tI - M)` of an `n x n` row-major matrix by
/// the Samuelson-Berkowitz recurrence. Coefficients low to high, monic.
///
/// Uses only ring operations, so it is valid over any commutative ring.
pub fn char_poly_coeffs<R: CommRing>(ring: &R, n: usize, entries: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(entries.len(), n * n);
    if n == 0 {
        return vec![ring.one()];
    }
    let at = |i: usize, j: usize| &entries[i * n + j];
    // Highest-degree-first coefficients of the bottom-right 1x1 block.
    let mut poly: Vec<R::Elem> = vec![ring.one(), ring.neg(at(n - 1, n - 1))];
    for k in (0..n - 1).rev() {
        // Block [[a, row], [col, sub]] with sub = entries[k+1.., k+1..].
        let size = n - k - 1;
        let a = at(k, k);
        let row: Vec<R::Elem> = (k + 1..n).map(|j| at(k, j).clone()).collect();
        let mut vec: Vec<R::Elem> = (k + 1..n).map(|i| at(i, k).clone()).collect();
        // Toeplitz column: 1, -a, -row.col, -row.sub.col, ..., -row.sub^{size-1}.col
        let mut toeplitz = Vec::with_capacity(size + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a));
        for step in 0..size {
            let dot = row.iter().zip(&vec).fold(ring.zero(), |acc, (r, v)| ring.add(&acc, &ring.mul(r, v)));
            toeplitz.push(ring.neg(&dot));
            if step + 1 < size {
                let mut next = Vec::with_capacity(size);
                for i in 0..size {
                    let mut s = ring.zero();
                    for j in 0..size {
                        s = ring.add(&s, &ring.mul(at(k + 1 + i, k + 1 + j), &vec[j]));
                    }
                    next.push(s);
                }
                vec = next;
            }
        }
        // new = T * poly, T lower-triangular Toeplitz of shape (size+2) x (size+1).
        let mut next = Vec::with_capacity(size + 2);
        for i in 0..size + 2 {
            let mut s = ring.zero();
            for (j, p) in poly.iter().enumerate() {
                if j <= i {
                    s = ring.add(&s, &ring.mul(&toeplitz[i - j], p));
                }
            }
            next.push(s);
        }
        poly = next;
    }
    poly.reverse();
    poly
}

/// A dense row-major matrix over a finite commutative ring.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<RingElem>,
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMatrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|e| self.ring.format(*e)).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RingMatrix {
    pub fn new(ring: &RingSpec, rows: usize, cols: usize, entries: Vec<RingElem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrix must have positive dimensions".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if entries.iter().any(|e| e.0 >= ring.size()) {
            return Err(Error::DimensionMismatch("entry outside the ring".into()));
        }
        Ok(Self { ring: ring.clone(), rows, cols, entries })
    }

    /// Builds a matrix from small integers, reduced into the ring.
    pub fn from_ints(ring: &RingSpec, rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        let entries = values.iter().map(|v| ring.from_int(*v)).collect();
        Self::new(ring, rows, cols, entries)
    }

    pub fn zeros(ring: &RingSpec, rows: usize, cols: usize) -> Self {
        Self { ring: ring.clone(), rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> RingElem {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RingElem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<RingElem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Applies `f` to every entry, possibly landing in another ring.
    pub fn map(&self, target: &RingSpec, f: impl Fn(RingElem) -> RingElem) -> Self {
        Self { ring: target.clone(), rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| f(*e)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let r = &self.ring;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| r.add(*a, *b)).collect();
        Ok(Self { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        let r = &self.ring;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| r.sub(*a, *b)).collect();
        Ok(Self { entries, ..self.clone() })
    }

    pub fn scale(&self, c: RingElem) -> Self {
        let r = &self.ring;
        Self { entries: self.entries.iter().map(|a| r.mul(c, *a)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let r = &self.ring;
        let mut out = Self::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = r.add(out.entries[idx], r.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[RingElem]) -> Result<Vec<RingElem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector product".into()));
        }
        let r = &self.ring;
        Ok((0..self.rows).map(|i| r.sum(self.row(i).iter().zip(v).map(|(a, b)| r.mul(*a, *b)))).collect())
    }

    /// Submatrix on the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j)));
        let entries: Vec<RingElem> = entries.map(|(i, j)| self.get(i, j)).collect();
        Self::new(&self.ring, rows.len(), cols.len(), entries)
    }

    /// Characteristic polynomial `det(tI - M)`, division-free.
    pub fn char_poly(&self) -> Result<Poly> {
        self.require_square()?;
        let coeffs = char_poly_coeffs(&self.ring, self.rows, &self.entries);
        Ok(Poly::new(&self.ring, coeffs))
    }

    /// Determinant as `(-1)^n` times the constant term of the characteristic
    /// polynomial.
    pub fn det(&self) -> Result<RingElem> {
        self.require_square()?;
        let n = self.rows;
        let coeffs = char_poly_coeffs(&self.ring, n, &self.entries);
        Ok(if n % 2 == 0 { coeffs[0] } else { self.ring.neg(coeffs[0]) })
    }

    /// Adjugate via Cayley-Hamilton:
    /// `adj(M) = (-1)^{n+1} (M^{n-1} + c_{n-1} M^{n-2} + ... + c_1 I)`.
    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let r = &self.ring;
        let c = char_poly_coeffs(r, n, &self.entries);
        let mut acc = Self::zeros(r, n, n);
        for k in (1..=n).rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                acc.entries[i * n + i] = r.add(acc.entries[i * n + i], c[k]);
            }
        }
        Ok(if n % 2 == 1 { acc } else { acc.scale(r.neg(r.one())) })
    }

    /// Inverse as adjugate times the inverse determinant.
    pub fn invert(&self) -> Result<Self> {
        let det = self.det()?;
        let inv = self.ring.inv(det).ok_or_else(|| Error::NonUnitDeterminant(self.ring.format(det)))?;
        Ok(self.adjugate()?.scale(inv))
    }

    /// Row-reduces with unit pivots only. Returns the reduced matrix and the
    /// pivot columns. Fails with [`Error::NotFree`] if some non-pivot row
    /// keeps a nonzero entry, i.e. the solution module is not cut out by free
    /// variables.
    fn unit_rref(&self) -> Result<(Self, Vec<usize>)> {
        let r = &self.ring;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(found) = (prow..m.rows).find(|&i| r.is_unit(m.get(i, col))) else {
                continue;
            };
            if found != prow {
                for j in 0..m.cols {
                    m.entries.swap(found * m.cols + j, prow * m.cols + j);
                }
            }
            let inv = r.inv(m.get(prow, col)).unwrap();
            for j in 0..m.cols {
                let v = m.get(prow, j);
                m.set(prow, j, r.mul(inv, v));
            }
            for i in 0..m.rows {
                if i == prow {
                    continue;
                }
                let f = m.get(i, col);
                if r.is_zero(f) {
                    continue;
                }
                for j in 0..m.cols {
                    let v = r.sub(m.get(i, j), r.mul(f, m.get(prow, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        if m.entries[prow * m.cols..].iter().any(|e| !r.is_zero(*e)) {
            return Err(Error::NotFree(format!("no unit pivot available after {} pivots", pivots.len())));
        }
        Ok((m, pivots))
    }

    /// Basis of the kernel `{x : Mx = 0}` as a free module.
    pub fn kernel(&self) -> Result<Vec<Vec<RingElem>>> {
        let r = &self.ring;
        let (m, pivots) = self.unit_rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Ok(free
            .iter()
            .map(|&f| {
                let mut v = vec![r.zero(); self.cols];
                v[f] = r.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.neg(m.get(row, f));
                }
                v
            })
            .collect())
    }

    /// Rank of the column space, when it is a free direct summand.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.unit_rref()?.1.len())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(ring: &RingSpec, columns: &[Vec<RingElem>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        let mut m = Self::zeros(ring, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, *v);
            }
        }
        Ok(m)
    }
}

/// Whether the vectors extend to a basis of the ambient free module: some
/// maximal minor of the column matrix is a unit (checked via unit pivots).
pub fn is_unimodular(ring: &RingSpec, vectors: &[Vec<RingElem>]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    let Ok(m) = RingMatrix::from_columns(ring, vectors) else {
        return false;
    };
    // Row-reduce the transpose: each vector must contribute a unit pivot.
    let t = m.transpose();
    let r = ring;
    let mut rows: Vec<Vec<RingElem>> = (0..t.rows).map(|i| t.row(i).to_vec()).collect();
    let ncols = t.cols;
    let mut used = vec![false; ncols];
    for i in 0..rows.len() {
        let Some(col) = (0..ncols).find(|&c| !used[c] && r.is_unit(rows[i][c])) else {
            return false;
        };
        used[col] = true;
        let inv = r.inv(rows[i][col]).unwrap();
        let pivot: Vec<RingElem> = rows[i].iter().map(|v| r.mul(inv, *v)).collect();
        for (k, other) in rows.iter_mut().enumerate() {
            if k == i {
                continue;
            }
            let f = other[col];
            if r.is_zero(f) {
                continue;
            }
            for c in 0..ncols {
                other[c] = r.sub(other[c], r.mul(f, pivot[c]));
            }
        }
        rows[i] = pivot;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leibniz_det(m: &RingMatrix) -> RingElem {
        // Permutation expansion, independent of the Berkowitz route.
        let n = m.rows();
        let r = m.ring();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = r.zero();
        fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == 1 {
                out.push(perm.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, out);
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        let mut perms = Vec::new();
        heap(n, &mut perm, &mut perms);
        for p in perms {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let term = (0..n).fold(r.one(), |acc, i| r.mul(acc, m.get(i, p[i])));
            total = if inversions % 2 == 0 { r.add(total, term) } else { r.sub(total, term) };
        }
        total
    }

    fn f(p: u32) -> RingSpec {
        RingSpec::zmod(p).unwrap()
    }

    #[test]
    fn det_examples() {
        let r7 = f(7);
        assert_eq!(RingMatrix::identity(&r7, 3).det().unwrap(), r7.one());
        let m = RingMatrix::from_ints(&r7, 2, 2, &[0, 1, 3, 0]).unwrap();
        assert_eq!(m.det().unwrap(), r7.from_int(4));
        let r9 = f(9);
        let m = RingMatrix::from_ints(&r9, 2, 2, &[1, 2, 2, 4]).unwrap();
        assert_eq!(m.det().unwrap(), r9.zero());
        let m = RingMatrix::from_ints(&r9, 2, 3, &[1, 2, 2, 4, 0, 0]).unwrap();
        assert!(matches!(m.det(), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn char_poly_examples() {
        let r3 = f(3);
        let id = RingMatrix::identity(&r3, 2);
        // (t-1)^2 = t^2 - 2t + 1 = t^2 + t + 1 over F_3
        assert_eq!(id.char_poly().unwrap().coeffs(), &[r3.one(), r3.one(), r3.one()]);
        // companion of t^2 + 1
        let comp = RingMatrix::from_ints(&r3, 2, 2, &[0, -1, 1, 0]).unwrap();
        assert_eq!(comp.char_poly().unwrap().coeffs(), &[r3.one(), r3.zero(), r3.one()]);
        let nil = RingMatrix::from_ints(&r3, 3, 3, &[0, 1, 2, 0, 0, 1, 0, 0, 0]).unwrap();
        let cp = nil.char_poly().unwrap();
        assert_eq!(cp.coeffs(), &[r3.zero(), r3.zero(), r3.zero(), r3.one()]);
    }

    #[test]
    fn invert_examples() {
        let r9 = f(9);
        let id = RingMatrix::identity(&r9, 3);
        assert_eq!(id.invert().unwrap(), id);
        let u = RingMatrix::from_ints(&r9, 2, 2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(u.invert().unwrap(), RingMatrix::from_ints(&r9, 2, 2, &[1, 8, 0, 1]).unwrap());
        let s = RingMatrix::from_ints(&r9, 2, 2, &[3, 0, 0, 1]).unwrap();
        assert!(matches!(s.invert(), Err(Error::NonUnitDeterminant(_))));
    }

    #[test]
    fn det_matches_leibniz() {
        let r = f(9);
        let mut state = 12345u64;
        for n in 1..=5 {
            for _ in 0..40 {
                let vals: Vec<i64> = (0..n * n)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        (state >> 33) as i64 % 9
                    })
                    .collect();
                let m = RingMatrix::from_ints(&r, n, n, &vals).unwrap();
                assert_eq!(m.det().unwrap(), leibniz_det(&m), "{m:?}");
                let adj = m.adjugate().unwrap();
                let prod = adj.mul(&m).unwrap();
                assert_eq!(prod, RingMatrix::identity(&r, n).scale(m.det().unwrap()));
            }
        }
    }

    #[test]
    fn kernel_over_field_and_local_ring() {
        let r5 = f(5);
        let m = RingMatrix::from_ints(&r5, 2, 3, &[1, 2, 3, 2, 4, 0]).unwrap();
        let ker = m.kernel().unwrap();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).unwrap().iter().all(|e| r5.is_zero(*e)));
        // Over Z/9, [[3]] has kernel {0,3,6}, which is not free.
        let r9 = f(9);
        let bad = RingMatrix::from_ints(&r9, 1, 1, &[3]).unwrap();
        assert!(matches!(bad.kernel(), Err(Error::NotFree(_))));
    }

    #[test]
    fn unimodular_detection() {
        let r9 = f(9);
        let a = vec![r9.from_int(1), r9.from_int(3)];
        let b = vec![r9.from_int(3), r9.from_int(1)];
        assert!(is_unimodular(&r9, &[a.clone(), b]));
        let c = vec![r9.from_int(3), r9.from_int(0)];
        assert!(!is_unimodular(&r9, &[c]));
        assert!(!is_unimodular(&r9, &[a.clone(), a]));
    }
}
