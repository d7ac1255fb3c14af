//! Exact linear algebra over the small fields: matrices, reduced row
//! echelon form, and canonical subspaces with span, membership, sum,
//! intersection, and nullspace.

use crate::error::{Error, Result};
use crate::gf::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u8>]) -> Result<Matrix> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a {}-column matrix",
                bad.len(),
                cols
            )));
        }
        let mut m = Matrix::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        Ok(m)
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.swap_rows(row, pivot_row);
            let scale = f.inv(self.at(row, col));
            for c in 0..self.cols {
                self.set(row, c, f.mul(self.at(row, c), scale));
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in 0..self.cols {
                        let v = f.sub(self.at(r, c), f.mul(factor, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (va, vb) = (self.at(a, c), self.at(b, c));
            self.set(a, c, vb);
            self.set(b, c, va);
        }
    }

    /// Drops all-zero rows; used after `rref` to canonicalize a basis.
    fn without_zero_rows(mut self) -> Matrix {
        let cols = self.cols;
        let mut kept = Vec::new();
        for r in 0..self.rows {
            if self.row(r).iter().any(|&v| v != 0) {
                kept.extend_from_slice(self.row(r));
            }
        }
        self.rows = kept.len() / cols;
        self.data = kept;
        self
    }
}

/// A linear subspace in canonical form: its basis matrix is the reduced row
/// echelon form with zero rows removed, so equality of subspaces is
/// equality of matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
        }
    }

    pub fn full(f: &Field, ambient: usize) -> Subspace {
        let _ = f;
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Row space of the given vectors.
    pub fn span(f: &Field, ambient: usize, vectors: &[Vec<u8>]) -> Result<Subspace> {
        let mut m = Matrix::from_rows(ambient, vectors)?;
        m.rref(f);
        Ok(Subspace {
            ambient,
            basis: m.without_zero_rows(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<u8>> {
        (0..self.basis.rows())
            .map(|r| self.basis.row(r).to_vec())
            .collect()
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, f: &Field, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rest = v.to_vec();
        for r in 0..self.basis.rows() {
            let lead = (0..self.ambient)
                .find(|&c| self.basis.at(r, c) != 0)
                .expect("basis rows are nonzero");
            if rest[lead] != 0 {
                let factor = rest[lead]; // pivot entries are 1 in rref
                for c in 0..self.ambient {
                    rest[c] = f.sub(rest[c], f.mul(factor, self.basis.at(r, c)));
                }
            }
        }
        rest.iter().all(|&v| v == 0)
    }

    pub fn sum(f: &Field, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient, b.ambient);
        let mut rows = a.basis_rows();
        rows.extend(b.basis_rows());
        Subspace::span(f, a.ambient, &rows).expect("dimensions agree")
    }

    /// Intersection by the Zassenhaus block construction: rows `[u | u]`
    /// for the first space and `[w | 0]` for the second; after elimination
    /// the right halves of rows with zero left half span the intersection.
    pub fn intersect(f: &Field, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient, b.ambient);
        let n = a.ambient;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for u in a.basis_rows() {
            let mut row = u.clone();
            row.extend(u);
            rows.push(row);
        }
        for w in b.basis_rows() {
            let mut row = w.clone();
            row.extend(vec![0u8; n]);
            rows.push(row);
        }
        let mut m = Matrix::from_rows(2 * n, &rows).expect("rows built to width 2n");
        m.rref(f);
        let mut inter_rows = Vec::new();
        for r in 0..m.rows() {
            let left_zero = (0..n).all(|c| m.at(r, c) == 0);
            let right = m.row(r)[n..].to_vec();
            if left_zero && right.iter().any(|&v| v != 0) {
                inter_rows.push(right);
            }
        }
        Subspace::span(f, n, &inter_rows).expect("intersection rows have width n")
    }

    /// All vectors of the subspace, by enumerating coefficient tuples.
    /// Exponential in the dimension; intended for the small spaces here.
    pub fn vectors(&self, f: &Field) -> Vec<Vec<u8>> {
        let dim = self.dim();
        let q = f.order();
        let mut out = Vec::with_capacity(q.pow(dim as u32));
        let mut coeffs = vec![0u8; dim];
        loop {
            let mut v = vec![0u8; self.ambient];
            for (i, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for j in 0..self.ambient {
                        v[j] = f.add(v[j], f.mul(c, self.basis.at(i, j)));
                    }
                }
            }
            out.push(v);
            // odometer over coefficient tuples
            let mut i = 0;
            loop {
                if i == dim {
                    return out;
                }
                coeffs[i] += 1;
                if (coeffs[i] as usize) < q {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }
}

/// Solution space of `M v = 0`, rows of `m` read as equations.
pub fn nullspace(f: &Field, m: &Matrix) -> Subspace {
    let cols = m.cols();
    let mut work = m.clone();
    let pivots = work.rref(f);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut rows = Vec::new();
    for &fc in &free {
        let mut v = vec![0u8; cols];
        v[fc] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot variable = -(coefficient of the free column)
            v[pc] = f.neg(work.at(r, fc));
        }
        rows.push(v);
    }
    Subspace::span(f, cols, &rows).expect("nullspace rows have full width")
}
