//! Dense matrices over [`LaurentPoly`].
//!
//! Column `j` of a tube matrix is the image of generator `j`; vectors are
//! columns and are acted on from the left.

use std::ops::Mul;

use rayon::prelude::*;

use crate::poly::LaurentPoly;

// Below this many rows the rayon split costs more than it saves.
const PAR_ROWS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    /// Builds from row vectors; `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Option<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return None;
        }
        Some(PolyMatrix { rows: n, cols: m, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn scale(&self, c: &LaurentPoly) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let row = |i: usize| dot(self.row(i), v);
        if self.rows >= PAR_ROWS {
            (0..self.rows).into_par_iter().map(row).collect()
        } else {
            (0..self.rows).map(row).collect()
        }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> PolyMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = PolyMatrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// `Σ a_i b_i`.
pub fn dot(a: &[LaurentPoly], b: &[LaurentPoly]) -> LaurentPoly {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    let mut acc = LaurentPoly::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;

    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let (n, m, p) = (self.rows, self.cols, rhs.cols);
        let row = |i: usize| {
            let mut out = vec![LaurentPoly::zero(); p];
            for k in 0..m {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out.iter_mut().enumerate() {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        *slot += &(a * b);
                    }
                }
            }
            out
        };
        let rows: Vec<Vec<LaurentPoly>> =
            if n >= PAR_ROWS { (0..n).into_par_iter().map(row).collect() } else { (0..n).map(row).collect() };
        PolyMatrix { rows: n, cols: p, data: rows.into_iter().flatten().collect() }
    }
}
