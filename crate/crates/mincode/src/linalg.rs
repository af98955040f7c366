//! Vectors and matrices over a [`Field`]: reduction, rank, products, Gram
//! matrices, weights and support masks.
//!
//! Vectors are plain `&[u16]` element-code slices; supports are materialized
//! as machine-word bit masks because pairwise mask inclusion is the hot path
//! of minimality checking.

use std::fmt;
use std::sync::Arc;

use crate::galois::Field;
use crate::{Error, Result};

/// Hamming weight and support of a vector. Field-independent: only the
/// zero/nonzero pattern matters.
pub fn weight_and_support(entries: &[u16]) -> (usize, SupportMask) {
    let mask = SupportMask::from_entries(entries);
    (mask.popcount() as usize, mask)
}

/// Fixed-width bit mask over coordinate positions; bit i set iff entry i != 0.
#[derive(Clone, PartialEq, Eq)]
pub struct SupportMask {
    bits: Vec<u64>,
    len: usize,
    ones: u32,
}

impl SupportMask {
    pub fn from_entries(entries: &[u16]) -> SupportMask {
        let len = entries.len();
        let mut bits = vec![0u64; len.div_ceil(64)];
        for (i, &e) in entries.iter().enumerate() {
            if e != 0 {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        let ones = bits.iter().map(|w| w.count_ones()).sum();
        SupportMask { bits, len, ones }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.ones == 0
    }

    pub fn popcount(&self) -> u32 {
        self.ones
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    /// self ⊆ other, i.e. every set bit of self is set in other.
    pub fn is_subset_of(&self, other: &SupportMask) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Set positions in ascending order.
    pub fn positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.bit(i)).collect()
    }
}

impl fmt::Debug for SupportMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SupportMask{:?}", self.positions())
    }
}

/// Row-major matrix over a field.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

/// Result of Gaussian elimination to reduced row echelon form.
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Arc<Field>, rows: usize, cols: usize, data: Vec<u16>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        debug_assert!(data.iter().all(|&e| e < field.order()));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Arc<Field>, rows: &[Vec<u16>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix::new(field, r, c, data)
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::new(field, n, n, vec![0; n * n]);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u16> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::new(
            Arc::clone(&self.field),
            self.cols,
            self.rows,
            vec![0; self.data.len()],
        );
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form with deterministic pivoting: leftmost pivot
    /// column first, topmost available row as pivot.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            if piv != r {
                for c in 0..m.cols {
                    let a = m.get(r, c);
                    let b = m.get(piv, c);
                    m.set(r, c, b);
                    m.set(piv, c, a);
                }
            }
            let scale = f.inv(m.get(r, col)).expect("pivot is nonzero");
            if scale != 1 {
                for c in 0..m.cols {
                    m.set(r, c, f.mul(scale, m.get(r, c)));
                }
            }
            for i in 0..m.rows {
                if i != r && m.get(i, col) != 0 {
                    let factor = m.get(i, col);
                    for c in 0..m.cols {
                        let v = f.sub(m.get(i, c), f.mul(factor, m.get(r, c)));
                        m.set(i, c, v);
                    }
                }
            }
            pivot_cols.push(col);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Standard matrix product over the field.
    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = &self.field;
        let mut out = Matrix::new(
            Arc::clone(&self.field),
            self.rows,
            other.cols,
            vec![0; self.rows * other.cols],
        );
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// G * G^T: the k x k matrix of pairwise standard inner products of rows.
    pub fn gram(&self) -> Matrix {
        let f = &self.field;
        let mut out = Matrix::new(
            Arc::clone(&self.field),
            self.rows,
            self.rows,
            vec![0; self.rows * self.rows],
        );
        for i in 0..self.rows {
            for j in i..self.rows {
                let mut s = 0u16;
                for c in 0..self.cols {
                    s = f.add(s, f.mul(self.get(i, c), self.get(j, c)));
                }
                out.set(i, j, s);
                out.set(j, i, s);
            }
        }
        out
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && self.field.order() == other.field.order()
    }
}
impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}x{} over GF({})",
            self.rows,
            self.cols,
            self.field.order()
        )?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
