//! Dense matrices over F_q and Gaussian elimination.

use std::fmt;

use crate::poly_arith::Fq;

#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    fq: Fq,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FqMatrix {
    pub fn zeros(fq: Fq, rows: usize, cols: usize) -> Self {
        FqMatrix {
            fq,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(fq: Fq, n: usize) -> Self {
        let mut m = Self::zeros(fq, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix whose j-th column is `cols[j]`.
    pub fn from_columns(fq: Fq, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(fq, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v % fq.q());
            }
        }
        m
    }

    pub fn fq(&self) -> Fq {
        self.fq
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.rows);
        let q = self.fq.q() as u64;
        let mut out = FqMatrix::zeros(self.fq, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out.set(i, j, (acc % q) as u32);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let q = self.fq.q() as u64;
        (0..self.rows)
            .map(|i| {
                let acc: u64 = (0..self.cols)
                    .map(|k| self.get(i, k) as u64 * v[k] as u64)
                    .sum();
                (acc % q) as u32
            })
            .collect()
    }

    /// Row-reduces in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let fq = self.fq;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = fq.inv(self.get(r, c)).expect("nonzero pivot");
            for j in 0..self.cols {
                let v = fq.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = fq.sub(self.get(i, j), fq.mul(f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the right kernel `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let fq = self.fq;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = fq.neg(m.get(r, f));
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FqMatrix::zeros(self.fq, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i] % self.fq.q());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Some(x)
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<u32> = (0..self.cols).map(|j| self.get(i, j)).collect();
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}
