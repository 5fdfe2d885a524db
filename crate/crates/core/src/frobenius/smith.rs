//! Smith normal form over F_q[T].

use crate::error::{Error, Result};
use crate::linalg::FqMatrix;
use crate::poly_arith::{Degree, PolyA};

/// Square matrix with entries in F_q[T], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    data: Vec<PolyA>,
}

impl PolyMatrix {
    pub fn new(n: usize, data: Vec<PolyA>) -> Self {
        assert_eq!(data.len(), n * n);
        PolyMatrix { n, data }
    }

    /// `T*I - M` for a matrix over F_q.
    pub fn characteristic(m: &FqMatrix) -> Self {
        let fq = m.fq();
        let n = m.rows();
        assert_eq!(n, m.cols());
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut e = PolyA::constant(fq, fq.neg(m.get(i, j)));
                if i == j {
                    e = &e + &PolyA::t(fq);
                }
                data.push(e);
            }
        }
        PolyMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyA {
        &self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: PolyA) {
        self.data[i * self.n + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.data.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.n {
                self.data.swap(i * self.n + a, i * self.n + b);
            }
        }
    }

    /// row[dst] -= f * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, f: &PolyA, from: usize) {
        for j in from..self.n {
            let v = self.get(dst, j) - &(f * self.get(src, j));
            self.set(dst, j, v);
        }
    }

    /// col[dst] -= f * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, f: &PolyA, from: usize) {
        for i in from..self.n {
            let v = self.get(i, dst) - &(f * self.get(i, src));
            self.set(i, dst, v);
        }
    }

    /// Position of a nonzero entry of least degree in the lower-right block.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, Degree)> = None;
        for i in t..self.n {
            for j in t..self.n {
                let d = self.get(i, j).deg();
                if d != Degree::NegInf && best.as_ref().is_none_or(|b| d < b.2) {
                    best = Some((i, j, d));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Diagonal of the Smith normal form: monic invariant factors `e_1 | e_2 | ...`,
/// with zeros last.
pub fn smith_diagonal(m: &PolyMatrix) -> Result<Vec<PolyA>> {
    let mut a = m.clone();
    let n = a.n;
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        let Some((i, j)) = a.min_entry(t) else {
            for _ in t..n {
                diag.push(PolyA::zero(m.data[0].fq()));
            }
            break;
        };
        a.swap_rows(t, i);
        a.swap_cols(t, j);
        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..n {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (quo, rem) = a.get(i, t).divmod(a.get(t, t))?;
                a.row_axpy(i, t, &quo, t);
                if !rem.is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (quo, rem) = a.get(t, j).divmod(a.get(t, t))?;
                a.col_axpy(j, t, &quo, t);
                if !rem.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder of smaller degree than the pivot exists; move it in
                let (i, j) = smallest_in_cross(&a, t);
                a.swap_rows(t, i);
                a.swap_cols(t, j);
                continue;
            }
            // the pivot must divide the remaining block
            let pivot = a.get(t, t).clone();
            let bad_row = (t + 1..n).find(|&i| (t + 1..n).any(|j| !pivot.divides(a.get(i, j))));
            match bad_row {
                Some(i) => {
                    let one = PolyA::one(pivot.fq());
                    a.row_axpy(t, i, &-&one, t);
                }
                None => break,
            }
        }
        diag.push(a.get(t, t).monic());
    }
    for w in diag.windows(2) {
        if !w[1].is_zero() && !w[0].divides(&w[1]) {
            return Err(Error::Internal(
                "Smith form lost the divisibility chain".into(),
            ));
        }
    }
    Ok(diag)
}

fn smallest_in_cross(a: &PolyMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t, a.get(t, t).deg());
    for i in t + 1..a.n {
        let d = a.get(i, t).deg();
        if d != Degree::NegInf && d < best.2 {
            best = (i, t, d);
        }
    }
    for j in t + 1..a.n {
        let d = a.get(t, j).deg();
        if d != Degree::NegInf && d < best.2 {
            best = (t, j, d);
        }
    }
    (best.0, best.1)
}

/// Invariant factors of F_q^n as an F_q[T]-module with T acting by `m`.
pub fn invariant_factors(m: &FqMatrix) -> Result<Vec<PolyA>> {
    smith_diagonal(&PolyMatrix::characteristic(m))
}
