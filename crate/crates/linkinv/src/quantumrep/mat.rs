use crate::ring::{RationalQ, RingError};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Dense matrix over ℚ(q).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<RationalQ>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = RationalQ;
    fn index(&self, (r, c): (usize, usize)) -> &RationalQ {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut RationalQ {
        &mut self.data[r * self.cols + c]
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![RationalQ::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RationalQ::one();
        }
        m
    }

    pub fn diagonal(d: Vec<RationalQ>) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &RationalQ) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Super tensor product: `(A⊗B)(v⊗w) = (-1)^{|B||v|} Av⊗Bw`, with
    /// `col_parity[c]` the degree of the c-th basis vector acted on by A.
    pub fn kron_super(&self, o: &Mat, o_odd: bool, col_parity: &[bool]) -> Mat {
        let mut out = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let a = if o_odd && col_parity[k] { -a } else { a.clone() };
                for j in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o[(j, l)];
                        if !b.is_zero() {
                            out[(i * o.rows + j, k * o.cols + l)] = &a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn kron(&self, o: &Mat) -> Mat {
        self.kron_super(o, false, &[])
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Mat, RingError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero()).ok_or(RingError::NotInvertible)?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let piv = a[(c, c)].inv()?;
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] * &piv;
                inv[(c, j)] = &inv[(c, j)] * &piv;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for j in 0..n {
                    if !a[(c, j)].is_zero() {
                        a[(r, j)] = &a[(r, j)] - &(&f * &a[(c, j)]);
                    }
                    if !inv[(c, j)].is_zero() {
                        inv[(r, j)] = &inv[(r, j)] - &(&f * &inv[(c, j)]);
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Entries evaluated at a rational q, flattened row by row.
    pub fn eval(&self, x: &BigRational) -> Option<Vec<BigRational>> {
        self.data.iter().map(|e| e.eval(x)).collect()
    }
}

/// Rank of a list of rational vectors.
pub fn rank(vectors: &[Vec<BigRational>]) -> usize {
    let sparse: Vec<BTreeMap<usize, BigRational>> =
        vectors.iter().map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()).collect();
    rank_sparse(sparse)
}

/// Rank by echelon reduction of sparse rows.
pub fn rank_sparse(vectors: Vec<BTreeMap<usize, BigRational>>) -> usize {
    let mut pivots: Vec<(usize, BTreeMap<usize, BigRational>)> = Vec::new();
    for mut v in vectors {
        for (c, row) in &pivots {
            let Some(f) = v.get(c).cloned() else { continue };
            let f = f / &row[c];
            for (k, x) in row {
                let e = v.entry(*k).or_insert_with(BigRational::zero);
                *e -= &f * x;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
        if let Some((&c, _)) = v.iter().next() {
            pivots.push((c, v));
        }
    }
    pivots.len()
}
