//! Exact rational scalars, vectors, and dense matrices.
//!
//! All arithmetic is over arbitrary-precision rationals; there is no
//! floating point and no tolerance anywhere. Elimination runs fraction-free
//! (Bareiss) on denominator-cleared integer rows and normalizes back to
//! reduced rationals on output. Pivoting is deterministic (first nonzero in
//! column order), so every result is reproducible bit for bit.

use crate::Error;
use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

/// Exact rational scalar. `num` keeps the denominator positive and the
/// fraction reduced, with zero stored as 0/1.
pub type Rational = num::BigRational;

/// A coordinate vector of rationals.
pub type Vector = Vec<Rational>;

/// Rational from an integer pair; panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`. Unreduced input is accepted and normalized; a sign
/// on the denominator is folded into the numerator.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| format!("invalid integer {:?}", num_str.trim()))?;
    let denom: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| format!("invalid integer {:?}", den_str.trim()))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in {:?}", text));
    }
    Ok(Rational::new(numer, denom))
}

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

/// Standard basis vector `e_i` of the given length.
pub fn basis_vector(len: usize, i: usize) -> Vector {
    let mut v = zero_vector(len);
    v[i] = Rational::one();
    v
}

pub fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Adds `c * src` into `dst` in place.
pub fn vec_add_scaled(dst: &mut [Rational], c: &Rational, src: &[Rational]) {
    debug_assert_eq!(dst.len(), src.len());
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

/// Dense exact-rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
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

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Rational]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = x.clone();
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = zero_vector(self.rows);
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out[i] += &self[(i, j)] * x;
                }
            }
        }
        Ok(out)
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Matrix power for square matrices; `pow(0)` is the identity.
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `[self | extra]` column augmentation.
    pub fn augment(&self, extra: &[Rational]) -> Matrix {
        assert_eq!(extra.len(), self.rows);
        Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                extra[i].clone()
            }
        })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Reduced row echelon form and the strictly increasing pivot columns.
    ///
    /// The forward pass clears denominators row by row and eliminates
    /// fraction-free in the Bareiss style; back substitution then normalizes
    /// pivots to one over the rationals.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        // Denominator-cleared integer copy; zero rows stay zero.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .filter(|x| !x.is_zero())
                    .fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();

        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..self.rows {
                for j in 0..self.cols {
                    if j == c {
                        continue;
                    }
                    let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    debug_assert!((&t % &prev).is_zero());
                    m[i][j] = t / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }

        // Back substitution over the rationals.
        let mut out: Vec<Vector> = m
            .into_iter()
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect();
        for (t, &c) in pivots.iter().enumerate().rev() {
            let inv = out[t][c].clone();
            for x in out[t].iter_mut() {
                *x = &*x / &inv;
            }
            for i in 0..t {
                let f = out[i][c].clone();
                if f.is_zero() {
                    continue;
                }
                let upper = std::mem::take(&mut out[i]);
                let lower = &out[t];
                out[i] = upper
                    .iter()
                    .zip(lower)
                    .map(|(u, l)| u - &f * l)
                    .collect();
            }
        }
        (Matrix::from_rows(out), pivots)
    }

    /// Number of pivots of the reduced row echelon form.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space; `cols - rank` vectors, each satisfying
    /// `self * v = 0` exactly. Basis vectors are ordered by their free
    /// column, ascending.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (t, &c) in pivots.iter().enumerate() {
                map[c] = Some(t);
            }
            map
        };
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for f in 0..self.cols {
            if pivot_of_col[f].is_some() {
                continue;
            }
            let mut v = zero_vector(self.cols);
            v[f] = Rational::one();
            for (t, &c) in pivots.iter().enumerate() {
                v[c] = -r[(t, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b` exactly, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vector>, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "linear solve right-hand side",
                expected: self.rows,
                got: b.len(),
            });
        }
        let (r, pivots) = self.augment(b).rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.cols);
        for (t, &c) in pivots.iter().enumerate() {
            x[c] = r[(t, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Basis of the column space: the columns of `self` sitting at the pivot
    /// columns of the reduced row echelon form.
    pub fn column_space_basis(&self) -> Vec<Vector> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.col(c)).collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}
