use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Dense matrix over the rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds a `rows x cols` matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(AlgebraError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self, AlgebraError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
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

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rank over the rationals via fraction-free (Bareiss) elimination on the
    /// row-wise denominator-cleared integer matrix.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| clear_denominators(self.row(r)))
            .collect();
        bareiss_rank(rows, self.cols)
    }

    /// Reduced row echelon form and the list of pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    /// If the columns in `support` are minimally dependent, returns the kernel
    /// vector with exactly that support, scaled so its smallest-index entry is +1.
    ///
    /// Fails with [`AlgebraError::NonTuRelation`] when the normalized relation has
    /// an entry outside {-1, 0, +1}.
    pub fn kernel_vector_on_support(
        &self,
        support: &[usize],
    ) -> Result<Option<Vec<i8>>, AlgebraError> {
        let mut support = support.to_vec();
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Ok(None);
        }
        let sub = self.select_columns(&support);
        let kernel = sub.kernel_basis();
        if kernel.len() != 1 {
            return Ok(None);
        }
        let v = &kernel[0];
        if v.iter().any(Zero::is_zero) {
            return Ok(None);
        }
        let scale = v[0].recip();
        let mut out = vec![0i8; self.cols];
        for (&c, x) in support.iter().zip(v) {
            let y = x * &scale;
            out[c] = if y.is_one() {
                1
            } else if (-y).is_one() {
                -1
            } else {
                return Err(AlgebraError::NonTuRelation { support });
            };
        }
        Ok(Some(out))
    }

    /// Exact solution of `self * x = b`.
    ///
    /// `Ok(None)` when the system is inconsistent; an error when it has
    /// infinitely many solutions.
    pub fn solve(&self, b: &[BigRational]) -> Result<Option<Vec<BigRational>>, AlgebraError> {
        if b.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (rref, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        if pivots.len() < self.cols {
            return Err(AlgebraError::SingularUnderdetermined);
        }
        Ok(Some(
            (0..self.cols).map(|i| rref.get(i, self.cols).clone()).collect(),
        ))
    }
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn bareiss_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let n = rows.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in rank + 1..n {
            let factor = rows[i][c].clone();
            for j in 0..cols {
                let v = (&rows[i][j] * &pivot - &factor * &rows[rank][j]) / &prev;
                rows[i][j] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    if let Some(d) = small_determinant(rows) {
        return BigInt::from(d);
    }
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &m[n - 1][n - 1]
    }
}

/// Bareiss determinant in checked `i128` arithmetic; `None` on overflow.
pub fn small_determinant(rows: &[Vec<i64>]) -> Option<i128> {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return Some(0);
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = m[k][k];
    }
    let d = if n == 0 { 1 } else { m[n - 1][n - 1] };
    Some(if negate { -d } else { d })
}

/// Integral normal of the hyperplane through the origin spanned by the given
/// `d - 1` vectors in `Z^d`, computed by signed cofactor expansion. The zero
/// vector is returned when the vectors are dependent.
pub fn cofactor_normal(vectors: &[Vec<i64>], d: usize) -> Vec<i64> {
    debug_assert_eq!(vectors.len() + 1, d);
    let mut normal = Vec::with_capacity(d);
    let mut minor: Vec<Vec<i64>> = vec![Vec::with_capacity(d.saturating_sub(1)); vectors.len()];
    for k in 0..d {
        for (row, v) in minor.iter_mut().zip(vectors) {
            row.clear();
            row.extend(v.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x));
        }
        let det = determinant(&minor)
            .to_i64()
            .expect("cofactor of a small polytope fits in i64");
        normal.push(if k % 2 == 0 { det } else { -det });
    }
    normal
}

pub fn gcd_i64(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0i64, |acc, v| acc.gcd(&v))
}

pub fn to_rational_vec(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

/// Converts an all-integer rational vector; `None` if an entry is fractional.
pub fn integral_vec(v: &[BigRational]) -> Option<Vec<BigInt>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

pub fn is_nonnegative_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_negative()
}
