//! Square matrices of unbounded integers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[&[T]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| rows[i][j].clone().into())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        self.rows().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        Self::from_fn(self.n, |i, j| (0..self.n).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum())
    }

    /// Determinant by Bareiss fraction-free elimination with row pivoting.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.rows().map(|r| r.to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// `det(zI - self)` by Bareiss elimination over `Q[z]`.
    ///
    /// The leading principal minors of `zI - A` are monic, so no pivoting is
    /// needed and every division is exact.
    pub fn characteristic_polynomial(&self) -> Poly {
        let n = self.n;
        let z = Poly::from_ints([0, 1]);
        let mut a: Vec<Vec<Poly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Poly::constant(BigRational::from_integer(-self[(i, j)].clone()));
                        if i == j {
                            &c + &z
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        if n == 0 {
            return Poly::from_ints([1]);
        }
        let mut prev = Poly::from_ints([1]);
        for k in 0..n - 1 {
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    a[i][j] = q;
                }
            }
            prev = a[k][k].clone();
        }
        a[n - 1][n - 1].clone()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| alloc::format!("{x}").len()).max().unwrap_or(1);
        for row in self.rows() {
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x:>width$}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Cofactor expansion along the first row; independent of Bareiss.
    fn laplace_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * laplace_det(&minor)
            })
            .sum()
    }

    fn m435() -> IntMatrix {
        IntMatrix::from_rows(&[&[63, -22, 12, -8], &[132, -41, 20, -12], &[90, -25, 11, -6], &[20, -5, 2, -1]])
    }

    #[test]
    fn bareiss_matches_laplace() {
        let rows: Vec<Vec<i64>> = vec![vec![0, 2, -1, 3], vec![4, 0, 5, 1], vec![-2, 7, 0, 0], vec![1, 1, 1, 1]];
        let m = IntMatrix::from_fn(4, |i, j| BigInt::from(rows[i][j]));
        assert_eq!(m.determinant(), BigInt::from(laplace_det(&rows)));
        let m = m435();
        let rows: Vec<Vec<i64>> = m.rows().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
        assert_eq!(m.determinant(), BigInt::from(laplace_det(&rows)));
        assert_eq!(m.determinant(), BigInt::from(1));
    }

    #[test]
    fn singular_determinant() {
        let m = IntMatrix::from_rows(&[&[1, 2], &[2, 4]]);
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn charpoly_435() {
        // (z^2 - 30z + 1)(z - 1)^2 = z^4 - 32z^3 + 62z^2 - 32z + 1
        assert_eq!(m435().characteristic_polynomial(), Poly::from_ints([1, -32, 62, -32, 1]));
    }

    #[test]
    fn charpoly_matches_pointwise_determinants() {
        let m = m435();
        let p = m.characteristic_polynomial();
        for t in -3i64..=3 {
            let shifted = IntMatrix::from_fn(4, |i, j| {
                let d = if i == j { BigInt::from(t) } else { BigInt::zero() };
                d - &m[(i, j)]
            });
            assert_eq!(
                p.eval(&BigRational::from_integer(BigInt::from(t))),
                BigRational::from_integer(shifted.determinant())
            );
        }
    }

    #[test]
    fn products() {
        let m = m435();
        let v: Vec<BigInt> = [8, 12, 6, 1].into_iter().map(BigInt::from).collect();
        let w: Vec<BigInt> = [304, 672, 480, 111].into_iter().map(BigInt::from).collect();
        assert_eq!(m.mul_vec(&v), w);
        assert_eq!(m.mul(&IntMatrix::identity(4)), m);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.column(0), m.transpose().row(0).to_vec());
    }
}
