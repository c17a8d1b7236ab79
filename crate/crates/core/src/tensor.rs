//! Order-3 structure-constant tables.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Structure constants of a bilinear product: `e_i * e_j = sum_k c[i][j][k] e_k`.
///
/// Also used for comultiplications, where `d[k][i][j]` is the coefficient of
/// `e_i (x) e_j` in `delta(e_k)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![Scalar::zero(); n * n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { n, data }
    }

    /// Table whose `(i, j)` product is `f(i, j)`.
    pub fn from_products(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut t = Tensor3::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                debug_assert_eq!(v.len(), n);
                t.set_product(i, j, &v);
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Coefficients of `e_i * e_j`.
    pub fn product_slice(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j, 0);
        &self.data[o..o + self.n]
    }

    pub fn product(&self, i: usize, j: usize) -> Vector {
        Vector(self.product_slice(i, j).to_vec())
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: &Vector) {
        let o = self.offset(i, j, 0);
        self.data[o..o + self.n].clone_from_slice(&v.0);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Number of nonzero products `e_i * e_j`.
    pub fn nonzero_products(&self) -> usize {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.product_slice(i, j).iter().any(|c| !c.is_zero()))
            .count()
    }

    /// Bilinear product of two coordinate vectors.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        assert!(x.len() == self.n && y.len() == self.n, "vector length mismatch");
        let mut out = Vector::zeros(self.n);
        for (i, a) in x.nonzeros() {
            for (j, b) in y.nonzeros() {
                let row = self.product_slice(i, j);
                if row.iter().all(Scalar::is_zero) {
                    continue;
                }
                let ab = a * b;
                for (k, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Left multiplication `L(x)`: `L(x) y = x * y`.
    pub fn left(&self, x: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (i, a) in x.nonzeros() {
            for j in 0..self.n {
                for (k, c) in self.product_slice(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] += &(a * c);
                    }
                }
            }
        }
        m
    }

    /// Right multiplication `R(y)`: `R(y) x = x * y`.
    pub fn right(&self, y: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (j, b) in y.nonzeros() {
            for i in 0..self.n {
                for (k, c) in self.product_slice(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, i)] += &(b * c);
                    }
                }
            }
        }
        m
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        self.left(&Vector::basis(self.n, i))
    }

    pub fn right_basis(&self, j: usize) -> Matrix {
        self.right(&Vector::basis(self.n, j))
    }

    /// The opposite product `x *' y = y * x`.
    pub fn opposite(&self) -> Tensor3 {
        Tensor3::from_fn(self.n, |i, j, k| self.get(j, i, k).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: self.data.iter().map(|c| c * s).collect(),
        }
    }

    /// Reindexes `out[a][b][c] = self[p(a,b,c)]`, used for dualizing.
    pub fn permuted(&self, f: impl Fn(usize, usize, usize) -> (usize, usize, usize)) -> Tensor3 {
        Tensor3::from_fn(self.n, |a, b, c| {
            let (i, j, k) = f(a, b, c);
            self.get(i, j, k).clone()
        })
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tensor3 n={} {{", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.product(i, j);
                if !v.is_zero() {
                    writeln!(f, "  e{} * e{} = {}", i + 1, j + 1, v)?;
                }
            }
        }
        write!(f, "}}")
    }
}

impl Add<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.n, rhs.n);
        Tensor3 {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.n, rhs.n);
        Tensor3 {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}
