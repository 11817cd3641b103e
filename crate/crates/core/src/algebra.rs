//! Finite-dimensional associative unital algebras given by structure constants.

use std::fmt;

use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NotAssociative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("UnitFails: unit does not act as identity on e{0}")]
    UnitFails(usize),
    #[error("DimensionMismatch: expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// An element of an algebra, as coordinates in the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement<T> {
    coords: Vec<T>,
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self { coords: vec![T::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![T::zero(); dim];
        coords[i] = T::one();
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(T::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coords.iter().map(|a| a.clone() * s.clone()).collect())
    }

    /// Concatenation, i.e. the pair `(self, other)` in a direct sum.
    pub fn concat(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().chain(&other.coords).cloned().collect())
    }
}

impl<T: fmt::Display> fmt::Display for AlgebraElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An associative unital algebra with basis `e_0..e_{dim-1}` and
/// `e_i e_j = sum_k structure[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra<T> {
    dim: usize,
    structure: Vec<T>,
    unit: Vec<T>,
}

impl<T: Scalar> Algebra<T> {
    /// Validates shapes, associativity and the unit law.
    pub fn from_structure(dim: usize, structure: Vec<Vec<Vec<T>>>, unit: Vec<T>) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ShapeMismatch("dimension must be positive".into()));
        }
        if structure.len() != dim
            || structure.iter().any(|s| s.len() != dim || s.iter().any(|r| r.len() != dim))
        {
            return Err(AlgebraError::ShapeMismatch(format!("structure constants must be {dim}x{dim}x{dim}")));
        }
        let flat = structure.into_iter().flatten().flatten().collect();
        Self::from_flat(dim, flat, unit)
    }

    /// Like [`Algebra::from_structure`] with `structure[(i * dim + j) * dim + k]`.
    pub fn from_flat(dim: usize, structure: Vec<T>, unit: Vec<T>) -> Result<Self, AlgebraError> {
        if dim == 0 || structure.len() != dim * dim * dim {
            return Err(AlgebraError::ShapeMismatch(format!("expected {} structure constants", dim * dim * dim)));
        }
        if unit.len() != dim {
            return Err(AlgebraError::ShapeMismatch(format!("unit has {} coordinates, expected {dim}", unit.len())));
        }
        let alg = Self { dim, structure, unit };
        alg.check_associative()?;
        alg.check_unit()?;
        Ok(alg)
    }

    /// Skips validation; for callers whose constants are associative and
    /// unital by construction.
    pub(crate) fn from_flat_unchecked(dim: usize, structure: Vec<T>, unit: Vec<T>) -> Self {
        debug_assert_eq!(structure.len(), dim * dim * dim);
        debug_assert_eq!(unit.len(), dim);
        Self { dim, structure, unit }
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.right_mul_basis(&ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.left_mul_basis(i, &jk);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        let u = AlgebraElement::new(self.unit.clone());
        for i in 0..self.dim {
            let e = AlgebraElement::basis(self.dim, i);
            if self.mul(&u, &e) != e || self.mul(&e, &u) != e {
                return Err(AlgebraError::UnitFails(i));
            }
        }
        Ok(())
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground_field() -> Self {
        Self::diagonal(1)
    }

    /// `k^n` with componentwise multiplication (orthogonal idempotents `e_i`).
    pub fn diagonal(n: usize) -> Self {
        let mut s = vec![T::zero(); n * n * n];
        for i in 0..n {
            s[(i * n + i) * n + i] = T::one();
        }
        Self::from_flat(n, s, vec![T::one(); n]).expect("diagonal algebra is valid")
    }

    /// Dual numbers `k[x]/(x^2)` with basis `(1, x)`.
    pub fn dual_numbers() -> Self {
        let (o, z) = (T::one(), T::zero());
        let s = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o], vec![z.clone(), z.clone()]],
        ];
        Self::from_structure(2, s, vec![T::one(), z]).expect("dual numbers are valid")
    }

    /// The full matrix algebra `M_n(k)` with basis `E_ab` at index `a * n + b`.
    pub fn matrix_algebra(n: usize) -> Self {
        let d = n * n;
        let mut s = vec![T::zero(); d * d * d];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    // E_ab E_bc = E_ac
                    s[((a * n + b) * d + (b * n + c)) * d + (a * n + c)] = T::one();
                }
            }
        }
        let mut unit = vec![T::zero(); d];
        for a in 0..n {
            unit[a * n + a] = T::one();
        }
        Self::from_flat(d, s, unit).expect("matrix algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_k` in `e_i e_j`.
    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &T {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    fn product_slice(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    pub fn structure(&self) -> Vec<Vec<Vec<T>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.product_slice(i, j).to_vec()).collect())
            .collect()
    }

    pub fn unit(&self) -> AlgebraElement<T> {
        AlgebraElement::new(self.unit.clone())
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement<T> {
        AlgebraElement::basis(self.dim, i)
    }

    pub fn element(&self, coords: Vec<T>) -> Result<AlgebraElement<T>, AlgebraError> {
        self.check_dim(coords.len())?;
        Ok(AlgebraElement::new(coords))
    }

    fn check_dim(&self, found: usize) -> Result<(), AlgebraError> {
        if found == self.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { expected: self.dim, found })
        }
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<T> {
        self.product_slice(i, j).to_vec()
    }

    // v * e_k
    fn right_mul_basis(&self, v: &[T], k: usize) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim];
        for (m, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            axpy(&mut out, c, self.product_slice(m, k));
        }
        out
    }

    // e_i * v
    fn left_mul_basis(&self, i: usize, v: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim];
        for (m, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            axpy(&mut out, c, self.product_slice(i, m));
        }
        out
    }

    /// Bilinear product via the structure constants.
    pub fn multiply(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> Result<AlgebraElement<T>, AlgebraError> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        Ok(self.mul(x, y))
    }

    /// Unchecked form of [`Algebra::multiply`]; panics on dimension mismatch.
    pub fn mul(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> AlgebraElement<T> {
        assert!(x.dim() == self.dim && y.dim() == self.dim, "element dimension mismatch");
        let mut out = vec![T::zero(); self.dim];
        for (i, a) in x.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.coords.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                axpy(&mut out, &(a.clone() * b.clone()), self.product_slice(i, j));
            }
        }
        AlgebraElement::new(out)
    }

    /// `x^n`, with `x^0` the unit.
    pub fn pow(&self, x: &AlgebraElement<T>, n: u32) -> AlgebraElement<T> {
        (0..n).fold(self.unit(), |acc, _| self.mul(&acc, x))
    }

    /// Matrix of `y -> x y`; column `j` holds the coordinates of `x e_j`.
    pub fn left_regular_matrix(&self, x: &AlgebraElement<T>) -> Result<Matrix<T>, AlgebraError> {
        self.check_dim(x.dim())?;
        let mut m: Matrix<T> = Matrix::zeros(self.dim, self.dim);
        for (i, a) in x.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..self.dim {
                for (k, c) in self.product_slice(i, j).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    m[(k, j)] = m[(k, j)].clone() + a.clone() * c.clone();
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `y -> y x`; column `j` holds the coordinates of `e_j x`.
    pub fn right_regular_matrix(&self, x: &AlgebraElement<T>) -> Result<Matrix<T>, AlgebraError> {
        self.check_dim(x.dim())?;
        let mut m: Matrix<T> = Matrix::zeros(self.dim, self.dim);
        for (i, a) in x.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..self.dim {
                for (k, c) in self.product_slice(j, i).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    m[(k, j)] = m[(k, j)].clone() + a.clone() * c.clone();
                }
            }
        }
        Ok(m)
    }

    /// Gram matrix `tr(L_{e_i} L_{e_j})` of the regular trace form.
    ///
    /// Computed as `tr(L_{e_i e_j})`, which agrees because `L` is a representation.
    pub fn regular_trace_form(&self) -> Matrix<T> {
        let n = self.dim;
        let traces: Vec<T> = (0..n)
            .map(|k| (0..n).fold(T::zero(), |acc, a| acc + self.constant(k, a, a).clone()))
            .collect();
        Matrix::from_fn(n, n, |i, j| {
            self.product_slice(i, j)
                .iter()
                .zip(&traces)
                .filter(|(c, _)| !c.is_zero())
                .fold(T::zero(), |acc, (c, t)| acc + c.clone() * t.clone())
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.product_slice(i, j) == self.product_slice(j, i)))
    }

    /// Reduced row-echelon basis of the center `{z : z e_i = e_i z for all i}`.
    pub fn center(&self) -> Vec<AlgebraElement<T>> {
        let n = self.dim;
        // row (i, k): coefficient of e_k in z e_i - e_i z, as a function of z
        let commutators = Matrix::from_fn(n * n, n, |row, j| {
            let (i, k) = (row / n, row % n);
            self.constant(j, i, k).clone() - self.constant(i, j, k).clone()
        });
        let kernel = commutators.kernel();
        if kernel.is_empty() {
            return Vec::new();
        }
        let (echelon, pivots) = Matrix::from_rows(kernel).rref();
        (0..pivots.len()).map(|r| AlgebraElement::new(echelon.row(r).to_vec())).collect()
    }

    /// `dim A - rank span{e_i e_j - e_j e_i}`, the dimension of `A / [A, A]`.
    pub fn cocenter_dim(&self) -> usize {
        let n = self.dim;
        let rows: Vec<Vec<T>> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                self.product_slice(i, j)
                    .iter()
                    .zip(self.product_slice(j, i))
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect::<Vec<T>>()
            })
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        if rows.is_empty() {
            return n;
        }
        n - Matrix::from_rows(rows).rank()
    }

    /// The opposite algebra: `e_i * e_j := e_j e_i`.
    pub fn opposite(&self) -> Self {
        let n = self.dim;
        let mut s = Vec::with_capacity(self.structure.len());
        for i in 0..n {
            for j in 0..n {
                s.extend_from_slice(self.product_slice(j, i));
            }
        }
        Self { dim: n, structure: s, unit: self.unit.clone() }
    }

    /// Block-diagonal direct sum; basis of `self` first, then `other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let mut s = vec![T::zero(); n * n * n];
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    s[(i * n + j) * n + k] = self.constant(i, j, k).clone();
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    s[((a + i) * n + (a + j)) * n + (a + k)] = other.constant(i, j, k).clone();
                }
            }
        }
        let unit = self.unit.iter().chain(&other.unit).cloned().collect();
        Self { dim: n, structure: s, unit }
    }
}

fn axpy<T: Scalar>(out: &mut [T], a: &T, x: &[T]) {
    for (o, v) in out.iter_mut().zip(x) {
        if !v.is_zero() {
            *o = o.clone() + a.clone() * v.clone();
        }
    }
}
