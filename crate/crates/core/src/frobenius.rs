//! Frobenius structures on an algebra: counit, pairing, dual basis and the
//! handle element, plus the closed-surface values they determine.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, AlgebraError};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("DegenerateForm: pairing is singular, kernel vector {kernel}")]
    DegenerateForm { kernel: String },
    #[error("NotCommutative: e{0} e{1} != e{1} e{0}")]
    NotCommutative(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An algebra with a counit `λ` whose pairing `(a, b) -> λ(ab)` is nondegenerate.
///
/// The dual basis is fixed by `λ(e_i^∨ e_j) = δ_ij`, so row `i` of
/// `dual_basis` is row `i` of the inverse Gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusAlgebra<T> {
    algebra: Algebra<T>,
    counit: Vec<T>,
    gram: Matrix<T>,
    gram_inverse: Matrix<T>,
    dual_basis: Matrix<T>,
    handle: AlgebraElement<T>,
}

impl<T: Scalar> FrobeniusAlgebra<T> {
    pub fn from_counit(algebra: Algebra<T>, counit: Vec<T>) -> Result<Self, FrobeniusError> {
        if counit.len() != algebra.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: algebra.dim(), found: counit.len() }.into());
        }
        let gram = pairing_matrix(&algebra, &counit);
        let Some(gram_inverse) = gram.inverse() else {
            let kernel = gram.kernel().into_iter().next().map(AlgebraElement::new).expect("singular matrix has a kernel");
            return Err(FrobeniusError::DegenerateForm { kernel: kernel.to_string() });
        };
        let dual_basis = gram_inverse.clone();
        let handle = handle_from_dual_basis(&algebra, &dual_basis);
        Ok(Self { algebra, counit, gram, gram_inverse, dual_basis, handle })
    }

    pub fn algebra(&self) -> &Algebra<T> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn counit(&self) -> &[T] {
        &self.counit
    }

    /// `gram[i][j] = λ(e_i e_j)`.
    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix<T> {
        &self.gram_inverse
    }

    /// Row `i` holds the coordinates of `e_i^∨`.
    pub fn dual_basis(&self) -> &Matrix<T> {
        &self.dual_basis
    }

    pub fn dual_element(&self, i: usize) -> AlgebraElement<T> {
        AlgebraElement::new(self.dual_basis.row(i).to_vec())
    }

    /// The handle element `ω = Σ e_i e_i^∨`.
    pub fn handle(&self) -> &AlgebraElement<T> {
        &self.handle
    }

    /// Recomputes `Σ e_i e_i^∨` from the stored dual basis.
    pub fn recompute_handle(&self) -> AlgebraElement<T> {
        handle_from_dual_basis(&self.algebra, &self.dual_basis)
    }

    /// `λ(x)`
    pub fn apply_counit(&self, x: &AlgebraElement<T>) -> T {
        dot(&self.counit, x.coords())
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    fn require_commutative(&self) -> Result<(), FrobeniusError> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                if (0..n).any(|k| self.algebra.constant(i, j, k) != self.algebra.constant(j, i, k)) {
                    return Err(FrobeniusError::NotCommutative(i, j));
                }
            }
        }
        Ok(())
    }

    /// Closed genus-`g` surface value `λ(ω^g)`; genus 0 gives `λ(1)`.
    pub fn genus_invariant(&self, genus: u32) -> Result<T, FrobeniusError> {
        self.require_commutative()?;
        Ok(self.apply_counit(&self.algebra.pow(&self.handle, genus)))
    }

    /// Whether left multiplication by `ω` is invertible.
    pub fn is_handle_unit(&self) -> bool {
        let l = self.algebra.left_regular_matrix(&self.handle).expect("handle lies in the algebra");
        l.rank() == self.dim()
    }

    /// Direct sum with concatenated counits.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, FrobeniusError> {
        let algebra = self.algebra.direct_sum(&other.algebra);
        let counit = self.counit.iter().chain(&other.counit).cloned().collect();
        let sum = Self::from_counit(algebra, counit)?;
        debug_assert_eq!(sum.handle, self.handle.concat(&other.handle));
        Ok(sum)
    }

    /// Same algebra, counit multiplied by `c`.
    pub fn rescaled(&self, c: &T) -> Result<Self, FrobeniusError> {
        Self::from_counit(self.algebra.clone(), self.counit.iter().map(|x| x.clone() * c.clone()).collect())
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `m[i][j] = λ(e_i e_j)`
fn pairing_matrix<T: Scalar>(algebra: &Algebra<T>, counit: &[T]) -> Matrix<T> {
    let n = algebra.dim();
    Matrix::from_fn(n, n, |i, j| (0..n).fold(T::zero(), |acc, k| acc + algebra.constant(i, j, k).clone() * counit[k].clone()))
}

fn handle_from_dual_basis<T: Scalar>(algebra: &Algebra<T>, dual_basis: &Matrix<T>) -> AlgebraElement<T> {
    let n = algebra.dim();
    (0..n).fold(AlgebraElement::zero(n), |acc, i| {
        let dual = AlgebraElement::new(dual_basis.row(i).to_vec());
        acc.add(&algebra.mul(&algebra.basis_element(i), &dual))
    })
}

/// Outcome of checking whether a counit is a symmetric nondegenerate trace.
#[derive(Debug, Clone, PartialEq)]
pub enum TraceVerdict<T> {
    Valid,
    /// `λ(e_i e_j) != λ(e_j e_i)`
    Asymmetric { i: usize, j: usize },
    Degenerate { kernel: AlgebraElement<T> },
}

impl<T: Scalar> TraceVerdict<T> {
    pub fn is_valid(&self) -> bool {
        matches!(self, Self::Valid)
    }
}

impl<T: fmt::Display> fmt::Display for TraceVerdict<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Valid => write!(f, "valid"),
            Self::Asymmetric { i, j } => write!(f, "asymmetric at (e{i}, e{j})"),
            Self::Degenerate { kernel } => write!(f, "degenerate, kernel vector {kernel}"),
        }
    }
}

/// Checks that `λ(ab)` is symmetric and nondegenerate, reporting the first failure.
pub fn diagnose_trace<T: Scalar>(algebra: &Algebra<T>, counit: &[T]) -> Result<TraceVerdict<T>, AlgebraError> {
    if counit.len() != algebra.dim() {
        return Err(AlgebraError::DimensionMismatch { expected: algebra.dim(), found: counit.len() });
    }
    let gram = pairing_matrix(algebra, counit);
    let n = algebra.dim();
    for i in 0..n {
        for j in i + 1..n {
            if gram[(i, j)] != gram[(j, i)] {
                return Ok(TraceVerdict::Asymmetric { i, j });
            }
        }
    }
    Ok(match gram.kernel().into_iter().next() {
        Some(v) => TraceVerdict::Degenerate { kernel: AlgebraElement::new(v) },
        None => TraceVerdict::Valid,
    })
}

/// Boolean form of [`diagnose_trace`].
pub fn validate_trace<T: Scalar>(algebra: &Algebra<T>, counit: &[T]) -> Result<bool, AlgebraError> {
    Ok(diagnose_trace(algebra, counit)?.is_valid())
}
