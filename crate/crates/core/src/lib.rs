//! Exact evaluation and classification of two-dimensional topological field
//! theories.
//!
//! * [`group`]: finite groups as multiplication tables, conjugacy classes.
//! * [`algebra`]: algebras by structure constants; center, cocenter, trace form.
//! * [`frobenius`]: counits, dual bases, the handle element `ω`, `λ(ω^g)`.
//! * [`gauge`]: finite gauge theory on the class functions of a group, with
//!   an independent homomorphism-counting oracle.
//! * [`bordism`]: a bordism expression language evaluated to matrices.
//! * [`classify`]: semisimplicity and Morita-equivalence verdicts.
//!
//! All algebraic code is generic over [`Scalar`]; the aliases below fix the
//! scalar to exact rationals, which is what every verdict in this crate is
//! meant to be computed with.

pub mod algebra;
pub mod bordism;
pub mod classify;
pub mod frobenius;
pub mod gauge;
pub mod group;
pub mod io;
pub mod matrix;
pub mod scalar;

pub use algebra::{AlgebraElement, AlgebraError};
pub use bordism::{closed_surface_expr, parse, BordismError, BordismExpr, Generator};
pub use classify::{classify, classify_frobenius, is_semisimple, morita_equivalent, ClassificationReport, ClassifyError};
pub use frobenius::{validate_trace, FrobeniusError};
pub use gauge::{dw_brute_force, dw_closed_invariant, BruteForceCount, GaugeError};
pub use group::{builtin_group, BuiltinGroup, ConjugacyClasses, FiniteGroup, GroupError};
pub use num_rational::BigRational;
pub use scalar::Scalar;

/// Exact rational scalar.
pub type Rational = BigRational;

pub type Algebra = algebra::Algebra<Rational>;
pub type FrobeniusAlgebra = frobenius::FrobeniusAlgebra<Rational>;
pub type GroupAlgebra = gauge::GroupAlgebra<Rational>;
pub type ClassFunctionSpace = gauge::ClassFunctionSpace<Rational>;
pub type LinearMap = bordism::LinearMap<Rational>;
pub type Matrix = matrix::Matrix<Rational>;

/// Double-precision counterparts, for quick approximate evaluation.
pub mod float {
    pub type Algebra = crate::algebra::Algebra<f64>;
    pub type FrobeniusAlgebra = crate::frobenius::FrobeniusAlgebra<f64>;
    pub type LinearMap = crate::bordism::LinearMap<f64>;
    pub type Matrix = crate::matrix::Matrix<f64>;
}
