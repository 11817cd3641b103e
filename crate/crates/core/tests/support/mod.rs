#![allow(dead_code)]

use std::collections::BTreeMap;

use cobord2::algebra::{Algebra, AlgebraElement};
use cobord2::frobenius::FrobeniusAlgebra;
use cobord2::gauge::{ClassFunctionSpace, GroupAlgebra};
use cobord2::matrix::Matrix;
use cobord2::{builtin_group, BordismExpr, Generator, Rational, Scalar};

pub const CORPUS_GROUPS: [&str; 7] = ["Z2", "Z3", "Z4", "S3", "D4", "Q8", "S4"];

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn qr(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn dw_center(tag: &str) -> FrobeniusAlgebra<Rational> {
    let g = builtin_group(tag).unwrap();
    ClassFunctionSpace::new(GroupAlgebra::<Rational>::new(&g)).unwrap().center_frobenius().clone()
}

pub fn dual_numbers() -> FrobeniusAlgebra<Rational> {
    FrobeniusAlgebra::from_counit(Algebra::dual_numbers(), vec![q(0), q(1)]).unwrap()
}

pub fn qxq() -> FrobeniusAlgebra<Rational> {
    FrobeniusAlgebra::from_counit(Algebra::diagonal(2), vec![q(2), q(3)]).unwrap()
}

/// Every commutative Frobenius algebra the acceptance corpus names.
pub fn frobenius_corpus() -> Vec<(String, FrobeniusAlgebra<Rational>)> {
    let mut out: Vec<_> = CORPUS_GROUPS.iter().map(|t| (format!("Z({t})"), dw_center(t))).collect();
    out.push(("QxQ(2,3)".into(), qxq()));
    out.push(("Q[x]/(x^2)".into(), dual_numbers()));
    out
}

/// `k[x]/(x^m)` with basis `1, x, ..., x^(m-1)`.
pub fn truncated_polynomial(m: usize) -> Algebra<Rational> {
    let mut s = vec![q(0); m * m * m];
    for i in 0..m {
        for j in 0..m {
            if i + j < m {
                s[(i * m + j) * m + i + j] = q(1);
            }
        }
    }
    let mut unit = vec![q(0); m];
    unit[0] = q(1);
    Algebra::from_flat(m, s, unit).unwrap()
}

/// `k[x]/(x^2 - a)` with basis `1, x`.
pub fn quadratic(a: i64) -> Algebra<Rational> {
    let mut s = vec![q(0); 8];
    s[0] = q(1); // 1*1 = 1
    s[3] = q(1); // 1*x = x
    s[5] = q(1); // x*1 = x
    s[6] = q(a); // x*x = a
    Algebra::from_flat(2, s, vec![q(1), q(0)]).unwrap()
}

/// Bilinear pairing matrix `λ(e_i e_j)`, computed from the structure constants.
pub fn pairing(a: &Algebra<Rational>, counit: &[Rational]) -> Matrix<Rational> {
    let n = a.dim();
    Matrix::from_fn(n, n, |i, j| (0..n).map(|k| a.constant(i, j, k).clone() * counit[k].clone()).sum())
}

/// Tensors as sparse maps from basis multi-indices to coefficients.
pub type Tensor = BTreeMap<Vec<usize>, Rational>;

/// Direct interpreter for bordism expressions acting on sparse tensors. The
/// coproduct is obtained from the defining identity
/// `(λ⊗λ)((x⊗y)Δ(z)) = λ(xyz)`, i.e. `Δ(z) = G⁻¹ T_z G⁻¹` with
/// `T_z[x][y] = λ(e_x e_y z)`.
pub struct Interpreter {
    algebra: Algebra<Rational>,
    counit: Vec<Rational>,
    coproduct: Vec<Matrix<Rational>>,
}

impl Interpreter {
    pub fn new(algebra: &Algebra<Rational>, counit: &[Rational]) -> Self {
        let n = algebra.dim();
        let ginv = pairing(algebra, counit).inverse().expect("nondegenerate");
        let coproduct = (0..n)
            .map(|z| {
                let t = Matrix::from_fn(n, n, |x, y| {
                    let xy = algebra.mul(&algebra.basis_element(x), &algebra.basis_element(y));
                    let xyz = algebra.mul(&xy, &algebra.basis_element(z));
                    xyz.coords().iter().zip(counit).map(|(a, b)| a.clone() * b.clone()).sum()
                });
                ginv.mul(&t).mul(&ginv)
            })
            .collect();
        Self { algebra: algebra.clone(), counit: counit.to_vec(), coproduct }
    }

    fn generator(&self, g: Generator, input: &[usize]) -> Tensor {
        let n = self.algebra.dim();
        let mut out = Tensor::new();
        let mut add = |k: Vec<usize>, v: Rational| {
            if v != q(0) {
                *out.entry(k).or_insert_with(|| q(0)) += v;
            }
        };
        match g {
            Generator::Id => add(input.to_vec(), q(1)),
            Generator::Swap => add(vec![input[1], input[0]], q(1)),
            Generator::Cap => {
                for (k, c) in self.algebra.unit().coords().iter().enumerate() {
                    add(vec![k], c.clone());
                }
            }
            Generator::Cup => add(vec![], self.counit[input[0]].clone()),
            Generator::Pants => {
                for k in 0..n {
                    add(vec![k], self.algebra.constant(input[0], input[1], k).clone());
                }
            }
            Generator::Copants => {
                let d = &self.coproduct[input[0]];
                for k in 0..n {
                    for l in 0..n {
                        add(vec![k, l], d[(k, l)].clone());
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, expr: &BordismExpr, input: &Tensor) -> Tensor {
        use cobord2::bordism::ExprKind;
        match expr.kind() {
            ExprKind::Gen(g) => {
                let mut out = Tensor::new();
                for (idx, c) in input {
                    for (k, v) in self.generator(*g, idx) {
                        *out.entry(k).or_insert_with(|| q(0)) += v * c.clone();
                    }
                }
                out
            }
            ExprKind::Seq(a, b) => self.apply(b, &self.apply(a, input)),
            ExprKind::Par(a, b) => {
                let split = a.inputs();
                let mut out = Tensor::new();
                for (idx, c) in input {
                    let left = self.apply(a, &Tensor::from([(idx[..split].to_vec(), q(1))]));
                    let right = self.apply(b, &Tensor::from([(idx[split..].to_vec(), q(1))]));
                    for (lk, lv) in &left {
                        for (rk, rv) in &right {
                            let key: Vec<usize> = lk.iter().chain(rk).copied().collect();
                            *out.entry(key).or_insert_with(|| q(0)) += lv.clone() * rv.clone() * c.clone();
                        }
                    }
                }
                out
            }
        }
    }
}

/// Flat index of a multi-index, first factor most significant.
pub fn flat_index(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

pub fn multi_index(mut flat: usize, len: usize, dim: usize) -> Vec<usize> {
    let mut v = vec![0; len];
    for slot in v.iter_mut().rev() {
        *slot = flat % dim;
        flat /= dim;
    }
    v
}

pub fn element(v: &[i64]) -> AlgebraElement<Rational> {
    AlgebraElement::new(v.iter().map(|&x| q(x)).collect())
}
