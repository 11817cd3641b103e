//! Finite gauge theory for a finite group `G`.
//!
//! The circle is assigned the center of the group algebra `k[G]`, spanned by
//! the class sums `H_i`. With the counit `λ(g) = δ_{g,e} / |G|` the closed
//! genus-`g` surface evaluates to `#Hom(π₁Σ_g, G) / |G|`, which
//! [`dw_brute_force`] computes independently by enumerating tuples
//! `(a_1, b_1, ..., a_g, b_g)` with `∏ [a_i, b_i] = e`.

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement};
use crate::frobenius::{FrobeniusAlgebra, FrobeniusError};
use crate::group::{ConjugacyClasses, FiniteGroup};
use crate::scalar::Scalar;

/// Default bound on `|G|^(2g)` for brute-force enumeration.
pub const DEFAULT_WORK_CAP: u128 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaugeError {
    #[error("IndexOutOfRange: class index {index} but only {len} classes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(String),
    #[error("WorkLimitExceeded: {estimated} tuples to enumerate, cap is {cap}")]
    WorkLimitExceeded { estimated: u128, cap: u128 },
    #[error("WorkerPool: {0}")]
    WorkerPool(String),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}

/// `k[G]` with the group elements as basis.
#[derive(Debug, Clone)]
pub struct GroupAlgebra<T> {
    group: FiniteGroup,
    algebra: Algebra<T>,
    dw_counit: Vec<T>,
}

impl<T: Scalar> GroupAlgebra<T> {
    pub fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut structure = vec![T::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                structure[(i * n + j) * n + group.mul(i, j)] = T::one();
            }
        }
        let mut unit = vec![T::zero(); n];
        unit[group.identity()] = T::one();
        // associative and unital because the table is a group table
        let algebra = Algebra::from_flat_unchecked(n, structure, unit);
        let mut dw_counit = vec![T::zero(); n];
        dw_counit[group.identity()] = T::one() / T::from_int(n as i64);
        Self { group: group.clone(), algebra, dw_counit }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &Algebra<T> {
        &self.algebra
    }

    /// `λ(g) = 1/|G|` at the identity, 0 elsewhere.
    pub fn dw_counit(&self) -> &[T] {
        &self.dw_counit
    }

    pub fn element_sum(&self, elements: &[usize]) -> AlgebraElement<T> {
        let mut coords = vec![T::zero(); self.group.order()];
        for &g in elements {
            coords[g] = coords[g].clone() + T::one();
        }
        AlgebraElement::new(coords)
    }
}

pub fn group_algebra<T: Scalar>(group: &FiniteGroup) -> GroupAlgebra<T> {
    GroupAlgebra::new(group)
}

/// Class functions on `G`, realised as the span of the class sums inside
/// `k[G]`, together with the Frobenius structure restricted from `k[G]`.
#[derive(Debug, Clone)]
pub struct ClassFunctionSpace<T> {
    group_algebra: GroupAlgebra<T>,
    classes: ConjugacyClasses,
    class_sums: Vec<AlgebraElement<T>>,
    // constants[(i * r + j) * r + k] = coefficient of H_k in H_i H_j
    constants: Vec<u64>,
    center_frobenius: FrobeniusAlgebra<T>,
}

impl<T: Scalar> ClassFunctionSpace<T> {
    /// Builds the class sums and multiplies them inside the group algebra to
    /// obtain the class algebra constants.
    pub fn new(group_algebra: GroupAlgebra<T>) -> Result<Self, GaugeError> {
        let classes = group_algebra.group().conjugacy_classes();
        let r = classes.len();
        let class_sums: Vec<_> = classes.classes().iter().map(|c| group_algebra.element_sum(c)).collect();
        let alg = group_algebra.algebra();

        let mut constants = Vec::with_capacity(r * r * r);
        for i in 0..r {
            for j in 0..r {
                let product = alg.mul(&class_sums[i], &class_sums[j]);
                let mut rebuilt = AlgebraElement::zero(alg.dim());
                for (k, sum) in class_sums.iter().enumerate() {
                    let coeff = &product.coords()[classes.representative(k)];
                    let a = coeff.to_exact_u64().ok_or_else(|| {
                        GaugeError::InternalInconsistency(format!(
                            "coefficient {coeff} of H{k} in H{i} H{j} is not a non-negative integer"
                        ))
                    })?;
                    rebuilt = rebuilt.add(&sum.scale(coeff));
                    constants.push(a);
                }
                if rebuilt != product {
                    return Err(GaugeError::InternalInconsistency(format!("H{i} H{j} is not a combination of class sums")));
                }
            }
        }

        let center = Algebra::from_flat(
            r,
            constants.iter().map(|&a| T::from_u64(a).expect("small integer")).collect(),
            AlgebraElement::<T>::basis(r, 0).into_coords(),
        )
        .map_err(|e| GaugeError::InternalInconsistency(format!("class algebra: {e}")))?;
        // λ(H_i) = Σ_{g ∈ C_i} λ(g)
        let counit: Vec<T> = class_sums
            .iter()
            .map(|h| h.coords().iter().zip(group_algebra.dw_counit()).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect();
        let center_frobenius = FrobeniusAlgebra::from_counit(center, counit).map_err(|e| {
            GaugeError::InternalInconsistency(format!("class algebra pairing must be nondegenerate in characteristic 0: {e}"))
        })?;

        Ok(Self { group_algebra, classes, class_sums, constants, center_frobenius })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group_algebra.group()
    }

    pub fn group_algebra(&self) -> &GroupAlgebra<T> {
        &self.group_algebra
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// `H_i` as an element of `k[G]`.
    pub fn class_sums(&self) -> &[AlgebraElement<T>] {
        &self.class_sums
    }

    /// The center in the class-sum basis, with the restricted counit.
    pub fn center_frobenius(&self) -> &FrobeniusAlgebra<T> {
        &self.center_frobenius
    }

    fn check_index(&self, index: usize) -> Result<(), GaugeError> {
        let len = self.num_classes();
        if index < len {
            Ok(())
        } else {
            Err(GaugeError::IndexOutOfRange { index, len })
        }
    }

    /// Coefficients `a_ij^k` of `H_i H_j = Σ_k a_ij^k H_k`.
    pub fn class_multiply(&self, i: usize, j: usize) -> Result<Vec<u64>, GaugeError> {
        self.check_index(i)?;
        self.check_index(j)?;
        let r = self.num_classes();
        Ok(self.constants[(i * r + j) * r..(i * r + j + 1) * r].to_vec())
    }

    /// The pants coefficients recovered by counting group-element pairs:
    /// for each target class `k`, the number of `(x, y) ∈ C_i × C_j` with
    /// `xy` in `C_k`, divided by `|C_k|`. The count per element of `C_k` must
    /// be constant; a violation is reported as an inconsistency.
    pub fn pants_oracle(&self, i: usize, j: usize) -> Result<Vec<u64>, GaugeError> {
        self.check_index(i)?;
        self.check_index(j)?;
        let g = self.group();
        let mut hits = vec![0u64; g.order()];
        for &x in self.classes.class(i) {
            for &y in self.classes.class(j) {
                hits[g.mul(x, y)] += 1;
            }
        }
        self.classes
            .classes()
            .iter()
            .enumerate()
            .map(|(k, members)| {
                let per_member = hits[members[0]];
                if members.iter().any(|&m| hits[m] != per_member) {
                    return Err(GaugeError::InternalInconsistency(format!(
                        "pair count not constant over class {k} for H{i} H{j}"
                    )));
                }
                let total: u64 = members.iter().map(|&m| hits[m]).sum();
                Ok(total / members.len() as u64)
            })
            .collect()
    }

    /// Genus-`g` surface with incoming boundary circles labelled by the given
    /// class sums: `λ(ω^g H_{i_1} ... H_{i_m})`.
    pub fn genus_with_boundary(&self, genus: u32, boundary: &[usize]) -> Result<T, GaugeError> {
        for &b in boundary {
            self.check_index(b)?;
        }
        let f = &self.center_frobenius;
        let alg = f.algebra();
        let mut x = alg.pow(f.handle(), genus);
        for &b in boundary {
            x = alg.mul(&x, &alg.basis_element(b));
        }
        Ok(f.apply_counit(&x))
    }
}

pub fn class_function_space<T: Scalar>(group_algebra: GroupAlgebra<T>) -> Result<ClassFunctionSpace<T>, GaugeError> {
    ClassFunctionSpace::new(group_algebra)
}

/// Closed genus-`g` value computed from the handle element of the class algebra.
pub fn dw_closed_invariant<T: Scalar>(group: &FiniteGroup, genus: u32) -> Result<T, GaugeError> {
    let space = ClassFunctionSpace::new(GroupAlgebra::<T>::new(group))?;
    Ok(space.center_frobenius().genus_invariant(genus)?)
}

/// See [`ClassFunctionSpace::genus_with_boundary`].
pub fn dw_genus_with_boundary<T: Scalar>(
    space: &ClassFunctionSpace<T>,
    genus: u32,
    boundary: &[usize],
) -> Result<T, GaugeError> {
    space.genus_with_boundary(genus, boundary)
}

/// Result of exhaustive surface-group homomorphism counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceCount {
    /// Number of tuples in `G^(2g)` whose commutator product is the identity.
    pub count: u64,
    pub group_order: usize,
    pub genus: u32,
}

impl BruteForceCount {
    /// `count / |G|`
    pub fn value<T: Scalar>(&self) -> T {
        T::from_u64(self.count).expect("count representable") / T::from_int(self.group_order as i64)
    }
}

/// Number of tuples enumerated for genus `g`, saturating.
pub fn brute_force_work(group_order: usize, genus: u32) -> u128 {
    (group_order as u128).saturating_pow(2 * genus)
}

/// Counts `(a_1, b_1, ..., a_g, b_g) ∈ G^(2g)` with `∏ [a_i, b_i] = e`.
///
/// `workers` = 1 enumerates sequentially; otherwise the choices of `a_1` are
/// split across a pool of that many threads (`None` = rayon default). The
/// count is an exact integer sum, so every worker count gives the same result.
pub fn dw_brute_force(
    group: &FiniteGroup,
    genus: u32,
    cap: u128,
    workers: Option<usize>,
) -> Result<BruteForceCount, GaugeError> {
    let estimated = brute_force_work(group.order(), genus);
    if estimated > cap {
        return Err(GaugeError::WorkLimitExceeded { estimated, cap });
    }
    let n = group.order();
    let count = if genus == 0 {
        1
    } else if workers == Some(1) {
        (0..n).map(|a| count_from_first(group, genus, a)).sum()
    } else {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(w) = workers {
            builder = builder.num_threads(w);
        }
        let pool = builder.build().map_err(|err| GaugeError::WorkerPool(err.to_string()))?;
        pool.install(|| (0..n).into_par_iter().map(|a| count_from_first(group, genus, a)).sum())
    };
    Ok(BruteForceCount { count, group_order: n, genus })
}

fn count_from_first(group: &FiniteGroup, genus: u32, a: usize) -> u64 {
    (0..group.order())
        .map(|b| count_pairs(group, genus - 1, group.commutator(a, b)))
        .sum()
}

// number of ways to extend the partial product `prefix` with `remaining`
// further commutator pairs so the total is the identity
fn count_pairs(group: &FiniteGroup, remaining: u32, prefix: usize) -> u64 {
    if remaining == 0 {
        return u64::from(prefix == group.identity());
    }
    let n = group.order();
    let mut total = 0;
    for a in 0..n {
        for b in 0..n {
            total += count_pairs(group, remaining - 1, group.mul(prefix, group.commutator(a, b)));
        }
    }
    total
}
