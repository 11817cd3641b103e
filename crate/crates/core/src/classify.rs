//! Semisimplicity, Morita equivalence and the cyclic-gauge-theory model of a
//! semisimple algebra.
//!
//! Over a field of characteristic 0 an algebra is semisimple iff its regular
//! trace form is nondegenerate. Semisimple algebras over an algebraically
//! closed field are Morita equivalent iff their centers have equal dimension,
//! and the center dimension of a rational algebra does not change under
//! extension of scalars, so both tests are exact integer comparisons here.

use std::fmt;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::frobenius::FrobeniusAlgebra;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    First,
    Second,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::First => "first",
            Self::Second => "second",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("NotSemisimple: the {0} algebra is not semisimple")]
    NotSemisimple(Operand),
    #[error("CriterionDisagreement: trace form says semisimple={trace_form}, handle element says {handle_unit}")]
    CriterionDisagreement { trace_form: bool, handle_unit: bool },
}

pub fn is_semisimple<T: Scalar>(algebra: &Algebra<T>) -> bool {
    algebra.regular_trace_form().rank() == algebra.dim()
}

/// Outcome of a Morita comparison, with the center dimensions that decided it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoritaVerdict {
    pub equivalent: bool,
    pub center_dims: (usize, usize),
}

impl fmt::Display for MoritaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.center_dims;
        let rel = if a == b { "=" } else { "!=" };
        write!(f, "morita-equivalent: {} (center dims {a} {rel} {b})", self.equivalent)
    }
}

/// Compares two semisimple algebras by center dimension.
pub fn morita_compare<T: Scalar>(a: &Algebra<T>, b: &Algebra<T>) -> Result<MoritaVerdict, ClassifyError> {
    if !is_semisimple(a) {
        return Err(ClassifyError::NotSemisimple(Operand::First));
    }
    if !is_semisimple(b) {
        return Err(ClassifyError::NotSemisimple(Operand::Second));
    }
    let center_dims = (a.center().len(), b.center().len());
    Ok(MoritaVerdict { equivalent: center_dims.0 == center_dims.1, center_dims })
}

pub fn morita_equivalent<T: Scalar>(a: &Algebra<T>, b: &Algebra<T>) -> Result<bool, ClassifyError> {
    Ok(morita_compare(a, b)?.equivalent)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub semisimple: bool,
    pub center_dim: usize,
    pub cocenter_dim: usize,
    /// `n` such that the algebra is Morita equivalent to `k[Z/n]`; present iff semisimple.
    pub morita_model: Option<usize>,
    pub evidence: Vec<(String, String)>,
}

impl ClassificationReport {
    pub fn morita_model_name(&self) -> String {
        self.morita_model.map_or_else(|| "none".to_string(), |n| format!("cyclic({n})"))
    }

    /// Flat `key=value` lines in a fixed order.
    pub fn to_kv(&self) -> String {
        let mut out = format!(
            "semisimple={}\ncenter_dim={}\ncocenter_dim={}\nmorita_model={}\n",
            self.semisimple,
            self.center_dim,
            self.cocenter_dim,
            self.morita_model_name()
        );
        for (k, v) in &self.evidence {
            out.push_str(&format!("evidence.{k}={v}\n"));
        }
        out
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semisimple:   {}", self.semisimple)?;
        writeln!(f, "center dim:   {}", self.center_dim)?;
        writeln!(f, "cocenter dim: {}", self.cocenter_dim)?;
        writeln!(f, "morita model: {}", self.morita_model_name())?;
        writeln!(f, "evidence:")?;
        for (k, v) in &self.evidence {
            writeln!(f, "  {k}: {v}")?;
        }
        Ok(())
    }
}

pub fn classify<T: Scalar>(algebra: &Algebra<T>) -> ClassificationReport {
    let rank = algebra.regular_trace_form().rank();
    let semisimple = rank == algebra.dim();
    let center_dim = algebra.center().len();
    let cocenter_dim = algebra.cocenter_dim();
    debug_assert!(!semisimple || center_dim == cocenter_dim);
    ClassificationReport {
        semisimple,
        center_dim,
        cocenter_dim,
        morita_model: semisimple.then_some(center_dim),
        evidence: vec![
            ("trace_form_rank".into(), format!("{rank}/{}", algebra.dim())),
            ("center_dim".into(), center_dim.to_string()),
            ("cocenter_dim".into(), cocenter_dim.to_string()),
        ],
    }
}

/// [`classify`] plus the handle-element criterion, which must agree with the
/// trace-form verdict.
pub fn classify_frobenius<T: Scalar>(frobenius: &FrobeniusAlgebra<T>) -> Result<ClassificationReport, ClassifyError> {
    let mut report = classify(frobenius.algebra());
    let handle_unit = frobenius.is_handle_unit();
    if handle_unit != report.semisimple {
        return Err(ClassifyError::CriterionDisagreement { trace_form: report.semisimple, handle_unit });
    }
    report.evidence.push(("handle_unit".into(), handle_unit.to_string()));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::{ClassFunctionSpace, GroupAlgebra};
    use crate::group::builtin_group;
    use crate::Rational;

    fn group_alg(tag: &str) -> Algebra<Rational> {
        GroupAlgebra::<Rational>::new(&builtin_group(tag).unwrap()).algebra().clone()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn semisimplicity_examples() {
        for tag in ["Z2", "Z3", "S3", "Q8", "D4"] {
            assert!(is_semisimple(&group_alg(tag)), "{tag}");
        }
        assert!(!is_semisimple(&Algebra::<Rational>::dual_numbers()));
        assert!(is_semisimple(&Algebra::<Rational>::matrix_algebra(2)));
    }

    #[test]
    fn morita_examples() {
        assert!(morita_equivalent(&group_alg("S3"), &group_alg("Z3")).unwrap());
        assert!(!morita_equivalent(&group_alg("Z2"), &group_alg("Z3")).unwrap());
        assert!(morita_equivalent(&Algebra::<Rational>::matrix_algebra(2), &Algebra::ground_field()).unwrap());
        let v = morita_compare(&group_alg("Z2"), &group_alg("Z3")).unwrap();
        assert_eq!(v.to_string(), "morita-equivalent: false (center dims 2 != 3)");
    }

    #[test]
    fn morita_rejects_non_semisimple_inputs() {
        let d = Algebra::<Rational>::dual_numbers();
        let k = Algebra::<Rational>::ground_field();
        assert_eq!(morita_equivalent(&d, &k).unwrap_err(), ClassifyError::NotSemisimple(Operand::First));
        assert_eq!(morita_equivalent(&k, &d).unwrap_err(), ClassifyError::NotSemisimple(Operand::Second));
    }

    #[test]
    fn wedderburn_shape_of_s3() {
        let k = Algebra::<Rational>::ground_field();
        let shape = k.direct_sum(&k).direct_sum(&Algebra::matrix_algebra(2));
        assert_eq!(shape.dim(), 6);
        assert!(morita_equivalent(&group_alg("S3"), &shape).unwrap());
    }

    #[test]
    fn classify_examples() {
        let r = classify(&group_alg("S3"));
        assert_eq!((r.semisimple, r.center_dim, r.cocenter_dim, r.morita_model), (true, 3, 3, Some(3)));
        let r = classify(&Algebra::<Rational>::dual_numbers());
        assert_eq!((r.semisimple, r.center_dim, r.cocenter_dim, r.morita_model), (false, 2, 2, None));
        assert_eq!(classify(&group_alg("Q8")).morita_model_name(), "cyclic(5)");
    }

    #[test]
    fn kv_report_layout() {
        let r = classify(&group_alg("S3"));
        assert_eq!(
            r.to_kv(),
            "semisimple=true\ncenter_dim=3\ncocenter_dim=3\nmorita_model=cyclic(3)\n\
             evidence.trace_form_rank=6/6\nevidence.center_dim=3\nevidence.cocenter_dim=3\n"
        );
    }

    #[test]
    fn frobenius_classification_uses_both_criteria() {
        let d = FrobeniusAlgebra::from_counit(Algebra::<Rational>::dual_numbers(), vec![q(0), q(1)]).unwrap();
        let r = classify_frobenius(&d).unwrap();
        assert!(!r.semisimple);
        assert_eq!(r.evidence.last().unwrap(), &("handle_unit".to_string(), "false".to_string()));
        let kk = FrobeniusAlgebra::from_counit(Algebra::<Rational>::diagonal(2), vec![q(1), q(1)]).unwrap();
        assert!(classify_frobenius(&kk).unwrap().semisimple);
        let s3 = ClassFunctionSpace::new(GroupAlgebra::<Rational>::new(&builtin_group("S3").unwrap())).unwrap();
        let r = classify_frobenius(s3.center_frobenius()).unwrap();
        assert_eq!((r.semisimple, r.morita_model), (true, Some(3)));
    }
}
