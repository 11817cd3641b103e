mod support;

use cobord2::algebra::Algebra;
use cobord2::gauge::GroupAlgebra;
use cobord2::{builtin_group, classify, classify_frobenius, morita_equivalent, Rational};
use support::*;

fn semisimple_corpus() -> Vec<Algebra<Rational>> {
    let mut v: Vec<Algebra<Rational>> =
        CORPUS_GROUPS.iter().map(|t| GroupAlgebra::<Rational>::new(&builtin_group(t).unwrap()).algebra().clone()).collect();
    v.push(Algebra::ground_field());
    v.push(Algebra::diagonal(3));
    v.push(Algebra::matrix_algebra(2));
    v.push(quadratic(2));
    v.push(quadratic(-1));
    v
}

#[test]
fn group_algebras_are_morita_cyclic_of_class_count() {
    for tag in CORPUS_GROUPS {
        let g = builtin_group(tag).unwrap();
        let report = classify(GroupAlgebra::<Rational>::new(&g).algebra());
        assert_eq!(report.morita_model, Some(g.conjugacy_classes().len()), "{tag}");
        assert_eq!(report.center_dim, report.cocenter_dim);
    }
}

#[test]
fn morita_is_an_equivalence_relation() {
    let corpus = semisimple_corpus();
    let n = corpus.len();
    let rel: Vec<Vec<bool>> = corpus.iter().map(|a| corpus.iter().map(|b| morita_equivalent(a, b).unwrap()).collect()).collect();
    for a in 0..n {
        assert!(rel[a][a]);
        for b in 0..n {
            assert_eq!(rel[a][b], rel[b][a]);
            for c in 0..n {
                assert!(!(rel[a][b] && rel[b][c]) || rel[a][c]);
            }
        }
    }
}

#[test]
fn frobenius_classification_agrees_with_plain() {
    for (name, f) in frobenius_corpus() {
        let plain = classify(f.algebra());
        let frob = classify_frobenius(&f).unwrap();
        assert_eq!(
            (plain.semisimple, plain.center_dim, plain.cocenter_dim, plain.morita_model),
            (frob.semisimple, frob.center_dim, frob.cocenter_dim, frob.morita_model),
            "{name}"
        );
    }
}

#[test]
fn non_semisimple_examples() {
    for a in [truncated_polynomial(3), quadratic(0), Algebra::dual_numbers()] {
        let r = classify(&a);
        assert!(!r.semisimple);
        assert_eq!(r.morita_model, None);
    }
}
