mod support;

use cobord2::algebra::Algebra;
use cobord2::gauge::{class_function_space, dw_closed_invariant, dw_genus_with_boundary, GroupAlgebra, DEFAULT_WORK_CAP};
use cobord2::{builtin_group, dw_brute_force, FiniteGroup, Rational};
use support::*;

const SMALL_GROUPS: [&str; 14] = ["trivial", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "D4", "Q8", "D5", "D6", "Z12", "S4", "D12"];

/// Irreducible character degrees, from standard character tables.
fn irrep_dims(tag: &str) -> Vec<i64> {
    match tag {
        "Z2" => vec![1; 2],
        "Z3" => vec![1; 3],
        "Z4" => vec![1; 4],
        "S3" => vec![1, 1, 2],
        "D4" | "Q8" => vec![1, 1, 1, 1, 2],
        "S4" => vec![1, 1, 2, 3, 3],
        _ => unreachable!(),
    }
}

/// `Z(Σ_g) = Σ_ρ (|G| / dim ρ)^(2g-2)`.
fn character_formula(tag: &str, genus: u32) -> Rational {
    let dims = irrep_dims(tag);
    let order: i64 = dims.iter().map(|d| d * d).sum();
    dims.iter()
        .map(|&d| {
            let r = qr(order, d);
            if genus == 0 {
                q(1) / (r.clone() * r)
            } else {
                (0..2 * genus - 2).fold(q(1), |acc, _| acc * r.clone())
            }
        })
        .sum()
}

#[test]
fn closed_invariants_match_character_formula() {
    for tag in CORPUS_GROUPS {
        let g = builtin_group(tag).unwrap();
        for genus in 0..=4 {
            assert_eq!(dw_closed_invariant::<Rational>(&g, genus).unwrap(), character_formula(tag, genus), "{tag} g={genus}");
        }
    }
}

#[test]
fn frozen_genus_two_values() {
    for (tag, z) in [("S3", 81), ("D4", 272), ("Q8", 272), ("S4", 1424)] {
        assert_eq!(dw_closed_invariant::<Rational>(&builtin_group(tag).unwrap(), 2).unwrap(), q(z), "{tag}");
    }
}

#[test]
fn closed_invariants_match_brute_force() {
    for tag in SMALL_GROUPS {
        let g = builtin_group(tag).unwrap();
        let max_genus = if g.order() <= 6 { 3 } else if g.order() <= 12 { 2 } else { 1 };
        for genus in 0..=max_genus {
            let bf = dw_brute_force(&g, genus, DEFAULT_WORK_CAP, None).unwrap();
            assert_eq!(bf.value::<Rational>(), dw_closed_invariant::<Rational>(&g, genus).unwrap(), "{tag} g={genus}");
        }
    }
}

#[test]
fn abelian_groups_give_order_power() {
    for n in 2..=6i64 {
        let g = builtin_group(&format!("Z{n}")).unwrap();
        for genus in 1..=3u32 {
            let want = q(n.pow(2 * genus - 1));
            assert_eq!(dw_closed_invariant::<Rational>(&g, genus).unwrap(), want);
            assert_eq!(dw_brute_force(&g, genus, DEFAULT_WORK_CAP, Some(1)).unwrap().value::<Rational>(), want);
        }
    }
}

#[test]
fn pants_matches_group_ring_product() {
    for tag in SMALL_GROUPS {
        let space = class_function_space(GroupAlgebra::<Rational>::new(&builtin_group(tag).unwrap())).unwrap();
        for i in 0..space.num_classes() {
            for j in 0..space.num_classes() {
                assert_eq!(space.class_multiply(i, j).unwrap(), space.pants_oracle(i, j).unwrap(), "{tag} ({i},{j})");
            }
        }
    }
}

#[test]
fn transpositions_squared_in_s3() {
    let space = class_function_space(GroupAlgebra::<Rational>::new(&builtin_group("S3").unwrap())).unwrap();
    // classes: e, transpositions, 3-cycles
    assert_eq!(space.classes().sizes(), vec![1, 3, 2]);
    assert_eq!(space.class_multiply(1, 1).unwrap(), vec![3, 0, 3]);
    assert_eq!(space.class_multiply(2, 2).unwrap(), vec![2, 0, 1]);
    assert_eq!(space.class_multiply(1, 2).unwrap(), vec![0, 2, 0]);
}

#[test]
fn torus_counts_classes_and_sphere_is_inverse_order() {
    for tag in SMALL_GROUPS {
        let g = builtin_group(tag).unwrap();
        let k = g.conjugacy_classes().len() as i64;
        assert_eq!(dw_closed_invariant::<Rational>(&g, 1).unwrap(), q(k), "{tag}");
        assert_eq!(dw_closed_invariant::<Rational>(&g, 0).unwrap(), qr(1, g.order() as i64), "{tag}");
    }
}

#[test]
fn bounded_surfaces() {
    let s3 = class_function_space(GroupAlgebra::<Rational>::new(&builtin_group("S3").unwrap())).unwrap();
    // disk with boundary labelled by a class: λ(H_i) = δ_{i,e}/|G|
    assert_eq!(dw_genus_with_boundary::<Rational>(&s3, 0, &[0]).unwrap(), qr(1, 6));
    assert_eq!(dw_genus_with_boundary::<Rational>(&s3, 0, &[1]).unwrap(), q(0));
    // cylinder pairing λ(H_t H_t) = 3/6
    assert_eq!(dw_genus_with_boundary::<Rational>(&s3, 0, &[1, 1]).unwrap(), qr(1, 2));
    assert_eq!(dw_genus_with_boundary::<Rational>(&s3, 2, &[]).unwrap(), q(81));
}

#[test]
fn brute_force_is_independent_of_worker_count() {
    for tag in ["Q8", "S3", "D4"] {
        let g = builtin_group(tag).unwrap();
        let one = dw_brute_force(&g, 2, DEFAULT_WORK_CAP, Some(1)).unwrap();
        for w in [2, 3, 8] {
            assert_eq!(dw_brute_force(&g, 2, DEFAULT_WORK_CAP, Some(w)).unwrap(), one);
        }
    }
}

#[test]
fn group_algebras_pass_full_validation() {
    for tag in SMALL_GROUPS {
        let ga = GroupAlgebra::<Rational>::new(&builtin_group(tag).unwrap());
        let a = ga.algebra();
        let checked = Algebra::from_flat(a.dim(), a.structure().into_iter().flatten().flatten().collect(), a.unit().into_coords()).unwrap();
        assert_eq!(&checked, a);
    }
}

#[test]
fn permutation_closure_matches_table() {
    let perm = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
    let table = FiniteGroup::from_table(perm.table()).unwrap();
    assert_eq!(table.conjugacy_classes().sizes(), vec![1, 3, 2]);
    assert_eq!(dw_closed_invariant::<Rational>(&table, 2).unwrap(), q(81));
    let s4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
    assert_eq!(s4.order(), 24);
    assert_eq!(s4.conjugacy_classes().sizes().len(), 5);
}

#[test]
fn center_of_group_algebra_has_class_count_dimension() {
    for tag in CORPUS_GROUPS {
        let g = builtin_group(tag).unwrap();
        let ga = GroupAlgebra::<Rational>::new(&g);
        assert_eq!(ga.algebra().center().len(), g.conjugacy_classes().len(), "{tag}");
        assert_eq!(ga.algebra().cocenter_dim(), g.conjugacy_classes().len(), "{tag}");
    }
}
