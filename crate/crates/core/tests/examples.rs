use pbr_core::abelianization::{linking, LinkingVector};
use pbr_core::catalog::{
    box_product_sides, classical_generator, longest_lift, longest_square, BoxConfig, IdentityFamily, Interval,
};
use pbr_core::dihedral::{
    abelianization_rank, dihedral_project, k_subgroup_rank, monodromies, reidemeister_schreier, DihedralWord,
};
use pbr_core::presentation::{
    box_relations, enumerate_generators, phi, realize, surjectivity_witness, PresentationWord, Symbol,
};
use pbr_core::{equal, normal_form, BraidWord, Permutation};

#[test]
fn block_twist_links_every_pair_of_its_strands() {
    for n in 1..=5 {
        for v in enumerate_generators(n) {
            let mut expected = LinkingVector::zero(n + 1);
            for p in v.lo..=v.hi + 1 {
                for q in p + 1..=v.hi + 1 {
                    expected = &expected + &LinkingVector::unit(n + 1, p, q).unwrap();
                }
            }
            assert_eq!(linking(&longest_square(&v)).unwrap(), expected, "{v}");
        }
    }
}

#[test]
fn linking_agrees_with_phi() {
    for n in 1..=5 {
        for i in 1..=n + 1 {
            for j in i + 1..=n + 1 {
                let a = PresentationWord::single(n, Symbol::Classical(i, j), 1).unwrap();
                let image = realize(&phi(&a).unwrap());
                assert_eq!(linking(&image).unwrap(), LinkingVector::unit(n + 1, i, j).unwrap());
            }
        }
    }
}

#[test]
fn longest_lift_projects_to_block_reversal() {
    for n in 1..=6 {
        for v in enumerate_generators(n) {
            let perm = longest_lift(&v).permutation();
            let mut images: Vec<usize> = (0..=n).collect();
            images[v.lo - 1..=v.hi].reverse();
            assert_eq!(perm, Permutation::from_images(images).unwrap());
            assert!(longest_square(&v).is_pure());
        }
    }
}

#[test]
fn square_of_full_lift_is_central() {
    let n = 4;
    let full = longest_square(&Interval::new(1, n, n).unwrap());
    for g in 1..=n as i16 {
        let s = BraidWord::new(n + 1, vec![g]).unwrap();
        assert!(equal(&full.concat(&s).unwrap(), &s.concat(&full).unwrap()).unwrap());
    }
}

#[test]
fn classical_generators_are_pure_and_distinct() {
    let n = 4;
    let mut seen = Vec::new();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            let a = classical_generator(i, j, n).unwrap().1;
            assert!(a.is_pure());
            let nf = normal_form(&a);
            assert!(!seen.contains(&nf));
            seen.push(nf);
        }
    }
}

#[test]
fn box_relators_abelianize_to_zero() {
    for n in 3..=6 {
        for rel in box_relations(n) {
            let w = realize(&rel.lhs).concat(&realize(&rel.rhs).inverse()).unwrap();
            assert!(linking(&w).unwrap().is_zero(), "{}", rel.id);
        }
    }
}

#[test]
fn witness_images_reduce_to_single_generators() {
    for n in 1..=6 {
        for v in enumerate_generators(n) {
            let g = surjectivity_witness(&v).unwrap();
            let reduced = phi(&g).unwrap().free_reduce();
            assert_eq!(reduced.letters(), &[(Symbol::Interval(v.lo, v.hi), 1)], "{v}");
        }
    }
}

#[test]
fn dihedral_presentation_sizes() {
    let two = reidemeister_schreier(2).unwrap();
    assert_eq!((two.index, two.generator_count, two.relators.len()), (4, 5, 4));
    let three = reidemeister_schreier(3).unwrap();
    assert_eq!((three.index, three.generator_count, three.relators.len()), (6, 7, 6));
}

#[test]
fn dihedral_monodromies_are_pure() {
    for n in 2..=10 {
        let p = reidemeister_schreier(n).unwrap();
        for w in monodromies(n).unwrap() {
            assert!(dihedral_project(&w).is_identity());
            assert_eq!(p.rewrite(&w).1, 0);
        }
        let delta = dihedral_project(&DihedralWord::delta(n).unwrap());
        assert!(!delta.is_identity());
    }
}

#[test]
fn dihedral_ranks() {
    for n in 2..=10 {
        let inv = abelianization_rank(&reidemeister_schreier(n).unwrap());
        assert_eq!(inv.rank, n);
        assert!(inv.torsion.is_empty());
        let k = k_subgroup_rank(n).unwrap();
        assert!(k.rank <= 3);
        assert_eq!(k.proper, n >= 4);
    }
}

#[test]
fn box_products_with_two_dips_match_adjacent_squares() {
    let n = 6;
    for cfg in BoxConfig::all(n).into_iter().filter(|c| c.x() == 2) {
        let boxed = box_product_sides(&cfg);
        let adjacent = IdentityFamily::AdjacentSquares.equalities(n, &[cfg.i, cfg.k]).unwrap();
        assert_eq!(boxed[0].1, adjacent[0].1, "{cfg}");
        assert!(equal(&boxed[0].2, &adjacent[0].2).unwrap(), "{cfg}");
    }
}
