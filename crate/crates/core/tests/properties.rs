use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use pbr_core::abelianization::linking;
use pbr_core::braid::{BraidWord, Letter};
use pbr_core::catalog::classical_generator;
use pbr_core::dihedral::{dihedral_project, DihedralElement, DihedralWord};
use pbr_core::garside::{is_trivial, normal_form};
use pbr_core::presentation::{phi, realize, PresentationWord, Symbol};
use pbr_core::smith::{smith_normal_form, IntegerMatrix};
use pbr_core::{equal, GarsideNormalForm};

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |m| {
        prop::collection::vec((1..m as Letter, any::<bool>()), 0..=max_len).prop_map(move |gs| {
            let letters = gs.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
            BraidWord::new(m, letters).unwrap()
        })
    })
}

fn word_pair(max_strands: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |m| {
        let one = prop::collection::vec((1..m as Letter, any::<bool>()), 0..=max_len).prop_map(move |gs| {
            let letters = gs.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
            BraidWord::new(m, letters).unwrap()
        });
        (one.clone(), one)
    })
}

/// Products of classical generators on `n + 1` strands.
fn pure_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..=n, 1..=n, any::<bool>()), 0..=max_len).prop_map(move |picks| {
        let mut w = BraidWord::identity(n + 1);
        for (a, b, pos) in picks {
            let (i, j) = (a.min(b), a.max(b) + 1);
            let g = classical_generator(i, j, n).unwrap().1;
            w.extend(&if pos { g } else { g.inverse() }).unwrap();
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn projection_is_a_homomorphism((u, v) in word_pair(7, 20)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(uv.permutation(), u.permutation().compose(&v.permutation()));
    }

    #[test]
    fn reversal_and_inverse_are_involutions(w in word(7, 30)) {
        prop_assert_eq!(w.reversed().reversed(), w.clone());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.reversed().len(), w.len());
    }

    #[test]
    fn reversal_is_an_antiautomorphism((u, v) in word_pair(6, 15)) {
        // rev(u v) = rev(v) rev(u), and equal braids reverse to equal braids
        let lhs = u.concat(&v).unwrap().reversed();
        let rhs = v.reversed().concat(&u.reversed()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let nf = normal_form(&u).to_word();
        prop_assert!(equal(&u.reversed(), &nf.reversed()).unwrap());
    }

    #[test]
    fn inverse_cancels(w in word(7, 30)) {
        prop_assert!(is_trivial(&w.concat(&w.inverse()).unwrap()));
        prop_assert!(is_trivial(&w.inverse().concat(&w).unwrap()));
    }

    #[test]
    fn braid_relator_insertion_is_invisible(w in word(7, 20), pos in any::<prop::sample::Index>(), g in any::<prop::sample::Index>()) {
        let m = w.strands();
        if m >= 3 {
            let i = (g.index(m - 2) + 1) as Letter;
            let rel = [i, i + 1, i, -(i + 1), -i, -(i + 1)];
            let at = pos.index(w.len() + 1);
            let mut letters = w.letters()[..at].to_vec();
            letters.extend_from_slice(&rel);
            letters.extend_from_slice(&w.letters()[at..]);
            let v = BraidWord::new(m, letters).unwrap();
            prop_assert_eq!(normal_form(&v), normal_form(&w));
        }
    }

    #[test]
    fn normal_form_is_canonical(w in word(7, 30)) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_valid());
        prop_assert_eq!(normal_form(&nf.to_word()), nf.clone());
        prop_assert_eq!(nf.to_word().permutation(), w.permutation());
        prop_assert_eq!(GarsideNormalForm::from_golden(w.strands(), &nf.to_golden()).unwrap(), nf);
    }

    #[test]
    fn free_reduction_preserves_the_braid(w in word(5, 30)) {
        prop_assert!(equal(&w, &w.free_reduce()).unwrap());
    }

    #[test]
    fn linking_is_additive(u in pure_word(5, 6), v in pure_word(5, 6)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(linking(&uv).unwrap(), &linking(&u).unwrap() + &linking(&v).unwrap());
        prop_assert_eq!(linking(&u.inverse()).unwrap(), -&linking(&u).unwrap());
    }

    #[test]
    fn phi_is_compatible_with_inverse(picks in prop::collection::vec((1usize..=5, 1usize..=5, any::<bool>()), 0..8)) {
        let n = 5;
        let letters: Vec<(Symbol, i8)> = picks.into_iter()
            .map(|(a, b, pos)| (Symbol::Classical(a.min(b), a.max(b) + 1), if pos { 1 } else { -1 }))
            .collect();
        let w = PresentationWord::new(n, letters).unwrap();
        let image = phi(&w).unwrap();
        prop_assert_eq!(phi(&w.inverse()).unwrap(), image.inverse());
        prop_assert!(equal(&realize(&image), &realize(&w)).unwrap());
    }

    #[test]
    fn dihedral_projection_is_a_homomorphism(
        n in 2usize..10,
        a in prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..20),
        b in prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..20),
    ) {
        let u = DihedralWord::new(n, a).unwrap();
        let v = DihedralWord::new(n, b).unwrap();
        prop_assert_eq!(dihedral_project(&u.concat(&v)), dihedral_project(&u).compose(&dihedral_project(&v)));
        prop_assert!(dihedral_project(&u.concat(&u.inverse())).is_identity());
        prop_assert!(dihedral_project(&DihedralWord::relator(n).unwrap()).is_identity());
    }

    #[test]
    fn snf_certificate(
        rows in 1usize..=30,
        cols in 1usize..=30,
        seed in prop::collection::vec(-9i64..=9, 900),
    ) {
        let data: Vec<Vec<i64>> = (0..rows).map(|r| seed[r * cols..(r + 1) * cols].to_vec()).collect();
        let a = IntegerMatrix::from_rows(cols, &data);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.determinant().abs(), BigInt::one());
        prop_assert_eq!(s.v.determinant().abs(), BigInt::one());
        for r in 0..rows {
            for c in 0..cols {
                if r != c {
                    prop_assert!(s.d.get(r, c).is_zero());
                }
            }
        }
        let inv = s.invariant_factors();
        prop_assert!(inv.iter().all(|x| x.is_positive()));
        for w in inv.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        // zero diagonal entries come last
        let diag = s.diagonal();
        let nz = diag.iter().take_while(|x| !x.is_zero()).count();
        prop_assert!(diag[nz..].iter().all(|x| x.is_zero()));
    }
}

#[test]
fn dihedral_group_has_order_2n() {
    for n in 2..=9 {
        let all = DihedralElement::all(n);
        assert_eq!(all.len(), 2 * n);
        for x in &all {
            assert!(x.compose(&x.inverse()).is_identity());
        }
    }
}
