//! Seeded randomized checks of the normal-form oracle and of the linking
//! numbers: random words, relator insertion, inverse cancellation and
//! projection compatibility.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelianization::linking;
use crate::braid::{BraidWord, Letter};
use crate::catalog::classical_generator;
use crate::garside::normal_form;
use crate::report::{ReportItem, VerificationReport};

/// A uniformly random word of the given length over all signed generators.
pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as Letter;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters drawn in range")
}

/// A product of `count` random classical generators `A_{i,j}^{±1}`.
pub fn random_pure_word<R: Rng>(rng: &mut R, strands: usize, count: usize) -> BraidWord {
    let n = strands - 1;
    let mut out = BraidWord::identity(strands);
    for _ in 0..count {
        let i = rng.gen_range(1..strands);
        let j = rng.gen_range(i + 1..=strands);
        let a = classical_generator(i, j, n).expect("pair in range").1;
        let a = if rng.gen_bool(0.5) { a } else { a.inverse() };
        out.extend(&a).expect("same strands");
    }
    out
}

/// A random defining relator of the braid group, or a free cancellation,
/// written as a word equal to the identity.
pub fn random_relator<R: Rng>(rng: &mut R, strands: usize) -> BraidWord {
    let i = rng.gen_range(1..strands) as Letter;
    let far: Vec<Letter> = (1..strands as Letter).filter(|j| (j - i).abs() >= 2).collect();
    let letters: Vec<Letter> = match rng.gen_range(0..3) {
        0 if (i as usize) + 1 < strands => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        1 if !far.is_empty() => {
            let j = far[rng.gen_range(0..far.len())];
            vec![i, j, -i, -j]
        }
        _ => vec![i, -i],
    };
    let w = BraidWord::new(strands, letters).expect("relator in range");
    if rng.gen_bool(0.5) {
        w.inverse()
    } else {
        w
    }
}

/// Inserts `r` at a random position of `w`.
pub fn insert_at_random<R: Rng>(rng: &mut R, w: &BraidWord, r: &BraidWord) -> BraidWord {
    let pos = rng.gen_range(0..=w.len());
    let mut letters = w.letters()[..pos].to_vec();
    letters.extend_from_slice(r.letters());
    letters.extend_from_slice(&w.letters()[pos..]);
    BraidWord::new(w.strands(), letters).expect("same strands")
}

/// Normal-form soundness on `trials` random words with `2..=max_strands`
/// strands: invariance under relator insertion, `w w^{-1} = 1`, agreement
/// of the permutation projection, and stability of renormalization.
pub fn normal_form_suite(trials: usize, max_strands: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::with_capacity(trials * 3);
    for t in 0..trials {
        let strands = rng.gen_range(2..=max_strands.max(2));
        let len = rng.gen_range(0..=24);
        let w = random_word(&mut rng, strands, len);
        let rel = random_relator(&mut rng, strands);
        let v = insert_at_random(&mut rng, &w, &rel);
        items.push(ReportItem::from_equality(format!("insertion #{t}"), "relator-insertion", &w, &v));

        let ww = w.concat(&w.inverse()).expect("same strands");
        items.push(ReportItem::from_equality(
            format!("cancellation #{t}"),
            "inverse-cancellation",
            &ww,
            &BraidWord::identity(strands),
        ));

        let nf = normal_form(&w);
        let rendered = nf.to_word();
        let ok = rendered.permutation() == w.permutation() && normal_form(&rendered) == nf && nf.is_valid();
        let id = format!("projection #{t}");
        items.push(if ok {
            ReportItem::pass(id, "projection")
        } else {
            ReportItem::fail(id, "projection", None)
        });
    }
    VerificationReport::new("verify oracle", max_strands, items)
}

/// Linking numbers agree on `trials` random pairs of equal pure braids,
/// each pair a pure word and a copy with a relator inserted.
pub fn linking_suite(trials: usize, max_strands: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::with_capacity(trials);
    for t in 0..trials {
        let strands = rng.gen_range(2..=max_strands.max(2));
        let count = rng.gen_range(0..=6);
        let w = random_pure_word(&mut rng, strands, count);
        let rel = random_relator(&mut rng, strands);
        let v = insert_at_random(&mut rng, &w, &rel);
        let same_braid = normal_form(&w) == normal_form(&v);
        let same_link = linking(&w).ok() == linking(&v).ok() && linking(&w).is_ok();
        let id = format!("linking #{t}");
        items.push(if same_braid && same_link {
            ReportItem::pass(id, "linking-invariance")
        } else {
            ReportItem::fail(id, "linking-invariance", None)
        });
    }
    VerificationReport::new("verify linking", max_strands, items)
}
