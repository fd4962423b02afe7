//! Garside left normal form in the braid group.
//!
//! Elements are stored as `Δ^infimum · f_1 ⋯ f_k` where every `f_i` is a
//! positive permutation braid, represented by its permutation, different from
//! both the identity and `Δ`, and every adjacent pair is left-weighted: the
//! left descent set of `f_{i+1}` is contained in the right descent set of
//! `f_i`. This form is unique, so two words are equal in the group exactly
//! when their normal forms coincide.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter, Permutation};
use crate::error::{Error, Result};

/// Left normal form `Δ^infimum · f_1 ⋯ f_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    /// `infimum + number of factors`.
    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Right multiplication by `s_g^{sign}`.
    pub fn mul_letter(&mut self, letter: Letter) {
        let g = letter.unsigned_abs() as usize;
        let m = self.strands;
        if letter > 0 {
            let mut s = Permutation::identity(m);
            s.mul_right_gen(g);
            self.mul_simple(s);
        } else {
            // s_g^{-1} = Δ^{-1} · (Δ s_g^{-1}), and Δ s_g^{-1} is the simple
            // braid whose permutation is w_0 with positions g-1, g swapped.
            self.mul_delta_inverse();
            let mut x = Permutation::longest(m);
            x.mul_right_gen(g);
            self.mul_simple(x);
        }
    }

    /// Right multiplication by `Δ^{-1}`: `f Δ^{-1} = Δ^{-1} τ(f)`.
    fn mul_delta_inverse(&mut self) {
        self.infimum -= 1;
        for f in self.factors.iter_mut() {
            *f = flip(f);
        }
    }

    /// Right multiplication by a permutation braid, followed by
    /// left-weighting passes and extraction of leading `Δ`s.
    pub fn mul_simple(&mut self, s: Permutation) {
        debug_assert_eq!(s.size(), self.strands);
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        loop {
            let mut changed = false;
            for idx in (1..self.factors.len()).rev() {
                let (head, tail) = self.factors.split_at_mut(idx);
                changed |= left_weight(&mut head[idx - 1], &mut tail[0]);
            }
            if !changed {
                break;
            }
        }
        let m = self.strands;
        let delta = Permutation::longest(m);
        let leading = self.factors.iter().take_while(|f| **f == delta).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as i64;
        }
        self.factors.retain(|f| !f.is_identity());
    }

    /// Renders the normal form as a braid word: `Δ^p` followed by a reduced
    /// positive word for each factor.
    pub fn to_word(&self) -> BraidWord {
        let m = self.strands;
        let delta: Vec<Letter> = Permutation::longest(m)
            .reduced_word()
            .into_iter()
            .map(|g| g as Letter)
            .collect();
        let mut letters = Vec::new();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<Letter> = delta.iter().rev().map(|l| -l).collect();
            for _ in 0..(-self.infimum) {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(f.reduced_word().into_iter().map(|g| g as Letter));
        }
        BraidWord::new(m, letters).expect("normal form letters are in range")
    }

    /// Checks the structural invariants of a left normal form.
    pub fn is_valid(&self) -> bool {
        let delta = Permutation::longest(self.strands);
        if self
            .factors
            .iter()
            .any(|f| f.is_identity() || *f == delta || f.size() != self.strands)
        {
            return false;
        }
        self.factors
            .windows(2)
            .all(|pair| is_left_weighted(&pair[0], &pair[1]))
    }

    /// Golden-file text: the infimum, then one line per factor with its
    /// one-based image sequence.
    pub fn to_golden(&self) -> String {
        let mut out = format!("{}\n", self.infimum);
        for f in &self.factors {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the golden-file text; every factor must act on `strands`
    /// strands and the factors must already be in left normal form.
    pub fn from_golden(strands: usize, text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let infimum = lines
            .next()
            .ok_or_else(|| Error::Parse("missing infimum".into()))?
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad infimum: {e}")))?;
        let factors = lines
            .map(Permutation::from_str)
            .collect::<Result<Vec<_>>>()?;
        if let Some(f) = factors.iter().find(|f| f.size() != strands) {
            return Err(Error::StrandMismatch(strands, f.size()));
        }
        let nf = Self {
            strands,
            infimum,
            factors,
        };
        if !nf.is_valid() {
            return Err(Error::Parse("factors are not in left normal form".into()));
        }
        Ok(nf)
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.infimum)?;
        for p in &self.factors {
            write!(f, " [{p}]")?;
        }
        Ok(())
    }
}

/// Conjugation by `Δ`, i.e. `s_i ↦ s_{m-i}`.
fn flip(f: &Permutation) -> Permutation {
    let m = f.size();
    let images: Vec<usize> = (0..m).map(|k| m - 1 - f.images()[m - 1 - k]).collect();
    Permutation::from_images(images).expect("conjugate of a permutation")
}

/// True iff the pair `(a, b)` is left-weighted.
pub fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    b.left_descents().into_iter().all(|i| a.has_right_descent(i))
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let b_pos = b.inverse();
        let mv = (1..b.size()).find(|&i| b_pos.has_right_descent(i) && !a.has_right_descent(i));
        match mv {
            Some(i) => {
                a.mul_right_gen(i);
                b.mul_left_gen(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// The left normal form of the element represented by `w`.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let mut nf = GarsideNormalForm::identity(w.strands());
    for &l in w.letters() {
        nf.mul_letter(l);
    }
    nf
}

/// Word problem: true iff `u` and `v` represent the same braid.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(normal_form(u) == normal_form(v))
}

/// True iff `w` represents the identity braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}
