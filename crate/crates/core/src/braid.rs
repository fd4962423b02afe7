//! Words in the Artin generators of the braid group on `strands` strands,
//! and the projection onto the symmetric group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed Artin generator: `+g` is `s_g`, `-g` is `s_g^{-1}`.
pub type Letter = i16;

/// A word in `s_1, ..., s_{strands-1}` and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        Self {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    /// Builds a word, checking every index against the strand count.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrands(strands));
        }
        for &l in &letters {
            let g = l.unsigned_abs() as usize;
            if l == 0 || g >= strands {
                return Err(Error::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Positive word `s_{g_1} s_{g_2} ...`.
    pub fn positive(strands: usize, gens: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(strands, gens.into_iter().map(|g| g as Letter).collect())
    }

    /// Parses the whitespace-separated signed-integer format, e.g. `"1 2 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Letter>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`; the strand counts must agree.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Appends `other` in place; the strand counts must agree.
    pub fn extend(&mut self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        self.letters.extend_from_slice(&other.letters);
        Ok(())
    }

    /// Concatenates a sequence of words on a common strand count.
    pub fn product<'a>(strands: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<Self> {
        let mut out = BraidWord::identity(strands);
        for w in words {
            out.extend(w)?;
        }
        Ok(out)
    }

    /// The group inverse: letters reversed with signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self` repeated `k` times.
    pub fn pow(&self, k: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The reversal antiautomorphism: letters read backwards, signs kept.
    pub fn reversed(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Removes adjacent `s_g s_g^{-1}` and `s_g^{-1} s_g` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Image in the symmetric group on `strands` points.
    pub fn permutation(&self) -> Permutation {
        let mut arr: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize;
            arr.swap(g - 1, g);
        }
        Permutation { images: arr }
    }

    /// True iff the word lies in the pure braid group.
    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Free reduction as a free function.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    w.free_reduce()
}

/// The reversal antiautomorphism as a free function.
pub fn reverse_word(w: &BraidWord) -> BraidWord {
    w.reversed()
}

/// Projection to the symmetric group as a free function.
pub fn project_to_permutation(w: &BraidWord) -> Permutation {
    w.permutation()
}

/// Purity test as a free function.
pub fn is_pure(w: &BraidWord) -> bool {
    w.is_pure()
}

/// A permutation of `{0, ..., m-1}`, stored as the arrangement obtained by
/// applying the word's position swaps to `0, 1, ..., m-1`.
///
/// With this convention the product `a · b` has `images[k] = a[b[k]]`,
/// right multiplication by `s_i` swaps positions `i-1, i`, and left
/// multiplication by `s_i` swaps the values `i-1, i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self {
            images: (0..m).collect(),
        }
    }

    /// Builds from zero-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(Error::NotAPermutation(images.clone()));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds from one-based images as used in the text formats.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation(images.to_vec()));
        }
        Self::from_images(images.iter().map(|x| x - 1).collect())
    }

    /// The order-reversing permutation (image of the half twist).
    pub fn longest(m: usize) -> Self {
        Self {
            images: (0..m).rev().collect(),
        }
    }

    /// The transposition of the one-based points `p` and `q`.
    pub fn transposition(m: usize, p: usize, q: usize) -> Self {
        let mut id = Self::identity(m);
        id.images.swap(p - 1, q - 1);
        id
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x)
    }

    /// Product `self · other` in the braid-compatible order.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x] = k;
        }
        Permutation { images: inv }
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by `s_i` (one-based `i`).
    pub fn mul_right_gen(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Left multiplication by `s_i` (one-based `i`).
    pub fn mul_left_gen(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x == i - 1 {
                *x = i;
            } else if *x == i {
                *x = i - 1;
            }
        }
    }

    /// True iff `s_i` is a right descent (`self · s_i` is shorter).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Right descent set as one-based generator indices.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// Left descent set as one-based generator indices.
    pub fn left_descents(&self) -> Vec<usize> {
        let pos = self.inverse();
        (1..self.size()).filter(|&i| pos.has_right_descent(i)).collect()
    }

    /// A reduced positive word for this permutation (bubble sort).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut arr = self.images.clone();
        let mut word = Vec::new();
        // Sort arr back to the identity; the swaps, reversed, spell the permutation.
        loop {
            let mut swapped = false;
            for i in 1..arr.len() {
                if arr[i - 1] > arr[i] {
                    arr.swap(i - 1, i);
                    word.push(i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_based(&images)
    }
}
