//! The dihedral Artin group `B(I_n) = ⟨s1, s2 | s1 s2 s1 ⋯ = s2 s1 s2 ⋯⟩`,
//! its projection onto the dihedral group of order `2n`, a
//! Reidemeister–Schreier presentation of the pure subgroup (the kernel), and
//! the abelian rank computations comparing it with the subgroup generated by
//! the three wall monodromies `s1², s2², Δ²`.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::smith::{smith_normal_form, IntegerMatrix};

/// A word in `s1^{±1}, s2^{±1}`; letters are `±1`, `±2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DihedralWord {
    label: usize,
    letters: Vec<i8>,
}

impl DihedralWord {
    pub fn new(label: usize, letters: Vec<i8>) -> Result<Self> {
        if label < 2 {
            return Err(Error::InvalidLabel(label));
        }
        if let Some(&bad) = letters.iter().find(|l| !matches!(l.abs(), 1 | 2)) {
            return Err(Error::LetterOutOfRange { letter: bad.into(), strands: 3 });
        }
        Ok(Self { label, letters })
    }

    pub fn parse(label: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|t| t.parse::<i8>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(label, letters)
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    /// The positive alternating word of length `len` starting with `first`.
    pub fn alternating(label: usize, first: i8, len: usize) -> Result<Self> {
        let other = 3 - first;
        let letters = (0..len).map(|k| if k % 2 == 0 { first } else { other }).collect();
        Self::new(label, letters)
    }

    /// `Δ`, the positive alternating word of length `n` starting with `s1`.
    pub fn delta(label: usize) -> Result<Self> {
        Self::alternating(label, 1, label)
    }

    pub fn concat(&self, other: &DihedralWord) -> DihedralWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        DihedralWord { label: self.label, letters }
    }

    pub fn inverse(&self) -> DihedralWord {
        DihedralWord {
            label: self.label,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> DihedralWord {
        DihedralWord {
            label: self.label,
            letters: self.letters.iter().copied().cycle().take(self.letters.len() * k).collect(),
        }
    }

    /// The defining relator `alt(s1, n) · alt(s2, n)^{-1}`.
    pub fn relator(label: usize) -> Result<Self> {
        let lhs = Self::alternating(label, 1, label)?;
        let rhs = Self::alternating(label, 2, label)?;
        Ok(lhs.concat(&rhs.inverse()))
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `r^rotation f^flip` in the dihedral group of order `2n`, where `r` is a
/// rotation of order `n`, `f` a reflection, `s1 = f` and `s2 = r f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DihedralElement {
    pub label: usize,
    pub rotation: usize,
    pub flip: bool,
}

impl DihedralElement {
    pub fn identity(label: usize) -> Self {
        Self { label, rotation: 0, flip: false }
    }

    /// Image of the generator `s_g`, `g ∈ {1, 2}`.
    pub fn generator(label: usize, g: u8) -> Self {
        Self {
            label,
            rotation: if g == 1 { 0 } else { 1 % label },
            flip: true,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == 0 && !self.flip
    }

    /// `(r^a f^e)(r^b f^g) = r^{a + (-1)^e b} f^{e+g}`.
    pub fn compose(&self, other: &DihedralElement) -> DihedralElement {
        let n = self.label;
        let b = if self.flip { (n - other.rotation) % n } else { other.rotation };
        DihedralElement {
            label: n,
            rotation: (self.rotation + b) % n,
            flip: self.flip ^ other.flip,
        }
    }

    pub fn inverse(&self) -> DihedralElement {
        if self.flip {
            *self
        } else {
            DihedralElement {
                label: self.label,
                rotation: (self.label - self.rotation) % self.label,
                flip: false,
            }
        }
    }

    /// Dense index `rotation + n · flip` in `0..2n`.
    pub fn index(&self) -> usize {
        self.rotation + if self.flip { self.label } else { 0 }
    }

    pub fn all(label: usize) -> Vec<DihedralElement> {
        (0..2 * label)
            .map(|k| DihedralElement { label, rotation: k % label, flip: k >= label })
            .collect()
    }
}

/// The homomorphism onto the dihedral group; `s_g^{-1}` and `s_g` agree.
pub fn dihedral_project(w: &DihedralWord) -> DihedralElement {
    w.letters.iter().fold(DihedralElement::identity(w.label), |acc, &l| {
        acc.compose(&DihedralElement::generator(w.label, l.unsigned_abs()))
    })
}

/// A word in Schreier generators: `(generator index, ±1)`.
pub type SchreierWord = Vec<(usize, i8)>;

#[derive(Debug, Clone, Serialize)]
pub struct SchreierGenerator {
    /// Index of the coset the generator starts from.
    pub coset: usize,
    /// The letter `s_g` it crosses.
    pub letter: u8,
    /// `rep(coset) · s_g · rep(coset · s_g)^{-1}` in `B(I_n)`.
    pub word: DihedralWord,
}

/// Presentation of the pure dihedral Artin group from a transversal of the
/// dihedral group, with spanning-tree generators already eliminated.
#[derive(Debug, Clone, Serialize)]
pub struct SubgroupPresentation {
    pub label: usize,
    pub index: usize,
    pub generator_count: usize,
    pub generators: Vec<SchreierGenerator>,
    pub relators: Vec<SchreierWord>,
    /// Coset representatives in shortlex order, identity first.
    pub transversal: Vec<DihedralWord>,
    #[serde(skip)]
    coset_of: Vec<usize>,
    #[serde(skip)]
    table: Vec<[usize; 2]>,
    #[serde(skip)]
    gen_of: Vec<[Option<usize>; 2]>,
}

impl SubgroupPresentation {
    /// Rewrites a word of `B(I_n)` starting at the trivial coset. Returns the
    /// Schreier word and the coset reached; the word lies in the pure
    /// subgroup iff that coset is trivial.
    pub fn rewrite(&self, w: &DihedralWord) -> (SchreierWord, usize) {
        let mut t = 0usize;
        let mut out = Vec::new();
        for &l in &w.letters {
            let x = (l.unsigned_abs() - 1) as usize;
            if l > 0 {
                if let Some(g) = self.gen_of[t][x] {
                    out.push((g, 1));
                }
                t = self.table[t][x];
            } else {
                // s_x^{-1} and s_x act identically on cosets
                let prev = self.table[t][x];
                if let Some(g) = self.gen_of[prev][x] {
                    out.push((g, -1));
                }
                t = prev;
            }
        }
        (out, t)
    }

    /// Exponent sums of a Schreier word, one entry per generator.
    pub fn exponent_vector(&self, w: &SchreierWord) -> Vec<i64> {
        let mut v = vec![0i64; self.generator_count];
        for &(g, e) in w {
            v[g] += i64::from(e);
        }
        v
    }

    pub fn relator_matrix(&self) -> IntegerMatrix {
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| self.exponent_vector(r)).collect();
        IntegerMatrix::from_rows(self.generator_count, &rows)
    }

    /// Coset index of a dihedral element.
    pub fn coset(&self, e: &DihedralElement) -> usize {
        self.coset_of[e.index()]
    }
}

/// Builds the presentation: breadth-first shortlex transversal with
/// `s1 < s2`, Schreier generators `γ(c, x) = rep(c) x rep(c x)^{-1}` with the
/// tree edges dropped, and the single relator lifted through every coset.
pub fn reidemeister_schreier(label: usize) -> Result<SubgroupPresentation> {
    if label < 2 {
        return Err(Error::InvalidLabel(label));
    }
    let order = 2 * label;
    let mut coset_of = vec![usize::MAX; order];
    let mut elements: Vec<DihedralElement> = Vec::with_capacity(order);
    let mut transversal: Vec<DihedralWord> = Vec::with_capacity(order);
    let mut tree = vec![[false; 2]; order];

    let id = DihedralElement::identity(label);
    coset_of[id.index()] = 0;
    elements.push(id);
    transversal.push(DihedralWord::new(label, Vec::new())?);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for x in 0..2u8 {
            let next = elements[c].compose(&DihedralElement::generator(label, x + 1));
            if coset_of[next.index()] == usize::MAX {
                coset_of[next.index()] = elements.len();
                elements.push(next);
                let mut letters = transversal[c].letters.clone();
                letters.push((x + 1) as i8);
                transversal.push(DihedralWord::new(label, letters)?);
                tree[c][x as usize] = true;
                queue.push_back(elements.len() - 1);
            }
        }
    }
    debug_assert_eq!(elements.len(), order);

    let table: Vec<[usize; 2]> = elements
        .iter()
        .map(|e| {
            let step = |g| coset_of[e.compose(&DihedralElement::generator(label, g)).index()];
            [step(1), step(2)]
        })
        .collect();

    let mut generators = Vec::new();
    let mut gen_of = vec![[None; 2]; order];
    for c in 0..order {
        for x in 0..2usize {
            if tree[c][x] {
                continue;
            }
            let target = table[c][x];
            let word = transversal[c]
                .concat(&DihedralWord::new(label, vec![(x + 1) as i8])?)
                .concat(&transversal[target].inverse());
            gen_of[c][x] = Some(generators.len());
            generators.push(SchreierGenerator { coset: c, letter: (x + 1) as u8, word });
        }
    }

    let mut pres = SubgroupPresentation {
        label,
        index: order,
        generator_count: generators.len(),
        generators,
        relators: Vec::new(),
        transversal,
        coset_of,
        table,
        gen_of,
    };
    let rel = DihedralWord::relator(label)?;
    let relators = (0..order)
        .map(|c| {
            let conj = pres.transversal[c].concat(&rel).concat(&pres.transversal[c].inverse());
            let (w, end) = pres.rewrite(&conj);
            debug_assert_eq!(end, 0);
            w
        })
        .collect();
    pres.relators = relators;
    Ok(pres)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<String>,
    /// The full Smith diagonal of the relator matrix.
    pub diagonal: Vec<String>,
}

pub fn abelianization_rank(p: &SubgroupPresentation) -> AbelianInvariants {
    let snf = smith_normal_form(&p.relator_matrix());
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianInvariants {
        rank: p.generator_count - nonzero,
        torsion: diag.iter().filter(|d| **d > BigInt::one()).map(|d| d.to_string()).collect(),
        diagonal: diag.iter().map(|d| d.to_string()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupRank {
    pub label: usize,
    /// Rank of the image of `⟨s1², s2², Δ²⟩` in the abelianization.
    pub rank: usize,
    /// Rank of the abelianization of the full pure subgroup.
    pub ambient_rank: usize,
    pub proper: bool,
}

/// The three wall monodromies as words of `B(I_n)`.
pub fn monodromies(label: usize) -> Result<Vec<DihedralWord>> {
    Ok(vec![
        DihedralWord::new(label, vec![1, 1])?,
        DihedralWord::new(label, vec![2, 2])?,
        DihedralWord::delta(label)?.pow(2),
    ])
}

/// Rank of the image of `⟨s1², s2², Δ²⟩` in the abelianization of the pure
/// subgroup: `rank([R; K]) − rank(R)`. The subgroup is proper whenever this
/// falls short of the abelianization rank.
pub fn k_subgroup_rank(label: usize) -> Result<SubgroupRank> {
    let p = reidemeister_schreier(label)?;
    let rows: Vec<Vec<i64>> = monodromies(label)?
        .iter()
        .map(|w| {
            let (sw, end) = p.rewrite(w);
            debug_assert_eq!(end, 0, "monodromies are pure");
            p.exponent_vector(&sw)
        })
        .collect();
    let r = p.relator_matrix();
    let k = IntegerMatrix::from_rows(p.generator_count, &rows);
    let rank = r.vstack(&k).rank() - r.rank();
    let ambient_rank = abelianization_rank(&p).rank;
    Ok(SubgroupRank {
        label,
        rank,
        ambient_rank,
        proper: rank < ambient_rank,
    })
}
