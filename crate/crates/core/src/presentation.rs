//! The classical presentation of the pure braid group on the generators
//! `A_{i,j}` and the presentation on interval generators `𝕀_{i,j}`, which are
//! realized as `ℓ_{i,j}^2`. Relations of both are enumerated here, the
//! homomorphism `φ` from the first to the second is implemented, and every
//! relation, generation identity and surjectivity witness is certified
//! against the braid group.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::catalog::{classical_generator, longest_square, BoxConfig, Interval};
use crate::error::{Error, Result};
use crate::report::{ReportItem, VerificationReport};

/// A generator of one of the two presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    /// `A_{i,j}`, `1 ≤ i < j ≤ n + 1`.
    Classical(usize, usize),
    /// `𝕀_{i,j}`; trivial when `j < i`.
    Interval(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolKind {
    Classical,
    Interval,
}

impl Symbol {
    pub fn kind(&self) -> SymbolKind {
        match self {
            Symbol::Classical(..) => SymbolKind::Classical,
            Symbol::Interval(..) => SymbolKind::Interval,
        }
    }

    pub fn interval(v: &Interval) -> Symbol {
        Symbol::Interval(v.lo, v.hi)
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Symbol::Interval(i, j) if j < i)
    }

    fn check(&self, n: usize) -> Result<()> {
        match *self {
            Symbol::Classical(i, j) if i >= 1 && i < j && j <= n + 1 => Ok(()),
            Symbol::Classical(i, j) => Err(Error::InvalidPair { i, j, n }),
            Symbol::Interval(i, j) if i >= 1 && (j < i || j <= n) => Ok(()),
            Symbol::Interval(i, j) => Err(Error::IntervalOutOfRange { lo: i, hi: j, ambient: n }),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Classical(i, j) => write!(f, "A{i},{j}"),
            Symbol::Interval(i, j) => write!(f, "I{i},{j}"),
        }
    }
}

/// A word in the generators of one presentation over `A_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresentationWord {
    ambient: usize,
    letters: Vec<(Symbol, i8)>,
}

impl PresentationWord {
    pub fn empty(ambient: usize) -> Self {
        Self {
            ambient,
            letters: Vec::new(),
        }
    }

    pub fn new(ambient: usize, letters: Vec<(Symbol, i8)>) -> Result<Self> {
        if let Some((first, _)) = letters.first() {
            if letters.iter().any(|(s, _)| s.kind() != first.kind()) {
                return Err(Error::MixedPresentationWord);
            }
        }
        for (s, e) in &letters {
            s.check(ambient)?;
            if e.abs() != 1 {
                return Err(Error::Parse(format!("exponent {e} is not ±1")));
            }
        }
        Ok(Self { ambient, letters })
    }

    pub fn single(ambient: usize, s: Symbol, exp: i8) -> Result<Self> {
        Self::new(ambient, vec![(s, exp)])
    }

    /// Parses tokens like `A1,3`, `A1,3^-1`, `I2,4`, `I2,4^-1`.
    pub fn parse(ambient: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (body, exp) = match tok.split_once('^') {
                Some((b, "-1")) => (b, -1),
                Some((b, "1")) => (b, 1),
                Some(_) => return Err(Error::Parse(format!("bad exponent in {tok:?}"))),
                None => (tok, 1),
            };
            let mut chars = body.chars();
            let head = chars.next().ok_or_else(|| Error::Parse("empty token".into()))?;
            let rest: String = chars.collect();
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected two indices in {tok:?}")))?;
            let a: usize = a.parse().map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
            let b: usize = b.parse().map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
            let sym = match head {
                'A' => Symbol::Classical(a, b),
                'I' => Symbol::Interval(a, b),
                _ => return Err(Error::Parse(format!("unknown symbol {tok:?}"))),
            };
            letters.push((sym, exp));
        }
        Self::new(ambient, letters)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn letters(&self) -> &[(Symbol, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn kind(&self) -> Option<SymbolKind> {
        self.letters.first().map(|(s, _)| s.kind())
    }

    pub fn concat(&self, other: &PresentationWord) -> Result<PresentationWord> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PresentationWord::new(self.ambient, letters)
    }

    pub fn inverse(&self) -> PresentationWord {
        PresentationWord {
            ambient: self.ambient,
            letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect(),
        }
    }

    /// Symbol-level reversal (each exponent kept).
    pub fn reversed(&self) -> PresentationWord {
        PresentationWord {
            ambient: self.ambient,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Drops trivial interval symbols and cancels adjacent inverse pairs.
    pub fn free_reduce(&self) -> PresentationWord {
        let mut stack: Vec<(Symbol, i8)> = Vec::new();
        for &(s, e) in &self.letters {
            if s.is_trivial() {
                continue;
            }
            if stack.last() == Some(&(s, -e)) {
                stack.pop();
            } else {
                stack.push((s, e));
            }
        }
        PresentationWord {
            ambient: self.ambient,
            letters: stack,
        }
    }
}

impl fmt::Display for PresentationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(s, e)| if *e < 0 { format!("{s}^-1") } else { s.to_string() })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    FarCommutator,
    InclusionCommutator,
    Box,
    /// Conjugation by a disjoint or nested pair acts trivially.
    ClassicalCase1,
    /// `r < s = i < j`.
    ClassicalCase2,
    /// `r = i < s < j`.
    ClassicalCase3,
    /// `r < i < s < j`.
    ClassicalCase4,
}

impl RelationKind {
    pub fn name(&self) -> &'static str {
        match self {
            RelationKind::FarCommutator => "far-commutator",
            RelationKind::InclusionCommutator => "inclusion-commutator",
            RelationKind::Box => "box",
            RelationKind::ClassicalCase1 => "classical-case-1",
            RelationKind::ClassicalCase2 => "classical-case-2",
            RelationKind::ClassicalCase3 => "classical-case-3",
            RelationKind::ClassicalCase4 => "classical-case-4",
        }
    }

    pub fn is_commutator(&self) -> bool {
        matches!(self, RelationKind::FarCommutator | RelationKind::InclusionCommutator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub id: String,
    pub kind: RelationKind,
    pub lhs: PresentationWord,
    pub rhs: PresentationWord,
}

/// All `n(n+1)/2` nonempty intervals of `A_n`, lexicographic in `(lo, hi)`.
pub fn enumerate_generators(n: usize) -> Vec<Interval> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for lo in 1..=n {
        for hi in lo..=n {
            out.push(Interval { lo, hi, ambient: n });
        }
    }
    out
}

/// Number of edges strictly separating two intervals; `0` if they meet.
pub fn distance(u: &Interval, v: &Interval) -> usize {
    if u.intersects(v) {
        0
    } else if u.hi < v.lo {
        v.lo - u.hi
    } else {
        u.lo - v.hi
    }
}

/// True iff one interval contains the other.
pub fn nested(u: &Interval, v: &Interval) -> bool {
    u.contains(v) || v.contains(u)
}

/// The intervals `B = [a, k]` compatible with `(A, C)`, where `C` lies one
/// vertex to the right of `A`: `A.lo < a ≤ A.hi + 1 ≤ k < C.hi`.
pub fn compatible_bs(a_iv: &Interval, c_iv: &Interval) -> Result<Vec<Interval>> {
    let d = distance(a_iv, c_iv);
    if d != 2 || a_iv.hi >= c_iv.lo {
        return Err(Error::NotAtDistanceTwo(d));
    }
    let gap = a_iv.hi + 1;
    let mut out = Vec::new();
    for a in a_iv.lo + 1..=gap {
        for k in gap..c_iv.hi {
            out.push(Interval {
                lo: a,
                hi: k,
                ambient: a_iv.ambient,
            });
        }
    }
    Ok(out)
}

fn interval_letter(v: &Interval, e: i8) -> (Symbol, i8) {
    (Symbol::interval(v), e)
}

/// The box relation `(A∪B)^{-1} A B C (B∪C)^{-1} = (C∪B)^{-1} C B A (B∪A)^{-1}`.
pub fn box_relation(cfg: &BoxConfig) -> Relation {
    let (a, b, c) = (cfg.left(), cfg.middle(), cfg.right());
    let ab = a.hull(&b);
    let bc = b.hull(&c);
    let lhs = vec![
        interval_letter(&ab, -1),
        interval_letter(&a, 1),
        interval_letter(&b, 1),
        interval_letter(&c, 1),
        interval_letter(&bc, -1),
    ];
    let rhs = vec![
        interval_letter(&bc, -1),
        interval_letter(&c, 1),
        interval_letter(&b, 1),
        interval_letter(&a, 1),
        interval_letter(&ab, -1),
    ];
    Relation {
        id: format!("box A={a} B={b} C={c}"),
        kind: RelationKind::Box,
        lhs: PresentationWord { ambient: cfg.n, letters: lhs },
        rhs: PresentationWord { ambient: cfg.n, letters: rhs },
    }
}

/// Commutator relations, one per unordered pair with the smaller interval
/// first, in lexicographic order of the pair.
pub fn commutator_relations(n: usize) -> Vec<Relation> {
    let gens = enumerate_generators(n);
    let mut out = Vec::new();
    for (idx, u) in gens.iter().enumerate() {
        for v in &gens[idx + 1..] {
            let kind = if distance(u, v) >= 2 {
                RelationKind::FarCommutator
            } else if nested(u, v) {
                RelationKind::InclusionCommutator
            } else {
                continue;
            };
            let uv = vec![interval_letter(u, 1), interval_letter(v, 1)];
            let vu = vec![interval_letter(v, 1), interval_letter(u, 1)];
            out.push(Relation {
                id: format!("commute {u} {v}"),
                kind,
                lhs: PresentationWord { ambient: n, letters: uv },
                rhs: PresentationWord { ambient: n, letters: vu },
            });
        }
    }
    out
}

/// Box relations, one per compatible triple, ordered by `(A, C, B)`.
pub fn box_relations(n: usize) -> Vec<Relation> {
    let gens = enumerate_generators(n);
    let mut out = Vec::new();
    for a in &gens {
        for c in &gens {
            if c.lo != a.hi + 2 {
                continue;
            }
            for b in compatible_bs(a, c).expect("pairs at distance two") {
                let cfg = BoxConfig::new(a.lo, b.lo, a.hi, b.hi, c.hi, n)
                    .expect("compatible triples satisfy the box ordering");
                out.push(box_relation(&cfg));
            }
        }
    }
    out
}

/// All relations of the interval presentation: commutators, then boxes.
pub fn enumerate_relations(n: usize) -> Vec<Relation> {
    let mut out = commutator_relations(n);
    out.extend(box_relations(n));
    out
}

/// `φ(A_{i,j}) = 𝕀_{i,j-2}^{-1} 𝕀_{i,j-1} 𝕀_{i+1,j-2} 𝕀_{i+1,j-1}^{-1}` with
/// trivial symbols dropped; inverses map to the inverted block.
pub fn phi(w: &PresentationWord) -> Result<PresentationWord> {
    let n = w.ambient;
    let mut letters = Vec::new();
    for &(sym, e) in &w.letters {
        let (i, j) = match sym {
            Symbol::Classical(i, j) => (i, j),
            Symbol::Interval(..) => return Err(Error::MixedPresentationWord),
        };
        // j - 2 and j - 1 may fall below i; those symbols are trivial.
        let block = [
            (Symbol::Interval(i, j - 2), -1i8),
            (Symbol::Interval(i, j - 1), 1),
            (Symbol::Interval(i + 1, j - 2), 1),
            (Symbol::Interval(i + 1, j - 1), -1),
        ];
        let block = block.into_iter().filter(|(s, _)| !s.is_trivial());
        if e > 0 {
            letters.extend(block);
        } else {
            let mut inv: Vec<_> = block.map(|(s, x)| (s, -x)).collect();
            inv.reverse();
            letters.extend(inv);
        }
    }
    PresentationWord::new(n, letters)
}

/// Substitutes braid words: `𝕀_{i,j} ↦ ℓ_{i,j}^2`, `A_{i,j} ↦ σ_{i,j}^2`.
pub fn realize(w: &PresentationWord) -> BraidWord {
    let n = w.ambient;
    let mut out = BraidWord::identity(n + 1);
    for &(sym, e) in &w.letters {
        let piece = match sym {
            Symbol::Interval(i, j) => {
                if j < i {
                    continue;
                }
                longest_square(&Interval { lo: i, hi: j, ambient: n })
            }
            Symbol::Classical(i, j) => classical_generator(i, j, n).expect("validated symbol").1,
        };
        let piece = if e < 0 { piece.inverse() } else { piece };
        out.extend(&piece).expect("same ambient");
    }
    out
}

fn check_relation(rel: &Relation, map: impl Fn(&PresentationWord) -> PresentationWord) -> ReportItem {
    let lhs = realize(&map(&rel.lhs));
    let rhs = realize(&map(&rel.rhs));
    ReportItem::from_equality(rel.id.clone(), rel.kind.name(), &lhs, &rhs)
}

/// Realizes every interval-presentation relation and checks it in the braid group.
pub fn verify_relations(n: usize) -> VerificationReport {
    let items: Vec<ReportItem> = enumerate_relations(n)
        .par_iter()
        .map(|rel| check_relation(rel, |w| w.clone()))
        .collect();
    VerificationReport::new("verify relations", n, items)
}

fn classical(i: usize, j: usize, e: i8) -> (Symbol, i8) {
    (Symbol::Classical(i, j), e)
}

/// Every instance of the classical conjugation relations
/// `A_{r,s}^{-1} A_{i,j} A_{r,s} = (...)` in `A_n`.
pub fn classical_relations(n: usize) -> Vec<Relation> {
    let top = n + 1;
    let mut out = Vec::new();
    for r in 1..=top {
        for s in r + 1..=top {
            for i in 1..=top {
                for j in i + 1..=top {
                    let (kind, rhs) = if (s < i) || (i < r && s < j) {
                        (RelationKind::ClassicalCase1, vec![classical(i, j, 1)])
                    } else if r < s && s == i {
                        (
                            RelationKind::ClassicalCase2,
                            vec![classical(r, j, 1), classical(i, j, 1), classical(r, j, -1)],
                        )
                    } else if r == i && s < j {
                        (
                            RelationKind::ClassicalCase3,
                            vec![
                                classical(i, j, 1),
                                classical(s, j, 1),
                                classical(i, j, 1),
                                classical(s, j, -1),
                                classical(i, j, -1),
                            ],
                        )
                    } else if r < i && i < s && s < j {
                        let comm = [
                            classical(r, j, 1),
                            classical(s, j, 1),
                            classical(r, j, -1),
                            classical(s, j, -1),
                        ];
                        let comm_inv: Vec<_> = comm.iter().rev().map(|&(x, e)| (x, -e)).collect();
                        let mut rhs = comm.to_vec();
                        rhs.push(classical(i, j, 1));
                        rhs.extend(comm_inv);
                        (RelationKind::ClassicalCase4, rhs)
                    } else {
                        continue;
                    };
                    let lhs = vec![classical(r, s, -1), classical(i, j, 1), classical(r, s, 1)];
                    out.push(Relation {
                        id: format!("conj (r,s,i,j)=({r},{s},{i},{j})"),
                        kind,
                        lhs: PresentationWord { ambient: n, letters: lhs },
                        rhs: PresentationWord { ambient: n, letters: rhs },
                    });
                }
            }
        }
    }
    out
}

/// Pushes every classical relation through `φ`, realizes both sides and
/// checks equality in the braid group.
pub fn verify_phi_well_defined(n: usize) -> VerificationReport {
    let items: Vec<ReportItem> = classical_relations(n)
        .par_iter()
        .map(|rel| check_relation(rel, |w| phi(w).expect("classical word")))
        .collect();
    VerificationReport::new("verify phi", n, items)
}

/// Checks `realize(φ(A_{i,j})) = A_{i,j}` for every classical generator.
pub fn verify_generation(n: usize) -> VerificationReport {
    let mut pairs = Vec::new();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            pairs.push((i, j));
        }
    }
    let items: Vec<ReportItem> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let a = PresentationWord { ambient: n, letters: vec![classical(i, j, 1)] };
            let image = realize(&phi(&a).expect("classical word"));
            ReportItem::from_equality(format!("generation A{i},{j}"), "generation", &image, &realize(&a))
        })
        .collect();
    VerificationReport::new("verify generation", n, items)
}

/// A classical word whose `φ`-image freely reduces to `𝕀_v`, built by
/// induction on the width of `v`: `[i,i] ↦ A_{i,i+1}` and
/// `[i,j] ↦ g([i,j-1]) · A_{i,j+1} · g([i+1,j]) · g([i+1,j-1])^{-1}`.
pub fn surjectivity_witness(v: &Interval) -> Result<PresentationWord> {
    if v.is_empty() {
        return Ok(PresentationWord::empty(v.ambient));
    }
    if v.lo == 0 || v.hi > v.ambient {
        return Err(Error::IntervalOutOfRange { lo: v.lo, hi: v.hi, ambient: v.ambient });
    }
    let n = v.ambient;
    let (i, j) = (v.lo, v.hi);
    if i == j {
        return PresentationWord::single(n, Symbol::Classical(i, i + 1), 1);
    }
    let g1 = surjectivity_witness(&Interval { lo: i, hi: j - 1, ambient: n })?;
    let g2 = surjectivity_witness(&Interval { lo: i + 1, hi: j - 1, ambient: n })?;
    let g3 = surjectivity_witness(&Interval { lo: i + 1, hi: j, ambient: n })?;
    let mid = PresentationWord::single(n, Symbol::Classical(i, j + 1), 1)?;
    g1.concat(&mid)?.concat(&g3)?.concat(&g2.inverse())
}

/// Certifies a witness twice: its `φ`-image freely reduces to the single
/// symbol `𝕀_v`, and its realization equals `ℓ_v^2` in the braid group.
pub fn certify_witness(v: &Interval) -> Result<ReportItem> {
    let g = surjectivity_witness(v)?;
    let image = phi(&g)?.free_reduce();
    let target = PresentationWord::single(v.ambient, Symbol::interval(v), 1)?;
    let id = format!("witness {v}");
    if image != target {
        return Ok(ReportItem::fail(id, "witness", None));
    }
    Ok(ReportItem::from_equality(id, "witness", &realize(&g), &longest_square(v)))
}

pub fn verify_witnesses(n: usize) -> VerificationReport {
    let items: Vec<ReportItem> = enumerate_generators(n)
        .par_iter()
        .map(|v| certify_witness(v).expect("generators are in range"))
        .collect();
    VerificationReport::new("verify witnesses", n, items)
}

/// Commutation predicate on strand pairs: `z_{ij}` and `z_{kl}` stand for
/// `[i, j-1]` and `[k, l-1]` and commute when those intervals are at
/// distance at least two or nested.
pub fn pairs_commute(ij: (usize, usize), kl: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = (ij, kl);
    let far = k > j || i > l;
    let nest = (k <= i && j <= l) || (i <= k && l <= j);
    far || nest
}

/// `binom(n + 2, 5)`, the number of box relations in `A_n`.
pub fn expected_box_count(n: usize) -> usize {
    let m = n + 2;
    if m < 5 {
        return 0;
    }
    (0..5).fold(1usize, |acc, t| acc * (m - t) / (t + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::equal;

    fn iv(lo: usize, hi: usize, n: usize) -> Interval {
        Interval::new(lo, hi, n).unwrap()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(enumerate_generators(1), vec![iv(1, 1, 1)]);
        assert_eq!(enumerate_generators(4).len(), 10);
        assert_eq!(enumerate_generators(8).len(), 36);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&iv(1, 2, 5), &iv(2, 4, 5)), 0);
        assert_eq!(distance(&iv(1, 1, 5), &iv(3, 3, 5)), 2);
        assert_eq!(distance(&iv(1, 1, 5), &iv(4, 5, 5)), 3);
        assert_eq!(distance(&iv(4, 5, 5), &iv(1, 1, 5)), 3);
        assert_eq!(distance(&iv(1, 1, 5), &iv(2, 2, 5)), 1);
    }

    #[test]
    fn compatible_examples() {
        assert_eq!(compatible_bs(&iv(1, 1, 3), &iv(3, 3, 3)).unwrap(), vec![iv(2, 2, 3)]);
        assert_eq!(
            compatible_bs(&iv(1, 1, 4), &iv(3, 4, 4)).unwrap(),
            vec![iv(2, 2, 4), iv(2, 3, 4)]
        );
        let bs = compatible_bs(&iv(1, 4, 8), &iv(6, 8, 8)).unwrap();
        let pairs: Vec<(usize, usize)> = bs.iter().map(|b| b.as_pair()).collect();
        let mut expected = Vec::new();
        for i in 2..=5 {
            for j in 6..=8 {
                expected.push((i, j));
            }
        }
        assert_eq!(pairs, expected);
        assert!(compatible_bs(&iv(1, 1, 4), &iv(2, 2, 4)).is_err());
        assert!(compatible_bs(&iv(3, 3, 4), &iv(1, 1, 4)).is_err());
    }

    #[test]
    fn box_counts_follow_binomial() {
        assert_eq!(box_relations(3).len(), 1);
        assert_eq!(box_relations(4).len(), 6);
        assert_eq!(box_relations(8).len(), 252);
        for n in 1..=10 {
            assert_eq!(box_relations(n).len(), expected_box_count(n));
        }
    }

    #[test]
    fn box_relations_for_a4_match_worked_example() {
        // a..d = [1,1]..[4,4], e,f,g = [1,2],[2,3],[3,4], h,i = [1,3],[2,4]
        let name = |s: &Symbol| match *s {
            Symbol::Interval(1, 1) => 'a',
            Symbol::Interval(2, 2) => 'b',
            Symbol::Interval(3, 3) => 'c',
            Symbol::Interval(4, 4) => 'd',
            Symbol::Interval(1, 2) => 'e',
            Symbol::Interval(2, 3) => 'f',
            Symbol::Interval(3, 4) => 'g',
            Symbol::Interval(1, 3) => 'h',
            Symbol::Interval(2, 4) => 'i',
            Symbol::Interval(1, 4) => 'j',
            _ => '?',
        };
        let render = |w: &PresentationWord| -> String {
            w.letters()
                .iter()
                .map(|(s, e)| if *e < 0 { format!("{}'", name(s)) } else { name(s).to_string() })
                .collect()
        };
        let mut got: Vec<String> = box_relations(4)
            .iter()
            .map(|r| format!("{}={}", render(&r.lhs), render(&r.rhs)))
            .collect();
        got.sort();
        let mut expected = vec![
            "e'abcf'=f'cbae'",
            "f'bcdg'=g'dcbf'",
            "e'abgi'=i'gbae'",
            "h'afgi'=i'gfah'",
            "h'ecdg'=g'dceh'",
            "h'efdi'=i'dfeh'",
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn box_relations_are_palindromic() {
        for n in 3..=7 {
            for r in box_relations(n) {
                assert_eq!(r.lhs.reversed(), r.rhs);
            }
        }
    }

    #[test]
    fn phi_examples() {
        let a12 = PresentationWord::parse(3, "A1,2").unwrap();
        assert_eq!(phi(&a12).unwrap(), PresentationWord::parse(3, "I1,1").unwrap());
        let a13 = PresentationWord::parse(3, "A1,3").unwrap();
        assert_eq!(
            phi(&a13).unwrap(),
            PresentationWord::parse(3, "I1,1^-1 I1,2 I2,2^-1").unwrap()
        );
        let a13inv = PresentationWord::parse(3, "A1,3^-1").unwrap();
        assert_eq!(phi(&a13inv).unwrap(), phi(&a13).unwrap().inverse());
        assert!(phi(&PresentationWord::empty(3)).unwrap().is_empty());
        assert!(phi(&PresentationWord::parse(3, "I1,1").unwrap()).is_err());
    }

    #[test]
    fn realize_examples() {
        let w = PresentationWord::parse(2, "I1,1").unwrap();
        assert_eq!(realize(&w), BraidWord::parse(3, "1 1").unwrap());
        let a13 = PresentationWord::parse(2, "A1,3").unwrap();
        assert_eq!(realize(&a13), BraidWord::parse(3, "2 1 1 -2").unwrap());
        assert!(equal(&realize(&phi(&a13).unwrap()), &realize(&a13)).unwrap());
        let boxed = &box_relations(3)[0];
        assert!(equal(&realize(&boxed.lhs), &realize(&boxed.rhs)).unwrap());
    }

    #[test]
    fn parse_rejects_mixed_and_bad_words() {
        assert!(PresentationWord::parse(3, "A1,2 I1,1").is_err());
        assert!(PresentationWord::parse(3, "A2,2").is_err());
        assert!(PresentationWord::parse(3, "A1,5").is_err());
        assert!(PresentationWord::parse(3, "I1,4").is_err());
        assert!(PresentationWord::parse(3, "B1,2").is_err());
        assert!(PresentationWord::parse(3, "A1,2^2").is_err());
        assert_eq!(PresentationWord::parse(3, "I3,2").unwrap().len(), 1);
    }

    #[test]
    fn witness_examples() {
        let w = surjectivity_witness(&iv(2, 2, 3)).unwrap();
        assert_eq!(w, PresentationWord::parse(3, "A2,3").unwrap());
        let w = surjectivity_witness(&iv(1, 2, 3)).unwrap();
        assert_eq!(w, PresentationWord::parse(3, "A1,2 A1,3 A2,3").unwrap());
        assert!(certify_witness(&iv(1, 3, 3)).unwrap().passed());
    }

    #[test]
    fn single_far_commutator() {
        let rel = commutator_relations(3)
            .into_iter()
            .find(|r| r.id == "commute [1,1] [3,3]")
            .unwrap();
        assert_eq!(rel.kind, RelationKind::FarCommutator);
        assert!(check_relation(&rel, |w| w.clone()).passed());
    }

    #[test]
    fn small_sweeps_pass() {
        for n in 1..=3 {
            assert!(verify_relations(n).is_pass());
            assert!(verify_phi_well_defined(n).is_pass());
            assert!(verify_generation(n).is_pass());
            assert!(verify_witnesses(n).is_pass());
        }
        assert_eq!(verify_relations(3).total, 11);
    }

    #[test]
    fn classical_case_counts_small() {
        // n = 1: a single generator, nothing to conjugate
        assert!(classical_relations(1).is_empty());
        // n = 2: strands 1..3, pairs 12, 13, 23; only r<s=i<j (12, 23) and r=i<s<j (13, 12... )
        let rels = classical_relations(2);
        assert!(rels.iter().all(|r| r.lhs.letters()[1].0 != r.lhs.letters()[0].0));
        assert!(rels.iter().all(|r| match r.lhs.letters()[1].0 {
            Symbol::Classical(_, j) => j <= 3,
            _ => false,
        }));
    }

    #[test]
    fn pair_predicate_matches_intervals() {
        let n = 6;
        let gens = enumerate_generators(n);
        for u in &gens {
            for v in &gens {
                if u == v {
                    continue;
                }
                let by_interval = distance(u, v) >= 2 || nested(u, v);
                assert_eq!(pairs_commute(u.as_pair(), v.as_pair()), by_interval, "{u} {v}");
                assert_eq!(Interval::from_pair(u.as_pair().0, u.as_pair().1, n).unwrap(), *u);
            }
        }
    }
}
