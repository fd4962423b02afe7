//! Named braid words: lifts of longest elements over intervals of the `A_n`
//! diagram, the classical generators `σ_{i,j}` and `A_{i,j}`, the staircase
//! words used to decompose box relations, and the word identities relating
//! them, each replayed through the normal-form oracle.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::report::{ReportItem, VerificationReport};

/// A connected subgraph `[lo, hi]` of the `A_ambient` Dynkin diagram.
/// `hi < lo` encodes the empty subgraph, whose longest element is trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
    pub ambient: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize, ambient: usize) -> Result<Self> {
        if lo == 0 || (hi >= lo && hi > ambient) {
            return Err(Error::IntervalOutOfRange { lo, hi, ambient });
        }
        Ok(Self { lo, hi, ambient })
    }

    /// Interval from signed bounds; anything with `hi < lo` becomes empty.
    pub fn clamped(lo: usize, hi: isize, ambient: usize) -> Result<Self> {
        if hi < lo as isize {
            Ok(Self {
                lo,
                hi: lo - 1,
                ambient,
            })
        } else {
            Self::new(lo, hi as usize, ambient)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn strands(&self) -> usize {
        self.ambient + 1
    }

    pub fn contains(&self, other: &Interval) -> bool {
        other.is_empty() || (!self.is_empty() && self.lo <= other.lo && other.hi <= self.hi)
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        !self.is_empty() && !other.is_empty() && self.lo <= other.hi && other.lo <= self.hi
    }

    /// The smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
            ambient: self.ambient,
        }
    }

    /// The strand pair `(i, j)` with `[i, j-1] = self`.
    pub fn as_pair(&self) -> (usize, usize) {
        (self.lo, self.hi + 1)
    }

    /// Inverse of [`Interval::as_pair`].
    pub fn from_pair(i: usize, j: usize, ambient: usize) -> Result<Self> {
        if i == 0 || j <= i || j > ambient + 1 {
            return Err(Error::InvalidPair { i, j, n: ambient });
        }
        Self::new(i, j - 1, ambient)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// `s_hi s_{hi-1} ⋯ s_lo`, empty when `hi < lo`.
pub fn descending(hi: usize, lo: usize) -> Vec<Letter> {
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).rev().map(|g| g as Letter).collect()
}

/// `s_lo s_{lo+1} ⋯ s_hi`, empty when `hi < lo`.
pub fn ascending(lo: usize, hi: usize) -> Vec<Letter> {
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).map(|g| g as Letter).collect()
}

fn word(strands: usize, parts: &[&[Letter]]) -> BraidWord {
    let letters: Vec<Letter> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    BraidWord::new(strands, letters).expect("catalog words stay within the ambient range")
}

fn repeat(letters: &[Letter], k: usize) -> Vec<Letter> {
    letters.iter().copied().cycle().take(letters.len() * k).collect()
}

/// `ℓ_{lo,hi} = (s_lo)(s_{lo+1} s_lo) ⋯ (s_hi ⋯ s_lo)`.
pub fn longest_lift(v: &Interval) -> BraidWord {
    let mut letters = Vec::new();
    if !v.is_empty() {
        for t in v.lo..=v.hi {
            letters.extend(descending(t, v.lo));
        }
    }
    word(v.strands(), &[&letters])
}

/// `ℓ_v · ℓ_v`, the full twist on the strands `lo, ..., hi+1`.
pub fn longest_square(v: &Interval) -> BraidWord {
    longest_lift(v).pow(2)
}

/// `σ_{i,j} = (s_{j-1} ⋯ s_{i+1}) s_i (s_{i+1}^{-1} ⋯ s_{j-1}^{-1})` and
/// `A_{i,j} = σ_{i,j}^2` in the braid group on `n + 1` strands.
pub fn classical_generator(i: usize, j: usize, n: usize) -> Result<(BraidWord, BraidWord)> {
    if i == 0 || j <= i || j > n + 1 {
        return Err(Error::InvalidPair { i, j, n });
    }
    let conj = descending(j - 1, i + 1);
    let conj_inv: Vec<Letter> = conj.iter().rev().map(|l| -l).collect();
    let sigma = word(n + 1, &[&conj, &[i as Letter], &conj_inv]);
    let a = word(n + 1, &[&conj, &[i as Letter, i as Letter], &conj_inv]);
    Ok((sigma, a))
}

/// A compatible triple `A = [i, j]`, `B = [a, k]`, `C = [j+2, p]` inside
/// `A_n`, i.e. `1 ≤ i < a ≤ j+1 ≤ k < p ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxConfig {
    pub i: usize,
    pub a: usize,
    pub j: usize,
    pub k: usize,
    pub p: usize,
    pub n: usize,
}

impl BoxConfig {
    pub fn new(i: usize, a: usize, j: usize, k: usize, p: usize, n: usize) -> Result<Self> {
        if !(1 <= i && i < a && a <= j + 1 && j < k && k < p && p <= n) {
            return Err(Error::InvalidBox(format!(
                "need 1 <= i < a <= j+1 <= k < p <= n, got (i,a,j,k,p,n) = ({i},{a},{j},{k},{p},{n})"
            )));
        }
        Ok(Self { i, a, j, k, p, n })
    }

    /// All configurations in `A_n`, lexicographic in `(i, a, j, k, p)`.
    pub fn all(n: usize) -> Vec<BoxConfig> {
        let mut out = Vec::new();
        for i in 1..=n {
            for a in i + 1..=n {
                for j in a.saturating_sub(1).max(i)..=n {
                    for k in j + 1..=n {
                        for p in k + 1..=n {
                            if let Ok(cfg) = BoxConfig::new(i, a, j, k, p, n) {
                                out.push(cfg);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Width of `B` to the right of the gap vertex `j+1`, plus one.
    pub fn x(&self) -> usize {
        self.k - self.j
    }

    /// Width of `B` to the left of the gap vertex `j+1`, plus one.
    pub fn y(&self) -> usize {
        self.j + 2 - self.a
    }

    pub fn b(&self) -> usize {
        self.i + self.k - (self.j + 1)
    }

    pub fn h(&self) -> usize {
        self.a + self.p - (self.j + 1)
    }

    pub fn left(&self) -> Interval {
        Interval { lo: self.i, hi: self.j, ambient: self.n }
    }

    pub fn middle(&self) -> Interval {
        Interval { lo: self.a, hi: self.k, ambient: self.n }
    }

    pub fn right(&self) -> Interval {
        Interval { lo: self.j + 2, hi: self.p, ambient: self.n }
    }

    pub fn strands(&self) -> usize {
        self.n + 1
    }
}

impl fmt::Display for BoxConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.i, self.a, self.j, self.k, self.p)
    }
}

/// The four staircase words attached to a box configuration.
///
/// `c_*` are products of ascending factors of length `x` whose starting
/// index decreases by one per factor; `d_*` are products of descending
/// factors of length `y` whose starting index increases by one per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiWords {
    /// Starts at `s_{a-1}`, ends at `s_b`; lives over `A`.
    pub c_outer: BraidWord,
    /// Starts at `s_{j+1}`, ends at `s_{x+a-1}`; lives over `B`.
    pub c_inner: BraidWord,
    /// Starts at `s_{j+1}`, ends at `s_{k-y+1}`; lives over `B`.
    pub d_inner: BraidWord,
    /// Starts at `s_{k+1}`, ends at `s_h`; lives over `C`.
    pub d_outer: BraidWord,
}

/// `(s_start ⋯ s_{start+len-1})(s_{start-1} ⋯ s_{start+len-2}) ⋯`, `count` factors.
fn c_staircase(start: usize, len: usize, count: usize) -> Vec<Letter> {
    (0..count)
        .flat_map(|t| ascending(start - t, start - t + len - 1))
        .collect()
}

/// `(s_start ⋯ s_{start-len+1})(s_{start+1} ⋯ s_{start-len+2}) ⋯`, `count` factors.
fn d_staircase(start: usize, len: usize, count: usize) -> Vec<Letter> {
    (0..count)
        .flat_map(|t| descending(start + t, start + t + 1 - len))
        .collect()
}

pub fn chi_words(cfg: &BoxConfig) -> ChiWords {
    let (x, y) = (cfg.x(), cfg.y());
    let m = cfg.strands();
    ChiWords {
        c_outer: word(m, &[&c_staircase(cfg.a - 1, x, cfg.a - cfg.i)]),
        c_inner: word(m, &[&c_staircase(cfg.j + 1, x, y)]),
        d_inner: word(m, &[&d_staircase(cfg.j + 1, y, x)]),
        d_outer: word(m, &[&d_staircase(cfg.k + 1, y, cfg.p - cfg.k)]),
    }
}

/// `(s_t ⋯ s_{i+1}) s_i^2 (s_{i+1} ⋯ s_t)`.
fn dip(t: usize, i: usize) -> Vec<Letter> {
    let mut v = descending(t, i);
    v.extend(ascending(i, t));
    v
}

/// `(s_t ⋯ s_{p-1}) s_p^2 (s_{p-1} ⋯ s_t)`.
fn peak(t: usize, p: usize) -> Vec<Letter> {
    let mut v = ascending(t, p);
    v.extend(descending(p, t));
    v
}

/// The word-identity families that can be replayed through the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityFamily {
    /// The six spellings of `ℓ_{i,j}` agree.
    LongestFactorizations,
    /// `ℓ_{i,j}^2` peeled by one vertex on either side, four ways.
    SquareFactorizations,
    /// `(s_n ⋯ s_1)(s_1 ⋯ s_n)` commutes with `ℓ_K` for `K ⊆ [1, n-1]`, and
    /// `(s_1 ⋯ s_n)(s_n ⋯ s_1)` commutes with `ℓ_K` for `K ⊆ [2, n]`.
    CoxeterCommute,
    /// `ℓ_{i,j}^2 = (s_j ⋯ s_i)^{j-i+2} = (s_i ⋯ s_j)^{j-i+2}`.
    SquarePower,
    /// Products of two adjacent dips or peaks, four forms.
    AdjacentSquares,
    /// Staircase decompositions of `x`- and `y`-term products, four forms.
    BoxProducts,
    /// `c_inner = d_inner` and their reversals agree.
    StaircaseEquality,
}

impl IdentityFamily {
    pub const ALL: [IdentityFamily; 7] = [
        IdentityFamily::LongestFactorizations,
        IdentityFamily::SquareFactorizations,
        IdentityFamily::CoxeterCommute,
        IdentityFamily::SquarePower,
        IdentityFamily::AdjacentSquares,
        IdentityFamily::BoxProducts,
        IdentityFamily::StaircaseEquality,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityFamily::LongestFactorizations => "longest-factorizations",
            IdentityFamily::SquareFactorizations => "square-factorizations",
            IdentityFamily::CoxeterCommute => "coxeter-commute",
            IdentityFamily::SquarePower => "square-power",
            IdentityFamily::AdjacentSquares => "adjacent-squares",
            IdentityFamily::BoxProducts => "box-products",
            IdentityFamily::StaircaseEquality => "staircase-equality",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    /// Number of integer parameters one instance takes.
    pub fn arity(&self) -> usize {
        match self {
            IdentityFamily::LongestFactorizations
            | IdentityFamily::SquareFactorizations
            | IdentityFamily::CoxeterCommute
            | IdentityFamily::SquarePower
            | IdentityFamily::AdjacentSquares => 2,
            IdentityFamily::BoxProducts | IdentityFamily::StaircaseEquality => 5,
        }
    }

    /// Every legal parameter tuple in `A_n`.
    pub fn instances(&self, n: usize) -> Vec<Vec<usize>> {
        let pairs = |min_gap: usize| -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i + min_gap..=n {
                    out.push(vec![i, j]);
                }
            }
            out
        };
        match self {
            IdentityFamily::LongestFactorizations | IdentityFamily::SquarePower => pairs(0),
            IdentityFamily::SquareFactorizations => pairs(1),
            IdentityFamily::AdjacentSquares => pairs(2),
            IdentityFamily::CoxeterCommute => {
                let mut out = pairs(0);
                // the empty K is also legal; it commutes trivially
                out.retain(|v| !(v[0] == 1 && v[1] == n));
                out
            }
            IdentityFamily::BoxProducts | IdentityFamily::StaircaseEquality => BoxConfig::all(n)
                .into_iter()
                .map(|c| vec![c.i, c.a, c.j, c.k, c.p])
                .collect(),
        }
    }

    fn validate(&self, n: usize, params: &[usize]) -> Result<()> {
        if params.len() != self.arity() {
            return Err(Error::ParamsOutOfRange(format!(
                "{} takes {} parameters, got {}",
                self.name(),
                self.arity(),
                params.len()
            )));
        }
        if !self.instances(n).iter().any(|p| p == params) {
            return Err(Error::ParamsOutOfRange(format!(
                "{params:?} is not a legal instance of {} in A_{n}",
                self.name()
            )));
        }
        Ok(())
    }

    /// The `(label, lhs, rhs)` equalities asserted for one instance.
    pub fn equalities(&self, n: usize, params: &[usize]) -> Result<Vec<(String, BraidWord, BraidWord)>> {
        self.validate(n, params)?;
        let m = n + 1;
        let iv = |lo: usize, hi: usize| Interval { lo, hi, ambient: n };
        let lift = |lo: usize, hi: usize| longest_lift(&iv(lo, hi)).letters().to_vec();
        let sq = |lo: usize, hi: usize| longest_square(&iv(lo, hi)).letters().to_vec();
        let mut out = Vec::new();
        let tag = |s: &str| format!("{}{:?}{}", self.name(), params, s);
        match self {
            IdentityFamily::LongestFactorizations => {
                let (i, j) = (params[0], params[1]);
                let canonical = word(m, &[&lift(i, j)]);
                if i == j {
                    out.push((tag("#base"), canonical, word(m, &[&[i as Letter]])));
                } else {
                    let mut alt = Vec::new();
                    for t in (i..=j).rev() {
                        alt.extend(ascending(t, j));
                    }
                    let forms: [(&str, Vec<Letter>); 5] = [
                        ("#ascending-then-lower", [ascending(i, j), lift(i, j - 1)].concat()),
                        ("#lower-then-descending", [lift(i, j - 1), descending(j, i)].concat()),
                        ("#right-anchored", alt),
                        ("#descending-then-upper", [descending(j, i), lift(i + 1, j)].concat()),
                        ("#upper-then-ascending", [lift(i + 1, j), ascending(i, j)].concat()),
                    ];
                    for (label, letters) in forms {
                        out.push((tag(label), canonical.clone(), word(m, &[&letters])));
                    }
                }
            }
            IdentityFamily::SquareFactorizations => {
                let (i, j) = (params[0], params[1]);
                let lhs = word(m, &[&sq(i, j)]);
                let (up, down) = (ascending(i, j), descending(j, i));
                let forms: [(&str, Vec<Letter>); 4] = [
                    ("#down-up-lower", [down.clone(), up.clone(), sq(i, j - 1)].concat()),
                    ("#up-down-upper", [up.clone(), down.clone(), sq(i + 1, j)].concat()),
                    ("#lower-down-up", [sq(i, j - 1), down.clone(), up.clone()].concat()),
                    ("#upper-up-down", [sq(i + 1, j), up, down].concat()),
                ];
                for (label, letters) in forms {
                    out.push((tag(label), lhs.clone(), word(m, &[&letters])));
                }
            }
            IdentityFamily::CoxeterCommute => {
                let (lo, hi) = (params[0], params[1]);
                let ell = lift(lo, hi);
                if hi < n {
                    let x = [descending(n, 1), ascending(1, n)].concat();
                    out.push((
                        tag("#left-anchored"),
                        word(m, &[&ell, &x]),
                        word(m, &[&x, &ell]),
                    ));
                }
                if lo > 1 {
                    let x = [ascending(1, n), descending(n, 1)].concat();
                    out.push((
                        tag("#right-anchored"),
                        word(m, &[&ell, &x]),
                        word(m, &[&x, &ell]),
                    ));
                }
            }
            IdentityFamily::SquarePower => {
                let (i, j) = (params[0], params[1]);
                let lhs = word(m, &[&sq(i, j)]);
                let e = j - i + 2;
                out.push((tag("#descending"), lhs.clone(), word(m, &[&repeat(&descending(j, i), e)])));
                out.push((tag("#ascending"), lhs, word(m, &[&repeat(&ascending(i, j), e)])));
            }
            IdentityFamily::AdjacentSquares => {
                let (i, j) = (params[0], params[1]);
                let pairs_down = |from: usize, to: usize| -> Vec<Letter> {
                    // (s_from s_{from-1})(s_{from+1} s_from) ⋯ (s_to s_{to-1})
                    (from..=to).flat_map(|t| [t as Letter, (t - 1) as Letter]).collect()
                };
                let pairs_up = |from: usize, to: usize| -> Vec<Letter> {
                    // (s_from s_{from+1})(s_{from-1} s_from) ⋯ (s_to s_{to+1})
                    (to..=from).rev().flat_map(|t| [t as Letter, (t + 1) as Letter]).collect()
                };
                let (il, jl) = (i as Letter, j as Letter);
                out.push((
                    tag("#1"),
                    word(m, &[&dip(j, i), &dip(j - 1, i)]),
                    word(m, &[&repeat(&descending(j, i + 1), 2), &[il, il + 1], &pairs_down(i + 1, j)]),
                ));
                out.push((
                    tag("#2"),
                    word(m, &[&peak(i, j), &peak(i + 1, j)]),
                    word(m, &[&repeat(&ascending(i, j - 1), 2), &[jl, jl - 1], &pairs_up(j - 1, i)]),
                ));
                out.push((
                    tag("#3"),
                    word(m, &[&dip(j - 1, i), &dip(j, i)]),
                    word(m, &[&pairs_up(j - 1, i), &[il + 1, il], &repeat(&ascending(i + 1, j), 2)]),
                ));
                out.push((
                    tag("#4"),
                    word(m, &[&peak(i + 1, j), &peak(i, j)]),
                    word(m, &[&pairs_down(i + 1, j), &[jl - 1, jl], &repeat(&descending(j - 1, i), 2)]),
                ));
            }
            IdentityFamily::BoxProducts => {
                let cfg = BoxConfig::new(params[0], params[1], params[2], params[3], params[4], n)?;
                for (label, lhs, rhs) in box_product_sides(&cfg) {
                    out.push((tag(label), lhs, rhs));
                }
            }
            IdentityFamily::StaircaseEquality => {
                let cfg = BoxConfig::new(params[0], params[1], params[2], params[3], params[4], n)?;
                let chi = chi_words(&cfg);
                out.push((tag("#forward"), chi.c_inner.clone(), chi.d_inner.clone()));
                out.push((tag("#reversed"), chi.c_inner.reversed(), chi.d_inner.reversed()));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for IdentityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Both sides of the four staircase decompositions for one configuration.
pub fn box_product_sides(cfg: &BoxConfig) -> Vec<(&'static str, BraidWord, BraidWord)> {
    let m = cfg.strands();
    let BoxConfig { i, a, j, k, p, .. } = *cfg;
    let (x, y) = (cfg.x(), cfg.y());
    let chi = chi_words(cfg);
    let l = |w: &BraidWord| w.letters().to_vec();
    let r = |w: &BraidWord| w.reversed().letters().to_vec();

    let dips_down: Vec<Letter> = (j + 1..=k).rev().flat_map(|t| dip(t, i)).collect();
    let dips_up: Vec<Letter> = (j + 1..=k).flat_map(|t| dip(t, i)).collect();
    let peaks_down: Vec<Letter> = (a..=j + 1).rev().flat_map(|t| peak(t, p)).collect();
    let peaks_up: Vec<Letter> = (a..=j + 1).flat_map(|t| peak(t, p)).collect();

    vec![
        (
            "#1",
            word(m, &[&dips_down]),
            word(m, &[&repeat(&descending(k, a), x), &l(&chi.c_outer), &r(&chi.c_outer), &r(&chi.c_inner)]),
        ),
        (
            "#2",
            word(m, &[&peaks_down]),
            word(m, &[&l(&chi.d_inner), &l(&chi.d_outer), &r(&chi.d_outer), &repeat(&descending(k, a), y)]),
        ),
        (
            "#3",
            word(m, &[&peaks_up]),
            word(m, &[&repeat(&ascending(a, k), y), &l(&chi.d_outer), &r(&chi.d_outer), &r(&chi.d_inner)]),
        ),
        (
            "#4",
            word(m, &[&dips_up]),
            word(m, &[&l(&chi.c_inner), &l(&chi.c_outer), &r(&chi.c_outer), &repeat(&ascending(a, k), x)]),
        ),
    ]
}

/// Replays an identity family through the oracle.
///
/// With `params = None` every legal instance in `A_n` is checked; otherwise
/// only the given instance. The report passes iff every equality holds.
pub fn verify_identity(
    family: IdentityFamily,
    n: usize,
    params: Option<&[usize]>,
) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::ParamsOutOfRange("ambient must be at least 1".into()));
    }
    let instances = match params {
        Some(p) => {
            family.validate(n, p)?;
            vec![p.to_vec()]
        }
        None => family.instances(n),
    };
    let items: Vec<ReportItem> = instances
        .par_iter()
        .map(|p| {
            family
                .equalities(n, p)
                .expect("enumerated instances are legal")
                .into_iter()
                .map(|(id, lhs, rhs)| ReportItem::from_equality(id, family.name(), &lhs, &rhs))
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    Ok(VerificationReport::new(format!("verify lemma:{}", family.name()), n, items))
}

/// Runs every identity family over its full range in `A_n`.
pub fn verify_all_identities(n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::empty("verify lemma:all", n);
    for family in IdentityFamily::ALL {
        report = report.merge(verify_identity(family, n, None)?);
    }
    Ok(report)
}
