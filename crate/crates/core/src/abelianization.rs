//! Linking numbers: the abelianization of the pure braid group, with one
//! integer coordinate per strand pair.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Coordinates indexed by strand pairs `p < q` (one-based), in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingVector {
    strands: usize,
    entries: Vec<i64>,
}

impl LinkingVector {
    pub fn zero(strands: usize) -> Self {
        Self {
            strands,
            entries: vec![0; strands * strands.saturating_sub(1) / 2],
        }
    }

    /// The unit vector of the pair `(p, q)`.
    pub fn unit(strands: usize, p: usize, q: usize) -> Result<Self> {
        let mut v = Self::zero(strands);
        let idx = v.index(p, q)?;
        v.entries[idx] = 1;
        Ok(v)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn index(&self, p: usize, q: usize) -> Result<usize> {
        let m = self.strands;
        if p == 0 || p >= q || q > m {
            return Err(Error::InvalidPair { i: p, j: q, n: m.saturating_sub(1) });
        }
        // pairs (1,2), (1,3), ..., (1,m), (2,3), ...
        let before: usize = (1..p).map(|r| m - r).sum();
        Ok(before + (q - p - 1))
    }

    pub fn get(&self, p: usize, q: usize) -> Result<i64> {
        Ok(self.entries[self.index(p, q)?])
    }

    /// `(p, q, value)` for every pair.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let m = self.strands;
        (1..=m)
            .flat_map(move |p| (p + 1..=m).map(move |q| (p, q)))
            .zip(self.entries.iter())
            .map(|((p, q), &v)| (p, q, v))
    }

    /// Entries keyed `"p,q"`.
    pub fn to_map(&self) -> BTreeMap<String, i64> {
        self.iter().map(|(p, q, v)| (format!("{p},{q}"), v)).collect()
    }
}

impl Serialize for LinkingVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // keep lexicographic pair order rather than string order
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (p, q, v) in self.iter() {
            map.serialize_entry(&format!("{p},{q}"), &v)?;
        }
        map.end()
    }
}

impl Add for &LinkingVector {
    type Output = LinkingVector;

    fn add(self, rhs: &LinkingVector) -> LinkingVector {
        assert_eq!(self.strands, rhs.strands, "strand counts differ");
        LinkingVector {
            strands: self.strands,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Neg for &LinkingVector {
    type Output = LinkingVector;

    fn neg(self) -> LinkingVector {
        LinkingVector {
            strands: self.strands,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl Sub for &LinkingVector {
    type Output = LinkingVector;

    fn sub(self, rhs: &LinkingVector) -> LinkingVector {
        self + &(-rhs)
    }
}

/// Linking numbers of a pure braid. Each letter crosses the two strands
/// currently at its positions; the signed crossing count of a pair is even
/// for pure braids and half of it is the coordinate.
pub fn linking(w: &BraidWord) -> Result<LinkingVector> {
    let m = w.strands();
    let mut at: Vec<usize> = (1..=m).collect();
    let mut doubled = LinkingVector::zero(m);
    for &l in w.letters() {
        let g = l.unsigned_abs() as usize;
        let (x, y) = (at[g - 1], at[g]);
        let idx = doubled.index(x.min(y), x.max(y))?;
        doubled.entries[idx] += i64::from(l.signum());
        at.swap(g - 1, g);
    }
    if at.iter().enumerate().any(|(k, &s)| s != k + 1) {
        return Err(Error::NotPure);
    }
    debug_assert!(doubled.entries.iter().all(|e| e % 2 == 0));
    for e in doubled.entries.iter_mut() {
        *e /= 2;
    }
    Ok(doubled)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_squares() {
        let w = BraidWord::parse(3, "1 1").unwrap();
        assert_eq!(linking(&w).unwrap(), LinkingVector::unit(3, 1, 2).unwrap());
        let w = BraidWord::parse(3, "-2 -2").unwrap();
        assert_eq!(linking(&w).unwrap().get(2, 3).unwrap(), -1);
    }

    #[test]
    fn conjugated_square_links_outer_pair() {
        // σ_{1,3}^2 = s_2 s_1 s_1 s_2^{-1}
        let w = BraidWord::parse(3, "2 1 1 -2").unwrap();
        assert_eq!(linking(&w).unwrap(), LinkingVector::unit(3, 1, 3).unwrap());
    }

    #[test]
    fn non_pure_rejected() {
        assert_eq!(linking(&BraidWord::parse(3, "1").unwrap()), Err(Error::NotPure));
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let v = LinkingVector::zero(4);
        let pairs: Vec<(usize, usize)> = v.iter().map(|(p, q, _)| (p, q)).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        for (k, (p, q)) in pairs.into_iter().enumerate() {
            assert_eq!(v.index(p, q).unwrap(), k);
        }
        assert!(v.index(2, 2).is_err());
        assert!(v.index(1, 5).is_err());
    }

    #[test]
    fn json_keys() {
        let v = LinkingVector::unit(3, 2, 3).unwrap();
        let map = v.to_map();
        assert_eq!(map["2,3"], 1);
        assert_eq!(map["1,2"], 0);
    }
}
