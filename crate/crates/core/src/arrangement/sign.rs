use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::Sign;

/// Signs of one face against every hyperplane, written as a `+-0` string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn zeros(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, s)| **s == Sign::Zero).map(|(i, _)| i).collect()
    }

    /// True when `self` agrees with `cell` at every coordinate where `self` is
    /// nonzero, i.e. the face lies in the closure of the cell.
    pub fn conforms_to(&self, cell: &CellSignature) -> bool {
        self.0.iter().zip(cell.signs()).all(|(s, c)| *s == Sign::Zero || s == c)
    }

    /// All full sign vectors obtained by replacing each zero by `-` or `+`,
    /// in lexicographic order.
    pub fn expansions(&self) -> Vec<CellSignature> {
        let zeros = self.zeros();
        (0..1usize << zeros.len())
            .map(|mask| {
                let mut signs = self.0.clone();
                for (bit, &pos) in zeros.iter().enumerate() {
                    // highest zero position varies fastest, giving lex order
                    let set = mask >> (zeros.len() - 1 - bit) & 1 == 1;
                    signs[pos] = if set { Sign::Plus } else { Sign::Minus };
                }
                CellSignature(signs)
            })
            .collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Sign vector of a full-dimensional cell: no zero entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSignature(Vec<Sign>);

impl CellSignature {
    pub fn new(signs: Vec<Sign>) -> Option<Self> {
        signs.iter().all(|s| *s != Sign::Zero).then_some(CellSignature(signs))
    }

    pub fn parse(text: &str) -> Option<Self> {
        text.chars().map(Sign::from_char).collect::<Option<Vec<_>>>().and_then(Self::new)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn with_sign(&self, i: usize, sign: Sign) -> CellSignature {
        debug_assert!(sign != Sign::Zero);
        let mut signs = self.0.clone();
        signs[i] = sign;
        CellSignature(signs)
    }

    /// Inserts `sign` at position `i`, lengthening the signature by one.
    pub fn inserted(&self, i: usize, sign: Sign) -> CellSignature {
        debug_assert!(sign != Sign::Zero);
        let mut signs = self.0.clone();
        signs.insert(i, sign);
        CellSignature(signs)
    }

    /// Applies a relabeling: position `perm[i]` of the result takes entry `i`.
    pub fn permuted(&self, perm: &[usize]) -> CellSignature {
        let mut signs = self.0.clone();
        for (i, &p) in perm.iter().enumerate() {
            signs[p] = self.0[i];
        }
        CellSignature(signs)
    }
}

impl fmt::Display for CellSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl fmt::Debug for CellSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for CellSignature {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CellSignature {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CellSignature::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad cell signature {s:?}")))
    }
}
