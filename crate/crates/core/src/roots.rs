use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The right odd root ε_i - δ_j, 1-based.
///
/// The derived `Ord` is lexicographic and only used for storage; the root
/// order is [`RightOddRoot::le`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RightOddRoot {
    pub i: usize,
    pub j: usize,
}

impl RightOddRoot {
    pub fn new(i: usize, j: usize) -> Self {
        RightOddRoot { i, j }
    }

    /// (i,j) ≤ (i',j') iff i ≥ i' and j ≤ j'.
    pub fn le(self, other: RightOddRoot) -> bool {
        self.i >= other.i && self.j <= other.j
    }

    pub fn lt(self, other: RightOddRoot) -> bool {
        self != other && self.le(other)
    }

    pub fn incomparable(self, other: RightOddRoot) -> bool {
        (self.i < other.i && self.j < other.j) || (self.i > other.i && self.j > other.j)
    }

    pub fn check_range(self, m: usize, n: usize) -> Result<()> {
        if self.i == 0 || self.i > m || self.j == 0 || self.j > n {
            return Err(Error::RootOutOfRange {
                i: self.i,
                j: self.j,
                m,
                n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for RightOddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// ±(ε_i - δ_j).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedOddRoot {
    pub root: RightOddRoot,
    pub sign: Sign,
}

impl SignedOddRoot {
    pub fn pos(i: usize, j: usize) -> Self {
        SignedOddRoot {
            root: RightOddRoot::new(i, j),
            sign: Sign::Pos,
        }
    }

    pub fn neg(i: usize, j: usize) -> Self {
        SignedOddRoot {
            root: RightOddRoot::new(i, j),
            sign: Sign::Neg,
        }
    }

    pub fn negate(self) -> Self {
        SignedOddRoot {
            root: self.root,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for SignedOddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Pos { '+' } else { '-' };
        write!(f, "{s}({},{})", self.root.i, self.root.j)
    }
}

/// A pairwise incomparable set of right odd roots, kept sorted by `i`
/// (hence with strictly increasing `j`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IncomparableSet {
    roots: Vec<RightOddRoot>,
}

impl IncomparableSet {
    pub fn new(roots: impl IntoIterator<Item = RightOddRoot>) -> Result<Self> {
        let mut roots: Vec<RightOddRoot> = roots.into_iter().collect();
        roots.sort();
        roots.dedup();
        for w in roots.windows(2) {
            if !w[0].incomparable(w[1]) {
                return Err(Error::NotIncomparable(w[0].i, w[0].j, w[1].i, w[1].j));
            }
        }
        Ok(IncomparableSet { roots })
    }

    pub fn empty() -> Self {
        IncomparableSet::default()
    }

    pub fn roots(&self) -> &[RightOddRoot] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: RightOddRoot) -> bool {
        self.roots.binary_search(&r).is_ok()
    }

    pub fn check_range(&self, m: usize, n: usize) -> Result<()> {
        self.roots.iter().try_for_each(|r| r.check_range(m, n))
    }
}

impl fmt::Display for IncomparableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for IncomparableSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut roots = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (i, j) = tok
                .split_once(':')
                .ok_or_else(|| Error::RootSetParse(format!("expected i:j, got {tok:?}")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::RootSetParse(format!("bad index in {tok:?}")))
            };
            roots.push(RightOddRoot::new(parse(i)?, parse(j)?));
        }
        IncomparableSet::new(roots)
    }
}

/// ‖S‖: replace each root of an iso-set by its positive form.
pub fn positive_normal_form(s: &[SignedOddRoot]) -> Result<BTreeSet<RightOddRoot>> {
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    let mut out = BTreeSet::new();
    for a in s {
        if !rows.insert(a.root.i) || !cols.insert(a.root.j) {
            return Err(Error::NotIsoSet(format!(
                "{a} shares a row or column with another root"
            )));
        }
        out.insert(a.root);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_incomparability() {
        let r = RightOddRoot::new;
        assert!(r(3, 1).le(r(1, 2)));
        assert!(!r(1, 2).le(r(3, 1)));
        assert!(r(1, 1).incomparable(r(2, 2)));
        assert!(!r(1, 1).incomparable(r(1, 4)));
    }

    #[test]
    fn set_validation() {
        assert!("1:1,2:2,4:4".parse::<IncomparableSet>().is_ok());
        assert!(matches!(
            "1:1,1:4".parse::<IncomparableSet>(),
            Err(Error::NotIncomparable(1, 1, 1, 4))
        ));
        assert!("".parse::<IncomparableSet>().unwrap().is_empty());
        assert_eq!(
            "2:2, 1:1".parse::<IncomparableSet>().unwrap().to_string(),
            "1:1,2:2"
        );
    }

    #[test]
    fn normal_form() {
        let pnf =
            positive_normal_form(&[SignedOddRoot::pos(1, 1), SignedOddRoot::pos(2, 2)]).unwrap();
        assert_eq!(pnf.len(), 2);
        let pnf = positive_normal_form(&[SignedOddRoot::neg(2, 1)]).unwrap();
        assert!(pnf.contains(&RightOddRoot::new(2, 1)));
        let pnf =
            positive_normal_form(&[SignedOddRoot::pos(2, 1), SignedOddRoot::pos(1, 2)]).unwrap();
        assert_eq!(pnf.len(), 2);
        assert!(
            positive_normal_form(&[SignedOddRoot::pos(1, 1), SignedOddRoot::neg(1, 1)]).is_err()
        );
        assert!(
            positive_normal_form(&[SignedOddRoot::pos(1, 1), SignedOddRoot::pos(1, 2)]).is_err()
        );
    }
}
