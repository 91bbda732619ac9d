//! Bases of 𝕊 as words over {ε, δ}.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{IncomparableSet, RightOddRoot, Sign, SignedOddRoot};
use crate::weight::ShiftedWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    Eps,
    Delta,
}

/// A word with m ε's and n δ's; the i-th ε from the left is ε_i, the j-th δ is δ_j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseWord {
    letters: Vec<Letter>,
    m: usize,
    n: usize,
}

impl BaseWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        let m = letters.iter().filter(|&&l| l == Letter::Eps).count();
        let n = letters.len() - m;
        BaseWord { letters, m, n }
    }

    /// ε^m δ^n.
    pub fn distinguished(m: usize, n: usize) -> Self {
        let mut letters = vec![Letter::Eps; m];
        letters.extend(std::iter::repeat_n(Letter::Delta, n));
        BaseWord { letters, m, n }
    }

    /// δ^n ε^m.
    pub fn anti(m: usize, n: usize) -> Self {
        let mut letters = vec![Letter::Delta; n];
        letters.extend(std::iter::repeat_n(Letter::Eps, m));
        BaseWord { letters, m, n }
    }

    /// Σ^i = ε_1..ε_i δ^n ε_{i+1}..ε_m.
    pub fn walk_base(m: usize, n: usize, i: usize) -> Self {
        let mut e = vec![0; i];
        e.extend(std::iter::repeat_n(n, m - i));
        BaseWord::from_row_lengths(&e, n).expect("walk base row lengths are monotone")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn check_dims(&self, w: &ShiftedWeight) -> Result<()> {
        if w.m() != self.m || w.n() != self.n {
            return Err(Error::DimensionMismatch {
                m: w.m(),
                n: w.n(),
                bm: self.m,
                bn: self.n,
            });
        }
        Ok(())
    }

    /// e(i) for i = 1..m: the number of δ's left of ε_i.
    pub fn row_lengths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.m);
        let mut deltas = 0;
        for &l in &self.letters {
            match l {
                Letter::Eps => out.push(deltas),
                Letter::Delta => deltas += 1,
            }
        }
        out
    }

    /// Inverse of [`BaseWord::row_lengths`]; `e` must be non-decreasing with entries ≤ n.
    pub fn from_row_lengths(e: &[usize], n: usize) -> Result<Self> {
        if let Some(w) = e.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::InvalidRowLengths(format!("{} > {}", w[0], w[1])));
        }
        if let Some(&x) = e.iter().find(|&&x| x > n) {
            return Err(Error::InvalidRowLengths(format!("{x} exceeds n = {n}")));
        }
        let mut letters = Vec::with_capacity(e.len() + n);
        let mut placed = 0;
        for &ei in e {
            while placed < ei {
                letters.push(Letter::Delta);
                placed += 1;
            }
            letters.push(Letter::Eps);
        }
        letters.extend(std::iter::repeat_n(Letter::Delta, n - placed));
        Ok(BaseWord {
            letters,
            m: e.len(),
            n,
        })
    }

    /// Σ ∩ 𝓡: the pairs (i,j) with ε_i immediately left of δ_j.
    pub fn incomparable_set(&self) -> IncomparableSet {
        let mut roots = Vec::new();
        let (mut i, mut j) = (0, 0);
        for w in self.letters.windows(2) {
            match w[0] {
                Letter::Eps => i += 1,
                Letter::Delta => j += 1,
            }
            if w == [Letter::Eps, Letter::Delta] {
                roots.push(RightOddRoot::new(i, j + 1));
            }
        }
        IncomparableSet::new(roots).expect("adjacent pairs are incomparable")
    }

    /// The unique base with Σ ∩ 𝓡 = S.
    pub fn from_incomparable_set(s: &IncomparableSet, m: usize, n: usize) -> Result<Self> {
        s.check_range(m, n)?;
        let mut e = vec![n; m];
        let mut lo = 0;
        for r in s.roots() {
            for x in &mut e[lo..r.i] {
                *x = r.j - 1;
            }
            lo = r.i;
        }
        BaseWord::from_row_lengths(&e, n)
    }

    /// B_Σ: row i holds (i,1)..(i,e(i)). Sorted lexicographically.
    pub fn b_sigma(&self) -> Vec<RightOddRoot> {
        self.row_lengths()
            .iter()
            .enumerate()
            .flat_map(|(r, &e)| (1..=e).map(move |j| RightOddRoot::new(r + 1, j)))
            .collect()
    }

    pub fn in_b_sigma(&self, r: RightOddRoot) -> bool {
        self.row_lengths()[r.i - 1] >= r.j
    }

    /// B_Σ in column-major order: j = 1..n, and within a column i from m down.
    pub fn reflection_sequence(&self) -> Vec<RightOddRoot> {
        let e = self.row_lengths();
        let mut out = Vec::new();
        for j in 1..=self.n {
            for i in (1..=self.m).rev() {
                if e[i - 1] >= j {
                    out.push(RightOddRoot::new(i, j));
                }
            }
        }
        out
    }

    fn eps_index(&self, i: usize) -> Option<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::Eps)
            .nth(i.checked_sub(1)?)
            .map(|(p, _)| p)
    }

    fn delta_index(&self, j: usize) -> Option<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::Delta)
            .nth(j.checked_sub(1)?)
            .map(|(p, _)| p)
    }

    /// Whether α is a simple root of this base.
    pub fn is_simple(&self, alpha: SignedOddRoot) -> bool {
        let (Some(pe), Some(pd)) = (self.eps_index(alpha.root.i), self.delta_index(alpha.root.j))
        else {
            return false;
        };
        match alpha.sign {
            Sign::Pos => pd == pe + 1,
            Sign::Neg => pe == pd + 1,
        }
    }

    /// r_α(Σ): swap ε_i and δ_j.
    pub fn reflect(&self, alpha: SignedOddRoot) -> Result<Self> {
        alpha.root.check_range(self.m, self.n)?;
        if !self.is_simple(alpha) {
            return Err(Error::RootNotSimpleInBase(
                alpha.to_string(),
                self.to_string(),
            ));
        }
        let pe = self.eps_index(alpha.root.i).expect("range checked");
        let pd = self.delta_index(alpha.root.j).expect("range checked");
        let mut letters = self.letters.clone();
        letters.swap(pe, pd);
        Ok(BaseWord {
            letters,
            m: self.m,
            n: self.n,
        })
    }

    /// Human-readable form with exponents, e.g. ε⁴δεδ⁴.
    pub fn pretty(&self) -> String {
        const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
        let mut out = String::new();
        let mut idx = 0;
        while idx < self.letters.len() {
            let l = self.letters[idx];
            let run = self.letters[idx..].iter().take_while(|&&x| x == l).count();
            out.push(if l == Letter::Eps { 'ε' } else { 'δ' });
            if run > 1 {
                out.extend(
                    run.to_string()
                        .chars()
                        .map(|c| SUP[c.to_digit(10).unwrap() as usize]),
                );
            }
            idx += run;
        }
        out
    }
}

impl fmt::Display for BaseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(if *l == Letter::Eps { "e" } else { "d" })?;
        }
        Ok(())
    }
}

impl FromStr for BaseWord {
    type Err = Error;

    /// Accepts `e`/`d` (or `ε`/`δ`); whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (index, c) in s.chars().filter(|c| !c.is_whitespace()).enumerate() {
            letters.push(match c {
                'e' | 'E' | 'ε' => Letter::Eps,
                'd' | 'D' | 'δ' => Letter::Delta,
                letter => return Err(Error::WordParse { index, letter }),
            });
        }
        Ok(BaseWord::new(letters))
    }
}

impl Serialize for BaseWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BaseWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All words with m ε's and n δ's, in lexicographic order with ε < δ.
pub fn enumerate_bases(m: usize, n: usize) -> BaseIter {
    BaseIter {
        next: Some(BaseWord::distinguished(m, n).letters),
        m,
        n,
    }
}

pub struct BaseIter {
    next: Option<Vec<Letter>>,
    m: usize,
    n: usize,
}

impl Iterator for BaseIter {
    type Item = BaseWord;

    fn next(&mut self) -> Option<BaseWord> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        // next permutation: rightmost ε followed somewhere by a δ
        if let Some(p) = (0..succ.len().saturating_sub(1))
            .rev()
            .find(|&p| succ[p] < succ[p + 1])
        {
            let q = (p + 1..succ.len())
                .rev()
                .find(|&q| succ[q] > succ[p])
                .unwrap();
            succ.swap(p, q);
            succ[p + 1..].reverse();
            self.next = Some(succ);
        }
        Some(BaseWord {
            letters: cur,
            m: self.m,
            n: self.n,
        })
    }
}

pub fn incomparable_set_of_base(sigma: &BaseWord) -> IncomparableSet {
    sigma.incomparable_set()
}

pub fn base_from_incomparable_set(s: &IncomparableSet, m: usize, n: usize) -> Result<BaseWord> {
    BaseWord::from_incomparable_set(s, m, n)
}

pub fn b_sigma(sigma: &BaseWord) -> Vec<RightOddRoot> {
    sigma.b_sigma()
}

pub fn reflection_sequence(sigma: &BaseWord) -> Vec<RightOddRoot> {
    sigma.reflection_sequence()
}

pub fn reflect_base(sigma: &BaseWord, alpha: SignedOddRoot) -> Result<BaseWord> {
    sigma.reflect(alpha)
}

/// Highest weight change under r_α: ν + α if (ν | α) = 0, else ν.
pub fn reflect_shifted_weight(nu: &ShiftedWeight, alpha: SignedOddRoot) -> Result<ShiftedWeight> {
    alpha.root.check_range(nu.m(), nu.n())?;
    let mut out = nu.clone();
    if nu.is_orthogonal(alpha.root.i, alpha.root.j) {
        out.add_root(alpha);
    }
    Ok(out)
}

pub fn validate_dominant(nu: &ShiftedWeight) -> bool {
    nu.is_dominant()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BaseWord {
        s.parse().unwrap()
    }

    fn set(s: &str) -> IncomparableSet {
        s.parse().unwrap()
    }

    #[test]
    fn adjacency_sets() {
        assert_eq!(b("eeeddd").incomparable_set(), set("3:1"));
        assert_eq!(b("ededdeed").incomparable_set(), set("1:1,2:2,4:4"));
        assert!(b("dddeee").incomparable_set().is_empty());
    }

    #[test]
    fn from_sets() {
        assert_eq!(
            BaseWord::from_incomparable_set(&set("2:1,3:3"), 4, 4).unwrap(),
            b("eeddedde")
        );
        assert_eq!(
            BaseWord::from_incomparable_set(&set("1:1,2:2,4:4"), 4, 4).unwrap(),
            b("ededdeed")
        );
        assert_eq!(
            BaseWord::from_incomparable_set(&set(""), 2, 2).unwrap(),
            b("ddee")
        );
        assert!(BaseWord::from_incomparable_set(&set("5:1"), 4, 4).is_err());
    }

    #[test]
    fn roundtrip_exhaustive_small() {
        for m in 0..=4 {
            for n in 0..=4 {
                for w in enumerate_bases(m, n) {
                    let s = w.incomparable_set();
                    assert_eq!(BaseWord::from_incomparable_set(&s, m, n).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn b_sigma_examples() {
        assert!(BaseWord::distinguished(3, 2).b_sigma().is_empty());
        assert_eq!(BaseWord::anti(3, 2).b_sigma().len(), 6);
        let got = b("ededdeed").b_sigma();
        let want: Vec<RightOddRoot> = [(2, 1), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3)]
            .iter()
            .map(|&(i, j)| RightOddRoot::new(i, j))
            .collect();
        assert_eq!(got, want);
        assert_eq!(b("eeeededddd").b_sigma(), vec![RightOddRoot::new(5, 1)]);
    }

    #[test]
    fn reflection_sequence_replays() {
        let seq = b("edededed").reflection_sequence();
        let want: Vec<(usize, usize)> = vec![(4, 1), (3, 1), (2, 1), (4, 2), (3, 2), (4, 3)];
        assert_eq!(seq.iter().map(|r| (r.i, r.j)).collect::<Vec<_>>(), want);
        for m in 0..=4 {
            for n in 0..=4 {
                for w in enumerate_bases(m, n) {
                    let mut cur = BaseWord::distinguished(m, n);
                    for r in w.reflection_sequence() {
                        cur = cur
                            .reflect(SignedOddRoot {
                                root: r,
                                sign: Sign::Pos,
                            })
                            .unwrap();
                    }
                    assert_eq!(cur, w);
                }
            }
        }
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(
            b("eedd").reflect(SignedOddRoot::pos(2, 1)).unwrap(),
            b("eded")
        );
        assert_eq!(
            b("eded").reflect(SignedOddRoot::neg(2, 1)).unwrap(),
            b("eedd")
        );
        assert_eq!(
            b("eeeeeddddd").reflect(SignedOddRoot::pos(5, 1)).unwrap(),
            b("eeeededddd")
        );
        assert!(matches!(
            b("eedd").reflect(SignedOddRoot::pos(1, 1)),
            Err(Error::RootNotSimpleInBase(..))
        ));
    }

    #[test]
    fn enumeration() {
        let v: Vec<String> = enumerate_bases(1, 1).map(|w| w.to_string()).collect();
        assert_eq!(v, ["ed", "de"]);
        assert_eq!(enumerate_bases(2, 2).count(), 6);
        assert_eq!(enumerate_bases(5, 5).count(), 252);
        assert_eq!(enumerate_bases(0, 0).count(), 1);
        let v: Vec<BaseWord> = enumerate_bases(3, 3).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn weight_reflection() {
        let w = |s: &str| s.parse::<ShiftedWeight>().unwrap();
        assert_eq!(
            reflect_shifted_weight(&w("0|0"), SignedOddRoot::pos(1, 1)).unwrap(),
            w("1|-1")
        );
        assert_eq!(
            reflect_shifted_weight(&w("1|0"), SignedOddRoot::pos(1, 1)).unwrap(),
            w("1|0")
        );
        assert_eq!(
            reflect_shifted_weight(&w("5 4 3 0 -1 | 1 0 -3 -4 -5"), SignedOddRoot::pos(5, 1))
                .unwrap(),
            w("5 4 3 0 0 | 0 0 -3 -4 -5")
        );
    }

    #[test]
    fn pretty_form() {
        assert_eq!(b("eeeededddd").pretty(), "ε⁴δεδ⁴");
        assert_eq!(b("eddde").pretty(), "εδ³ε");
    }
}
