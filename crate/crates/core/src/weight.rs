//! ρ-shifted weights of gl(m|n).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{Sign, SignedOddRoot};

/// A weight in ε/δ coordinates: `eps` holds ν_1..ν_m, `delta` holds ν_{-1}..ν_{-n}.
///
/// The ε-coordinate ν_i sits at position ν_i of the weight diagram, the
/// δ-coordinate ν_{-j} at position -ν_{-j}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedWeight {
    pub eps: Vec<i64>,
    pub delta: Vec<i64>,
}

impl ShiftedWeight {
    pub fn new(eps: Vec<i64>, delta: Vec<i64>) -> Self {
        ShiftedWeight { eps, delta }
    }

    /// Build from diagram positions: ε-positions are the ε-coordinates, δ-positions are negated.
    pub fn from_positions(eps_positions: &[i64], delta_positions: &[i64]) -> Self {
        ShiftedWeight {
            eps: eps_positions.to_vec(),
            delta: delta_positions.iter().map(|p| -p).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.eps.len()
    }

    pub fn n(&self) -> usize {
        self.delta.len()
    }

    /// ν_i, 1-based.
    pub fn a(&self, i: usize) -> i64 {
        self.eps[i - 1]
    }

    /// ν_{-j}, 1-based.
    pub fn b(&self, j: usize) -> i64 {
        self.delta[j - 1]
    }

    /// Diagram position of δ_j, i.e. -ν_{-j}.
    pub fn delta_position(&self, j: usize) -> i64 {
        -self.delta[j - 1]
    }

    pub fn delta_positions(&self) -> Vec<i64> {
        self.delta.iter().map(|b| -b).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.check_dominant().is_ok()
    }

    pub fn check_dominant(&self) -> Result<()> {
        for (side, v) in [("eps", &self.eps), ("delta", &self.delta)] {
            for (idx, w) in v.windows(2).enumerate() {
                if w[0] <= w[1] {
                    return Err(Error::NotDominant {
                        side,
                        index: idx + 1,
                        left: w[0],
                        right: w[1],
                    });
                }
            }
        }
        Ok(())
    }

    /// (ν | ε_i - δ_j) = ν_i + ν_{-j}.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.a(i) + self.b(j)
    }

    pub fn is_orthogonal(&self, i: usize, j: usize) -> bool {
        self.pairing(i, j) == 0
    }

    /// ν + sign·(ε_i - δ_j).
    pub fn add_root(&mut self, alpha: SignedOddRoot) {
        let s = match alpha.sign {
            Sign::Pos => 1,
            Sign::Neg => -1,
        };
        self.eps[alpha.root.i - 1] += s;
        self.delta[alpha.root.j - 1] -= s;
    }

    /// Translate every diagram position by `t`.
    pub fn translate(&self, t: i64) -> Self {
        ShiftedWeight {
            eps: self.eps.iter().map(|a| a + t).collect(),
            delta: self.delta.iter().map(|b| b - t).collect(),
        }
    }

    /// Smallest diagram position, if any.
    pub fn min_position(&self) -> Option<i64> {
        self.eps
            .iter()
            .copied()
            .chain(self.delta.iter().map(|b| -b))
            .min()
    }

    pub fn max_position(&self) -> Option<i64> {
        self.eps
            .iter()
            .copied()
            .chain(self.delta.iter().map(|b| -b))
            .max()
    }

    /// Translate so that the smallest position is 0.
    pub fn canonical(&self) -> Self {
        match self.min_position() {
            Some(p) => self.translate(-p),
            None => self.clone(),
        }
    }

    /// Exchange the roles of ε and δ: the weight (b|a) of gl(n|m), whose
    /// diagram is the mirror image (p -> -p) of this one.
    pub fn mirror(&self) -> Self {
        ShiftedWeight {
            eps: self.delta.clone(),
            delta: self.eps.clone(),
        }
    }
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for ShiftedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = join(&self.eps);
        let r = join(&self.delta);
        match (l.is_empty(), r.is_empty()) {
            (true, true) => write!(f, "|"),
            (true, false) => write!(f, "| {r}"),
            (false, true) => write!(f, "{l} |"),
            (false, false) => write!(f, "{l} | {r}"),
        }
    }
}

fn parse_side(s: &str, side: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(idx, t)| {
            let t = t.replace('\u{2212}', "-");
            t.parse::<i64>().map_err(|_| {
                Error::WeightParse(format!(
                    "{side} coordinate {} is not an integer: {t:?}",
                    idx + 1
                ))
            })
        })
        .collect()
}

impl FromStr for ShiftedWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            t = inner;
        }
        let mut parts = t.split('|');
        let (l, r) = match (parts.next(), parts.next(), parts.next()) {
            (Some(l), Some(r), None) => (l, r),
            _ => {
                return Err(Error::WeightParse(
                    "expected exactly one '|' separating eps and delta coordinates".into(),
                ))
            }
        };
        Ok(ShiftedWeight {
            eps: parse_side(l, "eps")?,
            delta: parse_side(r, "delta")?,
        })
    }
}

/// Integral ρ for gl(m|n): the Weyl vector of the distinguished base shifted by
/// r(1..1|-1..-1) with r = s/2 and s = (m+n+1) mod 2.
pub fn rho(m: usize, n: usize) -> ShiftedWeight {
    let (mi, ni) = (m as i64, n as i64);
    let s = (mi + ni + 1).rem_euclid(2);
    let eps = (1..=mi).map(|i| (mi - ni + 1 - 2 * i + s) / 2).collect();
    let delta = (1..=ni).map(|j| (mi + ni + 1 - 2 * j - s) / 2).collect();
    ShiftedWeight { eps, delta }
}

/// Dominant weights of gl(m|n) with every diagram position in [0, width] and
/// smallest position 0, in lexicographic order of (ε-positions, δ-positions).
pub fn canonical_dominant_weights(m: usize, n: usize, width: i64) -> Vec<ShiftedWeight> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for eps in (0..=width).combinations(m) {
        for del in (0..=width).combinations(n) {
            if m + n > 0 && eps.first() != Some(&0) && del.first() != Some(&0) {
                continue;
            }
            out.push(ShiftedWeight::new(
                eps.iter().rev().copied().collect(),
                del.iter().map(|p| -p).collect(),
            ));
        }
    }
    out
}
