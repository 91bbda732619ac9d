//! Orthogonal incomparable sets, longtail and tail.

mod dagger;
mod search;

pub use dagger::{is_dagger_diagram, phi, psi, DaggerDiagram};
pub use search::{search_tail_gap, search_tail_gap_with_jobs, GapWitness};

use std::collections::BTreeSet;

use crate::base::{enumerate_bases, BaseWord};
use crate::ctd::ctd;
use crate::diagram::{arrow_diagram, cap_diagram, WeightDiagram};
use crate::error::Result;
use crate::roots::RightOddRoot;
use crate::weight::ShiftedWeight;

/// star(i,j) iff ν_i = -ν_{-j}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityMask {
    pub m: usize,
    pub n: usize,
    pub stars: Vec<Vec<bool>>,
}

impl OrthogonalityMask {
    pub fn starred(&self) -> Vec<RightOddRoot> {
        let mut out = Vec::new();
        for (r, row) in self.stars.iter().enumerate() {
            for (c, &s) in row.iter().enumerate() {
                if s {
                    out.push(RightOddRoot::new(r + 1, c + 1));
                }
            }
        }
        out
    }
}

pub fn orthogonality_mask(nu: &ShiftedWeight) -> OrthogonalityMask {
    let stars = nu
        .eps
        .iter()
        .map(|a| nu.delta.iter().map(|b| a + b == 0).collect())
        .collect();
    OrthogonalityMask {
        m: nu.m(),
        n: nu.n(),
        stars,
    }
}

/// Longest chain strictly increasing in both i and j (an incomparable set).
pub fn longest_chain(cells: &[RightOddRoot]) -> Vec<RightOddRoot> {
    let mut cells = cells.to_vec();
    cells.sort();
    let mut best = vec![1usize; cells.len()];
    let mut prev = vec![usize::MAX; cells.len()];
    for t in 0..cells.len() {
        for u in 0..t {
            if cells[u].i < cells[t].i && cells[u].j < cells[t].j && best[u] + 1 > best[t] {
                best[t] = best[u] + 1;
                prev[t] = u;
            }
        }
    }
    let Some(mut t) = (0..cells.len()).max_by_key(|&t| (best[t], std::cmp::Reverse(t))) else {
        return Vec::new();
    };
    let mut chain = vec![cells[t]];
    while prev[t] != usize::MAX {
        t = prev[t];
        chain.push(cells[t]);
    }
    chain.reverse();
    chain
}

/// s(ν): size of the largest incomparable set of right odd roots orthogonal to ν.
pub fn s_value(nu: &ShiftedWeight) -> usize {
    longest_chain(&orthogonality_mask(nu).starred()).len()
}

/// Hwt(λ): the distinct transported highest weights, sorted.
pub fn hwt(lambda: &ShiftedWeight) -> Result<Vec<ShiftedWeight>> {
    let c = ctd(lambda)?;
    let mut set = BTreeSet::new();
    for sigma in enumerate_bases(lambda.m(), lambda.n()) {
        set.insert(c.transport(lambda, &sigma)?);
    }
    Ok(set.into_iter().collect())
}

pub fn longtail_via_ctd(lambda: &ShiftedWeight) -> Result<usize> {
    Ok(longest_chain(&ctd(lambda)?.ones()).len())
}

pub fn longtail_via_arrows(lambda: &ShiftedWeight) -> Result<usize> {
    Ok(arrow_diagram(lambda)?.max_over().0)
}

pub fn longtail_via_caps(lambda: &ShiftedWeight) -> Result<usize> {
    let caps = cap_diagram(lambda)?;
    Ok(caps
        .caps
        .iter()
        .map(|&(x, _)| caps.over(x))
        .max()
        .unwrap_or(0))
}

pub fn longtail(lambda: &ShiftedWeight) -> Result<usize> {
    longtail_via_arrows(lambda)
}

/// The base stacking the ε's of all arrows over `r` at position r: rows with
/// λ̄_i > r untouched, rows with λ̄_i ≤ r < k_i reflected up to column
/// M_i + r - k_i, rows with k_i ≤ r fully reflected.
pub fn base_stacking_at(lambda: &ShiftedWeight, r: i64) -> Result<BaseWord> {
    let arrows = arrow_diagram(lambda)?;
    let n = lambda.n();
    let e: Vec<usize> = (1..=lambda.m())
        .map(|i| {
            let (a, k) = (lambda.a(i), arrows.k(i));
            if a > r {
                0
            } else if r < k {
                (arrows.big_m(i) as i64 + r - k) as usize
            } else {
                n
            }
        })
        .collect();
    BaseWord::from_row_lengths(&e, n)
}

/// Σ_λ: the base whose transported diagram is Φ(λ).
pub fn sigma_lambda(lambda: &ShiftedWeight) -> Result<BaseWord> {
    let d = phi(lambda)?;
    match d.dagger_position() {
        Some(x) => base_stacking_at(lambda, x),
        None => Ok(BaseWord::distinguished(lambda.m(), lambda.n())),
    }
}

/// λ̄† = λ̄_{Σ_λ}.
pub fn dagger_weight(lambda: &ShiftedWeight) -> Result<ShiftedWeight> {
    ctd(lambda)?.transport(lambda, &sigma_lambda(lambda)?)
}

pub fn tail(lambda: &ShiftedWeight) -> Result<usize> {
    Ok(s_value(&dagger_weight(lambda)?))
}

/// A base attaining longtail through a stack of ×'s.
pub fn witness_base(lambda: &ShiftedWeight) -> Result<BaseWord> {
    match arrow_diagram(lambda)?.max_over().1 {
        Some(r) => base_stacking_at(lambda, r),
        None => Ok(BaseWord::distinguished(lambda.m(), lambda.n())),
    }
}

/// Largest × multiplicity in the diagram of ν.
pub fn max_stack(nu: &ShiftedWeight) -> u32 {
    WeightDiagram::of(nu).max_stack()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ShiftedWeight {
        s.parse().unwrap()
    }

    #[test]
    fn mask_and_s() {
        let nu = w("5 5 4 1 0 | 0 -1 -3 -5 -5");
        let got: Vec<(usize, usize)> = orthogonality_mask(&nu)
            .starred()
            .iter()
            .map(|r| (r.i, r.j))
            .collect();
        assert_eq!(got, vec![(1, 4), (1, 5), (2, 4), (2, 5), (4, 2), (5, 1)]);
        assert_eq!(s_value(&nu), 2);
        assert_eq!(s_value(&w("5 4 3 0 0 | 0 0 -3 -4 -5")), 2);
        assert_eq!(s_value(&w("3 3 3 1 | -3 -3 -3 -4")), 3);
        assert_eq!(s_value(&w("3 2 | 0 -1")), 0);
        assert_eq!(s_value(&w("0|0")), 1);
    }

    #[test]
    fn hwt_examples() {
        assert_eq!(hwt(&w("0|0")).unwrap(), vec![w("0|0"), w("1|-1")]);
        assert_eq!(hwt(&w("3 2 | 0 -1")).unwrap(), vec![w("3 2 | 0 -1")]);
        assert!(hwt(&w("4 3 1 0 | 0 -1 -4 -5")).unwrap().len() <= 70);
    }

    #[test]
    fn longtails() {
        for (s, want) in [
            ("5 4 3 0 -1 | 1 0 -3 -4 -5", 3),
            ("4 3 1 0 | 0 -1 -4 -5", 2),
            ("3 2 1 0 | 0 -2 -3 -4", 3),
            ("3 2 | 0 -1", 0),
        ] {
            let lam = w(s);
            assert_eq!(longtail_via_ctd(&lam).unwrap(), want, "{s}");
            assert_eq!(longtail_via_arrows(&lam).unwrap(), want, "{s}");
            assert_eq!(longtail_via_caps(&lam).unwrap(), want, "{s}");
        }
    }

    #[test]
    fn counterexample() {
        let lam = w("5 4 3 0 -1 | 1 0 -3 -4 -5");
        assert_eq!(sigma_lambda(&lam).unwrap().to_string(), "eeeededddd");
        assert_eq!(dagger_weight(&lam).unwrap(), w("5 4 3 0 0 | 0 0 -3 -4 -5"));
        assert_eq!(tail(&lam).unwrap(), 2);
        let wb = witness_base(&lam).unwrap();
        assert_eq!(wb.incomparable_set().to_string(), "1:3,2:4,3:5");
        let moved = ctd(&lam).unwrap().transport(&lam, &wb).unwrap();
        assert_eq!(moved, w("5 5 5 2 1 | -1 -2 -5 -5 -5"));
        assert_eq!(max_stack(&moved), 3);
    }

    #[test]
    fn other_tails() {
        assert_eq!(
            sigma_lambda(&w("6 4 3 1 | -1 -2 -3 -4"))
                .unwrap()
                .to_string(),
            "edededed"
        );
        assert_eq!(
            dagger_weight(&w("6 4 3 1 | -1 -2 -3 -4")).unwrap(),
            w("6 4 4 4 | -2 -4 -4 -4")
        );
        assert_eq!(tail(&w("3 2 1 0 | 0 -2 -3 -4")).unwrap(), 3);
        assert_eq!(tail(&w("3 2 | 0 -1")).unwrap(), 0);
        assert_eq!(
            sigma_lambda(&w("3 2 | 0 -1")).unwrap(),
            BaseWord::distinguished(2, 2)
        );
    }
}
