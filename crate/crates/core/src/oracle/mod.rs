//! Brute-force reference implementations. These only use bases, single odd
//! reflections and s-values, never the arrow/CTD closed forms.

mod suite;

pub use suite::{
    run_verification_suite, verify_dagger_roundtrips, verify_weight, Mismatch, OracleReport,
};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::base::{enumerate_bases, reflect_shifted_weight, BaseWord};
use crate::ctd::Ctd;
use crate::error::{Error, Result};
use crate::roots::{IncomparableSet, RightOddRoot, SignedOddRoot};
use crate::tails::{orthogonality_mask, s_value};
use crate::weight::ShiftedWeight;

/// Apply +α for each α of `order`, starting at the distinguished base. Every
/// root must be simple when it is applied. Returns the final weight and base.
pub fn transport_along(
    lambda: &ShiftedWeight,
    order: &[RightOddRoot],
) -> Result<(ShiftedWeight, BaseWord)> {
    let mut sigma = BaseWord::distinguished(lambda.m(), lambda.n());
    let mut nu = lambda.clone();
    for &r in order {
        let alpha = SignedOddRoot::pos(r.i, r.j);
        sigma = sigma.reflect(alpha)?;
        nu = reflect_shifted_weight(&nu, alpha)?;
    }
    Ok((nu, sigma))
}

/// λ̄_Σ by folding single reflections over the column-major sequence of B_Σ.
pub fn oracle_shifted_weight(lambda: &ShiftedWeight, sigma: &BaseWord) -> Result<ShiftedWeight> {
    lambda.check_dominant()?;
    sigma.check_dims(lambda)?;
    let (nu, reached) = transport_along(lambda, &sigma.reflection_sequence())?;
    debug_assert_eq!(&reached, sigma);
    Ok(nu)
}

/// A uniformly random valid ordering of B_Σ: at each step pick among the
/// not-yet-applied roots of B_Σ that are simple in the current base.
pub fn random_valid_order<R: Rng>(sigma: &BaseWord, rng: &mut R) -> Vec<RightOddRoot> {
    let mut remaining = sigma.b_sigma();
    let mut cur = BaseWord::distinguished(sigma.m(), sigma.n());
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let simple: Vec<usize> = (0..remaining.len())
            .filter(|&t| cur.is_simple(SignedOddRoot::pos(remaining[t].i, remaining[t].j)))
            .collect();
        let &t = simple
            .choose(rng)
            .expect("some root of B_Σ is always simple");
        let r = remaining.swap_remove(t);
        cur = cur
            .reflect(SignedOddRoot::pos(r.i, r.j))
            .expect("chosen root is simple");
        order.push(r);
    }
    order
}

/// bit(i,j): does r_{ε_i - δ_j} change the weight at the base with Σ ∩ 𝓡 = {(i,j)}?
pub fn oracle_ctd_grid(lambda: &ShiftedWeight) -> Result<Vec<Vec<bool>>> {
    lambda.check_dominant()?;
    let (m, n) = (lambda.m(), lambda.n());
    let mut grid = vec![vec![false; n]; m];
    for i in 1..=m {
        for j in 1..=n {
            let single = IncomparableSet::new([RightOddRoot::new(i, j)])?;
            let sigma = BaseWord::from_incomparable_set(&single, m, n)?;
            grid[i - 1][j - 1] = oracle_shifted_weight(lambda, &sigma)?.is_orthogonal(i, j);
        }
    }
    Ok(grid)
}

pub fn oracle_ctd(lambda: &ShiftedWeight) -> Result<Ctd> {
    Ctd::from_grid(lambda.m(), lambda.n(), &oracle_ctd_grid(lambda)?)
}

fn binomial(a: usize, b: usize) -> u128 {
    (0..b as u128).fold(1, |acc, t| acc * (a as u128 - t) / (t + 1))
}

/// max over all bases of s(λ̄_Σ), with λ̄_Σ from [`oracle_shifted_weight`].
pub fn oracle_longtail(lambda: &ShiftedWeight) -> Result<usize> {
    lambda.check_dominant()?;
    let (m, n) = (lambda.m(), lambda.n());
    if binomial(m + n, n) > binomial(24, 12) {
        return Err(Error::EnumerationTooLarge(m + n, n));
    }
    let mut best = 0;
    for sigma in enumerate_bases(m, n) {
        best = best.max(s_value(&oracle_shifted_weight(lambda, &sigma)?));
    }
    Ok(best)
}

pub const MAX_ORACLE_STARS: usize = 20;

/// Largest pairwise incomparable set of starred cells, by subset enumeration.
pub fn oracle_s_value(nu: &ShiftedWeight) -> Result<usize> {
    let stars = orthogonality_mask(nu).starred();
    let k = stars.len();
    if k > MAX_ORACLE_STARS {
        return Err(Error::TooManyStars(k, MAX_ORACLE_STARS));
    }
    let mut compatible = vec![0u32; k];
    for a in 0..k {
        for b in 0..k {
            if a != b && stars[a].incomparable(stars[b]) {
                compatible[a] |= 1 << b;
            }
        }
    }
    let mut best = 0;
    for mask in 0u32..(1u32 << k) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let ok = (0..k).filter(|&a| mask >> a & 1 == 1).all(|a| {
            let others = mask & !(1 << a);
            others & !compatible[a] == 0
        });
        if ok {
            best = size;
        }
    }
    Ok(best)
}
