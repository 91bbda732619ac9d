use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::base::BaseWord;
use crate::ctd::ctd;
use crate::diagram::arrow_diagram;
use crate::error::Result;
use crate::weight::ShiftedWeight;

use super::{s_value, sigma_lambda, witness_base};

/// A dominant weight with tail < longtail.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GapWitness {
    pub weight: ShiftedWeight,
    pub tail: usize,
    pub longtail: usize,
    pub sigma_lambda: BaseWord,
    pub witness_base: BaseWord,
}

impl GapWitness {
    pub fn to_json_line(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            weight: String,
            tail: usize,
            longtail: usize,
            sigma_lambda: &'a BaseWord,
            witness_base: &'a BaseWord,
        }
        let line = Line {
            weight: self.weight.to_string(),
            tail: self.tail,
            longtail: self.longtail,
            sigma_lambda: &self.sigma_lambda,
            witness_base: &self.witness_base,
        };
        serde_json::to_string(&line).expect("plain data serializes")
    }
}

fn examine(lambda: ShiftedWeight) -> Result<Option<GapWitness>> {
    let longtail = arrow_diagram(&lambda)?.max_over().0;
    // tail ≥ 1 whenever the weight is atypical
    if longtail < 2 {
        return Ok(None);
    }
    let sigma = sigma_lambda(&lambda)?;
    let tail = s_value(&ctd(&lambda)?.transport(&lambda, &sigma)?);
    if tail >= longtail {
        return Ok(None);
    }
    let witness_base = witness_base(&lambda)?;
    Ok(Some(GapWitness {
        weight: lambda,
        tail,
        longtail,
        sigma_lambda: sigma,
        witness_base,
    }))
}

/// All dominant weights of gl(m|n) with tail < longtail whose positions fit in
/// a window of width 2·bound, translated so the smallest position is 0.
pub fn search_tail_gap(m: usize, n: usize, bound: u32) -> Vec<GapWitness> {
    search_tail_gap_with_jobs(m, n, bound, 0)
}

/// As [`search_tail_gap`] on a pool of `jobs` threads (0 = rayon default).
pub fn search_tail_gap_with_jobs(m: usize, n: usize, bound: u32, jobs: usize) -> Vec<GapWitness> {
    let width = 2 * bound as i64;
    let eps_sets: Vec<Vec<i64>> = (0..=width).combinations(m).collect();
    let run = || {
        let mut found: Vec<GapWitness> = eps_sets
            .par_iter()
            .flat_map_iter(|eps| {
                let has_zero = eps.first() == Some(&0);
                (0..=width).combinations(n).filter_map(move |del| {
                    if !has_zero && del.first() != Some(&0) {
                        return None;
                    }
                    let lambda = ShiftedWeight::new(
                        eps.iter().rev().copied().collect(),
                        del.iter().map(|p| -p).collect(),
                    );
                    examine(lambda).expect("enumerated weights are dominant")
                })
            })
            .collect();
        found.sort();
        found
    };
    if jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(run)
    }
}
