use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{arrow_diagram, ArrowDiagram, WeightDiagram};
use crate::error::Result;
use crate::weight::ShiftedWeight;

/// A × followed along its arrow through '>' endpoints until an arrow lands on ∘.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCircSequence {
    /// Row indices i_1 > i_2 > ... > i_l.
    pub rows: Vec<usize>,
    pub start: i64,
    pub end: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub start: i64,
    pub end: i64,
}

impl Interval {
    pub fn contains(&self, p: i64) -> bool {
        self.start <= p && p <= self.end
    }
}

pub(crate) fn sequences_from(
    lambda: &ShiftedWeight,
    arrows: &ArrowDiagram,
) -> Vec<CrossCircSequence> {
    let d = WeightDiagram::of(lambda);
    let row_at: HashMap<i64, usize> = lambda
        .eps
        .iter()
        .enumerate()
        .map(|(r, &a)| (a, r + 1))
        .collect();
    let mut out = Vec::new();
    for (p, c) in d.iter() {
        if c.crosses == 0 {
            continue;
        }
        let mut i = row_at[&p];
        let mut rows = vec![i];
        loop {
            let k = arrows.k(i);
            if d.cell(k).is_empty() {
                out.push(CrossCircSequence {
                    rows,
                    start: p,
                    end: k,
                });
                break;
            }
            i = row_at[&k];
            rows.push(i);
        }
    }
    out
}

/// One sequence per ×, in increasing order of the × position.
pub fn cross_circ_sequences(lambda: &ShiftedWeight) -> Result<Vec<CrossCircSequence>> {
    let arrows = arrow_diagram(lambda)?;
    Ok(sequences_from(lambda, &arrows))
}

pub(crate) fn merge_segments(seqs: &[CrossCircSequence]) -> Vec<Interval> {
    let mut segs: Vec<(i64, i64)> = seqs.iter().map(|s| (s.start, s.end)).collect();
    segs.sort_unstable();
    let mut out: Vec<Interval> = Vec::new();
    for (s, e) in segs {
        match out.last_mut() {
            Some(last) if s <= last.end => last.end = last.end.max(e),
            _ => out.push(Interval { start: s, end: e }),
        }
    }
    out
}

/// Connected components of the (×–∘) sequence segments, left to right.
pub fn intervals(lambda: &ShiftedWeight) -> Result<Vec<Interval>> {
    Ok(merge_segments(&cross_circ_sequences(lambda)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ShiftedWeight {
        s.parse().unwrap()
    }

    #[test]
    fn sequences_follow_gt_endpoints() {
        let s = cross_circ_sequences(&w("4 3 1 0 | 0 -1 -4 -5")).unwrap();
        let got: Vec<(Vec<usize>, i64, i64)> =
            s.into_iter().map(|q| (q.rows, q.start, q.end)).collect();
        assert_eq!(
            got,
            vec![(vec![4], 0, 2), (vec![3, 2], 1, 6), (vec![1], 4, 7)]
        );
        let s = cross_circ_sequences(&w("0|0")).unwrap();
        assert_eq!((s[0].rows.clone(), s[0].start, s[0].end), (vec![1], 0, 1));
        assert!(cross_circ_sequences(&w("3 2 | 0 -1")).unwrap().is_empty());
    }

    #[test]
    fn interval_examples() {
        let iv = |s: &str| -> Vec<(i64, i64)> {
            intervals(&w(s))
                .unwrap()
                .into_iter()
                .map(|i| (i.start, i.end))
                .collect()
        };
        assert_eq!(iv("0|0"), vec![(0, 1)]);
        assert_eq!(iv("6 5 4 3 0 | 0 -1 -4 -6"), vec![(0, 2), (4, 8)]);
        assert!(iv("3 2 | 0 -1").is_empty());
    }
}
