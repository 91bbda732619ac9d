use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::weight::ShiftedWeight;

/// Arrows λ̄_i → k_i with counts M_i. Vectors are indexed by i - 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDiagram {
    pub starts: Vec<i64>,
    pub ends: Vec<i64>,
    pub counts: Vec<usize>,
}

impl ArrowDiagram {
    pub fn m(&self) -> usize {
        self.starts.len()
    }

    /// k_i, 1-based.
    pub fn k(&self, i: usize) -> i64 {
        self.ends[i - 1]
    }

    /// M_i, 1-based.
    pub fn big_m(&self, i: usize) -> usize {
        self.counts[i - 1]
    }

    /// Arrow length k_i - λ̄_i.
    pub fn length(&self, i: usize) -> usize {
        (self.ends[i - 1] - self.starts[i - 1]) as usize
    }

    /// #{i : λ̄_i ≤ r < k_i}.
    pub fn over(&self, r: i64) -> usize {
        self.starts
            .iter()
            .zip(&self.ends)
            .filter(|&(&a, &k)| a <= r && r < k)
            .count()
    }

    /// Maximum of [`ArrowDiagram::over`] and a point where it is attained (the largest start among maximizers).
    pub fn max_over(&self) -> (usize, Option<i64>) {
        let mut best = (0, None);
        for &r in self.starts.iter().rev() {
            let c = self.over(r);
            if c > best.0 || (c == best.0 && c > 0) {
                best = (c, Some(r));
            }
        }
        best
    }
}

/// Draw arrows from the leftmost ε-position rightward, each ending at the
/// first position that holds no δ and is not already an arrow end.
pub fn arrow_diagram(lambda: &ShiftedWeight) -> Result<ArrowDiagram> {
    lambda.check_dominant()?;
    let deltas: Vec<i64> = lambda.delta_positions();
    let blocked: HashSet<i64> = deltas.iter().copied().collect();
    let m = lambda.m();
    let mut used = HashSet::with_capacity(m);
    let mut ends = vec![0; m];
    for i in (0..m).rev() {
        let mut c = lambda.eps[i];
        while blocked.contains(&c) || used.contains(&c) {
            c += 1;
        }
        used.insert(c);
        ends[i] = c;
    }
    let counts = ends
        .iter()
        .map(|&k| deltas.iter().filter(|&&p| p < k).count())
        .collect();
    Ok(ArrowDiagram {
        starts: lambda.eps.clone(),
        ends,
        counts,
    })
}

/// Leftward arrows from the δ-positions: l_j and N_j for j = 1..n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualArrowDiagram {
    pub ends: Vec<i64>,
    pub counts: Vec<usize>,
}

/// Mirror image of [`arrow_diagram`]: computed on (b|a) with positions negated.
pub fn dual_arrow_diagram(lambda: &ShiftedWeight) -> Result<DualArrowDiagram> {
    let mirrored = arrow_diagram(&lambda.mirror())?;
    Ok(DualArrowDiagram {
        ends: mirrored.ends.iter().map(|k| -k).collect(),
        counts: mirrored.counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrows(s: &str) -> ArrowDiagram {
        arrow_diagram(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn golden_arrows() {
        for s in ["4 3 1 0 | 0 -1 -4 -5", "6 4 3 0 | 0 -1 -4 -5"] {
            let a = arrows(s);
            assert_eq!(a.ends, vec![7, 6, 3, 2]);
            assert_eq!(a.counts, vec![4, 4, 2, 2]);
        }
        let a = arrows("5 4 3 0 -1 | 1 0 -3 -4 -5");
        assert_eq!(a.ends, vec![8, 7, 6, 2, 1]);
        assert_eq!(a.counts, vec![5, 5, 5, 2, 2]);
    }

    #[test]
    fn arrow_over_counts() {
        assert_eq!(arrows("5 4 3 0 -1 | 1 0 -3 -4 -5").max_over(), (3, Some(5)));
        assert_eq!(arrows("4 3 1 0 | 0 -1 -4 -5").max_over().0, 2);
        assert_eq!(arrows("3 2 | 0 -1").max_over(), (0, None));
    }

    #[test]
    fn not_dominant() {
        assert!(arrow_diagram(&"1 2 | 0".parse().unwrap()).is_err());
    }

    #[test]
    fn dual_values() {
        let d = dual_arrow_diagram(&"0 | 0".parse().unwrap()).unwrap();
        assert_eq!((d.ends, d.counts), (vec![-1], vec![1]));
        let d = dual_arrow_diagram(&"1 | 0".parse().unwrap()).unwrap();
        assert_eq!((d.ends, d.counts), (vec![0], vec![1]));
        let d = dual_arrow_diagram(&"3 2 |".parse().unwrap()).unwrap();
        assert!(d.ends.is_empty());
    }
}
