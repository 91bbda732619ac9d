use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::WeightDiagram;
use crate::error::Result;
use crate::weight::ShiftedWeight;

/// Caps (×_s, c_s) for s = 1..atypicality, ordered by start.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapDiagram {
    pub caps: Vec<(i64, i64)>,
}

impl CapDiagram {
    /// Caps drawn right to left, each to the first free ∘ on its right.
    pub fn of_diagram(d: &WeightDiagram) -> Self {
        let mut used = HashSet::new();
        let mut caps = Vec::new();
        for x in d.cross_positions().into_iter().rev() {
            let mut q = x + 1;
            while !d.is_empty_at(q) || used.contains(&q) {
                q += 1;
            }
            used.insert(q);
            caps.push((x, q));
        }
        caps.reverse();
        CapDiagram { caps }
    }

    pub fn ends(&self) -> Vec<i64> {
        self.caps.iter().map(|c| c.1).collect()
    }

    /// #{s : ×_s ≤ r < c_s}.
    pub fn over(&self, r: i64) -> usize {
        self.caps.iter().filter(|&&(x, c)| x <= r && r < c).count()
    }
}

pub fn cap_diagram(lambda: &ShiftedWeight) -> Result<CapDiagram> {
    lambda.check_dominant()?;
    Ok(CapDiagram::of_diagram(&WeightDiagram::of(lambda)))
}
