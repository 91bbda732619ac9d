//! Atom decomposition: the coordinates whose arrows tile one interval.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{arrow_diagram, intervals, Interval};
use crate::error::{Error, Result};
use crate::weight::ShiftedWeight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    /// Positive indices i (ascending).
    pub rows: Vec<usize>,
    /// Negative indices, stored as j for -j (ascending).
    pub cols: Vec<usize>,
    pub segment: Interval,
}

impl Atom {
    /// Index set as signed integers: rows, then -j for each column.
    pub fn indices(&self) -> Vec<i64> {
        self.rows
            .iter()
            .map(|&i| i as i64)
            .chain(self.cols.iter().map(|&j| -(j as i64)))
            .collect()
    }

    pub fn contains_root(&self, i: usize, j: usize) -> bool {
        self.rows.binary_search(&i).is_ok() && self.cols.binary_search(&j).is_ok()
    }

    /// The sub-weight on this atom's coordinates.
    pub fn weight(&self, lambda: &ShiftedWeight) -> ShiftedWeight {
        ShiftedWeight::new(
            self.rows.iter().map(|&i| lambda.a(i)).collect(),
            self.cols.iter().map(|&j| lambda.b(j)).collect(),
        )
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomDecomposition {
    /// Ordered left to right by segment.
    pub atoms: Vec<Atom>,
}

impl AtomDecomposition {
    /// Ordered by increasing row indices (right to left on the line).
    pub fn by_row_index(&self) -> Vec<&Atom> {
        self.atoms.iter().rev().collect()
    }

    pub fn atom_of_root(&self, i: usize, j: usize) -> Option<&Atom> {
        self.atoms.iter().find(|a| a.contains_root(i, j))
    }
}

pub fn atom_index_sets(lambda: &ShiftedWeight) -> Result<AtomDecomposition> {
    let arrows = arrow_diagram(lambda)?;
    let segments = intervals(lambda)?;
    let atoms = segments
        .into_iter()
        .map(|seg| Atom {
            rows: (1..=lambda.m())
                .filter(|&i| {
                    seg.start <= lambda.a(i) && arrows.k(i) <= seg.end && arrows.length(i) > 0
                })
                .collect(),
            cols: (1..=lambda.n())
                .filter(|&j| seg.contains(lambda.delta_position(j)))
                .collect(),
            segment: seg,
        })
        .collect();
    Ok(AtomDecomposition { atoms })
}

/// λ^A for an atom index set A, given as signed indices in any order.
pub fn atom_weight(lambda: &ShiftedWeight, indices: &[i64]) -> Result<ShiftedWeight> {
    let mut want = indices.to_vec();
    want.sort_unstable();
    for atom in atom_index_sets(lambda)?.atoms {
        let mut have = atom.indices();
        have.sort_unstable();
        if have == want {
            return Ok(atom.weight(lambda));
        }
    }
    Err(Error::InvalidAtomIndexSet)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ShiftedWeight {
        s.parse().unwrap()
    }

    #[test]
    fn two_atoms() {
        let lam = w("6 5 4 3 0 | 0 -1 -4 -6");
        let dec = atom_index_sets(&lam).unwrap();
        let sets: Vec<String> = dec.atoms.iter().map(|a| a.to_string()).collect();
        assert_eq!(sets, ["{5,-1,-2}", "{1,2,3,-3,-4}"]);
        assert_eq!(atom_weight(&lam, &[5, -1, -2]).unwrap(), w("0 | 0 -1"));
        assert_eq!(
            atom_weight(&lam, &[-4, 1, 2, 3, -3]).unwrap(),
            w("6 5 4 | -4 -6")
        );
        assert_eq!(atom_weight(&lam, &[4]), Err(Error::InvalidAtomIndexSet));
        assert_eq!(dec.by_row_index()[0].rows, vec![1, 2, 3]);
    }

    #[test]
    fn small_atoms() {
        let dec = atom_index_sets(&w("0|0")).unwrap();
        assert_eq!(dec.atoms.len(), 1);
        assert_eq!(dec.atoms[0].indices(), vec![1, -1]);
        assert!(atom_index_sets(&w("3 2 | 0 -1")).unwrap().atoms.is_empty());
    }
}
