//! Weight diagrams and the arrow / cap / (×–∘) structures drawn on them.

mod arrows;
mod caps;
mod sequences;

pub use arrows::{arrow_diagram, dual_arrow_diagram, ArrowDiagram, DualArrowDiagram};
pub use caps::{cap_diagram, CapDiagram};
pub use sequences::{cross_circ_sequences, intervals, CrossCircSequence, Interval};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::ShiftedWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Marker {
    Gt,
    Lt,
}

/// Contents of one position: `crosses` × symbols, plus `surplus` unmatched
/// ε's (> when positive) or δ's (< when negative).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Cell {
    pub crosses: u32,
    pub surplus: i32,
}

impl Cell {
    pub const EMPTY: Cell = Cell {
        crosses: 0,
        surplus: 0,
    };
    pub const CROSS: Cell = Cell {
        crosses: 1,
        surplus: 0,
    };
    pub const GT: Cell = Cell {
        crosses: 0,
        surplus: 1,
    };
    pub const LT: Cell = Cell {
        crosses: 0,
        surplus: -1,
    };

    pub fn from_counts(eps: u32, delta: u32) -> Cell {
        Cell {
            crosses: eps.min(delta),
            surplus: eps as i32 - delta as i32,
        }
    }

    pub fn marker(self) -> Option<Marker> {
        match self.surplus.signum() {
            1 => Some(Marker::Gt),
            -1 => Some(Marker::Lt),
            _ => None,
        }
    }

    pub fn is_empty(self) -> bool {
        self.crosses == 0 && self.surplus == 0
    }

    pub fn symbol_count(self) -> u32 {
        self.crosses + self.surplus.unsigned_abs()
    }

    /// Number of ε's at this position.
    pub fn eps_count(self) -> u32 {
        self.crosses + self.surplus.max(0) as u32
    }

    /// Number of δ's at this position.
    pub fn delta_count(self) -> u32 {
        self.crosses + (-self.surplus).max(0) as u32
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("o");
        }
        match self.crosses {
            0 => {}
            1 => f.write_str("X")?,
            k => write!(f, "X{k}")?,
        }
        if let Some(mk) = self.marker() {
            f.write_str(if mk == Marker::Gt { ">" } else { "<" })?;
            let c = self.surplus.unsigned_abs();
            if c > 1 {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cell> {
        let bad = || Error::DiagramParse(format!("bad symbol {s:?}"));
        let s = s.trim();
        if s == "o" {
            return Ok(Cell::EMPTY);
        }
        let digits = |t: &str| -> Result<(u32, usize)> {
            let len = t.chars().take_while(char::is_ascii_digit).count();
            if len == 0 {
                Ok((1, 0))
            } else {
                Ok((t[..len].parse().map_err(|_| bad())?, len))
            }
        };
        let mut rest = s;
        let mut cell = Cell::EMPTY;
        if let Some(t) = rest.strip_prefix('X').or_else(|| rest.strip_prefix('x')) {
            let (k, len) = digits(t)?;
            cell.crosses = k;
            rest = &t[len..];
        }
        if let Some(c) = rest.chars().next() {
            let sign = match c {
                '>' => 1,
                '<' => -1,
                _ => return Err(bad()),
            };
            let (k, len) = digits(&rest[1..])?;
            if len + 1 != rest.len() {
                return Err(bad());
            }
            cell.surplus = sign * k as i32;
        }
        if cell.is_empty() {
            return Err(bad());
        }
        Ok(cell)
    }
}

/// Sparse map from position to non-empty cell.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    cells: BTreeMap<i64, Cell>,
}

impl WeightDiagram {
    pub fn empty() -> Self {
        WeightDiagram::default()
    }

    pub fn of(nu: &ShiftedWeight) -> Self {
        Self::from_positions(&nu.eps, &nu.delta_positions())
    }

    pub fn from_positions(eps: &[i64], delta: &[i64]) -> Self {
        let mut counts: BTreeMap<i64, (u32, u32)> = BTreeMap::new();
        for &p in eps {
            counts.entry(p).or_default().0 += 1;
        }
        for &p in delta {
            counts.entry(p).or_default().1 += 1;
        }
        let cells = counts
            .into_iter()
            .map(|(p, (e, d))| (p, Cell::from_counts(e, d)))
            .collect();
        WeightDiagram { cells }
    }

    pub fn from_cells(cells: impl IntoIterator<Item = (i64, Cell)>) -> Self {
        let mut d = WeightDiagram::empty();
        for (p, c) in cells {
            d.set(p, c);
        }
        d
    }

    pub fn set(&mut self, p: i64, c: Cell) {
        if c.is_empty() {
            self.cells.remove(&p);
        } else {
            self.cells.insert(p, c);
        }
    }

    pub fn cell(&self, p: i64) -> Cell {
        self.cells.get(&p).copied().unwrap_or_default()
    }

    pub fn is_empty_at(&self, p: i64) -> bool {
        !self.cells.contains_key(&p)
    }

    /// Non-empty cells in increasing position order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Cell)> + '_ {
        self.cells.iter().map(|(&p, &c)| (p, c))
    }

    pub fn is_blank(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn min_position(&self) -> Option<i64> {
        self.cells.keys().next().copied()
    }

    pub fn max_position(&self) -> Option<i64> {
        self.cells.keys().next_back().copied()
    }

    /// ×_1 ≤ ×_2 ≤ ..., listed with multiplicity.
    pub fn cross_positions(&self) -> Vec<i64> {
        self.iter()
            .flat_map(|(p, c)| std::iter::repeat_n(p, c.crosses as usize))
            .collect()
    }

    pub fn atypicality(&self) -> usize {
        self.iter().map(|(_, c)| c.crosses as usize).sum()
    }

    /// Largest × multiplicity at a single position.
    pub fn max_stack(&self) -> u32 {
        self.iter().map(|(_, c)| c.crosses).max().unwrap_or(0)
    }

    /// The dominant weight with this diagram; every position must carry at most one symbol.
    pub fn to_weight(&self) -> Result<ShiftedWeight> {
        let mut eps = Vec::new();
        let mut delta = Vec::new();
        for (p, c) in self.iter() {
            if c.symbol_count() > 1 {
                return Err(Error::NotAWeightDiagram(format!("position {p} holds {c}")));
            }
            if c.eps_count() == 1 {
                eps.push(p);
            }
            if c.delta_count() == 1 {
                delta.push(-p);
            }
        }
        eps.reverse();
        Ok(ShiftedWeight::new(eps, delta))
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(p, c)| format!("{p}:{c}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for WeightDiagram {
    type Err = Error;

    /// Comma-separated `p:SYM` items, SYM one of `X`, `Xk`, `>`, `<`, `X>`, `Xk<`, ...
    fn from_str(s: &str) -> Result<Self> {
        let mut d = WeightDiagram::empty();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (p, sym) = tok
                .split_once(':')
                .ok_or_else(|| Error::DiagramParse(format!("expected p:SYM, got {tok:?}")))?;
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| Error::DiagramParse(format!("bad position in {tok:?}")))?;
            if !d.is_empty_at(p) {
                return Err(Error::DiagramParse(format!("position {p} given twice")));
            }
            d.set(p, sym.parse()?);
        }
        Ok(d)
    }
}

pub fn weight_diagram(nu: &ShiftedWeight) -> WeightDiagram {
    WeightDiagram::of(nu)
}

pub fn atypicality(nu: &ShiftedWeight) -> usize {
    WeightDiagram::of(nu).atypicality()
}
