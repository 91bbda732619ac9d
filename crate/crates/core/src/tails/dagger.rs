use crate::diagram::{Cell, WeightDiagram};
use crate::error::{Error, Result};
use crate::weight::ShiftedWeight;

/// A diagram of Λ†, with its stacked position (if any).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaggerDiagram {
    diagram: WeightDiagram,
    stack: Option<(i64, u32)>,
    dagger: Option<i64>,
}

impl DaggerDiagram {
    pub fn new(diagram: WeightDiagram) -> Result<Self> {
        check(&diagram).map_err(Error::NotDaggerDiagram)?;
        let stack = diagram
            .iter()
            .find(|(_, c)| c.crosses > 1)
            .map(|(p, c)| (p, c.crosses));
        let dagger = match stack {
            Some((p, _)) => Some(p),
            None => diagram.cross_positions().first().copied(),
        };
        Ok(DaggerDiagram {
            diagram,
            stack,
            dagger,
        })
    }

    pub fn diagram(&self) -> &WeightDiagram {
        &self.diagram
    }

    /// Position and multiplicity of ×^k for k ≥ 2.
    pub fn stack(&self) -> Option<(i64, u32)> {
        self.stack
    }

    /// ×†: the stacked position, or the leftmost × when nothing is stacked.
    pub fn dagger_position(&self) -> Option<i64> {
        self.dagger
    }

    pub fn multiplicity(&self) -> u32 {
        self.stack.map_or(u32::from(self.dagger.is_some()), |s| s.1)
    }
}

fn check(d: &WeightDiagram) -> std::result::Result<(), String> {
    let multi: Vec<(i64, Cell)> = d.iter().filter(|(_, c)| c.symbol_count() > 1).collect();
    if multi.len() > 1 {
        return Err(format!(
            "positions {} and {} both hold several symbols",
            multi[0].0, multi[1].0
        ));
    }
    if let Some(&(p, c)) = multi.first() {
        if c.surplus != 0 {
            return Err(format!("position {p} mixes × with > or <"));
        }
        if d.cross_positions().first().is_some_and(|&x| x < p) {
            return Err(format!("a × lies left of the stacked position {p}"));
        }
    }
    let xs: Vec<i64> = d
        .iter()
        .filter(|(_, c)| c.crosses > 0)
        .map(|(p, _)| p)
        .collect();
    if xs.len() >= 2 && !(xs[0] + 1..xs[1]).any(|q| d.is_empty_at(q)) {
        return Err(format!(
            "no empty position between the × positions {} and {}",
            xs[0], xs[1]
        ));
    }
    Ok(())
}

pub fn is_dagger_diagram(d: &WeightDiagram) -> bool {
    check(d).is_ok()
}

/// Φ: collapse the ×'s of [×₁, d) onto the rightmost of them, d the first ∘ right of ×₁.
pub fn phi(lambda: &ShiftedWeight) -> Result<DaggerDiagram> {
    lambda.check_dominant()?;
    let mut d = WeightDiagram::of(lambda);
    if let Some(&x1) = d.cross_positions().first() {
        let mut end = x1 + 1;
        while !d.is_empty_at(end) {
            end += 1;
        }
        let block: Vec<i64> = d
            .cross_positions()
            .into_iter()
            .filter(|&p| p < end)
            .collect();
        let dagger = *block.last().expect("x1 is in the block");
        for &p in &block {
            d.set(p, Cell::EMPTY);
        }
        d.set(
            dagger,
            Cell {
                crosses: block.len() as u32,
                surplus: 0,
            },
        );
    }
    DaggerDiagram::new(d)
}

/// Ψ: spread ×^k back onto the k - 1 nearest empty positions to its left.
pub fn psi(d: &DaggerDiagram) -> Result<ShiftedWeight> {
    let mut out = d.diagram.clone();
    if let Some((p, k)) = d.stack {
        out.set(p, Cell::CROSS);
        let mut q = p - 1;
        let mut left = k - 1;
        while left > 0 {
            if out.is_empty_at(q) {
                out.set(q, Cell::CROSS);
                left -= 1;
            }
            q -= 1;
        }
    }
    out.to_weight()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> WeightDiagram {
        s.parse().unwrap()
    }

    fn w(s: &str) -> ShiftedWeight {
        s.parse().unwrap()
    }

    #[test]
    fn membership() {
        assert!(is_dagger_diagram(&d("0:X2,3:X,4:X,5:X")));
        assert!(!is_dagger_diagram(&d("3:X,4:X2")));
        assert!(is_dagger_diagram(&d("1:>,2:<")));
        assert!(!is_dagger_diagram(&d("0:X,1:o,2:X2")));
        assert!(!is_dagger_diagram(&d("0:X2,2:X>")));
        assert!(!is_dagger_diagram(&d("0:X,1:X")));
    }

    #[test]
    fn phi_examples() {
        let p = phi(&w("5 4 3 0 -1 | 1 0 -3 -4 -5")).unwrap();
        assert_eq!(p.diagram().to_string(), "0:X2,3:X,4:X,5:X");
        assert_eq!(p.stack(), Some((0, 2)));
        let p = phi(&w("6 4 3 1 | -1 -2 -3 -4")).unwrap();
        assert_eq!(p.diagram().to_string(), "2:<,4:X3,6:>");
        let typ = w("3 2 | 0 -1");
        assert_eq!(phi(&typ).unwrap().diagram(), &WeightDiagram::of(&typ));
    }

    #[test]
    fn psi_examples() {
        let back = |s: &str| psi(&DaggerDiagram::new(d(s)).unwrap()).unwrap();
        assert_eq!(back("2:<,4:X3,6:>"), w("6 4 3 1 | -1 -2 -3 -4"));
        assert_eq!(back("0:X2,3:X,4:X,5:X"), w("5 4 3 0 -1 | 1 0 -3 -4 -5"));
        assert_eq!(back("0:X,2:>"), w("2 0 | 0"));
        assert!(DaggerDiagram::new(d("3:X,4:X2")).is_err());
    }
}
