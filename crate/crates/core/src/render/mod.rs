//! ASCII, SVG and JSON renderings of weight diagrams, optionally overlaid
//! with arrows or caps.

mod ascii;
mod json;
mod svg;

pub use ascii::{glyph, render_ascii};
pub use json::{parse_json, render_json, DiagramJson, PositionJson};
pub use svg::render_svg;

use crate::diagram::{ArrowDiagram, CapDiagram, WeightDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlayKind {
    Arrows,
    Caps,
}

/// A family of spans (start, end) drawn above the diagram line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlay {
    pub kind: OverlayKind,
    pub spans: Vec<(i64, i64)>,
}

impl Overlay {
    pub fn arrows(a: &ArrowDiagram) -> Self {
        let spans = a
            .starts
            .iter()
            .copied()
            .zip(a.ends.iter().copied())
            .collect();
        Overlay {
            kind: OverlayKind::Arrows,
            spans,
        }
    }

    pub fn caps(c: &CapDiagram) -> Self {
        Overlay {
            kind: OverlayKind::Caps,
            spans: c.caps.clone(),
        }
    }

    /// Split the spans into rows whose spans are at least one column apart.
    /// A span always lies in a later row than every span enclosing it.
    pub fn layers(&self) -> Vec<Vec<(i64, i64)>> {
        let mut spans = self.spans.clone();
        spans.sort_by_key(|&(s, e)| (std::cmp::Reverse(e - s), s));
        let clash = |a: (i64, i64), b: (i64, i64)| !(a.1 + 1 < b.0 || b.1 + 1 < a.0);
        let encloses = |a: (i64, i64), b: (i64, i64)| a.0 <= b.0 && b.1 <= a.1 && a != b;
        let mut rows: Vec<Vec<(i64, i64)>> = Vec::new();
        for sp in spans {
            let floor = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.iter().any(|&o| encloses(o, sp)))
                .map(|(t, _)| t + 1)
                .max()
                .unwrap_or(0);
            match (floor..rows.len()).find(|&t| rows[t].iter().all(|&o| !clash(o, sp))) {
                Some(t) => rows[t].push(sp),
                None => rows.push(vec![sp]),
            }
        }
        for r in &mut rows {
            r.sort_unstable();
        }
        rows
    }
}

/// Inclusive range of displayed positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub from: i64,
    pub to: i64,
}

impl Window {
    /// One position of padding around the diagram and all overlay endpoints,
    /// with either end overridable. A blank diagram defaults to [-1, 1].
    pub fn fit(
        d: &WeightDiagram,
        overlays: &[Overlay],
        from: Option<i64>,
        to: Option<i64>,
    ) -> Result<Window> {
        let points = d.min_position().into_iter().chain(d.max_position()).chain(
            overlays
                .iter()
                .flat_map(|o| o.spans.iter().flat_map(|&(s, e)| [s, e])),
        );
        let (lo, hi) = points
            .fold(None, |acc: Option<(i64, i64)>, p| {
                Some(acc.map_or((p, p), |(a, b)| (a.min(p), b.max(p))))
            })
            .map_or((-1, 1), |(a, b)| (a - 1, b + 1));
        let w = Window {
            from: from.unwrap_or(lo),
            to: to.unwrap_or(hi),
        };
        if w.from > w.to {
            return Err(Error::InvalidWindow(w.from, w.to));
        }
        Ok(w)
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> {
        self.from..=self.to
    }

    pub fn width(&self) -> usize {
        (self.to - self.from + 1) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_spans_sit_below_their_parents() {
        let o = Overlay {
            kind: OverlayKind::Caps,
            spans: vec![(-1, 2), (0, 1), (3, 8), (4, 7), (5, 6)],
        };
        assert_eq!(
            o.layers(),
            vec![vec![(3, 8)], vec![(-1, 2), (4, 7)], vec![(0, 1), (5, 6)]]
        );
    }

    #[test]
    fn window_defaults_and_overrides() {
        let d: WeightDiagram = "0:X".parse().unwrap();
        assert_eq!(
            Window::fit(&d, &[], None, None).unwrap(),
            Window { from: -1, to: 1 }
        );
        assert_eq!(
            Window::fit(&WeightDiagram::empty(), &[], None, None).unwrap(),
            Window { from: -1, to: 1 }
        );
        assert_eq!(
            Window::fit(&d, &[], Some(-4), None).unwrap(),
            Window { from: -4, to: 1 }
        );
        assert!(Window::fit(&d, &[], Some(2), Some(1)).is_err());
    }
}
