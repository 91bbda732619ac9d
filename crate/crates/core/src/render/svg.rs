use std::fmt::Write as _;

use super::{Overlay, OverlayKind, Window};
use crate::diagram::{Cell, WeightDiagram};

const STEP: i64 = 30;
const MARGIN: i64 = 20;
const HALF_STEP: i64 = STEP / 2;

/// Symbols of a cell bottom to top: ×'s first, then the unmatched markers.
fn glyphs(c: Cell) -> Vec<&'static str> {
    let marker = if c.surplus > 0 { "&gt;" } else { "&lt;" };
    let mut v = vec!["\u{00d7}"; c.crosses as usize];
    v.extend(std::iter::repeat_n(
        marker,
        c.surplus.unsigned_abs() as usize,
    ));
    v
}

const GLYPH_RISE: i64 = 16;

/// Deterministic SVG: one `<g>` per displayed position, one `<path>` per
/// arrow or cap, arcs above the baseline with height proportional to length.
pub fn render_svg(d: &WeightDiagram, overlays: &[Overlay], w: Window) -> String {
    let x = |p: i64| MARGIN + (p - w.from) * STEP;
    let arc_room = overlays
        .iter()
        .flat_map(|o| o.spans.iter())
        .map(|&(s, e)| (e - s).abs() * HALF_STEP)
        .max()
        .unwrap_or(0);
    let tallest = w
        .positions()
        .map(|p| d.cell(p).symbol_count() as i64)
        .max()
        .unwrap_or(0);
    let base = MARGIN + arc_room + GLYPH_RISE * (tallest - 1).max(0) + 10;
    let width = 2 * MARGIN + (w.width() as i64 - 1) * STEP;
    let height = base + 40;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str(
        r#"<defs><marker id="head" markerWidth="8" markerHeight="8" refX="6" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z"/></marker></defs>"#,
    );
    out.push('\n');
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#,
        x(w.from),
        x(w.to)
    );
    for p in w.positions() {
        let c = d.cell(p);
        let _ = write!(
            out,
            r#"<g class="position" data-p="{p}" transform="translate({},{base})">"#,
            x(p)
        );
        if c.is_empty() {
            out.push_str(r#"<circle r="5" fill="white" stroke="black"/>"#);
        }
        for (t, g) in glyphs(c).into_iter().enumerate() {
            let _ = write!(
                out,
                r#"<text y="{}" text-anchor="middle" font-size="16">{g}</text>"#,
                5 - GLYPH_RISE * t as i64
            );
        }
        let _ = write!(
            out,
            r#"<text class="tick" y="28" text-anchor="middle" font-size="10">{p}</text>"#
        );
        out.push_str("</g>\n");
    }
    for o in overlays {
        for &(s, e) in &o.spans {
            let (x1, x2) = (x(s), x(e));
            let h = (e - s).abs() * HALF_STEP;
            let _ = match o.kind {
                OverlayKind::Arrows if s == e => writeln!(
                    out,
                    r#"<path class="arrow" d="M{x1},{} L{x1},{}" stroke="blue" fill="none"/>"#,
                    base - 8,
                    base - 20
                ),
                OverlayKind::Arrows => writeln!(
                    out,
                    r#"<path class="arrow" d="M{x1},{} Q{},{} {x2},{}" stroke="blue" fill="none" marker-end="url(#head)"/>"#,
                    base - 8,
                    (x1 + x2) / 2,
                    base - 8 - 2 * h,
                    base - 8
                ),
                OverlayKind::Caps => writeln!(
                    out,
                    r#"<path class="cap" d="M{x1},{} A{h},{h} 0 0 1 {x2},{}" stroke="red" fill="none"/>"#,
                    base - 8,
                    base - 8
                ),
            };
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::cap_diagram;
    use crate::weight::ShiftedWeight;

    #[test]
    fn structure_is_stable() {
        let lam: ShiftedWeight = "5 4 3 0 -1 | 1 0 -3 -4 -5".parse().unwrap();
        let d = WeightDiagram::of(&lam);
        let caps = Overlay::caps(&cap_diagram(&lam).unwrap());
        let w = Window::fit(&d, std::slice::from_ref(&caps), None, None).unwrap();
        let a = render_svg(&d, std::slice::from_ref(&caps), w);
        assert_eq!(a, render_svg(&d, &[caps], w));
        assert_eq!(a.matches("<g class=\"position\"").count(), w.width());
        assert_eq!(a.matches("class=\"cap\"").count(), 5);
        assert!(a.starts_with("<svg") && a.ends_with("</svg>\n"));

        let marks: WeightDiagram = "0:>,1:<".parse().unwrap();
        let b = render_svg(&marks, &[], Window { from: 0, to: 1 });
        assert!(b.contains(">&gt;</text>") && b.contains(">&lt;</text>"));
        let stacked: WeightDiagram = "0:X3".parse().unwrap();
        assert_eq!(
            render_svg(&stacked, &[], Window { from: 0, to: 0 })
                .matches("\u{00d7}</text>")
                .count(),
            3
        );
    }
}
