use super::{Overlay, OverlayKind, Window};
use crate::diagram::{Cell, WeightDiagram};

/// Single-character glyph: `o` empty, `X` any cell holding a ×, else `>` / `<`.
pub fn glyph(c: Cell) -> char {
    if c.is_empty() {
        'o'
    } else if c.crosses > 0 {
        'X'
    } else if c.surplus > 0 {
        '>'
    } else {
        '<'
    }
}

fn overlay_row(row: &[(i64, i64)], kind: OverlayKind, w: Window) -> String {
    let mut line = vec![' '; w.width()];
    let col = |p: i64| (p - w.from) as usize;
    let inside = |p: i64| (w.from..=w.to).contains(&p);
    for &(s, e) in row {
        if s == e {
            if inside(s) {
                line[col(s)] = '*';
            }
            continue;
        }
        for p in s.max(w.from)..=e.min(w.to) {
            line[col(p)] = '-';
        }
        let (head, tail) = match kind {
            OverlayKind::Arrows => ('|', '>'),
            OverlayKind::Caps => ('+', '+'),
        };
        if inside(s) {
            line[col(s)] = head;
        }
        if inside(e) {
            line[col(e)] = tail;
        }
    }
    line.into_iter().collect::<String>().trim_end().to_string()
}

/// Overlay rows (outermost first), the diagram line, a ruler of last digits
/// of |p|, the window, and a legend for cells that are not a single symbol.
pub fn render_ascii(d: &WeightDiagram, overlays: &[Overlay], w: Window) -> String {
    let mut out = String::new();
    for o in overlays {
        for row in o.layers() {
            out.push_str(&overlay_row(&row, o.kind, w));
            out.push('\n');
        }
    }
    out.extend(w.positions().map(|p| glyph(d.cell(p))));
    out.push('\n');
    out.extend(
        w.positions()
            .map(|p| char::from_digit((p.unsigned_abs() % 10) as u32, 10).unwrap_or('?')),
    );
    out.push('\n');
    out.push_str(&format!("positions {}..{}\n", w.from, w.to));
    let compound: Vec<String> = w
        .positions()
        .map(|p| (p, d.cell(p)))
        .filter(|(_, c)| c.symbol_count() > 1)
        .map(|(p, c)| format!("{p}:{c}"))
        .collect();
    if !compound.is_empty() {
        out.push_str(&format!("stacked {}\n", compound.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{arrow_diagram, cap_diagram};
    use crate::weight::ShiftedWeight;

    #[test]
    fn plain_line() {
        let lam: ShiftedWeight = "4 2 0 | 0 -3 -5".parse().unwrap();
        let d = WeightDiagram::of(&lam);
        let w = Window::fit(&d, &[], None, None).unwrap();
        assert_eq!(
            render_ascii(&d, &[], w),
            "oXo><><o\n10123456\npositions -1..6\n"
        );
    }

    #[test]
    fn overlays_and_legend() {
        let lam: ShiftedWeight = "5 4 3 0 -1 | 1 0 -3 -4 -5".parse().unwrap();
        let d = WeightDiagram::of(&lam);
        let arrows = Overlay::arrows(&arrow_diagram(&lam).unwrap());
        let w = Window::fit(&d, std::slice::from_ref(&arrows), None, None).unwrap();
        let s = render_ascii(&d, &[arrows], w);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[lines.len() - 3], "oXXooXXXoooo");
        assert!(lines[0].contains('|') && lines[0].contains('>'));

        let caps = Overlay::caps(&cap_diagram(&lam).unwrap());
        assert_eq!(caps.layers().len(), 3);
        let stacked = WeightDiagram::from_cells([(
            0,
            Cell {
                crosses: 2,
                surplus: 1,
            },
        )]);
        let w = Window::fit(&stacked, &[], None, None).unwrap();
        assert!(render_ascii(&stacked, &[], w).ends_with("stacked 0:X2>\n"));
    }
}
