use serde::{Deserialize, Serialize};

use super::{Overlay, OverlayKind, Window};
use crate::diagram::{Cell, Marker, WeightDiagram};
use crate::error::{Error, Result};

/// One displayed position. `count` is the marker multiplicity, present only when above 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionJson {
    pub p: i64,
    pub x: u32,
    pub marker: Option<Marker>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub positions: Vec<PositionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrows: Option<Vec<(i64, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Vec<(i64, i64)>>,
}

impl DiagramJson {
    pub fn build(d: &WeightDiagram, overlays: &[Overlay], w: Window) -> Self {
        let positions = w
            .positions()
            .map(|p| {
                let c = d.cell(p);
                let k = c.surplus.unsigned_abs();
                PositionJson {
                    p,
                    x: c.crosses,
                    marker: c.marker(),
                    count: (k > 1).then_some(k),
                }
            })
            .collect();
        let mut out = DiagramJson {
            positions,
            arrows: None,
            caps: None,
        };
        for o in overlays {
            match o.kind {
                OverlayKind::Arrows => out.arrows = Some(o.spans.clone()),
                OverlayKind::Caps => out.caps = Some(o.spans.clone()),
            }
        }
        out
    }

    pub fn diagram(&self) -> Result<WeightDiagram> {
        let mut d = WeightDiagram::empty();
        for (t, pos) in self.positions.iter().enumerate() {
            if t > 0 && self.positions[t - 1].p >= pos.p {
                return Err(Error::DiagramParse(format!(
                    "position {} out of order",
                    pos.p
                )));
            }
            let k = match (pos.marker, pos.count) {
                (None, Some(_)) => {
                    return Err(Error::DiagramParse(format!(
                        "count without marker at {}",
                        pos.p
                    )))
                }
                (_, Some(k)) if k < 2 => {
                    return Err(Error::DiagramParse(format!("count below 2 at {}", pos.p)))
                }
                (None, None) => 0,
                (Some(_), c) => c.unwrap_or(1) as i32,
            };
            let surplus = if pos.marker == Some(Marker::Lt) {
                -k
            } else {
                k
            };
            d.set(
                pos.p,
                Cell {
                    crosses: pos.x,
                    surplus,
                },
            );
        }
        Ok(d)
    }

    pub fn window(&self) -> Option<Window> {
        Some(Window {
            from: self.positions.first()?.p,
            to: self.positions.last()?.p,
        })
    }

    pub fn overlays(&self) -> Vec<Overlay> {
        let mut out = Vec::new();
        if let Some(a) = &self.arrows {
            out.push(Overlay {
                kind: OverlayKind::Arrows,
                spans: a.clone(),
            });
        }
        if let Some(c) = &self.caps {
            out.push(Overlay {
                kind: OverlayKind::Caps,
                spans: c.clone(),
            });
        }
        out
    }
}

pub fn render_json(d: &WeightDiagram, overlays: &[Overlay], w: Window) -> String {
    serde_json::to_string(&DiagramJson::build(d, overlays, w)).expect("plain data serializes")
}

/// Parse [`render_json`] output, validating every entry.
pub fn parse_json(s: &str) -> Result<DiagramJson> {
    let parsed: DiagramJson =
        serde_json::from_str(s).map_err(|e| Error::DiagramParse(e.to_string()))?;
    parsed.diagram()?;
    Ok(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_roundtrip() {
        let d: WeightDiagram = "0:X,2:>,3:X2<3".parse().unwrap();
        let w = Window { from: 0, to: 3 };
        let s = render_json(&d, &[], w);
        assert_eq!(
            s,
            r#"{"positions":[{"p":0,"x":1,"marker":null},{"p":1,"x":0,"marker":null},{"p":2,"x":0,"marker":"gt"},{"p":3,"x":2,"marker":"lt","count":3}]}"#
        );
        let back = parse_json(&s).unwrap();
        assert_eq!(back.diagram().unwrap(), d);
        assert_eq!(
            render_json(
                &back.diagram().unwrap(),
                &back.overlays(),
                back.window().unwrap()
            ),
            s
        );
    }

    #[test]
    fn rejects_inconsistent_entries() {
        assert!(parse_json(r#"{"positions":[{"p":0,"x":0,"marker":null,"count":2}]}"#).is_err());
        assert!(parse_json(
            r#"{"positions":[{"p":1,"x":0,"marker":null},{"p":0,"x":0,"marker":null}]}"#
        )
        .is_err());
        assert!(parse_json("[").is_err());
    }
}
