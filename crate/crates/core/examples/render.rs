//! Render a weight diagram with its arrows and caps in ASCII, JSON and SVG.
//!
//! cargo run --example render -- "5 4 3 0 -1 | 1 0 -3 -4 -5"

use glmn::diagram::{arrow_diagram, cap_diagram, WeightDiagram};
use glmn::render::{render_ascii, render_json, render_svg, Overlay, Window};
use glmn::weight::ShiftedWeight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "5 4 3 0 -1 | 1 0 -3 -4 -5".into());
    let lambda: ShiftedWeight = text.parse()?;
    let d = WeightDiagram::of(&lambda);
    let overlays = [
        Overlay::arrows(&arrow_diagram(&lambda)?),
        Overlay::caps(&cap_diagram(&lambda)?),
    ];
    let w = Window::fit(&d, &overlays, None, None)?;

    println!("arrows:");
    print!("{}", render_ascii(&d, &overlays[..1], w));
    println!("caps:");
    print!("{}", render_ascii(&d, &overlays[1..], w));
    println!("json: {}", render_json(&d, &overlays, w));
    let svg = render_svg(&d, &overlays, w);
    println!("svg: {} bytes, {} lines", svg.len(), svg.lines().count());
    Ok(())
}
