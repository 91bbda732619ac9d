//! Weight diagram, arrows, caps, (×–∘) intervals and atypicality of a weight.
//!
//! Usage: cargo run --example diagrams -- "4 3 1 0 | 0 -1 -4 -5"

use glmn::diagram::{arrow_diagram, cap_diagram, dual_arrow_diagram, intervals, WeightDiagram};
use glmn::weight::ShiftedWeight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "4 3 1 0 | 0 -1 -4 -5".into());
    let lambda: ShiftedWeight = text.parse()?;
    let d = WeightDiagram::of(&lambda);
    println!("weight       {lambda}");
    println!("diagram      {d}");
    println!("atypicality  {}", d.atypicality());

    let a = arrow_diagram(&lambda)?;
    println!("arrow ends k {:?}", a.ends);
    println!("counts M     {:?}", a.counts);
    let dual = dual_arrow_diagram(&lambda)?;
    println!("dual ends l  {:?}", dual.ends);
    println!("dual N       {:?}", dual.counts);

    let caps = cap_diagram(&lambda)?;
    println!("caps         {:?}", caps.caps);
    let iv: Vec<String> = intervals(&lambda)?
        .iter()
        .map(|i| format!("[{},{}]", i.start, i.end))
        .collect();
    println!("intervals    {}", iv.join(" "));
    Ok(())
}
