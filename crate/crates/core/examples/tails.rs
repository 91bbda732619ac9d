//! tail and longtail of a weight, with the stacked diagram and both bases
//! that realize them.
//!
//! Usage: cargo run --example tails -- "5 4 3 0 -1 | 1 0 -3 -4 -5"

use glmn::ctd::ctd;
use glmn::diagram::WeightDiagram;
use glmn::tails::{dagger_weight, longtail, phi, psi, s_value, sigma_lambda, tail, witness_base};
use glmn::weight::ShiftedWeight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "5 4 3 0 -1 | 1 0 -3 -4 -5".into());
    let lambda: ShiftedWeight = text.parse()?;

    let stacked = phi(&lambda)?;
    println!("Φ(λ)           {}", stacked.diagram());
    println!("Ψ(Φ(λ))        {}", psi(&stacked)?);
    let sigma = sigma_lambda(&lambda)?;
    println!("Σ_λ            {} = {}", sigma, sigma.pretty());
    let dagger = dagger_weight(&lambda)?;
    println!("λ†             {dagger}  (s = {})", s_value(&dagger));
    println!("tail           {}", tail(&lambda)?);

    let wb = witness_base(&lambda)?;
    let moved = ctd(&lambda)?.transport(&lambda, &wb)?;
    println!(
        "witness base   {} with set {{{}}}",
        wb.pretty(),
        wb.incomparable_set()
    );
    println!(
        "               {moved}  (stack {})",
        WeightDiagram::of(&moved).max_stack()
    );
    println!("longtail       {}", longtail(&lambda)?);
    Ok(())
}
