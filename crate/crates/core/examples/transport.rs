//! Change-of-tableau diagram and transport of a highest weight to other bases,
//! including the walk to the anti-distinguished base.
//!
//! Usage: cargo run --example transport -- "4 3 0 | 0 -1 -3 -4 -5" [word]

use glmn::base::BaseWord;
use glmn::ctd::{anti_distinguished_diagram, ctd, distinguished_to_anti_walk, weight_for_base};
use glmn::oracle::oracle_shifted_weight;
use glmn::weight::ShiftedWeight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let lambda: ShiftedWeight = args
        .next()
        .unwrap_or_else(|| "4 3 0 | 0 -1 -3 -4 -5".into())
        .parse()?;
    let sigma: BaseWord = args.next().unwrap_or_else(|| "edddeedd".into()).parse()?;

    let c = ctd(&lambda)?;
    println!("CTD of {lambda}:");
    print!("{}", c.to_ascii());

    let nu = c.transport(&lambda, &sigma)?;
    println!("base {} = {}", sigma, sigma.pretty());
    println!("  closed form  {nu}");
    println!("  reflections  {}", oracle_shifted_weight(&lambda, &sigma)?);
    println!("  unshifted    {}", weight_for_base(&lambda, &sigma)?);

    println!("walk to the anti-distinguished base:");
    for (t, step) in distinguished_to_anti_walk(&lambda)?.iter().enumerate() {
        println!("  {t}: {step}");
    }
    println!("anti diagram {}", anti_distinguished_diagram(&lambda)?);
    Ok(())
}
