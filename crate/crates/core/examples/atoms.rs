//! Atom decomposition of a weight and the CTD of each atom.
//!
//! Usage: cargo run --example atoms -- "6 5 4 3 0 | 0 -1 -4 -6"

use glmn::atoms::atom_index_sets;
use glmn::ctd::ctd;
use glmn::weight::ShiftedWeight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "6 5 4 3 0 | 0 -1 -4 -6".into());
    let lambda: ShiftedWeight = text.parse()?;
    for atom in &atom_index_sets(&lambda)?.atoms {
        let w = atom.weight(&lambda);
        println!(
            "{atom} on [{}, {}]: {w}",
            atom.segment.start, atom.segment.end
        );
        print!("{}", ctd(&w)?.to_ascii());
    }
    Ok(())
}
