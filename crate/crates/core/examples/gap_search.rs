//! Search for dominant weights whose tail is smaller than their longtail.
//!
//! Usage: cargo run --release --example gap_search -- [m] [n] [bound] [jobs]

use std::time::Instant;

use glmn::tails::search_tail_gap_with_jobs;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let get = |k: usize, d: usize| args.get(k).copied().unwrap_or(d);
    let (m, n, bound, jobs) = (get(0, 3), get(1, 3), get(2, 3), get(3, 0));
    let t = Instant::now();
    let found = search_tail_gap_with_jobs(m, n, bound as u32, jobs);
    for g in &found {
        println!("{}", g.to_json_line());
    }
    eprintln!(
        "gl({m}|{n}) bound {bound}: {} gap weights in {:.2?}",
        found.len(),
        t.elapsed()
    );
}
