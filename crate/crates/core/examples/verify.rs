//! Run the brute-force verification sweep for every gl(m|n) with m, n up to a limit.
//!
//! Usage: cargo run --release --example verify -- [max_rank] [bound]

use std::time::Instant;

use glmn::oracle::run_verification_suite;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let max_rank = args.next().unwrap_or(3) as usize;
    let bound = args.next().unwrap_or(6);
    let start = Instant::now();
    let mut failures = 0;
    for m in 0..=max_rank {
        for n in 0..=max_rank {
            let t = Instant::now();
            let report = run_verification_suite(m, n, bound);
            println!(
                "gl({m}|{n}) bound {bound}: {:>9} checks, {} mismatches, {:.2?}",
                report.checked,
                report.mismatches.len(),
                t.elapsed()
            );
            for mm in report.mismatches.iter().take(5) {
                println!(
                    "  {} on {}: expected {} got {}",
                    mm.check, mm.input, mm.expected, mm.got
                );
            }
            failures += report.mismatches.len();
        }
    }
    println!("total {failures} mismatches in {:.2?}", start.elapsed());
}
