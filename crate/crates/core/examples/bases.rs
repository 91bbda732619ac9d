//! Bases of gl(m|n) as e/d words, their row lengths, incomparable root sets
//! and the column-major reflection sequence reaching them.
//!
//! Usage: cargo run --example bases -- [m] [n]

use glmn::base::{enumerate_bases, BaseWord};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let m = args.next().unwrap_or(2);
    let n = args.next().unwrap_or(2);
    println!(
        "{:<10} {:<8} {:<12} {:<16} reflections",
        "word", "pretty", "rows e(i)", "set"
    );
    for sigma in enumerate_bases(m, n) {
        let seq: Vec<String> = sigma
            .reflection_sequence()
            .iter()
            .map(|r| r.to_string())
            .collect();
        println!(
            "{:<10} {:<8} {:<12} {:<16} {}",
            sigma.to_string(),
            sigma.pretty(),
            format!("{:?}", sigma.row_lengths()),
            format!("{{{}}}", sigma.incomparable_set()),
            seq.join(" ")
        );
    }
    println!(
        "distinguished {}  anti {}",
        BaseWord::distinguished(m, n).pretty(),
        BaseWord::anti(m, n).pretty()
    );
}
