use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::{Hash, Hasher};

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    oracle_ctd_grid, oracle_s_value, oracle_shifted_weight, random_valid_order, transport_along,
};
use crate::atoms::atom_index_sets;
use crate::base::{enumerate_bases, BaseWord};
use crate::ctd::{anti_distinguished_diagram, ctd, distinguished_to_anti_walk};
use crate::diagram::{arrow_diagram, cap_diagram, dual_arrow_diagram, Cell, WeightDiagram};
use crate::tails::{
    is_dagger_diagram, longest_chain, longtail_via_arrows, longtail_via_caps, longtail_via_ctd,
    orthogonality_mask, phi, psi, s_value, sigma_lambda, tail, DaggerDiagram,
};
use crate::weight::{canonical_dominant_weights, ShiftedWeight};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// Instances checked per check name.
    #[serde(skip)]
    pub per_check: BTreeMap<String, u64>,
}

impl OracleReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(mut self, other: OracleReport) -> OracleReport {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
        for (k, v) in other.per_check {
            *self.per_check.entry(k).or_default() += v;
        }
        self
    }

    /// Instances and mismatches over the named checks. A name ending in `_`
    /// selects every check with that prefix.
    pub fn tally(&self, names: &[&str]) -> (u64, usize) {
        let hit = |name: &str| {
            names.iter().any(|p| {
                if p.ends_with('_') {
                    name.starts_with(p)
                } else {
                    name == *p
                }
            })
        };
        let checked = self
            .per_check
            .iter()
            .filter(|(k, _)| hit(k))
            .map(|(_, v)| v)
            .sum();
        (
            checked,
            self.mismatches.iter().filter(|m| hit(&m.check)).count(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

struct Checker {
    input: String,
    report: OracleReport,
}

impl Checker {
    fn new(input: String) -> Self {
        Checker {
            input,
            report: OracleReport::default(),
        }
    }

    fn count(&mut self, check: &str) {
        self.report.checked += 1;
        *self.report.per_check.entry(check.to_string()).or_default() += 1;
    }

    fn eq<T: PartialEq + Debug>(&mut self, check: &str, expected: T, got: T) {
        self.count(check);
        if expected != got {
            self.fail(check, format!("{expected:?}"), format!("{got:?}"));
        }
    }

    fn holds(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.count(check);
        if !ok {
            self.fail(check, "property holds".into(), detail());
        }
    }

    fn fail(&mut self, check: &str, expected: String, got: String) {
        self.report.mismatches.push(Mismatch {
            check: check.into(),
            input: self.input.clone(),
            expected,
            got,
        });
    }
}

fn seed_for(lambda: &ShiftedWeight, sigma: &BaseWord) -> u64 {
    let mut h = DefaultHasher::new();
    lambda.hash(&mut h);
    sigma.hash(&mut h);
    h.finish()
}

const RANDOM_ORDERS: usize = 3;
const RANDOM_ORDER_MAX_RANK: usize = 6;
const S_ORACLE_MAX_STARS: usize = 12;

/// Every closed-form/oracle comparison and structural property for one dominant weight.
pub fn verify_weight(lambda: &ShiftedWeight) -> OracleReport {
    let mut cx = Checker::new(lambda.to_string());
    let (m, n) = (lambda.m(), lambda.n());
    let arrows = arrow_diagram(lambda).expect("dominant input");
    let caps = cap_diagram(lambda).expect("dominant input");
    let c = ctd(lambda).expect("dominant input");
    let d = WeightDiagram::of(lambda);

    cx.eq(
        "ctd",
        oracle_ctd_grid(lambda).expect("dominant input"),
        c.to_grid(),
    );

    // arrow diagram invariants
    for i in 1..=m {
        let k = arrows.k(i);
        let cell = d.cell(k);
        cx.holds(
            "arrow_endpoint",
            k >= lambda.a(i) && cell.delta_count() == 0,
            || format!("k_{i} = {k} holds {cell}"),
        );
        if i < m {
            cx.holds(
                "arrow_order",
                arrows.k(i) > arrows.k(i + 1) && arrows.big_m(i) >= arrows.big_m(i + 1),
                || format!("rows {i},{}", i + 1),
            );
        }
    }
    let low = |i: usize| arrows.big_m(i) as i64 - (arrows.k(i) - lambda.a(i) - 1);
    for i in 1..=m {
        for i2 in i..=m {
            cx.holds("ctd_inequality", low(i2) <= low(i), || {
                format!("rows {i} <= {i2}")
            });
        }
    }

    // caps against arrows
    let mut cap_ends = caps.ends();
    cap_ends.sort_unstable();
    let mut circ_ends: Vec<i64> = arrows
        .ends
        .iter()
        .copied()
        .filter(|&k| d.is_empty_at(k))
        .collect();
    circ_ends.sort_unstable();
    cx.eq("cap_ends", circ_ends, cap_ends);
    if let (Some(lo), Some(hi)) = (d.min_position(), d.max_position()) {
        for r in lo - 1..=hi + m as i64 + 1 {
            cx.eq("arrow_cap_duality", arrows.over(r), caps.over(r));
        }
    }

    // transport over every base
    let bases: Vec<BaseWord> = enumerate_bases(m, n).collect();
    let mut oracle_weights = Vec::with_capacity(bases.len());
    let mut best_stack = 0u32;
    let atyp = d.atypicality();
    for sigma in &bases {
        let o = oracle_shifted_weight(lambda, sigma).expect("dominant input");
        let closed = c.transport(lambda, sigma).expect("dimensions agree");
        cx.eq("transport", &o, &closed);
        if m + n <= RANDOM_ORDER_MAX_RANK {
            let mut rng = StdRng::seed_from_u64(seed_for(lambda, sigma));
            for _ in 0..RANDOM_ORDERS {
                let order = random_valid_order(sigma, &mut rng);
                let (nu, reached) = transport_along(lambda, &order).expect("valid order");
                cx.eq("order_independence", (&o, sigma), (&nu, &reached));
            }
        }
        cx.holds(
            "coordinate_bounds",
            (1..=m).all(|i| lambda.a(i) <= o.a(i) && o.a(i) <= arrows.k(i)),
            || format!("base {sigma}: {o}"),
        );
        let dsig = WeightDiagram::of(&o);
        cx.eq("atypicality_invariance", atyp, dsig.atypicality());
        let s = s_value(&o);
        let stack = dsig.max_stack();
        cx.holds("stack_bound", stack as usize <= s, || {
            format!("base {sigma}: stack {stack} > s {s}")
        });
        best_stack = best_stack.max(stack);
        if orthogonality_mask(&o).starred().len() <= S_ORACLE_MAX_STARS {
            cx.eq(
                "s_value",
                oracle_s_value(&o).expect("star count checked"),
                s,
            );
        }
        oracle_weights.push((o, s));
    }

    // longtail
    let oracle_lt = oracle_weights.iter().map(|x| x.1).max().unwrap_or(0);
    let lt = longtail_via_arrows(lambda).expect("dominant input");
    cx.eq(
        "longtail_ctd",
        oracle_lt,
        longtail_via_ctd(lambda).expect("dominant input"),
    );
    cx.eq("longtail_arrows", oracle_lt, lt);
    cx.eq(
        "longtail_caps",
        oracle_lt,
        longtail_via_caps(lambda).expect("dominant input"),
    );
    cx.eq("stacked_max", oracle_lt, best_stack as usize);

    // change indicator is a property of the root, equal to the CTD bit
    let mut orthogonal_somewhere = vec![vec![false; n]; m];
    for (sigma, (o, _)) in bases.iter().zip(&oracle_weights) {
        for r in sigma.incomparable_set().roots() {
            cx.eq(
                "change_indicator",
                c.bit(r.i, r.j),
                o.is_orthogonal(r.i, r.j),
            );
        }
        for i in 1..=m {
            for j in 1..=n {
                if o.is_orthogonal(i, j) {
                    orthogonal_somewhere[i - 1][j - 1] = true;
                }
            }
        }
    }
    cx.eq("ctd_iff_orthogonal", c.to_grid(), orthogonal_somewhere);

    // 1-bits on incomparable pairs span a full rectangle
    let ones = c.ones();
    for (t, &p) in ones.iter().enumerate() {
        for &q in &ones[t + 1..] {
            if p.incomparable(q) {
                let full = (p.i.min(q.i)..=p.i.max(q.i))
                    .all(|i| (p.j.min(q.j)..=p.j.max(q.j)).all(|j| c.bit(i, j)));
                cx.holds("rectangle", full, || format!("{p} {q}"));
            }
        }
    }
    let chain = longest_chain(&ones);
    if let (Some(first), Some(last)) = (chain.first(), chain.last()) {
        let full = (first.i..=last.i).all(|i| (first.j..=last.j).all(|j| c.bit(i, j)));
        cx.holds("rectangle", full, || format!("chain {first}..{last}"));
    }

    // anti-distinguished diagram: caps, walk end, reflection walk
    let anti = anti_distinguished_diagram(lambda).expect("dominant input");
    let walk = distinguished_to_anti_walk(lambda).expect("dominant input");
    let anti_base = BaseWord::anti(m, n);
    let oracle_anti = oracle_shifted_weight(lambda, &anti_base).expect("dominant input");
    cx.eq(
        "anti_vs_walk",
        anti.to_string(),
        WeightDiagram::of(walk.last().expect("walk is nonempty")).to_string(),
    );
    cx.eq(
        "anti_vs_oracle",
        anti.to_string(),
        WeightDiagram::of(&oracle_anti).to_string(),
    );

    // walk properties at every Σ^i
    cx.eq("walk_length", m + 1, walk.len());
    for (t, mu) in walk.iter().enumerate() {
        let i = m - t;
        let sigma_i = BaseWord::walk_base(m, n, i);
        cx.eq(
            "walk_vs_oracle",
            &oracle_shifted_weight(lambda, &sigma_i).expect("dominant input"),
            mu,
        );
        cx.holds(
            "walk_delta_strict",
            mu.delta.windows(2).all(|w| w[0] > w[1]),
            || format!("step {t}: {mu}"),
        );
        let dm = WeightDiagram::of(mu);
        if i >= 1 {
            cx.eq("walk_row_fixed", lambda.a(i), mu.a(i));
            for p in lambda.a(i)..arrows.k(i) {
                let cell = dm.cell(p);
                let allowed = cell == Cell::CROSS
                    || cell == Cell::LT
                    || cell
                        == (Cell {
                            crosses: 1,
                            surplus: 1,
                        });
                cx.holds("walk_busy_segment", allowed, || {
                    format!("step {t}, position {p}: {cell}")
                });
            }
        }
        let from = if i == m { i64::MIN } else { arrows.k(i + 1) };
        let lo = d.min_position().into_iter().chain(dm.min_position()).min();
        let hi = d.max_position().into_iter().chain(dm.max_position()).max();
        if let (Some(lo), Some(hi)) = (lo, hi) {
            for p in lo.max(from.saturating_add(1))..=hi {
                cx.eq(
                    "walk_right_unchanged",
                    d.cell(p).to_string(),
                    dm.cell(p).to_string(),
                );
            }
        }
    }

    // dual arrows of the anti-distinguished weight describe the CTD columns
    cx.holds("anti_weight_dominant", oracle_anti.is_dominant(), || {
        oracle_anti.to_string()
    });
    if let Ok(dual) = dual_arrow_diagram(&oracle_anti) {
        for j in 1..=n {
            let len = oracle_anti.delta_position(j) - dual.ends[j - 1];
            let hi = dual.counts[j - 1] as i64;
            let col: Vec<bool> = (1..=m as i64)
                .map(|i| len > 0 && hi + 1 - len <= i && i <= hi)
                .collect();
            let want: Vec<bool> = (1..=m).map(|i| c.bit(i, j)).collect();
            cx.eq("dual_arrow_columns", want, col);
        }
    }

    // atoms
    let atoms = atom_index_sets(lambda).expect("dominant input");
    for r in &ones {
        cx.holds(
            "ones_inside_atoms",
            atoms.atom_of_root(r.i, r.j).is_some(),
            || r.to_string(),
        );
    }
    for atom in &atoms.atoms {
        let sub = atom.weight(lambda);
        cx.holds("atom_dominant", sub.is_dominant(), || sub.to_string());
        if let Ok(sc) = ctd(&sub) {
            for (i2, &i) in atom.rows.iter().enumerate() {
                for (j2, &j) in atom.cols.iter().enumerate() {
                    cx.eq("atom_ctd", c.bit(i, j), sc.bit(i2 + 1, j2 + 1));
                }
            }
        }
    }

    // Φ, Ψ, Σ_λ, tail
    let dd = phi(lambda).expect("dominant input");
    cx.holds(
        "phi_in_dagger_space",
        is_dagger_diagram(dd.diagram()),
        || dd.diagram().to_string(),
    );
    cx.eq("psi_phi", Ok(lambda.clone()), psi(&dd));
    let sl = sigma_lambda(lambda).expect("dominant input");
    let dagger_weight = oracle_shifted_weight(lambda, &sl).expect("dominant input");
    cx.eq(
        "sigma_lambda_diagram",
        dd.diagram().to_string(),
        WeightDiagram::of(&dagger_weight).to_string(),
    );
    let t = tail(lambda).expect("dominant input");
    cx.eq("tail", s_value(&dagger_weight), t);
    cx.holds(
        "tail_bounds",
        dd.multiplicity() as usize <= t && t <= lt,
        || format!("stack {} tail {t} longtail {lt}", dd.multiplicity()),
    );

    cx.report
}

/// Sweep all canonical dominant weights of gl(m|n) with positions in [0, bound].
pub fn run_verification_suite(m: usize, n: usize, bound: u32) -> OracleReport {
    let weights = canonical_dominant_weights(m, n, bound as i64);
    let mut report = weights
        .par_iter()
        .map(verify_weight)
        .reduce(OracleReport::default, OracleReport::merge);
    report.mismatches.sort();
    report
}

/// Φ(Ψ(D)) = D for every dagger diagram on positions [0, width) built from
/// ∘, ×, >, < and at most one stack ×^k with k ≤ max_stack.
pub fn verify_dagger_roundtrips(width: u32, max_stack: u32) -> OracleReport {
    let symbols = [Cell::EMPTY, Cell::CROSS, Cell::GT, Cell::LT];
    let total = 4usize.pow(width);
    let mut report = (0..total)
        .into_par_iter()
        .map(|code| {
            let mut base = WeightDiagram::empty();
            let mut c = code;
            for p in 0..width as i64 {
                base.set(p, symbols[c % 4]);
                c /= 4;
            }
            let mut candidates = vec![base.clone()];
            for p in 0..width as i64 {
                for k in 2..=max_stack {
                    let mut dk = base.clone();
                    dk.set(
                        p,
                        Cell {
                            crosses: k,
                            surplus: 0,
                        },
                    );
                    candidates.push(dk);
                }
            }
            let mut cx = Checker::new(String::new());
            for cand in candidates.into_iter().filter(is_dagger_diagram) {
                cx.input = cand.to_string();
                let dd = DaggerDiagram::new(cand.clone()).expect("filtered");
                match psi(&dd) {
                    Ok(w) => {
                        cx.holds("psi_dominant", w.is_dominant(), || w.to_string());
                        let back = phi(&w).map(|x| x.diagram().to_string());
                        cx.eq("phi_psi", Ok(cand.to_string()), back);
                    }
                    Err(e) => cx.holds("psi_defined", false, || e.to_string()),
                }
            }
            cx.report
        })
        .reduce(OracleReport::default, OracleReport::merge);
    report.mismatches.sort();
    report
}
