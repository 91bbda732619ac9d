//! Randomized agreement between closed forms and brute-force oracles on
//! weights larger than the exhaustive sweeps reach.

use glmn::atoms::atom_index_sets;
use glmn::base::{BaseWord, Letter};
use glmn::ctd::ctd;
use glmn::oracle::{oracle_ctd, oracle_s_value, oracle_shifted_weight, verify_weight};
use glmn::tails::{longtail, longtail_via_caps, longtail_via_ctd, phi, psi, s_value, tail};
use glmn::weight::ShiftedWeight;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn dominant(max_m: usize, max_n: usize, range: i64) -> impl Strategy<Value = ShiftedWeight> {
    let pos: Vec<i64> = (-range..=range).collect();
    (0..=max_m, 0..=max_n).prop_flat_map(move |(m, n)| {
        (subsequence(pos.clone(), m), subsequence(pos.clone(), n)).prop_map(|(e, d)| {
            ShiftedWeight::new(
                e.into_iter().rev().collect(),
                d.into_iter().map(|p| -p).collect(),
            )
        })
    })
}

fn with_base(
    max_m: usize,
    max_n: usize,
    range: i64,
) -> impl Strategy<Value = (ShiftedWeight, BaseWord)> {
    dominant(max_m, max_n, range).prop_flat_map(|lam| {
        let (m, n) = (lam.m(), lam.n());
        let letters: Vec<Letter> = std::iter::repeat_n(Letter::Eps, m)
            .chain(std::iter::repeat_n(Letter::Delta, n))
            .collect();
        (
            Just(lam),
            Just(letters).prop_shuffle().prop_map(BaseWord::new),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transport_matches_reflections((lam, sigma) in with_base(6, 6, 8)) {
        let closed = ctd(&lam).unwrap().transport(&lam, &sigma).unwrap();
        prop_assert_eq!(closed, oracle_shifted_weight(&lam, &sigma).unwrap());
    }

    #[test]
    fn ctd_matches_oracle(lam in dominant(5, 5, 8)) {
        prop_assert_eq!(ctd(&lam).unwrap(), oracle_ctd(&lam).unwrap());
    }

    #[test]
    fn longtail_forms_agree_and_bound_tail(lam in dominant(6, 6, 8)) {
        let lt = longtail(&lam).unwrap();
        prop_assert_eq!(lt, longtail_via_ctd(&lam).unwrap());
        prop_assert_eq!(lt, longtail_via_caps(&lam).unwrap());
        let t = tail(&lam).unwrap();
        prop_assert!(t <= lt);
        prop_assert!(lt <= lam.m().min(lam.n()));
    }

    #[test]
    fn phi_then_psi_is_identity(lam in dominant(7, 7, 10)) {
        prop_assert_eq!(psi(&phi(&lam).unwrap()).unwrap(), lam);
    }

    #[test]
    fn s_value_matches_subset_search((lam, sigma) in with_base(4, 4, 3)) {
        let nu = ctd(&lam).unwrap().transport(&lam, &sigma).unwrap();
        prop_assert_eq!(s_value(&nu), oracle_s_value(&nu).unwrap());
    }

    #[test]
    fn atoms_are_dominant_and_cover_the_ctd(lam in dominant(6, 6, 8)) {
        let c = ctd(&lam).unwrap();
        let dec = atom_index_sets(&lam).unwrap();
        for a in &dec.atoms {
            prop_assert!(a.weight(&lam).is_dominant());
        }
        for r in c.ones() {
            prop_assert!(dec.atom_of_root(r.i, r.j).is_some(), "bit {} outside atoms", r);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn full_suite_on_random_weights(lam in dominant(4, 4, 6)) {
        let report = verify_weight(&lam);
        prop_assert!(report.is_ok(), "{:?}", report.mismatches);
    }
}
