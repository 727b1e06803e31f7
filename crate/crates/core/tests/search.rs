mod common;

use cube_spectra_core::*;

#[test]
fn best_value_grows_with_n() {
    let cfg = SearchConfig::default();
    for d in [4u32, 6] {
        let mut last = 0.0;
        for n in 1..=24usize.min(1 << d) {
            let r = max_lambda1(n, d, &cfg).unwrap();
            assert!(r.best_lambda1 >= last - 1e-12, "d={d} n={n}");
            assert!(r.complete);
            assert!(is_compressed(r.maximizer()));
            for ranked in &r.runner_ups {
                assert!(ranked.lambda1 <= r.best_lambda1 + 1e-12);
            }
            last = r.best_lambda1;
        }
    }
}

#[test]
fn maximizers_agree_with_the_power_oracle() {
    let cfg = SearchConfig::default();
    for n in 2..=20 {
        let r = max_lambda1(n, 8, &cfg).unwrap();
        for m in &r.maximizers {
            assert!((common::power_lambda1(m) - r.best_lambda1).abs() < 1e-8);
        }
    }
}

#[test]
fn enumeration_yields_distinct_compressed_families() {
    for n in 1..=20 {
        let all: Vec<VertexFamily> = enumerate_compressed(n, 6).unwrap().collect();
        for f in &all {
            assert_eq!(f.len(), n);
            assert!(is_compressed(f));
        }
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.members().cmp(b.members()));
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}

#[test]
fn star_regime_table() {
    // at n = d + 1 the star is optimal only for d ≤ 2; beyond that other
    // compressed families win
    let cfg = SearchConfig::default();
    for d in 1..=10u32 {
        let rows = verify_star_regime([d as usize + 1], d, &cfg).unwrap();
        let row = &rows[0];
        assert!((row.star_lambda1 - (d as f64).sqrt()).abs() < 1e-9);
        assert_eq!(row.star_optimal, d <= 2, "d={d}");
        assert!(row.best_lambda1 >= row.star_lambda1 - 1e-12);
    }
}
