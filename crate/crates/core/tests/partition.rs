mod common;

use cube_spectra_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// the block degree can exceed εd by the safety element added to each B_k;
// every other check must hold on every certificate
const SAFETY_GAP: &str = "block max degree ≤ m_k ≤ εd";

fn check(f: &VertexFamily, eps: f64) -> Option<bool> {
    let cert = build_partition(f, eps).ok()?;
    let report = verify_partition(&cert, f);
    for c in report.failures() {
        assert_eq!(c.name, SAFETY_GAP, "{f:?} at ε = {eps}: {:?}", c.witness);
    }
    assert!(report.parts.iter().all(|p| p.passed()));
    if !cert.trivial {
        assert_eq!(cert.e.last().unwrap(), f);
    }
    Some(report.all_passed())
}

#[test]
fn certificates_for_random_compressed_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut built = 0;
    for _ in 0..300 {
        let d = rng.gen_range(5..=10);
        let n = rng.gen_range(1..=200usize.min(1 << d));
        let f = common::random_compressed(n, d, &mut rng);
        let tight = (common::degeneracy(&f) as f64 + 0.5) / d as f64;
        for eps in [tight, 0.4, 0.6] {
            built += check(&f, eps).is_some() as usize;
        }
    }
    assert!(built >= 300);
}

#[test]
fn presets_produce_usable_epsilons() {
    let g = hamming_ball(10, 1).unwrap();
    for preset in [
        EpsilonPreset::StarCover,
        EpsilonPreset::LogRatio { alpha: 1.0, i: 1 },
        EpsilonPreset::FixedRadius { i: 1 },
    ] {
        let eps = preset.epsilon(g.len(), 10).unwrap();
        assert!(eps > 0.0, "{}", preset.name());
        check(&g, eps);
    }
}

#[test]
fn safety_gap_has_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    let mut gaps = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=256);
        let f = common::random_compressed(n, 8, &mut rng);
        let tight = (common::degeneracy(&f) as f64 + 0.5) / 8.0;
        if check(&f, tight) == Some(false) {
            gaps += 1;
        }
    }
    assert!(gaps > 0);
}
