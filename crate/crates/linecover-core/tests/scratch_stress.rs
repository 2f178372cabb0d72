//! Temporary heavy stress run (ignored by default).

use linecover_core::model::{self, CaseKind, Instance};
use linecover_core::oracle;
use linecover_core::rational::Rat;
use linecover_core::solve::solve;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

#[test]
#[ignore]
fn heavy_oracle_stress() {
    let mut mismatches = 0usize;
    for seed in 0..25u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed * 7919 + 13);
        for _ in 0..4000 {
            let n = rng.gen_range(1..=8);
            let zq = rng.gen_range(1..=8);
            let z = Rat::new(zq, 4);
            let bq = rng.gen_range(1..=(2 * zq * n as i64 + 8));
            let beta = Rat::new(bq, 4);
            let span = bq + 6 * zq + 4;
            let mut xs: Vec<Rat> = (0..n)
                .map(|_| Rat::new(rng.gen_range(-span..=2 * span), 4))
                .collect();
            xs.sort();
            let inst = Instance::new(z, beta, xs).unwrap();
            if inst.classify() == CaseKind::InfeasibleCase {
                continue;
            }
            let report = solve(&inst).unwrap();
            assert!(model::verify_coverage(&report.y, inst.z(), inst.beta()));
            assert!(report.y.windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(report.cost, model::total_cost(inst.x(), &report.y));
            let (oracle_cost, _) = oracle::oracle_optimal(&inst).unwrap();
            if report.cost != oracle_cost {
                mismatches += 1;
                eprintln!(
                    "MISMATCH {inst:?} case {:?}: solver {} oracle {}",
                    inst.classify(),
                    report.cost,
                    oracle_cost
                );
                if mismatches > 5 {
                    panic!("too many mismatches");
                }
            }
        }
    }
    assert_eq!(mismatches, 0);
}
