//! Temporary debugging helper (removed before release builds matter):
//! hunts for the smallest instances violating in-flight invariants.

use linecover_core::containing;
use linecover_core::model::{CaseKind, Instance};
use linecover_core::rational::Rat;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn quarters(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    Rat::new(rng.gen_range(lo..=hi), 4)
}

#[test]
#[ignore]
fn hunt_trailing_cost_violation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2E);
    for iter in 0..2000000 {
        let n = rng.gen_range(2..=7);
        let zq = rng.gen_range(1..=8);
        let z = Rat::new(zq, 4);
        let bq = rng.gen_range(zq * 2 + 1..=(2 * zq * n as i64).max(zq * 2 + 2));
        let beta = Rat::new(bq, 4);
        let off = rng.gen_range(1..n);
        let mut xs: Vec<Rat> = (0..n - off)
            .map(|_| quarters(&mut rng, -zq, bq + zq))
            .collect();
        for _ in 0..off {
            xs.push(Rat::new(rng.gen_range(bq + zq + 1..=bq + 8 * zq + 16), 4));
        }
        xs.sort();
        let inst = Instance::new(z, beta, xs).unwrap();
        if inst.classify() != CaseKind::OneSidedRight {
            continue;
        }
        let m = inst
            .x()
            .iter()
            .filter(|y| &(*y - inst.z()) <= inst.beta())
            .count();
        let lambda = inst.lambda();
        let start = m.max(lambda);
        if start > inst.n() {
            continue;
        }
        let parked = inst.beta() + inst.z();
        let mut prepared = inst.x().to_vec();
        for p in prepared.iter_mut().skip(m) {
            *p = parked.clone();
        }
        let outcome =
            containing::run_prepared(&prepared, 0, start - 1, inst.z(), inst.beta(), true);
        let view: Vec<_> = outcome
            .log
            .entries()
            .iter()
            .rev()
            .take_while(|p| !p.right_candidate)
            .collect();
        let monotone = view.iter().zip(view.iter().skip(1)).all(|(a, b)| {
            a.cost + a.gap_right_block_start as i64 >= b.cost + b.gap_right_block_start as i64
        });
        if !monotone {
            eprintln!("iter {iter}: {inst:?}");
            eprintln!("prepared: {prepared:?} active 0..{}", start - 1);
            for p in outcome.log.entries() {
                eprintln!("  {p:?}");
            }
            panic!("found violation");
        }
    }
}
