//! Deterministic instance generation: the same (spec, seed) pair always
//! yields the byte-identical instance. Coordinates are quarter-integers so
//! exact ties and endpoint coincidences occur naturally at larger scales.

use anyhow::{bail, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use linecover_core::model::Instance;
use linecover_core::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenCase {
    Containing,
    OneSided,
    General,
    AllOutside,
    Mixed,
}

impl std::str::FromStr for GenCase {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "containing" => GenCase::Containing,
            "one_sided" | "one-sided" => GenCase::OneSided,
            "general" => GenCase::General,
            "all_outside" | "all-outside" => GenCase::AllOutside,
            "mixed" => GenCase::Mixed,
            other => bail!("unknown case {other:?} (containing|one_sided|general|all_outside|mixed)"),
        })
    }
}

#[derive(Debug, Clone)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    pub case: GenCase,
}

/// Draws `count` distinct quarter-integer coordinates in `[lo, hi]`
/// (numerator units) and returns them sorted.
fn distinct_quarters(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    debug_assert!(hi - lo + 1 >= count as i64 * 2);
    let mut seen = std::collections::HashSet::with_capacity(count * 2);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = rng.gen_range(lo..=hi);
        if seen.insert(v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    generate_with(&mut rng, spec.case, spec.n)
}

fn generate_with(rng: &mut ChaCha8Rng, case: GenCase, n: usize) -> Result<Instance> {
    if n == 0 {
        bail!("need at least one sensor");
    }
    let case = match case {
        GenCase::Mixed => *[
            GenCase::Containing,
            GenCase::OneSided,
            GenCase::General,
            GenCase::AllOutside,
        ]
        .choose(rng)
        .unwrap(),
        c => c,
    };
    let min_n = match case {
        GenCase::Containing | GenCase::OneSided | GenCase::AllOutside => 2,
        GenCase::General => 3,
        GenCase::Mixed => unreachable!(),
    };
    if n < min_n {
        bail!("case {case:?} needs at least {min_n} sensors");
    }
    // zq, bq are numerators over denominator 4; the barrier is long enough
    // that n distinct on-barrier quarter coordinates always exist
    let zq = rng.gen_range(2..=8);
    let bq_lo = (2 * zq + 1).max(2 * n as i64 + 1);
    let bq = rng.gen_range(bq_lo..=(2 * zq * n as i64).max(bq_lo));
    let z = Rat::new(zq, 4);
    let beta = Rat::new(bq, 4);
    let far = |rng: &mut ChaCha8Rng, count: usize, right: bool| -> Vec<i64> {
        // strictly off the barrier: right of beta + z or left of -z
        let lo = bq + zq + 1;
        let hi = bq + zq + 1 + (8 * zq) * count.max(2) as i64;
        let qs = distinct_quarters(rng, count, lo, hi);
        if right {
            qs
        } else {
            let mut v: Vec<i64> = qs.into_iter().map(|q| bq - q).collect();
            v.sort_unstable();
            v
        }
    };

    let quarters: Vec<i64> = match case {
        GenCase::Containing => distinct_quarters(rng, n, -zq, bq + zq),
        GenCase::OneSided => {
            let off = rng.gen_range(1..n);
            let mut qs = distinct_quarters(rng, n - off, -zq, bq + zq);
            qs.extend(far(rng, off, true));
            // half the time mirror to the left-sided variant
            if rng.gen_bool(0.5) {
                let mut v: Vec<i64> = qs.into_iter().map(|q| bq - q).collect();
                v.sort_unstable();
                v
            } else {
                qs
            }
        }
        GenCase::General => {
            let left = rng.gen_range(1..=n - 2);
            let mid = rng.gen_range(1..=n - left - 1);
            let right = n - left - mid;
            let mut qs = far(rng, left, false);
            qs.extend(distinct_quarters(rng, mid, -zq, bq + zq));
            qs.extend(far(rng, right, true));
            qs
        }
        GenCase::AllOutside => {
            let left = rng.gen_range(0..=n);
            let mut qs = far(rng, left, false);
            qs.extend(far(rng, n - left, true));
            qs
        }
        GenCase::Mixed => unreachable!(),
    };
    let x: Vec<Rat> = quarters.into_iter().map(|q| Rat::new(q, 4)).collect();
    Ok(Instance::new(z, beta, x).expect("generated instance must be well-formed"))
}
