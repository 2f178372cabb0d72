//! Scaling benchmark: solves seeded mixed instances over a size series and
//! records wall time plus the solver's structural counters.

use std::time::Instant;

use anyhow::Result;

use crate::gen::{generate, GenCase, GenSpec};
use linecover_core::solve::solve;

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub n: usize,
    pub wall_ns: u128,
    pub shift_processes: usize,
    pub reverse_ops: usize,
}

pub const CSV_HEADER: &str = "n,wall_ns,shift_processes,reverse_ops";

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n, r.wall_ns, r.shift_processes, r.reverse_ops
        ));
    }
    out
}

/// Runs `runs` solves per size. Instances are regenerated per run from
/// `seed` so the series is reproducible.
pub fn run_bench(sizes: &[usize], runs: usize, seed: u64) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::with_capacity(sizes.len() * runs);
    for &n in sizes {
        for run in 0..runs {
            let spec = GenSpec {
                n,
                seed: seed ^ (run as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (n as u64),
                case: GenCase::Mixed,
            };
            let inst = generate(&spec)?;
            let start = Instant::now();
            let report = solve(&inst).map_err(|e| anyhow::anyhow!("solve failed: {e}"))?;
            let wall_ns = start.elapsed().as_nanos();
            records.push(BenchRecord {
                n,
                wall_ns,
                shift_processes: report.diagnostics.shift_processes,
                reverse_ops: report.diagnostics.reverse_ops,
            });
        }
    }
    Ok(records)
}

/// Median wall time per size, in nanoseconds.
pub fn medians(records: &[BenchRecord]) -> Vec<(usize, u128)> {
    let mut sizes: Vec<usize> = records.iter().map(|r| r.n).collect();
    sizes.dedup();
    sizes
        .into_iter()
        .map(|n| {
            let mut times: Vec<u128> = records
                .iter()
                .filter(|r| r.n == n)
                .map(|r| r.wall_ns)
                .collect();
            times.sort_unstable();
            (n, times[times.len() / 2])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_produces_stable_csv() {
        let records = run_bench(&[64, 128], 3, 7).unwrap();
        assert_eq!(records.len(), 6);
        let csv = to_csv(&records);
        assert!(csv.starts_with("n,wall_ns,shift_processes,reverse_ops\n"));
        assert_eq!(csv.lines().count(), 7);
        let meds = medians(&records);
        assert_eq!(meds.len(), 2);
        assert_eq!(meds[0].0, 64);
    }
}
