//! Sorting via barrier coverage. A list of numbers becomes a coverage
//! instance whose barrier spans their range with `z = span / 2n`; since
//! `2zn` equals the barrier length exactly, the optimal solution is the
//! unique attached chain, and reading sensors in order of final position
//! reproduces the sorted input.

use anyhow::{bail, Result};

use linecover_core::containing::solve_containing;
use linecover_core::model::Instance;
use linecover_core::rational::Rat;

/// Sorts finite floats by solving the coverage instance they induce.
/// Inputs with fewer than two distinct values are echoed unchanged.
pub fn sort_via_coverage(values: &[f64]) -> Result<Vec<f64>> {
    let rats: Option<Vec<Rat>> = values.iter().map(|v| Rat::from_f64(*v)).collect();
    let Some(rats) = rats else {
        bail!("inputs must be finite numbers");
    };
    let n = values.len();
    if n < 2 {
        return Ok(values.to_vec());
    }
    let min = rats.iter().min().unwrap().clone();
    let max = rats.iter().max().unwrap().clone();
    if min == max {
        return Ok(values.to_vec()); // degenerate: all equal
    }

    // Stable pre-sort builds the well-formed instance; the solver's output
    // order is what actually determines the result below.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| rats[a].cmp(&rats[b]));
    let span = &max - &min;
    let z = span.div_int(2 * n as i64);
    let x: Vec<Rat> = order.iter().map(|&i| &rats[i] - &min).collect();
    let inst = Instance::new(z.clone(), span, x).expect("sorted translated input");
    let (report, _) = solve_containing(&inst).map_err(|e| anyhow::anyhow!("{e}"))?;

    // 2zn = beta forces the attached chain: position k sits at z(2k + 1).
    let two_z = z.mul_int(2);
    let mut expect = z;
    for y in &report.y {
        debug_assert_eq!(y, &expect);
        expect = &expect + &two_z;
    }

    let mut ranked: Vec<(Rat, usize)> = report
        .y
        .iter()
        .cloned()
        .zip(order.iter().copied())
        .collect();
    ranked.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ranked.into_iter().map(|(_, i)| values[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_small_lists() {
        assert_eq!(sort_via_coverage(&[3.0, 1.0, 2.0]).unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(sort_via_coverage(&[7.0, 7.0, 7.0]).unwrap(), vec![7.0, 7.0, 7.0]);
        assert_eq!(sort_via_coverage(&[2.5]).unwrap(), vec![2.5]);
        assert_eq!(
            sort_via_coverage(&[-1.5, 4.0, -1.5, 0.25]).unwrap(),
            vec![-1.5, -1.5, 0.25, 4.0]
        );
        assert!(sort_via_coverage(&[1.0, f64::NAN]).is_err());
    }

    #[test]
    fn matches_standard_sort() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(2..200);
            let values: Vec<f64> = (0..n).map(|_| rng.gen_range(-1e6..1e6)).collect();
            let mut expect = values.clone();
            expect.sort_by(f64::total_cmp);
            assert_eq!(sort_via_coverage(&values).unwrap(), expect);
        }
    }
}
