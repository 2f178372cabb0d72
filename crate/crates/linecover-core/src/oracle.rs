//! Independent exact solvers used to verify the main algorithm.
//!
//! [`oracle_optimal`] is a brute-force optimum for small instances. By the
//! order-preserving property an optimal solution moves only sensors whose
//! sc-intervals chain across the barrier, and for a fixed consecutive
//! window the problem is the LP
//!
//! ```text
//!   minimize sum |y_t - x_t|
//!   s.t. y_i <= z,  y_j >= beta - z,  y_{t+1} - y_t <= 2z
//! ```
//!
//! whose feasible points all cover the barrier and whose vertex optima pin
//! every `y_t` to a tight chain anchored at some original coordinate or at
//! a barrier end. That yields the candidate grid
//! `{x_s + 2z(t-s)} ∪ {z + 2z(t-i)} ∪ {beta - z - 2z(j-t)}`, searched by
//! dynamic programming; the answer is the minimum over all feasible
//! windows. Exponential in nothing but still `O(n^5)`, so capped at small
//! `n`.
//!
//! [`reference_quadratic_containing`] replays the classical `O(n^2)` greedy
//! for the containing case with plain arrays and fresh geometry every step:
//! no trees, no incremental records. It must match the tree-based solver's
//! positions exactly.

use alloc::vec;
use alloc::vec::Vec;

use crate::model::{Branch, CaseKind, Diagnostics, Instance, SolutionReport};
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, bound: usize },
    Infeasible,
    NotContaining,
}

impl core::fmt::Display for OracleError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OracleError::TooLarge { n, bound } => {
                write!(f, "oracle limited to n <= {bound}, got {n}")
            }
            OracleError::Infeasible => write!(f, "infeasible instance"),
            OracleError::NotContaining => write!(f, "not a containing-case instance"),
        }
    }
}
impl core::error::Error for OracleError {}


pub const DEFAULT_ORACLE_BOUND: usize = 10;

/// Globally optimal cost and a witness configuration, for `n` up to `bound`.
pub fn oracle_optimal_bounded(
    inst: &Instance,
    bound: usize,
) -> Result<(Rat, Vec<Rat>), OracleError> {
    if inst.n() > bound {
        return Err(OracleError::TooLarge { n: inst.n(), bound });
    }
    if !inst.is_feasible() {
        return Err(OracleError::Infeasible);
    }
    let n = inst.n();
    let x = inst.x();
    let z = inst.z();
    let beta = inst.beta();
    let two_z = inst.two_z();
    let left_cap = z.clone(); // y_i <= z covers the left barrier end
    let right_need = beta - z; // y_j >= beta - z covers the right end

    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for i in 0..n {
        for j in i..n {
            let w = j - i + 1;
            if &two_z.mul_int(w as i64) < beta {
                continue; // window too small to span the barrier
            }
            if let Some((cost, wy)) = window_dp(x, z, &two_z, &left_cap, &right_need, i, j) {
                let mut y = x.to_vec();
                y[i..=j].clone_from_slice(&wy);
                let better = match &best {
                    None => true,
                    Some((c, _)) => &cost < c,
                };
                if better {
                    best = Some((cost, y));
                }
            }
        }
    }
    best.ok_or(OracleError::Infeasible)
}

/// [`oracle_optimal_bounded`] with the default size cap.
pub fn oracle_optimal(inst: &Instance) -> Result<(Rat, Vec<Rat>), OracleError> {
    oracle_optimal_bounded(inst, DEFAULT_ORACLE_BOUND)
}

fn window_dp(
    x: &[Rat],
    z: &Rat,
    two_z: &Rat,
    left_cap: &Rat,
    right_need: &Rat,
    i: usize,
    j: usize,
) -> Option<(Rat, Vec<Rat>)> {
    let w = j - i + 1;
    // Candidate grid per slot: anchors propagated along tight chains.
    let mut grid: Vec<Vec<Rat>> = Vec::with_capacity(w);
    for t in i..=j {
        let mut c: Vec<Rat> = Vec::with_capacity(w + 2);
        for s in i..=j {
            let off = t as i64 - s as i64;
            c.push(&x[s] + &two_z.mul_int(off));
        }
        c.push(z + &two_z.mul_int((t - i) as i64));
        c.push(right_need - &two_z.mul_int((j - t) as i64));
        c.sort();
        c.dedup();
        grid.push(c);
    }

    // dp[t][v] = best cost placing sensors i..=i+t with y_{i+t} = grid[t][v]
    let mut dp: Vec<Vec<Option<(Rat, usize)>>> = Vec::with_capacity(w);
    let first: Vec<Option<(Rat, usize)>> = grid[0]
        .iter()
        .map(|c| {
            if c <= left_cap {
                Some(((c - &x[i]).abs(), usize::MAX))
            } else {
                None
            }
        })
        .collect();
    dp.push(first);
    for t in 1..w {
        let xt = &x[i + t];
        let row: Vec<Option<(Rat, usize)>> = grid[t]
            .iter()
            .map(|c| {
                let mut best: Option<(Rat, usize)> = None;
                let floor = c - two_z; // need y_prev >= c - 2z
                for (pv, prev) in grid[t - 1].iter().enumerate() {
                    if prev < &floor {
                        continue;
                    }
                    if let Some((pc, _)) = &dp[t - 1][pv] {
                        let cand = pc + &(c - xt).abs();
                        if best.as_ref().map_or(true, |(b, _)| &cand < b) {
                            best = Some((cand, pv));
                        }
                    }
                }
                best
            })
            .collect();
        dp.push(row);
    }

    let mut end: Option<(Rat, usize)> = None;
    for (v, c) in grid[w - 1].iter().enumerate() {
        if c < right_need {
            continue;
        }
        if let Some((cost, _)) = &dp[w - 1][v] {
            if end.as_ref().map_or(true, |(b, _)| cost < b) {
                end = Some((cost.clone(), v));
            }
        }
    }
    let (cost, mut v) = end?;
    let mut y = vec![Rat::zero(); w];
    for t in (0..w).rev() {
        y[t] = grid[t][v].clone();
        v = dp[t][v].as_ref().unwrap().1;
    }
    Some((cost, y))
}

/// The classical `O(n^2)` containing-case greedy with naive arrays: every
/// step re-derives gaps, overlaps, costs, and displacements from scratch.
pub fn reference_quadratic_containing(inst: &Instance) -> Result<SolutionReport, OracleError> {
    if !inst.is_feasible() {
        return Err(OracleError::Infeasible);
    }
    let hits = |y: &Rat| !(y + inst.z()).is_negative() && &(y - inst.z()) <= inst.beta();
    if !inst.x().iter().all(hits) {
        return Err(OracleError::NotContaining);
    }
    let n = inst.n();
    let x = inst.x();
    let z = inst.z();
    let beta = inst.beta();
    let mut pos = x.to_vec();
    let mut processes = 0usize;

    loop {
        assert!(processes <= 4 * n, "reference greedy exceeded 4n processes");
        // fresh geometry
        let (gaps, overlaps) = scan(&pos, z, beta);
        let Some(gap) = gaps.first() else { break };

        // nearest overlap on each side of the gap, by position order
        let gap_left_key = match gap.left_gen {
            Some(a) => (a, 1u8),
            None => (gap.right_gen.unwrap(), 0u8),
        };
        let gap_right_key = match gap.right_gen {
            Some(b) => (b, 0u8),
            None => (gap.left_gen.unwrap() + 1, 0u8),
        };
        let o_l = overlaps
            .iter()
            .filter(|o| (o.left_gen, o.rank) < gap_left_key)
            .next_back();
        let o_r = overlaps
            .iter()
            .find(|o| (o.left_gen, o.rank) >= gap_right_key);

        let rbs = match gap.right_gen {
            Some(b) => b,
            None => gap.left_gen.unwrap() + 1,
        };
        let cost_r = o_r.map(|o| (o.left_gen - rbs + 1) as i64);
        let cost_l = o_l.map(|o| {
            let lbe = match gap.left_gen {
                Some(a) => a,
                None => gap.right_gen.unwrap() - 1,
            };
            let size = (lbe - o.right_gen + 1) as i64;
            let positive = (o.right_gen..=lbe)
                .filter(|&t| pos[t] < x[t])
                .count() as i64;
            size - 2 * positive
        });
        let take_right = match (cost_r, cost_l) {
            (Some(r), Some(l)) => r < l,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => unreachable!("feasible instance has an overlap"),
        };

        if take_right {
            let o = o_r.unwrap();
            let delta = gap.length.clone().min(o.length.clone());
            for t in rbs..=o.left_gen {
                pos[t] -= &delta;
            }
        } else {
            let o = o_l.unwrap();
            let lbe = match gap.left_gen {
                Some(a) => a,
                None => gap.right_gen.unwrap() - 1,
            };
            let alpha = (o.right_gen..=lbe)
                .filter(|&t| pos[t] < x[t])
                .map(|t| &x[t] - &pos[t])
                .min();
            let mut delta = gap.length.clone().min(o.length.clone());
            if let Some(a) = alpha {
                delta = delta.min(a);
            }
            for t in o.right_gen..=lbe {
                pos[t] += &delta;
            }
        }
        processes += 1;
    }

    let diagnostics = Diagnostics {
        shift_processes: processes,
        branch: Some(Branch::Containing),
        ..Diagnostics::default()
    };
    Ok(SolutionReport::assemble(
        inst,
        pos,
        CaseKind::Containing,
        diagnostics,
    ))
}

struct ScanGap {
    left_gen: Option<usize>,
    right_gen: Option<usize>,
    length: Rat,
}

struct ScanOverlap {
    left_gen: usize,
    right_gen: usize,
    rank: u8,
    length: Rat,
}

/// Standalone gap/overlap scan for the reference greedy. Deliberately a
/// separate implementation from `model::enumerate_gaps_overlaps`.
fn scan(pos: &[Rat], z: &Rat, beta: &Rat) -> (Vec<ScanGap>, Vec<ScanOverlap>) {
    let n = pos.len();
    let zero = Rat::zero();
    let mut gaps = Vec::new();
    let mut frontier = zero.clone();
    let mut gen: Option<usize> = None;
    for i in 0..n {
        let lo = &pos[i] - z;
        let hi = &pos[i] + z;
        if hi < zero {
            continue;
        }
        if &lo > beta {
            break;
        }
        if lo > frontier {
            gaps.push(ScanGap {
                left_gen: gen,
                right_gen: Some(i),
                length: &lo - &frontier,
            });
        }
        if hi > frontier {
            frontier = hi.min(beta.clone());
        }
        gen = Some(i);
        if &frontier >= beta {
            break;
        }
    }
    if &frontier < beta {
        gaps.push(ScanGap {
            left_gen: gen,
            right_gen: None,
            length: beta - &frontier,
        });
    }

    let mut overlaps = Vec::new();
    for i in 0..n {
        let lo = &pos[i] - z;
        let hi = &pos[i] + z;
        let prev_hi = if i > 0 { Some(&pos[i - 1] + z) } else { None };
        let next_lo = if i + 1 < n {
            Some(&pos[i + 1] - z)
        } else {
            None
        };
        // off-barrier piece on the left, unless merged into the previous pair
        let merged_left = prev_hi
            .as_ref()
            .map_or(false, |ph| ph > &lo && lo < zero && ph > &zero);
        if hi > zero && lo < zero && !merged_left {
            overlaps.push(ScanOverlap {
                left_gen: i,
                right_gen: i,
                rank: 0,
                length: &zero - &lo,
            });
        } else if hi <= zero {
            overlaps.push(ScanOverlap {
                left_gen: i,
                right_gen: i,
                rank: 0,
                length: z.mul_int(2),
            });
        }
        if let Some(nl) = &next_lo {
            if &hi > nl {
                let straddle_zero = nl < &zero && hi > zero;
                let straddle_beta = nl < beta && &hi > beta;
                let (a, b) = if straddle_zero {
                    (nl.clone(), hi.clone().min(beta.clone()))
                } else if straddle_beta {
                    (nl.clone().max(zero.clone()), hi.clone())
                } else {
                    (nl.clone().max(zero.clone()), hi.clone().min(beta.clone()))
                };
                if b > a {
                    overlaps.push(ScanOverlap {
                        left_gen: i,
                        right_gen: i + 1,
                        rank: 1,
                        length: &b - &a,
                    });
                }
            }
        }
        let merged_right = next_lo
            .as_ref()
            .map_or(false, |nl| &hi > nl && nl < beta && &hi > beta);
        if &lo < beta && &hi > beta && !merged_right {
            overlaps.push(ScanOverlap {
                left_gen: i,
                right_gen: i,
                rank: 2,
                length: &hi - beta,
            });
        } else if &lo >= beta {
            overlaps.push(ScanOverlap {
                left_gen: i,
                right_gen: i,
                rank: 2,
                length: z.mul_int(2),
            });
        }
    }
    gaps.retain(|g| g.length.is_positive());
    overlaps.retain(|o| o.length.is_positive());
    (gaps, overlaps)
}
