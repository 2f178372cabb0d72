//! Case dispatch and the wide-sensor branch.

use alloc::vec::Vec;
use core::fmt;

use crate::containing;
use crate::general;
use crate::model::{Branch, CaseKind, Diagnostics, Instance, SolutionReport};
use crate::one_sided;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Infeasible,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Infeasible => write!(f, "infeasible instance"),
        }
    }
}
impl core::error::Error for SolveError {}


/// Solves any feasible instance, dispatching on its case.
pub fn solve(inst: &Instance) -> Result<SolutionReport, SolveError> {
    match inst.classify() {
        CaseKind::InfeasibleCase => Err(SolveError::Infeasible),
        CaseKind::TrivialWideSensor => Ok(solve_wide(inst)),
        CaseKind::Containing => containing::solve_containing(inst)
            .map(|(report, _)| report)
            .map_err(|_| SolveError::Infeasible),
        CaseKind::OneSidedRight | CaseKind::OneSidedLeft => {
            one_sided::solve_one_sided(inst).map_err(|_| SolveError::Infeasible)
        }
        CaseKind::AllOutside => {
            general::solve_all_outside(inst).map_err(|_| SolveError::Infeasible)
        }
        CaseKind::General => general::solve_general(inst).map_err(|_| SolveError::Infeasible),
    }
}

/// One sensor can span the whole barrier (`2z >= beta`). An optimal
/// solution then needs at most two movers: either one sensor lands in the
/// kernel `[beta - z, z]` and covers everything, or a pair `(i, j)` covers
/// the two barrier ends with `y_i <= z`, `beta - z <= y_j <= y_i + 2z`.
/// Any longer chain reduces: a second chain member left of `beta - z`
/// already covers the left end (its reach past `beta - 2z <= 0`), making
/// the first redundant, and otherwise the first two members already cover
/// both ends.
fn solve_wide(inst: &Instance) -> SolutionReport {
    let n = inst.n();
    let x = inst.x();
    let z = inst.z();
    let beta = inst.beta();
    let two_z = inst.two_z();
    let kernel_lo = beta - z;
    let kernel_hi = z.clone();
    debug_assert!(kernel_lo <= kernel_hi);

    let clamp = |v: &Rat, lo: &Rat, hi: &Rat| -> Rat {
        if v < lo {
            lo.clone()
        } else if v > hi {
            hi.clone()
        } else {
            v.clone()
        }
    };

    // Best single sensor moved into the kernel.
    let mut best_cost: Option<Rat> = None;
    let mut best_moves: Vec<(usize, Rat)> = Vec::new();
    for (i, xi) in x.iter().enumerate() {
        let target = clamp(xi, &kernel_lo, &kernel_hi);
        let cost = (xi - &target).abs();
        if best_cost.as_ref().map_or(true, |b| &cost < b) {
            best_cost = Some(cost);
            best_moves = alloc::vec![(i, target)];
        }
    }

    // Best pair: i covers 0, j covers beta, chained. The cost in the left
    // position `a` is piecewise linear, so its minimum sits at a breakpoint.
    for i in 0..n {
        for j in i + 1..n {
            let a_hi = kernel_hi.clone(); // a <= z
            let a_lo = &kernel_lo - &two_z; // ensures a + 2z >= beta - z
            let mut candidates: Vec<Rat> = alloc::vec![
                clamp(&x[i], &a_lo, &a_hi),
                a_hi.clone(),
                a_lo.clone(),
                clamp(&(&x[j] - &two_z), &a_lo, &a_hi),
            ];
            candidates.sort();
            candidates.dedup();
            for a in candidates {
                let b_hi = &a + &two_z;
                let b = clamp(&x[j], &kernel_lo, &b_hi);
                debug_assert!(b >= kernel_lo && b <= b_hi);
                let cost = &(&x[i] - &a).abs() + &(&x[j] - &b).abs();
                if best_cost.as_ref().map_or(true, |bc| &cost < bc) {
                    best_cost = Some(cost);
                    best_moves = alloc::vec![(i, a.clone()), (j, b)];
                }
            }
        }
    }

    let mut y = x.to_vec();
    for (i, target) in &best_moves {
        y[*i] = target.clone();
    }
    // A mover may leapfrog an unmoved neighbour; reassigning the same
    // position multiset in index order keeps coverage and cannot raise the
    // cost (x is sorted), so the optimum is preserved order-preservingly.
    y.sort();
    let branch = if best_moves.len() <= 1 {
        Branch::WideSingle
    } else {
        Branch::WidePair
    };
    let diagnostics = Diagnostics {
        branch: Some(branch),
        ..Diagnostics::default()
    };
    let report = SolutionReport::assemble(inst, y, CaseKind::TrivialWideSensor, diagnostics);
    debug_assert!(crate::model::verify_coverage(
        &report.y,
        inst.z(),
        inst.beta()
    ));
    report
}
