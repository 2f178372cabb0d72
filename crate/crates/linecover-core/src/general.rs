//! General case: off-barrier sensors on both sides of the barrier.
//!
//! With `l`/`r` the leftmost/rightmost sensors whose sc-intervals meet the
//! barrier and `lambda = ceil(beta / 2z)` the minimum cover size, the
//! optimum is `min D(i, j)` over windows `S(i, j)` spanning `S(l, r)`:
//! park `S(i, l-1)` at `-z` and `S(r+1, j)` at `beta + z`, then solve the
//! containing case. Two candidates cover all windows:
//!
//! * `sol1`: the one-sided solve with all left sensors parked fixes the
//!   right end `r*`; a mirrored one-sided solve on `S(0, r*)` then finds
//!   the best left end. Exact whenever the optimal window has more than
//!   `lambda` sensors (and when `|S(l, r)| >= lambda` it is exact outright).
//! * `sol2`: the best among windows of exactly `lambda` sensors, computed
//!   by sliding the window one step at a time: reverse operations absorb
//!   the entering sensor's fresh overlap, then the leaving head's coverage
//!   is re-bought by eliminating worklist overlaps left to right. Once some
//!   window's tail pokes right of the barrier every later window is the
//!   plain attached pattern and an event sweep prices the rest.
//!
//! Taking the cheaper candidate is safe even when the case split cannot be
//! decided at run time: `sol1` is always the cost of some feasible window.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::containing;
use crate::model::{
    self, Branch, Diagnostics, Instance, SolutionReport,
};
use crate::one_sided;
use crate::rational::Rat;
use crate::trees::{LeftShiftTree, PositionTree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralError {
    Infeasible,
}

impl core::fmt::Display for GeneralError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeneralError::Infeasible => write!(f, "infeasible instance"),
        }
    }
}
impl core::error::Error for GeneralError {}


impl From<one_sided::OneSidedError> for GeneralError {
    fn from(_: one_sided::OneSidedError) -> Self {
        GeneralError::Infeasible
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Left,
    Right,
}

/// Aggregate distance of every attached `lambda`-window against `refs`.
///
/// Window `s` places sensors `s..s+lambda-1` in attached positions with the
/// head at `z`; the value reported for `s` is the sum over window members
/// of the distance to their reference coordinate. Computed by one event
/// sweep: between windows the moving block slides left by `2z`, the
/// aggregate changes at rate `lambda - 2k` with `k` the members currently
/// right of their reference, and `k` updates as members cross or swap in.
fn attached_window_costs(
    refs: &[Rat],
    z: &Rat,
    lambda: usize,
    w_first: usize,
    w_last: usize,
) -> Vec<Rat> {
    assert!(lambda >= 1 && w_first <= w_last && w_last + lambda <= refs.len() + 1);
    assert!(w_last + lambda - 1 < refs.len());
    let two_z = z.mul_int(2);
    // Virtual start position: sensor t sits at v(t) - sigma while moving,
    // where sigma = 2z * (window - w_first).
    let v = |t: usize| -> Rat { z + &two_z.mul_int((t - w_first) as i64) };

    let mut flagged = alloc::vec![false; refs.len()];
    let mut m = Rat::zero();
    let mut k: i64 = 0;
    for t in w_first..w_first + lambda {
        let p = v(t);
        m += &(&p - &refs[t]).abs();
        if p > refs[t] {
            flagged[t] = true;
            k += 1;
        }
    }

    // Crossing events: sensor t meets its reference at sigma = v(t) - ref.
    // Ties are processed in index order. Events fire only while flagged.
    let mut events: Vec<(Rat, usize)> = (w_first..=w_last + lambda - 1)
        .map(|t| (&v(t) - &refs[t], t))
        .filter(|(s, _)| s.is_positive())
        .collect();
    events.sort();
    let mut ev = 0usize;

    let mut out = Vec::with_capacity(w_last - w_first + 1);
    out.push(m.clone());
    let mut sigma_run = Rat::zero();
    for w in w_first..w_last {
        let sigma_cur = two_z.mul_int((w - w_first) as i64);
        let target = two_z.mul_int((w + 1 - w_first) as i64);
        // leaver stops moving and returns to bookkeeping-free rest
        let leaver_pos = &v(w) - &sigma_cur;
        m -= &(&leaver_pos - &refs[w]).abs();
        if flagged[w] {
            flagged[w] = false;
            k -= 1;
        }
        // enterer joins the moving block at its virtual position
        let e = w + lambda;
        let enter_pos = &v(e) - &sigma_cur;
        m += &(&enter_pos - &refs[e]).abs();
        if enter_pos > refs[e] {
            flagged[e] = true;
            k += 1;
        }
        // advance to the next window boundary, crossing by crossing
        while ev < events.len() && events[ev].0 <= target {
            let (sig, t) = &events[ev];
            if flagged[*t] {
                m += &(sig - &sigma_run).mul_int(lambda as i64 - 2 * k);
                sigma_run = sig.clone();
                flagged[*t] = false;
                k -= 1;
            }
            ev += 1;
        }
        m += &(&target - &sigma_run).mul_int(lambda as i64 - 2 * k);
        sigma_run = target;
        out.push(m.clone());
    }
    out
}

/// Aggregate distances of attached windows against the input coordinates,
/// one value per window start in `starts`. `Anchor::Left` pins the head at
/// `z`; `Anchor::Right` pins the tail at `beta - z` (computed by mirroring).
pub fn sweep_attached_windows(
    inst: &Instance,
    anchor: Anchor,
    starts: core::ops::RangeInclusive<usize>,
) -> Vec<Rat> {
    let (first, last) = (*starts.start(), *starts.end());
    let lambda = inst.lambda();
    match anchor {
        Anchor::Left => attached_window_costs(inst.x(), inst.z(), lambda, first, last),
        Anchor::Right => {
            let n = inst.n();
            let mirrored = model::mirror_positions(inst.x(), inst.beta());
            let mut costs = attached_window_costs(
                &mirrored,
                inst.z(),
                lambda,
                n - lambda - last,
                n - lambda - first,
            );
            costs.reverse();
            costs
        }
    }
}

/// No sc-interval meets the barrier: the optimum is an attached
/// `lambda`-window anchored at one barrier end (left-anchored tie wins).
pub fn solve_all_outside(inst: &Instance) -> Result<SolutionReport, GeneralError> {
    if !inst.is_feasible() {
        return Err(GeneralError::Infeasible);
    }
    let n = inst.n();
    let lambda = inst.lambda();
    // Touching a barrier endpoint contributes zero measure, so such
    // sensors change nothing structurally and are allowed here.
    debug_assert!(inst.x().iter().all(|y| {
        !(y + inst.z()).is_positive() || &(y - inst.z()) >= inst.beta()
    }));
    let left = sweep_attached_windows(inst, Anchor::Left, 0..=n - lambda);
    let right = sweep_attached_windows(inst, Anchor::Right, 0..=n - lambda);
    let mut best: Option<(Rat, Anchor, usize)> = None;
    for (s, c) in left.iter().enumerate() {
        if best.as_ref().map_or(true, |(b, _, _)| c < b) {
            best = Some((c.clone(), Anchor::Left, s));
        }
    }
    for (s, c) in right.iter().enumerate() {
        if best.as_ref().map_or(true, |(b, _, _)| c < b) {
            best = Some((c.clone(), Anchor::Right, s));
        }
    }
    let (cost, anchor, s) = best.expect("at least one window");
    let two_z = inst.two_z();
    let mut y = inst.x().to_vec();
    for t in s..s + lambda {
        y[t] = match anchor {
            Anchor::Left => inst.z() + &two_z.mul_int((t - s) as i64),
            Anchor::Right => {
                &(inst.beta() - inst.z()) - &two_z.mul_int((s + lambda - 1 - t) as i64)
            }
        };
    }
    let diagnostics = Diagnostics {
        branch: Some(Branch::AllOutside),
        ..Diagnostics::default()
    };
    let report = SolutionReport::assemble(inst, y, inst.classify(), diagnostics);
    debug_assert_eq!(report.cost, cost);
    Ok(report)
}

/// Worklist overlap: generators plus remaining length. Kept sorted left to
/// right; restored overlaps append at the back.
#[derive(Debug, Clone)]
struct WorkOverlap {
    left_gen: usize,
    right_gen: usize,
    length: Rat,
}

/// Shifts `a..=j` leftwards by `d`, keeping the signed displacement
/// tracker exact by splitting at zero crossings, and accumulates the
/// aggregate-distance change into `dc`. Tracker validity means "currently
/// right of the reference position"; the stored value is the distance left
/// until the sensor returns to it.
fn tracked_left_shift(
    pt: &mut PositionTree,
    tracker: &mut LeftShiftTree,
    a: usize,
    j: usize,
    d: &Rat,
    dc: &mut Rat,
) {
    let size = (j - a + 1) as i64;
    let mut rem = d.clone();
    while rem.is_positive() {
        let step = match tracker.find_min(a, j) {
            Some((v, _)) => {
                debug_assert!(v.is_positive());
                rem.clone().min(v)
            }
            None => rem.clone(),
        };
        let toward = tracker.find_num(a, j) as i64;
        *dc += &step.mul_int(size - 2 * toward);
        pt.range_shift(a, j, &-&step);
        tracker.right_shift(a, j, &step);
        while let Some((v, w)) = tracker.find_min(a, j) {
            if !v.is_zero() {
                break;
            }
            tracker.set_invalid(w);
        }
        rem -= &step;
    }
}

/// Result of the `lambda`-window family scan.
pub struct LambdaWindows {
    /// Best full `D` value among the windows.
    pub sol2: Rat,
    pub best_start: usize,
    pub window_first: usize,
    pub window_last: usize,
    /// Full `D` value per window (manual parking plus containing cost).
    pub d_values: Vec<Rat>,
    /// Containing part per window, for cross-checks against scratch solves.
    pub dc_values: Vec<Rat>,
    /// Winning full configuration.
    pub y: Vec<Rat>,
    pub reverse_ops: usize,
    pub eliminated_overlaps: usize,
    pub initial_gap_list_len: usize,
}

/// Prices every window of exactly `lambda` consecutive sensors that spans
/// `S(l, r)` and returns the cheapest with its configuration.
pub fn solve_lambda_windows(inst: &Instance) -> Result<LambdaWindows, GeneralError> {
    if !inst.is_feasible() {
        return Err(GeneralError::Infeasible);
    }
    let n = inst.n();
    let x = inst.x();
    let z = inst.z();
    let beta = inst.beta();
    let two_z = inst.two_z();
    let lambda = inst.lambda();
    let hits = |y: &Rat| !(y + z).is_negative() && &(y - z) <= beta;
    let l = x.iter().position(hits).expect("no sc-interval meets the barrier");
    let r = x.iter().rposition(hits).unwrap();
    assert!(r - l + 1 <= lambda, "window family needs |S(l, r)| <= lambda");

    let lo = (r + 1).saturating_sub(lambda);
    let hi = l.min(n - lambda);
    debug_assert!(lo <= hi);
    let parked_right = beta + z;
    let neg_z = -z;

    // D_s per window via prefix sums: parking costs outside [l, r].
    // left_tail[t] = cost of parking sensors t..l-1 at -z;
    // right_run[k] = cost of parking sensors r+1..r+k at beta + z.
    let mut left_tail = alloc::vec![Rat::zero(); l + 1];
    for t in (lo..l).rev() {
        left_tail[t] = &left_tail[t + 1] + &(&neg_z - &x[t]);
    }
    let right_len = (hi + lambda).saturating_sub(r + 1);
    let mut right_run = alloc::vec![Rat::zero(); right_len + 1];
    for k in 1..=right_len {
        right_run[k] = &right_run[k - 1] + &(&x[r + k] - &parked_right);
    }
    let ds_at = |s: usize| -> Rat {
        let left = if s < l {
            left_tail[s].clone()
        } else {
            Rat::zero()
        };
        let right = if s + lambda > r + 1 {
            right_run[s + lambda - (r + 1)].clone()
        } else {
            Rat::zero()
        };
        &left + &right
    };

    let window_count = hi - lo + 1;
    let mut d_values: Vec<Rat> = Vec::with_capacity(window_count);
    let mut dc_values: Vec<Rat> = Vec::with_capacity(window_count);
    let mut reverse_ops = 0usize;
    let mut eliminated = 0usize;
    let mut initial_gap_list_len = 0usize;

    if two_z.mul_int(lambda as i64) == *beta {
        // Every window is the forced attached pattern; one sweep prices all.
        d_values = attached_window_costs(x, z, lambda, lo, hi);
        for (i, d) in d_values.iter().enumerate() {
            dc_values.push(d - &ds_at(lo + i));
        }
    } else {
        // Prepared reference coordinates for the whole family.
        let mut fpos: Vec<Rat> = x.to_vec();
        for p in fpos.iter_mut().take(l) {
            *p = neg_z.clone();
        }
        for p in fpos.iter_mut().skip(r + 1) {
            *p = parked_right.clone();
        }

        let e0 = lo + lambda - 1;
        let outcome = containing::run_prepared(&fpos, lo, e0, z, beta, true);
        let mut g = outcome.log.trailing_right_shifts();
        initial_gap_list_len = g.len();
        let mut worklist: VecDeque<WorkOverlap> = outcome
            .leftover_overlaps
            .iter()
            .map(|o| WorkOverlap {
                left_gen: o.left_gen,
                right_gen: o.right_gen,
                length: o.length.clone(),
            })
            .collect();
        let mut pt = outcome.pt;
        let mut dc = outcome.cost;

        // Signed displacement tracker: valid leaves are the sensors
        // currently right of their reference coordinate.
        let mut tracker = LeftShiftTree::new(n);
        let current = pt.materialize();
        for t in lo..=e0 {
            let ahead = &current[t] - &fpos[t];
            if ahead.is_positive() {
                tracker.set_valid_with(t, ahead);
            }
        }

        d_values.push(&ds_at(lo) + &dc);
        dc_values.push(dc.clone());

        for s in lo + 1..=hi {
            let head = s - 1;
            let tail = s + lambda - 1;

            // A tail poking right of the barrier makes this and every later
            // window the plain attached pattern; finish with a sweep.
            if &(&pt.position(tail - 1) + z) > beta {
                let tail_values = attached_window_costs(x, z, lambda, s, hi);
                for (i, d) in tail_values.iter().enumerate() {
                    dc_values.push(d - &ds_at(s + i));
                    d_values.push(d.clone());
                }
                break;
            }

            // Step 1: absorb the entering sensor's overlap [beta, beta+2z].
            {
                let pt = &mut pt;
                let tracker = &mut tracker;
                let dc_cell = &mut dc;
                let worklist = &mut worklist;
                let (formula_delta, ops, leftover) = one_sided::run_reverse_ops(
                    &mut g,
                    tail,
                    &two_z,
                    |a, j, d| {
                        debug_assert!(a >= head, "reverse block may not span removed heads");
                        tracked_left_shift(pt, tracker, a, j, d, dc_cell);
                    },
                    |lg, rg, d| {
                        if let Some(back) = worklist.back_mut() {
                            debug_assert!(back.left_gen <= lg, "worklist must stay sorted");
                            if back.left_gen == lg && back.right_gen == rg {
                                back.length += d;
                                return;
                            }
                        }
                        worklist.push_back(WorkOverlap {
                            left_gen: lg,
                            right_gen: rg,
                            length: d.clone(),
                        });
                    },
                );
                reverse_ops += ops;
                let _ = formula_delta;
                // The unconsumed part of the entering sensor's overlap is
                // spare coverage of this configuration: step 2 may need it.
                if leftover.is_positive() {
                    worklist.push_back(WorkOverlap {
                        left_gen: tail,
                        right_gen: tail,
                        length: leftover,
                    });
                }
            }

            // Step 2: drop the head and re-cover its exclusive stretch by
            // eliminating worklist overlaps left to right.
            let head_pos = pt.position(head);
            dc -= &(&head_pos - &fpos[head]).abs();
            while worklist.front().map_or(false, |o| o.left_gen <= head) {
                let dead = worklist.pop_front().unwrap();
                debug_assert!(dead.left_gen == head);
            }
            let g_lo = (&head_pos - z).max(Rat::zero());
            let g_hi = (&pt.position(head + 1) - z).min(beta.clone());
            let mut need = &g_hi - &g_lo;
            while need.is_positive() {
                let front = worklist
                    .front()
                    .expect("lambda-window invariant: enough overlap to re-cover the head")
                    .clone();
                let d = need.clone().min(front.length.clone());
                tracked_left_shift(&mut pt, &mut tracker, head + 1, front.left_gen, &d, &mut dc);
                need -= &d;
                if d == front.length {
                    worklist.pop_front();
                    eliminated += 1;
                } else {
                    worklist.front_mut().unwrap().length -= &d;
                }
            }

            d_values.push(&ds_at(s) + &dc);
            dc_values.push(dc.clone());
        }
        assert!(
            reverse_ops + eliminated <= (hi - lo) + initial_gap_list_len + 2 * n,
            "lambda-window work exceeded its O(n) budget"
        );
    }

    let (best_i, sol2) = d_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)))
        .map(|(i, v)| (i, v.clone()))
        .unwrap();
    let best_start = lo + best_i;

    // Replay the winner for its configuration.
    let mut replay = x.to_vec();
    for p in replay.iter_mut().take(l).skip(best_start) {
        *p = neg_z.clone();
    }
    for t in r + 1..best_start + lambda {
        replay[t] = parked_right.clone();
    }
    let run = containing::run_prepared(&replay, best_start, best_start + lambda - 1, z, beta, false);
    let mut y = x.to_vec();
    let materialized = run.pt.materialize();
    y[best_start..best_start + lambda]
        .clone_from_slice(&materialized[best_start..best_start + lambda]);
    debug_assert_eq!(&ds_at(best_start) + &run.cost, sol2);

    Ok(LambdaWindows {
        sol2,
        best_start,
        window_first: lo,
        window_last: hi,
        d_values,
        dc_values,
        y,
        reverse_ops,
        eliminated_overlaps: eliminated,
        initial_gap_list_len,
    })
}

struct Sol1 {
    cost: Rat,
    y: Vec<Rat>,
    reverse_ops: usize,
    containing: containing::ContainingCounters,
}

/// Fixes the right end by a one-sided solve with all left sensors parked at
/// `-z`, then finds the matching left end by a mirrored one-sided solve.
fn sol1_path(inst: &Instance, l: usize, r: usize) -> Result<Sol1, GeneralError> {
    let x = inst.x();
    let z = inst.z();
    let beta = inst.beta();
    let neg_z = -z;
    let parked_right = beta + z;

    let mut p1 = x.to_vec();
    for p in p1.iter_mut().take(l) {
        *p = neg_z.clone();
    }
    let run1 = one_sided::solve_prepared(&p1, z, beta)?;
    let rstar = run1.m_star - 1; // index of the rightmost used sensor

    let mut p2: Vec<Rat> = x[..=rstar].to_vec();
    let mut manual = Rat::zero();
    for t in r + 1..=rstar {
        manual += &(&x[t] - &parked_right);
        p2[t] = parked_right.clone();
    }
    let q = model::mirror_positions(&p2, beta);
    let run2 = one_sided::solve_prepared(&q, z, beta)?;
    let inner_y = model::mirror_positions(&run2.y, beta);
    debug_assert_eq!(&manual + &run2.cost, {
        let mut c = manual.clone();
        c += &model::total_cost(&p2, &inner_y);
        c
    });

    let mut y = x.to_vec();
    y[..=rstar].clone_from_slice(&inner_y);
    let cost = &manual + &run2.cost;
    debug_assert_eq!(cost, model::total_cost(x, &y));
    Ok(Sol1 {
        cost,
        y,
        reverse_ops: run1.reverse_ops + run2.reverse_ops,
        containing: run2.containing,
    })
}

/// Solves an instance with off-barrier sensors on both sides (and, via
/// [`solve_all_outside`], with none on the barrier at all).
pub fn solve_general(inst: &Instance) -> Result<SolutionReport, GeneralError> {
    if !inst.is_feasible() {
        return Err(GeneralError::Infeasible);
    }
    let z = inst.z();
    let beta = inst.beta();
    let hits = |y: &Rat| !(y + z).is_negative() && &(y - z) <= beta;
    let Some(l) = inst.x().iter().position(hits) else {
        return solve_all_outside(inst);
    };
    let r = inst.x().iter().rposition(hits).unwrap();
    let lambda = inst.lambda();

    let sol1 = sol1_path(inst, l, r)?;
    if r - l + 1 >= lambda {
        // The right end found with all left sensors parked is exact here.
        let diagnostics = Diagnostics {
            shift_processes: sol1.containing.shift_processes,
            pdr_processes: sol1.containing.pdr_processes,
            set_valid_ops: sol1.containing.set_valid_ops,
            reverse_ops: sol1.reverse_ops,
            eliminated_overlaps: 0,
            branch: Some(Branch::GeneralShortcut),
        };
        return Ok(SolutionReport::assemble(
            inst,
            sol1.y,
            inst.classify(),
            diagnostics,
        ));
    }

    let lw = solve_lambda_windows(inst)?;
    if lw.sol2 < sol1.cost {
        let diagnostics = Diagnostics {
            shift_processes: 0,
            pdr_processes: 0,
            set_valid_ops: 0,
            reverse_ops: lw.reverse_ops,
            eliminated_overlaps: lw.eliminated_overlaps,
            branch: Some(Branch::GeneralSol2),
        };
        Ok(SolutionReport::assemble(
            inst,
            lw.y,
            inst.classify(),
            diagnostics,
        ))
    } else {
        let diagnostics = Diagnostics {
            shift_processes: sol1.containing.shift_processes,
            pdr_processes: sol1.containing.pdr_processes,
            set_valid_ops: sol1.containing.set_valid_ops,
            reverse_ops: sol1.reverse_ops,
            eliminated_overlaps: 0,
            branch: Some(Branch::GeneralSol1),
        };
        Ok(SolutionReport::assemble(
            inst,
            sol1.y,
            inst.classify(),
            diagnostics,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::CaseKind;

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn inst(z: &str, beta: &str, xs: &[&str]) -> Instance {
        Instance::new(rat(z), rat(beta), xs.iter().map(|s| rat(s)).collect()).unwrap()
    }

    fn ys(xs: &[&str]) -> Vec<Rat> {
        xs.iter().map(|s| rat(s)).collect()
    }

    #[test]
    fn textbook_general_instance() {
        let i = inst("1", "4", &["-4", "2", "7"]);
        let report = solve_general(&i).unwrap();
        assert_eq!(report.cost, rat("5"));
        assert_eq!(report.y, ys(&["-4", "1", "3"]));
        assert_eq!(report.diagnostics.branch, Some(Branch::GeneralSol2));
    }

    #[test]
    fn integer_window_family() {
        // lambda = beta / 2z: window (1,2) costs 7/2 and wins
        let i = inst("1", "4", &["-3", "3/2", "6", "7"]);
        let lw = solve_lambda_windows(&i).unwrap();
        assert_eq!(lw.d_values, ys(&["11/2", "7/2"]));
        assert_eq!(lw.sol2, rat("7/2"));
        assert_eq!(lw.best_start, 1);
        let report = solve_general(&i).unwrap();
        assert_eq!(report.cost, rat("7/2"));
        assert_eq!(report.y, ys(&["-3", "1", "3", "7"]));
    }

    #[test]
    fn mirror_invariance() {
        let cases = [
            inst("1", "4", &["-4", "2", "7"]),
            inst("1", "4", &["-3", "3/2", "6", "7"]),
            inst("1", "6", &["-5", "-4", "3", "8", "20"]),
            inst("1/2", "3", &["-2", "1", "5"]),
        ];
        for i in cases {
            let m = model::mirror(&i);
            let a = solve_general(&i).unwrap();
            let b = solve_general(&m).unwrap();
            assert_eq!(a.cost, b.cost, "{:?}", i);
            assert!(model::verify_coverage(&a.y, i.z(), i.beta()));
            assert!(model::verify_coverage(&b.y, m.z(), m.beta()));
        }
    }

    #[test]
    fn all_outside_examples() {
        // lambda = 1 would be the wide case; test the function directly
        let i = inst("1", "2", &["-9", "-5", "4"]);
        let report = solve_all_outside(&i).unwrap();
        assert_eq!(report.cost, rat("3"));

        let i = inst("1", "4", &["-10", "-9", "5", "6"]);
        let report = solve_all_outside(&i).unwrap();
        assert_eq!(report.cost, rat("7"));
        assert_eq!(report.y, ys(&["-10", "-9", "1", "3"]));

        let m = model::mirror(&i);
        let mirrored = solve_all_outside(&m).unwrap();
        assert_eq!(mirrored.cost, rat("7"));
    }

    #[test]
    fn sweep_matches_brute_force() {
        let i = inst("1", "4", &["-3", "3/2", "6", "7"]);
        let lambda = i.lambda();
        let left = sweep_attached_windows(&i, Anchor::Left, 0..=i.n() - lambda);
        for (s, got) in left.iter().enumerate() {
            let mut expect = Rat::zero();
            for t in s..s + lambda {
                let target = i.z() + &i.two_z().mul_int((t - s) as i64);
                expect += &(&target - &i.x()[t]).abs();
            }
            assert_eq!(got, &expect, "window {s}");
        }
        let right = sweep_attached_windows(&i, Anchor::Right, 0..=i.n() - lambda);
        for (s, got) in right.iter().enumerate() {
            let mut expect = Rat::zero();
            for t in s..s + lambda {
                let target = &(i.beta() - i.z())
                    - &i.two_z().mul_int((s + lambda - 1 - t) as i64);
                expect += &(&target - &i.x()[t]).abs();
            }
            assert_eq!(got, &expect, "window {s}");
        }
    }

    #[test]
    fn lambda_loop_with_fractional_window() {
        // lambda != beta / 2z exercises the reverse + head-removal loop
        let i = inst("1", "5", &["-4", "-3.5", "2.5", "8", "9"]);
        assert_eq!(i.classify(), CaseKind::General);
        let lw = solve_lambda_windows(&i).unwrap();
        assert_eq!(lw.d_values.len(), lw.window_last - lw.window_first + 1);
        // every window value matches a scratch containing solve
        for (idx, s) in (lw.window_first..=lw.window_last).enumerate() {
            let lambda = i.lambda();
            let mut prepared = i.x().to_vec();
            let hits = |y: &Rat| !(y + i.z()).is_negative() && &(y - i.z()) <= i.beta();
            let l = i.x().iter().position(hits).unwrap();
            let r = i.x().iter().rposition(hits).unwrap();
            let mut ds = Rat::zero();
            for t in s..l {
                ds += &(&-i.z() - &i.x()[t]);
                prepared[t] = -i.z();
            }
            for t in r + 1..s + lambda {
                ds += &(&i.x()[t] - &(i.beta() + i.z()));
                prepared[t] = i.beta() + i.z();
            }
            let scratch =
                containing::run_prepared(&prepared, s, s + lambda - 1, i.z(), i.beta(), false);
            assert_eq!(&ds + &scratch.cost, lw.d_values[idx], "window {s}");
            assert_eq!(scratch.cost, lw.dc_values[idx], "window {s}");
        }
        let report = solve_general(&i).unwrap();
        assert!(model::verify_coverage(&report.y, i.z(), i.beta()));
        assert_eq!(report.cost, lw.sol2.min(report.cost.clone()));
    }
}
