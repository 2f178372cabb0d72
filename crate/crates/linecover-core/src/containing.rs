//! Greedy gap elimination for the containing case (every sc-interval meets
//! the barrier), implemented with the position tree, left-shift tree, and
//! overlap tree so that each shift process costs `O(log n)`.
//!
//! Gaps are covered left to right. For the current gap the solver picks the
//! nearest overlap on each side, prices them (`C(o^r)` counts the sensors a
//! left shift would drag; `C(o^l)` counts a right shift's sensors minus
//! twice those already left of their origin), and moves the cheaper side.
//! A right shift stopping at some sensor's zero displacement is a PDR
//! process. The chronological process log powers the one-sided and general
//! case solvers.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::model::{
    self, Branch, Diagnostics, GapRecord, Instance, OverlapPlacement, OverlapRecord,
    SolutionReport,
};
use crate::rational::Rat;
use crate::trees::{LeftShiftTree, OverlapKey, OverlapTree, PositionTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcessKind {
    LeftShift,
    RightShift,
}

/// One greedy step: a block of sensors moved by a common distance,
/// consuming `distance` of both a gap and an overlap.
#[derive(Debug, Clone)]
pub struct ShiftProcess {
    pub kind: ProcessKind,
    /// First sensor index strictly right of the gap piece.
    pub gap_right_block_start: usize,
    pub gap_left_gen: Option<usize>,
    pub gap_right_gen: Option<usize>,
    pub overlap_left_gen: usize,
    pub overlap_right_gen: usize,
    /// Cost of the consumed overlap at execution time; may be negative for
    /// right shifts.
    pub cost: i64,
    pub distance: Rat,
    pub pdr: bool,
    /// Whether any overlap existed right of the gap when this process ran.
    pub right_candidate: bool,
}

/// Chronological record of shift processes.
#[derive(Debug, Default)]
pub struct ProcessLog {
    entries: Vec<ShiftProcess>,
}

/// Entry of the reverse-operation gap list `G`: a gap piece covered by a
/// trailing right-shift process, most recent first.
#[derive(Debug, Clone)]
pub struct ReverseGapEntry {
    /// First sensor index strictly right of the gap.
    pub right_block_start: usize,
    pub length: Rat,
    /// `C(o)` recorded when the overlap was consumed.
    pub overlap_cost: i64,
    pub overlap_left_gen: usize,
    pub overlap_right_gen: usize,
}

impl ProcessLog {
    pub fn entries(&self) -> &[ShiftProcess] {
        &self.entries
    }

    /// Gap list for reverse operations: the maximal suffix of processes
    /// that ran with no overlap right of their gap (necessarily right
    /// shifts), in reverse time order, so ordered right to left along the
    /// barrier. Earlier processes keep a right-side candidate and cannot be
    /// improved by a fresh overlap at `beta + z`, since the nearest right
    /// overlap - and hence the decision - would be unchanged.
    ///
    /// Along the list the reverse revenue is non-increasing for any probe
    /// sensor: `C(o_i) + right_block_start_i` never grows with `i`. That
    /// prefix property is what makes front-first consumption exact.
    pub fn trailing_right_shifts(&self) -> VecDeque<ReverseGapEntry> {
        let count = self
            .entries
            .iter()
            .rev()
            .take_while(|p| !p.right_candidate)
            .count();
        let view: VecDeque<ReverseGapEntry> = self
            .entries
            .iter()
            .rev()
            .take(count)
            .map(|p| {
                debug_assert_eq!(p.kind, ProcessKind::RightShift);
                p
            })
            .map(|p| ReverseGapEntry {
                right_block_start: p.gap_right_block_start,
                length: p.distance.clone(),
                overlap_cost: p.cost,
                overlap_left_gen: p.overlap_left_gen,
                overlap_right_gen: p.overlap_right_gen,
            })
            .collect();
        debug_assert!(
            view.iter().zip(view.iter().skip(1)).all(|(a, b)| {
                a.overlap_cost + a.right_block_start as i64
                    >= b.overlap_cost + b.right_block_start as i64
            }),
            "reverse revenue must be non-increasing along the gap list"
        );
        view
    }
}

/// Counters cross-checked against the paper's accounting.
#[derive(Debug, Clone, Copy, Default)]
pub struct ContainingCounters {
    pub shift_processes: usize,
    pub pdr_processes: usize,
    pub set_valid_ops: usize,
    pub set_invalid_ops: usize,
}

pub struct ContainingOutcome {
    pub pt: PositionTree,
    /// Total movement relative to the prepared positions.
    pub cost: Rat,
    pub log: ProcessLog,
    /// Overlaps remaining in the final configuration, left to right.
    pub leftover_overlaps: Vec<OverlapRecord>,
    pub counters: ContainingCounters,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContainingError {
    NotContaining,
    Infeasible,
}

impl core::fmt::Display for ContainingError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ContainingError::NotContaining => write!(f, "not a containing-case instance"),
            ContainingError::Infeasible => write!(f, "infeasible instance"),
        }
    }
}
impl core::error::Error for ContainingError {}


fn probe_left(gap: &GapRecord) -> OverlapKey {
    match gap.left_gen {
        Some(a) => OverlapKey { gen: a, rank: 1 },
        None => OverlapKey {
            gen: gap.right_gen.expect("gap with no generator"),
            rank: 0,
        },
    }
}

fn probe_right(gap: &GapRecord) -> OverlapKey {
    match gap.right_gen {
        Some(b) => OverlapKey { gen: b, rank: 0 },
        None => OverlapKey {
            gen: gap.left_gen.expect("gap with no generator") + 1,
            rank: 0,
        },
    }
}

/// First sensor index strictly right of the gap.
pub(crate) fn right_block_start(gap: &GapRecord) -> usize {
    match gap.right_gen {
        Some(b) => b,
        None => gap.left_generator() + 1,
    }
}

/// Last sensor index strictly left of the gap.
fn left_block_end(gap: &GapRecord) -> usize {
    match gap.left_gen {
        Some(a) => a,
        None => gap
            .right_generator()
            .checked_sub(1)
            .expect("gap at barrier start has no sensors to its left"),
    }
}

/// Runs the containing-case greedy on sensors `lo..=hi` of `positions`
/// (other sensors are untouched and ignored). Movement costs are measured
/// relative to `positions`. When `record` is set the process log is kept.
pub fn run_prepared(
    positions: &[Rat],
    lo: usize,
    hi: usize,
    z: &Rat,
    beta: &Rat,
    record: bool,
) -> ContainingOutcome {
    assert!(lo <= hi && hi < positions.len());
    let active_n = hi - lo + 1;
    debug_assert!(
        positions[lo..=hi]
            .iter()
            .all(|y| !(y + z).is_negative() && &(y - z) <= beta),
        "prepared configuration must be a containing case"
    );
    assert!(
        &z.mul_int(2 * active_n as i64) >= beta,
        "prepared configuration must be feasible"
    );

    let (gaps, overlaps) = model::enumerate_gaps_overlaps(&positions[lo..=hi], z, beta);
    let mut gaps: VecDeque<GapRecord> = gaps
        .into_iter()
        .map(|mut g| {
            g.left_gen = g.left_gen.map(|i| i + lo);
            g.right_gen = g.right_gen.map(|i| i + lo);
            g
        })
        .collect();
    let mut ot = OverlapTree::from_records(overlaps.into_iter().map(|mut o| {
        o.left_gen += lo;
        o.right_gen += lo;
        o
    }));

    let mut pt = PositionTree::new(positions);
    let mut lst = LeftShiftTree::new(positions.len());
    let mut gamma: Option<usize> = None;
    let mut ever_valid = alloc::vec![false; positions.len()];
    let mut counters = ContainingCounters::default();
    let mut log = ProcessLog::default();
    let mut cost = Rat::zero();
    let process_budget = 4 * active_n;

    while let Some(gap) = gaps.front().cloned() {
        assert!(
            counters.shift_processes < process_budget,
            "shift process count exceeded 4n"
        );
        let o_l = ot.pred(probe_left(&gap)).cloned();
        let o_r = ot.succ(probe_right(&gap)).cloned();
        debug_assert!(o_l
            .as_ref()
            .map_or(true, |o| o.placement != OverlapPlacement::OutsideRight));
        debug_assert!(o_r
            .as_ref()
            .map_or(true, |o| o.placement != OverlapPlacement::OutsideLeft));

        let rbs = right_block_start(&gap);
        let cost_r = o_r.as_ref().map(|o| (o.left_gen - rbs + 1) as i64);
        let (cost_l, block_l) = match &o_l {
            Some(o) => {
                let end = left_block_end(&gap);
                let size = (end - o.right_gen + 1) as i64;
                let valid = lst.find_num(o.right_gen, end) as i64;
                (Some(size - 2 * valid), Some((o.right_gen, end)))
            }
            None => (None, None),
        };

        let had_right = o_r.is_some();
        // Missing sides compare as +infinity; left shift only when strictly
        // cheaper, so a tie uses the left overlap.
        let take_right_overlap = match (cost_r, cost_l) {
            (Some(r), Some(l)) => r < l,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => panic!("feasible instance left a gap with no overlap on either side"),
        };

        if take_right_overlap {
            let o = o_r.unwrap();
            let (j, k) = (rbs, o.left_gen);
            let delta = gap.length.clone().min(o.length.clone());
            debug_assert!(delta.is_positive());
            pt.range_shift(j, k, &-&delta);
            // Sensors past gamma are validated on their first leftward move
            // (everything in the block at or before gamma is already valid).
            let first_new = match gamma {
                None => j,
                Some(g) => {
                    debug_assert!(g <= k);
                    (g + 1).max(j)
                }
            };
            for t in first_new..=k {
                assert!(!ever_valid[t], "a sensor may be set valid only once");
                ever_valid[t] = true;
                lst.set_valid(t);
                counters.set_valid_ops += 1;
            }
            assert!(counters.set_valid_ops <= active_n);
            lst.left_shift(j, k, &delta);
            gamma = Some(gamma.map_or(k, |g| g.max(k)));

            let c = cost_r.unwrap();
            cost += &delta.mul_int(c);
            if record {
                log.entries.push(ShiftProcess {
                    kind: ProcessKind::LeftShift,
                    gap_right_block_start: rbs,
                    gap_left_gen: gap.left_gen,
                    gap_right_gen: gap.right_gen,
                    overlap_left_gen: o.left_gen,
                    overlap_right_gen: o.right_gen,
                    cost: c,
                    distance: delta.clone(),
                    pdr: false,
                    right_candidate: true,
                });
            }
            if delta == o.length {
                ot.delete(o.key()).unwrap();
            } else {
                ot.update_length(o.key(), &o.length - &delta).unwrap();
            }
            if delta == gap.length {
                gaps.pop_front();
            } else {
                gaps.front_mut().unwrap().length -= &delta;
            }
        } else {
            let o = o_l.unwrap();
            let (j, k) = block_l.unwrap();
            let alpha = lst.find_min(j, k);
            let mut delta = gap.length.clone().min(o.length.clone());
            let mut pdr = false;
            if let Some((a, _)) = &alpha {
                if a <= &delta {
                    delta = a.clone();
                    pdr = true;
                }
            }
            debug_assert!(delta.is_positive());
            pt.range_shift(j, k, &delta);
            lst.right_shift(j, k, &delta);
            if pdr {
                counters.pdr_processes += 1;
                // clear every sensor whose displacement just hit zero
                while let Some((m, w)) = lst.find_min(j, k) {
                    if !m.is_zero() {
                        break;
                    }
                    lst.set_invalid(w);
                    counters.set_invalid_ops += 1;
                }
            }
            let c = cost_l.unwrap();
            cost += &delta.mul_int(c);
            if record {
                log.entries.push(ShiftProcess {
                    kind: ProcessKind::RightShift,
                    gap_right_block_start: rbs,
                    gap_left_gen: gap.left_gen,
                    gap_right_gen: gap.right_gen,
                    overlap_left_gen: o.left_gen,
                    overlap_right_gen: o.right_gen,
                    cost: c,
                    distance: delta.clone(),
                    pdr,
                    right_candidate: had_right,
                });
            }
            if delta == o.length {
                ot.delete(o.key()).unwrap();
            } else {
                ot.update_length(o.key(), &o.length - &delta).unwrap();
            }
            if delta == gap.length {
                gaps.pop_front();
            } else {
                gaps.front_mut().unwrap().length -= &delta;
            }
        }
        counters.shift_processes += 1;
    }

    ContainingOutcome {
        pt,
        cost,
        log,
        leftover_overlaps: ot.into_records(),
        counters,
    }
}

/// Solves a containing-case instance to optimality. The precondition is
/// geometric: every sc-interval intersects the barrier.
pub fn solve_containing(inst: &Instance) -> Result<(SolutionReport, ProcessLog), ContainingError> {
    if !inst.is_feasible() {
        return Err(ContainingError::Infeasible);
    }
    let intersects = |y: &Rat| !(y + inst.z()).is_negative() && &(y - inst.z()) <= inst.beta();
    if !inst.x().iter().all(intersects) {
        return Err(ContainingError::NotContaining);
    }
    let outcome = run_prepared(inst.x(), 0, inst.n() - 1, inst.z(), inst.beta(), true);
    let y = outcome.pt.materialize();
    let diagnostics = Diagnostics {
        shift_processes: outcome.counters.shift_processes,
        pdr_processes: outcome.counters.pdr_processes,
        set_valid_ops: outcome.counters.set_valid_ops,
        reverse_ops: 0,
        eliminated_overlaps: 0,
        branch: Some(Branch::Containing),
    };
    let report = SolutionReport::assemble(inst, y, inst.classify(), diagnostics);
    debug_assert_eq!(report.cost, outcome.cost);
    Ok((report, outcome.log))
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
    fn forced_chain_example() {
        // 2zn = beta forces the unique attached configuration
        let i = inst("1", "10", &["1", "2", "3", "8", "9"]);
        let (report, log) = solve_containing(&i).unwrap();
        assert_eq!(report.y, ys(&["1", "3", "5", "7", "9"]));
        assert_eq!(report.cost, rat("4"));
        assert!(!log.entries().is_empty());
        assert!(report.diagnostics.shift_processes <= 4 * 5);
    }

    #[test]
    fn outside_overlap_consumed_by_right_shift() {
        let i = inst("1", "4", &["-0.5", "3"]);
        let (report, log) = solve_containing(&i).unwrap();
        assert_eq!(report.y, ys(&["1", "3"]));
        assert_eq!(report.cost, rat("3/2"));
        assert_eq!(log.entries().len(), 1);
        assert_eq!(log.entries()[0].kind, ProcessKind::RightShift);
    }

    #[test]
    fn gap_free_input_returns_immediately() {
        let i = inst("1", "2", &["0", "2"]);
        let (report, log) = solve_containing(&i).unwrap();
        assert_eq!(report.y, i.x());
        assert!(report.cost.is_zero());
        assert!(log.entries().is_empty());
    }

    #[test]
    fn not_containing_rejected() {
        let i = inst("1", "4", &["1", "6", "8"]);
        assert_eq!(
            solve_containing(&i).unwrap_err(),
            ContainingError::NotContaining
        );
        let i = inst("1", "12", &["1", "2", "3", "8", "9"]);
        assert_eq!(
            solve_containing(&i).unwrap_err(),
            ContainingError::Infeasible
        );
    }

    #[test]
    fn trailing_view_after_final_right_shifts() {
        // Right shifts close the barrier-end gap; the trailing view holds
        // their pieces in reverse time order, costs non-increasing.
        let i = inst("1", "10", &["1", "1.4", "3.4", "5.4", "7.4"]);
        let (report, log) = solve_containing(&i).unwrap();
        assert_eq!(report.y, ys(&["1", "3", "5", "7", "9"]));
        assert_eq!(report.cost, rat("32/5"));
        let g = log.trailing_right_shifts();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].right_block_start, 5); // single-generator gap at beta
        assert_eq!(g[0].length, rat("8/5"));
        assert_eq!(g[0].overlap_cost, 4);
        assert_eq!(g[0].overlap_right_gen, 1);
    }

    #[test]
    fn solver_output_is_sorted_and_covering() {
        let cases = [
            inst("1", "8", &["1.5", "2", "4.5", "6.5"]),
            inst("1", "10", &["-3", "1", "2", "6", "13"]),
            inst("1", "6", &["1", "1.2", "5"]),
            inst("1/2", "5", &["0", "0", "2", "2", "4", "4"]),
            inst("1", "10", &["1", "1.4", "3.4", "5.4", "7.4", "8"]),
        ];
        for i in cases {
            if i.classify() != CaseKind::Containing {
                continue;
            }
            let (report, _) = solve_containing(&i).unwrap();
            assert_eq!(report.cost, model::total_cost(i.x(), &report.y));
            assert!(model::verify_coverage(&report.y, i.z(), i.beta()));
            let mut sorted = report.y.clone();
            sorted.sort();
            assert_eq!(sorted, report.y, "order preserving");
            let (gaps, _) = model::enumerate_gaps_overlaps(&report.y, i.z(), i.beta());
            assert!(gaps.is_empty(), "no gaps may remain");
        }
    }
}
