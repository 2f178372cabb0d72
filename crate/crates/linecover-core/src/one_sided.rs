//! One-sided case: every off-barrier sensor lies right of the barrier.
//!
//! Let `m` be the number of sensors whose sc-interval meets the barrier.
//! For `j >= m`, `D(j) = D_s(j) + D_c(j)` where `D_s(j)` pays for manually
//! parking sensors `m..j` at `beta + z` and `D_c(j)` is the containing-case
//! optimum from there. Rather than solving each `D_c(j)` from scratch, the
//! solver runs the containing algorithm once and then *reverses* recorded
//! trailing right-shift processes: each newly parked sensor brings a fresh
//! overlap `[beta, beta + 2z]` that can re-cover a recorded gap piece more
//! cheaply, restoring the overlap that originally paid for it. The best
//! index wins and the final configuration is materialized by replaying the
//! containing solve for it. The left-sided case is handled by mirroring.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::containing::{self, ReverseGapEntry};
use crate::model::{self, Branch, CaseKind, Diagnostics, Instance, SolutionReport};
use crate::rational::Rat;

/// A `D(j)` value; counts below the coverage minimum are infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DValue {
    Infinite,
    Finite(Rat),
}

impl DValue {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            DValue::Finite(v) => Some(v),
            DValue::Infinite => None,
        }
    }
}

impl PartialOrd for DValue {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DValue {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        use DValue::*;
        match (self, other) {
            (Infinite, Infinite) => core::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => core::cmp::Ordering::Greater,
            (Finite(_), Infinite) => core::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

/// Outcome of a prepared one-sided solve; positions and cost are relative
/// to the prepared coordinates.
pub struct OneSidedRun {
    pub y: Vec<Rat>,
    pub cost: Rat,
    /// Number of sensors with on-barrier sc-intervals in the input.
    pub m: usize,
    /// Winning sensor count (the smallest minimizing index).
    pub m_star: usize,
    /// `D(j)` for sensor counts `m..=n`.
    pub d_series: Vec<DValue>,
    /// `D_c(j)` for sensor counts `m..=n` (same indexing as `d_series`).
    pub dc_series: Vec<DValue>,
    pub reverse_ops: usize,
    pub initial_gap_list_len: usize,
    pub containing: containing::ContainingCounters,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneSidedError {
    Infeasible,
}

impl core::fmt::Display for OneSidedError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OneSidedError::Infeasible => write!(f, "infeasible instance"),
        }
    }
}
impl core::error::Error for OneSidedError {}


/// One reverse step: consume gap pieces from the front of `G` with the
/// overlap `[beta, beta + 2z]` of sensor `j`, while the unit revenue
/// `R(g) = C(o) - C(s_j, g)` stays positive. Each consumption moves
/// `S(a, j)` leftwards (`a` = restored overlap's right generator) and
/// lowers the cost by `R(g)` per unit. Returns the (non-positive) cost
/// delta, the number of reverse operations performed, and the unconsumed
/// remainder of sensor `j`'s overlap.
pub(crate) fn run_reverse_ops(
    g: &mut VecDeque<ReverseGapEntry>,
    j: usize,
    two_z: &Rat,
    mut shift_block: impl FnMut(usize, usize, &Rat),
    mut restored: impl FnMut(usize, usize, &Rat),
) -> (Rat, usize, Rat) {
    let mut remaining = two_z.clone();
    let mut delta = Rat::zero();
    let mut ops = 0usize;
    while remaining.is_positive() {
        let Some(front) = g.front() else { break };
        let revenue = front.overlap_cost - (j as i64 - front.right_block_start as i64 + 1);
        if revenue <= 0 {
            break;
        }
        let a = front.overlap_right_gen;
        debug_assert!(a <= j);
        let consumed = front.length.clone().min(remaining.clone());
        shift_block(a, j, &consumed);
        restored(front.overlap_left_gen, front.overlap_right_gen, &consumed);
        delta -= &consumed.mul_int(revenue);
        remaining -= &consumed;
        ops += 1;
        let front = g.front_mut().unwrap();
        if consumed == front.length {
            g.pop_front();
        } else {
            front.length -= &consumed;
        }
    }
    (delta, ops, remaining)
}

/// Solves a prepared one-sided-right configuration: `positions` sorted,
/// every sc-interval either meets the barrier or lies strictly right of it.
/// Costs are measured against `positions`.
pub fn solve_prepared(
    positions: &[Rat],
    z: &Rat,
    beta: &Rat,
) -> Result<OneSidedRun, OneSidedError> {
    let n = positions.len();
    assert!(n > 0);
    debug_assert!(positions.windows(2).all(|w| w[0] <= w[1]));
    debug_assert!(
        positions.iter().all(|y| !(y + z).is_negative()),
        "prepared one-sided input may not have sensors left of the barrier"
    );
    let two_z = z.mul_int(2);
    if &two_z.mul_int(n as i64) < beta {
        return Err(OneSidedError::Infeasible);
    }
    let m = positions.iter().filter(|y| &(*y - z) <= beta).count();

    if m == 0 {
        return Ok(far_right_special(positions, z, beta));
    }
    if m == n {
        // degenerate: already a containing case
        let out = containing::run_prepared(positions, 0, n - 1, z, beta, false);
        let cost = out.cost.clone();
        return Ok(OneSidedRun {
            y: out.pt.materialize(),
            cost: cost.clone(),
            m,
            m_star: n,
            d_series: alloc::vec![DValue::Finite(cost.clone())],
            dc_series: alloc::vec![DValue::Finite(cost)],
            reverse_ops: 0,
            initial_gap_list_len: 0,
            containing: out.counters,
        });
    }

    let lambda = beta.ceil_div(&two_z) as usize;
    let start_count = m.max(lambda); // first j with D(j) finite
    debug_assert!(start_count <= n);
    let parked = beta + z;

    // F_{start_count}: sensors m.. parked at beta + z. Later sensors are
    // pre-parked too; they are ignored until their turn.
    let mut prepared: Vec<Rat> = positions.to_vec();
    for p in prepared.iter_mut().skip(m) {
        *p = parked.clone();
    }

    let outcome = containing::run_prepared(&prepared, 0, start_count - 1, z, beta, true);
    let mut g = outcome.log.trailing_right_shifts();
    let initial_gap_list_len = g.len();
    let mut pt = outcome.pt;

    // D_s prefix: cost of parking sensors m..count at beta + z.
    let mut ds = Vec::with_capacity(n + 1 - m);
    let mut acc = Rat::zero();
    ds.push(acc.clone()); // count m
    for t in m..n {
        acc += &(&positions[t] - &parked);
        ds.push(acc.clone());
    }
    let ds_at = |count: usize| -> &Rat { &ds[count - m] };

    let mut d_series: Vec<DValue> = Vec::with_capacity(n + 1 - m);
    let mut dc_series: Vec<DValue> = Vec::with_capacity(n + 1 - m);
    for _ in m..start_count {
        d_series.push(DValue::Infinite);
        dc_series.push(DValue::Infinite);
    }
    let mut dc = outcome.cost;
    let mut best_count = start_count;
    let mut best = ds_at(start_count) + &dc;
    d_series.push(DValue::Finite(best.clone()));
    dc_series.push(DValue::Finite(dc.clone()));

    let mut reverse_ops = 0usize;
    for count in start_count + 1..=n {
        let idx = count - 1;
        let prev = idx - 1;
        // If the previous sensor still pokes right of the barrier, the new
        // overlap is redundant and D_c stays flat.
        if &(&pt.position(prev) + z) <= beta {
            let (delta, ops, _) = run_reverse_ops(
                &mut g,
                idx,
                &two_z,
                |a, j, d| pt.range_shift(a, j, &-d),
                |_, _, _| {},
            );
            dc += &delta;
            reverse_ops += ops;
        }
        let d = ds_at(count) + &dc;
        d_series.push(DValue::Finite(d.clone()));
        dc_series.push(DValue::Finite(dc.clone()));
        if d < best {
            best = d;
            best_count = count;
        }
    }
    assert!(
        reverse_ops <= initial_gap_list_len + (n - m),
        "reverse operation count exceeded |G| + n - m"
    );

    // Replay the winner to materialize its configuration.
    let mut replay: Vec<Rat> = positions.to_vec();
    for p in replay.iter_mut().take(best_count).skip(m) {
        *p = parked.clone();
    }
    let final_run = containing::run_prepared(&replay, 0, best_count - 1, z, beta, false);
    let y = final_run.pt.materialize();
    let cost = ds_at(best_count) + &final_run.cost;
    debug_assert_eq!(cost, model::total_cost(positions, &y));
    debug_assert_eq!(best, cost);

    Ok(OneSidedRun {
        y,
        cost,
        m,
        m_star: best_count,
        d_series,
        dc_series,
        reverse_ops,
        initial_gap_list_len,
        containing: final_run.counters,
    })
}

/// Every sc-interval strictly right of the barrier: the optimum parks the
/// first `ceil(beta / 2z)` sensors in attached positions from the barrier
/// start and leaves the rest alone. `O(n)`.
pub fn far_right_special(positions: &[Rat], z: &Rat, beta: &Rat) -> OneSidedRun {
    let n = positions.len();
    let two_z = z.mul_int(2);
    let lambda = beta.ceil_div(&two_z) as usize;
    assert!(lambda <= n, "infeasible far-right instance");
    let mut y = positions.to_vec();
    let mut cost = Rat::zero();
    for t in 0..lambda {
        let target = z + &two_z.mul_int(t as i64);
        cost += &(&positions[t] - &target);
        y[t] = target;
    }
    let cost_clone = cost.clone();
    OneSidedRun {
        y,
        cost,
        m: 0,
        m_star: lambda,
        d_series: alloc::vec![DValue::Finite(cost_clone.clone())],
        dc_series: alloc::vec![DValue::Finite(cost_clone)],
        reverse_ops: 0,
        initial_gap_list_len: 0,
        containing: containing::ContainingCounters::default(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Right,
    Left,
}

/// Solves an instance whose off-barrier sensors are all on one side.
pub fn solve_one_sided(inst: &Instance) -> Result<SolutionReport, OneSidedError> {
    let case = inst.classify();
    let side = match case {
        CaseKind::OneSidedLeft => Side::Left,
        CaseKind::InfeasibleCase => return Err(OneSidedError::Infeasible),
        _ => Side::Right,
    };
    let (run, y) = match side {
        Side::Right => {
            let run = solve_prepared(inst.x(), inst.z(), inst.beta())?;
            let y = run.y.clone();
            (run, y)
        }
        Side::Left => {
            let mirrored = model::mirror_positions(inst.x(), inst.beta());
            let run = solve_prepared(&mirrored, inst.z(), inst.beta())?;
            let y = model::mirror_positions(&run.y, inst.beta());
            (run, y)
        }
    };
    let diagnostics = Diagnostics {
        shift_processes: run.containing.shift_processes,
        pdr_processes: run.containing.pdr_processes,
        set_valid_ops: run.containing.set_valid_ops,
        reverse_ops: run.reverse_ops,
        eliminated_overlaps: 0,
        branch: Some(if run.m == 0 {
            Branch::FarRightSpecial
        } else {
            Branch::OneSided
        }),
    };
    Ok(SolutionReport::assemble(inst, y, case, diagnostics))
}

/// Checks the unimodal shape of a `D(j)` series: strictly decreasing to the
/// first minimum, at most one tie immediately after it, then strictly
/// increasing. Infinite prefix entries are skipped.
pub fn check_unimodal(series: &[DValue]) -> bool {
    let finite: Vec<&Rat> = series
        .iter()
        .skip_while(|d| matches!(d, DValue::Infinite))
        .map(|d| match d {
            DValue::Finite(v) => v,
            DValue::Infinite => unreachable!("infinite entry after a finite one"),
        })
        .collect();
    if finite.len() <= 1 {
        return true;
    }
    let mut m_star = 0;
    for (i, v) in finite.iter().enumerate() {
        if *v < finite[m_star] {
            m_star = i;
        }
    }
    // smallest minimizer
    m_star = finite.iter().position(|v| *v == finite[m_star]).unwrap();
    for i in 1..=m_star {
        if finite[i] >= finite[i - 1] {
            return false;
        }
    }
    for i in m_star + 2..finite.len() {
        if finite[i] <= finite[i - 1] {
            return false;
        }
    }
    true
}
