//! Problem model: instances, case classification, gaps and overlaps.
//!
//! A sensor at position `y` covers the closed interval `[y - z, y + z]`
//! (its *sc-interval*). The barrier is `[0, beta]`. A *gap* is a maximal
//! uncovered sub-segment of the barrier; an *overlap* is spare coverage:
//! either the intersection of two adjacent sc-intervals on the barrier, or
//! the portion of an sc-interval hanging off the barrier. Gaps and overlaps
//! are identified by their *generator* sensors so that their endpoints can
//! be recomputed from current sensor positions.

use alloc::vec::Vec;
use core::fmt;

use crate::rational::Rat;
use crate::trees::PositionTree;

/// Problem input: sorted sensor coordinates, common radius, barrier length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    z: Rat,
    beta: Rat,
    x: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    EmptyInput,
    NonPositiveRadius,
    NonPositiveBarrier,
    UnsortedInput,
    Infeasible,
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::EmptyInput => write!(f, "instance has no sensors"),
            InstanceError::NonPositiveRadius => write!(f, "covering radius must be positive"),
            InstanceError::NonPositiveBarrier => write!(f, "barrier length must be positive"),
            InstanceError::UnsortedInput => write!(f, "sensor coordinates must be non-decreasing"),
            InstanceError::Infeasible => write!(f, "2*z*n < beta: barrier cannot be covered"),
        }
    }
}
impl core::error::Error for InstanceError {}


impl Instance {
    /// Builds an instance, rejecting malformed inputs. An infeasible but
    /// well-formed instance is accepted; [`Instance::validate`] flags it.
    pub fn new(z: Rat, beta: Rat, x: Vec<Rat>) -> Result<Self, InstanceError> {
        if x.is_empty() {
            return Err(InstanceError::EmptyInput);
        }
        if !z.is_positive() {
            return Err(InstanceError::NonPositiveRadius);
        }
        if !beta.is_positive() {
            return Err(InstanceError::NonPositiveBarrier);
        }
        if x.windows(2).any(|w| w[0] > w[1]) {
            return Err(InstanceError::UnsortedInput);
        }
        Ok(Instance { z, beta, x })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn z(&self) -> &Rat {
        &self.z
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn x(&self) -> &[Rat] {
        &self.x
    }

    pub fn two_z(&self) -> Rat {
        self.z.mul_int(2)
    }

    /// Minimum number of sensors that can cover the barrier.
    pub fn lambda(&self) -> usize {
        self.beta.ceil_div(&self.two_z()) as usize
    }

    pub fn is_feasible(&self) -> bool {
        self.two_z().mul_int(self.n() as i64) >= self.beta
    }

    /// One sensor can cover the whole barrier.
    pub fn is_wide(&self) -> bool {
        self.two_z() >= self.beta
    }

    /// Re-checks all invariants, including feasibility.
    pub fn validate(&self) -> Result<(), InstanceError> {
        if self.x.is_empty() {
            return Err(InstanceError::EmptyInput);
        }
        if !self.z.is_positive() {
            return Err(InstanceError::NonPositiveRadius);
        }
        if !self.beta.is_positive() {
            return Err(InstanceError::NonPositiveBarrier);
        }
        if self.x.windows(2).any(|w| w[0] > w[1]) {
            return Err(InstanceError::UnsortedInput);
        }
        if !self.is_feasible() {
            return Err(InstanceError::Infeasible);
        }
        Ok(())
    }

    pub fn classify(&self) -> CaseKind {
        classify(self)
    }
}

/// Which structural case an instance falls into. Exactly one applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    Containing,
    OneSidedRight,
    OneSidedLeft,
    General,
    AllOutside,
    TrivialWideSensor,
    InfeasibleCase,
}

impl CaseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseKind::Containing => "containing",
            CaseKind::OneSidedRight => "one_sided_right",
            CaseKind::OneSidedLeft => "one_sided_left",
            CaseKind::General => "general",
            CaseKind::AllOutside => "all_outside",
            CaseKind::TrivialWideSensor => "trivial_wide_sensor",
            CaseKind::InfeasibleCase => "infeasible",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies a valid instance. Precedence: infeasible, wide sensor, no
/// sc-interval on the barrier, all on the barrier, one-sided, general.
pub fn classify(inst: &Instance) -> CaseKind {
    if !inst.is_feasible() {
        return CaseKind::InfeasibleCase;
    }
    if inst.is_wide() {
        return CaseKind::TrivialWideSensor;
    }
    let z = inst.z();
    let beta = inst.beta();
    let mut miss_left = false;
    let mut miss_right = false;
    let mut any_hit = false;
    for xi in inst.x() {
        if (xi + z).is_negative() {
            miss_left = true;
        } else if &(xi - z) > beta {
            miss_right = true;
        } else {
            any_hit = true;
        }
    }
    if !any_hit {
        return CaseKind::AllOutside;
    }
    match (miss_left, miss_right) {
        (false, false) => CaseKind::Containing,
        (false, true) => CaseKind::OneSidedRight,
        (true, false) => CaseKind::OneSidedLeft,
        (true, true) => CaseKind::General,
    }
}

/// Maximal uncovered sub-segment of the barrier, identified by the sensors
/// whose sc-interval endpoints bound it. Boundary gaps touching 0 or `beta`
/// have a single generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapRecord {
    pub left_gen: Option<usize>,
    pub right_gen: Option<usize>,
    pub length: Rat,
}

impl GapRecord {
    /// Effective left generator: the single generator when only one exists.
    pub fn left_generator(&self) -> usize {
        self.left_gen.or(self.right_gen).expect("gap with no generator")
    }

    pub fn right_generator(&self) -> usize {
        self.right_gen.or(self.left_gen).expect("gap with no generator")
    }
}

/// Where an overlap sits relative to the barrier; doubles as the secondary
/// sort key for overlaps sharing a left generator (an off-barrier-left
/// overlap orders before an on-barrier one at the same key).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OverlapPlacement {
    OutsideLeft = 0,
    OnBarrier = 1,
    OutsideRight = 2,
}

/// Spare coverage. Two-generator overlaps come from adjacent sc-interval
/// intersections (possibly straddling a barrier endpoint after the merge
/// rule); single-generator overlaps are the off-barrier portion of one
/// sc-interval, with `left_gen == right_gen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapRecord {
    pub left_gen: usize,
    pub right_gen: usize,
    pub length: Rat,
    pub placement: OverlapPlacement,
}

impl OverlapRecord {
    pub fn key(&self) -> crate::trees::OverlapKey {
        crate::trees::OverlapKey {
            gen: self.left_gen,
            rank: self.placement as u8,
        }
    }
}

/// Enumerates gaps and overlaps of a configuration given by sorted sensor
/// positions. Gaps run left to right; overlaps left to right by composite
/// key. An adjacent-pair intersection whose interior contains a barrier
/// endpoint is merged with the inner off-barrier portion into one record.
pub fn enumerate_gaps_overlaps(
    positions: &[Rat],
    z: &Rat,
    beta: &Rat,
) -> (Vec<GapRecord>, Vec<OverlapRecord>) {
    debug_assert!(positions.windows(2).all(|w| w[0] <= w[1]));
    let n = positions.len();
    let zero = Rat::zero();

    // Gaps: sweep the coverage frontier left to right.
    let mut gaps = Vec::new();
    let mut frontier = zero.clone();
    let mut frontier_gen: Option<usize> = None;
    for (i, y) in positions.iter().enumerate() {
        let lo = y - z;
        let hi = y + z;
        if hi < zero {
            continue; // strictly left of the barrier
        }
        if &lo > beta {
            break; // this and all later sensors are strictly right
        }
        if lo > frontier && &frontier < beta {
            gaps.push(GapRecord {
                left_gen: frontier_gen,
                right_gen: Some(i),
                length: beta.clone().min(lo.clone()) - frontier.clone(),
            });
        }
        if hi >= frontier {
            frontier = hi.min(beta.clone());
            frontier_gen = Some(i);
        }
    }
    if &frontier < beta {
        if frontier_gen.is_some() {
            gaps.push(GapRecord {
                left_gen: frontier_gen,
                right_gen: None,
                length: beta - &frontier,
            });
        } else {
            // no sc-interval reaches the barrier: anchor the whole-barrier
            // gap on the nearest off-barrier sensors so it keeps a generator
            let right = positions.iter().position(|y| &(y - z) > beta);
            let left = positions.iter().rposition(|y| (y + z).is_negative());
            gaps.push(GapRecord {
                left_gen: left,
                right_gen: right,
                length: beta - &frontier,
            });
        }
    }

    // Overlaps, in composite-key order per sensor.
    let mut overlaps = Vec::new();
    for (i, y) in positions.iter().enumerate() {
        let lo = y - z;
        let hi = y + z;
        // Pair intersection with the *previous* sensor decides whether this
        // sensor's off-barrier-left portion was merged away.
        let mut left_portion_merged = false;
        if i > 0 {
            let prev_hi = &positions[i - 1] + z;
            // unclipped intersection [lo, prev_hi]
            if prev_hi > lo {
                let straddles_zero = lo < zero && prev_hi > zero;
                if straddles_zero {
                    left_portion_merged = true;
                }
            }
        }
        let mut right_portion_merged = false;
        if i + 1 < n {
            let next_lo = &positions[i + 1] - z;
            if hi > next_lo && &next_lo < beta && &hi > beta {
                right_portion_merged = true;
            }
        }
        if lo < zero && hi > zero && !left_portion_merged {
            // portion of this sc-interval left of the barrier
            overlaps.push(OverlapRecord {
                left_gen: i,
                right_gen: i,
                length: zero.clone() - lo.clone(),
                placement: OverlapPlacement::OutsideLeft,
            });
        } else if hi <= zero {
            // whole interval left of the barrier
            overlaps.push(OverlapRecord {
                left_gen: i,
                right_gen: i,
                length: z.mul_int(2),
                placement: OverlapPlacement::OutsideLeft,
            });
        }
        if i + 1 < n {
            let next_lo = &positions[i + 1] - z;
            if hi > next_lo {
                // unclipped intersection [next_lo, hi]
                let straddles_zero = next_lo < zero && hi > zero;
                let straddles_beta = &next_lo < beta && &hi > beta;
                let (a, b) = if straddles_zero {
                    // merge [next_lo, 0] and [0, min(hi, beta)]
                    (next_lo.clone(), hi.clone().min(beta.clone()))
                } else if straddles_beta {
                    // merge [max(next_lo, 0), beta] and [beta, hi]
                    (next_lo.clone().max(zero.clone()), hi.clone())
                } else {
                    (
                        next_lo.clone().max(zero.clone()),
                        hi.clone().min(beta.clone()),
                    )
                };
                if b > a {
                    overlaps.push(OverlapRecord {
                        left_gen: i,
                        right_gen: i + 1,
                        length: &b - &a,
                        placement: OverlapPlacement::OnBarrier,
                    });
                }
            }
        }
        if &lo < beta && &hi > beta && !right_portion_merged {
            overlaps.push(OverlapRecord {
                left_gen: i,
                right_gen: i,
                length: &hi - beta,
                placement: OverlapPlacement::OutsideRight,
            });
        } else if &lo >= beta {
            overlaps.push(OverlapRecord {
                left_gen: i,
                right_gen: i,
                length: z.mul_int(2),
                placement: OverlapPlacement::OutsideRight,
            });
        }
    }
    gaps.retain(|g| g.length.is_positive());
    overlaps.retain(|o| o.length.is_positive());
    (gaps, overlaps)
}

/// True iff the union of sc-intervals covers the whole barrier (closed sets,
/// exact arithmetic). Positions need not be sorted.
pub fn verify_coverage(positions: &[Rat], z: &Rat, beta: &Rat) -> bool {
    let mut ys: Vec<&Rat> = positions.iter().collect();
    ys.sort();
    let mut frontier = Rat::zero();
    for y in ys {
        if &(y - z) > &frontier {
            return false;
        }
        let hi = y + z;
        if hi > frontier {
            frontier = hi;
        }
        if &frontier >= beta {
            return true;
        }
    }
    &frontier >= beta
}

/// Sum of per-sensor movement distances.
pub fn total_cost(x: &[Rat], y: &[Rat]) -> Rat {
    assert_eq!(x.len(), y.len());
    let mut sum = Rat::zero();
    for (a, b) in x.iter().zip(y) {
        sum += &(a - b).abs();
    }
    sum
}

/// Reflects an instance about the barrier midpoint: `x'_i = beta - x_{n-1-i}`.
/// An involution; optimal cost is invariant under it.
pub fn mirror(inst: &Instance) -> Instance {
    let beta = inst.beta().clone();
    let x = mirror_positions(inst.x(), &beta);
    Instance::new(inst.z().clone(), beta, x).expect("mirror preserves validity")
}

pub(crate) fn mirror_positions(x: &[Rat], beta: &Rat) -> Vec<Rat> {
    x.iter().rev().map(|v| beta - v).collect()
}

/// Current sensor positions addressed through a lazy position tree.
pub struct Configuration {
    z: Rat,
    beta: Rat,
    tree: PositionTree,
}

impl Configuration {
    pub fn from_instance(inst: &Instance) -> Self {
        Configuration {
            z: inst.z().clone(),
            beta: inst.beta().clone(),
            tree: PositionTree::new(inst.x()),
        }
    }

    pub fn from_positions(positions: &[Rat], z: Rat, beta: Rat) -> Self {
        Configuration {
            z,
            beta,
            tree: PositionTree::new(positions),
        }
    }

    pub fn tree(&self) -> &PositionTree {
        &self.tree
    }

    pub fn tree_mut(&mut self) -> &mut PositionTree {
        &mut self.tree
    }

    pub fn position(&self, i: usize) -> Rat {
        self.tree.position(i)
    }

    pub fn materialize(&self) -> Vec<Rat> {
        self.tree.materialize()
    }

    pub fn gaps_overlaps(&self) -> (Vec<GapRecord>, Vec<OverlapRecord>) {
        enumerate_gaps_overlaps(&self.materialize(), &self.z, &self.beta)
    }

    pub fn verify_coverage(&self) -> bool {
        verify_coverage(&self.materialize(), &self.z, &self.beta)
    }
}

/// Which solver path produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Containing,
    OneSided,
    FarRightSpecial,
    AllOutside,
    WideSingle,
    WidePair,
    GeneralShortcut,
    GeneralSol1,
    GeneralSol2,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Containing => "containing",
            Branch::OneSided => "one_sided",
            Branch::FarRightSpecial => "far_right_special",
            Branch::AllOutside => "all_outside",
            Branch::WideSingle => "wide_single",
            Branch::WidePair => "wide_pair",
            Branch::GeneralShortcut => "general_shortcut",
            Branch::GeneralSol1 => "general_sol1",
            Branch::GeneralSol2 => "general_sol2",
        }
    }
}

/// Counters collected while solving; every bound asserted by the solvers is
/// visible here.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub shift_processes: usize,
    pub pdr_processes: usize,
    pub set_valid_ops: usize,
    pub reverse_ops: usize,
    pub eliminated_overlaps: usize,
    pub branch: Option<Branch>,
}

/// Final positions, exact total cost, and per-sensor movements.
#[derive(Debug, Clone)]
pub struct SolutionReport {
    pub y: Vec<Rat>,
    pub cost: Rat,
    pub case: CaseKind,
    pub movements: Vec<Rat>,
    pub diagnostics: Diagnostics,
}

impl SolutionReport {
    pub(crate) fn assemble(
        inst: &Instance,
        y: Vec<Rat>,
        case: CaseKind,
        diagnostics: Diagnostics,
    ) -> Self {
        let movements: Vec<Rat> = inst.x().iter().zip(&y).map(|(a, b)| (a - b).abs()).collect();
        let mut cost = Rat::zero();
        for m in &movements {
            cost += m;
        }
        SolutionReport {
            y,
            cost,
            case,
            movements,
            diagnostics,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn inst(z: &str, beta: &str, xs: &[&str]) -> Instance {
        Instance::new(
            rat(z),
            rat(beta),
            xs.iter().map(|s| rat(s)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(inst("1", "10", &["1", "2", "3", "8", "9"]).validate().is_ok());
        assert_eq!(
            inst("1", "12", &["1", "2", "3", "8", "9"]).validate(),
            Err(InstanceError::Infeasible)
        );
        assert_eq!(
            Instance::new(
                rat("1"),
                rat("10"),
                vec![rat("2"), rat("1"), rat("3"), rat("8"), rat("9")]
            ),
            Err(InstanceError::UnsortedInput)
        );
        assert_eq!(
            Instance::new(rat("-1"), rat("10"), vec![rat("1")]),
            Err(InstanceError::NonPositiveRadius)
        );
        assert_eq!(
            Instance::new(rat("1"), rat("0"), vec![rat("1")]),
            Err(InstanceError::NonPositiveBarrier)
        );
        assert_eq!(
            Instance::new(rat("1"), rat("1"), vec![]),
            Err(InstanceError::EmptyInput)
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            inst("1", "10", &["1", "2", "3", "8", "9"]).classify(),
            CaseKind::Containing
        );
        assert_eq!(
            inst("1", "4", &["1", "6", "8"]).classify(),
            CaseKind::OneSidedRight
        );
        assert_eq!(
            inst("1", "4", &["-4", "2", "7"]).classify(),
            CaseKind::General
        );
        assert_eq!(
            inst("1", "4", &["-4", "-3", "2"]).classify(),
            CaseKind::OneSidedLeft
        );
        assert_eq!(
            inst("1", "4", &["-5", "7", "8"]).classify(),
            CaseKind::AllOutside
        );
        assert_eq!(
            inst("1", "2", &["5", "9"]).classify(),
            CaseKind::TrivialWideSensor
        );
        assert_eq!(
            inst("1", "12", &["1", "2", "3", "8", "9"]).classify(),
            CaseKind::InfeasibleCase
        );
        // touching endpoints count as intersecting
        assert_eq!(
            inst("1", "4", &["-1", "1", "3", "5"]).classify(),
            CaseKind::Containing
        );
    }

    #[test]
    fn enumerate_containing_example() {
        let i = inst("1", "10", &["1", "2", "3", "8", "9"]);
        let (gaps, overlaps) = enumerate_gaps_overlaps(i.x(), i.z(), i.beta());
        assert_eq!(gaps.len(), 1);
        assert_eq!(gaps[0].left_gen, Some(2));
        assert_eq!(gaps[0].right_gen, Some(3));
        assert_eq!(gaps[0].length, rat("3"));
        let summary: Vec<(usize, usize, Rat)> = overlaps
            .iter()
            .map(|o| (o.left_gen, o.right_gen, o.length.clone()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (0, 1, rat("1")),
                (1, 2, rat("1")),
                (3, 4, rat("1")),
            ]
        );
    }

    #[test]
    fn enumerate_boundary_example() {
        let i = inst("1", "4", &["-0.5", "3"]);
        let (gaps, overlaps) = enumerate_gaps_overlaps(i.x(), i.z(), i.beta());
        assert_eq!(gaps.len(), 1);
        assert_eq!(gaps[0].left_gen, Some(0));
        assert_eq!(gaps[0].right_gen, Some(1));
        assert_eq!(gaps[0].length, rat("1.5"));
        assert_eq!(overlaps.len(), 1);
        assert_eq!(overlaps[0].left_gen, 0);
        assert_eq!(overlaps[0].right_gen, 0);
        assert_eq!(overlaps[0].placement, OverlapPlacement::OutsideLeft);
        assert_eq!(overlaps[0].length, rat("1.5"));
    }

    #[test]
    fn enumerate_exact_cover_example() {
        let i = inst("1", "2", &["0", "2"]);
        let (gaps, overlaps) = enumerate_gaps_overlaps(i.x(), i.z(), i.beta());
        assert!(gaps.is_empty());
        assert_eq!(overlaps.len(), 2);
        assert_eq!(overlaps[0].placement, OverlapPlacement::OutsideLeft);
        assert_eq!(overlaps[0].length, rat("1"));
        assert_eq!(overlaps[1].placement, OverlapPlacement::OutsideRight);
        assert_eq!(overlaps[1].length, rat("1"));
    }

    #[test]
    fn enumerate_straddle_merge() {
        // I(s0) = [-3, 1], I(s1) = [-2, 2]: intersection [-2, 1] contains 0,
        // so the pair defines [-2, 1] and s0 keeps its outside piece [-3, 0].
        let (gaps, overlaps) = enumerate_gaps_overlaps(
            &[rat("-1"), rat("0")],
            &rat("2"),
            &rat("10"),
        );
        assert_eq!(gaps.len(), 1); // [2, 10]
        assert_eq!(gaps[0].length, rat("8"));
        assert_eq!(overlaps.len(), 2);
        assert_eq!(overlaps[0].left_gen, 0);
        assert_eq!(overlaps[0].placement, OverlapPlacement::OutsideLeft);
        assert_eq!(overlaps[0].length, rat("3"));
        assert_eq!(overlaps[1].left_gen, 0);
        assert_eq!(overlaps[1].right_gen, 1);
        assert_eq!(overlaps[1].placement, OverlapPlacement::OnBarrier);
        assert_eq!(overlaps[1].length, rat("3"));
    }

    #[test]
    fn gap_lengths_partition_barrier() {
        // sum of gap lengths + covered length = beta
        let i = inst("1", "10", &["-3", "1", "2", "6", "13"]);
        let (gaps, _) = enumerate_gaps_overlaps(i.x(), i.z(), i.beta());
        let mut gap_sum = Rat::zero();
        for g in &gaps {
            gap_sum += &g.length;
        }
        // covered: [0,3] from s1,s2; [5,7] from s3 => 5 covered, 5 gap
        assert_eq!(gap_sum, rat("5"));
    }

    #[test]
    fn verify_coverage_examples() {
        let z = rat("1");
        let b10 = rat("10");
        let y: Vec<Rat> = ["1", "3", "5", "7", "9"].iter().map(|s| rat(s)).collect();
        assert!(verify_coverage(&y, &z, &b10));
        let y2: Vec<Rat> = ["1", "3", "5", "7", "9.5"].iter().map(|s| rat(s)).collect();
        assert!(!verify_coverage(&y2, &z, &b10));
        assert!(verify_coverage(&[rat("1")], &z, &rat("2")));
    }

    #[test]
    fn total_cost_examples() {
        let x: Vec<Rat> = ["1", "2", "3", "8", "9"].iter().map(|s| rat(s)).collect();
        let y: Vec<Rat> = ["1", "3", "5", "7", "9"].iter().map(|s| rat(s)).collect();
        assert_eq!(total_cost(&x, &y), rat("4"));
        assert_eq!(total_cost(&x, &x), Rat::zero());
        let a: Vec<Rat> = ["5", "9"].iter().map(|s| rat(s)).collect();
        let b: Vec<Rat> = ["1", "9"].iter().map(|s| rat(s)).collect();
        assert_eq!(total_cost(&a, &b), rat("4"));
    }

    #[test]
    fn mirror_examples() {
        let i = inst("1", "4", &["-4", "2", "7"]);
        let m = mirror(&i);
        let expect: Vec<Rat> = ["-3", "2", "8"].iter().map(|s| rat(s)).collect();
        assert_eq!(m.x(), &expect[..]);
        assert_eq!(mirror(&m), i);
        let single = inst("1", "2", &["1"]);
        assert_eq!(mirror(&single), single);
    }

    #[test]
    fn configuration_round_trip() {
        let i = inst("1", "10", &["1", "2", "3", "8", "9"]);
        let mut c = Configuration::from_instance(&i);
        assert_eq!(c.materialize(), i.x());
        c.tree_mut().range_shift(1, 2, &rat("0.5"));
        assert_eq!(c.position(1), rat("2.5"));
        assert!(c.verify_coverage() == false);
    }
}
