//! Weight-chamber fans and domination between consecutive F-blowup levels.
//!
//! The chamber fan of `(A, p, e)` subdivides the dual cone into the maximal
//! subcones on which the standard set is constant. Chambers are discovered by
//! a work-queue walk: compute the standard set at a seed weight, intersect
//! the competitor inequalities seen during enumeration into a candidate cone,
//! re-verify the candidate at an independent interior sample, then cross each
//! interior facet to reach the neighbors. Wall completeness is not proved;
//! instead every chamber is re-verified by sampling and the finished fan is
//! checked to tile the dual cone exactly. The `certified` flag reports
//! whether all of those checks passed.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::frobenius::{
    self, chart_monoid_from_run, standard_set_run, ChartMonoid, FrobeniusLevel, StandardSet,
    StandardSetRun,
};
use crate::lattice::{
    self, cross2, AffineMonoid, LatticeVector, RationalCone, Weight,
};

/// Iterations of the shrink-and-resample loop per chamber.
const MAX_SETTLE_ROUNDS: usize = 8;
/// Scale doublings allowed when stepping across a wall.
const MAX_CROSSING_DOUBLINGS: usize = 64;
/// Ceiling on the number of chambers explored per fan.
const MAX_CHAMBERS: usize = 4096;

// ---------------------------------------------------------------------------
// Chambers and fans
// ---------------------------------------------------------------------------

/// One maximal cone of the chamber fan, together with the standard set and
/// chart computed at an interior sample weight.
#[derive(Clone, Debug)]
pub struct Chamber {
    cone: RationalCone,
    sample: Weight,
    standard: StandardSet,
    chart: ChartMonoid,
}

impl Chamber {
    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn sample(&self) -> &Weight {
        &self.sample
    }

    pub fn standard(&self) -> &StandardSet {
        &self.standard
    }

    pub fn chart(&self) -> &ChartMonoid {
        &self.chart
    }
}

/// The subdivision of the dual cone at one Frobenius level.
#[derive(Clone, Debug)]
pub struct ChamberFan {
    level: FrobeniusLevel,
    monoid: AffineMonoid,
    chambers: Vec<Chamber>,
    certified: bool,
}

impl ChamberFan {
    pub fn level(&self) -> &FrobeniusLevel {
        &self.level
    }

    pub fn monoid(&self) -> &AffineMonoid {
        &self.monoid
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn certified(&self) -> bool {
        self.certified
    }

    /// Equal subdivision carrying equal charts: the stabilization test.
    pub fn same_subdivision_and_charts(&self, other: &ChamberFan) -> bool {
        self.chambers.len() == other.chambers.len()
            && self
                .chambers
                .iter()
                .zip(&other.chambers)
                .all(|(a, b)| {
                    a.cone.rays() == b.cone.rays() && a.chart.same_generators(&b.chart)
                })
    }
}

// ---------------------------------------------------------------------------
// Fan computation
// ---------------------------------------------------------------------------

/// Computes the chamber fan of `(A, level)`; certified output for `d <= 2`.
pub fn compute_fan(monoid: &AffineMonoid, level: &FrobeniusLevel) -> Result<ChamberFan> {
    compute_fan_with(monoid, level, None)
}

pub fn compute_fan_with(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    degree_bound: Option<&BigInt>,
) -> Result<ChamberFan> {
    match monoid.dim() {
        1 => fan_d1(monoid, level, degree_bound),
        2 => fan_d2(monoid, level, degree_bound),
        d => Err(Error::DimensionUnsupported { dim: d, max: 2 }),
    }
}

/// In one dimension the dual cone is a single ray and every level has
/// exactly one chamber.
fn fan_d1(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    degree_bound: Option<&BigInt>,
) -> Result<ChamberFan> {
    let dual = lattice::dual_cone(monoid)?;
    let sample = Weight::new(dual.rays()[0].clone());
    let run = standard_set_run(monoid, level, &sample)?;
    let chart = chart_monoid_from_run(monoid, &run, degree_bound)?;
    let chamber = Chamber {
        cone: dual,
        sample,
        standard: run.standard,
        chart,
    };
    Ok(ChamberFan {
        level: level.clone(),
        monoid: monoid.clone(),
        chambers: vec![chamber],
        certified: true,
    })
}

fn fan_d2(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    degree_bound: Option<&BigInt>,
) -> Result<ChamberFan> {
    let dual = lattice::dual_cone(monoid)?;
    assert_eq!(dual.rays().len(), 2, "pointed full-dimensional dual cone");
    let (seed, _) = frobenius::generic_weight_in(monoid, level, dual.rays())?;

    let mut chambers: Vec<Chamber> = Vec::new();
    let mut queue: VecDeque<Weight> = VecDeque::new();
    queue.push_back(seed);
    let mut all_ok = true;

    while let Some(w) = queue.pop_front() {
        let run = standard_set_run(monoid, level, &w)?;
        if chambers
            .iter()
            .any(|c| c.standard.reps() == run.standard.reps())
        {
            continue;
        }
        // A fresh standard set strictly inside a recorded cone means that
        // cone missed a wall.
        if chambers
            .iter()
            .any(|c| c.cone.contains_interior(w.covector()))
        {
            all_ok = false;
            continue;
        }
        if chambers.len() >= MAX_CHAMBERS {
            return Err(Error::ResourceLimit(
                "chamber exploration exceeded the chamber limit".into(),
            ));
        }

        let (cone, settled) = settle_chamber(monoid, level, &dual, &w, &run)?;
        all_ok &= settled;
        debug_assert!(cone.contains_interior(w.covector()));

        // Queue a sample across every facet interior to the dual cone.
        for (facet, normal) in sector_facets(&cone) {
            if !dual.contains_interior(&facet) {
                continue;
            }
            match crossing_sample(monoid, level, &dual, &facet, &normal) {
                Some(s) => queue.push_back(s),
                None => all_ok = false,
            }
        }

        let chart = chart_monoid_from_run(monoid, &run, degree_bound)?;
        chambers.push(Chamber {
            cone,
            sample: w,
            standard: run.standard,
            chart,
        });
    }

    // Coverage: the chambers, sorted along the dual cone, must tile it.
    chambers.sort_by(|a, b| {
        let c = cross2(&a.cone.rays()[0], &b.cone.rays()[0]);
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else if c.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    let covered = !chambers.is_empty()
        && chambers[0].cone.rays()[0] == dual.rays()[0]
        && chambers[chambers.len() - 1].cone.rays()[1] == dual.rays()[1]
        && chambers
            .windows(2)
            .all(|pair| pair[0].cone.rays()[1] == pair[1].cone.rays()[0]);

    Ok(ChamberFan {
        level: level.clone(),
        monoid: monoid.clone(),
        chambers,
        certified: all_ok && covered,
    })
}

/// Computes only the chamber containing a caller-supplied weight: the
/// standard set, chart, and settled chamber cone at that weight. The result
/// is a one-chamber fan; for `d >= 2` it makes no coverage claim and is
/// flagged uncertified as a subdivision.
pub fn single_weight_fan(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    weight: &Weight,
    degree_bound: Option<&BigInt>,
) -> Result<ChamberFan> {
    if monoid.dim() > 2 {
        return Err(Error::DimensionUnsupported {
            dim: monoid.dim(),
            max: 2,
        });
    }
    let run = standard_set_run(monoid, level, weight)?;
    let chart = chart_monoid_from_run(monoid, &run, degree_bound)?;
    let (cone, certified) = if monoid.dim() == 1 {
        (lattice::dual_cone(monoid)?, true)
    } else {
        let dual = lattice::dual_cone(monoid)?;
        let (cone, _settled) = settle_chamber(monoid, level, &dual, weight, &run)?;
        (cone, false)
    };
    let chamber = Chamber {
        cone,
        sample: weight.clone(),
        standard: run.standard,
        chart,
    };
    Ok(ChamberFan {
        level: level.clone(),
        monoid: monoid.clone(),
        chambers: vec![chamber],
        certified,
    })
}

/// Intersects the competitor constraints observed at `w` into a candidate
/// cone, then re-verifies at interior samples biased toward both extreme
/// rays, shrinking the candidate until every sample agrees. Returns the cone
/// and whether the verification converged.
///
/// Constraints are collected from an enumeration deeper than the
/// certification bound, because a wall can be cut out by a competitor whose
/// seed weight exceeds the heaviest representative. The skewed sample
/// battery catches walls that escape even the deepened enumeration.
fn settle_chamber(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    dual: &RationalCone,
    w: &Weight,
    run: &StandardSetRun,
) -> Result<(RationalCone, bool)> {
    let mut constraints = competitor_constraints(monoid, run)?;
    for _ in 0..MAX_SETTLE_ROUNDS {
        let cone = intersect_sector(dual, &constraints, w)?;
        let lo = &cone.rays()[0];
        let hi = &cone.rays()[1];
        let mid = lo + hi;
        // Three slots: biased toward each ray, plus the middle.
        let slots: [Vec<LatticeVector>; 3] = [
            vec![lo.clone(), mid.clone()],
            vec![mid.clone(), hi.clone()],
            vec![lo.clone(), hi.clone()],
        ];
        let exclude = w.covector().primitive();
        let mut cut = false;
        let mut verified = 0usize;
        for rays in &slots {
            let Some((_, vrun)) =
                generic_weight_excluding(monoid, level, rays, Some(&exclude))?
            else {
                continue;
            };
            if vrun.standard.reps() == run.standard.reps() {
                verified += 1;
                continue;
            }
            // The sample sees different minima: cut it off and retry.
            // Inside the true chamber of w each old representative is
            // minimal, so the difference vectors are valid constraints.
            for (label, rep) in run.standard.reps() {
                let other = &vrun.standard.reps()[label];
                if other != rep {
                    let v = (other - rep).primitive();
                    if !constraints.contains(&v) {
                        constraints.push(v);
                        cut = true;
                    }
                }
            }
        }
        if !cut {
            let cone = intersect_sector(dual, &constraints, w)?;
            return Ok((cone, verified > 0));
        }
    }
    let cone = intersect_sector(dual, &constraints, w)?;
    Ok((cone, false))
}

/// Difference vectors `a - rep` over the competitors of an enumeration that
/// runs to twice the certification bound plus a generator margin; inside the
/// chamber of the run's weight each pairs nonnegatively.
fn competitor_constraints(
    monoid: &AffineMonoid,
    run: &StandardSetRun,
) -> Result<Vec<LatticeVector>> {
    let q = run.standard.level().q();
    let weight = run.standard.weight();
    let max_gen_weight = monoid
        .generators()
        .iter()
        .map(|g| weight.eval(g))
        .max()
        .unwrap();
    let cutoff = BigInt::from(2) * run.standard.bound() + BigInt::from(2) * &max_gen_weight;
    let mut out: Vec<LatticeVector> = Vec::new();
    for (v, vw) in crate::lattice::GradedEnumerator::new(monoid, weight.covector())? {
        if vw > cutoff {
            break;
        }
        let rep = &run.standard.reps()[&v.coset_label(q)];
        if rep == &v {
            continue;
        }
        let c = (&v - rep).primitive();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Intersects the dual sector with the halfplanes `<v, .> >= 0`; `w` is a
/// strictly feasible interior point, so the result is a full sector.
fn intersect_sector(
    dual: &RationalCone,
    constraints: &[LatticeVector],
    w: &Weight,
) -> Result<RationalCone> {
    let mut lo = dual.rays()[0].clone();
    let mut hi = dual.rays()[1].clone();
    for v in constraints {
        let s_lo = v.dot(&lo);
        let s_hi = v.dot(&hi);
        if !s_lo.is_negative() && !s_hi.is_negative() {
            continue;
        }
        if s_lo.is_negative() && s_hi.is_negative() {
            return Err(Error::Validation(
                "constraint set cut away the sample weight".into(),
            ));
        }
        debug_assert!(v.dot(w.covector()).is_positive());
        // Boundary direction of the halfplane inside the sector.
        let b = (&lo.scaled(&s_hi.abs()) + &hi.scaled(&s_lo.abs())).primitive();
        if s_lo.is_negative() {
            lo = b;
        } else {
            hi = b;
        }
    }
    // Inner normals of the sector, in the primal lattice.
    let n_lo = rot90(&lo);
    let n_hi = -&rot90(&hi);
    Ok(RationalCone::new(vec![lo, hi], vec![n_lo, n_hi]))
}

fn rot90(v: &LatticeVector) -> LatticeVector {
    LatticeVector::new(vec![-v.coords()[1].clone(), v.coords()[0].clone()])
}

/// Facets of a 2d sector as (ray, inward normal) pairs.
fn sector_facets(cone: &RationalCone) -> Vec<(LatticeVector, LatticeVector)> {
    let lo = &cone.rays()[0];
    let hi = &cone.rays()[1];
    vec![(lo.clone(), rot90(lo)), (hi.clone(), -&rot90(hi))]
}

/// A generic integer weight just beyond the wall through `facet`: scaled
/// copies of the facet ray nudged against the inward normal, with the scale
/// doubled until the point is interior to the dual cone and generic.
fn crossing_sample(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    dual: &RationalCone,
    facet: &LatticeVector,
    normal: &LatticeVector,
) -> Option<Weight> {
    let mut scale = BigInt::from(2)
        * normal
            .coords()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap()
            .max(BigInt::from(1));
    for _ in 0..MAX_CROSSING_DOUBLINGS {
        let s = &facet.scaled(&scale) - normal;
        if dual.contains_interior(&s) {
            let w = Weight::new(s);
            match standard_set_run(monoid, level, &w) {
                Ok(_) => return Some(w),
                Err(Error::WeightNotGeneric { .. }) => {}
                Err(_) => return None,
            }
        }
        scale *= 2;
    }
    None
}

/// Deterministic generic weight strictly inside the cone spanned by `rays`,
/// optionally excluding one primitive direction. `Ok(None)` means the try
/// budget ran out.
fn generic_weight_excluding(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    rays: &[LatticeVector],
    exclude: Option<&LatticeVector>,
) -> Result<Option<(Weight, StandardSetRun)>> {
    match frobenius::generic_weight_in_excluding(monoid, level, rays, exclude) {
        Ok(pair) => Ok(Some(pair)),
        Err(Error::GenericWeightSearchFailed { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

// ---------------------------------------------------------------------------
// Refinement and domination
// ---------------------------------------------------------------------------

/// True iff every chamber cone of `finer` is contained in a chamber cone of
/// `coarser`. Both fans must be certified and belong to the same monoid.
pub fn refines(finer: &ChamberFan, coarser: &ChamberFan) -> Result<bool> {
    check_comparable(finer, coarser)?;
    Ok(finer.chambers.iter().all(|cf| {
        coarser
            .chambers
            .iter()
            .any(|cc| cf.cone.is_subcone_of(&cc.cone))
    }))
}

fn check_comparable(a: &ChamberFan, b: &ChamberFan) -> Result<()> {
    if a.monoid != b.monoid {
        return Err(Error::Validation(
            "fans belong to different monoids".into(),
        ));
    }
    if !a.certified {
        return Err(Error::UncertifiedInput(
            "the finer fan is not certified".into(),
        ));
    }
    if !b.certified {
        return Err(Error::UncertifiedInput(
            "the coarser fan is not certified".into(),
        ));
    }
    Ok(())
}

/// Why a domination check failed.
#[derive(Clone, Debug)]
pub enum DominationWitness {
    /// A chamber of the higher fan is not contained in any lower chamber.
    NotRefining { higher_chamber: usize },
    /// A minimal generator of a lower chart is missing from the chart monoid
    /// of a higher chamber inside it.
    MissingGenerator {
        generator: LatticeVector,
        lower_e: u32,
        higher_e: u32,
        lower_chamber: usize,
        higher_chamber: usize,
    },
}

impl fmt::Display for DominationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominationWitness::NotRefining { higher_chamber } => write!(
                f,
                "chamber {higher_chamber} of the higher fan is not contained in any lower chamber"
            ),
            DominationWitness::MissingGenerator {
                generator,
                lower_e,
                higher_e,
                ..
            } => write!(
                f,
                "generator {generator} of the level-{lower_e} chart is not in the level-{higher_e} chart monoid"
            ),
        }
    }
}

/// Outcome of a domination check between consecutive levels.
#[derive(Clone, Debug)]
pub struct DominationVerdict {
    pub value: bool,
    pub certified: bool,
    pub witness: Option<DominationWitness>,
}

/// Decides whether the blowup at level `e + 1` dominates the one at level
/// `e`: the higher fan refines the lower one and, chamber inside chamber,
/// the lower chart monoid embeds into the higher chart monoid.
///
/// A positive verdict is certified when every lower chart is certified
/// complete (extra higher generators cannot break an established
/// containment); a negative generator witness is certified when the failing
/// higher chart is certified.
pub fn dominates(higher: &ChamberFan, lower: &ChamberFan) -> Result<DominationVerdict> {
    check_comparable(higher, lower)?;
    if higher.level.p() != lower.level.p() || higher.level.e() != lower.level.e() + 1 {
        return Err(Error::Validation(
            "domination compares consecutive levels of one prime".into(),
        ));
    }

    let refining = refines(higher, lower)?;
    if !refining {
        let idx = higher
            .chambers
            .iter()
            .position(|cf| {
                !lower
                    .chambers
                    .iter()
                    .any(|cc| cf.cone.is_subcone_of(&cc.cone))
            })
            .unwrap();
        return Ok(DominationVerdict {
            value: false,
            certified: true,
            witness: Some(DominationWitness::NotRefining { higher_chamber: idx }),
        });
    }

    let lower_charts_certified = lower
        .chambers
        .iter()
        .all(|c| c.chart.complete_up_to().is_certified());
    for (hi_idx, hc) in higher.chambers.iter().enumerate() {
        let lo_idx = lower
            .chambers
            .iter()
            .position(|lc| hc.cone.is_subcone_of(&lc.cone))
            .expect("refinement already checked");
        let lc = &lower.chambers[lo_idx];
        let higher_chart = hc.chart.as_monoid()?;
        // The higher sample is interior to both chambers, so it is strictly
        // positive on both chart monoids; one batch enumeration of the
        // higher chart answers every containment query.
        let w0 = hc.sample.covector();
        let bound = lc
            .chart
            .generators()
            .iter()
            .map(|g| w0.dot(g))
            .max()
            .unwrap_or_else(|| BigInt::from(0));
        let members = lattice::monoid_members_up_to(&higher_chart, w0, &bound)?;
        for g in lc.chart.generators() {
            if !members.contains(g) {
                return Ok(DominationVerdict {
                    value: false,
                    certified: hc.chart.complete_up_to().is_certified(),
                    witness: Some(DominationWitness::MissingGenerator {
                        generator: g.clone(),
                        lower_e: lower.level.e(),
                        higher_e: higher.level.e(),
                        lower_chamber: lo_idx,
                        higher_chamber: hi_idx,
                    }),
                });
            }
        }
    }
    Ok(DominationVerdict {
        value: true,
        certified: lower_charts_certified,
        witness: None,
    })
}
