//! F-singularity predicates and the blowup-sequence report.
//!
//! Weak normality of `k[A]` in characteristic `p` is the monoid condition
//! `A = (1/p)A ∩ M`; F-purity of a monoid algebra is equivalent to it, and
//! normality is the characteristic-free strengthening via the saturation.
//! The sequence report aggregates, for levels `e = 1..e_max`, the chamber
//! fans, per-step domination verdicts, the per-chamber image condition
//! (`S_e = S_{e+1} ∩ (1/p^e)A` at the torus-fixed point), and a stabilization
//! observation. Stabilization is only ever reported as "stable within the
//! computed range", never as a global claim.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fan::{self, Chamber, ChamberFan, DominationVerdict};
use crate::frobenius::{self, FrobeniusLevel};
use crate::lattice::{self, AffineMonoid, GradedEnumerator, LatticeVector};

/// Outcome of a yes/no predicate, with an optional counterexample and the
/// bound up to which the search ran. `certified` is false when the check was
/// bounded (`d >= 2` weak normality, `d >= 3` saturations).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PredicateVerdict {
    pub value: bool,
    pub certified: bool,
    pub witness: Option<LatticeVector>,
    pub checked_bound: Option<BigInt>,
}

impl PredicateVerdict {
    fn positive(certified: bool, checked_bound: Option<BigInt>) -> Self {
        PredicateVerdict {
            value: true,
            certified,
            witness: None,
            checked_bound,
        }
    }

    fn negative(
        certified: bool,
        witness: LatticeVector,
        checked_bound: Option<BigInt>,
    ) -> Self {
        PredicateVerdict {
            value: false,
            certified,
            witness: Some(witness),
            checked_bound,
        }
    }
}

/// Multiplier for the default weak-normality search bound in `d >= 2`.
const WEAK_NORMALITY_BOUND_FACTOR: u64 = 6;

/// Decides `A = (1/p)A ∩ M`: every lattice point whose `p`-th multiple lies
/// in the monoid must itself lie in the monoid.
///
/// For `d = 1` the check is certified: candidates beyond the conductor of
/// the saturation are automatically inside. For `d >= 2` the search runs up
/// to a weight bound and the verdict reports it.
pub fn is_weakly_normal(monoid: &AffineMonoid, p: u64) -> Result<PredicateVerdict> {
    is_weakly_normal_with(monoid, p, None)
}

pub fn is_weakly_normal_with(
    monoid: &AffineMonoid,
    p: u64,
    bound: Option<&BigInt>,
) -> Result<PredicateVerdict> {
    if !frobenius::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    monoid.check_standing_assumptions()?;
    if monoid.dim() == 1 {
        let ns = lattice::numerical_semigroup(monoid)?;
        let conductor = ns.conductor;
        for m in 1..conductor {
            if ns.contains(p * m) && !ns.contains(m) {
                let witness =
                    LatticeVector::new(vec![BigInt::from(m as i64) * BigInt::from(ns.sign)]);
                return Ok(PredicateVerdict::negative(
                    true,
                    witness,
                    Some(BigInt::from(conductor)),
                ));
            }
        }
        return Ok(PredicateVerdict::positive(true, Some(BigInt::from(conductor))));
    }

    let w0 = lattice::enumeration_weight(monoid)?;
    let max_gen_weight = monoid
        .generators()
        .iter()
        .map(|g| g.dot(&w0))
        .max()
        .unwrap();
    let bound = bound
        .cloned()
        .unwrap_or_else(|| BigInt::from(WEAK_NORMALITY_BOUND_FACTOR) * &max_gen_weight);
    let scan_bound = BigInt::from(p) * &bound;
    let p_big = BigInt::from(p);
    for (a, w) in GradedEnumerator::new(monoid, &w0)? {
        if w > scan_bound {
            break;
        }
        let Some(m) = a.div_exact(&p_big) else {
            continue;
        };
        if m.is_zero() {
            continue;
        }
        if !lattice::monoid_contains(monoid, &m)? {
            return Ok(PredicateVerdict::negative(false, m, Some(bound)));
        }
    }
    Ok(PredicateVerdict::positive(false, Some(bound)))
}

/// F-purity of the monoid algebra: for monoid algebras this is weak
/// normality, so the verdict and certificate are shared.
pub fn is_f_pure(monoid: &AffineMonoid, p: u64) -> Result<PredicateVerdict> {
    is_weakly_normal(monoid, p)
}

/// Normality: the monoid equals its saturation. Certified for `d <= 2`.
pub fn is_normal(monoid: &AffineMonoid) -> Result<PredicateVerdict> {
    monoid.check_standing_assumptions()?;
    let sat = lattice::saturation(monoid)?;
    for s in sat.monoid.generators() {
        if !lattice::monoid_contains(monoid, s)? {
            return Ok(PredicateVerdict::negative(sat.certified, s.clone(), None));
        }
    }
    Ok(PredicateVerdict::positive(sat.certified, None))
}

/// The image condition between consecutive standard sets, checked at the
/// torus-fixed point of a chamber pair: `S_e = S_{e+1} ∩ (1/p^e)A`.
///
/// In the scaled picture with common denominator `p^{e+1}` this is the set
/// equality `p * reps_e = { s ∈ reps_{e+1} : s ∈ pA }`. The witness, if any,
/// is a scaled vector over denominator `p^{e+1}`.
pub fn condition_star(
    monoid: &AffineMonoid,
    p: u64,
    e: u32,
    higher: &Chamber,
    lower: &Chamber,
) -> Result<PredicateVerdict> {
    let lower_level = lower.standard().level();
    let higher_level = higher.standard().level();
    if lower_level.p() != p || higher_level.p() != p {
        return Err(Error::Validation("chamber levels use a different prime".into()));
    }
    if lower_level.e() != e || higher_level.e() != e + 1 {
        return Err(Error::Validation(
            "image condition needs chambers at consecutive levels e and e+1".into(),
        ));
    }
    if !higher.cone().is_subcone_of(lower.cone()) {
        return Err(Error::Validation(
            "the higher chamber must sit inside the lower chamber".into(),
        ));
    }

    let p_big = BigInt::from(p);
    let mut scaled_lower: BTreeSet<LatticeVector> = BTreeSet::new();
    for r in lower.standard().reps().values() {
        scaled_lower.insert(r.scaled(&p_big));
    }
    // Batch the membership queries for the divided representatives.
    let candidates: Vec<(LatticeVector, LatticeVector)> = higher
        .standard()
        .reps()
        .values()
        .filter_map(|s| s.div_exact(&p_big).map(|m| (s.clone(), m)))
        .collect();
    let w0 = lattice::enumeration_weight(monoid)?;
    let bound = candidates
        .iter()
        .map(|(_, m)| w0.dot(m))
        .max()
        .unwrap_or_else(|| BigInt::from(0));
    let members = lattice::monoid_members_up_to(monoid, &w0, &bound)?;
    let mut restricted_higher: BTreeSet<LatticeVector> = BTreeSet::new();
    for (s, m) in candidates {
        if members.contains(&m) {
            restricted_higher.insert(s);
        }
    }
    let witness = scaled_lower
        .symmetric_difference(&restricted_higher)
        .min()
        .cloned();
    Ok(match witness {
        None => PredicateVerdict::positive(true, None),
        Some(v) => PredicateVerdict::negative(true, v, None),
    })
}

// ---------------------------------------------------------------------------
// Sequence reports
// ---------------------------------------------------------------------------

/// Caps and bounds for [`analyze_sequence`].
#[derive(Clone, Debug)]
pub struct SequenceOptions {
    pub e_max_limit_d1: u32,
    pub e_max_limit_d2: u32,
    pub degree_bound: Option<BigInt>,
    pub weak_normality_bound: Option<BigInt>,
}

impl Default for SequenceOptions {
    fn default() -> Self {
        SequenceOptions {
            e_max_limit_d1: 6,
            e_max_limit_d2: 3,
            degree_bound: None,
            weak_normality_bound: None,
        }
    }
}

/// A computed level; failures are recorded per level instead of aborting the
/// whole report.
#[derive(Clone, Debug)]
pub struct LevelEntry {
    pub e: u32,
    pub fan: std::result::Result<ChamberFan, String>,
}

/// A per-step outcome for the transition `from_e -> from_e + 1`.
#[derive(Clone, Debug)]
pub struct StepEntry<T> {
    pub from_e: u32,
    pub outcome: std::result::Result<T, String>,
}

/// The image-condition verdict for one chamber of the higher fan.
#[derive(Clone, Debug)]
pub struct StarChamberEntry {
    pub higher_chamber: usize,
    /// Index of the lower chamber containing it, when one exists.
    pub lower_chamber: Option<usize>,
    pub verdict: Option<PredicateVerdict>,
}

/// Fans, domination, image condition, stabilization and predicates for
/// levels `1..=e_max`.
#[derive(Clone, Debug)]
pub struct SequenceReport {
    pub monoid: AffineMonoid,
    pub p: u64,
    pub levels: Vec<LevelEntry>,
    pub dominates: Vec<StepEntry<DominationVerdict>>,
    pub condition_star: Vec<StepEntry<Vec<StarChamberEntry>>>,
    pub stabilized_at: Option<u32>,
    pub f_pure: PredicateVerdict,
    pub normal: PredicateVerdict,
}

impl SequenceReport {
    pub fn fan_at(&self, e: u32) -> Option<&ChamberFan> {
        self.levels
            .iter()
            .find(|l| l.e == e)
            .and_then(|l| l.fan.as_ref().ok())
    }

    /// Chart generators of the single chamber at level `e` (for `d = 1`).
    pub fn chart_at(&self, e: u32) -> Option<&[LatticeVector]> {
        let fan = self.fan_at(e)?;
        if fan.chambers().len() == 1 {
            Some(fan.chambers()[0].chart().generators())
        } else {
            None
        }
    }

    /// The chart at the stabilized level, when stabilization was observed.
    pub fn stable_chart(&self) -> Option<&[LatticeVector]> {
        self.stabilized_at.and_then(|e0| self.chart_at(e0))
    }
}

/// Computes the full report for `e = 1..=e_max`.
pub fn analyze_sequence(
    monoid: &AffineMonoid,
    p: u64,
    e_max: u32,
    options: &SequenceOptions,
) -> Result<SequenceReport> {
    if !frobenius::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    monoid.check_standing_assumptions()?;
    let limit = if monoid.dim() == 1 {
        options.e_max_limit_d1
    } else {
        options.e_max_limit_d2
    };
    if e_max < 1 || e_max > limit {
        return Err(Error::Validation(format!(
            "e_max must lie in 1..={limit} for dimension {}",
            monoid.dim()
        )));
    }

    let mut levels: Vec<LevelEntry> = Vec::new();
    for e in 1..=e_max {
        let level = FrobeniusLevel::new(p, e)?;
        let fan = fan::compute_fan_with(monoid, &level, options.degree_bound.as_ref())
            .map_err(|err| err.to_string());
        levels.push(LevelEntry { e, fan });
    }

    let mut dominates: Vec<StepEntry<DominationVerdict>> = Vec::new();
    let mut condition_star_steps: Vec<StepEntry<Vec<StarChamberEntry>>> = Vec::new();
    for e in 1..e_max {
        let lower = &levels[(e - 1) as usize].fan;
        let higher = &levels[e as usize].fan;
        match (lower, higher) {
            (Ok(lower), Ok(higher)) => {
                dominates.push(StepEntry {
                    from_e: e,
                    outcome: fan::dominates(higher, lower).map_err(|err| err.to_string()),
                });
                let mut entries = Vec::new();
                for (hi_idx, hc) in higher.chambers().iter().enumerate() {
                    let lo_idx = lower
                        .chambers()
                        .iter()
                        .position(|lc| hc.cone().is_subcone_of(lc.cone()));
                    let verdict = match lo_idx {
                        Some(lo) => Some(condition_star(
                            monoid,
                            p,
                            e,
                            hc,
                            &lower.chambers()[lo],
                        )?),
                        None => None,
                    };
                    entries.push(StarChamberEntry {
                        higher_chamber: hi_idx,
                        lower_chamber: lo_idx,
                        verdict,
                    });
                }
                condition_star_steps.push(StepEntry {
                    from_e: e,
                    outcome: Ok(entries),
                });
            }
            _ => {
                let msg = "a fan at this step failed".to_string();
                dominates.push(StepEntry {
                    from_e: e,
                    outcome: Err(msg.clone()),
                });
                condition_star_steps.push(StepEntry {
                    from_e: e,
                    outcome: Err(msg),
                });
            }
        }
    }

    // Stabilization within the computed range: the least e0 < e_max from
    // which on all consecutive fans agree (same subdivision, same charts).
    let fans_ok: Vec<Option<&ChamberFan>> =
        levels.iter().map(|l| l.fan.as_ref().ok()).collect();
    let pair_equal = |i: usize| -> bool {
        match (fans_ok[i], fans_ok[i + 1]) {
            (Some(a), Some(b)) => a.same_subdivision_and_charts(b),
            _ => false,
        }
    };
    let mut stabilized_at = None;
    if e_max >= 2 {
        for e0 in 1..e_max {
            if (e0..e_max).all(|e| pair_equal((e - 1) as usize)) {
                stabilized_at = Some(e0);
                break;
            }
        }
    }

    let f_pure = is_weakly_normal_with(monoid, p, options.weak_normality_bound.as_ref())?;
    let normal = is_normal(monoid)?;

    Ok(SequenceReport {
        monoid: monoid.clone(),
        p,
        levels,
        dominates,
        condition_star: condition_star_steps,
        stabilized_at,
        f_pure,
        normal,
    })
}

/// Renders a scaled witness `v / p^{e+1}` as a reduced fraction string, e.g.
/// `6/4` becomes `3/2`.
pub fn scaled_fraction(v: &LatticeVector, denominator: &BigInt) -> String {
    use num_integer::Integer;
    let mut parts: Vec<String> = Vec::new();
    for c in v.coords() {
        let g = c.gcd(denominator);
        let num = c / &g;
        let den = denominator / &g;
        if den.to_u64() == Some(1) {
            parts.push(format!("{num}"));
        } else {
            parts.push(format!("{num}/{den}"));
        }
    }
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        format!("({})", parts.join(", "))
    }
}
