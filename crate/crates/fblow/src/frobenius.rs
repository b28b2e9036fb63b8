//! Standard sets and chart monoids of F-blowups.
//!
//! Everything is computed in the scaled integer picture: an element of
//! `(1/q)A` is stored as its numerator `a ∈ A` together with the coset label
//! `a mod q` in `(Z/q)^d`. The standard set of a weight `w` collects, per
//! coset, the unique element of minimal `<.,w>`-weight; its complement inside
//! the scaled monoid is the set of elements that strictly dominate their
//! coset minimum. Chart monoids are generated by the scaled differences
//! `(a - rep(a)) / q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    self, AffineMonoid, GradedEnumerator, LatticeVector, Weight,
};

/// Residue label of a coset of `qM` in `M`, with entries in `[0, q)`.
pub type CosetLabel = Vec<u64>;

/// Ceiling on the number of cosets `q^d` a single standard-set computation
/// may enumerate.
const COSET_LIMIT: u64 = 1 << 21;

/// Retry budget for the deterministic generic-weight search.
const GENERIC_WEIGHT_TRIES: usize = 128;

// ---------------------------------------------------------------------------
// Frobenius levels
// ---------------------------------------------------------------------------

/// The pair `(p, e)` with `q = p^e` computed exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusLevel {
    p: u64,
    e: u32,
    q: BigInt,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FrobeniusLevel {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FrobeniusLevel {
            p,
            e,
            q: BigInt::from(p).pow(e),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The next level `(p, e + 1)`.
    pub fn successor(&self) -> Self {
        FrobeniusLevel {
            p: self.p,
            e: self.e + 1,
            q: &self.q * BigInt::from(self.p),
        }
    }

    fn coset_count(&self, dim: usize) -> Result<u64> {
        self.q
            .pow(dim as u32)
            .to_u64()
            .filter(|&n| n <= COSET_LIMIT)
            .ok_or_else(|| {
                Error::ResourceLimit(format!(
                    "q^d = {} cosets exceed the enumeration limit",
                    self.q.pow(dim as u32)
                ))
            })
    }
}

// ---------------------------------------------------------------------------
// Standard sets
// ---------------------------------------------------------------------------

/// The weight-minimal coset representatives of the scaled monoid, one per
/// coset of `qM` in `M`. `bound` is the largest representative weight; any
/// monoid element of weight beyond it provably cannot displace a minimum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardSet {
    level: FrobeniusLevel,
    weight: Weight,
    reps: BTreeMap<CosetLabel, LatticeVector>,
    bound: BigInt,
}

impl StandardSet {
    pub fn level(&self) -> &FrobeniusLevel {
        &self.level
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn reps(&self) -> &BTreeMap<CosetLabel, LatticeVector> {
        &self.reps
    }

    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    pub fn rep_of(&self, label: &[u64]) -> Option<&LatticeVector> {
        self.reps.get(label)
    }

    /// Is the scaled element `a/q` dominated, i.e. strictly heavier than the
    /// minimum of its coset? Requires `a ∈ A`; elements outside the monoid
    /// are rejected.
    pub fn b_contains(&self, monoid: &AffineMonoid, a: &LatticeVector) -> Result<bool> {
        if !lattice::monoid_contains(monoid, a)? {
            return Ok(false);
        }
        let label = a.coset_label(&self.level.q);
        Ok(self.reps.get(&label) != Some(a))
    }

    /// The representatives as a sorted list of scaled vectors.
    pub fn sorted_reps(&self) -> Vec<LatticeVector> {
        let mut v: Vec<LatticeVector> = self.reps.values().cloned().collect();
        v.sort_by_key(|r| (self.weight.eval(r), r.clone()));
        v
    }
}

/// Internal result of a standard-set run; chart and chamber computations
/// re-enumerate from here with their own cutoffs.
pub(crate) struct StandardSetRun {
    pub standard: StandardSet,
}

pub(crate) fn standard_set_run(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    weight: &Weight,
) -> Result<StandardSetRun> {
    monoid.check_standing_assumptions()?;
    if weight.dim() != monoid.dim() {
        return Err(Error::DimensionMismatch {
            expected: monoid.dim(),
            found: weight.dim(),
        });
    }
    let total = level.coset_count(monoid.dim())?;
    let q = &level.q;
    let mut reps: BTreeMap<CosetLabel, LatticeVector> = BTreeMap::new();
    let mut rep_weights: BTreeMap<CosetLabel, BigInt> = BTreeMap::new();
    let mut bound = BigInt::zero();

    // Graded enumeration: elements arrive in (weight, lex) order, so the
    // first element of each coset is its global minimum, and a second
    // element at the same weight is exactly a genericity failure.
    let mut iter = GradedEnumerator::new(monoid, weight.covector())?.peekable();
    while let Some((v, w)) = iter.next() {
        let label = v.coset_label(q);
        match reps.get(&label) {
            None => {
                bound = w.clone();
                reps.insert(label.clone(), v.clone());
                rep_weights.insert(label, w.clone());
            }
            Some(rep) => {
                if rep_weights[&label] == w {
                    return Err(Error::WeightNotGeneric {
                        coset: label,
                        first: rep.to_string(),
                        second: v.to_string(),
                    });
                }
            }
        }
        if reps.len() as u64 == total {
            // All minima found; drain the current weight level to rule out
            // ties, then stop.
            match iter.peek() {
                Some((_, next_w)) if *next_w <= bound => continue,
                _ => break,
            }
        }
    }

    debug_assert_eq!(reps.len() as u64, total);
    debug_assert_eq!(
        reps.get(&vec![0u64; monoid.dim()]),
        Some(&LatticeVector::zero(monoid.dim()))
    );
    Ok(StandardSetRun {
        standard: StandardSet {
            level: level.clone(),
            weight: weight.clone(),
            reps,
            bound,
        },
    })
}

/// The standard set of `(A, p, e, w)`: per coset of `qM`, the weight-minimal
/// element of the scaled monoid. Fails with [`Error::WeightNotGeneric`] when
/// two elements of one coset tie at the minimum (the weight sits on a wall).
pub fn standard_set(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    weight: &Weight,
) -> Result<StandardSet> {
    Ok(standard_set_run(monoid, level, weight)?.standard)
}

/// Deterministic search for a weight that is interior to the dual cone and
/// generic for `(A, level)`: walks coprime combinations of the dual-cone rays
/// until the standard set computation stops reporting ties.
pub fn generic_weight(monoid: &AffineMonoid, level: &FrobeniusLevel) -> Result<Weight> {
    let cone = lattice::dual_cone(monoid)?;
    generic_weight_in(monoid, level, cone.rays()).map(|(w, _)| w)
}

/// Same search, restricted to the interior of the cone spanned by `rays`;
/// also returns the run so callers do not recompute it.
pub(crate) fn generic_weight_in(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    rays: &[LatticeVector],
) -> Result<(Weight, StandardSetRun)> {
    generic_weight_in_excluding(monoid, level, rays, None)
}

/// Generic-weight search that can rule out one primitive direction, so a
/// verification sample never coincides with the weight it is checking.
pub(crate) fn generic_weight_in_excluding(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    rays: &[LatticeVector],
    exclude: Option<&LatticeVector>,
) -> Result<(Weight, StandardSetRun)> {
    let mut tries = 0usize;
    for combo in interior_combinations(rays.len()) {
        if tries >= GENERIC_WEIGHT_TRIES {
            break;
        }
        tries += 1;
        let mut cov = LatticeVector::zero(monoid.dim());
        for (ray, k) in rays.iter().zip(&combo) {
            cov = &cov + &ray.scaled(&BigInt::from(*k));
        }
        if exclude.is_some_and(|dir| cov.primitive() == *dir) {
            continue;
        }
        let weight = Weight::new(cov);
        match standard_set_run(monoid, level, &weight) {
            Ok(run) => return Ok((weight, run)),
            Err(Error::WeightNotGeneric { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericWeightSearchFailed { tries })
}

/// Positive coprime coefficient vectors ordered by total size then
/// lexicographically; for two rays these are (1,1), (1,2), (2,1), (1,3), ...
/// Every wall misses all but finitely many of these directions, so the
/// generic-weight search terminates.
fn interior_combinations(n: usize) -> impl Iterator<Item = Vec<u64>> {
    fn fill(n: usize, left: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            acc.push(left);
            let gcd = acc.iter().fold(0u64, |g, &k| num_integer::gcd(g, k));
            if gcd == 1 || acc.len() == 1 {
                out.push(acc.clone());
            }
            acc.pop();
            return;
        }
        for k in 1..=(left - (n as u64 - 1)) {
            acc.push(k);
            fill(n - 1, left - k, acc, out);
            acc.pop();
        }
    }
    let mut sum = n as u64;
    let mut batch: std::collections::VecDeque<Vec<u64>> = Default::default();
    std::iter::from_fn(move || loop {
        if let Some(c) = batch.pop_front() {
            return Some(c);
        }
        let mut next = Vec::new();
        fill(n, sum, &mut Vec::new(), &mut next);
        batch.extend(next);
        sum += 1;
    })
}

// ---------------------------------------------------------------------------
// Chart monoids
// ---------------------------------------------------------------------------

/// Completeness status of a chart generator list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Completeness {
    /// The generator list is provably the whole minimal generating set.
    Certified,
    /// Generators were collected from monoid elements of weight up to the
    /// bound; a larger bound could reveal more.
    UpToWeight(BigInt),
}

impl Completeness {
    pub fn is_certified(&self) -> bool {
        matches!(self, Completeness::Certified)
    }
}

/// Minimal generators of the chart monoid of one chamber: the monoid
/// generated by the scaled differences `(a - rep(a))/q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartMonoid {
    level: FrobeniusLevel,
    weight: Weight,
    generators: Vec<LatticeVector>,
    complete_up_to: Completeness,
}

impl ChartMonoid {
    pub fn level(&self) -> &FrobeniusLevel {
        &self.level
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn complete_up_to(&self) -> &Completeness {
        &self.complete_up_to
    }

    pub fn dim(&self) -> usize {
        self.weight.dim()
    }

    /// The chart as a plain monoid, for membership queries.
    pub fn as_monoid(&self) -> Result<AffineMonoid> {
        AffineMonoid::new(self.dim(), self.generators.clone())
    }

    /// Same generator set, ignoring level, weight, and bounds.
    pub fn same_generators(&self, other: &ChartMonoid) -> bool {
        self.generators == other.generators
    }
}

/// Smoothness of the affine chart: the monoid is free on a lattice basis.
/// The verdict inherits the chart's certification status.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmoothnessVerdict {
    pub value: bool,
    pub certified: bool,
}

pub fn is_smooth_chart(chart: &ChartMonoid) -> SmoothnessVerdict {
    let d = chart.dim();
    let value = chart.generators.len() == d && {
        let m = AffineMonoid::new(d, chart.generators.clone()).expect("chart gens are nonzero");
        lattice::group_generates(&m)
    };
    SmoothnessVerdict {
        value,
        certified: chart.complete_up_to.is_certified(),
    }
}

/// The chart monoid at `(A, level, w)`.
///
/// For `d = 1` the cutoff is derived from the conductor of the saturation and
/// the result is certified complete. For `d >= 2` elements are enumerated up
/// to `2T + degree_bound` (default `4 * max generator weight`) and the result
/// carries the bound.
pub fn chart_monoid(
    monoid: &AffineMonoid,
    level: &FrobeniusLevel,
    weight: &Weight,
    degree_bound: Option<&BigInt>,
) -> Result<ChartMonoid> {
    let run = standard_set_run(monoid, level, weight)?;
    chart_monoid_from_run(monoid, &run, degree_bound)
}

pub(crate) fn chart_monoid_from_run(
    monoid: &AffineMonoid,
    run: &StandardSetRun,
    degree_bound: Option<&BigInt>,
) -> Result<ChartMonoid> {
    let level = run.standard.level.clone();
    let weight = run.standard.weight.clone();
    if monoid.dim() == 1 {
        return chart_monoid_d1(monoid, &run.standard);
    }

    let q = level.q();
    let max_gen_weight = monoid
        .generators()
        .iter()
        .map(|g| weight.eval(g))
        .max()
        .unwrap();
    let extra = degree_bound
        .cloned()
        .unwrap_or_else(|| BigInt::from(4) * &max_gen_weight);
    let cutoff = BigInt::from(2) * run.standard.bound() + &extra;

    let mut diffs: Vec<LatticeVector> = Vec::new();
    for (v, w) in GradedEnumerator::new(monoid, weight.covector())? {
        if w > cutoff {
            break;
        }
        let label = v.coset_label(q);
        let rep = &run.standard.reps[&label];
        if *rep == v {
            continue;
        }
        let diff = (&v - rep)
            .div_exact(q)
            .expect("difference within a coset is divisible by q");
        if !diffs.contains(&diff) {
            diffs.push(diff);
        }
    }
    let generators = minimal_generators(&diffs)?;
    Ok(ChartMonoid {
        level,
        weight,
        generators,
        complete_up_to: Completeness::UpToWeight(cutoff),
    })
}

/// One-dimensional charts, certified via the conductor.
///
/// Write `D = { (a - rep(a mod q))/q : a ∈ A }`, the positive generator set
/// of the chart. Beyond `t0 = min over cosets of ceil((conductor - rep)/q)`
/// every positive integer lies in `D`, so minimal generators live below
/// `2 * t0` and the enumeration can stop at `max rep + 2 * t0 * q`.
fn chart_monoid_d1(monoid: &AffineMonoid, standard: &StandardSet) -> Result<ChartMonoid> {
    let ns = lattice::numerical_semigroup(monoid)?;
    let q = standard
        .level
        .q()
        .to_u64()
        .ok_or_else(|| Error::ResourceLimit("q exceeds u64 in a d = 1 chart".into()))?;
    let sign = BigInt::from(ns.sign);
    let rep_values: Vec<u64> = standard
        .reps
        .values()
        .map(|r| {
            (r.coords()[0].clone() * &sign)
                .to_u64()
                .expect("representatives are bounded")
        })
        .collect();
    let max_rep = rep_values.iter().copied().max().unwrap();
    let t0 = rep_values
        .iter()
        .map(|&r| {
            if ns.conductor <= r {
                1
            } else {
                (ns.conductor - r).div_ceil(q).max(1)
            }
        })
        .min()
        .unwrap();
    let value_cutoff = max_rep + 2 * t0 * q;

    let mut rep_by_residue = vec![u64::MAX; q as usize];
    for &r in &rep_values {
        rep_by_residue[(r % q) as usize] = r;
    }
    let mut diff_values: Vec<u64> = Vec::new();
    for a in 0..=value_cutoff {
        if !ns.contains(a) {
            continue;
        }
        let rep = rep_by_residue[(a % q) as usize];
        if a == rep {
            continue;
        }
        let t = (a - rep) / q;
        if t > 0 && t <= 2 * t0 && !diff_values.contains(&t) {
            diff_values.push(t);
        }
    }
    let generators = minimal_generator_values(&diff_values)
        .into_iter()
        .map(|t| LatticeVector::new(vec![BigInt::from(t) * &sign]))
        .collect();
    Ok(ChartMonoid {
        level: standard.level.clone(),
        weight: standard.weight.clone(),
        generators,
        complete_up_to: Completeness::Certified,
    })
}

/// Minimal generating set of a numerical semigroup given by positive values.
fn minimal_generator_values(values: &[u64]) -> Vec<u64> {
    if values.is_empty() {
        return Vec::new();
    }
    let max = *values.iter().max().unwrap() as usize;
    let mut reachable = vec![false; max + 1];
    reachable[0] = true;
    for v in 1..=max {
        reachable[v] = values
            .iter()
            .any(|&g| (g as usize) <= v && reachable[v - g as usize]);
    }
    let mut gens: Vec<u64> = values
        .iter()
        .copied()
        .filter(|&v| {
            !values
                .iter()
                .any(|&u| u != v && u < v && reachable[(v - u) as usize])
        })
        .collect();
    gens.sort_unstable();
    gens.dedup();
    gens
}

/// The unique minimal generating set of the monoid generated by `gens`:
/// the elements that are not a sum of two nonzero monoid elements. Requires
/// the generated monoid to be pointed.
pub fn minimal_generators(gens: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let dim = gens[0].dim();
    if gens.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroGenerator);
    }
    if dim == 1 {
        if gens.iter().map(|g| g.coords()[0].signum()).sum::<BigInt>().abs()
            != BigInt::from(gens.len())
        {
            return Err(Error::NotPointed);
        }
        let sign = BigInt::from(if gens[0].coords()[0].is_positive() {
            1
        } else {
            -1
        });
        let values: Vec<u64> = gens
            .iter()
            .map(|g| {
                (g.coords()[0].clone() * &sign)
                    .to_u64()
                    .ok_or_else(|| Error::ResourceLimit("generator exceeds u64".into()))
            })
            .collect::<Result<_>>()?;
        return Ok(minimal_generator_values(&values)
            .into_iter()
            .map(|t| LatticeVector::new(vec![BigInt::from(t) * &sign]))
            .collect());
    }
    let monoid = AffineMonoid::new(dim, gens.to_vec())?;
    let w0 = match lattice::strict_positive_covector(monoid.generators(), dim)? {
        Some(w) => w,
        None => return Err(Error::NotPointed),
    };
    minimal_generators_core(&monoid, &w0)
}

/// Variant for callers that already hold a covector strictly positive on the
/// generators (chamber weights are), skipping the feasibility solve.
pub(crate) fn minimal_generators_with_weight(
    gens: &[LatticeVector],
    w0: &LatticeVector,
) -> Result<Vec<LatticeVector>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    if gens.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroGenerator);
    }
    let monoid = AffineMonoid::new(gens[0].dim(), gens.to_vec())?;
    minimal_generators_core(&monoid, w0)
}

fn minimal_generators_core(
    monoid: &AffineMonoid,
    enumeration_w0: &LatticeVector,
) -> Result<Vec<LatticeVector>> {
    let distinct = monoid.distinct_generators();
    // One batch enumeration answers every reducibility query.
    let max_weight = distinct.iter().map(|g| enumeration_w0.dot(g)).max().unwrap();
    let members = lattice::monoid_members_up_to(monoid, enumeration_w0, &max_weight)?;
    let mut minimal: Vec<LatticeVector> = Vec::new();
    for g in &distinct {
        // g is reducible iff g - g' stays in the monoid for another
        // generator g'.
        let reducible = distinct.iter().any(|h| {
            h != g && {
                let rest = g - h;
                !rest.is_zero() && members.contains(&rest)
            }
        });
        if !reducible {
            minimal.push(g.clone());
        }
    }
    // Canonical order, derived from the minimal set alone so that equal
    // charts sort identically no matter which weight produced them.
    let sort_w = lattice::strict_positive_covector(&minimal, monoid.dim())?
        .expect("a subset of a pointed monoid is pointed");
    minimal.sort_by_key(|g| (sort_w.dot(g), g.clone()));
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monoid(dim: usize, gens: &[&[i64]]) -> AffineMonoid {
        AffineMonoid::from_i64(dim, gens).unwrap()
    }

    fn level(p: u64, e: u32) -> FrobeniusLevel {
        FrobeniusLevel::new(p, e).unwrap()
    }

    fn rep_values_d1(s: &StandardSet) -> Vec<i64> {
        let mut v: Vec<i64> = s
            .reps()
            .values()
            .map(|r| r.coords()[0].to_i64().unwrap())
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(matches!(FrobeniusLevel::new(4, 1), Err(Error::NotPrime(4))));
    }

    #[test]
    fn standard_set_cusp_level_one() {
        // A = <2,3>, q = 2: the minima are 0 and 3 (the fractions 0, 3/2).
        let s = standard_set(&monoid(1, &[&[2], &[3]]), &level(2, 1), &Weight::from_i64(&[1]))
            .unwrap();
        assert_eq!(rep_values_d1(&s), vec![0, 3]);
    }

    #[test]
    fn standard_set_cusp_level_two() {
        // q = 4: minima 0, 2, 3, 5 (fractions 0, 1/2, 3/4, 5/4).
        let s = standard_set(&monoid(1, &[&[2], &[3]]), &level(2, 2), &Weight::from_i64(&[1]))
            .unwrap();
        assert_eq!(rep_values_d1(&s), vec![0, 2, 3, 5]);
    }

    #[test]
    fn standard_set_8_9_10_11() {
        let m = monoid(1, &[&[8], &[9], &[10], &[11]]);
        let s1 = standard_set(&m, &level(2, 1), &Weight::from_i64(&[1])).unwrap();
        assert_eq!(rep_values_d1(&s1), vec![0, 9]);
        let s2 = standard_set(&m, &level(2, 2), &Weight::from_i64(&[1])).unwrap();
        assert_eq!(rep_values_d1(&s2), vec![0, 9, 10, 11]);
    }

    #[test]
    fn standard_set_smooth_line() {
        let s = standard_set(&monoid(1, &[&[1]]), &level(2, 1), &Weight::from_i64(&[1])).unwrap();
        assert_eq!(rep_values_d1(&s), vec![0, 1]);
    }

    #[test]
    fn standard_set_counts_cosets() {
        let m = monoid(2, &[&[1, 0], &[1, 1], &[0, 2]]);
        let s = standard_set(&m, &level(2, 1), &Weight::from_i64(&[2, 3])).unwrap();
        assert_eq!(s.reps().len(), 4);
        assert_eq!(s.rep_of(&[0, 0]), Some(&LatticeVector::zero(2)));
    }

    #[test]
    fn standard_set_rejects_wall_weight() {
        // At w = (1,1) the coset of (0,1) mod 3 has the tie (0,4) vs (3,1).
        let m = monoid(2, &[&[1, 0], &[1, 1], &[0, 2]]);
        let err = standard_set(&m, &level(3, 1), &Weight::from_i64(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::WeightNotGeneric { .. }));
        // Off the wall the computation succeeds.
        let s = standard_set(&m, &level(3, 1), &Weight::from_i64(&[1, 2])).unwrap();
        assert_eq!(s.reps().len(), 9);
    }

    #[test]
    fn b_membership() {
        let m = monoid(1, &[&[2], &[3]]);
        let s = standard_set(&m, &level(2, 1), &Weight::from_i64(&[1])).unwrap();
        // Representatives are never dominated.
        for r in s.reps().values() {
            assert!(!s.b_contains(&m, r).unwrap());
        }
        // 2 is in A, shares its coset with 0, and is heavier.
        assert!(s.b_contains(&m, &LatticeVector::from_i64(&[2])).unwrap());
        // 1 is not in A at all.
        assert!(!s.b_contains(&m, &LatticeVector::from_i64(&[1])).unwrap());

        // At q = 4 the dominated set is everything except {0, 2, 3, 5},
        // i.e. the fractions 1, 3/2, 7/4, 2, ...
        let s = standard_set(&m, &level(2, 2), &Weight::from_i64(&[1])).unwrap();
        for v in [4i64, 6, 7, 8, 9] {
            assert!(s.b_contains(&m, &LatticeVector::from_i64(&[v])).unwrap());
        }
        for v in [0i64, 2, 3, 5] {
            assert!(!s.b_contains(&m, &LatticeVector::from_i64(&[v])).unwrap());
        }
    }

    #[test]
    fn b_membership_8_9_10_11() {
        // Scaled by q = 2, the dominated set is {8, 10, 11, 16, 17, 18, ...}
        // (the fractions 4, 5, 11/2, 8, 17/2, 9, ...).
        let m = monoid(1, &[&[8], &[9], &[10], &[11]]);
        let s = standard_set(&m, &level(2, 1), &Weight::from_i64(&[1])).unwrap();
        for v in [8i64, 10, 11, 16, 17, 18] {
            assert!(
                s.b_contains(&m, &LatticeVector::from_i64(&[v])).unwrap(),
                "{v} must be dominated"
            );
        }
        for v in [0i64, 9, 7, 12] {
            assert!(!s.b_contains(&m, &LatticeVector::from_i64(&[v])).unwrap());
        }
    }

    #[test]
    fn negative_generators_mirror_the_positive_case() {
        // All-negative one-dimensional monoids are pointed with dual ray -1;
        // the sign-normalized paths must mirror <2,3> exactly.
        let m = monoid(1, &[&[-2], &[-3]]);
        let w = Weight::from_i64(&[-1]);
        let s = standard_set(&m, &level(2, 1), &w).unwrap();
        assert_eq!(rep_values_d1(&s), vec![-3, 0]);
        let c = chart_monoid(&m, &level(2, 1), &w, None).unwrap();
        assert_eq!(c.generators(), &[LatticeVector::from_i64(&[-1])]);
        assert!(c.complete_up_to().is_certified());
        assert!(is_smooth_chart(&c).value);
    }

    #[test]
    fn chart_8_9_10_11_is_smooth_then_not() {
        let m = monoid(1, &[&[8], &[9], &[10], &[11]]);
        let w = Weight::from_i64(&[1]);
        let c1 = chart_monoid(&m, &level(2, 1), &w, None).unwrap();
        assert_eq!(c1.generators(), &[LatticeVector::from_i64(&[1])]);
        assert!(c1.complete_up_to().is_certified());
        assert!(is_smooth_chart(&c1).value);

        let c2 = chart_monoid(&m, &level(2, 2), &w, None).unwrap();
        assert_eq!(
            c2.generators(),
            &[LatticeVector::from_i64(&[2]), LatticeVector::from_i64(&[3])]
        );
        let s2 = is_smooth_chart(&c2);
        assert!(!s2.value);
        assert!(s2.certified);
    }

    #[test]
    fn chart_cusp_all_levels_are_the_line() {
        let m = monoid(1, &[&[2], &[3]]);
        let w = Weight::from_i64(&[1]);
        for e in 1..=4 {
            let c = chart_monoid(&m, &level(2, e), &w, None).unwrap();
            assert_eq!(
                c.generators(),
                &[LatticeVector::from_i64(&[1])],
                "level e = {e}"
            );
        }
    }

    #[test]
    fn chart_of_free_monoid_is_fixed() {
        let m = monoid(2, &[&[1, 0], &[0, 1]]);
        let w = Weight::from_i64(&[1, 2]);
        for (p, e) in [(2, 1), (2, 2), (3, 1)] {
            let c = chart_monoid(&m, &level(p, e), &w, None).unwrap();
            assert_eq!(
                c.generators(),
                &[
                    LatticeVector::from_i64(&[0, 1]),
                    LatticeVector::from_i64(&[1, 0])
                ]
            );
            assert!(is_smooth_chart(&c).value);
        }
    }

    #[test]
    fn minimal_generator_examples() {
        let gens = [2i64, 3, 4, 5]
            .iter()
            .map(|&v| LatticeVector::from_i64(&[v]))
            .collect::<Vec<_>>();
        assert_eq!(
            minimal_generators(&gens).unwrap(),
            vec![LatticeVector::from_i64(&[2]), LatticeVector::from_i64(&[3])]
        );

        let gens = [1i64, 2]
            .iter()
            .map(|&v| LatticeVector::from_i64(&[v]))
            .collect::<Vec<_>>();
        assert_eq!(
            minimal_generators(&gens).unwrap(),
            vec![LatticeVector::from_i64(&[1])]
        );

        let gens = vec![
            LatticeVector::from_i64(&[1, 0]),
            LatticeVector::from_i64(&[1, 1]),
            LatticeVector::from_i64(&[2, 1]),
        ];
        assert_eq!(
            minimal_generators(&gens).unwrap(),
            vec![
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[1, 1])
            ]
        );
    }

    #[test]
    fn minimal_generators_need_pointedness() {
        let gens = vec![
            LatticeVector::from_i64(&[1]),
            LatticeVector::from_i64(&[-1]),
        ];
        assert!(matches!(
            minimal_generators(&gens),
            Err(Error::NotPointed)
        ));
    }

    #[test]
    fn generic_weight_search_retries_over_walls() {
        let m = monoid(2, &[&[1, 0], &[1, 1], &[0, 2]]);
        let w = generic_weight(&m, &level(3, 1)).unwrap();
        let s = standard_set(&m, &level(3, 1), &w).unwrap();
        assert_eq!(s.reps().len(), 9);
    }

    #[test]
    fn level_zero_is_trivial() {
        let m = monoid(1, &[&[2], &[3]]);
        let s = standard_set(&m, &level(2, 0), &Weight::from_i64(&[1])).unwrap();
        assert_eq!(rep_values_d1(&s), vec![0]);
        let c = chart_monoid(&m, &level(2, 0), &Weight::from_i64(&[1]), None).unwrap();
        assert_eq!(
            c.generators(),
            &[LatticeVector::from_i64(&[2]), LatticeVector::from_i64(&[3])]
        );
    }
}
