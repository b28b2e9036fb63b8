//! Exact integer linear algebra and polyhedral primitives.
//!
//! Everything here works over arbitrary-precision integers (rationals appear
//! only inside the feasibility solver); there is no floating point anywhere.
//! The central object is [`AffineMonoid`], a finitely generated submonoid of
//! `Z^d` given by a generator list. The operations in this module decide the
//! standing assumptions (pointedness, group generation), compute dual cones
//! for `d <= 3`, decide monoid membership by graded enumeration, and compute
//! saturations (Hilbert bases, certified for `d <= 2`).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Vectors and weights
// ---------------------------------------------------------------------------

/// A point of the lattice `M = Z^d`, with exact integer coordinates.
///
/// Ordering is lexicographic on coordinates; this is the deterministic
/// tie-break used throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        assert!(!coords.is_empty(), "lattice vectors need dimension >= 1");
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Exact pairing with another vector of the same dimension.
    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "pairing needs equal dimensions");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        Self::new(self.coords.iter().map(|c| c * k).collect())
    }

    /// Divides by the gcd of the coordinates; the zero vector stays zero.
    pub fn primitive(&self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coords.iter().map(|c| c / &g).collect())
    }

    /// The residue of each coordinate mod `q`, as a label in `(Z/q)^d`.
    pub fn coset_label(&self, q: &BigInt) -> Vec<u64> {
        self.coords
            .iter()
            .map(|c| {
                c.mod_floor(q)
                    .to_u64()
                    .expect("residues mod q fit in u64")
            })
            .collect()
    }

    /// Exact division by `q`; `None` unless every coordinate is divisible.
    pub fn div_exact(&self, q: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.dim());
        for c in &self.coords {
            let (quot, rem) = c.div_rem(q);
            if !rem.is_zero() {
                return None;
            }
            out.push(quot);
        }
        Some(Self::new(out))
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.to_i64()).collect()
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), rhs.dim());
        LatticeVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), rhs.dim());
        LatticeVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An integer covector representing a (rational) weight with denominators
/// cleared. Weights used for standard sets must be strictly interior to the
/// dual cone; interiority is validated where the weight is consumed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    covector: LatticeVector,
}

impl Weight {
    pub fn new(covector: LatticeVector) -> Self {
        Weight { covector }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight::new(LatticeVector::from_i64(coords))
    }

    pub fn covector(&self) -> &LatticeVector {
        &self.covector
    }

    pub fn dim(&self) -> usize {
        self.covector.dim()
    }

    pub fn eval(&self, v: &LatticeVector) -> BigInt {
        self.covector.dot(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.covector)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.covector)
    }
}

// ---------------------------------------------------------------------------
// Affine monoids
// ---------------------------------------------------------------------------

/// A finitely generated submonoid `A` of `Z^d`, given by its generators.
///
/// Construction validates dimensions and rejects zero generators. Pointedness
/// and group generation are *not* required at construction time; they are
/// decided by [`is_pointed`] and [`group_generates`] and enforced by
/// [`AffineMonoid::check_standing_assumptions`] where the theory needs them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMonoid {
    dim: usize,
    generators: Vec<LatticeVector>,
}

impl AffineMonoid {
    pub fn new(dim: usize, generators: Vec<LatticeVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Validation("dimension must be >= 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
        }
        Ok(AffineMonoid { dim, generators })
    }

    pub fn from_i64(dim: usize, generators: &[&[i64]]) -> Result<Self> {
        Self::new(
            dim,
            generators.iter().map(|g| LatticeVector::from_i64(g)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Generators with duplicates removed, in first-occurrence order.
    pub(crate) fn distinct_generators(&self) -> Vec<LatticeVector> {
        let mut seen = HashSet::new();
        self.generators
            .iter()
            .filter(|g| seen.insert((*g).clone()))
            .cloned()
            .collect()
    }

    /// Enforces the standing assumptions: pointed and group-generating.
    pub fn check_standing_assumptions(&self) -> Result<()> {
        if !is_pointed(self) {
            return Err(Error::NotPointed);
        }
        if !group_generates(self) {
            return Err(Error::NotGroupGenerating);
        }
        Ok(())
    }
}

impl fmt::Display for AffineMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

// ---------------------------------------------------------------------------
// Rational cones
// ---------------------------------------------------------------------------

/// A rational polyhedral cone given both by primitive extreme rays and by the
/// inner normals of its facets. For a cone in the dual space the halfspace
/// normals live in the primal lattice, and vice versa.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalCone {
    rays: Vec<LatticeVector>,
    halfspaces: Vec<LatticeVector>,
}

impl RationalCone {
    pub fn new(rays: Vec<LatticeVector>, halfspaces: Vec<LatticeVector>) -> Self {
        debug_assert!(rays
            .iter()
            .all(|r| halfspaces.iter().all(|h| !h.dot(r).is_negative())));
        RationalCone { rays, halfspaces }
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn halfspaces(&self) -> &[LatticeVector] {
        &self.halfspaces
    }

    pub fn dim(&self) -> usize {
        self.rays.first().map(|r| r.dim()).unwrap_or(0)
    }

    /// Closed membership: all facet inequalities hold.
    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.halfspaces.iter().all(|h| !h.dot(v).is_negative())
    }

    /// Strict membership: all facet inequalities hold strictly.
    pub fn contains_interior(&self, v: &LatticeVector) -> bool {
        self.halfspaces.iter().all(|h| h.dot(v).is_positive())
    }

    /// `self ⊆ other`, decided on extreme rays.
    pub fn is_subcone_of(&self, other: &RationalCone) -> bool {
        self.rays.iter().all(|r| other.contains(r))
    }
}

// ---------------------------------------------------------------------------
// Group generation (lattice index via column reduction)
// ---------------------------------------------------------------------------

/// The index of the subgroup of `Z^d` spanned by the generators, or `None`
/// when the span has rank `< d`. Computed by exact integer column reduction.
fn lattice_index(monoid: &AffineMonoid) -> Option<BigInt> {
    let d = monoid.dim();
    // Columns of the matrix are the generators.
    let mut cols: Vec<Vec<BigInt>> = monoid
        .generators
        .iter()
        .map(|g| g.coords().to_vec())
        .collect();
    let n = cols.len();
    let mut pivot_col = 0usize;
    let mut index = BigInt::one();
    for row in 0..d {
        if pivot_col >= n {
            return None;
        }
        // Euclidean reduction among columns pivot_col.. on this row.
        loop {
            let mut best: Option<usize> = None;
            for (j, col) in cols.iter().enumerate().skip(pivot_col) {
                if !col[row].is_zero() {
                    match best {
                        None => best = Some(j),
                        Some(b) => {
                            if col[row].abs() < cols[b][row].abs() {
                                best = Some(j)
                            }
                        }
                    }
                }
            }
            let b = best?;
            cols.swap(pivot_col, b);
            let mut done = true;
            let pivot = cols[pivot_col][row].clone();
            for j in (pivot_col + 1)..n {
                if cols[j][row].is_zero() {
                    continue;
                }
                let quot = cols[j][row].div_floor(&pivot);
                for r in 0..d {
                    let delta = &quot * &cols[pivot_col][r];
                    cols[j][r] -= delta;
                }
                if !cols[j][row].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        index *= cols[pivot_col][row].abs();
        pivot_col += 1;
    }
    Some(index)
}

/// True iff the generators span all of `Z^d` as a group.
pub fn group_generates(monoid: &AffineMonoid) -> bool {
    lattice_index(monoid).map(|ix| ix.is_one()).unwrap_or(false)
}

/// Rank of the real span of the vectors (= rank of the integer span).
fn span_rank(vectors: &[LatticeVector], dim: usize) -> usize {
    let mut cols: Vec<Vec<BigInt>> = vectors.iter().map(|g| g.coords().to_vec()).collect();
    let n = cols.len();
    let mut pivot_col = 0usize;
    for row in 0..dim {
        if pivot_col >= n {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for (j, col) in cols.iter().enumerate().skip(pivot_col) {
                if !col[row].is_zero() {
                    match best {
                        None => best = Some(j),
                        Some(b) => {
                            if col[row].abs() < cols[b][row].abs() {
                                best = Some(j)
                            }
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            cols.swap(pivot_col, b);
            let mut done = true;
            let pivot = cols[pivot_col][row].clone();
            for j in (pivot_col + 1)..n {
                if cols[j][row].is_zero() {
                    continue;
                }
                let quot = cols[j][row].div_floor(&pivot);
                for r in 0..dim {
                    let delta = &quot * &cols[pivot_col][r];
                    cols[j][r] -= delta;
                }
                if !cols[j][row].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    pivot_col
}

// ---------------------------------------------------------------------------
// Pointedness via exact Fourier-Motzkin feasibility
// ---------------------------------------------------------------------------

/// A linear inequality `coeffs · u >= rhs` over the rationals.
#[derive(Clone)]
struct Inequality {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
}

const FM_ROW_LIMIT: usize = 200_000;

/// Collapses rows with parallel coefficient vectors to the single tightest
/// one, keyed by the primitive integer direction. Keeps elimination
/// polynomial in low dimension; without it, combining many near-parallel
/// rows squares the row count per stage.
fn prune_parallel_rows(rows: Vec<Inequality>, dim: usize) -> Vec<Inequality> {
    use std::collections::BTreeMap;
    let mut best: BTreeMap<Vec<BigInt>, BigRational> = BTreeMap::new();
    let mut zero_row_rhs: Option<BigRational> = None;
    for row in rows {
        let mut lcm = BigInt::one();
        for c in &row.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = row
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            // 0 >= rhs: a pure feasibility condition; keep the tightest.
            zero_row_rhs = Some(match zero_row_rhs {
                Some(r) if r >= row.rhs => r,
                _ => row.rhs,
            });
            continue;
        }
        let dir: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        // Scaling by lcm/g is positive, so the inequality direction holds.
        let rhs = &row.rhs * BigRational::new(lcm, g);
        best.entry(dir)
            .and_modify(|r| {
                if rhs > *r {
                    *r = rhs.clone()
                }
            })
            .or_insert(rhs);
    }
    let mut out: Vec<Inequality> = best
        .into_iter()
        .map(|(dir, rhs)| Inequality {
            coeffs: dir.into_iter().map(BigRational::from_integer).collect(),
            rhs,
        })
        .collect();
    if let Some(rhs) = zero_row_rhs {
        out.push(Inequality {
            coeffs: vec![BigRational::zero(); dim],
            rhs,
        });
    }
    out
}

/// Finds an integer covector `w` with `<v, w> >= 1` for every input vector,
/// or `None` when no such covector exists. Exact Fourier-Motzkin elimination
/// with back-substitution; works in any dimension.
pub(crate) fn strict_positive_covector(
    vectors: &[LatticeVector],
    dim: usize,
) -> Result<Option<LatticeVector>> {
    let one = BigRational::one();
    let initial: Vec<Inequality> = vectors
        .iter()
        .map(|v| Inequality {
            coeffs: v
                .coords()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
            rhs: one.clone(),
        })
        .collect();

    // stages[k] constrains variables u_0..u_{k-1}; stages[dim] is the input.
    let mut stages: Vec<Vec<Inequality>> = Vec::with_capacity(dim + 1);
    stages.push(prune_parallel_rows(initial, dim));
    for var in (0..dim).rev() {
        let current = stages.last().unwrap();
        let mut next: Vec<Inequality> = Vec::new();
        let mut pos: Vec<&Inequality> = Vec::new();
        let mut neg: Vec<&Inequality> = Vec::new();
        for ineq in current {
            if ineq.coeffs[var].is_zero() {
                next.push(ineq.clone());
            } else if ineq.coeffs[var].is_positive() {
                pos.push(ineq);
            } else {
                neg.push(ineq);
            }
        }
        for p in &pos {
            for n in &neg {
                // (-cn) * p + cp * n eliminates the variable.
                let cp = p.coeffs[var].clone();
                let cn = n.coeffs[var].clone();
                let coeffs: Vec<BigRational> = (0..dim)
                    .map(|j| &(-&cn) * &p.coeffs[j] + &cp * &n.coeffs[j])
                    .collect();
                let rhs = &(-&cn) * &p.rhs + &cp * &n.rhs;
                next.push(Inequality { coeffs, rhs });
                if next.len() > FM_ROW_LIMIT {
                    return Err(Error::ResourceLimit(
                        "inequality elimination grew too large".into(),
                    ));
                }
            }
        }
        stages.push(prune_parallel_rows(next, dim));
    }

    // stages is [input, after eliminating u_{d-1}, ..., after eliminating u_0];
    // reverse so stage k constrains u_0..u_{k-1} with later vars eliminated.
    stages.reverse();
    if stages[0]
        .iter()
        .any(|ineq| ineq.rhs.is_positive())
    {
        return Ok(None);
    }

    // Back-substitute, choosing each variable inside its interval.
    let mut point = vec![BigRational::zero(); dim];
    for var in 0..dim {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for ineq in &stages[var + 1] {
            let c = &ineq.coeffs[var];
            if c.is_zero() {
                continue;
            }
            let rest: BigRational = (0..var)
                .map(|j| &ineq.coeffs[j] * &point[j])
                .sum();
            let bound = &(&ineq.rhs - &rest) / c;
            if c.is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        point[var] = match (lower, upper) {
            (Some(l), Some(u)) => (&l + &u) / BigRational::from_integer(2.into()),
            (Some(l), None) => &l + &one,
            (None, Some(u)) => &u - &one,
            (None, None) => BigRational::zero(),
        };
    }

    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in &point {
        lcm = lcm.lcm(c.denom());
    }
    let w = LatticeVector::new(
        point
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    );
    debug_assert!(vectors.iter().all(|v| v.dot(&w).is_positive()));
    Ok(Some(w))
}

/// True iff the real cone spanned by the generators contains no line,
/// equivalently some covector is strictly positive on every generator.
pub fn is_pointed(monoid: &AffineMonoid) -> bool {
    strict_positive_covector(&monoid.generators, monoid.dim)
        .map(|w| w.is_some())
        .unwrap_or(false)
}

// ---------------------------------------------------------------------------
// Dual cones (d <= 3)
// ---------------------------------------------------------------------------

pub const MAX_CONE_DIM: usize = 3;

fn rot90(v: &LatticeVector) -> LatticeVector {
    LatticeVector::new(vec![-v.coords()[1].clone(), v.coords()[0].clone()])
}

fn cross3(a: &LatticeVector, b: &LatticeVector) -> LatticeVector {
    let (a, b) = (a.coords(), b.coords());
    LatticeVector::new(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

/// Orientation of 2d vectors: sign of the cross determinant.
pub(crate) fn cross2(a: &LatticeVector, b: &LatticeVector) -> BigInt {
    let (a, b) = (a.coords(), b.coords());
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Extreme rays of `{ u : <v, u> >= 0 for all v }` for `d <= 3`, assuming the
/// input vectors span `R^d` (so the result is a pointed cone). Candidate rays
/// come from perpendiculars of single vectors (`d = 2`) or cross products of
/// pairs (`d = 3`); survivors pair nonnegatively with every input.
fn extreme_dual_rays(vectors: &[LatticeVector], dim: usize) -> Vec<LatticeVector> {
    let keep = |cand: &LatticeVector| vectors.iter().all(|v| !v.dot(cand).is_negative());
    let mut rays: Vec<LatticeVector> = Vec::new();
    let push = |cand: LatticeVector, rays: &mut Vec<LatticeVector>| {
        if cand.is_zero() || !keep(&cand) {
            return;
        }
        let p = cand.primitive();
        if !rays.contains(&p) {
            rays.push(p);
        }
    };
    match dim {
        1 => {
            push(LatticeVector::from_i64(&[1]), &mut rays);
            push(LatticeVector::from_i64(&[-1]), &mut rays);
        }
        2 => {
            for v in vectors {
                push(rot90(v), &mut rays);
                push(-&rot90(v), &mut rays);
            }
            sort_rays_ccw(&mut rays);
        }
        3 => {
            for (i, a) in vectors.iter().enumerate() {
                for b in &vectors[i + 1..] {
                    let c = cross3(a, b);
                    push(c.clone(), &mut rays);
                    push(-&c, &mut rays);
                }
            }
            rays.sort();
        }
        _ => unreachable!("dual rays only computed for d <= 3"),
    }
    rays
}

/// Sorts 2d rays counterclockwise. All rays are assumed to span an angle
/// `< pi` (pointed full-dimensional cone), where the cross-product comparator
/// is a total order.
pub(crate) fn sort_rays_ccw(rays: &mut [LatticeVector]) {
    rays.sort_by(|a, b| {
        let c = cross2(a, b);
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else if c.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            a.cmp(b)
        }
    });
}

/// The dual cone `{ u : <a, u> >= 0 for every generator a }`.
///
/// Requires the standing assumptions, which make the dual cone pointed and
/// full-dimensional; supported for `d <= 3`.
pub fn dual_cone(monoid: &AffineMonoid) -> Result<RationalCone> {
    if monoid.dim() > MAX_CONE_DIM {
        return Err(Error::DimensionUnsupported {
            dim: monoid.dim(),
            max: MAX_CONE_DIM,
        });
    }
    monoid.check_standing_assumptions()?;
    let rays = extreme_dual_rays(&monoid.generators, monoid.dim());
    // By biduality the facet normals of the dual cone are the extreme rays of
    // the primal cone.
    let halfspaces = extreme_dual_rays(&rays, monoid.dim());
    Ok(RationalCone::new(rays, halfspaces))
}

// ---------------------------------------------------------------------------
// Graded enumeration of monoid elements
// ---------------------------------------------------------------------------

/// Enumerates the elements of a pointed monoid in increasing `<.,w>` order,
/// ties broken lexicographically on coordinates. Starts at the zero element.
/// The iterator is infinite; callers bound it by weight.
pub(crate) struct GradedEnumerator {
    steps: Vec<(LatticeVector, BigInt)>,
    heap: BinaryHeap<Reverse<(BigInt, LatticeVector)>>,
    seen: HashSet<LatticeVector>,
}

impl GradedEnumerator {
    /// `weight` must be strictly positive on every generator; this is what
    /// certifies termination of bounded searches.
    pub fn new(monoid: &AffineMonoid, weight: &LatticeVector) -> Result<Self> {
        let mut steps = Vec::new();
        for g in monoid.distinct_generators() {
            let w = weight.dot(&g);
            if !w.is_positive() {
                return Err(Error::WeightNotInterior);
            }
            steps.push((g, w));
        }
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((BigInt::zero(), LatticeVector::zero(weight.dim()))));
        Ok(GradedEnumerator {
            steps,
            heap,
            seen: HashSet::new(),
        })
    }
}

impl Iterator for GradedEnumerator {
    type Item = (LatticeVector, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        while let Some(Reverse((w, v))) = self.heap.pop() {
            if !self.seen.insert(v.clone()) {
                continue;
            }
            for (g, gw) in &self.steps {
                let next = &v + g;
                if !self.seen.contains(&next) {
                    self.heap.push(Reverse((&w + gw, next)));
                }
            }
            return Some((v, w));
        }
        None
    }
}

/// A deterministic covector that is strictly positive on all generators:
/// the sum of the dual-cone rays when that cone is available, otherwise a
/// feasible point of the strict system.
pub(crate) fn enumeration_weight(monoid: &AffineMonoid) -> Result<LatticeVector> {
    if monoid.dim() <= MAX_CONE_DIM && is_pointed(monoid) && group_generates(monoid) {
        let cone = dual_cone(monoid)?;
        let mut sum = LatticeVector::zero(monoid.dim());
        for r in cone.rays() {
            sum = &sum + r;
        }
        if monoid.generators().iter().all(|g| g.dot(&sum).is_positive()) {
            return Ok(sum);
        }
    }
    strict_positive_covector(&monoid.generators, monoid.dim())?.ok_or(Error::NotPointed)
}

// ---------------------------------------------------------------------------
// Monoid membership
// ---------------------------------------------------------------------------

/// Decides whether `target` is a nonnegative integer combination of the
/// generators. Exact: enumerates monoid elements in increasing weight order
/// up to the target's weight; pointedness bounds the search.
pub fn monoid_contains(monoid: &AffineMonoid, target: &LatticeVector) -> Result<bool> {
    if target.dim() != monoid.dim() {
        return Err(Error::DimensionMismatch {
            expected: monoid.dim(),
            found: target.dim(),
        });
    }
    if target.is_zero() {
        return Ok(true);
    }
    let w0 = enumeration_weight(monoid)?;
    let bound = w0.dot(target);
    if !bound.is_positive() {
        return Ok(false);
    }
    for (v, w) in GradedEnumerator::new(monoid, &w0)? {
        if w > bound {
            return Ok(false);
        }
        if v == *target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All monoid elements of `w0`-weight at most `bound`, as a set. Batch
/// variant of [`monoid_contains`] for callers with many membership queries
/// against one monoid; `w0` must be strictly positive on the generators.
pub(crate) fn monoid_members_up_to(
    monoid: &AffineMonoid,
    w0: &LatticeVector,
    bound: &BigInt,
) -> Result<HashSet<LatticeVector>> {
    let mut members = HashSet::new();
    if bound.is_negative() {
        return Ok(members);
    }
    for (v, w) in GradedEnumerator::new(monoid, w0)? {
        if w > *bound {
            break;
        }
        members.insert(v);
    }
    Ok(members)
}

// ---------------------------------------------------------------------------
// Saturation / Hilbert bases
// ---------------------------------------------------------------------------

/// Result of a saturation computation. `certified` is true exactly when the
/// generator list is provably the full Hilbert basis (`d <= 2`).
#[derive(Clone, Debug)]
pub struct Saturation {
    pub monoid: AffineMonoid,
    pub certified: bool,
}

/// Generators of `A_R ∩ M`, the saturation of the monoid.
///
/// `d = 1` reduces to the primitive ray; `d = 2` is an exact Hilbert-basis
/// computation on the cone; `d = 3` returns the basis elements up to a weight
/// bound and is flagged uncertified.
pub fn saturation(monoid: &AffineMonoid) -> Result<Saturation> {
    saturation_with_bound(monoid, None)
}

pub fn saturation_with_bound(
    monoid: &AffineMonoid,
    degree_bound: Option<&BigInt>,
) -> Result<Saturation> {
    if !is_pointed(monoid) {
        return Err(Error::NotPointed);
    }
    let d = monoid.dim();
    match d {
        1 => {
            let sign = if monoid.generators[0].coords()[0].is_positive() {
                1
            } else {
                -1
            };
            Ok(Saturation {
                monoid: AffineMonoid::from_i64(1, &[&[sign]])?,
                certified: true,
            })
        }
        2 => {
            if span_rank(&monoid.generators, 2) == 1 {
                // All generators sit on one ray; the saturation is the
                // primitive lattice direction.
                return Ok(Saturation {
                    monoid: AffineMonoid::new(2, vec![monoid.generators[0].primitive()])?,
                    certified: true,
                });
            }
            let mut rays: Vec<LatticeVector> =
                monoid.generators.iter().map(|g| g.primitive()).collect();
            sort_rays_ccw(&mut rays);
            let (r1, r2) = (rays[0].clone(), rays[rays.len() - 1].clone());
            // Inner facet normals of the sector spanned by r1, r2.
            let ineqs = vec![rot90(&r1), -&rot90(&r2)];
            let basis = hilbert_basis_2d(&r1, &r2, &ineqs);
            Ok(Saturation {
                monoid: AffineMonoid::new(2, basis)?,
                certified: true,
            })
        }
        3 => {
            if span_rank(&monoid.generators, 3) < 3 {
                return Err(Error::Validation(
                    "saturation for d = 3 needs a full-dimensional cone".into(),
                ));
            }
            let w0 = enumeration_weight(monoid)?;
            let default_bound = monoid
                .generators
                .iter()
                .map(|g| g.dot(&w0))
                .max()
                .unwrap()
                * BigInt::from(4);
            let bound = degree_bound.cloned().unwrap_or(default_bound);
            let dual_rays = extreme_dual_rays(&monoid.generators, 3);
            let primal_rays = extreme_dual_rays(&dual_rays, 3);
            let cone = RationalCone::new(primal_rays, dual_rays);
            let candidates = cone_points_below(&cone, &w0, &bound);
            let basis = irreducible_in_cone(&candidates, cone.halfspaces());
            Ok(Saturation {
                monoid: AffineMonoid::new(3, basis)?,
                certified: false,
            })
        }
        _ => Err(Error::DimensionUnsupported {
            dim: d,
            max: MAX_CONE_DIM,
        }),
    }
}

/// Hilbert basis of the 2d cone spanned by primitive rays `r1`, `r2`.
///
/// Candidates are the two rays plus the lattice points of the half-open
/// fundamental parallelogram; every irreducible element lies there. The
/// irreducibility test subtracts candidates and checks cone membership,
/// which is exact because the cone (not the monoid) is the ambient object.
fn hilbert_basis_2d(
    r1: &LatticeVector,
    r2: &LatticeVector,
    cone_ineqs: &[LatticeVector],
) -> Vec<LatticeVector> {
    let det = cross2(r1, r2);
    assert!(!det.is_zero(), "hilbert basis needs a full-dimensional cone");
    let mut candidates: Vec<LatticeVector> = vec![r1.clone(), r2.clone()];
    // Bounding box over the parallelogram corners 0, r1, r2, r1+r2.
    let corners = [
        LatticeVector::zero(2),
        r1.clone(),
        r2.clone(),
        r1 + r2,
    ];
    for x in range_over(&corners, 0) {
        for y in range_over(&corners, 1) {
            let z = LatticeVector::new(vec![x.clone(), y.clone()]);
            if z.is_zero() {
                continue;
            }
            // z = l1 r1 + l2 r2 with l1 = det(z, r2)/det, l2 = det(r1, z)/det;
            // keep 0 <= l1, l2 < 1 (half-open parallelogram).
            let n1 = cross2(&z, r2);
            let n2 = cross2(r1, &z);
            let (n1, n2, dabs) = if det.is_negative() {
                (-n1, -n2, -&det)
            } else {
                (n1, n2, det.clone())
            };
            if !n1.is_negative() && !n2.is_negative() && n1 < dabs && n2 < dabs
                && !candidates.contains(&z) {
                    candidates.push(z);
                }
        }
    }
    irreducible_in_cone(&candidates, cone_ineqs)
}

fn range_over(points: &[LatticeVector], coord: usize) -> Vec<BigInt> {
    let lo = points.iter().map(|p| p.coords()[coord].clone()).min().unwrap();
    let hi = points.iter().map(|p| p.coords()[coord].clone()).max().unwrap();
    let mut out = Vec::new();
    let mut v = lo;
    while v <= hi {
        out.push(v.clone());
        v += 1;
    }
    out
}

/// Filters a candidate set down to the elements that are not a sum of two
/// nonzero lattice points of the cone. Sound whenever the candidate set
/// contains every irreducible below the weight of each tested element.
fn irreducible_in_cone(
    candidates: &[LatticeVector],
    cone_ineqs: &[LatticeVector],
) -> Vec<LatticeVector> {
    let in_cone =
        |v: &LatticeVector| cone_ineqs.iter().all(|h| !h.dot(v).is_negative());
    let mut basis: Vec<LatticeVector> = Vec::new();
    for z in candidates {
        let reducible = candidates.iter().any(|c| {
            if c == z || c.is_zero() {
                return false;
            }
            let rest = z - c;
            !rest.is_zero() && in_cone(&rest)
        });
        if !reducible && !basis.contains(z) {
            basis.push(z.clone());
        }
    }
    basis.sort();
    basis
}

/// Lattice points of a full-dimensional pointed cone with `<x, w0> <= bound`,
/// excluding the origin. The cone is given primally: extreme rays bound the
/// search box, halfspace normals decide membership.
fn cone_points_below(
    cone: &RationalCone,
    w0: &LatticeVector,
    bound: &BigInt,
) -> Vec<LatticeVector> {
    let d = w0.dim();
    // The slice is contained in the box spanned by bound/(<r,w0>) * r over
    // the extreme rays r.
    let mut lo = vec![BigInt::zero(); d];
    let mut hi = vec![BigInt::zero(); d];
    for r in cone.rays() {
        let rw = r.dot(w0);
        debug_assert!(rw.is_positive());
        for i in 0..d {
            let extreme = bound * &r.coords()[i];
            let (lo_i, hi_i) = if extreme.is_negative() {
                (extreme.div_floor(&rw), BigInt::zero())
            } else {
                (BigInt::zero(), extreme.div_ceil(&rw))
            };
            if lo_i < lo[i] {
                lo[i] = lo_i;
            }
            if hi_i > hi[i] {
                hi[i] = hi_i;
            }
        }
    }
    let mut out = Vec::new();
    let mut cursor = lo.clone();
    'outer: loop {
        let v = LatticeVector::new(cursor.clone());
        if !v.is_zero() {
            let wv = v.dot(w0);
            if !wv.is_negative() && wv <= *bound && cone.contains(&v) {
                out.push(v);
            }
        }
        // Advance the mixed-radix cursor.
        for i in 0..d {
            cursor[i] += 1;
            if cursor[i] <= hi[i] {
                continue 'outer;
            }
            cursor[i] = lo[i].clone();
        }
        break;
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Numerical semigroups (d = 1 specifics)
// ---------------------------------------------------------------------------

const APERY_LIMIT: u64 = 5_000_000;

/// Membership and conductor data for a one-dimensional pointed monoid,
/// normalized to positive values. Built from the Apery set of the smallest
/// generator: `v` lies in the semigroup iff `v >= apery[v mod a]`.
#[derive(Clone, Debug)]
pub(crate) struct NumericalSemigroup {
    pub sign: i64,
    pub smallest: u64,
    pub apery: Vec<u64>,
    /// First value from which every integer is in the semigroup
    /// (Frobenius number + 1; zero for the full half-line).
    pub conductor: u64,
}

impl NumericalSemigroup {
    pub fn contains(&self, v: u64) -> bool {
        v >= self.apery[(v % self.smallest) as usize]
    }
}

/// Builds the numerical-semigroup view of a `d = 1` monoid satisfying the
/// standing assumptions.
pub(crate) fn numerical_semigroup(monoid: &AffineMonoid) -> Result<NumericalSemigroup> {
    assert_eq!(monoid.dim(), 1);
    monoid.check_standing_assumptions()?;
    let sign = if monoid.generators()[0].coords()[0].is_positive() {
        1i64
    } else {
        -1i64
    };
    let mut gens: Vec<u64> = monoid
        .generators()
        .iter()
        .map(|g| {
            (g.coords()[0].clone() * BigInt::from(sign))
                .to_u64()
                .ok_or_else(|| Error::ResourceLimit("generator magnitude exceeds u64".into()))
        })
        .collect::<Result<_>>()?;
    gens.sort_unstable();
    gens.dedup();
    let smallest = gens[0];
    if smallest > APERY_LIMIT {
        return Err(Error::ResourceLimit(
            "smallest generator too large for the Apery computation".into(),
        ));
    }
    // Dijkstra over residues mod the smallest generator: apery[r] is the
    // least semigroup element congruent to r.
    let a = smallest as usize;
    let mut apery = vec![u64::MAX; a];
    apery[0] = 0;
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((dist, r))) = heap.pop() {
        if dist > apery[r] {
            continue;
        }
        for &g in &gens {
            let nd = dist + g;
            let nr = ((r as u64 + g) % smallest) as usize;
            if nd < apery[nr] {
                apery[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    let frobenius = apery
        .iter()
        .map(|&v| v.saturating_sub(smallest))
        .max()
        .unwrap();
    let conductor = if apery.iter().all(|&v| v < smallest) {
        0
    } else {
        // max apery value - smallest is the Frobenius number.
        frobenius.checked_add(1).unwrap()
    };
    Ok(NumericalSemigroup {
        sign,
        smallest,
        apery,
        conductor,
    })
}
