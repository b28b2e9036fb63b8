//! Shared test machinery: definition-level oracles (kept independent of the
//! library's computation paths) and the deterministic random corpus.

#![allow(dead_code)]

use fblow::lattice::{group_generates, is_pointed, saturation};
use fblow::AffineMonoid;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

// ---------------------------------------------------------------------------
// d = 1 definition-level oracle
// ---------------------------------------------------------------------------

/// Membership table of the numerical semigroup generated by `gens`, for all
/// values `0..=upto`, by direct dynamic programming.
pub fn d1_members(gens: &[u64], upto: u64) -> Vec<bool> {
    let mut member = vec![false; (upto + 1) as usize];
    member[0] = true;
    for v in 1..=upto {
        member[v as usize] = gens
            .iter()
            .any(|&g| g <= v && member[(v - g) as usize]);
    }
    member
}

/// Conductor (largest gap + 1) computed from scratch. `gens` must have
/// gcd 1.
pub fn d1_conductor(gens: &[u64]) -> u64 {
    let min = *gens.iter().min().unwrap();
    let max = *gens.iter().max().unwrap();
    let bound = min * max + max + 1;
    let member = d1_members(gens, bound);
    let mut conductor = 0;
    for v in 0..=bound {
        if !member[v as usize] {
            conductor = v + 1;
        }
    }
    conductor
}

/// Minimal generating set of the numerical semigroup generated by `values`,
/// recomputed from scratch.
pub fn d1_minimalize(values: &[u64]) -> Vec<u64> {
    if values.is_empty() {
        return Vec::new();
    }
    let max = *values.iter().max().unwrap();
    let mut reachable = vec![false; (max + 1) as usize];
    reachable[0] = true;
    for v in 1..=max {
        reachable[v as usize] = values
            .iter()
            .any(|&g| g <= v && reachable[(v - g) as usize]);
    }
    let mut out: Vec<u64> = values
        .iter()
        .copied()
        .filter(|&v| {
            !values
                .iter()
                .any(|&u| u < v && u > 0 && reachable[(v - u) as usize])
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The chart generators computed straight from the defining sets: dominated
/// elements are those with a smaller element in the same residue class mod
/// `q`, differences against the residue minima generate the chart, and the
/// enumeration cutoff is `4 * (conductor + q)`.
pub fn d1_chart_oracle(gens: &[u64], p: u64, e: u32) -> Vec<u64> {
    let q = p.pow(e);
    let conductor = d1_conductor(gens);
    let cutoff = 4 * (conductor + q);
    let member = d1_members(gens, cutoff);

    let mut first_in_residue = vec![u64::MAX; q as usize];
    for v in 0..=cutoff {
        if member[v as usize] {
            let r = (v % q) as usize;
            if first_in_residue[r] == u64::MAX {
                first_in_residue[r] = v;
            }
        }
    }
    let mut diffs: Vec<u64> = Vec::new();
    for v in 0..=cutoff {
        if !member[v as usize] {
            continue;
        }
        let base = first_in_residue[(v % q) as usize];
        if v > base {
            let t = (v - base) / q;
            if !diffs.contains(&t) {
                diffs.push(t);
            }
        }
    }
    d1_minimalize(&diffs)
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

pub const CORPUS_SEED: u64 = 0x5eed_f810;

pub fn monoid_d1(gens: &[i64]) -> AffineMonoid {
    let cols: Vec<&[i64]> = gens.iter().map(std::slice::from_ref).collect();
    AffineMonoid::from_i64(1, &cols).unwrap()
}

pub fn monoid_d2(gens: &[[i64; 2]]) -> AffineMonoid {
    let cols: Vec<&[i64]> = gens.iter().map(|g| g.as_slice()).collect();
    AffineMonoid::from_i64(2, &cols).unwrap()
}

/// Deterministic corpus of pointed, group-generating numerical semigroups
/// with small conductors, including the worked classics.
pub fn corpus_d1() -> Vec<AffineMonoid> {
    let mut rng = StdRng::seed_from_u64(CORPUS_SEED);
    let mut out = vec![
        monoid_d1(&[1]),
        monoid_d1(&[2, 3]),
        monoid_d1(&[3, 5]),
        monoid_d1(&[4, 5, 6, 7]),
        monoid_d1(&[8, 9, 10, 11]),
    ];
    while out.len() < 30 {
        let k = rng.random_range(2..=4);
        let gens: Vec<u64> = (0..k).map(|_| rng.random_range(2..=15)).collect();
        let g = gens.iter().fold(0u64, |a, &b| num_integer::gcd(a, b));
        if g != 1 {
            continue;
        }
        if d1_conductor(&gens) >= 120 {
            continue;
        }
        let signed: Vec<i64> = gens.iter().map(|&v| v as i64).collect();
        out.push(monoid_d1(&signed));
    }
    out
}

/// Deterministic corpus of pointed, group-generating monoids in the plane:
/// a few classics, random generator soups, and random saturated (hence
/// normal) monoids built from Hilbert bases of random cones.
pub fn corpus_d2() -> Vec<AffineMonoid> {
    let mut rng = StdRng::seed_from_u64(CORPUS_SEED ^ 0xd2);
    let mut out = vec![
        monoid_d2(&[[1, 0], [0, 1]]),
        monoid_d2(&[[1, 0], [1, 1], [0, 2]]),
        monoid_d2(&[[1, 0], [1, 1], [1, 2]]),
    ];
    // Random generator soups.
    while out.len() < 15 {
        let k = rng.random_range(2..=4);
        let gens: Vec<[i64; 2]> = (0..k)
            .map(|_| [rng.random_range(0..=3), rng.random_range(-2..=3)])
            .collect();
        if gens.iter().any(|g| g == &[0, 0]) {
            continue;
        }
        let m = monoid_d2(&gens);
        if is_pointed(&m) && group_generates(&m) {
            out.push(m);
        }
    }
    // Saturated monoids from random pointed cones.
    while out.len() < 25 {
        let r1 = [rng.random_range(0..=3), rng.random_range(-3..=3)];
        let r2 = [rng.random_range(0..=3), rng.random_range(-3..=3)];
        if r1 == [0, 0] || r2 == [0, 0] || r1[0] * r2[1] - r1[1] * r2[0] == 0 {
            continue;
        }
        let span = monoid_d2(&[r1, r2]);
        if !is_pointed(&span) {
            continue;
        }
        let sat = saturation(&span).unwrap();
        assert!(sat.certified);
        if group_generates(&sat.monoid) {
            out.push(sat.monoid);
        }
    }
    out
}
