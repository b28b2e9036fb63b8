//! Seeded random corpus run: draws pointed, group-generating monoids in

//! dimensions 1 and 2 and checks two exact laws on every draw:
//!
//!   * the standard set at level (p, e) has exactly p^{e*d} elements;
//!   * certified F-pure inputs dominate at every computed step and satisfy
//!     the image condition in every chamber.
//!
//! Run with: cargo run -p fblow --example random_corpus -- [seed]

use fblow::analysis::{analyze_sequence, is_f_pure, is_normal, SequenceOptions};
use fblow::frobenius::{generic_weight, standard_set, FrobeniusLevel};
use fblow::lattice::{group_generates, is_pointed};
use fblow::AffineMonoid;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_d1(rng: &mut StdRng) -> AffineMonoid {
    loop {
        let k = rng.random_range(2..=4);
        let gens: Vec<Vec<i64>> = (0..k).map(|_| vec![rng.random_range(2..=20)]).collect();
        let cols: Vec<&[i64]> = gens.iter().map(|g| g.as_slice()).collect();
        let m = AffineMonoid::from_i64(1, &cols).unwrap();
        if group_generates(&m) {
            return m;
        }
    }
}

fn random_d2(rng: &mut StdRng) -> AffineMonoid {
    loop {
        let k = rng.random_range(2..=4);
        let gens: Vec<Vec<i64>> = (0..k)
            .map(|_| vec![rng.random_range(0..=3), rng.random_range(-2..=3)])
            .collect();
        if gens.iter().any(|g| g.iter().all(|&c| c == 0)) {
            continue;
        }
        let cols: Vec<&[i64]> = gens.iter().map(|g| g.as_slice()).collect();
        let m = match AffineMonoid::from_i64(2, &cols) {
            Ok(m) => m,
            Err(_) => continue,
        };
        if is_pointed(&m) && group_generates(&m) {
            return m;
        }
    }
}

fn main() -> fblow::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(17);
    let mut rng = StdRng::seed_from_u64(seed);
    println!("seed: {seed}");

    let mut corpus: Vec<AffineMonoid> = Vec::new();
    for _ in 0..15 {
        corpus.push(random_d1(&mut rng));
    }
    for _ in 0..15 {
        corpus.push(random_d2(&mut rng));
    }

    let mut cardinality_checks = 0usize;
    let mut fpure_runs = 0usize;
    for monoid in &corpus {
        let d = monoid.dim() as u32;
        for p in [2u64, 3] {
            for e in 1..=2u32 {
                let level = FrobeniusLevel::new(p, e)?;
                let w = generic_weight(monoid, &level)?;
                let s = standard_set(monoid, &level, &w)?;
                let expected = (p as u128).pow(e * d);
                assert_eq!(s.reps().len() as u128, expected, "cardinality law for {monoid}");
                cardinality_checks += 1;
            }

            let f_pure = is_f_pure(monoid, p)?;
            let normal = is_normal(monoid)?;
            let certified_f_pure =
                (f_pure.value && f_pure.certified) || (normal.value && normal.certified);
            if certified_f_pure {
                let e_max = if d == 1 { 3 } else { 2 };
                let report = analyze_sequence(monoid, p, e_max, &SequenceOptions::default())?;
                for step in &report.dominates {
                    assert!(
                        step.outcome.as_ref().unwrap().value,
                        "F-pure input must dominate: {monoid} p={p} step {}",
                        step.from_e
                    );
                }
                for step in &report.condition_star {
                    for entry in step.outcome.as_ref().unwrap() {
                        assert!(
                            entry.verdict.as_ref().unwrap().value,
                            "F-pure input must satisfy the image condition: {monoid} p={p}"
                        );
                    }
                }
                fpure_runs += 1;
            }
        }
    }

    println!(
        "{} monoids drawn; {} cardinality checks passed; {} certified F-pure sequence runs passed",
        corpus.len(),
        cardinality_checks,
        fpure_runs
    );
    Ok(())
}
