//! The cusp monoid `A = <2, 3>` in characteristic 2: every blowup in the
//! sequence is the normalized line, so the sequence is monotone and
//! stabilizes immediately. Still, the image condition between the standard
//! sets of levels 1 and 2 fails, with the fraction 3/2 as the witness:
//! monotonicity does not need the condition to hold.
//!
//! Run with: cargo run -p fblow --example monotone_without_image_condition

use fblow::analysis::{analyze_sequence, scaled_fraction, SequenceOptions};
use fblow::AffineMonoid;
use num_bigint::BigInt;

fn main() -> fblow::Result<()> {
    let monoid = AffineMonoid::from_i64(1, &[&[2], &[3]])?;
    let p = 2u64;
    println!("monoid A = {monoid}, characteristic p = {p}");
    println!();

    let report = analyze_sequence(&monoid, p, 4, &SequenceOptions::default())?;
    for entry in &report.levels {
        let fan = entry.fan.as_ref().expect("d = 1 fans always succeed");
        let chart = fan.chambers()[0].chart();
        println!("level e = {}: chart {:?}", entry.e, chart.generators());
    }

    println!();
    for step in &report.dominates {
        let v = step.outcome.as_ref().expect("d = 1 steps are computable");
        println!(
            "dominates {} -> {}: {}",
            step.from_e,
            step.from_e + 1,
            v.value
        );
    }

    println!();
    for step in &report.condition_star {
        let denom = BigInt::from(p).pow(step.from_e + 1);
        for entry in step.outcome.as_ref().unwrap() {
            let verdict = entry.verdict.as_ref().unwrap();
            print!(
                "image condition at step {} -> {}: {}",
                step.from_e,
                step.from_e + 1,
                verdict.value
            );
            match &verdict.witness {
                Some(w) => println!("   (witness {})", scaled_fraction(w, &denom)),
                None => println!(),
            }
        }
    }

    println!();
    match report.stabilized_at {
        Some(e0) => println!("stabilized from e = {e0} within the computed range"),
        None => println!("no stabilization within the computed range"),
    }
    Ok(())
}
