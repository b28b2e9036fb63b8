//! The classic failure of monotonicity: for the numerical semigroup
//! `A = <8, 9, 10, 11>` in characteristic 2, the first blowup is already
//! smooth but the second is not, so the second cannot dominate the first.
//!
//! Run with: cargo run -p fblow --example monotonicity_failure

use fblow::fan::{compute_fan, dominates};
use fblow::frobenius::{is_smooth_chart, FrobeniusLevel};
use fblow::AffineMonoid;

fn main() -> fblow::Result<()> {
    let monoid = AffineMonoid::from_i64(1, &[&[8], &[9], &[10], &[11]])?;
    println!("monoid A = {monoid}, characteristic p = 2");
    println!();

    let mut fans = Vec::new();
    for e in 1..=2u32 {
        let level = FrobeniusLevel::new(2, e)?;
        let fan = compute_fan(&monoid, &level)?;
        let chamber = &fan.chambers()[0];
        let reps: Vec<String> = chamber
            .standard()
            .sorted_reps()
            .iter()
            .map(|r| format!("{r}/{}", level.q()))
            .collect();
        let smooth = is_smooth_chart(chamber.chart());
        println!("level e = {e} (q = {}):", level.q());
        println!("  standard set: {{ {} }}", reps.join(", "));
        println!(
            "  chart monoid: {:?}   smooth: {}",
            chamber.chart().generators(),
            smooth.value
        );
        fans.push(fan);
    }

    println!();
    let verdict = dominates(&fans[1], &fans[0])?;
    println!("does the 2nd blowup dominate the 1st?  {}", verdict.value);
    if let Some(witness) = &verdict.witness {
        println!("  witness: {witness}");
    }
    Ok(())
}
