//! For curve singularities the blowup sequence ends at the normalization:
//! once q is large enough, every chart monoid collapses to <1>, which is the
//! coordinate monoid of the normalized line. This walks a few numerical
//! semigroups upward in e until the observed charts stop changing.
//!
//! Run with: cargo run -p fblow --example normalization_limit

use fblow::analysis::{analyze_sequence, SequenceOptions};
use fblow::AffineMonoid;

fn main() -> fblow::Result<()> {
    let semigroups: Vec<Vec<i64>> = vec![
        vec![2, 3],
        vec![3, 5],
        vec![4, 5, 6, 7],
        vec![8, 9, 10, 11],
        vec![5, 7, 9],
    ];

    for gens in &semigroups {
        let columns: Vec<&[i64]> = gens.iter().map(std::slice::from_ref).collect();
        let monoid = AffineMonoid::from_i64(1, &columns)?;
        let report = analyze_sequence(&monoid, 2, 6, &SequenceOptions::default())?;
        let charts: Vec<String> = report
            .levels
            .iter()
            .map(|l| {
                let fan = l.fan.as_ref().unwrap();
                let gens: Vec<String> = fan.chambers()[0]
                    .chart()
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect();
                format!("<{}>", gens.join(","))
            })
            .collect();
        println!("A = {monoid}");
        println!("  charts for e = 1..6: {}", charts.join("  "));
        match report.stabilized_at {
            Some(e0) => println!(
                "  stable from e = {e0} within range; stable chart {:?}",
                report.stable_chart().unwrap()
            ),
            None => println!("  not yet stable within e <= 6"),
        }
        println!();
    }
    Ok(())
}
