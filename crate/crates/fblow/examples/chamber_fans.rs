//! Two-dimensional chamber fans: the dual cone subdivides into the maximal
//! cones on which the standard set is constant, and each chamber carries one
//! affine chart of the blowup.
//!
//! Run with: cargo run -p fblow --example chamber_fans

use fblow::fan::compute_fan;
use fblow::frobenius::{is_smooth_chart, FrobeniusLevel};
use fblow::AffineMonoid;

fn main() -> fblow::Result<()> {
    let cases: Vec<(&str, AffineMonoid, u64, u32)> = vec![
        (
            "quadratic chunk, p = 2",
            AffineMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]])?,
            2,
            1,
        ),
        (
            "pinch point, p = 2",
            AffineMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[0, 2]])?,
            2,
            1,
        ),
        (
            "pinch point, p = 3",
            AffineMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[0, 2]])?,
            3,
            1,
        ),
    ];

    for (name, monoid, p, e) in &cases {
        let level = FrobeniusLevel::new(*p, *e)?;
        let fan = compute_fan(monoid, &level)?;
        println!(
            "{name}: A = {monoid}, q = {}  ->  {} chamber(s), certified: {}",
            level.q(),
            fan.chambers().len(),
            fan.certified()
        );
        for (i, chamber) in fan.chambers().iter().enumerate() {
            let rays: Vec<String> = chamber
                .cone()
                .rays()
                .iter()
                .map(|r| r.to_string())
                .collect();
            let smooth = is_smooth_chart(chamber.chart());
            println!(
                "  chamber {i}: rays [{}], sample weight {}",
                rays.join(", "),
                chamber.sample()
            );
            println!(
                "    chart {:?}   smooth: {}",
                chamber.chart().generators(),
                smooth.value
            );
        }
        println!();
    }
    Ok(())
}
