//! Weak normality, F-purity, and normality for a handful of monoids.
//!
//! F-purity of a monoid algebra is the same as weak normality, which is the
//! condition `A = (1/p)A ∩ M`; normality is the characteristic-free variant.
//! The pinch point `<(1,0), (1,1), (0,2)>` shows the dependence on p: the
//! missing lattice point (0,1) has its double inside the monoid, so weak
//! normality fails exactly in characteristic 2.
//!
//! Run with: cargo run -p fblow --example singularity_predicates

use fblow::analysis::{is_f_pure, is_normal, is_weakly_normal};
use fblow::AffineMonoid;

fn main() -> fblow::Result<()> {
    let cases: Vec<(&str, AffineMonoid)> = vec![
        ("line <1>", AffineMonoid::from_i64(1, &[&[1]])?),
        ("cusp <2,3>", AffineMonoid::from_i64(1, &[&[2], &[3]])?),
        (
            "<8,9,10,11>",
            AffineMonoid::from_i64(1, &[&[8], &[9], &[10], &[11]])?,
        ),
        (
            "pinch point <(1,0),(1,1),(0,2)>",
            AffineMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[0, 2]])?,
        ),
        (
            "quadratic chunk <(1,0),(1,1),(1,2)>",
            AffineMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]])?,
        ),
    ];

    for (name, monoid) in &cases {
        println!("{name}");
        let normal = is_normal(monoid)?;
        print!("  normal: {}", normal.value);
        if let Some(w) = &normal.witness {
            print!("   (missing lattice point {w})");
        }
        println!();
        for p in [2u64, 3, 5] {
            let wn = is_weakly_normal(monoid, p)?;
            let fp = is_f_pure(monoid, p)?;
            assert_eq!(wn.value, fp.value, "F-purity is weak normality here");
            print!(
                "  p = {p}: weakly normal / F-pure: {}{}",
                wn.value,
                if wn.certified { "" } else { " (bounded check)" }
            );
            match &wn.witness {
                Some(w) => println!("   witness {w}"),
                None => println!(),
            }
        }
        println!();
    }
    Ok(())
}
