//! Hypersurface F-purity by expanding the Frobenius power: k[[x]]/(f) is
//! F-pure iff f^{p-1} keeps a monomial with every exponent below p.
//!
//! Any f of the split shape g(x0..x_{n-2}) + x_{n-1}*x_n passes for every p,
//! because the transverse product alone contributes the surviving monomial
//! x_{n-1}^{p-1} * x_n^{p-1}.
//!
//! Run with: cargo run -p fblow --example fedder_criterion

use fblow::fedder::{fedder_f_pure, parse_polynomial};

fn main() -> fblow::Result<()> {
    let cases = [
        ("x0^2 + x1*x2", vec![2u64, 3, 5]),
        ("x0^3 + x1*x2", vec![2, 3, 5]),
        ("x0^3 + x0*x1^3 + x2*x3", vec![2, 3, 5]),
        ("x0^2 + x1^2", vec![2, 3, 5]),
        ("x0^3 + x1^2", vec![2, 3]),
        ("x0^5 + x1^2", vec![2, 3, 5]),
    ];

    for (src, primes) in &cases {
        println!("f = {src}");
        for &p in primes {
            let f = parse_polynomial(src, p)?;
            let outcome = fedder_f_pure(&f)?;
            print!("  p = {p}: F-pure: {}", outcome.f_pure);
            match outcome.witness_string() {
                Some(w) => println!("   witness {w}"),
                None => println!(),
            }
        }
        println!();
    }
    Ok(())
}
