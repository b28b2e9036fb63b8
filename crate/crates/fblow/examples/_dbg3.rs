use fblow::frobenius::{standard_set, FrobeniusLevel};
use fblow::lattice::dual_cone;
use fblow::{AffineMonoid, Weight};

fn main() {
    let m = AffineMonoid::from_i64(2, &[&[4,4],&[0,-1],&[3,3],&[1,0]]).unwrap();
    let level = FrobeniusLevel::new(3, 1).unwrap();
    let dual = dual_cone(&m).unwrap();
    println!("dual rays: {:?} halfspaces {:?}", dual.rays(), dual.halfspaces());
    // Probe weights across the dual cone from (1,-1) to (1,0): u = (k, -j)
    for (u1, u2) in [(1i64,-1i64),(7,-6),(2,-1),(5,-3),(3,-2),(7,-5),(5,-2),(3,-1),(4,-1),(7,-1),(1,0),(20,-9),(5,-4),(9,-7)] {
        let w = Weight::from_i64(&[u1, u2]);
        match standard_set(&m, &level, &w) {
            Ok(s) => {
                let reps: Vec<String> = s.sorted_reps().iter().map(|r| r.to_string()).collect();
                println!("w=({u1},{u2}): {}", reps.join(" "));
            }
            Err(e) => println!("w=({u1},{u2}): ERR {e}"),
        }
    }
}
