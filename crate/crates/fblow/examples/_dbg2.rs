use fblow::fan::compute_fan;
use fblow::frobenius::FrobeniusLevel;
use fblow::AffineMonoid;

fn main() {
    let cases: Vec<(Vec<Vec<i64>>, u64)> = vec![
        (vec![vec![4,4],vec![0,-1],vec![3,3],vec![1,0]], 3),
        (vec![vec![4,4],vec![-1,-2],vec![4,0],vec![4,-1],vec![0,-1]], 3),
        (vec![vec![-1,4],vec![4,1],vec![-1,1],vec![3,2],vec![1,4]], 2),
    ];
    for (gens, p) in &cases {
        let cols: Vec<&[i64]> = gens.iter().map(|g| g.as_slice()).collect();
        let m = AffineMonoid::from_i64(2, &cols).unwrap();
        let fan = compute_fan(&m, &FrobeniusLevel::new(*p, 1).unwrap()).unwrap();
        println!("{m} p={p}: {} chambers certified={}", fan.chambers().len(), fan.certified());
        for (i, ch) in fan.chambers().iter().enumerate() {
            println!("  ch{i}: rays {:?} sample {}", ch.cone().rays(), ch.sample());
        }
    }
}
