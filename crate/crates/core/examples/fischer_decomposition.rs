//! Splits a random Clifford polynomial into pieces x^i M_{k-i}.
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::monogenic::fischer_decompose;
use dunkl_clifford::poly::MVPoly;
use dunkl_clifford::rational::qf;
use dunkl_clifford::rootsys::{Preset, RootSystem};
use dunkl_clifford::suite::random_homogeneous;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)])?);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = random_homogeneous(&mut rng, 2, 3, true);
    println!("p = {p}");
    let parts = fischer_decompose(&ctx, &p)?;
    let mut sum = MVPoly::zero(2);
    for (i, part) in parts.iter().enumerate() {
        println!("P_{i} p = {part}");
        sum = &sum + part;
    }
    println!("sum of pieces equals p: {}", sum == p);
    Ok(())
}
