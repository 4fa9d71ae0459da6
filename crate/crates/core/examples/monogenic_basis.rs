//! Bases of inner Dunkl monogenics and their dimension count.
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::monogenic::{expected_monogenic_dim, is_monogenic, monogenic_basis};
use dunkl_clifford::rational::qf;
use dunkl_clifford::rootsys::{Preset, RootSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let systems = [
        RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)])?,
        RootSystem::preset(Preset::A, 3, &[qf(1, 2)])?,
    ];
    for system in systems {
        let ctx = OperatorContext::new(system);
        for k in 0..=4 {
            let b = monogenic_basis(&ctx, k);
            let all = b.basis.iter().all(|p| is_monogenic(&ctx, p));
            println!(
                "{} k={k}: dim {} (expected {}), all monogenic: {all}",
                ctx.system().label(),
                b.basis.len(),
                expected_monogenic_dim(ctx.dim(), k)
            );
        }
        let b = monogenic_basis(&ctx, 1);
        println!("  first degree-1 element: {}", b.basis[0]);
    }
    Ok(())
}
