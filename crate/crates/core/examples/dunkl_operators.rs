//! Dunkl operators for Z2^2 with k = (1/2, 1/3): commuting T_i, D_k^2 = -Delta_k,
//! and Gamma_k on a small polynomial.
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::poly::MVPoly;
use dunkl_clifford::rational::{q, qf, show_q};
use dunkl_clifford::rootsys::{Preset, RootSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let system = RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)])?;
    let ctx = OperatorContext::new(system);
    println!("{} mu = {}", ctx.system(), show_q(ctx.mu()));

    let (x1, x2) = (MVPoly::var(2, 0), MVPoly::var(2, 1));
    let f = &(&x1.pow(3) * &x2) + &x2.pow(2).scale(&q(5));
    println!("f            = {f}");
    println!("T_1 f        = {}", ctx.dunkl_t(0, &f));
    println!("T_2 f        = {}", ctx.dunkl_t(1, &f));
    println!("Delta_k f    = {}", ctx.laplacian(&f));
    println!("D_k f        = {}", ctx.d(&f));
    println!("D_k^2 f + Delta_k f = {}", &ctx.d(&ctx.d(&f)) + &ctx.laplacian(&f));
    let t12 = ctx.dunkl_t(0, &ctx.dunkl_t(1, &f));
    let t21 = ctx.dunkl_t(1, &ctx.dunkl_t(0, &f));
    println!("[T_1, T_2] f = {}", &t12 - &t21);
    println!("Gamma_k f    = {}", ctx.gamma(&f));
    println!("D_k[x]       = {}", ctx.d(&MVPoly::vector_var(2)));

    // A2 in R^3 exercises genuine reflections
    let a2 = OperatorContext::new(RootSystem::preset(Preset::A, 3, &[qf(1, 2)])?);
    let g = &MVPoly::var(3, 0).pow(2) * &MVPoly::var(3, 2);
    println!("A2: T_1 (x1^2 x3) = {}", a2.dunkl_t(0, &g));
    Ok(())
}
