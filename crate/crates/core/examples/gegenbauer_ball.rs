//! Clifford-Gegenbauer polynomials on the ball, built by iterating D_alpha and
//! compared with the Jacobi closed form.
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::gegenbauer::{closed_form, first_monogenic, gegenbauer, Family, Identities};
use dunkl_clifford::rational::qf;
use dunkl_clifford::rootsys::{Preset, RootSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)])?);
    let alpha = qf(1, 2);
    let k = 1;
    let mk = first_monogenic(&ctx, k)?;
    let ids = Identities::new(&ctx);
    for t in 0..=5 {
        let g = gegenbauer(&ctx, Family::Ball, t, &alpha, &mk)?;
        let closed = closed_form(Family::Ball, t, &alpha, k, ctx.mu());
        let de = ids.differential_equation(Family::Ball, t, &alpha, &mk)?;
        println!("C_{t} = {g}");
        println!("    closed form agrees: {}, ODE residual zero: {}", g.coeffs == closed.coeffs, de.is_zero());
    }
    Ok(())
}
