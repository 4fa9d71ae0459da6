//! The whole-space family G_t with weight (1 + |x|^2)^{-alpha}, its
//! recurrences and the shift C_{2t+1,k} ~ x C_{2t,k+1}.
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::gegenbauer::{first_monogenic, gegenbauer, Family, Identities};
use dunkl_clifford::rational::qf;
use dunkl_clifford::rootsys::{Preset, RootSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = OperatorContext::new(RootSystem::preset(Preset::A, 3, &[qf(1, 2)])?);
    let alpha = qf(7, 5);
    let mk = first_monogenic(&ctx, 0)?;
    let ids = Identities::new(&ctx);
    for t in 0..=4 {
        let g = gegenbauer(&ctx, Family::Euclid, t, &alpha, &mk)?;
        println!("G_{t} = {g}");
        let ann = ids.annihilation(Family::Euclid, t, &alpha, &mk)?.is_zero();
        let rec = ids.recurrence(Family::Euclid, t, &alpha, &mk)?.is_zero();
        let three = t == 0 || ids.three_term(Family::Euclid, t, &alpha, &mk)?.is_zero();
        println!("    annihilation {ann}, recurrence {rec}, three-term {three}");
    }
    let shift = ids.corollary_shift(Family::Euclid, 1, &alpha, 0)?;
    println!("shift identity residual for t=1: {shift}");
    Ok(())
}
