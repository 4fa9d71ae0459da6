//! The scalar family built from a Dunkl harmonic with the second-order operator.
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::gegenbauer::{scalar_closed_form, scalar_gegenbauer};
use dunkl_clifford::monogenic::harmonic_basis;
use dunkl_clifford::rational::qf;
use dunkl_clifford::rootsys::{Preset, RootSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)])?);
    let h = harmonic_basis(&ctx, 2).basis.remove(0);
    println!("H = {h}");
    for t in 0..=3 {
        let built = scalar_gegenbauer(&ctx, t, &qf(3, 4), &h)?;
        let closed = scalar_closed_form(&ctx, t, &qf(3, 4), &h)?;
        println!("t={t}: {built}\n    matches closed form: {}", built == closed);
    }
    Ok(())
}
