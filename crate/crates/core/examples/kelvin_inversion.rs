//! Inner monogenic M_k to outer monogenic x |x|^{-mu-2k} M_k and back.
use dunkl_clifford::dunkl::{OperatorContext, RadialOp};
use dunkl_clifford::monogenic::{kelvin_invert, kelvin_restore, monogenic_basis};
use dunkl_clifford::rational::{qf, show_q};
use dunkl_clifford::rootsys::{Preset, RootSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)])?);
    for k in 0..=2 {
        let mk = monogenic_basis(&ctx, k).basis.remove(0);
        let outer = kelvin_invert(&ctx, &mk)?;
        let d = ctx.apply_radial(RadialOp::Dirac, &outer);
        let back = kelvin_restore(&ctx, &outer, k)?;
        println!("k={k} M = {mk}");
        println!(
            "    homogeneity {}, D_k annihilates: {}, round trip gives -M: {}",
            outer.homogeneity().map(|h| show_q(&h)).unwrap_or_default(),
            d.is_zero(),
            back == -&mk
        );
    }
    Ok(())
}
