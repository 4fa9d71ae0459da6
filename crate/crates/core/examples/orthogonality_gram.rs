//! Exact Gram matrices: ball family against the product weight and the
//! whole-space bilinear form. Entries are rational multiples of a base constant.
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::gegenbauer::{first_monogenic, Family};
use dunkl_clifford::integration::{check_normalization, gram};
use dunkl_clifford::rational::{qf, show_q};
use dunkl_clifford::rootsys::{Preset, RootSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)])?);
    let ms = (0..=1).map(|k| first_monogenic(&ctx, k)).collect::<Result<Vec<_>, _>>()?;
    let ball = gram(&ctx, Family::Ball, &qf(1, 2), 3, &ms)?;
    print!("{}", ball.to_csv());
    println!("ball Gram diagonal: {}", ball.is_diagonal());

    let euclid = gram(&ctx, Family::Euclid, &qf(7, 5), 3, &ms[1..])?;
    print!("{}", euclid.to_csv());
    println!("bilinear Gram diagonal: {}", euclid.is_diagonal());

    for t in [1, 2] {
        let c = check_normalization(&ctx, t, &qf(1, 2), &ms[1])?;
        println!(
            "norm t={t}: computed {} predicted {} -> {}",
            show_q(&c.computed),
            show_q(&c.predicted),
            c.verdict
        );
    }
    Ok(())
}
