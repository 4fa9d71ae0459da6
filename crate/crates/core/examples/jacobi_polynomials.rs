//! Exact Jacobi polynomials, Pochhammer symbols and Gamma ratios.
use dunkl_clifford::jacobi::{gamma_ratio, jacobi_poly, pochhammer};
use dunkl_clifford::rational::{q, qf, show_q};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=4 {
        println!("P_{n}^(1/2,3/4)(x) = {}", jacobi_poly(n, &qf(1, 2), &qf(3, 4)));
    }
    let p = jacobi_poly(3, &q(0), &q(0));
    println!("Legendre P_3(1) = {}", show_q(&p.eval(&q(1))));
    println!("(5/2)_3 = {}", show_q(&pochhammer(&qf(5, 2), 3)));
    println!("Gamma(7/3 + 2)/Gamma(7/3) = {}", show_q(&gamma_ratio(&qf(7, 3), 2)?));
    println!("Gamma(7/3 - 2)/Gamma(7/3) = {}", show_q(&gamma_ratio(&qf(7, 3), -2)?));
    println!("Gamma(0)/Gamma(2) is ill-posed: {}", gamma_ratio(&q(2), -2).is_err());
    Ok(())
}
