//! Multivector arithmetic in R_{0,3}: e_i^2 = -1, anticommutation, conjugation.
use dunkl_clifford::clifford::{Blade, CliffordElement};
use dunkl_clifford::rational::{q, qf};

fn main() {
    let m = 3;
    let e1 = CliffordElement::generator(m, 1);
    let e2 = CliffordElement::generator(m, 2);
    println!("e1 e1 = {}", &e1 * &e1);
    println!("e1 e2 = {}", &e1 * &e2);
    println!("e2 e1 = {}", &e2 * &e1);

    let x = CliffordElement::from_terms(m, [(Blade::SCALAR, q(2)), (Blade(0b011), qf(1, 2)), (Blade(0b100), q(-1))]);
    let xc = x.conjugate();
    println!("x          = {x}");
    println!("conj(x)    = {xc}");
    println!("x conj(x)  = {}", &x * &xc);

    let y = CliffordElement::from_blade(m, Blade(0b101), q(3));
    let lhs = (&x * &y).conjugate();
    let rhs = &y.conjugate() * &xc;
    println!("conj(xy) == conj(y) conj(x): {}", lhs == rhs);
}
