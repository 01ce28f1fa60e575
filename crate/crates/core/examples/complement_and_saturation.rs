//! Orthogonal complements and primitive closures inside a host lattice.
//!
//! In `D4` with simple roots `e1-e2, e2-e3, e3-e4, e3+e4`, the complement of
//! `<e1-e2, e3-e4>` is `<e1+e2, e3+e4>`, a copy of `A1^2`.

use num_bigint::BigInt;
use quartic_k3::lattice::{invariants, orthogonal_complement, saturate};
use quartic_k3::named::catalog;

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn main() {
    let d4 = catalog("D4");
    let c = orthogonal_complement(&d4, &[v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])]).unwrap();
    println!("complement basis: {:?}", c.basis);
    println!("complement Gram:  {:?}", c.lattice.gram().to_rows());
    println!("{:?}", invariants(&c.lattice).unwrap());

    // 2(e1-e2) spans an imprimitive sublattice of index 2
    let s = saturate(&d4, &[v(&[2, 0, 0, 0])]).unwrap();
    println!("\nsaturation of <2 a1>: basis {:?}, index {}", s.basis, s.index);

    // complement of an isotropic vector in U^2 is degenerate
    let u2 = catalog("U^2");
    let c = orthogonal_complement(&u2, &[v(&[1, 0, 0, 0])]).unwrap();
    println!("\ncomplement of e in U^2 degenerate: {}", c.lattice.is_degenerate());
}
