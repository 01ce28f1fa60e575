//! Roots (vectors of norm -2) of the negative definite root lattices.

use quartic_k3::lattice::roots;
use quartic_k3::named::catalog;

fn main() {
    for name in ["A1", "A2", "A4", "D4", "D8", "E6", "E7", "E8", "A1^2 + D4"] {
        let rs = roots(&catalog(name)).unwrap();
        println!("{name:<10} {:>4} roots", rs.len());
    }

    let d4 = roots(&catalog("D4")).unwrap();
    println!("\nfirst positive roots of D4 in simple-root coordinates:");
    for r in d4.iter().filter(|r| r.iter().all(|x| x.sign() != num_bigint::Sign::Minus)).take(6) {
        println!("  {:?}", r.iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    // indefinite lattices have infinitely many roots
    println!("\nU: {}", roots(&catalog("U")).unwrap_err());
}
