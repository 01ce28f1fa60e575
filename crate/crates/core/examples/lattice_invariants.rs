//! Rank, signature, discriminant group and the 2-elementary invariants of a
//! few lattices, built from sums of named summands or from a raw Gram matrix.
//!
//! ```text
//! cargo run --example lattice_invariants
//! ```

use quartic_k3::lattice::{invariants, invariants_equal, Lattice};
use quartic_k3::named::catalog;

fn main() {
    for text in ["U + A1^8", "<2>^2 + D4^3", "U(2)^2 + D8", "U^3 + E8^2"] {
        let inv = invariants(&catalog(text)).unwrap();
        let delta = inv.delta.map_or("-".into(), |d| d.to_string());
        println!(
            "{text:<14} rank {:>2}  signature {}  det {:>5}  ell {}  delta {delta}",
            inv.rank, inv.signature, inv.det, inv.ell
        );
    }

    let g = Lattice::from_json(r#"{"gram": [[-2, 1], [1, -2]]}"#).unwrap();
    println!("\nGram [[-2,1],[1,-2]]: discriminant {:?}", invariants(&g).unwrap().invariant_factors);
    println!("same invariants as A2: {}", invariants_equal(&g, &catalog("A2")).unwrap());

    // equal discriminant groups, different lattices
    let a = catalog("<2> + A1^7");
    let b = catalog("U + A1^6");
    println!("<2> + A1^7 vs U + A1^6: {}", invariants_equal(&a, &b).unwrap());
}
