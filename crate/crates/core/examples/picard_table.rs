//! The Picard lattices of the K3 covers by singularity type `(n, c)`, each row
//! recomputed from its Gram matrix, and the rank-20 four-line case.

use quartic_k3::strata::{full_table, nikulin_invariants, picard_rank, vinberg_check, SingularType};

fn main() {
    println!("{:<7} {:>4} {:>4} {:>6}  {}", "type", "rho", "ell", "delta", "Pic");
    for row in full_table().unwrap() {
        println!(
            "{:<7} {:>4} {:>4} {:>6}  {}",
            row.singular_type.to_string(),
            row.picard_rank,
            row.ell,
            row.delta,
            row.picard_expr
        );
    }

    let v = vinberg_check().unwrap();
    println!("\n(6,0): rank {}, ell {}, transcendental lattice vs <2>^2: {}", v.picard.rank, v.picard.ell, v.transcendental_vs_2_2);

    // beyond the table only the rank formula is available
    let t = SingularType::new(2, 2);
    println!("\n{t}: rank formula gives {:?}", picard_rank(t));
    let t = SingularType::new(4, 1);
    println!("{t}: {}", nikulin_invariants(t).unwrap_err());
}
