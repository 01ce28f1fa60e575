//! The order-four isometry on `<2>^2 + D4^3`: its matrix on one `D4` block in
//! the basis `f1, rho f1, f2, rho f2`, the two classes of roots, and an
//! isotropic vector `x` with `(x, rho x) = 0`.

use num_bigint::BigInt;
use quartic_k3::named::{classify_root, d4_complex_basis, isotropic_rho_vector_search, rho_in_basis, rho_on_l_minus};

fn main() {
    let rho = rho_on_l_minus();
    println!("host: {}", rho.host.label().unwrap_or("L-"));

    let local = d4_complex_basis();
    let basis: Vec<Vec<BigInt>> = (0..4)
        .map(|i| {
            let mut v = vec![BigInt::from(0); 14];
            for j in 0..4 {
                v[2 + j] = local[(i, j)].clone();
            }
            v
        })
        .collect();
    let block = rho_in_basis(&rho, &basis).unwrap();
    println!("rho on the first D4 block:");
    for row in block.to_rows() {
        println!("  {:?}", row.iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    let mut in_d4 = vec![BigInt::from(0); 14];
    in_d4[2] = BigInt::from(1);
    let mut mixed = vec![BigInt::from(0); 14];
    mixed[0] = BigInt::from(1);
    mixed[2] = BigInt::from(1);
    mixed[6] = BigInt::from(1);
    for r in [in_d4, mixed] {
        match classify_root(&r) {
            Ok(report) => println!("root {:?}: {}", short(&r), report.class),
            Err(e) => println!("root {:?}: {e}", short(&r)),
        }
    }

    let x = isotropic_rho_vector_search(1).unwrap();
    println!("isotropic rho-plane spanned by x = {:?} and rho(x) = {:?}", short(&x), short(&rho.apply(&x)));
}

fn short(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}
