//! Where the K3 cover of a curve lands in the moduli space, from either side:
//! quartics through their singular type, octavics through their roots.

use quartic_k3::cover::{cover_report_octavic, cover_report_quartic, fibration_fibers};
use quartic_k3::octavic::{octavic_stability, parse_octavic};
use quartic_k3::quartic::{git_stability, parse_quartic};
use quartic_k3::strata::SingularType;

fn main() {
    for text in ["x^4 + y^4 + z^4", "y^2*z^2 - x^3*z + y^4", "y^2*z^2 - x^4", "(y*z + x^2)^2 + x*y^3", "x^3*z + y^4"] {
        let v = git_stability(&parse_quartic(text).unwrap()).unwrap();
        match cover_report_quartic(&v, v.singular_type()) {
            Ok(c) => println!("{text}\n  {c}"),
            Err(e) => println!("{text}\n  no cover: {e}"),
        }
    }
    for text in ["x^2*(x - y)^2*(x + y)^2*y^2", "x^4*y^4"] {
        let v = octavic_stability(&parse_octavic(text).unwrap());
        println!("{text}\n  {}", cover_report_octavic(&v).unwrap());
    }

    for t in [SingularType::new(1, 0), SingularType::new(0, 1)] {
        println!("elliptic fibration for {t}: {}", fibration_fibers(t).unwrap());
    }
}
