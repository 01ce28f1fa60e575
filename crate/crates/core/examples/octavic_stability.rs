//! Binary octavics: root multiplicities, SL2 stability and the singularities
//! of the branch curve on the quadric cone.

use quartic_k3::octavic::{multiplicities, octavic_stability, parse_octavic};

fn main() {
    for text in [
        "x^8 + y^8",
        "x^2*(x - y)^2*(x + y)^2*y^2",
        "(x^2 + y^2)^3*(x - 2*y)*y",
        "x^4*y^4",
        "(x^2 + y^2)^4",
        "x^4*(x^4 + y^4)",
        "x^5*y^3",
    ] {
        let f = parse_octavic(text).unwrap();
        let v = octavic_stability(&f);
        println!("{text:<30} {:?}  {v}", v.profile);
        for r in multiplicities(&f).factors.iter().filter(|r| r.multiplicity > 1) {
            println!("    ({})^{}", r.factor, r.multiplicity);
        }
        for w in &v.witnesses {
            println!("    cone curve {} over {} = 0", w.kind, w.root.factor);
        }
    }
}
