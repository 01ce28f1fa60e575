//! Local classification of singular points, including conjugate points over a
//! number field and the admissibility of tacnodes.

use quartic_k3::quartic::{classify_singularity, parse_quartic, singular_points};

fn main() {
    // two nodes at the conjugate points (±i : 1 : 0) and more
    for text in ["(x^2 + y^2 - z^2)*(x^2 + 2*y^2 - 3*z^2)", "(x^2 + y^2 + z^2)*(x^2 + y^2 + 2*z^2)", "y^2*z^2 - x^4"] {
        let f = parse_quartic(text).unwrap();
        println!("{text}");
        for s in singular_points(&f).unwrap() {
            let field = s.point.coords[0].field().degree();
            println!("  {s}  [field degree {field}]");
        }
    }

    let f = parse_quartic("(y*z + x^2)^2 + x*y^3").unwrap();
    let p = &singular_points(&f).unwrap()[0].point;
    let report = classify_singularity(&f, p).unwrap();
    println!("\n{report}, weight-four part {:?}", report.weight_four);
}
