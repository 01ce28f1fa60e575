//! GIT stability of plane quartics with the singular points that decide it.

use quartic_k3::quartic::{git_stability, parse_quartic};

fn main() {
    let curves = [
        "x^4 + y^4 + z^4",
        "y^2*z^2 - x^2*z^2 + x^4 + y^4",
        "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
        "x*y*(x + y - z)*(x - y + 2*z)",
        "(y*z - x^2)*(y*z + x^2)",
        "(y*z - x^2)*y*(y - z)",
        "(x^2 + y^2 + z^2)^2",
        "(y*z + x^2)^2 + x*y^3",
        "x^3*z + y^4",
        "z*(y^2*z - x^3 + x*z^2)",
    ];
    for text in curves {
        let f = parse_quartic(text).unwrap();
        let v = git_stability(&f).unwrap();
        match v.singular_type() {
            Some(t) => println!("{text}\n  {v}, type {t}"),
            None => println!("{text}\n  {v}"),
        }
        for w in &v.witnesses {
            println!("    {w}");
        }
        for n in &v.notes {
            println!("    note: {n}");
        }
    }
}
