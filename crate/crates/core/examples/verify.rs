//! Every reproducibility check in one run; the same report as
//! `quartic-k3 verify`.

use quartic_k3::verify::run_all;

fn main() {
    let report = run_all();
    println!("{report}");
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
