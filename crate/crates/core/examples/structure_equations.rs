//! Builds catalogue algebroids, verifies the structure equations and shows a failing instance.

use lie_algebroid::catalogue;

fn main() {
    for alg in catalogue::standard() {
        println!(
            "{:<12} rank {} over ({}): {}",
            alg.name(),
            alg.rank(),
            alg.ring().names().join(", "),
            alg.verification_report()
        );
    }
    // [e1,e2] = e3, [e2,e3] = e3, [e1,e3] = e1 violates Jacobi.
    let mut bad = catalogue::lie_algebra("broken", 3, &[(0, 1, 2, 1), (1, 2, 2, 1), (0, 2, 0, 1)]);
    let report = bad.verify();
    println!("\n{}:\n{}", bad.name(), report);
}
