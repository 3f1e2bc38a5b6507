//! Runs the seeded property suites: `cargo run --example property_suites [SEED]`.

use lie_algebroid::properties::{run_all, standard_instances, SuiteSizes};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(lie_algebroid::cli::DEFAULT_SEED);
    for o in run_all(&standard_instances(), SuiteSizes::default(), seed) {
        println!("{}", o);
    }
}
