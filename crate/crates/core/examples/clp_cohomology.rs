//! Dimensions of the cohomology of sigma^11 for constant ACP structures.

use lie_algebroid::poisson::clp_cohomology;
use lie_algebroid::properties::standard_instances;

fn main() {
    for inst in standard_instances()
        .into_iter()
        .filter(|i| i.name() == "abelian4" || i.name() == "heisenberg")
    {
        let (j, pi20) = (&inst.complex[0], inst.pi20.as_ref().unwrap());
        println!("{}:", inst.name());
        for p in 0..=2 {
            let dims: Vec<String> = (0..=2)
                .map(|q| clp_cohomology(j, pi20, p, q).unwrap().dimension.to_string())
                .collect();
            println!("  p = {}: {}", p, dims.join(" "));
        }
    }
}
