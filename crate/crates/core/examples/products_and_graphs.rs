//! Direct products of ACP algebroids and the graph theorem for ACP morphisms.

use std::sync::Arc;

use lie_algebroid::algebroid::Morphism;
use lie_algebroid::constructions::{direct_product, graph_theorem_check};
use lie_algebroid::linalg::SMatrix;
use lie_algebroid::properties::standard_instances;

fn main() {
    let inst = standard_instances();
    let ab = inst.iter().find(|i| i.name() == "abelian4").unwrap();
    let he = inst.iter().find(|i| i.name() == "heisenberg").unwrap();
    let prod = direct_product(&ab.algebroid, &he.algebroid).unwrap();
    let (_, _, check) = prod
        .acp_data(
            (&ab.complex[0], ab.pi20.as_ref().unwrap()),
            (&he.complex[0], he.pi20.as_ref().unwrap()),
        )
        .unwrap();
    println!(
        "{}: rank {}, product structure ACP: {}",
        prod.algebroid.name(),
        prod.algebroid.rank(),
        check.is_acp()
    );

    let a: Arc<_> = ab.algebroid.clone();
    let (j, pi) = (&ab.complex[0], ab.pi20.as_ref().unwrap());
    let rotation = SMatrix::from_ints(
        a.ring(),
        &[
            vec![0, -1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, -1, 0],
        ],
    );
    let conjugation = SMatrix::from_ints(
        a.ring(),
        &[
            vec![1, 0, 0, 0],
            vec![0, -1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, -1],
        ],
    );
    for (name, m) in [
        ("identity", SMatrix::identity(a.ring(), 4)),
        ("rotation", rotation),
        ("conjugation", conjugation),
    ] {
        let phi = Morphism::new(a.clone(), a.clone(), m).unwrap();
        let rep = graph_theorem_check(&phi, (j, pi), (j, pi)).unwrap();
        println!(
            "{:<12} ACP morphism {:<5} graph coisotropic {:<5} agree {}",
            name,
            rep.acp_morphism,
            rep.graph_coisotropic,
            rep.agrees()
        );
    }
}
