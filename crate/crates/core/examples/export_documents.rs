//! Writes JSON documents for catalogue algebroids with named structures attached.
//!
//! Usage: `cargo run --example export_documents [OUT_DIR]` (default: print to stdout).

use std::sync::Arc;

use lie_algebroid::catalogue;
use lie_algebroid::complex::Endo;
use lie_algebroid::io::{algebroid_doc, matrix_rows, sparse_terms, AlgebroidDoc, MorphismDoc};
use lie_algebroid::linalg::SMatrix;
use lie_algebroid::scalar::Scalar;
use lie_algebroid::tensor::Multivector;

/// `e_{2k} - i J e_{2k}`, a holomorphic frame vector.
fn holo(j: &Endo, k: usize) -> Multivector {
    let e = j.parent().e(2 * k);
    e.sub(&j.apply(&e).scale(&Scalar::i(j.parent().ring())))
}

fn paired_acp(name: &str) -> AlgebroidDoc {
    let alg = Arc::new(catalogue::by_name(name).expect("catalogue name"));
    let j = Endo::paired(alg.clone()).expect("even rank");
    let mut doc = algebroid_doc(&alg);
    doc.endomorphisms
        .insert("J".into(), matrix_rows(j.matrix()));
    doc.multivectors.insert(
        "pi20".into(),
        sparse_terms(&holo(&j, 0).wedge(&holo(&j, 1))),
    );
    doc
}

fn documents() -> Vec<(String, AlgebroidDoc)> {
    let mut out = Vec::new();

    let so3 = Arc::new(catalogue::so3());
    let mut doc = algebroid_doc(&so3);
    for a in 0..3 {
        doc.multivectors
            .insert(format!("e{}", a + 1), sparse_terms(&so3.e(a)));
    }
    let pi12 = so3.e(0).wedge(&so3.e(1));
    doc.multivectors.insert("pi12".into(), sparse_terms(&pi12));
    let f = lie_algebroid::poisson::GeneralBisection::from_bivector(so3.clone(), &pi12)
        .expect("bivector");
    doc.bisections
        .insert("pi12".into(), matrix_rows(f.matrix()));
    out.push(("so3".to_string(), doc));

    let mut doc = paired_acp("abelian4");
    let ring = catalogue::abelian(4).ring().clone();
    doc.morphisms.insert(
        "id".into(),
        MorphismDoc {
            matrix: matrix_rows(&SMatrix::identity(&ring, 4)),
        },
    );
    let shear = SMatrix::from_ints(
        &ring,
        &[
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ],
    );
    doc.morphisms.insert(
        "shear".into(),
        MorphismDoc {
            matrix: matrix_rows(&shear),
        },
    );
    out.push(("abelian4".to_string(), doc));

    out.push(("heisenberg".to_string(), paired_acp("heisenberg")));

    for n in 1..=2 {
        let alg = Arc::new(catalogue::sphere(n));
        let j = Endo::standard(alg.clone()).expect("sphere frame has even rank");
        let mut doc = algebroid_doc(&alg);
        doc.endomorphisms
            .insert("J".into(), matrix_rows(j.matrix()));
        doc.bisections.insert("Jt".into(), matrix_rows(j.matrix()));
        out.push((format!("sphere{}", n), doc));
    }
    out
}

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1);
    for (name, doc) in documents() {
        match &dir {
            Some(d) => std::fs::write(format!("{}/{}.json", d, name), doc.to_json() + "\n")?,
            None => println!("{}", doc.to_json()),
        }
    }
    Ok(())
}
