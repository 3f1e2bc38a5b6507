//! Almost complex structures: bigrading, the Nijenhuis tensor and the integrability report.

use std::sync::Arc;

use lie_algebroid::catalogue;
use lie_algebroid::complex::{bigrade, integrability_report, nijenhuis, Endo};

fn main() {
    let h = Arc::new(catalogue::heisenberg());
    for (label, j) in [
        ("paired", Endo::paired(h.clone()).unwrap()),
        ("standard", Endo::standard(h.clone()).unwrap()),
    ] {
        println!(
            "heisenberg, {} J: J^2 = -1: {}",
            label,
            j.is_almost_complex()
        );
        println!("N_J:\n{}", nijenhuis(&j));
        println!("{}\n", integrability_report(&j).unwrap());
    }
    let s = Arc::new(catalogue::sphere(1));
    let j = Endo::standard(s.clone()).unwrap();
    let t = s.e(0).wedge(&s.e(1));
    for ((p, q), part) in &bigrade(&j, &t).components {
        println!("sphere n = 1: ({},{}) part of e1^e2 = {}", p, q, part);
    }
}
