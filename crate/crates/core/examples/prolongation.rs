//! The prolongation over the bundle projection with vertical and complete lifts.

use std::sync::Arc;

use lie_algebroid::catalogue;
use lie_algebroid::complex::{nijenhuis, Endo};
use lie_algebroid::constructions::{clift_endo, prolong};

fn main() {
    let so3 = Arc::new(catalogue::so3());
    let p = prolong(&so3).unwrap();
    let t = p.total();
    println!(
        "prolongation of so(3): rank {} over ({}), verified {}",
        t.rank(),
        t.ring().names().join(", "),
        t.is_verified()
    );
    let (s, u) = (so3.mv(&[0, 1]), so3.e(0));
    println!("(e1^e2)^c = {}", p.clift(&s));
    println!("[e1^e2, e1]^c = {}", p.clift(&so3.schouten(&s, &u)));
    println!(
        "[(e1^e2)^c, e1^c] = {}",
        t.schouten(&p.clift(&s), &p.clift(&u))
    );

    let h = Arc::new(catalogue::heisenberg());
    let j = Endo::standard(h.clone()).unwrap();
    let ph = prolong(&h).unwrap();
    let jc = clift_endo(&ph, &j).unwrap();
    println!(
        "\nheisenberg: J^c almost complex: {}, N_J = 0: {}, N_J^c = 0: {}",
        jc.is_almost_complex(),
        nijenhuis(&j).is_zero(),
        nijenhuis(&jc).is_zero()
    );
}
