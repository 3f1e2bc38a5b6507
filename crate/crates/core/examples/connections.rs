//! Linear connections, horizontal lifts and the identity R = -N_h on the prolongation.

use std::sync::Arc;

use lie_algebroid::catalogue;
use lie_algebroid::complex::nijenhuis;
use lie_algebroid::constructions::{hlift, horizontal_projector, prolong, Connection};
use lie_algebroid::scalar::{GaussRational, Rational};

fn main() {
    let so3 = Arc::new(catalogue::so3());
    // nabla_{e_a} e_c = (1/2) [e_a, e_c]
    let half = GaussRational::new(Rational::new(1, 2), Rational::from_integer(0));
    let conn = Connection::from_fn(so3.clone(), |a, c, b| so3.c(a, c, b).scale(&half));
    let (e1, e2, e3) = (so3.e(0), so3.e(1), so3.e(2));
    println!("T(e1, e2) = {}", conn.torsion(&e1, &e2));
    println!("R(e1, e2) e3 = {}", conn.curvature(&e1, &e2, &e3));

    let p = prolong(&so3).unwrap();
    let t = p.total();
    let (h1, h2) = (hlift(&p, &conn, &e1), hlift(&p, &conn, &e2));
    println!("e1^h = {}", h1);
    println!("[e1^h, e2^h] = {}", t.bracket(&h1, &h2));
    let rv = p.fiber_linear_vlift(&conn.curvature_images(&e1, &e2));
    println!(
        "[e1,e2]^h - (R u)^v = {}",
        hlift(&p, &conn, &so3.bracket(&e1, &e2)).sub(&rv)
    );
    let nh = nijenhuis(&horizontal_projector(&p, &conn));
    println!("-N_h(e1^h, e2^h) = {}", nh.eval(t, &h1, &h2).neg());
}
