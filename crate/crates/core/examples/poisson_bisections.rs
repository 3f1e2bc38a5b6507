//! Poisson bisections: the Jacobi residual, sharp map, form bracket, dual algebroid and the
//! Lichnerowicz differential.

use std::sync::Arc;

use lie_algebroid::catalogue;
use lie_algebroid::complex::Endo;
use lie_algebroid::poisson::{
    dual_algebroid, form_bracket, is_poisson, lichnerowicz_d, sharp, GeneralBisection,
};

fn main() {
    let so3 = catalogue::so3();
    let pi = so3.mv(&[0, 1]);
    println!(
        "so(3): [pi, pi] for pi = e1^e2: {}",
        is_poisson(&so3, &pi).unwrap().residual
    );

    let s = Arc::new(catalogue::sphere(1));
    let j = Endo::standard(s.clone()).unwrap();
    let f = GeneralBisection::new(s.clone(), j.matrix().clone()).unwrap();
    let pi = f.to_bivector().unwrap();
    println!(
        "\nsphere n = 1: J~ = {}, Poisson: {}",
        pi,
        f.is_poisson().unwrap().is_poisson()
    );
    println!("sharp(e^1) = {}", sharp(&pi, &s.th(0)));
    println!(
        "[e^1, e^2]_pi = {}",
        form_bracket(&s, &pi, &s.th(0), &s.th(1))
    );
    let dual = dual_algebroid(&s, &pi).unwrap();
    println!("dual algebroid verified: {}", dual.algebroid.is_verified());
    println!("d_pi(e1) = {}", lichnerowicz_d(&s, &pi, &s.e(0)).unwrap());
}
