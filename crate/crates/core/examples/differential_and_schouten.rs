//! The differential d_E, the Schouten bracket and the anchor on so(3) and the 3-sphere.

use lie_algebroid::catalogue;
use lie_algebroid::random::Sampler;

fn main() {
    let so3 = catalogue::so3();
    let pi = so3.mv(&[0, 1]);
    println!("so(3): d e^1 = {}", so3.d(&so3.th(0)));
    println!("so(3): [e1^e2, e1^e2] = {}", so3.schouten(&pi, &pi));
    println!("so(3): [e3, e1^e2] = {}", so3.schouten(&so3.e(2), &pi));

    let s3 = catalogue::sphere(2);
    let x1 = s3.ring().names()[0].clone();
    println!(
        "\nsphere n = 2: anchor of e1 = {:?}",
        s3.anchor_of(&s3.e(0))
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "sphere n = 2: [e1, e2] = {}",
        s3.bracket(&s3.e(0), &s3.e(1))
    );
    let f = lie_algebroid::scalar::parse_scalar(s3.ring(), &format!("{}^2", x1)).unwrap();
    println!("sphere n = 2: d({}^2) = {}", x1, s3.df(&f));

    let mut sm = Sampler::new(&s3, 1).with_degree(2);
    let w = sm.form(1);
    println!(
        "\nrandom w = {}\nd w = {}\nd d w = {}",
        w,
        s3.d(&w),
        s3.d(&s3.d(&w))
    );
}
