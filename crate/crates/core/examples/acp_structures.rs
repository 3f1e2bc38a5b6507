//! Almost complex Poisson structures: the ACP test, real parts, sigma operators and
//! Hamiltonian sections.

use lie_algebroid::poisson::{hamiltonian_section, is_acp, real_parts, sigma, Sigma};
use lie_algebroid::properties::standard_instances;
use lie_algebroid::scalar::parse_scalar;

fn main() {
    let inst = standard_instances()
        .into_iter()
        .find(|i| i.name() == "tr4")
        .unwrap();
    let (j, pi20) = (&inst.complex[0], inst.pi20.as_ref().unwrap());
    let alg = j.parent();
    println!("pi20 = {}", pi20);
    let c = is_acp(j, pi20).unwrap();
    println!(
        "[pi20, pi20] = {}, [pi20, conj pi20] = {}, ACP: {}",
        c.self_bracket,
        c.mixed_bracket,
        c.is_acp()
    );
    let (re, im) = real_parts(pi20);
    println!("real parts:\n  {}\n  {}", re, im);
    let s = alg.e(0).wedge(&alg.e(2));
    println!("sigma^1(e1^e3) = {}", sigma(j, pi20, &s, Sigma::One));
    let f = parse_scalar(alg.ring(), "x2*x4").unwrap();
    println!(
        "Hamiltonian section of x2*x4: {}",
        hamiltonian_section(j, pi20, &f)
    );
}
