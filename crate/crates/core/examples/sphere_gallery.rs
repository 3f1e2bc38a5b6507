//! The sphere family: reference formulas, the n = 2 matrix, the compatibility dichotomy and
//! foliation ranks.

use lie_algebroid::gallery::{
    foliation_rank_survey, golden_check, reproduce_n2_matrix, SphereInstance,
};

fn main() {
    for n in 1..=3 {
        println!("{}", golden_check(n).unwrap());
    }
    let m = reproduce_n2_matrix().unwrap();
    println!("n = 2 matrix:");
    for r in m.to_rows() {
        println!(
            "  [{}]",
            r.iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    for n in 1..=3 {
        println!(
            "{}",
            SphereInstance::new(n).unwrap().compat_report().unwrap()
        );
        println!(
            "foliation ranks: {:?}",
            foliation_rank_survey(n, 25, 7).unwrap()
        );
    }
}
