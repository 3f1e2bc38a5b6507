//! Built-in algebroids used by the examples, tests and the CLI.

use std::sync::Arc;

use crate::algebroid::Algebroid;
use crate::linalg::SMatrix;
use crate::scalar::{CoordinateRing, Scalar};

fn point_ring() -> Arc<CoordinateRing> {
    CoordinateRing::free::<&str>(&[])
}

/// Lie algebra over a point from integer constants `(a, b, c, value)` meaning `C^c_{ab}`, `a < b`.
pub fn lie_algebra(name: &str, rank: usize, consts: &[(usize, usize, usize, i128)]) -> Algebroid {
    let ring = point_ring();
    let anchor = SMatrix::zeros(&ring, rank, 0);
    Algebroid::new(name, &ring, rank, anchor, |a, b, c| {
        consts
            .iter()
            .filter(|&&(x, y, z, _)| (x, y, z) == (a, b, c))
            .map(|&(_, _, _, v)| Scalar::int(&ring, v))
            .fold(Scalar::zero(&ring), |acc, v| &acc + &v)
    })
    .expect("shapes are consistent")
}

/// Abelian Lie algebra of dimension `m` over a point.
pub fn abelian(m: usize) -> Algebroid {
    lie_algebra(&format!("abelian{}", m), m, &[])
}

/// `so(3)` with `[e_a, e_b] = eps_{abc} e_c`.
pub fn so3() -> Algebroid {
    lie_algebra("so3", 3, &[(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)])
}

/// `sl(2)` in the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> Algebroid {
    lie_algebra("sl2", 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

/// Heisenberg algebra plus a central line: `[e1, e2] = e3`, rank 4.
pub fn heisenberg() -> Algebroid {
    lie_algebra("heisenberg", 4, &[(0, 1, 2, 1)])
}

/// Tangent algebroid of `R^4` with coordinates `x1..x4` (identity anchor, zero brackets).
pub fn tangent_r4() -> Algebroid {
    let ring = CoordinateRing::free(&["x1", "x2", "x3", "x4"]);
    let anchor = SMatrix::identity(&ring, 4);
    Algebroid::new("tr4", &ring, 4, anchor, |_, _, _| Scalar::zero(&ring))
        .expect("shapes are consistent")
}

/// Ring of `S^{2n-1}` with coordinates `x1..x{2n}`, the last one distinguished.
pub fn sphere_ring(n: usize) -> Arc<CoordinateRing> {
    let names: Vec<String> = (1..=2 * n).map(|k| format!("x{}", k)).collect();
    CoordinateRing::sphere(&names)
}

/// Algebroid of rank `2n` over `S^{2n-1}`: anchor `delta^i_a - x^a x^i`,
/// `C^c_{ab} = -x^b delta^c_a + x^a delta^c_b`.
pub fn sphere(n: usize) -> Algebroid {
    assert!(n >= 1, "sphere family starts at n = 1");
    let ring = sphere_ring(n);
    let m = 2 * n;
    let x = |k: usize| Scalar::var(&ring, k);
    let anchor = SMatrix::from_fn(&ring, m, m, |a, i| {
        let d = if a == i {
            Scalar::one(&ring)
        } else {
            Scalar::zero(&ring)
        };
        &d - &(&x(a) * &x(i))
    });
    Algebroid::new(&format!("sphere{}", n), &ring, m, anchor, |a, b, c| {
        let mut v = Scalar::zero(&ring);
        if c == a {
            v = &v - &x(b);
        }
        if c == b {
            v = &v + &x(a);
        }
        v
    })
    .expect("shapes are consistent")
}

/// Looks up a catalogue algebroid by name (`abelian4`, `so3`, `sl2`, `heisenberg`, `tr4`, `sphere2`, ...).
pub fn by_name(name: &str) -> Option<Algebroid> {
    if let Some(m) = name.strip_prefix("abelian") {
        return m.parse().ok().map(abelian);
    }
    if let Some(n) = name.strip_prefix("sphere") {
        return n.parse().ok().filter(|&n: &usize| n >= 1).map(sphere);
    }
    match name {
        "so3" => Some(so3()),
        "sl2" => Some(sl2()),
        "heisenberg" => Some(heisenberg()),
        "tr4" => Some(tangent_r4()),
        _ => None,
    }
}

/// The verified instances used by the property suites.
pub fn standard() -> Vec<Algebroid> {
    vec![abelian(4), heisenberg(), so3(), sl2(), sphere(1), sphere(2)]
}
