//! General bisections, the deformed bracket, the concomitant and Poisson-Nijenhuis compatibility.

use std::fmt;

use crate::complex::{nijenhuis, Endo};
use crate::error::{Error, Result};
use crate::tensor::Form;

use super::{bracket_with, GeneralBisection};

/// `[w, t]_F = L_{F^# w} t - L_{F^# t} w - d_E(F(w, t))`; not skew unless `F` is.
pub fn general_bracket(f: &GeneralBisection, w: &Form, t: &Form) -> Form {
    bracket_with(f.parent(), &|x| f.sharp(x), w, t)
}

/// `[G*w, t]_F + [w, G*t]_F - G*[w, t]_F`, where `G*` acts on coframe columns by `G`.
pub fn deformed_bracket(f: &GeneralBisection, g: &Endo, w: &Form, t: &Form) -> Form {
    let a = general_bracket(f, &g.coframe_action(w), t);
    let b = general_bracket(f, w, &g.coframe_action(t));
    let c = g.coframe_action(&general_bracket(f, w, t));
    a.add(&b).sub(&c)
}

/// Values `C(F,G)(e^a, e^b) = [e^a, e^b]^G_F - [e^a, e^b]_{FG}` on all ordered coframe pairs.
#[derive(Clone, Debug)]
pub struct Concomitant {
    pub rank: usize,
    pub values: Vec<Form>,
}

impl Concomitant {
    pub fn at(&self, a: usize, b: usize) -> &Form {
        &self.values[a * self.rank + b]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// First nonvanishing entry, 0-based.
    pub fn witness(&self) -> Option<(usize, usize, &Form)> {
        self.values
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.rank, k % self.rank, v))
    }
}

impl fmt::Display for Concomitant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "C(F,G) = 0");
        }
        for a in 0..self.rank {
            for b in 0..self.rank {
                let v = self.at(a, b);
                if !v.is_zero() {
                    writeln!(f, "C(F,G)(E{}, E{}) = {}", a + 1, b + 1, v)?;
                }
            }
        }
        Ok(())
    }
}

pub fn concomitant(f: &GeneralBisection, g: &Endo) -> Concomitant {
    let alg = f.parent();
    let m = alg.rank();
    let fg = f.compose(g);
    let values = (0..m * m)
        .map(|k| {
            let (w, t) = (alg.th(k / m), alg.th(k % m));
            deformed_bracket(f, g, &w, &t).sub(&general_bracket(&fg, &w, &t))
        })
        .collect();
    Concomitant { rank: m, values }
}

#[derive(Clone, Debug)]
pub struct CompatReport {
    /// `[F, F]`; compatibility is only meaningful when it vanishes.
    pub poisson_residual: crate::tensor::Multivector,
    /// `G o F^# = F^# o G*` as matrices.
    pub sharp_commutes: bool,
    pub concomitant: Concomitant,
}

impl CompatReport {
    pub fn is_compatible(&self) -> bool {
        self.poisson_residual.is_zero() && self.sharp_commutes && self.concomitant.is_zero()
    }
}

/// Compatibility of a bisection with a Nijenhuis-flat endomorphism.
///
/// A skew `F` with `[F, F] != 0` is reported as incompatible, with the residual and the
/// concomitant still filled in, rather than rejected.
pub fn is_compatible(f: &GeneralBisection, g: &Endo) -> Result<CompatReport> {
    let pc = f
        .is_poisson()
        .map_err(|e| Error::PreconditionFailed(format!("F is not a bisection: {}", e)))?;
    let n = nijenhuis(g);
    if !n.is_zero() {
        return Err(Error::PreconditionFailed(format!(
            "G has nonzero Nijenhuis tensor: {}",
            n
        )));
    }
    // G* acts by the matrix G on coframe columns, so F^# o G* is the product F G.
    let sharp_commutes = g.matrix().mul(f.matrix()) == f.matrix().mul(g.matrix());
    Ok(CompatReport {
        poisson_residual: pc.residual,
        sharp_commutes,
        concomitant: concomitant(f, g),
    })
}

/// Alias of [`is_compatible`]: `(E, F, G)` is Poisson-Nijenhuis iff the report is compatible.
pub fn is_poisson_nijenhuis(f: &GeneralBisection, g: &Endo) -> Result<CompatReport> {
    is_compatible(f, g)
}
