//! The sphere family `E = S^{2n-1} x R^{2n}` with `J = J~ = J0`, and exact reproduction of its
//! reference formulas from a golden data file.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebroid::Algebroid;
use crate::catalogue;
use crate::complex::{nijenhuis, Endo};
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::poisson::{
    deformed_bracket, distribution_rank, general_bracket, is_compatible, CompatReport,
    GeneralBisection,
};
use crate::scalar::{parse_scalar, sample_points, Scalar};
use crate::tensor::Form;

/// The golden formulas shipped with the crate.
pub const GOLDEN: &str = include_str!("../data/sphere_golden.txt");

#[derive(Clone, Debug)]
pub struct SphereInstance {
    pub n: usize,
    pub algebroid: Arc<Algebroid>,
    pub j: Endo,
    pub jtilde: GeneralBisection,
}

/// Structure checks run on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereChecks {
    pub structure_equations: bool,
    pub jtilde_poisson: bool,
    pub j_integrable: bool,
}

impl SphereInstance {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::PreconditionFailed(
                "the sphere family starts at n = 1".into(),
            ));
        }
        let algebroid = Arc::new(catalogue::sphere(n));
        let j = Endo::standard(algebroid.clone())?;
        let jtilde = GeneralBisection::new(algebroid.clone(), j.matrix().clone())?;
        Ok(SphereInstance {
            n,
            algebroid,
            j,
            jtilde,
        })
    }

    pub fn checks(&self) -> Result<SphereChecks> {
        Ok(SphereChecks {
            structure_equations: self.algebroid.verification_report().is_ok(),
            jtilde_poisson: self.jtilde.is_poisson()?.is_poisson(),
            j_integrable: nijenhuis(&self.j).is_zero(),
        })
    }

    /// `C(J~, J)` and `C(-J~, J)`.
    pub fn compat_report(&self) -> Result<SphereCompat> {
        let plus = is_compatible(&self.jtilde, &self.j)?;
        let minus = is_compatible(&self.jtilde.neg(), &self.j)?;
        let alg = &self.algebroid;
        let n = self.n;
        // the reference -2 delta sum_g (x^g e^{g+n} - x^{g+n} e^g) term
        let mut term = alg.zero_form(1);
        for g in 0..n {
            let xg = Scalar::var(alg.ring(), g);
            let xgn = Scalar::var(alg.ring(), g + n);
            term = term
                .add(&alg.th(g + n).scale(&xg))
                .sub(&alg.th(g).scale(&xgn));
        }
        let expected_defect = term.scale(&Scalar::int(alg.ring(), -2));
        Ok(SphereCompat {
            n,
            defect_matches: plus.concomitant.at(0, n) == &expected_defect
                && minus.concomitant.at(0, n) == &expected_defect.neg(),
            expected_defect,
            plus,
            minus,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SphereCompat {
    pub n: usize,
    pub plus: CompatReport,
    pub minus: CompatReport,
    /// `-2 sum_g (x^g e^{g+n} - x^{g+n} e^g)`, the value expected at `(e^1, e^{1+n})` for `+J~`.
    pub expected_defect: Form,
    pub defect_matches: bool,
}

impl fmt::Display for SphereCompat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        writeln!(f, "n = {}", n)?;
        for (label, r) in [("+J~", &self.plus), ("-J~", &self.minus)] {
            writeln!(
                f,
                "  ({}, J): compatible = {}, [F,F] = 0: {}, sharp commutes: {}",
                label,
                r.is_compatible(),
                r.poisson_residual.is_zero(),
                r.sharp_commutes
            )?;
            writeln!(f, "    C(e^1, e^{}) = {}", 1 + n, r.concomitant.at(0, n))?;
        }
        write!(
            f,
            "  defect matches the reference term: {}",
            self.defect_matches
        )
    }
}

/// `A J0 A^t` for `n = 2`, `A` the first three rows of `I - v v^t`.
pub fn reproduce_n2_matrix() -> Result<SMatrix> {
    let s = SphereInstance::new(2)?;
    let anchor = s.algebroid.anchor();
    let ring = s.algebroid.ring();
    let a = SMatrix::from_fn(ring, 3, 4, |r, c| anchor.get(r, c).clone());
    Ok(a.mul(s.jtilde.matrix()).mul(&a.transpose()))
}

/// Histogram of `distribution_rank` over `count` stereographic rational points.
pub fn foliation_rank_survey(n: usize, count: usize, seed: u64) -> Result<BTreeMap<usize, usize>> {
    if count == 0 {
        return Err(Error::PreconditionFailed(
            "at least one point is needed".into(),
        ));
    }
    let s = SphereInstance::new(n)?;
    let pts = sample_points(s.algebroid.ring(), count, seed)?;
    let mut hist = BTreeMap::new();
    for r in distribution_rank(&s.jtilde, &pts)? {
        *hist.entry(r).or_insert(0) += 1;
    }
    Ok(hist)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Basis {
    Section,
    Coframe,
}

#[derive(Clone, Debug)]
struct Term {
    coef: i128,
    delta: bool,
    sum_g: bool,
    coord: String,
    basis: Basis,
    index: String,
}

#[derive(Clone, Debug)]
enum Line {
    Formula {
        family: String,
        left: (Basis, String),
        right: (Basis, String),
        terms: Vec<Term>,
    },
    Matrix {
        row: usize,
        col: usize,
        value: String,
    },
}

fn parse_basis(tok: &str) -> Result<(Basis, String)> {
    if let Some(i) = tok.strip_prefix("e_") {
        Ok((Basis::Section, i.to_string()))
    } else if let Some(i) = tok.strip_prefix("e^") {
        Ok((Basis::Coframe, i.to_string()))
    } else {
        Err(Error::Parse(format!("expected e_I or e^I, got `{}`", tok)))
    }
}

fn parse_term(src: &str) -> Result<Term> {
    let toks: Vec<&str> = src.split_whitespace().collect();
    let bad = || Error::Parse(format!("malformed term `{}`", src.trim()));
    let coef: i128 = toks.first().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let mut k = 1;
    let delta = toks.get(k) == Some(&"delta");
    k += delta as usize;
    let sum_g = toks.get(k) == Some(&"sum_g");
    k += sum_g as usize;
    let coord = toks
        .get(k)
        .and_then(|t| t.strip_prefix("x_"))
        .ok_or_else(bad)?
        .to_string();
    let (basis, index) = parse_basis(toks.get(k + 1).ok_or_else(bad)?)?;
    if toks.len() != k + 2 {
        return Err(bad());
    }
    Ok(Term {
        coef,
        delta,
        sum_g,
        coord,
        basis,
        index,
    })
}

fn parse_golden(src: &str) -> Result<Vec<Line>> {
    let mut out = Vec::new();
    for (no, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, value) = line
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("golden line {}: missing `|`", no + 1)))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        if head.len() != 3 {
            return Err(Error::Parse(format!(
                "golden line {}: expected `family left right`",
                no + 1
            )));
        }
        if head[0] == "matrix" {
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("golden line {}: bad index", no + 1)))
            };
            out.push(Line::Matrix {
                row: num(head[1])?,
                col: num(head[2])?,
                value: value.trim().to_string(),
            });
        } else {
            out.push(Line::Formula {
                family: head[0].to_string(),
                left: parse_basis(head[1])?,
                right: parse_basis(head[2])?,
                terms: value.split(';').map(parse_term).collect::<Result<_>>()?,
            });
        }
    }
    Ok(out)
}

/// 1-based value of `a`, `b`, `g`, optionally followed by `+n`.
fn resolve(idx: &str, a: usize, b: usize, g: usize, n: usize) -> Result<usize> {
    let (base, shift) = match idx.strip_suffix("+n") {
        Some(s) => (s, n),
        None => (idx, 0),
    };
    let v = match base {
        "a" => a,
        "b" => b,
        "g" => g,
        _ => return Err(Error::Parse(format!("unknown index `{}`", idx))),
    };
    Ok(v + shift)
}

/// One instantiated formula.
#[derive(Clone, Debug)]
pub struct GoldenEntry {
    pub family: String,
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct GoldenReport {
    pub n: usize,
    pub checks: SphereChecks,
    pub entries: Vec<GoldenEntry>,
}

impl GoldenReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &GoldenEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }

    pub fn formulas_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn all_ok(&self) -> bool {
        self.formulas_ok()
            && self.checks.structure_equations
            && self.checks.jtilde_poisson
            && self.checks.j_integrable
    }

    /// Number of formulas checked per family.
    pub fn family_counts(&self) -> BTreeMap<String, (usize, usize)> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            let slot = out.entry(e.family.clone()).or_insert((0, 0));
            slot.0 += e.ok as usize;
            slot.1 += 1;
        }
        out
    }
}

impl fmt::Display for GoldenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(
            f,
            "  structure equations: {}",
            verdict(self.checks.structure_equations)
        )?;
        writeln!(f, "  J~ Poisson: {}", verdict(self.checks.jtilde_poisson))?;
        writeln!(f, "  N_J = 0: {}", verdict(self.checks.j_integrable))?;
        for (family, (ok, total)) in self.family_counts() {
            writeln!(f, "  {:<9} {}/{} formulas match", family, ok, total)?;
        }
        for e in self.mismatches() {
            writeln!(
                f,
                "  MISMATCH {} {}: expected {}, got {}",
                e.family, e.label, e.expected, e.actual
            )?;
        }
        Ok(())
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "FAILED"
    }
}

fn basis_label(b: Basis, k: usize) -> String {
    match b {
        Basis::Section => format!("e{}", k),
        Basis::Coframe => format!("E{}", k),
    }
}

/// Instantiates every formula of `golden` for the given `n` and compares it with the calculus.
pub fn golden_check_with(n: usize, golden: &str) -> Result<GoldenReport> {
    let s = SphereInstance::new(n)?;
    let alg = &s.algebroid;
    let ring = alg.ring();
    let lines = parse_golden(golden)?;
    let jj = s.jtilde.compose(&s.j);
    let mut entries = Vec::new();
    for line in &lines {
        match line {
            Line::Formula {
                family,
                left,
                right,
                terms,
            } => {
                for a in 1..=n {
                    for b in 1..=n {
                        let (l, r) = (
                            resolve(&left.1, a, b, 0, n)?,
                            resolve(&right.1, a, b, 0, n)?,
                        );
                        let mut expected = vec![Scalar::zero(ring); 2 * n];
                        let mut out_basis = None;
                        for t in terms {
                            if t.delta && a != b {
                                continue;
                            }
                            let gs: Vec<usize> = if t.sum_g { (1..=n).collect() } else { vec![0] };
                            for g in gs {
                                let x = resolve(&t.coord, a, b, g, n)?;
                                let k = resolve(&t.index, a, b, g, n)?;
                                let c = &Scalar::var(ring, x - 1) * &Scalar::int(ring, t.coef);
                                expected[k - 1] = &expected[k - 1] + &c;
                            }
                            out_basis = Some(t.basis);
                        }
                        let actual = match (family.as_str(), left.0, right.0) {
                            ("bracket", Basis::Section, Basis::Section) => {
                                alg.bracket(&alg.e(l - 1), &alg.e(r - 1)).vector()
                            }
                            ("lie", Basis::Section, Basis::Coframe) => alg
                                .lie_derivative_form(&alg.e(l - 1), &alg.th(r - 1))
                                .vector(),
                            ("jtilde", Basis::Coframe, Basis::Coframe) => {
                                general_bracket(&s.jtilde, &alg.th(l - 1), &alg.th(r - 1)).vector()
                            }
                            ("deformed", Basis::Coframe, Basis::Coframe) => {
                                deformed_bracket(&s.jtilde, &s.j, &alg.th(l - 1), &alg.th(r - 1))
                                    .vector()
                            }
                            ("jjtilde", Basis::Coframe, Basis::Coframe) => {
                                general_bracket(&jj, &alg.th(l - 1), &alg.th(r - 1)).vector()
                            }
                            _ => {
                                return Err(Error::Parse(format!(
                                    "unknown golden family `{}` for these argument kinds",
                                    family
                                )))
                            }
                        };
                        let basis = out_basis.unwrap_or(right.0);
                        let show = |v: &[Scalar]| -> String {
                            let parts: Vec<String> = v
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(k, c)| format!("({})*{}", c, basis_label(basis, k + 1)))
                                .collect();
                            if parts.is_empty() {
                                "0".into()
                            } else {
                                parts.join(" + ")
                            }
                        };
                        entries.push(GoldenEntry {
                            family: family.clone(),
                            label: format!(
                                "({}, {})",
                                basis_label(left.0, l),
                                basis_label(right.0, r)
                            ),
                            ok: actual == expected,
                            expected: show(&expected),
                            actual: show(&actual),
                        });
                    }
                }
            }
            Line::Matrix { row, col, value } => {
                if n != 2 {
                    continue;
                }
                let m = reproduce_n2_matrix()?;
                if *row == 0 || *col == 0 || *row > 3 || *col > 3 {
                    return Err(Error::Parse(format!(
                        "matrix entry ({}, {}) out of range",
                        row, col
                    )));
                }
                let expected = parse_scalar(m.ring(), value)?;
                let actual = m.get(row - 1, col - 1);
                entries.push(GoldenEntry {
                    family: "matrix".into(),
                    label: format!("({}, {})", row, col),
                    ok: actual == &expected,
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
    }
    Ok(GoldenReport {
        n,
        checks: s.checks()?,
        entries,
    })
}

/// [`golden_check_with`] on the shipped golden file.
pub fn golden_check(n: usize) -> Result<GoldenReport> {
    golden_check_with(n, GOLDEN)
}
