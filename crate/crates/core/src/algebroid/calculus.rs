//! Anchor derivatives, `d_E`, the Schouten-Nijenhuis bracket and Lie derivatives.

use super::Algebroid;
use crate::scalar::Scalar;
use crate::tensor::{contract, Form, Multivector};

impl Algebroid {
    /// `rho(e_a) f`.
    pub fn rho(&self, a: usize, f: &Scalar) -> Scalar {
        if f.is_constant() {
            return self.zero_fn();
        }
        let n = self.base_dim();
        let mut acc = self.zero_fn();
        for i in 0..n {
            let r = self.anchor.get(a, i);
            if r.is_zero() {
                continue;
            }
            let p = f.partial(i);
            if !p.is_zero() {
                acc = &acc + &(r * &p);
            }
        }
        acc
    }

    /// `rho(s) f` for a section `s`.
    pub fn rho_section(&self, s: &Multivector, f: &Scalar) -> Scalar {
        assert_eq!(s.degree(), 1);
        let mut acc = self.zero_fn();
        for (idx, c) in s.coeffs() {
            acc = &acc + &(c * &self.rho(idx[0] as usize, f));
        }
        acc
    }

    /// Components `rho(s)^i` of the vector field of a section.
    pub fn anchor_of(&self, s: &Multivector) -> Vec<Scalar> {
        let n = self.base_dim();
        let mut out = vec![self.zero_fn(); n];
        for (idx, c) in s.coeffs() {
            for (i, slot) in out.iter_mut().enumerate() {
                let r = self.anchor.get(idx[0] as usize, i);
                if !r.is_zero() {
                    *slot = &*slot + &(c * r);
                }
            }
        }
        out
    }

    /// `d_E f`, with `(d_E f)(e_a) = rho(e_a) f`.
    pub fn df(&self, f: &Scalar) -> Form {
        self.covector((0..self.rank).map(|a| self.rho(a, f)).collect())
    }

    /// `d_E e^c = -sum_{a<b} C^c_{ab} e^a ^ e^b`.
    pub fn d_coframe(&self, c: usize) -> Form {
        let mut w = self.zero_form(2);
        for a in 0..self.rank {
            for b in (a + 1)..self.rank {
                let v = self.c(a, b, c);
                if !v.is_zero() {
                    w.add_term(&[a, b], -v);
                }
            }
        }
        w
    }

    /// The differential `d_E` on forms of any degree.
    pub fn d(&self, w: &Form) -> Form {
        let m = self.rank;
        let p = w.degree();
        let mut out = self.zero_form(p + 1);
        if p + 1 > m {
            return out;
        }
        let dth: Vec<Form> = (0..m).map(|c| self.d_coframe(c)).collect();
        for (idx, f) in w.coeffs() {
            let ix: Vec<usize> = idx.iter().map(|&a| a as usize).collect();
            let basis = self.form(&ix);
            if !f.is_constant() {
                out = out.add(&self.df(f).wedge(&basis));
            }
            let d_basis = basis.derive_generators(&|c| dth[c].clone());
            out = out.add(&d_basis.scale(f));
        }
        out
    }

    /// `d_E` via the invariant formula on frame sections, used as an independent check.
    pub fn d_invariant(&self, w: &Form) -> Form {
        let m = self.rank;
        let p = w.degree();
        let mut out = self.zero_form(p + 1);
        if p + 1 > m {
            return out;
        }
        for tuple in Form::tuples(m, p + 1) {
            let mut acc = self.zero_fn();
            for k in 0..=p {
                let mut rest = tuple.clone();
                let ak = rest.remove(k);
                let v = self.rho(ak, &w.get(&rest));
                acc = if k % 2 == 0 { &acc + &v } else { &acc - &v };
            }
            for k in 0..=p {
                for l in (k + 1)..=p {
                    let mut rest: Vec<usize> = tuple.clone();
                    rest.remove(l);
                    rest.remove(k);
                    for c in 0..m {
                        let coef = self.c(tuple[k], tuple[l], c);
                        if coef.is_zero() {
                            continue;
                        }
                        let mut args = vec![c];
                        args.extend_from_slice(&rest);
                        let v = coef * &w.get(&args);
                        acc = if (k + l) % 2 == 0 {
                            &acc + &v
                        } else {
                            &acc - &v
                        };
                    }
                }
            }
            out.add_term(&tuple, acc);
        }
        out
    }

    /// Bracket of two sections.
    pub fn bracket(&self, s: &Multivector, t: &Multivector) -> Multivector {
        assert!(
            s.degree() == 1 && t.degree() == 1,
            "bracket of sections needs degree-1 arguments"
        );
        self.schouten(s, t)
    }

    /// Schouten-Nijenhuis bracket of frame multivectors `e_I`, `e_J`:
    /// `sum_{i,j} (-1)^{i+j} [e_{I_i}, e_{J_j}] ^ e_{I \ i} ^ e_{J \ j}`.
    fn schouten_frame(&self, i: &[usize], j: &[usize]) -> Multivector {
        let p = i.len();
        let q = j.len();
        let mut out = self.zero_mv((p + q).saturating_sub(1));
        if p == 0 || q == 0 {
            return out;
        }
        for (k, &a) in i.iter().enumerate() {
            for (l, &b) in j.iter().enumerate() {
                let br = self.frame_bracket(a, b);
                if br.is_zero() {
                    continue;
                }
                let mut rest_i = i.to_vec();
                rest_i.remove(k);
                let mut rest_j = j.to_vec();
                rest_j.remove(l);
                let mut tail = rest_i;
                tail.extend(rest_j);
                let term = br.wedge(&self.mv(&tail));
                out = if (k + l) % 2 == 0 {
                    out.add(&term)
                } else {
                    out.sub(&term)
                };
            }
        }
        out
    }

    /// Schouten-Nijenhuis bracket `[S, T]` of degree `p + q - 1`.
    ///
    /// Function cases: `[S, f] = (-1)^{p+1} i_{d_E f} S` and `[f, S] = -i_{d_E f} S`,
    /// so `[s, f] = rho(s) f` for sections.
    pub fn schouten(&self, s: &Multivector, t: &Multivector) -> Multivector {
        let p = s.degree();
        let q = t.degree();
        if p + q == 0 {
            return self.zero_mv(0);
        }
        let mut out = self.zero_mv(p + q - 1);
        let skew_sign = if ((p as i64 - 1) * (q as i64 - 1)).rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        let dfs: Vec<(Vec<usize>, Scalar, Option<Form>)> = s
            .coeffs()
            .iter()
            .map(|(idx, f)| {
                let d = if f.is_constant() || q == 0 {
                    None
                } else {
                    Some(self.df(f))
                };
                (idx.iter().map(|&a| a as usize).collect(), f.clone(), d)
            })
            .collect();
        let dgs: Vec<(Vec<usize>, Scalar, Option<Form>)> = t
            .coeffs()
            .iter()
            .map(|(idx, g)| {
                let d = if g.is_constant() || p == 0 {
                    None
                } else {
                    Some(self.df(g))
                };
                (idx.iter().map(|&a| a as usize).collect(), g.clone(), d)
            })
            .collect();
        for (i, f, df) in &dfs {
            let ei = self.mv(i);
            for (j, g, dg) in &dgs {
                let ej = self.mv(j);
                // f g [e_I, e_J]
                let core = self.schouten_frame(i, j);
                if !core.is_zero() {
                    out = out.add(&core.scale(&(f * g)));
                }
                // f [e_I, g] ^ e_J with [e_I, g] = (-1)^{p+1} i_{dg} e_I
                if let Some(dg) = dg {
                    let x = contract(dg, &ei).wedge(&ej).scale(f);
                    out = if p % 2 == 1 { out.add(&x) } else { out.sub(&x) };
                }
                // -(-1)^{(p-1)(q-1)} g [e_J, f] ^ e_I with [e_J, f] = (-1)^{q+1} i_{df} e_J
                if let Some(df) = df {
                    let x = contract(df, &ej).wedge(&ei).scale(g);
                    let sign = -skew_sign * if q % 2 == 1 { 1 } else { -1 };
                    out = if sign > 0 { out.add(&x) } else { out.sub(&x) };
                }
            }
        }
        out
    }

    /// `i_s w` for a section `s`.
    pub fn interior(&self, s: &Multivector, w: &Form) -> Form {
        contract(s, w)
    }

    /// Cartan formula `L_s w = i_s d_E w + d_E i_s w`.
    pub fn lie_derivative_form(&self, s: &Multivector, w: &Form) -> Form {
        let a = contract(s, &self.d(w));
        if w.degree() == 0 {
            return a;
        }
        a.add(&self.d(&contract(s, w)))
    }

    /// `L_s T = [s, T]`.
    pub fn lie_derivative_mv(&self, s: &Multivector, t: &Multivector) -> Multivector {
        self.schouten(s, t)
    }

    /// Residual of `rho([s,t]) = [rho(s), rho(t)]` applied to every coordinate function.
    pub fn anchor_homomorphism_residual(&self, s: &Multivector, t: &Multivector) -> Vec<Scalar> {
        let st = self.bracket(s, t);
        (0..self.base_dim())
            .map(|i| {
                let x = Scalar::var(self.ring(), i);
                let lhs = self.rho_section(&st, &x);
                let rhs = &self.rho_section(s, &self.rho_section(t, &x))
                    - &self.rho_section(t, &self.rho_section(s, &x));
                &lhs - &rhs
            })
            .collect()
    }
}
