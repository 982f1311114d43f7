//! Finite-dimensional quasi-Hopf algebras `(K, Δ, ε, Φ, S, α, β)`.
//!
//! `Φ = X¹⊗X²⊗X³` and `Φ⁻¹ = x¹⊗x²⊗x³` throughout.

mod integral;
mod qt;

use crate::cocycle::Cocycle3;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::report::{diff_case, sweep, Check, Report, SweepOptions};
use crate::scalar::{Field, Scalar};
use crate::tensor::{contract, Algebra, Coalgebra, Factor, LinearMap, Tensor, TensorMap, Vector};

pub use integral::ModularData;
pub use qt::{element_u, verify_qt, QTStructure};

#[derive(Clone, Debug)]
pub struct QuasiHopfAlgebra {
    alg: Algebra,
    co: Coalgebra,
    phi: Tensor,
    phi_inv: Tensor,
    antipode: LinearMap,
    antipode_inv: LinearMap,
    alpha: Vector,
    beta: Vector,
}

/// `p_R = x¹ ⊗ x²βS(x³)` and `q_R = X¹ ⊗ S⁻¹(αX³)X²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqElements {
    pub p: Tensor,
    pub q: Tensor,
}

/// Structure constants of a quasi-Hopf algebra; `phi_inv` is computed when
/// absent.
pub struct QuasiHopfData {
    pub alg: Algebra,
    pub comul: TensorMap,
    pub counit: Vector,
    pub phi: Tensor,
    pub phi_inv: Option<Tensor>,
    pub antipode: LinearMap,
    pub alpha: Vector,
    pub beta: Vector,
}

impl QuasiHopfAlgebra {
    /// Checks shapes and invertibility of `Φ` and `S`; the axioms are
    /// checked by [`QuasiHopfAlgebra::verify_quasi_bialgebra`] and
    /// [`QuasiHopfAlgebra::verify_antipode`].
    pub fn new(d: QuasiHopfData) -> Result<QuasiHopfAlgebra> {
        let n = d.alg.dim();
        if d.phi.legs() != 3 || d.phi.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: d.phi.legs(),
            });
        }
        let field = d.alg.field().clone();
        let one3 = d.alg.one_tensor(3);
        let phi_inv = match d.phi_inv {
            Some(inv) => {
                if d.alg.mul_tensors(&d.phi, &inv) != one3
                    || d.alg.mul_tensors(&inv, &d.phi) != one3
                {
                    return Err(Error::NotInvertible(
                        "reassociator (given inverse is wrong)".into(),
                    ));
                }
                inv
            }
            None => d
                .alg
                .invert(&d.phi)
                .map_err(|_| Error::NotInvertible("reassociator".into()))?,
        };
        let antipode_inv = d.antipode.inverse(&field)?;
        let co = Coalgebra::new(field, d.comul, d.counit)?;
        Ok(QuasiHopfAlgebra {
            alg: d.alg,
            co,
            phi: d.phi,
            phi_inv,
            antipode: d.antipode,
            antipode_inv,
            alpha: d.alpha,
            beta: d.beta,
        })
    }

    /// An ordinary Hopf algebra with `Φ = 1⊗1⊗1`, `α = β = 1`.
    pub fn from_hopf(h: &HopfAlgebra) -> Result<QuasiHopfAlgebra> {
        let one3 = h.algebra().one_tensor(3);
        QuasiHopfAlgebra::new(QuasiHopfData {
            alg: h.algebra().clone(),
            comul: h.comul().clone(),
            counit: h.counit().clone(),
            phi: one3.clone(),
            phi_inv: Some(one3),
            antipode: h.antipode().clone(),
            alpha: h.unit().clone(),
            beta: h.unit().clone(),
        })
    }

    /// `H*_ω = (H*, Δ, ε, Φ = ω⁻¹, S̄, α = ε, β)` with `β(h) = ω(h₁, S(h₂), h₃)`,
    /// on the dual basis of `H`.
    pub fn h_star_omega(h: &HopfAlgebra, omega: &Cocycle3) -> Result<QuasiHopfAlgebra> {
        if !h.is_cocommutative() {
            return Err(Error::UnsupportedInput(
                "H*_ω needs a cocommutative H".into(),
            ));
        }
        let dual = h.dual();
        QuasiHopfAlgebra::new(QuasiHopfData {
            alg: dual.algebra().clone(),
            comul: dual.comul().clone(),
            counit: dual.counit().clone(),
            phi: omega.omega_inv().clone(),
            phi_inv: Some(omega.omega().clone()),
            antipode: dual.antipode().clone(),
            alpha: h.counit().clone(),
            beta: omega.beta(h),
        })
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.co
    }

    pub fn comul(&self) -> &TensorMap {
        self.co.comul()
    }

    pub fn counit(&self) -> &Vector {
        self.co.counit()
    }

    pub fn unit(&self) -> &Vector {
        self.alg.unit()
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn phi_inv(&self) -> &Tensor {
        &self.phi_inv
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &LinearMap {
        &self.antipode_inv
    }

    pub fn alpha(&self) -> &Vector {
        &self.alpha
    }

    pub fn beta(&self) -> &Vector {
        &self.beta
    }

    pub fn basis(&self, i: u32) -> Vector {
        Vector::basis(i, self.field())
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.alg.mul(a, b)
    }

    pub fn mul_all(&self, factors: &[&Vector]) -> Vector {
        self.alg.mul_all(factors)
    }

    pub fn mul_t(&self, a: &Tensor, b: &Tensor) -> Tensor {
        self.alg.mul_tensors(a, b)
    }

    pub fn chain(&self, factors: &[&Tensor]) -> Tensor {
        self.alg.mul_tensor_chain(factors)
    }

    pub fn one(&self, legs: usize) -> Tensor {
        self.alg.one_tensor(legs)
    }

    pub fn elem(&self, v: &Vector) -> Tensor {
        Tensor::from_vector(self.dim(), v)
    }

    pub fn delta(&self, v: &Vector) -> Tensor {
        self.comul().apply(v)
    }

    /// `Δ^{cop}`.
    pub fn delta_cop(&self, v: &Vector) -> Tensor {
        self.delta(v).permute(&[1, 0]).expect("two legs")
    }

    pub fn eps(&self, v: &Vector) -> Scalar {
        v.dot(self.counit(), self.field())
    }

    pub fn s(&self, v: &Vector) -> Vector {
        self.antipode.apply(v)
    }

    pub fn s_inv(&self, v: &Vector) -> Vector {
        self.antipode_inv.apply(v)
    }

    /// Applies `Δ` to one leg of a tensor.
    pub fn delta_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.expand_leg(leg, self.comul())
    }

    /// Applies `ε` to one leg of a tensor.
    pub fn eps_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.contract_leg(leg, self.counit())
    }

    /// Places the legs of `t` at `positions` in an `m`-leg tensor, padding with 1.
    pub fn embed(&self, t: &Tensor, m: usize, positions: &[usize]) -> Tensor {
        t.embed(m, positions, self.unit())
            .expect("valid leg positions")
    }

    pub fn invert(&self, t: &Tensor) -> Result<Tensor> {
        self.alg.invert(t)
    }

    /// Quasi-coassociativity, pentagon, counit axioms, `(id⊗ε⊗id)(Φ) = 1⊗1`,
    /// multiplicativity of `Δ` and `ε`, and associativity/unit of `K`.
    pub fn verify_quasi_bialgebra(&self, opts: SweepOptions) -> Report {
        let n = self.dim() as u32;
        let basis: Vec<u32> = (0..n).collect();
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let mut rep = Report::default();
        let triples: Vec<[u32; 3]> = (0..n.pow(3))
            .map(|r| [r / (n * n), (r / n) % n, r % n])
            .collect();
        rep.push(sweep(
            "quasi.associativity",
            "(ab)c = a(bc)",
            opts,
            &triples,
            |&[a, b, c]| {
                let (ea, eb, ec) = (self.basis(a), self.basis(b), self.basis(c));
                let l = self.mul(&self.mul(&ea, &eb), &ec);
                let r = self.mul(&ea, &self.mul(&eb, &ec));
                diff_case(format!("({a},{b},{c})"), &self.elem(&l), &self.elem(&r))
            },
        ));
        rep.push(sweep("quasi.unit", "1a = a1 = a", opts, &basis, |&a| {
            let e = self.basis(a);
            let l = self.mul(self.unit(), &e);
            let r = self.mul(&e, self.unit());
            (l != e || r != e).then(|| crate::report::Violation::note(a))
        }));
        rep.push(sweep(
            "quasi.coassociativity",
            "Φ(Δ⊗id)Δ(h) = (id⊗Δ)Δ(h)Φ",
            opts,
            &basis,
            |&h| {
                let d = self.delta(&self.basis(h));
                let l = self.mul_t(&self.phi, &self.delta_leg(&d, 0));
                let r = self.mul_t(&self.delta_leg(&d, 1), &self.phi);
                diff_case(h, &l, &r)
            },
        ));
        let lhs = self.mul_t(&self.delta_leg(&self.phi, 2), &self.delta_leg(&self.phi, 0));
        let rhs = self.chain(&[
            &self.embed(&self.phi, 4, &[1, 2, 3]),
            &self.delta_leg(&self.phi, 1),
            &self.embed(&self.phi, 4, &[0, 1, 2]),
        ]);
        rep.push(Check::equal(
            "quasi.pentagon",
            "(id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ) = (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1)",
            &lhs,
            &rhs,
        ));
        rep.push(sweep(
            "quasi.counit",
            "(ε⊗id)Δ(h) = h = (id⊗ε)Δ(h)",
            opts,
            &basis,
            |&h| {
                let d = self.delta(&self.basis(h));
                let e = self.elem(&self.basis(h));
                diff_case(format!("{h} left"), &self.eps_leg(&d, 0), &e)
                    .or_else(|| diff_case(format!("{h} right"), &self.eps_leg(&d, 1), &e))
            },
        ));
        rep.push(Check::equal(
            "quasi.phi_counit",
            "(id⊗ε⊗id)(Φ) = 1⊗1",
            &self.eps_leg(&self.phi, 1),
            &self.one(2),
        ));
        rep.push(sweep(
            "quasi.comul_multiplicative",
            "Δ(ab) = Δ(a)Δ(b)",
            opts,
            &pairs,
            |&(a, b)| {
                let (ea, eb) = (self.basis(a), self.basis(b));
                let l = self.delta(&self.mul(&ea, &eb));
                let r = self.mul_t(&self.delta(&ea), &self.delta(&eb));
                diff_case(format!("({a},{b})"), &l, &r)
            },
        ));
        rep.push(sweep(
            "quasi.counit_multiplicative",
            "ε(ab) = ε(a)ε(b)",
            opts,
            &pairs,
            |&(a, b)| {
                let (ea, eb) = (self.basis(a), self.basis(b));
                let l = self.eps(&self.mul(&ea, &eb));
                let r = &self.eps(&ea) * &self.eps(&eb);
                (l != r).then(|| crate::report::Violation::note(format!("({a},{b})")))
            },
        ));
        rep.push(Check::equal(
            "quasi.comul_unit",
            "Δ(1) = 1⊗1",
            &self.delta(self.unit()),
            &self.one(2),
        ));
        rep.push(Check::single(
            "quasi.counit_unit",
            "ε(1) = 1",
            self.eps(self.unit()).is_one(),
            "ε(1) ≠ 1",
        ));
        rep
    }

    /// `S(h₁)αh₂ = ε(h)α`, `h₁βS(h₂) = ε(h)β`, `X¹βS(X²)αX³ = 1` and
    /// `S(x¹)αx²βS(x³) = 1`.
    pub fn verify_antipode(&self, opts: SweepOptions) -> Report {
        let n = self.dim() as u32;
        let basis: Vec<u32> = (0..n).collect();
        let s = &self.antipode;
        let mut rep = Report::default();
        rep.push(sweep(
            "quasi.antipode_alpha",
            "S(h₁)αh₂ = ε(h)α",
            opts,
            &basis,
            |&h| {
                let d = self.delta(&self.basis(h));
                let l = contract(
                    &self.alg,
                    &[&d],
                    &[vec![
                        Factor::Mapped(0, 0, s),
                        Factor::Element(&self.alpha),
                        Factor::Leg(0, 1),
                    ]],
                );
                let r = self.elem(
                    &self.alpha.scale(
                        &self
                            .counit()
                            .get(h)
                            .cloned()
                            .unwrap_or_else(|| self.field().zero()),
                    ),
                );
                diff_case(h, &l, &r)
            },
        ));
        rep.push(sweep(
            "quasi.antipode_beta",
            "h₁βS(h₂) = ε(h)β",
            opts,
            &basis,
            |&h| {
                let d = self.delta(&self.basis(h));
                let l = contract(
                    &self.alg,
                    &[&d],
                    &[vec![
                        Factor::Leg(0, 0),
                        Factor::Element(&self.beta),
                        Factor::Mapped(0, 1, s),
                    ]],
                );
                let r = self.elem(
                    &self.beta.scale(
                        &self
                            .counit()
                            .get(h)
                            .cloned()
                            .unwrap_or_else(|| self.field().zero()),
                    ),
                );
                diff_case(h, &l, &r)
            },
        ));
        let a = contract(
            &self.alg,
            &[&self.phi],
            &[vec![
                Factor::Leg(0, 0),
                Factor::Element(&self.beta),
                Factor::Mapped(0, 1, s),
                Factor::Element(&self.alpha),
                Factor::Leg(0, 2),
            ]],
        );
        rep.push(Check::equal(
            "quasi.antipode_phi",
            "X¹βS(X²)αX³ = 1",
            &a,
            &self.one(1),
        ));
        let b = contract(
            &self.alg,
            &[&self.phi_inv],
            &[vec![
                Factor::Mapped(0, 0, s),
                Factor::Element(&self.alpha),
                Factor::Leg(0, 1),
                Factor::Element(&self.beta),
                Factor::Mapped(0, 2, s),
            ]],
        );
        rep.push(Check::equal(
            "quasi.antipode_phi_inv",
            "S(x¹)αx²βS(x³) = 1",
            &b,
            &self.one(1),
        ));
        rep
    }

    /// Both axiom reports.
    pub fn verify(&self, opts: SweepOptions) -> Report {
        let mut r = self.verify_quasi_bialgebra(opts);
        r.extend(self.verify_antipode(opts).checks);
        r
    }

    pub fn pq_elements(&self) -> PqElements {
        let s = &self.antipode;
        let p = contract(
            &self.alg,
            &[&self.phi_inv],
            &[
                vec![Factor::Leg(0, 0)],
                vec![
                    Factor::Leg(0, 1),
                    Factor::Element(&self.beta),
                    Factor::Mapped(0, 2, s),
                ],
            ],
        );
        let s_inv_alpha = self.s_inv(&self.alpha);
        let q = contract(
            &self.alg,
            &[&self.phi],
            &[
                vec![Factor::Leg(0, 0)],
                vec![
                    Factor::Mapped(0, 2, &self.antipode_inv),
                    Factor::Element(&s_inv_alpha),
                    Factor::Leg(0, 1),
                ],
            ],
        );
        PqElements { p, q }
    }

    /// The Drinfeld twist `f` and `f⁻¹`, accepted only when
    /// `fΔ(S(h))f⁻¹ = (S⊗S)(Δ^{cop}(h))`, `ff⁻¹ = f⁻¹f = 1⊗1` and the
    /// `ε`-normalizations hold.
    pub fn drinfeld_twist(&self) -> Result<(Tensor, Tensor)> {
        let s = &self.antipode;
        let al = &self.alpha;
        let be = &self.beta;
        use Factor::{Element as E, Leg as L, Mapped as M};
        // γ = S(x¹X²)αx²X³₁ ⊗ S(X¹)αx³X³₂
        let y = self.delta_leg(&self.phi, 2);
        let gamma = contract(
            &self.alg,
            &[&self.phi_inv, &y],
            &[
                vec![M(1, 1, s), M(0, 0, s), E(al), L(0, 1), L(1, 2)],
                vec![M(1, 0, s), E(al), L(0, 2), L(1, 3)],
            ],
        );
        // f = (S⊗S)(Δ^{cop}(p¹)) γ Δ(p²)
        let pq = self.pq_elements();
        let p4 = self.delta_leg(&self.delta_leg(&pq.p, 1), 0);
        let f = contract(
            &self.alg,
            &[&p4, &gamma],
            &[
                vec![M(0, 1, s), L(1, 0), L(0, 2)],
                vec![M(0, 0, s), L(1, 1), L(0, 3)],
            ],
        );
        // f⁻¹ = Δ(S(x¹)αx²) δ (S⊗S)(Δ^{cop}(x³))
        // δ = X¹₁x¹βS(X³) ⊗ X¹₂x²βS(X²x³)
        let z = self.delta_leg(&self.phi, 0);
        let delta = contract(
            &self.alg,
            &[&z, &self.phi_inv],
            &[
                vec![L(0, 0), L(1, 0), E(be), M(0, 3, s)],
                vec![L(0, 1), L(1, 1), E(be), M(1, 2, s), M(0, 2, s)],
            ],
        );
        let a = contract(
            &self.alg,
            &[&self.phi_inv],
            &[vec![M(0, 0, s), E(al), L(0, 1)], vec![L(0, 2)]],
        );
        let a4 = self.delta_leg(&self.delta_leg(&a, 1), 0);
        let f_inv = contract(
            &self.alg,
            &[&a4, &delta],
            &[
                vec![L(0, 0), L(1, 0), M(0, 3, s)],
                vec![L(0, 1), L(1, 1), M(0, 2, s)],
            ],
        );
        let checks = self.verify_twist(&f, &f_inv, SweepOptions::default());
        if checks.iter().any(|c| !c.passed()) {
            return Err(Error::TwistPropertyFailed(checks));
        }
        Ok((f, f_inv))
    }

    fn verify_twist(&self, f: &Tensor, f_inv: &Tensor, opts: SweepOptions) -> Vec<Check> {
        let basis: Vec<u32> = (0..self.dim() as u32).collect();
        let one = self.one(2);
        let single = self.one(1);
        vec![
            Check::equal(
                "twist.inverse_right",
                "ff⁻¹ = 1⊗1",
                &self.mul_t(f, f_inv),
                &one,
            ),
            Check::equal(
                "twist.inverse_left",
                "f⁻¹f = 1⊗1",
                &self.mul_t(f_inv, f),
                &one,
            ),
            sweep(
                "twist.defining_property",
                "fΔ(S(h))f⁻¹ = (S⊗S)(Δ^{cop}(h))",
                opts,
                &basis,
                |&h| {
                    let e = self.basis(h);
                    let l = self.chain(&[f, &self.delta(&self.s(&e)), f_inv]);
                    let r = self.delta_cop(&e).map_all(&self.antipode);
                    diff_case(h, &l, &r)
                },
            ),
            Check::equal(
                "twist.counit_first",
                "ε(f¹)f² = 1",
                &self.eps_leg(f, 0),
                &single,
            ),
            Check::equal(
                "twist.counit_second",
                "ε(f²)f¹ = 1",
                &self.eps_leg(f, 1),
                &single,
            ),
        ]
    }
}

#[cfg(test)]
mod tests;
