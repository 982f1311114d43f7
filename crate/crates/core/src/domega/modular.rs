use super::DOmega;
use crate::error::{Error, Result};
use crate::quasihopf::ModularData;
use crate::report::{sweep, Check, Violation};
use crate::tensor::{Tensor, Vector};

/// The closed forms `β²μ_H`, `β²μ_H # 1` and the modular form of `D^ω(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularElements {
    pub g_h_star: Vector,
    pub g_double: Vector,
    pub mu_double: Vector,
}

impl DOmega {
    /// `𝔱 = Σβ(S(t₁))t₂`, checked against `λ(h𝔱) = λ(𝔱)β(h)` for the left
    /// integral `λ` of `H*`.
    pub fn cointegral_h_star_omega(&self) -> Result<Vector> {
        let t = self.cointegral_candidate()?;
        let lambda = self.h.integral_on()?.lambda;
        if t.is_zero() || self.h.eval(&lambda, &t).is_zero() {
            return Err(Error::CointegralZero);
        }
        if let Some(bad) = self.cointegral_violation(&t, &lambda) {
            return Err(Error::CrossCheckFailed(format!(
                "λ(h𝔱) ≠ λ(𝔱)β(h) at h = {}",
                bad.at
            )));
        }
        Ok(t)
    }

    fn cointegral_candidate(&self) -> Result<Vector> {
        let h = &self.h;
        let t = h.left_integral()?;
        let mut out = Vector::zero();
        for (ab, c) in h.comul().apply(&t).iter() {
            let b = self.beta.dot(h.antipode().image(ab[0]), h.field());
            out = out.axpy(&(c * &b), &h.basis(ab[1]));
        }
        Ok(out)
    }

    fn cointegral_violation(&self, t: &Vector, lambda: &Vector) -> Option<Violation> {
        let h = &self.h;
        let lt = h.eval(lambda, t);
        (0..h.dim() as u32).find_map(|x| {
            let l = h.eval(lambda, &h.mul(&h.basis(x), t));
            let r = &lt
                * &self
                    .beta
                    .get(x)
                    .cloned()
                    .unwrap_or_else(|| h.field().zero());
            (l != r).then(|| Violation::note(x))
        })
    }

    /// `β²μ_H`, `β²μ_H # 1` and `μ_{D^ω(H)}`, failing with
    /// `CrossCheckFailed` unless the modular element of `H*_ω`, the modular
    /// element of `D^ω(H)` and the modular form of `D^ω(H)` computed from
    /// their definitions agree with them.
    pub fn modular_elements(&self) -> Result<ModularElements> {
        let closed = self.closed_modular()?;
        let direct_hs = self.h_star.modular_data()?;
        if direct_hs.g != closed.g_h_star {
            return Err(Error::CrossCheckFailed(format!(
                "modular element of H*_ω is {}, closed form {}",
                direct_hs.g, closed.g_h_star
            )));
        }
        let direct = self.k.modular_data()?;
        if direct.g != closed.g_double {
            return Err(Error::CrossCheckFailed(format!(
                "modular element of D^ω(H) is {}, closed form {}",
                direct.g, closed.g_double
            )));
        }
        if &closed.mu_double != self.k.counit() {
            return Err(Error::CrossCheckFailed("D^ω(H) is not unimodular".into()));
        }
        Ok(closed)
    }

    fn closed_modular(&self) -> Result<ModularElements> {
        let h = &self.h;
        let mu_h = h.modular_mu()?;
        let g_h_star = h.dual_mul(&h.dual_mul(&self.beta, &self.beta), &mu_h);
        let g_double = self.lift_dual(&g_h_star);
        let t = self.k.quasi_integral()?;
        let mu_double = self.k.quasi_modular_mu(&t)?;
        Ok(ModularElements {
            g_h_star,
            g_double,
            mu_double,
        })
    }

    /// `u⁻¹S(u)` computed directly.
    pub fn u_inv_s_u(&self) -> Vector {
        self.k.mul(self.qt.u_inv(), &self.k.s(self.qt.u()))
    }

    /// `Δ(ζβ#1) = (ζβ#1 ⊗ ζβ#1)(s⊗s)(𝔣₂₁⁻¹)𝔣` for each `ζ`.
    pub fn family_delta_check(&self, zetas: &[Vector]) -> Check {
        let k = &self.k;
        let f21_inv = self
            .qt
            .f_inv()
            .permute(&[1, 0])
            .expect("two legs")
            .map_all(k.antipode());
        sweep(
            "modular.family_delta",
            "Δ(ζβ#1) = (ζβ#1 ⊗ ζβ#1)(s⊗s)(𝔣₂₁⁻¹)𝔣",
            Default::default(),
            zetas,
            |zeta| {
                let l = self.lift_dual(&self.h.dual_mul(zeta, &self.beta));
                let ll = Tensor::product_of(self.dim(), &[&l, &l]);
                let rhs = k.chain(&[&ll, &f21_inv, self.qt.f()]);
                crate::report::diff_case(format!("ζ = {zeta}"), &k.delta(&l), &rhs)
            },
        )
    }

    /// The algebra maps `H → k` when they can be enumerated, otherwise `ε`.
    pub fn dual_grouplikes(&self) -> Vec<Vector> {
        self.h
            .grouplikes_of_dual(None)
            .unwrap_or_else(|_| vec![self.h.counit().clone()])
    }

    /// `𝔱 ≠ 0`, `λ(h𝔱) = λ(𝔱)β(h)`, `λ(𝔱) = 1`, and agreement with the
    /// cointegral of `H*_ω` solved from its defining equation.
    pub fn verify_cointegral(&self) -> Result<Vec<Check>> {
        let h = &self.h;
        let mut out = Vec::new();
        let t = self.cointegral_candidate()?;
        let lambda = h.integral_on()?.lambda;
        out.push(Check::single(
            "cointegral.nonzero",
            "𝔱 = Σβ(S(t₁))t₂ ≠ 0",
            !t.is_zero(),
            "𝔱 = 0",
        ));
        let bad: Vec<Violation> = self.cointegral_violation(&t, &lambda).into_iter().collect();
        out.push(Check::new(
            "cointegral.defining",
            "λ(h𝔱) = λ(𝔱)β(h)",
            h.dim(),
            bad,
        ));
        let lt = h.eval(&lambda, &t);
        out.push(Check::single(
            "cointegral.normalized",
            "λ(𝔱) = 1 when λ(t) = 1",
            lt.is_one(),
            format!("λ(𝔱) = {lt}"),
        ));
        let ti = self.h_star.quasi_integral()?;
        let solved = self.h_star.quasi_cointegral(&ti)?;
        let proportional = match (t.first_nonzero(), solved.first_nonzero()) {
            (Some((i, a)), Some((j, b))) if i == j => solved.scale(&a.checked_div(b)?) == t,
            _ => false,
        };
        out.push(Check::single(
            "cointegral.nullspace",
            "𝔱 spans the solutions of λ(t₂)t₁ = λ(t)βS⁻¹(α) on H*_ω",
            proportional,
            format!("{t} vs {solved}"),
        ));
        Ok(out)
    }

    /// The modular elements from their definitions against the closed
    /// forms, and `u⁻¹S(u)` against both.
    pub fn verify_modular_elements(&self) -> Result<Vec<Check>> {
        let n = self.h.dim();
        let k = &self.k;
        let mut out = Vec::new();
        let closed = self.closed_modular()?;
        let hs: ModularData = self.h_star.modular_data()?;
        let dd: ModularData = k.modular_data()?;
        let vec_n = |v: &Vector| Tensor::from_vector(n, v);
        let vec_d = |v: &Vector| Tensor::from_vector(self.dim(), v);
        let twisted = self.dual.antipode().apply(&closed.g_h_star);
        out.push(Check::equal(
            "modular.h_star",
            "g̲_{H*_ω} = β²μ_H",
            &vec_n(&hs.g),
            &vec_n(&closed.g_h_star),
        ));
        out.push(Check::equal(
            "modular.h_star_antipode",
            "λ(S⁻¹(q²t₂p²))q¹t₁p¹ = (β²μ_H)∘S on H*_ω",
            &vec_n(&hs.g),
            &vec_n(&twisted),
        ));
        out.push(Check::equal(
            "modular.double",
            "g̲_{D^ω(H)} = β²μ_H # 1",
            &vec_d(&dd.g),
            &vec_d(&closed.g_double),
        ));
        out.push(Check::equal(
            "modular.unimodular",
            "μ_{D^ω(H)} = ε",
            &vec_d(&dd.mu),
            &vec_d(k.counit()),
        ));
        let usu = self.u_inv_s_u();
        out.push(Check::equal(
            "modular.u_closed_form",
            "u⁻¹S(u) = β²μ_H # 1",
            &vec_d(&usu),
            &vec_d(&closed.g_double),
        ));
        let formula = k.u_s_u_formula(&self.qt, &dd)?;
        out.push(Check::equal(
            "modular.u_s_u_formula",
            "u⁻¹S(u) = μ(X¹R²p²S(X³)f¹)(S(X²)f²)R¹p¹S(g̲⁻¹)",
            &vec_d(&formula),
            &vec_d(&usu),
        ));
        if &dd.mu == k.counit() {
            out.push(Check::equal(
                "modular.u_s_u_unimodular",
                "u⁻¹S(u) = g̲ when μ = ε",
                &vec_d(&usu),
                &vec_d(&dd.g),
            ));
            let g_inv = k.invert(&k.elem(&dd.g))?.to_vector();
            out.push(Check::equal(
                "modular.s_g_inverse",
                "S(g̲⁻¹) = g̲ when μ = ε",
                &vec_d(&k.s(&g_inv)),
                &vec_d(&dd.g),
            ));
        }
        Ok(out)
    }
}
