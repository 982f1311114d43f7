use super::{QTStructure, QuasiHopfAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{left_integral, modular_form, single_normalized};
use crate::scalar::Scalar;
use crate::tensor::linalg::nullspace;
use crate::tensor::{contract, Factor, Vector};

/// A left integral `t`, a left cointegral `λ` with `λ(S⁻¹(t)) = 1`, and the
/// modular elements `g̲ ∈ K`, `μ ∈ K*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData {
    pub t: Vector,
    pub lambda: Vector,
    pub g: Vector,
    pub mu: Vector,
}

impl QuasiHopfAlgebra {
    /// `t` with `ht = ε(h)t`.
    pub fn quasi_integral(&self) -> Result<Vector> {
        left_integral(self.algebra(), self.counit())
    }

    /// `λ ∈ K*` with `λ(t₂)t₁ = λ(t)βS⁻¹(α)`, normalized by `λ(S⁻¹(t)) = 1`.
    pub fn quasi_cointegral(&self, t: &Vector) -> Result<Vector> {
        let n = self.dim();
        let f = self.field();
        let w = self.mul(self.beta(), &self.s_inv(self.alpha()));
        let dt = self.delta(t);
        let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); n];
        for (ab, c) in dt.iter() {
            rows[ab[0] as usize].push((ab[1], c.clone()));
        }
        for (k, wk) in w.iter() {
            for (j, tj) in t.iter() {
                rows[k as usize].push((j, -&(wk * tj)));
            }
        }
        let rows: Vec<Vector> = rows.into_iter().map(Vector::from_entries).collect();
        let lambda = single_normalized(nullspace(n, &rows, f)).map_err(|e| match e {
            Error::NoIntegral => Error::CointegralZero,
            e => e,
        })?;
        let norm = lambda.dot(&self.s_inv(t), f);
        if norm.is_zero() {
            return Err(Error::NormalizationImpossible);
        }
        Ok(lambda.scale(&norm.inv()?))
    }

    /// `μ` with `th = μ(h)t`.
    pub fn quasi_modular_mu(&self, t: &Vector) -> Result<Vector> {
        modular_form(self.algebra(), t)
    }

    /// `g̲ = λ(S⁻¹(q²t₂p²))q¹t₁p¹`.
    pub fn modular_g(&self, t: &Vector, lambda: &Vector) -> Vector {
        let pq = self.pq_elements();
        let dt = self.delta(t);
        let two = contract(
            self.algebra(),
            &[&pq.q, &dt, &pq.p],
            &[
                vec![Factor::Leg(0, 0), Factor::Leg(1, 0), Factor::Leg(2, 0)],
                vec![Factor::Leg(0, 1), Factor::Leg(1, 1), Factor::Leg(2, 1)],
            ],
        );
        two.map_leg(1, self.antipode_inv())
            .contract_leg(1, lambda)
            .to_vector()
    }

    pub fn modular_data(&self) -> Result<ModularData> {
        let t = self.quasi_integral()?;
        let lambda = self.quasi_cointegral(&t)?;
        let g = self.modular_g(&t, &lambda);
        let mu = self.quasi_modular_mu(&t)?;
        Ok(ModularData { t, lambda, g, mu })
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        let t = self.quasi_integral()?;
        Ok(&self.quasi_modular_mu(&t)? == self.counit())
    }

    /// `μ(X¹R²p²S(X³)f¹)(S(X²)f²)R¹p¹S(g̲⁻¹)`, using that `μ` is an algebra
    /// map to split the scalar factor along the product.
    pub fn u_s_u_formula(&self, qt: &QTStructure, data: &ModularData) -> Result<Vector> {
        let f = self.field();
        let mu = |v: &Vector| v.dot(&data.mu, f);
        let s = self.antipode();
        let mut a = Vector::zero();
        for (x, c) in self.phi().iter() {
            let e = |i: usize| self.basis(x[i]);
            let scalar = &(c * &mu(&e(0))) * &mu(&self.s(&e(2)));
            a = a.axpy(&scalar, &s.apply(&e(1)));
        }
        let right = |t: &crate::tensor::Tensor, keep: usize| {
            let mut acc = Vector::zero();
            for (ix, c) in t.iter() {
                let other = 1 - keep;
                acc = acc.axpy(&(c * &mu(&self.basis(ix[other]))), &self.basis(ix[keep]));
            }
            acc
        };
        let ff = right(qt.f(), 1);
        let rr = right(qt.r(), 0);
        let pp = right(&self.pq_elements().p, 0);
        let g_inv = self
            .invert(&self.elem(&data.g))
            .map_err(|_| Error::NotInvertible("modular element".into()))?
            .to_vector();
        Ok(self.mul_all(&[&a, &ff, &rr, &pp, &self.s(&g_inv)]))
    }
}
