use super::QuasiHopfAlgebra;
use crate::error::{Error, Result};
use crate::report::{diff_case, sweep, Check, Report, SweepOptions};
use crate::tensor::{contract, Factor, Tensor, Vector};

/// An `R`-matrix with the elements derived from it.
#[derive(Clone, Debug)]
pub struct QTStructure {
    r: Tensor,
    r_inv: Tensor,
    u: Vector,
    u_inv: Vector,
    f: Tensor,
    f_inv: Tensor,
}

impl QTStructure {
    /// Inverts `R`, builds the Drinfeld twist and `u = S(R²p²)αR¹p¹`.
    /// The axioms are checked separately by [`verify_qt`] and
    /// [`QTStructure::verify_u`].
    pub fn new(k: &QuasiHopfAlgebra, r: Tensor) -> Result<QTStructure> {
        let r_inv = k.invert(&r).map_err(|_| Error::NotInvertible("R".into()))?;
        let (f, f_inv) = k.drinfeld_twist()?;
        let u = element_u(k, &r);
        let u_inv = k
            .invert(&k.elem(&u))
            .map_err(|_| Error::UNotInvertible)?
            .to_vector();
        Ok(QTStructure {
            r,
            r_inv,
            u,
            u_inv,
            f,
            f_inv,
        })
    }

    pub fn r(&self) -> &Tensor {
        &self.r
    }

    pub fn r_inv(&self) -> &Tensor {
        &self.r_inv
    }

    pub fn u(&self) -> &Vector {
        &self.u
    }

    pub fn u_inv(&self) -> &Vector {
        &self.u_inv
    }

    pub fn f(&self) -> &Tensor {
        &self.f
    }

    pub fn f_inv(&self) -> &Tensor {
        &self.f_inv
    }

    /// `R₂₁ = R²⊗R¹`.
    pub fn r21(&self) -> Tensor {
        self.r.permute(&[1, 0]).expect("two legs")
    }

    /// `S²(h) = uhu⁻¹`, `S(α)u = S(R²)αR¹`,
    /// `Δ(u) = f⁻¹(S⊗S)(f₂₁)(u⊗u)(R₂₁R)⁻¹`, `uS(u) = S(u)u` central, `ε(u) = 1`.
    pub fn verify_u(&self, k: &QuasiHopfAlgebra, opts: SweepOptions) -> Result<Report> {
        let s = k.antipode();
        let basis: Vec<u32> = (0..k.dim() as u32).collect();
        let mut rep = Report::default();
        rep.push(sweep(
            "qt.u_conjugation",
            "S²(h) = uhu⁻¹",
            opts,
            &basis,
            |&h| {
                let e = k.basis(h);
                let l = k.s(&k.s(&e));
                let r = k.mul_all(&[&self.u, &e, &self.u_inv]);
                diff_case(h, &k.elem(&l), &k.elem(&r))
            },
        ));
        let rhs = contract(
            k.algebra(),
            &[&self.r],
            &[vec![
                Factor::Mapped(0, 1, s),
                Factor::Element(k.alpha()),
                Factor::Leg(0, 0),
            ]],
        );
        rep.push(Check::equal(
            "qt.u_alpha",
            "S(α)u = S(R²)αR¹",
            &k.elem(&k.mul(&k.s(k.alpha()), &self.u)),
            &rhs,
        ));
        let r21r = k.mul_t(&self.r21(), &self.r);
        let r21r_inv = k.invert(&r21r)?;
        let f21 = self.f.permute(&[1, 0]).expect("two legs").map_all(s);
        let uu = Tensor::product_of(k.dim(), &[&self.u, &self.u]);
        let rhs = k.chain(&[&self.f_inv, &f21, &uu, &r21r_inv]);
        rep.push(Check::equal(
            "qt.u_comul",
            "Δ(u) = f⁻¹(S⊗S)(f₂₁)(u⊗u)(R₂₁R)⁻¹",
            &k.delta(&self.u),
            &rhs,
        ));
        let su = k.s(&self.u);
        let usu = k.mul(&self.u, &su);
        rep.push(Check::equal(
            "qt.u_su_commute",
            "uS(u) = S(u)u",
            &k.elem(&usu),
            &k.elem(&k.mul(&su, &self.u)),
        ));
        rep.push(Check::single(
            "qt.u_su_central",
            "uS(u) is central",
            k.algebra().is_central(&usu),
            "uS(u) not central",
        ));
        rep.push(Check::single(
            "qt.u_counit",
            "ε(u) = 1",
            k.eps(&self.u).is_one(),
            format!("ε(u) = {}", k.eps(&self.u)),
        ));
        Ok(rep)
    }
}

/// `u = S(R²p²)αR¹p¹`.
pub fn element_u(k: &QuasiHopfAlgebra, r: &Tensor) -> Vector {
    let s = k.antipode();
    let p = k.pq_elements().p;
    contract(
        k.algebra(),
        &[r, &p],
        &[vec![
            Factor::Mapped(1, 1, s),
            Factor::Mapped(0, 1, s),
            Factor::Element(k.alpha()),
            Factor::Leg(0, 0),
            Factor::Leg(1, 0),
        ]],
    )
    .to_vector()
}

/// `Δ^{cop}(h)R = RΔ(h)`, both hexagons and `ε(R¹)R² = ε(R²)R¹ = 1`.
///
/// `Φ_{ijk}` places `X¹, X², X³` on legs `i, j, k`; e.g. `Φ₃₁₂ = X²⊗X³⊗X¹`.
pub fn verify_qt(k: &QuasiHopfAlgebra, r: &Tensor, opts: SweepOptions) -> Result<Report> {
    k.invert(r).map_err(|_| Error::NotInvertible("R".into()))?;
    let basis: Vec<u32> = (0..k.dim() as u32).collect();
    let mut rep = Report::default();
    rep.push(sweep(
        "qt.almost_cocommutative",
        "Δ^{cop}(h)R = RΔ(h)",
        opts,
        &basis,
        |&h| {
            let e = k.basis(h);
            diff_case(h, &k.mul_t(&k.delta_cop(&e), r), &k.mul_t(r, &k.delta(&e)))
        },
    ));
    let phi = k.phi();
    let phi_inv = k.phi_inv();
    let perm = |t: &Tensor, p: &[usize]| t.permute(p).expect("three legs");
    let r13 = k.embed(r, 3, &[0, 2]);
    let r23 = k.embed(r, 3, &[1, 2]);
    let r12 = k.embed(r, 3, &[0, 1]);
    let lhs1 = k.delta_leg(r, 0);
    let rhs1 = k.chain(&[
        &perm(phi, &[1, 2, 0]),
        &r13,
        &perm(phi_inv, &[0, 2, 1]),
        &r23,
        phi,
    ]);
    rep.push(Check::equal(
        "qt.hexagon_first",
        "(Δ⊗id)(R) = Φ₃₁₂R₁₃Φ₁₃₂⁻¹R₂₃Φ",
        &lhs1,
        &rhs1,
    ));
    let lhs2 = k.delta_leg(r, 1);
    let rhs2 = k.chain(&[
        &perm(phi_inv, &[2, 0, 1]),
        &r13,
        &perm(phi, &[1, 0, 2]),
        &r12,
        phi_inv,
    ]);
    rep.push(Check::equal(
        "qt.hexagon_second",
        "(id⊗Δ)(R) = Φ₂₃₁⁻¹R₁₃Φ₂₁₃R₁₂Φ⁻¹",
        &lhs2,
        &rhs2,
    ));
    let one = k.one(1);
    rep.push(Check::equal(
        "qt.counit_first",
        "ε(R¹)R² = 1",
        &k.eps_leg(r, 0),
        &one,
    ));
    rep.push(Check::equal(
        "qt.counit_second",
        "ε(R²)R¹ = 1",
        &k.eps_leg(r, 1),
        &one,
    ));
    Ok(rep)
}
