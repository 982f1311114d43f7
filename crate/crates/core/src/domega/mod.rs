//! The twisted quantum double `D^ω(H) = H*_ω ⋈ H` of a cocommutative `H`.

mod crossed;
mod export;
mod iso;
mod modular;

pub use crossed::CrossedProduct;
pub use iso::DoubleCrossProduct;
pub use modular::ModularElements;

use crate::cocycle::{Cocycle3, ComultKernel, TwoCocycle};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::quasihopf::{verify_qt, QTStructure, QuasiHopfAlgebra, QuasiHopfData};
use crate::report::{diff_case, sweep, Check, Report, SweepOptions};
use crate::scalar::Field;
use crate::tensor::{Algebra, LinearMap, Tensor, TensorMap, Vector};

/// `D^ω(H)` on the basis `e^i # e_j ↦ i·n + j`, with every derived
/// structure element kept alongside.
#[derive(Clone, Debug)]
pub struct DOmega {
    h: HopfAlgebra,
    dual: HopfAlgebra,
    cocycle: Cocycle3,
    sigma: TwoCocycle,
    kernel: ComultKernel,
    beta: Vector,
    beta_inv: Vector,
    h_star: QuasiHopfAlgebra,
    k: QuasiHopfAlgebra,
    qt: QTStructure,
}

/// `φ # x` for `φ ∈ H*`, `x ∈ H`.
fn smash_in(n: u32, phi: &Vector, x: &Vector) -> Vector {
    Vector::from_entries(
        phi.iter()
            .flat_map(|(i, a)| x.iter().map(move |(j, b)| (i * n + j, a * b))),
    )
}

impl DOmega {
    /// Assembles the structure maps. Only associativity of the crossed
    /// product and the invertibility conditions are enforced here; the
    /// axioms are swept by [`DOmega::verify`].
    pub fn new(h: &HopfAlgebra, cocycle: &Cocycle3) -> Result<DOmega> {
        if !h.is_cocommutative() {
            return Err(Error::UnsupportedInput(
                "D^ω(H) needs a cocommutative H".into(),
            ));
        }
        let n = h.dim() as u32;
        let dim = h.dim() * h.dim();
        let f = h.field().clone();
        let dual = h.dual();
        let sigma = cocycle.theta(h)?;
        let kernel = cocycle.gamma(h)?;
        let beta = cocycle.beta(h);
        let beta_inv = dual
            .algebra()
            .invert(&Tensor::from_vector(h.dim(), &beta))
            .map_err(|_| Error::NotInvertible("β".into()))?
            .to_vector();
        let h_star = QuasiHopfAlgebra::h_star_omega(h, cocycle)?;
        let alg = CrossedProduct::new(h, &sigma, SweepOptions { fail_fast: true })?.into_algebra();
        let eps = h.counit();
        let one = h.unit();
        let smash = |phi: &Vector, x: &Vector| smash_in(n, phi, x);

        // Δ(e^i#e_j) = Σ γ(x,y;j₁)(e^x e^a # j₂)⊗(e^y e^b # j₃), Δ(e^i) = Σ e^a⊗e^b
        let mut comul = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..n {
                let mut t = Tensor::zero(dim, 2);
                for (jl, cj) in h.iterated_coproduct(j, 3).iter() {
                    for (xy, g) in kernel.nu(jl[0]).iter() {
                        for (ab, cab) in dual.comul().image(i).iter() {
                            let c = &(cj * g) * cab;
                            let left = smash(
                                &dual.mul(&dual.basis(xy[0]), &dual.basis(ab[0])),
                                &h.basis(jl[1]),
                            );
                            let right = smash(
                                &dual.mul(&dual.basis(xy[1]), &dual.basis(ab[1])),
                                &h.basis(jl[2]),
                            );
                            t = t.add(&Tensor::product_of(dim, &[&left, &right]).scale(&c));
                        }
                    }
                }
                comul.push(t);
            }
        }
        let comul = TensorMap::new(dim, dim, 2, comul)?;

        let counit = Vector::from_entries(
            one.iter()
                .flat_map(|(i, a)| eps.iter().map(move |(j, b)| (i * n + j, a * b))),
        );

        // s(e^i#e_j) = (ε#S(j₁))(ψ#1),
        // ψ = γ⁻¹(x,y;j₄) σ⁻¹(j₂,S(j₃)) S̄(e^i e^x) e^y
        let s_bar = dual.antipode();
        let mut images = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Vector::zero();
                for (jl, cj) in h.iterated_coproduct(j, 4).iter() {
                    let si = sigma.sigma_inv(&h.basis(jl[1]), h.antipode().image(jl[2]), h);
                    let mut psi = Vector::zero();
                    for (xy, g) in kernel.nu_inv(jl[3]).iter() {
                        let ex = dual.mul(&dual.basis(i), &dual.basis(xy[0]));
                        let term =
                            dual.algebra()
                                .mul_all(&[&si, &s_bar.apply(&ex), &dual.basis(xy[1])]);
                        psi = psi.axpy(g, &term);
                    }
                    let left = smash(eps, h.antipode().image(jl[0]));
                    acc = acc.axpy(cj, &alg.mul(&left, &smash(&psi, one)));
                }
                images.push(acc);
            }
        }
        let antipode = LinearMap::new(dim, dim, images)?;

        let iota = LinearMap::new(
            h.dim(),
            dim,
            (0..n).map(|a| smash(&Vector::basis(a, &f), one)).collect(),
        )?;
        let phi = cocycle.omega_inv().map_all(&iota);
        let phi_inv = cocycle.omega().map_all(&iota);
        let k = QuasiHopfAlgebra::new(QuasiHopfData {
            alg: alg.clone(),
            comul,
            counit,
            phi,
            phi_inv: Some(phi_inv),
            antipode,
            alpha: alg.unit().clone(),
            beta: smash(&beta, one),
        })?;

        // R = Σ_i (e^i#1)⊗(ε#e_i)
        let mut r = Tensor::zero(dim, 2);
        for i in 0..n {
            let e = Vector::basis(i, &f);
            r = r.add(&Tensor::product_of(
                dim,
                &[&smash(&e, one), &smash(eps, &e)],
            ));
        }
        let qt = QTStructure::new(&k, r)?;
        Ok(DOmega {
            h: h.clone(),
            dual,
            cocycle: cocycle.clone(),
            sigma,
            kernel,
            beta,
            beta_inv,
            h_star,
            k,
            qt,
        })
    }

    /// [`DOmega::new`] followed by [`DOmega::verify_structure`]; any failed
    /// check aborts with the failures attached.
    pub fn build(
        h: &HopfAlgebra,
        cocycle: &Cocycle3,
        opts: SweepOptions,
    ) -> Result<(DOmega, Report)> {
        let d = DOmega::new(h, cocycle)?;
        let rep = d.verify_structure(opts)?;
        if !rep.all_passed() {
            return Err(Error::VerificationFailed(rep.failed().cloned().collect()));
        }
        Ok((d, rep))
    }

    pub fn field(&self) -> &Field {
        self.h.field()
    }

    /// `H`.
    pub fn base(&self) -> &HopfAlgebra {
        &self.h
    }

    /// `H*` as a Hopf algebra.
    pub fn dual(&self) -> &HopfAlgebra {
        &self.dual
    }

    pub fn cocycle(&self) -> &Cocycle3 {
        &self.cocycle
    }

    pub fn sigma(&self) -> &TwoCocycle {
        &self.sigma
    }

    pub fn kernel(&self) -> &ComultKernel {
        &self.kernel
    }

    /// `β ∈ H*` of `H*_ω`.
    pub fn beta_form(&self) -> &Vector {
        &self.beta
    }

    pub fn beta_form_inv(&self) -> &Vector {
        &self.beta_inv
    }

    /// `H*_ω`.
    pub fn h_star_omega(&self) -> &QuasiHopfAlgebra {
        &self.h_star
    }

    /// `D^ω(H)` as a quasi-Hopf algebra.
    pub fn quasi_hopf(&self) -> &QuasiHopfAlgebra {
        &self.k
    }

    pub fn algebra(&self) -> &Algebra {
        self.k.algebra()
    }

    pub fn qt(&self) -> &QTStructure {
        &self.qt
    }

    /// `dim H`.
    pub fn base_dim(&self) -> usize {
        self.h.dim()
    }

    pub fn dim(&self) -> usize {
        self.k.dim()
    }

    /// Index of `e^i # e_j`.
    pub fn index(&self, i: u32, j: u32) -> u32 {
        i * self.h.dim() as u32 + j
    }

    /// `φ # x`.
    pub fn smash(&self, phi: &Vector, x: &Vector) -> Vector {
        smash_in(self.h.dim() as u32, phi, x)
    }

    /// `φ # 1`.
    pub fn lift_dual(&self, phi: &Vector) -> Vector {
        self.smash(phi, self.h.unit())
    }

    /// The cocycle data, `H*_ω`, the quasi-Hopf and quasitriangular axioms
    /// of `D^ω(H)`, the identities for `u`, the square of the antipode, the
    /// transport maps, the cointegral of `H*_ω` and the `Δ(ζβ#1)` identity.
    pub fn verify_structure(&self, opts: SweepOptions) -> Result<Report> {
        let h = &self.h;
        let mut rep = self.cocycle.verify(h, opts);
        rep.extend(self.cocycle.verify_antipode_identities(h, opts).checks);
        rep.extend(self.sigma.verify(h, opts).checks);
        rep.push(self.kernel.check_normalized(h));
        rep.extend(self.h_star.verify(opts).checks.into_iter().map(|mut c| {
            c.id = format!("hstar.{}", c.id);
            c
        }));
        rep.extend(self.k.verify(opts).checks);
        rep.extend(verify_qt(&self.k, self.qt.r(), opts)?.checks);
        rep.extend(self.qt.verify_u(&self.k, opts)?.checks);
        rep.extend(self.verify_antipode_square(opts));
        rep.extend(self.verify_transport(opts));
        rep.extend(self.verify_cointegral()?);
        rep.push(self.family_delta_check(&self.dual_grouplikes()));
        Ok(rep)
    }

    /// [`DOmega::verify_structure`] followed by
    /// [`DOmega::verify_modular_elements`].
    pub fn verify(&self, opts: SweepOptions) -> Result<Report> {
        let mut rep = self.verify_structure(opts)?;
        rep.extend(self.verify_modular_elements()?);
        Ok(rep)
    }

    /// `s²(x) = (β⁻¹#1)x(β#1)` with `β⁻¹ = β∘S` checked on its own.
    pub fn verify_antipode_square(&self, opts: SweepOptions) -> Vec<Check> {
        let k = &self.k;
        let via_s = self.dual.antipode().apply(&self.beta);
        let c1 = Check::equal(
            "domega.beta_inverse",
            "β⁻¹ = β∘S",
            &Tensor::from_vector(self.h.dim(), &self.beta_inv),
            &Tensor::from_vector(self.h.dim(), &via_s),
        );
        let b = self.lift_dual(&self.beta);
        let bi = self.lift_dual(&self.beta_inv);
        let basis: Vec<u32> = (0..self.dim() as u32).collect();
        let c2 = sweep(
            "domega.antipode_square",
            "s²(x) = (β⁻¹#1)x(β#1)",
            opts,
            &basis,
            |&x| {
                let e = k.basis(x);
                diff_case(
                    x,
                    &k.elem(&k.s(&k.s(&e))),
                    &k.elem(&k.mul_all(&[&bi, &e, &b])),
                )
            },
        );
        vec![c1, c2]
    }
}
