use super::DOmega;
use crate::cocycle::{bullet, eval3};
use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::report::{diff_case, sweep, Check, SweepOptions};
use crate::tensor::{LinearMap, Tensor, Vector};

/// `e_j ⋈ ψ` on the basis `e_j ⋈ e^i ↦ j·n + i`.
fn bowtie(n: u32, j: u32, psi: &Vector) -> Vector {
    Vector::from_entries(psi.iter().map(|(i, c)| (j * n + i, c.clone())))
}

impl DOmega {
    /// `w(h ⋈ φ) = ω⁻¹(·, h₁, S(h₂))(h₃•φ) # h₄` from `H ⋈ H*_ω` to `D^ω(H)`.
    pub fn transport(&self) -> LinearMap {
        let h = &self.h;
        let n = h.dim() as u32;
        let mut images = Vec::with_capacity(self.dim());
        for j in 0..n {
            for i in 0..n {
                let mut acc = Vector::zero();
                for (l, c) in h.iterated_coproduct(j, 4).iter() {
                    let s2 = h.antipode().image(l[1]);
                    let kappa = Vector::from_entries((0..n).map(|a| {
                        (
                            a,
                            eval3(self.cocycle.omega_inv(), &h.basis(a), &h.basis(l[0]), s2, h),
                        )
                    }));
                    let phi = h.dual_mul(&kappa, &bullet(h, l[2], &self.dual.basis(i)));
                    acc = acc.axpy(c, &self.smash(&phi, &h.basis(l[3])));
                }
                images.push(acc);
            }
        }
        LinearMap::new(self.dim(), self.dim(), images).expect("square transport")
    }

    /// `w(h ⋈ φ) = (q¹#1)(ε#(h↼q²))(φ#1)` with `h↼ψ = ψ(h₁)h₂` and `q_R` of `H*_ω`.
    pub fn transport_via_q(&self) -> LinearMap {
        let h = &self.h;
        let n = h.dim() as u32;
        let q = self.h_star.pq_elements().q;
        let alg = self.algebra();
        let mut images = Vec::with_capacity(self.dim());
        for j in 0..n {
            for i in 0..n {
                let mut acc = Vector::zero();
                for (qq, c) in q.iter() {
                    let mut moved = Vector::zero();
                    for (ab, d) in h.comul().image(j).iter() {
                        if ab[0] == qq[1] {
                            moved = moved.axpy(d, &h.basis(ab[1]));
                        }
                    }
                    if moved.is_zero() {
                        continue;
                    }
                    let t = alg.mul_all(&[
                        &self.lift_dual(&self.dual.basis(qq[0])),
                        &self.smash(h.counit(), &moved),
                        &self.lift_dual(&self.dual.basis(i)),
                    ]);
                    acc = acc.axpy(c, &t);
                }
                images.push(acc);
            }
        }
        LinearMap::new(self.dim(), self.dim(), images).expect("square transport")
    }

    /// `W(φ # h) = p¹₁(h₁) p²(S(h₂)) φ₃(S(h₃)) φ₁(h₅) h₄ ⋈ p¹₂φ₂` with
    /// `p_R` of `H*_ω`; the inverse of [`DOmega::transport`].
    pub fn transport_inverse(&self) -> LinearMap {
        let h = &self.h;
        let n = h.dim() as u32;
        let p3 = self.h_star.pq_elements().p.expand_leg(0, self.dual.comul());
        let mut images = Vec::with_capacity(self.dim());
        for i in 0..n {
            for j in 0..n {
                let mut acc = Vector::zero();
                for (hl, ch) in h.iterated_coproduct(j, 5).iter() {
                    let sh2 = h.antipode().image(hl[1]);
                    let sh3 = h.antipode().image(hl[2]);
                    for (phi, cphi) in self.dual.iterated_coproduct(i, 3).iter() {
                        if phi[0] != hl[4] {
                            continue;
                        }
                        let Some(a3) = sh3.get(phi[2]) else { continue };
                        for (pp, cp) in p3.iter() {
                            if pp[0] != hl[0] {
                                continue;
                            }
                            let Some(b) = sh2.get(pp[2]) else { continue };
                            let c = &(&(&(ch * cphi) * cp) * a3) * b;
                            let psi = self
                                .dual
                                .mul(&self.dual.basis(pp[1]), &self.dual.basis(phi[1]));
                            acc = acc.axpy(&c, &bowtie(n, hl[3], &psi));
                        }
                    }
                }
                images.push(acc);
            }
        }
        LinearMap::new(self.dim(), self.dim(), images).expect("square transport")
    }

    /// `W∘w = id`, `w∘W = id`, agreement of the two formulas for `w` and
    /// `w(1 ⋈ ε) = 1`.
    pub fn verify_transport(&self, opts: SweepOptions) -> Vec<Check> {
        let w = self.transport();
        let w_inv = self.transport_inverse();
        let w_alt = self.transport_via_q();
        let dim = self.dim();
        let basis: Vec<u32> = (0..dim as u32).collect();
        let f = self.field();
        let t = |v: &Vector| Tensor::from_vector(dim, v);
        let unit_bowtie = Vector::from_entries(self.h.unit().iter().flat_map(|(j, a)| {
            self.h
                .counit()
                .iter()
                .map(move |(i, b)| (j * self.h.dim() as u32 + i, a * b))
        }));
        vec![
            sweep("iso.left_inverse", "W(w(x)) = x", opts, &basis, |&x| {
                let e = Vector::basis(x, f);
                diff_case(x, &t(&w_inv.apply(&w.apply(&e))), &t(&e))
            }),
            sweep("iso.right_inverse", "w(W(x)) = x", opts, &basis, |&x| {
                let e = Vector::basis(x, f);
                diff_case(x, &t(&w.apply(&w_inv.apply(&e))), &t(&e))
            }),
            sweep(
                "iso.two_routes",
                "ω⁻¹(·,h₁,S(h₂))(h₃•φ)#h₄ = (q¹#1)(ε#(h↼q²))(φ#1)",
                opts,
                &basis,
                |&x| diff_case(x, &t(w.image(x)), &t(w_alt.image(x))),
            ),
            Check::equal(
                "iso.unit",
                "w(1 ⋈ ε) = 1",
                &t(&w.apply(&unit_bowtie)),
                &t(self.algebra().unit()),
            ),
        ]
    }

    /// The product of `H ⋈ H*_ω`, then `w(xy) = w(x)w(y)` on all basis
    /// pairs and associativity on all basis triples.
    pub fn verify_deep_iso(&self, opts: SweepOptions) -> Result<Vec<Check>> {
        let dcp = DoubleCrossProduct::new(self)?;
        let w = self.transport();
        let dim = self.dim() as u32;
        let f = self.field();
        let t = |v: &Vector| Tensor::from_vector(dim as usize, v);
        let pairs: Vec<(u32, u32)> = (0..dim)
            .flat_map(|a| (0..dim).map(move |b| (a, b)))
            .collect();
        let table: Vec<Vector> = pairs.iter().map(|&(a, b)| dcp.mul_basis(a, b)).collect();
        let prod = |x: &Vector, y: &Vector| {
            let mut acc = Vector::zero();
            for (a, c) in x.iter() {
                for (b, d) in y.iter() {
                    acc = acc.axpy(&(c * d), &table[(a * dim + b) as usize]);
                }
            }
            acc
        };
        let alg = self.algebra();
        let mult = sweep(
            "iso.multiplicative",
            "w(xy) = w(x)w(y) for the product of H ⋈ H*_ω",
            opts,
            &pairs,
            |&(a, b)| {
                let l = w.apply(&table[(a * dim + b) as usize]);
                let r = alg.mul(w.image(a), w.image(b));
                diff_case(format!("({a},{b})"), &t(&l), &t(&r))
            },
        );
        let triples: Vec<[u32; 3]> = (0..dim.pow(3))
            .map(|r| [r / (dim * dim), (r / dim) % dim, r % dim])
            .collect();
        let assoc = sweep(
            "dcp.associativity",
            "(xy)z = x(yz) in H ⋈ H*_ω",
            opts,
            &triples,
            |&[a, b, c]| {
                let (ea, eb, ec) = (
                    Vector::basis(a, f),
                    Vector::basis(b, f),
                    Vector::basis(c, f),
                );
                let l = prod(&prod(&ea, &eb), &ec);
                let r = prod(&ea, &prod(&eb, &ec));
                diff_case(format!("({a},{b},{c})"), &t(&l), &t(&r))
            },
        );
        Ok(vec![mult, assoc])
    }
}

/// The quantum double `H ⋈ H*_ω` of the quasi-Hopf algebra `H*_ω`, on the
/// basis `e_j ⋈ e^i ↦ j·n + i`:
/// `(a⋈k)(a'⋈k') = (Ω¹⇀a↼Ω⁵)(Ω²k₁⇀a'↼S⁻¹(k₃)Ω⁴) ⋈ Ω³k₂k'`
/// with `κ⇀a↼κ' = κ'(a₁)κ(a₃)a₂`.
#[derive(Clone, Debug)]
pub struct DoubleCrossProduct {
    h: HopfAlgebra,
    dual: HopfAlgebra,
    omega: Tensor,
    s_inv: LinearMap,
}

impl DoubleCrossProduct {
    /// `Ω = (id⊗id⊗id⊗S⁻¹⊗S⁻¹)((1⊗1⊗1⊗f)·X¹₍₁,₁₎y¹x¹ ⊗ X¹₍₁,₂₎y²x²₁ ⊗ X¹₂y³x²₂ ⊗ X²x³ ⊗ X³)`.
    pub fn new(d: &DOmega) -> Result<DoubleCrossProduct> {
        let k = &d.h_star;
        let x_big = k.delta_leg(&k.delta_leg(k.phi(), 0), 0);
        let y = k.embed(k.phi_inv(), 5, &[0, 1, 2]);
        let x = k.embed(&k.delta_leg(k.phi_inv(), 1), 5, &[0, 1, 2, 3]);
        let p5 = k.chain(&[&x_big, &y, &x]);
        let (f, _) = k.drinfeld_twist()?;
        let omega = k
            .mul_t(&k.embed(&f, 5, &[3, 4]), &p5)
            .map_leg(3, k.antipode_inv())
            .map_leg(4, k.antipode_inv());
        Ok(DoubleCrossProduct {
            h: d.h.clone(),
            dual: d.dual.clone(),
            omega,
            s_inv: k.antipode_inv().clone(),
        })
    }

    pub fn omega(&self) -> &Tensor {
        &self.omega
    }

    /// `κ⇀e_a↼κ'`.
    fn hit(&self, kappa: &Vector, a: u32, kappa_r: &Vector) -> Vector {
        let f = self.h.field();
        let mut acc = Vector::zero();
        for (l, c) in self.h.iterated_coproduct(a, 3).iter() {
            let (Some(r), Some(s)) = (kappa_r.get(l[0]), kappa.get(l[2])) else {
                continue;
            };
            acc = acc.axpy(&(&(c * r) * s), &Vector::basis(l[1], f));
        }
        acc
    }

    pub fn mul_basis(&self, x: u32, y: u32) -> Vector {
        let n = self.h.dim() as u32;
        let (a, k) = (x / n, x % n);
        let (a2, k2) = (y / n, y % n);
        let du = &self.dual;
        let mut acc = Vector::zero();
        for (o, co) in self.omega.iter() {
            let left = self.hit(&du.basis(o[0]), a, &du.basis(o[4]));
            if left.is_zero() {
                continue;
            }
            for (kk, ck) in du.iterated_coproduct(k, 3).iter() {
                let kappa = du.mul(&du.basis(o[1]), &du.basis(kk[0]));
                let kappa_r = du.mul(self.s_inv.image(kk[2]), &du.basis(o[3]));
                let right = self.hit(&kappa, a2, &kappa_r);
                if right.is_zero() {
                    continue;
                }
                let first = self.h.mul(&left, &right);
                let second =
                    du.algebra()
                        .mul_all(&[&du.basis(o[2]), &du.basis(kk[1]), &du.basis(k2)]);
                let c = co * ck;
                for (j, cj) in first.iter() {
                    acc = acc.axpy(&(&c * cj), &bowtie(n, j, &second));
                }
            }
        }
        acc
    }
}
