//! Normalized Sweedler 3-cocycles on a cocommutative Hopf algebra and the
//! forms derived from them.
//!
//! Formulas use compressed Sweedler notation: every repeated occurrence of
//! an argument stands for its own leg of the iterated coproduct. Since `H`
//! is cocommutative the order in which legs are handed out is irrelevant.

mod builtin;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::report::{sweep, Check, Report, SweepOptions, Violation};
use crate::scalar::Scalar;
use crate::tensor::{invert_form, Idx, Tensor, Vector};

pub use builtin::{
    cyclic_cocycle, exponent_table, exponent_table_cocycle, product_cyclic_cocycle, trivial_cocycle,
};

/// Sums `f(legs)` weighted by coefficients over the iterated coproducts
/// `Δ^{(k)}(e_i)` of each `(i, k)` in `elems`.
pub fn sweedler_sum<F>(h: &HopfAlgebra, elems: &[(u32, usize)], mut f: F) -> Scalar
where
    F: FnMut(&[&[u32]]) -> Scalar,
{
    let mut acc = h.field().zero();
    let mut legs: Vec<&[u32]> = Vec::with_capacity(elems.len());
    rec(h, elems, &mut legs, None, &mut f, &mut acc);
    acc
}

fn rec<'a, F>(
    h: &'a HopfAlgebra,
    elems: &[(u32, usize)],
    legs: &mut Vec<&'a [u32]>,
    coeff: Option<Scalar>,
    f: &mut F,
    acc: &mut Scalar,
) where
    F: FnMut(&[&[u32]]) -> Scalar,
{
    if legs.len() == elems.len() {
        let v = f(legs);
        if !v.is_zero() {
            let c = match coeff {
                Some(c) => &c * &v,
                None => v,
            };
            *acc = &*acc + &c;
        }
        return;
    }
    let (i, k) = elems[legs.len()];
    for (idx, c) in h.iterated_coproduct(i, k).iter() {
        let nc = match &coeff {
            Some(x) => x * c,
            None => c.clone(),
        };
        legs.push(idx.as_slice());
        rec(h, elems, legs, Some(nc), f, acc);
        legs.pop();
    }
}

/// Evaluates a trilinear form on three elements.
pub fn eval3(form: &Tensor, a: &Vector, b: &Vector, c: &Vector, h: &HopfAlgebra) -> Scalar {
    let mut acc = h.field().zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            let xy = x * y;
            for (k, z) in c.iter() {
                if let Some(w) = form.get(&[i, j, k]) {
                    acc = &acc + &(&(&xy * z) * w);
                }
            }
        }
    }
    acc
}

/// Helpers for building arguments out of Sweedler legs.
struct Args<'h> {
    h: &'h HopfAlgebra,
}

impl<'h> Args<'h> {
    fn e(&self, i: u32) -> Vector {
        self.h.basis(i)
    }

    fn s(&self, i: u32) -> Vector {
        self.h.antipode().image(i).clone()
    }

    fn prod(&self, factors: &[Vector]) -> Vector {
        let refs: Vec<&Vector> = factors.iter().collect();
        self.h.algebra().mul_all(&refs)
    }
}

/// `h • φ`, i.e. `a ↦ φ(S(h₁) a h₂)`.
pub fn bullet(h: &HopfAlgebra, x: u32, phi: &Vector) -> Vector {
    let f = h.field();
    Vector::from_entries((0..h.dim() as u32).map(|a| {
        let moved = h.adjoint(&h.basis(a), x);
        (a, phi.dot(&moved, f))
    }))
}

/// A normalized 3-cocycle `ω` together with its convolution inverse.
#[derive(Clone, Debug)]
pub struct Cocycle3 {
    omega: Tensor,
    omega_inv: Tensor,
}

impl Cocycle3 {
    /// Wraps a trilinear form; fails when it is not convolution invertible.
    /// The cocycle identities are checked separately by [`Cocycle3::verify`].
    pub fn new(h: &HopfAlgebra, omega: Tensor) -> Result<Cocycle3> {
        if omega.legs() != 3 || omega.dim() != h.dim() {
            return Err(Error::InvalidCocycle(
                "expected a trilinear form on H".into(),
            ));
        }
        let omega_inv = invert_form(&omega, h.coalgebra())?;
        Ok(Cocycle3 { omega, omega_inv })
    }

    /// Like [`Cocycle3::new`] but refuses forms failing the cocycle sweep.
    pub fn verified(h: &HopfAlgebra, omega: Tensor) -> Result<Cocycle3> {
        let c = Cocycle3::new(h, omega)?;
        let r = c.verify(h, SweepOptions { fail_fast: true });
        if let Some(bad) = r.failed().next() {
            return Err(Error::CocycleConditionFailed(Box::new(bad.clone())));
        }
        Ok(c)
    }

    pub fn omega(&self) -> &Tensor {
        &self.omega
    }

    pub fn omega_inv(&self) -> &Tensor {
        &self.omega_inv
    }

    fn w(&self, i: u32, j: u32, k: u32, h: &HopfAlgebra) -> Scalar {
        self.omega.coeff(&[i, j, k], h.field())
    }

    /// The 3-cocycle identity on all basis 4-tuples, normalization on all
    /// pairs, and `ω * ω⁻¹ = ε`.
    pub fn verify(&self, h: &HopfAlgebra, opts: SweepOptions) -> Report {
        let n = h.dim() as u32;
        let a = Args { h };
        let quads: Vec<[u32; 4]> = (0..n.pow(4))
            .map(|r| [r / (n * n * n), (r / (n * n)) % n, (r / n) % n, r % n])
            .collect();
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        let om = &self.omega;
        let mut rep = Report::default();
        rep.push(sweep(
            "cocycle.three_cocycle",
            "ω(x,y,zt)ω(xy,z,t) = ω(y,z,t)ω(x,yz,t)ω(x,y,z)",
            opts,
            &quads,
            |&[x, y, z, t]| {
                let lhs = sweedler_sum(h, &[(x, 2), (y, 2), (z, 2), (t, 2)], |l| {
                    let (x, y, z, t) = (l[0], l[1], l[2], l[3]);
                    let first = eval3(
                        om,
                        &a.e(x[0]),
                        &a.e(y[0]),
                        &a.prod(&[a.e(z[0]), a.e(t[0])]),
                        h,
                    );
                    if first.is_zero() {
                        return first;
                    }
                    &first
                        * &eval3(
                            om,
                            &a.prod(&[a.e(x[1]), a.e(y[1])]),
                            &a.e(z[1]),
                            &a.e(t[1]),
                            h,
                        )
                });
                let rhs = sweedler_sum(h, &[(x, 2), (y, 3), (z, 3), (t, 2)], |l| {
                    let (x, y, z, t) = (l[0], l[1], l[2], l[3]);
                    let first = self.w(y[0], z[0], t[0], h);
                    if first.is_zero() {
                        return first;
                    }
                    let second = eval3(
                        om,
                        &a.e(x[0]),
                        &a.prod(&[a.e(y[1]), a.e(z[1])]),
                        &a.e(t[1]),
                        h,
                    );
                    &(&first * &second) * &self.w(x[1], y[2], z[2], h)
                });
                (lhs != rhs).then(|| Violation::note(format!("({x},{y},{z},{t}): {lhs} vs {rhs}")))
            },
        ));
        rep.push(sweep(
            "cocycle.normalized",
            "ω(1,x,y) = ω(x,1,y) = ω(x,y,1) = ε(x)ε(y)",
            opts,
            &pairs,
            |&(x, y)| {
                let one = h.unit();
                let target = &h.counit_of(x) * &h.counit_of(y);
                let (ex, ey) = (a.e(x), a.e(y));
                let vals = [
                    eval3(om, one, &ex, &ey, h),
                    eval3(om, &ex, one, &ey, h),
                    eval3(om, &ex, &ey, one, h),
                ];
                vals.iter()
                    .any(|v| *v != target)
                    .then(|| Violation::note(format!("({x},{y})")))
            },
        ));
        let triples: Vec<[u32; 3]> = (0..n.pow(3))
            .map(|r| [r / (n * n), (r / n) % n, r % n])
            .collect();
        rep.push(sweep(
            "cocycle.inverse",
            "ω(x₁,y₁,z₁)ω⁻¹(x₂,y₂,z₂) = ε(x)ε(y)ε(z)",
            opts,
            &triples,
            |&[x, y, z]| {
                let v = sweedler_sum(h, &[(x, 2), (y, 2), (z, 2)], |l| {
                    &self.w(l[0][0], l[1][0], l[2][0], h)
                        * &self
                            .omega_inv
                            .coeff(&[l[0][1], l[1][1], l[2][1]], h.field())
                });
                let target = &(&h.counit_of(x) * &h.counit_of(y)) * &h.counit_of(z);
                (v != target).then(|| Violation::note(format!("({x},{y},{z})")))
            },
        ));
        rep
    }

    /// `ω(S(h),h,S(h)) = ω⁻¹(h,S(h),h)` and
    /// `ω(gh,S(h),h)ω(S(h),h,S(h))ω⁻¹(g,h,S(h)) = ε(g)ε(h)`.
    pub fn verify_antipode_identities(&self, h: &HopfAlgebra, opts: SweepOptions) -> Report {
        let n = h.dim() as u32;
        let a = Args { h };
        let om = &self.omega;
        let oi = &self.omega_inv;
        let singles: Vec<u32> = (0..n).collect();
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        let mut rep = Report::default();
        rep.push(sweep(
            "cocycle.omega_antipode_inverse",
            "ω(S(h),h,S(h)) = ω⁻¹(h,S(h),h)",
            opts,
            &singles,
            |&x| {
                let lhs = sweedler_sum(h, &[(x, 3)], |l| {
                    eval3(om, &a.s(l[0][0]), &a.e(l[0][1]), &a.s(l[0][2]), h)
                });
                let rhs = sweedler_sum(h, &[(x, 3)], |l| {
                    eval3(oi, &a.e(l[0][0]), &a.s(l[0][1]), &a.e(l[0][2]), h)
                });
                (lhs != rhs).then(|| Violation::note(format!("{x}: {lhs} vs {rhs}")))
            },
        ));
        rep.push(sweep(
            "cocycle.closing_identity",
            "ω(gh,S(h),h)ω(S(h),h,S(h))ω⁻¹(g,h,S(h)) = ε(g)ε(h)",
            opts,
            &pairs,
            |&(g, x)| {
                let v = sweedler_sum(h, &[(g, 2), (x, 8)], |l| {
                    let (g, x) = (l[0], l[1]);
                    let first = eval3(
                        om,
                        &a.prod(&[a.e(g[0]), a.e(x[0])]),
                        &a.s(x[1]),
                        &a.e(x[2]),
                        h,
                    );
                    if first.is_zero() {
                        return first;
                    }
                    let second = eval3(om, &a.s(x[3]), &a.e(x[4]), &a.s(x[5]), h);
                    &(&first * &second) * &eval3(oi, &a.e(g[1]), &a.e(x[6]), &a.s(x[7]), h)
                });
                let target = &h.counit_of(g) * &h.counit_of(x);
                (v != target).then(|| Violation::note(format!("({g},{x}): {v}")))
            },
        ));
        rep
    }

    /// `β(h) = ω(h₁, S(h₂), h₃)` as an element of `H*`.
    pub fn beta(&self, h: &HopfAlgebra) -> Vector {
        let a = Args { h };
        Vector::from_entries((0..h.dim() as u32).map(|x| {
            (
                x,
                sweedler_sum(h, &[(x, 3)], |l| {
                    eval3(&self.omega, &a.e(l[0][0]), &a.s(l[0][1]), &a.e(l[0][2]), h)
                }),
            )
        }))
    }

    /// `θ(g; x, y) = ω(g,x,y) ω(x,y,g◁(xy)) ω⁻¹(x,g◁x,y)`.
    pub fn theta(&self, h: &HopfAlgebra) -> Result<TwoCocycle> {
        let n = h.dim() as u32;
        let a = Args { h };
        let mut theta = Tensor::zero(h.dim(), 3);
        for g in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let v = sweedler_sum(h, &[(g, 3), (x, 7), (y, 5)], |l| {
                        let (g, x, y) = (l[0], l[1], l[2]);
                        let first = self.w(g[0], x[0], y[0], h);
                        if first.is_zero() {
                            return first;
                        }
                        let conj = a.prod(&[a.s(y[2]), a.s(x[2]), a.e(g[1]), a.e(x[3]), a.e(y[3])]);
                        let second = eval3(&self.omega, &a.e(x[1]), &a.e(y[1]), &conj, h);
                        if second.is_zero() {
                            return second;
                        }
                        let conj2 = a.prod(&[a.s(x[5]), a.e(g[2]), a.e(x[6])]);
                        &(&first * &second)
                            * &eval3(&self.omega_inv, &a.e(x[4]), &conj2, &a.e(y[4]), h)
                    });
                    theta.add_term(Idx::from_slice(&[g, x, y]), v);
                }
            }
        }
        let theta_inv = invert_form(&theta, h.coalgebra())?;
        Ok(TwoCocycle { theta, theta_inv })
    }

    /// `γ(g, h; x) = ω(g,h,x) ω(x,g◁x,h◁x) ω⁻¹(g,x,h◁x)`.
    pub fn gamma(&self, h: &HopfAlgebra) -> Result<ComultKernel> {
        let n = h.dim() as u32;
        let a = Args { h };
        let mut gamma = Tensor::zero(h.dim(), 3);
        for g in 0..n {
            for k in 0..n {
                for x in 0..n {
                    let v = sweedler_sum(h, &[(g, 3), (k, 3), (x, 9)], |l| {
                        let (g, k, x) = (l[0], l[1], l[2]);
                        let first = self.w(g[0], k[0], x[0], h);
                        if first.is_zero() {
                            return first;
                        }
                        let gx = a.prod(&[a.s(x[2]), a.e(g[1]), a.e(x[3])]);
                        let kx = a.prod(&[a.s(x[4]), a.e(k[1]), a.e(x[5])]);
                        let second = eval3(&self.omega, &a.e(x[1]), &gx, &kx, h);
                        if second.is_zero() {
                            return second;
                        }
                        let kx2 = a.prod(&[a.s(x[7]), a.e(k[2]), a.e(x[8])]);
                        &(&first * &second)
                            * &eval3(&self.omega_inv, &a.e(g[2]), &a.e(x[6]), &kx2, h)
                    });
                    gamma.add_term(Idx::from_slice(&[g, k, x]), v);
                }
            }
        }
        let gamma_inv = invert_form(&gamma, h.coalgebra())?;
        Ok(ComultKernel { gamma, gamma_inv })
    }
}

/// `σ(x, y)(g) = θ(g; x, y)` stored through `θ`, indexed `(g, x, y)`.
#[derive(Clone, Debug)]
pub struct TwoCocycle {
    theta: Tensor,
    theta_inv: Tensor,
}

fn slice_form(form: &Tensor, x: &Vector, y: &Vector, h: &HopfAlgebra) -> Vector {
    Vector::from_entries((0..h.dim() as u32).map(|g| (g, eval3(form, &h.basis(g), x, y, h))))
}

impl TwoCocycle {
    /// Wraps `θ` indexed `(g, x, y)`; the cocycle identities are checked
    /// separately by [`TwoCocycle::verify`].
    pub fn from_theta(h: &HopfAlgebra, theta: Tensor) -> Result<TwoCocycle> {
        if theta.legs() != 3 || theta.dim() != h.dim() {
            return Err(Error::InvalidCocycle(
                "expected a trilinear form on H".into(),
            ));
        }
        let theta_inv = invert_form(&theta, h.coalgebra())?;
        Ok(TwoCocycle { theta, theta_inv })
    }

    pub fn theta(&self) -> &Tensor {
        &self.theta
    }

    pub fn theta_inv(&self) -> &Tensor {
        &self.theta_inv
    }

    pub fn sigma(&self, x: &Vector, y: &Vector, h: &HopfAlgebra) -> Vector {
        slice_form(&self.theta, x, y, h)
    }

    pub fn sigma_inv(&self, x: &Vector, y: &Vector, h: &HopfAlgebra) -> Vector {
        slice_form(&self.theta_inv, x, y, h)
    }

    /// `θ(g;x,y)θ(g;xy,z) = θ(g◁x;y,z)θ(g;x,yz)`, normalization, and the
    /// equivalent 2-cocycle condition `σ(x,y)σ(xy,z) = [x•σ(y,z)]σ(x,yz)`
    /// computed through the product of `H*` and the action `•`.
    pub fn verify(&self, h: &HopfAlgebra, opts: SweepOptions) -> Report {
        let n = h.dim() as u32;
        let a = Args { h };
        let th = &self.theta;
        let quads: Vec<[u32; 4]> = (0..n.pow(4))
            .map(|r| [r / (n * n * n), (r / (n * n)) % n, (r / n) % n, r % n])
            .collect();
        let triples: Vec<[u32; 3]> = (0..n.pow(3))
            .map(|r| [r / (n * n), (r / n) % n, r % n])
            .collect();
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        let mut rep = Report::default();
        rep.push(sweep(
            "theta.cocycle",
            "θ(g;x,y)θ(g;xy,z) = θ(g◁x;y,z)θ(g;x,yz)",
            opts,
            &quads,
            |&[g, x, y, z]| {
                let lhs = sweedler_sum(h, &[(g, 2), (x, 2), (y, 2), (z, 1)], |l| {
                    let first = th.coeff(&[l[0][0], l[1][0], l[2][0]], h.field());
                    if first.is_zero() {
                        return first;
                    }
                    &first
                        * &eval3(
                            th,
                            &a.e(l[0][1]),
                            &a.prod(&[a.e(l[1][1]), a.e(l[2][1])]),
                            &a.e(l[3][0]),
                            h,
                        )
                });
                let rhs = sweedler_sum(h, &[(g, 2), (x, 4), (y, 2), (z, 2)], |l| {
                    let gx = a.prod(&[a.s(l[1][0]), a.e(l[0][0]), a.e(l[1][1])]);
                    let first = eval3(th, &gx, &a.e(l[2][0]), &a.e(l[3][0]), h);
                    if first.is_zero() {
                        return first;
                    }
                    &first
                        * &eval3(
                            th,
                            &a.e(l[0][1]),
                            &a.e(l[1][2]),
                            &a.prod(&[a.e(l[2][1]), a.e(l[3][1])]),
                            h,
                        )
                });
                (lhs != rhs).then(|| Violation::note(format!("({g},{x},{y},{z})")))
            },
        ));
        rep.push(sweep(
            "theta.normalized",
            "θ(g;1,y) = θ(g;y,1) = ε(g)ε(y)",
            opts,
            &pairs,
            |&(g, y)| {
                let target = &h.counit_of(g) * &h.counit_of(y);
                let (eg, ey) = (a.e(g), a.e(y));
                let ok = eval3(th, &eg, h.unit(), &ey, h) == target
                    && eval3(th, &eg, &ey, h.unit(), h) == target;
                (!ok).then(|| Violation::note(format!("({g},{y})")))
            },
        ));
        rep.push(sweep(
            "sigma.two_cocycle",
            "σ(x,y)σ(xy,z) = [x•σ(y,z)]σ(x,yz)",
            opts,
            &triples,
            |&[x, y, z]| {
                let mut lhs = Vector::zero();
                let mut rhs = Vector::zero();
                for (kx, cx) in h.comul().image(x).iter() {
                    for (ky, cy) in h.comul().image(y).iter() {
                        let c = cx * cy;
                        let s1 = self.sigma(&a.e(kx[0]), &a.e(ky[0]), h);
                        let s2 = self.sigma(&a.prod(&[a.e(kx[1]), a.e(ky[1])]), &a.e(z), h);
                        lhs = lhs.axpy(&c, &h.dual_mul(&s1, &s2));
                    }
                }
                for (kx, cx) in h.comul().image(x).iter() {
                    for (ky, cy) in h.comul().image(y).iter() {
                        for (kz, cz) in h.comul().image(z).iter() {
                            let c = &(cx * cy) * cz;
                            let acted = bullet(h, kx[0], &self.sigma(&a.e(ky[0]), &a.e(kz[0]), h));
                            let s2 = self.sigma(&a.e(kx[1]), &a.prod(&[a.e(ky[1]), a.e(kz[1])]), h);
                            rhs = rhs.axpy(&c, &h.dual_mul(&acted, &s2));
                        }
                    }
                }
                let d = lhs.sub(&rhs);
                (!d.is_zero()).then(|| {
                    Violation::new(format!("({x},{y},{z})"), &Tensor::from_vector(h.dim(), &d))
                })
            },
        ));
        rep
    }
}

/// `ν(h)(x ⊗ y) = γ(x, y; h)`, stored through `γ` indexed `(x, y, h)`.
#[derive(Clone, Debug)]
pub struct ComultKernel {
    gamma: Tensor,
    gamma_inv: Tensor,
}

impl ComultKernel {
    pub fn gamma(&self) -> &Tensor {
        &self.gamma
    }

    pub fn gamma_inv(&self) -> &Tensor {
        &self.gamma_inv
    }

    /// `ν(e_h)` as a two-leg element of `H* ⊗ H*`.
    pub fn nu(&self, hidx: u32) -> Tensor {
        slice_last(&self.gamma, hidx)
    }

    pub fn nu_inv(&self, hidx: u32) -> Tensor {
        slice_last(&self.gamma_inv, hidx)
    }

    /// `γ(g,h;1) = ε(g)ε(h)`.
    pub fn check_normalized(&self, h: &HopfAlgebra) -> Check {
        let n = h.dim() as u32;
        let mut bad = Vec::new();
        for g in 0..n {
            for k in 0..n {
                let v = eval3(&self.gamma, &h.basis(g), &h.basis(k), h.unit(), h);
                if v != &h.counit_of(g) * &h.counit_of(k) {
                    bad.push(Violation::note(format!("({g},{k})")));
                }
            }
        }
        Check::new(
            "gamma.normalized",
            "γ(g,h;1) = ε(g)ε(h)",
            (n * n) as usize,
            bad,
        )
    }
}

fn slice_last(form: &Tensor, last: u32) -> Tensor {
    let mut t = Tensor::zero(form.dim(), 2);
    for (k, c) in form.iter() {
        if k[2] == last {
            t.add_term(Idx::from_slice(&k[..2]), c.clone());
        }
    }
    t
}

#[cfg(test)]
mod tests;
