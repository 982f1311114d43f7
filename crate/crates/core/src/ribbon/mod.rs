//! Ribbon elements of quasitriangular quasi-Hopf algebras and the family
//! `ν = u(ζβ#1)` of `D^ω(H)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::domega::DOmega;
use crate::error::{Error, Result};
use crate::quasihopf::{QTStructure, QuasiHopfAlgebra};
use crate::report::{diff_case, sweep, Check, Report, SweepOptions, Violation};
use crate::tensor::{Tensor, Vector};

/// A ribbon element `ν` with the checks it passed.
#[derive(Clone, Debug)]
pub struct RibbonCertificate {
    pub nu: Vector,
    pub zeta: Option<Vector>,
    pub checks: Vec<Check>,
}

impl RibbonCertificate {
    pub fn to_json(&self, dim: usize, field: &str) -> Value {
        let checks: BTreeMap<&str, bool> = self
            .checks
            .iter()
            .map(|c| (c.id.strip_prefix("ribbon.").unwrap_or(&c.id), c.passed()))
            .collect();
        json!({
            "zeta": self.zeta.as_ref().map(|z| sparse(dim, z)),
            "nu": sparse(dim, &self.nu),
            "checks": checks,
            "field": field,
        })
    }
}

fn sparse(dim: usize, v: &Vector) -> Value {
    Value::Array(
        Tensor::from_vector(dim, v)
            .sparse_entries()
            .into_iter()
            .map(|(i, c)| json!([i[0], c]))
            .collect(),
    )
}

/// Shared data for testing many candidates against one `(K, R)`.
pub struct RibbonTester<'a> {
    k: &'a QuasiHopfAlgebra,
    qt: &'a QTStructure,
    r21r_inv: Tensor,
    u_s_u: Vector,
    u_inv_s_u: Vector,
    f21_inv: Tensor,
}

impl<'a> RibbonTester<'a> {
    pub fn new(k: &'a QuasiHopfAlgebra, qt: &'a QTStructure) -> Result<RibbonTester<'a>> {
        let r21r = k.mul_t(&qt.r21(), qt.r());
        let r21r_inv = k.invert(&r21r)?;
        let su = k.s(qt.u());
        let f21_inv = qt
            .f_inv()
            .permute(&[1, 0])
            .expect("two legs")
            .map_all(k.antipode());
        Ok(RibbonTester {
            k,
            qt,
            r21r_inv,
            u_s_u: k.mul(qt.u(), &su),
            u_inv_s_u: k.mul(qt.u_inv(), &su),
            f21_inv,
        })
    }

    /// Centrality, `Δ(ν) = (ν⊗ν)(R₂₁R)⁻¹`, `S(ν) = ν`, `ν² = uS(u)`,
    /// invertibility and `ε(ν) = 1`.
    pub fn checks(&self, nu: &Vector, opts: SweepOptions) -> Vec<Check> {
        let k = self.k;
        let dim = k.dim();
        let basis: Vec<u32> = (0..dim as u32).collect();
        let el = |v: &Vector| k.elem(v);
        let nn = Tensor::product_of(dim, &[nu, nu]);
        let invertible = k.invert(&el(nu)).is_ok();
        let eps = k.eps(nu);
        vec![
            sweep("ribbon.central", "νh = hν", opts, &basis, |&h| {
                let e = k.basis(h);
                diff_case(h, &el(&k.mul(nu, &e)), &el(&k.mul(&e, nu)))
            }),
            Check::equal(
                "ribbon.delta_identity",
                "Δ(ν) = (ν⊗ν)(R₂₁R)⁻¹",
                &k.delta(nu),
                &k.mul_t(&nn, &self.r21r_inv),
            ),
            Check::equal("ribbon.s_fixed", "S(ν) = ν", &el(&k.s(nu)), &el(nu)),
            Check::equal(
                "ribbon.square_identity",
                "ν² = uS(u)",
                &el(&k.mul(nu, nu)),
                &el(&self.u_s_u),
            ),
            Check::single(
                "ribbon.invertible",
                "ν is invertible",
                invertible,
                "ν is not invertible",
            ),
            Check::single(
                "ribbon.counit",
                "ε(ν) = 1",
                eps.is_one(),
                format!("ε(ν) = {eps}"),
            ),
        ]
    }

    /// A certificate when every check passes, otherwise the failed checks.
    pub fn is_ribbon(
        &self,
        nu: &Vector,
        opts: SweepOptions,
    ) -> std::result::Result<RibbonCertificate, Vec<Check>> {
        let checks = self.checks(nu, opts);
        if checks.iter().all(Check::passed) {
            Ok(RibbonCertificate {
                nu: nu.clone(),
                zeta: None,
                checks,
            })
        } else {
            Err(checks.into_iter().filter(|c| !c.passed()).collect())
        }
    }

    /// `l² = u⁻¹S(u)`, `Δ(l) = (l⊗l)(S⊗S)(f₂₁⁻¹)f`, `lS²(h) = hl`.
    pub fn membership(&self, l: &Vector, opts: SweepOptions) -> Vec<Check> {
        let k = self.k;
        let basis: Vec<u32> = (0..k.dim() as u32).collect();
        let ll = Tensor::product_of(k.dim(), &[l, l]);
        vec![
            Check::equal(
                "rh.square",
                "l² = u⁻¹S(u)",
                &k.elem(&k.mul(l, l)),
                &k.elem(&self.u_inv_s_u),
            ),
            Check::equal(
                "rh.delta",
                "Δ(l) = (l⊗l)(S⊗S)(f₂₁⁻¹)f",
                &k.delta(l),
                &k.chain(&[&ll, &self.f21_inv, self.qt.f()]),
            ),
            sweep("rh.s_squared", "lS²(h) = hl", opts, &basis, |&h| {
                let e = k.basis(h);
                diff_case(
                    h,
                    &k.elem(&k.mul(l, &k.s(&k.s(&e)))),
                    &k.elem(&k.mul(&e, l)),
                )
            }),
        ]
    }

    /// `ν = ul` for a candidate `l ∈ R(H)`; fails with
    /// `NotInRH` naming the first violated membership condition.
    pub fn candidate_to_ribbon(&self, l: &Vector, opts: SweepOptions) -> Result<RibbonCertificate> {
        if let Some(bad) = self.membership(l, opts).into_iter().find(|c| !c.passed()) {
            return Err(Error::NotInRH(bad.id.trim_start_matches("rh.").to_string()));
        }
        let nu = self.k.mul(self.qt.u(), l);
        self.is_ribbon(&nu, opts).map_err(Error::VerificationFailed)
    }
}

/// Checks `ν` against `(K, R)`; see [`RibbonTester::is_ribbon`].
pub fn is_ribbon(
    k: &QuasiHopfAlgebra,
    qt: &QTStructure,
    nu: &Vector,
    opts: SweepOptions,
) -> Result<std::result::Result<RibbonCertificate, Vec<Check>>> {
    Ok(RibbonTester::new(k, qt)?.is_ribbon(nu, opts))
}

pub fn candidate_to_ribbon(
    k: &QuasiHopfAlgebra,
    qt: &QTStructure,
    l: &Vector,
    opts: SweepOptions,
) -> Result<RibbonCertificate> {
    RibbonTester::new(k, qt)?.candidate_to_ribbon(l, opts)
}

/// Certificates for `ν = u(ζβ#1)` over the square roots `ζ` of `μ_H`, with
/// the intermediate identities and the negative and distinctness controls.
#[derive(Clone, Debug)]
pub struct RibbonSearch {
    pub certificates: Vec<RibbonCertificate>,
    pub report: Report,
}

/// `ζβ # 1`.
pub fn family_element(d: &DOmega, zeta: &Vector) -> Vector {
    d.lift_dual(&d.base().dual_mul(zeta, d.beta_form()))
}

/// Intermediate identities for one `ζ` and its certificate or failed checks.
type Attempt = (
    Vec<Check>,
    std::result::Result<RibbonCertificate, Vec<Check>>,
);

pub fn find_ribbon_domega(d: &DOmega, opts: SweepOptions) -> Result<RibbonSearch> {
    let h = d.base();
    let k = d.quasi_hopf();
    let tester = RibbonTester::new(k, d.qt())?;
    let zetas = d.dual_grouplikes();
    let mu = h.modular_mu()?;
    let roots = h.square_roots(&mu, &zetas);
    if roots.is_empty() {
        return Err(Error::EmptyResult);
    }
    let closed = d.lift_dual(&h.dual_mul(&h.dual_mul(d.beta_form(), d.beta_form()), &mu));
    let f21_inv = d
        .qt()
        .f_inv()
        .permute(&[1, 0])
        .expect("two legs")
        .map_all(k.antipode());
    let basis: Vec<u32> = (0..k.dim() as u32).collect();

    let outcomes: Vec<Attempt> = roots
        .par_iter()
        .map(|zeta| {
            let l = family_element(d, zeta);
            let ll = Tensor::product_of(k.dim(), &[&l, &l]);
            let proof = vec![
                Check::equal(
                    "ribbon.family_square",
                    "(ζβ#1)² = β²μ_H#1",
                    &k.elem(&k.mul(&l, &l)),
                    &k.elem(&closed),
                ),
                Check::equal(
                    "ribbon.family_delta",
                    "Δ(ζβ#1) = (ζβ#1 ⊗ ζβ#1)(s⊗s)(𝔣₂₁⁻¹)𝔣",
                    &k.delta(&l),
                    &k.chain(&[&ll, &f21_inv, d.qt().f()]),
                ),
                sweep(
                    "ribbon.family_commutes",
                    "(ζβ#1)s²(x) = x(ζβ#1)",
                    opts,
                    &basis,
                    |&x| {
                        let e = k.basis(x);
                        diff_case(
                            x,
                            &k.elem(&k.mul(&l, &k.s(&k.s(&e)))),
                            &k.elem(&k.mul(&e, &l)),
                        )
                    },
                ),
            ];
            let nu = k.mul(d.qt().u(), &l);
            let cert = tester.is_ribbon(&nu, opts).map(|mut c| {
                c.zeta = Some(zeta.clone());
                c
            });
            (proof, cert)
        })
        .collect();

    let mut report = Report::default();
    let mut certificates = Vec::new();
    for (zeta, (proof, cert)) in roots.iter().zip(outcomes) {
        for mut c in proof {
            c.anchor = format!("{} for ζ = {zeta}", c.anchor);
            report.push(c);
        }
        match cert {
            Ok(c) => certificates.push(c),
            Err(failed) => report.extend(failed),
        }
    }
    report.push(Check::single(
        "ribbon.count",
        "one certificate for each ζ with ζ² = μ_H",
        certificates.len() == roots.len(),
        format!(
            "{} certificates for {} square roots",
            certificates.len(),
            roots.len()
        ),
    ));

    if let Some(non_root) = zetas.iter().find(|z| !roots.contains(z)) {
        let nu = k.mul(d.qt().u(), &family_element(d, non_root));
        let rejected = tester.is_ribbon(&nu, opts).is_err();
        report.push(Check::single(
            "ribbon.negative",
            "u(ζβ#1) is not ribbon when ζ² ≠ μ_H",
            rejected,
            format!("u(ζβ#1) passed for ζ = {non_root}"),
        ));
    }

    let mut collisions = Vec::new();
    for (i, a) in certificates.iter().enumerate() {
        for (j, b) in certificates.iter().enumerate().skip(i + 1) {
            if a.nu == b.nu {
                collisions.push(Violation::note(format!("({i},{j})")));
            }
        }
    }
    let pairs = certificates.len() * certificates.len().saturating_sub(1) / 2;
    report.push(Check::new(
        "ribbon.distinct",
        "distinct ζ give distinct ν",
        pairs,
        collisions,
    ));

    let order = h.dual_order(&mu);
    if order % 2 == 1 {
        let root = h.dual_pow(&mu, order.div_ceil(2));
        report.push(Check::single(
            "ribbon.odd_order_root",
            "μ_H^{m+1} is a square root of μ_H when μ_H has order 2m+1",
            roots.contains(&root),
            format!("{root} missing"),
        ));
    }
    Ok(RibbonSearch {
        certificates,
        report,
    })
}

/// Whether `u(β#1)` is ribbon; fails with `CrossCheckFailed` unless this
/// agrees with unimodularity of `H`.
pub fn canonical_ribbon_check(d: &DOmega, opts: SweepOptions) -> Result<bool> {
    let k = d.quasi_hopf();
    let tester = RibbonTester::new(k, d.qt())?;
    let nu = k.mul(d.qt().u(), &family_element(d, d.base().counit()));
    let ribbon = tester.is_ribbon(&nu, opts).is_ok();
    let unimodular = d.base().is_unimodular()?;
    if ribbon != unimodular {
        return Err(Error::CrossCheckFailed(format!(
            "u(β#1) ribbon: {ribbon}, H unimodular: {unimodular}"
        )));
    }
    Ok(ribbon)
}
