//! Finite-dimensional Hopf algebras by structure constants.

mod group;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::report::{diff_case, sweep, Check, Report, SweepOptions, Violation};
use crate::scalar::{Field, Scalar};
use crate::tensor::linalg::nullspace;
use crate::tensor::{Algebra, Coalgebra, Idx, LinearMap, Tensor, TensorMap, Vector};

pub use group::GroupTable;

/// Iterated coproducts are cached up to this many legs.
const MAX_LEGS: usize = 12;

/// A Hopf algebra `(H, m, 1, Δ, ε, S)` on the basis `e_0, ..., e_{n-1}`.
#[derive(Debug)]
pub struct HopfAlgebra {
    alg: Algebra,
    co: Coalgebra,
    antipode: LinearMap,
    antipode_inv: OnceLock<Option<LinearMap>>,
    group: Option<GroupTable>,
    dual_grouplikes: Option<Vec<Vector>>,
    iterated: Vec<OnceLock<Vec<Tensor>>>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        let mut h = HopfAlgebra::assemble(
            self.alg.clone(),
            self.co.clone(),
            self.antipode.clone(),
            self.group.clone(),
        );
        h.dual_grouplikes = self.dual_grouplikes.clone();
        h
    }
}

/// `λ` from [`HopfAlgebra::integral_on`], with whether `λ(t) = 1` could be arranged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralForm {
    pub lambda: Vector,
    pub normalized: bool,
}

impl HopfAlgebra {
    fn assemble(
        alg: Algebra,
        co: Coalgebra,
        antipode: LinearMap,
        group: Option<GroupTable>,
    ) -> HopfAlgebra {
        HopfAlgebra {
            alg,
            co,
            antipode,
            antipode_inv: OnceLock::new(),
            group,
            dual_grouplikes: None,
            iterated: (0..=MAX_LEGS).map(|_| OnceLock::new()).collect(),
        }
    }

    /// Assembles structure constants; shapes are checked, axioms are not
    /// (see [`HopfAlgebra::verify_axioms`]).
    pub fn new(
        alg: Algebra,
        comul: TensorMap,
        counit: Vector,
        antipode: LinearMap,
    ) -> Result<HopfAlgebra> {
        let n = alg.dim();
        if comul.in_dim() != n || comul.out_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: comul.in_dim(),
            });
        }
        if antipode.in_dim() != n || antipode.out_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: antipode.in_dim(),
            });
        }
        if let Some(m) = counit.max_index().filter(|&m| m as usize >= n) {
            return Err(Error::IndexOutOfRange(format!("counit index {m}")));
        }
        let co = Coalgebra::new(alg.field().clone(), comul, counit)?;
        Ok(HopfAlgebra::assemble(alg, co, antipode, None))
    }

    /// `k[G]`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn group_algebra(g: &GroupTable, field: &Field) -> HopfAlgebra {
        let n = g.order();
        let basis = |i: u32| Vector::basis(i, field);
        let table = (0..n as u32)
            .flat_map(|a| (0..n as u32).map(move |b| (a, b)))
            .map(|(a, b)| basis(g.mul(a, b)))
            .collect();
        let alg = Algebra::new(field.clone(), n, table, basis(0)).expect("group table is in range");
        let comul = (0..n as u32)
            .map(|a| Tensor::product_of(n, &[&basis(a), &basis(a)]))
            .collect();
        let comul = TensorMap::new(n, n, 2, comul).expect("coproduct shape");
        let counit = Vector::from_entries((0..n as u32).map(|a| (a, field.one())));
        let antipode = LinearMap::new(n, n, (0..n as u32).map(|a| basis(g.inverse(a))).collect())
            .expect("antipode shape");
        let co = Coalgebra::new(field.clone(), comul, counit).expect("coalgebra shape");
        HopfAlgebra::assemble(alg, co, antipode, Some(g.clone()))
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

    pub fn counit_of(&self, i: u32) -> Scalar {
        self.co.counit_of(i)
    }

    pub fn unit(&self) -> &Vector {
        self.alg.unit()
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn group(&self) -> Option<&GroupTable> {
        self.group.as_ref()
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.alg.mul(a, b)
    }

    pub fn basis(&self, i: u32) -> Vector {
        Vector::basis(i, self.field())
    }

    /// Evaluates a form (element of `H*`) on an element of `H`.
    pub fn eval(&self, form: &Vector, h: &Vector) -> Scalar {
        form.dot(h, self.field())
    }

    pub fn antipode_inverse(&self) -> Result<&LinearMap> {
        self.antipode_inv
            .get_or_init(|| self.antipode.inverse(self.field()).ok())
            .as_ref()
            .ok_or_else(|| Error::NotInvertible("antipode".into()))
    }

    /// `Δ^{(k)}(e_i)` with `k` legs (`k = 1` gives `e_i`).
    pub fn iterated_coproduct(&self, i: u32, k: usize) -> &Tensor {
        assert!(
            (1..=MAX_LEGS).contains(&k),
            "iterated coproduct with {k} legs"
        );
        &self.iterated[k].get_or_init(|| {
            (0..self.dim() as u32)
                .map(|j| {
                    let mut t = Tensor::from_vector(self.dim(), &self.basis(j));
                    for _ in 1..k {
                        t = t.expand_leg(0, self.comul());
                    }
                    t
                })
                .collect()
        })[i as usize]
    }

    /// `g ◁ x = S(x₁) g x₂`.
    pub fn adjoint(&self, g: &Vector, x: u32) -> Vector {
        let mut acc = Vector::zero();
        for (k, c) in self.comul().image(x).iter() {
            let term = self.alg.mul(
                &self.alg.mul(self.antipode.image(k[0]), g),
                &self.basis(k[1]),
            );
            acc = acc.axpy(c, &term);
        }
        acc
    }

    /// Keeps the algebra maps among `candidates` as the grouplikes of `H*`
    /// for later enumeration.
    pub fn with_dual_grouplike_candidates(mut self, candidates: &[Vector]) -> Result<HopfAlgebra> {
        let found = self.grouplikes_of_dual(Some(candidates))?;
        self.dual_grouplikes = Some(found);
        Ok(self)
    }

    /// `Δ = τ∘Δ` on every basis element.
    pub fn is_cocommutative(&self) -> bool {
        self.comul()
            .images()
            .iter()
            .all(|t| t.permute(&[1, 0]).unwrap() == *t)
    }

    /// The dual Hopf algebra on the dual basis `e^0, ..., e^{n-1}`.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let f = self.field();
        // e^i e^j = Σ_k ⟨Δ(e_k), e^i⊗e^j⟩ e^k
        let mut table = vec![Vec::new(); n * n];
        for k in 0..n as u32 {
            for (ij, c) in self.comul().image(k).iter() {
                table[ij[0] as usize * n + ij[1] as usize].push((k, c.clone()));
            }
        }
        let table = table.into_iter().map(Vector::from_entries).collect();
        let alg = Algebra::new(f.clone(), n, table, self.counit().clone()).expect("dual shape");
        // Δ(e^k) = Σ_{ij} ⟨e^k, e_i e_j⟩ e^i⊗e^j
        let mut comul: Vec<Tensor> = (0..n).map(|_| Tensor::zero(n, 2)).collect();
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                for (k, c) in self.alg.mul_basis(i, j).iter() {
                    comul[k as usize].add_term(Idx::from_slice(&[i, j]), c.clone());
                }
            }
        }
        let comul = TensorMap::new(n, n, 2, comul).expect("dual coproduct shape");
        let co =
            Coalgebra::new(f.clone(), comul, self.unit().clone()).expect("dual coalgebra shape");
        HopfAlgebra::assemble(alg, co, self.antipode.transpose(), None)
    }

    /// Product in `H*`: `(φψ)(h) = φ(h₁)ψ(h₂)`.
    pub fn dual_mul(&self, phi: &Vector, psi: &Vector) -> Vector {
        let f = self.field();
        Vector::from_entries((0..self.dim() as u32).map(|h| {
            let mut acc = f.zero();
            for (k, c) in self.comul().image(h).iter() {
                if let (Some(a), Some(b)) = (phi.get(k[0]), psi.get(k[1])) {
                    acc = &acc + &(&(c * a) * b);
                }
            }
            (h, acc)
        }))
    }

    /// Associativity, unit, coassociativity, counit, bialgebra compatibility
    /// and both antipode identities, swept over basis tuples.
    pub fn verify_axioms(&self, opts: SweepOptions) -> Report {
        let n = self.dim() as u32;
        let alg = &self.alg;
        let singles: Vec<u32> = (0..n).collect();
        let pairs: Vec<(u32, u32)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let triples: Vec<(u32, u32, u32)> = pairs
            .iter()
            .flat_map(|&(a, b)| (0..n).map(move |c| (a, b, c)))
            .collect();
        let mut r = Report::default();
        r.push(sweep(
            "hopf.associativity",
            "(ab)c = a(bc)",
            opts,
            &triples,
            |&(a, b, c)| {
                let l = alg.mul(alg.mul_basis(a, b), &self.basis(c));
                let rr = alg.mul(&self.basis(a), alg.mul_basis(b, c));
                diff_case(
                    format!("({a},{b},{c})"),
                    &Tensor::from_vector(n as usize, &l),
                    &Tensor::from_vector(n as usize, &rr),
                )
            },
        ));
        r.push(sweep("hopf.unit", "1a = a = a1", opts, &singles, |&a| {
            let e = self.basis(a);
            let ok = alg.mul(alg.unit(), &e) == e && alg.mul(&e, alg.unit()) == e;
            (!ok).then(|| Violation::note(a))
        }));
        r.push(sweep(
            "hopf.coassociativity",
            "(Δ⊗id)Δ(h) = (id⊗Δ)Δ(h)",
            opts,
            &singles,
            |&a| {
                let d = self.comul().image(a);
                diff_case(
                    a,
                    &d.expand_leg(0, self.comul()),
                    &d.expand_leg(1, self.comul()),
                )
            },
        ));
        let counit_map = TensorMap::from_form(self.counit(), n as usize, self.field());
        r.push(sweep(
            "hopf.counit",
            "ε(h₁)h₂ = h = h₁ε(h₂)",
            opts,
            &singles,
            |&a| {
                let d = self.comul().image(a);
                let e = Tensor::from_vector(n as usize, &self.basis(a));
                diff_case(a, &d.expand_leg(0, &counit_map), &e)
                    .or_else(|| diff_case(a, &d.expand_leg(1, &counit_map), &e))
            },
        ));
        r.push(sweep(
            "hopf.comultiplicative",
            "Δ(ab) = Δ(a)Δ(b)",
            opts,
            &pairs,
            |&(a, b)| {
                let l = self.comul().apply(alg.mul_basis(a, b));
                let rr = alg.mul_tensors(self.comul().image(a), self.comul().image(b));
                diff_case(format!("({a},{b})"), &l, &rr)
            },
        ));
        r.push(sweep(
            "hopf.counit_multiplicative",
            "ε(ab) = ε(a)ε(b), ε(1) = 1",
            opts,
            &pairs,
            |&(a, b)| {
                let f = self.field();
                let l = self.counit().dot(alg.mul_basis(a, b), f);
                let rr = &self.counit_of(a) * &self.counit_of(b);
                let unit_ok = self.counit().dot(alg.unit(), f).is_one();
                (l != rr || !unit_ok).then(|| Violation::note(format!("({a},{b})")))
            },
        ));
        r.push(sweep(
            "hopf.antipode",
            "S(h₁)h₂ = ε(h)1 = h₁S(h₂)",
            opts,
            &singles,
            |&a| {
                let mut left = Vector::zero();
                let mut right = Vector::zero();
                for (k, c) in self.comul().image(a).iter() {
                    left = left.axpy(c, &alg.mul(self.antipode.image(k[0]), &self.basis(k[1])));
                    right = right.axpy(c, &alg.mul(&self.basis(k[0]), self.antipode.image(k[1])));
                }
                let target = alg.unit().scale(&self.counit_of(a));
                let dim = n as usize;
                diff_case(
                    format!("left {a}"),
                    &Tensor::from_vector(dim, &left),
                    &Tensor::from_vector(dim, &target),
                )
                .or_else(|| {
                    diff_case(
                        format!("right {a}"),
                        &Tensor::from_vector(dim, &right),
                        &Tensor::from_vector(dim, &target),
                    )
                })
            },
        ));
        r.push(Check::single(
            "hopf.antipode_bijective",
            "S is bijective",
            self.antipode_inverse().is_ok(),
            "antipode matrix is singular",
        ));
        r
    }

    /// The left integral `t` (`ht = ε(h)t`), scaled so its first nonzero
    /// coordinate is 1.
    pub fn left_integral(&self) -> Result<Vector> {
        left_integral(&self.alg, self.counit())
    }

    /// `λ ∈ H*` with `h₁λ(h₂) = λ(h)1` for every basis `h`, normalized to
    /// `λ(t) = 1` against [`HopfAlgebra::left_integral`] when possible.
    pub fn integral_on(&self) -> Result<IntegralForm> {
        let n = self.dim();
        let mut rows = Vec::new();
        for h in 0..n as u32 {
            for k in 0..n as u32 {
                let mut row: Vec<(u32, Scalar)> = Vec::new();
                for (ab, c) in self.comul().image(h).iter() {
                    if ab[0] == k {
                        row.push((ab[1], c.clone()));
                    }
                }
                if let Some(u) = self.unit().get(k) {
                    row.push((h, -u));
                }
                rows.push(Vector::from_entries(row));
            }
        }
        let lambda = single_normalized(nullspace(n, &rows, self.field()))?;
        let t = self.left_integral()?;
        let lt = self.eval(&lambda, &t);
        if lt.is_zero() {
            return Ok(IntegralForm {
                lambda,
                normalized: false,
            });
        }
        Ok(IntegralForm {
            lambda: lambda.scale(&lt.inv()?),
            normalized: true,
        })
    }

    /// The modular form `μ` defined by `th = μ(h)t`, checked to be an
    /// algebra map.
    pub fn modular_mu(&self) -> Result<Vector> {
        let mu = modular_form(&self.alg, &self.left_integral()?)?;
        if !self.is_algebra_map(&mu) {
            return Err(Error::NotDefined(
                "modular form is not multiplicative".into(),
            ));
        }
        Ok(mu)
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(&self.modular_mu()? == self.counit())
    }

    /// `χ(ab) = χ(a)χ(b)` on basis pairs and `χ(1) = 1`.
    pub fn is_algebra_map(&self, chi: &Vector) -> bool {
        let f = self.field();
        let n = self.dim() as u32;
        chi.dot(self.unit(), f).is_one()
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    let l = chi.dot(self.alg.mul_basis(a, b), f);
                    let r = &chi.get(a).cloned().unwrap_or_else(|| f.zero())
                        * &chi.get(b).cloned().unwrap_or_else(|| f.zero());
                    l == r
                })
            })
    }

    /// The algebra maps `H → k`. For group algebras these are the linear
    /// characters into the field's roots of unity; otherwise `candidates`, or
    /// the stored candidate list, is filtered for multiplicativity.
    pub fn grouplikes_of_dual(&self, candidates: Option<&[Vector]>) -> Result<Vec<Vector>> {
        if let Some(c) = candidates.or(self.dual_grouplikes.as_deref()) {
            let mut out: Vec<Vector> = Vec::new();
            for chi in c {
                if self.is_algebra_map(chi) && !out.contains(chi) {
                    out.push(chi.clone());
                }
            }
            return Ok(out);
        }
        let g = self.group.as_ref().ok_or_else(|| {
            Error::UnsupportedInput("grouplikes of a general dual need a candidate list".into())
        })?;
        let f = self.field();
        let m = f.roots_of_unity_order();
        let chars = g.characters_mod(m);
        chars
            .into_iter()
            .map(|e| {
                let vals = e
                    .iter()
                    .map(|&x| f.root_of_unity(m, x as i64))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Vector::from_dense(&vals))
            })
            .collect()
    }

    /// All `ζ ∈ group` with `ζζ = μ` in `H*`.
    pub fn square_roots(&self, mu: &Vector, group: &[Vector]) -> Vec<Vector> {
        group
            .iter()
            .filter(|z| &self.dual_mul(z, z) == mu)
            .cloned()
            .collect()
    }

    /// `φ^k` in `H*` for `k ≥ 0`.
    pub fn dual_pow(&self, phi: &Vector, k: u64) -> Vector {
        (0..k).fold(self.counit().clone(), |acc, _| self.dual_mul(&acc, phi))
    }

    /// Order of a grouplike of `H*`.
    pub fn dual_order(&self, phi: &Vector) -> u64 {
        let mut x = phi.clone();
        let mut k = 1;
        while &x != self.counit() {
            x = self.dual_mul(&x, phi);
            k += 1;
        }
        k
    }
}

/// The one-dimensional space of `t` with `ht = ε(h)t` in any augmented
/// algebra, scaled so the first nonzero coordinate is 1.
pub(crate) fn left_integral(alg: &Algebra, counit: &Vector) -> Result<Vector> {
    let n = alg.dim();
    let f = alg.field();
    let mut rows = Vec::new();
    for h in 0..n as u32 {
        let eps = counit.get(h).cloned().unwrap_or_else(|| f.zero());
        for k in 0..n as u32 {
            let mut row: Vec<(u32, Scalar)> = Vec::new();
            for j in 0..n as u32 {
                if let Some(c) = alg.mul_basis(h, j).get(k) {
                    row.push((j, c.clone()));
                }
            }
            row.push((k, -&eps));
            rows.push(Vector::from_entries(row));
        }
    }
    single_normalized(nullspace(n, &rows, f))
}

/// `μ` with `t e_h = μ(e_h) t`.
pub(crate) fn modular_form(alg: &Algebra, t: &Vector) -> Result<Vector> {
    let (p, tp) = t.first_nonzero().ok_or(Error::NoIntegral)?;
    let tp_inv = tp.inv()?;
    let mut mu = Vec::new();
    for h in 0..alg.dim() as u32 {
        let th = alg.mul(t, &Vector::basis(h, alg.field()));
        let ratio = &th.get(p).cloned().unwrap_or_else(|| alg.field().zero()) * &tp_inv;
        if th != t.scale(&ratio) {
            return Err(Error::NotDefined(format!("t·e_{h} is not a multiple of t")));
        }
        mu.push((h, ratio));
    }
    Ok(Vector::from_entries(mu))
}

pub(crate) fn single_normalized(mut ns: Vec<Vector>) -> Result<Vector> {
    match ns.len() {
        0 => Err(Error::NoIntegral),
        1 => {
            let v = ns.pop().unwrap();
            let (_, lead) = v.first_nonzero().ok_or(Error::NoIntegral)?;
            Ok(v.scale(&lead.inv()?))
        }
        d => Err(Error::AmbiguousIntegral(d)),
    }
}

#[cfg(test)]
mod tests;
