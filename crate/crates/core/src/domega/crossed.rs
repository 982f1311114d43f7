use crate::cocycle::{bullet, TwoCocycle};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::report::{diff_case, sweep, Check, SweepOptions};
use crate::tensor::{Algebra, Tensor, Vector};

/// `H* #_σ H` with `(φ#h)(φ'#h') = φ(h₁•φ')σ(h₂,h'₁)#h₃h'₂`, on the basis
/// `e^i # e_j ↦ i·n + j`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    alg: Algebra,
    n: usize,
}

impl CrossedProduct {
    /// Refuses `σ` failing the 2-cocycle sweep, then checks associativity of
    /// the resulting product on all basis triples.
    pub fn new(h: &HopfAlgebra, sigma: &TwoCocycle, opts: SweepOptions) -> Result<CrossedProduct> {
        let rep = sigma.verify(h, SweepOptions { fail_fast: true });
        if let Some(bad) = rep.failed().next() {
            return Err(Error::CocycleConditionFailed(Box::new(bad.clone())));
        }
        let n = h.dim();
        let f = h.field();
        let nu = n as u32;
        let mut table = Vec::with_capacity(n.pow(4));
        for i in 0..nu {
            for j in 0..nu {
                for k in 0..nu {
                    for l in 0..nu {
                        table.push(Self::basis_product(h, sigma, (i, j), (k, l)));
                    }
                }
            }
        }
        let unit = Vector::from_entries(
            h.counit()
                .iter()
                .flat_map(|(a, ea)| h.unit().iter().map(move |(u, c)| (a * nu + u, ea * c))),
        );
        let alg = Algebra::new(f.clone(), n * n, table, unit)?;
        let cp = CrossedProduct { alg, n };
        let check = cp.verify_associativity(opts);
        if !check.passed() {
            return Err(Error::NotAssociative(Box::new(check)));
        }
        Ok(cp)
    }

    fn basis_product(
        h: &HopfAlgebra,
        sigma: &TwoCocycle,
        (i, j): (u32, u32),
        (k, l): (u32, u32),
    ) -> Vector {
        let n = h.dim() as u32;
        let ek = h.basis(k);
        let mut out = Vector::zero();
        for (jl, c) in h.iterated_coproduct(j, 3).iter() {
            let acted = bullet(h, jl[0], &ek);
            let left = h.dual_mul(&h.basis(i), &acted);
            if left.is_zero() {
                continue;
            }
            for (ll, d) in h.comul().image(l).iter() {
                let s = sigma.sigma(&h.basis(jl[1]), &h.basis(ll[0]), h);
                let phi = h.dual_mul(&left, &s);
                if phi.is_zero() {
                    continue;
                }
                let x = h.mul(&h.basis(jl[2]), &h.basis(ll[1]));
                let cd = c * d;
                for (a, pa) in phi.iter() {
                    for (b, xb) in x.iter() {
                        out = out.axpy(&(&(&cd * pa) * xb), &Vector::basis(a * n + b, h.field()));
                    }
                }
            }
        }
        out
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn into_algebra(self) -> Algebra {
        self.alg
    }

    pub fn verify_associativity(&self, opts: SweepOptions) -> Check {
        let m = (self.n * self.n) as u32;
        let triples: Vec<[u32; 3]> = (0..m.pow(3))
            .map(|r| [r / (m * m), (r / m) % m, r % m])
            .collect();
        let f = self.alg.field();
        sweep(
            "crossed.associativity",
            "(a#h)(b#g) = a(h•b)σ(h,g)#hg is associative",
            opts,
            &triples,
            |&[a, b, c]| {
                let (ea, eb, ec) = (
                    Vector::basis(a, f),
                    Vector::basis(b, f),
                    Vector::basis(c, f),
                );
                let l = self.alg.mul(&self.alg.mul(&ea, &eb), &ec);
                let r = self.alg.mul(&ea, &self.alg.mul(&eb, &ec));
                diff_case(
                    format!("({a},{b},{c})"),
                    &Tensor::from_vector(m as usize, &l),
                    &Tensor::from_vector(m as usize, &r),
                )
            },
        )
    }
}
