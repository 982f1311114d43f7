use super::linalg;
use super::{Algebra, Coalgebra, Idx, LinearMap, Tensor, Vector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The convolution inverse of `t: C → A`, i.e. `u` with
/// `t(c₁)u(c₂) = u(c₁)t(c₂) = ε(c)1_A`, found by a linear solve over
/// `Hom(C, A)`.
pub fn convolution_invert(co: &Coalgebra, alg: &Algebra, t: &LinearMap) -> Result<LinearMap> {
    let (nc, na) = (co.dim(), alg.dim());
    if t.in_dim() != nc || t.out_dim() != na {
        return Err(Error::DimensionMismatch {
            expected: nc,
            found: t.in_dim(),
        });
    }
    // Unknown u(c')_b sits in column c' * na + b.
    let var = |c: u32, b: u32| c * na as u32 + b;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for c in 0..nc as u32 {
        for side in [false, true] {
            let mut eq: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); na];
            for (k, d) in co.comul().image(c).iter() {
                let (known, unknown) = if side { (k[1], k[0]) } else { (k[0], k[1]) };
                for (i, x) in t.image(known).iter() {
                    for b in 0..na as u32 {
                        let prod = if side {
                            alg.mul_basis(b, i)
                        } else {
                            alg.mul_basis(i, b)
                        };
                        for (a, y) in prod.iter() {
                            eq[a as usize].push((var(unknown, b), &(d * x) * y));
                        }
                    }
                }
            }
            let eps = co.counit_of(c);
            for (a, terms) in eq.into_iter().enumerate() {
                rows.push(Vector::from_entries(terms));
                let target = alg.unit().get(a as u32).map(|u| &eps * u);
                rhs.push(target);
            }
        }
    }
    let b = Vector::from_entries(
        rhs.into_iter()
            .enumerate()
            .filter_map(|(r, v)| v.map(|v| (r as u32, v))),
    );
    let x = linalg::solve(nc * na, &rows, &b).map_err(|_| Error::NotConvolutionInvertible)?;
    let images = (0..nc as u32)
        .map(|c| {
            Vector::from_entries(
                x.iter()
                    .filter(|(col, _)| col / na as u32 == c)
                    .map(|(col, v)| (col % na as u32, v.clone())),
            )
        })
        .collect();
    LinearMap::new(nc, na, images)
}

/// The convolution inverse of a `k`-linear form on `H^{⊗k}` (the tensor
/// power coalgebra), valued in the ground field.
pub fn invert_form(form: &Tensor, co: &Coalgebra) -> Result<Tensor> {
    let n = co.dim();
    let k = form.legs();
    let total = n.pow(k as u32);
    let field = co.field();
    let flat = |idx: &[u32]| idx.iter().fold(0usize, |a, &i| a * n + i as usize) as u32;
    let mut rows = Vec::with_capacity(total);
    let mut rhs = Vec::new();
    let mut c: Idx = smallvec::smallvec![0; k];
    for r in 0..total {
        let mut rem = r;
        for l in (0..k).rev() {
            c[l] = (rem % n) as u32;
            rem /= n;
        }
        // Δ of a tuple is the product of the leg coproducts.
        let mut terms: Vec<(Idx, Idx, Scalar)> = vec![(Idx::new(), Idx::new(), field.one())];
        for &cl in c.iter() {
            let mut next = Vec::new();
            for (a, b, s) in &terms {
                for (kk, d) in co.comul().image(cl).iter() {
                    let mut a2 = a.clone();
                    a2.push(kk[0]);
                    let mut b2 = b.clone();
                    b2.push(kk[1]);
                    next.push((a2, b2, s * d));
                }
            }
            terms = next;
        }
        let mut eq = Vec::new();
        for (a, b, s) in terms {
            if let Some(v) = form.get(&a) {
                eq.push((flat(&b), &s * v));
            }
        }
        rows.push(Vector::from_entries(eq));
        let eps = c
            .iter()
            .fold(field.one(), |acc, &i| &acc * &co.counit_of(i));
        if !eps.is_zero() {
            rhs.push((r as u32, eps));
        }
    }
    let x = linalg::solve(total, &rows, &Vector::from_entries(rhs))
        .map_err(|_| Error::NotConvolutionInvertible)?;
    let mut out = Tensor::zero(n, k);
    for (col, v) in x.iter() {
        let mut rem = col as usize;
        let mut idx: Idx = smallvec::smallvec![0; k];
        for l in (0..k).rev() {
            idx[l] = (rem % n) as u32;
            rem /= n;
        }
        out.add_term(idx, v.clone());
    }
    Ok(out)
}
