use super::Cocycle3;
use crate::error::{Error, Result};
use crate::hopf::{GroupTable, HopfAlgebra};
use crate::tensor::{Idx, Tensor};

/// `ε ⊗ ε ⊗ ε`.
pub fn trivial_cocycle(h: &HopfAlgebra) -> Result<Cocycle3> {
    let e = h.counit();
    Cocycle3::new(h, Tensor::product_of(h.dim(), &[e, e, e]))
}

fn require_group<'a>(h: &'a HopfAlgebra, expected: &GroupTable) -> Result<&'a GroupTable> {
    match h.group() {
        Some(g) if g == expected => Ok(g),
        _ => Err(Error::InvalidCocycle(
            "Hopf algebra is not the expected group algebra".into(),
        )),
    }
}

/// `ω(a,b,c) = ζ_n^{q a ⌊(b+c)/n⌋}` on `k[Z_n]`.
pub fn cyclic_cocycle(h: &HopfAlgebra, n: u32, q: u32) -> Result<Cocycle3> {
    product_cyclic_cocycle(h, &[n], &[q])
}

/// Componentwise product of cyclic cocycles on `k[Z_{n_1} × ... × Z_{n_r}]`.
pub fn product_cyclic_cocycle(h: &HopfAlgebra, orders: &[u32], qs: &[u32]) -> Result<Cocycle3> {
    if orders.len() != qs.len() {
        return Err(Error::InvalidCocycle(format!(
            "{} orders but {} parameters",
            orders.len(),
            qs.len()
        )));
    }
    if let Some((&n, &q)) = orders.iter().zip(qs).find(|(n, q)| q >= n) {
        return Err(Error::InvalidCocycle(format!(
            "parameter {q} out of range for Z_{n}"
        )));
    }
    require_group(h, &GroupTable::product_of_cyclic(orders)?)?;
    let f = h.field();
    for (&n, _) in orders.iter().zip(qs).filter(|(_, &q)| q != 0) {
        f.root_of_unity(n as u64, 1)?;
    }
    let digits = |mut x: u32| {
        let mut d = vec![0u32; orders.len()];
        for (i, &o) in orders.iter().enumerate().rev() {
            d[i] = x % o;
            x /= o;
        }
        d
    };
    let size = h.dim() as u32;
    let mut omega = Tensor::zero(h.dim(), 3);
    for a in 0..size {
        let da = digits(a);
        for b in 0..size {
            let db = digits(b);
            for c in 0..size {
                let dc = digits(c);
                let mut v = f.one();
                for i in 0..orders.len() {
                    let n = orders[i] as u64;
                    let carry = ((db[i] + dc[i]) / orders[i]) as u64;
                    let e = qs[i] as u64 * da[i] as u64 * carry;
                    if !e.is_multiple_of(n) {
                        v = &v * &f.root_of_unity(n, e as i64)?;
                    }
                }
                omega.add_term(Idx::from_slice(&[a, b, c]), v);
            }
        }
    }
    Cocycle3::verified(h, omega)
}

/// `ω(a,b,c) = ζ_N^{e[a][b][c]}` on a group algebra, verified.
pub fn exponent_table_cocycle(
    h: &HopfAlgebra,
    root_order: u64,
    exponents: &[Vec<Vec<u64>>],
) -> Result<Cocycle3> {
    Cocycle3::verified(h, exponent_table(h, root_order, exponents)?)
}

/// The tensor `ω(a,b,c) = ζ_N^{e[a][b][c]}` without checking the cocycle conditions.
pub fn exponent_table(
    h: &HopfAlgebra,
    root_order: u64,
    exponents: &[Vec<Vec<u64>>],
) -> Result<Tensor> {
    let g = h
        .group()
        .ok_or_else(|| Error::InvalidCocycle("exponent tables need a group algebra".into()))?;
    let n = g.order();
    let shape_ok = exponents.len() == n
        && exponents
            .iter()
            .all(|m| m.len() == n && m.iter().all(|r| r.len() == n));
    if !shape_ok {
        return Err(Error::InvalidCocycle(format!(
            "exponent table must be {n}×{n}×{n}"
        )));
    }
    let f = h.field();
    f.root_of_unity(root_order, 1)?;
    let mut omega = Tensor::zero(n, 3);
    for (a, m) in exponents.iter().enumerate() {
        for (b, r) in m.iter().enumerate() {
            for (c, &e) in r.iter().enumerate() {
                let v = f.root_of_unity(root_order, (e % root_order) as i64)?;
                omega.add_term(Idx::from_slice(&[a as u32, b as u32, c as u32]), v);
            }
        }
    }
    Ok(omega)
}
