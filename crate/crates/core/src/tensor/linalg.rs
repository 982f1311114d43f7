//! Exact sparse Gaussian elimination.
//!
//! Rows are sparse [`Vector`]s over column indices `0..ncols`. The echelon
//! form keeps one row per pivot column, normalized to leading coefficient 1,
//! with every other entry to the right of the pivot.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Field;

use super::{Algebra, Idx, Tensor, Vector};

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<u32, Vector>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn from_rows<I: IntoIterator<Item = Vector>>(rows: I) -> Echelon {
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: u32) -> Option<&Vector> {
        self.rows.get(&pivot)
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        let mut start = 0u32;
        loop {
            let next = v
                .iter()
                .map(|(i, _)| i)
                .find(|&i| i >= start && self.rows.contains_key(&i));
            match next {
                None => return v,
                Some(p) => {
                    let c = v.get(p).unwrap().clone();
                    v = v.axpy(&-c, &self.rows[&p]);
                    start = p + 1;
                }
            }
        }
    }

    /// Adds `v` to the row space; returns the reduced, normalized row when it
    /// was independent.
    pub fn insert(&mut self, v: Vector) -> Option<u32> {
        let r = self.reduce(v);
        let (p, lead) = r.first_nonzero()?;
        let r = r.scale(&lead.inv().expect("nonzero leading coefficient"));
        self.rows.insert(p, r);
        Some(p)
    }

    /// Back substitution to reduced row echelon form.
    pub fn into_rref(mut self) -> Echelon {
        let pivots: Vec<u32> = self.rows.keys().rev().copied().collect();
        for (n, &p) in pivots.iter().enumerate() {
            let prow = self.rows[&p].clone();
            for &q in &pivots[n + 1..] {
                let row = self.rows.get_mut(&q).unwrap();
                if let Some(c) = row.get(p).cloned() {
                    *row = row.axpy(&-c, &prow);
                }
            }
        }
        self
    }
}

/// Solves `rows · x = b` where `rows[i]` is the `i`-th equation.
pub fn solve(ncols: usize, rows: &[Vector], b: &Vector) -> Result<Vector> {
    Ok(solve_many(ncols, rows, std::slice::from_ref(b))?.remove(0))
}

/// Solves `rows · x_j = rhs_j` for several right-hand sides at once.
pub fn solve_many(ncols: usize, rows: &[Vector], rhs: &[Vector]) -> Result<Vec<Vector>> {
    let mut per_row: Vec<Vec<(u32, crate::scalar::Scalar)>> = vec![Vec::new(); rows.len()];
    for (j, b) in rhs.iter().enumerate() {
        for (i, c) in b.iter() {
            let slot = per_row.get_mut(i as usize).ok_or(Error::Inconsistent)?;
            slot.push((ncols as u32 + j as u32, c.clone()));
        }
    }
    let mut ech = Echelon::new();
    for (row, extra) in rows.iter().zip(per_row) {
        if let Some(bad) = row.max_index().filter(|&m| m as usize >= ncols) {
            return Err(Error::IndexOutOfRange(format!(
                "column {bad} with {ncols} unknowns"
            )));
        }
        ech.insert(row.add(&Vector::from_entries(extra)));
    }
    if ech.pivots().any(|p| p as usize >= ncols) {
        return Err(Error::Inconsistent);
    }
    let ech = ech.into_rref();
    Ok((0..rhs.len())
        .map(|j| {
            let col = ncols as u32 + j as u32;
            Vector::from_entries(
                ech.rows
                    .iter()
                    .filter_map(|(&p, row)| row.get(col).map(|c| (p, c.clone()))),
            )
        })
        .collect())
}

/// A basis of `{x : rows · x = 0}`, one vector per free column.
pub fn nullspace(ncols: usize, rows: &[Vector], field: &Field) -> Vec<Vector> {
    let ech = Echelon::from_rows(rows.iter().cloned()).into_rref();
    (0..ncols as u32)
        .filter(|f| !ech.rows.contains_key(f))
        .map(|f| {
            let mut entries = vec![(f, field.one())];
            for (&p, row) in &ech.rows {
                if let Some(c) = row.get(f) {
                    entries.push((p, -c));
                }
            }
            Vector::from_entries(entries)
        })
        .collect()
}

fn flatten(idx: &Idx, dim: usize) -> u32 {
    idx.iter().fold(0u64, |acc, &i| acc * dim as u64 + i as u64) as u32
}

/// Inverse of an element of `A^{⊗k}` from its minimal polynomial.
///
/// Powers `x^0, x^1, ...` are reduced against each other until the first
/// linear dependency `Σ c_j x^j = 0`; `x` is invertible iff `c_0 ≠ 0`, and
/// then `x^{-1} = -c_0^{-1} Σ_{j≥1} c_j x^{j-1}`. The result is checked on
/// both sides before it is returned.
pub fn invert_element(alg: &Algebra, x: &Tensor) -> Result<Tensor> {
    let dim = alg.dim();
    let legs = x.legs();
    let space = (dim as u64).pow(legs as u32);
    if space + 1 + space >= u32::MAX as u64 {
        return Err(Error::UnsupportedInput(
            "tensor space too large to invert".into(),
        ));
    }
    let tag = space as u32;
    let field = alg.field();
    let one = alg.one_tensor(legs);
    let mut powers = vec![one.clone()];
    let mut ech = Echelon::new();
    let row = |t: &Tensor, j: usize| {
        let mut v: Vec<_> = t
            .iter()
            .map(|(k, c)| (flatten(k, dim), c.clone()))
            .collect();
        v.push((tag + j as u32, field.one()));
        Vector::from_entries(v)
    };
    ech.insert(row(&one, 0));
    for j in 1..=space as usize + 1 {
        let p = alg.mul_tensors(powers.last().unwrap(), x);
        let r = ech.reduce(row(&p, j));
        powers.push(p);
        match r.first_nonzero() {
            Some((lead, _)) if lead < tag => {
                ech.insert(r);
            }
            _ => {
                let c0 = r.get(tag).cloned().unwrap_or_else(|| field.zero());
                if c0.is_zero() {
                    return Err(Error::NotInvertible("element".into()));
                }
                let mut inv = Tensor::zero(dim, legs);
                for (col, c) in r.iter().filter(|(col, _)| *col > tag) {
                    let k = (col - tag) as usize;
                    inv = inv.add(&powers[k - 1].scale(c));
                }
                let inv = inv.scale(&-&c0.inv()?);
                if alg.mul_tensors(x, &inv) != one || alg.mul_tensors(&inv, x) != one {
                    return Err(Error::NotInvertible("element".into()));
                }
                return Ok(inv);
            }
        }
    }
    Err(Error::NotInvertible("element".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn vq(vals: &[i64]) -> Vector {
        let f = Field::rational();
        Vector::from_dense(&vals.iter().map(|&x| f.from_i64(x)).collect::<Vec<Scalar>>())
    }

    #[test]
    fn identity_system() {
        let rows = vec![vq(&[1, 0, 0]), vq(&[0, 1, 0]), vq(&[0, 0, 1])];
        let b = vq(&[4, -1, 7]);
        assert_eq!(solve(3, &rows, &b).unwrap(), b);
    }

    #[test]
    fn inconsistent_system() {
        let rows = vec![vq(&[1, 1]), vq(&[2, 2])];
        assert!(matches!(
            solve(2, &rows, &vq(&[1, 3])),
            Err(Error::Inconsistent)
        ));
    }

    #[test]
    fn integral_system_of_z2() {
        // h t = eps(h) t: for h = g the rows are (g - 1) acting on t = (a, b).
        let f = Field::rational();
        let rows = vec![vq(&[-1, 1]), vq(&[1, -1])];
        let ns = nullspace(2, &rows, &f);
        assert_eq!(ns, vec![vq(&[1, 1])]);
    }

    #[test]
    fn nullspace_vectors_are_in_kernel() {
        let f = Field::rational();
        let rows = vec![vq(&[1, 2, 3, 4]), vq(&[2, 4, 6, 8]), vq(&[0, 1, 1, 0])];
        let ns = nullspace(4, &rows, &f);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert!(r.dot(v, &f).is_zero());
            }
        }
    }
}
