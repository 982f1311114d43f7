//! Sparse exact multilinear algebra over a fixed basis.
//!
//! A [`Tensor`] with `k` legs is an element of `V^{⊗k}` for a space `V` of
//! dimension `dim`, stored as a sorted map from index tuples to nonzero
//! coefficients. A [`Vector`] is the one-leg case in a flat layout for hot
//! loops. Multilinear forms use the same storage over the dual basis.

mod algebra;
mod contract;
mod convolution;
pub mod linalg;

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub use algebra::{Algebra, Coalgebra, LinearMap, TensorMap};
pub use contract::{contract, Factor};
pub use convolution::{convolution_invert, invert_form};

/// A basis index tuple, one entry per leg.
pub type Idx = SmallVec<[u32; 6]>;

/// Sparse one-leg element; entries sorted by index, never zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    entries: Vec<(u32, Scalar)>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector::default()
    }

    pub fn basis(i: u32, field: &Field) -> Vector {
        Vector {
            entries: vec![(i, field.one())],
        }
    }

    /// Collects arbitrary `(index, coefficient)` pairs, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (u32, Scalar)>>(it: I) -> Vector {
        let mut map: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (i, c) in it {
            accumulate(&mut map, i, c);
        }
        Vector {
            entries: map.into_iter().collect(),
        }
    }

    /// From a dense coefficient list.
    pub fn from_dense(values: &[Scalar]) -> Vector {
        Vector {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize, field: &Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, c) in &self.entries {
            out[*i as usize] = c.clone();
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: u32) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        if s.is_zero() {
            return Vector::zero();
        }
        Vector {
            entries: self.entries.iter().map(|(i, c)| (*i, c * s)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: &Scalar, other: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        let v = s * y;
                        if !v.is_zero() {
                            out.push((*j, v));
                        }
                        b.next();
                    } else {
                        let v = x + &(s * y);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    let v = s * y;
                    if !v.is_zero() {
                        out.push((*j, v));
                    }
                    b.next();
                }
                (None, None) => break,
            }
        }
        Vector { entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&c.one_like(), other),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.axpy(&-&c.one_like(), other),
        }
    }

    /// Pairing `Σ self_i other_i` (form against vector).
    pub fn dot(&self, other: &Vector, field: &Field) -> Scalar {
        let mut acc = field.zero();
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc = &acc + &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }

    pub fn first_nonzero(&self) -> Option<(u32, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Sparse element of `V^{⊗legs}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    legs: usize,
    entries: BTreeMap<Idx, Scalar>,
}

impl Tensor {
    pub fn zero(dim: usize, legs: usize) -> Tensor {
        Tensor {
            dim,
            legs,
            entries: BTreeMap::new(),
        }
    }

    /// A zero-leg tensor holding a scalar.
    pub fn scalar(dim: usize, s: Scalar) -> Tensor {
        let mut t = Tensor::zero(dim, 0);
        t.add_term(Idx::new(), s);
        t
    }

    pub fn from_vector(dim: usize, v: &Vector) -> Tensor {
        let mut t = Tensor::zero(dim, 1);
        for (i, c) in v.iter() {
            t.entries.insert(Idx::from_slice(&[i]), c.clone());
        }
        t
    }

    /// Builds a tensor from index tuples, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (Idx, Scalar)>>(
        dim: usize,
        legs: usize,
        it: I,
    ) -> Result<Tensor> {
        let mut t = Tensor::zero(dim, legs);
        for (idx, c) in it {
            if idx.len() != legs {
                return Err(Error::DimensionMismatch {
                    expected: legs,
                    found: idx.len(),
                });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i as usize >= dim) {
                return Err(Error::IndexOutOfRange(format!(
                    "index {bad} in dimension {dim}"
                )));
            }
            t.add_term(idx, c);
        }
        Ok(t)
    }

    /// Elementary tensor `v_1 ⊗ ... ⊗ v_k`.
    pub fn product_of(dim: usize, vs: &[&Vector]) -> Tensor {
        let mut t = Tensor::zero(dim, vs.len());
        let mut idx = Idx::new();
        push_product(&mut t, vs, None, &mut idx);
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Idx, &Scalar)> + '_ {
        self.entries.iter()
    }

    pub fn get(&self, idx: &[u32]) -> Option<&Scalar> {
        self.entries.get(idx)
    }

    /// Coefficient at `idx`, zero when absent.
    pub fn coeff(&self, idx: &[u32], field: &Field) -> Scalar {
        self.get(idx).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add_term(&mut self, idx: Idx, c: Scalar) {
        debug_assert_eq!(idx.len(), self.legs);
        accumulate(&mut self.entries, idx, c);
    }

    pub fn to_vector(&self) -> Vector {
        assert_eq!(self.legs, 1, "to_vector needs a one-leg tensor");
        Vector {
            entries: self
                .entries
                .iter()
                .map(|(k, c)| (k[0], c.clone()))
                .collect(),
        }
    }

    /// The coefficient of a zero-leg tensor.
    pub fn to_scalar(&self, field: &Field) -> Scalar {
        assert_eq!(self.legs, 0, "to_scalar needs a zero-leg tensor");
        self.coeff(&[], field)
    }

    fn check_shape(&self, other: &Tensor) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.legs != other.legs {
            return Err(Error::DimensionMismatch {
                expected: self.legs,
                found: other.legs,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Tensor) -> Result<Tensor> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_term(k.clone(), -c);
        }
        Ok(out)
    }

    /// Panicking `self + other`; shapes must agree.
    pub fn add(&self, other: &Tensor) -> Tensor {
        self.checked_add(other).expect("tensor shape mismatch")
    }

    /// Panicking `self - other`; shapes must agree.
    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.checked_sub(other).expect("tensor shape mismatch")
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.dim, self.legs);
        if s.is_zero() {
            return out;
        }
        out.entries = self
            .entries
            .iter()
            .map(|(k, c)| (k.clone(), c * s))
            .collect();
        out
    }

    pub fn neg(&self) -> Tensor {
        let mut out = self.clone();
        for c in out.entries.values_mut() {
            *c = -&*c;
        }
        out
    }

    /// Concatenates legs: `self ⊗ other`.
    pub fn tensor(&self, other: &Tensor) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = Tensor::zero(self.dim, self.legs + other.legs);
        for (a, x) in &self.entries {
            for (b, y) in &other.entries {
                let mut k = a.clone();
                k.extend_from_slice(b);
                out.entries.insert(k, x.checked_mul(y)?);
            }
        }
        Ok(out)
    }

    /// Leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor> {
        check_perm(perm, self.legs)?;
        let mut out = Tensor::zero(self.dim, self.legs);
        for (k, c) in &self.entries {
            let nk: Idx = perm.iter().map(|&p| k[p]).collect();
            out.entries.insert(nk, c.clone());
        }
        Ok(out)
    }

    /// Places leg `i` of `self` at `positions[i]` in an `m`-leg tensor and
    /// fills the remaining legs with `unit`.
    pub fn embed(&self, m: usize, positions: &[usize], unit: &Vector) -> Result<Tensor> {
        if positions.len() != self.legs {
            return Err(Error::DimensionMismatch {
                expected: self.legs,
                found: positions.len(),
            });
        }
        let mut seen = vec![false; m];
        for &p in positions {
            if p >= m || seen[p] {
                return Err(Error::IndexOutOfRange(format!(
                    "leg position {p} in {m}-leg tensor"
                )));
            }
            seen[p] = true;
        }
        let free: Vec<usize> = (0..m).filter(|&p| !seen[p]).collect();
        let unit_t = Tensor::product_of(self.dim, &vec![unit; free.len()]);
        let mut out = Tensor::zero(self.dim, m);
        for (k, c) in &self.entries {
            for (u, d) in &unit_t.entries {
                let mut nk: Idx = SmallVec::from_elem(0, m);
                for (i, &p) in positions.iter().enumerate() {
                    nk[p] = k[i];
                }
                for (i, &p) in free.iter().enumerate() {
                    nk[p] = u[i];
                }
                out.add_term(nk, c * d);
            }
        }
        Ok(out)
    }

    /// Applies a vector-valued map to one leg.
    pub fn map_leg(&self, leg: usize, map: &LinearMap) -> Tensor {
        let mut out = Tensor::zero(map.out_dim(), self.legs);
        for (k, c) in &self.entries {
            for (j, d) in map.image(k[leg]).iter() {
                let mut nk = k.clone();
                nk[leg] = j;
                out.add_term(nk, c * d);
            }
        }
        out
    }

    /// Applies the same map to every leg.
    pub fn map_all(&self, map: &LinearMap) -> Tensor {
        (0..self.legs).fold(self.clone(), |t, l| t.map_leg(l, map))
    }

    /// Replaces leg `leg` by the legs of its image under `map`
    /// (e.g. a coproduct splits it in two, a counit removes it).
    pub fn expand_leg(&self, leg: usize, map: &TensorMap) -> Tensor {
        let r = map.out_legs();
        let mut out = Tensor::zero(map.out_dim(), self.legs + r - 1);
        for (k, c) in &self.entries {
            for (img, d) in map.image(k[leg]).iter() {
                let mut nk: Idx = Idx::with_capacity(self.legs + r - 1);
                nk.extend_from_slice(&k[..leg]);
                nk.extend_from_slice(img);
                nk.extend_from_slice(&k[leg + 1..]);
                out.add_term(nk, c * d);
            }
        }
        out
    }

    /// Evaluates `self` as a multilinear form on an element of the same shape.
    pub fn pair(&self, other: &Tensor, field: &Field) -> Scalar {
        let (small, big) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = field.zero();
        for (k, c) in &small.entries {
            if let Some(d) = big.entries.get(k) {
                acc = &acc + &(c * d);
            }
        }
        acc
    }

    /// Contracts leg `leg` against the form `form` (a vector over the dual basis).
    pub fn contract_leg(&self, leg: usize, form: &Vector) -> Tensor {
        let mut out = Tensor::zero(self.dim, self.legs - 1);
        for (k, c) in &self.entries {
            if let Some(f) = form.get(k[leg]) {
                let mut nk = k.clone();
                nk.remove(leg);
                out.add_term(nk, c * f);
            }
        }
        out
    }

    /// Sparse entries as `(index tuple, display string)` pairs.
    pub fn sparse_entries(&self) -> Vec<(Vec<u32>, String)> {
        self.entries
            .iter()
            .map(|(k, c)| (k.to_vec(), c.to_string()))
            .collect()
    }
}

fn check_perm(perm: &[usize], legs: usize) -> Result<()> {
    if perm.len() != legs {
        return Err(Error::DimensionMismatch {
            expected: legs,
            found: perm.len(),
        });
    }
    let mut seen = vec![false; legs];
    for &p in perm {
        if p >= legs || seen[p] {
            return Err(Error::IndexOutOfRange(format!(
                "{perm:?} is not a permutation"
            )));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Adds `coeff * (vs[0] ⊗ ... ⊗ vs[k-1])` to `t`.
pub(crate) fn push_product(t: &mut Tensor, vs: &[&Vector], coeff: Option<&Scalar>, idx: &mut Idx) {
    fn rec(t: &mut Tensor, vs: &[&Vector], c: Option<Scalar>, idx: &mut Idx) {
        if idx.len() == vs.len() {
            if let Some(c) = c {
                t.add_term(idx.clone(), c);
            }
            return;
        }
        for (i, x) in vs[idx.len()].iter() {
            let nc = match &c {
                Some(c) => c * x,
                None => x.clone(),
            };
            idx.push(i);
            rec(t, vs, Some(nc), idx);
            idx.pop();
        }
    }
    if vs.iter().any(|v| v.is_zero()) {
        return;
    }
    if vs.is_empty() {
        if let Some(c) = coeff {
            t.add_term(Idx::new(), c.clone());
        }
        return;
    }
    rec(t, vs, coeff.cloned(), idx);
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(i, c)| format!("({c})[{i}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, c)| format!("({c}){k:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::rational()
    }

    fn v(pairs: &[(u32, i64)]) -> Vector {
        let f = q();
        Vector::from_entries(pairs.iter().map(|&(i, c)| (i, f.from_i64(c))))
    }

    #[test]
    fn tensor_product_of_sums() {
        // (e+g) ⊗ (e-g) in k[Z_2]
        let a = Tensor::from_vector(2, &v(&[(0, 1), (1, 1)]));
        let b = Tensor::from_vector(2, &v(&[(0, 1), (1, -1)]));
        let t = a.tensor(&b).unwrap();
        let f = q();
        assert_eq!(t.nnz(), 4);
        assert_eq!(t.coeff(&[0, 0], &f), f.from_i64(1));
        assert_eq!(t.coeff(&[0, 1], &f), f.from_i64(-1));
        assert_eq!(t.coeff(&[1, 0], &f), f.from_i64(1));
        assert_eq!(t.coeff(&[1, 1], &f), f.from_i64(-1));
    }

    #[test]
    fn tensor_with_unit_adds_a_leg() {
        let a = Tensor::from_vector(3, &v(&[(1, 2), (2, 5)]));
        let unit = Tensor::from_vector(3, &v(&[(0, 1)]));
        let t = a.tensor(&unit).unwrap();
        assert_eq!(t.legs(), 2);
        assert_eq!(t.contract_leg(1, &v(&[(0, 1)])), a);
    }

    #[test]
    fn swap_and_embed() {
        let a = Tensor::from_vector(2, &v(&[(0, 1)]));
        let b = Tensor::from_vector(2, &v(&[(1, 3)]));
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.permute(&[1, 0]).unwrap(), b.tensor(&a).unwrap());

        let f = q();
        let r = Tensor::from_entries(
            2,
            2,
            [
                (Idx::from_slice(&[0, 0]), f.one()),
                (Idx::from_slice(&[1, 1]), f.one()),
            ],
        )
        .unwrap();
        let r13 = r.embed(3, &[0, 2], &v(&[(0, 1)])).unwrap();
        assert_eq!(r13.get(&[0, 0, 0]), Some(&f.one()));
        assert_eq!(r13.get(&[1, 0, 1]), Some(&f.one()));
        assert_eq!(r13.nnz(), 2);
        assert!(r.embed(3, &[0, 0], &v(&[(0, 1)])).is_err());
        assert!(r.permute(&[0, 0]).is_err());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = Tensor::zero(2, 1);
        let b = Tensor::zero(3, 1);
        assert!(a.checked_add(&b).is_err());
        assert!(a.tensor(&b).is_err());
    }

    fn arb_tensor(dim: u32, legs: usize) -> impl Strategy<Value = Tensor> {
        proptest::collection::vec((proptest::collection::vec(0..dim, legs), -3i64..=3), 0..12)
            .prop_map(move |es| {
                let f = Field::rational();
                Tensor::from_entries(
                    dim as usize,
                    legs,
                    es.into_iter()
                        .map(|(k, c)| (Idx::from_vec(k), f.from_i64(c))),
                )
                .unwrap()
            })
    }

    proptest! {
        #[test]
        fn permutation_is_a_group_action(t in arb_tensor(3, 3)) {
            let p = [2usize, 0, 1];
            let pinv = [1usize, 2, 0];
            prop_assert_eq!(t.permute(&p).unwrap().permute(&pinv).unwrap(), t.clone());
            let q = [1usize, 0, 2];
            let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
            prop_assert_eq!(t.permute(&p).unwrap().permute(&q).unwrap(), t.permute(&pq).unwrap());
        }

        #[test]
        fn tensor_is_associative_and_multiplies_sparsity(
            a in arb_tensor(3, 1), b in arb_tensor(3, 2), c in arb_tensor(3, 1)
        ) {
            let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
            let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(a.tensor(&b).unwrap().nnz(), a.nnz() * b.nnz());
        }

        #[test]
        fn vector_axpy_matches_dense(a in proptest::collection::vec(-3i64..=3, 5), b in proptest::collection::vec(-3i64..=3, 5), s in -2i64..=2) {
            let f = Field::rational();
            let va = Vector::from_dense(&a.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>());
            let vb = Vector::from_dense(&b.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>());
            let dense: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| f.from_i64(x + s * y)).collect();
            prop_assert_eq!(va.axpy(&f.from_i64(s), &vb), Vector::from_dense(&dense));
        }
    }
}
