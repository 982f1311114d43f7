use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

use super::{push_product, Idx, Tensor, Vector};

/// A linear map between spaces with fixed bases, stored by basis images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    in_dim: usize,
    out_dim: usize,
    images: Vec<Vector>,
}

impl LinearMap {
    pub fn new(in_dim: usize, out_dim: usize, images: Vec<Vector>) -> Result<LinearMap> {
        if images.len() != in_dim {
            return Err(Error::DimensionMismatch {
                expected: in_dim,
                found: images.len(),
            });
        }
        if let Some(bad) = images
            .iter()
            .filter_map(|v| v.max_index())
            .find(|&i| i as usize >= out_dim)
        {
            return Err(Error::IndexOutOfRange(format!(
                "image index {bad} in dimension {out_dim}"
            )));
        }
        Ok(LinearMap {
            in_dim,
            out_dim,
            images,
        })
    }

    pub fn identity(n: usize, field: &Field) -> LinearMap {
        LinearMap {
            in_dim: n,
            out_dim: n,
            images: (0..n as u32).map(|i| Vector::basis(i, field)).collect(),
        }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn image(&self, i: u32) -> &Vector {
        &self.images[i as usize]
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut acc: Vec<(u32, Scalar)> = Vec::new();
        for (i, c) in v.iter() {
            acc.extend(self.images[i as usize].iter().map(|(j, d)| (j, c * d)));
        }
        Vector::from_entries(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.out_dim != self.in_dim {
            return Err(Error::DimensionMismatch {
                expected: self.in_dim,
                found: other.out_dim,
            });
        }
        Ok(LinearMap {
            in_dim: other.in_dim,
            out_dim: self.out_dim,
            images: other.images.iter().map(|v| self.apply(v)).collect(),
        })
    }

    /// The transpose with respect to the dual bases.
    pub fn transpose(&self) -> LinearMap {
        let mut cols: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.out_dim];
        for (i, v) in self.images.iter().enumerate() {
            for (j, c) in v.iter() {
                cols[j as usize].push((i as u32, c.clone()));
            }
        }
        LinearMap {
            in_dim: self.out_dim,
            out_dim: self.in_dim,
            images: cols.into_iter().map(Vector::from_entries).collect(),
        }
    }

    /// Matrix inverse by exact elimination.
    pub fn inverse(&self, field: &Field) -> Result<LinearMap> {
        if self.in_dim != self.out_dim {
            return Err(Error::NotInvertible("non-square map".into()));
        }
        let n = self.in_dim;
        // Row j of the transpose is the equation for coordinate j of S x.
        let rows = self.transpose().images;
        let rhs: Vec<Vector> = (0..n as u32).map(|j| Vector::basis(j, field)).collect();
        let images = super::linalg::solve_many(n, &rows, &rhs)
            .map_err(|_| Error::NotInvertible("linear map".into()))?;
        if images.iter().zip(&rhs).any(|(x, b)| &self.apply(x) != b) {
            return Err(Error::NotInvertible("linear map".into()));
        }
        // images[j] solves S x = e_j, so it is the j-th column of S^{-1}.
        Ok(LinearMap {
            in_dim: n,
            out_dim: n,
            images,
        })
    }
}

/// A linear map whose images are multi-leg tensors (coproducts, counits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMap {
    in_dim: usize,
    out_dim: usize,
    out_legs: usize,
    images: Vec<Tensor>,
}

impl TensorMap {
    pub fn new(
        in_dim: usize,
        out_dim: usize,
        out_legs: usize,
        images: Vec<Tensor>,
    ) -> Result<TensorMap> {
        if images.len() != in_dim {
            return Err(Error::DimensionMismatch {
                expected: in_dim,
                found: images.len(),
            });
        }
        for t in &images {
            if t.dim() != out_dim || t.legs() != out_legs {
                return Err(Error::DimensionMismatch {
                    expected: out_legs,
                    found: t.legs(),
                });
            }
        }
        Ok(TensorMap {
            in_dim,
            out_dim,
            out_legs,
            images,
        })
    }

    /// A scalar-valued map (zero output legs) from a form.
    pub fn from_form(form: &Vector, in_dim: usize, field: &Field) -> TensorMap {
        let images = (0..in_dim as u32)
            .map(|i| Tensor::scalar(in_dim, form.get(i).cloned().unwrap_or_else(|| field.zero())))
            .collect();
        TensorMap {
            in_dim,
            out_dim: in_dim,
            out_legs: 0,
            images,
        }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn out_legs(&self) -> usize {
        self.out_legs
    }

    pub fn image(&self, i: u32) -> &Tensor {
        &self.images[i as usize]
    }

    pub fn images(&self) -> &[Tensor] {
        &self.images
    }

    pub fn apply(&self, v: &Vector) -> Tensor {
        let mut out = Tensor::zero(self.out_dim, self.out_legs);
        for (i, c) in v.iter() {
            for (k, d) in self.images[i as usize].iter() {
                out.add_term(k.clone(), c * d);
            }
        }
        out
    }

    /// Permutes the output legs of every image.
    pub fn permute_outputs(&self, perm: &[usize]) -> Result<TensorMap> {
        Ok(TensorMap {
            in_dim: self.in_dim,
            out_dim: self.out_dim,
            out_legs: self.out_legs,
            images: self
                .images
                .iter()
                .map(|t| t.permute(perm))
                .collect::<Result<_>>()?,
        })
    }
}

/// An associative unital algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// `table[i*dim + j] = e_i e_j`.
    table: Vec<Vector>,
    unit: Vector,
}

impl Algebra {
    pub fn new(field: Field, dim: usize, table: Vec<Vector>, unit: Vector) -> Result<Algebra> {
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: table.len(),
            });
        }
        let max = table
            .iter()
            .chain(std::iter::once(&unit))
            .filter_map(|v| v.max_index())
            .max();
        if let Some(m) = max.filter(|&m| m as usize >= dim) {
            return Err(Error::IndexOutOfRange(format!(
                "structure constant index {m} in dimension {dim}"
            )));
        }
        Ok(Algebra {
            field,
            dim,
            table,
            unit,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn mul_basis(&self, i: u32, j: u32) -> &Vector {
        &self.table[i as usize * self.dim + j as usize]
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        if a.is_zero() || b.is_zero() {
            return Vector::zero();
        }
        let mut acc: Vec<Option<Scalar>> = vec![None; self.dim];
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, z) in self.mul_basis(i, j).iter() {
                    let t = &xy * z;
                    let slot = &mut acc[k as usize];
                    *slot = Some(match slot.take() {
                        Some(s) => &s + &t,
                        None => t,
                    });
                }
            }
        }
        Vector::from_entries(
            acc.into_iter()
                .enumerate()
                .filter_map(|(k, c)| c.filter(|c| !c.is_zero()).map(|c| (k as u32, c))),
        )
    }

    /// Product of a sequence of elements, the unit when empty.
    pub fn mul_all(&self, factors: &[&Vector]) -> Vector {
        match factors.split_first() {
            None => self.unit.clone(),
            Some((first, rest)) => rest
                .iter()
                .fold((*first).clone(), |acc, f| self.mul(&acc, f)),
        }
    }

    /// `1^{⊗legs}`.
    pub fn one_tensor(&self, legs: usize) -> Tensor {
        if legs == 0 {
            return Tensor::scalar(self.dim, self.field.one());
        }
        Tensor::product_of(self.dim, &vec![&self.unit; legs])
    }

    /// Multiplication in `A^{⊗k}`, leg by leg.
    pub fn mul_tensors(&self, a: &Tensor, b: &Tensor) -> Tensor {
        assert_eq!(
            a.legs(),
            b.legs(),
            "leg count mismatch in tensor product algebra"
        );
        let legs = a.legs();
        let mut out = Tensor::zero(self.dim, legs);
        let mut vs: Vec<&Vector> = Vec::with_capacity(legs);
        let mut idx = Idx::new();
        for (ka, x) in a.iter() {
            'pairs: for (kb, y) in b.iter() {
                vs.clear();
                for l in 0..legs {
                    let v = self.mul_basis(ka[l], kb[l]);
                    if v.is_zero() {
                        continue 'pairs;
                    }
                    vs.push(v);
                }
                let c = x * y;
                idx.clear();
                push_product(&mut out, &vs, Some(&c), &mut idx);
            }
        }
        out
    }

    /// Left to right product of several tensors with equal leg counts.
    pub fn mul_tensor_chain(&self, factors: &[&Tensor]) -> Tensor {
        let (first, rest) = factors.split_first().expect("empty product");
        rest.iter()
            .fold((*first).clone(), |acc, f| self.mul_tensors(&acc, f))
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult(&self, a: &Vector) -> LinearMap {
        let images = (0..self.dim as u32)
            .map(|j| self.mul(a, &Vector::basis(j, &self.field)))
            .collect();
        LinearMap {
            in_dim: self.dim,
            out_dim: self.dim,
            images,
        }
    }

    /// Inverse of an element of `A^{⊗k}` (see [`super::linalg::invert_element`]).
    pub fn invert(&self, x: &Tensor) -> Result<Tensor> {
        super::linalg::invert_element(self, x)
    }

    /// `a` is central when `a e_i = e_i a` for every basis `e_i`.
    pub fn is_central(&self, a: &Vector) -> bool {
        (0..self.dim as u32).all(|i| {
            let e = Vector::basis(i, &self.field);
            self.mul(a, &e) == self.mul(&e, a)
        })
    }

    /// `c = Σ_{ij} c_{ij} e_i e_j` with coefficients accumulated sparsely.
    pub fn structure_tensor(&self) -> Tensor {
        let mut t = Tensor::zero(self.dim, 3);
        for i in 0..self.dim as u32 {
            for j in 0..self.dim as u32 {
                for (k, c) in self.mul_basis(i, j).iter() {
                    t.add_term(Idx::from_slice(&[i, j, k]), c.clone());
                }
            }
        }
        t
    }
}

/// A coalgebra given by its coproduct and counit.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    field: Field,
    comul: TensorMap,
    counit: Vector,
}

impl Coalgebra {
    pub fn new(field: Field, comul: TensorMap, counit: Vector) -> Result<Coalgebra> {
        if comul.out_legs() != 2 || comul.in_dim() != comul.out_dim() {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: comul.out_legs(),
            });
        }
        Ok(Coalgebra {
            field,
            comul,
            counit,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.comul.in_dim()
    }

    pub fn comul(&self) -> &TensorMap {
        &self.comul
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn counit_of(&self, i: u32) -> Scalar {
        self.counit
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(field: &Field) -> Algebra {
        let e = Vector::basis(0, field);
        let g = Vector::basis(1, field);
        Algebra::new(
            field.clone(),
            2,
            vec![e.clone(), g.clone(), g, e.clone()],
            e,
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_products() {
        let f = Field::rational();
        let a = z2(&f);
        let g = Vector::basis(1, &f);
        assert_eq!(a.mul(&g, &g), Vector::basis(0, &f));
        let x = Vector::from_dense(&[f.from_i64(3), f.from_i64(-2)]);
        assert_eq!(a.mul(a.unit(), &x), x);
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let f = Field::rational();
        let m = LinearMap::new(
            2,
            2,
            vec![
                Vector::from_dense(&[f.from_i64(1), f.from_i64(1)]),
                Vector::from_dense(&[f.from_i64(1), f.from_i64(-1)]),
            ],
        )
        .unwrap();
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(2, &f));
        assert_eq!(inv.compose(&m).unwrap(), LinearMap::identity(2, &f));
        let zero = LinearMap::new(2, 2, vec![Vector::zero(), Vector::zero()]).unwrap();
        assert!(zero.inverse(&f).is_err());
    }

    #[test]
    fn tensor_algebra_product() {
        let f = Field::rational();
        let a = z2(&f);
        let g = Vector::basis(1, &f);
        let gg = Tensor::product_of(2, &[&g, &g]);
        assert_eq!(a.mul_tensors(&gg, &gg), a.one_tensor(2));
    }
}
