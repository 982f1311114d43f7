use super::{push_product, Algebra, Idx, LinearMap, Tensor, Vector};
use crate::scalar::Scalar;

/// One factor of an output leg in [`contract`].
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    /// Leg `.1` of input `.0`.
    Leg(usize, usize),
    /// The image of leg `.1` of input `.0` under a map (typically an antipode).
    Mapped(usize, usize, &'a LinearMap),
    /// A fixed element.
    Element(&'a Vector),
}

/// Sums, over all entries of all inputs, the tensor whose `i`-th leg is the
/// ordered product of `outputs[i]`.
///
/// For example with `inputs = [Φ⁻¹]` and outputs
/// `[[Mapped(0,0,S), Element(α), Leg(0,1)], [Leg(0,2)]]` this returns
/// `Σ S(x¹)αx² ⊗ x³`.
pub fn contract(alg: &Algebra, inputs: &[&Tensor], outputs: &[Vec<Factor<'_>>]) -> Tensor {
    let mut out = Tensor::zero(alg.dim(), outputs.len());
    let mut chosen: Vec<&Idx> = Vec::with_capacity(inputs.len());
    walk(alg, inputs, outputs, &mut chosen, None, &mut out);
    out
}

fn walk<'t>(
    alg: &Algebra,
    inputs: &[&'t Tensor],
    outputs: &[Vec<Factor<'_>>],
    chosen: &mut Vec<&'t Idx>,
    coeff: Option<Scalar>,
    out: &mut Tensor,
) {
    if chosen.len() == inputs.len() {
        let coeff = coeff.unwrap_or_else(|| alg.field().one());
        let mut legs: Vec<Vector> = Vec::with_capacity(outputs.len());
        for factors in outputs {
            let v = leg_product(alg, factors, chosen);
            if v.is_zero() {
                return;
            }
            legs.push(v);
        }
        let refs: Vec<&Vector> = legs.iter().collect();
        let mut idx = Idx::new();
        push_product(out, &refs, Some(&coeff), &mut idx);
        return;
    }
    let t = inputs[chosen.len()];
    for (k, c) in t.iter() {
        let nc = match &coeff {
            Some(x) => x * c,
            None => c.clone(),
        };
        chosen.push(k);
        walk(alg, inputs, outputs, chosen, Some(nc), out);
        chosen.pop();
    }
}

fn leg_product(alg: &Algebra, factors: &[Factor<'_>], chosen: &[&Idx]) -> Vector {
    let mut acc: Option<Vector> = None;
    for f in factors {
        let next = match *f {
            Factor::Leg(i, l) => match &acc {
                None => Vector::basis(chosen[i][l], alg.field()),
                Some(a) => mul_by_basis(alg, a, chosen[i][l]),
            },
            Factor::Mapped(i, l, m) => {
                let img = m.image(chosen[i][l]);
                match &acc {
                    None => img.clone(),
                    Some(a) => alg.mul(a, img),
                }
            }
            Factor::Element(v) => match &acc {
                None => v.clone(),
                Some(a) => alg.mul(a, v),
            },
        };
        if next.is_zero() {
            return next;
        }
        acc = Some(next);
    }
    acc.unwrap_or_else(|| alg.unit().clone())
}

fn mul_by_basis(alg: &Algebra, a: &Vector, j: u32) -> Vector {
    let mut acc: Vec<(u32, Scalar)> = Vec::new();
    for (i, x) in a.iter() {
        acc.extend(alg.mul_basis(i, j).iter().map(|(k, y)| (k, x * y)));
    }
    Vector::from_entries(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn contraction_matches_direct_products() {
        let f = Field::rational();
        let e = Vector::basis(0, &f);
        let g = Vector::basis(1, &f);
        let alg = Algebra::new(
            f.clone(),
            2,
            vec![e.clone(), g.clone(), g.clone(), e.clone()],
            e.clone(),
        )
        .unwrap();
        let swap = LinearMap::new(2, 2, vec![g.clone(), e.clone()]).unwrap();
        let two = f.from_i64(2);
        let mut t = Tensor::product_of(2, &[&g, &e, &g]);
        t = t.add(&Tensor::product_of(2, &[&e, &g, &g]).scale(&two));
        // Σ swap(t1) t2 ⊗ t3 g
        let out = contract(
            &alg,
            &[&t],
            &[
                vec![Factor::Mapped(0, 0, &swap), Factor::Leg(0, 1)],
                vec![Factor::Leg(0, 2), Factor::Element(&g)],
            ],
        );
        let expect = Tensor::product_of(2, &[&e, &e]).scale(&f.from_i64(3));
        assert_eq!(out, expect);
    }
}
