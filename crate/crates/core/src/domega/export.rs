use serde_json::{json, Value};

use super::DOmega;
use crate::tensor::{Tensor, Vector};

fn sparse(t: &Tensor) -> Value {
    Value::Array(
        t.sparse_entries()
            .into_iter()
            .map(|(i, c)| json!([i, c]))
            .collect(),
    )
}

fn sparse_vec(dim: usize, v: &Vector) -> Value {
    sparse(&Tensor::from_vector(dim, v))
}

impl DOmega {
    /// Structure constants of `D^ω(H)` as sparse tensors.
    pub fn export_json(&self) -> Value {
        let k = &self.k;
        let dim = self.dim();
        let alg = k.algebra();
        let product = alg.structure_tensor();
        let comul = Tensor::from_entries(
            dim,
            3,
            k.comul().images().iter().enumerate().flat_map(|(i, t)| {
                t.iter()
                    .map(move |(ix, c)| ([i as u32, ix[0], ix[1]].into_iter().collect(), c.clone()))
            }),
        )
        .expect("comultiplication shape");
        let antipode = Tensor::from_entries(
            dim,
            2,
            k.antipode().images().iter().enumerate().flat_map(|(i, v)| {
                v.iter()
                    .map(move |(j, c)| ([i as u32, j].into_iter().collect(), c.clone()))
            }),
        )
        .expect("antipode shape");
        json!({
            "field": self.field().descriptor().to_string(),
            "base_dimension": self.base_dim(),
            "dimension": dim,
            "basis": "e^i # e_j -> i*n + j",
            "product": sparse(&product),
            "unit": sparse_vec(dim, alg.unit()),
            "comultiplication": sparse(&comul),
            "counit": sparse_vec(dim, k.counit()),
            "antipode": sparse(&antipode),
            "alpha": sparse_vec(dim, k.alpha()),
            "beta": sparse_vec(dim, k.beta()),
            "phi": sparse(k.phi()),
            "r_matrix": sparse(self.qt.r()),
        })
    }
}
