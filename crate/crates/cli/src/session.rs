//! Session spec files: field, Hopf algebra, cocycle and run options.

use std::path::PathBuf;

use serde::Deserialize;

use qdouble::cocycle::{exponent_table, product_cyclic_cocycle, trivial_cocycle, Cocycle3};
use qdouble::hopf::{GroupTable, HopfAlgebra};
use qdouble::scalar::{Field, FieldDescriptor, Scalar};
use qdouble::tensor::{Algebra, Idx, LinearMap, Tensor, TensorMap, Vector};
use qdouble::{Error, Result};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionSpec {
    #[serde(default)]
    pub field: Option<FieldDescriptor>,
    pub hopf: HopfSpec,
    #[serde(default)]
    pub cocycle: CocycleSpec,
    #[serde(default)]
    pub options: RunOptions,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunOptions {
    pub fail_fast: bool,
    pub deep_iso: bool,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
}

impl RunOptions {
    /// Command-line flags take precedence over the spec file.
    pub fn overridden_by(&self, flags: &RunOptions) -> RunOptions {
        RunOptions {
            fail_fast: self.fail_fast || flags.fail_fast,
            deep_iso: self.deep_iso || flags.deep_iso,
            threads: flags.threads.or(self.threads),
            out: flags.out.clone().or_else(|| self.out.clone()),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HopfSpec {
    /// `k[Z_{n_1} × ... × Z_{n_r}]`.
    Cyclic(Vec<u32>),
    /// `k[G]` from a 0-based multiplication table with identity 0.
    GroupTable(Vec<Vec<u32>>),
    StructureConstants(StructureConstants),
}

/// A coefficient written as an integer or as text such as `"-1/2"` or `"1 + z^2"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Integer(i64),
    Text(String),
}

impl Coefficient {
    fn to_scalar(&self, field: &Field) -> Result<Scalar> {
        match self {
            Coefficient::Integer(v) => Ok(field.from_i64(*v)),
            Coefficient::Text(s) => field.parse(s),
        }
    }
}

/// Sparse structure constants on the basis `e_0, ..., e_{dim-1}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstants {
    pub dim: usize,
    /// `(i, j, k, c)`: `e_i e_j` has coefficient `c` at `e_k`.
    pub product: Vec<(u32, u32, u32, Coefficient)>,
    pub unit: Vec<(u32, Coefficient)>,
    /// `(i, j, k, c)`: `Δ(e_i)` has coefficient `c` at `e_j ⊗ e_k`.
    pub comultiplication: Vec<(u32, u32, u32, Coefficient)>,
    pub counit: Vec<(u32, Coefficient)>,
    /// `(i, j, c)`: `S(e_i)` has coefficient `c` at `e_j`.
    pub antipode: Vec<(u32, u32, Coefficient)>,
    /// Candidate algebra maps `H → k`, as values on the basis.
    #[serde(default)]
    pub dual_grouplikes: Vec<Vec<(u32, Coefficient)>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CocycleSpec {
    #[default]
    Trivial,
    /// `ω(a,b,c) = ζ_n^{q a ⌊(b+c)/n⌋}` on `k[Z_n]`.
    Cyclic { q: i64 },
    /// Componentwise cyclic cocycles on `k[Z_{n_1} × ... × Z_{n_r}]`.
    Product { qs: Vec<i64> },
    /// `ω(a,b,c) = ζ_N^{e[a][b][c]}`.
    Table {
        root_order: u64,
        exponents: Vec<Vec<Vec<u64>>>,
    },
}

fn sparse_vector(entries: &[(u32, Coefficient)], dim: usize, field: &Field) -> Result<Vector> {
    let mut v = Vector::zero();
    for (i, c) in entries {
        if *i as usize >= dim {
            return Err(Error::IndexOutOfRange(format!(
                "basis index {i} in dimension {dim}"
            )));
        }
        v = v.axpy(&c.to_scalar(field)?, &Vector::basis(*i, field));
    }
    Ok(v)
}

fn check_index(dim: usize, ix: &[u32]) -> Result<()> {
    match ix.iter().find(|&&i| i as usize >= dim) {
        Some(i) => Err(Error::IndexOutOfRange(format!(
            "basis index {i} in dimension {dim}"
        ))),
        None => Ok(()),
    }
}

impl StructureConstants {
    fn build(&self, field: &Field) -> Result<HopfAlgebra> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::InvalidSpec("dimension must be positive".into()));
        }
        let mut table = vec![Vector::zero(); n * n];
        for (i, j, k, c) in &self.product {
            check_index(n, &[*i, *j, *k])?;
            let slot = &mut table[*i as usize * n + *j as usize];
            *slot = slot.axpy(&c.to_scalar(field)?, &Vector::basis(*k, field));
        }
        let alg = Algebra::new(
            field.clone(),
            n,
            table,
            sparse_vector(&self.unit, n, field)?,
        )?;
        let mut comul: Vec<Tensor> = (0..n).map(|_| Tensor::zero(n, 2)).collect();
        for (i, j, k, c) in &self.comultiplication {
            check_index(n, &[*i, *j, *k])?;
            comul[*i as usize].add_term(Idx::from_slice(&[*j, *k]), c.to_scalar(field)?);
        }
        let mut antipode = vec![Vector::zero(); n];
        for (i, j, c) in &self.antipode {
            check_index(n, &[*i, *j])?;
            let slot = &mut antipode[*i as usize];
            *slot = slot.axpy(&c.to_scalar(field)?, &Vector::basis(*j, field));
        }
        let h = HopfAlgebra::new(
            alg,
            TensorMap::new(n, n, 2, comul)?,
            sparse_vector(&self.counit, n, field)?,
            LinearMap::new(n, n, antipode)?,
        )?;
        if self.dual_grouplikes.is_empty() {
            return Ok(h);
        }
        let candidates = self
            .dual_grouplikes
            .iter()
            .map(|g| sparse_vector(g, n, field))
            .collect::<Result<Vec<_>>>()?;
        h.with_dual_grouplike_candidates(&candidates)
    }
}

impl SessionSpec {
    pub fn from_json(text: &str) -> Result<SessionSpec> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    /// The field named on the command line, else the one in the spec.
    pub fn field(&self, flag: Option<FieldDescriptor>) -> Result<Field> {
        let d = flag.or(self.field).ok_or_else(|| {
            Error::InvalidSpec("no field given in the spec or with --field".into())
        })?;
        Field::new(d)
    }

    pub fn hopf(&self, field: &Field) -> Result<HopfAlgebra> {
        match &self.hopf {
            HopfSpec::Cyclic(orders) => Ok(HopfAlgebra::group_algebra(
                &GroupTable::product_of_cyclic(orders)?,
                field,
            )),
            HopfSpec::GroupTable(t) => Ok(HopfAlgebra::group_algebra(
                &GroupTable::new(t.clone())?,
                field,
            )),
            HopfSpec::StructureConstants(sc) => sc.build(field),
        }
    }

    fn cyclic_orders(&self) -> Result<&[u32]> {
        match &self.hopf {
            HopfSpec::Cyclic(orders) => Ok(orders),
            _ => Err(Error::InvalidSpec(
                "cyclic and product cocycles need a \"cyclic\" Hopf spec".into(),
            )),
        }
    }

    /// The cocycle; builtin ones are verified on construction, tables are not.
    pub fn cocycle(&self, h: &HopfAlgebra) -> Result<Cocycle3> {
        let reduce = |q: i64, n: u32| q.rem_euclid(n as i64) as u32;
        match &self.cocycle {
            CocycleSpec::Trivial => trivial_cocycle(h),
            CocycleSpec::Cyclic { q } => match self.cyclic_orders()? {
                &[n] => product_cyclic_cocycle(h, &[n], &[reduce(*q, n)]),
                orders => Err(Error::InvalidSpec(format!(
                    "a cyclic cocycle needs one cyclic factor, found {}",
                    orders.len()
                ))),
            },
            CocycleSpec::Product { qs } => {
                let orders = self.cyclic_orders()?;
                if orders.len() != qs.len() {
                    return Err(Error::InvalidSpec(format!(
                        "{} cyclic factors but {} cocycle parameters",
                        orders.len(),
                        qs.len()
                    )));
                }
                let qs: Vec<u32> = qs.iter().zip(orders).map(|(&q, &n)| reduce(q, n)).collect();
                product_cyclic_cocycle(h, orders, &qs)
            }
            CocycleSpec::Table {
                root_order,
                exponents,
            } => {
                if *root_order == 0 {
                    return Err(Error::InvalidSpec("root_order must be positive".into()));
                }
                Cocycle3::new(h, exponent_table(h, *root_order, exponents)?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_spec_options() {
        let spec = SessionSpec::from_json(
            r#"{"field": "q", "hopf": {"cyclic": [2]}, "options": {"threads": 3, "deep-iso": true}}"#,
        )
        .unwrap();
        let flags = RunOptions {
            fail_fast: true,
            threads: Some(1),
            ..RunOptions::default()
        };
        let merged = spec.options.overridden_by(&flags);
        assert_eq!(
            merged,
            RunOptions {
                fail_fast: true,
                deep_iso: true,
                threads: Some(1),
                out: None
            }
        );
        assert!(matches!(spec.cocycle, CocycleSpec::Trivial));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let err = SessionSpec::from_json(r#"{"field": "q", "hopf": {"cyclic": [2]}, "colour": 1}"#)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidSpec(_)));
    }

    #[test]
    fn cocycle_parameters_reduce_mod_n() {
        let spec = SessionSpec::from_json(
            r#"{"field": "cyclotomic:3", "hopf": {"cyclic": [3]}, "cocycle": {"type": "cyclic", "q": -2}}"#,
        )
        .unwrap();
        let field = spec.field(None).unwrap();
        let h = spec.hopf(&field).unwrap();
        let c = spec.cocycle(&h).unwrap();
        let expected = product_cyclic_cocycle(&h, &[3], &[1]).unwrap();
        assert_eq!(c.omega(), expected.omega());
    }

    #[test]
    fn cyclic_cocycle_needs_cyclic_input() {
        let spec = SessionSpec::from_json(
            r#"{"field": "q", "hopf": {"group_table": [[0,1],[1,0]]}, "cocycle": {"type": "cyclic", "q": 1}}"#,
        )
        .unwrap();
        let h = spec.hopf(&spec.field(None).unwrap()).unwrap();
        assert!(matches!(spec.cocycle(&h), Err(Error::InvalidSpec(_))));
        let spec = SessionSpec::from_json(
            r#"{"field": "q", "hopf": {"cyclic": [2, 2]}, "cocycle": {"type": "product", "qs": [1]}}"#,
        )
        .unwrap();
        let h = spec.hopf(&spec.field(None).unwrap()).unwrap();
        assert!(matches!(spec.cocycle(&h), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn structure_constants_reject_out_of_range_indices() {
        let spec = SessionSpec::from_json(
            r#"{"field": "q", "hopf": {"structure_constants": {"dim": 1, "product": [[0,0,1,1]],
                "unit": [[0,1]], "comultiplication": [[0,0,0,1]], "counit": [[0,1]], "antipode": [[0,0,1]]}}}"#,
        )
        .unwrap();
        assert!(matches!(
            spec.hopf(&Field::rational()),
            Err(Error::IndexOutOfRange(_))
        ));
    }
}
