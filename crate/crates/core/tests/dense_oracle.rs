//! Re-checks the exported structure constants of D^ω(G) with a separate,
//! naive sparse-tensor implementation.

use std::collections::BTreeMap;

use serde_json::Value;

use qdouble::cocycle::{product_cyclic_cocycle, trivial_cocycle};
use qdouble::domega::DOmega;
use qdouble::hopf::{GroupTable, HopfAlgebra};
use qdouble::scalar::{Field, Scalar};

type Tn = BTreeMap<Vec<u32>, Scalar>;

fn add_into(t: &mut Tn, k: Vec<u32>, c: Scalar) {
    let sum = match t.remove(&k) {
        Some(old) => &old + &c,
        None => c,
    };
    if !sum.is_zero() {
        t.insert(k, sum);
    }
}

struct Double {
    field: Field,
    dim: usize,
    n: usize,
    mul: Vec<Vec<(u32, Scalar)>>,
    unit: Vec<(u32, Scalar)>,
    comul: Vec<Vec<(u32, u32, Scalar)>>,
    counit: Vec<Scalar>,
    antipode: Vec<Vec<(u32, Scalar)>>,
    alpha: Tn,
    beta: Tn,
    phi: Tn,
    r: Tn,
}

impl Double {
    fn parse(doc: &Value) -> Double {
        let field = Field::new(doc["field"].as_str().unwrap().parse().unwrap()).unwrap();
        let dim = doc["dimension"].as_u64().unwrap() as usize;
        let n = doc["base_dimension"].as_u64().unwrap() as usize;
        let entries = |key: &str| -> Vec<(Vec<u32>, Scalar)> {
            doc[key]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| {
                    let idx = e[0]
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(|i| i.as_u64().unwrap() as u32)
                        .collect();
                    (idx, field.parse(e[1].as_str().unwrap()).unwrap())
                })
                .collect()
        };
        let tensor = |key: &str| -> Tn { entries(key).into_iter().collect() };
        let mut mul = vec![Vec::new(); dim * dim];
        for (k, c) in entries("product") {
            mul[k[0] as usize * dim + k[1] as usize].push((k[2], c));
        }
        let mut comul = vec![Vec::new(); dim];
        for (k, c) in entries("comultiplication") {
            comul[k[0] as usize].push((k[1], k[2], c));
        }
        let mut counit = vec![field.zero(); dim];
        for (k, c) in entries("counit") {
            counit[k[0] as usize] = c;
        }
        let mut antipode = vec![Vec::new(); dim];
        for (k, c) in entries("antipode") {
            antipode[k[0] as usize].push((k[1], c));
        }
        let unit = entries("unit")
            .into_iter()
            .map(|(k, c)| (k[0], c))
            .collect();
        Double {
            dim,
            n,
            mul,
            unit,
            comul,
            counit,
            antipode,
            alpha: tensor("alpha"),
            beta: tensor("beta"),
            phi: tensor("phi"),
            r: tensor("r_matrix"),
            field,
        }
    }

    fn basis(&self, i: u32) -> Tn {
        [(vec![i], self.field.one())].into_iter().collect()
    }

    fn ones(&self, legs: usize) -> Tn {
        let mut t: Tn = [(Vec::new(), self.field.one())].into_iter().collect();
        for _ in 0..legs {
            t = self.tensor(
                &t,
                &self
                    .unit
                    .iter()
                    .map(|(i, c)| (vec![*i], c.clone()))
                    .collect(),
            );
        }
        t
    }

    /// `a ⊗ b`.
    fn tensor(&self, a: &Tn, b: &Tn) -> Tn {
        let mut out = Tn::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                add_into(&mut out, [ka.clone(), kb.clone()].concat(), ca * cb);
            }
        }
        out
    }

    /// Legwise product in `A^{⊗k}`.
    fn mul(&self, a: &Tn, b: &Tn) -> Tn {
        let mut out = Tn::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let mut partial: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), ca * cb)];
                for (x, y) in ka.iter().zip(kb) {
                    let terms = &self.mul[*x as usize * self.dim + *y as usize];
                    partial = partial
                        .iter()
                        .flat_map(|(k, c)| {
                            terms.iter().map(move |(z, d)| {
                                let mut k = k.clone();
                                k.push(*z);
                                (k, c * d)
                            })
                        })
                        .collect();
                }
                for (k, c) in partial {
                    add_into(&mut out, k, c);
                }
            }
        }
        out
    }

    fn chain(&self, ts: &[&Tn]) -> Tn {
        ts[1..]
            .iter()
            .fold(ts[0].clone(), |acc, t| self.mul(&acc, t))
    }

    fn delta_leg(&self, t: &Tn, leg: usize) -> Tn {
        let mut out = Tn::new();
        for (k, c) in t {
            for (a, b, d) in &self.comul[k[leg] as usize] {
                let mut nk = k[..leg].to_vec();
                nk.extend([*a, *b]);
                nk.extend_from_slice(&k[leg + 1..]);
                add_into(&mut out, nk, c * d);
            }
        }
        out
    }

    fn counit_leg(&self, t: &Tn, leg: usize) -> Tn {
        let mut out = Tn::new();
        for (k, c) in t {
            let mut nk = k.clone();
            let i = nk.remove(leg);
            add_into(&mut out, nk, c * &self.counit[i as usize]);
        }
        out
    }

    /// `new[i] = old[p[i]]`.
    fn permute(&self, t: &Tn, p: &[usize]) -> Tn {
        t.iter()
            .map(|(k, c)| (p.iter().map(|&i| k[i]).collect(), c.clone()))
            .collect()
    }

    /// Inserts unit legs so that leg `i` of `t` lands at `positions[i]`.
    fn embed(&self, t: &Tn, legs: usize, positions: &[usize]) -> Tn {
        let mut out = Tn::new();
        for (k, c) in t {
            let mut partial: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), c.clone())];
            for leg in 0..legs {
                let options: Vec<(u32, Scalar)> = match positions.iter().position(|&p| p == leg) {
                    Some(i) => vec![(k[i], self.field.one())],
                    None => self.unit.clone(),
                };
                partial = partial
                    .iter()
                    .flat_map(|(k, c)| {
                        options.iter().map(move |(z, d)| {
                            let mut k = k.clone();
                            k.push(*z);
                            (k, c * d)
                        })
                    })
                    .collect();
            }
            for (k, c) in partial {
                add_into(&mut out, k, c);
            }
        }
        out
    }

    /// `Φ⁻¹`, using that `Φ` lives on the orthogonal idempotents `e^a # 1`.
    fn phi_inverse(&self) -> Tn {
        let n = self.n as u32;
        for a in 0..n {
            for b in 0..n {
                let p = self.mul(&self.basis(a * n), &self.basis(b * n));
                let expect = if a == b { self.basis(a * n) } else { Tn::new() };
                assert_eq!(
                    p, expect,
                    "e^{a}#1 and e^{b}#1 are not orthogonal idempotents"
                );
            }
        }
        assert!(self.phi.keys().all(|k| k.iter().all(|i| i % n == 0)));
        let mut inv = Tn::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let k = vec![a * n, b * n, c * n];
                    let v = self.phi.get(&k).expect("Φ has full support").inv().unwrap();
                    inv.insert(k, v);
                }
            }
        }
        assert_eq!(self.mul(&self.phi, &inv), self.ones(3));
        inv
    }

    fn elem(&self, v: &[(u32, Scalar)]) -> Tn {
        v.iter().map(|(i, c)| (vec![*i], c.clone())).collect()
    }

    fn run_all(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let mut check = |ok: bool, what: String| {
            if !ok {
                bad.push(what);
            }
        };
        let dim = self.dim as u32;
        let phi_inv = self.phi_inverse();
        let one = self.ones(1);
        for i in 0..dim {
            let ei = self.basis(i);
            check(
                self.mul(&one, &ei) == ei && self.mul(&ei, &one) == ei,
                format!("unit at {i}"),
            );
            let di = self.delta_leg(&ei, 0);
            let lhs = self.mul(&self.phi, &self.delta_leg(&di, 0));
            let rhs = self.mul(&self.delta_leg(&di, 1), &self.phi);
            check(lhs == rhs, format!("quasi-coassociativity at {i}"));
            check(
                self.counit_leg(&di, 0) == ei && self.counit_leg(&di, 1) == ei,
                format!("counit at {i}"),
            );
            let mut left = Tn::new();
            let mut right = Tn::new();
            for (a, b, c) in &self.comul[i as usize] {
                let sa = self.elem(&self.antipode[*a as usize]);
                let sb = self.elem(&self.antipode[*b as usize]);
                for (k, v) in self.chain(&[&sa, &self.alpha, &self.basis(*b)]) {
                    add_into(&mut left, k, c * &v);
                }
                for (k, v) in self.chain(&[&self.basis(*a), &self.beta, &sb]) {
                    add_into(&mut right, k, c * &v);
                }
            }
            let eps = &self.counit[i as usize];
            let scaled = |t: &Tn| -> Tn {
                t.iter()
                    .map(|(k, c)| (k.clone(), c * eps))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            };
            check(
                left == scaled(&self.alpha),
                format!("S(h₁)αh₂ = ε(h)α at {i}"),
            );
            check(
                right == scaled(&self.beta),
                format!("h₁βS(h₂) = ε(h)β at {i}"),
            );
            let cop = self.permute(&di, &[1, 0]);
            check(
                self.mul(&cop, &self.r) == self.mul(&self.r, &di),
                format!("Δ^cop(h)R = RΔ(h) at {i}"),
            );
            for j in 0..dim {
                let ej = self.basis(j);
                let eij = self.mul(&ei, &ej);
                check(
                    self.delta_leg(&eij, 0) == self.mul(&di, &self.delta_leg(&ej, 0)),
                    format!("Δ multiplicative at ({i},{j})"),
                );
                for k in 0..dim {
                    let ek = self.basis(k);
                    check(
                        self.mul(&eij, &ek) == self.mul(&ei, &self.mul(&ej, &ek)),
                        format!("associativity at ({i},{j},{k})"),
                    );
                }
            }
        }
        let p = &self.phi;
        let lhs = self.mul(&self.delta_leg(p, 2), &self.delta_leg(p, 0));
        let rhs = self.chain(&[
            &self.embed(p, 4, &[1, 2, 3]),
            &self.delta_leg(p, 1),
            &self.embed(p, 4, &[0, 1, 2]),
        ]);
        check(lhs == rhs, "pentagon".into());
        check(
            self.counit_leg(p, 1) == self.ones(2),
            "(id⊗ε⊗id)(Φ) = 1⊗1".into(),
        );
        let mut phi_s = Tn::new();
        for (k, c) in p {
            let t = self.chain(&[
                &self.basis(k[0]),
                &self.beta,
                &self.elem(&self.antipode[k[1] as usize]),
                &self.alpha,
                &self.basis(k[2]),
            ]);
            for (kk, v) in t {
                add_into(&mut phi_s, kk, c * &v);
            }
        }
        check(phi_s == one, "X¹βS(X²)αX³ = 1".into());
        let mut phi_inv_s = Tn::new();
        for (k, c) in &phi_inv {
            let t = self.chain(&[
                &self.elem(&self.antipode[k[0] as usize]),
                &self.alpha,
                &self.basis(k[1]),
                &self.beta,
                &self.elem(&self.antipode[k[2] as usize]),
            ]);
            for (kk, v) in t {
                add_into(&mut phi_inv_s, kk, c * &v);
            }
        }
        check(phi_inv_s == one, "S(x¹)αx²βS(x³) = 1".into());
        let r12 = self.embed(&self.r, 3, &[0, 1]);
        let r13 = self.embed(&self.r, 3, &[0, 2]);
        let r23 = self.embed(&self.r, 3, &[1, 2]);
        let hex1 = self.chain(&[
            &self.permute(p, &[1, 2, 0]),
            &r13,
            &self.permute(&phi_inv, &[0, 2, 1]),
            &r23,
            p,
        ]);
        check(self.delta_leg(&self.r, 0) == hex1, "first hexagon".into());
        let hex2 = self.chain(&[
            &self.permute(&phi_inv, &[2, 0, 1]),
            &r13,
            &self.permute(p, &[1, 0, 2]),
            &r12,
            &phi_inv,
        ]);
        check(self.delta_leg(&self.r, 1) == hex2, "second hexagon".into());
        check(
            self.counit_leg(&self.r, 0) == one && self.counit_leg(&self.r, 1) == one,
            "(ε⊗id)(R) = 1 = (id⊗ε)(R)".into(),
        );
        bad
    }
}

fn exported(orders: &[u32], qs: Option<&[u32]>, field: &str) -> Double {
    let field = Field::new(field.parse().unwrap()).unwrap();
    let h = HopfAlgebra::group_algebra(&GroupTable::product_of_cyclic(orders).unwrap(), &field);
    let c = match qs {
        Some(qs) => product_cyclic_cocycle(&h, orders, qs).unwrap(),
        None => trivial_cocycle(&h).unwrap(),
    };
    Double::parse(&DOmega::new(&h, &c).unwrap().export_json())
}

#[test]
fn z2_twisted_double_satisfies_every_axiom() {
    assert_eq!(
        exported(&[2], Some(&[1]), "q").run_all(),
        Vec::<String>::new()
    );
}

#[test]
fn z3_twisted_doubles_satisfy_every_axiom() {
    for q in 0..3 {
        assert_eq!(
            exported(&[3], Some(&[q]), "cyclotomic:3").run_all(),
            Vec::<String>::new(),
            "q = {q}"
        );
    }
}

#[test]
fn klein_four_twisted_double_satisfies_every_axiom() {
    assert_eq!(
        exported(&[2, 2], Some(&[1, 1]), "q").run_all(),
        Vec::<String>::new()
    );
}

#[test]
fn oracle_catches_a_wrong_associator() {
    let mut d = exported(&[3], Some(&[1]), "cyclotomic:3");
    let k = vec![3, 3, 6];
    let v = d.phi[&k].clone();
    d.phi.insert(k, &v * &d.field.root_of_unity(3, 1).unwrap());
    let bad = d.run_all();
    assert!(
        bad.iter().any(|b| b == "pentagon" || b.contains("hexagon")),
        "{bad:?}"
    );
}
