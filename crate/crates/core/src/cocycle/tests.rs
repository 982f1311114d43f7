use super::*;
use crate::hopf::GroupTable;
use crate::scalar::{root_of_unity, Field};

fn zn(n: u32, f: &Field) -> HopfAlgebra {
    HopfAlgebra::group_algebra(&GroupTable::cyclic(n).unwrap(), f)
}

fn all_pass(r: &Report) {
    assert!(r.all_passed(), "{:?}", r.failed().collect::<Vec<_>>());
}

#[test]
fn z2_hand_values() {
    let f = Field::rational();
    let h = zn(2, &f);
    let c = cyclic_cocycle(&h, 2, 1).unwrap();
    let m1 = f.from_i64(-1);
    assert_eq!(c.omega().coeff(&[1, 1, 1], &f), m1);
    assert_eq!(c.omega().coeff(&[1, 0, 1], &f), f.one());
    assert_eq!(c.omega_inv(), c.omega());
    assert_eq!(c.beta(&h), Vector::from_dense(&[f.one(), m1.clone()]));
    let th = c.theta(&h).unwrap();
    assert_eq!(th.theta().coeff(&[1, 1, 1], &f), m1);
    let ga = c.gamma(&h).unwrap();
    assert_eq!(ga.gamma().coeff(&[1, 1, 1], &f), m1);
    let opts = SweepOptions::default();
    all_pass(&c.verify(&h, opts));
    all_pass(&c.verify_antipode_identities(&h, opts));
    all_pass(&th.verify(&h, opts));
    assert!(ga.check_normalized(&h).passed());
}

#[test]
fn z3_hand_values() {
    let f = Field::cyclotomic(3).unwrap();
    let h = zn(3, &f);
    let c = cyclic_cocycle(&h, 3, 1).unwrap();
    let z = root_of_unity(3, 1);
    assert_eq!(c.omega().coeff(&[1, 2, 2], &f), z);
    assert_eq!(c.omega().coeff(&[2, 2, 2], &f), z.pow(2));
    let beta = c.beta(&h);
    assert_eq!(beta, Vector::from_dense(&[f.one(), z.clone(), z.pow(2)]));
    assert_eq!(
        h.dual_mul(&beta, &beta),
        Vector::from_dense(&[f.one(), z.pow(2), z.clone()])
    );
    let opts = SweepOptions::default();
    all_pass(&c.verify_antipode_identities(&h, opts));
    all_pass(&c.theta(&h).unwrap().verify(&h, opts));
}

#[test]
fn beta_inverse_is_beta_composed_with_antipode() {
    let f = Field::cyclotomic(12).unwrap();
    for (n, q) in [(2, 1), (3, 2), (4, 1), (4, 3), (6, 5)] {
        let h = zn(n, &f);
        let c = cyclic_cocycle(&h, n, q).unwrap();
        let beta = c.beta(&h);
        let inv = invert_form(&Tensor::from_vector(h.dim(), &beta), h.coalgebra())
            .unwrap()
            .to_vector();
        assert_eq!(inv, h.antipode().transpose().apply(&beta));
    }
}

#[test]
fn missing_root_is_reported() {
    let h = zn(3, &Field::rational());
    assert!(matches!(
        cyclic_cocycle(&h, 3, 1),
        Err(Error::FieldLacksRoot { order: 3, .. })
    ));
    assert!(cyclic_cocycle(&h, 3, 0).is_ok());
}

#[test]
fn broken_cocycle_is_rejected() {
    let f = Field::cyclotomic(4).unwrap();
    let h = zn(2, &f);
    let mut omega = Tensor::zero(2, 3);
    for a in 0..2u32 {
        for b in 0..2u32 {
            for c in 0..2u32 {
                let v = if (a, b, c) == (1, 1, 1) {
                    root_of_unity(4, 1)
                } else {
                    f.one()
                };
                omega.add_term(Idx::from_slice(&[a, b, c]), v);
            }
        }
    }
    assert!(matches!(
        Cocycle3::verified(&h, omega),
        Err(Error::CocycleConditionFailed(_))
    ));
}

#[test]
fn s3_sign_cocycle() {
    // Pullback of the nontrivial Z_2 cocycle along the sign map.
    let f = Field::rational();
    let g = GroupTable::symmetric3();
    let h = HopfAlgebra::group_algebra(&g, &f);
    let sign = |x: usize| u64::from((1..=3).contains(&x));
    let exps: Vec<Vec<Vec<u64>>> = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    (0..6)
                        .map(|c| sign(a) * ((sign(b) + sign(c)) / 2))
                        .collect()
                })
                .collect()
        })
        .collect();
    let c = exponent_table_cocycle(&h, 2, &exps).unwrap();
    let opts = SweepOptions::default();
    all_pass(&c.verify_antipode_identities(&h, opts));
    all_pass(&c.theta(&h).unwrap().verify(&h, opts));
    assert!(c.gamma(&h).unwrap().check_normalized(&h).passed());
}

#[test]
fn product_cocycle_on_z2_squared() {
    let f = Field::rational();
    let h = HopfAlgebra::group_algebra(&GroupTable::product_of_cyclic(&[2, 2]).unwrap(), &f);
    let c = product_cyclic_cocycle(&h, &[2, 2], &[1, 1]).unwrap();
    // (1,1) has index 3
    assert_eq!(c.omega().coeff(&[3, 3, 3], &f), f.one());
    assert_eq!(c.omega().coeff(&[3, 1, 1], &f), f.from_i64(-1));
    all_pass(&c.theta(&h).unwrap().verify(&h, SweepOptions::default()));
}

#[test]
fn trivial_cocycle_gives_trivial_forms() {
    let f = Field::rational();
    let h = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f);
    let c = trivial_cocycle(&h).unwrap();
    assert_eq!(&c.beta(&h), h.counit());
    let th = c.theta(&h).unwrap();
    let e = h.counit();
    assert_eq!(th.theta(), &Tensor::product_of(6, &[e, e, e]));
}

#[test]
fn bullet_is_conjugation_on_group_algebras() {
    let f = Field::rational();
    let g = GroupTable::symmetric3();
    let h = HopfAlgebra::group_algebra(&g, &f);
    for x in 0..6 {
        for a in 0..6 {
            // (x•e^a)(b) = e^a(x⁻¹ b x)
            let moved = bullet(&h, x, &h.basis(a));
            let b = g.mul(g.mul(x, a), g.inverse(x));
            assert_eq!(moved, h.basis(b));
        }
    }
}
