use super::*;
use crate::cocycle::{cyclic_cocycle, exponent_table_cocycle, trivial_cocycle};
use crate::hopf::GroupTable;

fn zn(n: u32, f: &Field) -> HopfAlgebra {
    HopfAlgebra::group_algebra(&GroupTable::cyclic(n).unwrap(), f)
}

fn all_pass(r: &Report) {
    assert!(r.all_passed(), "{:#?}", r.failed().collect::<Vec<_>>());
}

fn h_star(n: u32, q: u32) -> (HopfAlgebra, QuasiHopfAlgebra) {
    let f = Field::cyclotomic(n.max(2)).unwrap();
    let h = zn(n, &f);
    let c = cyclic_cocycle(&h, n, q).unwrap();
    let k = QuasiHopfAlgebra::h_star_omega(&h, &c).unwrap();
    (h, k)
}

#[test]
fn hopf_case_is_quasi_hopf_with_trivial_twist() {
    let h = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &Field::rational());
    let k = QuasiHopfAlgebra::from_hopf(&h).unwrap();
    all_pass(&k.verify(SweepOptions::default()));
    let pq = k.pq_elements();
    assert_eq!(pq.p, k.one(2));
    assert_eq!(pq.q, k.one(2));
    let (f, f_inv) = k.drinfeld_twist().unwrap();
    assert_eq!(f, k.one(2));
    assert_eq!(f_inv, k.one(2));
}

#[test]
fn cocommutative_hopf_with_trivial_r() {
    let h = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &Field::rational());
    let k = QuasiHopfAlgebra::from_hopf(&h).unwrap();
    let r = k.one(2);
    all_pass(&verify_qt(&k, &r, SweepOptions::default()).unwrap());
    let qt = QTStructure::new(&k, r).unwrap();
    assert_eq!(qt.u(), k.unit());
    all_pass(&qt.verify_u(&k, SweepOptions::default()).unwrap());
    assert!(matches!(
        verify_qt(&k, &Tensor::zero(6, 2), SweepOptions::default()),
        Err(Error::NotInvertible(_))
    ));
}

#[test]
fn u_s_u_formula_for_z2_hopf_case_is_one() {
    let h = zn(2, &Field::rational());
    let k = QuasiHopfAlgebra::from_hopf(&h).unwrap();
    let qt = QTStructure::new(&k, k.one(2)).unwrap();
    let data = k.modular_data().unwrap();
    assert_eq!(&k.u_s_u_formula(&qt, &data).unwrap(), k.unit());
}

#[test]
fn h_star_omega_z2() {
    let (h, k) = h_star(2, 1);
    let f = k.field().clone();
    assert_eq!(k.beta(), &Vector::from_dense(&[f.one(), f.from_i64(-1)]));
    all_pass(&k.verify(SweepOptions::default()));
    // (ε⊗id)(p_R) = β
    let pq = k.pq_elements();
    assert_eq!(k.eps_leg(&pq.p, 0), k.elem(k.beta()));
    k.drinfeld_twist().unwrap();
    let data = k.modular_data().unwrap();
    let mu_h = h.modular_mu().unwrap();
    assert_eq!(data.g, h.dual_mul(&h.dual_mul(k.beta(), k.beta()), &mu_h));
    assert_eq!(&data.g, h.counit());
}

#[test]
fn h_star_omega_z3_and_z4() {
    for (n, q) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
        let (h, k) = h_star(n, q);
        all_pass(&k.verify(SweepOptions::default()));
        k.drinfeld_twist().unwrap();
        let data = k.modular_data().unwrap();
        let closed = h.dual_mul(&h.dual_mul(k.beta(), k.beta()), &h.modular_mu().unwrap());
        assert_eq!(
            data.g,
            h.antipode().transpose().apply(&closed),
            "n={n} q={q}"
        );
    }
}

#[test]
fn h_star_omega_integral_is_integral_on_h() {
    let f = Field::cyclotomic(3).unwrap();
    let h = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f);
    let k = QuasiHopfAlgebra::h_star_omega(&h, &trivial_cocycle(&h).unwrap()).unwrap();
    let t = k.quasi_integral().unwrap();
    let lam = h.integral_on().unwrap().lambda;
    assert_eq!(t, lam);
    // The cointegral on H*_ω is Σβ(S(t₁))t₂ ∈ H.
    let (z3h, z3) = h_star(3, 1);
    let t = z3.quasi_integral().unwrap();
    let lambda = z3.quasi_cointegral(&t).unwrap();
    let th = z3h.left_integral().unwrap();
    let mut expected = Vector::zero();
    for (ab, c) in z3h.comul().apply(&th).iter() {
        let b = z3.beta().dot(z3h.antipode().image(ab[0]), z3.field());
        expected = expected.axpy(&(c * &b), &z3h.basis(ab[1]));
    }
    let ratio = lambda
        .first_nonzero()
        .unwrap()
        .1
        .checked_div(expected.first_nonzero().unwrap().1)
        .unwrap();
    assert_eq!(lambda, expected.scale(&ratio));
}

#[test]
fn s3_sign_cocycle_h_star() {
    let f = Field::rational();
    let h = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f);
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
    let k = QuasiHopfAlgebra::h_star_omega(&h, &c).unwrap();
    all_pass(&k.verify(SweepOptions::default()));
    k.drinfeld_twist().unwrap();
    assert!(k.is_unimodular().unwrap());
}

#[test]
fn wrong_beta_breaks_q6() {
    let f = Field::rational();
    let h = zn(2, &f);
    let c = cyclic_cocycle(&h, 2, 1).unwrap();
    let dual = h.dual();
    let k = QuasiHopfAlgebra::new(QuasiHopfData {
        alg: dual.algebra().clone(),
        comul: dual.comul().clone(),
        counit: dual.counit().clone(),
        phi: c.omega_inv().clone(),
        phi_inv: None,
        antipode: dual.antipode().clone(),
        alpha: h.counit().clone(),
        beta: h.counit().clone(),
    })
    .unwrap();
    assert_eq!(k.phi_inv(), c.omega());
    let r = k.verify_antipode(SweepOptions::default());
    assert!(!r.all_passed());
    assert!(matches!(
        k.drinfeld_twist(),
        Err(Error::TwistPropertyFailed(_))
    ));
}
