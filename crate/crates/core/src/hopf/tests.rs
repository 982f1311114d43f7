use super::*;

fn q() -> Field {
    Field::rational()
}

fn zn(n: u32, f: &Field) -> HopfAlgebra {
    HopfAlgebra::group_algebra(&GroupTable::cyclic(n).unwrap(), f)
}

fn ones(n: usize, f: &Field) -> Vector {
    Vector::from_entries((0..n as u32).map(|i| (i, f.one())))
}

fn same_structure(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    let n = a.dim() as u32;
    (0..n).all(|i| (0..n).all(|j| a.algebra().mul_basis(i, j) == b.algebra().mul_basis(i, j)))
        && a.unit() == b.unit()
        && a.comul() == b.comul()
        && a.counit() == b.counit()
        && a.antipode() == b.antipode()
}

#[test]
fn group_algebras_pass_axioms() {
    let f = q();
    for h in [
        zn(2, &f),
        zn(3, &f),
        HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f),
    ] {
        let r = h.verify_axioms(SweepOptions::default());
        assert!(r.all_passed(), "{:?}", r.failed().collect::<Vec<_>>());
        assert!(h.is_cocommutative());
    }
}

#[test]
fn z2_basics() {
    let f = q();
    let h = zn(2, &f);
    let g = h.basis(1);
    assert_eq!(h.mul(&g, &g), h.basis(0));
    assert_eq!(h.comul().image(1), &Tensor::product_of(2, &[&g, &g]));
}

#[test]
fn zero_antipode_fails_at_g() {
    let f = q();
    let h = zn(2, &f);
    let bad = HopfAlgebra::new(
        h.algebra().clone(),
        h.comul().clone(),
        h.counit().clone(),
        LinearMap::new(2, 2, vec![Vector::zero(), Vector::zero()]).unwrap(),
    )
    .unwrap();
    let r = bad.verify_axioms(SweepOptions::default());
    let anti = r.get("hopf.antipode").unwrap();
    assert!(!anti.passed());
    assert!(anti.violations.iter().any(|v| v.at.ends_with('1')));
    assert!(r.get("hopf.associativity").unwrap().passed());
}

#[test]
fn dual_of_s3() {
    let f = q();
    let h = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f);
    let d = h.dual();
    assert!(d.verify_axioms(SweepOptions::default()).all_passed());
    assert!(!d.is_cocommutative());
    assert!(same_structure(&d.dual(), &h));
    let z2 = zn(2, &f).dual();
    assert!(z2.is_cocommutative());
}

#[test]
fn group_integrals() {
    let f = q();
    let s3 = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f);
    for h in [zn(2, &f), zn(3, &f), s3] {
        let n = h.dim();
        let t = h.left_integral().unwrap();
        assert_eq!(t, ones(n, &f));
        for i in 0..n as u32 {
            let e = h.basis(i);
            assert_eq!(h.mul(&t, &e), t);
            assert_eq!(h.mul(&e, &t), t);
        }
        let lam = h.integral_on().unwrap();
        assert!(lam.normalized);
        assert_eq!(lam.lambda, h.basis(0));
        assert_eq!(&h.modular_mu().unwrap(), h.counit());
    }
}

#[test]
fn integral_of_dual_z3() {
    let f = Field::cyclotomic(3).unwrap();
    let h = zn(3, &f);
    let d = h.dual();
    assert_eq!(d.left_integral().unwrap(), d.basis(0));
    assert_eq!(&d.modular_mu().unwrap(), d.counit());
    let lam = h.integral_on().unwrap();
    let t = h.left_integral().unwrap();
    for g in 0..3 {
        let gt = h.mul(&h.basis(g), &t);
        assert_eq!(h.eval(&lam.lambda, &gt), h.eval(&lam.lambda, &t));
    }
}

#[test]
fn dual_of_s3_is_unimodular() {
    let f = q();
    let d = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f).dual();
    assert_eq!(&d.modular_mu().unwrap(), d.counit());
}

#[test]
fn characters() {
    let f = q();
    let z2 = zn(2, &f);
    let chars = z2.grouplikes_of_dual(None).unwrap();
    assert_eq!(
        chars,
        vec![ones(2, &f), Vector::from_dense(&[f.one(), f.from_i64(-1)])]
    );
    assert_eq!(z2.square_roots(z2.counit(), &chars).len(), 2);

    let c3 = Field::cyclotomic(3).unwrap();
    let z3 = zn(3, &c3);
    let chars = z3.grouplikes_of_dual(None).unwrap();
    assert_eq!(chars.len(), 3);
    let zeta = crate::scalar::root_of_unity(3, 1);
    assert_eq!(chars[1].get(1), Some(&zeta));
    assert_eq!(z3.dual_mul(&chars[1], &chars[1]), chars[2]);
    assert_eq!(
        z3.square_roots(z3.counit(), &chars),
        vec![z3.counit().clone()]
    );

    let s3 = HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &f);
    let chars = s3.grouplikes_of_dual(None).unwrap();
    assert_eq!(chars.len(), 2);
    let sign: Vec<i64> = vec![1, -1, -1, -1, 1, 1];
    assert_eq!(
        chars[1],
        Vector::from_dense(&sign.iter().map(|&s| f.from_i64(s)).collect::<Vec<_>>())
    );
    for c in &chars {
        assert!(s3.is_algebra_map(c));
    }
}

#[test]
fn grouplike_count_divides_dimension() {
    let c12 = Field::cyclotomic(12).unwrap();
    let algebras = [
        zn(2, &c12),
        zn(3, &c12),
        zn(4, &c12),
        zn(6, &c12),
        HopfAlgebra::group_algebra(&GroupTable::product_of_cyclic(&[2, 2]).unwrap(), &c12),
        HopfAlgebra::group_algebra(&GroupTable::symmetric3(), &c12),
    ];
    for h in algebras {
        let g = h.grouplikes_of_dual(None).unwrap();
        assert_eq!(h.dim() % g.len(), 0);
    }
}

#[test]
fn odd_order_square_root() {
    // μ of order 3 in G(k[Z_3]*): μ^{m+1} with m = 1 is a square root.
    let c3 = Field::cyclotomic(3).unwrap();
    let z3 = zn(3, &c3);
    let chars = z3.grouplikes_of_dual(None).unwrap();
    let mu = &chars[1];
    assert_eq!(z3.dual_order(mu), 3);
    let root = z3.dual_pow(mu, 2);
    assert!(z3.square_roots(mu, &chars).contains(&root));
}

#[test]
fn general_algebra_needs_candidates() {
    let f = q();
    let h = zn(2, &f);
    let general = HopfAlgebra::new(
        h.algebra().clone(),
        h.comul().clone(),
        h.counit().clone(),
        h.antipode().clone(),
    )
    .unwrap();
    assert!(matches!(
        general.grouplikes_of_dual(None),
        Err(Error::UnsupportedInput(_))
    ));
    let cands = vec![
        ones(2, &f),
        Vector::from_dense(&[f.one(), f.from_i64(-1)]),
        Vector::from_dense(&[f.one(), f.from_i64(2)]),
    ];
    assert_eq!(general.grouplikes_of_dual(Some(&cands)).unwrap().len(), 2);
}

/// The restricted enveloping algebra of the two-dimensional restricted Lie
/// algebra `[x,y] = y`, `x^[2] = x`, `y^[2] = 0` over `F_2`, on the basis
/// `1, x, y, xy`.
fn restricted_enveloping() -> HopfAlgebra {
    let f = Field::prime(2).unwrap();
    let v = |is: &[u32]| Vector::from_entries(is.iter().map(|&i| (i, f.one())));
    #[rustfmt::skip]
    let table = vec![
        v(&[0]), v(&[1]), v(&[2]), v(&[3]),
        v(&[1]), v(&[1]), v(&[3]), v(&[3]),
        v(&[2]), v(&[2, 3]), v(&[]), v(&[]),
        v(&[3]), v(&[]), v(&[]), v(&[]),
    ];
    let alg = Algebra::new(f.clone(), 4, table, v(&[0])).unwrap();
    let t = |pairs: &[(u32, u32)]| {
        Tensor::from_entries(
            4,
            2,
            pairs
                .iter()
                .map(|&(a, b)| (Idx::from_slice(&[a, b]), f.one())),
        )
        .unwrap()
    };
    let comul = TensorMap::new(
        4,
        4,
        2,
        vec![
            t(&[(0, 0)]),
            t(&[(1, 0), (0, 1)]),
            t(&[(2, 0), (0, 2)]),
            t(&[(3, 0), (1, 2), (2, 1), (0, 3)]),
        ],
    )
    .unwrap();
    let antipode = LinearMap::new(4, 4, vec![v(&[0]), v(&[1]), v(&[2]), v(&[2, 3])]).unwrap();
    HopfAlgebra::new(alg, comul, v(&[0]), antipode).unwrap()
}

#[test]
fn restricted_enveloping_algebra_is_not_unimodular() {
    let h = restricted_enveloping();
    let f = h.field().clone();
    let r = h.verify_axioms(SweepOptions::default());
    assert!(r.all_passed(), "{:?}", r.failed().collect::<Vec<_>>());
    assert!(h.is_cocommutative());
    let t = h.left_integral().unwrap();
    assert_eq!(t, Vector::from_entries([(2, f.one()), (3, f.one())]));
    let mu = h.modular_mu().unwrap();
    let chi = Vector::from_entries([(0, f.one()), (1, f.one())]);
    assert_eq!(mu, chi);
    assert!(!h.is_unimodular().unwrap());
    let g = h
        .grouplikes_of_dual(Some(&[h.counit().clone(), chi.clone(), h.basis(3)]))
        .unwrap();
    assert_eq!(g, vec![h.counit().clone(), chi.clone()]);
    assert_eq!(h.dual_mul(&chi, &chi), *h.counit());
    assert!(h.square_roots(&mu, &g).is_empty());
    assert_eq!(h.dim() % g.len(), 0);
}
