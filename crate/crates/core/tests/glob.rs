use num_bigint::BigInt;
use parhom_core::exactalg::{image_basis, quotient_presentation, rank, ExactMatrix, Ring};
use parhom_core::glob::*;
use parhom_core::group::{check_subgroup, FiniteGroup, GroupSpec};
use parhom_core::parmod::standard::*;
use parhom_core::parmod::*;
use parhom_core::parsemigroup::{enumerate_s, sg_mul, SElem};

fn q() -> Ring {
    Ring::Rationals
}

fn trace(m: &ExactMatrix) -> i64 {
    let r = m.ring();
    let t = (0..m.rows()).fold(r.zero(), |acc, i| r.add(&acc, m.get(i, i)));
    r.format(&t).parse().unwrap()
}

fn small_zoo(g: &FiniteGroup, ring: Ring) -> Vec<ParRepModule> {
    let mut out = vec![trivial(g, ring, Side::Left), two_point(g, ring)];
    let half: Vec<usize> = (0..g.order()).filter(|&x| x % 2 == 0).collect();
    out.push(restricted_translation(g, ring, &half).unwrap());
    if g.order() <= 4 {
        out.push(regular(g, ring, Side::Left).unwrap());
        out.push(b_module(g, ring, Side::Left).unwrap());
    }
    out
}

#[test]
fn tensor_examples() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let triv_r = GlobalModule::trivial(&g, q(), Side::Right).as_partial_action();
    let t = partial_tensor(&triv_r, TensorFactor::Rep(&trivial(&g, q(), Side::Left))).unwrap();
    assert_eq!(t.free_rank(), 1);
    let kg = GlobalModule::regular(&g, q(), Side::Right).as_partial_action();
    let t = partial_tensor(&kg, TensorFactor::Rep(&trivial(&g, q(), Side::Left))).unwrap();
    assert_eq!(t.free_rank(), 1);
    let t = partial_tensor(&triv_r, TensorFactor::Rep(&regular(&g, q(), Side::Left).unwrap())).unwrap();
    assert_eq!(t.free_rank(), 2);
}

#[test]
fn k_tensor_regular_is_b() {
    for g in [FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
        let triv_r = GlobalModule::trivial(&g, q(), Side::Right).as_partial_action();
        let t = partial_tensor(&triv_r, TensorFactor::Rep(&regular(&g, q(), Side::Left).unwrap())).unwrap();
        assert_eq!(t.free_rank(), 1 << (g.order() - 1));
    }
}

#[test]
fn globalize_trivial() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let l = globalize(&trivial(&g, Ring::Integers, Side::Left)).unwrap();
    assert_eq!(l.lambda.rank(), 1);
    assert!(l.lambda.action(1).is_identity());
    assert!(l.iota.is_identity());
}

#[test]
fn globalize_two_point() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let l = globalize(&two_point(&g, Ring::Integers)).unwrap();
    assert_eq!(l.lambda.rank(), 3);
    let a = l.lambda.action(1);
    // g fixes ⌊1, x⌋ and swaps ⌊1, y⌋ with ⌊g, y⌋
    assert_eq!(a.mul(&l.iota.select_columns(&[0])).unwrap(), l.iota.select_columns(&[0]));
    assert_eq!(trace(a), 1);
    let y = l.iota.select_columns(&[1]);
    let gy = a.mul(&y).unwrap();
    assert_ne!(gy, y);
    assert_eq!(rank(&l.iota.hcat(&gy)).unwrap(), 3);
}

#[test]
fn globalize_regular_is_free() {
    for g in [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap()] {
        let l = globalize(&regular(&g, q(), Side::Left).unwrap()).unwrap();
        let n = g.order();
        assert_eq!(l.lambda.rank(), n << (n - 1));
        for x in 1..n {
            assert_eq!(trace(l.lambda.action(x)), 0);
        }
    }
}

#[test]
fn tau_iota_and_verification_over_zoo() {
    for g in [FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
        for m in small_zoo(&g, q()) {
            let l = globalize(&m).unwrap();
            let tau = l.tau.clone().unwrap();
            assert!(tau.mul(&l.iota).unwrap().is_identity());
            let a = induced_partial_action(&m).unwrap();
            assert!(verify_globalization(&a, &l.lambda, &l.iota).unwrap().passes());
        }
    }
}

#[test]
fn non_globalizable_kernel() {
    let a = non_globalizable_action(q());
    let l = globalize_action(&a).unwrap();
    let k = l.iota_kernel().unwrap();
    assert_eq!(k.cols(), 1);
    let qv = ExactMatrix::from_i64_rows(q(), &[&[1], &[1], &[1], &[-1], &[-1], &[-1]]);
    assert!(l.iota.mul(&qv).unwrap().is_zero());
    assert!(!verify_globalization(&a, &l.lambda, &l.iota).unwrap().passes());
}

#[test]
fn non_uniqueness_vignette() {
    let z = Ring::Integers;
    let a = point_action(z);
    let l = globalize_action(&a).unwrap();
    assert_eq!(l.lambda.rank(), 3);
    assert!(l.tensor.cokernel.torsion.is_empty());
    // V = Z³ with the cyclic shift and ι(n) = (n, 0, 0)
    let g = a.group().clone();
    let shift = ExactMatrix::from_i64_rows(z, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let v =
        GlobalModule::new(&g, Side::Left, vec![ExactMatrix::identity(z, 3), shift.clone(), shift.mul(&shift).unwrap()])
            .unwrap();
    let iota = ExactMatrix::from_i64_rows(z, &[&[1], &[0], &[0]]);
    assert!(verify_globalization(&a, &v, &iota).unwrap().passes());
    let w = quotient_presentation(&ExactMatrix::from_i64_rows(z, &[&[2], &[2], &[2]])).unwrap();
    assert_eq!(w.torsion, vec![BigInt::from(2)]);
    assert_eq!(w.free_rank, 2);
}

// the rank-6 example with θ_a = −1 and θ_ab(x) = −u: valid, but KG ⊗_{G_par} M has a Z/2
fn signed_example(ring: Ring) -> PartialActionModule {
    let a = non_globalizable_action(ring);
    let domains: Vec<ExactMatrix> = (0..8).map(|x| a.domain(x).clone()).collect();
    let mut maps: Vec<ExactMatrix> = (0..8).map(|x| a.map(x).clone()).collect();
    maps[4] = ExactMatrix::from_i64_rows(ring, &[&[-1]]);
    maps[6] = ExactMatrix::from_i64_rows(ring, &[&[0, -1], &[-1, 0]]);
    PartialActionModule::new(a.group(), Side::Left, 6, domains, maps).unwrap()
}

#[test]
fn torsion_globalization_rejected_over_z() {
    let a = signed_example(Ring::Integers);
    assert!(validate_partial_action(&a).unwrap().is_valid());
    match globalize_action(&a) {
        Err(parhom_core::Error::NonFreeGlobalization(t)) => assert_eq!(t, vec!["2".to_string()]),
        other => panic!("{:?}", other.map(|l| l.lambda.rank())),
    }
    let l = globalize_action(&signed_example(q())).unwrap();
    assert_eq!(l.lambda.rank(), 12);
}

#[test]
fn exactness_examples() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let t = trivial(&g, q(), Side::Left);
    let kk = t.direct_sum(&t).unwrap();
    let r = check_exactness(&kk, &ExactMatrix::from_i64_rows(q(), &[&[1], &[0]])).unwrap();
    assert!(r.is_exact());
    // the left ideal K_par G·e_g
    let reg = regular(&g, q(), Side::Left).unwrap();
    let basis = enumerate_s(&g).unwrap();
    let mut right_mul = ExactMatrix::zeros(q(), 3, 3);
    for (j, &s) in basis.iter().enumerate() {
        let i = basis.binary_search(&sg_mul(&g, s, SElem::e(1))).unwrap();
        right_mul.set(i, j, q().one());
    }
    let sub = image_basis(&right_mul).unwrap();
    let r = check_exactness(&reg, &sub).unwrap();
    assert!(r.is_exact(), "{:?}", r);
    assert_eq!(r.ranks[0] + r.ranks[2], r.ranks[1]);
}

#[test]
fn induction_examples() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let whole = check_subgroup(&g, &[0, 1, 2, 3]).unwrap();
    let m = restricted_translation(&g, q(), &[0, 1]).unwrap();
    let m_s =
        ParRepModule::new(whole.as_group(), Side::Left, (0..4).map(|x| m.pi(whole.to_parent(x)).clone()).collect())
            .unwrap();
    assert_eq!(induce_from_subgroup(&g, &whole, &m_s).unwrap().lambda.rank(), globalize(&m).unwrap().lambda.rank());
    let one = check_subgroup(&g, &[0]).unwrap();
    let l = induce_from_subgroup(&g, &one, &trivial(one.as_group(), q(), Side::Left)).unwrap();
    assert_eq!(l.lambda.rank(), 4);
    let s = check_subgroup(&g, &[0, 2]).unwrap();
    let l = induce_from_subgroup(&g, &s, &two_point(s.as_group(), q())).unwrap();
    assert_eq!(l.lambda.rank(), 6);
}

#[test]
fn n_delta_c2() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let nd = build_n_delta(&g, q()).unwrap();
    assert_eq!((nd.kgb_dim(), nd.n_dim()), (4, 1));
}

#[test]
fn phi_certificates() {
    let c2 = GroupSpec::Cyclic(2);
    for g in [
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::product(&[c2.clone(), c2]).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
    ] {
        let cert = construct_phi(&g, q()).unwrap();
        assert_eq!(cert.xs.len(), g.order());
        assert_eq!(cert.nd.kgb_dim(), g.order() << (g.order() - 1));
    }
}

#[test]
fn intertwiners_trivial_target() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let h = hom_intertwiners(&trivial(&g, q(), Side::Right)).unwrap();
    assert_eq!(h.dim(), 1);
    assert!(h.verify());
    let gm = h.as_global().unwrap();
    assert!(gm.action(1).is_identity());
}

#[test]
fn intertwiners_global_target() {
    let g = FiniteGroup::cyclic(3).unwrap();
    let m = group_algebra(&g, q(), Side::Right);
    let h = hom_intertwiners(&m).unwrap();
    assert_eq!(h.dim(), m.rank());
    assert!(h.verify());
    let f2 = Ring::prime_field(2).unwrap();
    let h = hom_intertwiners(&b_module(&g, f2, Side::Right).unwrap()).unwrap();
    assert!(h.verify());
}
