use mackey::homological::*;
use mackey::linalg::{ints, FgGroup};
use mackey::mackey::catalog::*;
use mackey::mackey::{representable, yoneda_hom, Lattice, MackeyHom, CP, CPQ, CQ, E};

fn lp() -> Lattice {
    Lattice::prime(3).unwrap()
}

#[test]
fn l_p_to_constants_is_zero() {
    let l = l_prime(&lp()).unwrap();
    for n in [0, 3, 5] {
        let c = const_prime(&lp(), n).unwrap();
        assert!(hom_mackey(&l, &c).unwrap().group.is_zero());
        assert!(hom_mackey_direct(&l, &c).unwrap().group.is_zero());
    }
}

#[test]
fn endomorphisms_of_l_p() {
    let l = l_prime(&lp()).unwrap();
    assert!(hom_mackey(&l, &l).unwrap().group.iso(&FgGroup::free(1)));
}

#[test]
fn ext_of_constant_into_l_p() {
    let z = const_prime(&lp(), 0).unwrap();
    let l = l_prime(&lp()).unwrap();
    assert!(ext1(&z, &l).unwrap().iso(&FgGroup::cyclic(3)));
    assert!(ext1_with(&z, &l, CoverOrder::BottomUp)
        .unwrap()
        .iso(&FgGroup::cyclic(3)));
}

#[test]
fn ext_into_constants() {
    for m in [const_prime(&lp(), 0), l_prime(&lp())] {
        let m = m.unwrap();
        for n in [0, 3, 5] {
            let c = const_prime(&lp(), n).unwrap();
            assert!(ext1(&m, &c).unwrap().is_zero());
        }
    }
    // R_p is not projective relative to the constants: A_p is a non-split
    // extension of R_p by <Z>.
    let r = r_prime(&lp()).unwrap();
    for (n, expect) in [(0, FgGroup::cyclic(3)), (3, FgGroup::cyclic(3)), (5, FgGroup::zero())] {
        let c = const_prime(&lp(), n).unwrap();
        assert!(ext1(&r, &c).unwrap().iso(&expect), "n = {}", n);
        assert!(
            ext1_with(&r, &c, CoverOrder::BottomUp).unwrap().iso(&expect),
            "n = {}",
            n
        );
    }
}

#[test]
fn yoneda_sequences_over_c_p() {
    let a = burnside_prime(&lp()).unwrap();
    let z = const_prime(&lp(), 0).unwrap();
    let f = yoneda_hom(1, &z, &ints(&[1])).unwrap();
    // representable(C_p/C_p) is A_p up to the choice of basis.
    assert!(f.is_valid() && f.is_surjective());
    let (k, _) = kernel_mackey(&f).unwrap();
    assert!(iso_search(&k, &l_prime(&lp()).unwrap()).is_iso());
    let _ = a;
}

#[test]
fn resolutions_are_exact() {
    let p = 3;
    let q = 5;
    for m in [
        const_pq(p, q, 0).unwrap(),
        l_pq(p, q).unwrap(),
        representable(&Lattice::pq(p, q).unwrap(), CP),
    ] {
        for order in [CoverOrder::TopDown, CoverOrder::BottomUp] {
            let r = resolution(&m, 2, order).unwrap();
            assert!(r.check().is_empty(), "{:?}", r.check());
        }
    }
}

#[test]
fn pq_hom_ext() {
    let (p, q) = (3, 5);
    let r = r_pq(p, q).unwrap();
    for n in [0, 3, 5, 15] {
        let c = const_pq(p, q, n).unwrap();
        assert!(hom_mackey(&r, &c).unwrap().group.is_zero());
    }
    let z = const_pq(p, q, 0).unwrap();
    assert!(ext1(&z, &l_pq(p, q).unwrap()).unwrap().is_zero());
}

#[test]
fn yoneda_consistency() {
    let lat = Lattice::pq(3, 5).unwrap();
    let n = l_pq(3, 5).unwrap();
    for h in [E, CP, CQ, CPQ] {
        let a = representable(&lat, h);
        let hg = hom_mackey(&a, &n).unwrap();
        assert!(hg.group.iso(n.group(h)));
        for g in &hg.generators {
            assert!(g.is_valid());
        }
    }
    let _ = MackeyHom::identity(&n);
}
