use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use mackey::cohomology::{realizable, FixedDims, VirtualRep};
use mackey::freeness::ll_dims;
use mackey::linalg::group::span_size;
use mackey::linalg::{cokernel_hom, hom_group, kernel_hom, smith, tensor_group, FgGroup, GroupHom, IntMatrix};
use mackey::mackey::catalog::*;
use mackey::mackey::{direct_sum, functor_from_json, functor_to_json, tensor_external, Lattice, MackeyFunctor};

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-40i64..=40, r * c).prop_map(move |v| IntMatrix::from_i64(r, c, &v))
    })
}

/// A finite group `⊕ Z/d_i` of order at most 2000.
fn finite_group() -> impl Strategy<Value = FgGroup> {
    prop::collection::vec(1u64..=12, 1..=3)
        .prop_filter("order", |v| v.iter().product::<u64>() <= 2000)
        .prop_map(|v| {
            let d: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            FgGroup::presented(d.len(), &IntMatrix::diagonal(&d))
        })
}

fn order(g: &FgGroup) -> usize {
    usize::try_from(g.order().unwrap()).unwrap()
}

/// Generator `j` goes to `seed_j` scaled into the torsion of matching order.
fn hom_from_seeds(a: &FgGroup, b: &FgGroup, seeds: &[i64]) -> GroupHom {
    let exp_b = b.exponent();
    let mut m = IntMatrix::zeros(b.ngens(), a.ngens());
    for (j, d) in a.torsion().iter().enumerate() {
        let scale = &exp_b / exp_b.gcd(d);
        for i in 0..b.ngens() {
            m.set(i, j, BigInt::from(seeds[(i * 7 + j) % seeds.len()]) * &scale);
        }
    }
    GroupHom::new(a.clone(), b.clone(), m).unwrap()
}

fn invariant_gcd_product(a: &FgGroup, b: &FgGroup) -> BigInt {
    let mut n = BigInt::from(1);
    for x in a.torsion() {
        for y in b.torsion() {
            n *= x.gcd(y);
        }
    }
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_factorization(a in matrix()) {
        let s = smith(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        prop_assert_eq!(s.v_inv.mul(&s.v), IntMatrix::identity(a.cols()));
        let d = s.diagonal();
        for w in d.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            prop_assert!(divides);
        }
        prop_assert!(d.iter().all(|x| *x >= BigInt::zero()));
    }

    #[test]
    fn kernel_image_cokernel_counts(a in finite_group(), b in finite_group(), seeds in prop::collection::vec(0i64..50, 1..8)) {
        let f = hom_from_seeds(&a, &b, &seeds);
        let images: Vec<Vec<BigInt>> = (0..a.ngens()).map(|j| f.matrix().column(j)).collect();
        let im = span_size(&b, &images, 10_000);
        let (k, incl) = kernel_hom(&f).unwrap();
        let (c, proj) = cokernel_hom(&f).unwrap();
        prop_assert_eq!(order(&a), order(&k) * im);
        prop_assert_eq!(order(&b), order(&c) * im);
        prop_assert!(incl.then(&f).is_zero() && f.then(&proj).is_zero());
    }

    #[test]
    fn hom_and_tensor_orders(a in finite_group(), b in finite_group()) {
        let n = invariant_gcd_product(&a, &b);
        prop_assert_eq!(hom_group(&a, &b).group.order().unwrap(), n.clone());
        prop_assert_eq!(tensor_group(&a, &b).group.order().unwrap(), n);
        prop_assert!(tensor_group(&a, &b).group.iso(&tensor_group(&b, &a).group));
    }

    #[test]
    fn rep_display_round_trips(trivial in -6i64..=6, twists in prop::collection::vec((-30i64..=30, -3i64..=3), 0..5)) {
        let mut r = VirtualRep::trivial(3, 5, trivial).unwrap();
        for (k, n) in twists {
            if k.rem_euclid(15) != 0 {
                r.add_twist(k, n);
            }
        }
        let back = VirtualRep::parse(3, 5, &r.to_string()).unwrap();
        prop_assert_eq!(back.fixed_dims(), r.fixed_dims());
        prop_assert_eq!(back, r);
    }

    #[test]
    fn realizable_inverts_fixed_dims(e in -10i64..=10, p in -10i64..=10, q in -10i64..=10, pq in -10i64..=10) {
        let d = FixedDims::new(e, p, q, pq);
        match realizable(&d, 3, 5) {
            Ok(r) => prop_assert_eq!(r.fixed_dims(), d),
            Err(_) => prop_assert!(d.check_parity().is_err()),
        }
    }

    #[test]
    fn conjugate_twists_agree(k in -60i64..=60) {
        prop_assume!(k.rem_euclid(15) != 0);
        prop_assert_eq!(VirtualRep::xi(3, 5, k).unwrap(), VirtualRep::xi(3, 5, -k).unwrap());
    }

    #[test]
    fn ll_is_reflexive(e in -8i64..=8, p in -8i64..=8, q in -8i64..=8, pq in -8i64..=8) {
        let d = FixedDims::new(e, p, q, pq);
        prop_assert!(ll_dims(&d, &d, false) && ll_dims(&d, &d, true));
    }
}

fn prime_atoms(p: u64) -> Vec<MackeyFunctor> {
    let l = Lattice::prime(p).unwrap();
    vec![
        burnside_prime(&l).unwrap(),
        r_prime(&l).unwrap(),
        l_prime(&l).unwrap(),
        const_prime(&l, 0).unwrap(),
        const_prime(&l, p).unwrap(),
        free_prime(&l).unwrap(),
        kappa_prime(&l).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn external_tensors_and_sums_validate(i in 0usize..7, j in 0usize..7, k in 0usize..7) {
        let (ap, aq) = (prime_atoms(3), prime_atoms(5));
        let m = tensor_external(&ap[i], &aq[j]).unwrap();
        prop_assert!(m.is_valid());
        let n = tensor_external(&ap[k], &aq[i]).unwrap();
        prop_assert!(direct_sum(&m, &n).unwrap().is_valid());
    }

    #[test]
    fn functor_json_round_trips(i in 0usize..7, j in 0usize..7) {
        let m = tensor_external(&prime_atoms(3)[i], &prime_atoms(5)[j]).unwrap();
        let back = functor_from_json(&functor_to_json(&m)).unwrap();
        prop_assert_eq!(back, m);
    }
}
