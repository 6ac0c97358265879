//! The standard functors over `C_p` and `C_pq`, the external tensor product
//! and the two ways of restricting a `C_pq`-functor to a prime-order group.
//!
//! Generator order at the top of `A_p[d]` is `[trivial orbit, free orbit]`,
//! so restriction is the row `[d p]`.

use num_bigint::BigInt;

use super::functor::{MackeyFunctor, MackeyHom};
use super::lattice::{Lattice, Level};
use crate::error::{Error, Result};
use crate::homological::kernel_mackey;
use crate::linalg::{tensor_group, tensor_hom, FgGroup, GroupHom, IntMatrix, Tensor};

/// Which prime a prime-order functor or a lift refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    P,
    Q,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::P => Side::Q,
            Side::Q => Side::P,
        }
    }

    pub fn prime(self, lat: &Lattice) -> u64 {
        match (self, *lat) {
            (_, Lattice::Prime { p }) => p,
            (Side::P, Lattice::Pq { p, .. }) => p,
            (Side::Q, Lattice::Pq { q, .. }) => q,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::P => 'p',
            Side::Q => 'q',
        }
    }
}

fn expect_prime(lat: &Lattice) -> Result<u64> {
    match *lat {
        Lattice::Prime { p } => Ok(p),
        _ => Err(Error::LatticeMismatch("expected a prime-order lattice".into())),
    }
}

fn m(rows: usize, cols: usize, v: &[i64]) -> IntMatrix {
    IntMatrix::from_i64(rows, cols, v)
}

/// `A_p[d]`: `Z^2` over `Z`, restriction `[d p]`, transfer onto the free orbit.
pub fn burnside_d(lat: &Lattice, d: i64) -> Result<MackeyFunctor> {
    let p = expect_prime(lat)? as i64;
    MackeyFunctor::from_matrices(
        *lat,
        vec![FgGroup::free(1), FgGroup::free(2)],
        vec![m(1, 2, &[d, p])],
        vec![m(2, 1, &[0, 1])],
        vec![IntMatrix::identity(1), IntMatrix::identity(2)],
    )
}

pub fn burnside_prime(lat: &Lattice) -> Result<MackeyFunctor> {
    burnside_d(lat, 1)
}

fn line(lat: &Lattice, res: i64, tr: i64) -> Result<MackeyFunctor> {
    expect_prime(lat)?;
    MackeyFunctor::from_matrices(
        *lat,
        vec![FgGroup::free(1), FgGroup::free(1)],
        vec![m(1, 1, &[res])],
        vec![m(1, 1, &[tr])],
        vec![IntMatrix::identity(1), IntMatrix::identity(1)],
    )
}

/// `R_p`: restriction the identity, transfer multiplication by `p`.
pub fn r_prime(lat: &Lattice) -> Result<MackeyFunctor> {
    let p = expect_prime(lat)? as i64;
    line(lat, 1, p)
}

/// `L_p`: restriction multiplication by `p`, transfer the identity.
pub fn l_prime(lat: &Lattice) -> Result<MackeyFunctor> {
    let p = expect_prime(lat)? as i64;
    line(lat, p, 1)
}

/// `⟨Z/n⟩` concentrated at the top (`n = 0` gives `Z`).
pub fn const_prime(lat: &Lattice, n: u64) -> Result<MackeyFunctor> {
    expect_prime(lat)?;
    let top = FgGroup::cyclic(n);
    let k = top.ngens();
    MackeyFunctor::from_matrices(
        *lat,
        vec![FgGroup::zero(), top],
        vec![IntMatrix::zeros(0, k)],
        vec![IntMatrix::zeros(k, 0)],
        vec![IntMatrix::zeros(0, 0), IntMatrix::identity(k)],
    )
}

/// `F_p`: `Z` over `Z^p` with diagonal restriction, summing transfer and cyclic action.
pub fn free_prime(lat: &Lattice) -> Result<MackeyFunctor> {
    let p = expect_prime(lat)? as usize;
    let mut shift = IntMatrix::zeros(p, p);
    for i in 0..p {
        shift.set((i + 1) % p, i, BigInt::from(1));
    }
    MackeyFunctor::from_matrices(
        *lat,
        vec![FgGroup::free(p), FgGroup::free(1)],
        vec![IntMatrix::from_i64(p, 1, &vec![1; p])],
        vec![IntMatrix::from_i64(1, p, &vec![1; p])],
        vec![shift, IntMatrix::identity(1)],
    )
}

/// The surjection `F_p -> L_p` picked out by `1 ∈ L_p(C_p/e)`.
pub fn free_to_l(lat: &Lattice) -> Result<MackeyHom> {
    let p = expect_prime(lat)? as usize;
    let f = free_prime(lat)?;
    let l = l_prime(lat)?;
    MackeyHom::from_matrices(
        &f,
        &l,
        vec![IntMatrix::from_i64(1, p, &vec![1; p]), IntMatrix::identity(1)],
    )
}

/// `κ_p`, the kernel of `F_p -> L_p`.
pub fn kappa_prime(lat: &Lattice) -> Result<MackeyFunctor> {
    Ok(kernel_mackey(&free_to_l(lat)?)?.0)
}

/// Tensor of a `C_p`-functor with a `C_q`-functor, as a `C_pq`-functor.
///
/// The generator of `C_pq` acts through the pair of generators, so the
/// Weyl action at each level is the tensor of the two actions.
pub fn tensor_external(mp: &MackeyFunctor, nq: &MackeyFunctor) -> Result<MackeyFunctor> {
    let p = expect_prime(&mp.lattice())?;
    let q = expect_prime(&nq.lattice())?;
    let lat = Lattice::pq(p, q)?;
    let split = |l: Level| (l & 1, (l >> 1) & 1);
    let tensors: Vec<Tensor> = (0..4u8)
        .map(|l| {
            let (a, b) = split(l);
            tensor_group(mp.group(a), nq.group(b))
        })
        .collect();
    let mut res = Vec::new();
    let mut tr = Vec::new();
    for (h, k) in lat.edges() {
        let ((ha, hb), (ka, kb)) = (split(h), split(k));
        let (r, t) = if ha != ka {
            let id = GroupHom::identity(nq.group(hb));
            (
                tensor_hom(mp.res_edge(ha, ka), &id, &tensors[k as usize], &tensors[h as usize]),
                tensor_hom(mp.tr_edge(ha, ka), &id, &tensors[h as usize], &tensors[k as usize]),
            )
        } else {
            let id = GroupHom::identity(mp.group(ha));
            (
                tensor_hom(&id, nq.res_edge(hb, kb), &tensors[k as usize], &tensors[h as usize]),
                tensor_hom(&id, nq.tr_edge(hb, kb), &tensors[h as usize], &tensors[k as usize]),
            )
        };
        res.push(r);
        tr.push(t);
    }
    let weyl = (0..4u8)
        .map(|l| {
            let (a, b) = split(l);
            tensor_hom(mp.weyl(a), nq.weyl(b), &tensors[l as usize], &tensors[l as usize])
        })
        .collect();
    let groups = tensors.into_iter().map(|t| t.group).collect();
    MackeyFunctor::new(lat, groups, res, tr, weyl)
}

fn restrict(mf: &MackeyFunctor, side: Side, bottom: Level, top: Level) -> Result<MackeyFunctor> {
    let lat = mf.lattice();
    if !lat.is_pq() {
        return Err(Error::LatticeMismatch("expected a C_pq functor".into()));
    }
    let prime = side.prime(&lat);
    let sub = Lattice::prime(prime)?;
    let e = match side {
        Side::P => lat.p_part_exponent(),
        Side::Q => lat.q_part_exponent(),
    };
    MackeyFunctor::new(
        sub,
        vec![mf.group(bottom).clone(), mf.group(top).clone()],
        vec![mf.res_edge(bottom, top).clone()],
        vec![mf.tr_edge(bottom, top).clone()],
        vec![mf.conj(bottom, e), mf.conj(top, e)],
    )
}

/// Pullback along induction from the order-`p` (or order-`q`) subgroup.
///
/// The subgroup generator is `g^e` with `e` the CRT idempotent, which
/// matches the generator used by [`tensor_external`].
pub fn phi_restrict(mf: &MackeyFunctor, side: Side) -> Result<MackeyFunctor> {
    match side {
        Side::P => restrict(mf, side, 0, 1),
        Side::Q => restrict(mf, side, 0, 2),
    }
}

/// Pullback along inflation from the quotient of order `p` (or `q`).
pub fn rho_restrict(mf: &MackeyFunctor, side: Side) -> Result<MackeyFunctor> {
    match side {
        Side::P => restrict(mf, side, 2, 3),
        Side::Q => restrict(mf, side, 1, 3),
    }
}

/// The five ways of lifting a prime-order functor to `C_pq`, named by the
/// functor tensored in on the other prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lift {
    /// `- ⊗ F`
    E,
    /// `- ⊗ ⟨Z⟩`
    Q,
    /// `- ⊗ A`
    A,
    /// `- ⊗ L`
    C,
    /// `- ⊗ R`
    K,
}

impl Lift {
    pub const ALL: [Lift; 5] = [Lift::E, Lift::Q, Lift::A, Lift::C, Lift::K];

    pub fn partner(self, lat: &Lattice) -> Result<MackeyFunctor> {
        match self {
            Lift::E => free_prime(lat),
            Lift::Q => const_prime(lat, 0),
            Lift::A => burnside_prime(lat),
            Lift::C => l_prime(lat),
            Lift::K => r_prime(lat),
        }
    }
}

/// Lifts `m` (over the prime of `side`) to `C_pq` where the other prime is `other`.
pub fn lift(kind: Lift, side: Side, m: &MackeyFunctor, other: u64) -> Result<MackeyFunctor> {
    let partner = kind.partner(&Lattice::prime(other)?)?;
    match side {
        Side::P => tensor_external(m, &partner),
        Side::Q => tensor_external(&partner, m),
    }
}

fn both(p: u64, q: u64) -> Result<(Lattice, Lattice)> {
    Lattice::pq(p, q)?;
    Ok((Lattice::prime(p)?, Lattice::prime(q)?))
}

/// The Burnside functor of `C_pq`.
pub fn burnside_pq(p: u64, q: u64) -> Result<MackeyFunctor> {
    let (lp, lq) = both(p, q)?;
    tensor_external(&burnside_prime(&lp)?, &burnside_prime(&lq)?)
}

pub fn r_pq(p: u64, q: u64) -> Result<MackeyFunctor> {
    let (lp, lq) = both(p, q)?;
    tensor_external(&r_prime(&lp)?, &r_prime(&lq)?)
}

pub fn l_pq(p: u64, q: u64) -> Result<MackeyFunctor> {
    let (lp, lq) = both(p, q)?;
    tensor_external(&l_prime(&lp)?, &l_prime(&lq)?)
}

/// `⟨⟨Z/n⟩⟩`, the group at the top and zero below.
pub fn const_pq(p: u64, q: u64, n: u64) -> Result<MackeyFunctor> {
    let (lp, lq) = both(p, q)?;
    tensor_external(&const_prime(&lp, n)?, &const_prime(&lq, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ints;

    #[test]
    fn prime_atoms_validate() {
        for p in [3, 5, 7] {
            let l = Lattice::prime(p).unwrap();
            for f in [
                burnside_prime(&l),
                burnside_d(&l, 2),
                r_prime(&l),
                l_prime(&l),
                const_prime(&l, 0),
                const_prime(&l, p),
                free_prime(&l),
                kappa_prime(&l),
            ] {
                let f = f.unwrap();
                assert!(f.validate().is_empty(), "{:?}: {:?}", f, f.validate());
            }
        }
    }

    #[test]
    fn bad_transfer_is_caught() {
        let l = Lattice::prime(3).unwrap();
        let a = burnside_prime(&l).unwrap();
        let bad = GroupHom::new(FgGroup::free(1), FgGroup::free(2), IntMatrix::from_i64(2, 1, &[1, 1])).unwrap();
        let v = a.with_tr_edge(0, 1, bad).validate();
        assert!(v.iter().any(|x| x.identity.contains("double coset")));
    }

    #[test]
    fn l_p_levels() {
        let l = Lattice::prime(3).unwrap();
        let f = l_prime(&l).unwrap();
        assert_eq!(f.res_edge(0, 1).matrix(), &IntMatrix::from_i64(1, 1, &[3]));
        assert_eq!(f.tr_edge(0, 1).matrix(), &IntMatrix::identity(1));
    }

    #[test]
    fn kappa_levels() {
        let l = Lattice::prime(5).unwrap();
        let k = kappa_prime(&l).unwrap();
        assert!(k.group(1).is_zero());
        assert!(k.group(0).iso(&FgGroup::free(4)));
    }

    #[test]
    fn tensor_of_coprime_constants_vanishes() {
        let f = tensor_external(
            &const_prime(&Lattice::prime(3).unwrap(), 3).unwrap(),
            &const_prime(&Lattice::prime(5).unwrap(), 5).unwrap(),
        )
        .unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn pq_atoms() {
        let a = burnside_pq(3, 5).unwrap();
        assert!(a.is_valid());
        assert_eq!(a.ranks(), vec![1, 2, 2, 4]);
        let c = const_pq(3, 5, 15).unwrap();
        assert!(c.group(3).iso(&FgGroup::cyclic(15)));
        assert!(c.group(1).is_zero() && c.group(2).is_zero() && c.group(0).is_zero());
        let e = lift(
            Lift::E,
            Side::P,
            &burnside_prime(&Lattice::prime(3).unwrap()).unwrap(),
            5,
        )
        .unwrap();
        assert_eq!(e.group(0).rank(), 5);
        assert!(e.is_valid());
    }

    #[test]
    fn restrictions_of_lifts() {
        let lp = Lattice::prime(3).unwrap();
        let m = free_prime(&lp).unwrap();
        for kind in [Lift::C, Lift::K] {
            let x = lift(kind, Side::P, &m, 5).unwrap();
            let back = phi_restrict(&x, Side::P).unwrap();
            assert!(back.is_valid());
            assert!(back.group(0).iso(m.group(0)) && back.group(1).iso(m.group(1)));
        }
        let lpq = l_pq(3, 5).unwrap();
        let r = rho_restrict(&lpq, Side::P).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.res_edge(0, 1).apply(&ints(&[1])), ints(&[3]));
    }
}
