//! Spans of orbits, their composition, representable functors and Yoneda maps.
//!
//! A basis span from `G/K` to `G/H` is `G/K ← G/L → G/H` with the left leg
//! the projection and the right leg `y ↦ y + x`. Points of `G/L` are the
//! residues mod `[G:L]`, and the generator acts by `+1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::functor::{MackeyFunctor, MackeyHom};
use super::lattice::{Lattice, Level};
use crate::error::{Error, Result};
use crate::linalg::{FgGroup, GroupHom, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub source: Level,
    pub target: Level,
    pub mid: Level,
    pub twist: u64,
}

/// A formal integer combination of basis spans with a common source and target.
pub type SpanSum = Vec<(Span, BigInt)>;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The level with the given index (subgroups of a cyclic group are determined by their order).
fn level_of_index(lat: &Lattice, idx: u64) -> Level {
    lat.levels()
        .into_iter()
        .find(|&l| lat.index(l) == idx)
        .expect("orbit size is not an index")
}

impl Span {
    pub fn identity(l: Level) -> Self {
        Span {
            source: l,
            target: l,
            mid: l,
            twist: 0,
        }
    }

    /// The span inducing restriction from `K` down to `H`.
    pub fn res(h: Level, k: Level) -> Self {
        Span {
            source: h,
            target: k,
            mid: h,
            twist: 0,
        }
    }

    /// The span inducing transfer from `H` up to `K`.
    pub fn tr(h: Level, k: Level) -> Self {
        Span {
            source: k,
            target: h,
            mid: h,
            twist: 0,
        }
    }

    /// Translation by `g^x` on `G/L`.
    pub fn conj(l: Level, x: u64) -> Self {
        Span {
            source: l,
            target: l,
            mid: l,
            twist: x,
        }
    }
}

/// Canonical basis of spans from `G/K` to `G/H`: a subgroup `L ⊆ K ∩ H`
/// and a twist modulo `[G : KH]`.
pub fn basis(lat: &Lattice, k: Level, h: Level) -> Vec<Span> {
    let twists = lat.index(lat.join(k, h));
    let mut out = Vec::new();
    for l in lat.subgroups_of(lat.meet(k, h)) {
        for x in 0..twists {
            out.push(Span {
                source: k,
                target: h,
                mid: l,
                twist: x,
            });
        }
    }
    out
}

/// Reduces a span to its basis representative.
pub fn normalize(lat: &Lattice, s: Span) -> Span {
    Span {
        twist: s.twist % lat.index(lat.join(s.source, s.target)),
        ..s
    }
}

/// `second ∘ first` by pulling back explicit finite G-sets.
pub fn compose(lat: &Lattice, first: &Span, second: &Span) -> SpanSum {
    assert_eq!(first.target, second.source, "spans are not composable");
    let (m1, m2) = (lat.index(first.mid), lat.index(second.mid));
    let my = lat.index(first.target);
    let mx = lat.index(first.source);
    let mz = lat.index(second.target);
    let twist_mod = gcd(mx, mz);
    let mut seen = vec![false; (m1 * m2) as usize];
    let mut acc: BTreeMap<Span, BigInt> = BTreeMap::new();
    for u in 0..m1 {
        for v in 0..m2 {
            if seen[(u * m2 + v) as usize] || (u + first.twist) % my != v % my {
                continue;
            }
            let mut size = 0;
            let (mut a, mut b) = (u, v);
            loop {
                seen[(a * m2 + b) as usize] = true;
                size += 1;
                a = (a + 1) % m1;
                b = (b + 1) % m2;
                if (a, b) == (u, v) {
                    break;
                }
            }
            let mid = level_of_index(lat, size);
            let x = ((v + second.twist + mz * m1 - u) % mz) % twist_mod;
            let s = Span {
                source: first.source,
                target: second.target,
                mid,
                twist: x,
            };
            *acc.entry(s).or_insert_with(BigInt::zero) += 1;
        }
    }
    acc.into_iter().collect()
}

/// The map `N(G/H) -> N(G/K)` induced by a span from `G/K` to `G/H`:
/// `tr^K_L ∘ c_x ∘ res^H_L`.
pub fn span_action(s: &Span, n: &MackeyFunctor) -> GroupHom {
    n.res(s.mid, s.target)
        .then(&n.conj(s.mid, s.twist))
        .then(&n.tr(s.mid, s.source))
}

pub fn span_sum_action(s: &SpanSum, source: Level, target: Level, n: &MackeyFunctor) -> GroupHom {
    let mut acc = GroupHom::zero(n.group(target), n.group(source));
    for (sp, c) in s {
        acc = acc.add(&span_action(sp, n).scale(c));
    }
    acc
}

/// Matrix of `f ↦ f ∘ s` from `B(Y, G/H)` to `B(X, G/H)` in the canonical bases, for `s` from `X` to `Y`.
fn precompose_matrix(lat: &Lattice, s: &Span, h: Level) -> IntMatrix {
    let src = basis(lat, s.target, h);
    let dst = basis(lat, s.source, h);
    let mut m = IntMatrix::zeros(dst.len(), src.len());
    for (j, f) in src.iter().enumerate() {
        for (t, c) in compose(lat, s, f) {
            let i = dst.iter().position(|b| *b == t).expect("composite outside the basis");
            let v = m.get(i, j) + c;
            m.set(i, j, v);
        }
    }
    m
}

/// The representable functor `B_G(-, G/H)`.
pub fn representable(lat: &Lattice, h: Level) -> MackeyFunctor {
    let n = lat.top() as usize + 1;
    let groups: Vec<FgGroup> = (0..n as Level).map(|k| FgGroup::free(basis(lat, k, h).len())).collect();
    let mut res = Vec::new();
    let mut tr = Vec::new();
    for (lo, hi) in lat.edges() {
        res.push(precompose_matrix(lat, &Span::res(lo, hi), h));
        tr.push(precompose_matrix(lat, &Span::tr(lo, hi), h));
    }
    let weyl = (0..n as Level)
        .map(|k| precompose_matrix(lat, &Span::conj(k, 1), h))
        .collect();
    MackeyFunctor::from_matrices(*lat, groups, res, tr, weyl).expect("representable maps are well defined")
}

/// Coordinates of the identity span of `G/H` inside `B(G/H, G/H)`.
pub fn identity_class(lat: &Lattice, h: Level) -> Vec<BigInt> {
    basis(lat, h, h)
        .iter()
        .map(|s| BigInt::from(u8::from(*s == Span::identity(h))))
        .collect()
}

/// The map `B_G(-, G/H) -> N` sending the identity span to `x ∈ N(G/H)`.
pub fn yoneda_hom(h: Level, n: &MackeyFunctor, x: &[BigInt]) -> Result<MackeyHom> {
    let lat = n.lattice();
    if x.len() != n.group(h).ngens() {
        return Err(Error::Shape("element has the wrong number of coordinates".into()));
    }
    let rep = representable(&lat, h);
    yoneda_into(&rep, h, n, x)
}

/// As [`yoneda_hom`] with a precomputed representable.
pub fn yoneda_into(rep: &MackeyFunctor, h: Level, n: &MackeyFunctor, x: &[BigInt]) -> Result<MackeyHom> {
    let lat = n.lattice();
    let mut mats = Vec::new();
    for k in 0..=lat.top() {
        let b = basis(&lat, k, h);
        let mut m = IntMatrix::zeros(n.group(k).ngens(), b.len());
        for (j, s) in b.iter().enumerate() {
            m.set_column(j, &span_action(s, n).apply(x));
        }
        mats.push(m);
    }
    MackeyHom::from_matrices(rep, n, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mackey::lattice::{CP, CPQ, CQ, E};

    fn lat() -> Lattice {
        Lattice::pq(3, 5).unwrap()
    }

    #[test]
    fn basis_sizes() {
        let l = lat();
        assert_eq!(basis(&l, CPQ, CPQ).len(), 4);
        assert_eq!(basis(&l, CQ, CP).len(), 1);
        assert_eq!(basis(&l, E, E).len(), 15);
    }

    #[test]
    fn compose_with_identity() {
        let l = lat();
        for s in basis(&l, CP, CQ) {
            assert_eq!(compose(&l, &Span::identity(CP), &s), vec![(s, BigInt::from(1))]);
            assert_eq!(compose(&l, &s, &Span::identity(CQ)), vec![(s, BigInt::from(1))]);
        }
    }

    #[test]
    fn res_after_tr_counts_points() {
        // G/G <- G/e -> G/G composed with itself: G/e x G/e splits into 15 free orbits.
        let l = lat();
        let s = Span {
            source: CPQ,
            target: CPQ,
            mid: E,
            twist: 0,
        };
        let c = compose(&l, &s, &s);
        assert_eq!(c, vec![(s, BigInt::from(15))]);
    }

    #[test]
    fn representables_are_valid() {
        let l = Lattice::pq(3, 5).unwrap();
        for h in l.levels() {
            let r = representable(&l, h);
            assert!(r.validate().is_empty(), "{:?}", r.validate());
        }
        let p = Lattice::prime(5).unwrap();
        for h in p.levels() {
            assert!(representable(&p, h).is_valid());
        }
    }

    #[test]
    fn yoneda_on_identity() {
        let l = lat();
        let a = representable(&l, CPQ);
        let f = yoneda_hom(CPQ, &a, &identity_class(&l, CPQ)).unwrap();
        assert!(f.same_map(&MackeyHom::identity(&a)));
        assert!(f.is_valid());
    }

    #[test]
    fn one_minus_g_on_free_level() {
        let l = lat();
        let a = representable(&l, E);
        let g = span_action(&Span::conj(E, 1), &a);
        let one_minus = GroupHom::identity(a.group(E)).sub(&g);
        let m = one_minus.matrix();
        // Each column has a single 1 and a single -1.
        for j in 0..15 {
            let col = m.column(j);
            assert_eq!(col.iter().filter(|x| **x == BigInt::from(1)).count(), 1);
            assert_eq!(col.iter().filter(|x| **x == BigInt::from(-1)).count(), 1);
        }
    }
}
