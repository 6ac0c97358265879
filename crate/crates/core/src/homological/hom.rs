//! `Hom` and `Ext^1` between Mackey functors, and a bounded search for isomorphisms.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::resolution::{hom_out_group, hom_out_map, resolution, CoverOrder, ProjectiveResolution};
use crate::error::{Error, Result};
use crate::linalg::{cokernel_hom, direct_sum, hom_group, kernel_hom, FgGroup, GroupHom, HomGroup, IntMatrix};
use crate::mackey::functor::{MackeyFunctor, MackeyHom};

/// `H = ker g / im f` for `A -f-> B -g-> C`.
pub fn homology(f: &GroupHom, g: &GroupHom) -> Result<FgGroup> {
    let (_, incl) = kernel_hom(g)?;
    let k = incl.domain().clone();
    let mut m = IntMatrix::zeros(k.ngens(), f.domain().ngens());
    for j in 0..f.domain().ngens() {
        let y = incl
            .preimage(&f.matrix().column(j))
            .ok_or_else(|| Error::NotWellDefined("image not inside the kernel".into()))?;
        m.set_column(j, &y);
    }
    let lifted = GroupHom::new(f.domain().clone(), k, m)?;
    Ok(cokernel_hom(&lifted)?.0)
}

/// `Hom(M, N)` with explicit generating homomorphisms.
#[derive(Clone, Debug)]
pub struct MackeyHomGroup {
    pub group: FgGroup,
    pub generators: Vec<MackeyHom>,
}

fn check_lattices(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<()> {
    if m.lattice() != n.lattice() {
        return Err(Error::LatticeMismatch(format!(
            "{:?} vs {:?}",
            m.lattice(),
            n.lattice()
        )));
    }
    Ok(())
}

/// Descends a map out of `P_0` that kills the kernel of the augmentation to a map out of `M`.
fn descend(res: &ProjectiveResolution, phi: &MackeyHom) -> Result<MackeyHom> {
    let m = &res.target;
    let mut maps = Vec::new();
    for l in 0..=m.lattice().top() {
        let eps = res.eps.at(l);
        let g = m.group(l);
        let mut mat = IntMatrix::zeros(phi.codomain().group(l).ngens(), g.ngens());
        for j in 0..g.ngens() {
            let mut e = vec![BigInt::zero(); g.ngens()];
            e[j] = BigInt::from(1);
            let x = eps.preimage(&e).expect("augmentation is surjective");
            mat.set_column(j, &phi.at(l).apply(&x));
        }
        maps.push(GroupHom::new(g.clone(), phi.codomain().group(l).clone(), mat)?);
    }
    MackeyHom::new(m.clone(), phi.codomain().clone(), maps)
}

/// `Hom(M, N) = ker(Hom(P_0, N) -> Hom(P_1, N))`.
pub fn hom_mackey(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<MackeyHomGroup> {
    hom_mackey_with(m, n, CoverOrder::TopDown)
}

pub fn hom_mackey_with(m: &MackeyFunctor, n: &MackeyFunctor, order: CoverOrder) -> Result<MackeyHomGroup> {
    check_lattices(m, n)?;
    let res = resolution(m, 1, order)?;
    let p0 = &res.terms[0];
    let delta = hom_out_map(&res.d[0], &res.terms[1], p0, n);
    let (k, incl) = kernel_hom(&delta)?;
    let sum = hom_out_group(p0, n);
    let mut generators = Vec::new();
    for i in 0..k.ngens() {
        let mut e = vec![BigInt::zero(); k.ngens()];
        e[i] = BigInt::from(1);
        let v = incl.apply(&e);
        let xs: Vec<Vec<BigInt>> = (0..p0.summands.len()).map(|s| sum.proj[s].apply(&v)).collect();
        let xs: Vec<Vec<BigInt>> = xs
            .into_iter()
            .zip(&p0.summands)
            .map(|(x, &h)| n.group(h).reduce(&x))
            .collect();
        let phi = p0.map_out(n, &xs)?;
        generators.push(descend(&res, &phi)?);
    }
    Ok(MackeyHomGroup { group: k, generators })
}

/// `Ext^1(M, N)` from a resolution built in the given order.
pub fn ext1_with(m: &MackeyFunctor, n: &MackeyFunctor, order: CoverOrder) -> Result<FgGroup> {
    check_lattices(m, n)?;
    let res = resolution(m, 2, order)?;
    let d0 = hom_out_map(&res.d[0], &res.terms[1], &res.terms[0], n);
    let d1 = hom_out_map(&res.d[1], &res.terms[2], &res.terms[1], n);
    homology(&d0, &d1)
}

pub fn ext1(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<FgGroup> {
    ext1_with(m, n, CoverOrder::TopDown)
}

/// `Hom(M, N)` computed directly as the natural families inside `⊕_H Hom(M(H), N(H))`.
pub fn hom_mackey_direct(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<MackeyHomGroup> {
    check_lattices(m, n)?;
    let lat = m.lattice();
    let levels: Vec<u8> = (0..=lat.top()).collect();
    let homs: Vec<HomGroup> = levels.iter().map(|&l| hom_group(m.group(l), n.group(l))).collect();
    let src = direct_sum(&homs.iter().map(|h| &h.group).collect::<Vec<_>>());
    // One target block per constraint: res and tr per edge, w per level.
    let mut blocks: Vec<(HomGroup, Box<dyn Fn(&[GroupHom]) -> GroupHom + '_>)> = Vec::new();
    for (h, k) in lat.edges() {
        let (hu, ku) = (h as usize, k as usize);
        blocks.push((
            hom_group(m.group(k), n.group(h)),
            Box::new(move |f: &[GroupHom]| f[ku].then(n.res_edge(h, k)).sub(&m.res_edge(h, k).then(&f[hu]))),
        ));
        blocks.push((
            hom_group(m.group(h), n.group(k)),
            Box::new(move |f: &[GroupHom]| f[hu].then(n.tr_edge(h, k)).sub(&m.tr_edge(h, k).then(&f[ku]))),
        ));
    }
    for &l in &levels {
        let lu = l as usize;
        blocks.push((
            hom_group(m.group(l), n.group(l)),
            Box::new(move |f: &[GroupHom]| f[lu].then(n.weyl(l)).sub(&m.weyl(l).then(&f[lu]))),
        ));
    }
    let dst = direct_sum(&blocks.iter().map(|b| &b.0.group).collect::<Vec<_>>());
    let homs_at = |v: &[BigInt]| -> Vec<GroupHom> {
        homs.iter()
            .enumerate()
            .map(|(l, hg)| hg.hom_at(&hg.group.reduce(&src.proj[l].apply(v))))
            .collect()
    };
    let mut mat = IntMatrix::zeros(dst.group.ngens(), src.group.ngens());
    for j in 0..src.group.ngens() {
        let mut e = vec![BigInt::zero(); src.group.ngens()];
        e[j] = BigInt::from(1);
        let f = homs_at(&e);
        let mut col = vec![BigInt::zero(); dst.group.ngens()];
        for (b, (hg, rule)) in blocks.iter().enumerate() {
            let c = hg.coordinates(&rule(&f));
            for (x, y) in col.iter_mut().zip(dst.inj[b].apply(&c)) {
                *x += y;
            }
        }
        mat.set_column(j, &col);
    }
    let psi = GroupHom::new(src.group.clone(), dst.group.clone(), mat)?;
    let (k, incl) = kernel_hom(&psi)?;
    let mut generators = Vec::new();
    for i in 0..k.ngens() {
        let mut e = vec![BigInt::zero(); k.ngens()];
        e[i] = BigInt::from(1);
        let f = homs_at(&incl.apply(&e));
        generators.push(MackeyHom::new(m.clone(), n.clone(), f)?);
    }
    Ok(MackeyHomGroup { group: k, generators })
}

/// Outcome of [`iso_search`].
#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Iso(MackeyHom),
    /// An invariant differs; the string names it.
    NotIso(String),
    Unknown,
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Iso(_))
    }
}

/// Invariants preserved by isomorphisms: level groups and the kernels and
/// cokernels of every stored structure map.
pub fn invariants(m: &MackeyFunctor) -> Vec<(String, FgGroup)> {
    let lat = m.lattice();
    let mut out = Vec::new();
    for l in lat.levels() {
        out.push((format!("M({})", lat.level_name(l)), m.group(l).clone()));
    }
    for (h, k) in lat.edges() {
        let e = format!("{}<{}", lat.level_name(h), lat.level_name(k));
        for (name, f) in [("res", m.res_edge(h, k)), ("tr", m.tr_edge(h, k))] {
            out.push((format!("ker {} {}", name, e), kernel_hom(f).expect("valid").0));
            out.push((format!("coker {} {}", name, e), cokernel_hom(f).expect("valid").0));
        }
    }
    for l in lat.levels() {
        let one_minus = GroupHom::identity(m.group(l)).sub(m.weyl(l));
        out.push((
            format!("coker(1-w) {}", lat.level_name(l)),
            cokernel_hom(&one_minus).expect("valid").0,
        ));
    }
    out
}

pub const ISO_MAX_GENS: usize = 6;
pub const ISO_BOUND: i64 = 3;

/// Bounded search for an isomorphism among small combinations of `Hom(M, N)` generators.
pub fn iso_search(m: &MackeyFunctor, n: &MackeyFunctor) -> IsoVerdict {
    if m.lattice() != n.lattice() {
        return IsoVerdict::NotIso("different lattices".into());
    }
    for ((name, a), (_, b)) in invariants(m).iter().zip(invariants(n).iter()) {
        if !a.iso(b) {
            return IsoVerdict::NotIso(format!("{}: {} vs {}", name, a, b));
        }
    }
    if m.is_zero() {
        return IsoVerdict::Iso(MackeyHom::zero(m, n));
    }
    let Ok(hg) = hom_mackey_direct(m, n) else {
        return IsoVerdict::Unknown;
    };
    let gens = &hg.generators;
    if gens.is_empty() || gens.len() > ISO_MAX_GENS {
        return IsoVerdict::Unknown;
    }
    // Coefficient ranges respect the order of each generator.
    let ranges: Vec<Vec<i64>> = (0..gens.len())
        .map(|i| {
            let d = hg.group.generator_order(i);
            let all: Vec<i64> = (-ISO_BOUND..=ISO_BOUND).collect();
            if d.is_zero() {
                all
            } else {
                let d = d.to_i64().unwrap_or(i64::MAX);
                all.into_iter().filter(|c| *c >= 0 && *c < d).collect()
            }
        })
        .collect();
    let mut combos: Vec<Vec<i64>> = vec![Vec::new()];
    for r in &ranges {
        let mut next = Vec::with_capacity(combos.len() * r.len());
        for c in &combos {
            for &x in r {
                let mut v = c.clone();
                v.push(x);
                next.push(v);
            }
        }
        combos = next;
    }
    combos.sort_by_key(|c| {
        (
            c.iter().map(|x| x.abs()).sum::<i64>(),
            c.iter().filter(|x| **x != 0).count(),
        )
    });
    for c in combos {
        if c.iter().all(|x| *x == 0) {
            continue;
        }
        let mut f = MackeyHom::zero(m, n);
        for (g, &x) in gens.iter().zip(&c) {
            if x != 0 {
                f = f.add(&g.scale(&BigInt::from(x)));
            }
        }
        if f.is_iso() {
            return IsoVerdict::Iso(f);
        }
    }
    IsoVerdict::Unknown
}
