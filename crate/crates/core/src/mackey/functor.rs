//! Mackey functors and their morphisms.

use std::fmt;

use num_bigint::BigInt;

use super::lattice::{Lattice, Level};
use crate::error::{Error, Result};
use crate::linalg::{direct_sum as group_sum, FgGroup, GroupHom, IntMatrix};

/// A failed axiom, naming the identity and where it failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub location: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.identity, self.location)
    }
}

/// Level groups with restriction, transfer and the action of the chosen generator `g`.
///
/// `res` and `tr` are stored on covering edges only, in the order of
/// [`Lattice::edges`]; composites go down the chain from [`Lattice::chain`].
#[derive(Clone, PartialEq, Eq)]
pub struct MackeyFunctor {
    lattice: Lattice,
    groups: Vec<FgGroup>,
    res: Vec<GroupHom>,
    tr: Vec<GroupHom>,
    weyl: Vec<GroupHom>,
}

impl MackeyFunctor {
    /// Assembles a functor; only shapes are checked here, see [`validate`](Self::validate).
    pub fn new(
        lattice: Lattice,
        groups: Vec<FgGroup>,
        res: Vec<GroupHom>,
        tr: Vec<GroupHom>,
        weyl: Vec<GroupHom>,
    ) -> Result<Self> {
        let n = lattice.top() as usize + 1;
        let edges = lattice.edges();
        if groups.len() != n || weyl.len() != n || res.len() != edges.len() || tr.len() != edges.len() {
            return Err(Error::Shape("wrong number of levels or edges".into()));
        }
        for (i, &(h, k)) in edges.iter().enumerate() {
            if !res[i].domain().iso(&groups[k as usize]) || !res[i].codomain().iso(&groups[h as usize]) {
                return Err(Error::Shape(format!("restriction on edge {}<{}", h, k)));
            }
            if !tr[i].domain().iso(&groups[h as usize]) || !tr[i].codomain().iso(&groups[k as usize]) {
                return Err(Error::Shape(format!("transfer on edge {}<{}", h, k)));
            }
        }
        for (l, w) in weyl.iter().enumerate() {
            if !w.domain().iso(&groups[l]) || !w.codomain().iso(&groups[l]) {
                return Err(Error::Shape(format!("weyl action at level {}", l)));
            }
        }
        Ok(MackeyFunctor {
            lattice,
            groups,
            res,
            tr,
            weyl,
        })
    }

    /// Builds from matrices in normal-form coordinates, checking each map.
    pub fn from_matrices(
        lattice: Lattice,
        groups: Vec<FgGroup>,
        res: Vec<IntMatrix>,
        tr: Vec<IntMatrix>,
        weyl: Vec<IntMatrix>,
    ) -> Result<Self> {
        let edges = lattice.edges();
        if res.len() != edges.len() || tr.len() != edges.len() || weyl.len() != groups.len() {
            return Err(Error::Shape("wrong number of maps".into()));
        }
        let g = |l: Level| groups[l as usize].clone();
        let mut r = Vec::new();
        let mut t = Vec::new();
        for (i, &(h, k)) in edges.iter().enumerate() {
            r.push(GroupHom::new(g(k), g(h), res[i].clone())?);
            t.push(GroupHom::new(g(h), g(k), tr[i].clone())?);
        }
        let mut w = Vec::new();
        for (l, m) in weyl.into_iter().enumerate() {
            w.push(GroupHom::new(groups[l].clone(), groups[l].clone(), m)?);
        }
        Self::new(lattice, groups.clone(), r, t, w)
    }

    pub fn zero(lattice: Lattice) -> Self {
        let n = lattice.top() as usize + 1;
        let z = FgGroup::zero();
        let zh = GroupHom::zero(&z, &z);
        let ne = lattice.edges().len();
        MackeyFunctor {
            lattice,
            groups: vec![z; n],
            res: vec![zh.clone(); ne],
            tr: vec![zh.clone(); ne],
            weyl: vec![zh; n],
        }
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn group(&self, l: Level) -> &FgGroup {
        &self.groups[l as usize]
    }

    pub fn weyl(&self, l: Level) -> &GroupHom {
        &self.weyl[l as usize]
    }

    /// Action of `g^x` at level `l`.
    pub fn conj(&self, l: Level, x: u64) -> GroupHom {
        let x = x % self.lattice.index(l);
        self.weyl[l as usize].pow(x)
    }

    /// The stored map on a covering edge.
    pub fn res_edge(&self, h: Level, k: Level) -> &GroupHom {
        &self.res[self.lattice.edge_index(h, k).expect("not a covering edge")]
    }

    pub fn tr_edge(&self, h: Level, k: Level) -> &GroupHom {
        &self.tr[self.lattice.edge_index(h, k).expect("not a covering edge")]
    }

    /// Restriction `M(G/K) -> M(G/H)` for `H ⊆ K`.
    pub fn res(&self, h: Level, k: Level) -> GroupHom {
        let mut acc = GroupHom::identity(self.group(k));
        for (lo, hi) in self.lattice.chain(h, k) {
            acc = acc.then(self.res_edge(lo, hi));
        }
        acc
    }

    /// Transfer `M(G/H) -> M(G/K)` for `H ⊆ K`.
    pub fn tr(&self, h: Level, k: Level) -> GroupHom {
        let mut acc = GroupHom::identity(self.group(h));
        for (lo, hi) in self.lattice.chain(h, k).into_iter().rev() {
            acc = acc.then(self.tr_edge(lo, hi));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(|g| g.is_zero())
    }

    /// Ranks of the level groups, indexed by level.
    pub fn ranks(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank()).collect()
    }

    /// Checks every Mackey axiom on generators.
    pub fn validate(&self) -> Vec<Violation> {
        let lat = self.lattice;
        let name = |l: Level| lat.level_name(l);
        let mut out = Vec::new();
        let mut fail = |identity: String, location: String| out.push(Violation { identity, location });

        for (i, &(h, k)) in lat.edges().iter().enumerate() {
            let r = &self.res[i];
            if GroupHom::new(r.domain().clone(), r.codomain().clone(), r.matrix().clone()).is_err() {
                fail("res well-defined".into(), format!("{}<{}", name(h), name(k)));
            }
            let t = &self.tr[i];
            if GroupHom::new(t.domain().clone(), t.codomain().clone(), t.matrix().clone()).is_err() {
                fail("tr well-defined".into(), format!("{}<{}", name(h), name(k)));
            }
        }
        for l in lat.levels() {
            let w = self.weyl(l);
            if GroupHom::new(w.domain().clone(), w.codomain().clone(), w.matrix().clone()).is_err() {
                fail("weyl well-defined".into(), name(l));
                continue;
            }
            let id = GroupHom::identity(self.group(l));
            if l == lat.top() && !w.same_map(&id) {
                fail("w = id at the top level".into(), name(l));
            }
            if !w.pow(lat.index(l)).same_map(&id) {
                fail("w^[G:H] = id".into(), name(l));
            }
        }
        for &(h, k) in &lat.edges() {
            let loc = format!("{}<{}", name(h), name(k));
            let (r, t) = (self.res_edge(h, k), self.tr_edge(h, k));
            let (wh, wk) = (self.weyl(h), self.weyl(k));
            if !wk.then(r).same_map(&r.then(wh)) {
                fail("res commutes with w".into(), loc.clone());
            }
            if !wh.then(t).same_map(&t.then(wk)) {
                fail("tr commutes with w".into(), loc.clone());
            }
            // Elements of K act trivially through res and tr.
            let ck = self.conj(h, lat.index(k));
            if !r.then(&ck).same_map(r) {
                fail("K-fixed image of res".into(), loc.clone());
            }
            if !ck.then(t).same_map(t) {
                fail("tr is K-invariant".into(), loc);
            }
        }
        if lat.is_pq() {
            // Both routes from the top to the bottom.
            let via = |mid: Level| {
                (
                    self.res_edge(mid, 3).then(self.res_edge(0, mid)),
                    self.tr_edge(0, mid).then(self.tr_edge(mid, 3)),
                )
            };
            let (r1, t1) = via(1);
            let (r2, t2) = via(2);
            if !r1.same_map(&r2) {
                fail("res composites agree".into(), "e<G".into());
            }
            if !t1.same_map(&t2) {
                fail("tr composites agree".into(), "e<G".into());
            }
        }
        for k in lat.levels() {
            for j in lat.subgroups_of(k) {
                for h in lat.subgroups_of(k) {
                    if j == k && h == k {
                        continue;
                    }
                    let lhs = self.tr(h, k).then(&self.res(j, k));
                    let rhs = self.double_coset_sum(j, h, k);
                    if !lhs.same_map(&rhs) {
                        fail(
                            "double coset formula res∘tr".into(),
                            format!("J={}, H={}, K={}", name(j), name(h), name(k)),
                        );
                    }
                }
            }
        }
        out
    }

    /// `Σ_{x ∈ K/JH} tr^J_{J∩H} ∘ c_x ∘ res^H_{J∩H}` as a map `M(G/H) -> M(G/J)`.
    pub fn double_coset_sum(&self, j: Level, h: Level, k: Level) -> GroupHom {
        let lat = self.lattice;
        let m = lat.meet(j, h);
        let reps = lat.rel_index(lat.join(j, h), k);
        let step = lat.index(k);
        let res = self.res(m, h);
        let tr = self.tr(m, j);
        let mut acc = GroupHom::zero(self.group(h), self.group(j));
        for i in 0..reps {
            acc = acc.add(&res.then(&self.conj(m, step * i)).then(&tr));
        }
        acc
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Replaces one stored map; used to build deliberately broken examples.
    pub fn with_tr_edge(&self, h: Level, k: Level, f: GroupHom) -> Self {
        let mut m = self.clone();
        let i = self.lattice.edge_index(h, k).expect("not a covering edge");
        m.tr[i] = f;
        m
    }

    pub fn with_res_edge(&self, h: Level, k: Level, f: GroupHom) -> Self {
        let mut m = self.clone();
        let i = self.lattice.edge_index(h, k).expect("not a covering edge");
        m.res[i] = f;
        m
    }

    /// The same functor viewed over `C_qp`: levels `C_p` and `C_q` trade places.
    pub fn swap_primes(&self) -> Self {
        let Lattice::Pq { p, q } = self.lattice else {
            return self.clone();
        };
        let lat = Lattice::Pq { p: q, q: p };
        let sw = |l: Level| ((l & 1) << 1) | ((l & 2) >> 1);
        let mut groups = vec![FgGroup::zero(); 4];
        let mut weyl = vec![GroupHom::identity(&FgGroup::zero()); 4];
        for l in 0..4u8 {
            groups[sw(l) as usize] = self.groups[l as usize].clone();
            weyl[sw(l) as usize] = self.weyl[l as usize].clone();
        }
        let mut res = Vec::new();
        let mut tr = Vec::new();
        for (h, k) in lat.edges() {
            res.push(self.res_edge(sw(h), sw(k)).clone());
            tr.push(self.tr_edge(sw(h), sw(k)).clone());
        }
        MackeyFunctor {
            lattice: lat,
            groups,
            res,
            tr,
            weyl,
        }
    }
}

impl fmt::Debug for MackeyFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MackeyFunctor over {:?}", self.lattice)?;
        for l in self.lattice.levels() {
            writeln!(
                f,
                "  {}: {}  w={}",
                self.lattice.level_name(l),
                self.group(l),
                self.weyl(l).matrix()
            )?;
        }
        for (h, k) in self.lattice.edges() {
            writeln!(
                f,
                "  {}<{}: res={} tr={}",
                self.lattice.level_name(h),
                self.lattice.level_name(k),
                self.res_edge(h, k).matrix(),
                self.tr_edge(h, k).matrix()
            )?;
        }
        Ok(())
    }
}

/// Level-wise homomorphisms commuting with all structure maps.
#[derive(Clone, PartialEq, Eq)]
pub struct MackeyHom {
    domain: MackeyFunctor,
    codomain: MackeyFunctor,
    maps: Vec<GroupHom>,
}

impl MackeyHom {
    /// Shape-checked constructor; see [`validate`](Self::validate) for the naturality checks.
    pub fn new(domain: MackeyFunctor, codomain: MackeyFunctor, maps: Vec<GroupHom>) -> Result<Self> {
        if domain.lattice != codomain.lattice {
            return Err(Error::LatticeMismatch("domain and codomain differ".into()));
        }
        if maps.len() != domain.groups.len() {
            return Err(Error::Shape("one map per level expected".into()));
        }
        for (l, f) in maps.iter().enumerate() {
            if !f.domain().iso(&domain.groups[l]) || !f.codomain().iso(&codomain.groups[l]) {
                return Err(Error::Shape(format!("map at level {}", l)));
            }
        }
        Ok(MackeyHom { domain, codomain, maps })
    }

    pub fn from_matrices(domain: &MackeyFunctor, codomain: &MackeyFunctor, mats: Vec<IntMatrix>) -> Result<Self> {
        let mut maps = Vec::new();
        for (l, m) in mats.into_iter().enumerate() {
            maps.push(GroupHom::new(domain.groups[l].clone(), codomain.groups[l].clone(), m)?);
        }
        Self::new(domain.clone(), codomain.clone(), maps)
    }

    pub fn identity(m: &MackeyFunctor) -> Self {
        let maps = m.groups.iter().map(GroupHom::identity).collect();
        MackeyHom {
            domain: m.clone(),
            codomain: m.clone(),
            maps,
        }
    }

    pub fn zero(m: &MackeyFunctor, n: &MackeyFunctor) -> Self {
        let maps = m
            .groups
            .iter()
            .zip(&n.groups)
            .map(|(a, b)| GroupHom::zero(a, b))
            .collect();
        MackeyHom {
            domain: m.clone(),
            codomain: n.clone(),
            maps,
        }
    }

    pub fn domain(&self) -> &MackeyFunctor {
        &self.domain
    }

    pub fn codomain(&self) -> &MackeyFunctor {
        &self.codomain
    }

    pub fn at(&self, l: Level) -> &GroupHom {
        &self.maps[l as usize]
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    /// `other ∘ self`
    pub fn then(&self, other: &MackeyHom) -> MackeyHom {
        let maps = self.maps.iter().zip(&other.maps).map(|(f, g)| f.then(g)).collect();
        MackeyHom {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            maps,
        }
    }

    pub fn add(&self, other: &MackeyHom) -> MackeyHom {
        let maps = self.maps.iter().zip(&other.maps).map(|(f, g)| f.add(g)).collect();
        MackeyHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            maps,
        }
    }

    pub fn scale(&self, c: &BigInt) -> MackeyHom {
        let maps = self.maps.iter().map(|f| f.scale(c)).collect();
        MackeyHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            maps,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|f| f.is_zero())
    }

    pub fn same_map(&self, other: &MackeyHom) -> bool {
        self.maps.iter().zip(&other.maps).all(|(f, g)| f.same_map(g))
    }

    /// Invertible at every level.
    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|f| f.domain().iso(f.codomain()) && f.is_iso())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|f| f.is_surjective())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|f| f.is_injective())
    }

    /// Naturality with respect to res, tr and w.
    pub fn validate(&self) -> Vec<Violation> {
        let lat = self.domain.lattice;
        let mut out = Vec::new();
        for (l, f) in self.maps.iter().enumerate() {
            if GroupHom::new(f.domain().clone(), f.codomain().clone(), f.matrix().clone()).is_err() {
                out.push(Violation {
                    identity: "level map well-defined".into(),
                    location: lat.level_name(l as Level),
                });
            }
        }
        for &(h, k) in &lat.edges() {
            let loc = format!("{}<{}", lat.level_name(h), lat.level_name(k));
            let (fh, fk) = (self.at(h), self.at(k));
            if !self
                .domain
                .res_edge(h, k)
                .then(fh)
                .same_map(&fk.then(self.codomain.res_edge(h, k)))
            {
                out.push(Violation {
                    identity: "f commutes with res".into(),
                    location: loc.clone(),
                });
            }
            if !self
                .domain
                .tr_edge(h, k)
                .then(fk)
                .same_map(&fh.then(self.codomain.tr_edge(h, k)))
            {
                out.push(Violation {
                    identity: "f commutes with tr".into(),
                    location: loc,
                });
            }
        }
        for l in lat.levels() {
            let f = self.at(l);
            if !self.domain.weyl(l).then(f).same_map(&f.then(self.codomain.weyl(l))) {
                out.push(Violation {
                    identity: "f commutes with w".into(),
                    location: lat.level_name(l),
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

impl fmt::Debug for MackeyHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MackeyHom")?;
        for l in self.domain.lattice.levels() {
            writeln!(f, "  {}: {:?}", self.domain.lattice.level_name(l), self.at(l))?;
        }
        Ok(())
    }
}

/// A direct sum of functors with its injections and projections.
#[derive(Clone, Debug)]
pub struct MackeySum {
    pub functor: MackeyFunctor,
    pub inj: Vec<MackeyHom>,
    pub proj: Vec<MackeyHom>,
}

pub fn direct_sum_all(summands: &[&MackeyFunctor]) -> Result<MackeySum> {
    let Some(first) = summands.first() else {
        return Err(Error::InvalidParam("empty direct sum".into()));
    };
    let lat = first.lattice;
    if summands.iter().any(|m| m.lattice != lat) {
        return Err(Error::LatticeMismatch("summands live over different lattices".into()));
    }
    let n = lat.top() as usize + 1;
    let sums: Vec<_> = (0..n)
        .map(|l| group_sum(&summands.iter().map(|m| &m.groups[l]).collect::<Vec<_>>()))
        .collect();
    let glue = |l_src: usize, l_dst: usize, pick: &dyn Fn(&MackeyFunctor) -> GroupHom| -> GroupHom {
        let src = &sums[l_src];
        let dst = &sums[l_dst];
        let mut m = IntMatrix::zeros(dst.group.ngens(), src.group.ngens());
        for (i, s) in summands.iter().enumerate() {
            let f = pick(s);
            m = m.add(&dst.inj[i].mul(f.matrix()).mul(&src.proj[i]));
        }
        GroupHom::new_unchecked(src.group.clone(), dst.group.clone(), m)
    };
    let mut res = Vec::new();
    let mut tr = Vec::new();
    for &(h, k) in &lat.edges() {
        res.push(glue(k as usize, h as usize, &|m| m.res_edge(h, k).clone()));
        tr.push(glue(h as usize, k as usize, &|m| m.tr_edge(h, k).clone()));
    }
    let weyl = (0..n).map(|l| glue(l, l, &|m| m.weyl[l].clone())).collect();
    let functor = MackeyFunctor {
        lattice: lat,
        groups: sums.iter().map(|s| s.group.clone()).collect(),
        res,
        tr,
        weyl,
    };
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        let im = (0..n)
            .map(|l| GroupHom::new_unchecked(s.groups[l].clone(), sums[l].group.clone(), sums[l].inj[i].clone()))
            .collect();
        let pm = (0..n)
            .map(|l| GroupHom::new_unchecked(sums[l].group.clone(), s.groups[l].clone(), sums[l].proj[i].clone()))
            .collect();
        inj.push(MackeyHom {
            domain: (*s).clone(),
            codomain: functor.clone(),
            maps: im,
        });
        proj.push(MackeyHom {
            domain: functor.clone(),
            codomain: (*s).clone(),
            maps: pm,
        });
    }
    Ok(MackeySum { functor, inj, proj })
}

pub fn direct_sum(m: &MackeyFunctor, n: &MackeyFunctor) -> Result<MackeyFunctor> {
    Ok(direct_sum_all(&[m, n])?.functor)
}

/// Levelwise groups agree up to isomorphism.
pub fn same_level_groups(m: &MackeyFunctor, n: &MackeyFunctor) -> bool {
    m.lattice == n.lattice && m.groups.iter().zip(&n.groups).all(|(a, b)| a.iso(b))
}

/// `x · id`
pub fn scalar_hom(m: &MackeyFunctor, c: i64) -> MackeyHom {
    MackeyHom::identity(m).scale(&BigInt::from(c))
}
