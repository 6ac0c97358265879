//! Projective covers by representables and short resolutions.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::exact::kernel_mackey;
use crate::error::Result;
use crate::linalg::{cokernel_hom, FgGroup, GroupHom, IntMatrix};
use crate::mackey::burnside::{basis, representable, span_action, SpanSum};
use crate::mackey::functor::{MackeyFunctor, MackeyHom};
use crate::mackey::lattice::{Lattice, Level};

/// Order in which levels are visited when choosing cover generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoverOrder {
    /// Top level first, generators in normal-form order.
    #[default]
    TopDown,
    /// Bottom level first, generators reversed.
    BottomUp,
}

/// A direct sum of representables `⊕ A_{G/H_i}`, in block coordinates.
#[derive(Clone, Debug)]
pub struct FreeFunctor {
    pub summands: Vec<Level>,
    pub functor: MackeyFunctor,
}

impl FreeFunctor {
    pub fn new(lat: &Lattice, summands: Vec<Level>) -> Result<Self> {
        let reps: Vec<MackeyFunctor> = summands.iter().map(|&h| cached_representable(lat, h)).collect();
        let n = lat.top() as usize + 1;
        let groups = (0..n as Level)
            .map(|l| FgGroup::free(reps.iter().map(|r| r.group(l).ngens()).sum()))
            .collect();
        let diag = |pick: &dyn Fn(&MackeyFunctor) -> IntMatrix| -> IntMatrix {
            let ms: Vec<IntMatrix> = reps.iter().map(pick).collect();
            IntMatrix::block_diag(&ms.iter().collect::<Vec<_>>())
        };
        let mut res = Vec::new();
        let mut tr = Vec::new();
        for (h, k) in lat.edges() {
            res.push(diag(&|r| r.res_edge(h, k).matrix().clone()));
            tr.push(diag(&|r| r.tr_edge(h, k).matrix().clone()));
        }
        let weyl = (0..n as Level).map(|l| diag(&|r| r.weyl(l).matrix().clone())).collect();
        let functor = MackeyFunctor::from_matrices(*lat, groups, res, tr, weyl)?;
        Ok(FreeFunctor { summands, functor })
    }

    /// The map out of this sum given by elements `x_i ∈ N(G/H_i)`.
    pub fn map_out(&self, n: &MackeyFunctor, xs: &[Vec<BigInt>]) -> Result<MackeyHom> {
        let mats = (0..=n.lattice().top())
            .map(|k| columns_at(&self.summands, n, xs, k))
            .collect();
        MackeyHom::from_matrices(&self.functor, n, mats)
    }

    /// Span coefficients of an element of `P(G/K)`, split by summand.
    pub fn spans_of(&self, k: Level, v: &[BigInt]) -> Vec<SpanSum> {
        let lat = self.functor.lattice();
        let mut out = Vec::new();
        let mut off = 0;
        for &h in &self.summands {
            let b = basis(&lat, k, h);
            let mut s = SpanSum::new();
            for (i, sp) in b.iter().enumerate() {
                if !v[off + i].is_zero() {
                    s.push((*sp, v[off + i].clone()));
                }
            }
            off += b.len();
            out.push(s);
        }
        out
    }
}

/// Columns of the map `A_{G/H} -> N` picked out by `x ∈ N(G/H)`, one list per level.
type Block = Vec<Vec<Vec<BigInt>>>;

fn block(h: Level, n: &MackeyFunctor, x: &[BigInt]) -> Block {
    let lat = n.lattice();
    (0..=lat.top())
        .map(|k| basis(&lat, k, h).iter().map(|s| span_action(s, n).apply(x)).collect())
        .collect()
}

fn assemble(blocks: &[&Block], n: &MackeyFunctor, k: Level) -> IntMatrix {
    let cols: Vec<&Vec<BigInt>> = blocks.iter().flat_map(|b| &b[k as usize]).collect();
    let mut m = IntMatrix::zeros(n.group(k).ngens(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        m.set_column(j, c);
    }
    m
}

/// Level-`k` matrix of the map `⊕ A_{G/H_i} -> N` picked out by `x_i ∈ N(G/H_i)`.
fn columns_at(summands: &[Level], n: &MackeyFunctor, xs: &[Vec<BigInt>], k: Level) -> IntMatrix {
    let blocks: Vec<Block> = summands.iter().zip(xs).map(|(&h, x)| block(h, n, x)).collect();
    assemble(&blocks.iter().collect::<Vec<_>>(), n, k)
}

fn onto(blocks: &[&Block], n: &MackeyFunctor, k: Level) -> Result<bool> {
    let cols = assemble(blocks, n, k);
    let f = GroupHom::new_unchecked(FgGroup::free(cols.cols()), n.group(k).clone(), cols);
    Ok(cokernel_hom(&f)?.0.is_zero())
}

type RepKey = (Lattice, Level);

/// Representables are rebuilt constantly while resolving; they only depend on the lattice and level.
pub fn cached_representable(lat: &Lattice, h: Level) -> MackeyFunctor {
    static CACHE: OnceLock<RwLock<HashMap<RepKey, MackeyFunctor>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(r) = cache.read().expect("cache poisoned").get(&(*lat, h)) {
        return r.clone();
    }
    let r = representable(lat, h);
    cache.write().expect("cache poisoned").insert((*lat, h), r.clone());
    r
}

/// A surjection from a sum of representables.
#[derive(Clone, Debug)]
pub struct Cover {
    pub free: FreeFunctor,
    /// Generator chosen for each summand, in the summand's level.
    pub gens: Vec<Vec<BigInt>>,
    pub eps: MackeyHom,
}

/// Covers `m` by representables, adding at each level only what the
/// summands chosen so far fail to reach.
pub fn projective_cover_step(m: &MackeyFunctor, order: CoverOrder) -> Result<Cover> {
    let lat = m.lattice();
    let mut levels = lat.levels();
    if order == CoverOrder::BottomUp {
        levels.reverse();
    }
    let mut summands: Vec<Level> = Vec::new();
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    for &h in &levels {
        // One generator at a time: a single summand often covers a whole orbit.
        loop {
            let cols = assemble(&blocks.iter().collect::<Vec<_>>(), m, h);
            let eps_h = GroupHom::new_unchecked(FgGroup::free(cols.cols()), m.group(h).clone(), cols);
            let (q, _) = cokernel_hom(&eps_h)?;
            if q.is_zero() {
                break;
            }
            let i = match order {
                CoverOrder::TopDown => 0,
                CoverOrder::BottomUp => q.ngens() - 1,
            };
            let x = m.group(h).reduce(&q.presentation().from_normal.column(i));
            blocks.push(block(h, m, &x));
            summands.push(h);
            gens.push(x);
        }
    }
    // Drop summands the others already account for.
    let mut i = summands.len();
    while i > 0 {
        i -= 1;
        let rest: Vec<&Block> = blocks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, b)| b)
            .collect();
        let mut all = true;
        for k in lat.levels() {
            if !onto(&rest, m, k)? {
                all = false;
                break;
            }
        }
        if all {
            summands.remove(i);
            gens.remove(i);
            blocks.remove(i);
        }
    }
    let free = FreeFunctor::new(&lat, summands)?;
    let eps = free.map_out(m, &gens)?;
    Ok(Cover { free, gens, eps })
}

/// Differential between free functors, recorded as span sums
/// (`entries[j][i]`: from summand `j` of the source to summand `i` of the target).
#[derive(Clone, Debug)]
pub struct SpanMatrix {
    pub entries: Vec<Vec<SpanSum>>,
    pub hom: MackeyHom,
}

/// `P_2 -> P_1 -> P_0 -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    pub target: MackeyFunctor,
    pub terms: Vec<FreeFunctor>,
    pub eps: MackeyHom,
    /// `d[0] = d_1 : P_1 -> P_0`, `d[1] = d_2 : P_2 -> P_1`.
    pub d: Vec<SpanMatrix>,
}

fn differential(src: &Cover, incl: &MackeyHom, dst: &FreeFunctor) -> SpanMatrix {
    let hom = src.eps.then(incl);
    let entries = src
        .free
        .summands
        .iter()
        .zip(&src.gens)
        .map(|(&h, x)| dst.spans_of(h, &incl.at(h).apply(x)))
        .collect();
    SpanMatrix { entries, hom }
}

/// A resolution of length `len ≤ 2`.
pub fn resolution(m: &MackeyFunctor, len: usize, order: CoverOrder) -> Result<ProjectiveResolution> {
    assert!(len <= 2, "resolutions stop at length 2");
    let c0 = projective_cover_step(m, order)?;
    let mut terms = vec![c0.free.clone()];
    let mut d = Vec::new();
    let mut prev_eps = c0.eps.clone();
    for _ in 0..len {
        let (k, incl) = kernel_mackey(&prev_eps)?;
        let c = projective_cover_step(&k, order)?;
        let dst = terms.last().expect("resolution has a first term");
        d.push(differential(&c, &incl, dst));
        terms.push(c.free.clone());
        prev_eps = c.eps;
    }
    Ok(ProjectiveResolution {
        target: m.clone(),
        terms,
        eps: c0.eps,
        d,
    })
}

impl ProjectiveResolution {
    /// Surjectivity of the augmentation, `d² = 0` and exactness at `P_0`, `P_1`.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.eps.is_surjective() {
            out.push("augmentation not surjective".into());
        }
        let maps: Vec<&MackeyHom> = std::iter::once(&self.eps)
            .chain(self.d.iter().map(|s| &s.hom))
            .collect();
        for w in 0..maps.len().saturating_sub(1) {
            let (inner, outer) = (maps[w + 1], maps[w]);
            if !inner.then(outer).is_zero() {
                out.push(format!("composite at P_{} is nonzero", w));
            }
            let lat = self.target.lattice();
            for l in lat.levels() {
                let (k, _) = crate::linalg::kernel_hom(outer.at(l)).expect("well-defined");
                let (im, _) = crate::linalg::image_hom(inner.at(l)).expect("well-defined");
                if !k.iso(&im) {
                    out.push(format!("not exact at P_{} level {}", w, lat.level_name(l)));
                }
            }
        }
        out
    }
}

/// `Hom(P, N) = ⊕ N(G/H_i)`.
pub fn hom_out_group(p: &FreeFunctor, n: &MackeyFunctor) -> crate::linalg::DirectSum {
    let groups: Vec<&FgGroup> = p.summands.iter().map(|&h| n.group(h)).collect();
    if groups.is_empty() {
        return crate::linalg::DirectSum {
            group: FgGroup::zero(),
            inj: Vec::new(),
            proj: Vec::new(),
        };
    }
    crate::linalg::direct_sum(&groups)
}

/// `- ∘ d : Hom(P_target, N) -> Hom(P_source, N)` via Yoneda.
pub fn hom_out_map(d: &SpanMatrix, src: &FreeFunctor, dst: &FreeFunctor, n: &MackeyFunctor) -> GroupHom {
    let from = hom_out_group(dst, n);
    let to = hom_out_group(src, n);
    let mut m = IntMatrix::zeros(to.group.ngens(), from.group.ngens());
    for (j, (&hj, row)) in src.summands.iter().zip(&d.entries).enumerate() {
        for (i, (&hi, spans)) in dst.summands.iter().zip(row).enumerate() {
            if spans.is_empty() {
                continue;
            }
            let act = crate::mackey::burnside::span_sum_action(spans, hj, hi, n);
            m = m.add(&to.inj[j].mul(act.matrix()).mul(&from.proj[i]));
        }
    }
    GroupHom::new_unchecked(from.group, to.group, m)
}
