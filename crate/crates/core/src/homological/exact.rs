//! Kernels and cokernels of Mackey homomorphisms.

use super::super::mackey::functor::{MackeyFunctor, MackeyHom};
use crate::error::{Error, Result};
use crate::linalg::{cokernel_hom, kernel_hom, FgGroup, GroupHom, IntMatrix};

/// Lifts `f: A -> B` through an injective `incl: K -> B` whose image contains `im f`.
fn lift_through(f: &GroupHom, incl: &GroupHom) -> Result<IntMatrix> {
    let k = incl.domain();
    let mut m = IntMatrix::zeros(k.ngens(), f.domain().ngens());
    for j in 0..f.domain().ngens() {
        let y = incl
            .preimage(&f.matrix().column(j))
            .ok_or_else(|| Error::NotWellDefined("induced map leaves the kernel".into()))?;
        m.set_column(j, &y);
    }
    Ok(m)
}

fn induced_on_sub(f: &GroupHom, src: &GroupHom, dst: &GroupHom) -> Result<GroupHom> {
    // f restricted along src and corestricted through dst.
    let m = lift_through(&src.then(f), dst)?;
    GroupHom::new(src.domain().clone(), dst.domain().clone(), m)
}

fn induced_on_quotient(f: &GroupHom, src: &(FgGroup, GroupHom), dst: &(FgGroup, GroupHom)) -> Result<GroupHom> {
    // Lift quotient coordinates back to the source, apply f, then project.
    let lift = &src.0.presentation().from_normal;
    let m = dst.1.matrix().mul(f.matrix()).mul(lift);
    GroupHom::new(src.0.clone(), dst.0.clone(), m)
}

/// Level-wise kernel with the induced structure maps and the inclusion.
pub fn kernel_mackey(f: &MackeyHom) -> Result<(MackeyFunctor, MackeyHom)> {
    let m = f.domain();
    let lat = m.lattice();
    let mut incl = Vec::new();
    let mut groups = Vec::new();
    for l in 0..=lat.top() {
        let (k, i) = kernel_hom(f.at(l))?;
        groups.push(k);
        incl.push(i);
    }
    let mut res = Vec::new();
    let mut tr = Vec::new();
    for (h, k) in lat.edges() {
        res.push(induced_on_sub(m.res_edge(h, k), &incl[k as usize], &incl[h as usize])?);
        tr.push(induced_on_sub(m.tr_edge(h, k), &incl[h as usize], &incl[k as usize])?);
    }
    let mut weyl = Vec::new();
    for l in 0..=lat.top() {
        weyl.push(induced_on_sub(m.weyl(l), &incl[l as usize], &incl[l as usize])?);
    }
    let kf = MackeyFunctor::new(lat, groups, res, tr, weyl)?;
    let inclusion = MackeyHom::new(kf.clone(), m.clone(), incl)?;
    Ok((kf, inclusion))
}

/// Level-wise cokernel with the induced structure maps and the projection.
pub fn cokernel_mackey(f: &MackeyHom) -> Result<(MackeyFunctor, MackeyHom)> {
    let n = f.codomain();
    let lat = n.lattice();
    let mut cok = Vec::new();
    for l in 0..=lat.top() {
        cok.push(cokernel_hom(f.at(l))?);
    }
    let mut res = Vec::new();
    let mut tr = Vec::new();
    for (h, k) in lat.edges() {
        res.push(induced_on_quotient(
            n.res_edge(h, k),
            &cok[k as usize],
            &cok[h as usize],
        )?);
        tr.push(induced_on_quotient(
            n.tr_edge(h, k),
            &cok[h as usize],
            &cok[k as usize],
        )?);
    }
    let mut weyl = Vec::new();
    for l in 0..=lat.top() {
        weyl.push(induced_on_quotient(n.weyl(l), &cok[l as usize], &cok[l as usize])?);
    }
    let groups = cok.iter().map(|c| c.0.clone()).collect();
    let cf = MackeyFunctor::new(lat, groups, res, tr, weyl)?;
    let projection = MackeyHom::new(n.clone(), cf.clone(), cok.into_iter().map(|c| c.1).collect())?;
    Ok((cf, projection))
}
