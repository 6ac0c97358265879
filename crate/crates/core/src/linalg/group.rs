//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group with torsion `[d_1, ..., d_k]` and rank `r` has `k + r`
//! normal-form coordinates: the first `k` are read modulo `d_i`, the last
//! `r` are free. Every group remembers the presentation it was built from
//! together with matrices translating between presentation generators and
//! normal-form coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::smith::{image_basis, kernel_basis, smith, solve};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub gens: usize,
    /// `gens x r`, one relation per column.
    pub rels: IntMatrix,
    /// Presentation coordinates to normal-form coordinates (`n x gens`).
    pub to_normal: IntMatrix,
    /// Normal-form coordinates to presentation coordinates (`gens x n`).
    pub from_normal: IntMatrix,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgGroup {
    torsion: Vec<BigInt>,
    rank: usize,
    presentation: Presentation,
}

impl FgGroup {
    pub fn zero() -> Self {
        Self::from_invariants(0, Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        Self::from_invariants(rank, Vec::new())
    }

    /// `Z/d`, with `d = 0` meaning `Z` and `d = 1` the zero group.
    pub fn cyclic(d: u64) -> Self {
        match d {
            0 => Self::free(1),
            1 => Self::zero(),
            _ => Self::from_invariants(0, vec![BigInt::from(d)]),
        }
    }

    /// Builds a group already in normal form.
    ///
    /// # Panics
    /// If the torsion list is not a divisibility chain of integers `>= 2`.
    pub fn from_invariants(rank: usize, torsion: Vec<BigInt>) -> Self {
        for d in &torsion {
            assert!(*d >= BigInt::from(2), "invariant factors must be at least 2");
        }
        for w in torsion.windows(2) {
            assert!(
                w[1].is_multiple_of(&w[0]),
                "invariant factors must form a divisibility chain"
            );
        }
        let n = torsion.len() + rank;
        let mut rels = IntMatrix::zeros(n, torsion.len());
        for (i, d) in torsion.iter().enumerate() {
            rels.set(i, i, d.clone());
        }
        FgGroup {
            torsion,
            rank,
            presentation: Presentation {
                gens: n,
                rels,
                to_normal: IntMatrix::identity(n),
                from_normal: IntMatrix::identity(n),
            },
        }
    }

    /// The group `Z^gens / (column span of rels)`.
    pub fn presented(gens: usize, rels: &IntMatrix) -> Self {
        assert_eq!(rels.rows(), gens, "relation matrix must have one row per generator");
        let s = smith(rels);
        let diag = s.diagonal();
        let mut torsion_idx = Vec::new();
        let mut torsion = Vec::new();
        for (i, d) in diag.iter().enumerate().take(s.rank) {
            if !d.is_one() {
                torsion_idx.push(i);
                torsion.push(d.clone());
            }
        }
        let free_idx: Vec<usize> = (s.rank..gens).collect();
        let mut keep = torsion_idx;
        keep.extend(free_idx.iter().copied());
        FgGroup {
            rank: free_idx.len(),
            torsion,
            presentation: Presentation {
                gens,
                rels: rels.clone(),
                to_normal: s.u.select_rows(&keep),
                from_normal: s.u_inv.select_cols(&keep),
            },
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Number of normal-form coordinates.
    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.ngens() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            None
        } else {
            Some(self.torsion.iter().product())
        }
    }

    /// Order of the `i`-th normal-form generator, zero for free ones.
    pub fn generator_order(&self, i: usize) -> BigInt {
        self.torsion.get(i).cloned().unwrap_or_default()
    }

    /// Same rank and invariant factors.
    pub fn iso(&self, other: &FgGroup) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }

    /// Relation lattice of the normal form, `n x k`.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.ngens();
        let mut r = IntMatrix::zeros(n, self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            r.set(i, i, d.clone());
        }
        r
    }

    /// Canonical representative of a normal-form coordinate vector.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ngens());
        v.iter()
            .enumerate()
            .map(|(i, x)| match self.torsion.get(i) {
                Some(d) => x.mod_floor(d),
                None => x.clone(),
            })
            .collect()
    }

    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Normal-form coordinates of an element given in presentation coordinates.
    pub fn normalize(&self, pres: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&self.presentation.to_normal.apply(pres))
    }

    /// All elements of a finite group in canonical coordinates.
    ///
    /// # Panics
    /// If the group is infinite or has more than `limit` elements.
    pub fn elements(&self, limit: u64) -> Vec<Vec<BigInt>> {
        let order = self.order().expect("cannot enumerate an infinite group");
        assert!(order <= BigInt::from(limit), "group too large to enumerate");
        let mut out = vec![Vec::new()];
        for d in &self.torsion {
            let d = d.to_u64().unwrap();
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for v in &out {
                for x in 0..d {
                    let mut w = v.clone();
                    w.push(BigInt::from(x));
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    /// Exponent of the torsion subgroup (1 if torsion-free).
    pub fn exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }
}

impl fmt::Display for FgGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        if self.rank == 1 {
            parts.push("Z".into());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{}", d));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgGroup({})", self)
    }
}

/// A direct sum with its structure maps in normal-form coordinates.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FgGroup,
    /// Inclusion of summand `i`, as a `sum.n x n_i` matrix.
    pub inj: Vec<IntMatrix>,
    /// Projection onto summand `i`, as an `n_i x sum.n` matrix.
    pub proj: Vec<IntMatrix>,
}

pub fn direct_sum(groups: &[&FgGroup]) -> DirectSum {
    if groups.iter().all(|g| g.torsion.is_empty()) || groups.len() == 1 {
        // Already in normal form after concatenation.
        if groups.len() == 1 {
            let n = groups[0].ngens();
            return DirectSum {
                group: groups[0].clone(),
                inj: vec![IntMatrix::identity(n)],
                proj: vec![IntMatrix::identity(n)],
            };
        }
        let total: usize = groups.iter().map(|g| g.rank).sum();
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut off = 0;
        for g in groups {
            let mut i = IntMatrix::zeros(total, g.rank);
            let mut p = IntMatrix::zeros(g.rank, total);
            for k in 0..g.rank {
                i.set(off + k, k, BigInt::one());
                p.set(k, off + k, BigInt::one());
            }
            off += g.rank;
            inj.push(i);
            proj.push(p);
        }
        return DirectSum {
            group: FgGroup::free(total),
            inj,
            proj,
        };
    }
    let blocks: Vec<IntMatrix> = groups.iter().map(|g| g.relation_matrix()).collect();
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    let rels = IntMatrix::block_diag(&refs);
    let gens = rels.rows();
    let group = FgGroup::presented(gens, &rels);
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    let mut off = 0;
    for g in groups {
        let n = g.ngens();
        let cols: Vec<usize> = (off..off + n).collect();
        inj.push(group.presentation.to_normal.select_cols(&cols));
        proj.push(group.presentation.from_normal.select_rows(&cols));
        off += n;
    }
    DirectSum { group, inj, proj }
}

/// A homomorphism between groups, acting on normal-form coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain: FgGroup,
    codomain: FgGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Checks well-definedness and reduces entries into canonical range.
    pub fn new(domain: FgGroup, codomain: FgGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != codomain.ngens() || matrix.cols() != domain.ngens() {
            return Err(Error::Shape(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.ngens(),
                domain.ngens()
            )));
        }
        for (j, d) in domain.torsion.iter().enumerate() {
            let col: Vec<BigInt> = matrix.column(j).iter().map(|x| x * d).collect();
            if !codomain.is_zero_element(&col) {
                return Err(Error::NotWellDefined(format!(
                    "generator {} of order {} maps to an element of different order",
                    j, d
                )));
            }
        }
        Ok(Self::new_unchecked(domain, codomain, matrix))
    }

    /// Skips the well-definedness check; entries are still reduced.
    pub fn new_unchecked(domain: FgGroup, codomain: FgGroup, matrix: IntMatrix) -> Self {
        let mut m = matrix;
        for (i, d) in codomain.torsion.iter().enumerate() {
            for j in 0..m.cols() {
                let v = m.get(i, j).mod_floor(d);
                m.set(i, j, v);
            }
        }
        GroupHom {
            domain,
            codomain,
            matrix: m,
        }
    }

    /// A hom given on presentation generators of both sides.
    pub fn from_presentation_matrix(domain: FgGroup, codomain: FgGroup, m: &IntMatrix) -> Result<Self> {
        let nf = codomain
            .presentation
            .to_normal
            .mul(m)
            .mul(&domain.presentation.from_normal);
        Self::new(domain, codomain, nf)
    }

    pub fn identity(g: &FgGroup) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), IntMatrix::identity(g.ngens()))
    }

    pub fn zero(domain: &FgGroup, codomain: &FgGroup) -> Self {
        Self::new_unchecked(
            domain.clone(),
            codomain.clone(),
            IntMatrix::zeros(codomain.ngens(), domain.ngens()),
        )
    }

    /// Multiplication by an integer on a group.
    pub fn scalar(g: &FgGroup, c: &BigInt) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), IntMatrix::identity(g.ngens()).scale(c))
    }

    pub fn domain(&self) -> &FgGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.codomain.reduce(&self.matrix.apply(v))
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        assert!(self.codomain.iso(&other.domain), "composition of incompatible homs");
        GroupHom::new_unchecked(
            self.domain.clone(),
            other.codomain.clone(),
            other.matrix.mul(&self.matrix),
        )
    }

    pub fn add(&self, other: &GroupHom) -> GroupHom {
        GroupHom::new_unchecked(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix),
        )
    }

    pub fn sub(&self, other: &GroupHom) -> GroupHom {
        GroupHom::new_unchecked(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.sub(&other.matrix),
        )
    }

    pub fn scale(&self, c: &BigInt) -> GroupHom {
        GroupHom::new_unchecked(self.domain.clone(), self.codomain.clone(), self.matrix.scale(c))
    }

    pub fn pow(&self, e: u64) -> GroupHom {
        let mut acc = GroupHom::identity(&self.domain);
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Equality as maps (entries are kept reduced).
    pub fn same_map(&self, other: &GroupHom) -> bool {
        self.matrix == other.matrix
    }

    /// Some preimage of `v`, if `v` lies in the image.
    pub fn preimage(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let big = self.matrix.hstack(&self.codomain.relation_matrix());
        let x = solve(&big, v)?;
        Some(self.domain.reduce(&x[..self.domain.ngens()]))
    }

    pub fn is_injective(&self) -> bool {
        kernel_hom(self).map(|(k, _)| k.is_zero()).unwrap_or(false)
    }

    pub fn is_surjective(&self) -> bool {
        cokernel_hom(self).map(|(c, _)| c.is_zero()).unwrap_or(false)
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} : {}", self.domain, self.codomain, self.matrix)
    }
}

fn check(f: &GroupHom) -> Result<()> {
    GroupHom::new(f.domain.clone(), f.codomain.clone(), f.matrix.clone()).map(|_| ())
}

/// Kernel with its inclusion into the domain.
pub fn kernel_hom(f: &GroupHom) -> Result<(FgGroup, GroupHom)> {
    check(f)?;
    let a = &f.domain;
    let na = a.ngens();
    let big = f.matrix.hstack(&f.codomain.relation_matrix());
    let kb = kernel_basis(&big);
    let top = kb.block(0, 0, na, kb.cols());
    // Generators of the lattice {x : f(x) = 0}, which contains the relations of `a`.
    let lattice = if top.cols() == 0 { top } else { image_basis(&top) };
    let t = lattice.cols();
    let rel_ker = kernel_basis(&lattice.hstack(&a.relation_matrix().neg()));
    let rels = rel_ker.block(0, 0, t, rel_ker.cols());
    let k = FgGroup::presented(t, &rels);
    let incl = lattice.mul(&k.presentation.from_normal);
    let inclusion = GroupHom::new_unchecked(k.clone(), a.clone(), incl);
    Ok((k, inclusion))
}

/// Cokernel with the projection from the codomain.
pub fn cokernel_hom(f: &GroupHom) -> Result<(FgGroup, GroupHom)> {
    check(f)?;
    let b = &f.codomain;
    let rels = b.relation_matrix().hstack(&f.matrix);
    let c = FgGroup::presented(b.ngens(), &rels);
    let proj = GroupHom::new_unchecked(b.clone(), c.clone(), c.presentation.to_normal.clone());
    Ok((c, proj))
}

/// Image of `f` as an abstract group, with the inclusion into the codomain.
pub fn image_hom(f: &GroupHom) -> Result<(FgGroup, GroupHom)> {
    let (_, incl) = kernel_hom(f)?;
    let (q, _) = cokernel_hom(&incl)?;
    // The induced map dom/ker -> cod.
    let m = f.matrix.mul(&q.presentation.from_normal);
    let into = GroupHom::new_unchecked(q.clone(), f.codomain.clone(), m);
    Ok((q, into))
}

/// `Hom(A, B)` with the data needed to move between homs and coordinates.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub group: FgGroup,
    pub domain: FgGroup,
    pub codomain: FgGroup,
    /// For each domain generator, the subgroup of `B` its image may lie in.
    parts: Vec<GroupHom>,
    sum: DirectSum,
}

impl HomGroup {
    /// The hom with normal-form coordinates `c` in `Hom(A, B)`.
    pub fn hom_at(&self, c: &[BigInt]) -> GroupHom {
        let pres = self.sum.group.presentation.from_normal.apply(c);
        let mut m = IntMatrix::zeros(self.codomain.ngens(), self.domain.ngens());
        let mut off = 0;
        for (j, part) in self.parts.iter().enumerate() {
            let n = part.domain().ngens();
            let col = part.matrix().apply(&pres[off..off + n]);
            m.set_column(j, &col);
            off += n;
        }
        GroupHom::new_unchecked(self.domain.clone(), self.codomain.clone(), m)
    }

    /// Generating homs, one per normal-form generator of `Hom(A, B)`.
    pub fn generators(&self) -> Vec<GroupHom> {
        (0..self.group.ngens())
            .map(|i| {
                let mut e = vec![BigInt::zero(); self.group.ngens()];
                e[i] = BigInt::one();
                self.hom_at(&e)
            })
            .collect()
    }

    /// Normal-form coordinates of a hom.
    pub fn coordinates(&self, h: &GroupHom) -> Vec<BigInt> {
        let mut pres = Vec::new();
        for (j, part) in self.parts.iter().enumerate() {
            let col = h.matrix().column(j);
            let y = part.preimage(&col).expect("hom column outside the admissible subgroup");
            pres.extend(y);
        }
        self.group.reduce(&self.sum.group.presentation.to_normal.apply(&pres))
    }
}

/// `Hom(A, B)`, computed summand by summand: `Hom(Z, B) = B`, `Hom(Z/d, B) = B[d]`.
pub fn hom_group(a: &FgGroup, b: &FgGroup) -> HomGroup {
    let mut parts = Vec::new();
    for j in 0..a.ngens() {
        let d = a.generator_order(j);
        if d.is_zero() {
            parts.push(GroupHom::identity(b));
        } else {
            let (_, incl) = kernel_hom(&GroupHom::scalar(b, &d)).expect("scalar map is well defined");
            parts.push(incl);
        }
    }
    let doms: Vec<&FgGroup> = parts.iter().map(|p| p.domain()).collect();
    let sum = if doms.is_empty() {
        DirectSum {
            group: FgGroup::zero(),
            inj: Vec::new(),
            proj: Vec::new(),
        }
    } else {
        direct_sum(&doms)
    };
    HomGroup {
        group: sum.group.clone(),
        domain: a.clone(),
        codomain: b.clone(),
        parts,
        sum,
    }
}

/// `A ⊗ B` presented on the products of normal-form generators.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub group: FgGroup,
    pub left: FgGroup,
    pub right: FgGroup,
}

impl Tensor {
    /// Normal-form coordinates of `x ⊗ y`.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let mut pres = Vec::with_capacity(x.len() * y.len());
        for a in x {
            for b in y {
                pres.push(a * b);
            }
        }
        self.group.normalize(&pres)
    }
}

pub fn tensor_group(a: &FgGroup, b: &FgGroup) -> Tensor {
    let (na, nb) = (a.ngens(), b.ngens());
    let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            let (da, db) = (a.generator_order(i), b.generator_order(j));
            let g = if da.is_zero() {
                db
            } else if db.is_zero() {
                da
            } else {
                da.gcd(&db)
            };
            if !g.is_zero() {
                let mut c = vec![BigInt::zero(); na * nb];
                c[i * nb + j] = g;
                rel_cols.push(c);
            }
        }
    }
    let mut rels = IntMatrix::zeros(na * nb, rel_cols.len());
    for (k, c) in rel_cols.iter().enumerate() {
        rels.set_column(k, c);
    }
    Tensor {
        group: FgGroup::presented(na * nb, &rels),
        left: a.clone(),
        right: b.clone(),
    }
}

/// `f ⊗ g : A ⊗ B -> A' ⊗ B'` between the given tensor groups.
pub fn tensor_hom(f: &GroupHom, g: &GroupHom, src: &Tensor, dst: &Tensor) -> GroupHom {
    let k = f.matrix().kron(g.matrix());
    let m = dst
        .group
        .presentation
        .to_normal
        .mul(&k)
        .mul(&src.group.presentation.from_normal);
    GroupHom::new_unchecked(src.group.clone(), dst.group.clone(), m)
}

pub fn iso_groups(a: &FgGroup, b: &FgGroup) -> bool {
    a.iso(b)
}

/// Element count of the subgroup generated by the columns of `m` inside `g`,
/// by closure; used only by tests on small finite groups.
pub fn span_size(g: &FgGroup, gens: &[Vec<BigInt>], limit: usize) -> usize {
    use std::collections::HashSet;
    let zero = vec![BigInt::zero(); g.ngens()];
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for h in gens {
            let y = g.reduce(&x.iter().zip(h).map(|(a, b)| a + b).collect::<Vec<_>>());
            if seen.insert(y.clone()) {
                assert!(seen.len() <= limit, "span exceeds enumeration limit");
                frontier.push(y);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ints;
    use num_traits::Signed;

    fn z(d: u64) -> FgGroup {
        FgGroup::cyclic(d)
    }

    #[test]
    fn presented_examples() {
        let g = FgGroup::presented(1, &IntMatrix::from_i64(1, 1, &[3]));
        assert!(g.iso(&z(3)));
        let g = FgGroup::presented(2, &IntMatrix::zeros(2, 0));
        assert!(g.iso(&FgGroup::free(2)));
        let g = FgGroup::presented(2, &IntMatrix::from_i64(2, 2, &[2, 0, 0, 4]));
        assert_eq!(g.torsion(), &ints(&[2, 4])[..]);
        assert_eq!(g.elements(100).len(), 8);
    }

    #[test]
    fn witnesses_round_trip() {
        let rels = IntMatrix::from_i64(3, 2, &[2, 4, 6, 8, 0, 3]);
        let g = FgGroup::presented(3, &rels);
        let p = g.presentation();
        let id = p.to_normal.mul(&p.from_normal);
        assert_eq!(id, IntMatrix::identity(g.ngens()));
        // Each relation normalizes to zero.
        for j in 0..rels.cols() {
            assert!(g.normalize(&rels.column(j)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kernels() {
        // x3 on Z
        let f = GroupHom::scalar(&z(0), &BigInt::from(3));
        assert!(kernel_hom(&f).unwrap().0.is_zero());
        // Z -> Z/3
        let q = GroupHom::new(z(0), z(3), IntMatrix::from_i64(1, 1, &[1])).unwrap();
        let (k, i) = kernel_hom(&q).unwrap();
        assert!(k.iso(&z(0)));
        assert_eq!(i.matrix().get(0, 0).abs(), BigInt::from(3));
        // x2 on Z/4: kernel {0, 2}
        let f = GroupHom::scalar(&z(4), &BigInt::from(2));
        let (k, i) = kernel_hom(&f).unwrap();
        assert!(k.iso(&z(2)));
        assert_eq!(i.apply(&ints(&[1])), ints(&[2]));
    }

    #[test]
    fn cokernels() {
        let f = GroupHom::scalar(&z(0), &BigInt::from(5));
        assert!(cokernel_hom(&f).unwrap().0.iso(&z(5)));
        assert!(cokernel_hom(&GroupHom::identity(&z(7))).unwrap().0.is_zero());
        let f = GroupHom::new(FgGroup::free(2), z(0), IntMatrix::from_i64(1, 2, &[1, 3])).unwrap();
        assert!(cokernel_hom(&f).unwrap().0.is_zero());
        let a = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]);
        let f = GroupHom::new(FgGroup::free(2), FgGroup::free(2), a).unwrap();
        let (c, _) = cokernel_hom(&f).unwrap();
        assert!(iso_groups(&c, &FgGroup::from_invariants(0, ints(&[2, 4]))));
    }

    #[test]
    fn ill_defined_rejected() {
        let bad = GroupHom::new(z(2), z(0), IntMatrix::from_i64(1, 1, &[1]));
        assert!(matches!(bad, Err(Error::NotWellDefined(_))));
    }

    #[test]
    fn hom_groups() {
        assert!(hom_group(&z(3), &z(0)).group.is_zero());
        assert!(hom_group(&z(0), &z(3)).group.iso(&z(3)));
        let h = hom_group(&z(4), &z(6));
        assert!(h.group.iso(&z(2)));
        for g in h.generators() {
            assert!(GroupHom::new(g.domain().clone(), g.codomain().clone(), g.matrix().clone()).is_ok());
            let c = h.coordinates(&g);
            assert!(h.hom_at(&c).same_map(&g));
        }
    }

    #[test]
    fn tensors() {
        assert!(tensor_group(&z(3), &z(5)).group.is_zero());
        assert!(tensor_group(&z(0), &z(6)).group.iso(&z(6)));
        assert!(tensor_group(&z(4), &z(6)).group.iso(&z(2)));
        let t = tensor_group(&FgGroup::free(2), &FgGroup::free(3));
        assert!(t.group.iso(&FgGroup::free(6)));
    }

    #[test]
    fn direct_sum_renormalizes() {
        let s = direct_sum(&[&z(2), &z(3)]);
        assert!(s.group.iso(&z(6)));
        let x = s.inj[1].apply(&ints(&[1]));
        let back = s.proj[1].apply(&x);
        assert_eq!(z(3).reduce(&back), ints(&[1]));
    }
}
