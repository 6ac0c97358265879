//! Even cell complexes and free cohomology.
//!
//! A complex is a finite base `G`-set plus cells `C_pq ×_K D(V)` attached in
//! stages. When every cell is even, cells in later stages dominate earlier
//! ones in the `≪` order and the relevant cohomology groups vanish, the
//! cohomology is free on one generator per base orbit and per cell.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cohomology::{classify_point, entry_groups, lewis_entry, FixedDims, TableEntry, VirtualRep};
use crate::error::{Error, Result};
use crate::linalg::FgGroup;
use crate::mackey::catalog::Side;
use crate::mackey::{Lattice, Level, CP, CPQ, CQ, E};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub stage: usize,
    /// Isotropy `K` of the cell `C_pq ×_K D(V)`.
    pub orbit: Level,
    pub rep: VirtualRep,
    pub label: String,
}

impl Cell {
    pub fn dims(&self) -> FixedDims {
        self.rep.fixed_dims()
    }

    pub fn is_even(&self) -> bool {
        self.rep.trivial_part() % 2 == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    pub p: u64,
    pub q: u64,
    /// Orbit types of the zero-skeleton `X₀`.
    pub base: Vec<Level>,
    /// Cells in construction order; stages never decrease.
    pub cells: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    trivial: i64,
    #[serde(default)]
    twists: BTreeMap<i64, i64>,
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    stage: usize,
    #[serde(rename = "K")]
    orbit: String,
    rep: RepJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    p: u64,
    q: u64,
    #[serde(default)]
    base: Vec<String>,
    #[serde(default)]
    cells: Vec<CellJson>,
}

impl CellComplex {
    pub fn new(p: u64, q: u64, base: Vec<Level>) -> Result<Self> {
        let lat = Lattice::pq(p, q)?;
        if let Some(&b) = base.iter().find(|&&b| b > lat.top()) {
            return Err(Error::InvalidParam(format!("no level {}", b)));
        }
        Ok(CellComplex {
            p,
            q,
            base,
            cells: Vec::new(),
        })
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::pq(self.p, self.q).expect("checked on construction")
    }

    pub fn push(&mut self, cell: Cell) -> Result<()> {
        if cell.rep.primes() != (self.p, self.q) {
            return Err(Error::InvalidParam(format!(
                "cell {} is over the wrong group",
                cell.label
            )));
        }
        if !cell.rep.is_honest() {
            return Err(Error::InvalidParam(format!(
                "cell {} has a virtual representation {}",
                cell.label, cell.rep
            )));
        }
        if cell.orbit > CPQ {
            return Err(Error::InvalidParam(format!(
                "cell {} has no orbit level {}",
                cell.label, cell.orbit
            )));
        }
        if let Some(last) = self.cells.last() {
            if cell.stage < last.stage {
                return Err(Error::InvalidParam(format!(
                    "cell {} at stage {} follows stage {}",
                    cell.label, cell.stage, last.stage
                )));
            }
        }
        self.cells.push(cell);
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let lat = self.lattice();
        let cj = ComplexJson {
            p: self.p,
            q: self.q,
            base: self.base.iter().map(|&b| lat.level_name(b)).collect(),
            cells: self
                .cells
                .iter()
                .map(|c| CellJson {
                    stage: c.stage,
                    orbit: lat.level_name(c.orbit),
                    rep: RepJson {
                        trivial: c.rep.trivial_part(),
                        twists: c.rep.twists().iter().map(|(&k, &n)| (k as i64, n)).collect(),
                    },
                    label: Some(c.label.clone()),
                })
                .collect(),
        };
        serde_json::to_value(cj).expect("complex serializes")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let cj: ComplexJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("complex: {}", e)))?;
        let lat = Lattice::pq(cj.p, cj.q)?;
        let base = cj.base.iter().map(|b| lat.parse_level(b)).collect::<Result<Vec<_>>>()?;
        let mut x = CellComplex::new(cj.p, cj.q, base)?;
        for (i, c) in cj.cells.into_iter().enumerate() {
            let mut rep = VirtualRep::trivial(cj.p, cj.q, c.rep.trivial)?;
            for (k, n) in c.rep.twists {
                rep.add_twist(k, n);
            }
            x.push(Cell {
                stage: c.stage,
                orbit: lat.parse_level(&c.orbit)?,
                rep,
                label: c.label.unwrap_or_else(|| format!("cell {}", i)),
            })?;
        }
        Ok(x)
    }
}

/// `W ≪ V` on fixed-point dimensions: a strict drop `|W^S| < |V^S|` forces
/// `|W^T| ≤ |V^T|` for every `T ⊇ S`. The strong form also admits a strict
/// drop at `e` alone when the `C_p` and `C_q` dimensions agree.
pub fn ll_dims(w: &FixedDims, v: &FixedDims, strong: bool) -> bool {
    let (w, v) = (w.as_array(), v.as_array());
    for s in 0..4usize {
        if w[s] >= v[s] {
            continue;
        }
        if strong && s == E as usize && w[CP as usize] == v[CP as usize] && w[CQ as usize] == v[CQ as usize] {
            continue;
        }
        if (0..4usize).filter(|&t| t & s == s).any(|t| w[t] > v[t]) {
            return false;
        }
    }
    true
}

pub fn ll(w: &VirtualRep, v: &VirtualRep, strong: bool) -> bool {
    ll_dims(&w.fixed_dims(), &v.fixed_dims(), strong)
}

/// A base orbit or a cell, as the source or target of an attaching question.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Piece {
    label: String,
    orbit: Level,
    dims: FixedDims,
    /// `None` for the base.
    stage: Option<usize>,
}

fn pieces(x: &CellComplex) -> Vec<Piece> {
    let base = x.base.iter().enumerate().map(|(i, &b)| Piece {
        label: if x.base.len() == 1 {
            "0".into()
        } else {
            format!("0[{}]", i)
        },
        orbit: b,
        dims: FixedDims::new(0, 0, 0, 0),
        stage: None,
    });
    base.chain(x.cells.iter().map(|c| Piece {
        label: c.label.clone(),
        orbit: c.orbit,
        dims: c.dims(),
        stage: Some(c.stage),
    }))
    .collect()
}

fn earlier(a: &Piece, b: &Piece) -> bool {
    match (a.stage, b.stage) {
        (None, Some(_)) => true,
        (Some(s), Some(t)) => s < t,
        _ => false,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvenTypeReport {
    /// Labels of cells with an odd trivial part.
    pub odd: Vec<String>,
    /// `(W, V)` with `W` in an earlier stage and `W ≪ V` false.
    pub ll_violations: Vec<(String, String)>,
}

impl EvenTypeReport {
    pub fn passed(&self) -> bool {
        self.odd.is_empty() && self.ll_violations.is_empty()
    }
}

/// Every cell even, and `W ≪ V` for every pair of pieces in increasing stages.
pub fn check_even_type(x: &CellComplex) -> EvenTypeReport {
    let mut r = EvenTypeReport {
        odd: x
            .cells
            .iter()
            .filter(|c| !c.is_even())
            .map(|c| c.label.clone())
            .collect(),
        ..Default::default()
    };
    let ps = pieces(x);
    for a in &ps {
        for b in &ps {
            if earlier(a, b) && !ll_dims(&a.dims, &b.dims, false) {
                r.ll_violations.push((a.label.clone(), b.label.clone()));
            }
        }
    }
    r
}

/// The group whose vanishing lets a `C_pq ×_{K'} D(V)` cell attach freely
/// after `C_pq ×_K D(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingGroup {
    /// Fixed dimensions of `W + 1 − V`.
    pub alpha: FixedDims,
    /// `K ∩ K'`, the level at which the group lives.
    pub level: Level,
    pub group: FgGroup,
}

/// Computes the obstruction group for `(W, K)` before `(V, K')`.
///
/// At `K ∩ K' = C_pq` this is the top of `H^{W+1−V}`; at `C_p` or `C_q` the top
/// of the corresponding cyclic-group table; at `e` the underlying cohomology
/// of a point.
pub fn vanishing_group(w: &FixedDims, v: &FixedDims, k: Level, k2: Level, p: u64, q: u64) -> Result<VanishingGroup> {
    if !w.is_even() || !v.is_even() {
        return Err(Error::Parity("cells must be even".into()));
    }
    if k > CPQ || k2 > CPQ {
        return Err(Error::InvalidParam("orbit level out of range".into()));
    }
    let alpha = w.add(&FixedDims::new(1, 1, 1, 1)).add(&v.neg());
    let level = k & k2;
    let group = match level {
        E => {
            if alpha.e == 0 {
                FgGroup::free(1)
            } else {
                FgGroup::zero()
            }
        }
        CP | CQ => {
            let (side, a_h, prime) = if level == CP {
                (Side::P, alpha.p, p)
            } else {
                (Side::Q, alpha.q, q)
            };
            let entry = lewis_entry(side, alpha.e, a_h)?;
            entry_groups(&entry, &Lattice::prime(prime)?)?.swap_remove(1)
        }
        _ => {
            let entry = classify_point(&alpha)?;
            if let TableEntry::NotTabulated(why) = &entry {
                return Err(Error::NotTabulated(format!("{} at {}", why, alpha)));
            }
            entry_groups(&entry, &Lattice::pq(p, q)?)?.swap_remove(CPQ as usize)
        }
    };
    Ok(VanishingGroup { alpha, level, group })
}

pub fn verify_vanishing(w: &VirtualRep, v: &VirtualRep, k: Level, k2: Level) -> Result<bool> {
    let (p, q) = w.primes();
    Ok(vanishing_group(&w.fixed_dims(), &v.fixed_dims(), k, k2, p, q)?
        .group
        .is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub from: String,
    pub to: String,
    pub alpha: FixedDims,
    pub level: Level,
    /// `None` when the group is not tabulated.
    pub group: Option<FgGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub orbit: Level,
    pub dims: FixedDims,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub p: u64,
    pub q: u64,
    /// Base orbits first, then one generator per cell in stage order.
    pub generators: Vec<Generator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub even: EvenTypeReport,
    pub obstructions: Vec<Obstruction>,
    pub decomposition: Option<Decomposition>,
}

impl fmt::Display for FreenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.decomposition.is_some() {
            return f.write_str("all hypotheses hold");
        }
        for c in &self.even.odd {
            writeln!(f, "odd cell: {}", c)?;
        }
        for (a, b) in &self.even.ll_violations {
            writeln!(f, "not {} ≪ {}", a, b)?;
        }
        for o in &self.obstructions {
            let g = o.group.as_ref().map_or("not tabulated".to_string(), |g| g.to_string());
            let lvl = ["e", "C_p", "C_q", "C_pq"][o.level as usize];
            writeln!(
                f,
                "{} → {}: group at {} in degree {} is {}",
                o.from, o.to, lvl, o.alpha, g
            )?;
        }
        Ok(())
    }
}

/// Checks evenness, `≪` and the vanishing conditions for every ordered pair
/// of pieces in increasing stages, using each piece's own orbit.
pub fn analyze(x: &CellComplex) -> Result<FreenessReport> {
    let even = check_even_type(x);
    let ps = pieces(x);
    let mut obstructions = Vec::new();
    for a in &ps {
        for b in &ps {
            if !earlier(a, b) || !a.dims.is_even() || !b.dims.is_even() {
                continue;
            }
            let (alpha, level, group) = match vanishing_group(&a.dims, &b.dims, a.orbit, b.orbit, x.p, x.q) {
                Ok(g) => (g.alpha, g.level, Some(g.group)),
                Err(Error::NotTabulated(_)) => (
                    a.dims.add(&FixedDims::new(1, 1, 1, 1)).add(&b.dims.neg()),
                    a.orbit & b.orbit,
                    None,
                ),
                Err(e) => return Err(e),
            };
            if group.as_ref().is_none_or(|g| !g.is_zero()) {
                obstructions.push(Obstruction {
                    from: a.label.clone(),
                    to: b.label.clone(),
                    alpha,
                    level,
                    group,
                });
            }
        }
    }
    let decomposition = (even.passed() && obstructions.is_empty()).then(|| Decomposition {
        p: x.p,
        q: x.q,
        generators: ps
            .iter()
            .map(|pc| Generator {
                label: pc.label.clone(),
                orbit: pc.orbit,
                dims: pc.dims,
            })
            .collect(),
    });
    Ok(FreenessReport {
        even,
        obstructions,
        decomposition,
    })
}

/// The free generators of `H^*(X)`, or a hypothesis error listing what failed.
pub fn free_decomposition(x: &CellComplex) -> Result<Decomposition> {
    let r = analyze(x)?;
    match r.decomposition {
        Some(d) => Ok(d),
        None => Err(Error::Hypothesis(r.to_string().trim_end().to_string())),
    }
}

/// `(2k, 2⌊k/p⌋, 2⌊k/q⌋, 2⌊k/pq⌋)`.
pub fn projective_dims(k: u64, p: u64, q: u64) -> FixedDims {
    let k2 = |d: u64| 2 * (k / d) as i64;
    FixedDims::new(k2(1), k2(p), k2(q), k2(p * q))
}

/// `ℂP(𝒰(n))` over a point: the cell `W_k = ⊕_{j<k} ξ^{j−k}` at stage `k`.
pub fn projective_space_complex(n: u64, p: u64, q: u64) -> Result<CellComplex> {
    let mut x = CellComplex::new(p, q, vec![CPQ])?;
    for k in 1..=n {
        let mut rep = VirtualRep::zero(p, q)?;
        for j in 0..k {
            rep.add_twist(j as i64 - k as i64, 1);
        }
        assert_eq!(rep.fixed_dims(), projective_dims(k, p, q), "W_{}", k);
        x.push(Cell {
            stage: k as usize,
            orbit: CPQ,
            rep,
            label: format!("W_{}", k),
        })?;
    }
    Ok(x)
}

/// Monotone sequences `0 ≤ a₁ ≤ … ≤ a_k ≤ n − k`, ordered by sum then lexicographically.
pub fn schubert_sequences(n: usize, k: usize) -> Vec<Vec<u64>> {
    fn go(k: usize, lo: u64, hi: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in lo..=hi {
            cur.push(a);
            go(k, a, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(k, 0, (n - k) as u64, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|a| (a.iter().sum::<u64>(), a.clone()));
    out
}

/// The Schubert cell representation `⊕_i ⊕_j ξ^{j − (a_i + i)}`, with `j` running
/// over `1..=a_i + i − 1` minus `{a_l + l : l < i}`.
pub fn schubert_rep(a: &[u64], p: u64, q: u64) -> Result<VirtualRep> {
    let mut rep = VirtualRep::zero(p, q)?;
    for i in 1..=a.len() {
        let top = a[i - 1] as i64 + i as i64;
        let skip: Vec<i64> = (1..i).map(|l| a[l - 1] as i64 + l as i64).collect();
        for j in (1..top).filter(|j| !skip.contains(j)) {
            rep.add_twist(j - top, 1);
        }
    }
    Ok(rep)
}

/// `(2Σa_i, 2Σ⌊a_i/p⌋, 2Σ⌊a_i/q⌋, 2Σ⌊a_i/pq⌋)`.
pub fn schubert_formula_dims(a: &[u64], p: u64, q: u64) -> FixedDims {
    let s = |d: u64| 2 * a.iter().map(|x| x / d).sum::<u64>() as i64;
    FixedDims::new(s(1), s(p), s(q), s(p * q))
}

/// `G(𝒰(n), k)`: one cell per Schubert sequence, staged by `Σa_i`. The
/// zero sequence is the zero-dimensional cell, so the base is empty.
pub fn grassmannian_complex(n: usize, k: usize, p: u64, q: u64) -> Result<CellComplex> {
    if k > n {
        return Err(Error::InvalidParam(format!("G({}, {}) is empty", n, k)));
    }
    let mut x = CellComplex::new(p, q, Vec::new())?;
    for a in schubert_sequences(n, k) {
        x.push(Cell {
            stage: a.iter().sum::<u64>() as usize,
            orbit: CPQ,
            rep: schubert_rep(&a, p, q)?,
            label: format!("W_({})", a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
        })?;
    }
    Ok(x)
}

/// Rows `label  K  (dims)`, aligned.
pub fn generator_table(d: &Decomposition) -> String {
    let lat = Lattice::pq(d.p, d.q).expect("valid primes");
    let rows: Vec<[String; 3]> = d
        .generators
        .iter()
        .map(|g| [g.label.clone(), lat.level_name(g.orbit), g.dims.to_string()])
        .collect();
    let w0 = rows.iter().map(|r| r[0].chars().count()).max().unwrap_or(0).max(4);
    let w1 = rows.iter().map(|r| r[1].chars().count()).max().unwrap_or(0).max(1);
    let mut out = format!("{:<w0$}  {:<w1$}  dims\n", "cell", "K");
    for r in rows {
        out += &format!("{:<w0$}  {:<w1$}  {}\n", r[0], r[1], r[2]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(a: [i64; 4]) -> FixedDims {
        FixedDims::new(a[0], a[1], a[2], a[3])
    }

    #[test]
    fn ll_examples() {
        assert!(ll_dims(&dims([0, 0, 0, 0]), &dims([2, 2, 0, 0]), false));
        // Every strict drop is at a level whose overgroups also grow.
        assert!(ll_dims(&dims([4, 0, 0, 0]), &dims([2, 2, 2, 2]), false));
        assert!(!ll_dims(&dims([2, 2, 0, 0]), &dims([4, 0, 0, 0]), false));
        assert!(!ll_dims(&dims([2, 0, 0, 2]), &dims([4, 0, 0, 0]), false));
        assert!(ll_dims(&dims([2, 0, 0, 2]), &dims([4, 0, 0, 0]), true));
        for k in 0..40 {
            assert!(ll_dims(&projective_dims(k, 3, 5), &projective_dims(k + 1, 3, 5), false));
        }
    }

    #[test]
    fn projective_space() {
        let x = projective_space_complex(1, 3, 5).unwrap();
        assert_eq!(x.cells[0].rep, VirtualRep::xi(3, 5, 1).unwrap());
        assert_eq!(projective_dims(15, 3, 5), dims([30, 10, 6, 2]));
        assert!(projective_space_complex(0, 3, 5).unwrap().cells.is_empty());
        let d = free_decomposition(&projective_space_complex(2, 3, 5).unwrap()).unwrap();
        let t = generator_table(&d);
        assert_eq!(t.lines().count(), 4);
        assert!(t.contains("W_2") && t.contains("(4, 0, 0, 0)"));
    }

    #[test]
    fn grassmannian_counts() {
        assert_eq!(schubert_sequences(4, 2).len(), 6);
        assert_eq!(schubert_sequences(6, 2).len(), 15);
        assert_eq!(schubert_sequences(7, 3).len(), 35);
        for a in schubert_sequences(6, 3) {
            assert_eq!(
                schubert_rep(&a, 3, 5).unwrap().fixed_dims().e,
                2 * a.iter().sum::<u64>() as i64
            );
        }
        // One Schubert sequence is the projective cell.
        assert_eq!(schubert_rep(&[4], 3, 5).unwrap().fixed_dims(), projective_dims(4, 3, 5));
    }

    #[test]
    fn empty_complex_has_base_only() {
        let x = CellComplex::new(3, 5, vec![CPQ]).unwrap();
        let d = free_decomposition(&x).unwrap();
        assert_eq!(d.generators.len(), 1);
    }

    #[test]
    fn odd_cell_and_swapped_stages() {
        let mut x = CellComplex::new(3, 5, vec![CPQ]).unwrap();
        x.push(Cell {
            stage: 1,
            orbit: CPQ,
            rep: VirtualRep::trivial(3, 5, 1).unwrap(),
            label: "odd".into(),
        })
        .unwrap();
        assert_eq!(check_even_type(&x).odd, vec!["odd".to_string()]);

        let cp = projective_space_complex(3, 3, 5).unwrap();
        let mut y = CellComplex::new(3, 5, vec![CPQ]).unwrap();
        for (stage, i) in [(1, 2), (2, 1)] {
            let mut c = cp.cells[i].clone();
            c.stage = stage;
            y.push(c).unwrap();
        }
        // W_3 dominates W_2 entrywise, so ≪ holds vacuously, and the group in
        // degree W_3 + 1 − W_2 = (3, 3, 1, 1) vanishes too.
        assert!(check_even_type(&y).passed());
        let d = free_decomposition(&y).unwrap();
        let labels: Vec<_> = d.generators.iter().map(|g| g.label.as_str()).collect();
        assert_eq!(labels, ["0", "W_3", "W_2"]);
    }

    #[test]
    fn parity_vanishing_at_e() {
        for (w, v) in [([2, 0, 0, 0], [4, 2, 0, 0]), ([4, 2, 2, 0], [2, 0, 0, 0])] {
            let g = vanishing_group(&dims(w), &dims(v), CPQ, E, 3, 5).unwrap();
            assert!(g.group.is_zero());
        }
    }

    #[test]
    fn json_round_trip() {
        let x = grassmannian_complex(4, 2, 3, 5).unwrap();
        let back = CellComplex::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
        let v: Value = serde_json::json!({"p": 3, "q": 5, "base": ["G"], "cells": [
            {"stage": 1, "K": "G", "rep": {"trivial": 0, "twists": {"-1": 1}}}]});
        let y = CellComplex::from_json(&v).unwrap();
        assert_eq!(y.cells[0].rep, VirtualRep::xi(3, 5, 1).unwrap());
        let bad: Value = serde_json::json!({"p": 3, "q": 5, "cells": [
            {"stage": 1, "K": "G", "rep": {"trivial": -2}}]});
        assert!(CellComplex::from_json(&bad).is_err());
    }
}
