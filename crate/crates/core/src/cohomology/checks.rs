//! Internal consistency checks of the tables: the suspension recurrences,
//! rank bookkeeping along the cofibre sequences `S(V)_+ → S^0 → S^V`, and
//! compatibility with the `C_p` tables under restriction.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rep::FixedDims;
use super::tables::{classify_point, entry_groups, lewis_entry, realize_cached, sphere_entry, TableEntry};
use crate::error::Result;
use crate::homological::{iso_search, IsoVerdict};
use crate::linalg::{direct_sum, FgGroup};
use crate::mackey::catalog::{phi_restrict, Lift, Side};
use crate::mackey::expr::{Atom, Coef, Expr, Term};
use crate::mackey::{Lattice, CPQ};

/// The representation added in a recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shift {
    Xi,
    XiP,
    XiQ,
}

impl Shift {
    pub const ALL: [Shift; 3] = [Shift::Xi, Shift::XiP, Shift::XiQ];

    pub fn dims(self) -> FixedDims {
        match self {
            Shift::Xi => FixedDims::new(2, 0, 0, 0),
            Shift::XiP => FixedDims::new(2, 2, 0, 0),
            Shift::XiQ => FixedDims::new(2, 0, 2, 0),
        }
    }

    /// An exponent `j` with `ξ^j` of this kind.
    pub fn exponent(self, p: u64, q: u64) -> i64 {
        match self {
            Shift::Xi => 1,
            Shift::XiP => p as i64,
            Shift::XiQ => q as i64,
        }
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shift::Xi => "xi",
            Shift::XiP => "xi^p",
            Shift::XiQ => "xi^q",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// One side is not tabulated.
    Skipped(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Clone, Debug)]
pub struct ClauseResult {
    pub clause: String,
    pub verdict: Verdict,
}

fn groups(entry: &TableEntry, lat: &Lattice) -> Option<Vec<FgGroup>> {
    entry_groups(entry, lat).ok()
}

fn torsion_order(g: &FgGroup) -> BigInt {
    g.torsion().iter().fold(BigInt::one(), |acc, d| acc * d)
}

fn iso_cached(a: &Expr, b: &Expr, lat: &Lattice) -> Result<IsoVerdict> {
    type Key = (Expr, Expr, Lattice);
    static CACHE: OnceLock<Mutex<HashMap<Key, IsoVerdict>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (a.clone(), b.clone(), *lat);
    if let Some(v) = cache.lock().expect("cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = iso_search(&realize_cached(a, lat)?, &realize_cached(b, lat)?);
    cache.lock().expect("cache poisoned").insert(key, v.clone());
    Ok(v)
}

/// Compares two entries as functors where both are determined, levelwise otherwise.
pub fn compare_entries(a: &TableEntry, b: &TableEntry, lat: &Lattice) -> Result<Verdict> {
    let (Some(ga), Some(gb)) = (groups(a, lat), groups(b, lat)) else {
        return Ok(Verdict::Skipped("not tabulated".into()));
    };
    for (l, (x, y)) in ga.iter().zip(&gb).enumerate() {
        if !x.iso(y) {
            return Ok(Verdict::Fail(format!(
                "level {}: {} vs {}",
                lat.level_name(l as u8),
                x,
                y
            )));
        }
    }
    if let (TableEntry::Determined(x), TableEntry::Determined(y)) = (a, b) {
        if x != y {
            return Ok(match iso_cached(x, y, lat)? {
                IsoVerdict::Iso(_) => Verdict::Pass,
                IsoVerdict::NotIso(why) => Verdict::Fail(format!("{} vs {}: {}", x, y, why)),
                IsoVerdict::Unknown => Verdict::Fail(format!("no isomorphism {} ≅ {} found", x, y)),
            });
        }
    }
    Ok(Verdict::Pass)
}

/// Levelwise necessary conditions for `0 → S → M → Q → 0` with `S` free.
fn ses_free_sub(sub: &[FgGroup], mid: &[FgGroup], quot: &[FgGroup], lat: &Lattice) -> Verdict {
    for l in 0..mid.len() {
        let name = lat.level_name(l as u8);
        if mid[l].rank() != sub[l].rank() + quot[l].rank() {
            return Verdict::Fail(format!(
                "level {}: ranks {} ≠ {} + {}",
                name,
                mid[l].rank(),
                sub[l].rank(),
                quot[l].rank()
            ));
        }
        let (tm, tq) = (torsion_order(&mid[l]), torsion_order(&quot[l]));
        if !(&tq % &tm).is_zero() {
            return Verdict::Fail(format!(
                "level {}: torsion of {} does not embed in {}",
                name, mid[l], quot[l]
            ));
        }
    }
    Verdict::Pass
}

fn plus_z(g: &FgGroup) -> FgGroup {
    FgGroup::from_invariants(g.rank() + 1, g.torsion().to_vec())
}

/// Runs every recurrence clause that applies at `dims` for the given shift.
/// An empty result means no clause applies.
pub fn recurrence_check(dims: &FixedDims, shift: Shift, p: u64, q: u64) -> Result<Vec<ClauseResult>> {
    dims.check_parity()?;
    let lat = Lattice::pq(p, q)?;
    let here = classify_point(dims)?;
    let there = classify_point(&dims.add(&shift.dims()))?;
    let e = dims.e;
    let mut out = Vec::new();
    let mut push = |clause: String, v: Verdict| out.push(ClauseResult { clause, verdict: v });
    let top = CPQ as usize;
    let (gh, gt) = (groups(&here, &lat), groups(&there, &lat));
    let skipped = || Verdict::Skipped("not tabulated".into());

    match shift {
        Shift::Xi => {
            if e >= 1 || e <= -3 {
                push("xi a) iso".into(), compare_entries(&here, &there, &lat)?);
            }
            if e == 0 {
                let sub = entry_groups(&TableEntry::Determined(Expr::term(Term::Lpq)), &lat)?;
                let v = match (&gh, &gt) {
                    (Some(m), Some(t)) => ses_free_sub(&sub, m, t, &lat),
                    _ => skipped(),
                };
                push("xi b) 0 → L_pq → H^α → H^{α+ξ} → 0".into(), v);
            }
            if e == -1 {
                if let (Some(m), Some(t)) = (&gh, &gt) {
                    if m.iter().all(|g| g.is_zero()) {
                        let v = if t.iter().all(|g| g.is_zero()) {
                            Verdict::Pass
                        } else {
                            Verdict::Fail("H^α = 0 but H^{α+ξ} ≠ 0".into())
                        };
                        push("xi b') vanishing".into(), v);
                    }
                }
            }
            if e == -2 {
                let v = match (&gh, &gt) {
                    (Some(m), Some(t)) if t[top].iso(&plus_z(&m[top])) => Verdict::Pass,
                    (Some(m), Some(t)) => Verdict::Fail(format!("top {} vs {} ⊕ Z", t[top], m[top])),
                    _ => skipped(),
                };
                push("xi c) top gains Z".into(), v);
            }
        }
        Shift::XiP | Shift::XiQ => {
            let (side, h, prime) = if shift == Shift::XiP {
                (Side::P, dims.p, p)
            } else {
                (Side::Q, dims.q, q)
            };
            let own = if side == Side::P { Coef::P } else { Coef::Q };
            let tag = shift.to_string();
            if (e >= 1 && (h >= 1 || h <= -3)) || (e <= -3 && (h <= -3 || h >= 2)) {
                push(format!("{} a) iso", tag), compare_entries(&here, &there, &lat)?);
            }
            if (e >= 2 || e <= -3) && h == 0 {
                let c = Term::Lifted {
                    kind: Lift::C,
                    side,
                    atom: Atom::Const(Coef::Z),
                };
                let sub = entry_groups(&TableEntry::Determined(Expr::term(c)), &lat)?;
                let v = match (&gh, &gt) {
                    (Some(m), Some(t)) => ses_free_sub(&sub, m, t, &lat),
                    _ => skipped(),
                };
                push(format!("{} b) 0 → C⟨Z⟩ → H^α → H^(α+V) → 0", tag), v);
            }
            if (e >= 2 || e <= -3) && h == -1 {
                if let (Some(m), Some(t)) = (&gh, &gt) {
                    if m.iter().all(|g| g.is_zero()) {
                        let v = if t.iter().all(|g| g.is_zero()) {
                            Verdict::Pass
                        } else {
                            Verdict::Fail("H^α = 0 but H^(α+V) ≠ 0".into())
                        };
                        push(format!("{} b') vanishing", tag), v);
                    }
                }
            }
            if e <= -1 && h == 1 {
                let k = Term::Lifted {
                    kind: Lift::K,
                    side,
                    atom: Atom::Const(own),
                };
                let bigger = match &here {
                    TableEntry::Determined(x) => TableEntry::Determined(x.plus(&Expr::term(k))),
                    TableEntry::DependsOnChoice(x) => TableEntry::DependsOnChoice(x.plus(&Expr::term(k))),
                    t => t.clone(),
                };
                push(
                    format!("{} c) H^α ⊕ K⟨Z/p⟩ ≅ H^(α+V)", tag),
                    compare_entries(&bigger, &there, &lat)?,
                );
            }
            if e > 0 && h == -2 {
                let v = match (&gh, &gt) {
                    (Some(m), Some(t)) if t[top].rank() >= 1 => {
                        let rest = FgGroup::from_invariants(t[top].rank() - 1, t[top].torsion().to_vec());
                        let expect = direct_sum(&[&rest, &FgGroup::cyclic(prime)]).group;
                        if m[top].iso(&expect) {
                            Verdict::Pass
                        } else {
                            Verdict::Fail(format!("top {} vs A ⊕ Z/{} where H^(α+V) = {}", m[top], prime, t[top]))
                        }
                    }
                    (Some(_), Some(t)) => Verdict::Fail(format!("top of H^(α+V) = {} has no Z summand", t[top])),
                    _ => skipped(),
                };
                push(format!("{} d) A ⊕ Z/p vs A ⊕ Z", tag), v);
            }
            if e <= -4 && h == -2 {
                let v = match (&gh, &gt) {
                    (Some(m), Some(t)) if t[top].iso(&plus_z(&m[top])) => Verdict::Pass,
                    (Some(m), Some(t)) => Verdict::Fail(format!("top {} vs {} ⊕ Z", t[top], m[top])),
                    _ => skipped(),
                };
                push(format!("{} e) top gains Z", tag), v);
            }
        }
    }
    Ok(out)
}

type Ranks = [Option<i64>; 4];

fn lewis_ranks(side: Side, a_e: i64, a_h: i64, prime: u64) -> Result<(i64, i64)> {
    let lat = Lattice::prime(prime)?;
    let g = entry_groups(&lewis_entry(side, a_e, a_h)?, &lat)?;
    Ok((g[0].rank() as i64, g[1].rank() as i64))
}

fn entry_ranks(entry: &TableEntry, dims: &FixedDims, p: u64, q: u64) -> Result<Ranks> {
    type Key = (TableEntry, u64, u64);
    static CACHE: OnceLock<Mutex<HashMap<Key, [i64; 4]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let TableEntry::NotTabulated(_) = entry {
        // The lower levels are still known from the C_p and C_q tables.
        let (be, bp) = lewis_ranks(Side::P, dims.e, dims.p, p)?;
        let (_, bq) = lewis_ranks(Side::Q, dims.e, dims.q, q)?;
        return Ok([Some(be), Some(bp), Some(bq), None]);
    }
    let key = (entry.clone(), p, q);
    if let Some(r) = cache.lock().expect("cache poisoned").get(&key) {
        return Ok(r.map(Some));
    }
    let g = entry_groups(entry, &Lattice::pq(p, q)?)?;
    let r = [0, 1, 2, 3].map(|l| g[l].rank() as i64);
    cache.lock().expect("cache poisoned").insert(key, r);
    Ok(r.map(Some))
}

/// Alternating rank sums along the long exact sequence of `S(V)_+ → S^0 → S^V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    /// Per level; the top is `None` when some term there is not tabulated.
    pub sums: Ranks,
    /// Some term at the edge of the window was nonzero.
    pub window_too_small: bool,
}

impl LesReport {
    pub fn balanced(&self) -> bool {
        !self.window_too_small && self.sums.iter().all(|s| s.unwrap_or(0) == 0)
    }
}

/// Sums `(−1)^k (rank H^{α+k−V} − rank H^{α+k} + rank H^{α+k}(S(V)_+))` over `|k| ≤ window`.
pub fn les_check(dims: &FixedDims, shift: Shift, p: u64, q: u64, window: i64) -> Result<LesReport> {
    dims.check_parity()?;
    let v = shift.dims();
    let j = shift.exponent(p, q);
    let mut sums: Ranks = [Some(0); 4];
    let mut edge = false;
    for k in -window..=window {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let b = dims.shift(k);
        let a = b.add(&v.neg());
        let ra = entry_ranks(&classify_point(&a)?, &a, p, q)?;
        let rb = entry_ranks(&classify_point(&b)?, &b, p, q)?;
        let rc = entry_ranks(&sphere_entry(&b, j, p, q)?, &b, p, q)?;
        for l in 0..4 {
            sums[l] = match (sums[l], ra[l], rb[l], rc[l]) {
                (Some(s), Some(x), Some(y), Some(z)) => {
                    if k.abs() == window && (x != 0 || y != 0 || z != 0) {
                        edge = true;
                    }
                    Some(s + sign * (x - y + z))
                }
                _ => None,
            };
        }
    }
    Ok(LesReport {
        sums,
        window_too_small: edge,
    })
}

/// Restricting a determined answer along `Φ_p^*` and `Φ_q^*` must give the
/// `C_p` and `C_q` tables.
pub fn phi_compat(dims: &FixedDims, p: u64, q: u64) -> Result<Verdict> {
    let TableEntry::Determined(expr) = classify_point(dims)? else {
        return Ok(Verdict::Skipped("not determined".into()));
    };
    type Key = (Expr, Side, TableEntry, u64, u64);
    static CACHE: OnceLock<Mutex<HashMap<Key, Verdict>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    for (side, a_h, prime) in [(Side::P, dims.p, p), (Side::Q, dims.q, q)] {
        let lewis = lewis_entry(side, dims.e, a_h)?;
        let key = (expr.clone(), side, lewis.clone(), p, q);
        let cached = cache.lock().expect("cache poisoned").get(&key).cloned();
        let v = match cached {
            Some(v) => v,
            None => {
                let v = phi_verdict(&expr, side, &lewis, p, q, prime)?;
                cache.lock().expect("cache poisoned").insert(key, v.clone());
                v
            }
        };
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn phi_verdict(expr: &Expr, side: Side, lewis: &TableEntry, p: u64, q: u64, prime: u64) -> Result<Verdict> {
    let m = realize_cached(expr, &Lattice::pq(p, q)?)?;
    let restricted = phi_restrict(&m, side)?;
    let lat = Lattice::prime(prime)?;
    let want = entry_groups(lewis, &lat)?;
    for l in 0..2u8 {
        if !restricted.group(l).iso(&want[l as usize]) {
            return Ok(Verdict::Fail(format!(
                "Φ^*_{} of {} at level {}: {} vs {}",
                side.letter(),
                expr,
                lat.level_name(l),
                restricted.group(l),
                want[l as usize]
            )));
        }
    }
    if let TableEntry::Determined(le) = lewis {
        let target = realize_cached(le, &lat)?;
        match iso_search(&restricted, &target) {
            IsoVerdict::Iso(_) => {}
            IsoVerdict::NotIso(why) => {
                return Ok(Verdict::Fail(format!(
                    "Φ^*_{} of {} is not {}: {}",
                    side.letter(),
                    expr,
                    le,
                    why
                )))
            }
            IsoVerdict::Unknown => {
                return Ok(Verdict::Fail(format!(
                    "no isomorphism Φ^*_{} of {} ≅ {} found",
                    side.letter(),
                    expr,
                    le
                )))
            }
        }
    }
    Ok(Verdict::Pass)
}
