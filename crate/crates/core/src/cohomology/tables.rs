//! `H^α` of a point, of orbits and of representation spheres, as functions
//! of fixed-point dimensions.
//!
//! The point table is a list of regions. Each region is written for one
//! orientation of the primes; asymmetric regions are also tried on the
//! swapped dimensions and their answer mirrored back. Regions must not
//! overlap, and [`classify_point`] panics if two of them claim a quadruple.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::rep::{FixedDims, VirtualRep};
use crate::error::{Error, Result};
use crate::linalg::FgGroup;
use crate::mackey::catalog::{Lift, Side};
use crate::mackey::expr::{Atom, Coef, Expr, Term};
use crate::mackey::{Lattice, Level, MackeyFunctor, E};

/// A table value before realization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TableEntry {
    Determined(Expr),
    /// A family with an open `A[d]` slot.
    DependsOnChoice(Expr),
    NotTabulated(String),
}

impl TableEntry {
    pub fn mirror(&self) -> TableEntry {
        match self {
            TableEntry::Determined(e) => TableEntry::Determined(e.mirror()),
            TableEntry::DependsOnChoice(e) => TableEntry::DependsOnChoice(e.mirror()),
            TableEntry::NotTabulated(s) => TableEntry::NotTabulated(s.clone()),
        }
    }

    pub fn expr(&self) -> Option<&Expr> {
        match self {
            TableEntry::Determined(e) | TableEntry::DependsOnChoice(e) => Some(e),
            TableEntry::NotTabulated(_) => None,
        }
    }

    fn det(terms: Vec<Term>) -> TableEntry {
        TableEntry::Determined(Expr::new(terms))
    }

    /// Applies `f` to every term, keeping the open-`d` status.
    fn map_terms(&self, f: impl Fn(Term) -> Term) -> TableEntry {
        match self {
            TableEntry::Determined(e) => TableEntry::Determined(Expr::new(e.terms().iter().map(|&t| f(t)).collect())),
            TableEntry::DependsOnChoice(e) => {
                TableEntry::DependsOnChoice(Expr::new(e.terms().iter().map(|&t| f(t)).collect()))
            }
            t => t.clone(),
        }
    }

    fn plus(&self, other: &TableEntry) -> TableEntry {
        match (self, other) {
            (TableEntry::NotTabulated(s), _) | (_, TableEntry::NotTabulated(s)) => TableEntry::NotTabulated(s.clone()),
            (TableEntry::Determined(a), TableEntry::Determined(b)) => TableEntry::Determined(a.plus(b)),
            (a, b) => TableEntry::DependsOnChoice(a.expr().unwrap().plus(b.expr().unwrap())),
        }
    }
}

/// The answer to a cohomology query.
#[derive(Clone, Debug)]
pub enum CohomologyAnswer {
    Determined {
        expr: Expr,
        functor: MackeyFunctor,
    },
    DependsOnChoice {
        family: Expr,
        d: Option<i64>,
        realized: Option<MackeyFunctor>,
        /// Level groups, which do not depend on `d`.
        groups: Vec<FgGroup>,
    },
    NotTabulated(String),
}

impl CohomologyAnswer {
    pub fn is_determined(&self) -> bool {
        matches!(self, CohomologyAnswer::Determined { .. })
    }

    /// The expression, with `d` filled in when it was supplied.
    pub fn expr(&self) -> Option<Expr> {
        match self {
            CohomologyAnswer::Determined { expr, .. } => Some(expr.clone()),
            CohomologyAnswer::DependsOnChoice { family, d, .. } => Some(match d {
                Some(d) => family.with_d(*d),
                None => family.clone(),
            }),
            CohomologyAnswer::NotTabulated(_) => None,
        }
    }

    pub fn functor(&self) -> Option<&MackeyFunctor> {
        match self {
            CohomologyAnswer::Determined { functor, .. } => Some(functor),
            CohomologyAnswer::DependsOnChoice { realized, .. } => realized.as_ref(),
            CohomologyAnswer::NotTabulated(_) => None,
        }
    }
}

/// Realizes `e` over `lat`, memoized.
pub fn realize_cached(e: &Expr, lat: &Lattice) -> Result<MackeyFunctor> {
    type Key = (Expr, Lattice);
    static CACHE: OnceLock<Mutex<HashMap<Key, MackeyFunctor>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (e.clone(), *lat);
    if let Some(m) = cache.lock().expect("cache poisoned").get(&key) {
        return Ok(m.clone());
    }
    let m = e.realize_on(lat)?;
    cache.lock().expect("cache poisoned").insert(key, m.clone());
    Ok(m)
}

/// Turns a table entry into an answer over `lat`.
pub fn realize_entry(entry: TableEntry, lat: &Lattice, d: Option<i64>) -> Result<CohomologyAnswer> {
    Ok(match entry {
        TableEntry::Determined(expr) => {
            let functor = realize_cached(&expr, lat)?;
            CohomologyAnswer::Determined { expr, functor }
        }
        TableEntry::DependsOnChoice(family) => {
            let realized = match d {
                Some(d) => Some(realize_cached(&family.with_d(d), lat)?),
                None => None,
            };
            let groups = entry_groups(&TableEntry::DependsOnChoice(family.clone()), lat)?;
            CohomologyAnswer::DependsOnChoice {
                family,
                d,
                realized,
                groups,
            }
        }
        TableEntry::NotTabulated(s) => CohomologyAnswer::NotTabulated(s),
    })
}

/// Level groups of an entry; open families are evaluated at `d = 1`, which
/// does not change the groups.
pub fn entry_groups(entry: &TableEntry, lat: &Lattice) -> Result<Vec<FgGroup>> {
    let e = match entry {
        TableEntry::Determined(e) => e.clone(),
        TableEntry::DependsOnChoice(e) => e.with_d(1),
        TableEntry::NotTabulated(s) => return Err(Error::NotTabulated(s.clone())),
    };
    let m = realize_cached(&e, lat)?;
    Ok((0..=lat.top()).map(|l| m.group(l).clone()).collect())
}

pub fn level_groups(ans: &CohomologyAnswer, level: Level) -> Result<FgGroup> {
    match ans {
        CohomologyAnswer::Determined { functor, .. } => Ok(functor.group(level).clone()),
        CohomologyAnswer::DependsOnChoice { groups, .. } => Ok(groups[level as usize].clone()),
        CohomologyAnswer::NotTabulated(s) => Err(Error::NotTabulated(s.clone())),
    }
}

fn prime(side: Side, a: Atom) -> Term {
    Term::Prime(side, a)
}

/// `H^α_{C_p}(S^0)` for `|α| = a_e`, `|α^{C_p}| = a_h`, over the prime of `side`.
pub fn lewis_entry(side: Side, a_e: i64, a_h: i64) -> Result<TableEntry> {
    if (a_e - a_h).rem_euclid(2) != 0 {
        return Err(Error::Parity(format!("({}, {}) mix parities", a_e, a_h)));
    }
    let own = match side {
        Side::P => Coef::P,
        Side::Q => Coef::Q,
    };
    let t = |a| TableEntry::det(vec![prime(side, a)]);
    Ok(match (a_e, a_h) {
        (0, 0) => TableEntry::DependsOnChoice(Expr::new(vec![prime(side, Atom::Burnside(None))])),
        (0, h) if h < 0 => t(Atom::R),
        (0, _) => t(Atom::L),
        (_, 0) => t(Atom::Const(Coef::Z)),
        (e, h) if e > 0 && h < 0 && h % 2 == 0 => t(Atom::Const(own)),
        (e, h) if e < 0 && h > 1 && h % 2 != 0 => t(Atom::Const(own)),
        _ => TableEntry::Determined(Expr::zero()),
    })
}

/// The Lewis table as a `C_p`-functor answer.
pub fn lewis_table(p: u64, a_e: i64, a_h: i64, d: Option<i64>) -> Result<CohomologyAnswer> {
    let lat = Lattice::prime(p)?;
    realize_entry(lewis_entry(Side::P, a_e, a_h)?, &lat, d)
}

fn lift_entry(kind: Lift, entry: &TableEntry) -> TableEntry {
    entry.map_terms(|t| match t {
        Term::Prime(side, atom) => Term::Lifted { kind, side, atom },
        t => t,
    })
}

/// `H^α(C_pq/H_+)` for `H ∈ {e, C_p, C_q}`.
pub fn orbit_entry(dims: &FixedDims, h: Level) -> Result<TableEntry> {
    dims.check_parity()?;
    match h {
        E => Ok(if dims.e == 0 {
            TableEntry::det(vec![Term::Rep(E)])
        } else {
            TableEntry::Determined(Expr::zero())
        }),
        1 => Ok(lift_entry(Lift::E, &lewis_entry(Side::P, dims.e, dims.p)?)),
        2 => Ok(lift_entry(Lift::E, &lewis_entry(Side::Q, dims.e, dims.q)?)),
        _ => Err(Error::InvalidParam(
            "orbit must be e, C_p or C_q; use the point for G/G".into(),
        )),
    }
}

pub fn cohomology_orbit(dims: &FixedDims, h: Level, p: u64, q: u64, d: Option<i64>) -> Result<CohomologyAnswer> {
    realize_entry(orbit_entry(dims, h)?, &Lattice::pq(p, q)?, d)
}

/// Reduced `H^α(S(ξ^j)_+)`.
pub fn sphere_entry(dims: &FixedDims, j: i64, p: u64, q: u64) -> Result<TableEntry> {
    dims.check_parity()?;
    let n = (p * q) as i64;
    let j = j.rem_euclid(n);
    if j == 0 {
        return Err(Error::InvalidParam(format!("ξ^j with j ≡ 0 mod {} is trivial", n)));
    }
    let side = if j % p as i64 == 0 {
        Side::P
    } else if j % q as i64 == 0 {
        Side::Q
    } else {
        return Ok(match dims.e {
            0 => TableEntry::det(vec![Term::Rpq]),
            1 => TableEntry::det(vec![Term::Lpq]),
            _ => TableEntry::Determined(Expr::zero()),
        });
    };
    let a_h = match side {
        Side::P => dims.p,
        Side::Q => dims.q,
    };
    let low = lift_entry(Lift::C, &lewis_entry(side, dims.e - 1, a_h - 1)?);
    let high = lift_entry(Lift::K, &lewis_entry(side, dims.e, a_h)?);
    Ok(low.plus(&high))
}

pub fn cohomology_sphere(dims: &FixedDims, j: i64, p: u64, q: u64, d: Option<i64>) -> Result<CohomologyAnswer> {
    realize_entry(sphere_entry(dims, j, p, q)?, &Lattice::pq(p, q)?, d)
}

// Shorthand for the point table, written for the "p" orientation.
fn z2() -> Term {
    Term::Const(Coef::Z)
}
fn zpq() -> Term {
    Term::Const(Coef::PQ)
}
fn zp() -> Term {
    Term::Const(Coef::P)
}
fn zq() -> Term {
    Term::Const(Coef::Q)
}
fn lifted(kind: Lift, side: Side, atom: Atom) -> Term {
    Term::Lifted { kind, side, atom }
}
fn kp_zp() -> Term {
    lifted(Lift::K, Side::P, Atom::Const(Coef::P))
}
fn kq_zq() -> Term {
    lifted(Lift::K, Side::Q, Atom::Const(Coef::Q))
}
fn cp_zp() -> Term {
    lifted(Lift::C, Side::P, Atom::Const(Coef::P))
}
fn cq_zq() -> Term {
    lifted(Lift::C, Side::Q, Atom::Const(Coef::Q))
}
fn kp_z() -> Term {
    lifted(Lift::K, Side::P, Atom::Const(Coef::Z))
}
fn kq_z() -> Term {
    lifted(Lift::K, Side::Q, Atom::Const(Coef::Z))
}
fn cp_z() -> Term {
    lifted(Lift::C, Side::P, Atom::Const(Coef::Z))
}
fn cq_z() -> Term {
    lifted(Lift::C, Side::Q, Atom::Const(Coef::Z))
}
fn family(kind: Lift, side: Side) -> TableEntry {
    TableEntry::DependsOnChoice(Expr::new(vec![lifted(kind, side, Atom::Burnside(None))]))
}

type D = FixedDims;

struct Region {
    name: &'static str,
    /// The region and its answer are invariant under `p ↔ q`.
    symmetric: bool,
    matches: fn(&D) -> bool,
    value: fn(&D) -> TableEntry,
}

fn det(v: Vec<Term>) -> TableEntry {
    TableEntry::det(v)
}

fn odd(d: &D) -> bool {
    !d.is_even()
}

fn even(d: &D) -> bool {
    d.is_even()
}

/// `(|α|, |α^{C_p}|) = (0, 0)` or `(|α^{C_q}|, |α^{C_pq}|)` style coincidences
/// where the answer depends on more than the dimensions.
fn dependent_zone(d: &D) -> bool {
    even(d) && (d.e == 0 || d.pq == 0) && (d.p == 0 || d.q == 0)
}

/// Dependent configurations with a known family, in the "p" orientation.
fn known_family(d: &D) -> bool {
    let a = d.as_array();
    a == [0, 0, 0, 0] || a == [2, 2, 0, 0] || a == [-2, -2, 0, 0] || a == [0, 0, -2, -2] || a == [0, 0, 2, 2]
}

const REGIONS: &[Region] = &[
    // Dependent families.
    Region {
        name: "dependent: all dimensions zero",
        symmetric: true,
        matches: |d| d.as_array() == [0, 0, 0, 0],
        value: |_| family(Lift::A, Side::Q),
    },
    Region {
        name: "dependent: |α| = |α^{C_p}| = ±2, |α^{C_q}| = |α^{C_pq}| = 0",
        symmetric: false,
        matches: |d| (d.e == 2 || d.e == -2) && d.p == d.e && d.q == 0 && d.pq == 0,
        value: |_| family(Lift::Q, Side::P),
    },
    Region {
        name: "dependent: |α| = |α^{C_p}| = 0, |α^{C_q}| = |α^{C_pq}| = -2",
        symmetric: false,
        matches: |d| d.as_array() == [0, 0, -2, -2],
        value: |_| family(Lift::K, Side::P),
    },
    Region {
        name: "dependent: |α| = |α^{C_p}| = 0, |α^{C_q}| = |α^{C_pq}| = 2",
        symmetric: false,
        matches: |d| d.as_array() == [0, 0, 2, 2],
        value: |_| family(Lift::C, Side::P),
    },
    Region {
        name: "dependent: untabulated configuration",
        symmetric: true,
        matches: |d| dependent_zone(d) && !known_family(d) && !known_family(&d.swap()),
        value: |d| {
            TableEntry::NotTabulated(format!(
                "{} has |α| or |α^{{C_pq}}| zero and |α^{{C_p}}| or |α^{{C_q}}| zero; \
                 the value depends on more than the fixed dimensions and is not tabulated",
                d
            ))
        },
    },
    // Odd, |α| < 0.
    Region {
        name: "odd, |α|<0, |α^{C_p}|<0, |α^{C_q}|<0",
        symmetric: true,
        matches: |d| odd(d) && d.e < 0 && d.p < 0 && d.q < 0,
        value: |d| if d.pq <= 1 { det(vec![]) } else { det(vec![zpq()]) },
    },
    Region {
        name: "odd, |α|<0, |α^{C_p}|=|α^{C_q}|=1",
        symmetric: true,
        matches: |d| odd(d) && d.e < 0 && d.p == 1 && d.q == 1,
        value: |_| det(vec![]),
    },
    Region {
        name: "odd, |α|<0, |α^{C_p}|=1, |α^{C_q}|<0",
        symmetric: false,
        matches: |d| odd(d) && d.e < 0 && d.p == 1 && d.q < 0,
        value: |d| if d.pq <= 1 { det(vec![]) } else { det(vec![zp()]) },
    },
    Region {
        name: "odd, |α|<0, |α^{C_p}|>1, |α^{C_q}|=1",
        symmetric: false,
        matches: |d| odd(d) && d.e < 0 && d.p > 1 && d.q == 1,
        value: |_| det(vec![kp_zp()]),
    },
    Region {
        name: "odd, |α|<0, |α^{C_p}|>1, |α^{C_q}|>1",
        symmetric: true,
        matches: |d| odd(d) && d.e < 0 && d.p > 1 && d.q > 1,
        value: |_| det(vec![kp_zp(), kq_zq()]),
    },
    Region {
        name: "odd, |α|<0, |α^{C_p}|>1, |α^{C_q}|<0",
        symmetric: false,
        matches: |d| odd(d) && d.e < 0 && d.p > 1 && d.q < 0,
        value: |d| {
            if d.pq <= 1 {
                det(vec![kp_zp()])
            } else {
                det(vec![kp_zp(), zp()])
            }
        },
    },
    // Odd, |α| > 0.
    Region {
        name: "odd, |α|>0, |α^{C_p}|>0, |α^{C_q}|>0",
        symmetric: true,
        matches: |d| odd(d) && d.e > 0 && d.p > 0 && d.q > 0,
        value: |_| det(vec![]),
    },
    Region {
        name: "odd, |α|>0, |α^{C_p}|<0, |α^{C_q}|<0",
        symmetric: true,
        matches: |d| odd(d) && d.e > 0 && d.p < 0 && d.q < 0,
        value: |d| if d.pq <= 1 { det(vec![]) } else { det(vec![zpq()]) },
    },
    Region {
        name: "odd, |α|>0, |α^{C_p}|>0, |α^{C_q}|<0",
        symmetric: false,
        matches: |d| odd(d) && d.e > 0 && d.p > 0 && d.q < 0,
        value: |d| if d.pq >= 3 { det(vec![zp()]) } else { det(vec![]) },
    },
    // Even, |α| < 0.
    Region {
        name: "even, |α|<0, |α^{C_pq}|=0, |α^{C_p}|,|α^{C_q}| nonzero",
        symmetric: true,
        matches: |d| even(d) && d.e < 0 && d.pq == 0 && d.p != 0 && d.q != 0,
        value: |_| det(vec![z2()]),
    },
    Region {
        name: "even, |α|<0, |α^{C_p}|>0, |α^{C_q}|>0, |α^{C_pq}|≠0",
        symmetric: true,
        matches: |d| even(d) && d.e < 0 && d.p > 0 && d.q > 0 && d.pq != 0,
        value: |d| if d.pq > 0 { det(vec![]) } else { det(vec![zpq()]) },
    },
    Region {
        name: "even, |α|<0, |α^{C_p}|>0, |α^{C_q}|=0, |α^{C_pq}|≠0",
        symmetric: false,
        matches: |d| even(d) && d.e < 0 && d.p > 0 && d.q == 0 && d.pq != 0,
        value: |d| {
            if d.pq > 0 {
                det(vec![cq_z()])
            } else {
                det(vec![kq_z(), zq()])
            }
        },
    },
    Region {
        name: "even, |α|<0, |α^{C_p}|>0, |α^{C_q}|<0, |α^{C_pq}|≠0",
        symmetric: false,
        matches: |d| even(d) && d.e < 0 && d.p > 0 && d.q < 0 && d.pq != 0,
        value: |d| if d.pq > 0 { det(vec![]) } else { det(vec![zq()]) },
    },
    Region {
        name: "even, |α|<0, |α^{C_p}|=|α^{C_q}|=0, |α^{C_pq}|≠0",
        symmetric: true,
        matches: |d| even(d) && d.e < 0 && d.p == 0 && d.q == 0 && d.pq != 0,
        value: |d| {
            if d.pq > 0 {
                det(vec![cp_z(), cq_z()])
            } else {
                det(vec![kp_z(), kq_z()])
            }
        },
    },
    Region {
        name: "even, |α|<0, |α^{C_p}|=0, |α^{C_q}|<0, |α^{C_pq}|≠0",
        symmetric: false,
        matches: |d| even(d) && d.e < 0 && d.p == 0 && d.q < 0 && d.pq != 0,
        value: |d| if d.pq > 0 { det(vec![cp_z()]) } else { det(vec![kp_z()]) },
    },
    Region {
        name: "even, |α|<0, |α^{C_p}|<0, |α^{C_q}|<0, |α^{C_pq}|≠0",
        symmetric: true,
        matches: |d| even(d) && d.e < 0 && d.p < 0 && d.q < 0 && d.pq != 0,
        value: |_| det(vec![]),
    },
    // Even, |α| > 0.
    Region {
        name: "even, |α|>0, |α^{C_p}|>0, |α^{C_q}|>0",
        symmetric: true,
        matches: |d| even(d) && d.e > 0 && d.p > 0 && d.q > 0,
        value: |d| match d.pq.signum() {
            1 => det(vec![]),
            0 => det(vec![z2()]),
            _ => det(vec![zpq()]),
        },
    },
    Region {
        name: "even, |α|>0, |α^{C_p}|>0, |α^{C_q}|=0, |α^{C_pq}|≠0",
        symmetric: false,
        matches: |d| even(d) && d.e > 0 && d.p > 0 && d.q == 0 && d.pq != 0,
        value: |d| {
            if d.pq > 0 {
                det(vec![cq_z()])
            } else {
                det(vec![zq(), kq_z()])
            }
        },
    },
    Region {
        name: "even, |α|>0, |α^{C_p}|>0, |α^{C_q}|<0",
        symmetric: false,
        matches: |d| even(d) && d.e > 0 && d.p > 0 && d.q < 0,
        value: |d| match d.pq.signum() {
            1 => det(vec![cq_zq()]),
            0 => det(vec![z2(), cq_zq()]),
            _ => det(vec![cq_zq(), zq()]),
        },
    },
    Region {
        name: "even, |α|>0, |α^{C_p}|=|α^{C_q}|=0, |α^{C_pq}|≠0",
        symmetric: true,
        matches: |d| even(d) && d.e > 0 && d.p == 0 && d.q == 0 && d.pq != 0,
        value: |d| {
            if d.pq > 0 {
                det(vec![cp_z(), cq_z()])
            } else {
                det(vec![kp_z(), kq_z()])
            }
        },
    },
    Region {
        name: "even, |α|>0, |α^{C_p}|=0, |α^{C_q}|<0, |α^{C_pq}|≠0",
        symmetric: false,
        matches: |d| even(d) && d.e > 0 && d.p == 0 && d.q < 0 && d.pq != 0,
        value: |d| {
            if d.pq > 0 {
                det(vec![cp_z(), cq_zq()])
            } else {
                det(vec![cq_zq(), kp_z()])
            }
        },
    },
    Region {
        name: "even, |α|>0, |α^{C_p}|<0, |α^{C_q}|<0",
        symmetric: true,
        matches: |d| even(d) && d.e > 0 && d.p < 0 && d.q < 0,
        value: |d| {
            if d.pq == 0 {
                det(vec![z2(), cp_zp(), cq_zq()])
            } else {
                det(vec![cp_zp(), cq_zq()])
            }
        },
    },
    // Even, |α| = 0.
    Region {
        name: "even, |α|=0, |α^{C_p}|>0, |α^{C_q}|>0",
        symmetric: true,
        matches: |d| even(d) && d.e == 0 && d.p > 0 && d.q > 0,
        value: |d| match d.pq.signum() {
            1 => det(vec![Term::Lpq]),
            0 => det(vec![Term::Lpq, z2()]),
            _ => det(vec![Term::Lpq, zpq()]),
        },
    },
    Region {
        name: "even, |α|=0, |α^{C_p}|<0, |α^{C_q}|<0",
        symmetric: true,
        matches: |d| even(d) && d.e == 0 && d.p < 0 && d.q < 0,
        value: |d| {
            if d.pq == 0 {
                det(vec![Term::Rpq, z2()])
            } else {
                det(vec![Term::Rpq])
            }
        },
    },
    Region {
        name: "even, |α|=0, |α^{C_p}|>0, |α^{C_q}|<0",
        symmetric: false,
        matches: |d| even(d) && d.e == 0 && d.p > 0 && d.q < 0,
        value: |d| {
            let kl = lifted(Lift::K, Side::P, Atom::L);
            match d.pq.signum() {
                1 => det(vec![kl]),
                0 => det(vec![z2(), kl]),
                _ => det(vec![zq(), kl]),
            }
        },
    },
];

/// Names of every region that claims `dims`, with the orientation used.
pub fn matching_regions(dims: &FixedDims) -> Vec<(&'static str, bool)> {
    let mut hits = Vec::new();
    for r in REGIONS {
        if (r.matches)(dims) {
            hits.push((r.name, false));
        }
        if !r.symmetric && (r.matches)(&dims.swap()) {
            hits.push((r.name, true));
        }
    }
    hits
}

/// The table value of `H^α(S^0)` at the given fixed dimensions.
pub fn classify_point(dims: &FixedDims) -> Result<TableEntry> {
    dims.check_parity()?;
    let mut found: Option<(&str, TableEntry)> = None;
    for r in REGIONS {
        for swapped in [false, true] {
            if swapped && r.symmetric {
                continue;
            }
            let d = if swapped { dims.swap() } else { *dims };
            if !(r.matches)(&d) {
                continue;
            }
            let v = (r.value)(&d);
            let v = if swapped { v.mirror() } else { v };
            if let Some((other, _)) = &found {
                panic!("regions '{}' and '{}' both claim {}", other, r.name, dims);
            }
            found = Some((r.name, v));
        }
    }
    Ok(match found {
        Some((_, v)) => v,
        None => TableEntry::NotTabulated(format!("no region covers {}", dims)),
    })
}

/// Input to [`cohomology_point`].
#[derive(Clone, Debug)]
pub enum PointInput {
    Dims(FixedDims),
    Rep(VirtualRep),
}

/// `H^α(S^0)`. For `α = 0` given as a representation the answer is the
/// Burnside functor (`d = 1`).
pub fn cohomology_point(input: &PointInput, d: Option<i64>, p: u64, q: u64) -> Result<CohomologyAnswer> {
    let lat = Lattice::pq(p, q)?;
    let (dims, d) = match input {
        PointInput::Dims(dims) => (*dims, d),
        PointInput::Rep(r) => {
            if r.primes() != (p, q) {
                return Err(Error::InvalidParam("representation was built for other primes".into()));
            }
            (r.fixed_dims(), if r.is_zero() { d.or(Some(1)) } else { d })
        }
    };
    let entry = classify_point(&dims)?;
    // A known value of d pins the family down completely.
    if let (TableEntry::DependsOnChoice(f), PointInput::Rep(r), Some(1)) = (&entry, input, d) {
        if r.is_zero() {
            return realize_entry(TableEntry::Determined(f.with_d(1)), &lat, None);
        }
    }
    realize_entry(entry, &lat, d)
}
