//! Subgroup lattices of `C_p` and `C_pq`.
//!
//! Levels are small bitmasks: bit 0 set means the subgroup contains the
//! order-`p` subgroup, bit 1 that it contains the order-`q` subgroup. Over
//! `C_pq` the levels are `e = 0`, `C_p = 1`, `C_q = 2`, `C_pq = 3`; over a
//! cyclic group of prime order only `0` and `1` occur.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Level = u8;

pub const E: Level = 0;
pub const CP: Level = 1;
pub const CQ: Level = 2;
pub const CPQ: Level = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Lattice {
    /// Cyclic of prime order.
    Prime { p: u64 },
    /// Cyclic of order `p q` for distinct odd primes.
    Pq { p: u64, q: u64 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `a` modulo `m` (both coprime, `m > 1`).
pub fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let k = r / new_r;
        (t, new_t) = (new_t, t - k * new_t);
        (r, new_r) = (new_r, r - k * new_r);
    }
    assert_eq!(r, 1, "{} is not invertible mod {}", a, m);
    t.rem_euclid(m as i64) as u64
}

impl Lattice {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p == 2 {
            return Err(Error::InvalidParam(format!("{} is not an odd prime", p)));
        }
        Ok(Lattice::Prime { p })
    }

    pub fn pq(p: u64, q: u64) -> Result<Self> {
        Self::prime(p)?;
        Self::prime(q)?;
        if p == q {
            return Err(Error::InvalidParam("p and q must be distinct".into()));
        }
        Ok(Lattice::Pq { p, q })
    }

    pub fn is_pq(&self) -> bool {
        matches!(self, Lattice::Pq { .. })
    }

    pub fn order(&self) -> u64 {
        match *self {
            Lattice::Prime { p } => p,
            Lattice::Pq { p, q } => p * q,
        }
    }

    pub fn top(&self) -> Level {
        match self {
            Lattice::Prime { .. } => 1,
            Lattice::Pq { .. } => 3,
        }
    }

    /// All levels, top first.
    pub fn levels(&self) -> Vec<Level> {
        match self {
            Lattice::Prime { .. } => vec![1, 0],
            Lattice::Pq { .. } => vec![3, 1, 2, 0],
        }
    }

    pub fn num_levels(&self) -> usize {
        self.levels().len()
    }

    /// `H ⊆ K`
    pub fn contains(&self, h: Level, k: Level) -> bool {
        h & !k == 0
    }

    pub fn meet(&self, h: Level, k: Level) -> Level {
        h & k
    }

    pub fn join(&self, h: Level, k: Level) -> Level {
        h | k
    }

    /// Order of the subgroup at a level.
    pub fn subgroup_order(&self, h: Level) -> u64 {
        self.order() / self.index(h)
    }

    /// `[G : H]`, the number of points of `G/H`.
    pub fn index(&self, h: Level) -> u64 {
        match *self {
            Lattice::Prime { p } => {
                if h & 1 == 1 {
                    1
                } else {
                    p
                }
            }
            Lattice::Pq { p, q } => {
                let a = if h & 1 == 1 { 1 } else { p };
                let b = if h & 2 == 2 { 1 } else { q };
                a * b
            }
        }
    }

    /// `[K : H]` for `H ⊆ K`.
    pub fn rel_index(&self, h: Level, k: Level) -> u64 {
        self.index(h) / self.index(k)
    }

    /// Covering relations `(H, K)` with `H ⊂ K` maximal.
    pub fn edges(&self) -> Vec<(Level, Level)> {
        match self {
            Lattice::Prime { .. } => vec![(0, 1)],
            Lattice::Pq { .. } => vec![(1, 3), (2, 3), (0, 1), (0, 2)],
        }
    }

    pub fn edge_index(&self, h: Level, k: Level) -> Option<usize> {
        self.edges().iter().position(|&e| e == (h, k))
    }

    /// A chain of covering edges from `K` down to `H`, as `(lower, upper)` pairs listed top down.
    pub fn chain(&self, h: Level, k: Level) -> Vec<(Level, Level)> {
        assert!(self.contains(h, k), "level {} is not below {}", h, k);
        let mut out = Vec::new();
        let mut cur = k;
        while cur != h {
            // Drop the lowest bit that is not in `h`.
            let diff = cur & !h;
            let bit = diff & diff.wrapping_neg();
            let next = cur & !bit;
            out.push((next, cur));
            cur = next;
        }
        out
    }

    /// Levels below or equal to `h`, top first.
    pub fn subgroups_of(&self, h: Level) -> Vec<Level> {
        self.levels().into_iter().filter(|&l| self.contains(l, h)).collect()
    }

    pub fn level_name(&self, h: Level) -> String {
        let n = self.subgroup_order(h);
        if n == 1 {
            "e".into()
        } else {
            format!("C{}", n)
        }
    }

    pub fn parse_level(&self, s: &str) -> Result<Level> {
        let t = s.trim();
        for l in self.levels() {
            if t == self.level_name(l) {
                return Ok(l);
            }
        }
        let sym = match (t, self) {
            ("e", _) => Some(0),
            ("G", _) => Some(self.top()),
            ("C_p" | "Cp", _) => Some(1),
            ("C_q" | "Cq", Lattice::Pq { .. }) => Some(2),
            ("C_pq" | "Cpq", Lattice::Pq { .. }) => Some(3),
            _ => None,
        };
        sym.ok_or_else(|| Error::Parse(format!("unknown subgroup '{}'", s)))
    }

    /// Exponent `e` with `g^e` generating the order-`p` subgroup and
    /// mapping to the chosen generator of `C_p` under `C_pq ≅ C_p × C_q`.
    pub fn p_part_exponent(&self) -> u64 {
        match *self {
            Lattice::Prime { .. } => 1,
            Lattice::Pq { p, q } => q * inv_mod(q, p),
        }
    }

    /// Same for the order-`q` subgroup.
    pub fn q_part_exponent(&self) -> u64 {
        match *self {
            Lattice::Prime { .. } => 1,
            Lattice::Pq { p, q } => p * inv_mod(p, q),
        }
    }

    pub fn primes(&self) -> (u64, Option<u64>) {
        match *self {
            Lattice::Prime { p } => (p, None),
            Lattice::Pq { p, q } => (p, Some(q)),
        }
    }
}
