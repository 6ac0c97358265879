//! Virtual representations of `C_pq` and their fixed-point dimensions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mackey::Lattice;

/// `n·1 + Σ n_k ξ^k` with `k` folded into `[1, (pq−1)/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    p: u64,
    q: u64,
    trivial: i64,
    twists: BTreeMap<u64, i64>,
}

/// Reduces `k` mod `pq` and identifies `ξ^k` with its conjugate. Multiples of `pq` give 0.
pub fn fold_exponent(k: i64, p: u64, q: u64) -> u64 {
    let n = (p * q) as i64;
    let r = k.rem_euclid(n) as u64;
    r.min(p * q - r)
}

impl VirtualRep {
    pub fn zero(p: u64, q: u64) -> Result<Self> {
        Lattice::pq(p, q)?;
        Ok(VirtualRep {
            p,
            q,
            trivial: 0,
            twists: BTreeMap::new(),
        })
    }

    pub fn trivial(p: u64, q: u64, n: i64) -> Result<Self> {
        let mut r = Self::zero(p, q)?;
        r.trivial = n;
        Ok(r)
    }

    /// `ξ^k` for any integer `k`; `ξ^0` is two trivial summands.
    pub fn xi(p: u64, q: u64, k: i64) -> Result<Self> {
        let mut r = Self::zero(p, q)?;
        r.add_twist(k, 1);
        Ok(r)
    }

    pub fn from_parts(p: u64, q: u64, trivial: i64, twists: &BTreeMap<u64, i64>) -> Result<Self> {
        let mut r = Self::trivial(p, q, trivial)?;
        for (&k, &n) in twists {
            r.add_twist(k as i64, n);
        }
        Ok(r)
    }

    pub fn primes(&self) -> (u64, u64) {
        (self.p, self.q)
    }

    pub fn trivial_part(&self) -> i64 {
        self.trivial
    }

    pub fn twists(&self) -> &BTreeMap<u64, i64> {
        &self.twists
    }

    pub fn add_twist(&mut self, k: i64, n: i64) {
        let f = fold_exponent(k, self.p, self.q);
        if f == 0 {
            self.trivial += 2 * n;
            return;
        }
        let e = self.twists.entry(f).or_insert(0);
        *e += n;
        if *e == 0 {
            self.twists.remove(&f);
        }
    }

    pub fn add(&self, other: &VirtualRep) -> VirtualRep {
        let mut r = self.clone();
        r.trivial += other.trivial;
        for (&k, &n) in &other.twists {
            r.add_twist(k as i64, n);
        }
        r
    }

    pub fn scale(&self, c: i64) -> VirtualRep {
        let mut r = self.clone();
        r.trivial *= c;
        r.twists = r
            .twists
            .into_iter()
            .filter(|_| c != 0)
            .map(|(k, n)| (k, n * c))
            .collect();
        r
    }

    pub fn sub(&self, other: &VirtualRep) -> VirtualRep {
        self.add(&other.scale(-1))
    }

    /// Every multiplicity non-negative.
    pub fn is_honest(&self) -> bool {
        self.trivial >= 0 && self.twists.values().all(|&n| n >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.trivial == 0 && self.twists.is_empty()
    }

    pub fn fixed_dims(&self) -> FixedDims {
        let n = self.trivial;
        let sum = |pred: &dyn Fn(u64) -> bool| -> i64 {
            self.twists.iter().filter(|(k, _)| pred(**k)).map(|(_, n)| 2 * n).sum()
        };
        FixedDims {
            e: n + sum(&|_| true),
            p: n + sum(&|k| k % self.p == 0),
            q: n + sum(&|k| k % self.q == 0),
            pq: n,
        }
    }

    /// Parses signed combinations of `1` and `xi^k`, e.g. `"xi^3 + xi^5 - 4"`, `"2xi - 3*xi^-2"`.
    pub fn parse(p: u64, q: u64, s: &str) -> Result<VirtualRep> {
        let mut rep = Self::zero(p, q)?;
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .replace('ξ', "xi");
        if t.is_empty() {
            return Err(Error::Parse("empty representation".into()));
        }
        let bad = || Error::Parse(format!("cannot parse representation '{}'", s));
        let chars: Vec<char> = t.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coef: Option<i64> = if i > start {
                Some(chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?)
            } else {
                None
            };
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            if chars[i..].starts_with(&['x', 'i']) {
                i += 2;
                let mut k = 1i64;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let ks = i;
                    if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    k = chars[ks..i].iter().collect::<String>().parse().map_err(|_| bad())?;
                }
                rep.add_twist(k, sign * coef.unwrap_or(1));
            } else {
                rep.trivial += sign * coef.ok_or_else(bad)?;
            }
        }
        Ok(rep)
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i64, String)> = self.twists.iter().map(|(k, n)| (*n, format!("xi^{}", k))).collect();
        if self.trivial != 0 {
            parts.push((self.trivial, String::new()));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (n, name)) in parts.iter().enumerate() {
            let sign = if *n < 0 { "-" } else { "+" };
            if i == 0 {
                if *n < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let a = n.abs();
            match (a, name.is_empty()) {
                (_, true) => write!(f, "{}", a)?,
                (1, false) => write!(f, "{}", name)?,
                _ => write!(f, "{}{}", a, name)?,
            }
        }
        Ok(())
    }
}

/// `(|α|, |α^{C_p}|, |α^{C_q}|, |α^{C_pq}|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedDims {
    pub e: i64,
    pub p: i64,
    pub q: i64,
    pub pq: i64,
}

impl FixedDims {
    pub fn new(e: i64, p: i64, q: i64, pq: i64) -> Self {
        FixedDims { e, p, q, pq }
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.e, self.p, self.q, self.pq]
    }

    pub fn check_parity(&self) -> Result<()> {
        let par = self.e.rem_euclid(2);
        if [self.p, self.q, self.pq].iter().all(|x| x.rem_euclid(2) == par) {
            Ok(())
        } else {
            Err(Error::Parity(format!("fixed dimensions {} mix parities", self)))
        }
    }

    pub fn is_even(&self) -> bool {
        self.e.rem_euclid(2) == 0
    }

    /// Exchanges the roles of `p` and `q`.
    pub fn swap(&self) -> Self {
        FixedDims::new(self.e, self.q, self.p, self.pq)
    }

    pub fn add(&self, o: &FixedDims) -> Self {
        FixedDims::new(self.e + o.e, self.p + o.p, self.q + o.q, self.pq + o.pq)
    }

    pub fn neg(&self) -> Self {
        FixedDims::new(-self.e, -self.p, -self.q, -self.pq)
    }

    /// Adds `k` trivial summands.
    pub fn shift(&self, k: i64) -> Self {
        FixedDims::new(self.e + k, self.p + k, self.q + k, self.pq + k)
    }

    pub fn parse(s: &str) -> Result<FixedDims> {
        let v: Vec<i64> = s
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("expected four comma-separated integers, got '{}'", s)))?;
        match v[..] {
            [e, p, q, pq] => Ok(FixedDims::new(e, p, q, pq)),
            _ => Err(Error::Parse(format!("expected four integers, got {}", v.len()))),
        }
    }
}

impl fmt::Display for FixedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.e, self.p, self.q, self.pq)
    }
}

/// A representation with the given fixed dimensions, using only `1`, `ξ`, `ξ^p`, `ξ^q`.
pub fn realizable(dims: &FixedDims, p: u64, q: u64) -> Result<VirtualRep> {
    dims.check_parity()?;
    let mut r = VirtualRep::trivial(p, q, dims.pq)?;
    r.add_twist(p as i64, (dims.p - dims.pq) / 2);
    r.add_twist(q as i64, (dims.q - dims.pq) / 2);
    r.add_twist(1, (dims.e - dims.p - dims.q + dims.pq) / 2);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts fixed real dimensions of `ξ^k` under `g^m` directly from roots of unity.
    fn oracle_dims(rep: &VirtualRep) -> FixedDims {
        let (p, q) = rep.primes();
        let n = p * q;
        let fixed = |m: u64| -> i64 {
            let mut d = rep.trivial_part();
            for (&k, &c) in rep.twists() {
                if (k * m).is_multiple_of(n) {
                    d += 2 * c;
                }
            }
            d
        };
        // Subgroup generators: e by g^n, C_p by g^q, C_q by g^p, G by g.
        FixedDims::new(fixed(n), fixed(q), fixed(p), fixed(1))
    }

    #[test]
    fn dims_examples() {
        let r = VirtualRep::parse(3, 5, "xi^3 - 2").unwrap();
        assert_eq!(r.fixed_dims(), FixedDims::new(0, 0, -2, -2));
        assert_eq!(
            VirtualRep::xi(3, 5, 1).unwrap().fixed_dims(),
            FixedDims::new(2, 0, 0, 0)
        );
        assert_eq!(VirtualRep::zero(3, 5).unwrap().fixed_dims(), FixedDims::new(0, 0, 0, 0));
    }

    #[test]
    fn folding() {
        let r = VirtualRep::parse(3, 5, "xi^-1").unwrap();
        assert_eq!(r, VirtualRep::xi(3, 5, 1).unwrap());
        let r = VirtualRep::parse(3, 5, "xi^15 + xi^14 - xi^1").unwrap();
        assert_eq!(r, VirtualRep::trivial(3, 5, 2).unwrap());
        assert_eq!(
            VirtualRep::parse(3, 5, "2xi^2 - 3*xi^7 + 4").unwrap().to_string(),
            "2xi^2 - 3xi^7 + 4"
        );
        assert!(VirtualRep::parse(3, 5, "xi^").is_err());
        assert!(VirtualRep::parse(3, 5, "y").is_err());
    }

    #[test]
    fn fixed_dims_match_oracle() {
        for (p, q) in [(3, 5), (3, 7), (5, 7)] {
            for k in 1..(p * q) as i64 {
                for n in [-2, 1, 3] {
                    let r = VirtualRep::xi(p, q, k)
                        .unwrap()
                        .scale(n)
                        .add(&VirtualRep::trivial(p, q, 1).unwrap());
                    assert_eq!(r.fixed_dims(), oracle_dims(&r));
                }
            }
        }
    }

    #[test]
    fn realizable_inverts() {
        for dims in [
            FixedDims::new(0, 0, 0, 0),
            FixedDims::new(2, 0, 0, 0),
            FixedDims::new(1, 1, 1, 1),
            FixedDims::new(-3, 5, -1, 7),
        ] {
            assert_eq!(realizable(&dims, 3, 5).unwrap().fixed_dims(), dims);
        }
        assert_eq!(
            realizable(&FixedDims::new(2, 0, 0, 0), 3, 5).unwrap(),
            VirtualRep::xi(3, 5, 1).unwrap()
        );
        assert!(matches!(
            realizable(&FixedDims::new(1, 0, 0, 0), 3, 5),
            Err(Error::Parity(_))
        ));
    }
}
