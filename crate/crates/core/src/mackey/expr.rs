//! Formal direct sums of catalog functors.
//!
//! An [`Expr`] names a functor symbolically, independent of the actual
//! primes, so it can be mirrored (`p ↔ q`), printed, compared and finally
//! realized for given `p`, `q`. Terms are kept sorted by their ASCII name.
//!
//! ASCII grammar accepted by [`Expr::parse`] (Unicode forms are normalized first):
//!
//! ```text
//! expr  := "0" | term ("+" term)*
//! term  := "A" | "R_pq" | "L_pq" | "<<" coef ">>" | "A_{G/" level "}"
//!        | atom | lift "_" side ( "(" atom ")" | atom )
//! lift  := "E" | "Q" | "Ac" | "C" | "K"
//! atom  := "A_" side ["[" (int | "d") "]"] | "R_" side | "L_" side | "F_" side
//!        | "kappa_" side | "<" coef ">" ["_" side]
//! coef  := "Z" | "Z/p" | "Z/q" | "Z/pq" | "Z/" int
//! ```

use std::fmt;

use super::burnside::representable;
use super::catalog::{
    burnside_d, burnside_pq, const_pq, free_prime, kappa_prime, l_pq, l_prime, lift, r_pq, r_prime, Lift, Side,
};
use super::functor::{direct_sum_all, MackeyFunctor};
use super::lattice::{Lattice, Level};
use crate::error::{Error, Result};

/// Coefficient group of a constant functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coef {
    Z,
    P,
    Q,
    PQ,
    N(u64),
}

impl Coef {
    fn mirror(self) -> Self {
        match self {
            Coef::P => Coef::Q,
            Coef::Q => Coef::P,
            c => c,
        }
    }

    /// The order of the cyclic group, `0` for `Z`.
    pub fn order(self, p: u64, q: u64) -> u64 {
        match self {
            Coef::Z => 0,
            Coef::P => p,
            Coef::Q => q,
            Coef::PQ => p * q,
            Coef::N(n) => n,
        }
    }

    fn render(self, unicode: bool) -> String {
        let z = if unicode { "ℤ" } else { "Z" };
        match self {
            Coef::Z => z.into(),
            Coef::P => format!("{}/p", z),
            Coef::Q => format!("{}/q", z),
            Coef::PQ => format!("{}/pq", z),
            Coef::N(n) => format!("{}/{}", z, n),
        }
    }
}

/// A functor over a prime-order group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `A[d]`; `None` leaves `d` open.
    Burnside(Option<i64>),
    R,
    L,
    Const(Coef),
    Free,
    Kappa,
}

impl Atom {
    fn mirror(self) -> Self {
        match self {
            Atom::Const(c) => Atom::Const(c.mirror()),
            a => a,
        }
    }

    fn render(self, side: Side, unicode: bool, subscript_const: bool) -> String {
        let s = side.letter();
        match self {
            Atom::Burnside(Some(1)) => format!("A_{}", s),
            Atom::Burnside(Some(d)) => format!("A_{}[{}]", s, d),
            Atom::Burnside(None) => format!("A_{}[d]", s),
            Atom::R => format!("R_{}", s),
            Atom::L => format!("L_{}", s),
            Atom::Free => format!("F_{}", s),
            Atom::Kappa => format!("{}_{}", if unicode { "κ" } else { "kappa" }, s),
            Atom::Const(c) => {
                let (l, r) = if unicode { ("⟨", "⟩") } else { ("<", ">") };
                let sub = if subscript_const {
                    format!("_{}", s)
                } else {
                    String::new()
                };
                format!("{}{}{}{}", l, c.render(unicode), r, sub)
            }
        }
    }

    /// The functor over the prime of `side`.
    pub fn realize(self, side: Side, p: u64, q: u64) -> Result<MackeyFunctor> {
        let own = match side {
            Side::P => p,
            Side::Q => q,
        };
        let lat = Lattice::prime(own)?;
        match self {
            Atom::Burnside(Some(d)) => burnside_d(&lat, d),
            Atom::Burnside(None) => Err(Error::InvalidParam("A[d] needs a value for d".into())),
            Atom::R => r_prime(&lat),
            Atom::L => l_prime(&lat),
            Atom::Free => free_prime(&lat),
            Atom::Kappa => kappa_prime(&lat),
            Atom::Const(c) => super::catalog::const_prime(&lat, c.order(p, q)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// The Burnside functor of the whole group.
    Burnside,
    Rpq,
    Lpq,
    Const(Coef),
    Lifted {
        kind: Lift,
        side: Side,
        atom: Atom,
    },
    /// The representable `A_{G/H}`.
    Rep(Level),
    /// A functor over the prime of `side` alone.
    Prime(Side, Atom),
}

fn lift_name(kind: Lift, unicode: bool) -> &'static str {
    match (kind, unicode) {
        (Lift::E, _) => "E",
        (Lift::Q, true) => "𝒬",
        (Lift::Q, false) => "Q",
        (Lift::A, true) => "𝒜",
        (Lift::A, false) => "Ac",
        (Lift::C, true) => "𝒞",
        (Lift::C, false) => "C",
        (Lift::K, true) => "𝒦",
        (Lift::K, false) => "K",
    }
}

const REP_NAMES: [&str; 4] = ["e", "C_p", "C_q", "G"];

impl Term {
    pub fn mirror(self) -> Self {
        match self {
            Term::Const(c) => Term::Const(c.mirror()),
            Term::Lifted { kind, side, atom } => Term::Lifted {
                kind,
                side: side.other(),
                atom: atom.mirror(),
            },
            Term::Rep(l) => Term::Rep(match l {
                1 => 2,
                2 => 1,
                l => l,
            }),
            Term::Prime(s, a) => Term::Prime(s.other(), a.mirror()),
            t => t,
        }
    }

    pub fn render(self, unicode: bool) -> String {
        match self {
            Term::Burnside => "A".into(),
            Term::Rpq => "R_pq".into(),
            Term::Lpq => "L_pq".into(),
            Term::Const(c) => {
                let (l, r) = if unicode { ("⟨⟨", "⟩⟩") } else { ("<<", ">>") };
                format!("{}{}{}", l, c.render(unicode), r)
            }
            Term::Lifted { kind, side, atom } => {
                let inner = atom.render(side, unicode, false);
                let sep = if matches!(atom, Atom::Const(_)) { "" } else { " " };
                format!("{}_{}{}{}", lift_name(kind, unicode), side.letter(), sep, inner)
            }
            Term::Rep(l) => format!("A_{{G/{}}}", REP_NAMES[l as usize]),
            Term::Prime(side, atom) => atom.render(side, unicode, true),
        }
    }

    fn fill_d(self, d: i64) -> Self {
        match self {
            Term::Lifted {
                kind,
                side,
                atom: Atom::Burnside(None),
            } => Term::Lifted {
                kind,
                side,
                atom: Atom::Burnside(Some(d)),
            },
            Term::Prime(s, Atom::Burnside(None)) => Term::Prime(s, Atom::Burnside(Some(d))),
            t => t,
        }
    }

    fn has_free_d(self) -> bool {
        matches!(
            self,
            Term::Lifted {
                atom: Atom::Burnside(None),
                ..
            } | Term::Prime(_, Atom::Burnside(None))
        )
    }

    pub fn realize(self, p: u64, q: u64) -> Result<MackeyFunctor> {
        match self {
            Term::Burnside => burnside_pq(p, q),
            Term::Rpq => r_pq(p, q),
            Term::Lpq => l_pq(p, q),
            Term::Const(c) => const_pq(p, q, c.order(p, q)),
            Term::Lifted { kind, side, atom } => {
                let other = match side {
                    Side::P => q,
                    Side::Q => p,
                };
                lift(kind, side, &atom.realize(side, p, q)?, other)
            }
            Term::Rep(l) => Ok(representable(&Lattice::pq(p, q)?, l)),
            Term::Prime(..) => Err(Error::LatticeMismatch(format!(
                "{} lives over a prime-order group",
                self.render(false)
            ))),
        }
    }
}

/// A sorted direct sum of terms; the empty sum is the zero functor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Expr {
    terms: Vec<Term>,
}

impl Expr {
    pub fn zero() -> Self {
        Expr::default()
    }

    /// Sorts the terms and rewrites the lifts that are standard functors in disguise:
    /// `𝒜 A ≅ A`, `𝒦 R ≅ R_pq`, `𝒞 L ≅ L_pq` and `𝒬⟨C⟩ ≅ ⟨⟨C⟩⟩`.
    pub fn new(terms: Vec<Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().map(canonical).collect();
        terms.sort_by_key(|t| t.render(false));
        Expr { terms }
    }

    pub fn term(t: Term) -> Self {
        Expr::new(vec![t])
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &Expr) -> Expr {
        Expr::new(self.terms.iter().chain(&other.terms).copied().collect())
    }

    pub fn mirror(&self) -> Expr {
        Expr::new(self.terms.iter().map(|t| t.mirror()).collect())
    }

    /// Whether some `A[d]` still has `d` open.
    pub fn has_free_d(&self) -> bool {
        self.terms.iter().any(|t| t.has_free_d())
    }

    pub fn with_d(&self, d: i64) -> Expr {
        Expr::new(self.terms.iter().map(|t| t.fill_d(d)).collect())
    }

    /// Whether every term is a prime-order functor.
    pub fn is_prime_level(&self) -> bool {
        self.terms.iter().all(|t| matches!(t, Term::Prime(..)))
    }

    pub fn render(&self, unicode: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        if self.terms == [Term::Burnside] {
            return "A (Burnside)".into();
        }
        let sep = if unicode { " ⊕ " } else { " + " };
        self.terms
            .iter()
            .map(|t| t.render(unicode))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn ascii(&self) -> String {
        self.render(false)
    }

    /// The `C_pq`-functor named by this expression.
    pub fn realize(&self, p: u64, q: u64) -> Result<MackeyFunctor> {
        let lat = Lattice::pq(p, q)?;
        self.realize_with(&lat, |t| t.realize(p, q))
    }

    /// Realizes over `lat`: prime-order atoms on a prime lattice, everything else on `C_pq`.
    pub fn realize_on(&self, lat: &Lattice) -> Result<MackeyFunctor> {
        match *lat {
            Lattice::Pq { p, q } => self.realize(p, q),
            Lattice::Prime { p } => self.realize_with(lat, |t| match t {
                // Over a single prime the subscript only says which prime that is.
                Term::Prime(side, a) => {
                    let a = if side == Side::Q { a.mirror() } else { a };
                    if matches!(a, Atom::Const(Coef::Q | Coef::PQ)) {
                        return Err(Error::LatticeMismatch("coefficient needs both primes".into()));
                    }
                    a.realize(Side::P, p, 0)
                }
                Term::Burnside => a_prime(lat),
                _ => Err(Error::LatticeMismatch(format!(
                    "{} needs a C_pq lattice (or use the _p subscript)",
                    t.render(false)
                ))),
            }),
        }
    }

    fn realize_with(&self, lat: &Lattice, f: impl Fn(Term) -> Result<MackeyFunctor>) -> Result<MackeyFunctor> {
        let parts = self.terms.iter().map(|&t| f(t)).collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Ok(MackeyFunctor::zero(*lat));
        }
        Ok(direct_sum_all(&parts.iter().collect::<Vec<_>>())?.functor)
    }

    pub fn parse(s: &str) -> Result<Expr> {
        let norm = normalize(s);
        let mut p = Parser {
            s: norm.chars().filter(|c| !c.is_whitespace() || *c == ' ').collect(),
            i: 0,
        };
        p.skip_ws();
        if p.eat("0") {
            p.skip_ws();
            p.end()?;
            return Ok(Expr::zero());
        }
        let mut terms = vec![p.term()?];
        loop {
            p.skip_ws();
            if p.i == p.s.len() {
                break;
            }
            p.expect("+")?;
            p.skip_ws();
            terms.push(p.term()?);
        }
        Ok(Expr::new(terms))
    }
}

fn canonical(t: Term) -> Term {
    match t {
        Term::Lifted { kind, atom, .. } => match (kind, atom) {
            (Lift::A, Atom::Burnside(Some(1))) => Term::Burnside,
            (Lift::K, Atom::R) => Term::Rpq,
            (Lift::C, Atom::L) => Term::Lpq,
            (Lift::Q, Atom::Const(c)) => Term::Const(c),
            _ => t,
        },
        t => t,
    }
}

fn a_prime(lat: &Lattice) -> Result<MackeyFunctor> {
    burnside_d(lat, 1)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

fn normalize(s: &str) -> String {
    s.replace(" (Burnside)", "")
        .replace('𝒦', "K")
        .replace('𝒞', "C")
        .replace('𝒜', "Ac")
        .replace('𝒬', "Q")
        .replace('⟨', "<")
        .replace('⟩', ">")
        .replace('ℤ', "Z")
        .replace('κ', "kappa")
        .replace('⊕', "+")
}

struct Parser {
    s: Vec<char>,
    i: usize,
}

impl Parser {
    fn rest(&self) -> String {
        self.s[self.i..].iter().collect()
    }

    fn at(&self, lit: &str) -> bool {
        let n = lit.chars().count();
        self.i + n <= self.s.len() && self.s[self.i..self.i + n].iter().copied().eq(lit.chars())
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.at(lit) {
            self.i += lit.chars().count();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", lit)))
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::UnknownFunctor(format!("{} at '{}'", what, self.rest()))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i] == ' ' {
            self.i += 1;
        }
    }

    fn end(&self) -> Result<()> {
        if self.i == self.s.len() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }

    fn side(&mut self) -> Result<Side> {
        if self.eat("p") {
            Ok(Side::P)
        } else if self.eat("q") {
            Ok(Side::Q)
        } else {
            Err(self.error("expected p or q"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.i;
        if self.at("-") {
            self.i += 1;
        }
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        let t: String = self.s[start..self.i].iter().collect();
        t.parse().map_err(|_| self.error("expected an integer"))
    }

    fn coef(&mut self) -> Result<Coef> {
        self.expect("Z")?;
        if !self.eat("/") {
            return Ok(Coef::Z);
        }
        if self.eat("pq") {
            return Ok(Coef::PQ);
        }
        if self.eat("p") {
            return Ok(Coef::P);
        }
        if self.eat("q") {
            return Ok(Coef::Q);
        }
        let n = self.int()?;
        if n < 2 {
            return Err(self.error("cyclic order must be at least 2"));
        }
        Ok(Coef::N(n as u64))
    }

    /// An atom; `side` is the side forced by an enclosing lift.
    fn atom(&mut self, forced: Option<Side>) -> Result<(Side, Atom)> {
        let check = |p: &Parser, s: Side| -> Result<Side> {
            match forced {
                Some(f) if f != s => Err(p.error("atom and lift refer to different primes")),
                _ => Ok(s),
            }
        };
        if self.eat("<") {
            let c = self.coef()?;
            self.expect(">")?;
            let side = if self.eat("_") {
                self.side()?
            } else {
                forced.unwrap_or(Side::P)
            };
            return Ok((check(self, side)?, Atom::Const(c)));
        }
        for (name, atom) in [
            ("kappa_", Atom::Kappa),
            ("R_", Atom::R),
            ("L_", Atom::L),
            ("F_", Atom::Free),
        ] {
            if self.eat(name) {
                let s = self.side()?;
                return Ok((check(self, s)?, atom));
            }
        }
        if self.eat("A_") {
            let s = self.side()?;
            let d = if self.eat("[") {
                let d = if self.eat("d") { None } else { Some(self.int()?) };
                self.expect("]")?;
                d
            } else {
                Some(1)
            };
            return Ok((check(self, s)?, Atom::Burnside(d)));
        }
        Err(self.error("unknown functor"))
    }

    fn term(&mut self) -> Result<Term> {
        if self.eat("<<") {
            let c = self.coef()?;
            self.expect(">>")?;
            return Ok(Term::Const(c));
        }
        if self.eat("R_pq") {
            return Ok(Term::Rpq);
        }
        if self.eat("L_pq") {
            return Ok(Term::Lpq);
        }
        if self.eat("A_{G/") {
            let start = self.i;
            while self.i < self.s.len() && self.s[self.i] != '}' {
                self.i += 1;
            }
            let name: String = self.s[start..self.i].iter().collect();
            self.expect("}")?;
            let l = match name.as_str() {
                "e" => 0,
                "C_p" | "Cp" => 1,
                "C_q" | "Cq" => 2,
                "G" | "C_pq" | "Cpq" => 3,
                _ => return Err(Error::UnknownFunctor(format!("unknown orbit G/{}", name))),
            };
            return Ok(Term::Rep(l));
        }
        for (name, kind) in [
            ("Ac_", Lift::A),
            ("E_", Lift::E),
            ("Q_", Lift::Q),
            ("C_", Lift::C),
            ("K_", Lift::K),
        ] {
            if self.eat(name) {
                let side = self.side()?;
                self.skip_ws();
                let atom = if self.eat("(") {
                    self.skip_ws();
                    let a = self.atom(Some(side))?;
                    self.skip_ws();
                    self.expect(")")?;
                    a
                } else {
                    self.atom(Some(side))?
                };
                return Ok(Term::Lifted {
                    kind,
                    side,
                    atom: atom.1,
                });
            }
        }
        if self.at("A") && !self.at("A_") {
            self.i += 1;
            return Ok(Term::Burnside);
        }
        let (s, a) = self.atom(None)?;
        Ok(Term::Prime(s, a))
    }
}
