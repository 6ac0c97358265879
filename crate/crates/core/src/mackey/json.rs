//! JSON form of Mackey functors and homomorphisms.
//!
//! ```text
//! functor := { "lattice": {"kind": "prime", "p": 3} | {"kind": "pq", "p": 3, "q": 5},
//!              "levels": [ { "level": "e", "rank": r, "torsion": [d, ...],
//!                            "presentation": { "generators": g, "relations": matrix } }, ... ],
//!              "res":  [ { "from": "C3", "to": "e", "matrix": matrix }, ... ],
//!              "tr":   [ { "from": "e", "to": "C3", "matrix": matrix }, ... ],
//!              "weyl": [ { "level": "e", "matrix": matrix }, ... ] }
//! matrix  := { "rows": r, "cols": c, "entries": [[...], ...] }
//! hom     := { "domain": functor, "codomain": functor,
//!              "maps": [ { "level": "e", "matrix": matrix }, ... ] }
//! ```
//!
//! Levels are listed bottom up (`e` first), edges in [`Lattice::edges`] order.
//! Matrices act on normal-form coordinates. Integers that do not fit in an
//! `i64` are written as decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::functor::{MackeyFunctor, MackeyHom};
use super::lattice::{Lattice, Level};
use crate::error::{Error, Result};
use crate::linalg::{FgGroup, GroupHom, IntMatrix};

fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    v.as_str()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected an integer, got {}", v)))
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(int_to_json).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| Error::Parse(format!("missing field '{}'", name)))
}

fn usize_field(v: &Value, name: &str) -> Result<usize> {
    field(v, name)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("field '{}' is not a count", name)))
}

fn array<'a>(v: &'a Value, name: &str) -> Result<&'a Vec<Value>> {
    field(v, name)?
        .as_array()
        .ok_or_else(|| Error::Parse(format!("field '{}' is not an array", name)))
}

pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let rows = usize_field(v, "rows")?;
    let cols = usize_field(v, "cols")?;
    let entries = array(v, "entries")?;
    if entries.len() != rows {
        return Err(Error::Parse(format!(
            "matrix declares {} rows, has {}",
            rows,
            entries.len()
        )));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("matrix row is not an array".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "matrix declares {} columns, row has {}",
                cols,
                row.len()
            )));
        }
        for x in row {
            data.push(int_from_json(x)?);
        }
    }
    Ok(IntMatrix::from_vec(rows, cols, data))
}

fn lattice_from_json(v: &Value) -> Result<Lattice> {
    let lat: Lattice = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("lattice: {}", e)))?;
    // Re-run the constructor checks on the primes.
    match lat {
        Lattice::Prime { p } => Lattice::prime(p),
        Lattice::Pq { p, q } => Lattice::pq(p, q),
    }
}

fn group_to_json(lat: &Lattice, l: Level, g: &FgGroup) -> Value {
    let pres = g.presentation();
    json!({
        "level": lat.level_name(l),
        "rank": g.rank(),
        "torsion": g.torsion().iter().map(int_to_json).collect::<Vec<_>>(),
        "presentation": { "generators": pres.gens, "relations": matrix_to_json(&pres.rels) },
    })
}

fn group_from_json(v: &Value) -> Result<FgGroup> {
    let pres = field(v, "presentation")?;
    let gens = usize_field(pres, "generators")?;
    let rels = matrix_from_json(field(pres, "relations")?)?;
    if rels.rows() != gens {
        return Err(Error::Parse("relation matrix must have one row per generator".into()));
    }
    let g = FgGroup::presented(gens, &rels);
    let torsion = array(v, "torsion")?
        .iter()
        .map(int_from_json)
        .collect::<Result<Vec<_>>>()?;
    if g.rank() != usize_field(v, "rank")? || g.torsion() != torsion.as_slice() {
        return Err(Error::Parse(format!(
            "presentation gives {} but rank/torsion fields disagree",
            g
        )));
    }
    Ok(g)
}

pub fn functor_to_json(m: &MackeyFunctor) -> Value {
    let lat = m.lattice();
    let levels: Vec<Value> = (0..=lat.top()).map(|l| group_to_json(&lat, l, m.group(l))).collect();
    let edge = |h: Level, k: Level, down: bool| {
        let (from, to, f) = if down {
            (k, h, m.res_edge(h, k))
        } else {
            (h, k, m.tr_edge(h, k))
        };
        json!({ "from": lat.level_name(from), "to": lat.level_name(to), "matrix": matrix_to_json(f.matrix()) })
    };
    let res: Vec<Value> = lat.edges().into_iter().map(|(h, k)| edge(h, k, true)).collect();
    let tr: Vec<Value> = lat.edges().into_iter().map(|(h, k)| edge(h, k, false)).collect();
    let weyl: Vec<Value> = (0..=lat.top())
        .map(|l| json!({ "level": lat.level_name(l), "matrix": matrix_to_json(m.weyl(l).matrix()) }))
        .collect();
    json!({
        "lattice": serde_json::to_value(lat).expect("lattice serializes"),
        "levels": levels,
        "res": res,
        "tr": tr,
        "weyl": weyl,
    })
}

/// Parses a functor. Shapes and well-definedness of every map are checked;
/// the Mackey axioms are left to [`MackeyFunctor::validate`].
pub fn functor_from_json(v: &Value) -> Result<MackeyFunctor> {
    let lat = lattice_from_json(field(v, "lattice")?)?;
    let levels = array(v, "levels")?;
    if levels.len() != lat.num_levels() {
        return Err(Error::Parse(format!("expected {} levels", lat.num_levels())));
    }
    let mut groups = Vec::new();
    for (l, g) in levels.iter().enumerate() {
        let name = field(g, "level")?.as_str().unwrap_or_default();
        if lat.parse_level(name)? as usize != l {
            return Err(Error::Parse(format!("level '{}' out of order", name)));
        }
        groups.push(group_from_json(g)?);
    }
    let edges = lat.edges();
    let read_edges = |name: &str, down: bool| -> Result<Vec<IntMatrix>> {
        let list = array(v, name)?;
        if list.len() != edges.len() {
            return Err(Error::Parse(format!("expected {} {} maps", edges.len(), name)));
        }
        let mut out = Vec::new();
        for (e, &(h, k)) in list.iter().zip(&edges) {
            let from = lat.parse_level(field(e, "from")?.as_str().unwrap_or_default())?;
            let to = lat.parse_level(field(e, "to")?.as_str().unwrap_or_default())?;
            let want = if down { (k, h) } else { (h, k) };
            if (from, to) != want {
                return Err(Error::Parse(format!("{} map {}->{} out of order", name, from, to)));
            }
            out.push(matrix_from_json(field(e, "matrix")?)?);
        }
        Ok(out)
    };
    let res = read_edges("res", true)?;
    let tr = read_edges("tr", false)?;
    let weyl_list = array(v, "weyl")?;
    if weyl_list.len() != lat.num_levels() {
        return Err(Error::Parse("one weyl matrix per level".into()));
    }
    let weyl = weyl_list
        .iter()
        .map(|w| matrix_from_json(field(w, "matrix")?))
        .collect::<Result<Vec<_>>>()?;
    MackeyFunctor::from_matrices(lat, groups, res, tr, weyl)
}

pub fn hom_to_json(f: &MackeyHom) -> Value {
    let lat = f.domain().lattice();
    let maps: Vec<Value> = (0..=lat.top())
        .map(|l| json!({ "level": lat.level_name(l), "matrix": matrix_to_json(f.at(l).matrix()) }))
        .collect();
    json!({
        "domain": functor_to_json(f.domain()),
        "codomain": functor_to_json(f.codomain()),
        "maps": maps,
    })
}

pub fn hom_from_json(v: &Value) -> Result<MackeyHom> {
    let dom = functor_from_json(field(v, "domain")?)?;
    let cod = functor_from_json(field(v, "codomain")?)?;
    if dom.lattice() != cod.lattice() {
        return Err(Error::LatticeMismatch("domain and codomain".into()));
    }
    let list = array(v, "maps")?;
    if list.len() != dom.lattice().num_levels() {
        return Err(Error::Parse("one map per level".into()));
    }
    let mut maps = Vec::new();
    for (l, m) in list.iter().enumerate() {
        let mat = matrix_from_json(field(m, "matrix")?)?;
        maps.push(GroupHom::new(
            dom.group(l as Level).clone(),
            cod.group(l as Level).clone(),
            mat,
        )?);
    }
    MackeyHom::new(dom, cod, maps)
}
