//! Text rendering of a Mackey functor: the subgroup diagram with the level
//! groups, then the restriction, transfer and nontrivial Weyl matrices.

use super::functor::MackeyFunctor;
use super::lattice::{Level, CP, CPQ, CQ, E};
use crate::linalg::GroupHom;

fn centered(s: &str, width: usize) -> String {
    let n = s.chars().count();
    let pad = width.saturating_sub(n) / 2;
    format!("{}{}", " ".repeat(pad), s).trim_end().to_string()
}

pub fn diagram(m: &MackeyFunctor) -> String {
    let lat = m.lattice();
    let label = |l: Level| format!("{}: {}", lat.level_name(l), m.group(l));
    let mut out = String::new();
    if lat.is_pq() {
        let (top, left, right, bottom) = (label(CPQ), label(CP), label(CQ), label(E));
        let gap = 6;
        let mid = left.chars().count() + gap + right.chars().count();
        let width = mid.max(top.chars().count()).max(bottom.chars().count());
        let lpad = (width - mid) / 2;
        let lw = left.chars().count();
        let slash = format!(
            "{}/{}\\",
            " ".repeat(lpad + lw / 2 + 1),
            " ".repeat(gap + right.chars().count() / 2 + lw - lw / 2 - 2)
        );
        let back = slash.replace('/', "#").replace('\\', "/").replace('#', "\\");
        out += &centered(&top, width);
        out += "\n";
        out += slash.trim_end();
        out += "\n";
        out += format!("{}{}{}{}", " ".repeat(lpad), left, " ".repeat(gap), right).trim_end();
        out += "\n";
        out += back.trim_end();
        out += "\n";
        out += &centered(&bottom, width);
        out += "\n";
    } else {
        let (top, bottom) = (label(1), label(E));
        let width = top.chars().count().max(bottom.chars().count());
        out += &centered(&top, width);
        out += "\n";
        out += &centered("|", width);
        out += "\n";
        out += &centered(&bottom, width);
        out += "\n";
    }
    let name = |l: Level| lat.level_name(l);
    let show = |f: &GroupHom| f.matrix().to_string();
    for (h, k) in lat.edges() {
        out += &format!("res {} -> {}: {}\n", name(k), name(h), show(m.res_edge(h, k)));
    }
    for (h, k) in lat.edges() {
        out += &format!("tr  {} -> {}: {}\n", name(h), name(k), show(m.tr_edge(h, k)));
    }
    for l in (0..=lat.top()).rev() {
        let w = m.weyl(l);
        if !w.same_map(&GroupHom::identity(m.group(l))) {
            out += &format!("weyl {}: {}\n", name(l), show(w));
        }
    }
    out
}
