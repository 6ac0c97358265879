use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mackey::cohomology::{
    cohomology_orbit, cohomology_point, cohomology_sphere, CohomologyAnswer, FixedDims, PointInput, VirtualRep,
};
use mackey::error::Error;
use mackey::freeness::{analyze, generator_table, grassmannian_complex, projective_space_complex, CellComplex};
use mackey::homological::{ext1_with, hom_mackey, CoverOrder};
use mackey::linalg::FgGroup;
use mackey::mackey::diagram::diagram;
use mackey::mackey::expr::Expr;
use mackey::mackey::{functor_from_json, functor_to_json, hom_to_json, Lattice, MackeyFunctor};

#[derive(Parser)]
#[command(
    name = "mackey",
    version,
    about = "Mackey functors and RO(C_pq)-graded cohomology of a point"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Primes {
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long, default_value_t = 5)]
    q: u64,
}

#[derive(Args)]
struct Degree {
    /// Fixed-point dimensions `|α|,|α^{C_p}|,|α^{C_q}|,|α^{C_pq}|`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "rep")]
    dims: Option<String>,
    /// A virtual representation such as "xi^3 + xi^5 - 4".
    #[arg(long, allow_hyphen_values = true)]
    rep: Option<String>,
    /// Value of the free parameter of a dependent family.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// H^α(S^0).
    Point {
        #[command(flatten)]
        primes: Primes,
        #[command(flatten)]
        degree: Degree,
    },
    /// H^α(C_pq/H_+) for H = e, C_p or C_q.
    Orbit {
        #[command(flatten)]
        primes: Primes,
        #[command(flatten)]
        degree: Degree,
        #[arg(long = "H", short = 'H')]
        h: String,
    },
    /// H^α(S(ξ^j)_+).
    Sphere {
        #[command(flatten)]
        primes: Primes,
        #[command(flatten)]
        degree: Degree,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
    /// Hom(M, N) with generators. Without --q the functors live over C_p.
    Hom(PairArgs),
    /// Ext^1(M, N).
    Ext(PairArgs),
    /// Freeness check and generator table for an even cell complex.
    Free {
        /// Complex in JSON form.
        file: Option<PathBuf>,
        #[arg(long)]
        cpn: Option<u64>,
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        grassmann: Option<Vec<usize>>,
        #[command(flatten)]
        primes: Primes,
        /// Print the complex as JSON instead of checking it.
        #[arg(long)]
        emit: bool,
    },
    /// Checks the Mackey axioms for a functor file or a catalog expression.
    Validate {
        target: String,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long)]
        q: Option<u64>,
    },
}

#[derive(Args)]
struct PairArgs {
    m: String,
    n: String,
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long)]
    q: Option<u64>,
    /// Order in which projective covers are built.
    #[arg(long, value_enum, default_value_t = Order::TopDown)]
    order: Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    TopDown,
    BottomUp,
}

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotTabulated(_) => 3,
            Error::Hypothesis(_) => 4,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

type Out = Result<(String, u8), Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = cli.format;
    let res = match cli.cmd {
        Cmd::Point { primes, degree } => point(fmt, &primes, &degree),
        Cmd::Orbit { primes, degree, h } => orbit(fmt, &primes, &degree, &h),
        Cmd::Sphere { primes, degree, j } => sphere(fmt, &primes, &degree, j),
        Cmd::Hom(a) => pair(fmt, &a, false),
        Cmd::Ext(a) => pair(fmt, &a, true),
        Cmd::Free {
            file,
            cpn,
            grassmann,
            primes,
            emit,
        } => free(fmt, file.as_deref(), cpn, grassmann, &primes, emit),
        Cmd::Validate { target, p, q } => validate(fmt, &target, p, q),
    };
    match res {
        Ok((text, code)) => {
            print!("{}", text);
            ExitCode::from(code)
        }
        Err(Fail(code, msg)) => {
            if fmt == Format::Json {
                println!("{}", json!({ "error": msg, "exit": code }));
            } else {
                eprintln!("error: {}", msg);
            }
            ExitCode::from(code)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn degree_input(primes: &Primes, degree: &Degree) -> Result<(PointInput, FixedDims, String), Fail> {
    match (&degree.dims, &degree.rep) {
        (Some(d), None) => {
            let dims = FixedDims::parse(d)?;
            dims.check_parity()?;
            Ok((PointInput::Dims(dims), dims, dims.to_string()))
        }
        (None, Some(r)) => {
            let rep = VirtualRep::parse(primes.p, primes.q, r)?;
            let dims = rep.fixed_dims();
            Ok((
                PointInput::Rep(rep.clone()),
                dims,
                format!("α = {}, dims {}", rep, dims),
            ))
        }
        _ => Err(Fail(2, "give exactly one of --dims or --rep".into())),
    }
}

fn answer_json(ans: &CohomologyAnswer) -> Value {
    match ans {
        CohomologyAnswer::Determined { expr, functor } => json!({
            "status": "determined",
            "expr": expr.render(true),
            "ascii": expr.ascii(),
            "functor": functor_to_json(functor),
        }),
        CohomologyAnswer::DependsOnChoice {
            family,
            d,
            realized,
            groups,
        } => json!({
            "status": "depends_on_choice",
            "family": family.render(true),
            "ascii": family.ascii(),
            "d": d,
            "value": d.map(|d| family.with_d(d).render(true)),
            "functor": realized.as_ref().map(functor_to_json),
            "groups": groups.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        }),
        CohomologyAnswer::NotTabulated(why) => json!({ "status": "not_tabulated", "reason": why }),
    }
}

fn answer_text(title: &str, ans: &CohomologyAnswer, lat: &Lattice) -> Result<String, Fail> {
    let mut out = format!("{}\n", title);
    match ans {
        CohomologyAnswer::Determined { expr, functor } => {
            out += &format!("{}\n\n{}", expr, diagram(functor));
        }
        CohomologyAnswer::DependsOnChoice {
            family, d, realized, ..
        } => {
            out += &format!("{}  (depends on d)\n", family);
            let d = d.unwrap_or(1);
            let value = family.with_d(d);
            let functor = match realized {
                Some(m) => m.clone(),
                None => value.realize_on(lat)?,
            };
            out += &format!("d = {}: {}\n\n{}", d, value, diagram(&functor));
        }
        CohomologyAnswer::NotTabulated(why) => return Err(Fail(3, format!("not tabulated: {}", why))),
    }
    Ok(out)
}

fn emit(fmt: Format, title: &str, input: Value, ans: CohomologyAnswer, lat: &Lattice) -> Out {
    match fmt {
        Format::Text => Ok((answer_text(title, &ans, lat)?, 0)),
        Format::Json => {
            let code = if matches!(ans, CohomologyAnswer::NotTabulated(_)) {
                3
            } else {
                0
            };
            Ok((pretty(&json!({ "input": input, "answer": answer_json(&ans) })), code))
        }
    }
}

fn point(fmt: Format, primes: &Primes, degree: &Degree) -> Out {
    let (input, dims, shown) = degree_input(primes, degree)?;
    let ans = cohomology_point(&input, degree.d, primes.p, primes.q)?;
    let lat = Lattice::pq(primes.p, primes.q)?;
    let title = format!("H^α(S^0) for C_{}, {}", primes.p * primes.q, shown);
    emit(
        fmt,
        &title,
        json!({ "dims": dims.as_array(), "p": primes.p, "q": primes.q }),
        ans,
        &lat,
    )
}

fn orbit(fmt: Format, primes: &Primes, degree: &Degree, h: &str) -> Out {
    let (_, dims, shown) = degree_input(primes, degree)?;
    let lat = Lattice::pq(primes.p, primes.q)?;
    let level = lat.parse_level(h)?;
    let ans = cohomology_orbit(&dims, level, primes.p, primes.q, degree.d)?;
    let title = format!("H^α(C_{}/{}_+), {}", primes.p * primes.q, lat.level_name(level), shown);
    emit(
        fmt,
        &title,
        json!({ "dims": dims.as_array(), "H": lat.level_name(level) }),
        ans,
        &lat,
    )
}

fn sphere(fmt: Format, primes: &Primes, degree: &Degree, j: i64) -> Out {
    let (_, dims, shown) = degree_input(primes, degree)?;
    let lat = Lattice::pq(primes.p, primes.q)?;
    let ans = cohomology_sphere(&dims, j, primes.p, primes.q, degree.d)?;
    let title = format!("H^α(S(ξ^{})_+), {}", j, shown);
    emit(fmt, &title, json!({ "dims": dims.as_array(), "j": j }), ans, &lat)
}

fn lattice_of(p: u64, q: Option<u64>) -> Result<Lattice, Fail> {
    Ok(match q {
        Some(q) => Lattice::pq(p, q)?,
        None => Lattice::prime(p)?,
    })
}

/// A functor file (`.json`) or a catalog expression.
fn load_functor(s: &str, lat: &Lattice) -> Result<MackeyFunctor, Fail> {
    if s.ends_with(".json") {
        let text = std::fs::read_to_string(s).map_err(|e| Fail(2, format!("{}: {}", s, e)))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Fail(2, format!("{}: {}", s, e)))?;
        let m = functor_from_json(&v)?;
        if m.lattice() != *lat {
            return Err(Fail(2, format!("{} is over a different group", s)));
        }
        return Ok(m);
    }
    Ok(Expr::parse(s)?.realize_on(lat)?)
}

fn group_json(g: &FgGroup) -> Value {
    json!({
        "rank": g.rank(),
        "torsion": g.torsion().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "text": g.to_string(),
    })
}

fn cache_path(key: &str) -> Option<PathBuf> {
    let dir = std::env::var_os("MACKEY_CACHE_DIR")?;
    let mut h = DefaultHasher::new();
    key.hash(&mut h);
    Some(Path::new(&dir).join(format!("{:016x}.json", h.finish())))
}

fn pair(fmt: Format, a: &PairArgs, ext: bool) -> Out {
    let lat = lattice_of(a.p, a.q)?;
    let m = load_functor(&a.m, &lat)?;
    let n = load_functor(&a.n, &lat)?;
    let order = match a.order {
        Order::TopDown => CoverOrder::TopDown,
        Order::BottomUp => CoverOrder::BottomUp,
    };
    let key = format!(
        "{} {:?} {} {}",
        if ext { "ext" } else { "hom" },
        a.order as u8,
        functor_to_json(&m),
        functor_to_json(&n)
    );
    let cached = cache_path(&key).and_then(|p| std::fs::read_to_string(p).ok());
    let result: Value = match cached.and_then(|s| serde_json::from_str(&s).ok()) {
        Some(v) => v,
        None => {
            let v = if ext {
                json!({ "group": group_json(&ext1_with(&m, &n, order)?) })
            } else {
                let h = hom_mackey(&m, &n)?;
                json!({
                    "group": group_json(&h.group),
                    "generators": h.generators.iter().map(hom_to_json).collect::<Vec<_>>(),
                })
            };
            if let Some(p) = cache_path(&key) {
                let _ = std::fs::create_dir_all(p.parent().expect("file in a directory"));
                let _ = std::fs::write(p, v.to_string());
            }
            v
        }
    };
    let what = if ext { "Ext^1" } else { "Hom" };
    if fmt == Format::Json {
        return Ok((
            pretty(&json!({ "m": a.m, "n": a.n, "what": what, "result": result })),
            0,
        ));
    }
    let mut out = format!(
        "{}({}, {}) = {}\n",
        what,
        a.m,
        a.n,
        result["group"]["text"].as_str().unwrap_or("?")
    );
    if let Some(gens) = result["generators"].as_array() {
        for (i, g) in gens.iter().enumerate() {
            out += &format!("generator {}:\n", i + 1);
            for lvl in g["maps"].as_array().into_iter().flatten() {
                let mat = &lvl["matrix"];
                let rows: Vec<String> = mat["entries"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .map(|r| {
                        r.as_array()
                            .into_iter()
                            .flatten()
                            .map(|x| x.to_string().trim_matches('"').to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                out += &format!(
                    "  {}: [{}] ({}x{})\n",
                    lvl["level"].as_str().unwrap_or("?"),
                    rows.join("; "),
                    mat["rows"],
                    mat["cols"]
                );
            }
        }
    }
    Ok((out, 0))
}

fn free(
    fmt: Format,
    file: Option<&Path>,
    cpn: Option<u64>,
    gr: Option<Vec<usize>>,
    primes: &Primes,
    emit: bool,
) -> Out {
    let x = match (file, cpn, gr) {
        (Some(f), None, None) => {
            let text = std::fs::read_to_string(f).map_err(|e| Fail(2, format!("{}: {}", f.display(), e)))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Fail(2, format!("{}: {}", f.display(), e)))?;
            CellComplex::from_json(&v)?
        }
        (None, Some(n), None) => projective_space_complex(n, primes.p, primes.q)?,
        (None, None, Some(nk)) => grassmannian_complex(nk[0], nk[1], primes.p, primes.q)?,
        _ => {
            return Err(Fail(
                2,
                "give exactly one of a complex file, --cpn or --grassmann".into(),
            ))
        }
    };
    if emit {
        return Ok((pretty(&x.to_json()), 0));
    }
    let r = analyze(&x)?;
    let lat = x.lattice();
    let code = if r.decomposition.is_some() { 0 } else { 4 };
    if fmt == Format::Json {
        let gens = r.decomposition.as_ref().map(|d| {
            d.generators
                .iter()
                .map(|g| json!({ "cell": g.label, "K": lat.level_name(g.orbit), "dims": g.dims.as_array() }))
                .collect::<Vec<_>>()
        });
        let obs: Vec<Value> = r
            .obstructions
            .iter()
            .map(|o| {
                json!({
                    "from": o.from, "to": o.to, "degree": o.alpha.as_array(),
                    "level": lat.level_name(o.level),
                    "group": o.group.as_ref().map(|g| g.to_string()),
                })
            })
            .collect();
        let v = json!({
            "free": r.decomposition.is_some(),
            "generators": gens,
            "odd_cells": r.even.odd,
            "ll_violations": r.even.ll_violations,
            "obstructions": obs,
        });
        return Ok((pretty(&v), code));
    }
    Ok(match &r.decomposition {
        Some(d) => (
            format!("free on {} generators\n{}", d.generators.len(), generator_table(d)),
            0,
        ),
        None => (format!("hypotheses fail\n{}", r), 4),
    })
}

fn validate(fmt: Format, target: &str, p: u64, q: Option<u64>) -> Out {
    let m = if target.ends_with(".json") {
        let text = std::fs::read_to_string(target).map_err(|e| Fail(2, format!("{}: {}", target, e)))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Fail(2, format!("{}: {}", target, e)))?;
        functor_from_json(&v)?
    } else {
        load_functor(target, &lattice_of(p, q)?)?
    };
    let violations = m.validate();
    let code = if violations.is_empty() { 0 } else { 4 };
    if fmt == Format::Json {
        let v: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Ok((
            pretty(&json!({ "valid": violations.is_empty(), "violations": v })),
            code,
        ));
    }
    if violations.is_empty() {
        return Ok((format!("valid\n\n{}", diagram(&m)), 0));
    }
    let mut out = format!("invalid: {} violation(s)\n", violations.len());
    for v in violations {
        out += &format!("  {}\n", v);
    }
    Ok((out, code))
}
