use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tiltcover::algebra::{squid, AlgebraJson, BoundQuiverAlgebra};
use tiltcover::cover::{build_cover, induced_end_cover, lift_transcript, stabilizer, CategoryCover};
use tiltcover::derived::DObject;
use tiltcover::exactla::parse_scalar;
use tiltcover::hh::{hh_dim, simple_connectedness_report, squid_hh1, BAR_CHECK_DIM, DEFAULT_DIM_CAP};
use tiltcover::quiver::{
    finite_cover_from_monodromy, is_galois_quiver_covering, is_tree, pi1_rank, universal_cover_truncated,
    FiniteGroup, GroupJson, Quiver, QuiverJson,
};
use tiltcover::rep::{decompose, enumerate_indecomposables, Algebra, EnumerationMode, Rep};
use tiltcover::tilt::{is_tilting_module, module_mutation, reduce_to_tilting, tilting_hasse, Transcript};
use tiltcover::Error;

const DEFAULT_ENUM_CAP: usize = 4;

#[derive(Parser)]
#[command(name = "tiltcover", version, about = "Tilting, Galois coverings and Hochschild cohomology of quiver algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quivers: fundamental group and coverings.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Named algebra families.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Tilting modules over path algebras.
    #[command(subcommand)]
    Tilt(TiltCmd),
    /// Galois coverings of bound quiver algebras.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Hochschild cohomology.
    #[command(subcommand)]
    Hh(HhCmd),
    /// Verdict reports.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Rank of the fundamental group and the tree verdict.
    Analyze {
        quiver: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// A finite cover from monodromy, or a ball in the universal cover.
    Cover {
        quiver: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
        /// Build the universal cover truncated at `--radius` instead.
        #[arg(long)]
        universal: bool,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        /// Base vertex of the universal cover.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// The squid `S(t, p, tau)`.
    Squid {
        #[command(flatten)]
        squid: SquidArgs,
    },
}

#[derive(Subcommand)]
enum TiltCmd {
    /// Indecomposables up to a total dimension.
    Enumerate {
        algebra: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
        /// Fail on infinite families instead of sampling them.
        #[arg(long)]
        strict: bool,
    },
    /// Basic tilting modules and the Hasse diagram of their order.
    Hasse {
        algebra: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Mutates one summand of a tilting module.
    Mutate {
        algebra: PathBuf,
        /// Module JSON; defaults to the regular module.
        #[arg(long)]
        module: Option<PathBuf>,
        /// Dimension vector of the summand to replace, e.g. `0,1`.
        #[arg(long)]
        summand: String,
    },
    /// Reduces a tilting complex in the class T to a shifted tilting module.
    Reduce {
        algebra: PathBuf,
        /// Object JSON, a list of summands with shifts.
        #[arg(long)]
        object: PathBuf,
    },
}

#[derive(Subcommand)]
enum CoverCmd {
    /// Builds the total algebra.
    Build(CoverArgs),
    /// Checks the covering property on small total modules.
    Verify {
        #[command(flatten)]
        cover: CoverArgs,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Lifts the summands met along a sequence of mutations.
    Lift {
        #[command(flatten)]
        cover: CoverArgs,
        #[command(flatten)]
        path: MutationArgs,
    },
    /// Builds the covering of End(T) induced by the lifts.
    EndCover {
        #[command(flatten)]
        cover: CoverArgs,
        #[command(flatten)]
        path: MutationArgs,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum HhCmd {
    /// Dimensions of HH^0 and HH^1.
    Compute {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ReportCmd {
    /// Simple connectedness through HH^1.
    SimplyConnected {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GroupArgs {
    /// `Zn`, `Zn x Zm`, or a JSON file with `elements` and `table`.
    #[arg(long)]
    group: Option<String>,
    /// `arrow=element`, repeatable or comma separated.
    #[arg(long, value_delimiter = ',')]
    monodromy: Vec<String>,
}

#[derive(Args)]
struct CoverArgs {
    algebra: PathBuf,
    #[command(flatten)]
    group: GroupArgs,
}

#[derive(Args)]
struct MutationArgs {
    /// Dimension vector of the summand to mutate, applied in order starting
    /// from the regular module. Repeatable, e.g. `--mutate 0,1 --mutate 1,2`.
    #[arg(long = "mutate")]
    mutate: Vec<String>,
}

#[derive(Args)]
struct SquidArgs {
    #[arg(long)]
    t: usize,
    /// Branch lengths, comma separated.
    #[arg(long, value_delimiter = ',')]
    p: Vec<usize>,
    /// Parameters `tau_3, ...`, comma separated rationals.
    #[arg(long, value_delimiter = ',')]
    tau: Vec<String>,
}

#[derive(Args)]
struct AlgebraSource {
    /// Algebra JSON.
    algebra: Option<PathBuf>,
    /// A squid given as `t:p1,p2,...:tau3,...`, e.g. `3:1,1,1:1`.
    #[arg(long, conflicts_with = "algebra")]
    squid: Option<String>,
}

/// A failure with its exit code: 1 when a verification failed, 2 for bad
/// input or an unsupported request.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    report: Option<Value>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, kind: "invalid_input", message: message.into(), report: None }
    }

    fn verification(message: impl Into<String>, report: Value) -> Self {
        Failure { code: 1, kind: "verification_failed", message: message.into(), report: Some(report) }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Verification(_) | Error::CoveringProperty(_) | Error::ClosedFormMismatch { .. } => {
                (1, "verification_failed")
            }
            Error::RelationLift(_) => (1, "relation_lift"),
            Error::DimCap { .. } => (2, "dim_cap"),
            Error::Unsupported(_) | Error::NotHereditary | Error::InfiniteFamily(_) | Error::EnumerationIncomplete(_) => {
                (2, "unsupported")
            }
            Error::Precondition(_) | Error::NoAdmissibleSummand => (2, "precondition"),
            _ => (2, "invalid_input"),
        };
        Failure { code, kind, message: e.to_string(), report: None }
    }
}

type Out = Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(f) => {
            let mut v = json!({ "status": "error", "kind": f.kind, "message": f.message });
            if let Some(r) = f.report {
                v["report"] = r;
            }
            emit(&v);
            eprintln!("tiltcover: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes the report to stdout; a closed pipe is not an error.
fn emit(v: &Value) {
    let s = serde_json::to_string_pretty(v).expect("JSON values serialise");
    let _ = writeln!(std::io::stdout(), "{s}");
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Quiver(QuiverCmd::Analyze { quiver, dot }) => {
            let q = load_quiver(&quiver)?;
            write_dot(dot.as_deref(), &q.to_dot())?;
            Ok(json!({
                "vertices": q.num_vertices(),
                "arrows": q.num_arrows(),
                "connected": q.is_connected(),
                "acyclic": q.is_acyclic(),
                "pi1_rank": pi1_rank(&q),
                "is_tree": is_tree(&q),
            }))
        }
        Cmd::Quiver(QuiverCmd::Cover { quiver, group, universal, radius, base, dot }) => {
            let q = load_quiver(&quiver)?;
            if universal {
                let b = match base {
                    Some(name) => q.vertex_index(&name)?,
                    None => 0,
                };
                let t = universal_cover_truncated(&q, b, radius)?;
                write_dot(dot.as_deref(), &t.total.to_dot())?;
                return Ok(json!({
                    "kind": "universal_truncated",
                    "radius": radius,
                    "base": q.vertex_name(b),
                    "total": serde_json::to_value(t.total.to_json()).unwrap(),
                    "vertex_map": t.vertex_map,
                    "arrow_map": t.arrow_map,
                    "is_tree": t.is_tree(),
                }));
            }
            let (g, w) = group_and_monodromy(&group)?;
            let qc = finite_cover_from_monodromy(&q, &g, &w)?;
            write_dot(dot.as_deref(), &qc.to_dot())?;
            Ok(json!({
                "kind": "finite",
                "group": serde_json::to_value(g.to_json()).unwrap(),
                "total": serde_json::to_value(qc.total.to_json()).unwrap(),
                "vertex_map": qc.vertex_map,
                "arrow_map": qc.arrow_map,
                "galois": is_galois_quiver_covering(&qc),
                "connected": qc.is_connected(),
            }))
        }
        Cmd::Algebra(AlgebraCmd::Squid { squid: s }) => {
            let tau = s.tau.iter().map(|x| parse_scalar(x)).collect::<tiltcover::Result<Vec<_>>>()?;
            let a = squid(s.t, &s.p, &tau)?;
            Ok(json!({
                "label": a.label(),
                "dim": a.dim(),
                "degenerate": a.is_degenerate_squid(),
                "algebra": serde_json::to_value(a.to_json()).unwrap(),
            }))
        }
        Cmd::Tilt(TiltCmd::Enumerate { algebra, cap, strict }) => {
            let a = load_algebra(&algebra)?;
            let cap = dim_cap(cap, DEFAULT_ENUM_CAP)?;
            let mode = if strict { EnumerationMode::Strict } else { EnumerationMode::Sample };
            let r = enumerate_indecomposables(&a, cap, mode)?;
            Ok(json!({
                "cap": cap,
                "complete": r.is_complete(),
                "families": r.families,
                "indecomposables": r.reps.iter().map(|m| m.dims().to_vec()).collect::<Vec<_>>(),
            }))
        }
        Cmd::Tilt(TiltCmd::Hasse { algebra, cap, dot }) => {
            let a = load_algebra(&algebra)?;
            let cap = dim_cap(cap, DEFAULT_ENUM_CAP)?;
            let g = tilting_hasse(&a, cap)?;
            write_dot(dot.as_deref(), &g.to_dot())?;
            let mut v = g.to_json();
            v["count"] = json!(g.modules.len());
            v["connected"] = json!(g.is_connected());
            Ok(v)
        }
        Cmd::Tilt(TiltCmd::Mutate { algebra, module, summand }) => {
            let a = load_algebra(&algebra)?;
            let t = match module {
                Some(p) => Rep::from_json(&a, &read_json(&p)?)?,
                None => Rep::regular(&a),
            };
            let dims = parse_dims(&summand, a.num_vertices())?;
            let k = summand_index(&t, &dims)?;
            let mu = module_mutation(&t, k)?
                .ok_or_else(|| Failure::input("the summand cannot be exchanged: neither approximation is a monomorphism or an epimorphism"))?;
            Ok(json!({
                "removed": mu.removed.dims(),
                "added": mu.added.dims(),
                "left": mu.left,
                "summands": summand_dims(&mu.result)?,
                "tilting": is_tilting_module(&mu.result)?,
                "result": mu.result.to_json(),
            }))
        }
        Cmd::Tilt(TiltCmd::Reduce { algebra, object }) => {
            let a = load_algebra(&algebra)?;
            let x = DObject::from_json(&a, &read_json(&object)?)?;
            let r = reduce_to_tilting(&x)?;
            Ok(json!({
                "shift": r.shift,
                "summands": summand_dims(&r.module)?,
                "tilting": is_tilting_module(&r.module)?,
                "steps": r.transcript.steps.len(),
                "module": r.module.to_json(),
                "transcript": r.transcript.to_json(),
            }))
        }
        Cmd::Cover(CoverCmd::Build(args)) => {
            let c = load_cover(&args)?;
            let mut v = c.to_json();
            v["total_dim"] = json!(c.total().dim());
            v["base_dim"] = json!(c.base().dim());
            Ok(v)
        }
        Cmd::Cover(CoverCmd::Verify { cover, cap }) => {
            let c = load_cover(&cover)?;
            let cap = dim_cap(cap, DEFAULT_ENUM_CAP)?;
            verify_cover(&c, cap)
        }
        Cmd::Cover(CoverCmd::Lift { cover, path }) => {
            let c = load_cover(&cover)?;
            let tr = transcript(c.base(), &path)?;
            let lifts = lift_transcript(&c, &tr)?;
            let mut out = Vec::new();
            for l in &lifts {
                out.push(json!({
                    "base": l.base.dims(),
                    "shift": l.shift,
                    "total": l.total.dims(),
                    "stabilizer": stabilizer(&c, &l.total)?.iter().map(|&g| c.group().name(g).to_string()).collect::<Vec<_>>(),
                }));
            }
            Ok(json!({ "steps": tr.steps.len(), "lifts": out }))
        }
        Cmd::Cover(CoverCmd::EndCover { cover, path, dot }) => {
            let c = load_cover(&cover)?;
            let tr = transcript(c.base(), &path)?;
            let lifts = lift_transcript(&c, &tr)?;
            let t = tr.end().underlying_module();
            let ec = induced_end_cover(&c, &t, &lifts)?;
            write_dot(dot.as_deref(), &ec.cover.quiver_covering().to_dot())?;
            Ok(json!({
                "summands": ec.summands.iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>(),
                "lifts": ec.lifts.iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>(),
                "checks": ec.checks.iter().map(|(n, ok)| json!({ "name": n, "ok": ok })).collect::<Vec<_>>(),
                "end_algebra": serde_json::to_value(ec.end_algebra.to_json()).unwrap(),
                "end_dim": ec.end_algebra.dim(),
                "total_vertices": ec.cover.total().num_vertices(),
                "total_dim": ec.cover.total().dim(),
            }))
        }
        Cmd::Hh(HhCmd::Compute { source, cap }) => {
            let cap = dim_cap(cap, DEFAULT_DIM_CAP)?;
            let a = algebra_from(&source)?;
            let mut v = json!({
                "algebra": a.label(),
                "dim": a.dim(),
                "hh0": hh_dim(&a, 0, cap)?,
                "hh1": hh_dim(&a, 1, cap)?,
                "bar_checked": a.dim() <= BAR_CHECK_DIM,
            });
            if let Some(spec) = &source.squid {
                let (t, p, tau) = parse_squid(spec)?;
                let s = squid_hh1(t, &p, &tau, cap)?;
                v["closed_form"] = json!(s.closed_form);
                v["degenerate"] = json!(s.degenerate);
            }
            Ok(v)
        }
        Cmd::Report(ReportCmd::SimplyConnected { source, cap, format }) => {
            let cap = dim_cap(cap, DEFAULT_DIM_CAP)?;
            let a = algebra_from(&source)?;
            let r = simple_connectedness_report(&a, cap)?;
            if let Format::Text = format {
                let pi1 = r.pi1_rank.map_or("-".to_string(), |x| x.to_string());
                eprintln!("{:<24} {:>4} {:>4} {:>4} {:>6} {:>5}  verdict", "algebra", "dim", "HH0", "HH1", "pi1", "tree");
                eprintln!(
                    "{:<24} {:>4} {:>4} {:>4} {:>6} {:>5}  {}",
                    r.algebra,
                    r.dim,
                    r.hh0,
                    r.hh1,
                    pi1,
                    r.is_tree,
                    if r.simply_connected { "simply connected" } else { "not simply connected" }
                );
            }
            Ok(serde_json::to_value(&r).unwrap())
        }
    }
}

fn read_json(p: &Path) -> Result<Value, Failure> {
    let s = std::fs::read_to_string(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&s).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
}

fn load_quiver(p: &Path) -> Result<Quiver, Failure> {
    let j: QuiverJson = serde_json::from_value(read_json(p)?).map_err(|e| Failure::input(format!("quiver JSON: {e}")))?;
    Ok(Quiver::from_json(&j)?)
}

fn load_algebra(p: &Path) -> Result<Algebra, Failure> {
    let j: AlgebraJson =
        serde_json::from_value(read_json(p)?).map_err(|e| Failure::input(format!("algebra JSON: {e}")))?;
    let mut a = BoundQuiverAlgebra::from_json(&j)?;
    if a.is_path_algebra() {
        a.set_label("kQ");
    } else if let Some(stem) = p.file_stem() {
        a.set_label(stem.to_string_lossy());
    }
    Ok(Arc::new(a))
}

fn parse_squid(spec: &str) -> Result<(usize, Vec<usize>, Vec<tiltcover::exactla::Scalar>), Failure> {
    let bad = || Failure::input(format!("bad squid spec `{spec}`, expected t:p1,p2,...:tau3,..."));
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(bad());
    }
    let t: usize = parts[0].trim().parse().map_err(|_| bad())?;
    let p = parts[1].split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
    let tau = match parts.get(2) {
        Some(s) if !s.trim().is_empty() => s.split(',').map(parse_scalar).collect::<tiltcover::Result<Vec<_>>>()?,
        _ => Vec::new(),
    };
    Ok((t, p, tau))
}

fn algebra_from(src: &AlgebraSource) -> Result<Algebra, Failure> {
    match (&src.algebra, &src.squid) {
        (Some(p), None) => load_algebra(p),
        (None, Some(s)) => {
            let (t, p, tau) = parse_squid(s)?;
            Ok(Arc::new(squid(t, &p, &tau)?))
        }
        _ => Err(Failure::input("give an algebra file or --squid")),
    }
}

fn dim_cap(flag: Option<usize>, default: usize) -> Result<usize, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("TILTCOVER_DIM_CAP") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::input(format!("TILTCOVER_DIM_CAP=`{s}` is not a number"))),
        Err(_) => Ok(default),
    }
}

fn write_dot(path: Option<&Path>, dot: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, dot).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn group_and_monodromy(args: &GroupArgs) -> Result<(FiniteGroup, std::collections::BTreeMap<String, usize>), Failure> {
    let spec = args.group.as_deref().ok_or_else(|| Failure::input("--group is required"))?;
    let g = if Path::new(spec).is_file() {
        let j: GroupJson =
            serde_json::from_value(read_json(Path::new(spec))?).map_err(|e| Failure::input(format!("group JSON: {e}")))?;
        FiniteGroup::from_json(&j)?
    } else {
        FiniteGroup::parse_spec(spec)?
    };
    let mut w = std::collections::BTreeMap::new();
    for pair in &args.monodromy {
        let (a, e) = pair
            .split_once('=')
            .ok_or_else(|| Failure::input(format!("monodromy `{pair}` is not of the form arrow=element")))?;
        w.insert(a.trim().to_string(), g.element(e.trim())?);
    }
    Ok((g, w))
}

fn load_cover(args: &CoverArgs) -> Result<CategoryCover, Failure> {
    let a = load_algebra(&args.algebra)?;
    let (g, w) = group_and_monodromy(&args.group)?;
    let qc = finite_cover_from_monodromy(a.quiver(), &g, &w)?;
    Ok(build_cover(&a, qc)?)
}

fn parse_dims(s: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let d = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::input(format!("bad dimension vector `{s}`")))?;
    if d.len() != n {
        return Err(Failure::input(format!("dimension vector `{s}` needs {n} entries")));
    }
    Ok(d)
}

fn summand_index(t: &Rep, dims: &[usize]) -> Result<usize, Failure> {
    let d = decompose(t)?;
    let hits: Vec<usize> = (0..d.summands.len()).filter(|&i| d.summands[i].dims() == dims).collect();
    match hits.as_slice() {
        [k] => Ok(*k),
        [] => Err(Failure::input(format!("no summand with dimension vector {dims:?}"))),
        _ => Err(Failure::input(format!("several summands with dimension vector {dims:?}"))),
    }
}

fn summand_dims(t: &Rep) -> Result<Vec<Vec<usize>>, Failure> {
    Ok(decompose(t)?.summands.iter().map(|x| x.dims().to_vec()).collect())
}

fn transcript(a: &Algebra, args: &MutationArgs) -> Result<Transcript, Failure> {
    let mut t = Rep::regular(a);
    let mut tr = Transcript::new(DObject::module(&t)?);
    for s in &args.mutate {
        let k = summand_index(&t, &parse_dims(s, a.num_vertices())?)?;
        let mu = module_mutation(&t, k)?.ok_or_else(|| Failure::input(format!("summand {s} cannot be exchanged")))?;
        tr.steps.push(mu.step(&t)?);
        t = mu.result;
    }
    Ok(tr)
}

/// Hom and Ext¹ over the total algebra against the base, for every ordered
/// pair of small indecomposables (all of them for path algebras, otherwise
/// projectives and simples).
fn verify_cover(c: &CategoryCover, cap: usize) -> Out {
    let total = c.total();
    let mut mods: Vec<Rep> = Vec::new();
    let mut complete = true;
    if total.is_path_algebra() {
        let r = enumerate_indecomposables(total, cap, EnumerationMode::Sample)?;
        complete = r.is_complete();
        mods = r.reps;
    } else {
        for v in 0..total.num_vertices() {
            mods.push(Rep::projective(total, v));
            mods.push(Rep::simple(total, v));
        }
    }
    let mut failures = Vec::new();
    for m in &mods {
        for n in &mods {
            if !c.covering_property_check(m, n, &[0, 1])? {
                failures.push(json!({ "m": m.dims(), "n": n.dims() }));
            }
        }
    }
    let report = json!({
        "modules": mods.len(),
        "pairs": mods.len() * mods.len(),
        "families_sampled": !complete,
        "failures": failures,
        "ok": failures.is_empty(),
    });
    if failures.is_empty() {
        Ok(report)
    } else {
        Err(Failure::verification("covering property fails", report))
    }
}
