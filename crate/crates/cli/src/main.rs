//! `postlie` command line.
//!
//! Exit codes: 0 success, 2 parse error, 3 failed precondition, 4 a check
//! failed, 5 parameter cap exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use postlie::catalog;
use postlie::error::{Error, ErrorClass};
use postlie::exactla::{format_rational, parse_rational, Rational, Vector};
use postlie::laj::{self, LajActionDoc, LajDoc, LajMatrixDoc, LajProductDoc};
use postlie::liealg::{direct_sum, exp_ad, semidirect, LieAlgebra, LinearMap, Subspace};
use postlie::postlie::{
    check_postlie, check_prelie, check_rota_baxter, induced_g, inner_product_from_map, postlie_to_prelie,
    rb_from_subalgebra_pair, AxiomReport, BilinearProduct, LiePair,
};
use postlie::solver::{self, Ansatz, SearchOutcome, SupportMask};

const EXIT_PARSE: u8 = 2;

/// `println!` that ends the process quietly when stdout is closed.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const EXIT_PRECONDITION: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;
const EXIT_CAP: u8 = 5;

#[derive(Parser)]
#[command(name = "postlie", version, about = "Exact post-Lie structures, Rota-Baxter operators and Lie structure theory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure report for an algebra (file or catalog name).
    Info { algebra: String },
    #[command(subcommand)]
    Check(CheckCmd),
    #[command(subcommand)]
    Build(BuildCmd),
    #[command(subcommand)]
    Transform(TransformCmd),
    #[command(subcommand)]
    Search(SearchCmd),
    #[command(subcommand)]
    Report(ReportCmd),
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Fixture suite.
    #[command(subcommand)]
    Paper(PaperCmd),
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Jacobi identity on basis triples.
    Jacobi { algebra: String },
    /// The three post-Lie axioms.
    Postlie {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
        #[arg(long)]
        prod: String,
    },
    /// Pre-Lie (left-symmetric) axioms.
    Prelie {
        #[arg(long)]
        g: String,
        #[arg(long)]
        prod: String,
    },
    /// Rota-Baxter identity.
    Rb {
        #[arg(long)]
        n: String,
        #[arg(long)]
        op: String,
        #[arg(long, default_value = "1")]
        weight: String,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    DirectSum {
        a: String,
        b: String,
        #[arg(short, long)]
        o: PathBuf,
    },
    /// `acting ⋉ base` with the action given per acting basis element.
    Semidirect {
        #[arg(long)]
        base: String,
        #[arg(long)]
        acting: String,
        #[arg(long)]
        action: PathBuf,
        #[arg(short, long)]
        o: PathBuf,
    },
    /// Algebra induced by the inner product `x·y = {R(x), y}`.
    RbInduced {
        #[arg(long)]
        n: String,
        #[arg(long)]
        op: String,
        #[arg(short, long)]
        o: PathBuf,
        /// Also write the inner product.
        #[arg(long)]
        product_out: Option<PathBuf>,
    },
    /// Rota-Baxter operator of a direct vector-space sum of subalgebras.
    FromPair {
        #[arg(long)]
        n: String,
        #[arg(long)]
        n1: String,
        #[arg(long)]
        n2: String,
        #[arg(short, long)]
        o: PathBuf,
    },
    /// `exp(ad z)` for ad-nilpotent `z`.
    ExpAd {
        #[arg(long)]
        g: String,
        #[arg(long)]
        z: String,
        #[arg(short, long)]
        o: PathBuf,
    },
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Pre-Lie product `x∘y = x·y + ½[x,y]` from a post-Lie structure with 2-step nilpotent n.
    Prelie {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
        #[arg(long)]
        prod: String,
        #[arg(short, long)]
        o: PathBuf,
    },
}

#[derive(Args, Clone)]
struct AnsatzArgs {
    #[arg(long, default_value_t = 1)]
    bound: u32,
    /// Comma-separated denominators.
    #[arg(long, default_value = "1,2")]
    denominators: String,
    #[arg(long, default_value_t = 1000)]
    max_solutions: usize,
    #[arg(long, default_value_t = 30)]
    param_cap: usize,
    #[arg(long)]
    support_mask: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SearchCmd {
    Postlie {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
        #[command(flatten)]
        ansatz: AnsatzArgs,
    },
    Rb {
        #[arg(long)]
        n: String,
        #[command(flatten)]
        ansatz: AnsatzArgs,
    },
}

#[derive(Subcommand)]
enum ReportCmd {
    Nonexistence {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
        #[command(flatten)]
        ansatz: AnsatzArgs,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    /// Write the LAJ files of a fixture, algebra or data file into a directory.
    Emit {
        name: String,
        #[arg(short, long)]
        o: PathBuf,
    },
}

#[derive(Subcommand)]
enum PaperCmd {
    Verify {
        /// Print details for passing checks too.
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()).map(Error::class) {
        Some(ErrorClass::Parse) => EXIT_PARSE,
        Some(ErrorClass::CapExceeded) => EXIT_CAP,
        _ => EXIT_PRECONDITION,
    }
}

// ---------------------------------------------------------------- loading

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).map_err(Error::from).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).map_err(Error::from).with_context(|| format!("writing {}", path.display()))?;
    out!("wrote {}", path.display());
    Ok(())
}

/// File path or catalog name; Jacobi is not checked.
fn load_raw_algebra(arg: &str) -> anyhow::Result<LieAlgebra> {
    let path = Path::new(arg);
    if path.is_file() {
        let doc = LajDoc::parse(&read(path)?).with_context(|| format!("parsing {arg}"))?;
        return doc.to_algebra().with_context(|| format!("parsing {arg}"));
    }
    Ok(catalog::algebra(arg)?)
}

fn load_algebra(arg: &str) -> anyhow::Result<LieAlgebra> {
    let g = load_raw_algebra(arg)?;
    if let Some((i, j, k)) = g.check_jacobi().failure {
        return Err(Error::JacobiFailure(i, j, k)).with_context(|| format!("{arg} is not a Lie algebra"));
    }
    Ok(g)
}

/// File path or the stem of a shipped data file.
fn load_text(arg: &str) -> anyhow::Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        return read(path);
    }
    match catalog::data_file(arg) {
        Some(text) => Ok(text.to_string()),
        None => Err(Error::UnknownName(arg.to_string()).into()),
    }
}

fn load_product(arg: &str, g: &LieAlgebra) -> anyhow::Result<BilinearProduct> {
    let doc = LajProductDoc::parse(&load_text(arg)?).with_context(|| format!("parsing {arg}"))?;
    doc.to_product_on(g).with_context(|| format!("parsing {arg}"))
}

fn load_map(arg: &str, g: &LieAlgebra) -> anyhow::Result<LinearMap> {
    let doc = LajMatrixDoc::parse(&load_text(arg)?).with_context(|| format!("parsing {arg}"))?;
    doc.to_map_on(g).with_context(|| format!("parsing {arg}"))
}

/// A vector as a combination of basis labels or a coordinate list `[a, b, ...]`.
fn parse_vector(g: &LieAlgebra, text: &str) -> anyhow::Result<Vector> {
    let t = text.trim();
    let inner = t.strip_prefix('[').and_then(|r| r.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')));
    if let Some(inner) = inner {
        let v: Vector = inner.split(',').map(|s| parse_rational(s.trim())).collect::<Result<_, _>>()?;
        if v.len() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), found: v.len() }.into());
        }
        return Ok(v);
    }
    Ok(laj::parse_combination(g.basis_names(), t)?)
}

fn ansatz(args: &AnsatzArgs) -> anyhow::Result<Ansatz> {
    let denominators = args
        .denominators
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| Error::InvalidArgument(format!("bad denominator `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let support = match &args.support_mask {
        Some(p) => Some(SupportMask::parse(&read(p)?).with_context(|| format!("parsing {}", p.display()))?),
        None => None,
    };
    Ok(Ansatz {
        coefficient_bound: args.bound,
        denominators,
        max_solutions: args.max_solutions,
        parameter_cap: args.param_cap,
        support,
    })
}

// ---------------------------------------------------------------- formatting

fn combination(basis: &[String], v: &[Rational]) -> String {
    let mut s = String::new();
    for (b, c) in basis.iter().zip(v) {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let neg = c < &Rational::from_integer(0.into());
        let abs = if neg { -c.clone() } else { c.clone() };
        let coef = if abs == Rational::from_integer(1.into()) { String::new() } else { format!("{} ", format_rational(&abs)) };
        match (s.is_empty(), neg) {
            (true, false) => {}
            (true, true) => s.push('-'),
            (false, false) => s.push_str(" + "),
            (false, true) => s.push_str(" - "),
        }
        s.push_str(&coef);
        s.push_str(b);
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn product_lines(basis: &[String], p: &BilinearProduct) -> Vec<String> {
    p.nonzero_entries()
        .into_iter()
        .map(|(i, j, v)| format!("{}·{} = {}", basis[i], basis[j], combination(basis, v)))
        .collect()
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_axioms(rep: &AxiomReport) {
    out!("eq1 (difference):     {}", pass(rep.eq1_ok));
    out!("eq2 (representation): {}", pass(rep.eq2_ok));
    out!("eq3 (derivation):     {}", pass(rep.eq3_ok));
    if !rep.passed() {
        out!("{}", rep.summary());
    }
}

// ---------------------------------------------------------------- commands

fn run(cmd: Command) -> anyhow::Result<bool> {
    match cmd {
        Command::Info { algebra } => info(&algebra),
        Command::Check(c) => check(c),
        Command::Build(c) => build(c),
        Command::Transform(TransformCmd::Prelie { g, n, prod, o }) => {
            let pair = LiePair::new(load_algebra(&g)?, load_algebra(&n)?)?;
            let p = load_product(&prod, &pair.g)?;
            let pre = postlie_to_prelie(&pair, &p)?;
            let rep = check_prelie(&pair.g, &pre)?;
            out!("pre-Lie axioms on g: {}", pass(rep.passed()));
            write(&o, &LajProductDoc::from_product("prelie", pair.g.basis_names(), &pre).emit())?;
            Ok(rep.passed())
        }
        Command::Search(SearchCmd::Postlie { g, n, ansatz: a }) => search_postlie(&g, &n, &a),
        Command::Search(SearchCmd::Rb { n, ansatz: a }) => search_rb(&n, &a),
        Command::Report(ReportCmd::Nonexistence { g, n, ansatz: a }) => nonexistence(&g, &n, &a),
        Command::Catalog(CatalogCmd::List) => {
            for name in catalog::fixture_names() {
                let f = catalog::get(name)?;
                out!("{:<20} {:<22} {}", f.name, f.provenance, f.description);
            }
            Ok(true)
        }
        Command::Catalog(CatalogCmd::Emit { name, o }) => emit(&name, &o),
        Command::Paper(PaperCmd::Verify { verbose }) => verify(verbose),
    }
}

fn info(arg: &str) -> anyhow::Result<bool> {
    let g = load_algebra(arg)?;
    let fp = g.classify();
    let classes: Vec<String> = fp.existence_classes().iter().map(ToString::to_string).collect();
    out!("algebra:              {} (dim {})", g.name(), fp.dim);
    out!("basis:                {}", g.basis_names().join(", "));
    out!("center:               {}", fp.dim_center);
    out!("derived series:       {:?}", fp.derived_series_dims);
    out!("lower central series: {:?}", fp.lower_central_dims);
    out!("radical:              {}", fp.dim_radical);
    out!("nilradical:           {}", fp.dim_nilradical);
    out!("derivations:          {}", fp.dim_derivations);
    out!("centroid:             {}", fp.dim_centroid);
    out!("abelian:              {}", yes(fp.is_abelian));
    out!("nilpotent:            {}", yes(fp.is_nilpotent));
    out!("solvable:             {}", yes(fp.is_solvable));
    out!("perfect:              {}", yes(fp.is_perfect));
    out!("semisimple:           {}", yes(fp.is_semisimple));
    out!("simple:               {}", yes(fp.is_simple));
    out!("reductive:            {}", yes(fp.is_reductive));
    out!("complete:             {}", yes(fp.is_complete));
    out!("classes:              {}", if classes.is_empty() { "-".into() } else { classes.join(", ") });
    Ok(true)
}

fn check(cmd: CheckCmd) -> anyhow::Result<bool> {
    match cmd {
        CheckCmd::Jacobi { algebra } => {
            let g = load_raw_algebra(&algebra)?;
            let rep = g.check_jacobi();
            match rep.failure {
                None => out!("Jacobi: PASS"),
                Some((i, j, k)) => {
                    let b = g.basis_names();
                    out!("Jacobi: FAIL on ({}, {}, {})", b[i], b[j], b[k]);
                }
            }
            Ok(rep.passed())
        }
        CheckCmd::Postlie { g, n, prod } => {
            let pair = LiePair::new(load_algebra(&g)?, load_algebra(&n)?)?;
            let p = load_product(&prod, &pair.g)?;
            let rep = check_postlie(&pair, &p)?;
            if let Some(k) = catalog::structure_anchor(&pair, &p) {
                out!("structure of {} ({})", k.fixture, k.provenance);
            }
            print_axioms(&rep);
            out!("post-Lie: {}", pass(rep.passed()));
            Ok(rep.passed())
        }
        CheckCmd::Prelie { g, prod } => {
            let g = load_algebra(&g)?;
            let p = load_product(&prod, &g)?;
            let rep = check_prelie(&g, &p)?;
            print_axioms(&rep);
            out!("pre-Lie: {}", pass(rep.passed()));
            Ok(rep.passed())
        }
        CheckCmd::Rb { n, op, weight } => {
            let n = load_algebra(&n)?;
            let r = load_map(&op, &n)?;
            let w = parse_rational(&weight)?;
            let rep = check_rota_baxter(&n, &r, &w)?;
            out!("Rota-Baxter weight {}: {}", format_rational(&w), pass(rep.passed));
            if let Some(f) = &rep.failure {
                out!("first failure: {f:?}");
            }
            Ok(rep.passed)
        }
    }
}

fn build(cmd: BuildCmd) -> anyhow::Result<bool> {
    match cmd {
        BuildCmd::DirectSum { a, b, o } => {
            let s = direct_sum(&load_algebra(&a)?, &load_algebra(&b)?);
            let s = s.with_name(format!("{a}+{b}"));
            write(&o, &LajDoc::from_algebra(&s).emit())?;
            Ok(true)
        }
        BuildCmd::Semidirect { base, acting, action, o } => {
            let n = load_algebra(&base)?;
            let h = load_algebra(&acting)?;
            let doc = LajActionDoc::parse(&read(&action)?).with_context(|| format!("parsing {}", action.display()))?;
            let maps = doc.to_action(&h, &n)?;
            let s = semidirect(&h, &n, &maps)?.with_name(doc.name.clone());
            write(&o, &LajDoc::from_algebra(&s).emit())?;
            Ok(true)
        }
        BuildCmd::RbInduced { n, op, o, product_out } => {
            let n = load_algebra(&n)?;
            let r = load_map(&op, &n)?;
            let rb = check_rota_baxter(&n, &r, &Rational::from_integer(1.into()))?;
            out!("Rota-Baxter weight 1: {}", pass(rb.passed));
            let p = inner_product_from_map(&n, &r)?;
            let (g, jac) = induced_g(&n, &p)?;
            out!("induced bracket Jacobi: {}", pass(jac.passed()));
            let g = g.with_name(format!("{}-rb-induced", n.name()));
            write(&o, &LajDoc::from_algebra(&g).emit())?;
            if let Some(path) = product_out {
                write(&path, &LajProductDoc::from_product("rb-inner-product", n.basis_names(), &p).emit())?;
            }
            Ok(rb.passed && jac.passed())
        }
        BuildCmd::FromPair { n, n1, n2, o } => {
            let n = load_algebra(&n)?;
            let s1 = Subspace::new(n.dim(), &laj::parse_span(n.basis_names(), &n1)?);
            let s2 = Subspace::new(n.dim(), &laj::parse_span(n.basis_names(), &n2)?);
            let r = rb_from_subalgebra_pair(&n, &s1, &s2)?;
            let rb = check_rota_baxter(&n, &r, &Rational::from_integer(1.into()))?;
            out!("Rota-Baxter weight 1: {}", pass(rb.passed));
            write(&o, &LajMatrixDoc::from_matrix("rb-from-pair", n.basis_names(), r.matrix()).emit())?;
            Ok(rb.passed)
        }
        BuildCmd::ExpAd { g, z, o } => {
            let g = load_algebra(&g)?;
            let zv = parse_vector(&g, &z)?;
            let m = exp_ad(&g, &zv)?;
            write(&o, &LajMatrixDoc::from_matrix("exp-ad", g.basis_names(), m.matrix()).emit())?;
            Ok(true)
        }
    }
}

fn search_postlie(g: &str, n: &str, args: &AnsatzArgs) -> anyhow::Result<bool> {
    let pair = LiePair::new(load_algebra(g)?, load_algebra(n)?)?;
    let a = ansatz(args)?;
    let basis = pair.g.basis_names().to_vec();
    match solver::search_postlie(&pair, &a)? {
        SearchOutcome::LinearInconsistent => {
            out!("{}", solver::Verdict::ProvenEmptyLinear);
        }
        SearchOutcome::Searched(set) => {
            out!("parameters: {}", set.parameters);
            if set.quadratic_inconsistent {
                out!("{}", solver::Verdict::ProvenEmptyQuadratic);
                return Ok(true);
            }
            out!(
                "solutions: {}{}",
                set.solutions.len(),
                if set.exhausted { " (grid exhausted)" } else { " (truncated at --max-solutions)" }
            );
            for (k, s) in set.solutions.iter().enumerate() {
                let lines = product_lines(&basis, &s.product);
                let body = if lines.is_empty() { "zero product".to_string() } else { lines.join("; ") };
                let anchor = catalog::structure_anchor(&pair, &s.product)
                    .map(|k| format!("  [{} ({})]", k.fixture, k.provenance))
                    .unwrap_or_default();
                out!("#{}: {body}{anchor}", k + 1);
            }
        }
    }
    Ok(true)
}

fn search_rb(n: &str, args: &AnsatzArgs) -> anyhow::Result<bool> {
    let n = load_algebra(n)?;
    let a = ansatz(args)?;
    let found = solver::search_rb(&n, &a)?;
    out!("parameters: {}", found.parameters);
    out!(
        "operators: {}{}",
        found.solutions.len(),
        if found.exhausted { " (grid exhausted)" } else { " (truncated at --max-solutions)" }
    );
    let basis = n.basis_names();
    for (k, s) in found.solutions.iter().enumerate() {
        let cols: Vec<String> = (0..n.dim())
            .filter_map(|j| {
                let v = s.operator.image_of_basis(j);
                v.iter().any(|c| !num_traits::Zero::is_zero(c)).then(|| format!("R({}) = {}", basis[j], combination(basis, &v)))
            })
            .collect();
        let body = if cols.is_empty() { "R = 0".to_string() } else { cols.join("; ") };
        let classes = s
            .induced_fingerprint
            .as_ref()
            .map(|fp| fp.existence_classes().iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .unwrap_or_else(|| "-".into());
        out!("#{}: {body}  [induced g: {classes}]", k + 1);
    }
    Ok(true)
}

fn nonexistence(g: &str, n: &str, args: &AnsatzArgs) -> anyhow::Result<bool> {
    let pair = LiePair::new(load_algebra(g)?, load_algebra(n)?)?;
    let a = ansatz(args)?;
    let anchor = catalog::nonexistence_anchor(&pair.g, &pair.n);
    if let Some(anchor) = anchor {
        out!("claim: no post-Lie structure on ({g}, {n}) ({anchor})");
    }
    let rep = solver::nonexistence_report(&pair, &a)?;
    if let Some(p) = rep.parameters {
        out!("parameters: {p}");
    }
    out!("verdict: {}", rep.verdict);
    out!("scope: the given structure constants on one shared basis; other identifications are not searched");
    if let Some(w) = &rep.witness {
        let lines = product_lines(pair.g.basis_names(), &w.product);
        out!("witness: {}", if lines.is_empty() { "zero product".into() } else { lines.join("; ") });
    }
    if rep.witness.is_some() && anchor.is_some() {
        out!("witness contradicts the claim");
        return Ok(false);
    }
    Ok(true)
}

fn emit(name: &str, dir: &Path) -> anyhow::Result<bool> {
    fs::create_dir_all(dir).map_err(Error::from).with_context(|| format!("creating {}", dir.display()))?;
    if let Ok(f) = catalog::get(name) {
        for (suffix, text) in f.emit() {
            write(&dir.join(format!("{}.{suffix}", f.name)), &text)?;
        }
        return Ok(true);
    }
    if let Some(text) = catalog::data_file(name) {
        let file = catalog::data_files().iter().find(|(_, t)| *t == text).map(|(f, _)| *f).expect("listed");
        write(&dir.join(file), text)?;
        return Ok(true);
    }
    match catalog::algebra(name) {
        Ok(g) => {
            write(&dir.join(format!("{name}.laj.json")), &LajDoc::from_algebra(&g).emit())?;
            Ok(true)
        }
        Err(_) => bail!(Error::UnknownName(name.to_string())),
    }
}

fn verify(verbose: bool) -> anyhow::Result<bool> {
    let rows = catalog::verify_all();
    let width = rows.iter().map(|r| r.provenance.chars().count()).max().unwrap_or(0);
    let fwidth = rows.iter().map(|r| r.fixture.len()).max().unwrap_or(0);
    let mut failed = 0;
    for r in &rows {
        if !r.check.passed {
            failed += 1;
        }
        let pad = width - r.provenance.chars().count();
        let mut line = format!(
            "{}  {}{}  {:<fwidth$}  {}",
            pass(r.check.passed),
            r.provenance,
            " ".repeat(pad),
            r.fixture,
            r.check.label
        );
        if (verbose || !r.check.passed) && !r.check.detail.is_empty() {
            line.push_str(&format!("  ({})", r.check.detail));
        }
        out!("{line}");
    }
    out!("{} checks, {} passed, {} failed", rows.len(), rows.len() - failed, failed);
    Ok(failed == 0)
}
