mod suites;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_fh::combinatorics::{partitions, partitions_up_to, Composition, Partition, Permutation};
use hecke_fh::composed::{d_multiply, generic_norm, semigroup_product, ComposedElement, ComposedPermutation};
use hecke_fh::fh_constants::{
    a_constants_at_n, a_table_to_json, g_table_to_json, verify_theorem1, ATable, TableCache, CACHE_ENV,
    DEFAULT_CACHE_DIR,
};
use hecke_fh::hecke::{geck_rouquier, norm, norm_coordinates, norm_completed, HeckeElement, COMPUTE_BOUND};
use hecke_fh::symfunc::{e2m_matrix, m2e_matrix, p_polynomials, q_polynomials};
use hecke_fh::Error;

#[derive(Parser)]
#[command(name = "hecke-fh", version, about = "Hecke algebra centers and Farahat-Higman structure constants")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cache directory (overrides the HECKE_FH_CACHE environment variable).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for per-n computations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a basis of the center (or generic norms) at level n.
    Basis {
        #[arg(value_enum)]
        kind: BasisKind,
        #[arg(long)]
        n: usize,
        /// Single composition for generic norms, e.g. "2,1".
        #[arg(long)]
        c: Option<String>,
    },
    /// Multiply basis elements.
    Mult {
        #[arg(value_enum)]
        kind: MultKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Left factor: a permutation word (hecke) or bar notation (composed).
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
    },
    /// Structure constant tables.
    Constants {
        #[arg(value_enum)]
        kind: ConstKind,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Recompute at this many further n not used in the fit.
        #[arg(long, default_value_t = 0)]
        verify_extra: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = suites::Suite::All)]
        suite: suites::Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Transition matrices between elementary and monomial bases, or their completed forms.
    Transition {
        #[arg(value_enum)]
        kind: TransitionKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Inspect or clear the table cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisKind {
    Norms,
    Gamma,
    GenericNorms,
}

#[derive(Clone, Copy, ValueEnum)]
enum MultKind {
    Hecke,
    Norms,
    Gamma,
    Composed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstKind {
    G,
    A,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransitionKind {
    E2m,
    M2e,
    P,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    List,
    Clear,
    Path,
}

/// What went wrong, mapped onto the exit codes.
enum Failure {
    Verification(String, Option<Value>),
    Usage(String),
    Bound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            Error::Parse(_)
            | Error::InvalidPermutation(_)
            | Error::InvalidComposition(_)
            | Error::SizeMismatch { .. }
            | Error::GeneratorOutOfRange { .. }
            | Error::CompletionUndefined { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string(), None),
        }
    }
}

type Run = Result<(), Failure>;

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn required_n(n: Option<usize>) -> Result<usize, Failure> {
    n.ok_or_else(|| Failure::Usage("--n is required".into()))
}

fn check_n(n: usize) -> Run {
    if n > COMPUTE_BOUND {
        return Err(Failure::Bound(format!("n = {n} exceeds the compute bound {COMPUTE_BOUND}")));
    }
    Ok(())
}

fn label(p: &Partition) -> String {
    format!("({p})")
}

struct Ctx {
    format: Format,
    cache: TableCache,
}

impl Ctx {
    fn emit(&self, text: &str, value: Value) {
        match self.format {
            Format::Text => print!("{text}"),
            Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
        }
    }
}

fn cmd_basis(ctx: &Ctx, kind: BasisKind, n: usize, c: &Option<String>) -> Run {
    check_n(n)?;
    let mut text = String::new();
    let mut items = Vec::new();
    match kind {
        BasisKind::Norms | BasisKind::Gamma => {
            let (sym, f): (&str, fn(&Partition) -> hecke_fh::Result<HeckeElement>) = match kind {
                BasisKind::Norms => ("N", |p| norm(&Composition::new(p.parts().to_vec())?)),
                _ => ("Γ", geck_rouquier),
            };
            for lam in partitions(n) {
                let x = f(&lam)?;
                text += &format!("{sym}_{} = {x}\n", label(&lam));
                items.push(json!({"label": lam, "element": x}));
            }
        }
        BasisKind::GenericNorms => {
            let labels: Vec<Composition> = match c {
                Some(s) => vec![s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?],
                None => partitions_up_to(n)
                    .into_iter()
                    .map(|p| Composition::new(p.parts().to_vec()).expect("positive parts"))
                    .collect(),
            };
            for comp in labels {
                let x = generic_norm(&comp, n)?;
                text += &format!("M_({comp}),{n} = {x}\n");
                items.push(json!({"label": comp, "element": x}));
            }
        }
    }
    ctx.emit(&text, json!({"n": n, "basis": items}));
    Ok(())
}

fn coords_text(name: &str, coords: &BTreeMap<Partition, String>) -> String {
    if coords.is_empty() {
        return "0\n".into();
    }
    let parts: Vec<String> = coords.iter().map(|(k, v)| format!("({v})·{name}_{}", label(k))).collect();
    parts.join(" + ") + "\n"
}

fn cmd_mult(ctx: &Ctx, kind: MultKind, n: Option<usize>, lambda: &Option<String>, mu: &Option<String>, x: &Option<String>, y: &Option<String>) -> Run {
    match kind {
        MultKind::Hecke => {
            let a: Permutation = required(x, "x")?.parse()?;
            let b: Permutation = required(y, "y")?.parse()?;
            check_n(a.n())?;
            let prod = HeckeElement::basis(a).multiply(&HeckeElement::basis(b))?;
            ctx.emit(&format!("{prod}\n"), serde_json::to_value(&prod).expect("json"));
        }
        MultKind::Composed => {
            let a: ComposedPermutation = required(x, "x")?.parse()?;
            let b: ComposedPermutation = required(y, "y")?.parse()?;
            check_n(a.n())?;
            let word = semigroup_product(&a, &b)?;
            let prod = d_multiply(&ComposedElement::basis(a), &ComposedElement::basis(b))?;
            ctx.emit(
                &format!("semigroup: {word}\nT[x]T[y] = {prod}\n"),
                json!({"semigroup": word.to_string(), "product": prod}),
            );
        }
        MultKind::Norms | MultKind::Gamma => {
            let n = required_n(n)?;
            check_n(n)?;
            let l = parse_partition(required(lambda, "lambda")?)?;
            let m = parse_partition(required(mu, "mu")?)?;
            let coords: BTreeMap<Partition, String> = match kind {
                MultKind::Norms => {
                    let prod = norm_completed(&l, n)?.multiply(&norm_completed(&m, n)?)?;
                    norm_coordinates(&prod)?
                        .into_iter()
                        .map(|(k, v)| (k, v.to_laurent().map(|x| x.to_string()).unwrap_or_else(|| format!("{v:?}"))))
                        .collect()
                }
                _ => a_constants_at_n(&l, &m, n)?.into_iter().map(|(k, v)| (k, v.to_string())).collect(),
            };
            let name = if matches!(kind, MultKind::Norms) { "N" } else { "Γ" };
            let entries: Vec<Value> = coords.iter().map(|(k, v)| json!({"nu": k, "coeff": v})).collect();
            ctx.emit(
                &coords_text(name, &coords),
                json!({"n": n, "lambda": l, "mu": m, "basis": name, "entries": entries}),
            );
        }
    }
    Ok(())
}

/// Nodes for `--verify-extra`: the smallest admissible `n` not used in the fit.
fn extra_nodes(t: &ATable, k: usize) -> Vec<usize> {
    let lo = (t.lambda.size() + t.lambda.len()).max(t.mu.size() + t.mu.len()).max(1);
    (lo..).filter(|n| !t.nodes.contains(n) && !t.verified_at.contains(n)).take(k).collect()
}

fn cmd_constants(ctx: &Ctx, kind: ConstKind, lambda: &str, mu: &str, verify_extra: usize) -> Run {
    let l = parse_partition(lambda)?;
    let m = parse_partition(mu)?;
    match kind {
        ConstKind::G => {
            let t = ctx.cache.g_constants(&l, &m)?;
            let mut text = format!("M_{} * M_{} =\n", label(&l), label(&m));
            for (nu, v) in &t.entries {
                text += &format!("  {}: {v}\n", label(nu));
            }
            text += &format!("levels 0..={}, onset {}\n", t.levels.last().copied().unwrap_or(0), t.onset);
            ctx.emit(&text, g_table_to_json(&t));
        }
        ConstKind::A => {
            let t = ctx.cache.a_polynomials(&l, &m)?;
            let mut text = format!("Γ_{},n * Γ_{},n =\n", label(&l), label(&m));
            for (nu, p) in &t.entries {
                text += &format!("  {}: {p}\n", label(nu));
            }
            text += &format!("nodes {:?}, held out {:?}\n", t.nodes, t.verified_at);
            let mut value = json!({"table": a_table_to_json(&t)});
            if verify_extra > 0 {
                let report = verify_theorem1(&t, &extra_nodes(&t, verify_extra))?;
                for c in &report.checks {
                    let status = if c.mismatches.is_empty() { "match" } else { "MISMATCH" };
                    text += &format!("  n = {} ({}): {status}\n", c.n, c.route);
                }
                let ok = report.all_match();
                value["report"] = serde_json::to_value(&report).expect("json");
                value["all_match"] = json!(ok);
                if !ok {
                    ctx.emit(&text, value.clone());
                    return Err(Failure::Verification("held-out recomputation disagrees".into(), None));
                }
            }
            ctx.emit(&text, value);
        }
    }
    Ok(())
}

fn cmd_transition(ctx: &Ctx, kind: TransitionKind, n: Option<usize>, lambda: &Option<String>) -> Run {
    match kind {
        TransitionKind::E2m | TransitionKind::M2e => {
            let n = required_n(n)?;
            let m = if matches!(kind, TransitionKind::E2m) { e2m_matrix(n) } else { m2e_matrix(n) };
            let (from, to) = if matches!(kind, TransitionKind::E2m) { ("e", "m") } else { ("m", "e") };
            let mut text = String::new();
            for row in partitions(n) {
                let r = m.row(&row);
                let mut rhs = String::new();
                for (i, (k, v)) in r.iter().enumerate() {
                    let neg = v.signum() < 0;
                    let abs = if neg { -v.clone() } else { v.clone() };
                    rhs += match (i, neg) {
                        (0, true) => "-",
                        (0, false) => "",
                        (_, true) => " - ",
                        (_, false) => " + ",
                    };
                    rhs += &format!("{abs}·{to}_{}", label(k));
                }
                text += &format!("{from}_{} = {rhs}\n", label(&row));
            }
            ctx.emit(&text, serde_json::to_value(&m).expect("json"));
        }
        TransitionKind::P | TransitionKind::Q => {
            let l = parse_partition(required(lambda, "lambda")?)?;
            let (polys, text_head, to) = if matches!(kind, TransitionKind::P) {
                (p_polynomials(&l)?, format!("m_{}→n =", label(&l)), "e_{}↑n")
            } else {
                (q_polynomials(&l)?, format!("e_{}↑n =", label(&l)), "m_{}→n")
            };
            let mut text = text_head + "\n";
            let mut entries = Vec::new();
            for (k, p) in &polys {
                text += &format!("  {}: {p}\n", to.replace("{}", &label(k)));
                entries.push(json!({"nu": k, "poly": p}));
            }
            ctx.emit(&text, json!({"lambda": l, "kind": if matches!(kind, TransitionKind::P) {"p"} else {"q"}, "entries": entries}));
        }
    }
    Ok(())
}

fn cmd_cache(ctx: &Ctx, action: CacheAction) -> Run {
    match action {
        CacheAction::List => {
            let files = ctx.cache.list()?;
            let text: String = files.iter().map(|f| format!("{f}\n")).collect();
            ctx.emit(&text, json!({"dir": ctx.cache.dir(), "files": files}));
        }
        CacheAction::Clear => {
            let removed = ctx.cache.clear()?;
            ctx.emit(&format!("removed {removed} files\n"), json!({"removed": removed}));
        }
        CacheAction::Path => {
            ctx.emit(&format!("{}\n", ctx.cache.dir().display()), json!({"dir": ctx.cache.dir()}));
        }
    }
    Ok(())
}

fn cmd_verify(ctx: &Ctx, suite: suites::Suite, max_n: usize) -> Run {
    check_n(max_n)?;
    let report = suites::run(suite, max_n);
    let mut text = String::new();
    for c in &report {
        text += &format!("{} {} (n ≤ {}){}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.max_n, c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default());
    }
    let all = report.iter().all(|c| c.pass);
    let value = json!({"suite": suite, "max_n": max_n, "pass": all, "checks": report});
    ctx.emit(&text, value);
    if all {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into(), None))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .unwrap_or_else(|| DEFAULT_CACHE_DIR.into());
    let ctx = Ctx { format: cli.format, cache: TableCache::new(dir) };
    let result = match &cli.command {
        Command::Basis { kind, n, c } => cmd_basis(&ctx, *kind, *n, c),
        Command::Mult { kind, n, lambda, mu, x, y } => cmd_mult(&ctx, *kind, *n, lambda, mu, x, y),
        Command::Constants { kind, lambda, mu, verify_extra } => cmd_constants(&ctx, *kind, lambda, mu, *verify_extra),
        Command::Verify { suite, max_n } => cmd_verify(&ctx, *suite, *max_n),
        Command::Transition { kind, n, lambda } => cmd_transition(&ctx, *kind, *n, lambda),
        Command::Cache { action } => cmd_cache(&ctx, *action),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Verification(m, diag)) => {
            eprintln!("error: {m}");
            if ctx.format == Format::Json {
                let v = diag.unwrap_or_else(|| json!({"error": m}));
                eprintln!("{}", serde_json::to_string(&v).expect("json"));
            }
            ExitCode::from(1)
        }
    }
}
