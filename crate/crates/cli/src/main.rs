use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kschub::bijections::{partial_inverse, partial_map, phi, tau};
use kschub::coefficients::{coefficient, CoefficientCache, Route};
use kschub::expr;
use kschub::fillings::{self, column_word, is_yamanouchi, weight, Constraint, FillingClass, Letter};
use kschub::inflated::{inflate_svt, inflate_tabloid, inflated_weight, AugmentedFilling};
use kschub::render;
use kschub::verify::{self, Suite};
use kschub::{Composition, Error, Filling, Partition, SkewShape};

const CACHE_ENV: &str = "KSCHUB_CACHE";

#[derive(Parser)]
#[command(name = "kschub", version, about = "K-theoretic Littlewood-Richardson calculator")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Ascii)]
    output: Output,

    /// Coefficient cache file (NDJSON); falls back to $KSCHUB_CACHE.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Buch,
    Product,
    Dual,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Svt,
    Rpp,
    Ssyt,
    Tabloid,
    Elegant,
}

impl From<ClassArg> for FillingClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Svt => FillingClass::Svt,
            ClassArg::Rpp => FillingClass::Rpp,
            ClassArg::Ssyt => FillingClass::Ssyt,
            ClassArg::Tabloid => FillingClass::Tabloid,
            ClassArg::Elegant => FillingClass::Elegant,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Partial,
    Phi,
    Tau,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Involution,
    Bijection,
    Duality,
    Routes,
    Basis,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    Show,
    Clear,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "G[2,1]*G[1] | expand G".
    Eval {
        expression: String,
        /// Degree bound; defaults to max(6, largest index + 2).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Structure constant c^nu_{lambda,mu} by one or all routes.
    Coeff {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
        /// Degree bound for the product route.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// List the fillings of a shape, or validate fillings given with --input.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Outer shape; row lengths for tabloids.
        #[arg(long, value_parser = parse_composition)]
        shape: Option<Composition>,
        /// Inner shape of a skew shape.
        #[arg(long, value_parser = parse_partition)]
        inner: Option<Partition>,
        /// Exact weight; column counts for reverse plane partitions.
        #[arg(long, value_parser = parse_composition, conflicts_with = "max_entry")]
        weight: Option<Composition>,
        /// Largest allowed entry.
        #[arg(long)]
        max_entry: Option<Letter>,
        /// Keep fillings whose reading word is Yamanouchi shifted by this partition.
        #[arg(long, value_parser = parse_partition)]
        yamanouchi: Option<Partition>,
        /// Keep fillings whose inflated weight over T_lambda is this partition.
        #[arg(long, value_parser = parse_partition)]
        iwt: Option<Partition>,
        /// The lambda used by --iwt.
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        /// Filling JSON (object or array), a path to it, or filling notation.
        #[arg(long, conflicts_with_all = ["shape", "weight", "max_entry"])]
        input: Option<String>,
    },
    /// Step through one of the maps on a single filling.
    Trace {
        #[arg(long, value_enum)]
        map: MapArg,
        /// Bare tableau under the input for tau; empty by default.
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        /// Filling JSON, a path to it, or filling notation.
        #[arg(long)]
        input: String,
    },
    /// Run an exhaustive consistency suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest |nu| checked.
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
    /// Inspect or empty a coefficient cache file.
    Cache {
        /// Cache file; defaults to --cache or $KSCHUB_CACHE.
        #[arg(long)]
        path: Option<PathBuf>,
        #[arg(value_enum)]
        action: CacheAction,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) | Error::NonInvertible { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Text to print and whether the command counts as a verification failure.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failed: false }
    }
}

fn emit(output: Output, value: Value, ascii: impl FnOnce() -> String) -> String {
    match output {
        Output::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
        Output::Ascii => ascii(),
    }
}

fn cache_path(cli_path: Option<&Path>) -> Option<PathBuf> {
    cli_path.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

fn read_json_or_path(input: &str) -> Result<String, Failure> {
    let t = input.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(input.to_string());
    }
    let p = Path::new(input);
    if p.is_file() {
        return std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())));
    }
    Ok(input.to_string())
}

/// One or more fillings from JSON, a file, or notation.
fn read_fillings(input: &str) -> Result<Vec<Filling>, Failure> {
    let text = read_json_or_path(input)?;
    let t = text.trim_start();
    if t.starts_with('[') {
        return serde_json::from_str(&text).map_err(|e| usage(format!("filling JSON: {e}")));
    }
    if t.starts_with('{') {
        let f: Filling = serde_json::from_str(&text).map_err(|e| usage(format!("filling JSON: {e}")))?;
        return Ok(vec![f]);
    }
    Ok(vec![Filling::from_notation(text.trim())?])
}

fn read_filling(input: &str) -> Result<Filling, Failure> {
    let mut all = read_fillings(input)?;
    if all.len() != 1 {
        return Err(usage(format!("expected one filling, got {}", all.len())));
    }
    Ok(all.remove(0))
}

fn require_class(f: &Filling, class: FillingClass) -> Result<(), Failure> {
    verify::check_class(f, class).map_err(Failure::from)
}

fn cmd_eval(out: Output, expression: &str, degree: Option<usize>) -> Result<Outcome, Failure> {
    let program = expr::parse(expression)
        .map_err(|d| usage(format!("cannot parse expression\n  {expression}\n  {}^\n{d}", " ".repeat(d.position))))?;
    let d = degree.unwrap_or_else(|| program.default_degree());
    let result = expr::eval(&program, d).map_err(|e| Failure::from(e.error.clone()).with_context(&e.to_string()))?;
    Ok(Outcome::ok(emit(out, serde_json::to_value(&result).expect("serializable"), || {
        format!("{program}\n= {result}\n")
    })))
}

impl Failure {
    fn with_context(mut self, context: &str) -> Self {
        self.message = context.to_string();
        self
    }
}

fn cmd_coeff(
    out: Output,
    cache: Option<&CoefficientCache>,
    (lambda, mu, nu): (&Partition, &Partition, &Partition),
    route: RouteArg,
    degree: Option<usize>,
) -> Result<Outcome, Failure> {
    let routes = match route {
        RouteArg::Buch => vec![Route::Buch],
        RouteArg::Product => vec![Route::Product],
        RouteArg::Dual => vec![Route::Dual],
        RouteArg::All => Route::ALL.to_vec(),
    };
    let d = degree.unwrap_or(6.max(nu.size() + 2));
    let records =
        routes.iter().map(|&r| coefficient(r, lambda, mu, nu, Some(d), cache)).collect::<Result<Vec<_>, _>>()?;
    let disagree = records.windows(2).any(|w| w[0].value != w[1].value);
    let text = emit(out, serde_json::to_value(&records).expect("serializable"), || {
        let mut s = String::new();
        for r in &records {
            let bound = if r.route == Route::Product { format!("  (degree <= {d})") } else { String::new() };
            let _ = writeln!(s, "c[lambda={lambda}; mu={mu}; nu={nu}] = {:>4}  {}{bound}", r.value, r.route);
        }
        if disagree {
            s.push_str("routes disagree\n");
        }
        s
    });
    Ok(Outcome { text, failed: disagree })
}

struct EnumerateArgs {
    class: FillingClass,
    shape: Option<Composition>,
    inner: Option<Partition>,
    weight: Option<Composition>,
    max_entry: Option<Letter>,
    yamanouchi: Option<Partition>,
    iwt: Option<Partition>,
    lambda: Option<Partition>,
    input: Option<String>,
}

fn reading_word(f: &Filling, class: FillingClass) -> Vec<Letter> {
    match class {
        FillingClass::Svt | FillingClass::Rpp => column_word(f),
        _ => fillings::row_word(f).unwrap_or_else(|_| column_word(f)),
    }
}

fn cmd_enumerate(out: Output, a: EnumerateArgs) -> Result<Outcome, Failure> {
    let class = a.class;
    let found = if let Some(input) = &a.input {
        let all = read_fillings(input)?;
        for f in &all {
            require_class(f, class)?;
        }
        all
    } else {
        let shape = a.shape.clone().ok_or_else(|| usage("--shape or --input is required"))?;
        let constraint = match (&a.weight, a.max_entry) {
            (Some(w), _) => Constraint::Weight(w.clone()),
            (None, Some(n)) => Constraint::MaxEntry(n),
            (None, None) if class == FillingClass::Elegant => Constraint::Free,
            (None, None) => return Err(usage("--weight or --max-entry is required for this class")),
        };
        let inner = a.inner.clone().unwrap_or_default();
        if class != FillingClass::Tabloid {
            let outer = Partition::new(shape.trimmed().to_vec())
                .map_err(|_| usage(format!("shape {shape:?} must be a partition")))?;
            SkewShape::new(outer, inner.clone())?;
        }
        let mut found = Vec::new();
        fillings::for_each(shape.trimmed(), inner.parts(), class, &constraint, &mut |f| found.push(f.clone()))?;
        found
    };
    let lambda = a.lambda.clone().unwrap_or_default();
    if a.iwt.is_some() && found.iter().any(|f| !f.inner().iter().all(|&i| i == 0)) {
        return Err(usage("--iwt needs fillings without an inner shape"));
    }
    let kept: Vec<Filling> = found
        .into_iter()
        .filter(|f| a.yamanouchi.as_ref().is_none_or(|y| is_yamanouchi(&reading_word(f, class), y)))
        .filter(|f| {
            a.iwt.as_ref().is_none_or(|v| &inflated_weight(&AugmentedFilling::new(f.clone(), lambda.clone())) == v)
        })
        .collect();
    let value = json!({
        "class": format!("{class:?}").to_lowercase(),
        "count": kept.len(),
        "fillings": kept,
    });
    Ok(Outcome::ok(emit(out, value, || {
        let mut s = String::new();
        for f in &kept {
            let w = weight(f, class);
            let _ = writeln!(s, "{}    weight {:?}", f.to_notation(), w.entries.trimmed());
            s.push_str(&render::grid(f));
            s.push('\n');
        }
        let _ = writeln!(s, "{} fillings", kept.len());
        s
    })))
}

fn augmented_grid(a: &AugmentedFilling) -> String {
    render::grid(&a.combined())
}

fn cmd_trace(out: Output, map: MapArg, lambda: Option<Partition>, input: &str) -> Result<Outcome, Failure> {
    let f = read_filling(input)?;
    match map {
        MapArg::Partial => {
            require_class(&f, FillingClass::Rpp)?;
            let a = partial_map(&f)?;
            let nu = inflated_weight(&a);
            let back = partial_inverse(&a, &nu)?;
            if back != f {
                return Err(Error::Invariant("partial map did not invert".into()).into());
            }
            let value = json!({
                "map": "partial",
                "input": f,
                "tabloid": a.top,
                "lambda": a.lambda,
                "inflated_weight": nu,
                "inflated_tableau": inflate_tabloid(&a),
            });
            Ok(Outcome::ok(emit(out, value, || {
                format!(
                    "reverse plane partition\n{}\ntabloid over T_lambda, lambda = ({})\n{}\ninflated weight tableau\n{}\ninflated weight ({})\n",
                    render::grid(&f),
                    a.lambda,
                    augmented_grid(&a),
                    inflate_tabloid(&a).render(),
                    nu
                )
            })))
        }
        MapArg::Phi => {
            let p = phi(&f)?;
            let value = json!({
                "map": "phi",
                "input": f,
                "steps": p.trace.steps,
                "terminal": p.terminal,
                "elegant": p.elegant,
            });
            Ok(Outcome::ok(emit(out, value, || {
                let mut s = String::new();
                for (i, step) in p.trace.steps.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "S{i}: row {} ejects {}, new cell {:?}\n{}",
                        step.row,
                        step.ejected,
                        step.new_cell,
                        render::grid(&step.before)
                    );
                }
                let _ = writeln!(s, "S{}: terminal\n{}", p.trace.steps.len(), render::grid(&p.terminal));
                let _ = writeln!(s, "elegant filling\n{}", render::grid(&p.elegant));
                s
            })))
        }
        MapArg::Tau => {
            require_class(&f, FillingClass::Svt)?;
            let a = AugmentedFilling::new(f, lambda.unwrap_or_default());
            let outcome = tau(&a)?;
            let value = json!({
                "map": "tau",
                "input": a,
                "output": outcome.result,
                "toggle": outcome.toggle,
                "inflated_weight": inflated_weight(&a),
            });
            Ok(Outcome::ok(emit(out, value, || {
                let mut s = format!("S * T_lambda, lambda = ({})\n{}\n", a.lambda, augmented_grid(&a));
                match &outcome.toggle {
                    None => s.push_str("fixed point: column lambda-Yamanouchi\n"),
                    Some(t) => {
                        let verb = if t.added { "add" } else { "delete" };
                        let _ = writeln!(
                            s,
                            "c = {}, y = {}, r = {}, cell_min = {:?}: {verb} {}",
                            t.column,
                            t.letter,
                            t.row,
                            t.cell_min,
                            t.letter - 1
                        );
                        let _ = writeln!(s, "\n{}", augmented_grid(&outcome.result));
                    }
                }
                let _ = writeln!(s, "inflated weight ({}) via\n{}", inflated_weight(&a), inflate_svt(&a).render());
                s
            })))
        }
    }
}

fn cmd_verify(out: Output, cache: Option<&CoefficientCache>, suite: SuiteArg, n: usize) -> Result<Outcome, Failure> {
    let suite = match suite {
        SuiteArg::Involution => Suite::Involution,
        SuiteArg::Bijection => Suite::Bijection,
        SuiteArg::Duality => Suite::Duality,
        SuiteArg::Routes => Suite::Routes,
        SuiteArg::Basis => Suite::Basis,
        SuiteArg::All => Suite::All,
    };
    let report = verify::run(suite, n, cache)?;
    let failed = !report.passed();
    let text = emit(out, serde_json::to_value(&report).expect("serializable"), || report.to_text());
    Ok(Outcome { text, failed })
}

fn cmd_cache(out: Output, path: &Path, action: CacheAction) -> Result<Outcome, Failure> {
    let cache = CoefficientCache::open(path)?;
    match action {
        CacheAction::Show => {
            let records = cache.records();
            Ok(Outcome::ok(emit(out, serde_json::to_value(&records).expect("serializable"), || {
                let mut s = String::new();
                for r in &records {
                    let _ = writeln!(s, "{} {} {} {:>4} {}", r.lambda, r.mu, r.nu, r.value, r.route);
                }
                let _ = writeln!(s, "{} records in {}", records.len(), path.display());
                s
            })))
        }
        CacheAction::Clear => {
            let n = cache.records().len();
            cache.clear()?;
            Ok(Outcome::ok(emit(out, json!({"cleared": n}), || format!("cleared {n} records\n"))))
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let out = cli.output;
    let open_cache = || -> Result<Option<CoefficientCache>, Failure> {
        cache_path(cli.cache.as_deref()).map(CoefficientCache::open).transpose().map_err(Failure::from)
    };
    match cli.command {
        Command::Eval { expression, degree } => cmd_eval(out, &expression, degree),
        Command::Coeff { lambda, mu, nu, route, degree } => {
            let cache = open_cache()?;
            cmd_coeff(out, cache.as_ref(), (&lambda, &mu, &nu), route, degree)
        }
        Command::Enumerate { class, shape, inner, weight, max_entry, yamanouchi, iwt, lambda, input } => cmd_enumerate(
            out,
            EnumerateArgs { class: class.into(), shape, inner, weight, max_entry, yamanouchi, iwt, lambda, input },
        ),
        Command::Trace { map, lambda, input } => cmd_trace(out, map, lambda, &input),
        Command::Verify { suite, max_size } => {
            let cache = open_cache()?;
            cmd_verify(out, cache.as_ref(), suite, max_size)
        }
        Command::Cache { path, action } => {
            let path = cache_path(path.as_deref().or(cli.cache.as_deref()))
                .ok_or_else(|| usage(format!("no cache path: pass --path or set {CACHE_ENV}")))?;
            cmd_cache(out, &path, action)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(if o.failed { 1 } else { 0 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
