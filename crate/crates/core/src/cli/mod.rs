//! The `lieshrink` command line. [`run`] returns the exit code and both
//! output streams instead of printing, so it can be tested in-process.
//!
//! Exit codes: 0 verified or consistent, 2 refuted or blocked, 3 unknown,
//! 1 usage, I/O or parse error.

pub mod files;

use crate::arith::{fmt_rational, Matrix, Rational};
use crate::catalog::{self, run_theorem24, theorem24_expectations, witnesses, PaddedStore, Part};
use crate::contraction::{
    decide, obstruct, search_diagonal, search_sheared, verify_contraction, RuleViolation, Verdict,
    Verification, WitnessSource,
};
use crate::gt::{closure_cone_member, cone_member, ConeVerdict, ConeWitness};
use crate::lie::{fingerprint, pad, LieAlgebra};
use clap::{Parser, Subcommand, ValueEnum};
use files::{resolve_algebra, resolve_matrix, AlgebraFile, FamilyFile, FileError};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BLOCKED: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Environment variable naming a directory of extra `<id>.json` algebra files.
pub const CATALOG_ENV: &str = "LIESHRINK_CATALOG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "lieshrink", version, about = "Exact verification and search of Lie algebra contractions")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the contraction-monotone invariants of an algebra.
    Invariants { algebra: String },
    /// Check a family file against its claimed target.
    Verify { family: PathBuf },
    /// List the rules that rule out `source ~> target`.
    Obstruct { source: String, target: String },
    /// Stored witness, then obstructions, then a bounded diagonal search.
    Decide { source: String, target: String },
    /// Is S in the cone of T, and in its closure?
    Cone { s: String, t: String },
    /// Evaluate the classification expectation table.
    Theorem24,
    /// Contraction graph among the six non-g_T algebras of the classification.
    Graph {
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        show_blocked: bool,
    },
    /// Search for a family `P diag(r^k)` with exponents in `[-bound, bound]`.
    Search {
        source: String,
        target: String,
        #[arg(long, default_value_t = 4)]
        bound: i64,
        #[arg(long)]
        base_change: Option<String>,
        /// Also try every permutation with one elementary shear as `P`.
        #[arg(long, conflicts_with = "base_change")]
        sheared: bool,
    },
    /// List catalog ids, or write them out as algebra and family files.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Write `<id>.json` per algebra and `witnesses/<id>.json` per family.
    Export { dir: PathBuf },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Self {
        Output { code, stdout, stderr: String::new() }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Output { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output::ok(code, text)
            };
        }
    };
    let dir = std::env::var_os(CATALOG_ENV).map(PathBuf::from);
    let ctx = Ctx { json: cli.format == Format::Json, dir };
    match ctx.dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Output::error(e),
    }
}

struct Ctx {
    json: bool,
    dir: Option<PathBuf>,
}

fn matrix_strings<T: std::fmt::Display + Clone>(m: &Matrix<T>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn rational_strings(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| fmt_rational(m.get(i, j))).collect()).collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

/// Pads the smaller algebra so both have the same dimension.
fn equalize(g: &LieAlgebra, g0: &LieAlgebra) -> (LieAlgebra, LieAlgebra) {
    let n = g.dim().max(g0.dim());
    let p = |a: &LieAlgebra| if a.dim() == n { a.clone() } else { pad(a, n - a.dim()).with_name(&format!("{}+a{}", a.name(), n - a.dim())) };
    (p(g), p(g0))
}

fn violation_json(v: &RuleViolation) -> Value {
    json!({
        "rule": v.rule.to_string(),
        "invariant": v.invariant,
        "source": v.source_value,
        "target": v.target_value,
    })
}

fn witness_json(w: &ConeWitness) -> Value {
    match w {
        ConeWitness::Conjugate { lambda, conjugator } => {
            json!({"kind": "conjugate", "lambda": fmt_rational(lambda), "conjugator": rational_strings(conjugator)})
        }
        ConeWitness::Scaling => json!({"kind": "scaling"}),
        ConeWitness::RankDomination { source_ranks, target_ranks } => {
            json!({"kind": "rank_domination", "source_ranks": source_ranks, "target_ranks": target_ranks})
        }
        ConeWitness::Degeneration { lambda, power, exponents, .. } => {
            json!({"kind": "degeneration", "lambda": fmt_rational(lambda), "power": power, "exponents": exponents})
        }
    }
}

fn cone_json(v: &ConeVerdict) -> Value {
    json!({
        "status": v.status,
        "reason": v.reason,
        "witness": v.witness.as_ref().map(witness_json),
    })
}

impl Ctx {
    fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn algebra(&self, spec: &str) -> Result<LieAlgebra, FileError> {
        resolve_algebra(spec, self.dir())
    }

    fn dispatch(&self, cmd: Command) -> Result<Output, FileError> {
        match cmd {
            Command::Invariants { algebra } => self.invariants(&algebra),
            Command::Verify { family } => self.verify(&family),
            Command::Obstruct { source, target } => self.obstruct(&source, &target),
            Command::Decide { source, target } => self.decide(&source, &target),
            Command::Cone { s, t } => self.cone(&s, &t),
            Command::Theorem24 => Ok(self.theorem24()),
            Command::Graph { dot, show_blocked } => Ok(self.graph(dot, show_blocked)),
            Command::Search { source, target, bound, base_change, sheared } => {
                self.search(&source, &target, bound, base_change.as_deref(), sheared)
            }
            Command::Catalog { action } => match action {
                None | Some(CatalogAction::List) => Ok(self.catalog_list()),
                Some(CatalogAction::Export { dir }) => self.catalog_export(&dir),
            },
        }
    }

    fn invariants(&self, spec: &str) -> Result<Output, FileError> {
        let g = self.algebra(spec)?;
        let f = fingerprint(&g);
        if self.json {
            return Ok(Output::ok(EXIT_OK, pretty(&json!({"algebra": g.name(), "invariants": f}))));
        }
        let mut s = String::new();
        let _ = writeln!(s, "algebra: {} (dim {})", g.name(), f.dim);
        let _ = writeln!(s, "derived series dims: {:?}", f.derived_series_dims);
        let _ = writeln!(s, "lower central dims: {:?}", f.lower_central_dims);
        let _ = writeln!(s, "center dim: {}", f.center_dim);
        let _ = writeln!(s, "solvable: {}", f.solvable);
        let _ = writeln!(s, "nilpotent class: {}", f.nilpotent_class.map_or("-".to_string(), |c| c.to_string()));
        let _ = writeln!(s, "unimodular: {}", f.unimodular);
        let _ = writeln!(s, "Killing signature (+, -, 0): {}", f.killing_signature);
        let _ = writeln!(s, "coadjoint rank: {}", f.coadjoint_rank);
        let _ = writeln!(s, "derivation dim: {}", f.derivation_dim);
        let _ = writeln!(s, "abelian ideal of codim <= 1: {}", f.has_codim1_abelian_ideal);
        let _ = writeln!(s, "flat generic orbits: {}", f.flat_generic_orbits);
        Ok(Output::ok(EXIT_OK, s))
    }

    fn verify(&self, path: &Path) -> Result<Output, FileError> {
        let fam = FamilyFile::load(path, self.dir())?;
        let v = verify_contraction(&fam);
        let code = if v.is_verified() { EXIT_OK } else { EXIT_BLOCKED };
        let (source, target) = (fam.source().name(), fam.target().name());
        let out = if self.json {
            let status = if v.is_verified() { "VERIFIED" } else { "REFUTED" };
            let mut o = json!({"source": source, "target": target, "status": status, "detail": v.to_string()});
            if let Verification::NoLimit { i, j, component, order } = &v {
                o["pole"] = json!({"bracket": [i + 1, j + 1], "component": component + 1, "order": order});
            }
            pretty(&o)
        } else {
            format!("{source} ~> {target}: {v}\n")
        };
        Ok(Output::ok(code, out))
    }

    fn obstruct(&self, source: &str, target: &str) -> Result<Output, FileError> {
        let (g, g0) = equalize(&self.algebra(source)?, &self.algebra(target)?);
        let vs = obstruct(&g, &g0).expect("equal dimensions");
        let code = if vs.is_empty() { EXIT_OK } else { EXIT_BLOCKED };
        let out = if self.json {
            pretty(&json!({
                "source": g.name(),
                "target": g0.name(),
                "blocked": !vs.is_empty(),
                "violations": vs.iter().map(violation_json).collect::<Vec<_>>(),
            }))
        } else if vs.is_empty() {
            format!("{} ~> {}: no rule applies\n", g.name(), g0.name())
        } else {
            let mut s = format!("{} ~> {}: BLOCKED\n", g.name(), g0.name());
            for v in &vs {
                let _ = writeln!(s, "  {v}");
            }
            s
        };
        Ok(Output::ok(code, out))
    }

    fn decide(&self, source: &str, target: &str) -> Result<Output, FileError> {
        let (g, g0) = equalize(&self.algebra(source)?, &self.algebra(target)?);
        let store = PaddedStore::standard();
        let verdict = decide(&g, &g0, &store).expect("equal dimensions");
        let code = match &verdict {
            Verdict::Verified { .. } => EXIT_OK,
            Verdict::Blocked { .. } => EXIT_BLOCKED,
            Verdict::Unknown => EXIT_UNKNOWN,
        };
        let via = |v: &WitnessSource| match v {
            WitnessSource::Store => "store",
            WitnessSource::Search => "search",
        };
        let out = if self.json {
            let mut o = json!({"source": g.name(), "target": g0.name(), "status": verdict.status()});
            match &verdict {
                Verdict::Verified { family, via: w } => {
                    o["via"] = json!(via(w));
                    o["matrix"] = json!(matrix_strings(family.matrix()));
                }
                Verdict::Blocked { violations } => {
                    o["violations"] = json!(violations.iter().map(violation_json).collect::<Vec<_>>());
                }
                Verdict::Unknown => {}
            }
            pretty(&o)
        } else {
            let mut s = format!("{} ~> {}: {}", g.name(), g0.name(), verdict.status());
            match &verdict {
                Verdict::Verified { family, via: w } => {
                    let _ = write!(s, " ({})\n{}", via(w), family.matrix());
                }
                Verdict::Blocked { violations } => {
                    s.push('\n');
                    for v in violations {
                        let _ = writeln!(s, "  {v}");
                    }
                }
                Verdict::Unknown => s.push('\n'),
            }
            s
        };
        Ok(Output::ok(code, out))
    }

    fn cone(&self, s: &str, t: &str) -> Result<Output, FileError> {
        let (sm, tm) = (resolve_matrix(s)?, resolve_matrix(t)?);
        let shape = |e: crate::gt::GtError| FileError::Shape { path: format!("{s} / {t}"), message: e.to_string() };
        let exact = cone_member(&sm, &tm).map_err(shape)?;
        let closure = closure_cone_member(&sm, &tm).map_err(shape)?;
        let code = match closure.status {
            crate::gt::ConeStatus::In => EXIT_OK,
            crate::gt::ConeStatus::NotIn => EXIT_BLOCKED,
            crate::gt::ConeStatus::Unknown => EXIT_UNKNOWN,
        };
        let out = if self.json {
            pretty(&json!({"cone": cone_json(&exact), "closure": cone_json(&closure)}))
        } else {
            format!("cone: {} ({})\nclosure: {} ({})\n", exact.status, exact.reason, closure.status, closure.reason)
        };
        Ok(Output::ok(code, out))
    }

    fn theorem24(&self) -> Output {
        let report = run_theorem24();
        let code = if report.all_pass() { EXIT_OK } else { EXIT_BLOCKED };
        Output::ok(code, if self.json { report.to_json() + "\n" } else { report.render_text() })
    }

    fn graph(&self, dot: bool, show_blocked: bool) -> Output {
        let store = PaddedStore::standard();
        let base = |id: &str| id.rsplit_once("+a").map_or(id, |(b, _)| b).to_string();
        let mut edges = Vec::new();
        for row in theorem24_expectations().into_iter().filter(|r| r.part == Part::Diagram) {
            let g = catalog::get(&row.source).expect("catalog id");
            let g0 = catalog::get(&row.target).expect("catalog id");
            let verdict = decide(&g, &g0, &store).expect("equal dimensions");
            let rules: Vec<String> = match &verdict {
                Verdict::Blocked { violations } => violations.iter().map(|v| v.rule.to_string()).collect(),
                _ => vec![],
            };
            edges.push((base(&row.source), base(&row.target), verdict.status(), rules));
        }
        let mut s = String::new();
        if dot {
            s.push_str("digraph contractions {\n");
            let mut nodes: Vec<&String> = edges.iter().map(|e| &e.0).collect();
            nodes.dedup();
            for n in nodes {
                let _ = writeln!(s, "  \"{n}\";");
            }
            for (a, b, status, rules) in &edges {
                match *status {
                    "VERIFIED" => {
                        let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
                    }
                    "BLOCKED" if show_blocked => {
                        let _ = writeln!(s, "  \"{a}\" -> \"{b}\" [style=dashed, label=\"{}\"];", rules.join(","));
                    }
                    _ => {}
                }
            }
            s.push_str("}\n");
        } else if self.json {
            let list: Vec<Value> = edges
                .iter()
                .filter(|e| e.2 == "VERIFIED" || show_blocked)
                .map(|(a, b, st, r)| json!({"source": a, "target": b, "status": st, "rules": r}))
                .collect();
            s = pretty(&json!(list));
        } else {
            for (a, b, status, rules) in edges.iter().filter(|e| e.2 == "VERIFIED" || show_blocked) {
                let _ = writeln!(s, "{a} -> {b} {status}{}", if rules.is_empty() { String::new() } else { format!(" {}", rules.join(",")) });
            }
        }
        Output::ok(EXIT_OK, s)
    }

    fn search(&self, source: &str, target: &str, bound: i64, base: Option<&str>, sheared: bool) -> Result<Output, FileError> {
        let (g, g0) = equalize(&self.algebra(source)?, &self.algebra(target)?);
        let p = base.map(resolve_matrix).transpose()?;
        if let Some(p) = &p {
            if p.rows() != g.dim() || p.determinant() == Rational::from_integer(0.into()) {
                return Err(FileError::Shape {
                    path: base.unwrap_or_default().to_string(),
                    message: format!("base change must be an invertible {0}x{0} matrix", g.dim()),
                });
            }
        }
        let found = if sheared {
            search_sheared(&g, &g0, bound)
        } else {
            search_diagonal(&g, &g0, bound, p.as_ref())
        }
        .expect("equal dimensions");
        let code = if found.is_some() { EXIT_OK } else { EXIT_UNKNOWN };
        let out = match (&found, self.json) {
            (Some(f), true) => pretty(&json!({"source": g.name(), "target": g0.name(), "status": "VERIFIED", "matrix": matrix_strings(f.matrix())})),
            (None, true) => pretty(&json!({"source": g.name(), "target": g0.name(), "status": "NOT_FOUND", "bound": bound})),
            (Some(f), false) => format!("{} ~> {}: VERIFIED\n{}", g.name(), g0.name(), f.matrix()),
            (None, false) => format!("{} ~> {}: no family with exponents in [-{bound}, {bound}]\n", g.name(), g0.name()),
        };
        Ok(Output::ok(code, out))
    }

    fn catalog_list(&self) -> Output {
        let entries = catalog::entries();
        if self.json {
            let list: Vec<Value> = catalog::ids()
                .iter()
                .map(|id| {
                    let e = entries.iter().find(|e| e.id == id);
                    json!({
                        "id": id,
                        "dim": catalog::get(id).expect("listed id").dim(),
                        "aliases": e.map(|e| e.aliases.to_vec()).unwrap_or_default(),
                        "description": e.map(|e| e.description),
                    })
                })
                .collect();
            return Output::ok(EXIT_OK, pretty(&json!(list)));
        }
        let mut s = String::new();
        for id in catalog::ids() {
            let g = catalog::get(&id).expect("listed id");
            let desc = entries.iter().find(|e| e.id == id).map_or("", |e| e.description);
            let _ = writeln!(s, "{id:<14} dim {:<2} {desc}", g.dim());
        }
        Output::ok(EXIT_OK, s)
    }

    fn catalog_export(&self, dir: &Path) -> Result<Output, FileError> {
        let io = |p: &Path| {
            let path = p.display().to_string();
            move |source| FileError::Io { path, source }
        };
        let wdir = dir.join("witnesses");
        std::fs::create_dir_all(&wdir).map_err(io(&wdir))?;
        let mut n = 0;
        for id in catalog::ids() {
            let g = catalog::get(&id)?;
            let p = dir.join(format!("{id}.json"));
            let text = serde_json::to_string_pretty(&AlgebraFile::from_algebra(&g)).expect("json");
            std::fs::write(&p, text + "\n").map_err(io(&p))?;
            n += 1;
        }
        let mut m = 0;
        for w in witnesses() {
            let file: String = w.id.chars().map(|c| if c.is_ascii_alphanumeric() || c == '+' { c } else { '_' }).collect();
            let p = wdir.join(format!("{file}.json"));
            let text = serde_json::to_string_pretty(&FamilyFile::from_family(&w.family, &w.source_id, &w.target_id)).expect("json");
            std::fs::write(&p, text + "\n").map_err(io(&p))?;
            m += 1;
        }
        Ok(Output::ok(EXIT_OK, format!("wrote {n} algebras and {m} families to {}\n", dir.display())))
    }
}
