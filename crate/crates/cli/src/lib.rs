//! The `quantlat` command line. [`run`] parses arguments, writes to the given
//! streams and returns the exit code: 0 on success, 1 when an input fails
//! validation, 2 on a usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};

use quantlat::catalogue::{self, TABLES};
use quantlat::enumerate::quantales::{attach_labels, resolve_element};
use quantlat::enumerate::{census_strict, classify_seven, enumerate_quantales, Constraint, EnumOptions};
use quantlat::extension::{check_extension_conditions, extend_quantale};
use quantlat::group::{cyclic_group, group_quantale, klein_four};
use quantlat::io::{
    entry_line, export_dot, from_file, lattice_json, model_to_json, parse_model, profile_json, render_table, IoError,
    Model, ModelFile,
};
use quantlat::named::{self, Pattern};
use quantlat::nucleus::{l7_collapse_map, lift_diamond_to_l7, quotient_by_nucleus, Nucleus};
use quantlat::order::{distributivity_report, extend_lattice, totally_below};
use quantlat::patterns::{pattern_scan, PatternMatch};
use quantlat::quantale::{quantale_isomorphic, NucleusLaw, QuantaleError};
use quantlat::{ElemSet, Lattice, Quantale};

const LATTICE_HELP: &str = "a shape (M3, N5, L6, L7, extM3, extN5, extL6, extL7), chain:N, boolean:K, or a model file";
const QUANTALE_HELP: &str = "a model file or a reference table label such as 5.2.42";

#[derive(Debug, Parser)]
#[command(name = "quantlat", version, about = "Finite lattices, quantales and their small-size classification")]
struct Cli {
    /// Worker threads for enumeration; output does not depend on it
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    /// Emit JSON lines instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a lattice and report its distributivity
    CheckLattice {
        #[arg(help = LATTICE_HELP)]
        lattice: String,
    },
    /// Validate a quantale and report its profile
    CheckQuantale {
        #[arg(help = QUANTALE_HELP)]
        quantale: String,
    },
    /// Print the totally-below relation
    TotallyBelow {
        #[arg(help = LATTICE_HELP)]
        lattice: String,
    },
    /// Add an isolated element above the down-set of gamma and a new top
    ExtendLattice {
        #[arg(help = LATTICE_HELP)]
        lattice: String,
        #[arg(long)]
        gamma: String,
        /// Write the model file here instead of standard output
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Extend a quantale at gamma by a new unit and a new top
    ExtendQuantale {
        #[arg(help = QUANTALE_HELP)]
        quantale: String,
        #[arg(long)]
        gamma: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// All quantales on a lattice up to isomorphism
    Enumerate {
        #[arg(long, help = LATTICE_HELP)]
        lattice: String,
        /// none, unital, nonUnital, semiUnital, propA(x) or unitalAt(x)
        #[arg(long, default_value = "none")]
        constraint: String,
    },
    /// Unitally nondistributive quantales on 7-element lattices
    Classify7,
    /// Strictly nondistributive lattices per size
    Census {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..=8))]
        max_n: u64,
    },
    /// Look for the four extended shapes as complete sublattices
    ScanPatterns {
        /// Lattice to scan; without it every strictly nondistributive lattice up to --max-n is scanned
        lattice: Option<String>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=8))]
        max_n: u64,
    },
    /// The group quantale with universal bounds adjoined
    GroupQuantale {
        /// cyclic:K, klein, or a JSON file holding the Cayley table
        #[arg(long)]
        cayley: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Quotient of a quantale by a nucleus
    Quotient {
        #[arg(help = QUANTALE_HELP)]
        quantale: String,
        /// `x=y,...` by element name (identity elsewhere) or `l7-collapse`
        #[arg(long)]
        nucleus: String,
        /// First lift a diamond quantale to L7 and extend it at gamma
        #[arg(long)]
        lift_l7: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Hasse diagram in Graphviz format
    ExportDot {
        #[arg(help = LATTICE_HELP)]
        lattice: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Invalid(String),
    /// the reader went away; stop quietly
    Closed,
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

fn write_failed(e: std::io::Error) -> Failure {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return Failure::Closed;
    }
    invalid(format!("write failed: {e}"))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = writeln!(err, "{}", e.render());
            let _ = writeln!(err, "{}", Cli::command().render_help());
            return 2;
        }
    };
    let mut ctx = Ctx { out, json: cli.json, opts: EnumOptions { threads: cli.threads.map(|t| t as usize) } };
    match ctx.dispatch(cli.command) {
        Ok(()) | Err(Failure::Closed) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n");
            let _ = writeln!(err, "{}", Cli::command().render_help());
            2
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
    opts: EnumOptions,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> Outcome {
        writeln!(self.out, "{}", s.as_ref()).map_err(write_failed)
    }

    fn text(&mut self, s: impl AsRef<str>) -> Outcome {
        write!(self.out, "{}", s.as_ref()).map_err(write_failed)
    }

    fn value(&mut self, v: &Value) -> Outcome {
        self.line(v.to_string())
    }

    /// Writes a model to `out` or standard output.
    fn emit_model(&mut self, model: &Model, out: Option<&Path>) -> Outcome {
        match out {
            Some(path) => {
                quantlat::io::save_model(model, path).map_err(|e| invalid(e.to_string()))?;
                if self.json {
                    self.value(&json!({ "written": path.display().to_string() }))
                } else {
                    self.line(format!("wrote {}", path.display()))
                }
            }
            None if self.json => self.value(&serde_json::to_value(quantlat::io::to_file(model)).expect("serializes")),
            None => self.text(model_to_json(model)),
        }
    }

    fn dispatch(&mut self, command: Command) -> Outcome {
        match command {
            Command::CheckLattice { lattice } => self.check_lattice(&lattice),
            Command::CheckQuantale { quantale } => self.check_quantale(&quantale),
            Command::TotallyBelow { lattice } => self.totally_below(&lattice),
            Command::ExtendLattice { lattice, gamma, out } => {
                let l = load_lattice(&lattice)?;
                let g = element(&l, &gamma)?;
                if g == l.top() {
                    return Err(invalid(QuantaleError::GammaIsTop.to_string()));
                }
                self.emit_model(&Model::Lattice(extend_lattice(&l, g).lattice), out.as_deref())
            }
            Command::ExtendQuantale { quantale, gamma, out } => self.extend_quantale(&quantale, &gamma, out.as_deref()),
            Command::Enumerate { lattice, constraint } => self.enumerate(&lattice, &constraint),
            Command::Classify7 => self.classify7(),
            Command::Census { max_n } => self.census(max_n as usize),
            Command::ScanPatterns { lattice, max_n } => self.scan(lattice.as_deref(), max_n as usize),
            Command::GroupQuantale { cayley, out } => {
                let table = load_cayley(&cayley)?;
                let q = group_quantale(&table).map_err(|e| invalid(e.to_string()))?;
                self.emit_model(&Model::Quantale(q), out.as_deref())
            }
            Command::Quotient { quantale, nucleus, lift_l7, out } => {
                self.quotient(&quantale, &nucleus, lift_l7, out.as_deref())
            }
            Command::ExportDot { lattice, out } => {
                let l = load_lattice(&lattice)?;
                match out {
                    Some(path) => {
                        quantlat::io::write_dot(&l, &path).map_err(|e| invalid(e.to_string()))?;
                        self.line(format!("wrote {}", path.display()))
                    }
                    None => self.text(export_dot(&l)),
                }
            }
        }
    }

    fn check_lattice(&mut self, src: &str) -> Outcome {
        let l = match load_lattice(src) {
            Ok(l) => l,
            Err(Failure::Invalid(msg)) => {
                if self.json {
                    self.value(&json!({ "valid": false, "error": msg }))?;
                }
                return Err(invalid(msg));
            }
            Err(e) => return Err(e),
        };
        let r = distributivity_report(&l);
        let names = |t: Option<(usize, usize, usize)>| t.map(|(a, b, c)| [l.name(a), l.name(b), l.name(c)]);
        let shape = quantlat::enumerate::classify::identify(&l).map(|p| p.tag());
        if self.json {
            return self.value(&json!({
                "valid": true,
                "size": l.size(),
                "shape": shape,
                "completelyDistributive": r.completely_distributive,
                "nondistributiveWitness": names(r.nondist_witness),
                "strictWitness": names(r.strict_witness),
            }));
        }
        self.line(format!("valid lattice with {} elements", l.size()))?;
        if let Some(s) = shape {
            self.line(format!("shape: {s}"))?;
        }
        self.line(format!("completely distributive: {}", r.completely_distributive))?;
        match names(r.nondist_witness) {
            Some([a, b, c]) => self.line(format!("nondistributive: {c}∧({a}∨{b}) ≰ ({c}∧{a})∨({c}∧{b})"))?,
            None => self.line("distributive")?,
        }
        match names(r.strict_witness) {
            Some([a, b, x]) => self.line(format!("strictly nondistributive: ({a}, {b}, {x}), {x} ≰ {a}∨{b}")),
            None => self.line("not strictly nondistributive"),
        }
    }

    fn check_quantale(&mut self, src: &str) -> Outcome {
        let q = match load_quantale(src) {
            Ok(q) => q,
            Err(Failure::Invalid(msg)) => {
                if self.json {
                    self.value(&json!({ "valid": false, "error": msg }))?;
                }
                return Err(invalid(msg));
            }
            Err(e) => return Err(e),
        };
        let l = q.lattice();
        let p = q.profile();
        if self.json {
            return self.value(&json!({
                "valid": true,
                "label": q.label(),
                "lattice": lattice_json(l),
                "profile": profile_json(l, &p),
            }));
        }
        self.line(format!("valid quantale{}", q.label().map(|s| format!(" {s}")).unwrap_or_default()))?;
        self.text(render_table(&q))?;
        let names = |s: ElemSet| s.iter().map(|x| l.name(x).to_string()).collect::<Vec<_>>().join(", ");
        self.line(format!("unit: {}", p.unit.map_or("none", |u| l.name(u))))?;
        self.line(format!("semi-unital: {}", p.semi_unital))?;
        self.line(format!("commutative: {}", p.commutative))?;
        self.line(format!("integral: {}", p.integral))?;
        self.line(format!("two-sided: {}", p.two_sided))?;
        self.line(format!("two-sided elements: {}", names(p.two_sided_elements)))?;
        self.line(format!("dualizing elements: {}", names(p.dualizing)))?;
        self.line(format!("meet-distributive multiplication: {}", p.meet_distributive_mul))
    }

    fn totally_below(&mut self, src: &str) -> Outcome {
        let l = load_lattice(src)?;
        let matrix: Vec<Vec<bool>> =
            l.elements().map(|b| l.elements().map(|a| totally_below(&l, b, a)).collect()).collect();
        let r = distributivity_report(&l);
        if self.json {
            return self.value(&json!({
                "names": l.names(),
                "totallyBelow": matrix,
                "approximable": r.approximable,
                "completelyDistributive": r.completely_distributive,
            }));
        }
        let width = l.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
        let header: Vec<String> = l.names().iter().map(|s| format!("{s:>width$}")).collect();
        self.line(format!("{:>width$} | {}", "◁", header.join(" ")))?;
        for b in l.elements() {
            let row: Vec<String> =
                matrix[b].iter().map(|&t| format!("{:>width$}", if t { "1" } else { "." })).collect();
            self.line(format!("{:>width$} | {}", l.name(b), row.join(" ")))?;
        }
        let not: Vec<&str> =
            l.elements().filter(|&a| a != l.bottom() && !r.approximable[a]).map(|a| l.name(a)).collect();
        self.line(format!(
            "row b, column a: b ◁ a; not approximable: {}",
            if not.is_empty() { "none".to_string() } else { not.join(", ") }
        ))
    }

    fn extend_quantale(&mut self, src: &str, gamma: &str, out: Option<&Path>) -> Outcome {
        let q = load_quantale(src)?;
        let g = element(q.lattice(), gamma)?;
        let x = extend_quantale(&q, g).map_err(|e| invalid(describe(&e, q.lattice())))?;
        if !self.json && out.is_none() {
            let c = check_extension_conditions(&q, g).expect("extension succeeded");
            self.line(format!("conditions: propA {}, propAA {}, propB {}", c.prop_a, c.prop_aa, c.prop_b))?;
            self.text(render_table(&x))?;
        }
        self.emit_model(&Model::Quantale(x), out)
    }

    fn enumerate(&mut self, src: &str, constraint: &str) -> Outcome {
        let l = load_lattice(src)?;
        let c = Constraint::parse(constraint, &l).map_err(usage)?;
        let mut entries = enumerate_quantales(&l, c, self.opts);
        let references: Vec<Quantale> = TABLES.iter().map(|t| t.quantale()).collect();
        attach_labels(&mut entries, &references, c.parameter());
        if self.json {
            for e in &entries {
                self.line(entry_line(e))?;
            }
            return Ok(());
        }
        for (i, e) in entries.iter().enumerate() {
            let flags: Vec<String> = e.flags.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let label = e.quantale.label().map(|s| format!(" [{s}]")).unwrap_or_default();
            self.line(format!("#{}{label} {} {}", i + 1, e.canonical, flags.join(" ")))?;
            self.text(render_table(&e.quantale))?;
            self.line("")?;
        }
        let unital = entries.iter().filter(|e| e.profile.unit.is_some()).count();
        let semi = entries.iter().filter(|e| e.profile.unit.is_none() && e.profile.semi_unital).count();
        let noncomm = entries.iter().filter(|e| !e.profile.commutative).count();
        self.line(format!(
            "total {} on {} with {}: {unital} unital, {semi} semi-unital non-unital, {} not semi-unital, {noncomm} non-commutative",
            entries.len(),
            describe_lattice(&l),
            c.display(&l),
            entries.len() - unital - semi,
        ))
    }

    fn classify7(&mut self) -> Outcome {
        let report = classify_seven(self.opts);
        let per: Vec<(String, usize)> = report
            .lattices
            .iter()
            .map(|c| (c.pattern.map_or_else(|| c.lattice.order_code(), |p| p.tag().to_string()), c.entries.len()))
            .collect();
        if self.json {
            for c in &report.lattices {
                for e in &c.entries {
                    self.line(entry_line(e))?;
                }
            }
            let per_json: Vec<Value> = per.iter().map(|(s, n)| json!({ "lattice": s, "count": n })).collect();
            return self.value(&json!({ "summary": {
                "total": report.total,
                "nonCommutative": report.non_commutative,
                "roundTrip": report.round_trip,
                "perLattice": per_json,
            }}));
        }
        for c in &report.lattices {
            let name = c.pattern.map_or("unnamed", |p| p.tag());
            self.line(format!("== {name}: {} quantales", c.entries.len()))?;
            for (i, e) in c.entries.iter().enumerate() {
                let comm = if e.profile.commutative { "" } else { " non-commutative" };
                self.line(format!("#{}{comm}", i + 1))?;
                self.text(render_table(&e.quantale))?;
            }
        }
        let split: Vec<String> = per.iter().map(|(s, n)| format!("{s} {n}")).collect();
        self.line(format!(
            "total {}, non-commutative {} ({}), round trip {}",
            report.total,
            report.non_commutative,
            split.join(", "),
            if report.round_trip { "ok" } else { "FAILED" }
        ))
    }

    fn census(&mut self, max_n: usize) -> Outcome {
        let rows = census_strict(max_n).map_err(|e| usage(e.to_string()))?;
        for r in rows {
            let reps: Vec<Value> = r
                .representatives
                .iter()
                .map(|(l, p)| json!(p.map_or_else(|| l.order_code(), |p| p.tag().to_string())))
                .collect();
            if self.json {
                self.value(&json!({
                    "n": r.n,
                    "lattices": r.lattices,
                    "nondistributive": r.nondistributive,
                    "strict": r.strict,
                    "representatives": reps,
                }))?;
            } else {
                let shown: Vec<String> = reps.iter().map(|v| v.as_str().unwrap_or_default().to_string()).collect();
                let tail = if shown.is_empty() { String::new() } else { format!(" [{}]", shown.join(", ")) };
                self.line(format!(
                    "n={}: {} lattices, {} nondistributive, {} strict{tail}",
                    r.n, r.lattices, r.nondistributive, r.strict
                ))?;
            }
        }
        Ok(())
    }

    fn scan(&mut self, src: Option<&str>, max_n: usize) -> Outcome {
        let targets: Vec<Lattice> = match src {
            Some(s) => vec![load_lattice(s)?],
            None => census_strict(max_n)
                .map_err(|e| usage(e.to_string()))?
                .into_iter()
                .flat_map(|r| r.representatives.into_iter().map(|(l, _)| l))
                .collect(),
        };
        let mut missing = 0;
        for l in &targets {
            let strict = distributivity_report(l).is_strictly_nondistributive();
            let m = pattern_scan(l);
            if strict && m.is_none() {
                missing += 1;
            }
            if self.json {
                self.value(&json!({
                    "lattice": lattice_json(l),
                    "strict": strict,
                    "match": m.as_ref().map(|m| match_json(l, m)),
                }))?;
            } else {
                let found = match &m {
                    Some(m) => {
                        let model = m.pattern.model();
                        let pairs: Vec<String> = m
                            .map
                            .iter()
                            .enumerate()
                            .map(|(i, &x)| format!("{}->{}", model.name(i), l.name(x)))
                            .collect();
                        format!("{} via {}", m.pattern, pairs.join(" "))
                    }
                    None => "no pattern".into(),
                };
                self.line(format!("{} ({} elements, strict {strict}): {found}", describe_lattice(l), l.size()))?;
            }
        }
        if missing > 0 {
            return Err(invalid(format!("{missing} strictly nondistributive lattice(s) without a pattern")));
        }
        Ok(())
    }

    fn quotient(&mut self, src: &str, nucleus: &str, lift: bool, out: Option<&Path>) -> Outcome {
        let original = load_quantale(src)?;
        let q = if lift {
            let lifted = lift_diamond_to_l7(&original).map_err(|e| invalid(describe(&e, original.lattice())))?;
            let g = element(lifted.lattice(), "gamma")?;
            extend_quantale(&lifted, g).map_err(|e| invalid(describe(&e, lifted.lattice())))?
        } else {
            original.clone()
        };
        let l = q.lattice();
        let map = if nucleus.trim() == "l7-collapse" {
            if quantlat::enumerate::classify::identify(l) != Some(Pattern::ExtL7) {
                return Err(usage("l7-collapse needs a quantale on extL7 (try --lift-l7)"));
            }
            l7_collapse_map(l)
        } else {
            parse_map(l, nucleus)?
        };
        let c = Nucleus::new(&q, map).map_err(|e| invalid(describe(&e, l)))?;
        let (quot, _) = quotient_by_nucleus(&q, &c).map_err(|e| invalid(describe(&e, l)))?;
        if lift && out.is_none() {
            let target = original.lattice().index_of("gamma").and_then(|g| extend_quantale(&original, g).ok());
            let iso = target.as_ref().is_some_and(|t| quantale_isomorphic(&quot, t).is_some());
            if self.json {
                self.value(&json!({ "isomorphicToExtension": iso }))?;
            } else {
                self.text(render_table(&quot))?;
                self.line(format!("isomorphic to the extension of the original: {iso}"))?;
                return Ok(());
            }
        }
        self.emit_model(&Model::Quantale(quot), out)
    }
}

fn match_json(l: &Lattice, m: &PatternMatch) -> Value {
    let model = m.pattern.model();
    let map: serde_json::Map<String, Value> =
        m.map.iter().enumerate().map(|(i, &x)| (model.name(i).to_string(), json!(l.name(x)))).collect();
    json!({ "pattern": m.pattern.tag(), "map": map })
}

fn describe_lattice(l: &Lattice) -> String {
    quantlat::enumerate::classify::identify(l).map_or_else(|| l.order_code(), |p| p.tag().to_string())
}

fn element(l: &Lattice, name: &str) -> Result<usize, Failure> {
    resolve_element(l, name).map_err(usage)
}

/// Error text with element names in place of indices.
fn describe(e: &QuantaleError, l: &Lattice) -> String {
    describe_with(e, l.names())
}

fn describe_with(e: &QuantaleError, names: &[String]) -> String {
    let n = |x: usize| names.get(x).map_or_else(|| x.to_string(), String::clone);
    match e {
        QuantaleError::BadEntry { row, col, value } => {
            format!("entry {}∗{} = {value} is not an element", n(*row), n(*col))
        }
        QuantaleError::BottomNotAnnihilating { side, element } => {
            format!("bottom does not annihilate on the {side} at {}", n(*element))
        }
        QuantaleError::NotJoinPreserving { side, x, y, z } => {
            format!("not join-preserving in the {side} variable: x={}, y={}, z={}", n(*x), n(*y), n(*z))
        }
        QuantaleError::NotAssociative { a, b, c } => {
            format!("not associative: ({0}∗{1})∗{2} ≠ {0}∗({1}∗{2})", n(*a), n(*b), n(*c))
        }
        QuantaleError::ConditionsFail { condition, alpha, beta } => match beta {
            Some(b) => format!("condition {condition:?} fails at alpha={}, beta={}", n(*alpha), n(*b)),
            None => format!("condition {condition:?} fails at alpha={}", n(*alpha)),
        },
        QuantaleError::NotANucleus(law) => match *law {
            NucleusLaw::Range(x) => format!("not a nucleus: the image of {} is not an element", n(x)),
            NucleusLaw::Monotone(x, y) => format!("not a nucleus: not monotone at {} ≤ {}", n(x), n(y)),
            NucleusLaw::Inflationary(x) => format!("not a nucleus: not inflationary at {}", n(x)),
            NucleusLaw::Idempotent(x) => format!("not a nucleus: not idempotent at {}", n(x)),
            NucleusLaw::LaxProduct(x, y) => {
                format!("not a nucleus: c({0})∗c({1}) ≰ c({0}∗{1})", n(x), n(y))
            }
        },
        other => other.to_string(),
    }
}

/// Loads a model file; quantale diagnostics name elements as the file does.
fn read_model(src: &str) -> Result<Model, Failure> {
    let text = std::fs::read_to_string(src).map_err(|e| invalid(format!("{src}: {e}")))?;
    let file: ModelFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        // let the library produce the positioned parse error
        Err(_) => return parse_model(&text).map_err(|e| invalid(e.to_string())),
    };
    let names = file.names.clone();
    from_file(file).map_err(|e| match e {
        IoError::Quantale(q) => invalid(describe_with(&q, &names)),
        other => invalid(other.to_string()),
    })
}

/// A named shape, `chain:N`, `boolean:K`, or a model file.
fn load_lattice(src: &str) -> Result<Lattice, Failure> {
    if let Ok(p) = src.parse::<Pattern>() {
        return Ok(p.model());
    }
    if let Some(n) = src.strip_prefix("chain:") {
        let n: usize = n.parse().map_err(|_| usage(format!("bad chain length {n:?}")))?;
        return Lattice::chain(n).map_err(|e| usage(e.to_string()));
    }
    if let Some(k) = src.strip_prefix("boolean:") {
        let k: usize = k.parse().map_err(|_| usage(format!("bad exponent {k:?}")))?;
        if k > 6 {
            return Err(usage("boolean:K supports K ≤ 6"));
        }
        return Ok(named::boolean(k));
    }
    if !Path::new(src).exists() {
        return Err(usage(format!("{src:?} is neither a known lattice nor a file")));
    }
    read_model(src).map(|m| m.lattice().clone())
}

/// A model file or a reference table label.
fn load_quantale(src: &str) -> Result<Quantale, Failure> {
    if let Some(t) = catalogue::by_label(src) {
        return Ok(t.quantale());
    }
    if !Path::new(src).exists() {
        return Err(usage(format!("{src:?} is neither a reference label nor a file")));
    }
    match read_model(src)? {
        Model::Quantale(q) => Ok(q),
        Model::Lattice(_) => Err(invalid(format!("{src} holds a lattice, not a quantale"))),
    }
}

fn load_cayley(src: &str) -> Result<Vec<Vec<usize>>, Failure> {
    if src == "klein" {
        return Ok(klein_four());
    }
    if let Some(k) = src.strip_prefix("cyclic:") {
        let k: usize = k.parse().map_err(|_| usage(format!("bad group order {k:?}")))?;
        if !(1..=30).contains(&k) {
            return Err(usage("cyclic:K supports 1 ≤ K ≤ 30"));
        }
        return Ok(cyclic_group(k));
    }
    let text = std::fs::read_to_string(src).map_err(|e| usage(format!("{src}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{src}: {e}")))
}

/// `x=y,...` by name; unlisted elements are fixed.
fn parse_map(l: &Lattice, text: &str) -> Result<Vec<usize>, Failure> {
    let mut map: Vec<usize> = l.elements().collect();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (from, to) = part.split_once('=').ok_or_else(|| usage(format!("expected x=y, got {part:?}")))?;
        map[element(l, from.trim())?] = element(l, to.trim())?;
    }
    Ok(map)
}
