//! The `ccpba` command line: argument parsing, dispatch and reports.
//!
//! [`run`] does all the work and returns the exit code with the report text,
//! so the binary is a thin wrapper and tests need no subprocess.
//!
//! Exit codes: 0 success, valid or accepted; 1 falsified or rejected;
//! 2 malformed input; 3 a size guard tripped.

use std::fmt::Display;
use std::fs;
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use ccpba_core::algebra::au::build_au;
use ccpba_core::algebra::enumerate::{enumerate_exact, AlgebraClass, CatalogEntry, EnumerateOptions};
use ccpba_core::algebra::io::{parse_algebra, write_algebra, write_ccpba, write_kim, AlgebraFile, AlgebraFileError};
use ccpba_core::algebra::kite::classify_negation_pair;
use ccpba_core::bridge::{
    canonical_frame_ccpba, complex_algebra_compat, complex_algebra_subnormal, frame_embedding, kim_frame_embedding,
    kim_stone_embedding, stone_embedding, BridgeError, Embedding,
};
use ccpba_core::frames::io::{parse_frame, write_frame, FrameFile, FrameFileError};
use ccpba_core::frames::truth::{frame_sequent_valid, frame_valid, FrameBounds, FrameEvalError, FrameWitness};
use ccpba_core::frames::{members, Frame, Poset, WorldSet};
use ccpba_core::proofs::io::{parse_proof, ProofFile};
use ccpba_core::proofs::search::{countermodel_search_with_guard, Goal, SearchError, System, MAX_SEARCH_SIZE};
use ccpba_core::proofs::{check_hilbert, check_sequent_derivation};
use ccpba_core::translate::{phi, psi};
use ccpba_core::{
    algebra_valid, atoms, classify, classify_algebra, evaluate, parse, sequent_valid, Algebra, AlgebraError,
    ClassReport, EvalError, FiniteLattice, Formula, Interpretation, Sequent, Valuation, Verdict,
};

pub const ALGEBRA_GUARD: usize = 8;
pub const WORLD_GUARD: usize = 10;
pub const ATOM_GUARD: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "ccpba", version, about = "Finite ccpBa and K_im workbench")]
struct Cli {
    /// Emit line-oriented key=value records only.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Lift the size guards on algebras, worlds and atoms.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a formula (or `lhs |- rhs`) and print it back.
    Parse { text: String },
    /// Validate an algebra file.
    CheckAlgebra { file: String },
    /// Class membership and negation-kite placement; without `tilde_one`,
    /// every admissible choice is classified.
    Classify { file: String },
    /// Evaluate a formula under an assignment.
    Eval {
        file: String,
        formula: String,
        /// Comma-separated `atom=element` pairs.
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// Decide validity of a formula or sequent in an algebra or frame.
    Valid { file: String, text: String },
    /// List a catalog of algebras up to isomorphism.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        allow_trivial: bool,
    },
    /// Search the catalogs for a countermodel.
    Countermodel(CountermodelArgs),
    /// Sub-normal frame to N-hat frame, or back.
    Translate(FrameOut),
    /// Complex algebra of a sub-normal or compatibility frame.
    Complex(FrameOut),
    /// Canonical (prime filter) frame of an algebra.
    Canonical {
        file: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Verify the embedding into the double dual.
    Duality { file: String },
    /// The pair algebra over a Heyting algebra.
    BuildAu {
        file: String,
        /// `u1,u2` with `u1 <= u2`.
        #[arg(long)]
        u: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Check a Hilbert proof or sequent derivation.
    CheckProof { file: String },
}

#[derive(Args, Debug)]
struct CountermodelArgs {
    #[arg(long)]
    system: String,
    #[arg(long)]
    max_size: usize,
    #[arg(long, default_value_t = 2)]
    min_size: usize,
    #[arg(long, conflicts_with = "formula")]
    sequent: Option<String>,
    #[arg(required_unless_present = "sequent")]
    formula: Option<String>,
}

#[derive(Args, Debug)]
struct FrameOut {
    file: String,
    /// Also write the emitted file here.
    #[arg(long)]
    out: Option<String>,
}

/// Why a command stopped early; each maps to an exit code.
#[derive(Debug)]
enum Fail {
    Rejected(String),
    Malformed(String),
    Guard(String),
}

impl Fail {
    fn code(&self) -> i32 {
        match self {
            Fail::Rejected(_) => 1,
            Fail::Malformed(_) => 2,
            Fail::Guard(_) => 3,
        }
    }
}

fn malformed(e: impl Display) -> Fail {
    Fail::Malformed(e.to_string())
}

type Res<T = i32> = Result<T, Fail>;

/// Report text. Records are `key=value` in both modes; prose and file
/// bodies appear only in human mode.
struct Out {
    porcelain: bool,
    text: String,
}

impl Out {
    fn say(&mut self, line: impl Display) {
        if !self.porcelain {
            self.text.push_str(&format!("{line}\n"));
        }
    }

    fn rec(&mut self, key: impl Display, value: impl Display) {
        self.text.push_str(&format!("{key}={value}\n"));
    }

    fn flag(&mut self, key: &str, on: bool) {
        self.rec(key, on);
    }

    /// `witness p=a q=0` for people, `witness.p=a` records for machines.
    fn witness(&mut self, prefix: &str, pairs: &[(String, String)]) {
        if self.porcelain {
            for (k, v) in pairs {
                self.rec(format!("{prefix}witness.{k}"), v);
            }
        } else if !pairs.is_empty() {
            let joined: Vec<String> = pairs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            self.text.push_str(&format!("{prefix}witness {}\n", joined.join(" ")));
        }
    }

    fn body(&mut self, file: &str) {
        if !self.porcelain {
            self.text.push_str(file);
        }
    }
}

struct Ctx {
    force: bool,
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let mut out = Out { porcelain: cli.porcelain, text: String::new() };
    let ctx = Ctx { force: cli.force };
    match dispatch(&ctx, cli.command, &mut out) {
        Ok(code) => (code, out.text),
        Err(fail) => {
            let code = fail.code();
            let (kind, msg) = match fail {
                Fail::Rejected(m) => ("rejected", m),
                Fail::Malformed(m) => ("malformed", m),
                Fail::Guard(m) => ("guard", m),
            };
            out.rec("error", kind);
            out.rec("message", msg);
            (code, out.text)
        }
    }
}

fn dispatch(ctx: &Ctx, cmd: Command, out: &mut Out) -> Res {
    match cmd {
        Command::Parse { text } => cmd_parse(&text, out),
        Command::CheckAlgebra { file } => cmd_check_algebra(&file, out),
        Command::Classify { file } => cmd_classify(&file, out),
        Command::Eval { file, formula, assign } => cmd_eval(&file, &formula, &assign, out),
        Command::Valid { file, text } => cmd_valid(ctx, &file, &text, out),
        Command::Enumerate { class, size, allow_trivial } => cmd_enumerate(ctx, &class, size, allow_trivial, out),
        Command::Countermodel(a) => cmd_countermodel(ctx, a, out),
        Command::Translate(a) => cmd_translate(&a, out),
        Command::Complex(a) => cmd_complex(ctx, &a, out),
        Command::Canonical { file, out: dest } => cmd_canonical(ctx, &file, dest.as_deref(), out),
        Command::Duality { file } => cmd_duality(ctx, &file, out),
        Command::BuildAu { file, u, out: dest } => cmd_build_au(&file, &u, dest.as_deref(), out),
        Command::CheckProof { file } => cmd_check_proof(&file, out),
    }
}

// ---- loading ----

fn read(path: &str) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Fail::Malformed(format!("{path}: {e}")))
}

fn extension(path: &str) -> &str {
    Path::new(path).extension().and_then(|e| e.to_str()).unwrap_or("")
}

fn load_algebra(path: &str) -> Res<AlgebraFile> {
    parse_algebra(&read(path)?).map_err(|e| Fail::Malformed(format!("{path}: {e}")))
}

fn need_ccpba(file: &AlgebraFile) -> Res<Algebra> {
    if file.tilde_one.is_none() {
        return Err(Fail::Malformed(format!("{}: `tilde_one` is required here", file.name)));
    }
    file.ccpba().map_err(|e| Fail::Rejected(e.to_string()))
}

fn load_frame(path: &str) -> Res<FrameFile> {
    parse_frame(&read(path)?).map_err(|e| match e {
        FrameFileError::Syntax(s) => Fail::Malformed(format!("{path}: {s}")),
        FrameFileError::Frame(f) => Fail::Rejected(format!("{path}: {f}")),
    })
}

fn guard(ctx: &Ctx, what: &str, actual: usize, limit: usize) -> Res<()> {
    if actual > limit && !ctx.force {
        return Err(Fail::Guard(format!("{what} {actual} exceeds the guard of {limit}; use --force")));
    }
    Ok(())
}

fn formula(text: &str) -> Res<Formula> {
    parse(text).map_err(malformed)
}

/// A formula, or a sequent when the text contains `|-`.
fn goal(text: &str) -> Res<Goal> {
    if text.contains("|-") {
        Sequent::parse(text).map(Goal::Sequent).map_err(malformed)
    } else {
        formula(text).map(Goal::Formula)
    }
}

fn goal_atoms(g: &Goal) -> usize {
    match g {
        Goal::Formula(f) => atoms(f).len(),
        Goal::Sequent(s) => ccpba_core::formula::atoms_of_all([&s.lhs, &s.rhs]).len(),
    }
}

fn write_out(dest: Option<&str>, text: &str, out: &mut Out) -> Res<()> {
    if let Some(path) = dest {
        fs::write(path, text).map_err(|e| Fail::Malformed(format!("{path}: {e}")))?;
        out.rec("written", path);
    }
    Ok(())
}

// ---- record helpers ----

fn covers(l: &FiniteLattice) -> String {
    l.covers().iter().map(|&(a, b)| format!("{}<{}", l.name(a), l.name(b))).collect::<Vec<_>>().join(",")
}

fn algebra_records(out: &mut Out, prefix: &str, l: &FiniteLattice, tilde_one: Option<usize>) {
    out.rec(format!("{prefix}size"), l.size());
    out.rec(format!("{prefix}elements"), l.names().join(","));
    out.rec(format!("{prefix}covers"), covers(l));
    if let Some(t) = tilde_one {
        out.rec(format!("{prefix}tilde_one"), l.name(t));
    }
}

fn set_names(p: &Poset, s: WorldSet) -> String {
    p.set_names(s).join(",")
}

fn relation(p: &Poset, rel: &[WorldSet]) -> String {
    p.worlds()
        .flat_map(|x| members(rel[x]).map(move |y| (x, y)))
        .map(|(x, y)| format!("{}>{}", p.name(x), p.name(y)))
        .collect::<Vec<_>>()
        .join(",")
}

fn frame_records(out: &mut Out, frame: &Frame) {
    let p = frame.poset();
    out.rec("kind", frame.kind().keyword());
    out.rec("worlds", p.names().join(","));
    let leq: Vec<String> = p.covers().iter().map(|&(a, b)| format!("{}<{}", p.name(a), p.name(b))).collect();
    out.rec("covers", leq.join(","));
    match frame {
        Frame::SubNormal(f) => out.rec("y0", set_names(p, f.y0())),
        Frame::Nhat(f) => {
            out.rec("rn1", relation(p, f.rn1()));
            out.rec("rn2", relation(p, f.rn2()));
        }
        Frame::Compat(f) => out.rec("c", relation(p, f.c())),
    }
}

fn valuation_pairs(l: &FiniteLattice, v: &Valuation) -> Vec<(String, String)> {
    v.iter().map(|(k, &e)| (k.clone(), l.name(e).to_string())).collect()
}

fn frame_witness_pairs(p: &Poset, w: &FrameWitness) -> Vec<(String, String)> {
    let mut pairs: Vec<(String, String)> =
        w.valuation.iter().map(|(k, &s)| (k.clone(), format!("{{{}}}", set_names(p, s)))).collect();
    pairs.push(("world".into(), p.name(w.world).to_string()));
    pairs
}

fn class_records(out: &mut Out, prefix: &str, l: &FiniteLattice, r: &ClassReport) {
    for (name, flag) in r.flags() {
        out.flag(&format!("{prefix}{name}"), flag.is_none());
        if let Some(w) = flag {
            out.rec(format!("{prefix}{name}.witness"), w.render(l));
        }
    }
}

// ---- commands ----

fn cmd_parse(text: &str, out: &mut Out) -> Res {
    match goal(text)? {
        Goal::Formula(f) => {
            out.rec("formula", &f);
            out.rec("atoms", atoms(&f).join(","));
            out.rec("size", f.size());
            out.flag("implication_free", f.is_implication_free());
        }
        Goal::Sequent(s) => {
            out.rec("sequent", &s);
            out.rec("atoms", ccpba_core::formula::atoms_of_all([&s.lhs, &s.rhs]).join(","));
        }
    }
    Ok(0)
}

fn cmd_check_algebra(path: &str, out: &mut Out) -> Res {
    let file = match parse_algebra(&read(path)?) {
        Ok(f) => f,
        Err(AlgebraFileError::Syntax(e)) => return Err(Fail::Malformed(format!("{path}: {e}"))),
        Err(e) => return Err(Fail::Rejected(format!("{path}: {e}"))),
    };
    out.say(format!("algebra {}", file.name));
    out.rec("name", &file.name);
    algebra_records(out, "", file.heyting.lattice(), file.tilde_one);
    match file.tilde_one {
        None => out.rec("status", "heyting"),
        Some(_) => {
            let alg = file.ccpba().map_err(|e| Fail::Rejected(e.to_string()))?;
            out.rec("status", "ccpba");
            out.flag("cvcpba", alg.is_cvcpba());
        }
    }
    Ok(0)
}

fn cmd_classify(path: &str, out: &mut Out) -> Res {
    let file = load_algebra(path)?;
    let h = &file.heyting;
    let l = h.lattice();
    out.say(format!("algebra {}", file.name));
    match file.tilde_one {
        Some(t) => {
            let tilde: Vec<usize> = l.elements().map(|a| h.imp(a, t)).collect();
            let report = classify(h, &tilde);
            out.rec("tilde_one", l.name(t));
            class_records(out, "", l, &report);
            if let Ok(alg) = file.ccpba() {
                let kite = classify_negation_pair(l, alg.neg_table(), alg.tilde_table()).map_err(malformed)?;
                for (node, verdict) in kite.nodes() {
                    out.flag(&format!("kite.{node}"), verdict.holds());
                    if let Some(w) = &verdict.witness {
                        out.rec(format!("kite.{node}.witness"), w.render(l));
                    }
                }
            }
        }
        None => {
            let candidates = h.regular_elements();
            let names: Vec<&str> = candidates.iter().map(|&c| l.name(c)).collect();
            out.say("no tilde_one given; classifying every admissible value");
            out.rec("candidates", names.join(","));
            for &t in &candidates {
                let alg = Algebra::new(h.clone(), t).map_err(malformed)?;
                let r = classify_algebra(&alg);
                class_records(out, &format!("tilde_one.{}.", l.name(t)), l, &r);
            }
        }
    }
    Ok(0)
}

/// Splits on commas outside brackets, since element names such as `(0,y)` or
/// `{w1,w2}` contain commas.
fn split_top_level(text: &str) -> Vec<&str> {
    let (mut parts, mut depth, mut start) = (Vec::new(), 0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn parse_assign(l: &FiniteLattice, text: &str) -> Res<Valuation> {
    let mut v = Valuation::new();
    for part in split_top_level(text).into_iter().map(str::trim).filter(|s| !s.is_empty()) {
        let (k, e) = part.split_once('=').ok_or_else(|| malformed(format!("expected atom=element, got `{part}`")))?;
        let e = l.index(e.trim()).ok_or_else(|| malformed(format!("unknown element `{}`", e.trim())))?;
        v.insert(k.trim().to_string(), e);
    }
    Ok(v)
}

fn cmd_eval(path: &str, text: &str, assign: &str, out: &mut Out) -> Res {
    let alg = need_ccpba(&load_algebra(path)?)?;
    let f = formula(text)?;
    let v = parse_assign(alg.lattice(), assign)?;
    let value = evaluate(&alg, &f, &v).map_err(malformed)?;
    out.rec("value", alg.lattice().name(value));
    Ok(0)
}

fn eval_fail(e: EvalError) -> Fail {
    malformed(e)
}

fn algebra_verdict<I: Interpretation>(alg: &I, g: &Goal) -> Res<Verdict<Valuation>> {
    match g {
        Goal::Formula(f) if alg.has_implication() => algebra_valid(alg, f),
        Goal::Formula(f) => sequent_valid(alg, &Formula::Top, f),
        Goal::Sequent(s) => sequent_valid(alg, &s.lhs, &s.rhs),
    }
    .map_err(eval_fail)
}

fn frame_verdict(ctx: &Ctx, fr: &Frame, g: &Goal) -> Res<Verdict<FrameWitness>> {
    let bounds = if ctx.force {
        FrameBounds::UNBOUNDED
    } else {
        FrameBounds { max_worlds: WORLD_GUARD, max_atoms: ATOM_GUARD }
    };
    let r = match g {
        Goal::Formula(f) if !matches!(fr, Frame::Compat(_)) => frame_valid(fr, f, bounds),
        Goal::Formula(f) => frame_sequent_valid(fr, &Formula::Top, f, bounds),
        Goal::Sequent(s) => frame_sequent_valid(fr, &s.lhs, &s.rhs, bounds),
    };
    r.map_err(|e| match e {
        FrameEvalError::TooManyWorlds { .. } | FrameEvalError::TooManyAtoms { .. } => {
            Fail::Guard(format!("{e}; use --force"))
        }
        other => malformed(other),
    })
}

fn cmd_valid(ctx: &Ctx, path: &str, text: &str, out: &mut Out) -> Res {
    let g = goal(text)?;
    guard(ctx, "atom count", goal_atoms(&g), ATOM_GUARD)?;
    match extension(path) {
        "alg" => {
            let alg = need_ccpba(&load_algebra(path)?)?;
            guard(ctx, "algebra size", alg.size(), ALGEBRA_GUARD)?;
            match algebra_verdict(&alg, &g)? {
                Verdict::Valid => {
                    out.say(format!("{g} is valid"));
                    out.flag("valid", true);
                    Ok(0)
                }
                Verdict::Falsified(w) => {
                    out.say(format!("{g} is not valid"));
                    out.flag("valid", false);
                    out.witness("", &valuation_pairs(alg.lattice(), &w));
                    Ok(1)
                }
            }
        }
        "frm" => {
            let file = load_frame(path)?;
            match frame_verdict(ctx, &file.frame, &g)? {
                Verdict::Valid => {
                    out.say(format!("{g} is valid on {}", file.name));
                    out.flag("valid", true);
                    Ok(0)
                }
                Verdict::Falsified(w) => {
                    out.say(format!("{g} is not valid on {}", file.name));
                    out.flag("valid", false);
                    out.witness("", &frame_witness_pairs(file.frame.poset(), &w));
                    Ok(1)
                }
            }
        }
        other => Err(malformed(format!("`{path}`: expected a .alg or .frm file, not `.{other}`"))),
    }
}

fn entry_text(name: &str, e: &CatalogEntry) -> String {
    match e {
        CatalogEntry::Pba(h) => write_algebra(name, h.lattice(), None, &[]),
        CatalogEntry::Ccp(a) => write_ccpba(name, a),
        CatalogEntry::Kim(k) => write_kim(name, k),
    }
}

fn entry_tilde_one(e: &CatalogEntry) -> Option<usize> {
    match e {
        CatalogEntry::Pba(_) => None,
        CatalogEntry::Ccp(a) => Some(a.tilde_one()),
        CatalogEntry::Kim(k) => Some(k.tilde_one()),
    }
}

fn cmd_enumerate(ctx: &Ctx, class: &str, size: usize, allow_trivial: bool, out: &mut Out) -> Res {
    let class: AlgebraClass = class.parse().map_err(Fail::Malformed)?;
    guard(ctx, "algebra size", size, ALGEBRA_GUARD)?;
    let opts = EnumerateOptions { allow_trivial, max_size_guard: ALGEBRA_GUARD.max(size) };
    let list = enumerate_exact(class, size, &opts).map_err(|e| Fail::Guard(e.to_string()))?;
    out.rec("class", class);
    out.rec("size", size);
    out.rec("count", list.len());
    for (i, e) in list.iter().enumerate() {
        if out.porcelain {
            algebra_records(out, &format!("entry.{i}."), e.lattice(), entry_tilde_one(e));
        } else {
            out.say("");
            out.body(&entry_text(&format!("{class}_{size}_{i}"), e));
        }
    }
    Ok(0)
}

fn cmd_countermodel(ctx: &Ctx, a: CountermodelArgs, out: &mut Out) -> Res {
    let system: System = a.system.parse().map_err(malformed)?;
    let g = match (&a.sequent, &a.formula) {
        (Some(s), _) => Goal::Sequent(Sequent::parse(s).map_err(malformed)?),
        (None, Some(f)) => goal(f)?,
        (None, None) => return Err(malformed("a formula or --sequent is required")),
    };
    guard(ctx, "atom count", goal_atoms(&g), ATOM_GUARD)?;
    guard(ctx, "search size", a.max_size, MAX_SEARCH_SIZE)?;
    if a.min_size > a.max_size {
        return Err(malformed(format!("--min-size {} exceeds --max-size {}", a.min_size, a.max_size)));
    }
    let limit = MAX_SEARCH_SIZE.max(a.max_size);
    let found = countermodel_search_with_guard(system, &g, a.min_size..=a.max_size, limit).map_err(|e| match e {
        SearchError::BoundTooLarge { .. } => Fail::Guard(e.to_string()),
        other => malformed(other),
    })?;
    out.rec("system", system);
    out.rec("goal", &g);
    match found {
        None => {
            out.say(format!("no countermodel up to size {}", a.max_size));
            out.rec("countermodel", "none");
            out.rec("searched", format!("{}..{}", a.min_size.max(2), a.max_size));
            Ok(0)
        }
        Some(cm) => {
            out.say(format!("countermodel of size {} (catalog position {})", cm.size, cm.position));
            out.rec("countermodel", "found");
            out.rec("size", cm.size);
            out.rec("position", cm.position);
            out.witness("", &valuation_pairs(cm.model.lattice(), &cm.valuation));
            if out.porcelain {
                algebra_records(out, "model.", cm.model.lattice(), entry_tilde_one(&cm.model));
            } else {
                out.body(&entry_text("countermodel", &cm.model));
            }
            Ok(1)
        }
    }
}

fn emit_frame(name: &str, frame: &Frame, comments: &[String], dest: Option<&str>, out: &mut Out) -> Res<()> {
    let text = write_frame(name, frame, comments);
    if out.porcelain {
        out.rec("name", name);
        frame_records(out, frame);
    } else {
        out.body(&text);
    }
    write_out(dest, &text, out)
}

fn cmd_translate(a: &FrameOut, out: &mut Out) -> Res {
    let file = load_frame(&a.file)?;
    match &file.frame {
        Frame::SubNormal(f) => {
            emit_frame(&format!("{}_nhat", file.name), &Frame::Nhat(phi(f)), &[], a.out.as_deref(), out)?
        }
        Frame::Nhat(f) => {
            emit_frame(&format!("{}_subnormal", file.name), &Frame::SubNormal(psi(f)), &[], a.out.as_deref(), out)?
        }
        Frame::Compat(_) => return Err(malformed("compatibility frames have no translation")),
    }
    Ok(0)
}

fn bridge_fail(e: BridgeError) -> Fail {
    match e {
        BridgeError::TooManyFilters(_) => Fail::Guard(e.to_string()),
        other => Fail::Rejected(other.to_string()),
    }
}

fn emit_algebra(text: String, l: &FiniteLattice, tilde_one: Option<usize>, dest: Option<&str>, out: &mut Out) -> Res<()> {
    if out.porcelain {
        algebra_records(out, "", l, tilde_one);
    } else {
        out.body(&text);
    }
    write_out(dest, &text, out)
}

fn cmd_complex(ctx: &Ctx, a: &FrameOut, out: &mut Out) -> Res {
    let file = load_frame(&a.file)?;
    guard(ctx, "world count", file.frame.poset().size(), WORLD_GUARD)?;
    let name = format!("{}_complex", file.name);
    match &file.frame {
        Frame::SubNormal(f) => {
            let cx = complex_algebra_subnormal(f).map_err(bridge_fail)?;
            out.flag("cvcpba", cx.algebra.is_cvcpba());
            let text = write_ccpba(&name, &cx.algebra);
            emit_algebra(text, cx.algebra.lattice(), Some(cx.algebra.tilde_one()), a.out.as_deref(), out)?;
        }
        Frame::Compat(f) => {
            let cx = complex_algebra_compat(f).map_err(bridge_fail)?;
            out.flag("kim_vee", cx.algebra.is_kim_vee());
            let text = write_kim(&name, &cx.algebra);
            emit_algebra(text, cx.algebra.lattice(), Some(cx.algebra.tilde_one()), a.out.as_deref(), out)?;
        }
        Frame::Nhat(_) => {
            return Err(malformed("complex algebras are built from sub-normal or compatibility frames"))
        }
    }
    Ok(0)
}

fn cmd_canonical(ctx: &Ctx, path: &str, dest: Option<&str>, out: &mut Out) -> Res {
    let file = load_algebra(path)?;
    let alg = need_ccpba(&file)?;
    guard(ctx, "algebra size", alg.size(), ALGEBRA_GUARD)?;
    let canon = canonical_frame_ccpba(&alg).map_err(bridge_fail)?;
    let comments = canon.comments(alg.lattice());
    if out.porcelain {
        for (i, f) in canon.filters.iter().enumerate() {
            out.rec(format!("filter.F{i}"), f.render(alg.lattice()));
        }
    }
    emit_frame(&format!("{}_canonical", file.name), &Frame::SubNormal(canon.frame), &comments, dest, out)?;
    Ok(0)
}

fn embedding_records(out: &mut Out, label: &str, e: &Embedding, n: usize) {
    out.rec(format!("{label}.bijective"), e.is_bijective(n));
    out.rec(format!("{label}.checks"), e.checks.join(","));
}

fn cmd_duality(ctx: &Ctx, path: &str, out: &mut Out) -> Res {
    match extension(path) {
        "alg" => {
            let alg = need_ccpba(&load_algebra(path)?)?;
            guard(ctx, "algebra size", alg.size(), ALGEBRA_GUARD)?;
            let e = stone_embedding(&alg).map_err(bridge_fail)?;
            embedding_records(out, "stone", &e, alg.size());
            let k = kim_stone_embedding(&alg.kim_reduct()).map_err(bridge_fail)?;
            embedding_records(out, "kim_stone", &k, alg.size());
            out.say("algebra is isomorphic to the complex algebra of its canonical frame");
        }
        "frm" => {
            let file = load_frame(path)?;
            let n = file.frame.poset().size();
            guard(ctx, "world count", n, WORLD_GUARD)?;
            match &file.frame {
                Frame::SubNormal(f) => embedding_records(out, "frame", &frame_embedding(f).map_err(bridge_fail)?, n),
                Frame::Compat(f) => {
                    embedding_records(out, "kim_frame", &kim_frame_embedding(f).map_err(bridge_fail)?, n)
                }
                Frame::Nhat(_) => return Err(malformed("duality is defined for sub-normal and compatibility frames")),
            }
            out.say("frame is isomorphic to the canonical frame of its complex algebra");
        }
        other => return Err(malformed(format!("`{path}`: expected a .alg or .frm file, not `.{other}`"))),
    }
    Ok(0)
}

fn cmd_build_au(path: &str, u: &str, dest: Option<&str>, out: &mut Out) -> Res {
    let file = load_algebra(path)?;
    let l = file.heyting.lattice();
    let [u1, u2] = split_top_level(u)[..] else {
        return Err(malformed("--u takes two elements, `u1,u2`"));
    };
    let elem = |n: &str| l.index(n.trim()).ok_or_else(|| malformed(format!("unknown element `{}`", n.trim())));
    let alg = build_au(&file.heyting, elem(u1)?, elem(u2)?).map_err(|e| match e {
        AlgebraError::UNotOrdered(..) => malformed(e),
        other => Fail::Rejected(other.to_string()),
    })?;
    out.flag("cvcpba", alg.is_cvcpba());
    let text = write_ccpba(&format!("{}_au", file.name), &alg);
    emit_algebra(text, alg.lattice(), Some(alg.tilde_one()), dest, out)?;
    Ok(0)
}

fn cmd_check_proof(path: &str, out: &mut Out) -> Res {
    let parsed = parse_proof(&read(path)?).map_err(|e| Fail::Malformed(format!("{path}: {e}")))?;
    match parsed {
        ProofFile::Hilbert { system, script } => {
            out.rec("system", system);
            out.rec("goal", script.goal());
            out.rec("lines", script.lines().len());
            check_hilbert(system, &script).map_err(|e| Fail::Rejected(format!("{}: {e}", e.class())))?;
        }
        ProofFile::Sequent { system, derivation } => {
            out.rec("system", system);
            out.rec("conclusion", derivation.conclusion());
            out.rec("lines", derivation.lines().len());
            let d = check_sequent_derivation(system, &derivation)
                .map_err(|e| Fail::Rejected(format!("{}: {e}", e.class())))?;
            let hyps: Vec<String> = d.hypotheses.iter().map(ToString::to_string).collect();
            out.rec("hypotheses", hyps.join(" ; "));
        }
    }
    out.rec("status", "accepted");
    Ok(0)
}
