//! Formulas of the object language, their concrete syntax, and scheme matching.
//!
//! Surface syntax: `top`, `bot`, atoms `[a-z][a-zA-Z0-9_]*`, prefix `!` (the
//! intuitionistic negation) and `~` (the minimal negation), infix `&`, `|`,
//! right-associative `->`, and `<->` as sugar for a conjunction of two
//! implications.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Top,
    Bot,
    Atom(String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
    Tilde(Box<Formula>),
}

pub fn atom(name: &str) -> Formula {
    Formula::Atom(name.to_string())
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Impl(Box::new(a), Box::new(b))
}

pub fn neg(a: Formula) -> Formula {
    Formula::Neg(Box::new(a))
}

pub fn tilde(a: Formula) -> Formula {
    Formula::Tilde(Box::new(a))
}

/// `a <-> b`, spelled out as `(a -> b) & (b -> a)`.
pub fn iff(a: Formula, b: Formula) -> Formula {
    and(imp(a.clone(), b.clone()), imp(b, a))
}

pub const KEYWORDS: [&str; 2] = ["top", "bot"];

/// Checks that `name` is usable as an atom.
pub fn validate_atom_name(name: &str) -> Result<(), ParseError> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok {
        return Err(ParseError {
            offset: 0,
            expected: vec!["identifier"],
            found: name.to_string(),
        });
    }
    if KEYWORDS.contains(&name) {
        return Err(ParseError {
            offset: 0,
            expected: vec!["identifier (not a keyword)"],
            found: name.to_string(),
        });
    }
    Ok(())
}

impl Formula {
    /// True when the formula contains no `->` node.
    pub fn is_implication_free(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(_) => true,
            Formula::Impl(..) => false,
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.is_implication_free() && b.is_implication_free()
            }
            Formula::Neg(a) | Formula::Tilde(a) => a.is_implication_free(),
        }
    }

    pub fn contains_bot(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::Bot))
    }

    pub fn contains_neg(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::Neg(_)))
    }

    fn any_node(&self, p: &dyn Fn(&Formula) -> bool) -> bool {
        if p(self) {
            return true;
        }
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(_) => false,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => {
                a.any_node(p) || b.any_node(p)
            }
            Formula::Neg(a) | Formula::Tilde(a) => a.any_node(p),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(_) => 1,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => 1 + a.size() + b.size(),
            Formula::Neg(a) | Formula::Tilde(a) => 1 + a.size(),
        }
    }

    /// Rewrites every `!a` as `a -> bot`.
    pub fn expand_neg(&self) -> Formula {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(_) => self.clone(),
            Formula::And(a, b) => and(a.expand_neg(), b.expand_neg()),
            Formula::Or(a, b) => or(a.expand_neg(), b.expand_neg()),
            Formula::Impl(a, b) => imp(a.expand_neg(), b.expand_neg()),
            Formula::Neg(a) => imp(a.expand_neg(), Formula::Bot),
            Formula::Tilde(a) => tilde(a.expand_neg()),
        }
    }

    pub fn substitute(&self, sigma: &Substitution) -> Formula {
        match self {
            Formula::Atom(name) => sigma.get(name).cloned().unwrap_or_else(|| self.clone()),
            Formula::Top | Formula::Bot => self.clone(),
            Formula::And(a, b) => and(a.substitute(sigma), b.substitute(sigma)),
            Formula::Or(a, b) => or(a.substitute(sigma), b.substitute(sigma)),
            Formula::Impl(a, b) => imp(a.substitute(sigma), b.substitute(sigma)),
            Formula::Neg(a) => neg(a.substitute(sigma)),
            Formula::Tilde(a) => tilde(a.substitute(sigma)),
        }
    }
}

/// Atom names in order of first occurrence (left to right).
pub fn atoms(f: &Formula) -> Vec<String> {
    fn walk(f: &Formula, out: &mut Vec<String>) {
        match f {
            Formula::Top | Formula::Bot => {}
            Formula::Atom(n) => {
                if !out.iter().any(|m| m == n) {
                    out.push(n.clone());
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            Formula::Neg(a) | Formula::Tilde(a) => walk(a, out),
        }
    }
    let mut out = Vec::new();
    walk(f, &mut out);
    out
}

/// Atoms of several formulas, first-occurrence order across the list.
pub fn atoms_of_all<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for f in fs {
        for a in atoms(f) {
            if !out.contains(&a) {
                out.push(a);
            }
        }
    }
    out
}

pub type Substitution = BTreeMap<String, Formula>;

/// A formula read as a pattern: its atoms are metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme(pub Formula);

impl Scheme {
    pub fn parse(text: &str) -> Result<Scheme, ParseError> {
        parse(text).map(Scheme)
    }

    pub fn metavariables(&self) -> Vec<String> {
        atoms(&self.0)
    }

    pub fn instantiate(&self, sigma: &Substitution) -> Formula {
        self.0.substitute(sigma)
    }
}

/// One-way matching of `s` against `target`.
pub fn match_scheme(s: &Scheme, target: &Formula) -> Option<Substitution> {
    let mut sigma = Substitution::new();
    match_into(&s.0, target, &mut sigma).then_some(sigma)
}

/// Extends `sigma` so that `pattern` instantiates to `target`; on failure
/// `sigma` may hold partial bindings.
pub fn match_into(pattern: &Formula, target: &Formula, sigma: &mut Substitution) -> bool {
    match (pattern, target) {
        (Formula::Atom(m), _) => match sigma.get(m) {
            Some(bound) => bound == target,
            None => {
                sigma.insert(m.clone(), target.clone());
                true
            }
        },
        (Formula::Top, Formula::Top) | (Formula::Bot, Formula::Bot) => true,
        (Formula::And(a, b), Formula::And(c, d))
        | (Formula::Or(a, b), Formula::Or(c, d))
        | (Formula::Impl(a, b), Formula::Impl(c, d)) => {
            match_into(a, c, sigma) && match_into(b, d, sigma)
        }
        (Formula::Neg(a), Formula::Neg(c)) | (Formula::Tilde(a), Formula::Tilde(c)) => {
            match_into(a, c, sigma)
        }
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    Bang,
    Tilde,
    Amp,
    Bar,
    Arrow,
    DArrow,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Top => "`top`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DArrow => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'!' => Tok::Bang,
            b'~' => Tok::Tilde,
            b'&' => Tok::Amp,
            b'|' => Tok::Bar,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Tok::DArrow
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                match &text[start..=i] {
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    s => Tok::Ident(s.to_string()),
                }
            }
            _ => {
                let found: String = text[start..].chars().take(1).collect();
                return Err(ParseError {
                    offset: start,
                    expected: vec![
                        "identifier", "`top`", "`bot`", "`!`", "`~`", "`(`", "`&`", "`|`",
                        "`->`", "`<->`", "`)`",
                    ],
                    found: format!("`{found}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const PRIMARY_START: [&str; 6] = ["identifier", "`top`", "`bot`", "`!`", "`~`", "`(`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError {
            offset: *offset,
            expected,
            found: tok.describe(),
        }
    }

    // `<->` sits at the level of `->` and is right-associative with it.
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disj()?;
        match self.peek() {
            Tok::Arrow => {
                self.bump();
                Ok(imp(lhs, self.formula()?))
            }
            Tok::DArrow => {
                self.bump();
                Ok(iff(lhs, self.formula()?))
            }
            _ => Ok(lhs),
        }
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conj()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            acc = or(acc, self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            acc = and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Bang => {
                self.bump();
                Ok(neg(self.unary()?))
            }
            Tok::Tilde => {
                self.bump();
                Ok(tilde(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(vec!["`&`", "`|`", "`->`", "`<->`", "`)`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(PRIMARY_START.to_vec())),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return Err(p.error(vec!["`&`", "`|`", "`->`", "`<->`", "end of input"]));
    }
    Ok(f)
}

/// A sequent `lhs |- rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Sequent {
    pub fn new(lhs: Formula, rhs: Formula) -> Sequent {
        Sequent { lhs, rhs }
    }

    pub fn parse(text: &str) -> Result<Sequent, ParseError> {
        let Some(split) = text.find("|-") else {
            return Err(ParseError {
                offset: text.len(),
                expected: vec!["`|-`"],
                found: "end of input".into(),
            });
        };
        let lhs = parse(&text[..split])?;
        let rhs = parse(&text[split + 2..]).map_err(|mut e| {
            e.offset += split + 2;
            e
        })?;
        Ok(Sequent { lhs, rhs })
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Impl(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Neg(_) | Formula::Tilde(_) => 4,
        Formula::Top | Formula::Bot | Formula::Atom(_) => 5,
    }
}

fn write_at(out: &mut fmt::Formatter<'_>, f: &Formula, min: u8) -> fmt::Result {
    if prec(f) < min {
        write!(out, "(")?;
        write_at(out, f, 0)?;
        return write!(out, ")");
    }
    match f {
        Formula::Top => write!(out, "top"),
        Formula::Bot => write!(out, "bot"),
        Formula::Atom(n) => write!(out, "{n}"),
        Formula::And(a, b) => {
            write_at(out, a, 3)?;
            write!(out, " & ")?;
            write_at(out, b, 4)
        }
        Formula::Or(a, b) => {
            write_at(out, a, 2)?;
            write!(out, " | ")?;
            write_at(out, b, 3)
        }
        Formula::Impl(a, b) => {
            write_at(out, a, 2)?;
            write!(out, " -> ")?;
            write_at(out, b, 1)
        }
        Formula::Neg(a) => {
            write!(out, "!")?;
            write_at(out, a, 4)
        }
        Formula::Tilde(a) => {
            write!(out, "~")?;
            write_at(out, a, 4)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(f, self, 0)
    }
}

/// Minimal-parentheses rendering.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// A formula flattened into a node list where every node refers only to
/// earlier nodes; atoms are numbered by first occurrence.
#[derive(Clone, Debug)]
pub struct Program {
    ops: Vec<Op>,
    atoms: Vec<String>,
    roots: Vec<usize>,
}

#[derive(Clone, Copy, Debug)]
pub enum Op {
    Top,
    Bot,
    Var(usize),
    And(usize, usize),
    Or(usize, usize),
    Impl(usize, usize),
    Neg(usize),
    Tilde(usize),
}

/// Value domain for [`Program::eval`].
pub trait Semantics {
    type Value: Copy;
    fn top(&self) -> Self::Value;
    fn bot(&self) -> Self::Value;
    fn and(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn or(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn imp(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn tilde(&self, a: Self::Value) -> Self::Value;
}

impl Program {
    pub fn compile(fs: &[&Formula]) -> Program {
        let mut p = Program { ops: Vec::new(), atoms: atoms_of_all(fs.iter().copied()), roots: Vec::new() };
        for f in fs {
            let r = p.push(f);
            p.roots.push(r);
        }
        p
    }

    fn push(&mut self, f: &Formula) -> usize {
        let op = match f {
            Formula::Top => Op::Top,
            Formula::Bot => Op::Bot,
            Formula::Atom(n) => Op::Var(self.atoms.iter().position(|m| m == n).expect("atom listed")),
            Formula::And(a, b) => {
                let (x, y) = (self.push(a), self.push(b));
                Op::And(x, y)
            }
            Formula::Or(a, b) => {
                let (x, y) = (self.push(a), self.push(b));
                Op::Or(x, y)
            }
            Formula::Impl(a, b) => {
                let (x, y) = (self.push(a), self.push(b));
                Op::Impl(x, y)
            }
            Formula::Neg(a) => Op::Neg(self.push(a)),
            Formula::Tilde(a) => Op::Tilde(self.push(a)),
        };
        self.ops.push(op);
        self.ops.len() - 1
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// Evaluates every node; `out[root]` holds each formula's value.
    pub fn eval<S: Semantics>(&self, s: &S, vars: &[S::Value], out: &mut Vec<S::Value>) {
        out.clear();
        for op in &self.ops {
            let v = match *op {
                Op::Top => s.top(),
                Op::Bot => s.bot(),
                Op::Var(i) => vars[i],
                Op::And(a, b) => s.and(out[a], out[b]),
                Op::Or(a, b) => s.or(out[a], out[b]),
                Op::Impl(a, b) => s.imp(out[a], out[b]),
                Op::Neg(a) => s.neg(out[a]),
                Op::Tilde(a) => s.tilde(out[a]),
            };
            out.push(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn precedence_of_unaries_and_binaries() {
        assert_eq!(p("~p -> !q | r"), imp(tilde(atom("p")), or(neg(atom("q")), atom("r"))));
        assert_eq!(p("p -> q -> r"), imp(atom("p"), imp(atom("q"), atom("r"))));
        assert_eq!(p("top -> (bot -> top)"), imp(Formula::Top, imp(Formula::Bot, Formula::Top)));
        assert_eq!(p("!!~top"), neg(neg(tilde(Formula::Top))));
    }

    #[test]
    fn biconditional_is_sugar() {
        assert_eq!(p("p <-> q"), iff(atom("p"), atom("q")));
        assert_eq!(p("p <-> q -> r"), iff(atom("p"), imp(atom("q"), atom("r"))));
    }

    #[test]
    fn rendering_uses_minimal_parentheses() {
        assert_eq!(render(&imp(and(atom("p"), atom("q")), atom("r"))), "p & q -> r");
        assert_eq!(render(&tilde(Formula::Top)), "~top");
        assert_eq!(render(&or(atom("p"), tilde(atom("p")))), "p | ~p");
        assert_eq!(render(&imp(imp(atom("p"), atom("q")), atom("r"))), "(p -> q) -> r");
        assert_eq!(render(&or(atom("p"), or(atom("q"), atom("r")))), "p | (q | r)");
        assert_eq!(render(&neg(and(atom("p"), atom("q")))), "!(p & q)");
    }

    #[test]
    fn atoms_in_first_occurrence_order() {
        assert_eq!(atoms(&p("p & q -> p")), vec!["p", "q"]);
        assert!(atoms(&p("top")).is_empty());
        assert_eq!(atoms(&p("~p | !p")), vec!["p"]);
    }

    #[test]
    fn scheme_matching() {
        let a1 = Scheme::parse("a -> (b -> a)").unwrap();
        let sigma = match_scheme(&a1, &p("p -> (q -> p)")).unwrap();
        assert_eq!(sigma.get("a"), Some(&atom("p")));
        assert_eq!(sigma.get("b"), Some(&atom("q")));
        assert!(match_scheme(&a1, &p("p -> (q -> r)")).is_none());

        let a11 = Scheme::parse("~a <-> (a -> !!~top)").unwrap();
        let inst = p("~~p <-> (~p -> !!~top)");
        let sigma = match_scheme(&a11, &inst).unwrap();
        assert_eq!(sigma.len(), 1);
        assert_eq!(sigma.get("a"), Some(&tilde(atom("p"))));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let e = parse("p & ").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.expected.contains(&"identifier"));
        let e = parse("p q").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse("(p -> q").unwrap_err();
        assert_eq!(e.offset, 7);
        assert!(e.expected.contains(&"`)`"));
        let e = parse("P").unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(parse("p # q").is_err());
    }

    #[test]
    fn keywords_are_not_atom_names() {
        assert!(validate_atom_name("top").is_err());
        assert!(validate_atom_name("bot").is_err());
        assert!(validate_atom_name("Xy").is_err());
        assert!(validate_atom_name("p_1").is_ok());
        assert_eq!(p("topx"), atom("topx"));
    }

    #[test]
    fn sequents_parse_around_the_turnstile() {
        let s = Sequent::parse("!!~top |- ~top").unwrap();
        assert_eq!(s.lhs, p("!!~top"));
        assert_eq!(s.rhs, p("~top"));
        assert_eq!(s.to_string(), "!!~top |- ~top");
        assert_eq!(Sequent::parse("p |- ").unwrap_err().offset, 5);
    }

    #[test]
    fn negation_expansion() {
        assert_eq!(p("!p & !!q").expand_neg(), p("(p -> bot) & ((q -> bot) -> bot)"));
    }
}
