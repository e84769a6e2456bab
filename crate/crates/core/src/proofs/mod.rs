//! Hilbert proofs for the ILM family, sequent derivations for the K_im
//! family, and countermodel search over the enumerated catalogs.

pub mod build;
pub mod io;
pub mod library;
pub mod search;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::formula::{match_into, parse, Formula, Scheme, Sequent, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HilbertSystem {
    Ilm,
    IlmVee,
    Ilm1,
    Ilm2,
    JpPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequentSystem {
    Kim,
    KimVee,
    KimPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown proof system `{0}`")]
pub struct UnknownSystem(pub String);

impl HilbertSystem {
    pub const ALL: [HilbertSystem; 5] =
        [HilbertSystem::Ilm, HilbertSystem::IlmVee, HilbertSystem::Ilm1, HilbertSystem::Ilm2, HilbertSystem::JpPrime];

    pub fn id(self) -> &'static str {
        match self {
            HilbertSystem::Ilm => "ILM",
            HilbertSystem::IlmVee => "ILM-v",
            HilbertSystem::Ilm1 => "ILM1",
            HilbertSystem::Ilm2 => "ILM2",
            HilbertSystem::JpPrime => "JP'",
        }
    }

    pub fn schemes(self) -> &'static [&'static str] {
        const BASE: [&str; 11] = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11"];
        match self {
            HilbertSystem::Ilm => &BASE,
            HilbertSystem::IlmVee => &["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12"],
            HilbertSystem::Ilm1 => &["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11a", "A11b"],
            HilbertSystem::Ilm2 => &["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A13", "Pprime"],
            HilbertSystem::JpPrime => &["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A13", "Pprime"],
        }
    }

    /// Rewrites a formula into the system's language, or reports that it
    /// falls outside it.
    pub fn normalize(self, f: &Formula) -> Option<Formula> {
        match self {
            HilbertSystem::Ilm2 => Some(f.expand_neg()),
            HilbertSystem::JpPrime => (!f.contains_bot() && !f.contains_neg()).then(|| f.clone()),
            _ => Some(f.clone()),
        }
    }
}

impl SequentSystem {
    pub const ALL: [SequentSystem; 3] = [SequentSystem::Kim, SequentSystem::KimVee, SequentSystem::KimPrime];

    pub fn id(self) -> &'static str {
        match self {
            SequentSystem::Kim => "Kim",
            SequentSystem::KimVee => "Kim-v",
            SequentSystem::KimPrime => "Kim'",
        }
    }

    pub fn rules(self) -> &'static [&'static str] {
        const KIM: [&str; 17] = [
            "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12", "A13", "A14", "A15", "A16",
            "A17",
        ];
        match self {
            SequentSystem::Kim => &KIM,
            SequentSystem::KimVee => &[
                "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12", "A13", "A14", "A15",
                "A16", "A17", "A18",
            ],
            SequentSystem::KimPrime => &[
                "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12", "A13", "A14", "A15",
                "P2", "P3", "P4", "P5", "P6", "P7",
            ],
        }
    }
}

impl fmt::Display for HilbertSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl fmt::Display for SequentSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for HilbertSystem {
    type Err = UnknownSystem;
    fn from_str(s: &str) -> Result<Self, UnknownSystem> {
        HilbertSystem::ALL.into_iter().find(|h| h.id().eq_ignore_ascii_case(s)).ok_or_else(|| UnknownSystem(s.into()))
    }
}

impl FromStr for SequentSystem {
    type Err = UnknownSystem;
    fn from_str(s: &str) -> Result<Self, UnknownSystem> {
        SequentSystem::ALL.into_iter().find(|h| h.id().eq_ignore_ascii_case(s)).ok_or_else(|| UnknownSystem(s.into()))
    }
}

/// Hilbert axiom schemes; `a`, `b`, `c` are metavariables. Some ids have two
/// alternatives.
const HILBERT_SCHEMES: &[(&str, &[&str])] = &[
    ("A1", &["a -> (b -> a)"]),
    ("A2", &["(a -> (b -> c)) -> ((a -> b) -> (a -> c))"]),
    ("A3", &["a -> a | b", "b -> a | b"]),
    ("A4", &["(a -> c) -> ((b -> c) -> (a | b -> c))"]),
    ("A5", &["a & b -> a", "a & b -> b"]),
    ("A6", &["(a -> b) -> ((a -> c) -> (a -> b & c))"]),
    ("A7", &["a -> top"]),
    ("A8", &["bot -> a"]),
    ("A9", &["(a -> b) -> ((a -> !b) -> !a)"]),
    ("A10", &["!a -> (a -> b)"]),
    ("A11", &["~a <-> (a -> !!~top)"]),
    ("A11a", &["~a <-> (a -> ~top)"]),
    ("A11b", &["!!~top <-> ~top"]),
    ("A12", &["a | ~a"]),
    ("A13", &["(a -> b) -> ((a -> ~b) -> ~a)"]),
    ("Pprime", &["~~(~top -> b)"]),
];

/// Premises then conclusion, each written `lhs |- rhs`.
type RuleText = (&'static [&'static str], &'static str);

/// Sequent axioms and rules; some ids have two alternatives.
const SEQUENT_RULES: &[(&str, &[RuleText])] = &[
    ("A1", &[(&[], "a |- a")]),
    ("A2", &[(&["a |- b", "b |- c"], "a |- c")]),
    ("A3", &[(&[], "a & b |- a"), (&[], "a & b |- b")]),
    ("A4", &[(&["a |- b", "a |- c"], "a |- b & c")]),
    ("A5", &[(&["a |- c", "b |- c"], "a | b |- c")]),
    ("A6", &[(&[], "a |- a | b"), (&[], "b |- a | b")]),
    ("A7", &[(&[], "a & (b | c) |- (a & b) | (a & c)")]),
    ("A8", &[(&[], "a |- top")]),
    ("A9", &[(&[], "bot |- a")]),
    ("A10", &[(&["a |- b"], "!b |- !a")]),
    ("A11", &[(&[], "!a & !b |- !(a | b)")]),
    ("A12", &[(&[], "top |- !bot")]),
    ("A13", &[(&[], "a |- !!a")]),
    ("A14", &[(&["a & b |- c"], "a & !c |- !b")]),
    ("A15", &[(&[], "a & !a |- b")]),
    ("A16", &[(&[], "~a |- !(a & !~top)")]),
    ("A17", &[(&[], "!(a & !~top) |- ~a")]),
    ("A18", &[(&[], "top |- a | ~a")]),
    ("P1", &[(&["a |- b", "d |- c"], "a & d |- b & c")]),
    ("P2", &[(&["a |- b"], "~b |- ~a")]),
    ("P3", &[(&[], "~a & ~b |- ~(a | b)")]),
    ("P4", &[(&[], "top |- ~bot")]),
    ("P5", &[(&[], "a |- ~~a")]),
    ("P6", &[(&["a & b |- c"], "a & ~c |- ~b")]),
    ("P7", &[(&[], "!!~top |- ~top")]),
];

/// A sequent rule (an axiom when `premises` is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentRule {
    pub id: &'static str,
    pub premises: Vec<Sequent>,
    pub conclusion: Sequent,
}

struct Tables {
    hilbert: HashMap<&'static str, Vec<Scheme>>,
    sequent: HashMap<&'static str, Vec<SequentRule>>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| Tables {
        hilbert: HILBERT_SCHEMES
            .iter()
            .map(|(id, alts)| (*id, alts.iter().map(|s| Scheme::parse(s).expect("scheme text")).collect()))
            .collect(),
        sequent: SEQUENT_RULES
            .iter()
            .map(|(id, alts)| {
                let rules = alts
                    .iter()
                    .map(|(ps, c)| SequentRule {
                        id,
                        premises: ps.iter().map(|p| Sequent::parse(p).expect("rule text")).collect(),
                        conclusion: Sequent::parse(c).expect("rule text"),
                    })
                    .collect();
                (*id, rules)
            })
            .collect(),
    })
}

/// Alternatives for a Hilbert scheme id.
pub fn hilbert_scheme(id: &str) -> Option<&'static [Scheme]> {
    tables().hilbert.get(id).map(Vec::as_slice)
}

/// Alternatives for a sequent axiom or rule id.
pub fn sequent_rule(id: &str) -> Option<&'static [SequentRule]> {
    tables().sequent.get(id).map(Vec::as_slice)
}

/// Instantiates alternative `alt` of a Hilbert scheme.
pub fn hilbert_instance(id: &str, alt: usize, sigma: &[(&str, Formula)]) -> Formula {
    let s = &hilbert_scheme(id).expect("known scheme")[alt];
    s.instantiate(&sigma.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom(String),
    /// Implication line, then antecedent line; either order is accepted.
    Mp(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofLine {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("line index {0} does not increase")]
    IndexOrder(usize),
    #[error("line {line} cites line {cited}, which does not come earlier")]
    ForwardReference { line: usize, cited: usize },
    #[error("no lines")]
    Empty,
}

/// A numbered Hilbert proof ending in a stated goal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofScript {
    lines: Vec<ProofLine>,
    goal: Formula,
}

impl ProofScript {
    pub fn new(lines: Vec<ProofLine>, goal: Formula) -> Result<Self, ScriptError> {
        if lines.is_empty() {
            return Err(ScriptError::Empty);
        }
        let mut seen: Vec<usize> = Vec::new();
        for l in &lines {
            if seen.last().is_some_and(|&p| l.index <= p) {
                return Err(ScriptError::IndexOrder(l.index));
            }
            if let Justification::Mp(i, j) = l.justification {
                for c in [i, j] {
                    if seen.binary_search(&c).is_err() {
                        return Err(ScriptError::ForwardReference { line: l.index, cited: c });
                    }
                }
            }
            seen.push(l.index);
        }
        Ok(ProofScript { lines, goal })
    }

    pub fn lines(&self) -> &[ProofLine] {
        &self.lines
    }

    pub fn goal(&self) -> &Formula {
        &self.goal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("line {line}: not an instance of {scheme}")]
    BadInstance { line: usize, scheme: String },
    #[error("line {line}: {scheme} is not an axiom of {system}")]
    UnknownScheme { line: usize, scheme: String, system: HilbertSystem },
    #[error("line {line}: modus ponens does not apply")]
    BadMp { line: usize },
    #[error("line {line}: formula outside the language of {system}")]
    WrongLanguage { line: usize, system: HilbertSystem },
    #[error("last line `{last}` differs from the goal `{goal}`")]
    GoalMismatch { goal: String, last: String },
}

impl HilbertError {
    pub fn class(&self) -> &'static str {
        match self {
            HilbertError::BadInstance { .. } => "bad-instance",
            HilbertError::UnknownScheme { .. } => "unknown-scheme",
            HilbertError::BadMp { .. } => "bad-mp",
            HilbertError::WrongLanguage { .. } => "wrong-language",
            HilbertError::GoalMismatch { .. } => "goal-mismatch",
        }
    }
}

/// Checks every line against its justification and the last line against the
/// goal. ILM2 expands `!a` to `a -> bot` first.
pub fn check_hilbert(sys: HilbertSystem, proof: &ProofScript) -> Result<(), HilbertError> {
    let mut proved: HashMap<usize, Formula> = HashMap::new();
    let allowed = sys.schemes();
    for l in &proof.lines {
        let f = sys
            .normalize(&l.formula)
            .ok_or(HilbertError::WrongLanguage { line: l.index, system: sys })?;
        match &l.justification {
            Justification::Axiom(id) => {
                if !allowed.contains(&id.as_str()) {
                    return Err(HilbertError::UnknownScheme { line: l.index, scheme: id.clone(), system: sys });
                }
                let alts = hilbert_scheme(id).expect("listed schemes exist");
                let ok = alts.iter().any(|s| {
                    let s = sys.normalize(&s.0).expect("schemes lie in their system's language");
                    let mut sigma = Substitution::new();
                    match_into(&s, &f, &mut sigma)
                });
                if !ok {
                    return Err(HilbertError::BadInstance { line: l.index, scheme: id.clone() });
                }
            }
            Justification::Mp(i, j) => {
                let (x, y) = (&proved[i], &proved[j]);
                let fits = |imp: &Formula, ant: &Formula| {
                    matches!(imp, Formula::Impl(a, b) if **a == *ant && **b == f)
                };
                if !fits(x, y) && !fits(y, x) {
                    return Err(HilbertError::BadMp { line: l.index });
                }
            }
        }
        proved.insert(l.index, f);
    }
    let last = &proved[&proof.lines.last().expect("nonempty").index];
    let goal = sys.normalize(&proof.goal).ok_or(HilbertError::WrongLanguage { line: 0, system: sys })?;
    if *last != goal {
        return Err(HilbertError::GoalMismatch { goal: goal.to_string(), last: last.to_string() });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Axiom(String),
    Rule(String, Vec<usize>),
    /// An open premise; the derivation then proves a derived rule.
    Hyp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationLine {
    pub index: usize,
    pub sequent: Sequent,
    pub step: Step,
}

/// A derivation tree encoded as numbered lines; the last line is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    lines: Vec<DerivationLine>,
}

impl Derivation {
    pub fn new(lines: Vec<DerivationLine>) -> Result<Self, ScriptError> {
        if lines.is_empty() {
            return Err(ScriptError::Empty);
        }
        let mut seen: Vec<usize> = Vec::new();
        for l in &lines {
            if seen.last().is_some_and(|&p| l.index <= p) {
                return Err(ScriptError::IndexOrder(l.index));
            }
            if let Step::Rule(_, from) = &l.step {
                for &c in from {
                    if seen.binary_search(&c).is_err() {
                        return Err(ScriptError::ForwardReference { line: l.index, cited: c });
                    }
                }
            }
            seen.push(l.index);
        }
        Ok(Derivation { lines })
    }

    pub fn lines(&self) -> &[DerivationLine] {
        &self.lines
    }

    pub fn conclusion(&self) -> &Sequent {
        &self.lines.last().expect("nonempty").sequent
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SequentError {
    #[error("node {node}: not an instance of axiom {id}")]
    BadAxiom { node: usize, id: String },
    #[error("node {node}: premises do not fit rule {id}")]
    PremiseMismatch { node: usize, id: String },
    #[error("node {node}: {id} takes {expected} premises, {got} given")]
    ArityError { node: usize, id: String, expected: usize, got: usize },
    #[error("node {node}: {id} is not a rule of {system}")]
    UnknownRule { node: usize, id: String, system: SequentSystem },
    #[error("node {node}: `->` is outside the implication-free language")]
    WrongLanguage { node: usize },
}

impl SequentError {
    pub fn class(&self) -> &'static str {
        match self {
            SequentError::BadAxiom { .. } => "bad-axiom",
            SequentError::PremiseMismatch { .. } => "premise-mismatch",
            SequentError::ArityError { .. } => "arity-error",
            SequentError::UnknownRule { .. } => "unknown-rule",
            SequentError::WrongLanguage { .. } => "wrong-language",
        }
    }
}

/// What an accepted derivation establishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived {
    pub conclusion: Sequent,
    pub hypotheses: Vec<Sequent>,
}

fn match_sequent(p: &Sequent, t: &Sequent, sigma: &mut Substitution) -> bool {
    match_into(&p.lhs, &t.lhs, sigma) && match_into(&p.rhs, &t.rhs, sigma)
}

/// Tries the premises in the given order and, for two premises, swapped.
fn rule_fits(rule: &SequentRule, node: &Sequent, children: &[&Sequent]) -> bool {
    let orders: &[[usize; 2]] = if children.len() == 2 { &[[0, 1], [1, 0]] } else { &[[0, 1]] };
    orders.iter().any(|ord| {
        let mut sigma = Substitution::new();
        match_sequent(&rule.conclusion, node, &mut sigma)
            && rule
                .premises
                .iter()
                .enumerate()
                .all(|(k, p)| match_sequent(p, children[ord[k]], &mut sigma))
    })
}

pub fn check_sequent_derivation(sys: SequentSystem, d: &Derivation) -> Result<Derived, SequentError> {
    let mut proved: HashMap<usize, &Sequent> = HashMap::new();
    let mut hypotheses = Vec::new();
    for l in &d.lines {
        if !l.sequent.lhs.is_implication_free() || !l.sequent.rhs.is_implication_free() {
            return Err(SequentError::WrongLanguage { node: l.index });
        }
        let (id, from): (&String, &[usize]) = match &l.step {
            Step::Hyp => {
                hypotheses.push(l.sequent.clone());
                proved.insert(l.index, &l.sequent);
                continue;
            }
            Step::Axiom(id) => (id, &[]),
            Step::Rule(id, from) => (id, from),
        };
        if !sys.rules().contains(&id.as_str()) {
            return Err(SequentError::UnknownRule { node: l.index, id: id.clone(), system: sys });
        }
        let alts = sequent_rule(id).expect("listed rules exist");
        let expected = alts[0].premises.len();
        if expected != from.len() {
            return Err(SequentError::ArityError { node: l.index, id: id.clone(), expected, got: from.len() });
        }
        let children: Vec<&Sequent> = from.iter().map(|i| proved[i]).collect();
        if !alts.iter().any(|r| rule_fits(r, &l.sequent, &children)) {
            return Err(if expected == 0 {
                SequentError::BadAxiom { node: l.index, id: id.clone() }
            } else {
                SequentError::PremiseMismatch { node: l.index, id: id.clone() }
            });
        }
        proved.insert(l.index, &l.sequent);
    }
    Ok(Derived { conclusion: d.conclusion().clone(), hypotheses })
}

/// A sequent-rule instance as `(premises, conclusion)`, for comparing derived
/// rules against their statement.
pub fn rule_instance(id: &str, sigma: &[(&str, Formula)]) -> (Vec<Sequent>, Sequent) {
    let sigma: Substitution = sigma.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    let r = &sequent_rule(id).expect("known rule")[0];
    let inst = |s: &Sequent| Sequent::new(s.lhs.substitute(&sigma), s.rhs.substitute(&sigma));
    (r.premises.iter().map(inst).collect(), inst(&r.conclusion))
}

/// Convenience for tests and fixtures.
pub fn formula(text: &str) -> Formula {
    parse(text).unwrap_or_else(|e| panic!("bad formula `{text}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(index: usize, f: &str, j: Justification) -> ProofLine {
        ProofLine { index, formula: formula(f), justification: j }
    }

    fn ax(id: &str) -> Justification {
        Justification::Axiom(id.into())
    }

    #[test]
    fn three_line_proof_of_top() {
        let p = ProofScript::new(
            vec![
                line(1, "top -> (bot -> top)", ax("A1")),
                line(2, "(top -> (bot -> top)) -> top", ax("A7")),
                line(3, "top", Justification::Mp(2, 1)),
            ],
            formula("top"),
        )
        .unwrap();
        assert_eq!(check_hilbert(HilbertSystem::Ilm, &p), Ok(()));
    }

    #[test]
    fn single_axiom_and_bad_instance() {
        let ok = ProofScript::new(vec![line(1, "p -> (q -> p)", ax("A1"))], formula("p -> (q -> p)")).unwrap();
        assert_eq!(check_hilbert(HilbertSystem::Ilm, &ok), Ok(()));
        let bad = ProofScript::new(vec![line(1, "p -> q", ax("A9"))], formula("p -> q")).unwrap();
        assert_eq!(check_hilbert(HilbertSystem::Ilm, &bad).unwrap_err().class(), "bad-instance");
    }

    #[test]
    fn language_and_scheme_membership() {
        let p = ProofScript::new(vec![line(1, "bot -> p", ax("A8"))], formula("bot -> p")).unwrap();
        assert_eq!(check_hilbert(HilbertSystem::JpPrime, &p).unwrap_err().class(), "wrong-language");
        assert_eq!(check_hilbert(HilbertSystem::Ilm, &p), Ok(()));
        let em = ProofScript::new(vec![line(1, "p | ~p", ax("A12"))], formula("p | ~p")).unwrap();
        assert_eq!(check_hilbert(HilbertSystem::Ilm, &em).unwrap_err().class(), "unknown-scheme");
        assert_eq!(check_hilbert(HilbertSystem::IlmVee, &em), Ok(()));
    }

    #[test]
    fn ilm2_expands_negation() {
        let p = ProofScript::new(vec![line(1, "!p -> (q -> !p)", ax("A1"))], formula("(p -> bot) -> (q -> !p)"))
            .unwrap();
        assert_eq!(check_hilbert(HilbertSystem::Ilm2, &p), Ok(()));
    }

    #[test]
    fn script_structure() {
        let e = ProofScript::new(vec![line(1, "top", Justification::Mp(1, 2))], formula("top")).unwrap_err();
        assert_eq!(e, ScriptError::ForwardReference { line: 1, cited: 1 });
    }

    fn node(index: usize, s: &str, step: Step) -> DerivationLine {
        DerivationLine { index, sequent: Sequent::parse(s).unwrap(), step }
    }

    #[test]
    fn sequent_examples() {
        let leaf = Derivation::new(vec![node(1, "p & q |- p", Step::Axiom("A3".into()))]).unwrap();
        assert!(check_sequent_derivation(SequentSystem::Kim, &leaf).is_ok());

        let good = Derivation::new(vec![
            node(1, "p |- q", Step::Hyp),
            node(2, "!q |- !p", Step::Rule("A10".into(), vec![1])),
        ])
        .unwrap();
        let d = check_sequent_derivation(SequentSystem::Kim, &good).unwrap();
        assert_eq!(d.hypotheses, vec![Sequent::parse("p |- q").unwrap()]);

        let bad = Derivation::new(vec![
            node(1, "q |- p", Step::Hyp),
            node(2, "!q |- !p", Step::Rule("A10".into(), vec![1])),
        ])
        .unwrap();
        assert_eq!(check_sequent_derivation(SequentSystem::Kim, &bad).unwrap_err().class(), "premise-mismatch");

        let arity = Derivation::new(vec![node(1, "!q |- !p", Step::Axiom("A10".into()))]).unwrap();
        assert_eq!(check_sequent_derivation(SequentSystem::Kim, &arity).unwrap_err().class(), "arity-error");
    }

    #[test]
    fn kim_prime_lacks_a16() {
        let d = Derivation::new(vec![node(1, "~p |- !(p & !~top)", Step::Axiom("A16".into()))]).unwrap();
        assert!(check_sequent_derivation(SequentSystem::Kim, &d).is_ok());
        assert_eq!(check_sequent_derivation(SequentSystem::KimPrime, &d).unwrap_err().class(), "unknown-rule");
    }
}
