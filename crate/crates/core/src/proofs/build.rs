//! Builders that compile structured proofs into checkable line lists.
//!
//! Hilbert proofs are written as terms with hypotheses and lambda
//! abstraction; abstraction is compiled away through A1 and A2, so the
//! output only cites axioms and modus ponens. Sequent derivations are
//! written as trees whose rule instances are inferred from the children.

use std::collections::HashMap;

use super::{
    hilbert_instance, sequent_rule, Derivation, DerivationLine, Justification, ProofLine, ProofScript, Step,
};
use crate::formula::{imp, match_into, Formula, Sequent, Substitution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Axiom(&'static str, Formula),
    Hyp(String, Formula),
    /// Implication proof, then antecedent proof.
    Mp(Box<Term>, Box<Term>),
    Lam(String, Formula, Box<Term>),
}

impl Term {
    pub fn conclusion(&self) -> Formula {
        match self {
            Term::Axiom(_, f) | Term::Hyp(_, f) => f.clone(),
            Term::Mp(f, x) => match f.conclusion() {
                Formula::Impl(a, b) => {
                    assert_eq!(*a, x.conclusion(), "modus ponens antecedent mismatch");
                    *b
                }
                other => panic!("modus ponens on non-implication `{other}`"),
            },
            Term::Lam(_, a, body) => imp(a.clone(), body.conclusion()),
        }
    }

    fn uses(&self, h: &str) -> bool {
        match self {
            Term::Axiom(..) => false,
            Term::Hyp(n, _) => n == h,
            Term::Mp(f, x) => f.uses(h) || x.uses(h),
            Term::Lam(n, _, body) => n != h && body.uses(h),
        }
    }
}

pub fn axiom(id: &'static str, alt: usize, sigma: &[(&str, Formula)]) -> Term {
    Term::Axiom(id, hilbert_instance(id, alt, sigma))
}

pub fn hyp(name: &str, f: &Formula) -> Term {
    Term::Hyp(name.to_string(), f.clone())
}

pub fn mp(f: Term, x: Term) -> Term {
    Term::Mp(Box::new(f), Box::new(x))
}

pub fn lam(name: &str, a: &Formula, body: Term) -> Term {
    Term::Lam(name.to_string(), a.clone(), Box::new(body))
}

/// Proves `a -> a` from A1 and A2.
fn identity(a: &Formula) -> Term {
    let aa = imp(a.clone(), a.clone());
    let s2 = axiom("A2", 0, &[("a", a.clone()), ("b", aa.clone()), ("c", a.clone())]);
    let k1 = axiom("A1", 0, &[("a", a.clone()), ("b", aa)]);
    let k2 = axiom("A1", 0, &[("a", a.clone()), ("b", a.clone())]);
    mp(mp(s2, k1), k2)
}

/// Turns a lambda-free term using hypothesis `h: a` into a proof of
/// `a -> conclusion` that no longer uses `h`.
fn abstract_out(h: &str, a: &Formula, t: Term) -> Term {
    if !t.uses(h) {
        let c = t.conclusion();
        return mp(axiom("A1", 0, &[("a", c), ("b", a.clone())]), t);
    }
    match t {
        Term::Hyp(..) => identity(a),
        Term::Mp(f, x) => {
            let (b, c) = match f.conclusion() {
                Formula::Impl(b, c) => (*b, *c),
                _ => unreachable!("checked by conclusion()"),
            };
            let s = axiom("A2", 0, &[("a", a.clone()), ("b", b), ("c", c)]);
            mp(mp(s, abstract_out(h, a, *f)), abstract_out(h, a, *x))
        }
        Term::Axiom(..) | Term::Lam(..) => unreachable!("axioms are closed and lambdas are eliminated first"),
    }
}

fn eliminate(t: Term) -> Term {
    match t {
        Term::Mp(f, x) => mp(eliminate(*f), eliminate(*x)),
        Term::Lam(h, a, body) => abstract_out(&h, &a, eliminate(*body)),
        leaf => leaf,
    }
}

/// Compiles a closed term into a proof script whose goal is the term's
/// conclusion. Repeated formulas are proved once.
pub fn compile(t: Term) -> ProofScript {
    let t = eliminate(t);
    let mut lines = Vec::new();
    let mut seen: HashMap<Formula, usize> = HashMap::new();
    fn walk(t: &Term, lines: &mut Vec<ProofLine>, seen: &mut HashMap<Formula, usize>) -> (usize, Formula) {
        let c = t.conclusion();
        if let Some(&i) = seen.get(&c) {
            return (i, c);
        }
        let justification = match t {
            Term::Axiom(id, _) => Justification::Axiom(id.to_string()),
            Term::Mp(f, x) => {
                let (i, _) = walk(f, lines, seen);
                let (j, _) = walk(x, lines, seen);
                Justification::Mp(i, j)
            }
            Term::Hyp(n, _) => panic!("free hypothesis `{n}`"),
            Term::Lam(..) => unreachable!("eliminated"),
        };
        let index = lines.len() + 1;
        lines.push(ProofLine { index, formula: c.clone(), justification });
        seen.insert(c.clone(), index);
        (index, c)
    }
    let (_, goal) = walk(&t, &mut lines, &mut seen);
    ProofScript::new(lines, goal).expect("postorder numbering only cites earlier lines")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Axiom(&'static str, Sequent),
    Rule(&'static str, Sequent, Vec<Tree>),
    Hyp(Sequent),
}

impl Tree {
    pub fn conclusion(&self) -> &Sequent {
        match self {
            Tree::Axiom(_, s) | Tree::Rule(_, s, _) | Tree::Hyp(s) => s,
        }
    }
}

fn instantiate(s: &Sequent, sigma: &Substitution) -> Sequent {
    Sequent::new(s.lhs.substitute(sigma), s.rhs.substitute(sigma))
}

pub fn leaf(id: &'static str, alt: usize, sigma: &[(&str, Formula)]) -> Tree {
    let sigma: Substitution = sigma.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    let r = &sequent_rule(id).expect("known axiom")[alt];
    assert!(r.premises.is_empty(), "{id} has premises");
    Tree::Axiom(id, instantiate(&r.conclusion, &sigma))
}

/// Applies a premise rule, reading the substitution off the children.
pub fn rule(id: &'static str, children: Vec<Tree>) -> Tree {
    let r = &sequent_rule(id).expect("known rule")[0];
    assert_eq!(r.premises.len(), children.len(), "{id}: arity");
    let mut sigma = Substitution::new();
    for (p, c) in r.premises.iter().zip(&children) {
        let c = c.conclusion();
        assert!(
            match_into(&p.lhs, &c.lhs, &mut sigma) && match_into(&p.rhs, &c.rhs, &mut sigma),
            "{id}: premise `{p}` does not fit `{c}`"
        );
    }
    Tree::Rule(id, instantiate(&r.conclusion, &sigma), children)
}

pub fn assume(s: Sequent) -> Tree {
    Tree::Hyp(s)
}

/// Numbers a tree in postorder; identical subtrees share a line.
pub fn linearize(t: &Tree) -> Derivation {
    fn walk(t: &Tree, lines: &mut Vec<DerivationLine>, seen: &mut HashMap<Tree, usize>) -> usize {
        if let Some(&i) = seen.get(t) {
            return i;
        }
        let step = match t {
            Tree::Axiom(id, _) => Step::Axiom(id.to_string()),
            Tree::Hyp(_) => Step::Hyp,
            Tree::Rule(id, _, cs) => Step::Rule(id.to_string(), cs.iter().map(|c| walk(c, lines, seen)).collect()),
        };
        let index = lines.len() + 1;
        lines.push(DerivationLine { index, sequent: t.conclusion().clone(), step });
        seen.insert(t.clone(), index);
        index
    }
    let mut lines = Vec::new();
    walk(t, &mut lines, &mut HashMap::new());
    Derivation::new(lines).expect("postorder numbering only cites earlier lines")
}

impl std::hash::Hash for Tree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.conclusion().hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::proofs::{check_hilbert, check_sequent_derivation, HilbertSystem, SequentSystem};

    #[test]
    fn identity_is_five_lines() {
        let p = compile(lam("x", &parse("p").unwrap(), hyp("x", &parse("p").unwrap())));
        assert_eq!(p.lines().len(), 5);
        assert_eq!(p.goal(), &parse("p -> p").unwrap());
        assert_eq!(check_hilbert(HilbertSystem::Ilm, &p), Ok(()));
    }

    #[test]
    fn nested_abstraction() {
        // p -> ((p -> q) -> q)
        let p = parse("p").unwrap();
        let pq = parse("p -> q").unwrap();
        let t = lam("x", &p, lam("f", &pq, mp(hyp("f", &pq), hyp("x", &p))));
        let s = compile(t);
        assert_eq!(s.goal(), &parse("p -> (p -> q) -> q").unwrap());
        assert_eq!(check_hilbert(HilbertSystem::Ilm, &s), Ok(()));
        assert_eq!(check_hilbert(HilbertSystem::JpPrime, &s), Ok(()));
    }

    #[test]
    fn tree_sharing() {
        let a = leaf("A1", 0, &[("a", parse("p").unwrap())]);
        let t = rule("A4", vec![a.clone(), a]);
        let d = linearize(&t);
        assert_eq!(d.lines().len(), 2);
        assert_eq!(d.conclusion(), &Sequent::parse("p |- p & p").unwrap());
        assert!(check_sequent_derivation(SequentSystem::Kim, &d).is_ok());
    }
}
