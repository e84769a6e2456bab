//! Negation properties of unary operations on a finite lattice, arranged as
//! the nodes of the negation kite.
//!
//! Every check scans elements in declared order and reports the first
//! counterexample.

use std::fmt;

use thiserror::Error;

use super::lattice::{Elem, FiniteLattice};

/// A counterexample to a named law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub law: &'static str,
    pub elements: Vec<Elem>,
}

impl Witness {
    fn new(law: &'static str, elements: Vec<Elem>) -> Witness {
        Witness { law, elements }
    }

    pub fn render(&self, lat: &FiniteLattice) -> String {
        let names: Vec<&str> = self.elements.iter().map(|&e| lat.name(e)).collect();
        format!("{} fails at ({})", self.law, names.join(", "))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.elements)
    }
}

fn first1(l: &FiniteLattice, law: &'static str, ok: impl Fn(Elem) -> bool) -> Option<Witness> {
    l.elements().find(|&a| !ok(a)).map(|a| Witness::new(law, vec![a]))
}

fn first2(l: &FiniteLattice, law: &'static str, ok: impl Fn(Elem, Elem) -> bool) -> Option<Witness> {
    for a in l.elements() {
        for b in l.elements() {
            if !ok(a, b) {
                return Some(Witness::new(law, vec![a, b]));
            }
        }
    }
    None
}

pub fn antitone_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    first2(l, "a <= b implies ~b <= ~a", |a, b| !l.leq(a, b) || l.leq(t[b], t[a]))
}

pub fn join_meet_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    first2(l, "~a & ~b <= ~(a | b)", |a, b| l.leq(l.meet(t[a], t[b]), t[l.join(a, b)]))
}

pub fn tilde_zero_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    (t[l.bottom()] != l.top()).then(|| Witness::new("~0 = 1", vec![l.bottom()]))
}

pub fn preminimal_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    antitone_failure(l, t)
        .or_else(|| join_meet_failure(l, t))
        .or_else(|| tilde_zero_failure(l, t))
}

pub fn quasi_raw_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    first1(l, "a <= ~~a", |a| l.leq(a, t[t[a]]))
}

pub fn rule_raw_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    for a in l.elements() {
        for b in l.elements() {
            for c in l.elements() {
                if l.leq(l.meet(a, b), c) && !l.leq(l.meet(a, t[c]), t[b]) {
                    return Some(Witness::new("a & b <= c implies a & ~c <= ~b", vec![a, b, c]));
                }
            }
        }
    }
    None
}

pub fn absurd_raw_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    first1(l, "a & ~a = 0", |a| l.meet(a, t[a]) == l.bottom())
}

pub fn de_morgan_raw_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    first1(l, "~~a <= a", |a| l.leq(t[t[a]], a))
}

pub fn em_raw_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    first1(l, "a | ~a = 1", |a| l.join(a, t[a]) == l.top())
}

pub fn dne_raw_failure(l: &FiniteLattice, neg: &[Elem], t: &[Elem]) -> Option<Witness> {
    let t1 = t[l.top()];
    (!l.leq(neg[neg[t1]], t1)).then(|| Witness::new("!!~1 <= ~1", vec![t1]))
}

pub fn quasi_minimal_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    preminimal_failure(l, t).or_else(|| quasi_raw_failure(l, t))
}

pub fn minimal_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    quasi_minimal_failure(l, t).or_else(|| rule_raw_failure(l, t))
}

pub fn intuitionistic_failure(l: &FiniteLattice, t: &[Elem]) -> Option<Witness> {
    minimal_failure(l, t).or_else(|| absurd_raw_failure(l, t))
}

/// Verdict at one kite node. `witness` refutes the node together with the
/// nodes below it; `raw_witness` refutes only the node's own law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KiteVerdict {
    pub witness: Option<Witness>,
    pub raw_witness: Option<Witness>,
}

impl KiteVerdict {
    fn new(raw_witness: Option<Witness>, below: &[&KiteVerdict]) -> KiteVerdict {
        let witness = below
            .iter()
            .find_map(|v| v.witness.clone())
            .or_else(|| raw_witness.clone());
        KiteVerdict { witness, raw_witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn raw_holds(&self) -> bool {
        self.raw_witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KiteReport {
    pub preminimal: KiteVerdict,
    pub quasi_minimal: KiteVerdict,
    pub minimal: KiteVerdict,
    pub intuitionistic: KiteVerdict,
    pub de_morgan: KiteVerdict,
    pub ortho: KiteVerdict,
    pub em: KiteVerdict,
    pub dne_tilde_one: KiteVerdict,
}

impl KiteReport {
    pub fn nodes(&self) -> [(&'static str, &KiteVerdict); 8] {
        [
            ("preminimal", &self.preminimal),
            ("quasi_minimal", &self.quasi_minimal),
            ("minimal", &self.minimal),
            ("intuitionistic", &self.intuitionistic),
            ("de_morgan", &self.de_morgan),
            ("ortho", &self.ortho),
            ("em", &self.em),
            ("dne_tilde_one", &self.dne_tilde_one),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("`!` is not an intuitionistic negation: {0}")]
pub struct NegNotIntuitionistic(pub String);

/// Places the pair (`neg`, `tilde`) on the kite.
pub fn classify_negation_pair(
    l: &FiniteLattice,
    neg: &[Elem],
    tilde: &[Elem],
) -> Result<KiteReport, NegNotIntuitionistic> {
    if let Some(w) = intuitionistic_failure(l, neg) {
        return Err(NegNotIntuitionistic(w.render(l)));
    }
    let t = tilde;
    let preminimal = KiteVerdict::new(preminimal_failure(l, t), &[]);
    let quasi_minimal = KiteVerdict::new(quasi_raw_failure(l, t), &[&preminimal]);
    let minimal = KiteVerdict::new(rule_raw_failure(l, t), &[&quasi_minimal]);
    let intuitionistic = KiteVerdict::new(absurd_raw_failure(l, t), &[&minimal]);
    let de_morgan = KiteVerdict::new(de_morgan_raw_failure(l, t), &[&quasi_minimal]);
    let ortho_raw = de_morgan_raw_failure(l, t).or_else(|| absurd_raw_failure(l, t));
    let ortho = KiteVerdict::new(ortho_raw, &[&intuitionistic, &de_morgan]);
    let dne_tilde_one = KiteVerdict::new(dne_raw_failure(l, neg, t), &[&minimal]);
    let em = KiteVerdict::new(em_raw_failure(l, t), &[&dne_tilde_one]);
    Ok(KiteReport {
        preminimal,
        quasi_minimal,
        minimal,
        intuitionistic,
        de_morgan,
        ortho,
        em,
        dne_tilde_one,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::HeytingAlgebra;
    use super::*;

    #[test]
    fn constant_top_on_three_chain() {
        let h = HeytingAlgebra::derive(chain3()).unwrap();
        let r = classify_negation_pair(h.lattice(), &h.neg_table(), &[2, 2, 2]).unwrap();
        assert!(r.minimal.holds());
        assert!(r.em.holds());
        assert!(r.dne_tilde_one.holds());
        assert!(!r.intuitionistic.holds());
        assert_eq!(r.intuitionistic.witness.as_ref().unwrap().elements, vec![1]);
    }

    #[test]
    fn h6_with_w_as_tilde_one() {
        let h = HeytingAlgebra::derive(h6()).unwrap();
        let w = 3;
        let tilde: Vec<Elem> = h.lattice().elements().map(|a| h.imp(a, w)).collect();
        let r = classify_negation_pair(h.lattice(), &h.neg_table(), &tilde).unwrap();
        assert!(r.minimal.holds());
        assert!(!r.dne_tilde_one.holds());
        assert!(!r.em.holds());
    }

    #[test]
    fn intuitionistic_tilde_on_three_chain() {
        let h = HeytingAlgebra::derive(chain3()).unwrap();
        let neg = h.neg_table();
        let r = classify_negation_pair(h.lattice(), &neg, &neg).unwrap();
        assert!(r.intuitionistic.holds());
        assert!(r.dne_tilde_one.holds());
        assert!(!r.em.holds());
        assert_eq!(r.em.witness.as_ref().unwrap().elements, vec![1]);
    }

    #[test]
    fn identity_map_reports_raw_flags() {
        let h = HeytingAlgebra::derive(chain3()).unwrap();
        let r = classify_negation_pair(h.lattice(), &h.neg_table(), &[0, 1, 2]).unwrap();
        assert!(!r.preminimal.holds());
        assert!(r.de_morgan.raw_holds());
        assert!(!r.de_morgan.holds());
    }

    #[test]
    fn h6_with_x_is_not_de_morgan() {
        let h = HeytingAlgebra::derive(h6()).unwrap();
        let x = 4;
        let tilde: Vec<Elem> = h.lattice().elements().map(|a| h.imp(a, x)).collect();
        let r = classify_negation_pair(h.lattice(), &h.neg_table(), &tilde).unwrap();
        assert!(!r.de_morgan.raw_holds());
        // ~~w = 1 is not below w.
        assert_eq!(tilde[tilde[3]], 5);
    }

    #[test]
    fn non_intuitionistic_neg_is_rejected() {
        let h = HeytingAlgebra::derive(chain3()).unwrap();
        assert!(classify_negation_pair(h.lattice(), &[2, 2, 2], &[2, 2, 2]).is_err());
    }
}
