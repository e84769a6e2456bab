//! Finite pseudo-Boolean algebras with a second, minimal negation.

pub mod au;
pub mod canon;
pub mod classify;
pub mod enumerate;
pub mod eval;
pub mod io;
pub mod kite;
pub mod lattice;

use thiserror::Error;

pub use lattice::{Elem, FiniteLattice, LatticeError};

use kite::Witness;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("no residuum for {0} -> {1}")]
    ResiduumMissing(String, String),
    #[error("implication table is not the residuum at ({a}, {b}): table gives {given}, residuum is {expected}")]
    NotResiduated {
        a: String,
        b: String,
        given: String,
        expected: String,
    },
    #[error("~1 = {tilde_one} but !!~1 = {double_neg}")]
    DneViolation { tilde_one: String, double_neg: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
    #[error("{which} negation is not {property}: {witness}")]
    NotKim {
        which: &'static str,
        property: &'static str,
        witness: String,
    },
    #[error("u = ({0}, {1}) is not ordered")]
    UNotOrdered(String, String),
    #[error("constructed operation `{op}` disagrees with the derived one at {at}")]
    ConstructionMismatch { op: &'static str, at: String },
}

/// A finite distributive lattice with its residuated implication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeytingAlgebra {
    lattice: FiniteLattice,
    imp: Vec<Elem>,
}

impl HeytingAlgebra {
    /// Derives the implication table by residuation.
    pub fn derive(lattice: FiniteLattice) -> Result<Self, AlgebraError> {
        let n = lattice.size();
        let mut imp = Vec::with_capacity(n * n);
        for a in lattice.elements() {
            for b in lattice.elements() {
                let r = lattice.residuum(a, b).ok_or_else(|| {
                    AlgebraError::ResiduumMissing(lattice.name(a).into(), lattice.name(b).into())
                })?;
                imp.push(r);
            }
        }
        Ok(HeytingAlgebra { lattice, imp })
    }

    /// Accepts a supplied implication table only if it equals the residuum.
    pub fn with_implication(lattice: FiniteLattice, table: &[Elem]) -> Result<Self, AlgebraError> {
        let n = lattice.size();
        if table.len() != n * n {
            return Err(AlgebraError::TableSize { got: table.len(), expected: n * n });
        }
        for a in lattice.elements() {
            for b in lattice.elements() {
                let given = table[a * n + b];
                let expected = lattice.residuum(a, b);
                if expected != Some(given) {
                    return Err(AlgebraError::NotResiduated {
                        a: lattice.name(a).into(),
                        b: lattice.name(b).into(),
                        given: lattice.name(given).into(),
                        expected: expected.map_or("none".into(), |e| lattice.name(e).into()),
                    });
                }
            }
        }
        Ok(HeytingAlgebra { lattice, imp: table.to_vec() })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.size() + b]
    }

    pub fn implication_table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.lattice.bottom())
    }

    pub fn neg_table(&self) -> Vec<Elem> {
        self.lattice.elements().map(|a| self.neg(a)).collect()
    }

    /// Elements fixed by double negation; these are the admissible values of `~1`.
    pub fn regular_elements(&self) -> Vec<Elem> {
        self.lattice
            .elements()
            .filter(|&a| self.neg(self.neg(a)) == a)
            .collect()
    }

    pub fn permuted(&self, order: &[Elem]) -> HeytingAlgebra {
        let n = self.size();
        let mut inv = vec![0; n];
        for (i, &e) in order.iter().enumerate() {
            inv[e] = i;
        }
        let mut imp = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                imp[i * n + j] = inv[self.imp(order[i], order[j])];
            }
        }
        HeytingAlgebra { lattice: self.lattice.permuted(order), imp }
    }

    pub fn with_names(&self, names: Vec<String>) -> HeytingAlgebra {
        HeytingAlgebra { lattice: self.lattice.with_names(names), imp: self.imp.clone() }
    }
}

/// A ccpBa: a Heyting algebra with `~a = a -> ~1` where `!!~1 = ~1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    heyting: HeytingAlgebra,
    neg: Vec<Elem>,
    tilde: Vec<Elem>,
    tilde_one: Elem,
}

impl Algebra {
    pub fn new(heyting: HeytingAlgebra, tilde_one: Elem) -> Result<Self, AlgebraError> {
        let lat = heyting.lattice();
        if tilde_one >= lat.size() {
            return Err(AlgebraError::UnknownElement(tilde_one.to_string()));
        }
        let dn = heyting.neg(heyting.neg(tilde_one));
        if dn != tilde_one {
            return Err(AlgebraError::DneViolation {
                tilde_one: lat.name(tilde_one).into(),
                double_neg: lat.name(dn).into(),
            });
        }
        let neg = heyting.neg_table();
        let tilde = lat.elements().map(|a| heyting.imp(a, tilde_one)).collect();
        Ok(Algebra { heyting, neg, tilde, tilde_one })
    }

    /// Builds from a lattice and a `~1` given by name.
    pub fn from_lattice(lattice: FiniteLattice, tilde_one: &str) -> Result<Self, AlgebraError> {
        let t = lattice
            .index(tilde_one)
            .ok_or_else(|| AlgebraError::UnknownElement(tilde_one.into()))?;
        Algebra::new(HeytingAlgebra::derive(lattice)?, t)
    }

    pub fn heyting(&self) -> &HeytingAlgebra {
        &self.heyting
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.heyting.lattice()
    }

    pub fn size(&self) -> usize {
        self.heyting.size()
    }

    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.heyting.imp(a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn tilde(&self, a: Elem) -> Elem {
        self.tilde[a]
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    pub fn tilde_table(&self) -> &[Elem] {
        &self.tilde
    }

    pub fn tilde_one(&self) -> Elem {
        self.tilde_one
    }

    pub fn is_cvcpba(&self) -> bool {
        let l = self.lattice();
        l.elements().all(|a| l.join(a, self.tilde(a)) == l.top())
    }

    /// The implication-free reduct.
    pub fn kim_reduct(&self) -> KimAlgebra {
        KimAlgebra {
            lattice: self.lattice().clone(),
            neg: self.neg.clone(),
            tilde: self.tilde.clone(),
        }
    }

    pub fn permuted(&self, order: &[Elem]) -> Algebra {
        let inv_t = order.iter().position(|&e| e == self.tilde_one).expect("permutation");
        Algebra::new(self.heyting.permuted(order), inv_t).expect("isomorphic copy stays valid")
    }

    pub fn with_names(&self, names: Vec<String>) -> Algebra {
        Algebra { heyting: self.heyting.with_names(names), ..self.clone() }
    }
}

/// A bounded distributive lattice with an intuitionistic `!` and a minimal `~`
/// linked by `!!~1 = ~1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KimAlgebra {
    lattice: FiniteLattice,
    neg: Vec<Elem>,
    tilde: Vec<Elem>,
}

impl KimAlgebra {
    pub fn new(lattice: FiniteLattice, neg: Vec<Elem>, tilde: Vec<Elem>) -> Result<Self, AlgebraError> {
        let n = lattice.size();
        for t in [&neg, &tilde] {
            if t.len() != n {
                return Err(AlgebraError::TableSize { got: t.len(), expected: n });
            }
            if let Some(&bad) = t.iter().find(|&&e| e >= n) {
                return Err(AlgebraError::UnknownElement(bad.to_string()));
            }
        }
        lattice.check_distributive()?;
        let fail = |which, w: Witness| AlgebraError::NotKim {
            which,
            property: w.law,
            witness: w.render(&lattice),
        };
        if let Some(w) = kite::intuitionistic_failure(&lattice, &neg) {
            return Err(fail("`!`", w));
        }
        if let Some(w) = kite::minimal_failure(&lattice, &tilde) {
            return Err(fail("`~`", w));
        }
        let t1 = tilde[lattice.top()];
        if neg[neg[t1]] != t1 {
            return Err(AlgebraError::DneViolation {
                tilde_one: lattice.name(t1).into(),
                double_neg: lattice.name(neg[neg[t1]]).into(),
            });
        }
        Ok(KimAlgebra { lattice, neg, tilde })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn tilde(&self, a: Elem) -> Elem {
        self.tilde[a]
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    pub fn tilde_table(&self) -> &[Elem] {
        &self.tilde
    }

    pub fn tilde_one(&self) -> Elem {
        self.tilde[self.lattice.top()]
    }

    pub fn is_kim_vee(&self) -> bool {
        let l = &self.lattice;
        l.elements().all(|a| l.join(a, self.tilde(a)) == l.top())
    }

    pub fn permuted(&self, order: &[Elem]) -> KimAlgebra {
        let n = self.size();
        let mut inv = vec![0; n];
        for (i, &e) in order.iter().enumerate() {
            inv[e] = i;
        }
        KimAlgebra {
            lattice: self.lattice.permuted(order),
            neg: order.iter().map(|&e| inv[self.neg[e]]).collect(),
            tilde: order.iter().map(|&e| inv[self.tilde[e]]).collect(),
        }
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn residuation_law_holds_on_derived_tables() {
        for lat in [chain3(), h5(), h6()] {
            let h = HeytingAlgebra::derive(lat).unwrap();
            let l = h.lattice();
            for a in l.elements() {
                for b in l.elements() {
                    for c in l.elements() {
                        assert_eq!(l.leq(l.meet(a, c), b), l.leq(c, h.imp(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn dne_violation_is_reported() {
        let err = Algebra::from_lattice(h6(), "w").unwrap_err();
        assert_eq!(
            err,
            AlgebraError::DneViolation { tilde_one: "w".into(), double_neg: "1".into() }
        );
    }

    #[test]
    fn b_prime_tilde_is_constant_top() {
        let b = b_prime();
        assert!(b.tilde_table().iter().all(|&t| t == 2));
    }

    #[test]
    fn derive_reports_first_missing_residuum() {
        let m3 = FiniteLattice::build_general(
            &["0", "x", "y", "z", "1"],
            &[("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
        )
        .unwrap();
        assert_eq!(
            HeytingAlgebra::derive(m3).unwrap_err(),
            AlgebraError::ResiduumMissing("x".into(), "0".into())
        );
    }

    #[test]
    fn kim_validation_rejects_non_intuitionistic_neg() {
        let l = chain3();
        // `!` := constant top is not intuitionistic (a & !a = a).
        let err = KimAlgebra::new(l, vec![2, 2, 2], vec![2, 2, 2]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotKim { which: "`!`", .. }));
    }
}
