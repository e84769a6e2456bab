//! Evaluation of formulas in finite algebras and exhaustive validity checks.

use std::collections::BTreeMap;

use thiserror::Error;

use super::lattice::{Elem, FiniteLattice};
use super::{Algebra, KimAlgebra};
use crate::formula::{Formula, Program, Semantics, Sequent};

/// Assignment of atoms to elements.
pub type Valuation = BTreeMap<String, Elem>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("atom `{0}` has no value")]
    UnboundAtom(String),
    #[error("`->` is not interpreted in an implication-free algebra")]
    ImplicationInKimLanguage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Valid,
    Falsified(W),
}

impl<W> Verdict<W> {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Valid => None,
            Verdict::Falsified(w) => Some(w),
        }
    }
}

/// A finite algebra in which formulas can be evaluated.
pub trait Interpretation: Sync {
    fn lattice(&self) -> &FiniteLattice;
    fn neg(&self, a: Elem) -> Elem;
    fn tilde(&self, a: Elem) -> Elem;
    /// `None` when the algebra has no implication.
    fn implication(&self, a: Elem, b: Elem) -> Option<Elem>;

    fn has_implication(&self) -> bool {
        self.implication(self.lattice().top(), self.lattice().top()).is_some()
    }
}

impl Interpretation for Algebra {
    fn lattice(&self) -> &FiniteLattice {
        Algebra::lattice(self)
    }
    fn neg(&self, a: Elem) -> Elem {
        Algebra::neg(self, a)
    }
    fn tilde(&self, a: Elem) -> Elem {
        Algebra::tilde(self, a)
    }
    fn implication(&self, a: Elem, b: Elem) -> Option<Elem> {
        Some(self.imp(a, b))
    }
}

impl Interpretation for KimAlgebra {
    fn lattice(&self) -> &FiniteLattice {
        KimAlgebra::lattice(self)
    }
    fn neg(&self, a: Elem) -> Elem {
        KimAlgebra::neg(self, a)
    }
    fn tilde(&self, a: Elem) -> Elem {
        KimAlgebra::tilde(self, a)
    }
    fn implication(&self, _: Elem, _: Elem) -> Option<Elem> {
        None
    }
}

struct Sem<'a, I: ?Sized>(&'a I);

impl<I: Interpretation + ?Sized> Semantics for Sem<'_, I> {
    type Value = Elem;
    fn top(&self) -> Elem {
        self.0.lattice().top()
    }
    fn bot(&self) -> Elem {
        self.0.lattice().bottom()
    }
    fn and(&self, a: Elem, b: Elem) -> Elem {
        self.0.lattice().meet(a, b)
    }
    fn or(&self, a: Elem, b: Elem) -> Elem {
        self.0.lattice().join(a, b)
    }
    fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.0.implication(a, b).expect("language checked before evaluation")
    }
    fn neg(&self, a: Elem) -> Elem {
        self.0.neg(a)
    }
    fn tilde(&self, a: Elem) -> Elem {
        self.0.tilde(a)
    }
}

fn check_language<I: Interpretation + ?Sized>(alg: &I, fs: &[&Formula]) -> Result<(), EvalError> {
    if !alg.has_implication() && fs.iter().any(|f| !f.is_implication_free()) {
        return Err(EvalError::ImplicationInKimLanguage);
    }
    Ok(())
}

pub fn evaluate<I: Interpretation + ?Sized>(
    alg: &I,
    f: &Formula,
    v: &Valuation,
) -> Result<Elem, EvalError> {
    check_language(alg, &[f])?;
    let prog = Program::compile(&[f]);
    let vars = prog
        .atoms()
        .iter()
        .map(|a| v.get(a).copied().ok_or_else(|| EvalError::UnboundAtom(a.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::new();
    prog.eval(&Sem(alg), &vars, &mut out);
    Ok(out[prog.roots()[0]])
}

/// Runs `bad` on every valuation of `prog`'s atoms in lexicographic order
/// (first atom most significant) and returns the first one it accepts.
fn search<I: Interpretation + ?Sized>(
    alg: &I,
    prog: &Program,
    bad: impl Fn(&[Elem]) -> bool,
) -> Option<Valuation> {
    let n = alg.lattice().size();
    let k = prog.atoms().len();
    let mut vars = vec![0; k];
    let mut out = Vec::with_capacity(64);
    let sem = Sem(alg);
    loop {
        prog.eval(&sem, &vars, &mut out);
        if bad(&out) {
            return Some(prog.atoms().iter().cloned().zip(vars.iter().copied()).collect());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            vars[i] += 1;
            if vars[i] < n {
                break;
            }
            vars[i] = 0;
        }
    }
}

pub fn algebra_valid<I: Interpretation + ?Sized>(
    alg: &I,
    f: &Formula,
) -> Result<Verdict<Valuation>, EvalError> {
    check_language(alg, &[f])?;
    let prog = Program::compile(&[f]);
    let root = prog.roots()[0];
    let top = alg.lattice().top();
    Ok(match search(alg, &prog, |vals| vals[root] != top) {
        None => Verdict::Valid,
        Some(v) => Verdict::Falsified(v),
    })
}

pub fn sequent_valid<I: Interpretation + ?Sized>(
    alg: &I,
    lhs: &Formula,
    rhs: &Formula,
) -> Result<Verdict<Valuation>, EvalError> {
    check_language(alg, &[lhs, rhs])?;
    let prog = Program::compile(&[lhs, rhs]);
    let (l, r) = (prog.roots()[0], prog.roots()[1]);
    let top = alg.lattice().top();
    Ok(match search(alg, &prog, |vals| vals[l] == top && vals[r] != top) {
        None => Verdict::Valid,
        Some(v) => Verdict::Falsified(v),
    })
}

pub fn sequent_valid_seq<I: Interpretation + ?Sized>(
    alg: &I,
    s: &Sequent,
) -> Result<Verdict<Valuation>, EvalError> {
    sequent_valid(alg, &s.lhs, &s.rhs)
}
