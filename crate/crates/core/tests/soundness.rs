mod common;

use std::sync::OnceLock;

use ccpba_core::algebra::enumerate::{ccpba_catalog, kim_catalog};
use ccpba_core::formula::Substitution;
use ccpba_core::proofs::search::{countermodel_search, Goal, System};
use ccpba_core::proofs::{
    check_hilbert, check_sequent_derivation, hilbert_scheme, sequent_rule, Derivation, DerivationLine,
    HilbertSystem, Justification, ProofLine, ProofScript, SequentSystem, Step,
};
use ccpba_core::{algebra_valid, evaluate, sequent_valid, Algebra, Formula, KimAlgebra, Sequent};
use common::strategies::formula;
use proptest::prelude::*;

const ATOMS: &[&str] = &["p", "q"];

fn ccp() -> &'static [Algebra] {
    static C: OnceLock<Vec<Algebra>> = OnceLock::new();
    C.get_or_init(|| ccpba_catalog(5))
}

fn kims() -> &'static [KimAlgebra] {
    static C: OnceLock<Vec<KimAlgebra>> = OnceLock::new();
    C.get_or_init(|| kim_catalog(5))
}

fn sigma(a: Formula, b: Formula, c: Formula) -> Substitution {
    [("a", a), ("b", b), ("c", c)].into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

const ILM: [&str; 11] = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11"];
const KIM_AXIOMS: [&str; 12] = ["A1", "A3", "A6", "A7", "A8", "A9", "A11", "A12", "A13", "A15", "A16", "A17"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hilbert_axiom_instances_check_and_hold(
        k in 0usize..ILM.len(), alt in 0usize..2,
        a in formula(ATOMS, true), b in formula(ATOMS, true), c in formula(ATOMS, true),
    ) {
        let id = ILM[k];
        let schemes = hilbert_scheme(id).unwrap();
        let inst = schemes[alt % schemes.len()].instantiate(&sigma(a, b, c));
        let line = ProofLine { index: 1, formula: inst.clone(), justification: Justification::Axiom(id.into()) };
        let script = ProofScript::new(vec![line], inst.clone()).unwrap();
        prop_assert_eq!(check_hilbert(HilbertSystem::Ilm, &script), Ok(()));
        for alg in ccp() {
            prop_assert!(algebra_valid(alg, &inst).unwrap().is_valid(), "{} fails", inst);
        }
        let none = countermodel_search(System::Hilbert(HilbertSystem::Ilm), &Goal::Formula(inst), 2..=5).unwrap();
        prop_assert_eq!(none, None);
    }

    #[test]
    fn sequent_axiom_instances_check_and_hold(
        k in 0usize..KIM_AXIOMS.len(),
        a in formula(ATOMS, false), b in formula(ATOMS, false), c in formula(ATOMS, false),
    ) {
        let id = KIM_AXIOMS[k];
        let rule = &sequent_rule(id).unwrap()[0];
        let s = sigma(a, b, c);
        let inst = Sequent::new(rule.conclusion.lhs.substitute(&s), rule.conclusion.rhs.substitute(&s));
        let line = DerivationLine { index: 1, sequent: inst.clone(), step: Step::Axiom(id.into()) };
        let d = Derivation::new(vec![line]).unwrap();
        let derived = check_sequent_derivation(SequentSystem::Kim, &d).unwrap();
        prop_assert_eq!(&derived.conclusion, &inst);
        for alg in kims() {
            prop_assert!(sequent_valid(alg, &inst.lhs, &inst.rhs).unwrap().is_valid(), "{} fails", inst);
        }
    }

    #[test]
    fn countermodels_really_refute(f in formula(ATOMS, true)) {
        let sys = System::Hilbert(HilbertSystem::Ilm);
        match countermodel_search(sys, &Goal::Formula(f.clone()), 2..=5).unwrap() {
            None => {
                for alg in ccp() {
                    prop_assert!(algebra_valid(alg, &f).unwrap().is_valid());
                }
            }
            Some(cm) => {
                let ccpba_core::algebra::enumerate::CatalogEntry::Ccp(alg) = &cm.model else {
                    panic!("ILM searches ccpBa catalogs")
                };
                prop_assert_ne!(evaluate(alg, &f, &cm.valuation).unwrap(), alg.lattice().top());
                for smaller in ccp().iter().filter(|a| a.size() < cm.size) {
                    prop_assert!(algebra_valid(smaller, &f).unwrap().is_valid());
                }
            }
        }
    }

    #[test]
    fn modus_ponens_preserves_validity(f in formula(ATOMS, true), g in formula(ATOMS, true)) {
        let fg = ccpba_core::formula::imp(f.clone(), g.clone());
        for alg in ccp() {
            if algebra_valid(alg, &f).unwrap().is_valid() && algebra_valid(alg, &fg).unwrap().is_valid() {
                prop_assert!(algebra_valid(alg, &g).unwrap().is_valid());
            }
        }
    }
}

#[test]
fn bundled_goals_hold_on_the_catalogs() {
    use ccpba_core::proofs::io::{parse_proof, ProofFile};
    use ccpba_core::proofs::library::{fixtures, Expect};
    for fx in fixtures().into_iter().filter(|f| f.expect == Expect::Accept) {
        match parse_proof(&fx.text).unwrap() {
            ProofFile::Hilbert { script, .. } => {
                for alg in ccp() {
                    assert!(algebra_valid(alg, script.goal()).unwrap().is_valid(), "{}", fx.file);
                }
            }
            ProofFile::Sequent { system, derivation } => {
                let derived = check_sequent_derivation(system, &derivation).unwrap();
                if !derived.hypotheses.is_empty() {
                    continue;
                }
                let s = derivation.conclusion();
                for alg in kims() {
                    assert!(sequent_valid(alg, &s.lhs, &s.rhs).unwrap().is_valid(), "{}", fx.file);
                }
            }
        }
    }
}
