//! Bounded countermodel search over the enumerated catalogs.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use thiserror::Error;

use super::{HilbertSystem, SequentSystem};
use crate::algebra::enumerate::{enumerate_exact, AlgebraClass, CatalogEntry, EnumerateError, EnumerateOptions};
use crate::algebra::eval::{algebra_valid, sequent_valid, EvalError, Interpretation, Valuation, Verdict};
use crate::formula::{Formula, Sequent};

/// Largest catalog size the search will scan.
pub const MAX_SEARCH_SIZE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum System {
    Hilbert(HilbertSystem),
    Sequent(SequentSystem),
}

impl System {
    /// The algebra class the system is complete for.
    pub fn class(self) -> AlgebraClass {
        match self {
            System::Hilbert(HilbertSystem::IlmVee) => AlgebraClass::Cvcpba,
            System::Hilbert(_) => AlgebraClass::Ccpba,
            System::Sequent(SequentSystem::KimVee) => AlgebraClass::KimVee,
            System::Sequent(_) => AlgebraClass::Kim,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            System::Hilbert(h) => h.id(),
            System::Sequent(s) => s.id(),
        }
    }
}

impl std::str::FromStr for System {
    type Err = super::UnknownSystem;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse()
            .map(System::Hilbert)
            .or_else(|_| s.parse().map(System::Sequent))
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Goal {
    Formula(Formula),
    Sequent(Sequent),
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Formula(x) => write!(f, "{x}"),
            Goal::Sequent(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("size {requested} exceeds the search guard of {guard}")]
    BoundTooLarge { requested: usize, guard: usize },
    #[error("goal is outside the language of {0}")]
    WrongLanguage(System),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl From<EnumerateError> for SearchError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::BoundTooLarge { requested, guard } => SearchError::BoundTooLarge { requested, guard },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Countermodel {
    pub size: usize,
    /// Position within the canonical list of algebras of this size.
    pub position: usize,
    pub model: CatalogEntry,
    pub valuation: Valuation,
}

impl Countermodel {
    /// `p=a, q=0` style rendering with element names.
    pub fn render_valuation(&self) -> String {
        let lat = self.model.lattice();
        self.valuation.iter().map(|(k, &v)| format!("{k}={}", lat.name(v))).collect::<Vec<_>>().join(", ")
    }
}

/// Rewrites a goal into the system's language (ILM2 expands `!`), or
/// rejects it.
fn normalize(system: System, goal: &Goal) -> Result<Goal, SearchError> {
    let wrong = || SearchError::WrongLanguage(system);
    let f = |x: &Formula| -> Result<Formula, SearchError> {
        match system {
            System::Hilbert(h) => h.normalize(x).ok_or_else(wrong),
            System::Sequent(_) if x.is_implication_free() => Ok(x.clone()),
            System::Sequent(_) => Err(wrong()),
        }
    };
    Ok(match goal {
        Goal::Formula(x) => Goal::Formula(f(x)?),
        Goal::Sequent(s) => Goal::Sequent(Sequent::new(f(&s.lhs)?, f(&s.rhs)?)),
    })
}

fn refute<I: Interpretation>(alg: &I, goal: &Goal) -> Result<Option<Valuation>, EvalError> {
    let v = match goal {
        Goal::Formula(f) if alg.has_implication() => algebra_valid(alg, f)?,
        // Without implication a formula goal is read as `top |- f`.
        Goal::Formula(f) => sequent_valid(alg, &Formula::Top, f)?,
        Goal::Sequent(s) => sequent_valid(alg, &s.lhs, &s.rhs)?,
    };
    Ok(match v {
        Verdict::Valid => None,
        Verdict::Falsified(w) => Some(w),
    })
}

fn refute_entry(entry: &CatalogEntry, goal: &Goal) -> Result<Option<Valuation>, EvalError> {
    match entry {
        CatalogEntry::Ccp(a) => refute(a, goal),
        CatalogEntry::Kim(k) => refute(k, goal),
        CatalogEntry::Pba(_) => unreachable!("no proof system uses pseudo-Boolean catalogs"),
    }
}

/// Scans the system's catalog size by size, in canonical order, and returns
/// the first falsifying algebra and valuation. Sizes below 2 are skipped.
pub fn countermodel_search(
    system: System,
    goal: &Goal,
    sizes: RangeInclusive<usize>,
) -> Result<Option<Countermodel>, SearchError> {
    countermodel_search_with_guard(system, goal, sizes, MAX_SEARCH_SIZE)
}

/// [`countermodel_search`] with a caller-chosen size guard.
pub fn countermodel_search_with_guard(
    system: System,
    goal: &Goal,
    sizes: RangeInclusive<usize>,
    guard: usize,
) -> Result<Option<Countermodel>, SearchError> {
    if *sizes.end() > guard {
        return Err(SearchError::BoundTooLarge { requested: *sizes.end(), guard });
    }
    let goal = normalize(system, goal)?;
    let opts = EnumerateOptions { allow_trivial: false, max_size_guard: guard };
    for size in (*sizes.start()).max(2)..=*sizes.end() {
        let catalog = enumerate_exact(system.class(), size, &opts)?;
        let hit = catalog
            .par_iter()
            .enumerate()
            .map(|(i, e)| refute_entry(e, &goal).map(|w| w.map(|w| (i, w))))
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            });
        match hit {
            Some(Err(e)) => return Err(e.into()),
            Some(Ok(Some((position, valuation)))) => {
                let model = catalog.into_iter().nth(position).expect("index from the same list");
                return Ok(Some(Countermodel { size, position, model, valuation }));
            }
            _ => {}
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn ilm(f: &str) -> Goal {
        Goal::Formula(parse(f).unwrap())
    }

    #[test]
    fn excluded_middle_in_ilm() {
        let cm = countermodel_search(System::Hilbert(HilbertSystem::Ilm), &ilm("p | ~p"), 2..=3).unwrap().unwrap();
        assert_eq!(cm.size, 3);
        let CatalogEntry::Ccp(a) = &cm.model else { panic!() };
        assert_eq!(a.tilde_one(), a.lattice().bottom());
        assert_eq!(cm.valuation.len(), 1);
        let v = cm.valuation["p"];
        assert!(v != a.lattice().top() && v != a.lattice().bottom());
    }

    #[test]
    fn excluded_middle_in_ilm_vee() {
        let r = countermodel_search(System::Hilbert(HilbertSystem::IlmVee), &ilm("p | ~p"), 2..=6).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn bot_versus_tilde_top() {
        let sys = System::Hilbert(HilbertSystem::Ilm);
        let small = countermodel_search(sys, &ilm("bot <-> ~top"), 2..=3).unwrap().unwrap();
        assert_eq!(small.size, 2);
        let cm = countermodel_search(sys, &ilm("bot <-> ~top"), 3..=3).unwrap().unwrap();
        let CatalogEntry::Ccp(a) = &cm.model else { panic!() };
        assert_eq!(a.tilde_one(), a.lattice().top());
        assert!(cm.valuation.is_empty());
    }

    #[test]
    fn language_and_guard() {
        let jp = System::Hilbert(HilbertSystem::JpPrime);
        assert_eq!(countermodel_search(jp, &ilm("bot -> p"), 2..=3), Err(SearchError::WrongLanguage(jp)));
        let kim = System::Sequent(SequentSystem::Kim);
        assert_eq!(countermodel_search(kim, &ilm("p -> p"), 2..=3), Err(SearchError::WrongLanguage(kim)));
        assert!(matches!(
            countermodel_search(kim, &ilm("p"), 2..=9),
            Err(SearchError::BoundTooLarge { requested: 9, .. })
        ));
    }

    #[test]
    fn double_tilde_elimination_fails_in_kim() {
        let kim = System::Sequent(SequentSystem::Kim);
        let g = Goal::Sequent(Sequent::parse("~~p |- p").unwrap());
        let cm = countermodel_search(kim, &g, 3..=3).unwrap().unwrap();
        assert_eq!(cm.size, 3);
    }
}
