//! Truth at worlds and frame validity by exhausting upset valuations.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{bit, members, CompatFrame, Frame, NhatFrame, Poset, SubNormalFrame, World, WorldSet};
use crate::algebra::eval::Verdict;
use crate::formula::{Formula, Program, Semantics};

/// Assignment of atoms to upsets.
pub type FrameValuation = BTreeMap<String, WorldSet>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FrameEvalError {
    #[error("atom `{0}` has no value")]
    UnboundAtom(String),
    #[error("the value of `{0}` is not an upset")]
    NotAnUpset(String),
    #[error("`->` is not interpreted in compatibility frames")]
    WrongLanguage,
    #[error("frame has {actual} worlds; the limit is {limit}")]
    TooManyWorlds { limit: usize, actual: usize },
    #[error("formula has {actual} atoms; the limit is {limit}")]
    TooManyAtoms { limit: usize, actual: usize },
}

/// A frame read as a model structure: how `!` and `~` act on upsets.
pub trait Relational: Sync {
    fn poset(&self) -> &Poset;
    fn neg_set(&self, a: WorldSet) -> WorldSet;
    fn tilde_set(&self, a: WorldSet) -> WorldSet;
    fn has_implication(&self) -> bool {
        true
    }

    /// `{x : every y >= x in a is in b}`.
    fn imp_set(&self, a: WorldSet, b: WorldSet) -> WorldSet {
        let p = self.poset();
        p.worlds().filter(|&x| p.up(x) & a & !b == 0).fold(0, |s, x| s | bit(x))
    }
}

/// `{x : rel(x) misses a}`.
fn box_not(p: &Poset, rel: impl Fn(World) -> WorldSet, a: WorldSet) -> WorldSet {
    p.worlds().filter(|&x| rel(x) & a == 0).fold(0, |s, x| s | bit(x))
}

impl Relational for SubNormalFrame {
    fn poset(&self) -> &Poset {
        SubNormalFrame::poset(self)
    }
    fn neg_set(&self, a: WorldSet) -> WorldSet {
        box_not(&self.poset, |x| self.poset.up(x), a)
    }
    fn tilde_set(&self, a: WorldSet) -> WorldSet {
        self.imp_set(a, self.y0)
    }
}

impl Relational for NhatFrame {
    fn poset(&self) -> &Poset {
        NhatFrame::poset(self)
    }
    fn neg_set(&self, a: WorldSet) -> WorldSet {
        box_not(&self.poset, |x| self.rn1[x], a)
    }
    fn tilde_set(&self, a: WorldSet) -> WorldSet {
        box_not(&self.poset, |x| self.rn2[x], a)
    }
}

impl Relational for CompatFrame {
    fn poset(&self) -> &Poset {
        CompatFrame::poset(self)
    }
    fn neg_set(&self, a: WorldSet) -> WorldSet {
        box_not(&self.poset, |x| self.poset.up(x), a)
    }
    fn tilde_set(&self, a: WorldSet) -> WorldSet {
        box_not(&self.poset, |x| self.c[x], a)
    }
    fn has_implication(&self) -> bool {
        false
    }
}

impl Relational for Frame {
    fn poset(&self) -> &Poset {
        Frame::poset(self)
    }
    fn neg_set(&self, a: WorldSet) -> WorldSet {
        match self {
            Frame::SubNormal(f) => f.neg_set(a),
            Frame::Nhat(f) => f.neg_set(a),
            Frame::Compat(f) => f.neg_set(a),
        }
    }
    fn tilde_set(&self, a: WorldSet) -> WorldSet {
        match self {
            Frame::SubNormal(f) => f.tilde_set(a),
            Frame::Nhat(f) => f.tilde_set(a),
            Frame::Compat(f) => f.tilde_set(a),
        }
    }
    fn has_implication(&self) -> bool {
        !matches!(self, Frame::Compat(_))
    }
}

struct Sem<'a, R: ?Sized>(&'a R);

impl<R: Relational + ?Sized> Semantics for Sem<'_, R> {
    type Value = WorldSet;
    fn top(&self) -> WorldSet {
        self.0.poset().all()
    }
    fn bot(&self) -> WorldSet {
        0
    }
    fn and(&self, a: WorldSet, b: WorldSet) -> WorldSet {
        a & b
    }
    fn or(&self, a: WorldSet, b: WorldSet) -> WorldSet {
        a | b
    }
    fn imp(&self, a: WorldSet, b: WorldSet) -> WorldSet {
        self.0.imp_set(a, b)
    }
    fn neg(&self, a: WorldSet) -> WorldSet {
        self.0.neg_set(a)
    }
    fn tilde(&self, a: WorldSet) -> WorldSet {
        self.0.tilde_set(a)
    }
}

fn check_language<R: Relational + ?Sized>(fr: &R, fs: &[&Formula]) -> Result<(), FrameEvalError> {
    if !fr.has_implication() && fs.iter().any(|f| !f.is_implication_free()) {
        return Err(FrameEvalError::WrongLanguage);
    }
    Ok(())
}

/// A frame with a checked valuation.
#[derive(Clone, Debug)]
pub struct FrameModel<'a, R: ?Sized> {
    frame: &'a R,
    valuation: FrameValuation,
}

impl<'a, R: Relational + ?Sized> FrameModel<'a, R> {
    pub fn new(frame: &'a R, valuation: FrameValuation) -> Result<Self, FrameEvalError> {
        for (atom, &s) in &valuation {
            if s & !frame.poset().all() != 0 || !frame.poset().is_upset(s) {
                return Err(FrameEvalError::NotAnUpset(atom.clone()));
            }
        }
        Ok(FrameModel { frame, valuation })
    }

    pub fn valuation(&self) -> &FrameValuation {
        &self.valuation
    }

    /// The set of worlds where `f` holds.
    pub fn truth_set(&self, f: &Formula) -> Result<WorldSet, FrameEvalError> {
        check_language(self.frame, &[f])?;
        let prog = Program::compile(&[f]);
        let vars = prog
            .atoms()
            .iter()
            .map(|a| self.valuation.get(a).copied().ok_or_else(|| FrameEvalError::UnboundAtom(a.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Vec::new();
        prog.eval(&Sem(self.frame), &vars, &mut out);
        Ok(out[prog.roots()[0]])
    }

    pub fn truth(&self, w: World, f: &Formula) -> Result<bool, FrameEvalError> {
        Ok(self.truth_set(f)? & bit(w) != 0)
    }
}

/// Search limits for validity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrameBounds {
    pub max_worlds: usize,
    pub max_atoms: usize,
}

impl Default for FrameBounds {
    fn default() -> Self {
        FrameBounds { max_worlds: 10, max_atoms: 3 }
    }
}

impl FrameBounds {
    pub const UNBOUNDED: FrameBounds = FrameBounds { max_worlds: usize::MAX, max_atoms: usize::MAX };

    fn check(&self, worlds: usize, atoms: usize) -> Result<(), FrameEvalError> {
        if worlds > self.max_worlds {
            return Err(FrameEvalError::TooManyWorlds { limit: self.max_worlds, actual: worlds });
        }
        if atoms > self.max_atoms {
            return Err(FrameEvalError::TooManyAtoms { limit: self.max_atoms, actual: atoms });
        }
        Ok(())
    }
}

/// A falsifying valuation and the first world where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameWitness {
    pub valuation: FrameValuation,
    pub world: World,
}

impl FrameWitness {
    pub fn render(&self, p: &Poset) -> String {
        let mut parts: Vec<String> = self
            .valuation
            .iter()
            .map(|(a, &s)| format!("{a}={{{}}}", p.set_names(s).join(",")))
            .collect();
        parts.push(format!("world={}", p.name(self.world)));
        parts.join(" ")
    }
}

/// Tries valuations in canonical order (first atom most significant, upsets
/// by cardinality then member list); `bad` maps node values to the set of
/// failing worlds.
fn search<R: Relational + ?Sized>(
    fr: &R,
    prog: &Program,
    bad: impl Fn(&[WorldSet]) -> WorldSet,
) -> Option<FrameWitness> {
    let ups = fr.poset().upsets();
    let k = prog.atoms().len();
    let mut idx = vec![0usize; k];
    let mut vars = vec![ups[0]; k];
    let mut out = Vec::with_capacity(64);
    let sem = Sem(fr);
    loop {
        prog.eval(&sem, &vars, &mut out);
        let failing = bad(&out);
        if failing != 0 {
            let valuation = prog.atoms().iter().cloned().zip(vars.iter().copied()).collect();
            return Some(FrameWitness { valuation, world: failing.trailing_zeros() as World });
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < ups.len() {
                vars[i] = ups[idx[i]];
                break;
            }
            idx[i] = 0;
            vars[i] = ups[0];
        }
    }
}

pub fn frame_valid<R: Relational + ?Sized>(
    fr: &R,
    f: &Formula,
    bounds: FrameBounds,
) -> Result<Verdict<FrameWitness>, FrameEvalError> {
    check_language(fr, &[f])?;
    let prog = Program::compile(&[f]);
    bounds.check(fr.poset().size(), prog.atoms().len())?;
    let root = prog.roots()[0];
    let all = fr.poset().all();
    Ok(match search(fr, &prog, |v| all & !v[root]) {
        None => Verdict::Valid,
        Some(w) => Verdict::Falsified(w),
    })
}

/// `lhs` entails `rhs` at every world of every model.
pub fn frame_sequent_valid<R: Relational + ?Sized>(
    fr: &R,
    lhs: &Formula,
    rhs: &Formula,
    bounds: FrameBounds,
) -> Result<Verdict<FrameWitness>, FrameEvalError> {
    check_language(fr, &[lhs, rhs])?;
    let prog = Program::compile(&[lhs, rhs]);
    bounds.check(fr.poset().size(), prog.atoms().len())?;
    let (l, r) = (prog.roots()[0], prog.roots()[1]);
    Ok(match search(fr, &prog, |v| v[l] & !v[r]) {
        None => Verdict::Valid,
        Some(w) => Verdict::Falsified(w),
    })
}

/// Worlds where `~top` holds; no valuation needed.
pub fn tilde_top_set<R: Relational + ?Sized>(fr: &R) -> WorldSet {
    fr.tilde_set(fr.poset().all())
}

/// Valuation-free check of `!!~top <-> ~top`.
pub fn dne_tilde_top_holds<R: Relational + ?Sized>(fr: &R) -> bool {
    let t = tilde_top_set(fr);
    fr.neg_set(fr.neg_set(t)) == t
}

/// Lists the members of `s` by name.
pub fn describe(p: &Poset, s: WorldSet) -> String {
    format!("{{{}}}", members(s).map(|w| p.name(w)).collect::<Vec<_>>().join(","))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::three_world;
    use super::*;
    use crate::formula::parse;

    fn val(pairs: &[(&str, WorldSet)]) -> FrameValuation {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn tilde_p_fails_at_w0() {
        let f = three_world();
        let m = FrameModel::new(&f, val(&[("p", 0b010)])).unwrap();
        assert!(!m.truth(0, &parse("~p").unwrap()).unwrap());
        assert_eq!(m.truth_set(&parse("~top").unwrap()).unwrap(), f.y0());
        assert_eq!(m.truth_set(&parse("bot").unwrap()).unwrap(), 0);
    }

    #[test]
    fn excluded_middle_witness() {
        let f = three_world();
        let v = frame_valid(&f, &parse("p | ~p").unwrap(), FrameBounds::default()).unwrap();
        assert_eq!(v, Verdict::Falsified(FrameWitness { valuation: val(&[("p", 0b010)]), world: 0 }));
        assert_eq!(v.witness().unwrap().render(f.poset()), "p={w1} world=w0");
    }

    #[test]
    fn valuations_must_be_upsets() {
        let f = three_world();
        assert_eq!(
            FrameModel::new(&f, val(&[("p", 0b001)])).unwrap_err(),
            FrameEvalError::NotAnUpset("p".into())
        );
    }

    #[test]
    fn compat_sequents_and_language() {
        let c = CompatFrame::build(&["w0", "w1"], &[("w0", "w1")], &[("w0", "w0")]).unwrap();
        let lhs = parse("!!~top").unwrap();
        let rhs = parse("~top").unwrap();
        let v = frame_sequent_valid(&c, &lhs, &rhs, FrameBounds::default()).unwrap();
        assert_eq!(v.witness().unwrap().world, 0);
        assert!(!dne_tilde_top_holds(&c));
        assert!(frame_sequent_valid(&c, &parse("bot").unwrap(), &parse("p").unwrap(), FrameBounds::default())
            .unwrap()
            .is_valid());
        assert_eq!(
            frame_valid(&c, &parse("p -> p").unwrap(), FrameBounds::default()),
            Err(FrameEvalError::WrongLanguage)
        );
    }

    #[test]
    fn bounds_are_enforced() {
        let f = three_world();
        let e = frame_valid(&f, &parse("p | q | r | s").unwrap(), FrameBounds::default()).unwrap_err();
        assert_eq!(e, FrameEvalError::TooManyAtoms { limit: 3, actual: 4 });
    }
}
