//! Relational frames: sub-normal `(W, <=, Y0)`, N-hat `(W, <=, R1, R2)` and
//! compatibility `(W, C, <=)` frames.
//!
//! Worlds are indices into a declared list (at most 64); sets of worlds and
//! relation rows are `u64` bitmasks.

pub mod io;
pub mod truth;

use std::fmt;

use thiserror::Error;

pub type World = usize;
pub type WorldSet = u64;

pub const MAX_WORLDS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("world `{0}` declared twice")]
    DuplicateWorld(String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("no worlds declared")]
    Empty,
    #[error("{0} worlds exceed the limit of {MAX_WORLDS}")]
    TooManyWorlds(usize),
    #[error("order has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("Y0 is not an upset: `{0}` is in Y0 but `{1}` above it is not")]
    Y0NotUpset(String, String),
    #[error("condition {condition} fails at ({})", witness.join(", "))]
    ConditionViolation { condition: &'static str, witness: Vec<String> },
}

pub fn bit(w: World) -> WorldSet {
    1u64 << w
}

pub fn members(s: WorldSet) -> impl Iterator<Item = World> {
    (0..MAX_WORLDS).filter(move |&w| s & bit(w) != 0)
}

/// A finite partial order on named worlds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<WorldSet>,
    down: Vec<WorldSet>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of `pairs` (`(a, b)` meaning `a <= b`).
    pub fn build<S: AsRef<str>>(names: &[S], pairs: &[(S, S)]) -> Result<Poset, FrameError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut rel = vec![0u64; names.len()];
        let n = names.len();
        if n > MAX_WORLDS {
            return Err(FrameError::TooManyWorlds(n));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(FrameError::DuplicateWorld(name.clone()));
            }
        }
        let find = |s: &str| {
            names.iter().position(|m| m == s).ok_or_else(|| FrameError::UnknownWorld(s.to_string()))
        };
        for (a, b) in pairs {
            rel[find(a.as_ref())?] |= bit(find(b.as_ref())?);
        }
        Poset::from_relation(names, rel)
    }

    /// Closes `rel` (successor sets) reflexively and transitively.
    pub fn from_relation(names: Vec<String>, mut rel: Vec<WorldSet>) -> Result<Poset, FrameError> {
        let n = names.len();
        if n == 0 {
            return Err(FrameError::Empty);
        }
        if n > MAX_WORLDS {
            return Err(FrameError::TooManyWorlds(n));
        }
        for (w, r) in rel.iter_mut().enumerate() {
            *r |= bit(w);
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i] & bit(k) != 0 {
                    rel[i] |= rel[k];
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rel[i] & bit(j) != 0 && rel[j] & bit(i) != 0 {
                    return Err(FrameError::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        let down = (0..n)
            .map(|w| (0..n).filter(|&v| rel[v] & bit(w) != 0).fold(0, |s, v| s | bit(v)))
            .collect();
        Ok(Poset { names, up: rel, down })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn worlds(&self) -> std::ops::Range<World> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, w: World) -> &str {
        &self.names[w]
    }

    pub fn index(&self, name: &str) -> Option<World> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all(&self) -> WorldSet {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    pub fn leq(&self, a: World, b: World) -> bool {
        self.up[a] & bit(b) != 0
    }

    /// Worlds above `w`, including `w`.
    pub fn up(&self, w: World) -> WorldSet {
        self.up[w]
    }

    /// Worlds below `w`, including `w`.
    pub fn down(&self, w: World) -> WorldSet {
        self.down[w]
    }

    pub fn is_upset(&self, s: WorldSet) -> bool {
        members(s).all(|w| self.up[w] & !s == 0)
    }

    /// Smallest upset containing `s`.
    pub fn up_closure(&self, s: WorldSet) -> WorldSet {
        members(s).fold(0, |acc, w| acc | self.up[w])
    }

    /// Every upset, ordered by cardinality and then by the sorted list of
    /// member indices.
    pub fn upsets(&self) -> Vec<WorldSet> {
        // Visit worlds so that everything above a world comes before it; a
        // world may join only if its whole up-set already has.
        let mut order: Vec<World> = self.worlds().collect();
        order.sort_by_key(|&w| std::cmp::Reverse(self.down[w].count_ones()));
        order.sort_by_key(|&w| self.up[w].count_ones());
        let mut out = Vec::new();
        fn go(p: &Poset, order: &[World], i: usize, cur: WorldSet, out: &mut Vec<WorldSet>) {
            if i == order.len() {
                out.push(cur);
                return;
            }
            let w = order[i];
            go(p, order, i + 1, cur, out);
            if p.up[w] & !bit(w) & !cur == 0 {
                go(p, order, i + 1, cur | bit(w), out);
            }
        }
        go(self, &order, 0, 0, &mut out);
        out.sort_by_key(|&s| (s.count_ones(), members(s).collect::<Vec<_>>()));
        out
    }

    /// Covering pairs `(a, b)`.
    pub fn covers(&self) -> Vec<(World, World)> {
        let mut out = Vec::new();
        for a in self.worlds() {
            for b in self.worlds() {
                if a != b && self.leq(a, b) {
                    let between = self.up[a] & self.down[b] & !bit(a) & !bit(b);
                    if between == 0 {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    pub fn set_names(&self, s: WorldSet) -> Vec<String> {
        members(s).map(|w| self.names[w].clone()).collect()
    }

    /// Parses world names into a set.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<WorldSet, FrameError> {
        names.iter().try_fold(0, |acc, n| {
            let w = self.index(n.as_ref()).ok_or_else(|| FrameError::UnknownWorld(n.as_ref().to_string()))?;
            Ok(acc | bit(w))
        })
    }

    /// Successor-set table from pairs of world names.
    pub fn relation_of<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<Vec<WorldSet>, FrameError> {
        let mut rel = vec![0; self.size()];
        for (a, b) in pairs {
            let ia = self.index(a.as_ref()).ok_or_else(|| FrameError::UnknownWorld(a.as_ref().to_string()))?;
            let ib = self.index(b.as_ref()).ok_or_else(|| FrameError::UnknownWorld(b.as_ref().to_string()))?;
            rel[ia] |= bit(ib);
        }
        Ok(rel)
    }
}

/// A failed frame condition with its witness worlds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    pub worlds: Vec<World>,
}

impl Violation {
    fn new(condition: &'static str, worlds: Vec<World>) -> Violation {
        Violation { condition, worlds }
    }

    pub fn into_error(self, p: &Poset) -> FrameError {
        FrameError::ConditionViolation {
            condition: self.condition,
            witness: self.worlds.iter().map(|&w| p.name(w).to_string()).collect(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.condition, self.worlds)
    }
}

/// `(C)`: `x' <= x`, `y' <= y` and `x R y` imply `x' R y'`.
pub fn down_closure_failure(p: &Poset, rel: &[WorldSet]) -> Option<Violation> {
    for x in p.worlds() {
        for y in members(rel[x]) {
            for x2 in members(p.down(x)) {
                let missing = p.down(y) & !rel[x2];
                if missing != 0 {
                    let y2 = missing.trailing_zeros() as World;
                    return Some(Violation::new("(C) downward closure", vec![x, y, x2, y2]));
                }
            }
        }
    }
    None
}

pub fn symmetry_failure(p: &Poset, rel: &[WorldSet]) -> Option<Violation> {
    for x in p.worlds() {
        for y in members(rel[x]) {
            if rel[y] & bit(x) == 0 {
                return Some(Violation::new("symmetry", vec![x, y]));
            }
        }
    }
    None
}

pub fn reflexivity_failure(p: &Poset, rel: &[WorldSet]) -> Option<Violation> {
    p.worlds().find(|&x| rel[x] & bit(x) == 0).map(|x| Violation::new("reflexivity", vec![x]))
}

/// `x R y` implies some `z` above both with `x R z`.
pub fn joint_upper_failure(p: &Poset, rel: &[WorldSet]) -> Option<Violation> {
    for x in p.worlds() {
        for y in members(rel[x]) {
            if p.up(x) & p.up(y) & rel[x] == 0 {
                return Some(Violation::new("(2) common extension", vec![x, y]));
            }
        }
    }
    None
}

/// Worlds without successors under `rel`.
pub fn dead_ends(p: &Poset, rel: &[WorldSet]) -> WorldSet {
    p.worlds().filter(|&x| rel[x] == 0).fold(0, |s, x| s | bit(x))
}

/// `R <= >=`: `x R y` implies `y <= x`.
pub fn identity_failure(p: &Poset, rel: &[WorldSet]) -> Option<Violation> {
    for x in p.worlds() {
        let outside = rel[x] & !p.down(x);
        if outside != 0 {
            return Some(Violation::new("identity (R within >=)", vec![x, outside.trailing_zeros() as World]));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameKind {
    SubNormal,
    Nhat,
    Compat,
}

impl FrameKind {
    pub fn keyword(self) -> &'static str {
        match self {
            FrameKind::SubNormal => "subnormal",
            FrameKind::Nhat => "nhat",
            FrameKind::Compat => "compat",
        }
    }
}

/// A sub-normal frame. `Y0` is an upset; condition (D) holds unless the
/// frame was made with [`SubNormalFrame::candidate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubNormalFrame {
    poset: Poset,
    y0: WorldSet,
}

impl SubNormalFrame {
    pub fn new(poset: Poset, y0: WorldSet) -> Result<Self, FrameError> {
        let f = Self::candidate(poset, y0)?;
        if let Some(v) = f.condition_d_failure() {
            return Err(v.into_error(&f.poset));
        }
        Ok(f)
    }

    /// Checks only that `y0` is an upset.
    pub fn candidate(poset: Poset, y0: WorldSet) -> Result<Self, FrameError> {
        if y0 & !poset.all() != 0 {
            return Err(FrameError::UnknownWorld(format!("#{}", y0.trailing_zeros())));
        }
        for w in members(y0) {
            let escape = poset.up(w) & !y0;
            if escape != 0 {
                let v = escape.trailing_zeros() as World;
                return Err(FrameError::Y0NotUpset(poset.name(w).into(), poset.name(v).into()));
            }
        }
        Ok(SubNormalFrame { poset, y0 })
    }

    pub fn build<S: AsRef<str>>(names: &[S], pairs: &[(S, S)], y0: &[S]) -> Result<Self, FrameError> {
        let poset = Poset::build(names, pairs)?;
        let y0 = poset.set_of(y0)?;
        Self::new(poset, y0)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn y0(&self) -> WorldSet {
        self.y0
    }

    /// `(D)`: if every world above `x` sees `Y0` above it, then `x` is in `Y0`.
    pub fn condition_d_failure(&self) -> Option<Violation> {
        let p = &self.poset;
        p.worlds()
            .find(|&x| {
                self.y0 & bit(x) == 0 && members(p.up(x)).all(|y| p.up(y) & self.y0 != 0)
            })
            .map(|x| Violation::new("(D)", vec![x]))
    }

    /// `(E)`: `<=` is the identity outside `Y0`.
    pub fn condition_e_failure(&self) -> Option<Violation> {
        let p = &self.poset;
        for x in members(p.all() & !self.y0) {
            for y in members(p.up(x) & !self.y0) {
                if x != y {
                    return Some(Violation::new("(E)", vec![x, y]));
                }
            }
        }
        None
    }

    pub fn is_identity(&self) -> bool {
        self.condition_e_failure().is_none()
    }

    pub fn conditions(&self) -> Vec<(&'static str, Option<Violation>)> {
        vec![("(D)", self.condition_d_failure()), ("(E) identity", self.condition_e_failure())]
    }
}

/// An N-hat frame: `R1` interprets `!`, `R2` interprets `~`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NhatFrame {
    poset: Poset,
    rn1: Vec<WorldSet>,
    rn2: Vec<WorldSet>,
}

impl NhatFrame {
    pub fn new(poset: Poset, rn1: Vec<WorldSet>, rn2: Vec<WorldSet>) -> Result<Self, FrameError> {
        let f = Self::candidate(poset, rn1, rn2)?;
        if let Some(v) = f.structural_failure().or_else(|| f.condition_3_failure()) {
            return Err(v.into_error(&f.poset));
        }
        Ok(f)
    }

    /// Checks only that the relations fit the world list.
    pub fn candidate(poset: Poset, rn1: Vec<WorldSet>, rn2: Vec<WorldSet>) -> Result<Self, FrameError> {
        for r in [&rn1, &rn2] {
            if r.len() != poset.size() || r.iter().any(|&s| s & !poset.all() != 0) {
                return Err(FrameError::UnknownWorld("relation out of range".into()));
            }
        }
        Ok(NhatFrame { poset, rn1, rn2 })
    }

    pub fn build<S: AsRef<str>>(
        names: &[S],
        pairs: &[(S, S)],
        rn1: &[(S, S)],
        rn2: &[(S, S)],
    ) -> Result<Self, FrameError> {
        let poset = Poset::build(names, pairs)?;
        let r1 = poset.relation_of(rn1)?;
        let r2 = poset.relation_of(rn2)?;
        Self::new(poset, r1, r2)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn rn1(&self) -> &[WorldSet] {
        &self.rn1
    }

    pub fn rn2(&self) -> &[WorldSet] {
        &self.rn2
    }

    /// Conditions on `R1` (strictly condensed H-frame) and `R2` (J-frame).
    pub fn structural_failure(&self) -> Option<Violation> {
        let p = &self.poset;
        let tag = |name: &'static str| move |mut v: Violation| {
            v.condition = name;
            v
        };
        down_closure_failure(p, &self.rn1)
            .map(tag("R1 (C) downward closure"))
            .or_else(|| symmetry_failure(p, &self.rn1).map(tag("R1 symmetry")))
            .or_else(|| reflexivity_failure(p, &self.rn1).map(tag("R1 reflexivity")))
            .or_else(|| joint_upper_failure(p, &self.rn1).map(tag("R1 common extension")))
            .or_else(|| self.rn2_structural_failure())
    }

    pub fn rn2_structural_failure(&self) -> Option<Violation> {
        let p = &self.poset;
        let tag = |name: &'static str| move |mut v: Violation| {
            v.condition = name;
            v
        };
        down_closure_failure(p, &self.rn2)
            .map(tag("R2 (C) downward closure"))
            .or_else(|| symmetry_failure(p, &self.rn2).map(tag("R2 symmetry")))
            .or_else(|| joint_upper_failure(p, &self.rn2).map(tag("R2 common extension")))
    }

    /// Condition (3): if every `R1`-successor of `x` sees an `R2`-dead end
    /// through `R1`, then `x` is an `R2`-dead end.
    pub fn condition_3_failure(&self) -> Option<Violation> {
        let dead = dead_ends(&self.poset, &self.rn2);
        self.poset
            .worlds()
            .find(|&x| {
                self.rn2[x] != 0 && members(self.rn1[x]).all(|y| self.rn1[y] & dead != 0)
            })
            .map(|x| Violation::new("(3)", vec![x]))
    }

    pub fn nhat_prime_failure(&self) -> Option<Violation> {
        identity_failure(&self.poset, &self.rn2).map(|mut v| {
            v.condition = "N-hat-prime (R2 within >=)";
            v
        })
    }

    pub fn is_nhat_prime(&self) -> bool {
        self.nhat_prime_failure().is_none()
    }

    pub fn conditions(&self) -> Vec<(&'static str, Option<Violation>)> {
        vec![
            ("frame conditions", self.structural_failure()),
            ("(3)", self.condition_3_failure()),
            ("N-hat-prime", self.nhat_prime_failure()),
        ]
    }
}

/// A compatibility frame; `~` is read through `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatFrame {
    poset: Poset,
    c: Vec<WorldSet>,
}

impl CompatFrame {
    /// Requires the downward-closure law (C).
    pub fn new(poset: Poset, c: Vec<WorldSet>) -> Result<Self, FrameError> {
        let f = Self::candidate(poset, c)?;
        if let Some(v) = down_closure_failure(&f.poset, &f.c) {
            return Err(v.into_error(&f.poset));
        }
        Ok(f)
    }

    pub fn candidate(poset: Poset, c: Vec<WorldSet>) -> Result<Self, FrameError> {
        if c.len() != poset.size() || c.iter().any(|&s| s & !poset.all() != 0) {
            return Err(FrameError::UnknownWorld("relation out of range".into()));
        }
        Ok(CompatFrame { poset, c })
    }

    pub fn build<S: AsRef<str>>(names: &[S], pairs: &[(S, S)], c: &[(S, S)]) -> Result<Self, FrameError> {
        let poset = Poset::build(names, pairs)?;
        let rel = poset.relation_of(c)?;
        Self::new(poset, rel)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn c(&self) -> &[WorldSet] {
        &self.c
    }

    /// Sub-compatibility conditions (1) and (2).
    pub fn subcompat_12_failure(&self) -> Option<Violation> {
        symmetry_failure(&self.poset, &self.c)
            .map(|mut v| {
                v.condition = "(1) symmetry";
                v
            })
            .or_else(|| joint_upper_failure(&self.poset, &self.c))
    }

    /// Condition (3): if every world above `x` sees a `C`-dead end above it,
    /// then `x` is a `C`-dead end.
    pub fn condition_3_failure(&self) -> Option<Violation> {
        let p = &self.poset;
        let dead = dead_ends(p, &self.c);
        p.worlds()
            .find(|&x| self.c[x] != 0 && members(p.up(x)).all(|y| p.up(y) & dead != 0))
            .map(|x| Violation::new("(3)", vec![x]))
    }

    pub fn subcompat_failure(&self) -> Option<Violation> {
        self.subcompat_12_failure().or_else(|| self.condition_3_failure())
    }

    pub fn is_subcompat(&self) -> bool {
        self.subcompat_failure().is_none()
    }

    pub fn identity_failure(&self) -> Option<Violation> {
        identity_failure(&self.poset, &self.c)
    }

    pub fn is_identity(&self) -> bool {
        self.identity_failure().is_none()
    }

    pub fn conditions(&self) -> Vec<(&'static str, Option<Violation>)> {
        vec![
            ("(C)", down_closure_failure(&self.poset, &self.c)),
            ("subcompat", self.subcompat_failure()),
            ("identity", self.identity_failure()),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Frame {
    SubNormal(SubNormalFrame),
    Nhat(NhatFrame),
    Compat(CompatFrame),
}

impl Frame {
    pub fn kind(&self) -> FrameKind {
        match self {
            Frame::SubNormal(_) => FrameKind::SubNormal,
            Frame::Nhat(_) => FrameKind::Nhat,
            Frame::Compat(_) => FrameKind::Compat,
        }
    }

    pub fn poset(&self) -> &Poset {
        match self {
            Frame::SubNormal(f) => f.poset(),
            Frame::Nhat(f) => f.poset(),
            Frame::Compat(f) => f.poset(),
        }
    }

    pub fn conditions(&self) -> Vec<(&'static str, Option<Violation>)> {
        match self {
            Frame::SubNormal(f) => f.conditions(),
            Frame::Nhat(f) => f.conditions(),
            Frame::Compat(f) => f.conditions(),
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn three_world() -> SubNormalFrame {
        SubNormalFrame::build(&["w0", "w1", "w2"], &[("w0", "w1"), ("w0", "w2")], &["w2"]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn three_world_frame_is_valid() {
        let f = three_world();
        assert_eq!(f.y0(), 0b100);
        assert!(!f.is_identity());
    }

    #[test]
    fn condition_d_rejects() {
        let err = SubNormalFrame::build(&["w0", "w1"], &[("w0", "w1")], &["w1"]).unwrap_err();
        assert_eq!(
            err,
            FrameError::ConditionViolation { condition: "(D)", witness: vec!["w0".into()] }
        );
    }

    #[test]
    fn y0_must_be_an_upset() {
        let err = SubNormalFrame::build(&["w0", "w1"], &[("w0", "w1")], &["w0"]).unwrap_err();
        assert_eq!(err, FrameError::Y0NotUpset("w0".into(), "w1".into()));
    }

    #[test]
    fn upsets_in_canonical_order() {
        let p = three_world().poset().clone();
        assert_eq!(p.upsets(), vec![0b000, 0b010, 0b100, 0b110, 0b111]);
    }

    #[test]
    fn compat_condition_3_can_fail() {
        let f = CompatFrame::build(&["w0", "w1"], &[("w0", "w1")], &[("w0", "w0")]).unwrap();
        assert!(f.subcompat_12_failure().is_none());
        assert_eq!(f.condition_3_failure().unwrap().worlds, vec![0]);
    }

    #[test]
    fn relations_must_be_down_closed() {
        let err = CompatFrame::build(&["w0", "w1"], &[("w0", "w1")], &[("w1", "w1")]).unwrap_err();
        assert!(matches!(err, FrameError::ConditionViolation { condition: "(C) downward closure", .. }));
    }

    #[test]
    fn cycles_and_unknown_worlds() {
        assert!(matches!(Poset::build(&["a", "b"], &[("a", "b"), ("b", "a")]), Err(FrameError::Cycle(..))));
        assert!(matches!(Poset::build(&["a"], &[("a", "c")]), Err(FrameError::UnknownWorld(_))));
    }
}
