//! Finite duality: prime filters, canonical frames, complex algebras and the
//! embeddings between them, for ccpBa's with sub-normal frames and for
//! K_im-algebras with compatibility frames.
//!
//! Every embedding is re-verified operation by operation when built.

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Elem, FiniteLattice, HeytingAlgebra, KimAlgebra};
use crate::frames::truth::{describe, Relational};
use crate::frames::{
    bit, CompatFrame, FrameError, Poset, SubNormalFrame, World, WorldSet, MAX_WORLDS,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("{0} prime filters exceed the world limit of {MAX_WORLDS}")]
    TooManyFilters(usize),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("verification failed: {check} at {at}")]
    Verification { check: &'static str, at: String },
}

/// A prime filter of a finite distributive lattice; always principal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFilter {
    generator: Elem,
    members: Vec<bool>,
}

impl PrimeFilter {
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members[a]
    }

    pub fn elements(&self) -> Vec<Elem> {
        (0..self.members.len()).filter(|&a| self.members[a]).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn render(&self, lat: &FiniteLattice) -> String {
        let names: Vec<&str> = self.elements().into_iter().map(|a| lat.name(a)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// All prime filters, by size and then by member list.
///
/// In a finite distributive lattice each prime filter is `up(a)` for a
/// join-prime `a`, so only principal filters are tried.
pub fn prime_filters(lat: &FiniteLattice) -> Vec<PrimeFilter> {
    let mut out: Vec<PrimeFilter> = lat
        .elements()
        .filter(|&a| a != lat.bottom())
        .filter(|&a| {
            lat.elements().all(|b| {
                lat.elements().all(|c| !lat.leq(a, lat.join(b, c)) || lat.leq(a, b) || lat.leq(a, c))
            })
        })
        .map(|a| PrimeFilter { generator: a, members: lat.elements().map(|b| lat.leq(a, b)).collect() })
        .collect();
    out.sort_by_key(|f| (f.len(), f.elements()));
    out
}

/// `{i : a in filters[i]}`.
pub fn sigma(filters: &[PrimeFilter], a: Elem) -> WorldSet {
    filters.iter().enumerate().filter(|(_, f)| f.contains(a)).fold(0, |s, (i, _)| s | bit(i))
}

/// A canonical frame together with the filter behind each world `F{i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFrame<F> {
    pub frame: F,
    pub filters: Vec<PrimeFilter>,
}

impl<F> CanonicalFrame<F> {
    /// One `F{i} = {...}` line per world.
    pub fn comments(&self, lat: &FiniteLattice) -> Vec<String> {
        self.filters.iter().enumerate().map(|(i, f)| format!("F{i} = {}", f.render(lat))).collect()
    }
}

fn filter_poset(filters: &[PrimeFilter]) -> Result<Poset, BridgeError> {
    if filters.len() > MAX_WORLDS {
        return Err(BridgeError::TooManyFilters(filters.len()));
    }
    let names = (0..filters.len()).map(|i| format!("F{i}")).collect();
    let rel = filters
        .iter()
        .map(|f| {
            filters
                .iter()
                .enumerate()
                .filter(|(_, g)| f.elements().iter().all(|&a| g.contains(a)))
                .fold(0, |s, (j, _)| s | bit(j))
        })
        .collect();
    Ok(Poset::from_relation(names, rel)?)
}

fn verify(check: &'static str, ok: bool, at: impl FnOnce() -> String) -> Result<(), BridgeError> {
    if ok {
        Ok(())
    } else {
        Err(BridgeError::Verification { check, at: at() })
    }
}

/// Worlds are prime filters under inclusion; `Y0` holds the filters
/// containing `~1`.
pub fn canonical_frame_ccpba(alg: &Algebra) -> Result<CanonicalFrame<SubNormalFrame>, BridgeError> {
    let filters = prime_filters(alg.lattice());
    let poset = filter_poset(&filters)?;
    let y0 = sigma(&filters, alg.tilde_one());
    let frame = SubNormalFrame::new(poset, y0)?;
    if alg.is_cvcpba() {
        let e = frame.condition_e_failure();
        verify("(E) on the canonical frame", e.is_none(), || format!("{e:?}"))?;
    }
    Ok(CanonicalFrame { frame, filters })
}

pub fn canonical_frame_kim(alg: &KimAlgebra) -> Result<CanonicalFrame<CompatFrame>, BridgeError> {
    let lat = alg.lattice();
    let filters = prime_filters(lat);
    let poset = filter_poset(&filters)?;
    let c = filters
        .iter()
        .map(|p| {
            filters
                .iter()
                .enumerate()
                .filter(|(_, q)| lat.elements().all(|a| !p.contains(alg.tilde(a)) || !q.contains(a)))
                .fold(0, |s, (j, _)| s | bit(j))
        })
        .collect();
    let frame = CompatFrame::new(poset, c)?;
    let sub = frame.subcompat_failure();
    verify("sub-compatibility", sub.is_none(), || format!("{sub:?}"))?;
    if alg.is_kim_vee() {
        let id = frame.identity_failure();
        verify("identity", id.is_none(), || format!("{id:?}"))?;
    }
    Ok(CanonicalFrame { frame, filters })
}

/// An algebra of upsets; element `i` is `upsets[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexAlgebra<A> {
    pub algebra: A,
    pub upsets: Vec<WorldSet>,
}

impl<A> ComplexAlgebra<A> {
    pub fn element_of(&self, s: WorldSet) -> Option<Elem> {
        self.upsets.iter().position(|&u| u == s)
    }
}

struct UpsetLattice {
    lattice: FiniteLattice,
    upsets: Vec<WorldSet>,
    index: HashMap<WorldSet, Elem>,
}

impl UpsetLattice {
    fn of(p: &Poset) -> UpsetLattice {
        let upsets = p.upsets();
        let names = upsets.iter().map(|&u| describe(p, u)).collect();
        let lattice = FiniteLattice::of_sets(names, &upsets).expect("upsets form a lattice of sets");
        let index = upsets.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        UpsetLattice { lattice, upsets, index }
    }

    fn at(&self, s: WorldSet) -> Elem {
        self.index[&s]
    }

    fn table(&self, f: impl Fn(WorldSet) -> WorldSet) -> Vec<Elem> {
        self.upsets.iter().map(|&u| self.at(f(u))).collect()
    }
}

/// Upsets with `->`, `!` and `~U = U -> Y0`.
pub fn complex_algebra_subnormal(fr: &SubNormalFrame) -> Result<ComplexAlgebra<Algebra>, BridgeError> {
    let ul = UpsetLattice::of(fr.poset());
    let n = ul.upsets.len();
    let mut imp = Vec::with_capacity(n * n);
    for &a in &ul.upsets {
        for &b in &ul.upsets {
            imp.push(ul.at(fr.imp_set(a, b)));
        }
    }
    let heyting = HeytingAlgebra::with_implication(ul.lattice.clone(), &imp)?;
    let algebra = Algebra::new(heyting, ul.at(fr.y0()))?;
    let tilde = ul.table(|u| fr.tilde_set(u));
    let neg = ul.table(|u| fr.neg_set(u));
    for i in 0..n {
        verify("~ of the complex algebra", algebra.tilde(i) == tilde[i], || ul.lattice.name(i).into())?;
        verify("! of the complex algebra", algebra.neg(i) == neg[i], || ul.lattice.name(i).into())?;
    }
    if fr.is_identity() {
        verify("excluded middle for ~", algebra.is_cvcpba(), String::new)?;
    }
    Ok(ComplexAlgebra { algebra, upsets: ul.upsets })
}

/// Upsets with `!U = {x : up(x) misses U}` and `~U = {x : C(x) misses U}`.
pub fn complex_algebra_compat(fr: &CompatFrame) -> Result<ComplexAlgebra<KimAlgebra>, BridgeError> {
    let ul = UpsetLattice::of(fr.poset());
    let neg = ul.table(|u| fr.neg_set(u));
    let tilde = ul.table(|u| fr.tilde_set(u));
    let algebra = KimAlgebra::new(ul.lattice.clone(), neg, tilde)?;
    if fr.is_identity() {
        verify("excluded middle for ~", algebra.is_kim_vee(), String::new)?;
    }
    Ok(ComplexAlgebra { algebra, upsets: ul.upsets })
}

/// A verified injective map with the list of checks it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub checks: Vec<&'static str>,
}

impl Embedding {
    pub fn is_bijective(&self, target_size: usize) -> bool {
        self.checks.contains(&"onto") && self.map.len() == target_size
    }
}

struct Checker {
    done: Vec<&'static str>,
}

impl Checker {
    fn check(&mut self, name: &'static str, ok: bool, at: impl FnOnce() -> String) -> Result<(), BridgeError> {
        verify(name, ok, at)?;
        self.done.push(name);
        Ok(())
    }

    /// Checks that `map` is injective and onto `0..target`.
    fn bijection(&mut self, map: &[usize], target: usize) -> Result<(), BridgeError> {
        let mut hit = vec![false; target];
        for (i, &m) in map.iter().enumerate() {
            verify("injective", !hit[m], || format!("#{i}"))?;
            hit[m] = true;
        }
        self.done.push("injective");
        self.check("onto", hit.iter().all(|&h| h), || {
            format!("#{}", hit.iter().position(|&h| !h).unwrap_or(0))
        })
    }
}

/// Shared algebra-side checks for the two flavours.
fn lattice_checks(
    ck: &mut Checker,
    src: &FiniteLattice,
    dst: &FiniteLattice,
    h: &[Elem],
) -> Result<(), BridgeError> {
    let pair = |a: Elem, b: Elem| format!("({}, {})", src.name(a), src.name(b));
    ck.check("bottom", h[src.bottom()] == dst.bottom(), String::new)?;
    ck.check("top", h[src.top()] == dst.top(), String::new)?;
    for a in src.elements() {
        for b in src.elements() {
            verify("join", h[src.join(a, b)] == dst.join(h[a], h[b]), || pair(a, b))?;
            verify("meet", h[src.meet(a, b)] == dst.meet(h[a], h[b]), || pair(a, b))?;
            verify("order-reflecting", src.leq(a, b) == dst.leq(h[a], h[b]), || pair(a, b))?;
        }
    }
    ck.done.extend(["join", "meet", "order-reflecting"]);
    Ok(())
}

/// `h(a) = {P : a in P}` into the complex algebra of the canonical frame.
pub fn stone_embedding(alg: &Algebra) -> Result<Embedding, BridgeError> {
    let canon = canonical_frame_ccpba(alg)?;
    let cx = complex_algebra_subnormal(&canon.frame)?;
    let (src, dst) = (alg.lattice(), cx.algebra.lattice());
    let h: Vec<Elem> = src
        .elements()
        .map(|a| cx.element_of(sigma(&canon.filters, a)).expect("sigma(a) is an upset"))
        .collect();
    let mut ck = Checker { done: Vec::new() };
    ck.bijection(&h, dst.size())?;
    lattice_checks(&mut ck, src, dst, &h)?;
    for a in src.elements() {
        let at = || src.name(a).to_string();
        verify("negation", h[alg.neg(a)] == cx.algebra.neg(h[a]), at)?;
        verify("tilde", h[alg.tilde(a)] == cx.algebra.tilde(h[a]), at)?;
        for b in src.elements() {
            let ok = h[alg.imp(a, b)] == cx.algebra.imp(h[a], h[b]);
            verify("implication", ok, || format!("({}, {})", src.name(a), src.name(b)))?;
        }
    }
    ck.done.extend(["negation", "tilde", "implication"]);
    Ok(Embedding { map: h, checks: ck.done })
}

pub fn kim_stone_embedding(alg: &KimAlgebra) -> Result<Embedding, BridgeError> {
    let canon = canonical_frame_kim(alg)?;
    let cx = complex_algebra_compat(&canon.frame)?;
    let (src, dst) = (alg.lattice(), cx.algebra.lattice());
    let h: Vec<Elem> = src
        .elements()
        .map(|a| cx.element_of(sigma(&canon.filters, a)).expect("sigma(a) is an upset"))
        .collect();
    let mut ck = Checker { done: Vec::new() };
    ck.bijection(&h, dst.size())?;
    lattice_checks(&mut ck, src, dst, &h)?;
    for a in src.elements() {
        let at = || src.name(a).to_string();
        verify("negation", h[alg.neg(a)] == cx.algebra.neg(h[a]), at)?;
        verify("tilde", h[alg.tilde(a)] == cx.algebra.tilde(h[a]), at)?;
    }
    ck.done.extend(["negation", "tilde"]);
    Ok(Embedding { map: h, checks: ck.done })
}

/// `g(w) = {U : w in U}`, the filter generated by `up(w)`.
fn world_map(p: &Poset, cx_upsets: &[WorldSet], filters: &[PrimeFilter]) -> Result<Vec<World>, BridgeError> {
    p.worlds()
        .map(|w| {
            let gen = cx_upsets.iter().position(|&u| u == p.up(w)).expect("principal upset");
            filters
                .iter()
                .position(|f| f.generator() == gen)
                .ok_or_else(|| BridgeError::Verification { check: "prime", at: p.name(w).into() })
        })
        .collect()
}

fn order_checks(ck: &mut Checker, src: &Poset, dst: &Poset, g: &[World]) -> Result<(), BridgeError> {
    for x in src.worlds() {
        for y in src.worlds() {
            let ok = src.leq(x, y) == dst.leq(g[x], g[y]);
            verify("order", ok, || format!("({}, {})", src.name(x), src.name(y)))?;
        }
    }
    ck.done.push("order");
    Ok(())
}

pub fn frame_embedding(fr: &SubNormalFrame) -> Result<Embedding, BridgeError> {
    let cx = complex_algebra_subnormal(fr)?;
    let canon = canonical_frame_ccpba(&cx.algebra)?;
    let (src, dst) = (fr.poset(), canon.frame.poset());
    let g = world_map(src, &cx.upsets, &canon.filters)?;
    let mut ck = Checker { done: Vec::new() };
    ck.bijection(&g, dst.size())?;
    order_checks(&mut ck, src, dst, &g)?;
    for x in src.worlds() {
        let ok = (fr.y0() & bit(x) != 0) == (canon.frame.y0() & bit(g[x]) != 0);
        verify("Y0", ok, || src.name(x).into())?;
    }
    ck.done.push("Y0");
    Ok(Embedding { map: g, checks: ck.done })
}

pub fn kim_frame_embedding(fr: &CompatFrame) -> Result<Embedding, BridgeError> {
    let cx = complex_algebra_compat(fr)?;
    let canon = canonical_frame_kim(&cx.algebra)?;
    let (src, dst) = (fr.poset(), canon.frame.poset());
    let g = world_map(src, &cx.upsets, &canon.filters)?;
    let mut ck = Checker { done: Vec::new() };
    ck.bijection(&g, dst.size())?;
    order_checks(&mut ck, src, dst, &g)?;
    for x in src.worlds() {
        for y in src.worlds() {
            let ok = (fr.c()[x] & bit(y) != 0) == (canon.frame.c()[g[x]] & bit(g[y]) != 0);
            verify("C", ok, || format!("({}, {})", src.name(x), src.name(y)))?;
        }
    }
    ck.done.push("C");
    Ok(Embedding { map: g, checks: ck.done })
}
