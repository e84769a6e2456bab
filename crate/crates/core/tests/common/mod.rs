//! Frame generators shared by the integration suites.
#![allow(dead_code)]

use ccpba_core::frames::{bit, members, CompatFrame, NhatFrame, Poset, SubNormalFrame, WorldSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("w{i}")).collect()
}

/// All posets on `w0..w{n-1}` in which `wi <= wj` implies `i <= j`.
/// Every finite poset has such a labelling, so this covers each order type.
pub fn natural_posets(n: usize) -> Vec<Poset> {
    fn go(n: usize, below: &mut Vec<WorldSet>, out: &mut Vec<Vec<WorldSet>>) {
        let k = below.len();
        if k == n {
            out.push(below.clone());
            return;
        }
        for d in 0..(1u64 << k) {
            if members(d).all(|i| below[i] & !d == 0) {
                below.push(d);
                go(n, below, out);
                below.pop();
            }
        }
    }
    let mut downs = Vec::new();
    go(n, &mut Vec::new(), &mut downs);
    downs
        .into_iter()
        .map(|below| {
            let mut up = vec![0; n];
            for (j, &d) in below.iter().enumerate() {
                for i in members(d) {
                    up[i] |= bit(j);
                }
            }
            Poset::from_relation(names(n), up).expect("strict down-sets of a natural labelling")
        })
        .collect()
}

/// Every choice of `Y0` among the upsets, whether or not (D) holds.
pub fn subnormal_candidates(p: &Poset) -> Vec<SubNormalFrame> {
    p.upsets().into_iter().map(|y0| SubNormalFrame::candidate(p.clone(), y0).unwrap()).collect()
}

/// Sub-normal frames (with (D)) on up to `max` worlds.
pub fn subnormal_frames(max: usize) -> Vec<SubNormalFrame> {
    (1..=max)
        .flat_map(natural_posets)
        .flat_map(|p| subnormal_candidates(&p))
        .filter(|f| f.condition_d_failure().is_none())
        .collect()
}

pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Poset {
    let mut up = vec![0; n];
    for (i, row) in up.iter_mut().enumerate() {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                *row |= bit(j);
            }
        }
    }
    Poset::from_relation(names(n), up).expect("edges point forward")
}

/// A random sub-normal frame on exactly `n` worlds: `Y0` is grown from random
/// generators and then closed under (D).
pub fn random_subnormal(rng: &mut ChaCha8Rng, n: usize) -> SubNormalFrame {
    let density = rng.gen_range(0.1..0.6);
    let p = random_poset(rng, n, density);
    let mut y0 = 0;
    for w in p.worlds() {
        if rng.gen_bool(0.3) {
            y0 |= p.up(w);
        }
    }
    loop {
        let f = SubNormalFrame::candidate(p.clone(), y0).unwrap();
        match f.condition_d_failure() {
            None => return f,
            Some(v) => y0 |= p.up(v.worlds[0]),
        }
    }
}

/// Closes `rel` downward in both arguments, and symmetrically if asked.
pub fn close(p: &Poset, rel: &mut [WorldSet], symmetric: bool) {
    loop {
        let before = rel.to_vec();
        for x in p.worlds() {
            for y in members(before[x]) {
                for x2 in members(p.down(x)) {
                    rel[x2] |= p.down(y);
                }
                if symmetric {
                    for y2 in members(p.down(y)) {
                        rel[y2] |= p.down(x);
                    }
                }
            }
        }
        if rel == before.as_slice() {
            return;
        }
    }
}

/// Pairs with a common upper bound, the ceiling for any relation with the
/// common-extension property.
fn compatible_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in p.worlds() {
        for y in p.worlds() {
            if p.up(x) & p.up(y) != 0 {
                out.push((x, y));
            }
        }
    }
    out
}

/// A random relation that is down-closed, symmetric and has common
/// extensions; `None` if the sampled seed pairs do not close up to one.
pub fn random_condensed(rng: &mut ChaCha8Rng, p: &Poset, reflexive: bool) -> Option<Vec<WorldSet>> {
    let mut rel = vec![0; p.size()];
    if reflexive {
        for w in p.worlds() {
            rel[w] |= bit(w);
        }
    }
    let pairs = compatible_pairs(p);
    let keep = rng.gen_range(0.0..0.7);
    for (x, y) in pairs {
        if rng.gen_bool(keep) {
            rel[x] |= bit(y);
        }
    }
    close(p, &mut rel, true);
    let ok = p.worlds().all(|x| members(rel[x]).all(|y| p.up(x) & p.up(y) & rel[x] != 0));
    ok.then_some(rel)
}

/// All relations on `p` that are down-closed, symmetric and have common
/// extensions (optionally reflexive). Exponential; meant for tiny posets.
pub fn all_condensed(p: &Poset, reflexive: bool) -> Vec<Vec<WorldSet>> {
    let pairs: Vec<(usize, usize)> = compatible_pairs(p).into_iter().filter(|&(x, y)| x <= y).collect();
    let mut out = std::collections::BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rel = vec![0; p.size()];
        if reflexive {
            for w in p.worlds() {
                rel[w] |= bit(w);
            }
        }
        for (i, &(x, y)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                rel[x] |= bit(y);
                rel[y] |= bit(x);
            }
        }
        close(p, &mut rel, true);
        if p.worlds().all(|x| members(rel[x]).all(|y| p.up(x) & p.up(y) & rel[x] != 0)) {
            out.insert(rel);
        }
    }
    out.into_iter().collect()
}

/// N-hat candidates on `p`: structurally valid, condition (3) unchecked.
pub fn nhat_candidates(p: &Poset) -> Vec<NhatFrame> {
    let r1s = all_condensed(p, true);
    let r2s = all_condensed(p, false);
    let mut out = Vec::new();
    for r1 in &r1s {
        for r2 in &r2s {
            let f = NhatFrame::candidate(p.clone(), r1.clone(), r2.clone()).unwrap();
            if f.structural_failure().is_none() {
                out.push(f);
            }
        }
    }
    out
}

pub fn random_nhat(rng: &mut ChaCha8Rng, p: &Poset) -> Option<NhatFrame> {
    let r1 = random_condensed(rng, p, true)?;
    let r2 = random_condensed(rng, p, false)?;
    let f = NhatFrame::candidate(p.clone(), r1, r2).unwrap();
    f.structural_failure().is_none().then_some(f)
}

/// Sub-compatibility candidates: (C), (1) and (2) hold, (3) unchecked.
pub fn compat_candidates(p: &Poset) -> Vec<CompatFrame> {
    all_condensed(p, false)
        .into_iter()
        .map(|c| CompatFrame::new(p.clone(), c).expect("closed downward"))
        .filter(|f| f.subcompat_12_failure().is_none())
        .collect()
}

pub fn random_compat(rng: &mut ChaCha8Rng, p: &Poset) -> Option<CompatFrame> {
    let c = random_condensed(rng, p, false)?;
    let f = CompatFrame::new(p.clone(), c).ok()?;
    f.subcompat_12_failure().is_none().then_some(f)
}

/// Sub-compatibility frames (all of (C), (1)-(3)) on up to `max` worlds.
pub fn subcompat_frames(max: usize) -> Vec<CompatFrame> {
    (1..=max)
        .flat_map(natural_posets)
        .flat_map(|p| compat_candidates(&p))
        .filter(CompatFrame::is_subcompat)
        .collect()
}

pub mod strategies {
    use ccpba_core::formula::{and, atom, imp, neg, or, tilde};
    use ccpba_core::Formula;
    use proptest::prelude::*;

    fn leaf(atoms: &'static [&'static str]) -> impl Strategy<Value = Formula> {
        prop_oneof![
            1 => Just(Formula::Top),
            1 => Just(Formula::Bot),
            4 => proptest::sample::select(atoms).prop_map(atom),
        ]
    }

    /// Formulas over `atoms`; `->` only when `implication` is set.
    pub fn formula(atoms: &'static [&'static str], implication: bool) -> BoxedStrategy<Formula> {
        leaf(atoms)
            .prop_recursive(4, 24, 2, move |inner| {
                let bin = (inner.clone(), inner.clone());
                let mut arms = vec![
                    bin.clone().prop_map(|(a, b)| and(a, b)).boxed(),
                    bin.clone().prop_map(|(a, b)| or(a, b)).boxed(),
                    inner.clone().prop_map(neg).boxed(),
                    inner.clone().prop_map(tilde).boxed(),
                ];
                if implication {
                    arms.push(bin.prop_map(|(a, b)| imp(a, b)).boxed());
                }
                proptest::strategy::Union::new(arms)
            })
            .boxed()
    }
}
