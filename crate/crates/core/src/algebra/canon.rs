//! Canonical labellings of small finite structures and isomorphism checks.
//!
//! Elements are first sorted by isomorphism-invariant keys (distance from the
//! top, up/down set sizes, cover degrees, plus caller-supplied invariants), so
//! the top element comes first. Every relabelling that permutes elements only
//! within equal-key blocks is then tried; the lexicographically least code
//! wins.

use super::lattice::{Elem, FiniteLattice};
use super::{Algebra, KimAlgebra};

/// A canonical labelling: `order[i]` is the original element placed at
/// position `i`, and `code` is the structure encoded in that labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub code: Vec<u32>,
    pub order: Vec<Elem>,
}

/// Encodes structure beyond the order, given a labelling and its inverse.
pub type ExtraCode<'a> = &'a dyn Fn(&[usize], &[usize]) -> Vec<u32>;

/// Computes a canonical labelling of the poset `leq` on `0..n`.
///
/// `key` supplies extra invariants per element; `extra` encodes additional
/// structure given a labelling (`order`) and its inverse (`pos`).
pub fn canonical_labelling(
    n: usize,
    leq: &dyn Fn(usize, usize) -> bool,
    key: &dyn Fn(usize) -> u64,
    extra: ExtraCode<'_>,
) -> Canonical {
    let depth = depth_from_top(n, leq);
    let covers = |a: usize, b: usize| {
        a != b && leq(a, b) && !(0..n).any(|c| c != a && c != b && leq(a, c) && leq(c, b))
    };
    let mut keyed: Vec<(Vec<u64>, usize)> = (0..n)
        .map(|a| {
            let up = (0..n).filter(|&b| leq(a, b)).count() as u64;
            let down = (0..n).filter(|&b| leq(b, a)).count() as u64;
            let upc = (0..n).filter(|&b| covers(a, b)).count() as u64;
            let downc = (0..n).filter(|&b| covers(b, a)).count() as u64;
            (vec![depth[a], up, down, upc, downc, key(a)], a)
        })
        .collect();
    keyed.sort();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, (k, a)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *k {
            blocks.last_mut().expect("nonempty").push(*a);
        } else {
            blocks.push(vec![*a]);
        }
    }
    let mut best: Option<Canonical> = None;
    let mut order = Vec::with_capacity(n);
    permute_blocks(&blocks, 0, &mut order, &mut |order| {
        let mut pos = vec![0; n];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        let mut code = Vec::with_capacity(n * n / 32 + 4);
        let mut word = 0u32;
        let mut bits = 0;
        for i in 0..n {
            for j in 0..n {
                word = (word << 1) | leq(order[i], order[j]) as u32;
                bits += 1;
                if bits == 32 {
                    code.push(word);
                    word = 0;
                    bits = 0;
                }
            }
        }
        code.push(word);
        code.extend(extra(order, &pos));
        if best.as_ref().is_none_or(|b| code < b.code) {
            best = Some(Canonical { code, order: order.to_vec() });
        }
    });
    best.expect("at least one labelling")
}

fn permute_blocks(
    blocks: &[Vec<usize>],
    at: usize,
    order: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if at == blocks.len() {
        visit(order);
        return;
    }
    let mut block = blocks[at].clone();
    heap_permutations(&mut block, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_blocks(blocks, at + 1, order, visit);
        order.truncate(len);
    });
}

fn heap_permutations(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k {
            go(k - 1, items, visit);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            if i + 1 < k {
                items.swap(j, k - 1);
            }
        }
    }
    let k = items.len();
    go(k, items, visit);
}

/// Length of the longest chain from each element up to a maximal element.
fn depth_from_top(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut depth = vec![0u64; n];
    // Relax n times; chains have length < n.
    for _ in 0..n {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) && depth[a] < depth[b] + 1 {
                    depth[a] = depth[b] + 1;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    depth
}

pub fn canonical_lattice(l: &FiniteLattice) -> Canonical {
    canonical_labelling(l.size(), &|a, b| l.leq(a, b), &|_| 0, &|_, _| Vec::new())
}

pub fn canonical_algebra(alg: &Algebra) -> Canonical {
    let l = alg.lattice();
    let h = alg.heyting();
    let t1 = alg.tilde_one();
    canonical_labelling(
        l.size(),
        &|a, b| l.leq(a, b),
        &|a| ((h.neg(h.neg(a)) == a) as u64) << 1 | (a == t1) as u64,
        &|_, pos| vec![pos[t1] as u32],
    )
}

pub fn canonical_kim(alg: &KimAlgebra) -> Canonical {
    let l = alg.lattice();
    let t1 = alg.tilde_one();
    canonical_labelling(
        l.size(),
        &|a, b| l.leq(a, b),
        &|a| ((alg.neg(alg.neg(a)) == a) as u64) << 1 | (a == t1) as u64,
        &|order, pos| order.iter().map(|&e| pos[alg.tilde(e)] as u32).collect(),
    )
}

/// An isomorphism `a -> b` (as a map on element indices), if one exists.
/// The returned map is re-verified against every operation.
pub fn iso_check(a: &Algebra, b: &Algebra) -> Option<Vec<Elem>> {
    if a.size() != b.size() {
        return None;
    }
    let (ca, cb) = (canonical_algebra(a), canonical_algebra(b));
    if ca.code != cb.code {
        return None;
    }
    let mut map = vec![0; a.size()];
    for (i, &e) in ca.order.iter().enumerate() {
        map[e] = cb.order[i];
    }
    preserves_everything(a, b, &map).then_some(map)
}

/// Checks that `map` is a bijection `a -> b` preserving order, `->`, `!`, `~`, 0 and 1.
pub fn preserves_everything(a: &Algebra, b: &Algebra, map: &[Elem]) -> bool {
    let (la, lb) = (a.lattice(), b.lattice());
    let mut seen = vec![false; b.size()];
    for &m in map {
        if m >= b.size() || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    if map[la.bottom()] != lb.bottom() || map[la.top()] != lb.top() {
        return false;
    }
    la.elements().all(|x| {
        map[a.neg(x)] == b.neg(map[x])
            && map[a.tilde(x)] == b.tilde(map[x])
            && la.elements().all(|y| {
                la.leq(x, y) == lb.leq(map[x], map[y]) && map[a.imp(x, y)] == b.imp(map[x], map[y])
            })
    })
}

/// Generic element names for a canonically ordered lattice: the top is `1`,
/// the bottom `0`, everything else a letter in position order.
pub fn generic_names(l: &FiniteLattice) -> Vec<String> {
    let mut letter = 0u8;
    l.elements()
        .map(|e| {
            if e == l.bottom() {
                "0".to_string()
            } else if e == l.top() {
                "1".to_string()
            } else {
                let name = if letter < 26 {
                    ((b'a' + letter) as char).to_string()
                } else {
                    format!("e{letter}")
                };
                letter += 1;
                name
            }
        })
        .collect()
}
