//! Catalogs of finite algebras up to isomorphism.
//!
//! Lattices come from all naturally labelled posets on the middle elements,
//! closed off with a bottom and a top, filtered to distributive lattices and
//! deduplicated by canonical code. ccpBa's pair each lattice with every
//! `!!`-fixed `~1`. K_im-algebras are found independently by searching all
//! antitone maps for the two negations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use super::canon::{canonical_algebra, canonical_kim, canonical_lattice, generic_names};
use super::kite;
use super::lattice::{Elem, FiniteLattice};
use super::{Algebra, HeytingAlgebra, KimAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    Pba,
    Ccpba,
    Cvcpba,
    Kim,
    KimVee,
}

impl FromStr for AlgebraClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pba" => Ok(AlgebraClass::Pba),
            "ccpba" => Ok(AlgebraClass::Ccpba),
            "cvcpba" => Ok(AlgebraClass::Cvcpba),
            "kim" => Ok(AlgebraClass::Kim),
            "kim_vee" => Ok(AlgebraClass::KimVee),
            _ => Err(format!("unknown class `{s}` (expected pba, ccpba, cvcpba, kim, kim_vee)")),
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraClass::Pba => "pba",
            AlgebraClass::Ccpba => "ccpba",
            AlgebraClass::Cvcpba => "cvcpba",
            AlgebraClass::Kim => "kim",
            AlgebraClass::KimVee => "kim_vee",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("size {requested} exceeds the enumeration guard of {guard}")]
    BoundTooLarge { requested: usize, guard: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    pub allow_trivial: bool,
    pub max_size_guard: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { allow_trivial: false, max_size_guard: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    Pba(HeytingAlgebra),
    Ccp(Algebra),
    Kim(KimAlgebra),
}

impl CatalogEntry {
    pub fn lattice(&self) -> &FiniteLattice {
        match self {
            CatalogEntry::Pba(h) => h.lattice(),
            CatalogEntry::Ccp(a) => a.lattice(),
            CatalogEntry::Kim(k) => k.lattice(),
        }
    }
}

/// All naturally labelled posets on `m` points, as strict-down-set bitmasks.
fn natural_posets(m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut below: Vec<u32> = Vec::with_capacity(m);
    fn go(m: usize, below: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let k = below.len();
        if k == m {
            out.push(below.clone());
            return;
        }
        for d in 0u32..(1 << k) {
            let closed = (0..k).all(|i| d & (1 << i) == 0 || below[i] & !d == 0);
            if closed {
                below.push(d);
                go(m, below, out);
                below.pop();
            }
        }
    }
    go(m, &mut below, &mut out);
    out
}

/// Distributive lattices of exactly `size` elements, canonically ordered and
/// named, sorted by canonical code.
pub fn distributive_lattices(size: usize) -> Vec<FiniteLattice> {
    if size == 0 {
        return Vec::new();
    }
    if size == 1 {
        return vec![FiniteLattice::from_relation(vec!["0".into()], vec![true]).expect("one point")];
    }
    let m = size - 2;
    let found: Vec<(Vec<u32>, FiniteLattice)> = natural_posets(m)
        .into_par_iter()
        .filter_map(|below| {
            // Element 0 is the bottom, 1..=m the middles, m+1 the top.
            let n = size;
            let mut leq = vec![false; n * n];
            for x in 0..n {
                leq[x] = true;
                leq[x * n + n - 1] = true;
            }
            for (i, d) in below.iter().enumerate() {
                for j in 0..m {
                    if d & (1 << j) != 0 {
                        leq[(j + 1) * n + i + 1] = true;
                    }
                }
            }
            let names = (0..n).map(|i| i.to_string()).collect();
            let lat = FiniteLattice::from_relation_distributive(names, leq).ok()?;
            let c = canonical_lattice(&lat);
            let canon = lat.permuted(&c.order);
            let named = canon.with_names(generic_names(&canon));
            Some((c.code, named))
        })
        .collect();
    let unique: BTreeMap<Vec<u32>, FiniteLattice> = found.into_iter().collect();
    unique.into_values().collect()
}

fn sizes(max_size: usize, opts: &EnumerateOptions) -> Result<std::ops::RangeInclusive<usize>, EnumerateError> {
    if max_size > opts.max_size_guard {
        return Err(EnumerateError::BoundTooLarge { requested: max_size, guard: opts.max_size_guard });
    }
    Ok(if opts.allow_trivial { 1..=max_size } else { 2..=max_size })
}

/// Non-isomorphic ccpBa's of exactly `size` elements in canonical order.
pub fn ccpba_of_size(size: usize) -> Vec<Algebra> {
    let mut unique: BTreeMap<Vec<u32>, Algebra> = BTreeMap::new();
    for lat in distributive_lattices(size) {
        let h = HeytingAlgebra::derive(lat).expect("distributive lattices are Heyting");
        for t in h.regular_elements() {
            let alg = Algebra::new(h.clone(), t).expect("regular elements satisfy DNE");
            let c = canonical_algebra(&alg);
            unique.entry(c.code).or_insert_with(|| alg.permuted(&c.order));
        }
    }
    unique.into_values().collect()
}

/// Antitone maps `t` with `t(0) = 1`, in lexicographic order of tables.
fn antitone_maps(l: &FiniteLattice) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut t = vec![0; l.size()];
    fn go(l: &FiniteLattice, e: usize, t: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if e == l.size() {
            out.push(t.clone());
            return;
        }
        let candidates: Vec<Elem> =
            if e == l.bottom() { vec![l.top()] } else { l.elements().collect() };
        for v in candidates {
            let ok = (0..e).all(|b| {
                (!l.leq(b, e) || l.leq(v, t[b])) && (!l.leq(e, b) || l.leq(t[b], v))
            });
            if ok {
                t[e] = v;
                go(l, e + 1, t, out);
            }
        }
    }
    go(l, 0, &mut t, &mut out);
    out
}

/// Non-isomorphic K_im-algebras of exactly `size` elements in canonical order,
/// found by searching all negation tables rather than through residuation.
pub fn kim_of_size(size: usize) -> Vec<KimAlgebra> {
    let mut unique: BTreeMap<Vec<u32>, KimAlgebra> = BTreeMap::new();
    for lat in distributive_lattices(size) {
        let maps = antitone_maps(&lat);
        let negs: Vec<&Vec<Elem>> =
            maps.iter().filter(|t| kite::intuitionistic_failure(&lat, t).is_none()).collect();
        let tildes: Vec<&Vec<Elem>> =
            maps.par_iter().filter(|t| kite::minimal_failure(&lat, t).is_none()).collect();
        for neg in &negs {
            for tilde in &tildes {
                if let Ok(k) = KimAlgebra::new(lat.clone(), (*neg).clone(), (*tilde).clone()) {
                    let c = canonical_kim(&k);
                    unique.entry(c.code).or_insert_with(|| k.permuted(&c.order));
                }
            }
        }
    }
    unique.into_values().collect()
}

/// Every instance of `class` with size at most `max_size`, smallest first.
pub fn enumerate(
    class: AlgebraClass,
    max_size: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<CatalogEntry>, EnumerateError> {
    let mut out = Vec::new();
    for size in sizes(max_size, opts)? {
        out.extend(enumerate_size(class, size));
    }
    Ok(out)
}

/// Every instance of `class` with exactly `size` elements.
pub fn enumerate_exact(
    class: AlgebraClass,
    size: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<CatalogEntry>, EnumerateError> {
    if size > opts.max_size_guard {
        return Err(EnumerateError::BoundTooLarge { requested: size, guard: opts.max_size_guard });
    }
    if size == 1 && !opts.allow_trivial {
        return Ok(Vec::new());
    }
    Ok(enumerate_size(class, size))
}

fn enumerate_size(class: AlgebraClass, size: usize) -> Vec<CatalogEntry> {
    match class {
        AlgebraClass::Pba => distributive_lattices(size)
            .into_iter()
            .map(|l| CatalogEntry::Pba(HeytingAlgebra::derive(l).expect("distributive")))
            .collect(),
        AlgebraClass::Ccpba => ccpba_of_size(size).into_iter().map(CatalogEntry::Ccp).collect(),
        AlgebraClass::Cvcpba => ccpba_of_size(size)
            .into_iter()
            .filter(Algebra::is_cvcpba)
            .map(CatalogEntry::Ccp)
            .collect(),
        AlgebraClass::Kim => kim_of_size(size).into_iter().map(CatalogEntry::Kim).collect(),
        AlgebraClass::KimVee => kim_of_size(size)
            .into_iter()
            .filter(KimAlgebra::is_kim_vee)
            .map(CatalogEntry::Kim)
            .collect(),
    }
}

/// Non-trivial ccpBa's up to `max_size`, smallest first.
pub fn ccpba_catalog(max_size: usize) -> Vec<Algebra> {
    (2..=max_size).flat_map(ccpba_of_size).collect()
}

/// Non-trivial c∨cpBa's up to `max_size`, smallest first.
pub fn cvcpba_catalog(max_size: usize) -> Vec<Algebra> {
    ccpba_catalog(max_size).into_iter().filter(Algebra::is_cvcpba).collect()
}

/// Non-trivial K_im-algebras up to `max_size`, smallest first.
pub fn kim_catalog(max_size: usize) -> Vec<KimAlgebra> {
    (2..=max_size).flat_map(kim_of_size).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distributive_lattice_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| distributive_lattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 5, 8]);
    }

    #[test]
    fn three_element_ccpbas() {
        let cat = ccpba_of_size(3);
        assert_eq!(cat.len(), 2);
        // B' (~1 = 1) precedes A' (~1 = 0) in canonical order.
        assert_eq!(cat[0].tilde_one(), cat[0].lattice().top());
        assert_eq!(cat[1].tilde_one(), cat[1].lattice().bottom());
        assert_eq!(cat[0].lattice().names(), &["1", "a", "0"]);
        assert_eq!(cat.iter().filter(|a| a.is_cvcpba()).count(), 1);
    }

    #[test]
    fn guard_and_trivial_flag() {
        let opts = EnumerateOptions::default();
        assert!(enumerate(AlgebraClass::Ccpba, 9, &opts).is_err());
        assert!(enumerate_exact(AlgebraClass::Ccpba, 1, &opts).unwrap().is_empty());
        let with = EnumerateOptions { allow_trivial: true, ..opts };
        assert_eq!(enumerate_exact(AlgebraClass::Ccpba, 1, &with).unwrap().len(), 1);
    }

    #[test]
    fn antitone_maps_of_two_chain() {
        let l = &distributive_lattices(2)[0];
        // Elements are [1, 0]; t(0) = 1 fixed, t(1) free.
        assert_eq!(antitone_maps(l), vec![vec![0, 0], vec![1, 0]]);
    }
}
