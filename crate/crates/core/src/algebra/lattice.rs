//! Finite bounded lattices given by an order relation.

use std::collections::HashMap;

use thiserror::Error;

/// Index of an element in its lattice's declared order.
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("no elements declared")]
    Empty,
    #[error("element `{0}` declared twice")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("no least element")]
    NoBottom,
    #[error("no greatest element")]
    NoTop,
    #[error("`{0}` and `{1}` have no greatest lower bound")]
    MissingMeet(String, String),
    #[error("`{0}` and `{1}` have no least upper bound")]
    MissingJoin(String, String),
    #[error("not distributive: {0} & ({1} | {2}) differs from ({0} & {1}) | ({0} & {2})")]
    NotDistributive(String, String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl FiniteLattice {
    /// Builds a bounded distributive lattice from element names and order pairs
    /// `(a, b)` meaning `a <= b`. The reflexive-transitive closure is taken.
    pub fn build<S: AsRef<str>>(names: &[S], pairs: &[(S, S)]) -> Result<Self, LatticeError> {
        let lat = Self::build_general(names, pairs)?;
        lat.check_distributive()?;
        Ok(lat)
    }

    /// Like [`FiniteLattice::build`] but accepts non-distributive lattices.
    pub fn build_general<S: AsRef<str>>(
        names: &[S],
        pairs: &[(S, S)],
    ) -> Result<Self, LatticeError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement(n.clone()));
            }
        }
        let n = names.len();
        let mut leq = vec![false; n * n];
        for (a, b) in pairs {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| LatticeError::UnknownElement(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| LatticeError::UnknownElement(b.as_ref().to_string()))?;
            leq[ia * n + ib] = true;
        }
        Self::from_relation(names, leq)
    }

    /// Builds from a square relation table (row-major, `leq[a*n+b]` for
    /// `a <= b`), closing it reflexively and transitively. Distributivity is
    /// not checked.
    pub fn from_relation(names: Vec<String>, mut leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        assert_eq!(leq.len(), n * n, "relation table has the wrong size");
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b * n + x]))
            .ok_or(LatticeError::NoBottom)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x * n + t]))
            .ok_or(LatticeError::NoTop)?;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let m = (0..n)
                    .filter(|&c| leq[c * n + a] && leq[c * n + b])
                    .find(|&c| (0..n).all(|d| !(leq[d * n + a] && leq[d * n + b]) || leq[d * n + c]))
                    .ok_or_else(|| LatticeError::MissingMeet(names[a].clone(), names[b].clone()))?;
                let j = (0..n)
                    .filter(|&c| leq[a * n + c] && leq[b * n + c])
                    .find(|&c| (0..n).all(|d| !(leq[a * n + d] && leq[b * n + d]) || leq[c * n + d]))
                    .ok_or_else(|| LatticeError::MissingJoin(names[a].clone(), names[b].clone()))?;
                meet[a * n + b] = m;
                join[a * n + b] = j;
            }
        }
        Ok(FiniteLattice { names, leq, meet, join, bottom, top })
    }

    /// The lattice of a family of sets (bitmasks) ordered by inclusion. The
    /// family must contain its unions and intersections; `None` otherwise.
    pub fn of_sets(names: Vec<String>, sets: &[u64]) -> Option<Self> {
        let n = sets.len();
        assert_eq!(names.len(), n);
        let pos: HashMap<u64, Elem> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        if n == 0 || pos.len() != n {
            return None;
        }
        let mut leq = vec![false; n * n];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for (a, &sa) in sets.iter().enumerate() {
            for (b, &sb) in sets.iter().enumerate() {
                leq[a * n + b] = sa & !sb == 0;
                meet[a * n + b] = *pos.get(&(sa & sb))?;
                join[a * n + b] = *pos.get(&(sa | sb))?;
            }
        }
        let all = sets.iter().fold(0, |acc, &s| acc | s);
        let low = sets.iter().fold(u64::MAX, |acc, &s| acc & s);
        Some(FiniteLattice { names, leq, meet, join, bottom: *pos.get(&low)?, top: *pos.get(&all)? })
    }

    /// Distributive version of [`FiniteLattice::from_relation`].
    pub fn from_relation_distributive(
        names: Vec<String>,
        leq: Vec<bool>,
    ) -> Result<Self, LatticeError> {
        let lat = Self::from_relation(names, leq)?;
        lat.check_distributive()?;
        Ok(lat)
    }

    pub fn check_distributive(&self) -> Result<(), LatticeError> {
        match self.distributivity_failure() {
            None => Ok(()),
            Some((a, b, c)) => Err(LatticeError::NotDistributive(
                self.name(a).to_string(),
                self.name(b).to_string(),
                self.name(c).to_string(),
            )),
        }
    }

    /// First triple violating `a & (b | c) = (a & b) | (a & c)`.
    pub fn distributivity_failure(&self) -> Option<(Elem, Elem, Elem)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn index(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size() + b]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// The largest `c` with `a & c <= b`, if the set of such `c` has a maximum.
    pub fn residuum(&self, a: Elem, b: Elem) -> Option<Elem> {
        let below: Vec<Elem> = self.elements().filter(|&c| self.leq(self.meet(a, c), b)).collect();
        below
            .iter()
            .copied()
            .find(|&m| below.iter().all(|&c| self.leq(c, m)))
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a != b
                    && self.leq(a, b)
                    && !self
                        .elements()
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Returns the lattice with elements reordered: position `i` of the result
    /// holds element `order[i]` of `self`.
    pub fn permuted(&self, order: &[Elem]) -> FiniteLattice {
        let n = self.size();
        let mut inv = vec![0; n];
        for (i, &e) in order.iter().enumerate() {
            inv[e] = i;
        }
        let mut leq = vec![false; n * n];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(order[i], order[j]);
                meet[i * n + j] = inv[self.meet(order[i], order[j])];
                join[i * n + j] = inv[self.join(order[i], order[j])];
            }
        }
        FiniteLattice {
            names: order.iter().map(|&e| self.names[e].clone()).collect(),
            leq,
            meet,
            join,
            bottom: inv[self.bottom],
            top: inv[self.top],
        }
    }

    pub fn with_names(&self, names: Vec<String>) -> FiniteLattice {
        assert_eq!(names.len(), self.size());
        FiniteLattice { names, ..self.clone() }
    }

    /// True when `set` (indexed by element) is upward closed.
    pub fn is_up_closed(&self, set: &[bool]) -> bool {
        self.elements()
            .all(|a| !set[a] || self.elements().all(|b| !self.leq(a, b) || set[b]))
    }
}
