//! The pair algebra `A_u` over a pseudo-Boolean algebra `H` and `u1 <= u2`.
//!
//! Carrier: pairs `(a2 & u1, a2)` with `a2 <= u2`. Operations:
//! joins and meets componentwise,
//! `(a1,a2) -> (b1,b2) = ((a1 -> b1) & u1, (a2 -> b2) & u2)`,
//! `~(a1,a2) = (u1 & !a1, u2 & !a1)`, `!x = x -> (0,0)`.

use super::lattice::{Elem, FiniteLattice};
use super::{Algebra, AlgebraError, HeytingAlgebra};

pub fn build_au(h: &HeytingAlgebra, u1: Elem, u2: Elem) -> Result<Algebra, AlgebraError> {
    let l = h.lattice();
    if !l.leq(u1, u2) {
        return Err(AlgebraError::UNotOrdered(l.name(u1).into(), l.name(u2).into()));
    }
    let pairs: Vec<(Elem, Elem)> = l
        .elements()
        .filter(|&a2| l.leq(a2, u2))
        .map(|a2| (l.meet(a2, u1), a2))
        .collect();
    let n = pairs.len();
    let names: Vec<String> =
        pairs.iter().map(|&(a1, a2)| format!("({},{})", l.name(a1), l.name(a2))).collect();
    let mut leq = vec![false; n * n];
    for (i, &(a1, a2)) in pairs.iter().enumerate() {
        for (j, &(b1, b2)) in pairs.iter().enumerate() {
            leq[i * n + j] = l.leq(a1, b1) && l.leq(a2, b2);
        }
    }
    let lat = FiniteLattice::from_relation_distributive(names, leq)?;
    let index = |p: (Elem, Elem)| {
        pairs.iter().position(|&q| q == p).ok_or_else(|| AlgebraError::ConstructionMismatch {
            op: "carrier",
            at: format!("({},{})", l.name(p.0), l.name(p.1)),
        })
    };
    let at = |i: usize, j: usize| format!("{}, {}", lat.name(i), lat.name(j));

    for (i, &(a1, a2)) in pairs.iter().enumerate() {
        for (j, &(b1, b2)) in pairs.iter().enumerate() {
            if index((l.join(a1, b1), l.join(a2, b2)))? != lat.join(i, j) {
                return Err(AlgebraError::ConstructionMismatch { op: "join", at: at(i, j) });
            }
            if index((l.meet(a1, b1), l.meet(a2, b2)))? != lat.meet(i, j) {
                return Err(AlgebraError::ConstructionMismatch { op: "meet", at: at(i, j) });
            }
        }
    }
    let mut imp = vec![0; n * n];
    for (i, &(a1, a2)) in pairs.iter().enumerate() {
        for (j, &(b1, b2)) in pairs.iter().enumerate() {
            imp[i * n + j] = index((l.meet(h.imp(a1, b1), u1), l.meet(h.imp(a2, b2), u2)))?;
        }
    }
    let heyting = HeytingAlgebra::with_implication(lat, &imp)
        .map_err(|_| AlgebraError::ConstructionMismatch { op: "->", at: "residuation".into() })?;
    let tilde_pair = |(a1, _): (Elem, Elem)| (l.meet(u1, h.neg(a1)), l.meet(u2, h.neg(a1)));
    let top = heyting.lattice().top();
    let tilde_one = index(tilde_pair(pairs[top]))?;
    let alg = Algebra::new(heyting, tilde_one)?;
    for (i, &p) in pairs.iter().enumerate() {
        if index(tilde_pair(p))? != alg.tilde(i) {
            return Err(AlgebraError::ConstructionMismatch { op: "~", at: alg.lattice().name(i).into() });
        }
        let bottom = alg.lattice().bottom();
        if alg.neg(i) != alg.imp(i, bottom) {
            return Err(AlgebraError::ConstructionMismatch { op: "!", at: alg.lattice().name(i).into() });
        }
    }
    Ok(alg)
}
