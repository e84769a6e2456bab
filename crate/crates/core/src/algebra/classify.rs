//! Class membership of a Heyting algebra carrying an arbitrary `~` table.

use super::kite::{self, Witness};
use super::lattice::Elem;
use super::{Algebra, HeytingAlgebra};

/// Outcome of one class check: `None` when it holds, else the first witness.
pub type Flag = Option<Witness>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub is_pba: Flag,
    /// `~a = a -> ~1` for all `a`.
    pub is_cc_lattice: Flag,
    /// `!!~1 = ~1`.
    pub dne_tilde_one: Flag,
    pub is_ccpba: Flag,
    pub is_cvcpba: Flag,
    pub is_jp_algebra: Flag,
    pub is_kim: Flag,
    pub is_kim_vee: Flag,
    pub tilde_involutive: Flag,
}

impl ClassReport {
    pub fn flags(&self) -> [(&'static str, &Flag); 9] {
        [
            ("is_pba", &self.is_pba),
            ("is_cc_lattice", &self.is_cc_lattice),
            ("dne_tilde_one", &self.dne_tilde_one),
            ("is_ccpba", &self.is_ccpba),
            ("is_cvcpba", &self.is_cvcpba),
            ("is_jp_algebra", &self.is_jp_algebra),
            ("is_kim", &self.is_kim),
            ("is_kim_vee", &self.is_kim_vee),
            ("tilde_involutive", &self.tilde_involutive),
        ]
    }
}

fn first(h: &HeytingAlgebra, law: &'static str, ok: impl Fn(Elem) -> bool) -> Flag {
    h.lattice()
        .elements()
        .find(|&a| !ok(a))
        .map(|a| Witness { law, elements: vec![a] })
}

/// Decides every flag for `h` with `~` given by `tilde`.
pub fn classify(h: &HeytingAlgebra, tilde: &[Elem]) -> ClassReport {
    let l = h.lattice();
    assert_eq!(tilde.len(), l.size(), "tilde table has the wrong size");
    let t1 = tilde[l.top()];
    let nn_t1 = h.neg(h.neg(t1));
    let is_pba = first(h, "!a = a -> 0", |a| h.neg(a) == h.imp(a, l.bottom()));
    let is_cc_lattice = first(h, "~a = a -> ~1", |a| tilde[a] == h.imp(a, t1));
    let dne_tilde_one = (nn_t1 != t1).then(|| Witness { law: "!!~1 = ~1", elements: vec![t1] });
    let is_ccpba = first(h, "~a = a -> !!~1", |a| tilde[a] == h.imp(a, nn_t1));
    let em = first(h, "a | ~a = 1", |a| l.join(a, tilde[a]) == l.top());
    let is_cvcpba = is_ccpba.clone().or_else(|| em.clone());
    let jp = first(h, "~~(~1 -> a) = 1", |a| tilde[tilde[h.imp(t1, a)]] == l.top());
    let is_jp_algebra = is_cc_lattice.clone().or(jp);
    let neg = h.neg_table();
    let is_kim = kite::intuitionistic_failure(l, &neg)
        .or_else(|| kite::minimal_failure(l, tilde))
        .or_else(|| dne_tilde_one.clone());
    let is_kim_vee = is_kim.clone().or(em);
    let tilde_involutive = first(h, "~~a = a", |a| tilde[tilde[a]] == a);
    ClassReport {
        is_pba,
        is_cc_lattice,
        dne_tilde_one,
        is_ccpba,
        is_cvcpba,
        is_jp_algebra,
        is_kim,
        is_kim_vee,
        tilde_involutive,
    }
}

pub fn classify_algebra(alg: &Algebra) -> ClassReport {
    classify(alg.heyting(), alg.tilde_table())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn a_prime_is_not_cvcpba() {
        let r = classify_algebra(&a_prime());
        assert!(r.is_ccpba.is_none());
        assert_eq!(r.is_cvcpba.unwrap().elements, vec![1]);
        assert!(r.is_kim.is_none());
        assert!(r.tilde_involutive.is_some());
    }

    #[test]
    fn b_prime_is_cvcpba() {
        let r = classify_algebra(&b_prime());
        assert!(r.is_cvcpba.is_none());
        assert!(r.is_kim_vee.is_none());
    }

    #[test]
    fn h5_with_a_fails_em_at_b() {
        let alg = Algebra::from_lattice(h5(), "a").unwrap();
        let r = classify_algebra(&alg);
        assert!(r.is_ccpba.is_none());
        let w = r.is_cvcpba.unwrap();
        assert_eq!(alg.lattice().name(w.elements[0]), "b");
    }

    #[test]
    fn arbitrary_tilde_can_fail_every_flag() {
        let h = super::super::HeytingAlgebra::derive(chain3()).unwrap();
        let r = classify(&h, &[0, 1, 2]);
        assert!(r.is_pba.is_none());
        assert!(r.is_cc_lattice.is_some());
        assert!(r.is_ccpba.is_some());
        assert!(r.is_kim.is_some());
        assert!(r.tilde_involutive.is_none());
    }
}
