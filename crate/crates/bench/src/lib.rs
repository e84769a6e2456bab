//! Shared inputs for the criterion benches.

use ccpba_core::frames::{Poset, SubNormalFrame};
use ccpba_core::{parse, Formula};

/// A battery of formulas mixing both negations with implication.
pub fn formulas() -> Vec<Formula> {
    ["p | ~p", "~~p -> p", "(p -> q) -> (~q -> ~p)", "~(p & q) <-> (~p | ~q)", "!~top -> ~top", "~~~p -> ~p"]
        .iter()
        .map(|s| parse(s).expect("bench formulas parse"))
        .collect()
}

/// An (n-1)-world chain whose top is `Y0`, plus a leaf beside that top which
/// keeps (D) true. Needs `n >= 3`.
pub fn chain_frame(n: usize) -> SubNormalFrame {
    let names: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
    let mut ups: Vec<u64> = (0..n).map(|i| if i + 2 < n { 1u64 << (i + 1) } else { 0 }).collect();
    ups[n - 3] |= 1u64 << (n - 1);
    let p = Poset::from_relation(names, ups).expect("a chain with a leaf is a poset");
    SubNormalFrame::new(p, 1u64 << (n - 2)).expect("the leaf witnesses (D)")
}
