//! Translations between sub-normal frames and N-hat frames over the same
//! world list.
//!
//! `phi`: `x R1 y` iff `x` and `y` have a common upper bound; `x R2 y` iff
//! they have a common upper bound outside `Y0`. `psi`: `Y0` is the set of
//! worlds without an `R2`-successor.

use crate::frames::{bit, dead_ends, NhatFrame, SubNormalFrame, WorldSet};

pub fn phi(fr: &SubNormalFrame) -> NhatFrame {
    let p = fr.poset();
    let row = |x, avoid: WorldSet| {
        p.worlds().filter(|&y| p.up(x) & p.up(y) & !avoid != 0).fold(0, |s, y| s | bit(y))
    };
    let rn1 = p.worlds().map(|x| row(x, 0)).collect();
    let rn2 = p.worlds().map(|x| row(x, fr.y0())).collect();
    let out = NhatFrame::candidate(p.clone(), rn1, rn2).expect("relations over the same worlds");
    debug_assert!(out.structural_failure().is_none() && out.condition_3_failure().is_none());
    out
}

pub fn psi(fr: &NhatFrame) -> SubNormalFrame {
    let y0 = dead_ends(fr.poset(), fr.rn2());
    let out = SubNormalFrame::candidate(fr.poset().clone(), y0)
        .expect("dead ends of a down-closed relation form an upset");
    debug_assert!(out.condition_d_failure().is_none());
    out
}
