//! Bundled proofs: the ILM theorem set, the K_im derived rules, the K_im′
//! derivations of A16 and A17, and negative examples for each error class.
//!
//! The files under `fixtures/proofs` are generated from here; a test keeps
//! them in sync.

use super::build::{assume, axiom, compile, hyp, lam, leaf, linearize, mp, rule, Term, Tree};
use super::io::{write_derivation, write_hilbert};
use super::{formula, HilbertSystem, SequentSystem};
use crate::formula::{and, imp, neg, or, tilde, Formula, Sequent};

fn s() -> Formula {
    tilde(Formula::Top)
}

/// `!!~top`
fn r() -> Formula {
    neg(neg(s()))
}

fn p() -> Formula {
    formula("p")
}

fn split(f: &Formula) -> (Formula, Formula) {
    match f {
        Formula::Impl(a, b) | Formula::And(a, b) => ((**a).clone(), (**b).clone()),
        other => panic!("expected a binary formula, found `{other}`"),
    }
}

fn top() -> Term {
    let k = axiom("A1", 0, &[("a", Formula::Top), ("b", Formula::Top)]);
    mp(axiom("A7", 0, &[("a", k.conclusion())]), k)
}

fn and_l(t: Term) -> Term {
    let (a, b) = split(&t.conclusion());
    mp(axiom("A5", 0, &[("a", a), ("b", b)]), t)
}

fn and_r(t: Term) -> Term {
    let (a, b) = split(&t.conclusion());
    mp(axiom("A5", 1, &[("a", a), ("b", b)]), t)
}

fn and_i(x: Term, y: Term) -> Term {
    let (b, c) = (x.conclusion(), y.conclusion());
    let s6 = axiom("A6", 0, &[("a", Formula::Top), ("b", b), ("c", c)]);
    let tx = lam("_", &Formula::Top, x);
    let ty = lam("_", &Formula::Top, y);
    mp(mp(mp(s6, tx), ty), top())
}

fn iff_l(t: Term) -> Term {
    and_l(t)
}

fn iff_r(t: Term) -> Term {
    and_r(t)
}

/// From `!a` and `a`, anything.
fn neg_elim(n: Term, x: Term, b: Formula) -> Term {
    mp(mp(axiom("A10", 0, &[("a", x.conclusion()), ("b", b)]), n), x)
}

/// From `a -> b` and `a -> !b`, `!a`.
fn neg_intro(f: Term, g: Term) -> Term {
    let (a, b) = split(&f.conclusion());
    mp(mp(axiom("A9", 0, &[("a", a), ("b", b)]), f), g)
}

fn a11(a: Formula) -> Term {
    axiom("A11", 0, &[("a", a)])
}

/// `~a` from a proof of `a -> !!~top`.
fn tilde_intro(a: &Formula, f: Term) -> Term {
    mp(iff_r(a11(a.clone())), f)
}

/// `!!~top` from `~a` and `a`.
fn tilde_elim(t: Term, x: Term) -> Term {
    mp(mp(iff_l(a11(x.conclusion())), t), x)
}

/// `a -> !!a` style: from `x: a`, prove `!!a`.
fn double_neg_intro(x: Term) -> Term {
    let na = neg(x.conclusion());
    neg_intro(lam("n", &na, x), lam("n", &na, hyp("n", &na)))
}

fn ilm_a() -> Term {
    let np = neg(p());
    let pb = imp(p(), Formula::Bot);
    let fwd = lam("n", &np, lam("x", &p(), neg_elim(hyp("n", &np), hyp("x", &p()), Formula::Bot)));
    let not_bot = neg_intro(
        lam("b", &Formula::Bot, hyp("b", &Formula::Bot)),
        axiom("A8", 0, &[("a", neg(Formula::Bot))]),
    );
    let bwd = lam(
        "f",
        &pb,
        neg_intro(hyp("f", &pb), mp(axiom("A1", 0, &[("a", neg(Formula::Bot)), ("b", p())]), not_bot)),
    );
    and_i(fwd, bwd)
}

fn ilm_b_fwd() -> Term {
    lam("n", &r(), mp(iff_r(a11(Formula::Top)), lam("_", &Formula::Top, hyp("n", &r()))))
}

fn ilm_b_bwd() -> Term {
    lam("x", &s(), double_neg_intro(hyp("x", &s())))
}

fn ilm_b() -> Term {
    and_i(ilm_b_fwd(), ilm_b_bwd())
}

/// `~a <-> (a -> ~top)`
fn ilm_c_at(a: &Formula) -> Term {
    let ta = tilde(a.clone());
    let as_ = imp(a.clone(), s());
    let fwd = lam(
        "x",
        &ta,
        lam("y", a, mp(ilm_b_fwd(), tilde_elim(hyp("x", &ta), hyp("y", a)))),
    );
    let bwd = lam(
        "f",
        &as_,
        tilde_intro(a, lam("y", a, mp(ilm_b_bwd(), mp(hyp("f", &as_), hyp("y", a))))),
    );
    and_i(fwd, bwd)
}

fn ilm_d() -> Term {
    let x = imp(s(), p());
    let tx = tilde(x.clone());
    let ns = neg(s());
    let body = lam("k", &tx, {
        let h = mp(iff_l(ilm_c_at(&x)), hyp("k", &tx));
        let to_p = lam("z", &s(), neg_elim(hyp("n", &ns), hyp("z", &s()), p()));
        neg_intro(lam("n", &ns, mp(h, to_p)), lam("n", &ns, hyp("n", &ns)))
    });
    tilde_intro(&tx, body)
}

fn ilm_e() -> Term {
    let tp = tilde(p());
    let ns = neg(s());
    let conj = and(p(), ns.clone());
    let nconj = neg(conj.clone());
    let fwd = lam("x", &tp, {
        let to_s = lam("y", &conj, mp(mp(iff_l(ilm_c_at(&p())), hyp("x", &tp)), and_l(hyp("y", &conj))));
        let to_ns = lam("y", &conj, and_r(hyp("y", &conj)));
        neg_intro(to_s, to_ns)
    });
    let bwd = lam(
        "n",
        &nconj,
        tilde_intro(
            &p(),
            lam(
                "y",
                &p(),
                neg_intro(
                    lam("m", &ns, and_i(hyp("y", &p()), hyp("m", &ns))),
                    lam("m", &ns, hyp("n", &nconj)),
                ),
            ),
        ),
    );
    and_i(fwd, bwd)
}

fn ilm_f_at(a: &Formula) -> Term {
    let na = neg(a.clone());
    lam("n", &na, tilde_intro(a, lam("y", a, neg_elim(hyp("n", &na), hyp("y", a), r()))))
}

fn ilm_g_at(a: &Formula) -> Term {
    let na = neg(a.clone());
    lam("y", a, tilde_intro(&na, lam("n", &na, neg_elim(hyp("n", &na), hyp("y", a), r()))))
}

fn ilm_h() -> Term {
    let np = neg(p());
    let ntp = neg(tilde(p()));
    lam(
        "m",
        &ntp,
        tilde_intro(&np, lam("n", &np, neg_elim(hyp("m", &ntp), mp(ilm_f_at(&p()), hyp("n", &np)), r()))),
    )
}

fn ilm_i() -> Term {
    let tp = tilde(p());
    let ntp = neg(tp.clone());
    let nntp = neg(ntp.clone());
    let ns = neg(s());
    let fwd = lam("x", &tp, double_neg_intro(hyp("x", &tp)));
    let bwd = lam(
        "n",
        &nntp,
        tilde_intro(
            &p(),
            lam("y", &p(), {
                let not_tp = neg_intro(
                    lam("x", &tp, hyp("m", &ns)),
                    lam("x", &tp, tilde_elim(hyp("x", &tp), hyp("y", &p()))),
                );
                neg_intro(lam("m", &ns, not_tp), lam("m", &ns, hyp("n", &nntp)))
            }),
        ),
    );
    and_i(fwd, bwd)
}

fn ilm_j() -> Term {
    let np = neg(p());
    let m = neg(tilde(np.clone()));
    lam("m", &m, neg_intro(ilm_g_at(&p()), lam("y", &p(), hyp("m", &m))))
}

/// Statements proved by [`ilm_theorems`], indexed `a` through `j`.
pub fn ilm_statements() -> Vec<(char, Formula)> {
    [
        ('a', "!p <-> (p -> bot)"),
        ('b', "!!~top <-> ~top"),
        ('c', "~p <-> (p -> ~top)"),
        ('d', "~~(~top -> p)"),
        ('e', "~p <-> !(p & !~top)"),
        ('f', "!p -> ~p"),
        ('g', "p -> ~!p"),
        ('h', "!~p -> ~!p"),
        ('i', "~p <-> !!~p"),
        ('j', "!~!p -> !p"),
    ]
    .into_iter()
    .map(|(c, t)| (c, formula(t)))
    .collect()
}

pub fn ilm_theorems() -> Vec<(char, Term)> {
    vec![
        ('a', ilm_a()),
        ('b', ilm_b()),
        ('c', ilm_c_at(&p())),
        ('d', ilm_d()),
        ('e', ilm_e()),
        ('f', ilm_f_at(&p())),
        ('g', ilm_g_at(&p())),
        ('h', ilm_h()),
        ('i', ilm_i()),
        ('j', ilm_j()),
    ]
}

// Sequent trees. `k` abbreviates `!~top`.

fn k() -> Formula {
    neg(s())
}

fn seq(l: Formula, r: Formula) -> Sequent {
    Sequent::new(l, r)
}

fn id(a: Formula) -> Tree {
    leaf("A1", 0, &[("a", a)])
}

fn cut(x: Tree, y: Tree) -> Tree {
    rule("A2", vec![x, y])
}

fn cuts(ts: Vec<Tree>) -> Tree {
    ts.into_iter().reduce(cut).expect("nonempty chain")
}

fn fst(a: Formula, b: Formula) -> Tree {
    leaf("A3", 0, &[("a", a), ("b", b)])
}

fn snd(a: Formula, b: Formula) -> Tree {
    leaf("A3", 1, &[("a", a), ("b", b)])
}

fn pair(x: Tree, y: Tree) -> Tree {
    rule("A4", vec![x, y])
}

fn comm(a: Formula, b: Formula) -> Tree {
    pair(snd(a.clone(), b.clone()), fst(a, b))
}

fn a16(a: Formula) -> Tree {
    leaf("A16", 0, &[("a", a)])
}

fn a17(a: Formula) -> Tree {
    leaf("A17", 0, &[("a", a)])
}

fn q() -> Formula {
    formula("q")
}

fn rr() -> Formula {
    formula("r")
}

fn t() -> Formula {
    formula("t")
}

fn kim_p1() -> Tree {
    let (a, b, c, d) = (p(), q(), rr(), t());
    pair(
        cut(fst(a.clone(), d.clone()), assume(seq(a.clone(), b))),
        cut(snd(a, d.clone()), assume(seq(d, c))),
    )
}

fn kim_p2() -> Tree {
    let (a, b) = (p(), q());
    let conj = pair(cut(fst(a.clone(), k()), assume(seq(a.clone(), b.clone()))), snd(a.clone(), k()));
    cuts(vec![a16(b), rule("A10", vec![conj]), a17(a)])
}

fn kim_p3() -> Tree {
    let (a, b) = (p(), q());
    let (ak, bk) = (and(a.clone(), k()), and(b.clone(), k()));
    let left = pair(
        cut(fst(tilde(a.clone()), tilde(b.clone())), a16(a.clone())),
        cut(snd(tilde(a.clone()), tilde(b.clone())), a16(b.clone())),
    );
    let a11 = leaf("A11", 0, &[("a", ak.clone()), ("b", bk.clone())]);
    let ab = or(a.clone(), b.clone());
    let distribute = cuts(vec![
        comm(ab.clone(), k()),
        leaf("A7", 0, &[("a", k()), ("b", a.clone()), ("c", b.clone())]),
        rule(
            "A5",
            vec![
                cut(comm(k(), a.clone()), leaf("A6", 0, &[("a", ak.clone()), ("b", bk.clone())])),
                cut(comm(k(), b.clone()), leaf("A6", 1, &[("a", ak), ("b", bk)])),
            ],
        ),
    ]);
    cuts(vec![left, a11, rule("A10", vec![distribute]), a17(ab)])
}

fn kim_p4() -> Tree {
    let bot = Formula::Bot;
    cuts(vec![leaf("A12", 0, &[]), rule("A10", vec![fst(bot.clone(), k())]), a17(bot)])
}

fn kim_p5() -> Tree {
    let a = p();
    let ta = tilde(a.clone());
    let ak = and(a.clone(), k());
    let y = and(ta.clone(), k());
    let inner = pair(
        pair(fst(a.clone(), y.clone()), cut(snd(a.clone(), y.clone()), snd(ta.clone(), k()))),
        cuts(vec![snd(a.clone(), y.clone()), fst(ta, k()), a16(a.clone())]),
    );
    let contradiction = cut(inner, leaf("A15", 0, &[("a", ak), ("b", Formula::Bot)]));
    let a14 = rule("A14", vec![contradiction]);
    let intro = pair(id(a.clone()), cut(leaf("A8", 0, &[("a", a.clone())]), leaf("A12", 0, &[])));
    cuts(vec![intro, a14, a17(tilde(a))])
}

fn kim_p6() -> Tree {
    let (a, b, c) = (p(), q(), rr());
    let bk = and(b.clone(), k());
    let to_ab = pair(fst(a.clone(), bk.clone()), cut(snd(a.clone(), bk.clone()), fst(b.clone(), k())));
    let premise = pair(
        cut(to_ab, assume(seq(and(a.clone(), b.clone()), c.clone()))),
        cut(snd(a.clone(), bk.clone()), snd(b.clone(), k())),
    );
    let a14 = rule("A14", vec![premise]);
    let tc = tilde(c.clone());
    let front = pair(fst(a.clone(), tc.clone()), cut(snd(a, tc), a16(c)));
    cuts(vec![front, a14, a17(b)])
}

fn kim_p7() -> Tree {
    cuts(vec![rule("A10", vec![snd(Formula::Top, k())]), a17(Formula::Top)])
}

fn kim_prime_a16() -> Tree {
    let a = p();
    let ta = tilde(a.clone());
    let p6 = rule("P6", vec![fst(a.clone(), Formula::Top)]);
    let a14 = rule("A14", vec![p6]);
    cuts(vec![leaf("A13", 0, &[("a", ta)]), rule("A10", vec![a14])])
}

fn kim_prime_a17() -> Tree {
    let a = p();
    let ak = and(a.clone(), k());
    let n = neg(ak.clone());
    let a14 = rule("A14", vec![id(ak)]);
    let to_s = cut(a14, leaf("P7", 0, &[]));
    let p6 = rule("P6", vec![cut(comm(n.clone(), a), to_s)]);
    let to_tt = cut(leaf("A8", 0, &[("a", n.clone())]), leaf("P5", 0, &[("a", Formula::Top)]));
    cut(pair(id(n), to_tt), p6)
}

/// Derived rules of K_im as `(id, tree)`; P1, P2 and P6 have open premises.
pub fn kim_rules() -> Vec<(&'static str, Tree)> {
    vec![
        ("P1", kim_p1()),
        ("P2", kim_p2()),
        ("P3", kim_p3()),
        ("P4", kim_p4()),
        ("P5", kim_p5()),
        ("P6", kim_p6()),
        ("P7", kim_p7()),
    ]
}

pub fn kim_prime_axioms() -> Vec<(&'static str, Tree)> {
    vec![("A16", kim_prime_a16()), ("A17", kim_prime_a17())]
}

/// Substitution used for the bundled instances of rule statements.
pub fn rule_sigma() -> Vec<(&'static str, Formula)> {
    vec![("a", p()), ("b", q()), ("c", rr()), ("d", t())]
}

/// Whether a bundled file should be accepted, and with which error class
/// when it should not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expect {
    Accept,
    Reject(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub file: String,
    pub text: String,
    pub expect: Expect,
}

fn fixture(file: impl Into<String>, text: String, expect: Expect) -> Fixture {
    Fixture { file: file.into(), text, expect }
}

const TOP_PROOF: &str = "\
# The shortest proof of top.
proof hilbert ILM
1 top -> (bot -> top) axiom A1
2 (top -> (bot -> top)) -> top axiom A7
3 top mp 2 1
qed top
end
";

const BAD_INSTANCE: &str = "\
# Line 1 is not an instance of A9.
proof hilbert ILM
1 p -> q axiom A9
qed p -> q
end
";

const BAD_MP: &str = "\
# Line 3 does not follow from lines 1 and 2.
proof hilbert ILM
1 p -> (q -> p) axiom A1
2 q -> (p -> q) axiom A1
3 q mp 1 2
qed q
end
";

const PREMISE_MISMATCH: &str = "\
# A10 needs the premise p |- q; q |- p is given.
proof sequent Kim
1 q |- p hyp
2 !q |- !p rule A10 from 1
end
";

/// Every bundled proof file, in a stable order.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![fixture("top.prf", TOP_PROOF.to_string(), Expect::Accept)];
    let statements = ilm_statements();
    for ((c, t), (_, goal)) in ilm_theorems().into_iter().zip(statements) {
        let script = compile(t);
        assert_eq!(script.goal(), &goal, "ILM ({c})");
        let text = write_hilbert(HilbertSystem::Ilm, &script, &[format!("ILM theorem ({c}): {goal}")]);
        out.push(fixture(format!("ilm_{c}.prf"), text, Expect::Accept));
    }
    for (id, tree) in kim_rules() {
        let d = linearize(&tree);
        let comment = format!("K_im derived {id}: {}", d.conclusion());
        out.push(fixture(
            format!("kim_{}.prf", id.to_lowercase()),
            write_derivation(SequentSystem::Kim, &d, &[comment]),
            Expect::Accept,
        ));
    }
    for (id, tree) in kim_prime_axioms() {
        let d = linearize(&tree);
        let comment = format!("K_im' derivation of {id}: {}", d.conclusion());
        out.push(fixture(
            format!("kim_prime_{}.prf", id.to_lowercase()),
            write_derivation(SequentSystem::KimPrime, &d, &[comment]),
            Expect::Accept,
        ));
    }
    out.push(fixture("bad_instance.prf", BAD_INSTANCE.to_string(), Expect::Reject("bad-instance")));
    out.push(fixture("bad_mp.prf", BAD_MP.to_string(), Expect::Reject("bad-mp")));
    out.push(fixture("premise_mismatch.prf", PREMISE_MISMATCH.to_string(), Expect::Reject("premise-mismatch")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofs::io::{parse_proof, ProofFile};
    use crate::proofs::{check_hilbert, check_sequent_derivation, rule_instance};

    #[test]
    fn ilm_theorems_check() {
        for ((c, t), (_, goal)) in ilm_theorems().into_iter().zip(ilm_statements()) {
            let script = compile(t);
            assert_eq!(script.goal(), &goal, "({c})");
            assert_eq!(check_hilbert(HilbertSystem::Ilm, &script), Ok(()), "({c})");
        }
    }

    #[test]
    fn kim_rules_derive_their_statements() {
        for (id, tree) in kim_rules().into_iter().chain(kim_prime_axioms()) {
            let d = linearize(&tree);
            let sys = if id.starts_with('P') { SequentSystem::Kim } else { SequentSystem::KimPrime };
            let got = check_sequent_derivation(sys, &d).unwrap_or_else(|e| panic!("{id}: {e}"));
            let (premises, conclusion) = rule_instance(id, &rule_sigma());
            assert_eq!(got.conclusion, conclusion, "{id}");
            assert_eq!(got.hypotheses, premises, "{id}");
        }
    }

    #[test]
    fn fixtures_behave_as_labelled() {
        for fx in fixtures() {
            let verdict = match parse_proof(&fx.text).unwrap() {
                ProofFile::Hilbert { system, script } => check_hilbert(system, &script).map_err(|e| e.class()),
                ProofFile::Sequent { system, derivation } => {
                    check_sequent_derivation(system, &derivation).map(|_| ()).map_err(|e| e.class())
                }
            };
            match fx.expect {
                Expect::Accept => assert_eq!(verdict, Ok(()), "{}", fx.file),
                Expect::Reject(class) => assert_eq!(verdict, Err(class), "{}", fx.file),
            }
        }
    }
}
