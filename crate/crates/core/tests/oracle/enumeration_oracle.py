#!/usr/bin/env python3
"""Brute-force counts of finite algebras up to isomorphism.

Shares no code with the Rust enumerator: lattices come from every relation on
the middle elements, implications from a direct max-search, K_im-algebras
from every pair of unary maps, and isomorphism classes from minimising an
encoding over all n! relabellings.

Usage: enumeration_oracle.py > ../fixtures/enumeration_counts.json
"""
import itertools
import json
import sys


def lattices(n):
    """All bounded lattices on 0..n-1 with 0 bottom and n-1 top (labelled)."""
    if n == 1:
        yield [[True]]
        return
    mids = list(range(1, n - 1))
    pairs = [(a, b) for a in mids for b in mids if a != b]
    for bits in range(1 << len(pairs)):
        leq = [[a == b or a == 0 or b == n - 1 for b in range(n)] for a in range(n)]
        for k, (a, b) in enumerate(pairs):
            if bits >> k & 1:
                leq[a][b] = True
        ok = True
        for a in range(n):
            for b in range(n):
                if a != b and leq[a][b] and leq[b][a]:
                    ok = False
                for c in range(n):
                    if leq[a][b] and leq[b][c] and not leq[a][c]:
                        ok = False
        if ok:
            yield leq


def meet_join(leq, n):
    meet = [[None] * n for _ in range(n)]
    join = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if leq[c][a] and leq[c][b]]
            upper = [c for c in range(n) if leq[a][c] and leq[b][c]]
            glb = [c for c in lower if all(leq[d][c] for d in lower)]
            lub = [c for c in upper if all(leq[c][d] for d in upper)]
            if not glb or not lub:
                return None
            meet[a][b], join[a][b] = glb[0], lub[0]
    return meet, join


def distributive(meet, join, n):
    return all(
        meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]
        for a in range(n) for b in range(n) for c in range(n)
    )


def canon(n, leq, unary=()):
    """Least encoding of (leq, unary tables) over all relabellings."""
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, e in enumerate(perm):
            inv[e] = i
        code = tuple(leq[perm[i]][perm[j]] for i in range(n) for j in range(n))
        for t in unary:
            code += tuple(inv[t[perm[i]]] for i in range(n))
        if best is None or code < best:
            best = code
    return best


def structures(n):
    out = []
    for leq in lattices(n):
        mj = meet_join(leq, n)
        if mj is None:
            continue
        meet, join = mj
        if distributive(meet, join, n):
            out.append((leq, meet, join))
    return out


def residuum(leq, meet, n, a, b):
    cands = [c for c in range(n) if leq[meet[a][c]][b]]
    top = [c for c in cands if all(leq[d][c] for d in cands)]
    return top[0]


def em(join, t, n, top):
    return all(join[a][t[a]] == top for a in range(n))


def minimal(leq, meet, join, t, n, bot, top):
    if t[bot] != top:
        return False
    for a in range(n):
        if not leq[a][t[t[a]]]:
            return False
        for b in range(n):
            if leq[a][b] and not leq[t[b]][t[a]]:
                return False
            if not leq[meet[t[a]][t[b]]][t[join[a][b]]]:
                return False
            for c in range(n):
                if leq[meet[a][b]][c] and not leq[meet[a][t[c]]][t[b]]:
                    return False
    return True


def counts(n, with_kim):
    bot, top = 0, n - 1
    pba, ccp, cvc, kim, kimv = set(), set(), set(), set(), set()
    for leq, meet, join in structures(n):
        pba.add(canon(n, leq))
        imp = [[residuum(leq, meet, n, a, b) for b in range(n)] for a in range(n)]
        neg = [imp[a][bot] for a in range(n)]
        for t1 in range(n):
            if neg[neg[t1]] != t1:
                continue
            tilde = [imp[a][t1] for a in range(n)]
            key = canon(n, leq, (tilde,))
            ccp.add(key)
            if em(join, tilde, n, top):
                cvc.add(key)
        if not with_kim:
            continue
        maps = list(itertools.product(range(n), repeat=n))
        mins = [t for t in maps if minimal(leq, meet, join, t, n, bot, top)]
        ints = [t for t in mins if all(meet[a][t[a]] == bot for a in range(n))]
        for ng in ints:
            for t in mins:
                t1 = t[top]
                if ng[ng[t1]] != t1:
                    continue
                key = canon(n, leq, (ng, t))
                kim.add(key)
                if em(join, t, n, top):
                    kimv.add(key)
    out = {"pba": len(pba), "ccpba": len(ccp), "cvcpba": len(cvc)}
    if with_kim:
        out.update({"kim": len(kim), "kim_vee": len(kimv)})
    return out


def main():
    max_n = 6
    kim_max = 6
    table = {k: {} for k in ("pba", "ccpba", "cvcpba", "kim", "kim_vee")}
    for n in range(1, max_n + 1):
        for k, v in counts(n, n <= kim_max).items():
            table[k][str(n)] = v
    json.dump(table, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
