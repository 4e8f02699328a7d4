"""Naive reference implementations used as oracles.

Everything here works from the raw multiplication table with plain Python
sets and loops, and shares no code with the package beyond reading
``g.table``.
"""

from __future__ import annotations

import itertools


def rows(g):
    return g.table.tolist()


def mul(t, x, y):
    return t[x][y]


def inv(t, x):
    return next(y for y in range(len(t)) if t[x][y] == 0)


def closure(t, gens):
    """Subgroup generated by ``gens``: saturate under products until stable."""
    s = {0} | set(gens)
    while True:
        new = {t[a][b] for a in s for b in s} - s
        if not new:
            return frozenset(s)
        s |= new


def commutes(t, x, y):
    return t[x][y] == t[y][x]


def centralizer(t, elems):
    return frozenset(x for x in range(len(t)) if all(commutes(t, x, s) for s in elems))


def is_abelian(t, elems):
    elems = list(elems)
    return all(commutes(t, a, b) for a, b in itertools.combinations(elems, 2))


def center(t):
    return centralizer(t, range(len(t)))


def order_of(t, x):
    k, cur = 1, x
    while cur:
        cur = t[cur][x]
        k += 1
    return k


def all_subgroups(t):
    """Every subgroup, found by closing every subset generated by up to three
    elements and then saturating with joins (fine for orders up to ~32)."""
    n = len(t)
    subs = {closure(t, [x]) for x in range(n)}
    changed = True
    while changed:
        changed = False
        for h in list(subs):
            for x in range(n):
                if x not in h:
                    k = closure(t, h | {x})
                    if k not in subs:
                        subs.add(k)
                        changed = True
    return subs


def in_A_by_definition(t):
    """Every non-abelian subgroup contains its centralizer."""
    for h in all_subgroups(t):
        if not is_abelian(t, h) and not centralizer(t, h) <= h:
            return False
    return True


def is_associative(t):
    n = len(t)
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def derived(t, elems):
    elems = list(elems)
    comms = {t[t[inv(t, a)][inv(t, b)]][t[a][b]] for a in elems for b in elems}
    return closure(t, comms)


def maximal_subgroups(t):
    subs = all_subgroups(t)
    whole = frozenset(range(len(t)))
    proper = [h for h in subs if h != whole]
    return {h for h in proper if not any(h < k for k in proper)}


def frattini(t):
    out = frozenset(range(len(t)))
    for m in maximal_subgroups(t):
        out &= m
    return out
