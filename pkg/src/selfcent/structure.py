"""p-group structure: nilpotency class, maximal class, the 2-step
centralizer, exponent and metacyclicity."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .core import (
    GroupTable,
    SubgroupSet,
    cyclic_subgroup,
    generating_set,
    is_abelian_subgroup,
    is_normal,
    lower_central_series,
    prime_power,
)
from .errors import InputError


@dataclass
class PGroupProfile:
    p: int
    n: int
    nilpotency_class: int
    is_maximal_class: bool
    exponent: int
    p_series: list[int] = field(default_factory=list)  # |P_1|, ..., |P_n|
    abelian: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def nilpotency_class(g: GroupTable, s: SubgroupSet | None = None) -> int | None:
    """Class of S, or None when S is not nilpotent."""
    lcs = lower_central_series(g, s)
    if lcs[-1].order != 1:
        return None
    return len(lcs) - 1


def _pgroup_exponent(g: GroupTable, s: SubgroupSet | None, p: int | None) -> tuple[int, int]:
    order = g.order if s is None else s.order
    pp = prime_power(order)
    if pp is None or (p is not None and pp[0] != p):
        raise InputError(f"order {order} is not a power of {p if p else 'a prime'}")
    return pp


def is_maximal_class(g: GroupTable, p: int | None = None, s: SubgroupSet | None = None) -> bool:
    """Order p^n with n >= 2 and nilpotency class n - 1."""
    _, n = _pgroup_exponent(g, s, p)
    if n < 2:
        return False
    return nilpotency_class(g, s) == n - 1


def p_series(g: GroupTable) -> list[SubgroupSet]:
    """``[P_1, P_2, ..., P_n]`` for a group of maximal class of order p^n,
    with ``P_i = gamma_i`` for i >= 2 and P_1 the 2-step centralizer."""
    lcs = lower_central_series(g)
    return [two_step_centralizer(g)] + lcs[1:]


def two_step_centralizer(g: GroupTable) -> SubgroupSet:
    """``P_1 = C_G(gamma_2 / gamma_4)`` of a maximal-class p-group of order
    at least p^4; gamma_4 is taken trivial when the class is below 4."""
    p, n = _pgroup_exponent(g, None, None)
    if n < 4:
        raise InputError(f"two-step centralizer needs order >= p^4, got {p}^{n}")
    if not is_maximal_class(g, p):
        raise InputError(f"{g.name} does not have maximal class")
    key = "P1"
    hit = g._memo.get(key)
    if hit is not None:
        return hit
    lcs = lower_central_series(g)
    p2 = generating_set(g, lcs[1])
    p4 = lcs[3] if len(lcs) > 3 else g.trivial()
    in_p4 = np.zeros(g.order, dtype=bool)
    in_p4[p4.elements] = True
    t, inv = g.table, g.inverse
    xs = np.arange(g.order)
    keep = np.ones(g.order, dtype=bool)
    for s in p2.generators:
        comm = t[t[inv[xs], inv[s]], t[xs, s]]
        keep &= in_p4[comm]
    els = np.flatnonzero(keep).tolist()
    bits = 0
    for x in els:
        bits |= 1 << x
    hit = g.subgroup(bits)
    if hit.order * p != g.order or not lcs[1] <= hit:
        raise AssertionError(f"P1 of {g.name} has order {hit.order}, expected index {p} over gamma_2")
    g._memo[key] = hit
    return hit


def exponent(g: GroupTable, s: SubgroupSet | None = None) -> int:
    orders = g.element_orders
    els = orders if s is None else orders[np.array(s.elements)]
    return math.lcm(*np.unique(els).tolist())


def is_elementary_abelian(g: GroupTable, p: int, s: SubgroupSet | None = None) -> bool:
    s = g.whole() if s is None else s
    if s.order == 1:
        return True
    return exponent(g, s) == p and is_abelian_subgroup(g, generating_set(g, s))


def has_elementary_abelian_maximal(g: GroupTable, p: int) -> bool:
    from .subgroups import maximal_subgroups_pgroup

    _pgroup_exponent(g, None, p)
    return any(is_elementary_abelian(g, p, m) for m in maximal_subgroups_pgroup(g, None, p))


def metacyclic_witnesses(g: GroupTable, s: SubgroupSet | None = None, *, first: bool = False):
    """Pairs (N, x): N cyclic normal in S and S = <N, x>.

    N runs over cyclic subgroups in decreasing order, x over elements of S
    in ascending order (first x per N).
    """
    from .subgroups import cyclic_representatives

    s = g.whole() if s is None else s
    if s.order == 1:
        return [(g.trivial(), 0)]
    cyc = {}
    for x in cyclic_representatives(g, s):
        c = cyclic_subgroup(g, x)
        cyc.setdefault(c.bits, c)
    sgen = generating_set(g, s)
    out = []
    for n in sorted(cyc.values(), key=lambda c: (-c.order, c.bits)):
        if s.order % n.order or not is_normal(g, n, sgen):
            continue
        if n.order == s.order:
            out.append((n, 0))
            if first:
                return out
            continue
        need = s.order // n.order
        for x in s.elements:
            if _order_mod(g, x, n) == need:
                out.append((n, x))
                break
        if first and out:
            return out
    return out


def _order_mod(g: GroupTable, x: int, n: SubgroupSet) -> int:
    k = 1
    cur = x
    while not n.bits >> cur & 1:
        cur = g._rows[cur][x]
        k += 1
    return k


def is_metacyclic(g: GroupTable, s: SubgroupSet | None = None):
    """``(True, (N, x))`` for the first witness, else ``(False, None)``."""
    wit = metacyclic_witnesses(g, s, first=True)
    return (True, wit[0]) if wit else (False, None)


def profile(g: GroupTable) -> PGroupProfile | None:
    """Structural summary of a p-group (None for other groups)."""
    pp = prime_power(g.order)
    if pp is None:
        return None
    p, n = pp
    cls = nilpotency_class(g)
    maxc = n >= 2 and cls == n - 1
    series: list[int] = []
    if maxc and n >= 4:
        series = [h.order for h in p_series(g)]
    return PGroupProfile(p, n, cls, maxc, exponent(g), series, g.is_abelian())
