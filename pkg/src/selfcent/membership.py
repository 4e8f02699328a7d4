"""Deciding whether every non-abelian subgroup of G contains its centralizer.

Four independent criteria are implemented:

* ``bruteforce`` checks every non-abelian subgroup of the full lattice;
* ``pairs`` checks the subgroups ``<x, y>`` over non-commuting pairs;
* ``minimal`` checks the minimal non-abelian subgroups only;
* ``recursive`` checks ``Z(L) <= Phi(L)`` and recurses into maximal subgroups.

A negative verdict always carries a witness ``(H, z)`` with H non-abelian
and z a centralizing element outside H, which :func:`check_witness`
re-verifies from the raw table.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .core import (
    GroupTable,
    SubgroupSet,
    centralizer,
    format_tbl,
    frattini,
    generating_set,
    is_abelian_subgroup,
    prime_power,
)
from .errors import CapabilityError, MethodDisagreement
from .subgroups import (
    ALL_SUBGROUPS_CAP,
    PAIR_CAP,
    all_subgroups,
    iter_two_generated,
    maximal_subgroups,
    minimal_nonabelian_subgroups,
)

IN_A = "in-A"
NOT_IN_A = "not-in-A"
METHODS = ("bruteforce", "pairs", "minimal", "recursive")


@dataclass
class MembershipReport:
    group: str
    order: int
    verdict: str
    method: str
    witness: tuple[SubgroupSet, int] | None = None
    examined: int = 0
    micros: int = 0

    @property
    def in_A(self) -> bool:
        return self.verdict == IN_A

    def to_json(self) -> dict:
        wit = None
        if self.witness is not None:
            h, z = self.witness
            wit = {"subgroup": h.elements, "element": int(z)}
        return {
            "group": self.group,
            "order": self.order,
            "verdict": self.verdict,
            "method": self.method,
            "witness": wit,
            "stats": {"examined": self.examined, "micros": self.micros},
        }


def _report(g: GroupTable, method: str, witness, examined: int, started: float) -> MembershipReport:
    micros = int((time.perf_counter() - started) * 1e6)
    verdict = IN_A if witness is None else NOT_IN_A
    return MembershipReport(g.name, g.order, verdict, method, witness, examined, micros)


def _failure(g: GroupTable, h: SubgroupSet) -> tuple[SubgroupSet, int] | None:
    """``(H, z)`` with z the least element of C_G(H) outside H, if any."""
    outside = centralizer(g, h).bits & ~h.bits
    if not outside:
        return None
    z = (outside & -outside).bit_length() - 1
    return h, z


def check_witness(g: GroupTable, subgroup, z: int) -> bool:
    """Re-check a witness using the multiplication table only: the set is a
    non-abelian subgroup, z lies outside it, and z commutes with all of it."""
    els = np.array(sorted(int(x) for x in subgroup))
    if not len(els) or els[0] != 0 or not 0 <= z < g.order:
        return False
    t = g.table
    block = t[np.ix_(els, els)]
    if not np.array_equal(np.unique(block), els):
        return False
    if np.isin(z, els):
        return False
    if np.array_equal(block, block.T):
        return False
    return bool(np.array_equal(t[z, els], t[els, z]))


def is_A_bruteforce(g: GroupTable, *, cap: int | None = None) -> MembershipReport:
    started = time.perf_counter()
    if g.is_abelian():
        return _report(g, "bruteforce", None, 0, started)
    cap = ALL_SUBGROUPS_CAP if cap is None else cap
    examined = 0
    for h in all_subgroups(g, cap=cap):
        h = generating_set(g, h)
        if is_abelian_subgroup(g, h):
            continue
        examined += 1
        wit = _failure(g, h)
        if wit is not None:
            return _report(g, "bruteforce", wit, examined, started)
    return _report(g, "bruteforce", None, examined, started)


def is_A_pairs(g: GroupTable, *, cap: int | None = None) -> MembershipReport:
    started = time.perf_counter()
    cap = PAIR_CAP if cap is None else cap
    if g.order > cap:
        raise CapabilityError(f"pair scan: order {g.order} exceeds pair cap {cap}", cap)
    examined = 0
    for h, (x, y) in iter_two_generated(g, g.whole()):
        examined += 1
        wit = _failure(g, h)
        if wit is not None:
            # containment fails; strictness would fail only for abelian H
            if g.mul(x, y) == g.mul(y, x):
                raise AssertionError(f"pair ({x}, {y}) commutes")
            return _report(g, "pairs", wit, examined, started)
    return _report(g, "pairs", None, examined, started)


def is_A_minimal(g: GroupTable, *, cap: int | None = None) -> MembershipReport:
    started = time.perf_counter()
    examined = 0
    for k in minimal_nonabelian_subgroups(g, cap=cap):
        examined += 1
        wit = _failure(g, k)
        if wit is not None:
            return _report(g, "minimal", wit, examined, started)
    return _report(g, "minimal", None, examined, started)


def is_A_recursive(g: GroupTable, *, cap: int | None = None) -> MembershipReport:
    """Non-abelian L is in the class iff Z(L) <= Phi(L) and every maximal
    subgroup is; results are memoized by element set for this call."""
    started = time.perf_counter()
    memo: dict[int, tuple[SubgroupSet, int] | None] = {}

    def visit(s: SubgroupSet):
        if s.bits in memo:
            return memo[s.bits]
        s = generating_set(g, s)
        wit = None
        if not is_abelian_subgroup(g, s):
            z_bits = centralizer(g, s).bits & s.bits
            phi = frattini(g, s, cap=cap)
            outside = z_bits & ~phi.bits
            maxes = maximal_subgroups(g, s, cap=cap)
            if outside:
                z = (outside & -outside).bit_length() - 1
                # a maximal subgroup missing a central z is non-abelian,
                # otherwise S = M<z> would be abelian
                m = next(m for m in maxes if not m.bits >> z & 1)
                wit = (m, z)
            else:
                for m in maxes:
                    wit = visit(m)
                    if wit is not None:
                        break
        memo[s.bits] = wit
        return wit

    wit = visit(g.whole())
    return _report(g, "recursive", wit, len(memo), started)


_DISPATCH = {
    "bruteforce": is_A_bruteforce,
    "pairs": is_A_pairs,
    "minimal": is_A_minimal,
    "recursive": is_A_recursive,
}


def default_method(g: GroupTable) -> str:
    """Recursive for p-groups (hyperplane maximal subgroups), pairs otherwise."""
    return "recursive" if prime_power(g.order) is not None else "pairs"


def is_A(g: GroupTable, method: str = "auto", **kw) -> MembershipReport:
    if method == "auto":
        method = default_method(g)
    try:
        fn = _DISPATCH[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}") from None
    return fn(g, **kw)


def applicable_methods(g: GroupTable, *, subgroup_cap: int | None = None, pair_cap: int | None = None) -> list[str]:
    """Methods whose caps admit g."""
    subgroup_cap = ALL_SUBGROUPS_CAP if subgroup_cap is None else subgroup_cap
    pair_cap = PAIR_CAP if pair_cap is None else pair_cap
    out = []
    if g.order <= subgroup_cap:
        out.append("bruteforce")
    if g.order <= pair_cap:
        out += ["pairs", "minimal"]
    if prime_power(g.order) is not None or g.order <= subgroup_cap:
        out.append("recursive")
    return out


@dataclass
class CrossCheck:
    group: str
    order: int
    verdict: str
    reports: dict[str, MembershipReport] = field(default_factory=dict)

    @property
    def in_A(self) -> bool:
        return self.verdict == IN_A

    @property
    def timings(self) -> dict[str, int]:
        return {m: r.micros for m, r in self.reports.items()}

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "verdict": self.verdict,
            "reports": {m: r.to_json() for m, r in self.reports.items()},
        }


def cross_check(g: GroupTable, methods=None, *, subgroup_cap: int | None = None, pair_cap: int | None = None) -> CrossCheck:
    """Run every applicable method and insist that they agree and that every
    witness re-checks; otherwise raise :class:`MethodDisagreement`."""
    if methods is None:
        methods = applicable_methods(g, subgroup_cap=subgroup_cap, pair_cap=pair_cap)
    if not methods:
        raise CapabilityError(f"no membership method applies to order {g.order}")
    caps = {"bruteforce": subgroup_cap, "pairs": pair_cap, "minimal": pair_cap, "recursive": subgroup_cap}
    reports = {m: _DISPATCH[m](g, cap=caps[m]) for m in methods}
    verdicts = {r.verdict for r in reports.values()}
    bad = [m for m, r in reports.items() if r.witness is not None and not check_witness(g, r.witness[0].elements, r.witness[1])]
    if len(verdicts) != 1 or bad:
        dump = [f"group {g.name} (order {g.order})", format_tbl(g)]
        dump += [f"{m}: {r.to_json()}" for m, r in reports.items()]
        if bad:
            dump.append(f"invalid witnesses from {bad}")
        raise MethodDisagreement("\n".join(dump))
    return CrossCheck(g.name, g.order, verdicts.pop(), reports)
