"""Subgroup families: full lattice, maximal subgroups, two-generated and
minimal non-abelian subgroups."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GroupTable,
    SubgroupSet,
    _extend,
    centralizer,
    cyclic_subgroup,
    derived_subgroup,
    frattini_pgroup,
    generating_set,
    is_abelian_subgroup,
    prime_power,
)
from .errors import CapabilityError, InputError

ALL_SUBGROUPS_CAP = 256
PAIR_CAP = 2048


@dataclass
class SubgroupInventory:
    parent: GroupTable
    subgroups: list[SubgroupSet]
    complete: bool = True

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def to_json(self) -> dict:
        return {
            "group": self.parent.name,
            "order": self.parent.order,
            "complete": self.complete,
            "subgroups": [s.elements for s in self.subgroups],
        }


def _whole(g: GroupTable, s: SubgroupSet | None) -> SubgroupSet:
    return g.whole() if s is None else s


def cyclic_representatives(g: GroupTable, s: SubgroupSet | None = None) -> list[int]:
    """One generator per non-trivial cyclic subgroup of S, namely the
    smallest index generating it; ascending."""
    s = _whole(g, s)
    key = ("cycreps", s.bits)
    hit = g._memo.get(key)
    if hit is None:
        orders = g.element_orders
        seen = bytearray(g.order)
        hit = []
        for x in s.elements:
            if x == 0 or seen[x]:
                continue
            hit.append(x)
            o = int(orders[x])
            cur = x
            for k in range(1, o):
                if _coprime(k, o):
                    seen[cur] = 1
                cur = g._rows[cur][x]
        g._memo[key] = hit
    return hit


def _coprime(a: int, b: int) -> bool:
    while b:
        a, b = b, a % b
    return a == 1


def all_subgroups(g: GroupTable, s: SubgroupSet | None = None, *, cap: int | None = None) -> SubgroupInventory:
    """Every subgroup of S exactly once, ordered by (order, bits).

    Starts from the cyclic subgroups and repeatedly joins known subgroups
    with one more cyclic generator until nothing new appears.
    """
    s = _whole(g, s)
    cap = ALL_SUBGROUPS_CAP if cap is None else cap
    if s.order > cap:
        raise CapabilityError(f"all_subgroups: order {s.order} exceeds enumeration cap {cap}", cap)
    key = ("subgroups", s.bits)
    hit = g._memo.get(key)
    if hit is None:
        reps = cyclic_representatives(g, s)
        known: dict[int, SubgroupSet] = {1: g.trivial()}
        queue: list[SubgroupSet] = []
        for x in reps:
            c = cyclic_subgroup(g, x)
            if c.bits not in known:
                known[c.bits] = c
                queue.append(c)
        i = 0
        while i < len(queue):
            h = queue[i]
            i += 1
            if h.bits == s.bits:
                continue
            for x in reps:
                if h.bits >> x & 1:
                    continue
                k = _extend(g, h, [x])
                if k.bits not in known:
                    known[k.bits] = k
                    queue.append(k)
        hit = sorted(known.values(), key=lambda t: (t.order, t.bits))
        g._memo[key] = hit
    return SubgroupInventory(g, list(hit), True)


def maximal_subgroups_generic(g: GroupTable, s: SubgroupSet | None = None, *, cap: int | None = None) -> list[SubgroupSet]:
    """Proper subgroups of S that are maximal under inclusion, read off the
    full lattice."""
    s = _whole(g, s)
    if s.order == 1:
        return []
    proper = [h for h in all_subgroups(g, s, cap=cap).subgroups if h.bits != s.bits]
    proper.sort(key=lambda t: -t.order)
    out: list[SubgroupSet] = []
    for h in proper:
        if not any(h.bits & ~m.bits == 0 for m in out):
            # any strictly larger subgroup containing h is itself under some
            # maximal subgroup already recorded, so testing against `out` suffices
            out.append(h)
    out.sort(key=lambda t: (t.order, t.bits))
    return out


def pgroup_basis(g: GroupTable, s: SubgroupSet, phi: SubgroupSet) -> list[int]:
    """Elements x_1..x_d of S whose images form a basis of S/Phi."""
    basis: list[int] = []
    h = phi
    for x in s.elements:
        if h.bits >> x & 1:
            continue
        basis.append(x)
        h = _extend(g, h, [x])
        if h.order == s.order:
            break
    return basis


def maximal_subgroups_pgroup(g: GroupTable, s: SubgroupSet | None, p: int) -> list[SubgroupSet]:
    """The (p^d - 1)/(p - 1) index-p subgroups of a p-group S, as preimages
    of the hyperplanes of S/Phi(S)."""
    s = _whole(g, s)
    key = ("maxp", s.bits)
    hit = g._memo.get(key)
    if hit is not None:
        return hit
    if s.order == 1:
        return []
    phi = frattini_pgroup(g, s, p)
    basis = pgroup_basis(g, s, phi)
    d = len(basis)
    out = []
    # a hyperplane is the kernel of a functional f normalised so that its
    # first non-zero coordinate (index k) is 1; kernel basis e_j - f_j e_k
    for f in _normalised_functionals(d, p):
        k = next(i for i, c in enumerate(f) if c)
        xk = basis[k]
        gens = []
        for j in range(d):
            if j == k:
                continue
            # x_j x_k^(-f_j)
            gens.append(g.mul(basis[j], g.pow(xk, -f[j])))
        out.append(_extend(g, phi, gens) if gens else phi)
    out.sort(key=lambda t: t.bits)
    g._memo[key] = out
    return out


def _normalised_functionals(d: int, p: int):
    for k in range(d):
        # coordinates before k are zero, coordinate k is one
        for tail in _vectors(d - k - 1, p):
            yield (0,) * k + (1,) + tail


def _vectors(length: int, p: int):
    if length == 0:
        yield ()
        return
    for head in range(p):
        for rest in _vectors(length - 1, p):
            yield (head,) + rest


def maximal_subgroups(g: GroupTable, s: SubgroupSet | None = None, *, cap: int | None = None) -> list[SubgroupSet]:
    """Maximal subgroups of S; hyperplane fast path when |S| is a prime power."""
    s = _whole(g, s)
    pp = prime_power(s.order)
    if pp is not None:
        return maximal_subgroups_pgroup(g, s, pp[0])
    return maximal_subgroups_generic(g, s, cap=cap)


def two_generated_subgroups(
    g: GroupTable, s: SubgroupSet | None = None, *, cap: int | None = None
) -> list[tuple[SubgroupSet, tuple[int, int]]]:
    """Distinct subgroups ``<x, y>`` over non-commuting pairs of S.

    Pairs range over cyclic-subgroup representatives only, since ``<x, y>``
    depends only on ``<x>`` and ``<y>``.  Each entry keeps the first witness
    pair in lexicographic order.
    """
    s = _whole(g, s)
    cap = PAIR_CAP if cap is None else cap
    if s.order > cap:
        raise CapabilityError(f"pair scan: order {s.order} exceeds pair cap {cap}", cap)
    key = ("twogen", s.bits)
    hit = g._memo.get(key)
    if hit is None:
        hit = list(iter_two_generated(g, s))
        g._memo[key] = hit
    return hit


def iter_two_generated(g: GroupTable, s: SubgroupSet):
    """Generator form of :func:`two_generated_subgroups` (no cap, no memo)
    so that scans can stop at the first interesting subgroup."""
    reps = cyclic_representatives(g, s)
    masks = g.commute_masks
    seen: set[int] = set()
    for ix, x in enumerate(reps):
        cx = cyclic_subgroup(g, x)
        mx = masks[x]
        for y in reps[ix + 1:]:
            if mx >> y & 1:
                continue
            k = _extend(g, cx, [y])
            if k.bits in seen:
                continue
            seen.add(k.bits)
            yield SubgroupSet(k.bits, k.order, (x, y)), (x, y)


def minimal_nonabelian_subgroups(g: GroupTable, s: SubgroupSet | None = None, *, cap: int | None = None) -> list[SubgroupSet]:
    """Minimal non-abelian subgroups of S.

    Every non-abelian subgroup contains a non-commuting pair, hence one of
    the two-generated subgroups; so the minimal non-abelian subgroups are
    exactly the inclusion-minimal entries of that list.
    """
    s = _whole(g, s)
    key = ("minnonab", s.bits)
    hit = g._memo.get(key)
    if hit is None:
        cands = sorted((h for h, _ in two_generated_subgroups(g, s, cap=cap)), key=lambda t: (t.order, t.bits))
        hit = []
        for h in cands:
            if not any(m.bits & ~h.bits == 0 for m in hit):
                hit.append(h)
        g._memo[key] = hit
    return hit


def is_minimal_nonabelian(g: GroupTable, k: SubgroupSet, *, cap: int | None = None) -> bool:
    """K non-abelian and all of its maximal subgroups abelian."""
    if is_abelian_subgroup(g, k):
        return False
    return all(is_abelian_subgroup(g, generating_set(g, m)) for m in maximal_subgroups(g, k, cap=cap))


def classify_minimal_nonabelian(g: GroupTable, k: SubgroupSet, p: int):
    """Tag of a minimal non-abelian subgroup: ``("K1",)``, ``("K2", m, n)``,
    ``("K3", m, n)`` or ``("not-p-group",)``.

    K1 is Q8 (order 8, one involution); otherwise metacyclic groups are K2
    and the rest K3.  For K2, m is the largest log_p |N| over cyclic normal
    N with cyclic quotient; for K3, m >= n with p^m the exponent.
    """
    from .structure import exponent, metacyclic_witnesses

    if not is_minimal_nonabelian(g, k):
        raise InputError("subgroup is not minimal non-abelian")
    pp = prime_power(k.order)
    if pp is None or pp[0] != p:
        return ("not-p-group",)
    total = pp[1]
    if k.order == 8 and p == 2:
        involutions = sum(1 for x in k.elements if g.element_orders[x] == 2)
        if involutions == 1:
            return ("K1",)
    wit = metacyclic_witnesses(g, k)
    if wit:
        m = max(_logp(n.order, p) for n, _ in wit)
        return ("K2", m, total - m)
    m = _logp(exponent(g, k), p)
    return ("K3", m, total - 1 - m)


def _logp(x: int, p: int) -> int:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


def derived_order(g: GroupTable, k: SubgroupSet) -> int:
    return derived_subgroup(g, k).order


def rank_of_pgroup(g: GroupTable, k: SubgroupSet, p: int) -> int:
    """Minimal number of generators d(K) = log_p |K : Phi(K)|."""
    phi = frattini_pgroup(g, k, p)
    return _logp(k.order // phi.order, p)


def centralizer_in(g: GroupTable, h: SubgroupSet, within: SubgroupSet) -> SubgroupSet:
    """``C_within(H)``."""
    c = centralizer(g, h)
    return c & within
