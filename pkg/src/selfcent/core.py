"""Dense-table finite groups and subgroup-level operators.

Elements of a group of order ``n`` are the integers ``0..n-1`` with the
identity pinned at ``0``.  Subgroups are bit-vectors (Python ints) over that
index space.  Conventions: ``[x, y] = x^-1 y^-1 x y`` and ``a^b = b^-1 a b``.
"""

from __future__ import annotations

import functools
import os
from array import array
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapabilityError, ConstructionError, InputError

HARD_MAX_ORDER = 65535


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"{name} must be an integer, got {raw!r}") from exc
    if not 1 <= value <= HARD_MAX_ORDER:
        raise InputError(f"{name}={value} outside 1..{HARD_MAX_ORDER}")
    return value


MAX_ORDER = _env_cap("SELFCENT_MAX_ORDER", 4096)


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``k >= 1``, or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def is_prime(p: int) -> bool:
    pp = prime_power(p)
    return pp is not None and pp[1] == 1


def bits_from_indices(indices: Iterable[int], n: int) -> int:
    flags = np.zeros(n, dtype=np.uint8)
    flags[np.fromiter(indices, dtype=np.int64)] = 1
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def indices_from_bits(bits: int) -> list[int]:
    if bits == 0:
        return []
    raw = np.frombuffer(bits.to_bytes((bits.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")).tolist()


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of some parent GroupTable, stored as a bit-vector.

    Equality and hashing use the element set only; ``generators`` is an
    optional generating tuple kept for cheap centralizer computations.
    """

    bits: int
    order: int = field(compare=False)
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __le__(self, other: SubgroupSet) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: SubgroupSet) -> bool:
        return self.bits != other.bits and self <= other

    def __and__(self, other: SubgroupSet) -> SubgroupSet:
        bits = self.bits & other.bits
        return SubgroupSet(bits, bits.bit_count())

    @functools.cached_property
    def elements(self) -> list[int]:
        """Element indices in ascending order."""
        return indices_from_bits(self.bits)

    def __repr__(self) -> str:
        return f"SubgroupSet(order={self.order}, generators={self.generators})"


class GroupTable:
    """A finite group given by its full multiplication table.

    ``table[x][y]`` is the index of ``x*y``.  Tables from untrusted sources
    are validated (identity, Latin square, associativity); pass
    ``verify=False`` only for tables assembled from already verified parts.
    """

    def __init__(
        self,
        table,
        name: str = "G",
        *,
        verify: bool = True,
        max_order: int | None = None,
    ):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise ConstructionError(f"table must be a non-empty square array, got shape {t.shape}")
        n = t.shape[0]
        cap = MAX_ORDER if max_order is None else max_order
        if n > cap:
            raise CapabilityError(f"group order {n} exceeds max_order cap {cap}", cap)
        if t.min() < 0 or t.max() >= n:
            raise ConstructionError("table entries must lie in 0..n-1")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise ConstructionError("element 0 is not a two-sided identity")
        if verify:
            _check_group_axioms(t)
        self.order = n
        self.name = name
        self.table = t.astype(np.int32)
        self.table.setflags(write=False)
        inv = np.argmax(self.table == 0, axis=1).astype(np.int32)
        if not np.array_equal(self.table[ar, inv], np.zeros(n, dtype=np.int32)):
            raise ConstructionError("some element has no inverse")
        inv.setflags(write=False)
        self.inverse = inv
        self._rows = [array("H", r.astype(np.uint16).tobytes()) for r in self.table]
        self._inv = inv.tolist()
        self._memo: dict = {}
        self._cyclic: dict[int, SubgroupSet] = {}
        self._commute: list[int] | None = None
        self._orders: np.ndarray | None = None
        self._gens: tuple[int, ...] | None = None

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, order={self.order})"

    def __getstate__(self):
        return {"table": self.table, "name": self.name}

    def __setstate__(self, state):
        self.__init__(state["table"], state["name"], verify=False, max_order=HARD_MAX_ORDER)

    # unchecked element arithmetic; the module-level functions validate
    def mul(self, x: int, y: int) -> int:
        return self._rows[x][y]

    def inv(self, x: int) -> int:
        return self._inv[x]

    def pow(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self._inv[x], -k
        result, base = 0, x
        while k:
            if k & 1:
                result = self._rows[result][base]
            base = self._rows[base][base]
            k >>= 1
        return result

    def comm(self, x: int, y: int) -> int:
        r = self._rows
        return r[r[self._inv[x]][self._inv[y]]][r[x][y]]

    def conj(self, a: int, b: int) -> int:
        """``a^b = b^-1 a b``."""
        r = self._rows
        return r[r[self._inv[b]][a]][b]

    @property
    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            ar = np.arange(n)
            cur = ar.copy()
            k = 1
            while True:
                hit = (cur == 0) & (orders == 0)
                orders[hit] = k
                if orders.all():
                    break
                cur = self.table[cur, ar]
                k += 1
            orders.setflags(write=False)
            self._orders = orders
        return self._orders

    @property
    def commute_masks(self) -> list[int]:
        """``commute_masks[x]`` is the bit-vector of elements commuting with x."""
        if self._commute is None:
            eq = self.table == self.table.T
            packed = np.packbits(eq, axis=1, bitorder="little")
            self._commute = [int.from_bytes(row.tobytes(), "little") for row in packed]
        return self._commute

    @property
    def full_bits(self) -> int:
        return (1 << self.order) - 1

    @property
    def generators(self) -> tuple[int, ...]:
        """A small generating set found greedily in index order."""
        if self._gens is None:
            self._gens = generating_set(self, self.whole()).generators
        return self._gens

    def whole(self) -> SubgroupSet:
        return SubgroupSet(self.full_bits, self.order, self._gens or ())

    def trivial(self) -> SubgroupSet:
        return SubgroupSet(1, 1, (0,))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def subgroup(self, bits: int, generators: Sequence[int] = ()) -> SubgroupSet:
        """Wrap a bit-vector known to be a subgroup (Lagrange is checked)."""
        order = bits.bit_count()
        if not bits & 1 or self.order % order:
            raise InputError(f"bit-vector of size {order} cannot be a subgroup of order {self.order}")
        return SubgroupSet(bits, order, tuple(generators))


# ---------------------------------------------------------------------------
# validation


def _magma_generators(t: np.ndarray) -> list[int]:
    """Greedy generating set: every element is a left-normed word in it."""
    n = t.shape[0]
    rows = t.tolist()
    reached = bytearray(n)
    reached[0] = 1
    found: list[int] = [0]
    gens: list[int] = []
    for x in range(1, n):
        if reached[x]:
            continue
        gens.append(x)
        reached[x] = 1
        found.append(x)
        # every known element must be retried against the new generator
        queue = list(found)
        while queue:
            w = queue.pop()
            row = rows[w]
            for s in gens:
                u = row[s]
                if not reached[u]:
                    reached[u] = 1
                    found.append(u)
                    queue.append(u)
    return gens


def associativity_failure(t: np.ndarray, generators: Sequence[int] | None = None):
    """Return a triple (x, s, z) with (xs)z != x(sz), or None.

    Only ``s`` ranging over a generating set is checked: the elements that
    associate in the middle position form a submagma, so this is a complete
    test.
    """
    t = np.asarray(t)
    if generators is None:
        generators = _magma_generators(t)
    for s in generators:
        left = t[t[:, s], :]
        right = t[:, t[s, :]]
        if np.array_equal(left, right):
            continue
        bad = np.argwhere(left != right)
        if bad.size:
            x, z = bad[0]
            return (int(x), int(s), int(z))
    return None


def naive_associativity_failure(t: np.ndarray):
    """All n^3 triples; independent oracle for small tables."""
    t = np.asarray(t)
    for x in range(t.shape[0]):
        left = t[t[x], :]
        right = t[x][t]
        bad = np.argwhere(left != right)
        if bad.size:
            y, z = bad[0]
            return (x, int(y), int(z))
    return None


def _check_group_axioms(t: np.ndarray) -> None:
    n = t.shape[0]
    ar = np.arange(n)
    if not (np.sort(t, axis=1) == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
        raise ConstructionError("table is not a Latin square")
    triple = associativity_failure(t)
    if triple is not None:
        raise ConstructionError(f"table is not associative at (x, y, z) = {triple}")


# ---------------------------------------------------------------------------
# element operations


def _check_index(g: GroupTable, *xs: int) -> None:
    for x in xs:
        if not (isinstance(x, (int, np.integer)) and 0 <= x < g.order):
            raise InputError(f"element index {x!r} out of range for {g.name} of order {g.order}")


def multiply(g: GroupTable, x: int, y: int) -> int:
    _check_index(g, x, y)
    return g.mul(x, y)


def inverse(g: GroupTable, x: int) -> int:
    _check_index(g, x)
    return g.inv(x)


def power(g: GroupTable, x: int, k: int) -> int:
    _check_index(g, x)
    return g.pow(x, k)


def commutator(g: GroupTable, x: int, y: int) -> int:
    _check_index(g, x, y)
    return g.comm(x, y)


def element_order(g: GroupTable, x: int) -> int:
    _check_index(g, x)
    return int(g.element_orders[x])


# ---------------------------------------------------------------------------
# closure


def _extend(g: GroupTable, base: SubgroupSet | None, extra: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``base`` and ``extra``.

    The result is grown as a union of left cosets of ``base``, closing under
    left multiplication by the combined generators.
    """
    if base is None:
        base = g.trivial()
    new = [x for x in extra if not base.bits >> x & 1]
    if not new:
        return base
    base_gens = base.generators or generating_set(g, base).generators
    gens = [s for s in base_gens if s] + new
    base_elems = base.elements
    rows = g._rows
    flags = bytearray(g.order)
    for h in base_elems:
        flags[h] = 1
    out = list(base_elems)
    reps = [0]
    i = 0
    while i < len(reps):
        t = reps[i]
        i += 1
        for s in gens:
            u = rows[s][t]
            if not flags[u]:
                row = rows[u]
                for h in base_elems:
                    v = row[h]
                    flags[v] = 1
                    out.append(v)
                reps.append(u)
    bits = int.from_bytes(np.packbits(np.frombuffer(bytes(flags), dtype=np.uint8), bitorder="little").tobytes(), "little")
    return SubgroupSet(bits, len(out), tuple(gens))


def cyclic_subgroup(g: GroupTable, x: int) -> SubgroupSet:
    hit = g._cyclic.get(x)
    if hit is None:
        row_x = x
        elems = [0]
        cur = x
        while cur:
            elems.append(cur)
            cur = g._rows[cur][row_x]
        bits = 0
        for e in elems:
            bits |= 1 << e
        hit = SubgroupSet(bits, len(elems), (x,) if x else (0,))
        g._cyclic[x] = hit
    return hit


def generated_subgroup(g: GroupTable, gens: Iterable[int]) -> SubgroupSet:
    """``<gens>``; memoized per group on the generator set."""
    gens = frozenset(int(x) for x in gens)
    if not gens:
        raise InputError("generator set must be non-empty")
    _check_index(g, *gens)
    hit = g._memo.get(gens)
    if hit is None:
        ordered = sorted(gens - {0})
        if not ordered:
            hit = g.trivial()
        else:
            hit = _extend(g, cyclic_subgroup(g, ordered[0]), ordered[1:])
        hit = SubgroupSet(hit.bits, hit.order, tuple(sorted(gens)))
        g._memo[gens] = hit
    return hit


def join(g: GroupTable, h: SubgroupSet, *others: SubgroupSet | int) -> SubgroupSet:
    """Subgroup generated by ``h`` together with further subgroups/elements."""
    extra: list[int] = []
    for o in others:
        if isinstance(o, SubgroupSet):
            extra.extend(o.generators or generating_set(g, o).generators)
        else:
            extra.append(int(o))
    return _extend(g, h, extra)


def generate_greedy(g: GroupTable, values: Iterable[int]) -> SubgroupSet:
    """Subgroup generated by ``values``, adding one element at a time only
    when it is not yet covered (keeps the generator list short)."""
    h = g.trivial()
    for v in values:
        if not h.bits >> v & 1:
            h = _extend(g, h, [v]) if h.order > 1 else cyclic_subgroup(g, v)
    return h


def generating_set(g: GroupTable, s: SubgroupSet) -> SubgroupSet:
    """Copy of ``s`` carrying a greedy generating tuple."""
    h = g.trivial()
    gens: list[int] = []
    for v in s.elements:
        if not h.bits >> v & 1:
            gens.append(v)
            h = _extend(g, h, [v]) if h.order > 1 else cyclic_subgroup(g, v)
            if h.order == s.order:
                break
    return SubgroupSet(s.bits, s.order, tuple(gens) or (0,))


def is_subgroup(g: GroupTable, s: SubgroupSet) -> bool:
    """Direct check of closure; independent of the closure routines."""
    els = np.array(s.elements)
    if s.order != len(els) or not len(els) or els[0] != 0:
        return False
    prods = np.unique(g.table[np.ix_(els, els)])
    return len(prods) == len(els) and np.array_equal(prods, els)


# ---------------------------------------------------------------------------
# subgroup-level operators


def _elements_of(s) -> list[int]:
    if isinstance(s, SubgroupSet):
        return s.elements
    return sorted({int(x) for x in s})


def centralizer(g: GroupTable, s) -> SubgroupSet:
    """``C_G(S)`` for a SubgroupSet (its generators suffice) or element set."""
    if isinstance(s, SubgroupSet):
        items = s.generators or s.elements
    else:
        items = _elements_of(s)
        if not items:
            raise InputError("centralizer of an empty set")
        _check_index(g, *items)
    masks = g.commute_masks
    bits = g.full_bits
    for x in items:
        bits &= masks[x]
    return SubgroupSet(bits, bits.bit_count())


def center(g: GroupTable) -> SubgroupSet:
    hit = g._memo.get("center")
    if hit is None:
        hit = centralizer(g, g.generators)
        g._memo["center"] = hit
    return hit


def is_abelian_subgroup(g: GroupTable, s: SubgroupSet) -> bool:
    return s <= centralizer(g, s)


def _commutator_values(g: GroupTable, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    t = g.table
    inv = g.inverse
    xs = np.asarray(xs)
    ys = np.asarray(ys)
    seen = np.zeros(g.order, dtype=bool)
    block = max(1, 2_000_000 // max(1, len(ys)))
    for i in range(0, len(xs), block):
        xb = xs[i:i + block]
        a = t[np.ix_(inv[xb], inv[ys])]
        b = t[np.ix_(xb, ys)]
        seen[t[a, b]] = True
    return np.flatnonzero(seen).tolist()


def commutator_subgroup(g: GroupTable, a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
    """``[A, B]``, generated by all commutators ``[x, y]`` with x in A, y in B."""
    return generate_greedy(g, _commutator_values(g, a.elements, b.elements))


def derived_subgroup(g: GroupTable, s: SubgroupSet | None = None) -> SubgroupSet:
    if s is None:
        s = g.whole()
    return commutator_subgroup(g, s, s)


def _powers(g: GroupTable, els: np.ndarray, k: int) -> np.ndarray:
    out = np.zeros_like(els)
    base = els.copy()
    t = g.table
    while k:
        if k & 1:
            out = t[out, base]
        base = t[base, base]
        k >>= 1
    return out


def power_subgroup(g: GroupTable, s: SubgroupSet | None, p: int) -> SubgroupSet:
    """Subgroup generated by all p-th powers of elements of S."""
    if s is None:
        s = g.whole()
    vals = np.unique(_powers(g, np.array(s.elements), p))
    return generate_greedy(g, vals.tolist())


def omega1(g: GroupTable, s: SubgroupSet | None, p: int) -> SubgroupSet:
    """Subgroup generated by the elements of S of order exactly p."""
    if s is None:
        s = g.whole()
    els = np.array(s.elements)
    vals = els[g.element_orders[els] == p]
    return generate_greedy(g, vals.tolist())


def frattini(g: GroupTable, s: SubgroupSet | None = None, *, cap: int | None = None) -> SubgroupSet:
    """Frattini subgroup of S (default the whole group).

    p-groups use ``Phi = S' S^p``; other groups intersect the maximal
    subgroups from full enumeration, which is capped.
    """
    if s is None:
        s = g.whole()
    if s.order == 1:
        return g.trivial()
    pp = prime_power(s.order)
    if pp is not None:
        return frattini_pgroup(g, s, pp[0])
    return frattini_generic(g, s, cap=cap)


def frattini_pgroup(g: GroupTable, s: SubgroupSet, p: int) -> SubgroupSet:
    key = ("phi", s.bits)
    hit = g._memo.get(key)
    if hit is None:
        d = derived_subgroup(g, s)
        hit = join(g, d, power_subgroup(g, s, p))
        g._memo[key] = hit
    return hit


def frattini_generic(g: GroupTable, s: SubgroupSet | None = None, *, cap: int | None = None) -> SubgroupSet:
    from .subgroups import maximal_subgroups_generic

    if s is None:
        s = g.whole()
    if s.order == 1:
        return g.trivial()
    bits = s.bits
    for m in maximal_subgroups_generic(g, s, cap=cap):
        bits &= m.bits
    return g.subgroup(bits)


def lower_central_series(g: GroupTable, s: SubgroupSet | None = None) -> list[SubgroupSet]:
    """``[gamma_1, gamma_2, ...]`` until the series stabilizes.

    The last term is trivial exactly when S is nilpotent.
    """
    if s is None:
        s = g.whole()
    series = [s]
    while True:
        nxt = commutator_subgroup(g, series[-1], s)
        if nxt.bits == series[-1].bits:
            return series
        series.append(nxt)
        if nxt.order == 1:
            return series


def is_normal(g: GroupTable, n: SubgroupSet, s: SubgroupSet | None = None) -> bool:
    """Whether N is stable under conjugation by S (default the whole group)."""
    if s is None:
        s = g.whole()
    conj_by = s.generators or s.elements
    els = np.array(n.elements)
    t = g.table
    for b in conj_by:
        img = t[t[g.inverse[b], els], b]
        if not all(n.bits >> int(v) & 1 for v in np.unique(img)):
            return False
    return True


def restrict(g: GroupTable, s: SubgroupSet, name: str | None = None) -> GroupTable:
    """The subgroup S as a standalone GroupTable (elements relabelled in
    ascending parent order, so the identity stays at 0)."""
    els = np.array(s.elements)
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[els] = np.arange(len(els))
    sub = pos[g.table[np.ix_(els, els)]]
    if (sub < 0).any():
        raise InputError("element set is not closed under multiplication")
    return GroupTable(sub, name or f"{g.name}|{len(els)}", verify=False)


# ---------------------------------------------------------------------------
# products


def direct_product(g1: GroupTable, g2: GroupTable, name: str | None = None) -> GroupTable:
    """Element ``(a, b)`` has index ``a * |g2| + b``."""
    n2 = g2.order
    t = g1.table[:, None, :, None].astype(np.int64) * n2 + g2.table[None, :, None, :]
    n = g1.order * n2
    return GroupTable(t.reshape(n, n), name or f"{g1.name}x{g2.name}", verify=False)


def semidirect_product(
    normal: GroupTable,
    acting: GroupTable,
    action: Sequence[Sequence[int]],
    name: str | None = None,
) -> GroupTable:
    """``N x| H`` with ``(n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2)``.

    ``action[h]`` is the permutation of N's indices by which h acts.  Each
    must be an automorphism and ``h -> action[h]`` a homomorphism.  Element
    ``(n, h)`` has index ``n * |H| + h``.
    """
    nn, nh = normal.order, acting.order
    phi = np.array(action, dtype=np.int64)
    if phi.shape != (nh, nn):
        raise ConstructionError(f"action must be {nh} permutations of length {nn}, got shape {phi.shape}")
    ar = np.arange(nn)
    tn = normal.table
    for h in range(nh):
        f = phi[h]
        if not np.array_equal(np.sort(f), ar):
            raise ConstructionError(f"action[{h}] is not a permutation")
        if not np.array_equal(f[tn], tn[np.ix_(f, f)]):
            raise ConstructionError(f"action[{h}] is not an automorphism of {normal.name}")
    th = acting.table
    # phi_{h1 h2} = phi_{h1} o phi_{h2}
    for h1 in range(nh):
        if not np.array_equal(phi[th[h1]], phi[h1][phi]):
            raise ConstructionError(f"action is not a homomorphism at h={h1}")
    first = tn[ar[:, None, None], phi[None, :, :]]
    t = first[:, :, :, None] * nh + th[None, :, None, :]
    n = nn * nh
    return GroupTable(t.reshape(n, n), name or f"{normal.name}:{acting.name}", verify=False)


# ---------------------------------------------------------------------------
# Cayley-table text format


def format_tbl(g: GroupTable) -> str:
    lines = [str(g.order)]
    lines.extend(" ".join(map(str, row)) for row in g.table.tolist())
    return "\n".join(lines) + "\n"


def parse_tbl(text: str, name: str = "G", *, max_order: int | None = None) -> GroupTable:
    """Parse the ``.tbl`` format; the result is fully validated."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty table file")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise InputError(f"first line must be the order, got {lines[0]!r}") from exc
    if n < 1:
        raise InputError(f"order must be positive, got {n}")
    cap = MAX_ORDER if max_order is None else max_order
    if n > cap:
        raise CapabilityError(f"order {n} exceeds max_order cap {cap}", cap)
    if len(lines) != n + 1:
        raise InputError(f"expected {n} table rows, found {len(lines) - 1}")
    try:
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise InputError(f"non-integer table entry: {exc}") from exc
    if any(len(r) != n for r in rows):
        raise InputError(f"every row must have {n} entries")
    return GroupTable(rows, name, verify=True, max_order=cap)


def read_tbl(path, name: str | None = None, *, max_order: int | None = None) -> GroupTable:
    path = os.fspath(path)
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    return parse_tbl(text, name, max_order=max_order)


def write_tbl(g: GroupTable, path) -> None:
    with open(os.fspath(path), "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_tbl(g))
