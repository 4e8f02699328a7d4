"""Constructors for the group families used throughout the package.

Metacyclic groups ``<a, b | a^M = 1, b^N = a^t, a^b = a^r>`` are built in
closed form on normal forms ``a^i b^j`` (index ``i + M*j``).  Groups given by
a power-commutator presentation go through a collector and are then checked
for associativity on the finished table.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .core import (
    MAX_ORDER,
    GroupTable,
    SubgroupSet,
    associativity_failure,
    direct_product,
    generated_subgroup,
    is_prime,
    semidirect_product,
)
from .errors import CapabilityError, ConstructionError, InconsistentPresentation, InputError

Word = tuple[tuple[int, int], ...]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InputError(f"{p} is not a prime")


def _check_cap(n: int, max_order: int | None) -> None:
    cap = MAX_ORDER if max_order is None else max_order
    if n > cap:
        raise CapabilityError(f"group order {n} exceeds max_order cap {cap}", cap)


# ---------------------------------------------------------------------------
# abelian groups


def abelian(factors: Sequence[int], name: str | None = None) -> GroupTable:
    """Direct product of cyclic groups of the given orders (mixed radix
    indices, first factor most significant)."""
    factors = [int(f) for f in factors]
    if not factors or any(f < 1 for f in factors):
        raise InputError(f"abelian factors must be positive integers, got {factors}")
    n = math.prod(factors)
    _check_cap(n, None)
    digits = np.array(list(itertools.product(*[range(f) for f in factors])), dtype=np.int64).reshape(n, len(factors))
    mods = np.array(factors)
    weights = np.array([math.prod(factors[i + 1:]) for i in range(len(factors))])
    summed = (digits[:, None, :] + digits[None, :, :]) % mods
    table = summed @ weights
    if name is None:
        name = "x".join(f"C{f}" for f in factors)
    return GroupTable(table, name, verify=False)


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise InputError(f"cyclic group order must be >= 1, got {n}")
    return abelian([n], f"C{n}")


def elementary_abelian(p: int, k: int) -> GroupTable:
    _require_prime(p)
    if k < 0:
        raise InputError(f"rank must be non-negative, got {k}")
    if k == 0:
        return cyclic(1)
    return abelian([p] * k, f"C{p}^{k}")


# ---------------------------------------------------------------------------
# metacyclic groups in closed form


def metacyclic(M: int, N: int, t: int, r: int, name: str = "G", *, verify: bool = True) -> GroupTable:
    """``<a, b | a^M = 1, b^N = a^t, a^b = a^r>`` of order ``M*N``.

    Needs ``gcd(r, M) = 1``, ``r^N = 1 (mod M)`` and ``r t = t (mod M)``;
    ``a`` has index 1 and ``b`` has index M.
    """
    if M < 1 or N < 1:
        raise InputError("M and N must be positive")
    _check_cap(M * N, None)
    r %= M
    t %= M
    if M > 1 and math.gcd(r, M) != 1:
        raise ConstructionError(f"a^b = a^{r} is not an automorphism of C{M}")
    if pow(r, N, M) != 1 % M:
        raise ConstructionError(f"r^N = {r}^{N} is not 1 mod {M}")
    if (r * t - t) % M:
        raise ConstructionError(f"b^N = a^{t} is not fixed by conjugation (r t != t mod {M})")
    s = pow(r, -1, M) if M > 1 else 0
    # b^j a^k b^-j = a^(k s^j)
    spow = np.array([pow(s, j, M) if M > 1 else 0 for j in range(N)], dtype=np.int64)
    i = np.arange(M * N) % M
    j = np.arange(M * N) // M
    ia, ja = i[:, None], j[:, None]
    ib, jb = i[None, :], j[None, :]
    jj = ja + jb
    wrap = jj >= N
    aexp = (ia + ib * spow[ja] + t * wrap) % M
    table = aexp + M * (jj - N * wrap)
    return GroupTable(table, name, verify=verify)


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given (even) order, ``<r, s>`` with r at index 1."""
    if order < 4 or order % 2:
        raise InputError(f"dihedral order must be even and >= 4, got {order}")
    m = order // 2
    return metacyclic(m, 2, 0, -1, f"D{order}")


def _two_power(order: int, least: int, what: str) -> int:
    k = order.bit_length() - 1
    if order != 1 << k or k < least:
        raise InputError(f"{what} order must be 2^k with k >= {least}, got {order}")
    return k


def generalized_quaternion(order: int) -> GroupTable:
    k = _two_power(order, 3, "generalized quaternion")
    m = 1 << (k - 1)
    return metacyclic(m, 2, m // 2, -1, f"Q{order}")


def semidihedral(order: int) -> GroupTable:
    k = _two_power(order, 4, "semidihedral")
    m = 1 << (k - 1)
    return metacyclic(m, 2, 0, m // 2 - 1, f"SD{order}")


def modular(order: int) -> GroupTable:
    """``M_{2^k} = <a, b | a^(2^(k-1)) = b^2 = 1, a^b = a^(1 + 2^(k-2))>``."""
    k = _two_power(order, 4, "modular")
    m = 1 << (k - 1)
    return metacyclic(m, 2, 0, m // 2 + 1, f"M{order}")


def minimal_nonabelian_K2(p: int, m: int, n: int) -> GroupTable:
    """``<a, b | a^(p^m) = b^(p^n) = 1, a^b = a^(1 + p^(m-1))>``, m >= 2, n >= 1."""
    _require_prime(p)
    if m < 2 or n < 1:
        raise InputError(f"K2 needs m >= 2 and n >= 1, got m={m}, n={n}")
    M = p**m
    return metacyclic(M, p**n, 0, 1 + p ** (m - 1), f"K2({p},{m},{n})")


def minimal_nonabelian_K3(p: int, m: int, n: int) -> GroupTable:
    """``<a, b, c | a^(p^m) = b^(p^n) = c^p = 1, [a, b] = c central>``.

    Normal forms ``a^i b^j c^k`` with index ``k + p*(j + p^n*i)``; requires
    m, n >= 1 and m + n > 2 when p = 2.
    """
    _require_prime(p)
    if m < 1 or n < 1:
        raise InputError(f"K3 needs m, n >= 1, got m={m}, n={n}")
    if p == 2 and m + n <= 2:
        raise InputError("K3 with p = 2 needs m + n > 2")
    return _k3_table(p, m, n)


def _k3_table(p: int, m: int, n: int) -> GroupTable:
    # unchecked; at p = 2, m = n = 1 this is D8, which is metacyclic
    A, B = p**m, p**n
    order = A * B * p
    _check_cap(order, None)
    idx = np.arange(order)
    k = idx % p
    j = (idx // p) % B
    i = idx // (p * B)
    # b^j a^i' = a^i' b^j c^(-j i')
    ni = (i[:, None] + i[None, :]) % A
    nj = (j[:, None] + j[None, :]) % B
    nk = (k[:, None] + k[None, :] - j[:, None] * i[None, :]) % p
    table = nk + p * (nj + B * ni)
    return GroupTable(table, f"K3({p},{m},{n})", verify=True)


def heisenberg(p: int) -> GroupTable:
    """Extraspecial group of order p^3 and exponent p (p odd)."""
    if p == 2:
        raise InputError("the Heisenberg group mod 2 is D8, which has exponent 4; use dihedral(8)")
    g = minimal_nonabelian_K3(p, 1, 1)
    g.name = f"Heis({p})"
    return g


# ---------------------------------------------------------------------------
# King's reduced presentation of metacyclic p-groups


@dataclass(frozen=True)
class KingParameters:
    """``<a, b | a^(p^m) = 1, b^(p^n) = a^(p^(m-s)), a^b = a^(eps + p^(m-c))>``."""

    p: int
    m: int
    n: int
    s: int
    c: int
    eps: int = 1

    @property
    def r(self) -> int:
        return self.eps + self.p ** (self.m - self.c)

    @property
    def t(self) -> int:
        return self.p ** (self.m - self.s)

    @property
    def order(self) -> int:
        return self.p ** (self.m + self.n)

    def failure(self) -> str | None:
        """Name of the first violated condition, or None when valid."""
        p, m, n, s, c, eps = self.p, self.m, self.n, self.s, self.c, self.eps
        if not is_prime(p):
            return f"p={p} is not prime"
        if min(m, n, s, c) < 0:
            return "m, n, s, c must be non-negative"
        if eps not in (1, -1):
            return f"eps={eps} must be +1 or -1"
        if eps == -1 and p != 2:
            return "eps = -1 requires p = 2"
        if s > m:
            return f"s={s} exceeds m={m}"
        if c > m:
            return f"c={c} exceeds m={m}"
        mod = p**m
        if pow(self.r % mod if mod > 1 else 0, p**n, mod) != 1 % mod:
            return f"r^(p^n) = 1 (mod p^m) fails for r={self.r}"
        if (self.r * self.t - self.t) % mod:
            return f"r p^(m-s) = p^(m-s) (mod p^m) fails for r={self.r}"
        if p == 2 and c > m - 2 and not (eps == 1 and c == 0):
            # r = 3 is the eps = -1 form with c = m - 2, and r = 1 is the
            # abelian form with c = 0; the center formula is stated for the
            # reduced presentation only
            return f"not reduced: p = 2 needs c <= m - 2 (or eps = +1, c = 0), got m={m}, c={c}"
        return None

    def validate(self) -> None:
        msg = self.failure()
        if msg is not None:
            raise InputError(f"invalid King parameters {self}: {msg}")

    def center_exponents(self) -> tuple[int, int]:
        """``(u, v)`` with predicted ``Z(G) = <a^(p^u), b^(p^v)>``."""
        if self.eps == 1:
            return self.c, self.c
        return self.m - 1, max(1, self.c)

    def label(self) -> str:
        return f"King(p={self.p},m={self.m},n={self.n},s={self.s},c={self.c},eps={self.eps:+d})"


def king_metacyclic(params: KingParameters, *, verify: bool = True) -> tuple[GroupTable, tuple[int, int]]:
    """Build the group and return it with the predicted center exponents.

    ``a`` is element 1 and ``b`` is element ``p^m`` (when m >= 1).
    """
    params.validate()
    M = params.p**params.m
    g = metacyclic(M, params.p**params.n, params.t, params.r, params.label(), verify=verify)
    if g.order != params.order:
        raise ConstructionError(f"{params.label()} produced order {g.order}, expected {params.order}")
    return g, params.center_exponents()


def king_generators(params: KingParameters) -> tuple[int, int]:
    """Indices of ``a`` and ``b`` in the table from :func:`king_metacyclic`."""
    M = params.p**params.m
    return (1 % M if M > 1 else 0), (M if params.n > 0 else 0)


def king_predicted_center(g: GroupTable, params: KingParameters) -> SubgroupSet:
    u, v = params.center_exponents()
    a, b = king_generators(params)
    p = params.p
    return generated_subgroup(g, [g.pow(a, p**u), g.pow(b, p**v)])


def king_parameter_grid(primes: Sequence[int], max_order: int) -> list[KingParameters]:
    """Every valid parameter tuple of order at most ``max_order``, in
    (p, m, n, eps, s, c) order."""
    out = []
    for p in primes:
        total = 1
        while p ** (total + 1) <= max_order:
            total += 1
        for m in range(1, total + 1):
            for n in range(1, total - m + 1):
                for eps in ((1, -1) if p == 2 else (1,)):
                    for s in range(m + 1):
                        for c in range(m + 1):
                            kp = KingParameters(p, m, n, s, c, eps)
                            if kp.failure() is None and kp.order <= max_order:
                                out.append(kp)
    return out


# ---------------------------------------------------------------------------
# permutation groups


def symmetric(degree: int) -> GroupTable:
    """Symmetric group; permutations in lexicographic order (identity first)."""
    if degree < 1:
        raise InputError("degree must be >= 1")
    _check_cap(math.factorial(degree), None)
    perms = list(itertools.permutations(range(degree)))
    return _perm_table(perms, f"S{degree}")


def alternating(degree: int) -> GroupTable:
    if degree < 1:
        raise InputError("degree must be >= 1")
    perms = [q for q in itertools.permutations(range(degree)) if _parity(q) == 0]
    return _perm_table(perms, f"A{degree}")


def _parity(q: Sequence[int]) -> int:
    return sum(1 for i in range(len(q)) for j in range(i + 1, len(q)) if q[i] > q[j]) % 2


def _perm_table(perms: list[tuple[int, ...]], name: str) -> GroupTable:
    index = {q: i for i, q in enumerate(perms)}
    # (x*y)(i) = y(x(i)): left-to-right composition
    table = [[index[tuple(y[x[i]] for i in range(len(x)))] for y in perms] for x in perms]
    return GroupTable(table, name, verify=True)


def inversion_action(g: GroupTable, acting: GroupTable) -> list[np.ndarray]:
    """Action of a group of order 2 on abelian ``g`` by inversion."""
    if acting.order != 2:
        raise InputError("inversion action needs an acting group of order 2")
    if not g.is_abelian():
        raise InputError("inversion is an automorphism only of abelian groups")
    return [np.arange(g.order), g.inverse.copy()]


# ---------------------------------------------------------------------------
# power-commutator presentations


def _normal_word(word, rank: int) -> Word:
    out = []
    for gen, exp in word:
        gen, exp = int(gen), int(exp)
        if not 1 <= gen <= rank:
            raise InputError(f"generator g{gen} out of range 1..{rank}")
        if exp < 0:
            raise InputError(f"negative exponent in word {word!r}; write inverses as positive powers")
        if exp:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class PcPresentation:
    """Power-commutator presentation of a finite p-group.

    Generators are labelled ``1..rank``.  ``powers[i]`` is the word equal to
    ``g_i^(relative_orders[i-1])`` and ``commutators[(j, i)]`` (j > i) the
    word equal to ``[g_j, g_i]``; missing entries mean the identity.  Words
    are tuples of ``(generator, exponent)`` pairs and may only use
    generators later than the relation's leading generator.
    """

    p: int
    relative_orders: tuple[int, ...]
    powers: Mapping[int, Word] = field(default_factory=dict)
    commutators: Mapping[tuple[int, int], Word] = field(default_factory=dict)
    name: str = "pc"

    @property
    def rank(self) -> int:
        return len(self.relative_orders)

    @property
    def order(self) -> int:
        return math.prod(self.relative_orders)

    def validate(self) -> None:
        _require_prime(self.p)
        for i, q in enumerate(self.relative_orders, start=1):
            if q < self.p or self.p ** round(math.log(q, self.p)) != q:
                raise InputError(f"relative order of g{i} is {q}, not a power of {self.p}")
        r = self.rank
        for i, w in self.powers.items():
            if not 1 <= i <= r:
                raise InputError(f"power relation for unknown generator g{i}")
            if any(gen <= i for gen, _ in _normal_word(w, r)):
                raise InputError(f"power word of g{i} must use only later generators")
        for (j, i), w in self.commutators.items():
            if not 1 <= i < j <= r:
                raise InputError(f"commutator [g{j}, g{i}] must have {r} >= j > i >= 1")
            if any(gen <= j for gen, _ in _normal_word(w, r)):
                raise InputError(f"word for [g{j}, g{i}] must use only generators after g{j}")

    @classmethod
    def from_dict(cls, data: Mapping) -> PcPresentation:
        """JSON shape: ``{"p", "relative_orders", "powers": {"i": [[gen, exp], ...]},
        "commutators": {"j,i": [[gen, exp], ...]}, "name"}``."""
        rank = len(data["relative_orders"])
        powers = {int(k): _normal_word(v, rank) for k, v in data.get("powers", {}).items()}
        comms = {}
        for k, v in data.get("commutators", {}).items():
            j, i = (int(x) for x in str(k).split(","))
            comms[(j, i)] = _normal_word(v, rank)
        return cls(int(data["p"]), tuple(int(q) for q in data["relative_orders"]), powers, comms, data.get("name", "pc"))

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "relative_orders": list(self.relative_orders),
            "powers": {str(i): [list(x) for x in w] for i, w in sorted(self.powers.items()) if w},
            "commutators": {f"{j},{i}": [list(x) for x in w] for (j, i), w in sorted(self.commutators.items()) if w},
            "name": self.name,
        }


class Collector:
    """Rewrites products of normal words ``g_1^e_1 ... g_r^e_r`` into normal
    form.  Generators are 0-based internally."""

    def __init__(self, pres: PcPresentation):
        pres.validate()
        self.rank = pres.rank
        self.rel = list(pres.relative_orders)
        r = self.rank
        self.power = [tuple((gen - 1, e) for gen, e in _normal_word(pres.powers.get(i + 1, ()), r)) for i in range(r)]
        self.comm = {}
        for (j, i), w in pres.commutators.items():
            nw = tuple((gen - 1, e) for gen, e in _normal_word(w, r))
            if nw:
                self.comm[(j - 1, i - 1)] = nw
        self._memo: dict = {}

    def times_gen(self, v: tuple[int, ...], i: int) -> tuple[int, ...]:
        """``v * g_i``: move g_i left past the tail, conjugating it."""
        key = (v, i)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        r = self.rank
        head = list(v[: i + 1]) + [0] * (r - i - 1)
        head[i] += 1
        w = tuple(head)
        if head[i] == self.rel[i]:
            head[i] = 0
            w = self.times_word(tuple(head), self.power[i])
        # g_j^(g_i) = g_j [g_j, g_i]
        for j in range(i + 1, r):
            cw = self.comm.get((j, i), ())
            for _ in range(v[j]):
                w = self.times_gen(w, j)
                if cw:
                    w = self.times_word(w, cw)
        self._memo[key] = w
        return w

    def times_word(self, v: tuple[int, ...], word) -> tuple[int, ...]:
        for gen, e in word:
            for _ in range(e):
                v = self.times_gen(v, gen)
        return v

    def multiply(self, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        return self.times_word(u, [(i, e) for i, e in enumerate(v) if e])

    def unit(self, i: int) -> tuple[int, ...]:
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)


def consistency_failure(pres: PcPresentation):
    """Cheap overlap test on the standard test words; returns the first
    failing triple of 1-based generator labels (0 marks a p-th power slot),
    or None.  A None result is not a proof; the table check decides."""
    col = Collector(pres)
    r = col.rank
    zero = tuple([0] * r)

    def g(i):
        return col.unit(i)

    def gp(i, k):
        return col.times_word(zero, [(i, k)])

    for i in range(r):
        for j in range(i + 1, r):
            for k in range(j + 1, r):
                left = col.times_gen(col.multiply(g(k), g(j)), i)
                right = col.multiply(g(k), col.times_gen(g(j), i))
                if left != right:
                    return (k + 1, j + 1, i + 1)
    for i in range(r):
        q = col.rel[i]
        # g_i^q g_i = g_i g_i^q
        if col.multiply(gp(i, q), g(i)) != col.multiply(g(i), gp(i, q)):
            return (i + 1, i + 1, 0)
        for j in range(i + 1, r):
            qj = col.rel[j]
            # (g_j^qj) g_i = g_j^(qj-1) (g_j g_i)
            if col.times_gen(gp(j, qj), i) != col.multiply(gp(j, qj - 1), col.times_gen(g(j), i)):
                return (j + 1, 0, i + 1)
            # g_j (g_i^q) = (g_j g_i) g_i^(q-1)
            if col.multiply(g(j), gp(i, q)) != col.times_word(col.times_gen(g(j), i), [(i, q - 1)]):
                return (j + 1, i + 1, 0)
    return None


def from_pc_presentation(pres: PcPresentation, *, max_order: int | None = None) -> GroupTable:
    """Collect every normal word into a multiplication table and verify it.

    Element index is the mixed-radix number of the exponent vector with
    g_1 most significant.  Raises InconsistentPresentation when the table is
    not a group satisfying the relations.
    """
    pres.validate()
    r = pres.rank
    n = pres.order
    _check_cap(n, max_order)
    if r == 0:
        return GroupTable([[0]], pres.name, verify=False)
    col = Collector(pres)
    rel = col.rel
    weights = [math.prod(rel[i + 1:]) for i in range(r)]
    vecs = list(itertools.product(*[range(q) for q in rel]))

    def index(v):
        return sum(e * w for e, w in zip(v, weights))

    right = np.empty((r, n), dtype=np.int64)
    for x, v in enumerate(vecs):
        for i in range(r):
            right[i, x] = index(col.times_gen(v, i))
    for i in range(r):
        if len(np.unique(right[i])) != n:
            raise InconsistentPresentation(f"right multiplication by g{i + 1} is not a permutation", ("perm", i + 1))
    # column y of the table, for y = y' g_k with g_k the last letter of y
    cols = np.empty((n, n), dtype=np.int64)
    cols[0] = np.arange(n)
    for y in range(1, n):
        v = vecs[y]
        k = max(i for i in range(r) if v[i])
        cols[y] = right[k][cols[y - weights[k]]]
    table = np.ascontiguousarray(cols.T)
    gens = [weights[i] for i in range(r)]
    if not (table == 0).any(axis=1).all():
        raise InconsistentPresentation("some element has no right inverse", ("inverse",))
    triple = associativity_failure(table, gens)
    if triple is not None:
        raise InconsistentPresentation(f"collected table is not associative at (x, y, z) = {triple}", triple)
    g = GroupTable(table, pres.name, verify=False, max_order=max_order if max_order is not None else MAX_ORDER)
    _check_relations(g, pres, weights)
    return g


def _check_relations(g: GroupTable, pres: PcPresentation, weights: list[int]) -> None:
    def word_value(word):
        x = 0
        for gen, e in word:
            x = g.mul(x, g.pow(weights[gen - 1], e))
        return x

    for i in range(1, pres.rank + 1):
        gi = weights[i - 1]
        if g.pow(gi, pres.relative_orders[i - 1]) != word_value(pres.powers.get(i, ())):
            raise InconsistentPresentation(f"power relation of g{i} fails", ("power", i))
        for j in range(i + 1, pres.rank + 1):
            if g.comm(weights[j - 1], gi) != word_value(pres.commutators.get((j, i), ())):
                raise InconsistentPresentation(f"commutator relation [g{j}, g{i}] fails", ("commutator", j, i))


def pc_generators(pres: PcPresentation) -> list[int]:
    """Indices of g_1..g_r in the table from :func:`from_pc_presentation`."""
    rel = pres.relative_orders
    return [math.prod(rel[i + 1:]) for i in range(len(rel))]


# ---------------------------------------------------------------------------
# maximal-class catalog


def _maxclass_pc(p: int, n: int, powers: dict, extra_comms: dict, name: str) -> PcPresentation:
    """``g_1 = s``, ``g_(i+1) = s_i``; ``[s_i, s] = s_(i+1)`` plus extras."""
    comms = {(i, 1): ((i + 1, 1),) for i in range(2, n)}
    comms.update(extra_comms)
    return PcPresentation(p, (p,) * n, powers, comms, name)


def _is_maximal_class(g: GroupTable) -> bool:
    from .structure import is_maximal_class

    return is_maximal_class(g)


def abelian_p1_maxclass(p: int, n: int) -> list[tuple[str, PcPresentation]]:
    """Candidate presentations of maximal class with abelian 2-step
    centralizer: P1 = <s_1, ..., s_(n-1)> abelian, s acting unipotently,
    with p-th powers ``s_i^p = s_(i+p-1)^alpha`` and ``s^p = s_(n-1)^beta``."""
    out = []
    power_slots = [i for i in range(2, n + 1) if i + p - 1 <= n]
    for alpha in range(p if power_slots else 1):
        for beta in range(p):
            powers = {}
            if beta:
                powers[1] = ((n, beta),)
            for i in power_slots:
                if alpha:
                    powers[i] = ((i + p - 1, alpha),)
            out.append((f"MC({p}^{n};a={alpha},b={beta})", _maxclass_pc(p, n, powers, {}, "")))
    return out


def nonabelian_p1_candidates(p: int, n: int) -> list[tuple[str, PcPresentation]]:
    """Exponent-p candidates with [s_2, s_1] in P_3 and [s_3, s_1] in P_4
    given by structure constants, deterministically ordered."""
    if n < 5:
        return []
    out = []
    for a, b, c in itertools.product(range(p), repeat=3):
        if a == b == c == 0:
            continue
        extra = {}
        w = tuple(x for x in ((4, a), (5, b)) if x[1] and x[0] <= n)
        if w:
            extra[(3, 2)] = w
        if c and n >= 5:
            extra[(4, 2)] = ((5, c),)
        out.append((f"MCN({p}^{n};{a},{b},{c})", _maxclass_pc(p, n, {}, extra, "")))
    return out


def maxclass_catalog(p: int, n: int, *, max_order: int | None = None) -> list[tuple[str, GroupTable]]:
    """Groups of order p^n and maximal class.

    p = 2: dihedral, semidihedral and generalized quaternion.  p = 3, 5:
    for n = 3 the metacyclic and the exponent-p extraspecial group; for
    n >= 4 every consistent abelian-P1 candidate, and for p = 5, n >= 5 the
    first consistent exponent-5 candidate whose P1 is non-abelian.
    """
    return list(_maxclass_catalog(p, n, max_order))


@functools.lru_cache(maxsize=None)
def _maxclass_catalog(p: int, n: int, max_order: int | None) -> list[tuple[str, GroupTable]]:
    from .structure import two_step_centralizer

    if p not in (2, 3, 5):
        raise InputError(f"maxclass catalog supports p in (2, 3, 5), got {p}")
    if n < 2:
        raise InputError("maximal class needs n >= 2")
    _check_cap(p**n, max_order)
    if p == 2:
        if n == 2:
            return [("C2xC2", elementary_abelian(2, 2)), ("C4", cyclic(4))]
        out = [(f"D{2**n}", dihedral(2**n))]
        if n >= 4:
            out.append((f"SD{2**n}", semidihedral(2**n)))
        out.append((f"Q{2**n}", generalized_quaternion(2**n)))
        return out
    if n == 2:
        return [(f"C{p}xC{p}", elementary_abelian(p, 2)), (f"C{p * p}", cyclic(p * p))]
    if n == 3:
        return [(f"K2({p},2,1)", minimal_nonabelian_K2(p, 2, 1)), (f"Heis({p})", heisenberg(p))]
    out = []
    for label, pres in abelian_p1_maxclass(p, n):
        g = _try_pc(pres, label, max_order)
        if g is not None and _is_maximal_class(g) and _is_abelian_sub(g, two_step_centralizer(g)):
            out.append((label, g))
    if p == 5 and n >= 5:
        for label, pres in nonabelian_p1_candidates(p, n):
            if consistency_failure(pres) is not None:
                continue
            g = _try_pc(pres, label, max_order)
            if g is None or not _is_maximal_class(g):
                continue
            if int(g.element_orders.max()) != p:
                continue
            if not _is_abelian_sub(g, two_step_centralizer(g)):
                out.append((label, g))
                break
    return out


def _is_abelian_sub(g: GroupTable, s: SubgroupSet) -> bool:
    from .core import is_abelian_subgroup

    return is_abelian_subgroup(g, s)


def _try_pc(pres: PcPresentation, label: str, max_order: int | None) -> GroupTable | None:
    pres = PcPresentation(pres.p, pres.relative_orders, pres.powers, pres.commutators, label)
    if consistency_failure(pres) is not None:
        return None
    try:
        return from_pc_presentation(pres, max_order=max_order)
    except InconsistentPresentation:
        return None


def phi9_type(p: int) -> GroupTable:
    """``C_p^3 x| C_p`` with a unipotent Jordan block: order p^4, maximal
    class, exponent p for p >= 5 (p^2 for p = 3)."""
    pres = PcPresentation(p, (p, p, p, p), {}, {(2, 1): ((3, 1),), (3, 1): ((4, 1),)}, f"Phi9({p})")
    return from_pc_presentation(pres)


# ---------------------------------------------------------------------------
# JSON group descriptors


def from_descriptor(desc: Mapping) -> GroupTable:
    """Build a group from a descriptor such as
    ``{"family": "king", "p": 2, "m": 3, "n": 1, "s": 0, "c": 1, "eps": 1}``."""
    try:
        fam = str(desc["family"]).lower()
    except (KeyError, TypeError) as exc:
        raise InputError("descriptor needs a 'family' field") from exc
    try:
        return _DESCRIPTORS[fam](desc)
    except KeyError as exc:
        if fam not in _DESCRIPTORS:
            raise InputError(f"unknown family {fam!r}") from exc
        raise InputError(f"descriptor for {fam!r} is missing field {exc}") from exc


def _order_or_k(desc: Mapping) -> int:
    if "order" in desc:
        return int(desc["order"])
    return 2 ** int(desc["k"])


def _semidirect_desc(desc: Mapping) -> GroupTable:
    nrm = from_descriptor(desc["normal"])
    act = from_descriptor(desc["acting"])
    action = desc["action"]
    if action == "inversion":
        action = inversion_action(nrm, act)
    return semidirect_product(nrm, act, action, desc.get("name"))


def _direct_desc(desc: Mapping) -> GroupTable:
    factors = [from_descriptor(f) for f in desc["factors"]]
    if not factors:
        raise InputError("direct product needs at least one factor")
    g = factors[0]
    for f in factors[1:]:
        g = direct_product(g, f)
    if "name" in desc:
        g.name = desc["name"]
    return g


def _maxclass_desc(desc: Mapping) -> GroupTable:
    cat = maxclass_catalog(int(desc["p"]), int(desc["n"]))
    idx = int(desc.get("index", 0))
    if not 0 <= idx < len(cat):
        raise InputError(f"catalog ({desc['p']},{desc['n']}) has {len(cat)} entries, index {idx} out of range")
    name, g = cat[idx]
    g.name = name
    return g


_DESCRIPTORS = {
    "cyclic": lambda d: cyclic(int(d["n"])),
    "abelian": lambda d: abelian([int(x) for x in d["factors"]]),
    "elementary_abelian": lambda d: elementary_abelian(int(d["p"]), int(d["k"])),
    "dihedral": lambda d: dihedral(_order_or_k(d)),
    "quaternion": lambda d: generalized_quaternion(_order_or_k(d)),
    "semidihedral": lambda d: semidihedral(_order_or_k(d)),
    "modular": lambda d: modular(_order_or_k(d)),
    "k2": lambda d: minimal_nonabelian_K2(int(d["p"]), int(d["m"]), int(d["n"])),
    "k3": lambda d: minimal_nonabelian_K3(int(d["p"]), int(d["m"]), int(d["n"])),
    "heisenberg": lambda d: heisenberg(int(d["p"])),
    "metacyclic": lambda d: metacyclic(
        int(d["M"]), int(d["N"]), int(d.get("t", 0)), int(d["r"]), d.get("name", f"Meta({d['M']},{d['N']},{d.get('t', 0)},{d['r']})")
    ),
    "king": lambda d: king_metacyclic(
        KingParameters(int(d["p"]), int(d["m"]), int(d["n"]), int(d["s"]), int(d["c"]), int(d.get("eps", 1)))
    )[0],
    "pc": lambda d: from_pc_presentation(PcPresentation.from_dict(d)),
    "symmetric": lambda d: symmetric(int(d["n"])),
    "alternating": lambda d: alternating(int(d["n"])),
    "direct": _direct_desc,
    "semidirect": _semidirect_desc,
    "maxclass": _maxclass_desc,
    "phi9": lambda d: phi9_type(int(d["p"])),
}
