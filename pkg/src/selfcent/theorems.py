"""Corpus-driven verification of the finite-group statements about the class.

Each registered procedure takes a corpus specification, builds the groups
from JSON descriptors (so a report can be replayed from its corpus alone),
applies the statement's hypothesis filter and collects counterexamples.
Checks run over the constructible corpus only; they are falsification
attempts, not proofs.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import (
    GroupTable,
    SubgroupSet,
    center,
    centralizer,
    cyclic_subgroup,
    derived_subgroup,
    frattini,
    generating_set,
    is_abelian_subgroup,
    omega1,
    prime_power,
)
from .errors import CapabilityError, InputError, MethodDisagreement
from .families import KingParameters, from_descriptor, king_parameter_grid, king_predicted_center, maxclass_catalog
from .membership import cross_check, is_A
from .structure import exponent, has_elementary_abelian_maximal, is_elementary_abelian, is_maximal_class, two_step_centralizer
from .subgroups import (
    ALL_SUBGROUPS_CAP,
    all_subgroups,
    classify_minimal_nonabelian,
    iter_two_generated,
    maximal_subgroups,
    minimal_nonabelian_subgroups,
    rank_of_pgroup,
)

VERIFIED, REFUTED, VACUOUS = "verified", "refuted", "vacuous"


# ---------------------------------------------------------------------------
# corpus


@dataclass(frozen=True)
class CorpusEntry:
    descriptor: Mapping

    @property
    def label(self) -> str:
        d = self.descriptor
        if "name" in d:
            return d["name"]
        args = ",".join(f"{k}={v}" for k, v in d.items() if k != "family")
        return f"{d['family']}({args})"

    def build(self) -> GroupTable:
        return _build(_freeze(self.descriptor))


_CACHE: dict = {}


def _freeze(d):
    if isinstance(d, Mapping):
        return tuple(sorted((k, _freeze(v)) for k, v in d.items()))
    if isinstance(d, list):
        return tuple(_freeze(x) for x in d)
    return d


def _thaw(d):
    if isinstance(d, tuple) and d and all(isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], str) for x in d):
        return {k: _thaw(v) for k, v in d}
    if isinstance(d, tuple):
        return [_thaw(x) for x in d]
    return d


def _build(key) -> GroupTable:
    g = _CACHE.get(key)
    if g is None:
        g = from_descriptor(_thaw(key))
        _CACHE[key] = g
    return g


def _abelian_types(max_order: int) -> list[list[int]]:
    """Factor lists, one per abelian group of order <= max_order."""
    primes = [p for p in range(2, max_order + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]

    def partitions(k, largest):
        if k == 0:
            yield []
            return
        for part in range(min(k, largest), 0, -1):
            for rest in partitions(k - part, part):
                yield [part] + rest

    out = []
    for n in range(2, max_order + 1):
        factors_by_prime = []
        m = n
        for p in primes:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            if k:
                factors_by_prime.append([[p**e for e in part] for part in partitions(k, k)])
        combos = [[]]
        for options in factors_by_prime:
            combos = [c + o for c in combos for o in options]
        out.extend(sorted(combos))
    return out


def _two_groups(lo: int, hi: int) -> list[dict]:
    out = []
    order = lo
    while order <= hi:
        out.append({"family": "dihedral", "order": order})
        if order >= 16:
            out.append({"family": "semidihedral", "order": order})
        out.append({"family": "quaternion", "order": order})
        order *= 2
    return out


def _minnonab(primes, max_order: int) -> list[dict]:
    out = []
    for p in primes:
        for m in range(2, 9):
            for n in range(1, 9):
                if p ** (m + n) <= max_order:
                    out.append({"family": "k2", "p": p, "m": m, "n": n})
        for m in range(1, 9):
            for n in range(1, m + 1):
                if p ** (m + n + 1) <= max_order and not (p == 2 and m + n <= 2):
                    out.append({"family": "k3", "p": p, "m": m, "n": n})
    return out


def _king(primes, max_order: int) -> list[dict]:
    return [
        {"family": "king", "p": k.p, "m": k.m, "n": k.n, "s": k.s, "c": k.c, "eps": k.eps}
        for k in king_parameter_grid(primes, max_order)
    ]


def _cyc(n):
    return {"family": "cyclic", "n": n}


def _sym(n):
    return {"family": "symmetric", "n": n}


def _small_mixed() -> list[dict]:
    """Groups that are not of prime-power order."""
    inv = lambda n: {"family": "semidirect", "normal": _cyc(n), "acting": _cyc(2), "action": "inversion", "name": f"D{2 * n}"}
    return [
        _sym(3),
        _sym(4),
        {"family": "alternating", "n": 4},
        {"family": "alternating", "n": 5},
        {"family": "direct", "factors": [_cyc(2), _sym(3)], "name": "C2xS3"},
        {"family": "direct", "factors": [_cyc(3), _sym(3)], "name": "C3xS3"},
        {"family": "direct", "factors": [_cyc(4), _sym(3)], "name": "C4xS3"},
        {"family": "direct", "factors": [_sym(3), _sym(3)], "name": "S3xS3"},
        {"family": "direct", "factors": [_cyc(2), {"family": "alternating", "n": 4}], "name": "C2xA4"},
        {"family": "direct", "factors": [_cyc(2), _sym(4)], "name": "C2xS4"},
        inv(5),
        inv(6),
        inv(7),
        inv(9),
        inv(10),
        inv(15),
        {"family": "metacyclic", "M": 6, "N": 2, "t": 3, "r": 5, "name": "Dic12"},
        {"family": "metacyclic", "M": 10, "N": 2, "t": 5, "r": 9, "name": "Dic20"},
        {"family": "metacyclic", "M": 3, "N": 4, "t": 0, "r": 2, "name": "C3:C4"},
        {"family": "metacyclic", "M": 3, "N": 8, "t": 0, "r": 2, "name": "C3:C8"},
        {"family": "metacyclic", "M": 5, "N": 4, "t": 0, "r": 2, "name": "C5:C4"},
        {"family": "metacyclic", "M": 7, "N": 3, "t": 0, "r": 2, "name": "C7:C3"},
        {"family": "metacyclic", "M": 13, "N": 3, "t": 0, "r": 3, "name": "C13:C3"},
        {"family": "metacyclic", "M": 7, "N": 6, "t": 0, "r": 3, "name": "C7:C6"},
    ]


def _pauli() -> dict:
    return {
        "family": "pc",
        "p": 2,
        "relative_orders": [2, 2, 2, 2],
        "powers": {"3": [[4, 1]]},
        "commutators": {"2,1": [[4, 1]]},
        "name": "C4oD8",
    }


def _order16() -> list[dict]:
    """One descriptor for each of the 14 groups of order 16."""
    return [{"family": "abelian", "factors": f} for f in ([16], [8, 2], [4, 4], [4, 2, 2], [2, 2, 2, 2])] + [
        {"family": "dihedral", "order": 16},
        {"family": "semidihedral", "order": 16},
        {"family": "quaternion", "order": 16},
        {"family": "modular", "order": 16},
        {"family": "direct", "factors": [_cyc(2), {"family": "dihedral", "order": 8}], "name": "C2xD8"},
        {"family": "direct", "factors": [_cyc(2), {"family": "quaternion", "order": 8}], "name": "C2xQ8"},
        {"family": "k2", "p": 2, "m": 2, "n": 2},
        {"family": "k3", "p": 2, "m": 2, "n": 1},
        _pauli(),
    ]


def _order81() -> list[dict]:
    return (
        [{"family": "abelian", "factors": f} for f in ([81], [27, 3], [9, 9], [9, 3, 3], [3, 3, 3, 3])]
        + [
            {"family": "direct", "factors": [_cyc(3), {"family": "heisenberg", "p": 3}], "name": "C3xHeis(3)"},
            {"family": "direct", "factors": [_cyc(3), {"family": "k2", "p": 3, "m": 2, "n": 1}], "name": "C3xK2(3,2,1)"},
            {"family": "k2", "p": 3, "m": 2, "n": 2},
            {"family": "k2", "p": 3, "m": 3, "n": 1},
            {"family": "k3", "p": 3, "m": 2, "n": 1},
            {"family": "phi9", "p": 3},
        ]
        + _maxclass(3, 4)
    )


def _maxclass(p: int, n: int) -> list[dict]:
    return [{"family": "maxclass", "p": p, "n": n, "index": i} for i in range(len(maxclass_catalog(p, n)))]


def _exponent_p() -> list[dict]:
    heis = lambda p: {"family": "heisenberg", "p": p}
    ea = lambda p, k: {"family": "elementary_abelian", "p": p, "k": k}
    return [
        ea(2, 3),
        ea(3, 4),
        ea(5, 3),
        heis(3),
        heis(5),
        {"family": "phi9", "p": 5},
        {"family": "direct", "factors": [_cyc(3), heis(3)], "name": "C3xHeis(3)"},
        {"family": "direct", "factors": [ea(3, 2), heis(3)], "name": "C3^2xHeis(3)"},
        {"family": "direct", "factors": [_cyc(5), heis(5)], "name": "C5xHeis(5)"},
    ]


FAMILIES: dict[str, Callable[[Mapping], list[dict]]] = {
    "abelian": lambda s: [{"family": "abelian", "factors": f} for f in _abelian_types(min(s["max_order"], 64))],
    "two_groups": lambda s: _two_groups(8, s["max_order"]),
    "minnonab": lambda s: _minnonab(_primes(s), s["max_order"]),
    "king": lambda s: _king(_primes(s), s["max_order"]),
    "mixed": lambda s: _small_mixed(),
    "order16": lambda s: _order16(),
    "order81": lambda s: _order81(),
    "maxclass": lambda s: [d for p in _primes(s) for n in _maxclass_range(p, s) for d in _maxclass(p, n)],
    "exponent_p": lambda s: _exponent_p(),
}


def _primes(spec: Mapping) -> list[int]:
    return spec["p"] or [2, 3, 5]


def _maxclass_range(p: int, spec: Mapping) -> list[int]:
    if spec.get("n") is not None:
        return [int(spec["n"])]
    out, n = [], 3
    while p**n <= spec["max_order"] and (p == 2 or n <= 5):
        out.append(n)
        n += 1
    return out


DEFAULT_CORPUS = ("abelian", "two_groups", "minnonab", "king", "mixed", "order16", "order81", "maxclass", "exponent_p")


def normalize_spec(spec: Mapping | None, defaults: Mapping | None = None) -> dict:
    """Fill a corpus specification with defaults; unknown keys are rejected."""
    allowed = {"families", "p", "max_order", "order", "n"}
    merged = dict(defaults or {})
    merged.update({k: v for k, v in (spec or {}).items() if v is not None})
    unknown = set(merged) - allowed
    if unknown:
        raise InputError(f"unknown corpus fields {sorted(unknown)}")
    p = merged.get("p")
    if p is not None:
        merged["p"] = [int(p)] if isinstance(p, (int, str)) else [int(x) for x in p]
    else:
        merged["p"] = None
    merged.setdefault("max_order", 256)
    merged["max_order"] = int(merged["max_order"])
    merged.setdefault("families", list(DEFAULT_CORPUS))
    merged.setdefault("order", None)
    merged.setdefault("n", None)
    return merged


def _descriptor_order(d: Mapping) -> int | None:
    """Order read off a descriptor without building, when cheap to know."""
    fam = d["family"]
    if fam in ("abelian",):
        return int(np.prod(d["factors"]))
    if fam in ("dihedral", "semidihedral", "quaternion", "modular"):
        return int(d["order"])
    if fam == "k2":
        return d["p"] ** (d["m"] + d["n"])
    if fam == "k3":
        return d["p"] ** (d["m"] + d["n"] + 1)
    if fam == "king":
        return d["p"] ** (d["m"] + d["n"])
    if fam == "maxclass":
        return d["p"] ** d["n"]
    return None


def build_corpus(spec: Mapping | None = None) -> list[CorpusEntry]:
    """Descriptors selected by ``spec`` in deterministic order.

    Filters: ``max_order``; ``order`` (exact); ``p`` keeps only groups of
    prime-power order for the listed primes (families that need primes
    default to 2, 3, 5); ``n`` restricts the maximal-class catalog.
    """
    spec = normalize_spec(spec)
    seen = set()
    out = []
    for fam in spec["families"]:
        if fam not in FAMILIES:
            raise InputError(f"unknown corpus family {fam!r}; known: {sorted(FAMILIES)}")
        for d in FAMILIES[fam](spec):
            key = _freeze(d)
            if key in seen:
                continue
            order = _descriptor_order(d)
            if order is None:
                order = _build(key).order
            if order > spec["max_order"] or (spec["order"] and order != int(spec["order"])):
                continue
            pp = prime_power(order)
            if spec["p"] is not None:
                if pp is None or pp[0] not in spec["p"]:
                    continue
            seen.add(key)
            out.append(CorpusEntry(d))
    return out


# ---------------------------------------------------------------------------
# reports


@dataclass
class Direction:
    """One directional sub-check of a statement."""

    name: str
    tested: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return REFUTED
        return VERIFIED if self.tested else VACUOUS

    def to_json(self) -> dict:
        return {"tested": self.tested, "verdict": self.verdict, "counterexamples": self.counterexamples}


@dataclass
class TheoremReport:
    id: str
    corpus: dict
    tested: int = 0
    directions: dict[str, Direction] = field(default_factory=dict)
    millis: int = 0
    incomplete: list = field(default_factory=list)

    @property
    def counterexamples(self) -> list:
        return [c for d in self.directions.values() for c in d.counterexamples]

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return REFUTED
        if not any(d.tested for d in self.directions.values()):
            return VACUOUS
        return VERIFIED

    @property
    def vacuous_directions(self) -> list[str]:
        return [n for n, d in self.directions.items() if not d.tested]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "corpus": self.corpus,
            "tested": self.tested,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "directions": {n: d.to_json() for n, d in self.directions.items()},
            "vacuous_directions": self.vacuous_directions,
            "incomplete": self.incomplete,
            "millis": self.millis,
            "scope": "constructible corpus",
        }


def _in_A(g: GroupTable) -> bool:
    return is_A(g).in_A


def _sub(h: SubgroupSet) -> list[int]:
    return h.elements


# ---------------------------------------------------------------------------
# per-group checks; each returns {direction: (matched, [witness, ...])}


def _check_center_in_nonabelian(g):
    if not _in_A(g):
        return {"main": (False, [])}
    z = center(g)
    if g.order <= ALL_SUBGROUPS_CAP:
        subs = (h for h in all_subgroups(g) if not is_abelian_subgroup(g, h))
    else:
        # every non-abelian subgroup contains a non-commuting pair
        subs = (h for h, _ in iter_two_generated(g, g.whole()))
    bad = [{"subgroup": _sub(h)} for h in subs if not z <= h]
    return {"main": (True, bad[:1])}


def _check_z_in_frattini(g):
    if g.is_abelian() or not _in_A(g):
        return {"main": (False, [])}
    z, phi = center(g), frattini(g)
    return {"main": (True, [] if z <= phi else [{"center": _sub(z), "frattini": _sub(phi)}])}


def inverting_pairs(g: GroupTable):
    """``(a, x)`` with a != 1 of odd order and ``a^x = a^-1``."""
    t, inv, orders = g.table, g.inverse, g.element_orders
    xs = np.arange(g.order)
    for a in range(1, g.order):
        if orders[a] % 2 == 0:
            continue
        conj = t[t[inv[xs], a], xs]
        for x in np.flatnonzero(conj == inv[a]).tolist():
            yield a, x


def _check_inverting(g):
    if not _in_A(g):
        return {"main": (False, [])}
    bad = []
    matched = False
    for a, x in inverting_pairs(g):
        matched = True
        o = int(g.element_orders[x])
        c = centralizer(g, [a, x])
        if o & (o - 1) or c.bits != cyclic_subgroup(g, g.mul(x, x)).bits:
            bad.append({"a": a, "x": x, "order_x": o, "centralizer": _sub(c)})
            break
    return {"main": (matched, bad)}


def _check_criteria(g):
    try:
        cross_check(g)
    except MethodDisagreement as exc:
        return {"main": (True, [{"disagreement": str(exc).splitlines()[-4:]}])}
    return {"main": (True, [])}


def _check_minnonab(g):
    pp = prime_power(g.order)
    if pp is None:
        return {"main": (False, [])}
    p = pp[0]
    bad = []
    ks = minimal_nonabelian_subgroups(g)
    for k in ks:
        tag = classify_minimal_nonabelian(g, k, p)
        d_k = rank_of_pgroup(g, k, p)
        der = derived_subgroup(g, k).order
        zk = centralizer(g, k) & k
        om = omega1(g, zk, p)
        rank = rank_of_pgroup(g, om, p) if om.order > 1 else 0
        ok = tag[0] in ("K1", "K2", "K3") and der == p and d_k == 2
        ok = ok and is_elementary_abelian(g, p, om) and 1 <= rank <= 3
        if not ok:
            bad.append({"subgroup": _sub(k), "tag": list(tag), "derived": der, "d": d_k, "omega_rank": rank})
            break
    return {"main": (bool(ks), bad)}


def _check_outside_frattini(g):
    if prime_power(g.order) is None or not _in_A(g):
        return {"main": (False, [])}
    phi = frattini(g)
    for x in range(g.order):
        if phi.bits >> x & 1:
            continue
        c = centralizer(g, [x])
        if not is_abelian_subgroup(g, generating_set(g, c)):
            return {"main": (True, [{"element": x, "centralizer": _sub(c)}])}
    return {"main": (True, [])}


def _check_small_order(g):
    pp = prime_power(g.order)
    if pp is None:
        return {}
    p, n = pp
    if n <= 3:
        return {"order<=p^3": (True, [] if _in_A(g) else [{"verdict": "not-in-A"}])}
    if n != 4:
        return {}
    ina = _in_A(g)
    cond = g.is_abelian() or is_maximal_class(g, p) or frattini(g).bits == center(g).bits
    out = {
        "p^4: in-A => condition": (ina, [] if cond or not ina else [{"in_A": ina, "condition": cond}]),
        "p^4: condition => in-A": (cond, [] if ina or not cond else [{"in_A": ina, "condition": cond}]),
    }
    return out


def _check_maxclass23(g):
    pp = prime_power(g.order)
    if pp is None or pp[0] not in (2, 3) or pp[1] < 2 or not is_maximal_class(g, pp[0]):
        return {"main": (False, [])}
    return {"main": (True, [] if _in_A(g) else [{"verdict": "not-in-A"}])}


def _check_abelian_maximal(g):
    pp = prime_power(g.order)
    if pp is None or pp[1] < 2 or g.is_abelian() or not is_maximal_class(g, pp[0]):
        return {"main": (False, [])}
    if not any(is_abelian_subgroup(g, generating_set(g, m)) for m in maximal_subgroups(g)):
        return {"main": (False, [])}
    return {"main": (True, [] if _in_A(g) else [{"verdict": "not-in-A"}])}


def _check_maxclass_p1(g):
    pp = prime_power(g.order)
    if pp is None or pp[0] < 5 or pp[1] < 4 or not is_maximal_class(g, pp[0]):
        return {}
    p1 = generating_set(g, two_step_centralizer(g))
    abelian_p1 = is_abelian_subgroup(g, p1)
    ina = _in_A(g)
    wit = [{"P1": _sub(p1), "P1_abelian": abelian_p1, "in_A": ina}]
    return {
        "P1 abelian => in-A": (abelian_p1, [] if ina or not abelian_p1 else wit),
        "P1 non-abelian => not-in-A": (not abelian_p1, [] if abelian_p1 or not ina else wit),
    }


def _check_exponent_p(g):
    pp = prime_power(g.order)
    if pp is None or exponent(g) != pp[0] or not _in_A(g):
        return {"main": (False, [])}
    p, n = pp
    if is_elementary_abelian(g, p):
        return {"main": (True, [])}
    ok = n <= p and is_maximal_class(g, p) and has_elementary_abelian_maximal(g, p)
    return {"main": (True, [] if ok else [{"n": n, "maximal_class": is_maximal_class(g, p)}])}


def _check_metacyclic(entry: CorpusEntry, g: GroupTable):
    d = entry.descriptor
    kp = KingParameters(d["p"], d["m"], d["n"], d["s"], d["c"], d.get("eps", 1))
    predicted = king_predicted_center(g, kp)
    z = center(g)
    bad = []
    if not _in_A(g):
        bad.append({"verdict": "not-in-A"})
    if z.bits != predicted.bits:
        bad.append({"center": _sub(z), "predicted": _sub(predicted), "uv": list(kp.center_exponents())})
    return {"main": (True, bad)}


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    check: Callable
    defaults: Mapping = field(default_factory=dict)
    needs_entry: bool = False


REGISTRY: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("center-in-nonabelian", "Z(G) lies in every non-abelian subgroup of G in the class", _check_center_in_nonabelian),
        Theorem("z-in-frattini", "Z(G) <= Phi(G) for non-abelian G in the class", _check_z_in_frattini),
        Theorem(
            "inverting",
            "an element x inverting some a != 1 of odd order has 2-power order and C_G(<a,x>) = <x^2>",
            _check_inverting,
        ),
        Theorem("criteria-equivalence", "the four membership criteria agree", _check_criteria),
        Theorem(
            "minnonab-classification",
            "minimal non-abelian p-subgroups are K1, K2 or K3 with |K'| = p, d(K) = 2 and Omega_1(Z(K)) of rank 1 to 3",
            _check_minnonab,
        ),
        Theorem(
            "metacyclic-in-A",
            "metacyclic p-groups lie in the class, with Z(G) = <a^(p^u), b^(p^v)>",
            _check_metacyclic,
            {"families": ["king"], "max_order": 625},
            needs_entry=True,
        ),
        Theorem(
            "outside-frattini-abelian-centralizer",
            "for a p-group in the class, C_G(g) is abelian when g is outside Phi(G)",
            _check_outside_frattini,
        ),
        Theorem(
            "small-order",
            "p-groups of order at most p^3 lie in the class; order p^4 lies in it iff abelian, maximal class or Phi = Z",
            _check_small_order,
            {"families": ["abelian", "two_groups", "minnonab", "order16", "order81", "maxclass", "exponent_p"]},
        ),
        Theorem(
            "maxclass-23",
            "2- and 3-groups of maximal class lie in the class",
            _check_maxclass23,
            {"families": ["two_groups", "maxclass", "order16", "order81"], "p": [2, 3]},
        ),
        Theorem(
            "abelian-maximal-implies-A",
            "a p-group of maximal class with an abelian maximal subgroup lies in the class",
            _check_abelian_maximal,
            {"families": ["two_groups", "maxclass", "order16", "order81", "minnonab"]},
        ),
        Theorem(
            "maxclass-p1",
            "for p >= 5 and n >= 4 a maximal-class group lies in the class iff P1 is abelian",
            _check_maxclass_p1,
            {"families": ["maxclass", "exponent_p"], "p": [5], "max_order": 3125},
        ),
        Theorem(
            "exponent-p",
            "an exponent-p group in the class is elementary abelian, or of order at most p^p, maximal class "
            "and with an elementary abelian maximal subgroup",
            _check_exponent_p,
            {"families": ["exponent_p", "abelian", "maxclass", "minnonab", "order81"], "max_order": 3125},
        ),
    ]
}

# every finite-group claim the harness is expected to cover
CLAIMS = (
    "center-in-nonabelian",
    "z-in-frattini",
    "inverting",
    "criteria-equivalence",
    "minnonab-classification",
    "metacyclic-in-A",
    "outside-frattini-abelian-centralizer",
    "small-order",
    "maxclass-23",
    "abelian-maximal-implies-A",
    "maxclass-p1",
    "exponent-p",
)


def _run_one(args):
    theorem_id, descriptor = args
    thm = REGISTRY[theorem_id]
    entry = CorpusEntry(descriptor)
    try:
        g = entry.build()
        res = thm.check(entry, g) if thm.needs_entry else thm.check(g)
        return {k: (bool(m), list(w)) for k, (m, w) in res.items()}, None
    except CapabilityError as exc:
        return {}, str(exc)


def verify(theorem_id: str, corpus_spec: Mapping | None = None, *, jobs: int = 1) -> TheoremReport:
    """Run one registered check over the corpus described by ``corpus_spec``."""
    try:
        thm = REGISTRY[theorem_id]
    except KeyError:
        raise InputError(f"unknown theorem id {theorem_id!r}; known: {sorted(REGISTRY)}") from None
    spec = normalize_spec(corpus_spec, thm.defaults)
    started = time.perf_counter()
    corpus = build_corpus(spec)
    work = [(theorem_id, dict(e.descriptor)) for e in corpus]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_one, work, chunksize=4))
    else:
        results = [_run_one(w) for w in work]
    report = TheoremReport(theorem_id, spec)
    for (_, descriptor), (res, err) in zip(work, results):
        if err is not None:
            report.incomplete.append({"group": descriptor, "error": err})
            continue
        report.tested += 1
        for name, (matched, witnesses) in res.items():
            direction = report.directions.setdefault(name, Direction(name))
            direction.tested += matched
            direction.counterexamples += [{"group": descriptor, "witness": w} for w in witnesses]
    if not report.directions:
        for name in _direction_names(theorem_id):
            report.directions[name] = Direction(name)
    report.millis = int((time.perf_counter() - started) * 1000)
    return report


def _direction_names(theorem_id: str) -> list[str]:
    return {
        "maxclass-p1": ["P1 abelian => in-A", "P1 non-abelian => not-in-A"],
        "small-order": ["order<=p^3", "p^4: in-A => condition", "p^4: condition => in-A"],
    }.get(theorem_id, ["main"])


def registry_covers_claims() -> bool:
    return set(REGISTRY) == set(CLAIMS)


__all__ = [
    "CLAIMS",
    "REGISTRY",
    "CorpusEntry",
    "Direction",
    "TheoremReport",
    "build_corpus",
    "inverting_pairs",
    "normalize_spec",
    "registry_covers_claims",
    "verify",
]
