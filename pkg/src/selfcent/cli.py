"""Command-line entry point: ``selfcent construct|check|survey|verify``.

Exit codes: ``check`` returns 0 for in-A, 1 for not-in-A and 2 on error;
``verify`` returns 0 verified, 1 refuted, 3 vacuous and 2 on error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .core import HARD_MAX_ORDER, MAX_ORDER, read_tbl, write_tbl
from .errors import GroupError, InputError, MethodDisagreement
from .families import from_descriptor
from .membership import METHODS, cross_check, is_A
from .structure import exponent, nilpotency_class, profile
from .theorems import FAMILIES, REGISTRY, VACUOUS, VERIFIED, build_corpus, verify

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_VACUOUS = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...] = ()
    method: str = "auto"
    max_order: int = MAX_ORDER
    subgroup_cap: int | None = None
    pair_cap: int | None = None
    output: str = "json"
    jobs: int = 1
    deterministic: bool = True
    scope: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("max_order", "subgroup_cap", "pair_cap"):
            v = getattr(self, name)
            if v is not None and not 1 <= v <= HARD_MAX_ORDER:
                raise InputError(f"{name}={v} must lie in 1..{HARD_MAX_ORDER}")
        if self.jobs < 1:
            raise InputError("jobs must be at least 1")
        if not self.deterministic and self.method == "all":
            raise InputError("cross-checking runs in deterministic mode only")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def cmd_construct(cfg: RunConfig) -> int:
    desc_path, out_path = cfg.inputs
    desc = json.loads(Path(desc_path).read_text())
    g = from_descriptor(desc)
    if g.order > cfg.max_order:
        raise InputError(f"order {g.order} exceeds max order {cfg.max_order}")
    write_tbl(g, out_path)
    cls = nilpotency_class(g)
    _emit({"name": g.name, "order": g.order, "exponent": exponent(g), "class": cls, "path": str(out_path)})
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    (path,) = cfg.inputs
    g = read_tbl(path, max_order=cfg.max_order)
    if cfg.method == "all":
        rec = cross_check(g, subgroup_cap=cfg.subgroup_cap, pair_cap=cfg.pair_cap)
        _emit(rec.to_json())
        return EXIT_OK if rec.in_A else EXIT_NEGATIVE
    cap = cfg.subgroup_cap if cfg.method in ("bruteforce", "recursive") else cfg.pair_cap
    rep = is_A(g, cfg.method, cap=cap)
    _emit(rep.to_json())
    return EXIT_OK if rep.in_A else EXIT_NEGATIVE


_SURVEY_FIELDS = ("group", "order", "verdict", "method", "exponent", "class", "maximal_class", "error")


def cmd_survey(cfg: RunConfig) -> int:
    corpus = build_corpus(cfg.scope)
    writer = None
    if cfg.output == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=_SURVEY_FIELDS, extrasaction="ignore")
        writer.writeheader()
    for entry in corpus:
        record: dict = {"group": entry.label, "descriptor": entry.descriptor}
        try:
            g = entry.build()
            record["group"] = g.name
            rep = is_A(g, cfg.method)
            prof = profile(g)
            record.update(
                order=g.order,
                verdict=rep.verdict,
                method=rep.method,
                exponent=exponent(g),
                **{"class": nilpotency_class(g)},
                maximal_class=prof.is_maximal_class if prof else None,
                profile=prof.to_dict() if prof else None,
                membership=rep.to_json(),
            )
        except GroupError as exc:
            record["error"] = str(exc)
        if writer is not None:
            writer.writerow(record)
        elif cfg.output == "text":
            print(f"{record['group']}: {record.get('verdict', 'error: ' + record.get('error', ''))}")
        else:
            _emit(record)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    (theorem,) = cfg.inputs
    if theorem not in REGISTRY:
        print(f"unknown theorem id {theorem!r}; known: {', '.join(sorted(REGISTRY))}", file=sys.stderr)
        return EXIT_ERROR
    rep = verify(theorem, cfg.scope, jobs=cfg.jobs)
    _emit(rep.to_json())
    if rep.verdict == VERIFIED:
        return EXIT_OK
    return EXIT_VACUOUS if rep.verdict == VACUOUS else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfcent", description=__doc__.splitlines()[0])
    parser.add_argument("--max-order-cap", type=int, default=MAX_ORDER, help="largest group order accepted (env SELFCENT_MAX_ORDER)")
    parser.add_argument("--subgroup-cap", type=int, help="order cap for full subgroup enumeration")
    parser.add_argument("--pair-cap", type=int, help="order cap for pair scans")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for theorem runs")
    parser.add_argument("--fast", action="store_true", help="allow non-deterministic parallel modes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a group from a JSON descriptor and write a .tbl file")
    p.add_argument("descriptor")
    p.add_argument("out")

    p = sub.add_parser("check", help="decide membership for a .tbl file")
    p.add_argument("table")
    p.add_argument("--method", choices=(*METHODS, "all", "auto"), default="auto")

    p = sub.add_parser("survey", help="profile and test a corpus family, one record per group")
    p.add_argument("--family", action="append", required=True, choices=sorted(FAMILIES))
    p.add_argument("--p", type=int, action="append")
    p.add_argument("--max-order", type=int, default=256)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=(*METHODS, "auto"), default="auto")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output", action="store_const", const="json")
    fmt.add_argument("--csv", dest="output", action="store_const", const="csv")
    fmt.add_argument("--text", dest="output", action="store_const", const="text")

    p = sub.add_parser("verify", help="run a registered theorem check")
    p.add_argument("--theorem", required=True)
    p.add_argument("--p", type=int, action="append")
    p.add_argument("--max-order", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--family", action="append", dest="families", choices=sorted(FAMILIES))
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    common = dict(
        max_order=args.max_order_cap,
        subgroup_cap=args.subgroup_cap,
        pair_cap=args.pair_cap,
        jobs=args.jobs,
        deterministic=not args.fast,
    )
    if args.command == "construct":
        return RunConfig("construct", (args.descriptor, args.out), **common)
    if args.command == "check":
        return RunConfig("check", (args.table,), method=args.method, **common)
    if args.command == "survey":
        scope = {"families": args.family, "p": args.p, "max_order": args.max_order, "n": args.n}
        return RunConfig("survey", method=args.method, output=args.output or "json", scope=scope, **common)
    scope = {"p": args.p, "max_order": args.max_order, "order": args.order, "n": args.n, "families": args.families}
    return RunConfig("verify", (args.theorem,), scope={k: v for k, v in scope.items() if v is not None}, **common)


_COMMANDS = {"construct": cmd_construct, "check": cmd_check, "survey": cmd_survey, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        return _COMMANDS[cfg.command](cfg)
    except MethodDisagreement as exc:
        print(f"selfcent: methods disagree\n{exc}", file=sys.stderr)
        return EXIT_ERROR
    except (GroupError, ValueError, OSError) as exc:
        print(f"selfcent: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
