"""Command-line interface and the .lts text format.

Format: a header line "lts 1", a counts line "n m", then m triple lines
"i j k" with 0 <= i < j < k < n, sorted lexicographically.  Lines starting
with '#' and blank lines are ignored.

Exit codes: 0 success / property holds; 1 property fails (witness in the
report); 2 usage, format or I/O error; 3 the file parses but the system is
invalid (range or linearity violation).

Reports are JSON on stdout and byte-identical across runs for identical
inputs; wall time goes to stderr so it never perturbs the report.  The
LTS_THREADS environment variable is accepted for compatibility with
parallel builds of the checkers; this implementation is single-threaded
and ignores it beyond validation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any

from . import bounds as bounds_mod
from .closure import (
    PropertyVerdict,
    closure,
    expander_deficiency,
    is_spreading,
    is_strongly_connected,
    is_weakly_spreading,
    neighbourhood,
)
from .constructions import (
    _is_prime,
    bose_skolem,
    cayley_latin,
    crowning,
    spreading_6p3,
    star_expansion,
)
from .core import TripleSystem, build_system
from .errors import (
    DuplicatePairCoverage,
    LtsError,
    ParseError,
    ValidationError,
    VertexOutOfRange,
)
from .extremal import min_weakly_spreading

__all__ = ["parse_system", "serialize_system", "run", "main"]

_HEADER = "lts 1"


def serialize_system(system: TripleSystem) -> str:
    lines = [_HEADER, f"{system.n} {len(system.triples)}"]
    lines.extend(f"{x} {y} {z}" for x, y, z in system.triples)
    return "\n".join(lines) + "\n"


def parse_system(text: str) -> TripleSystem:
    """Parse the .lts format.

    Grammar violations raise ParseError with the line number; range and
    linearity violations raise the validator's own error types, also with
    line context.
    """
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            rows.append((lineno, stripped))
    if not rows:
        raise ParseError("empty input: missing header", line=1)
    lineno, header = rows[0]
    if header != _HEADER:
        raise ParseError(f"unsupported header {header!r}, expected {_HEADER!r}", lineno)
    if len(rows) < 2:
        raise ParseError("missing counts line", line=lineno)
    lineno, counts = rows[1]
    parts = counts.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise ParseError(f"counts line must be two integers, got {counts!r}", lineno)
    n, m = int(parts[0]), int(parts[1])
    if n < 0 or m < 0:
        raise ParseError(f"counts must be non-negative, got {counts!r}", lineno)
    body = rows[2:]
    if len(body) != m:
        raise ParseError(
            f"expected {m} triple lines, found {len(body)}",
            line=body[-1][0] if body else lineno,
        )
    triples: list[tuple[int, int, int]] = []
    previous: tuple[int, int, int] | None = None
    pair_lines: dict[tuple[int, int], int] = {}
    for lineno, row in body:
        parts = row.split()
        if len(parts) != 3 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"triple line must be three integers, got {row!r}", lineno)
        t = (int(parts[0]), int(parts[1]), int(parts[2]))
        if not t[0] < t[1] < t[2]:
            raise ParseError(f"triple {t} is not strictly increasing", lineno)
        if previous is not None and t <= previous:
            raise ParseError(f"triple {t} breaks lexicographic line order", lineno)
        previous = t
        if t[0] < 0 or t[2] >= n:
            raise VertexOutOfRange(f"line {lineno}: vertex outside [0, {n}) in {t}")
        for pair in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            if pair in pair_lines:
                raise DuplicatePairCoverage(
                    pair,
                    f"line {lineno}: pair {pair} already covered on line "
                    f"{pair_lines[pair]}",
                )
            pair_lines[pair] = lineno
        triples.append(t)
    return build_system(n, triples)


class _InvalidSystemFile(Exception):
    """A file whose content fails system validation (exit code 3)."""


def _load(path: str) -> TripleSystem:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_system(text)
    except ParseError:
        raise
    except ValidationError as exc:
        raise _InvalidSystemFile(f"{path}: {exc}") from exc


def _summary(system: TripleSystem) -> dict[str, Any]:
    return {
        "n": system.n,
        "m": len(system.triples),
        "steiner": system.is_steiner(),
    }


def _witness_json(verdict: PropertyVerdict) -> Any:
    if verdict.witness is None:
        return None
    if isinstance(verdict.witness, frozenset):
        return {"vertices": sorted(verdict.witness)}
    return {"triples": [list(t) for t in verdict.witness]}


def _emit(report: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _parse_int_list(text: str, what: str) -> list[int]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece.lstrip("-").isdigit():
            raise ParseError(f"{what} expects comma-separated integers, got {piece!r}")
        out.append(int(piece))
    return out


def _cmd_construct(args: argparse.Namespace) -> int:
    family = args.family
    if family == "bose-skolem":
        system = bose_skolem(args.p)
        if not _is_prime(args.p):
            print(
                f"advisory: modulus {args.p} is composite; the system is "
                "Steiner but the expansion guarantee assumes a prime",
                file=sys.stderr,
            )
    elif family == "spreading-6p3":
        system = spreading_6p3(args.p)
    elif family == "crowning":
        # crowning decorates the spreading construction of the same parameter
        base = spreading_6p3(args.p)
        keep = _parse_int_list(args.keep, "--keep") if args.keep is not None else None
        system = crowning(base, keep)
    elif family == "cayley-latin":
        system = cayley_latin(args.p)
    else:  # star-expansion
        system = star_expansion(args.p)
    text = serialize_system(system)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.json:
        _emit({"command": "construct", "family": family, "system": _summary(system)})
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    system = _load(args.input)
    prop = args.property
    if prop == "linear":
        verdict = PropertyVerdict(True, None, len(system.triples))
    elif prop == "steiner":
        holds = system.is_steiner()
        witness = None if holds else frozenset(system.uncovered_edges()[0])
        verdict = PropertyVerdict(holds, witness, len(system.pair_table))
    elif prop == "spreading":
        verdict = is_spreading(system, args.mode.replace("-", "_"))
    elif prop == "weakly-spreading":
        verdict = is_weakly_spreading(system)
    else:  # strong-connectivity
        verdict = is_strongly_connected(system)
    _emit(
        {
            "command": "check",
            "property": prop,
            "system": _summary(system),
            "holds": verdict.holds,
            "witness": _witness_json(verdict),
            "checked_count": verdict.checked_count,
        }
    )
    return 0 if verdict.holds else 1


def _cmd_closure(args: argparse.Namespace) -> int:
    system = _load(args.input)
    seed = _parse_int_list(args.set, "--set") if args.set else []
    _emit(
        {
            "command": "closure",
            "system": _summary(system),
            "set": sorted(set(seed)),
            "neighbourhood": sorted(neighbourhood(system, seed)),
            "closure": sorted(closure(system, seed)),
        }
    )
    return 0


def _cmd_expander(args: argparse.Namespace) -> int:
    system = _load(args.input)
    report = expander_deficiency(system, args.max_size, budget=args.budget)
    ratio = report.min_ratio
    _emit(
        {
            "command": "expander",
            "system": _summary(system),
            "min_deficiency": report.min_deficiency,
            "per_size_min_neighbourhood": {
                str(k): v for k, v in sorted(report.per_size_min_neighbourhood.items())
            },
            "worst_set": sorted(report.worst_set),
            "min_ratio": None
            if ratio is None
            else {"numerator": ratio.numerator, "denominator": ratio.denominator},
        }
    )
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if not args.min_wsp:
        raise ParseError("search currently only supports --min-wsp")
    kwargs: dict[str, Any] = {}
    if args.start_at is not None:
        kwargs["start_at"] = args.start_at
    if args.budget is not None:
        kwargs["budget"] = args.budget
    result = min_weakly_spreading(args.n, **kwargs)
    _emit(
        {
            "command": "search",
            "n": result.n,
            "minimum": result.minimum,
            "witness": [list(t) for t in result.witness.triples],
            "nodes_explored": result.nodes_explored,
            "exhaustive_below": result.exhaustive_below,
        }
    )
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    report: dict[str, Any] = {"command": "bounds"}
    if not (args.tau or args.constants or args.density is not None):
        raise ParseError("bounds needs at least one of --tau, --constants, --density")
    if args.tau or args.constants:
        z, t = bounds_mod.tau()
        if args.tau:
            report["tau"] = t
            report["argmax_z"] = z
        if args.constants:
            consts = bounds_mod.lower_bound_constants(t)
            report["edge_bound_coeff"] = consts.edge_bound_coeff
            report["xi_sp_coeff"] = consts.xi_sp_coeff
            report["naive_coeff"] = consts.naive_coeff
    if args.density is not None:
        n, m, ratio = bounds_mod.construction_density(args.density)
        report["density"] = {"p": args.density, "n": n, "m": m, "ratio": ratio}
    _emit(report)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lts", description="Linear triple system toolkit"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", help="generate a system and write .lts")
    p.add_argument(
        "--family",
        required=True,
        choices=[
            "bose-skolem",
            "spreading-6p3",
            "crowning",
            "cayley-latin",
            "star-expansion",
        ],
    )
    p.add_argument(
        "--p",
        type=int,
        required=True,
        help="family parameter (modulus, prime, or base order; crowning "
        "decorates spreading-6p3 of the same parameter)",
    )
    p.add_argument("--keep", help="crowning: comma-separated uncovered-edge indices")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--json", action="store_true", help="also print a JSON summary")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="verify a property of a system file")
    p.add_argument("--input", required=True)
    p.add_argument(
        "--property",
        required=True,
        choices=[
            "linear",
            "steiner",
            "spreading",
            "weakly-spreading",
            "strong-connectivity",
        ],
    )
    p.add_argument("--mode", default="reduced", choices=["reduced", "brute-force"])
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("closure", help="closure and neighbourhood of a vertex set")
    p.add_argument("--input", required=True)
    p.add_argument("--set", required=True, help="comma-separated vertices")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("expander", help="neighbourhood-size statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=_cmd_expander)

    p = sub.add_parser("search", help="extremal search")
    p.add_argument("--min-wsp", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--start-at", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("bounds", help="numeric constants")
    p.add_argument("--tau", action="store_true")
    p.add_argument("--constants", action="store_true")
    p.add_argument("--density", type=int, default=None, metavar="P")
    p.set_defaults(func=_cmd_bounds)

    return parser


def run(argv: list[str] | None = None) -> int:
    threads = os.environ.get("LTS_THREADS")
    if threads is not None and not threads.isdigit():
        print(f"warning: ignoring non-numeric LTS_THREADS={threads!r}", file=sys.stderr)
    started = time.perf_counter()
    try:
        try:
            args = _build_parser().parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _InvalidSystemFile as exc:
        print(f"error: invalid system: {exc}", file=sys.stderr)
        return 3
    except LtsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        print(f"wall_time_s {time.perf_counter() - started:.3f}", file=sys.stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
