"""Command-line interface.

Exit status: 0 on success or a passing verification, 1 on a failed
verification, 2 on usage, input, or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .code import (
    from_generator,
    hermitian_dual,
    minimum_weight,
    profile,
    simplex_code,
    weight_distribution,
)
from .errors import CapacityError, DomainError, InvariantViolation, PreconditionError
from .lcd import extend_lcd, hermitian_decompose, is_hermitian_lcd, promote_dual_distance
from .linalg import F4Matrix, format_matrix, format_vector, parse_matrix
from .nonexistence import decide, r4
from .search import (
    EXHAUSTIVE_LIMIT,
    enumerate_codes,
    search_lcd,
    tabulate,
    verify_lemma2,
    verify_theorem3,
)


class _Out:
    def __init__(self, machine: bool, report: str | None):
        self.machine = machine
        self.report = report

    def emit(self, record: dict, human: Sequence[str]) -> None:
        if self.machine:
            print(json.dumps(record, sort_keys=True))
        else:
            for line in human:
                print(line)
        if self.report:
            Path(self.report).write_text(json.dumps(record, sort_keys=True, indent=2) + "\n")


def _rows(m: F4Matrix) -> list[str]:
    return [format_vector(r) for r in m.rows]


def _read_code(args: argparse.Namespace):
    path = args.input or args.file
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise DomainError(f"cannot read {path}: {e.strerror}") from None
    return from_generator(parse_matrix(text))


def _bool(b: bool) -> str:
    return "true" if b else "false"


# --- commands ---------------------------------------------------------------------


def cmd_profile(args, out: _Out) -> int:
    c = _read_code(args)
    p = profile(c)
    out.emit({"command": "profile", **p.to_record(), "generator": _rows(c.gen)},
             [f"n: {p.n}", f"k: {p.k}", f"d: {p.d}", f"dual_distance: {p.dual_distance}",
              f"LCD: {_bool(p.is_lcd)}"])
    return 0


def cmd_check(args, out: _Out) -> int:
    c = _read_code(args)
    lcd = is_hermitian_lcd(c)
    out.emit({"command": "check", "n": c.n, "k": c.k, "is_lcd": lcd}, [f"LCD: {_bool(lcd)}"])
    return 0


def cmd_dual(args, out: _Out) -> int:
    c = _read_code(args)
    dual = hermitian_dual(c)
    if dual is None:
        out.emit({"command": "dual", "n": c.n, "k": 0, "generator": None}, ["zero code"])
    else:
        out.emit({"command": "dual", "n": dual.n, "k": dual.k, "generator": _rows(dual.gen)},
                 _rows(dual.gen))
    return 0


def cmd_minweight(args, out: _Out) -> int:
    c = _read_code(args)
    d = minimum_weight(c)
    rec = {"command": "minweight", "n": c.n, "k": c.k, "d": d}
    human = [f"d: {d}"]
    if args.distribution:
        dist = weight_distribution(c)
        rec["distribution"] = dist
        human += [f"A{w}: {a}" for w, a in enumerate(dist) if a]
    out.emit(rec, human)
    return 0


def cmd_decompose(args, out: _Out) -> int:
    c = _read_code(args)
    dec = hermitian_decompose(c)
    xp = None if dec.x_prime is None else format_vector(dec.x_prime)
    human = [f"x: {format_vector(dec.x)}"]
    if xp is not None:
        human.append(f"x': {xp}")
    human += [f"rest: {r}" for r in _rows(dec.rest)]
    out.emit({"command": "decompose", "k": dec.k, "x": format_vector(dec.x), "x_prime": xp,
              "rest": _rows(dec.rest)}, human)
    return 0


def _code_result(name: str, c, out: _Out) -> None:
    p = profile(c)
    out.emit({"command": name, **p.to_record(), "generator": _rows(c.gen)},
             _rows(c.gen) + ["", f"[{p.n},{p.k},{p.d}] dual_distance={p.dual_distance} "
                                 f"LCD={_bool(p.is_lcd)}"])


def cmd_extend(args, out: _Out) -> int:
    _code_result("extend", extend_lcd(_read_code(args)), out)
    return 0


def cmd_promote(args, out: _Out) -> int:
    _code_result("promote", promote_dual_distance(_read_code(args)), out)
    return 0


def cmd_r4(args, out: _Out) -> int:
    v = r4(args.n, args.k, args.alpha)
    out.emit({"command": "r4", "n": args.n, "k": args.k, "alpha": args.alpha, "r4": v}, [f"r4={v}"])
    return 0


def cmd_reduce(args, out: _Out) -> int:
    dec = decide(args.n, args.k, args.alpha)
    head = f"{dec.variant.value}, r4={dec.r4_value}"
    if dec.reduced_n is not None:
        head += f", reduced=[{dec.reduced_n},{dec.reduced_k}] (dual distance >= 2 required)"
    out.emit({"command": "reduce", "n": args.n, "k": args.k, "alpha": args.alpha, **dec.to_record()},
             [head, dec.reason])
    return 0


def cmd_enumerate(args, out: _Out) -> int:
    count = 0
    for c in enumerate_codes(args.n, args.k, args.budget or EXHAUSTIVE_LIMIT):
        count += 1
        if out.machine:
            print(json.dumps({"generator": _rows(c.gen)}))
        else:
            print(format_matrix(c.gen))
            print()
    if not out.machine:
        print(f"# {count} codes")
    return 0


def cmd_tabulate(args, out: _Out) -> int:
    rep = tabulate(args.n, args.k, args.threads, args.budget or EXHAUSTIVE_LIMIT)
    human = [f"[{rep.n},{rep.k}] codes scanned: {rep.codes_scanned} (LCD: {rep.lcd_codes})",
             f"best d, dual distance >= 2: {rep.best_d_dual_ge2}",
             f"best d, dual distance = 1: {rep.best_d_dual_eq1}",
             f"best d, any LCD: {rep.best_d_any}",
             f"elapsed: {rep.elapsed:.2f}s"]
    out.emit(rep.to_record(), human)
    return 0


def cmd_verify(args, out: _Out) -> int:
    fn = {"lemma2": verify_lemma2, "theorem3": verify_theorem3}[args.statement]
    rep = fn(args.n, args.k, args.threads, args.budget or EXHAUSTIVE_LIMIT)
    human = ["pass" if rep.passed else "FAIL",
             f"checked {rep.codes_checked} of {rep.codes_scanned} codes; violations: {rep.violations}"]
    if rep.counterexample:
        human += ["counterexample:", rep.counterexample]
    out.emit(rep.to_record(), human)
    return 0 if rep.passed else 1


def cmd_search(args, out: _Out) -> int:
    exhaustive = True if args.exhaustive else (False if args.random else None)
    res = search_lcd(args.n, args.k, args.d_min, args.dual_min, args.budget, args.seed,
                     args.threads, exhaustive)
    human = [res.conclusion, f"scanned: {res.scanned} ({'exhaustive' if res.exhaustive else 'random'})"]
    if res.witness is not None:
        human += _rows(res.witness.gen)
    out.emit(res.to_record(), human)
    return 0


def cmd_simplex(args, out: _Out) -> int:
    c = simplex_code(args.k)
    out.emit({"command": "simplex", "n": c.n, "k": c.k, "generator": _rows(c.gen)}, _rows(c.gen))
    return 0


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="one JSON record per line")
    common.add_argument("--report", metavar="FILE", help="also write the result as a JSON document")
    common.add_argument("--threads", type=int, default=1, metavar="N", help="worker processes")
    common.add_argument("--budget", type=int, metavar="N", help="enumeration or sample budget")
    common.add_argument("--seed", type=int, metavar="N", help="seed for randomized commands")

    matrix = argparse.ArgumentParser(add_help=False)
    matrix.add_argument("file", nargs="?", help="matrix text file (default: stdin)")
    matrix.add_argument("--input", metavar="FILE", help="matrix text file")

    nk = argparse.ArgumentParser(add_help=False)
    nk.add_argument("n", type=int)
    nk.add_argument("k", type=int)

    p = argparse.ArgumentParser(prog="hermlcd", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in [
        ("profile", cmd_profile, "n, k, d, dual distance and LCD status"),
        ("check", cmd_check, "Hermitian LCD test via the Gram determinant"),
        ("dual", cmd_dual, "Hermitian dual code"),
        ("decompose", cmd_decompose, "anisotropic decomposition of an LCD code"),
        ("extend", cmd_extend, "extend an LCD code by one coordinate"),
        ("promote", cmd_promote, "raise the dual distance of an LCD code to >= 2"),
    ]:
        sp = sub.add_parser(name, parents=[common, matrix], help=help_)
        sp.set_defaults(func=fn)
    sp = sub.add_parser("minweight", parents=[common, matrix], help="minimum weight")
    sp.add_argument("--distribution", action="store_true", help="also print the weight distribution")
    sp.set_defaults(func=cmd_minweight)

    for name, fn in [("r4", cmd_r4), ("reduce", cmd_reduce)]:
        sp = sub.add_parser(name, parents=[common, nk], help=f"{name} for (n, k, alpha)")
        sp.add_argument("alpha", type=int)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("enumerate", parents=[common, nk], help="list every [n,k] code")
    sp.set_defaults(func=cmd_enumerate)
    sp = sub.add_parser("tabulate", parents=[common, nk], help="best LCD minimum weights by dual class")
    sp.set_defaults(func=cmd_tabulate)
    sp = sub.add_parser("verify", parents=[common], help="exhaustively check a construction")
    sp.add_argument("statement", choices=["lemma2", "theorem3"])
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", parents=[common, nk], help="search for an LCD witness")
    sp.add_argument("--d-min", type=int, default=1)
    sp.add_argument("--dual-min", type=int, default=1)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", action="store_true")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("simplex", parents=[common], help="simplex code generator")
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_simplex)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    if args.command == "search" and args.random and args.seed is None:
        print("error: --random requires --seed", file=sys.stderr)
        return 2
    try:
        return args.func(args, _Out(args.machine, args.report))
    except (DomainError, PreconditionError, CapacityError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
