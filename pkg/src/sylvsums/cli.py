"""Command-line interface.

Subcommands::

    sylv    --a 1,2 --b 3,4 --p 1 --q 1
    sres    (--a ROOTS | --f COEFFS) (--b ROOTS | --g COEFFS) --k K
    cof     (--a ROOTS | --f COEFFS) (--b ROOTS | --g COEFFS) --k K
    ud      --a ROOTS --b ROOTS --d D [--coeff P]
    verify  --m M --n N [--trials T] [--seed S] [--suite main|matrix|all]

Every subcommand accepts ``--json``.  Exit status: 0 success, 1 a
verification check failed, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .arith import BiPoly, UniPoly, monic_from_coeffs, parse_rat, poly_from_roots
from .doublesum import sylvester_double_sum
from .errors import SylvError
from .linalg import RootList
from .subres import cofactors, sres
from .sylvmatrix import UdContext, ud_coeff, ud_det
from .verify import random_instance, run_suites_on

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# wire formats

def unipoly_to_json(p: UniPoly) -> dict:
    return {"var": "x", "coeffs": [str(c) for c in p.coeffs]}


def unipoly_from_json(obj: dict) -> UniPoly:
    if obj.get("var") != "x":
        raise ValueError(f"expected var 'x', got {obj.get('var')!r}")
    return UniPoly(parse_rat(c) for c in obj["coeffs"])


def bipoly_to_json(p: BiPoly) -> dict:
    return {"vars": ["x", "T"], "t_coeffs": [unipoly_to_json(u) for u in p.t_coeffs]}


def bipoly_from_json(obj: dict) -> BiPoly:
    if obj.get("vars") != ["x", "T"]:
        raise ValueError(f"expected vars ['x', 'T'], got {obj.get('vars')!r}")
    return BiPoly(unipoly_from_json(u) for u in obj["t_coeffs"])


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# argument parsing

def _rat_list(text: str, flag: str) -> list:
    items = [s for s in text.split(",")]
    if not text.strip() or any(not s.strip() for s in items):
        raise UsageError(f"{flag}: empty entry in list {text!r}")
    try:
        return [parse_rat(s) for s in items]
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _roots(text: str, flag: str) -> RootList:
    return RootList(_rat_list(text, flag))


@dataclass
class CliConfig:
    command: str
    A: Optional[RootList] = None
    B: Optional[RootList] = None
    f: Optional[UniPoly] = None
    g: Optional[UniPoly] = None
    p: Optional[int] = None
    q: Optional[int] = None
    k: Optional[int] = None
    d: Optional[int] = None
    coeff: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    trials: int = 1
    seed: int = 0
    suite: str = "all"
    json: bool = False
    notices: list[str] = field(default_factory=list)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylvsums",
        description="Exact Sylvester double sums, subresultants and U_d determinants over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")

    sp = sub.add_parser("sylv", help="Sylvester double sum Sylv^{p,q}(A,B;x)")
    sp.add_argument("--a", help="roots of f, comma separated")
    sp.add_argument("--b", help="roots of g, comma separated")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    common(sp)

    for name, desc in (("sres", "subresultant Sres_k(f,g)"), ("cof", "cofactors F_k, G_k")):
        sp = sub.add_parser(name, help=desc)
        sp.add_argument("--a", help="roots of f")
        sp.add_argument("--f", help="ascending coefficients of monic f")
        sp.add_argument("--b", help="roots of g")
        sp.add_argument("--g", help="ascending coefficients of monic g")
        sp.add_argument("--k", type=int)
        common(sp)

    sp = sub.add_parser("ud", help="u_d(x,T) = det U_d(x,T)")
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--d", type=int)
    sp.add_argument("--coeff", type=int, metavar="P", help="print u_{d,P}(x) only")
    common(sp)

    sp = sub.add_parser("verify", help="randomized exact verification")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", help="verify these roots instead of random ones")
    sp.add_argument("--b")
    sp.add_argument("--trials", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--suite", choices=("main", "matrix", "all"), default="all")
    common(sp)
    return parser


def _require(ns, *flags):
    for flag in flags:
        if getattr(ns, flag) is None:
            raise UsageError(f"missing required flag --{flag}")


def _poly_input(ns, root_flag: str, coeff_flag: str):
    roots, coeffs = getattr(ns, root_flag), getattr(ns, coeff_flag)
    if (roots is None) == (coeffs is None):
        raise UsageError(f"give exactly one of --{root_flag} or --{coeff_flag}")
    if roots is not None:
        return poly_from_roots(_roots(roots, f"--{root_flag}"))
    return monic_from_coeffs(_rat_list(coeffs, f"--{coeff_flag}"))


def parse_args(argv: Sequence[str]) -> CliConfig:
    """Parse and validate ``argv``.  Raises :class:`UsageError` or a domain error."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        if exc.code == 0:
            raise
        raise UsageError("invalid command line") from None
    cfg = CliConfig(command=ns.command, json=ns.json)

    if ns.command == "sylv":
        _require(ns, "a", "b", "p", "q")
        cfg.A, cfg.B = _roots(ns.a, "--a"), _roots(ns.b, "--b")
        cfg.p, cfg.q = ns.p, ns.q
    elif ns.command in ("sres", "cof"):
        _require(ns, "k")
        cfg.f = _poly_input(ns, "a", "f")
        cfg.g = _poly_input(ns, "b", "g")
        cfg.k = ns.k
        if cfg.f.degree > cfg.g.degree:
            cfg.f, cfg.g = cfg.g, cfg.f
            cfg.notices.append("notice: deg f > deg g; swapping f and g")
    elif ns.command == "ud":
        _require(ns, "a", "b", "d")
        cfg.A, cfg.B = _roots(ns.a, "--a"), _roots(ns.b, "--b")
        cfg.d, cfg.coeff = ns.d, ns.coeff
        if len(cfg.A) > len(cfg.B):
            cfg.A, cfg.B = cfg.B, cfg.A
            cfg.notices.append("notice: |A| > |B|; swapping A and B")
    else:
        if ns.a is not None or ns.b is not None:
            _require(ns, "a", "b")
            cfg.A, cfg.B = _roots(ns.a, "--a"), _roots(ns.b, "--b")
            if len(cfg.A) > len(cfg.B):
                cfg.A, cfg.B = cfg.B, cfg.A
                cfg.notices.append("notice: |A| > |B|; swapping A and B")
        else:
            _require(ns, "m", "n")
            cfg.m, cfg.n = ns.m, ns.n
            if cfg.m > cfg.n:
                cfg.m, cfg.n = cfg.n, cfg.m
                cfg.notices.append("notice: m > n; swapping m and n")
            if cfg.m < 1:
                raise UsageError("--m and --n must be at least 1")
        if ns.trials < 1:
            raise UsageError("--trials must be at least 1")
        cfg.trials, cfg.seed, cfg.suite = ns.trials, ns.seed, ns.suite
    return cfg


# ---------------------------------------------------------------------------
# execution

def run(cfg: CliConfig) -> tuple[int, str]:
    """Execute a parsed command; returns the exit status and the text for stdout."""
    if cfg.command == "sylv":
        res = sylvester_double_sum(cfg.A, cfg.B, cfg.p, cfg.q)
        return EXIT_OK, dumps(unipoly_to_json(res)) if cfg.json else str(res)
    if cfg.command == "sres":
        res = sres(cfg.f, cfg.g, cfg.k)
        return EXIT_OK, dumps(unipoly_to_json(res)) if cfg.json else str(res)
    if cfg.command == "cof":
        cp = cofactors(cfg.f, cfg.g, cfg.k)
        if cfg.json:
            return EXIT_OK, dumps({"F": unipoly_to_json(cp.f_cof), "G": unipoly_to_json(cp.g_cof)})
        return EXIT_OK, f"F = {cp.f_cof}\nG = {cp.g_cof}"
    if cfg.command == "ud":
        ctx = UdContext(cfg.A, cfg.B, cfg.d)
        if cfg.coeff is not None:
            res = ud_coeff(ctx, cfg.coeff)
            return EXIT_OK, dumps(unipoly_to_json(res)) if cfg.json else str(res)
        res = ud_det(ctx)
        return EXIT_OK, dumps(bipoly_to_json(res)) if cfg.json else str(res)
    return _run_verify(cfg)


def _run_verify(cfg: CliConfig) -> tuple[int, str]:
    reports = []
    if cfg.A is not None:
        reports.append(run_suites_on(cfg.A, cfg.B, None, cfg.suite))
    else:
        for t in range(cfg.trials):
            seed = cfg.seed + t
            A, B = random_instance(cfg.m, cfg.n, seed)
            reports.append(run_suites_on(A, B, seed, cfg.suite))
    ok = all(r.passed for r in reports)
    if cfg.json:
        text = dumps([r.to_json() for r in reports])
    else:
        lines = []
        for r in reports:
            good = sum(c.passed for c in r.checks)
            roots = f"A=({', '.join(map(str, r.A))}) B=({', '.join(map(str, r.B))})"
            lines.append(f"m={r.m} n={r.n} seed={r.seed} {roots}: {good}/{len(r.checks)} checks passed")
            for c in r.failures():
                lines.append(f"  FAIL {c.name} [{c.case}]")
                if c.witness:
                    lines.append(f"    lhs: {c.witness[0]}")
                    lines.append(f"    rhs: {c.witness[1]}")
        lines.append("PASS" if ok else "FAIL")
        text = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_FAIL), text


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
        for note in cfg.notices:
            print(note, file=sys.stderr)
        status, text = run(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SylvError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
