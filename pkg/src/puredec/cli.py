"""Command line entry point ``puredec``.

Exit status: 0 on success, 1 for usage and parse errors, 2 when the input is
well formed but mathematically rejected.
"""

from __future__ import annotations

import argparse
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .betti_decomposition import decompose_betti, integrality_report, verify_decomposition
from .cohomology import decompose_cohomology, supernatural_table
from .constructions import equivariant_betti, generic_matrix_betti
from .diagrams import Window, hk_residual, pure_diagram
from .errors import InputError, PuredecError, Rejection
from .fan import count_maximal_chains, h_table, lower_facet_equation, maximal_chains, pairing, upper_facet_equation
from .formats import parse_betti, parse_cohtab, render_betti, render_cohtab, write_cohtab

EXIT_OK, EXIT_USAGE, EXIT_REJECTED = 0, 1, 2

# "-1,0,2" would otherwise be taken for an option
_NEG_LIST = re.compile(r"^-\d+(,-?\d+)+$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_list(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def fmt_seq(seq) -> str:
    return "(" + ",".join(str(x) for x in seq) + ")"


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _decompose_one(path, mode, codim):
    """Decompose one file; return ``(report text, exit code)``."""
    try:
        beta, file_codim = parse_betti(_read(path))
    except OSError as exc:
        return f"error: {exc}\n", EXIT_USAGE
    except InputError as exc:
        return f"error: {path}: {exc}\n", EXIT_USAGE
    if codim is None:
        # with no codimension given, CM mode can only mean the diagram's own length
        codim = file_codim if file_codim is not None else max(beta.ncols - 1, 0)
    try:
        dec = decompose_betti(beta, mode=mode, codim=codim if mode == "cm" else None)
    except Rejection as exc:
        return f"NOT_IN_CONE {exc}\n", EXIT_REJECTED
    lines = [f"coef {c} deg {fmt_seq(d)}" for c, d in dec]
    lines.append("check: exact" if verify_decomposition(beta, dec) else "check: FAILED")
    rep = integrality_report(dec)
    lines.append(f"integrality: denominator_lcm {rep.denominator_lcm} minimal_integer_multiple {rep.minimal_integer_multiple}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_decompose(args):
    jobs = [(p, args.mode, args.codim) for p in args.paths]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_decompose_one, *zip(*jobs)))
    else:
        results = [_decompose_one(*j) for j in jobs]
    code = EXIT_OK
    for path, (text, rc) in zip(args.paths, results):
        if len(results) > 1:
            sys.stdout.write(f"== {path}\n")
        (sys.stderr if rc == EXIT_USAGE else sys.stdout).write(text)
        code = max(code, rc)
    return code


def cmd_pure(args):
    pd = pure_diagram(args.degrees)
    print(f"values {fmt_seq(pd.values)}")
    print(render_betti(pd.diagram()), end="")
    return EXIT_OK


def cmd_supernatural(args):
    lo, hi = args.range
    table = supernatural_table(args.roots, lo, hi, args.norm)
    print(write_cohtab(table) if args.raw else render_cohtab(table), end="")
    return EXIT_OK


def _default_window(f):
    lo = min(x - i for i, x in enumerate(f)) - 3
    hi = max(x - i for i, x in enumerate(f))
    n = len(f)
    return Window([lo + i for i in range(n)], [hi + i for i in range(n)])


def cmd_facet(args):
    f = args.degrees
    window = Window(*args.window) if args.window else _default_window(f)
    if args.lower:
        coeffs = lower_facet_equation(f, args.tau, window)
    elif args.full:
        hat = tuple(-x for k, x in enumerate(f) if k not in (args.tau, args.tau + 1))
        coeffs = h_table(hat, window)
    else:
        coeffs = upper_facet_equation(f, args.tau, window)
    print(render_betti(coeffs.entries, window), end="")
    return EXIT_OK


def cmd_pair(args):
    beta, _ = parse_betti(_read(args.betti))
    gamma = parse_cohtab(_read(args.cohtab))
    print(pairing(beta, gamma, args.e, args.tau))
    return EXIT_OK


def cmd_check_hk(args):
    beta, codim = parse_betti(_read(args.path))
    c = args.c if args.c is not None else codim if codim is not None else max(beta.ncols - 1, 0)
    res = hk_residual(beta, c)
    print(f"residuals {fmt_seq(res)}")
    ok = not any(res)
    print("hk: ok" if ok else "hk: violated")
    return EXIT_OK if ok else EXIT_REJECTED


def cmd_chains(args):
    if args.count:
        print(count_maximal_chains(args.a, args.b))
    else:
        for chain in maximal_chains(args.a, args.b):
            print(" < ".join(fmt_seq(d) for d in chain))
    return EXIT_OK


def cmd_decompose_coh(args):
    gamma = parse_cohtab(_read(args.path))
    dec = decompose_cohomology(gamma, args.max_steps)
    for q, z in dec.terms:
        print(f"coef {q} roots {fmt_seq(z)}")
    print(f"stop: {dec.stop_reason}")
    if dec.remainder.is_zero():
        print("remainder: zero")
    else:
        print("remainder:")
        print(render_cohtab(dec.remainder), end="")
    return EXIT_OK


def cmd_ranks(args):
    if args.kind == "equivariant":
        ranks = equivariant_betti(args.seq)
    else:
        ranks = generic_matrix_betti(args.seq)
    print(f"ranks {fmt_seq(ranks)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="puredec", description="Exact Boij-Soederberg decompositions and facet equations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("decompose", help="decompose BETTI v1 files into pure diagrams")
    s.add_argument("paths", nargs="+")
    s.add_argument("--mode", choices=["cm", "general"], default="cm")
    s.add_argument("--codim", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("pure", help="the pure diagram of a degree sequence")
    s.add_argument("degrees", type=int_list)
    s.set_defaults(func=cmd_pure)

    s = sub.add_parser("supernatural", help="supernatural cohomology table of a root sequence")
    s.add_argument("roots", type=int_list)
    s.add_argument("--range", type=int, nargs=2, metavar=("DMIN", "DMAX"), required=True)
    s.add_argument("--norm", choices=["canonical", "integral"], default="canonical")
    s.add_argument("--raw", action="store_true", help="print a COHTAB v1 document")
    s.set_defaults(func=cmd_supernatural)

    s = sub.add_parser("facet", help="upper or lower equation of a type 3 facet")
    s.add_argument("degrees", type=int_list)
    s.add_argument("--tau", type=int, required=True)
    s.add_argument("--window", type=int_list, nargs=2, metavar=("A", "B"))
    side = s.add_mutually_exclusive_group()
    side.add_argument("--upper", action="store_true", default=True)
    side.add_argument("--lower", action="store_true")
    side.add_argument("--full", action="store_true", help="the unzeroed table H")
    s.set_defaults(func=cmd_facet)

    s = sub.add_parser("pair", help="pairing of a diagram with a cohomology table")
    s.add_argument("betti")
    s.add_argument("cohtab")
    s.add_argument("--e", type=int, required=True)
    s.add_argument("--tau", type=int, required=True)
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("check-hk", help="Herzog-Kuehl residuals of a diagram")
    s.add_argument("path")
    s.add_argument("--c", type=int)
    s.set_defaults(func=cmd_check_hk)

    s = sub.add_parser("chains", help="maximal chains between two degree sequences")
    s.add_argument("a", type=int_list)
    s.add_argument("b", type=int_list)
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_chains)

    s = sub.add_parser("decompose-coh", help="peel supernatural tables off a COHTAB v1 file")
    s.add_argument("path")
    s.add_argument("--max-steps", type=int, default=20)
    s.set_defaults(func=cmd_decompose_coh)

    s = sub.add_parser("ranks", help="ranks of the equivariant constructions")
    s.add_argument("kind", choices=["equivariant", "generic"])
    s.add_argument("seq", type=int_list, help="gaps e for 'equivariant', degrees d for 'generic'")
    s.set_defaults(func=cmd_ranks)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _NEG_LIST.match(a) else a for a in argv]
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Rejection as exc:
        print(f"REJECTED {exc}")
        return EXIT_REJECTED
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PuredecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
