"""Command-line front end.

Every subcommand parses flags, calls the library and prints records as CSV
(default) or JSON lines.  Exit status: 0 ok, 1 usage or domain error,
2 when ``scan-pi --strict`` finds pairs outside the known classes.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence, Tuple

from . import families, intervals, pell, search
from .arith import DomainError, triangular
from .polynomial import IntPolynomial


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which we reserve
        raise UsageError(message)


def parse_range(text: str) -> Tuple[int, int]:
    """``lo..hi`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected lo..hi")


def parse_ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}")


def _iv(text: str) -> Tuple[int, int]:
    lo, hi = parse_range(text)
    return lo, hi


# --------------------------------------------------------------------------
# subcommand handlers: each returns (header, rows[, exit code])

def cmd_normalize(args):
    res = intervals.normalize(args.left, args.right)
    if isinstance(res, intervals.Canonical):
        p = res.params
        return ("kind", "j", "m", "k", "n", "negated"), [("canonical", p.j, p.m, p.k, res.n, res.negated)]
    if isinstance(res, intervals.Symmetric):
        return ("kind", "holds"), [("symmetric", res.holds())]
    return ("kind", "reason"), [("degenerate", res.reason)]


def cmd_solve(args):
    p = intervals.CaseParams(args.j, args.m, args.k)
    q = intervals.quadratic_of(p)
    st = intervals.roots(p)
    header = ("j", "m", "k", "a", "b", "c", "D", "status", "n", "sqrtD")
    base = (p.j, p.m, p.k, q.a, q.b, q.c, intervals.discriminant(p))
    if isinstance(st, intervals.NegativeD):
        return header, [base + ("negative", None, None)]
    if isinstance(st, intervals.IrrationalD):
        return header, [base + ("irrational", None, None)]
    ns = st.roots[:1] if st.double_root else st.roots
    status = "double" if st.double_root else "rational"
    return header, [base + (status, n, st.sqrtD) for n in ns]


def cmd_verify(args):
    p = intervals.CaseParams(args.j, args.m, args.k)
    v = intervals.verify_solution(p, args.n)
    return ("j", "m", "k", "n", "holds", "left_sum", "right_sum"), [
        (p.j, p.m, p.k, args.n, v.holds, v.left_sum, v.right_sum)]


def cmd_dostor(args):
    d = intervals.dostor(args.k)
    p = intervals.CaseParams(0, 0, d.k)
    (a, b), (c, e) = p.left(d.n_plus), p.right(d.n_plus)
    identity = f"{a}^2+...+{b}^2 = {c}^2+...+{e}^2"
    return ("k", "n_plus", "n_minus", "common_sum", "closed_form", "identity"), [
        (d.k, d.n_plus, d.n_minus, d.common_sum, d.closed_form, identity)]


def cmd_pell(args):
    n = args.count
    if args.kind == "x":
        return ("i", "x"), list(enumerate(pell.x_sequence(n - 1)))
    if args.kind == "triangular":
        rows = []
        for i in range(n):
            s = pell.square_triangular(i)
            rows.append((i, s.t, triangular(s.t), s.d))
        return ("i", "t", "triangular", "d"), rows
    if args.kind == "euler":
        return ("n", "t", "d"), [(i, s.t, s.d) for i, s in enumerate(pell.pell_states(n))]
    rows = []
    for i in range(1, n + 1):
        tri = pell.near_isosceles(i)
        rows.append((i, tri.n, tri.n + 1, tri.hypotenuse, tri.j))
    return ("i", "n", "n_plus_1", "hypotenuse", "j"), rows


def _poly(p: IntPolynomial) -> str:
    return " ".join(str(c) for c in p.coeffs)


def cmd_family(args):
    if args.k is not None:
        r = families.family_roots(args.i, args.k)
        return ("i", "k", "j", "sqrtPi", "n_plus", "n_minus"), [
            (args.i, args.k, r.j, r.sqrt_pi, r.n_plus, r.n_minus)]
    f = families.family(args.i)
    rows = [("A", _poly(f.A)), ("B", _poly(f.B)), ("C", _poly(f.C)),
            ("j", _poly(families.j_poly(args.i))), ("sqrtPi", _poly(families.pi_sqrt(args.i))),
            ("verified", families.verify_family(f))]
    return ("name", "coeffs_ascending"), rows


def cmd_table(args):
    if args.name == "t1":
        args.kind, args.count = "triangular", 6
        return cmd_pell(args)
    if args.name == "t2":
        rows = families.table2(args.kmax, args.imax)
        header = ("k",) + tuple(f"j{i}" for i in range(args.imax + 1))
        return header, [(k,) + tuple(r) for k, r in enumerate(rows, start=1)]
    if args.name == "t4":
        hits = search.scan_discriminant([0], 100, 100, workers=args.workers)
    else:
        hits = search.scan_discriminant(range(1, 19), 100, 100, workers=args.workers)
    return search.DISC_HEADER, search.disc_rows(hits)


def cmd_scan_pi(args):
    recs = search.scan_square_pairs(args.kmax, args.smax, workers=args.workers)
    bad = search.exceptions(recs)
    code = 0
    if bad:
        for r in bad:
            print(f"exception: k={r.k} j={r.j} sqrtPi={r.sqrt_pi}", file=sys.stderr)
        if args.strict:
            code = 2
    return search.PAIR_HEADER, search.pair_rows(recs), code


def cmd_scan_disc(args):
    cfg = search.SearchConfig(args.j, args.m, args.k, args.workers, args.format, args.strict)
    hits = search.scan_discriminant(range(cfg.j_range[0], cfg.j_range[1] + 1), cfg.m_range[1],
                                    cfg.k_range[1], mmin=cfg.m_range[0], kmin=cfg.k_range[0],
                                    workers=cfg.workers)
    return search.DISC_HEADER, search.disc_rows(hits)


def cmd_type2(args):
    if args.euler is not None:
        e = search.type2_from_euler(args.euler)
        return ("k", "euler_d", "a", "b", "euler_root", "d"), [
            (e.k, e.euler_d, e.a, e.b, e.euler_root, e.d)]
    if args.swap is not None:
        out = search.swap23(args.swap)
        return ("before", "type_before", "after", "type_after"), [
            (" ".join(map(str, args.swap)), search.product_type(args.swap),
             " ".join(map(str, out)), search.product_type(out))]
    return ("a", "b", "d"), [(h.a, h.b, h.d) for h in search.type2_scan(args.amax, args.bmax)]


def cmd_sratio(args):
    r = search.s_ratio(args.N, distinct=args.distinct)
    return ("N", "S_N", "ratio"), [(r.N, r.S_N, r.ratio)]


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--strict", action="store_true")
    common.add_argument("--out", default=None, help="write output to FILE instead of stdout")

    parser = _Parser(prog="sqpairs", description="Equal sums of squares of integer intervals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", parents=[common], help="reduce two intervals to (j, m, k, n)")
    p.add_argument("--left", type=_iv, required=True)
    p.add_argument("--right", type=_iv, required=True)
    p.set_defaults(func=cmd_normalize)

    for name, func, extra in (("solve", cmd_solve, False), ("verify", cmd_verify, True)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--j", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        if extra:
            p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("dostor", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_dostor)

    p = sub.add_parser("pell", parents=[common], help="x sequence, square triangular numbers, triples")
    p.add_argument("--kind", choices=("x", "triangular", "euler", "triples"), default="triangular")
    p.add_argument("--count", type=int, default=8)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("family", parents=[common], help="A, B, C and j_i polynomials")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="evaluate j_i and both roots at k")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("table", parents=[common], help="reproduce t1, t2, t4 or t5")
    p.add_argument("--name", choices=("t1", "t2", "t4", "t5"), required=True)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--imax", type=int, default=8)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan-pi", parents=[common], help="square pairs (k, j), classified")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--smax", type=int, required=True)
    p.set_defaults(func=cmd_scan_pi)

    p = sub.add_parser("scan-disc", parents=[common], help="perfect-square discriminants on a grid")
    p.add_argument("--j", type=parse_range, default=(0, 0))
    p.add_argument("--m", type=parse_range, default=(1, 100))
    p.add_argument("--k", type=parse_range, default=(1, 100))
    p.set_defaults(func=cmd_scan_disc)

    p = sub.add_parser("type2", parents=[common], help="2 a(a+1) b(b+1) = d^2")
    p.add_argument("--amax", type=int, default=20)
    p.add_argument("--bmax", type=int, default=150)
    p.add_argument("--euler", type=int, default=None)
    p.add_argument("--swap", type=parse_ints, default=None)
    p.set_defaults(func=cmd_type2)

    p = sub.add_parser("sratio", parents=[common])
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--distinct", action="store_true", help="exclude a == b")
    p.set_defaults(func=cmd_sratio)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.workers < 1:
            raise DomainError("--workers must be >= 1")
        result = args.func(args)
    except (UsageError, DomainError, argparse.ArgumentTypeError) as exc:
        print(f"sqpairs: error: {exc}", file=sys.stderr)
        return 1
    header, rows = result[0], result[1]
    code = result[2] if len(result) > 2 else 0
    text = search.render(header, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
