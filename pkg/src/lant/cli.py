"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (bad n, singular design,
out-of-domain argument), 2 on a usage error.

    lant matrix   --n 10 --q 2,5
    lant estimate --n 20 --q primes
    lant invert   --n 20
    lant ntf      --fn pi --x 10
    lant zeta     --re 2 --im 0 --terms 1000000
    lant scan     --from 100 --to 2000 --step 100
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import numtheory as nt
from . import oracle
from .core import candidate_factorization, candidates, primes_up_to
from .errors import InvalidArgument, LantError
from .inversion import invert_by_forward_substitution, invert_factorization_matrix
from .regression import LOG_TOL, log_prime_estimator

N_MAX = 2**32
DIGITS = 15


def _fmt(x: float) -> str:
    return f"{x:.{DIGITS}g}"


def _round(x: float) -> float:
    return float(_fmt(x))


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _int_in_range(lo: int, hi: int = N_MAX):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if not lo <= v <= hi:
            raise argparse.ArgumentTypeError(f"{v} outside [{lo}, {hi}]")
        return v

    return parse


def _finite_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return v


def parse_candidates(text: str, n: int):
    """``primes`` | ``naturals`` | ``2,3,5`` | ``@file`` (integers split by commas or whitespace)."""
    if text == "primes":
        return primes_up_to(n)
    if text == "naturals":
        return candidates(range(1, n + 1), n)
    if text.startswith("@"):
        items = Path(text[1:]).read_text().replace(",", " ").split()
    else:
        items = [t for t in text.split(",") if t.strip()]
    try:
        values = [int(t) for t in items]
    except ValueError as exc:
        raise InvalidArgument(f"bad candidate list {text!r}: {exc}")
    return candidates(values, n)


def cmd_matrix(args) -> str:
    F = candidate_factorization(parse_candidates(args.q, args.n), args.n)
    if args.format == "json":
        return _dump_json({"n": F.n, "q": list(F.q.values), "rows": F.dense().tolist()})
    return F.to_csv()


def cmd_estimate(args) -> str:
    res = log_prime_estimator(parse_candidates(args.q, args.n), args.n)
    if args.format == "json":
        return _dump_json(res.to_dict(args.tol, DIGITS))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "q", "ln_q", "ln_q_hat"])
    for j, (q, lq, lqh) in enumerate(zip(res.q.values, res.q.logs(), res.ln_q_hat), start=1):
        w.writerow([j, q, _fmt(lq), _fmt(lqh)])
    return buf.getvalue()


def cmd_invert(args) -> str:
    inv = invert_by_forward_substitution(args.n) if args.method == "substitution" else invert_factorization_matrix(args.n)
    if args.format == "json":
        return _dump_json({"n": inv.n, "rows": inv.to_lists()})
    return inv.to_csv()


def _as_integer(x: float, what: str) -> int:
    if x != int(x):
        raise InvalidArgument(f"{what} needs an integer argument, got {x}")
    return int(x)


def _ntf_lant(fn: str, x: float, n: int | None) -> nt.NtfValue:
    if fn == "ip":
        i = _as_integer(x, "ip")
        return nt.NtfValue(nt.is_prime_lant(i, n))
    if fn == "pi":
        return nt.NtfValue(nt.prime_count(int(math.floor(x))) if x >= 1 else 0)
    if fn == "theta":
        if x < 1:
            raise InvalidArgument("theta needs x >= 1")
        return nt.NtfValue(nt.chebyshev_first(int(math.floor(x))))
    if fn == "psi":
        return nt.chebyshev_second(x)
    if fn == "lambda":
        return nt.NtfValue(nt.von_mangoldt_lant(_as_integer(x, "lambda"), n))
    if fn == "li":
        return nt.logarithmic_integral(x)
    raise InvalidArgument(fn)


def _ntf_oracle(fn: str, x: float) -> nt.NtfValue:
    if fn == "ip":
        i = _as_integer(x, "ip")
        v = None if i == 1 else int(i in set(oracle.sieve(i)))
    elif fn == "pi":
        v = oracle.prime_pi(x)
    elif fn == "theta":
        v = oracle.theta(x)
    elif fn == "psi":
        v = oracle.psi(x)
    elif fn == "lambda":
        v = oracle.mangoldt(_as_integer(x, "lambda"))
    else:
        v = oracle.li(x)
    return nt.NtfValue(v, "oracle")


def cmd_ntf(args) -> str:
    val = _ntf_oracle(args.fn, args.x) if args.oracle else _ntf_lant(args.fn, args.x, args.n)
    d = {"fn": args.fn, "x": _round(args.x), **val.to_dict(DIGITS)}
    if args.format == "json":
        return _dump_json(d)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["fn", "x", "value", "path", "error_estimate"])
    w.writerow([args.fn, _fmt(args.x), "" if d["value"] is None else d["value"], d["path"], "" if d["error_estimate"] is None else _fmt(d["error_estimate"])])
    return buf.getvalue()


def cmd_zeta(args) -> str:
    val = nt.zeta_eta(complex(args.re, args.im), args.terms)
    d = {"re": _round(val.value.real), "im": _round(val.value.imag), "err": _round(val.error_estimate)}
    if args.format == "json":
        return _dump_json(d)
    return f"re,im,err\n{_fmt(val.value.real)},{_fmt(val.value.imag)},{_fmt(val.error_estimate)}\n"


def cmd_scan(args) -> str:
    samples = nt.conjecture_scan(args.n_from, args.n_to, args.step)
    if args.format == "json":
        return _dump_json(
            [
                {"n": s.n, "ld": _round(s.ld), "li": _round(s.li), "ratio": None if s.ratio is None else _round(s.ratio)}
                for s in samples
            ]
        )
    return nt.scan_to_csv(samples, DIGITS)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lant", description="Prime factorization as log-space linear regression.")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, default_format):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=("csv", "json"), default=default_format)
        sp.add_argument("-o", "--output", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    sp = add("matrix", cmd_matrix, "dump the candidate factorization matrix F_n(q)", "csv")
    sp.add_argument("--n", type=_int_in_range(1), required=True)
    sp.add_argument("--q", default="primes", help="primes | naturals | comma list | @file")

    sp = add("estimate", cmd_estimate, "log-prime estimate and consistency report", "json")
    sp.add_argument("--n", type=_int_in_range(1), required=True)
    sp.add_argument("--q", default="primes", help="primes | naturals | comma list | @file")
    sp.add_argument("--tol", type=_finite_float, default=LOG_TOL)

    sp = add("invert", cmd_invert, "exact inverse of F_n(z_n)", "csv")
    sp.add_argument("--n", type=_int_in_range(1), required=True)
    sp.add_argument("--method", choices=("product", "substitution"), default="product")

    sp = add("ntf", cmd_ntf, "number-theoretic function value", "json")
    sp.add_argument("--fn", choices=("ip", "pi", "theta", "psi", "lambda", "li"), required=True)
    sp.add_argument("--x", type=_finite_float, required=True)
    sp.add_argument("--n", type=_int_in_range(1), default=None, help="matrix size for ip/lambda (default: x)")
    sp.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    sp = add("zeta", cmd_zeta, "zeta(s) through the alternating series", "json")
    sp.add_argument("--re", type=_finite_float, required=True)
    sp.add_argument("--im", type=_finite_float, default=0.0)
    sp.add_argument("--terms", type=_int_in_range(10), default=nt.ZETA_TERMS)

    sp = add("scan", cmd_scan, "ld(n) against Li(n) over a range of n", "csv")
    sp.add_argument("--from", dest="n_from", type=_int_in_range(2), required=True)
    sp.add_argument("--to", dest="n_to", type=_int_in_range(2), required=True)
    sp.add_argument("--step", type=_int_in_range(1), default=1)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (LantError, OSError) as exc:
        print(f"lant {args.command}: error: {exc}", file=stderr)
        return 1
    if args.output:
        Path(args.output).write_text(out)
    else:
        stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
