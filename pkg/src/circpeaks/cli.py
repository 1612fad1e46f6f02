"""Command-line surface.

Subcommands: stats, enum-cp, witness, dyck, faces, fvector, hvector,
zeta, chains, moebius, euler, hilbert, series, verify.  JSON is the
default output format; --format csv switches tabular outputs.  Exit
codes: 0 success, 1 validation/usage error, 2 verification failure.
All numbers are emitted exactly (integers, or rationals as "p/q").
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import chains_zeta, complex_poset, hilbert_algebras, hvector, peak_sets, verify
from .exact_algebra import ExactPoly
from .peak_sets import DyckFormatError, InvalidPeakSetError, PeakSet
from .perm_core import (
    Permutation,
    ResourceLimitError,
    circular_descent_set,
    circular_peak_set,
    cp_class_size,
    enumerate_cp_class,
)


class CliError(Exception):
    """User-facing validation error; exits with code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise CliError(message)


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise CliError(f"expected comma-separated integers, got {text!r}") from exc


def _rat(value) -> object:
    """JSON-safe exact number: int, or 'p/q' string for a proper fraction."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    return int(value)


def _poly_coeffs(p: ExactPoly) -> list:
    return [_rat(c) for c in p.coeffs]


def _emit_json(payload, out) -> None:
    json.dump(payload, out, indent=2, sort_keys=True)
    out.write("\n")


def _emit_csv(rows, header, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def build_parser() -> _Parser:
    parser = _Parser(prog="circpeaks", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    def cmd(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        return p

    p = cmd("stats", help="circular peak and descent sets of a permutation")
    p.add_argument("--perm", required=True, help="comma-separated values")

    p = cmd("enum-cp", help="all permutations with a given circular peak set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", default="", help="ascending comma-separated values")

    p = cmd("witness", help="construct one permutation realizing a peak set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", default="")

    p = cmd("dyck", help="peak set <-> Dyck-prefix word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", default="")

    p = cmd("faces", help="faces of the complex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=None)

    p = cmd("fvector", help="f-vector and f-polynomial")
    p.add_argument("--n", type=int, required=True)

    p = cmd("hvector", help="h-vector and h-polynomial")
    p.add_argument("--n", type=int, required=True)

    p = cmd("zeta", help="multichain counts (zeta polynomial values)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = cmd("chains", help="strict chain counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = cmd("moebius", help="Moebius function over a face interval")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", action="append", default=[],
                   help="give twice: lower then upper face")

    p = cmd("euler", help="reduced Euler characteristic")
    p.add_argument("--n", type=int, required=True)

    p = cmd("hilbert", help="graded dimensions and Hilbert data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algebra", choices=("A", "B"), required=True)
    p.add_argument("--order", type=int, default=8)

    p = cmd("series", help="generating-function expansion (f or h)")
    p.add_argument("--which", choices=("P", "H"), required=True)
    p.add_argument("--order", type=int, default=12)

    p = cmd("verify", help="run oracle cross-check suites")
    p.add_argument("--suite", default="all",
                   help=f"one of {', '.join(verify.SUITES)} or 'all'")
    p.add_argument("--max-n", type=int, default=8, dest="max_n")

    return parser


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CliError(message)


def _run(args, out) -> int:
    fmt = getattr(args, "format", "json")

    if args.command == "stats":
        sigma = Permutation(_parse_int_list(args.perm))
        payload = {
            "n": sigma.n,
            "perm": list(sigma.values),
            "cp": list(circular_peak_set(sigma)),
            "cdes": list(circular_descent_set(sigma)),
        }
        _emit_json(payload, out)

    elif args.command == "enum-cp":
        _require(args.n >= 1, "--n must be >= 1")
        s = _parse_int_list(args.set)
        perms = enumerate_cp_class(args.n, s)
        if fmt == "csv":
            _emit_csv([[",".join(map(str, p.values))] for p in perms],
                      ["permutation"], out)
        else:
            _emit_json({"n": args.n, "set": sorted(set(s)),
                        "count": len(perms),
                        "perms": [list(p.values) for p in perms]}, out)

    elif args.command == "witness":
        _require(args.n >= 3, "--n must be >= 3")
        s = PeakSet(args.n, _parse_int_list(args.set))
        w = peak_sets.witness(args.n, s)
        _emit_json({"n": args.n, "set": list(s.elements),
                    "witness": list(w.values)}, out)

    elif args.command == "dyck":
        _require(args.n >= 3, "--n must be >= 3")
        s = PeakSet(args.n, _parse_int_list(args.set))
        word = peak_sets.to_dyck(s)
        back = peak_sets.from_dyck(args.n, word)
        _emit_json({"n": args.n, "set": list(s.elements),
                    "word": word.letters,
                    "round_trip": list(back.elements)}, out)

    elif args.command == "faces":
        _require(args.n >= 3, "--n must be >= 3")
        if args.dim is not None:
            fs = complex_poset.faces(args.n, args.dim)
            _emit_json({"n": args.n, "dim": args.dim,
                        "faces": [list(f.elements) for f in fs]}, out)
        else:
            by_dim = {
                str(d): [list(f.elements) for f in complex_poset.faces(args.n, d)]
                for d in range(-1, peak_sets.max_peak_count(args.n))
            }
            _emit_json({"n": args.n, "faces_by_dim": by_dim}, out)

    elif args.command == "fvector":
        _require(args.n >= 3, "--n must be >= 3")
        table = complex_poset.face_table(args.n)
        if fmt == "csv":
            _emit_csv(table.csv_rows(), ["n", "dim", "count"], out)
        else:
            payload = table.to_json_dict()
            payload["f_polynomial"] = _poly_coeffs(complex_poset.f_polynomial(args.n))
            _emit_json(payload, out)

    elif args.command == "hvector":
        _require(args.n >= 3, "--n must be >= 3")
        table = hvector.h_table(args.n)
        if fmt == "csv":
            _emit_csv(table.csv_rows(), ["n", "i", "h"], out)
        else:
            payload = table.to_json_dict()
            payload["h_polynomial"] = _poly_coeffs(hvector.h_polynomial(args.n))
            _emit_json(payload, out)

    elif args.command == "zeta":
        _require(args.n >= 3, "--n must be >= 3")
        _require(args.i >= 2, "--i must be >= 2 (zeta counts i-1 element multichains)")
        value = chains_zeta.zeta(args.n, args.i)
        oracle = None
        if args.n <= complex_poset.POSET_CAP:
            oracle = chains_zeta.multichain_oracle(args.n, args.i - 1)
        if fmt == "csv":
            _emit_csv([[args.n, args.i, value,
                        "" if oracle is None else oracle,
                        "" if oracle is None else (value == oracle)]],
                      ["n", "i", "value", "oracle_value", "match"], out)
        else:
            _emit_json({"n": args.n, "i": args.i, "zeta": value,
                        "oracle": oracle,
                        "match": None if oracle is None else value == oracle}, out)

    elif args.command == "chains":
        _require(args.n >= 3, "--n must be >= 3")
        _require(args.i >= 1, "--i must be >= 1")
        value = chains_zeta.chain_count_formula(args.n, args.i)
        oracle = None
        if args.n <= complex_poset.POSET_CAP:
            oracle = chains_zeta.chain_oracle(args.n, args.i)
        if fmt == "csv":
            _emit_csv([[args.n, args.i, _rat(value),
                        "" if oracle is None else oracle,
                        "" if oracle is None else (value == oracle)]],
                      ["n", "i", "value", "oracle_value", "match"], out)
        else:
            _emit_json({"n": args.n, "i": args.i, "count": _rat(value),
                        "oracle": oracle,
                        "match": None if oracle is None else value == oracle}, out)

    elif args.command == "moebius":
        _require(args.n >= 3, "--n must be >= 3")
        _require(len(args.set) == 2,
                 "give --set twice: lower face then upper face")
        s = PeakSet(args.n, _parse_int_list(args.set[0]))
        t = PeakSet(args.n, _parse_int_list(args.set[1]))
        value = complex_poset.moebius(args.n, s, t)
        _emit_json({"n": args.n, "s": list(s.elements), "t": list(t.elements),
                    "moebius": value}, out)

    elif args.command == "euler":
        _require(args.n >= 3, "--n must be >= 3")
        _emit_json({"n": args.n,
                    "euler": _rat(complex_poset.euler_characteristic(args.n))}, out)

    elif args.command == "hilbert":
        _require(args.n >= 3, "--n must be >= 3")
        _require(args.order >= 0, "--order must be >= 0")
        dims = hilbert_algebras.graded_dimensions(args.n, args.algebra, args.order)
        if fmt == "csv":
            _emit_csv(dims.csv_rows(), ["n", "algebra", "degree", "dim"], out)
        else:
            payload = {"n": args.n, "algebra": args.algebra,
                       "dims": list(dims.dims)}
            if args.algebra == "A":
                form = hilbert_algebras.numerator_a(args.n)
                payload["numerator"] = _poly_coeffs(form.numerator)
                payload["denominator_exponent"] = form.denominator_exponent
                payload["hilbert_polynomial"] = _poly_coeffs(
                    hilbert_algebras.hilbert_polynomial_a(args.n))
            else:
                payload["series_polynomial"] = _poly_coeffs(
                    hilbert_algebras.hilbert_series_b(args.n))
            _emit_json(payload, out)

    elif args.command == "series":
        _require(args.order >= 3, "--order must be >= 3")
        if args.which == "P":
            series = complex_poset.f_generating_series(args.order)
            report = complex_poset.printed_f_series_discrepancy(min(args.order, 12))
        else:
            series = hvector.h_generating_series(args.order)
            report = hvector.printed_h_series_discrepancy(min(args.order, 12))
        payload = {
            "which": args.which,
            "order": args.order,
            "coefficients": [
                {"n": n, "poly": _poly_coeffs(series.y_coefficient(n))}
                for n in range(3, args.order + 1)
            ],
            "printed_form_discrepancy": report,
        }
        _emit_json(payload, out)

    elif args.command == "verify":
        results = verify.run_suite(args.suite, args.max_n)
        failed = 0
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            out.write(f"{status}  {r.suite}/{r.name}: {r.detail}\n")
            failed += not r.ok
        out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
        return 2 if failed else 0

    else:
        raise CliError("missing subcommand (try --help)")

    return 0


def run(argv, out=None) -> int:
    """Parse and execute; returns the process exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidPeakSetError, DyckFormatError, ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
