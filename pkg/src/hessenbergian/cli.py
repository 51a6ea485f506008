"""Command-line front end.

Subcommands: ``det`` (determinant of a matrix file), ``expand``
(symbolic term list), ``sep`` (bit-codec inspection), ``solve``
(equation-spec solutions), ``gen`` (coefficient generators) and
``bench`` (CSV timing harness).  Values are printed as JSON carrying a
backend tag; benchmarks are CSV.  Every error path prints a single
``error: ...`` line to stderr and exits 2 (parse or validation
problems) or 3 (a size cap was exceeded; the message names the cap).
Identical inputs and seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Optional, Sequence

from .closed_form import (DEFAULT_CLOSED_FORM_CAP, det_closed_form,
                          expand_symbolic)
from .determinants import DEFAULT_ORACLE_CAP, det_leibniz, det_recurrence
from .errors import (FormatError, HessenbergianError, InvalidParams,
                     OrderTooLargeForClosedForm, OrderTooLargeForExpansion,
                     OrderTooLargeForOracle)
from .formats import (convert_matrix, convert_spec, dump_text,
                      matrix_from_json, parse_text, scalar_to_json,
                      spec_from_json, spec_to_json)
from .ldevc import GENERAL_METHODS, LdevcSpec, general_solution, solve_forward
from .matrix import HessenbergMatrix, row_length
from .scalars import EXACT, FLOAT, ComplexRational
from .sep_codec import decode_columns, tau

BENCH_METHODS = ("recurrence", "closed")


@dataclass(frozen=True)
class RunConfig:
    """Per-invocation knobs shared by all subcommands."""

    backend: Optional[str] = None  # None keeps the input file's realization
    closed_form_cap: int = DEFAULT_CLOSED_FORM_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    seed: int = 0
    out: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    # one-line machine-parsable messages instead of argparse's usage dump
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _order_list(text: str) -> list:
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order list {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"orders must be positive, got {text!r}")
    return values


def _method_list(text: str) -> list:
    values = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not values or any(v not in BENCH_METHODS for v in values):
        raise argparse.ArgumentTypeError(
            f"methods must be a comma list drawn from {BENCH_METHODS}, got {text!r}")
    return values


# scalar literals -----------------------------------------------------------

def _split_complex(s: str):
    if not s.endswith("i"):
        return s, ""
    body = s[:-1]
    # split before the imaginary part's sign; a sign directly after '/',
    # 'e' or 'E' (or at position 0) belongs to a number, not the split
    for p in range(len(body) - 1, 0, -1):
        if body[p] in "+-" and body[p - 1] not in "/eE":
            re_text, im_text = body[:p], body[p:]
            break
    else:
        re_text, im_text = "", body
    if im_text in ("", "+"):
        im_text = "1"
    elif im_text == "-":
        im_text = "-1"
    return re_text, im_text


def parse_scalar_token(token: str, backend: str):
    """Parse literals like ``3/2``, ``-2``, ``1+i``, ``2i``, ``3/2-1/3i``
    or ``1.5e-2`` into the requested realization."""
    s = token.strip()
    if not s:
        raise FormatError("empty scalar literal")
    re_text, im_text = _split_complex(s)
    try:
        if backend == FLOAT:
            return complex(float(re_text) if re_text else 0.0,
                           float(im_text) if im_text else 0.0)
        return ComplexRational(Fraction(re_text) if re_text else 0,
                               Fraction(im_text) if im_text else 0)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"invalid scalar literal {token!r}") from None


def parse_init(text: Optional[str], backend: str) -> tuple:
    if text is None or not text.strip():
        return ()
    return tuple(parse_scalar_token(tok, backend) for tok in text.split(","))


# generators ----------------------------------------------------------------

def _random_fraction(rng: Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_scalar(rng: Random) -> ComplexRational:
    return ComplexRational(_random_fraction(rng), _random_fraction(rng))


def _random_nonzero(rng: Random) -> ComplexRational:
    # real-part numerator drawn from 1..9 with a random sign, so the
    # value (used as a leading coefficient) can never vanish
    re = Fraction(rng.choice((1, -1)) * rng.randint(1, 9), rng.randint(1, 9))
    return ComplexRational(re, _random_fraction(rng))


def generate_spec(family: str, params: str, index_N: int, horizon: int,
                  seed: int) -> LdevcSpec:
    """Deterministic spec families.

    constant: monic banded rows a_{n,N+n} = 1, a_{n,N+n-j} = -alpha_j
    with params "alpha_1,...,alpha_N" and zero forcing, i.e. the
    constant-coefficient equation y_n = sum_j alpha_j y_{n-j}.
    periodic: banded rows a_{n,n+k} = c[n mod p][k] with params the
    period "p"; coefficients and forcing repeat with period p.
    random: every stored coefficient random; takes no params.  All
    leading coefficients are forced nonzero.
    """
    if family == "constant":
        alphas = [parse_scalar_token(tok, EXACT) for tok in params.split(",")
                  if tok.strip()] if params.strip() else []
        if len(alphas) != index_N:
            raise InvalidParams(
                f"constant family needs {index_N} params, got {len(alphas)}")
        coeffs = []
        for n in range(horizon + 1):
            row = [0] * (index_N + n + 1)
            row[index_N + n] = 1
            for j, alpha in enumerate(alphas, start=1):
                row[index_N + n - j] = -alpha
            coeffs.append(row)
        return LdevcSpec(index_N, horizon, coeffs, [0] * (horizon + 1))
    rng = Random(seed)
    if family == "periodic":
        try:
            period = int(params)
        except ValueError:
            raise InvalidParams(
                f"periodic family needs an integer period, got {params!r}") from None
        if period < 1:
            raise InvalidParams(f"period must be positive, got {period}")
        band = [[_random_scalar(rng) for _ in range(index_N)] + [_random_nonzero(rng)]
                for _ in range(period)]
        pattern = [_random_scalar(rng) for _ in range(period)]
        coeffs = [[0] * n + band[n % period] for n in range(horizon + 1)]
        forcing = [pattern[n % period] for n in range(horizon + 1)]
        return LdevcSpec(index_N, horizon, coeffs, forcing)
    if family == "random":
        if params.strip():
            raise InvalidParams("random family takes no params")
        coeffs = [[_random_scalar(rng) for _ in range(index_N + n)]
                  + [_random_nonzero(rng)] for n in range(horizon + 1)]
        forcing = [_random_scalar(rng) for _ in range(horizon + 1)]
        return LdevcSpec(index_N, horizon, coeffs, forcing)
    raise InvalidParams(f"unknown family {family!r}")


def random_float_matrix(order: int, rng: Random) -> HessenbergMatrix:
    """Entries drawn uniformly from the complex unit square."""
    return HessenbergMatrix(
        order,
        [[complex(rng.random(), rng.random())
          for _ in range(row_length(order, i))] for i in range(1, order + 1)])


# subcommands ---------------------------------------------------------------

def _config(args) -> RunConfig:
    return RunConfig(backend=args.backend, closed_form_cap=args.closed_form_cap,
                     oracle_cap=args.oracle_cap, seed=args.seed, out=args.out)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: Optional[str]):
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_det(args) -> int:
    config = _config(args)
    matrix, backend = matrix_from_json(parse_text(_read(args.matrix)))
    if config.backend and config.backend != backend:
        matrix = convert_matrix(matrix, config.backend)
        backend = config.backend
    if args.method == "recurrence":
        value = det_recurrence(matrix)
    elif args.method == "closed":
        value = det_closed_form(matrix, closed_form_cap=config.closed_form_cap)
    else:
        value = det_leibniz(matrix, oracle_cap=config.oracle_cap)
    _emit(dump_text({"backend": backend, "value": scalar_to_json(value)}),
          config.out)
    return 0


def cmd_expand(args) -> int:
    config = _config(args)
    terms = expand_symbolic(args.order)
    if args.limit is not None:
        terms = terms[:args.limit]
    _emit("\n".join(term.render() for term in terms), config.out)
    return 0


def cmd_sep(args) -> int:
    config = _config(args)
    bits = tau(args.order, args.index)
    factors = decode_columns(bits)
    _emit(dump_text({"bits": list(bits.bits),
                     "columns": list(factors.columns),
                     "sign": factors.sign}), config.out)
    return 0


def cmd_solve(args) -> int:
    config = _config(args)
    spec, backend = spec_from_json(parse_text(_read(args.spec)))
    if config.backend and config.backend != backend:
        spec = convert_spec(spec, config.backend)
        backend = config.backend
    init = parse_init(args.init, backend)
    if args.method == "forward":
        values = solve_forward(spec, init)
    else:
        values = [general_solution(spec, n, init, args.method,
                                   closed_form_cap=config.closed_form_cap)
                  for n in range(spec.horizon + 1)]
    _emit(dump_text({"backend": backend,
                     "values": [scalar_to_json(v) for v in values]}),
          config.out)
    return 0


def cmd_gen(args) -> int:
    config = _config(args)
    spec = generate_spec(args.family, args.params, args.N, args.horizon,
                         config.seed)
    _emit(dump_text(spec_to_json(spec)), config.out)
    return 0


def _timed_ns(matrix: HessenbergMatrix, method: str, config: RunConfig) -> int:
    start = time.perf_counter_ns()
    if method == "recurrence":
        det_recurrence(matrix)
    else:
        det_closed_form(matrix, closed_form_cap=config.closed_form_cap)
    return time.perf_counter_ns() - start


def cmd_bench(args) -> int:
    config = _config(args)
    rng = Random(config.seed)
    lines = ["order,method,median_ns"]
    for order in args.orders:
        matrix = random_float_matrix(order, rng)
        for method in args.methods:
            samples = [_timed_ns(matrix, method, config)
                       for _ in range(args.reps)]
            lines.append(f"{order},{method},{int(statistics.median(samples))}")
    _emit("\n".join(lines), config.out)
    return 0


# wiring --------------------------------------------------------------------

def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--backend", choices=(EXACT, FLOAT), default=None,
                        help="force a scalar realization (default: keep the file's)")
    common.add_argument("--seed", type=int, default=0,
                        help="generator seed (default 0)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output to PATH instead of stdout")
    common.add_argument("--closed-form-cap", dest="closed_form_cap",
                        type=_positive_int, default=DEFAULT_CLOSED_FORM_CAP,
                        help=f"order cap for the closed form (default {DEFAULT_CLOSED_FORM_CAP})")
    common.add_argument("--oracle-cap", dest="oracle_cap",
                        type=_positive_int, default=DEFAULT_ORACLE_CAP,
                        help=f"order cap for the Leibniz oracle (default {DEFAULT_ORACLE_CAP})")

    parser = _Parser(prog="hessenbergian",
                     description="Hessenberg determinants and linear "
                                 "difference equation solutions")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("det", parents=[common],
                       help="determinant of a matrix JSON file")
    p.add_argument("matrix", help="path to a matrix JSON document")
    p.add_argument("--method", choices=("recurrence", "closed", "leibniz"),
                   default="recurrence")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("expand", parents=[common],
                       help="print the symbolic determinant expansion")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--limit", type=_positive_int, default=None,
                   help="print only the first K terms")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("sep", parents=[common],
                       help="decode one term index into bits, columns and sign")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_sep)

    p = sub.add_parser("solve", parents=[common],
                       help="solve an equation-spec JSON file")
    p.add_argument("spec", help="path to a spec JSON document")
    p.add_argument("--init", default="",
                   help="comma list of N initial values y_-N..y_-1")
    p.add_argument("--method", choices=GENERAL_METHODS + ("forward",),
                   default="ratio-recurrence")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", parents=[common],
                       help="generate an equation-spec JSON file")
    p.add_argument("--family", choices=("constant", "periodic", "random"),
                   required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--params", default="",
                   help="family parameters (see generate_spec)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common],
                       help="time determinant methods; prints CSV")
    p.add_argument("--orders", type=_order_list, required=True,
                   help="comma list of matrix orders")
    p.add_argument("--reps", type=_positive_int, default=5)
    p.add_argument("--methods", type=_method_list, default=list(BENCH_METHODS),
                   help="comma list drawn from recurrence,closed")
    p.set_defaults(func=cmd_bench)

    return parser


_CAP_ERRORS = (OrderTooLargeForOracle, OrderTooLargeForClosedForm,
               OrderTooLargeForExpansion)


def _fail(message) -> None:
    line = " ".join(str(message).split()) or "unknown error"
    print(f"error: {line}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # raised by --help (0) and _Parser.error (2)
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except _CAP_ERRORS as exc:
        _fail(exc)
        return 3
    except (HessenbergianError, OSError) as exc:
        _fail(exc)
        return 2
    except Exception as exc:  # pragma: no cover - single-line contract
        _fail(f"internal: {exc!r}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
