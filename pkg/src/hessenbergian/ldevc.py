"""Linear difference equations with variable coefficients, regular order.

Equation row n (0 <= n <= horizon) relates the unknowns y_{-N}..y_n:

    a_{n,0} y_{-N} + a_{n,1} y_{1-N} + ... + a_{n,N+n} y_n = g_n,

with fixed index N >= 0 and arbitrary scalar coefficients; the N values
y_{-N}..y_{-1} are the initial conditions.  Regularity means every
leading coefficient a_{n,N+n} is nonzero; that is validated when a spec
is constructed, and specs violating it are rejected outright
(IrregularOrder).

Solutions come from two independent routes.  :func:`solve_forward`
substitutes row by row, solving each equation for its leading unknown;
it is the plain reference.  The Hessenbergian route builds
(n+1) x (n+1) lower Hessenberg solution matrices from the coefficient
table.  Matrix row i (1-based) corresponds to equation row r = i-1:

* column 1 carries a_{r,iota} (fundamental matrix for basis index
  iota), g_r (particular matrix), or g_r - sum_{k<N} a_{r,k} y_{k-N}
  (general matrix);
* column j >= 2 carries a_{r,N+j-2}, stored for j <= min(i+1, n+1).

The leading coefficient of the last row never enters the matrix; it
appears only in the denominator product.  With
D = a_{0,N} a_{1,N+1} ... a_{n,N+n}:

    xi_{n,iota} = (-1)^(n+1) det(Xi) / D        (fundamental solution)
    p_n         = (-1)^n     det(P)  / D        (particular solution)
    y_n         = (-1)^n     det(G)  / D        (general solution)

and y_n = p_n + sum_k xi_{n,k} y_{k-N}.  The reduced forms rescale the
first column by (-1)^n / D, after which y_n is the bare determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Tuple

from .closed_form import DEFAULT_CLOSED_FORM_CAP, det_closed_form
from .determinants import det_recurrence
from .errors import (IndexOutOfRange, InvalidOrder, IrregularOrder,
                     WrongEntryCount, WrongInitLength)
from .matrix import HessenbergMatrix
from .scalars import ComplexRational, is_exact

# Initial conditions are a plain tuple (y_{-N}, ..., y_{-1}); empty when N=0.
InitialConditions = tuple

GENERAL_METHODS = ("ratio-recurrence", "ratio-closed",
                   "reduced-recurrence", "reduced-closed")


class LdevcSpec:
    """Validated, immutable equation system up to a finite horizon.

    coeffs[n] stores exactly N+n+1 scalars a_{n,0..N+n}; forcing holds
    g_0..g_horizon.  Construction rejects wrong row lengths
    (WrongEntryCount) and zero leading coefficients (IrregularOrder).
    """

    __slots__ = ("index_N", "horizon", "coeffs", "forcing")

    def __init__(self, index_N: int, horizon: int,
                 coeffs: Sequence[Sequence], forcing: Sequence):
        if not isinstance(index_N, int) or isinstance(index_N, bool) or index_N < 0:
            raise InvalidOrder(f"index N must be a non-negative integer, got {index_N!r}")
        if not isinstance(horizon, int) or isinstance(horizon, bool) or horizon < 0:
            raise InvalidOrder(f"horizon must be a non-negative integer, got {horizon!r}")
        if len(coeffs) != horizon + 1:
            raise WrongEntryCount(
                f"expected {horizon + 1} coefficient rows, got {len(coeffs)}")
        if len(forcing) != horizon + 1:
            raise WrongEntryCount(
                f"expected {horizon + 1} forcing values, got {len(forcing)}")
        frozen = []
        for n, row in enumerate(coeffs):
            want = index_N + n + 1
            if len(row) != want:
                raise WrongEntryCount(
                    f"coefficient row {n} must hold {want} values, got {len(row)}")
            if not row[index_N + n]:
                raise IrregularOrder(
                    f"leading coefficient a[{n},{index_N + n}] is zero")
            frozen.append(tuple(row))
        object.__setattr__(self, "index_N", index_N)
        object.__setattr__(self, "horizon", horizon)
        object.__setattr__(self, "coeffs", tuple(frozen))
        object.__setattr__(self, "forcing", tuple(forcing))

    def __setattr__(self, name, value):
        raise AttributeError("LdevcSpec is immutable")

    def leading(self, n: int):
        """a_{n,N+n}, the coefficient of y_n in row n."""
        return self.coeffs[n][self.index_N + n]

    def __eq__(self, other):
        if not isinstance(other, LdevcSpec):
            return NotImplemented
        return (self.index_N == other.index_N and self.horizon == other.horizon
                and self.coeffs == other.coeffs and self.forcing == other.forcing)

    def __repr__(self):
        return f"LdevcSpec(N={self.index_N}, horizon={self.horizon})"


class EquationClass:
    """Base of the classification results."""
    __slots__ = ()


@dataclass(frozen=True)
class AscendingOrder(EquationClass):
    index: int


@dataclass(frozen=True)
class NOrder(EquationClass):
    index: int


@dataclass(frozen=True)
class UnboundedOrder(EquationClass):
    pass


def classify(spec: LdevcSpec) -> EquationClass:
    """Unbounded order iff N=0; N-order iff every a_{n,i} with i < n
    vanishes and some diagonal a_{m,m} does not; ascending otherwise.
    The check is necessarily horizon-local."""
    N = spec.index_N
    if N == 0:
        return UnboundedOrder()
    banded = all(not spec.coeffs[n][i]
                 for n in range(1, spec.horizon + 1) for i in range(n))
    has_diagonal = any(spec.coeffs[n][n] for n in range(spec.horizon + 1))
    if banded and has_diagonal:
        return NOrder(N)
    return AscendingOrder(N)


def _divide(num, den):
    # int/int must not fall through to float division on the exact path
    if is_exact(num) and is_exact(den):
        if isinstance(num, ComplexRational) or isinstance(den, ComplexRational):
            num = num if isinstance(num, ComplexRational) else ComplexRational(Fraction(num))
            den = den if isinstance(den, ComplexRational) else ComplexRational(Fraction(den))
            return num / den
        return Fraction(num) / Fraction(den)
    return num / den


def _check_row_index(spec: LdevcSpec, n: int):
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= spec.horizon:
        raise IndexOutOfRange(
            f"row {n!r} outside [0, {spec.horizon}]")


def _solution_matrix(spec: LdevcSpec, n: int, first_column) -> HessenbergMatrix:
    N = spec.index_N
    rows = []
    for i in range(1, n + 2):  # matrix row i holds equation row r = i-1
        r = i - 1
        row = [first_column[r]]
        row.extend(spec.coeffs[r][N + j - 2]
                   for j in range(2, min(i + 1, n + 1) + 1))
        rows.append(row)
    return HessenbergMatrix(n + 1, rows)


def _denominator(spec: LdevcSpec, n: int):
    denom = spec.leading(0)
    for r in range(1, n + 1):
        denom = denom * spec.leading(r)
    return denom


def fundamental_matrix(spec: LdevcSpec, n: int, i: int) -> HessenbergMatrix:
    """Solution matrix whose first column is coefficient column i."""
    _check_row_index(spec, n)
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i <= spec.index_N - 1:
        raise IndexOutOfRange(
            f"basis index {i!r} outside [0, {spec.index_N - 1}]")
    return _solution_matrix(spec, n, [spec.coeffs[r][i] for r in range(n + 1)])


def fundamental_solution(spec: LdevcSpec, n: int, i: int):
    """xi_{n,i}; the basis sequence value at row n for basis index i."""
    matrix = fundamental_matrix(spec, n, i)
    sign = -1 if n % 2 == 0 else 1  # (-1)^(n+1)
    return _divide(sign * det_recurrence(matrix), _denominator(spec, n))


def particular_matrix(spec: LdevcSpec, n: int) -> HessenbergMatrix:
    """Solution matrix whose first column is the forcing sequence."""
    _check_row_index(spec, n)
    return _solution_matrix(spec, n, spec.forcing)


def particular_solution(spec: LdevcSpec, n: int):
    """p_n; the forced response under zero initial conditions."""
    matrix = particular_matrix(spec, n)
    sign = 1 if n % 2 == 0 else -1  # (-1)^n
    return _divide(sign * det_recurrence(matrix), _denominator(spec, n))


def _check_init(spec: LdevcSpec, init) -> tuple:
    init = tuple(init)
    if len(init) != spec.index_N:
        raise WrongInitLength(
            f"expected {spec.index_N} initial values, got {len(init)}")
    return init


def _general_first_column(spec: LdevcSpec, n: int, init: tuple):
    column = []
    for r in range(n + 1):
        value = spec.forcing[r]
        for k, y in enumerate(init):
            value = value - spec.coeffs[r][k] * y
        column.append(value)
    return column


def general_matrix(spec: LdevcSpec, n: int, init) -> HessenbergMatrix:
    """Solution matrix combining forcing and initial conditions; its
    first column is g_r - sum_{k<N} a_{r,k} y_{k-N}."""
    init = _check_init(spec, init)
    _check_row_index(spec, n)
    return _solution_matrix(spec, n, _general_first_column(spec, n, init))


def general_solution(spec: LdevcSpec, n: int, init,
                     method: str = "ratio-recurrence", *,
                     closed_form_cap: int = DEFAULT_CLOSED_FORM_CAP):
    """y_n by one of four equivalent Hessenbergian routes.

    ratio-* evaluates (-1)^n det(G)/D with the determinant by the
    recurrence or the closed form; reduced-* first folds (-1)^n / D
    into the first column and returns the bare determinant.  The two
    closed variants obey the closed-form cap.
    """
    init = _check_init(spec, init)
    _check_row_index(spec, n)
    if method not in GENERAL_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {GENERAL_METHODS}")
    sign = 1 if n % 2 == 0 else -1  # (-1)^n
    first = _general_first_column(spec, n, init)
    if method.startswith("reduced"):
        scale = _divide(sign, _denominator(spec, n))
        first = [value * scale for value in first]
    matrix = _solution_matrix(spec, n, first)
    if method.endswith("closed"):
        det = det_closed_form(matrix, closed_form_cap=closed_form_cap)
    else:
        det = det_recurrence(matrix)
    if method.startswith("reduced"):
        return det
    return _divide(sign * det, _denominator(spec, n))


def solve_forward(spec: LdevcSpec, init) -> list:
    """Row-by-row substitution, solving each row for its leading
    unknown; the independent reference for every other route."""
    init = _check_init(spec, init)
    N = spec.index_N
    values = []
    for n in range(spec.horizon + 1):
        acc = spec.forcing[n]
        row = spec.coeffs[n]
        for idx in range(N + n):
            y = init[idx] if idx < N else values[idx - N]
            acc = acc - row[idx] * y
        values.append(_divide(acc, spec.leading(n)))
    return values


@dataclass(frozen=True)
class SolutionBundle:
    """Fundamental table xi[i][n], particular p[n], and general y[n]
    sequences for one spec and one set of initial conditions."""

    index_N: int
    fundamentals: Tuple[Tuple, ...]
    particulars: Tuple
    generals: Tuple
    init: Tuple


def _values_agree(a, b) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    fa, fb = complex(a), complex(b)
    return abs(fa - fb) <= 1e-9 * (1.0 + abs(fb))


def solve_bundle(spec: LdevcSpec, init) -> SolutionBundle:
    """Assemble all three solution families and verify the linearity
    identity y_n = p_n + sum_k xi_{n,k} y_{k-N} before returning."""
    init = _check_init(spec, init)
    rows = range(spec.horizon + 1)
    fundamentals = tuple(
        tuple(fundamental_solution(spec, n, i) for n in rows)
        for i in range(spec.index_N))
    particulars = tuple(particular_solution(spec, n) for n in rows)
    generals = tuple(general_solution(spec, n, init) for n in rows)
    for n in rows:
        expected = particulars[n]
        for k, y in enumerate(init):
            expected = expected + fundamentals[k][n] * y
        if not _values_agree(generals[n], expected):
            raise AssertionError(
                f"linearity identity violated at row {n}: "
                f"{generals[n]!r} != {expected!r}")
    return SolutionBundle(spec.index_N, fundamentals, particulars,
                          generals, tuple(init))
