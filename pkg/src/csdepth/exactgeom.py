"""Exact rational linear algebra and strict linear feasibility.

Every geometric predicate in this package reduces to the operations here:
determinant signs, small dense solves, and exact feasibility of homogeneous
sign systems.  All arithmetic is over arbitrary-precision rationals
(``fractions.Fraction``) or plain Python integers; no floating point is used
anywhere.

Scalars serialize as base-10 strings ``"p/q"`` (or ``"p"`` when q = 1) in
canonical form: gcd(|p|, q) = 1 with q > 0.  ``Fraction`` maintains exactly
this canonical form, so parsing and formatting are thin wrappers with strict
input validation.

The feasibility solver decides systems of homogeneous rows ``a . x REL 0``
with REL one of >=, >, =.  Strict rows are handled by maximizing a single
bounded slack with an exact simplex method (integer pivoting, Bland's rule):
the system is strictly feasible iff the optimal slack is positive, and any
returned point satisfies strict rows strictly under re-evaluation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import InputError, ParseError

Point = tuple[Fraction, ...]
IntVec = tuple[int, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a base-10 rational string "p" or "p/q"."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"{text!r} is not a valid rational (expected 'p' or 'p/q')")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError(f"{text!r} has a zero denominator")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p/q", or "p" when the denominator is 1."""
    return str(value)


def point_from_strings(items: Sequence[str]) -> Point:
    return tuple(parse_rational(s) for s in items)


def point_to_strings(point: Point) -> list[str]:
    return [format_rational(c) for c in point]


def vec_dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vec_neg(a: Point) -> Point:
    return tuple(-x for x in a)


def vec_add(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(a: Point, s: Fraction) -> Point:
    return tuple(s * x for x in a)


def is_zero_vec(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def scale_to_integers(point: Sequence[Fraction]) -> tuple[IntVec, int]:
    """Return (m*point as integers, m) for the smallest positive integer m."""
    m = 1
    for c in point:
        m = _lcm(m, Fraction(c).denominator)
    return tuple(int(c * m) for c in point), m


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for l in range(k + 1, n):
                if m[l][k] != 0:
                    m[k], m[l] = m[l], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _columns_to_rows(columns: Sequence[Sequence[int]]) -> list[list[int]]:
    d = len(columns)
    return [[columns[i][k] for i in range(d)] for k in range(len(columns[0]))]


def _check_square(columns: Sequence[Point]) -> int:
    d = len(columns)
    if d == 0:
        raise InputError("need at least one column")
    for c in columns:
        if len(c) != d:
            raise InputError(f"expected {d} coordinates per column, got {len(c)}")
    return d


def det_sign(columns: Sequence[Point]) -> int:
    """Sign of det[columns], computed exactly.

    Each column may be scaled to integers independently: positive scaling
    never changes the sign.
    """
    _check_square(columns)
    int_cols = [scale_to_integers(c)[0] for c in columns]
    value = int_det(_columns_to_rows(int_cols))
    return (value > 0) - (value < 0)


def solve_square(columns: Sequence[Point], rhs: Point) -> Optional[tuple[Fraction, ...]]:
    """Exact coefficients c with sum(c_i * column_i) = rhs, or None if singular.

    Cramer's rule over fraction-free integer determinants: columns and rhs
    are cleared to integers, solved, then unscaled.
    """
    d = _check_square(columns)
    if len(rhs) != d:
        raise InputError(f"rhs has {len(rhs)} coordinates, expected {d}")
    scaled = [scale_to_integers(c) for c in columns]
    int_cols = [s[0] for s in scaled]
    rhs_int, rhs_mul = scale_to_integers(rhs)
    base = int_det(_columns_to_rows(int_cols))
    if base == 0:
        return None
    coeffs = []
    for i in range(d):
        replaced = int_cols[:i] + [rhs_int] + int_cols[i + 1:]
        det_i = int_det(_columns_to_rows(replaced))
        coeffs.append(Fraction(det_i * scaled[i][1], base * rhs_mul))
    return tuple(coeffs)


def normal_to_span(vectors: Sequence[IntVec], dimension: int) -> Optional[IntVec]:
    """Integer vector orthogonal to d-1 given vectors (generalized cross product).

    Returns None when the vectors do not span a (d-1)-dimensional space.
    With zero input vectors in dimension 1 the span is the origin and the
    normal is (1,).
    """
    if len(vectors) != dimension - 1:
        raise InputError(f"need {dimension - 1} vectors in dimension {dimension}")
    out = []
    for j in range(dimension):
        minor = [[v[k] for k in range(dimension) if k != j] for v in vectors]
        entry = int_det(minor)
        out.append(-entry if j % 2 else entry)
    if all(e == 0 for e in out):
        return None
    return tuple(out)


def primitive_normal(vec: IntVec) -> IntVec:
    """Divide out the content and make the first nonzero entry positive."""
    g = 0
    for e in vec:
        g = gcd(g, abs(e))
    if g == 0:
        raise InputError("zero vector has no primitive form")
    scaled = [e // g for e in vec]
    for e in scaled:
        if e != 0:
            if e < 0:
                scaled = [-x for x in scaled]
            break
    return tuple(scaled)


def kernel_vector(vectors: Sequence[IntVec], dimension: int) -> Optional[IntVec]:
    """Some nonzero integer vector orthogonal to all given vectors, or None.

    Returns None exactly when the vectors span the whole space.
    """
    rows = [list(v) for v in vectors if any(v)]
    pivots: list[int] = []
    reduced: list[list[Fraction]] = []
    for row in rows:
        work = [Fraction(x) for x in row]
        for col, red in zip(pivots, reduced):
            if work[col] != 0:
                f = work[col] / red[col]
                work = [a - f * b for a, b in zip(work, red)]
        pivot_col = next((j for j in range(dimension) if work[j] != 0), None)
        if pivot_col is not None:
            pivots.append(pivot_col)
            reduced.append(work)
    if len(pivots) == dimension:
        return None
    free = next(j for j in range(dimension) if j not in pivots)
    sol = [Fraction(0)] * dimension
    sol[free] = Fraction(1)
    # back-substitute pivot coordinates against the free one
    for col, red in reversed(list(zip(pivots, reduced))):
        sol[col] = -sum(red[j] * sol[j] for j in range(dimension) if j != col) / red[col]
    return scale_to_integers(sol)[0]


def cone_facet_rows(int_columns: Sequence[IntVec]) -> Optional[tuple[IntVec, ...]]:
    """Facet-normal rows of a simplicial cone with the given integer generators.

    A point x lies in the cone iff row . x >= 0 for every returned row.
    Returns None when the generators are linearly dependent.
    """
    d = len(int_columns)
    rows_m = _columns_to_rows(int_columns)
    det = int_det(rows_m)
    if det == 0:
        return None
    sign = 1 if det > 0 else -1
    out = []
    for i in range(d):
        row = []
        for k in range(d):
            minor = [[rows_m[r][c] for c in range(d) if c != i]
                     for r in range(d) if r != k]
            entry = int_det(minor)
            if (i + k) % 2:
                entry = -entry
            row.append(sign * entry)
        out.append(tuple(row))
    return tuple(out)


class Relation(Enum):
    GE = ">=0"
    GT = ">0"
    EQ = "=0"


@dataclass(frozen=True)
class LinearSystem:
    """Homogeneous sign constraints: for each row (a, rel), a . x REL 0."""

    rows: tuple[tuple[Point, Relation], ...]

    def __post_init__(self):
        if not self.rows:
            raise InputError("a linear system needs at least one row")
        dim = len(self.rows[0][0])
        for normal, rel in self.rows:
            if len(normal) != dim:
                raise InputError("all normals must share one dimension")
            if not isinstance(rel, Relation):
                raise InputError(f"bad relation {rel!r}")

    @property
    def dimension(self) -> int:
        return len(self.rows[0][0])


def feasible_point(system: LinearSystem) -> Optional[Point]:
    """An exact point satisfying every row (strict rows strictly), or None.

    Homogeneous systems without strict rows always admit the origin.  With
    strict rows, a single slack variable bounded by 1 is maximized by exact
    simplex pivoting; the optimum is positive iff the system is strictly
    feasible, and the witness is re-verified before being returned.
    """
    d = system.dimension
    int_rows = [(scale_to_integers(normal)[0], rel) for normal, rel in system.rows]
    if not any(rel is Relation.GT for _, rel in int_rows):
        return tuple(Fraction(0) for _ in range(d))
    sol = max_slack_point(int_rows, d)
    if sol is None:
        return None
    for normal, rel in int_rows:
        value = vec_dot(normal, sol)
        if rel is Relation.GT and not value > 0:
            raise AssertionError("simplex witness violates a strict row")
        if rel is Relation.GE and not value >= 0:
            raise AssertionError("simplex witness violates a weak row")
        if rel is Relation.EQ and value != 0:
            raise AssertionError("simplex witness violates an equality row")
    return sol


def max_slack_point(int_rows: Sequence[tuple[IntVec, Relation]],
                    dimension: int) -> Optional[Point]:
    """Exact slack-maximization core of `feasible_point` over integer rows.

    Variables are x = u - v with u, v >= 0 plus the slack t in [0, 1];
    maximize t subject to a.x >= 0 (weak), a.x >= t (strict), a.x = 0.
    Returns x when the optimum t is positive, else None.
    """
    d = dimension
    nstruct = 2 * d + 1
    tcol = 2 * d
    cons: list[tuple[list[int], int]] = []
    for normal, rel in int_rows:
        pos = list(normal)
        neg = [-a for a in normal]
        if rel is Relation.GE:
            cons.append((neg + pos + [0], 0))
        elif rel is Relation.GT:
            cons.append((neg + pos + [1], 0))
        else:
            cons.append((pos + neg + [0], 0))
            cons.append((neg + pos + [0], 0))
    cons.append(([0] * (2 * d) + [1], 1))  # t <= 1
    m = len(cons)
    ncols = nstruct + m + 1
    rhs_col = ncols - 1

    tableau: list[list[int]] = []
    for i, (coeffs, rhs) in enumerate(cons):
        row = coeffs + [0] * m + [rhs]
        row[nstruct + i] = 1
        tableau.append(row)
    obj = [0] * ncols
    obj[tcol] = -1
    basis = list(range(nstruct, nstruct + m))
    det = 1

    while True:
        enter = -1
        for j in range(nstruct + m):
            if obj[j] < 0:  # Bland: smallest improving index
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        num = den = 0
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                b = tableau[i][rhs_col]
                if leave < 0 or b * den < num * a or \
                        (b * den == num * a and basis[i] < basis[leave]):
                    leave, num, den = i, b, a
        if leave < 0:
            raise AssertionError("slack LP cannot be unbounded")
        pivot = tableau[leave][enter]
        pivot_row = tableau[leave]
        for row in tableau:
            if row is pivot_row:
                continue
            f = row[enter]
            for j in range(ncols):
                row[j] = (row[j] * pivot - f * pivot_row[j]) // det
        f = obj[enter]
        for j in range(ncols):
            obj[j] = (obj[j] * pivot - f * pivot_row[j]) // det
        det = pivot
        basis[leave] = enter

    values = {}
    for i in range(m):
        values[basis[i]] = Fraction(tableau[i][rhs_col], det)
    if values.get(tcol, Fraction(0)) == 0:
        return None
    return tuple(values.get(k, Fraction(0)) - values.get(d + k, Fraction(0))
                 for k in range(d))
