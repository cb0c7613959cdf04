"""Simplex containment, cone membership, colourful depth, and subset depth.

Containment is decided with closed semantics throughout: the origin on the
boundary of a simplex or cone counts as contained, and degenerate vertex or
generator tuples are decided on the (lower-dimensional) closed hull by exact
feasibility rather than rejected.  Nondegenerate instances take a fast path
through integer Cramer determinants; both paths are exact.

Points may be scaled to integer vectors freely: multiplying any single
vertex or generator by a positive rational never changes a containment
verdict, only the convex/conic coefficients, which are unscaled afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .configuration import Configuration, Transversal, enumerate_transversals
from .errors import InputError
from .exactgeom import (
    IntVec,
    Point,
    Relation,
    cone_facet_rows,
    int_det,
    is_zero_vec,
    max_slack_point,
    scale_to_integers,
    vec_dot,
    vec_neg,
)


@dataclass(frozen=True)
class ConeSpec:
    """Simplicial cone pointed at the origin: nonnegative span of d generators.

    Colour labels are carried along when the generators come from a
    configuration; they do not affect membership.
    """

    generators: tuple[Point, ...]
    colours: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        d = len(self.generators)
        if d < 1:
            raise InputError("a cone needs at least one generator")
        for g in self.generators:
            if len(g) != d:
                raise InputError(f"expected {d} coordinates per generator, got {len(g)}")
            if is_zero_vec(g):
                raise InputError("cone generators must be nonzero")
        if self.colours is not None and len(self.colours) != d:
            raise InputError("need one colour label per generator")

    @property
    def dimension(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class DepthReport:
    """Exact depth count with one re-verifiable witness per containing simplex."""

    depth: int
    witnesses: tuple[tuple[Transversal, tuple[Fraction, ...]], ...]

    def to_json_dict(self) -> dict:
        return {
            "depth": self.depth,
            "witnesses": [
                {"choice": list(choice), "coeffs": [str(c) for c in coeffs]}
                for choice, coeffs in self.witnesses
            ],
        }


def _contains_origin_scaled(scaled: Sequence[tuple[IntVec, int]],
                            want_coeffs: bool) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    """Closed containment of the origin in the hull of d+1 pre-scaled vertices.

    Cramer path when the vertices are affinely independent, exact
    feasibility otherwise.  Returned coefficients are barycentric for the
    original (unscaled) vertices.
    """
    n = len(scaled)
    d = n - 1
    cs = []
    for i in range(n):
        cols = [scaled[j][0] for j in range(n) if j != i]
        rows = [[cols[a][k] for a in range(d)] for k in range(d)]
        minor = int_det(rows)
        cs.append(minor if (d + 1 + i) % 2 == 0 else -minor)
    total = sum(cs)
    if total != 0:
        contained = all(c >= 0 for c in cs) or all(c <= 0 for c in cs)
        if not contained:
            return False, None
        if not want_coeffs:
            return True, None
        weights = [cs[i] * scaled[i][1] for i in range(n)]
        s = sum(weights)
        return True, tuple(Fraction(w, s) for w in weights)
    # degenerate tuple: decide on the closed lower-dimensional hull
    rows_sys: list[tuple[IntVec, Relation]] = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        rows_sys.append((e, Relation.GE))
    for k in range(d):
        rows_sys.append((tuple(scaled[i][0][k] for i in range(n)), Relation.EQ))
    rows_sys.append((tuple(1 for _ in range(n)), Relation.GT))
    sol = max_slack_point(rows_sys, n)
    if sol is None:
        return False, None
    if not want_coeffs:
        return True, None
    weights = [sol[i] * scaled[i][1] for i in range(n)]
    s = sum(weights)
    return True, tuple(w / s for w in weights)


def simplex_contains_origin(vertices: Sequence[Point]
                            ) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    """Does the closed hull of d+1 points in dimension d contain the origin?

    Returns (verdict, coefficients); the coefficients are the unique
    barycentric coordinates when the vertices are affinely independent, and
    some exact convex combination hitting the origin otherwise.
    """
    vertices = tuple(vertices)
    if not vertices:
        raise InputError("need vertices")
    d = len(vertices) - 1
    if d < 1:
        raise InputError("need at least two vertices")
    for v in vertices:
        if len(v) != d:
            raise InputError(f"expected {d} coordinates per vertex, got {len(v)}")
    return _contains_origin_scaled([scale_to_integers(v) for v in vertices], True)


def origin_in_convex_hull(points: Sequence[Point]) -> bool:
    """Closed containment of the origin in the hull of any number of points."""
    points = tuple(points)
    if not points:
        raise InputError("need at least one point")
    n = len(points)
    scaled = [scale_to_integers(p)[0] for p in points]
    rows: list[tuple[IntVec, Relation]] = []
    for i in range(n):
        rows.append((tuple(1 if k == i else 0 for k in range(n)), Relation.GE))
    for k in range(len(points[0])):
        rows.append((tuple(v[k] for v in scaled), Relation.EQ))
    rows.append((tuple(1 for _ in range(n)), Relation.GT))
    return max_slack_point(rows, n) is not None


def _cone_contains_ints(gens: Sequence[IntVec], x: IntVec) -> bool:
    d = len(gens)
    rows = [[gens[i][k] for i in range(d)] for k in range(d)]
    det = int_det(rows)
    if det != 0:
        for i in range(d):
            cols = list(gens)
            cols[i] = x
            num = int_det([[cols[a][k] for a in range(d)] for k in range(d)])
            if num != 0 and (num > 0) != (det > 0):
                return False
        return True
    # dependent generators: x in cone iff some lam >= 0, t > 0 solve G.lam = t.x
    rows_sys: list[tuple[IntVec, Relation]] = []
    for i in range(d):
        rows_sys.append((tuple(1 if k == i else 0 for k in range(d + 1)), Relation.GE))
    rows_sys.append((tuple(1 if k == d else 0 for k in range(d + 1)), Relation.GT))
    for k in range(d):
        rows_sys.append((tuple(g[k] for g in gens) + (-x[k],), Relation.EQ))
    return max_slack_point(rows_sys, d + 1) is not None


def cone_contains(cone: ConeSpec, x: Point) -> bool:
    """Is x a nonnegative combination of the cone's generators?"""
    d = cone.dimension
    if len(x) != d:
        raise InputError(f"expected {d} coordinates, got {len(x)}")
    gens = [scale_to_integers(g)[0] for g in cone.generators]
    return _cone_contains_ints(gens, scale_to_integers(x)[0])


def colourful_depth(config: Configuration) -> DepthReport:
    """Count, over all transversals, the closed colourful simplices containing
    the origin, with barycentric witnesses in lexicographic order."""
    scaled = [[scale_to_integers(p) for p in cls] for cls in config.colours]
    witnesses = []
    for choice in enumerate_transversals(config):
        verts = [scaled[c][j] for c, j in enumerate(choice)]
        ok, coeffs = _contains_origin_scaled(verts, True)
        if ok:
            witnesses.append((choice, coeffs))
    return DepthReport(depth=len(witnesses), witnesses=tuple(witnesses))


def _check_colour_subset(config: Configuration, colours: Sequence[int]) -> tuple[int, ...]:
    d = config.dimension
    subset = tuple(colours)
    if len(subset) != d or len(set(subset)) != d:
        raise InputError(f"need {d} distinct colours, got {subset}")
    for c in subset:
        if not 0 <= c <= d:
            raise InputError(f"colour {c} out of range 0..{d}")
    return subset


class _ConeFamily:
    """All one-point-per-colour cones over given colour classes, with
    precomputed integer facet rows for fast repeated membership tests."""

    def __init__(self, classes: Sequence[Sequence[Point]]):
        self.dimension = len(classes)
        self.class_ints = [[scale_to_integers(p)[0] for p in cls] for cls in classes]
        self.choices = list(itertools.product(*[range(len(cls)) for cls in classes]))
        self._rows = []
        for choice in self.choices:
            gens = [self.class_ints[i][j] for i, j in enumerate(choice)]
            self._rows.append((cone_facet_rows(gens), gens))

    def containing(self, x: IntVec) -> list[tuple[int, ...]]:
        """Choices whose cones contain x, in lexicographic order."""
        hits = []
        for choice, (rows, gens) in zip(self.choices, self._rows):
            if rows is not None:
                if all(vec_dot(r, x) >= 0 for r in rows):
                    hits.append(choice)
            elif _cone_contains_ints(gens, x):
                hits.append(choice)
        return hits

    def count_containing(self, x: IntVec, stop_above: Optional[int] = None) -> int:
        count = 0
        for choice, (rows, gens) in zip(self.choices, self._rows):
            if rows is not None:
                if all(vec_dot(r, x) >= 0 for r in rows):
                    count += 1
            elif _cone_contains_ints(gens, x):
                count += 1
            if stop_above is not None and count > stop_above:
                return count
        return count


def d_depth(config: Configuration, colours: Sequence[int], x: Point) -> int:
    """Number of cones, one generator per colour in the given d-subset,
    containing the direction x.  The origin is rejected: every cone contains
    it and the quantity is directional."""
    subset = _check_colour_subset(config, colours)
    if len(x) != config.dimension:
        raise InputError(f"expected {config.dimension} coordinates, got {len(x)}")
    if is_zero_vec(x):
        raise InputError("the subset depth of the origin is undefined")
    family = _ConeFamily([config.colours[c] for c in subset])
    return family.count_containing(scale_to_integers(x)[0])


def antipodal_check(config: Configuration, choice: Transversal, colour: int) -> bool:
    """Does the antipode of the transversal's colour-`colour` point lie in the
    cone of its other d points?  Agrees with `simplex_contains_origin` on the
    full vertex set whenever the configuration is in general position."""
    d = config.dimension
    if not 0 <= colour <= d:
        raise InputError(f"colour {colour} out of range 0..{d}")
    if len(choice) != d + 1:
        raise InputError(f"transversal needs {d + 1} entries")
    gens = tuple(config.point(c, choice[c]) for c in range(d + 1) if c != colour)
    apex = vec_neg(config.point(colour, choice[colour]))
    return cone_contains(ConeSpec(gens), apex)
