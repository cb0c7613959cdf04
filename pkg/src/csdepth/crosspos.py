"""Deformed cross positions: decision and constructive search.

A family of two points in each of d colours is in deformed cross position
when the 2^d one-point-per-colour cones cover space, like the vertices of a
cross-polytope after deformation.  The decision delegates to the exact
arrangement engine.

The constructive search hunts for a direction x contained in few cones of
the full one-point-per-colour family on a d-subset of colours.  Once x lies
in at most d-1 cones, each colour still has at least two points generating
no cone through x; pairing one such point per colour with a generator of a
cone through x yields a family whose coverage is then certified exactly.
Candidate directions come, in order, from the antipodes of all configuration
points, from exact interior witnesses of the facet-arrangement cells
(exhaustively for d <= 3, where the cell count stays small), and from seeded
random directions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .arrangement import CoverageCertificate, covers_space, facet_hyperplanes
from .configuration import Configuration, validate
from .depth import ConeSpec, _ConeFamily
from .errors import InputError
from .exactgeom import IntVec, Point, is_zero_vec, primitive_normal, scale_to_integers

_DEFAULT_RANDOM_CANDIDATES = 64


@dataclass(frozen=True)
class CrossPosition:
    """A verified deformed cross position inside a configuration.

    For each colour c in `colour_set`, `pairs` holds the two point indices
    (cone_member, avoider): the first generates a cone containing the search
    direction, the second generates none.
    """

    colour_set: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    direction: Point
    certificate: CoverageCertificate

    def to_json_dict(self) -> dict:
        return {
            "colours": list(self.colour_set),
            "pairs": [{"colour": c, "cone_member": z, "avoider": w}
                      for c, (z, w) in zip(self.colour_set, self.pairs)],
            "direction": [str(x) for x in self.direction],
            "certificate": self.certificate.to_json_dict(),
        }


@dataclass(frozen=True)
class CrossSearchFailure:
    """No direction of low cone count was found within budget."""

    min_d_depth: int
    candidates_tried: int

    def to_json_dict(self) -> dict:
        return {
            "found": False,
            "min_d_depth": self.min_d_depth,
            "candidates_tried": self.candidates_tried,
        }


def is_deformed_cross_position(pairs: Sequence[tuple[Point, Point]]
                               ) -> CoverageCertificate:
    """Build the 2^d colourful cones from d pairs and decide coverage."""
    d = len(pairs)
    if d < 1:
        raise InputError("need at least one colour pair")
    for c, (a, b) in enumerate(pairs):
        for p in (a, b):
            if len(p) != d:
                raise InputError(f"pair {c}: expected {d} coordinates, got {len(p)}")
            if is_zero_vec(p):
                raise InputError(f"pair {c}: points must be nonzero")
    cones = [ConeSpec(tuple(pairs[i][bits[i]] for i in range(d)),
                      colours=tuple(range(d)))
             for bits in itertools.product((0, 1), repeat=d)]
    return covers_space(cones)


def _candidate_directions(config: Configuration, subset: tuple[int, ...],
                          seed: int, random_candidates: int,
                          exhaustive: bool):
    """Nonzero integer candidate directions in deterministic priority order:
    antipodes of all configuration points, then cell witnesses of the full
    cone family's facet arrangement (exhaustive mode), then random draws."""
    d = config.dimension
    emitted: set[IntVec] = set()

    def fresh(x: IntVec) -> bool:
        if all(e == 0 for e in x):
            return False
        key = primitive_normal(x)
        if key in emitted:
            return False
        emitted.add(key)
        return True

    for _, _, p in config.indexed_points():
        x = tuple(-e for e in scale_to_integers(p)[0])
        if fresh(x):
            yield x
    if exhaustive:
        from .arrangement import enumerate_cells
        cones = [ConeSpec(tuple(config.colours[c][choice[i]]
                                for i, c in enumerate(subset)))
                 for choice in itertools.product(range(d + 1), repeat=d)]
        hyperplanes = facet_hyperplanes(cones)
        for _, witness in enumerate_cells(hyperplanes):
            x = scale_to_integers(witness)[0]
            if fresh(x):
                yield x
    rng = random.Random(seed)
    for _ in range(random_candidates):
        x = tuple(rng.getrandbits(20) - (1 << 19) for _ in range(d))
        if fresh(x):
            yield x


def find_cross_position(config: Configuration, colours: Sequence[int], *,
                        seed: int = 0,
                        random_candidates: int = _DEFAULT_RANDOM_CANDIDATES,
                        exhaustive: Optional[bool] = None
                        ) -> Union[CrossPosition, CrossSearchFailure]:
    """Search the configuration for a deformed cross position on the given
    d colours.

    Succeeds whenever some candidate direction lies in between 1 and d-1 of
    the one-point-per-colour cones; the returned family carries its verified
    coverage certificate.  With `exhaustive` (default for d <= 3) the
    candidate stream includes a witness for every arrangement cell, so the
    search is complete: failure then proves that the minimum cone count over
    all directions is at least d.
    """
    d = config.dimension
    subset = tuple(colours)
    if len(subset) != d or len(set(subset)) != d or \
            not all(0 <= c <= d for c in subset):
        raise InputError(f"need {d} distinct colours in range 0..{d}, got {subset}")
    report = validate(config)
    if not report.zero_interior:
        raise InputError("configuration must contain the origin strictly inside "
                         "every colour hull")
    if exhaustive is None:
        exhaustive = d <= 3

    family = _ConeFamily([config.colours[c] for c in subset])
    best = len(family.choices) + 1
    tried = 0
    for x in _candidate_directions(config, subset, seed, random_candidates, exhaustive):
        tried += 1
        hits = family.containing(x)
        best = min(best, len(hits))
        if not 1 <= len(hits) <= d - 1:
            continue
        used = [set() for _ in range(d)]
        for choice in hits:
            for pos, j in enumerate(choice):
                used[pos].add(j)
        anchor = hits[0]
        pairs = []
        pair_points = []
        for pos in range(d):
            w = next(j for j in range(d + 1) if j not in used[pos])
            z = anchor[pos]
            pairs.append((z, w))
            cls = config.colours[subset[pos]]
            pair_points.append((cls[z], cls[w]))
        certificate = is_deformed_cross_position(pair_points)
        if certificate.covered:
            return CrossPosition(
                colour_set=subset,
                pairs=tuple(pairs),
                direction=tuple(Fraction(e) for e in x),
                certificate=certificate,
            )
    return CrossSearchFailure(min_d_depth=best, candidates_tried=tried)
