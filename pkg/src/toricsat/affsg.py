"""Affine semigroups inside N^d: membership, minimal generators, hulls.

Generators are nonzero lattice vectors with nonnegative coordinates, so the
generated cone is pointed and membership over a box is decidable by dynamic
programming.  Generator order is preserved from construction (it fixes the
variable order of the toric ideal); only minimal-generator output is
lexicographically sorted.

The hull machinery realizes K+ = conv(generators) + R^d_{>=0}, the convex
hull of the nonzero members.  In dimensions 1 and 2 its bounded complement
in the positive orthant is a lattice polygon whose normalized volume
(d! times euclidean volume) is the multiplicity of the corresponding toric
germ.  Lattice points outside K+ can never belong to the semigroup or to
any saturation preserving that multiplicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BoxTooLarge,
    ConeNotFull,
    DimensionMismatch,
    NegativeCoordinate,
    UnsupportedDimension,
    ZeroGenerator,
)

_CELL_BUDGET = 10**7

Vec = tuple[int, ...]


@dataclass(frozen=True)
class AffineSemigroup:
    dim: int
    generators: tuple[Vec, ...]
    factors: Optional[tuple["AffineSemigroup", ...]] = field(
        default=None, compare=False, repr=False
    )

    def __contains__(self, v: Sequence[int]) -> bool:
        return contains_affine(self, v)


@dataclass(frozen=True)
class HullComplement:
    dim: int
    polygon_vertices: tuple[Vec, ...]
    normalized_volume: int


def _check_vector(d: int, v: Sequence[int]) -> Vec:
    vt = tuple(int(x) for x in v)
    if len(vt) != d:
        raise DimensionMismatch(f"vector {vt} has length {len(vt)}, expected {d}")
    if any(x < 0 for x in vt):
        raise NegativeCoordinate(f"vector {vt} has a negative coordinate")
    return vt


def mk_affine(d: int, gens: Iterable[Sequence[int]]) -> AffineSemigroup:
    """Build an affine semigroup, deduplicating but preserving generator order."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    seen: dict[Vec, None] = {}
    for g in gens:
        gt = _check_vector(d, g)
        if not any(gt):
            raise ZeroGenerator("generators must be nonzero")
        seen.setdefault(gt, None)
    return AffineSemigroup(d, tuple(seen))


def membership_table(gamma: AffineSemigroup, corner: Sequence[int]) -> np.ndarray:
    """Boolean membership array over the box [0, corner], computed by DP.

    Valid because every generator is nonnegative and nonzero: any member of
    the box is a smaller box member plus a generator, so a single
    lexicographic sweep fills the table.
    """
    corner_t = _check_vector(gamma.dim, corner)
    shape = tuple(c + 1 for c in corner_t)
    cells = math.prod(shape)
    if cells > _CELL_BUDGET:
        raise BoxTooLarge(f"box {shape} has {cells} cells, budget is {_CELL_BUDGET}")
    usable = [g for g in gamma.generators if all(gi <= ci for gi, ci in zip(g, corner_t))]
    if gamma.dim == 2:
        w, h = corner_t
        rows = [bytearray(h + 1) for _ in range(w + 1)]
        rows[0][0] = 1
        for a in range(w + 1):
            ra = rows[a]
            for b in range(h + 1):
                if ra[b]:
                    continue
                for g0, g1 in usable:
                    if g0 <= a and g1 <= b and rows[a - g0][b - g1]:
                        ra[b] = 1
                        break
        return np.array([[bool(x) for x in row] for row in rows], dtype=bool)
    table = np.zeros(shape, dtype=bool)
    table[(0,) * gamma.dim] = True
    for idx in np.ndindex(*shape):
        if table[idx]:
            continue
        for g in usable:
            prev = tuple(i - gi for i, gi in zip(idx, g))
            if all(p >= 0 for p in prev) and table[prev]:
                table[idx] = True
                break
    return table


def contains_affine(gamma: AffineSemigroup, v: Sequence[int]) -> bool:
    """True iff v is a nonnegative integer combination of the generators."""
    vt = _check_vector(gamma.dim, v)
    if not any(vt):
        return True
    return bool(membership_table(gamma, vt)[vt])


def min_generators_affine(gamma: AffineSemigroup) -> tuple[Vec, ...]:
    """The unique minimal generating set, in lexicographic order.

    A generator is redundant exactly when it is generated by the others;
    simultaneous removal is safe because the cone is pointed.
    """
    gens = gamma.generators
    keep = []
    for i, g in enumerate(gens):
        others = gens[:i] + gens[i + 1 :]
        if not others or not contains_affine(AffineSemigroup(gamma.dim, others), g):
            keep.append(g)
    return tuple(sorted(keep))


def product(g1: AffineSemigroup, g2: AffineSemigroup) -> AffineSemigroup:
    """Product semigroup in dimension d1 + d2, tagged with its factors."""
    d = g1.dim + g2.dim
    gens = [g + (0,) * g2.dim for g in g1.generators]
    gens += [(0,) * g1.dim + h for h in g2.generators]
    return AffineSemigroup(d, tuple(dict.fromkeys(gens)), factors=(g1, g2))


def _axis_corners(gens: Sequence[Vec]) -> tuple[Vec, Vec]:
    on_x = [g for g in gens if g[1] == 0]
    on_y = [g for g in gens if g[0] == 0]
    if not on_x or not on_y:
        raise ConeNotFull("need a generator on each coordinate axis for a bounded complement")
    return (min(g[0] for g in on_x), 0), (0, min(g[1] for g in on_y))


def _hull_chain(gens: Sequence[Vec]) -> list[Vec]:
    """Vertices of the lower-left boundary of K+, from the y-axis corner to
    the x-axis corner.  Gift-wrapping walk; generators dominated by a corner
    plus the positive orthant are discarded first."""
    px, py = _axis_corners(gens)
    pts = {g for g in gens if g[0] <= px[0] and g[1] <= py[1]}
    chain = [py]
    cur = py
    while cur != px:
        best = None
        for q in pts:
            if q == cur:
                continue
            if best is None:
                best = q
                continue
            cross = (best[0] - cur[0]) * (q[1] - cur[1]) - (best[1] - cur[1]) * (q[0] - cur[0])
            if cross < 0:
                best = q
            elif cross == 0:
                far_q = (q[0] - cur[0]) ** 2 + (q[1] - cur[1]) ** 2
                far_b = (best[0] - cur[0]) ** 2 + (best[1] - cur[1]) ** 2
                if far_q > far_b:
                    best = q
        chain.append(best)
        cur = best
    return chain


def _chain_edges(chain: Sequence[Vec]) -> list[tuple[int, int, int]]:
    """Inward halfplane (a, b, c) per chain edge: members satisfy a*x + b*y >= c."""
    edges = []
    for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
        a, b = y1 - y2, x2 - x1
        edges.append((a, b, a * x1 + b * y1))
    return edges


def in_hull(gamma: AffineSemigroup, v: Sequence[int]) -> bool:
    """Membership of a lattice point of N^d in K+ = conv(members \\ {0})."""
    vt = _check_vector(gamma.dim, v)
    if gamma.dim == 1:
        return vt[0] >= min(g[0] for g in gamma.generators)
    if gamma.dim != 2:
        raise UnsupportedDimension("hull membership implemented for dimensions 1 and 2")
    edges = _chain_edges(_hull_chain(gamma.generators))
    return all(a * vt[0] + b * vt[1] >= c for a, b, c in edges)


def hull_complement(gamma: AffineSemigroup) -> HullComplement:
    """Bounded complement of K+ in the positive orthant, with its normalized volume."""
    if gamma.dim == 1:
        m = min(g[0] for g in gamma.generators)
        return HullComplement(1, ((0,), (m,)), m)
    if gamma.dim != 2:
        raise UnsupportedDimension("hull complement implemented for dimensions 1 and 2")
    chain = _hull_chain(gamma.generators)
    polygon = [(0, 0)] + list(reversed(chain))
    twice_area = 0
    for (x1, y1), (x2, y2) in zip(polygon, polygon[1:] + polygon[:1]):
        twice_area += x1 * y2 - x2 * y1
    return HullComplement(2, tuple(polygon), abs(twice_area))


def outside_hull_points(gamma: AffineSemigroup) -> tuple[Vec, ...]:
    """All nonzero lattice points of the positive orthant outside K+."""
    if gamma.dim == 1:
        m = min(g[0] for g in gamma.generators)
        return tuple((k,) for k in range(1, m))
    if gamma.dim != 2:
        raise UnsupportedDimension("hull complement implemented for dimensions 1 and 2")
    px, py = _axis_corners(gamma.generators)
    edges = _chain_edges(_hull_chain(gamma.generators))
    out = []
    for x in range(px[0] + 1):
        for y in range(py[1] + 1):
            if (x, y) != (0, 0) and any(a * x + b * y < c for a, b, c in edges):
                out.append((x, y))
    return tuple(sorted(out))


def multiplicity_affine(gamma: AffineSemigroup) -> int:
    """Normalized volume of the hull complement; multiplicative over products."""
    if gamma.factors is not None:
        return math.prod(multiplicity_affine(f) for f in gamma.factors)
    if gamma.dim == 1:
        return min(g[0] for g in gamma.generators)
    if gamma.dim == 2:
        return hull_complement(gamma).normalized_volume
    raise UnsupportedDimension(
        "multiplicity implemented for dimensions 1 and 2 and tagged products"
    )


def embedding_dimension(gamma: AffineSemigroup) -> int:
    return len(min_generators_affine(gamma))
