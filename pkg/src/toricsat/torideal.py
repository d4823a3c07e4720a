"""Binomial relations of the toric ideal of an affine semigroup.

Writing pi for the exponent map sending a monomial exponent vector to its
value under the generator matrix, the toric ideal is generated by the
binomials z^a - z^b with pi(a) = pi(b).  Two exact computations:

* an integer basis of the lattice of relations, via unimodular row
  reduction (no floating point, no saturation loss);
* a degree-bounded move set: binomial moves connecting every fiber of pi
  reachable by monomials up to a total-degree bound, greedily pruned.
  This is exact for the instances it accepts and refuses larger ones
  rather than returning unverified output.

Binomial normal form puts the lexicographically larger exponent vector
first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .affsg import AffineSemigroup, Vec
from .errors import BudgetExceeded, IndexOutOfRange

_BUDGET = 10**7

Binomial = tuple[Vec, Vec]


@dataclass(frozen=True)
class LatticeRelation:
    """An integer vector u with A u = 0 for the generator matrix A."""

    vector: tuple[int, ...]

    @property
    def positive(self) -> Vec:
        return tuple(max(x, 0) for x in self.vector)

    @property
    def negative(self) -> Vec:
        return tuple(max(-x, 0) for x in self.vector)

    def binomial(self) -> Binomial:
        p, n = self.positive, self.negative
        return (p, n) if p > n else (n, p)


def _apply_value(gens: Sequence[Vec], alpha: Sequence[int]) -> Vec:
    d = len(gens[0])
    out = [0] * d
    for c, g in zip(alpha, gens):
        for i in range(d):
            out[i] += c * g[i]
    return tuple(out)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def lattice_kernel(gamma: AffineSemigroup) -> tuple[LatticeRelation, ...]:
    """An integer basis of the relation lattice of the generator matrix.

    Row-reduces the (generators x dim) matrix with unimodular operations
    tracked on an identity matrix; the tracker rows matching zero rows form
    a basis of the full integer kernel, not just a finite-index sublattice.
    """
    gens = [list(g) for g in gamma.generators]
    n, d = len(gens), gamma.dim
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivot = 0
    for col in range(d):
        row = next((r for r in range(pivot, n) if gens[r][col]), None)
        if row is None:
            continue
        gens[pivot], gens[row] = gens[row], gens[pivot]
        u[pivot], u[row] = u[row], u[pivot]
        for r in range(pivot + 1, n):
            if gens[r][col] == 0:
                continue
            a, b = gens[pivot][col], gens[r][col]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            gens[pivot], gens[r] = (
                [x * s + y * t for s, t in zip(gens[pivot], gens[r])],
                [-q * s + p * t for s, t in zip(gens[pivot], gens[r])],
            )
            u[pivot], u[r] = (
                [x * s + y * t for s, t in zip(u[pivot], u[r])],
                [-q * s + p * t for s, t in zip(u[pivot], u[r])],
            )
        pivot += 1
    basis = []
    for r in range(n):
        if not any(gens[r]):
            vec = u[r]
            first = next(x for x in vec if x)
            if first < 0:
                vec = [-x for x in vec]
            basis.append(LatticeRelation(tuple(vec)))
    return tuple(sorted(basis, key=lambda rel: rel.vector))


def verify_vanishing(binomials: Sequence[Binomial], gamma: AffineSemigroup) -> bool:
    """True iff every binomial's two exponent vectors share a pi-value."""
    n = len(gamma.generators)
    for first, second in binomials:
        if len(first) != n or len(second) != n:
            raise IndexOutOfRange(
                f"binomial exponents must have {n} entries, got {len(first)} and {len(second)}"
            )
        if any(x < 0 for x in first) or any(x < 0 for x in second):
            raise ValueError("binomial exponents must be nonnegative")
        if _apply_value(gamma.generators, first) != _apply_value(gamma.generators, second):
            return False
    return True


class _Budget:
    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceeded(f"fiber enumeration exceeded {_BUDGET} steps")


def _full_fiber(gens: Sequence[Vec], value: Vec, budget: _Budget) -> list[Vec]:
    """All exponent vectors alpha with pi(alpha) = value (finite: cone is pointed)."""
    n = len(gens)
    out: list[Vec] = []

    def rec(i: int, remaining: list[int], prefix: list[int]) -> None:
        budget.spend()
        if i == n:
            if not any(remaining):
                out.append(tuple(prefix))
            return
        g = gens[i]
        cap = min(
            (remaining[j] // g[j] for j in range(len(g)) if g[j]),
        )
        for c in range(cap + 1):
            rec(i + 1, [r - c * gj for r, gj in zip(remaining, g)], prefix + [c])

    rec(0, list(value), [])
    return out


def _moves_connect(fiber: Sequence[Vec], moves: Sequence[tuple[Vec, Vec]]) -> bool:
    if len(fiber) < 2:
        return True
    index = {v: i for i, v in enumerate(fiber)}
    seen = {fiber[0]}
    stack = [fiber[0]]
    while stack:
        cur = stack.pop()
        for plus, minus in moves:
            for src, dst in ((plus, minus), (minus, plus)):
                if all(c >= s for c, s in zip(cur, src)):
                    nxt = tuple(c - s + t for c, s, t in zip(cur, src, dst))
                    if nxt in index and nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
    return len(seen) == len(fiber)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        self.parent[ri] = rj
        self.count -= 1
        return True


def degree_bounded_generators(gamma: AffineSemigroup, degree_bound: int) -> tuple[Binomial, ...]:
    """A pruned set of binomial moves connecting every reachable fiber.

    Fibers of all values reachable by monomials of total degree at most the
    bound are enumerated in full; candidate moves are the pairwise
    differences inside fibers.  Moves are admitted smallest-first while they
    merge fiber components, then each survivor is dropped if connectivity
    persists without it.  Within the enumeration budget the output provably
    connects those fibers; nothing is claimed beyond the bound.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    gens = gamma.generators
    n = len(gens)
    budget = _Budget(_BUDGET)
    values: set[Vec] = set()
    for total in range(degree_bound + 1):
        for alpha in _compositions(total, n, budget):
            values.add(_apply_value(gens, alpha))
    fibers = []
    for v in sorted(values):
        fiber = sorted(_full_fiber(gens, v, budget))
        if len(fiber) > 1:
            fibers.append(fiber)
    candidates: set[Binomial] = set()
    for fiber in fibers:
        for a, b in itertools.combinations(fiber, 2):
            budget.spend()
            diff = tuple(x - y for x, y in zip(a, b))
            candidates.add(LatticeRelation(diff).binomial())
    indexes = [{v: i for i, v in enumerate(f)} for f in fibers]
    components = [_UnionFind(len(f)) for f in fibers]
    kept: list[Binomial] = []
    for plus, minus in sorted(candidates, key=_move_sort_key):
        if all(uf.count == 1 for uf in components):
            break
        merged = False
        for fiber, index, uf in zip(fibers, indexes, components):
            for i, point in enumerate(fiber):
                budget.spend()
                if all(c >= s for c, s in zip(point, plus)):
                    target = tuple(c - s + t for c, s, t in zip(point, plus, minus))
                    j = index.get(target)
                    if j is not None and uf.union(i, j):
                        merged = True
        if merged:
            kept.append((plus, minus))
    for move in sorted(kept, key=_move_sort_key, reverse=True):
        trial = [m for m in kept if m != move]
        if all(_moves_connect(f, trial) for f in fibers):
            kept = trial
    return tuple(sorted(kept, key=_move_sort_key))


def _move_sort_key(b: Binomial):
    return (sum(b[0]) + sum(b[1]), b)


def _compositions(total: int, n: int, budget: _Budget):
    """All length-n nonnegative integer vectors with coordinate sum equal to total."""
    if n == 1:
        budget.spend()
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, n - 1, budget):
            budget.spend()
            yield (head,) + tail
