"""Numerical semigroups: gcd-1 additive sub-semigroups of the naturals.

A semigroup is stored canonically as (generators, conductor, small_elements)
where the conductor is the least c with c + N contained in S, and
small_elements lists the members strictly below it.  Membership is O(1)
after construction.

The saturation machinery turns a set of characteristic exponents
{b0 < b1 < ... < bg} (strictly decreasing gcd chain ending at 1) into the
smallest saturated numerical semigroup containing them, by the staged union

    E_0   = E union b0*N
    E_j+1 = E_j union { b_{j+1} + k*e_{j+1} : k in N },   e_{j+1} = gcd(e_j, b_{j+1})

and packages the final stage as a NumericalSemigroup.  Saturation itself is
the closure condition s + d(s) in S for every member s, where d(s) is the
gcd of the nonzero members not exceeding s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import EmptyGenerators, GcdNotOne, NonCoprime, NotClosed


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    conductor: int
    small_elements: tuple[int, ...]

    @cached_property
    def _small_set(self) -> frozenset[int]:
        return frozenset(self.small_elements)

    def __contains__(self, n: int) -> bool:
        return contains(self, n)


@dataclass(frozen=True)
class CharExponents:
    """Strictly increasing exponents with their strictly decreasing gcd chain."""

    betas: tuple[int, ...]
    gcd_chain: tuple[int, ...]


def _clean_generators(gens: Iterable[int]) -> tuple[int, ...]:
    out = sorted(set(int(g) for g in gens))
    if not out:
        raise EmptyGenerators("no generators given")
    if out[0] < 1:
        raise ValueError("generators must be positive naturals")
    return tuple(out)


def mk_numerical(gens: Iterable[int]) -> NumericalSemigroup:
    """Build a numerical semigroup from positive generators with gcd 1."""
    gen_t = _clean_generators(gens)
    if math.gcd(*gen_t) != 1:
        raise NonCoprime(f"gcd of generators {gen_t} is {math.gcd(*gen_t)}, not 1")
    m = gen_t[0]
    bound = 2 * gen_t[-1] * gen_t[-1] + gen_t[-1] + 1
    while True:
        member = bytearray(bound + 1)
        member[0] = 1
        for n in range(m, bound + 1):
            for g in gen_t:
                if g > n:
                    break
                if member[n - g]:
                    member[n] = 1
                    break
        last_gap = next((n for n in range(bound, -1, -1) if not member[n]), None)
        # A run of m consecutive members certifies everything beyond it.
        if last_gap is None:
            return NumericalSemigroup(gen_t, 0, ())
        if last_gap <= bound - m:
            conductor = last_gap + 1
            small = tuple(n for n in range(conductor) if member[n])
            return NumericalSemigroup(gen_t, conductor, small)
        bound *= 2


def contains(s: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    return n >= s.conductor or n in s._small_set


def gaps(s: NumericalSemigroup) -> tuple[int, ...]:
    """The finite complement of S in the naturals; empty for S = N."""
    return tuple(n for n in range(s.conductor) if n not in s._small_set)


def multiplicity_num(s: NumericalSemigroup) -> int:
    """Least nonzero member."""
    if len(s.small_elements) > 1:
        return s.small_elements[1]
    return max(1, s.conductor)


def _members_upto(s: NumericalSemigroup, hi: int) -> list[int]:
    return [n for n in range(hi + 1) if contains(s, n)]


def min_generators_num(s: NumericalSemigroup) -> tuple[int, ...]:
    """The unique inclusion-minimal generating set.

    A nonzero member is a minimal generator exactly when it is not the sum
    of two nonzero members.  Candidates are bounded by conductor +
    multiplicity: beyond that, n - m is itself a nonzero member.
    """
    m = multiplicity_num(s)
    hi = max(s.conductor + m - 1, m)
    members = [n for n in _members_upto(s, hi) if n > 0]
    out = []
    for n in members:
        if not any(m <= x <= n - m and contains(s, n - x) for x in members):
            out.append(n)
    return tuple(out)


def char_exponents(m: int, support: Iterable[int]) -> CharExponents:
    """Extract characteristic exponents from a leading exponent and a support set.

    Scanning the support in increasing order, an exponent joins the list when
    the running gcd does not divide it; the gcd chain must reach 1, otherwise
    the underlying parametrization is not reduced.
    """
    if m < 1:
        raise ValueError("leading exponent must be >= 1")
    sup = sorted(set(int(x) for x in support))
    if any(x <= m for x in sup):
        raise ValueError("support exponents must exceed the leading exponent")
    betas = [m]
    chain = [m]
    e = m
    for x in sup:
        if e == 1:
            break
        if x % e:
            betas.append(x)
            e = math.gcd(e, x)
            chain.append(e)
    if e != 1:
        raise GcdNotOne(f"gcd chain stalls at {e}; exponents {betas} with support {sup}")
    return CharExponents(tuple(betas), tuple(chain))


def _min_generators_of_set(members: set[int], conductor: int) -> tuple[int, ...]:
    m = min(x for x in members if x > 0)
    hi = max(conductor + m - 1, m)
    elems = [n for n in range(1, hi + 1) if n in members or n >= conductor]
    out = []
    for n in elems:
        if not any(m <= x <= n - m and ((n - x) in members or (n - x) >= conductor) for x in elems):
            out.append(n)
    return tuple(out)


def saturate_chars(exponents: CharExponents) -> NumericalSemigroup:
    """Smallest saturated numerical semigroup containing the given exponents.

    Runs the staged-union construction, detects the conductor, and validates
    both closure under addition and the saturation condition before
    packaging; a failure raises NotClosed and indicates a bug, not bad input.
    """
    betas = exponents.betas
    chain = exponents.gcd_chain
    b0, bg = betas[0], betas[-1]
    # The final stage adds bg + N, so the conductor is at most bg; the extra
    # margin keeps the closure check honest well past it.
    bound = bg + 2 * max(bg, b0 * b0)
    elems = set(range(0, bound + 1, b0))
    elems.update(betas)
    for j in range(1, len(betas)):
        elems.update(range(betas[j], bound + 1, chain[j]))
    last_gap = next((n for n in range(bound, -1, -1) if n not in elems), None)
    conductor = 0 if last_gap is None else last_gap + 1
    small_members = [n for n in range(1, conductor) if n in elems]
    for a in small_members:
        for b in small_members:
            if a + b >= conductor:
                break
            if a + b not in elems:
                raise NotClosed(f"saturation stages not closed: {a}+{b} missing")
    small = tuple(n for n in range(conductor) if n in elems)
    result = NumericalSemigroup(_min_generators_of_set(elems, conductor), conductor, small)
    if not is_saturated(result):
        raise NotClosed("staged construction produced a non-saturated semigroup")
    return result


def is_saturated(s: NumericalSemigroup) -> bool:
    """Closure test s + d(s) in S with d(s) = gcd of nonzero members <= s.

    Checked up to conductor + max(generators); past that point d(s) = 1 and
    co-finiteness makes the condition automatic.
    """
    limit = s.conductor + (max(s.generators) if s.generators else 1)
    d = 0
    for n in range(1, limit + 1):
        if contains(s, n):
            d = math.gcd(d, n)
            if not contains(s, n + d):
                return False
    return True
