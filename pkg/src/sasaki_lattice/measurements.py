"""Finite measurements and finite boolean subalgebras of a FiniteOml."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .config import require_small
from .errors import (ContainsBot, JoinNotTop, NotBooleanSubalgebra, NotComparable,
                     NotFiner, NotPairwiseOrthogonal)
from .oml import FiniteOml, same_base

__all__ = [
    "FiniteMeasurement", "BooleanSubalgebra", "validate_measurement", "validate_fba",
    "finer_than", "refinement_map", "measurement_to_fba", "fba_to_measurement",
    "pi_b", "sem", "sem2", "enumerate_measurements", "enumerate_fbas", "canonical_key",
]


def canonical_key(elems):
    s = sorted(elems)
    return (len(s), s)


@dataclass(frozen=True)
class FiniteMeasurement:
    base: FiniteOml = field(compare=False, repr=False)
    outcomes: frozenset

    def sorted(self):
        return sorted(self.outcomes)

    def __len__(self):
        return len(self.outcomes)


@dataclass(frozen=True)
class BooleanSubalgebra:
    base: FiniteOml = field(compare=False, repr=False)
    elems: frozenset

    def __contains__(self, x):
        return x in self.elems

    def __len__(self):
        return len(self.elems)

    def sorted(self):
        return sorted(self.elems)

    def atoms(self):
        L = self.base
        nonzero = [x for x in self.elems if x != L.bot]
        return sorted(x for x in nonzero
                      if not any(y != x and L.le(y, x) for y in nonzero))

    def issubset(self, other):
        return self.elems <= other.elems


def validate_measurement(L, outcomes):
    """Check the three measurement conditions, raising on the first failure."""
    outs = sorted(set(outcomes))
    if not outs:
        raise ValueError("a measurement needs at least one outcome")
    for x in outs:
        if not 0 <= x < L.n:
            raise IndexError(f"element {x} out of range")
        if x == L.bot:
            raise ContainsBot("outcome is bottom", (x,))
    for x, y in itertools.combinations(outs, 2):
        if not L.orthogonal(x, y):
            raise NotPairwiseOrthogonal("outcomes are not orthogonal", (x, y))
    if L.join_all(outs) != L.top:
        raise JoinNotTop("outcomes do not join to top", tuple(outs))
    return FiniteMeasurement(L, frozenset(outs))


def validate_fba(L, elems):
    """Check that ``elems`` is a boolean subalgebra of ``L``."""
    es = set(elems)
    if L.bot not in es or L.top not in es:
        raise NotBooleanSubalgebra("missing bottom or top", ())
    for x in sorted(es):
        if L.oc(x) not in es:
            raise NotBooleanSubalgebra("not closed under ortho", (x,))
    for x, y in itertools.combinations(sorted(es), 2):
        if L.meet(x, y) not in es:
            raise NotBooleanSubalgebra("not closed under meet", (x, y))
        if L.join(x, y) not in es:
            raise NotBooleanSubalgebra("not closed under join", (x, y))
        if not L.commutes(x, y):
            raise NotBooleanSubalgebra("elements do not commute", (x, y))
    return BooleanSubalgebra(L, frozenset(es))


def finer_than(M, M2):
    """``M <=_FM M2``: every outcome of M lies below some outcome of M2."""
    same_base(M.base, M2.base)
    L = M.base
    return all(any(L.le(e, f) for f in M2.outcomes) for e in M.outcomes)


def refinement_map(M, M2):
    """The map sending each outcome of M to the unique outcome of M2 above it."""
    same_base(M.base, M2.base)
    L = M.base
    out = {}
    for e in M.sorted():
        above = [f for f in M2.sorted() if L.le(e, f)]
        if not above:
            raise NotFiner("outcome has no coarser outcome above it", (e,))
        if len(above) > 1:
            # cannot happen for valid measurements; kept as a loud guard
            raise NotFiner("outcome lies below two coarser outcomes", (e, *above))
        out[e] = above[0]
    return out


def measurement_to_fba(M):
    L = M.base
    outs = M.sorted()
    elems = set()
    for r in range(len(outs) + 1):
        for c in itertools.combinations(outs, r):
            elems.add(L.join_all(c))
    return BooleanSubalgebra(L, frozenset(elems))


def fba_to_measurement(B):
    return FiniteMeasurement(B.base, frozenset(B.atoms()))


def pi_b(B, x):
    """Least element of B above ``x``."""
    L = B.base
    return L.meet_all(y for y in B.elems if L.le(x, y))


def sem(L, x):
    """The subalgebra ``{top, x, x', bot}``."""
    return BooleanSubalgebra(L, frozenset({L.top, x, L.oc(x), L.bot}))


def sem2(L, x, y):
    """The subalgebra generated by the chain ``x <= y``."""
    if not L.le(x, y):
        raise NotComparable("sem2 needs x <= y", (x, y))
    xo, yo = L.oc(x), L.oc(y)
    elems = {L.top, y, L.join(x, yo), xo, x, L.meet(y, xo), yo, L.bot}
    return BooleanSubalgebra(L, frozenset(elems))


def enumerate_measurements(L, cap=None):
    """All finite measurements, ordered by size then sorted outcome indices."""
    require_small(L, cap, "measurement enumeration")
    nonzero = [x for x in range(L.n) if x != L.bot]
    # orth[x]: bitset of nonzero elements orthogonal to x
    orth = {x: L.down[L.oc(x)] & ~(1 << L.bot) for x in nonzero}
    found = []

    def walk(start, chosen, allowed, acc):
        if acc == L.top and chosen:
            found.append(tuple(chosen))
            # any further orthogonal element would have to be below top' = bot
            return
        for i in range(start, len(nonzero)):
            x = nonzero[i]
            if allowed >> x & 1:
                chosen.append(x)
                walk(i + 1, chosen, allowed & orth[x], L.join(acc, x))
                chosen.pop()

    walk(0, [], (1 << L.n) - 1, L.bot)
    found.sort(key=canonical_key)
    return [FiniteMeasurement(L, frozenset(c)) for c in found]


def enumerate_fbas(L, cap=None):
    """All finite boolean subalgebras, ordered by size then sorted elements."""
    fbas = {measurement_to_fba(M).elems for M in enumerate_measurements(L, cap)}
    return [BooleanSubalgebra(L, e) for e in sorted(fbas, key=canonical_key)]
