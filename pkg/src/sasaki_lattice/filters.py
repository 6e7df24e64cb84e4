"""Sasaki filters and the lattice SF(L) they form under reverse inclusion.

Filters are handled as bitsets over element indices.  The empty set is
not a filter here: every filter contains top, so the least filter is
``{top}``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .config import DEFAULT_SEED, require_small
from .errors import BaseMismatch
from .measurements import enumerate_fbas
from .oml import FiniteOml, bits, mask_of, same_base
from .reports import Report

__all__ = [
    "SasakiFilter", "SfLattice", "find_filter_violation", "is_sasaki_filter",
    "principal_filter", "generate_filter", "enumerate_filters", "sf_join", "sf_meet",
    "sf_atoms", "trace_is_principal", "check_principal_trace", "embed_up_properties",
    "upset",
]


@dataclass(frozen=True)
class SasakiFilter:
    base: FiniteOml = field(compare=False, repr=False)
    mask: int

    @property
    def members(self):
        return frozenset(bits(self.mask))

    @property
    def proper(self):
        return not self.mask >> self.base.bot & 1

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def sorted(self):
        return list(bits(self.mask))

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def minimal(self):
        """Minimal members (the antichain generating the up-set)."""
        L = self.base
        return [x for x in bits(self.mask)
                if not (L.down[x] & ~(1 << x)) & self.mask]

    def labels(self):
        return [self.base.label(x) for x in self.sorted()]


def _sort_key(mask):
    return (bin(mask).count("1"), list(bits(mask)))


def _as_mask(S):
    if isinstance(S, SasakiFilter):
        return S.mask
    if isinstance(S, int):
        return S
    return mask_of(S)


def upset(L, mask):
    out = 0
    for x in bits(mask):
        out |= L.up[x]
    return out


def find_filter_violation(L, S):
    """First violation as a witness tuple, or ``None`` if S is a filter.

    Witnesses: ``("empty",)``, ``("upward", x, y)`` with x in S, x <= y and
    y not in S, or ``("sasaki", x, y, x&y)``.
    """
    mask = _as_mask(S)
    if not mask:
        return ("empty",)
    for x in bits(mask):
        missing = L.up[x] & ~mask
        if missing:
            return ("upward", x, next(bits(missing)))
    members = list(bits(mask))
    for x in members:
        for y in members:
            z = L.sasaki(x, y)
            if not mask >> z & 1:
                return ("sasaki", x, y, z)
    return None


def is_sasaki_filter(L, S):
    """``(True, None)`` or ``(False, witness)``."""
    w = find_filter_violation(L, S)
    return w is None, w


def principal_filter(L, x):
    return SasakiFilter(L, L.up[x])


def generate_filter(L, seed):
    """Least Sasaki filter containing ``seed`` (``{top}`` for an empty seed)."""
    mask = upset(L, _as_mask(seed)) | (1 << L.top)
    frontier = list(bits(mask))
    while frontier:
        members = list(bits(mask))
        added = 0
        for x in frontier:
            for y in members:
                for z in (L.sasaki(x, y), L.sasaki(y, x)):
                    if not (mask | added) >> z & 1:
                        added |= L.up[z]
        added &= ~mask
        mask |= added
        frontier = list(bits(added))
    return SasakiFilter(L, mask)


@dataclass(frozen=True)
class SfLattice:
    base: FiniteOml = field(repr=False)
    filters: tuple

    def __len__(self):
        return len(self.filters)

    def index(self, F):
        return self.filters.index(F)

    @property
    def greatest(self):
        """``{top}``: greatest under reverse inclusion."""
        return self.filters[0]

    @property
    def least(self):
        """The whole lattice."""
        return self.filters[-1]

    def proper(self):
        return [F for F in self.filters if F.proper]

    def leq(self, F, G):
        """Reverse inclusion: ``F <= G`` iff ``G`` is a subset of ``F``."""
        return G.issubset(F)

    def covers(self):
        """Covering pairs ``(i, j)`` of filter indices with ``F_i < F_j``."""
        fs = self.filters
        out = []
        for i, F in enumerate(fs):
            for j, G in enumerate(fs):
                if i == j or not (G.issubset(F) and G != F):
                    continue
                if not any(k not in (i, j) and H.issubset(F) and G.issubset(H)
                           for k, H in enumerate(fs)):
                    out.append((i, j))
        return out


def _antichains(L):
    """Yield non-empty antichains of L as bitsets, by backtracking."""
    n = L.n
    comparable = [L.up[x] | L.down[x] for x in range(n)]

    def walk(start, allowed, acc):
        for x in range(start, n):
            if allowed >> x & 1:
                nxt = acc | (1 << x)
                yield nxt
                yield from walk(x + 1, allowed & ~comparable[x], nxt)

    yield from walk(0, (1 << n) - 1, 0)


def enumerate_filters(L, cap=None):
    """All Sasaki filters of L, by size then member indices."""
    require_small(L, cap, "filter enumeration")
    found = set()
    for ac in _antichains(L):
        m = upset(L, ac)
        if m not in found and find_filter_violation(L, m) is None:
            found.add(m)
    return SfLattice(L, tuple(SasakiFilter(L, m) for m in sorted(found, key=_sort_key)))


def _family(filters):
    fs = list(filters)
    for F in fs[1:]:
        if F.base is not fs[0].base and not F.base.structurally_equal(fs[0].base):
            raise BaseMismatch("filters belong to different lattices")
    return fs


def sf_join(filters, L=None):
    """Join in SF(L): intersection.  Empty family gives the whole lattice."""
    fs = _family(filters)
    if not fs:
        if L is None:
            raise ValueError("empty family needs the lattice argument")
        return SasakiFilter(L, (1 << L.n) - 1)
    mask = fs[0].mask
    for F in fs[1:]:
        mask &= F.mask
    return SasakiFilter(fs[0].base, mask)


def sf_meet(filters, L=None):
    """Meet in SF(L): filter generated by the union.  Empty family gives ``{top}``."""
    fs = _family(filters)
    if not fs:
        if L is None:
            raise ValueError("empty family needs the lattice argument")
        return SasakiFilter(L, 1 << L.top)
    mask = 0
    for F in fs:
        mask |= F.mask
    return generate_filter(fs[0].base, mask)


def sf_atoms(sfl):
    """Maximal proper filters: the partial states."""
    proper = sfl.proper()
    return [F for F in proper
            if not any(G != F and F.issubset(G) for G in proper)]


def trace_is_principal(L, mask, fba):
    """Whether ``S`` intersected with ``fba`` is a principal filter of ``fba``."""
    trace = [x for x in fba.elems if mask >> x & 1]
    if not trace:
        return False
    low = L.meet_all(trace)
    if not mask >> low & 1 or low not in fba.elems:
        return False
    return set(trace) == {y for y in fba.elems if L.le(low, y)}


def _trace_witness(L, mask, fbas):
    for i, B in enumerate(fbas):
        if not trace_is_principal(L, mask, B):
            return i
    return None


def check_principal_trace(L, fbas=None, seed=DEFAULT_SEED, mutants=100,
                          exhaustive_limit=16):
    """S is a Sasaki filter iff every trace ``S & B`` is principal in B.

    Both directions are checked over every subset of L when ``L.n`` is at
    most ``exhaustive_limit``; additionally ``mutants`` non-filters are
    made by flipping one element of a random filter and each must produce
    a witnessing subalgebra.
    """
    if fbas is None:
        fbas = enumerate_fbas(L)
    sfl = enumerate_filters(L)
    filter_masks = {F.mask for F in sfl.filters}
    checked = 0
    if L.n <= exhaustive_limit:
        for mask in range(1 << L.n):
            is_f = mask in filter_masks
            traced = _trace_witness(L, mask, fbas) is None
            checked += 1
            if is_f != traced:
                return Report("principal-trace", False,
                              witness={"subset": list(bits(mask)), "is_filter": is_f,
                                       "all_traces_principal": traced})
    rng = random.Random(seed)
    made = 0
    attempts = 0
    while made < mutants and attempts < 100 * mutants:
        attempts += 1
        F = rng.choice(sfl.filters)
        x = rng.randrange(L.n)
        mask = F.mask ^ (1 << x)
        if mask in filter_masks:
            continue
        made += 1
        if _trace_witness(L, mask, fbas) is None:
            return Report("principal-trace", False,
                          witness={"mutant": list(bits(mask)), "reason": "no witnessing B"})
    return Report("principal-trace", made == mutants,
                  details={"subsets_checked": checked, "mutants": made,
                           "filters": len(sfl), "fbas": len(fbas)})


def embed_up_properties(L, sfl=None):
    """Report how ``x -> x^`` interacts with order, joins and meets.

    Join preservation, ``(x v y)^ = x^ & y^``, is the asserted identity.
    Meet preservation is only measured; the counterexample list is
    returned in ``details``.
    """
    if sfl is None:
        sfl = enumerate_filters(L)
    n = L.n
    ups = [principal_filter(L, x) for x in range(n)]
    injective = len({F.mask for F in ups}) == n
    order_ok = all(sfl.leq(ups[x], ups[y]) == L.le(x, y)
                   for x in range(n) for y in range(n))
    join_fail = [(x, y) for x in range(n) for y in range(n)
                 if ups[L.join(x, y)] != sf_join([ups[x], ups[y]])]
    meet_fail = [(x, y) for x in range(n) for y in range(x + 1, n)
                 if ups[L.meet(x, y)] != sf_meet([ups[x], ups[y]])]
    return Report(
        "up-embedding",
        injective and order_ok and not join_fail,
        witness=join_fail[0] if join_fail else None,
        details={
            "injective": injective,
            "order_preserving_and_reflecting": order_ok,
            "join_preserving": not join_fail,
            "meet_preserving": not meet_fail,
            "meet_counterexamples": meet_fail,
        })
