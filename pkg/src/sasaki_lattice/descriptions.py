"""Partial descriptions: coherent choices of a non-bottom element per subalgebra."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .config import DEFAULT_SEED, DEFAULT_TABLE_CAP
from .errors import ImproperFilter, InvalidDescription, NotASasakiFilter
from .filters import SasakiFilter, enumerate_filters, find_filter_violation
from .measurements import enumerate_fbas, pi_b, sem
from .oml import FiniteOml, mask_of
from .reports import Report

__all__ = [
    "PartialDescription", "make_description", "constant_top", "validate_e1",
    "validate_e2", "check_e1_iff_e2", "description_to_filter", "filter_to_description",
    "roundtrip_check", "enumerate_descriptions", "sem_fixpoint_check", "candidate_count",
]


class _Tables:
    """Per-lattice cache of the subalgebra list and the projections onto each."""

    def __init__(self, L, fbas):
        self.L = L
        self.fbas = tuple(fbas)
        self.pos = {B.elems: i for i, B in enumerate(self.fbas)}
        self.pi = [[pi_b(B, x) for x in range(L.n)] for B in self.fbas]
        self.sub = [[B1.elems <= B2.elems for B2 in self.fbas] for B1 in self.fbas]
        self.choices = [sorted(x for x in B.elems if x != L.bot) for B in self.fbas]


_CACHE = {}


def _tables(L, fbas=None):
    key = id(L)
    hit = _CACHE.get(key)
    if hit is not None and hit.L is L and (fbas is None or tuple(fbas) == hit.fbas):
        return hit
    t = _Tables(L, fbas if fbas is not None else enumerate_fbas(L))
    _CACHE[key] = t
    return t


@dataclass(frozen=True)
class PartialDescription:
    """Values ``d(B)`` listed in the canonical subalgebra order."""
    base: FiniteOml = field(compare=False, repr=False)
    fbas: tuple = field(compare=False, repr=False)
    values: tuple

    def __call__(self, B):
        return self.values[_tables(self.base, self.fbas).pos[B.elems]]

    def items(self):
        return zip(self.fbas, self.values)

    def measurement_view(self, B):
        """Outcomes of B's measurement that are not ruled out."""
        L = self.base
        v = self(B)
        return frozenset(o for o in B.atoms() if L.le(o, v))

    def to_json(self):
        return [{"fba": B.sorted(), "value": v} for B, v in self.items()]


def make_description(L, values, fbas=None):
    """Build from a value list (canonical order) or a ``{fba: value}`` mapping.

    Enforces ``d(B) in B`` and ``d(B) != bot``; coherence is checked
    separately by :func:`validate_e1`.
    """
    t = _tables(L, fbas)
    if isinstance(values, dict):
        vals = [None] * len(t.fbas)
        for B, v in values.items():
            key = B.elems if hasattr(B, "elems") else frozenset(B)
            vals[t.pos[key]] = v
        if any(v is None for v in vals):
            raise InvalidDescription("description is not total", ())
    else:
        vals = list(values)
        if len(vals) != len(t.fbas):
            raise InvalidDescription("value count differs from subalgebra count", ())
    for i, (B, v) in enumerate(zip(t.fbas, vals)):
        if v not in B.elems:
            raise InvalidDescription("value is not in its subalgebra", (i, v))
        if v == L.bot:
            raise InvalidDescription("value is bottom", (i,))
    return PartialDescription(L, t.fbas, tuple(vals))


def constant_top(L, fbas=None):
    t = _tables(L, fbas)
    return PartialDescription(L, t.fbas, (L.top,) * len(t.fbas))


def _e1_witness(t, vals):
    for i in range(len(vals)):
        row = t.pi[i]
        sub = t.sub[i]
        for j in range(len(vals)):
            if sub[j] and vals[i] != row[vals[j]]:
                return (i, j)
    return None


def _e2_witness(t, vals):
    le = t.L.leq
    for i in range(len(vals)):
        row = t.pi[i]
        for j in range(len(vals)):
            if not le[vals[i]][row[vals[j]]]:
                return (i, j)
    return None


def _report(name, d, w):
    if w is None:
        return Report(name, True)
    i, j = w
    return Report(name, False, witness={
        "B1": d.fbas[i].sorted(), "B2": d.fbas[j].sorted(),
        "d(B1)": d.values[i], "d(B2)": d.values[j]})


def validate_e1(d):
    """``B1 <= B2`` implies ``d(B1) = pi_{B1}(d(B2))``."""
    return _report("E1", d, _e1_witness(_tables(d.base, d.fbas), d.values))


def validate_e2(d):
    """``d(B1) <= pi_{B1}(d(B2))`` for every pair."""
    return _report("E2", d, _e2_witness(_tables(d.base, d.fbas), d.values))


def candidate_count(L, fbas=None):
    t = _tables(L, fbas)
    return math.prod(len(c) for c in t.choices)


def check_e1_iff_e2(L, cap=DEFAULT_TABLE_CAP, samples=100_000, seed=DEFAULT_SEED):
    """Compare E1 and E2 on every candidate table (or a seeded sample)."""
    t = _tables(L)
    total = candidate_count(L)
    if total <= cap:
        tables = itertools.product(*t.choices)
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        tables = (tuple(rng.choice(c) for c in t.choices) for _ in range(samples))
        mode = "sampled"
    seen = both = 0
    for vals in tables:
        seen += 1
        e1 = _e1_witness(t, vals) is None
        e2 = _e2_witness(t, vals) is None
        if e1 != e2:
            return Report("E1<=>E2", False, witness={"values": list(vals), "E1": e1, "E2": e2},
                          details={"mode": mode, "tables": seen})
        both += e1
    return Report("E1<=>E2", True,
                  details={"mode": mode, "tables": seen, "valid": both, "candidates": total})


def enumerate_descriptions(L, fbas=None):
    """All E1-coherent descriptions.

    Subalgebras are assigned largest first; once some superset of B has a
    value, E1 forces ``d(B)``, so only maximal subalgebras branch.
    """
    t = _tables(L, fbas)
    k = len(t.fbas)
    order = sorted(range(k), key=lambda i: (-len(t.fbas[i]), i))
    vals = [None] * k
    out = []

    def walk(pos):
        if pos == k:
            if _e1_witness(t, vals) is None:
                out.append(tuple(vals))
            return
        i = order[pos]
        forced = None
        for j in order[:pos]:
            if t.sub[i][j]:
                v = t.pi[i][vals[j]]
                if forced is None:
                    forced = v
                elif forced != v:
                    return
        if forced is not None:
            if forced == t.L.bot:
                return
            vals[i] = forced
            walk(pos + 1)
        else:
            for v in t.choices[i]:
                vals[i] = v
                walk(pos + 1)
        vals[i] = None

    walk(0)
    out.sort()
    return [PartialDescription(L, t.fbas, v) for v in out]


def sem_fixpoint_check(d):
    """``d(sem(d(B))) = d(B)`` for every B."""
    L = d.base
    for B, v in d.items():
        if d(sem(L, v)) != v:
            return Report("sem-fixpoint", False, witness={"B": B.sorted(), "d(B)": v})
    return Report("sem-fixpoint", True)


def description_to_filter(d):
    """The image of ``d``; raises if it is not a proper Sasaki filter."""
    L = d.base
    mask = mask_of(d.values)
    w = find_filter_violation(L, mask)
    if w is not None:
        raise InvalidDescription("image is not a Sasaki filter", w)
    if mask >> L.bot & 1:
        raise InvalidDescription("image contains bottom", (L.bot,))
    return SasakiFilter(L, mask)


def filter_to_description(F, fbas=None):
    """``d_F(B)``: least element of F inside B."""
    L = F.base
    if not F.proper:
        raise ImproperFilter("filter contains bottom", (L.bot,))
    t = _tables(L, fbas)
    vals = []
    for i, B in enumerate(t.fbas):
        trace = [x for x in B.elems if x in F]
        low = L.meet_all(trace)
        if not trace or low not in F or low not in B.elems:
            raise NotASasakiFilter("trace has no least element", (i,))
        vals.append(low)
    return PartialDescription(L, t.fbas, tuple(vals))


def roundtrip_check(L):
    """Both compositions of the filter/description maps are identities."""
    filters = [F for F in enumerate_filters(L).filters if F.proper]
    descs = enumerate_descriptions(L)
    for F in filters:
        if description_to_filter(filter_to_description(F)) != F:
            return Report("roundtrip", False, witness={"filter": F.sorted()})
    for d in descs:
        if filter_to_description(description_to_filter(d)) != d:
            return Report("roundtrip", False, witness={"description": list(d.values)})
    return Report("roundtrip", len(filters) == len(descs),
                  details={"proper_filters": len(filters), "descriptions": len(descs)})
