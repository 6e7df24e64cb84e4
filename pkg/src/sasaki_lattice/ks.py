"""Selections of one ray per orthogonal basis with no two selected rays orthogonal.

A finite ray configuration has no such selection exactly when it is a
Kochen-Specker set.  Searching is done by backtracking over bases
(most constrained first); an independent brute force over the product of
all bases serves as an oracle at desk scale.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import DimMismatch, ZeroVector
from .oml import bits
from .reports import Report
from .scalars import GaussianRational, format_scalar, normalize
from .subspace import Subspace, inner, span, sub_join, sub_le, sub_sasaki, zero

__all__ = [
    "RayConfig", "build_config", "search_coloring", "product_oracle", "Selection",
    "NoSelection", "selection_to_filter_check", "cabello_18", "canonical_ray",
    "SCOPE_NOTE",
]

SCOPE_NOTE = ("finite configuration only: a NoSelection result certifies a finite "
              "witness; the statement over every basis of the full space is not "
              "decided by this search")


def canonical_ray(vec):
    """Scale-free representative of a nonzero vector.

    Rational vectors become primitive integer vectors with a positive
    leading entry; vectors with non-real Gaussian entries are scaled so the
    leading entry is 1.
    """
    v = [normalize(x) for x in vec]
    if all(x == 0 for x in v):
        raise ZeroVector("zero vector cannot define a ray")
    if any(isinstance(x, GaussianRational) for x in v):
        lead = next(x for x in v if x != 0)
        return tuple(normalize(x / lead) for x in v)
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


def _ray_key(vec):
    return tuple((x.re, x.im) if isinstance(x, GaussianRational) else (x, 0) for x in vec)


@dataclass(frozen=True)
class RayConfig:
    dim: int
    vectors: tuple           # canonical vectors, sorted
    orth: tuple              # orth[i]: bitset of rays orthogonal to ray i
    bases: tuple             # sorted index tuples of size dim

    @property
    def rays(self):
        return [span([list(v)], self.dim) for v in self.vectors]

    def __len__(self):
        return len(self.vectors)

    def describe(self):
        return [[format_scalar(x) for x in v] for v in self.vectors]


def _cliques(n, adj, size):
    out = []

    def walk(start, chosen, cand):
        if len(chosen) == size:
            out.append(tuple(chosen))
            return
        for i in bits(cand):
            if i < start:
                continue
            chosen.append(i)
            walk(i + 1, chosen, cand & adj[i])
            chosen.pop()

    walk(0, [], (1 << n) - 1)
    return out


def build_config(vectors, d):
    """Deduplicate rays, compute exact orthogonality and all size-``d`` cliques."""
    canon = {}
    for v in vectors:
        if len(v) != d:
            raise DimMismatch(f"vector of length {len(v)} in dimension {d}")
        c = canonical_ray(v)
        canon.setdefault(c, True)
    vecs = tuple(sorted(canon, key=_ray_key))
    n = len(vecs)
    orth = []
    for i in range(n):
        m = 0
        for j in range(n):
            if i != j and inner(vecs[i], vecs[j]) == 0:
                m |= 1 << j
        orth.append(m)
    bases = tuple(_cliques(n, orth, d)) if n else ()
    return RayConfig(d, vecs, tuple(orth), bases)


@dataclass
class Selection:
    rays: tuple
    nodes: int
    certificate: dict = field(default_factory=dict)

    found = True


@dataclass
class NoSelection:
    nodes: int
    certificate: dict = field(default_factory=dict)

    found = False


SEARCH_ORDER = ("branch on the unsatisfied basis with the fewest admissible rays "
                "(ties: lowest basis index); try its rays in ascending index order")


def _valid(cfg, chosen_mask):
    for b in cfg.bases:
        if sum(chosen_mask >> i & 1 for i in b) != 1:
            return False
    for i in bits(chosen_mask):
        if cfg.orth[i] & chosen_mask:
            return False
    return True


def search_coloring(cfg):
    """Backtracking search; deterministic given the canonical ray order."""
    base_masks = [sum(1 << i for i in b) for b in cfg.bases]
    nodes = 0

    def walk(chosen, forbidden):
        nonlocal nodes
        nodes += 1
        best, best_cands = None, None
        for k, bm in enumerate(base_masks):
            if bm & chosen:
                continue
            cands = bm & ~forbidden
            if not cands:
                return None
            if best is None or bin(cands).count("1") < bin(best_cands).count("1"):
                best, best_cands = k, cands
        if best is None:
            return chosen
        for i in bits(best_cands):
            got = walk(chosen | (1 << i), forbidden | cfg.orth[i] | (1 << i))
            if got is not None:
                return got
        return None

    result = walk(0, 0)
    cert = {"search_order": SEARCH_ORDER, "nodes": nodes, "rays": len(cfg),
            "bases": len(cfg.bases), "note": SCOPE_NOTE}
    if result is None:
        cert["result"] = "NoSelection"
        return NoSelection(nodes, cert)
    assert _valid(cfg, result), "search returned an invalid selection"
    sel = tuple(bits(result))
    cert["result"] = "Selection"
    cert["selection"] = [[format_scalar(x) for x in cfg.vectors[i]] for i in sel]
    return Selection(sel, nodes, cert)


def product_oracle(cfg):
    """Brute force over one ray per basis; returns the first valid set or None."""
    for pick in itertools.product(*cfg.bases):
        mask = 0
        for i in pick:
            mask |= 1 << i
        if _valid(cfg, mask):
            return tuple(bits(mask))
    return None


def selection_to_filter_check(cfg, selection):
    """Check the up-closure of a selection inside the finite block family.

    The family ``E`` holds the span of every subset of every basis
    (including the zero space).  ``U`` is the set of members of ``E``
    above some selected ray.  The check asks that ``U`` avoid zero and
    that ``X & Y`` lands in ``U`` whenever ``X, Y`` are in ``U`` and
    ``X & Y`` is a member of ``E``.
    """
    sel = tuple(selection.rays) if hasattr(selection, "rays") else tuple(selection)
    d = cfg.dim
    rays = cfg.rays
    for i, j in itertools.combinations(sel, 2):
        if cfg.orth[i] >> j & 1:
            return Report("selection-filter", False,
                          witness={"orthogonal_pair": [i, j],
                                   "sasaki_is_zero": sub_sasaki(rays[i], rays[j]).is_zero()})
    family = {zero(d)}
    for b in cfg.bases:
        for r in range(1, d + 1):
            for sub in itertools.combinations(b, r):
                acc = rays[sub[0]]
                for k in sub[1:]:
                    acc = sub_join(acc, rays[k])
                family.add(acc)
    chosen = [rays[i] for i in sel]
    up = [Y for Y in family if any(sub_le(s, Y) for s in chosen)]
    up_set = set(up)
    if zero(d) in up_set:
        return Report("selection-filter", False, witness={"contains_zero": True})
    checked = 0
    for X in up:
        for Y in up:
            if X == Y:
                continue
            Z = sub_sasaki(X, Y)
            if Z in family:
                checked += 1
                if Z not in up_set:
                    return Report("selection-filter", False,
                                  witness={"X": repr(X), "Y": repr(Y), "X&Y": repr(Z)})
    return Report("selection-filter", True,
                  details={"family": len(family), "up_closure": len(up),
                           "products_checked": checked, "note": SCOPE_NOTE})


# Cabello's 18-ray, 9-basis set in dimension 4 (each ray lies in two bases).
_CABELLO_BASES = (
    ((0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 0), (1, -1, 0, 0)),
    ((0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0)),
    ((1, -1, 1, -1), (1, -1, -1, 1), (1, 1, 0, 0), (0, 0, 1, 1)),
    ((1, -1, 1, -1), (1, 1, 1, 1), (1, 0, -1, 0), (0, 1, 0, -1)),
    ((0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 1), (1, 0, 0, -1)),
    ((1, -1, -1, 1), (1, 1, 1, 1), (1, 0, 0, -1), (0, 1, -1, 0)),
    ((1, 1, -1, 1), (1, 1, 1, -1), (1, -1, 0, 0), (0, 0, 1, 1)),
    ((1, 1, -1, 1), (-1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, -1)),
    ((1, 1, 1, -1), (-1, 1, 1, 1), (1, 0, 0, 1), (0, 1, -1, 0)),
)


def cabello_18():
    """Vectors of the 18-ray set, one per line of the listed bases, deduplicated."""
    seen = {}
    for b in _CABELLO_BASES:
        for v in b:
            seen.setdefault(canonical_ray(v), v)
    return [list(v) for v in seen.values()]
