"""Finite orthomodular lattices.

A :class:`FiniteOml` is an element table (indices ``0..n-1``), a dense
order relation and an orthocomplement permutation.  Instances are only
produced by :func:`verify_oml`, which checks every axiom and precomputes
meet/join tables; after that the object is immutable and every operation is
a table lookup.

Order relations are also kept as Python-int bitsets (``up[x]`` has bit ``y``
set iff ``x <= y``), which is what the enumeration code works with.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (BaseMismatch, NotALattice, NotAnOrthocomplementation,
                     NotAPoset, NotOrthomodular, TrivialLattice)

__all__ = [
    "FiniteOml", "verify_oml", "from_relation", "meet", "join",
    "sasaki_project", "commutes", "atoms", "bits", "to_json", "from_json",
    "dumps", "loads", "same_base",
]


def bits(mask):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True, eq=False)
class FiniteOml:
    n: int
    leq: tuple
    ortho: tuple
    labels: tuple
    bot: int
    top: int
    up: tuple = field(repr=False)
    down: tuple = field(repr=False)
    meet_table: tuple = field(repr=False)
    join_table: tuple = field(repr=False)

    def le(self, x, y):
        return self.leq[x][y]

    def lt(self, x, y):
        return x != y and self.leq[x][y]

    def meet(self, x, y):
        return self.meet_table[x][y]

    def join(self, x, y):
        return self.join_table[x][y]

    def oc(self, x):
        return self.ortho[x]

    def sasaki(self, x, y):
        """``x & y = (x v y') ^ y``."""
        return self.meet_table[self.join_table[x][self.ortho[y]]][y]

    def commutes(self, x, y):
        m, j = self.meet_table, self.join_table
        return x == j[m[x][y]][m[x][self.ortho[y]]]

    def orthogonal(self, x, y):
        return self.leq[x][self.ortho[y]]

    def meet_all(self, xs):
        acc = self.top
        for x in xs:
            acc = self.meet_table[acc][x]
        return acc

    def join_all(self, xs):
        acc = self.bot
        for x in xs:
            acc = self.join_table[acc][x]
        return acc

    def atoms(self):
        """Elements covering bottom, ascending index order."""
        out = []
        for x in range(self.n):
            if x == self.bot:
                continue
            # x is an atom iff its down-set is exactly {bot, x}
            if self.down[x] == (1 << x) | (1 << self.bot):
                out.append(x)
        return out

    def covers(self):
        """Covering pairs ``(x, y)`` with ``x < y`` and nothing in between."""
        out = []
        for x in range(self.n):
            strict_up = self.up[x] & ~(1 << x)
            for y in bits(strict_up):
                between = strict_up & self.down[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return out

    def height(self, x):
        """Length of the longest chain from bottom to ``x``."""
        return self._heights[x]

    @property
    def _heights(self):
        cached = self.__dict__.get("_heights_cache")
        if cached is None:
            order = sorted(range(self.n), key=lambda i: bin(self.down[i]).count("1"))
            h = [0] * self.n
            for y in order:
                below = self.down[y] & ~(1 << y)
                h[y] = max((h[x] + 1 for x in bits(below)), default=0)
            cached = tuple(h)
            object.__setattr__(self, "_heights_cache", cached)
        return cached

    def index(self, label):
        return self.labels.index(label)

    def label(self, x):
        return self.labels[x]

    def structurally_equal(self, other):
        return (self.n == other.n and self.leq == other.leq
                and self.ortho == other.ortho and self.labels == other.labels)

    def __repr__(self):
        return f"FiniteOml(n={self.n}, labels={list(self.labels)!r})"


def same_base(a, b):
    if a is not b and not a.structurally_equal(b):
        raise BaseMismatch("operands belong to different lattices")


def _bounds(n, up, down):
    """Meet/join tables, or raise NotALattice with the first bad pair."""
    popcount = [bin(down[i]).count("1") for i in range(n)]
    meet_rows, join_rows = [], []
    for x in range(n):
        mrow, jrow = [0] * n, [0] * n
        for y in range(n):
            lower = down[x] & down[y]
            if not lower:
                raise NotALattice("pair has no lower bound", (x, y))
            best = max(bits(lower), key=popcount.__getitem__)
            if lower & ~down[best]:
                raise NotALattice("pair has no greatest lower bound", (x, y))
            mrow[y] = best
            upper = up[x] & up[y]
            if not upper:
                raise NotALattice("pair has no upper bound", (x, y))
            best = min(bits(upper), key=popcount.__getitem__)
            if upper & ~up[best]:
                raise NotALattice("pair has no least upper bound", (x, y))
            jrow[y] = best
        meet_rows.append(tuple(mrow))
        join_rows.append(tuple(jrow))
    return tuple(meet_rows), tuple(join_rows)


def verify_oml(n, leq, ortho, labels=None):
    """Validate raw tables and return a :class:`FiniteOml`.

    ``leq`` is an ``n x n`` table of truthy values, ``ortho`` a list of
    indices.  Raises the first violated axiom (``NotAPoset``,
    ``NotALattice``, ``NotAnOrthocomplementation``, ``NotOrthomodular``)
    with a witness.
    """
    if len(leq) != n or any(len(row) != n for row in leq) or len(ortho) != n:
        raise ValueError(f"tables are not consistent with n={n}")
    if labels is None:
        labels = [str(i) for i in range(n)]
    if len(labels) != n:
        raise ValueError("labels length differs from n")
    if n < 2:
        raise TrivialLattice("one-element lattice has bottom == top")
    le = tuple(tuple(bool(v) for v in row) for row in leq)

    for x in range(n):
        if not le[x][x]:
            raise NotAPoset("relation is not reflexive", (x, x))
    for x in range(n):
        for y in range(x + 1, n):
            if le[x][y] and le[y][x]:
                raise NotAPoset("relation is not antisymmetric", (x, y))
    up = tuple(mask_of(y for y in range(n) if le[x][y]) for x in range(n))
    down = tuple(mask_of(y for y in range(n) if le[y][x]) for x in range(n))
    for x in range(n):
        for y in bits(up[x]):
            missing = up[y] & ~up[x]
            if missing:
                z = next(bits(missing))
                raise NotAPoset("relation is not transitive", (x, y, z))

    full = (1 << n) - 1
    bot = next((x for x in range(n) if up[x] == full), None)
    top = next((x for x in range(n) if down[x] == full), None)
    if bot is None:
        raise NotALattice("no least element")
    if top is None:
        raise NotALattice("no greatest element")
    meet_t, join_t = _bounds(n, up, down)

    oc = tuple(int(v) for v in ortho)
    if sorted(oc) != list(range(n)):
        raise NotAnOrthocomplementation("ortho is not a permutation", ())
    for x in range(n):
        if oc[oc[x]] != x:
            raise NotAnOrthocomplementation("ortho is not an involution", (x,))
    for x in range(n):
        for y in bits(up[x]):
            if not le[oc[y]][oc[x]]:
                raise NotAnOrthocomplementation("ortho is not antitone", (x, y))
    for x in range(n):
        if meet_t[x][oc[x]] != bot:
            raise NotAnOrthocomplementation("x ^ x' is not bottom", (x,))
        if join_t[x][oc[x]] != top:
            raise NotAnOrthocomplementation("x v x' is not top", (x,))

    for x in range(n):
        for y in bits(up[x]):
            if join_t[x][meet_t[y][oc[x]]] != y:
                raise NotOrthomodular("orthomodular law fails", (x, y))

    return FiniteOml(n=n, leq=le, ortho=oc, labels=tuple(str(s) for s in labels),
                     bot=bot, top=top, up=up, down=down,
                     meet_table=meet_t, join_table=join_t)


def from_relation(n, pairs, ortho, labels=None, kind="covers"):
    """Build from a list of ``[i, j]`` pairs meaning ``i <= j``.

    ``kind="covers"`` takes the reflexive-transitive closure; ``"full"``
    uses the pairs as given (plus nothing).
    """
    table = [[False] * n for _ in range(n)]
    for i, j in pairs:
        table[i][j] = True
    if kind == "covers":
        for i in range(n):
            table[i][i] = True
        # Warshall
        for k in range(n):
            rk = table[k]
            for i in range(n):
                if table[i][k]:
                    ri = table[i]
                    for j in range(n):
                        if rk[j]:
                            ri[j] = True
    elif kind != "full":
        raise ValueError(f"unknown relation kind {kind!r}")
    return verify_oml(n, table, ortho, labels)


def to_json(L, kind="covers"):
    if kind == "covers":
        pairs = [list(p) for p in L.covers()]
    elif kind == "full":
        pairs = [[x, y] for x in range(L.n) for y in range(L.n) if L.leq[x][y]]
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return {"n": L.n, "leq_kind": kind, "leq": pairs,
            "ortho": list(L.ortho), "labels": list(L.labels)}


def from_json(obj):
    return from_relation(obj["n"], obj["leq"], obj["ortho"], obj.get("labels"),
                         kind=obj.get("leq_kind", "covers"))


def dumps(L, kind="covers"):
    return json.dumps(to_json(L, kind), sort_keys=True)


def loads(text):
    return from_json(json.loads(text))


def _check(L, *xs):
    for x in xs:
        if not 0 <= x < L.n:
            raise IndexError(f"element {x} out of range for lattice of size {L.n}")


def meet(L, x, y):
    _check(L, x, y)
    return L.meet(x, y)


def join(L, x, y):
    _check(L, x, y)
    return L.join(x, y)


def sasaki_project(L, x, y):
    _check(L, x, y)
    return L.sasaki(x, y)


def commutes(L, x, y):
    _check(L, x, y)
    return L.commutes(x, y)


def atoms(L):
    return L.atoms()
