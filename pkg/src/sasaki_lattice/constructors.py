"""Standard finite OMLs: boolean algebras, MO(k), Greechie pastings."""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass

from .errors import OmlError, PastingNotOrthomodular
from .oml import verify_oml

__all__ = ["GreechieDiagram", "boolean_algebra", "mo", "from_greechie",
           "parse_greechie", "hexagon_tables", "horizontal_sum"]


def _atom_names(k):
    if k <= 26:
        return list(string.ascii_lowercase[:k])
    return [f"x{i}" for i in range(k)]


def _from_atom_sets(sets, names, complement):
    """Build an OML whose elements are atom sets ordered by inclusion.

    ``sets`` must already be in canonical order; ``complement[i]`` is the
    index of the orthocomplement of ``sets[i]``.
    """
    n = len(sets)
    leq = [[sets[i] <= sets[j] for j in range(n)] for i in range(n)]
    full = max(sets, key=len)
    labels = []
    for s in sets:
        if not s:
            labels.append("0")
        elif s == full:
            labels.append("1")
        else:
            labels.append("+".join(names[i] for i in sorted(s)))
    return verify_oml(n, leq, complement, labels)


def boolean_algebra(k):
    """The powerset of ``k`` atoms with set complement."""
    if k < 1:
        raise ValueError("boolean_algebra needs k >= 1 (k = 0 is the trivial lattice)")
    names = _atom_names(k)
    universe = frozenset(range(k))
    sets = [frozenset(c) for r in range(k + 1)
            for c in itertools.combinations(range(k), r)]
    index = {s: i for i, s in enumerate(sets)}
    complement = [index[universe - s] for s in sets]
    return _from_atom_sets(sets, names, complement)


def mo(k):
    """MO(k): ``k`` complementary atom pairs, pairwise incomparable.

    Index layout: 0 is bottom, then ``a, a', b, b', ...``, last is top.
    """
    if k < 1:
        raise ValueError("mo needs k >= 1")
    names = _atom_names(k)
    n = 2 * k + 2
    top = n - 1
    labels = ["0"]
    for name in names:
        labels += [name, name + "'"]
    labels.append("1")
    leq = [[False] * n for _ in range(n)]
    for x in range(n):
        leq[x][x] = True
        leq[0][x] = True
        leq[x][top] = True
    ortho = [top] + [i + 1 if i % 2 == 1 else i - 1 for i in range(1, n - 1)] + [0]
    return verify_oml(n, leq, ortho, labels)


@dataclass(frozen=True)
class GreechieDiagram:
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("a Greechie diagram needs at least one block")
        for b in blocks:
            if len(b) < 2:
                raise ValueError(f"block {b} has fewer than 2 atoms")
            if len(set(b)) != len(b):
                raise ValueError(f"block {b} repeats an atom")
        for b, c in itertools.combinations(blocks, 2):
            shared = set(b) & set(c)
            if len(shared) > 1:
                raise ValueError(f"blocks {b} and {c} share {len(shared)} atoms")

    @property
    def atoms(self):
        return sorted({a for b in self.blocks for a in b})


def parse_greechie(text):
    """One block per line, whitespace-separated atom labels, ``#`` comments."""
    blocks = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if line:
            blocks.append(line)
    return GreechieDiagram(blocks)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def from_greechie(g):
    """Paste the boolean blocks of ``g`` along shared atoms.

    Every block subset ``(B, S)`` is a candidate element.  Two candidates
    are glued when their atom sets coincide or their in-block complements
    coincide; glued classes are then identified by the set of atoms below
    them, ordered by inclusion, and handed to ``verify_oml``.
    """
    if not isinstance(g, GreechieDiagram):
        g = GreechieDiagram(g)
    names = g.atoms
    pos = {a: i for i, a in enumerate(names)}
    blocks = [frozenset(pos[a] for a in b) for b in g.blocks]

    reps = []
    for bi, b in enumerate(blocks):
        members = sorted(b)
        for r in range(len(members) + 1):
            for c in itertools.combinations(members, r):
                reps.append((bi, frozenset(c)))
    uf = _UnionFind(len(reps))
    by_set, by_comp = {}, {}
    for i, (bi, s) in enumerate(reps):
        comp = blocks[bi] - s
        if s in by_set:
            uf.union(i, by_set[s])
        else:
            by_set[s] = i
        if comp in by_comp:
            uf.union(i, by_comp[comp])
        else:
            by_comp[comp] = i

    atomset = {}
    for i, (_, s) in enumerate(reps):
        root = uf.find(i)
        atomset[root] = atomset.get(root, frozenset()) | s
    rep_set = [atomset[uf.find(i)] for i in range(len(reps))]

    sets = sorted(set(rep_set), key=lambda s: (len(s), sorted(names[i] for i in s)))
    index = {s: i for i, s in enumerate(sets)}
    complement = [None] * len(sets)
    for i, (bi, s) in enumerate(reps):
        x = index[rep_set[i]]
        y = index[rep_set[reps.index((bi, blocks[bi] - s))]]
        if complement[x] is None:
            complement[x] = y
        elif complement[x] != y:
            raise PastingNotOrthomodular(
                "pasting gives an element two different orthocomplements",
                (x, complement[x], y))

    n = len(sets)
    leq = [[sets[i] <= sets[j] for j in range(n)] for i in range(n)]
    labels = []
    for i, s in enumerate(sets):
        if not s:
            labels.append("0")
        elif i == n - 1:
            labels.append("1")
        elif len(s) == 1:
            labels.append(names[next(iter(s))])
        elif len(sets[complement[i]]) == 1:
            labels.append(names[next(iter(sets[complement[i]]))] + "'")
        else:
            labels.append("+".join(names[a] for a in sorted(s)))
    try:
        return verify_oml(n, leq, complement, labels)
    except OmlError as exc:
        raise PastingNotOrthomodular(
            f"pasting is not an orthomodular lattice: {exc.args[0]}", exc.witness, cause=exc) from exc


def horizontal_sum(*ks):
    """Boolean blocks of the given sizes glued only at bottom and top."""
    blocks = []
    counter = 0
    for k in ks:
        blocks.append([f"p{counter + i}" for i in range(k)])
        counter += k
    return from_greechie(GreechieDiagram(blocks))


def hexagon_tables():
    """Raw tables of the benzene-ring ortholattice O6.

    ``0 < a < b' < 1`` and ``0 < b < a' < 1``.  It is an ortholattice but
    not orthomodular, so it is returned unvalidated as
    ``(n, leq, ortho, labels)``.
    """
    labels = ["0", "a", "b", "a'", "b'", "1"]
    n = 6
    rel = {(0, x) for x in range(n)} | {(x, 5) for x in range(n)} | {(x, x) for x in range(n)}
    rel |= {(1, 4), (2, 3)}
    leq = [[(i, j) in rel for j in range(n)] for i in range(n)]
    ortho = [5, 3, 4, 1, 2, 0]
    return n, leq, ortho, labels
