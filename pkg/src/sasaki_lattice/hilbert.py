"""Constructions in the subspace lattice of Q^d / Q(i)^d.

* the non-principal filter built from the coatoms orthogonal to
  ``e0`` and ``e0 + ei``;
* the dimension-2 choice check;
* a falsification probe for atom forcing: starting from a line ``a`` and
  a subspace ``x`` not above it, look for a derivation of the zero space
  inside any Sasaki filter containing both.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .config import DEFAULT_DEPTH_CAP
from .errors import DimTooSmall, MalformedPairs, PrecondViolated
from .reports import Report
from .scalars import GaussianRational
from .subspace import (Subspace, full, inner, span, sub_join, sub_le, sub_meet,
                       sub_ortho, sub_sasaki, zero)

__all__ = [
    "nonprincipal_construction", "dim2_choice_check", "probe_atom_forcing",
    "ReachedBot", "Inconclusive", "replay_chain", "is_subspace_filter_family",
]


def _unit(d, i):
    return [Fraction(int(k == i)) for k in range(d)]


def is_subspace_filter_family(members):
    """Check ``&``-stability inside a finite family of subspaces.

    Returns ``(ok, witness)`` where the witness is an index pair whose
    Sasaki product falls outside the family.
    """
    fam = list(members)
    index = {s: i for i, s in enumerate(fam)}
    for i, x in enumerate(fam):
        for j, y in enumerate(fam):
            if sub_sasaki(x, y) not in index:
                return False, (i, j)
    return True, None


def nonprincipal_construction(d):
    """Coatoms ``G_i = span(f_i)'`` with ``f_0 = e_0``, ``f_i = e_0 + e_i``.

    The f_i are pairwise non-orthogonal, so ``G_i & G_j = G_j`` and
    ``{full} + {G_i}`` is a proper Sasaki filter; the G_i meet in zero,
    so no line lies below all of them.
    """
    if d < 3:
        raise DimTooSmall(f"construction needs d >= 3, got {d}")
    e0 = _unit(d, 0)
    fs = [e0] + [[a + b for a, b in zip(e0, _unit(d, i))] for i in range(1, d)]
    G = [sub_ortho(span([f], d)) for f in fs]
    top = full(d)
    members = [top] + G

    products = {(i, j): inner(fs[i], fs[j]) for i in range(d) for j in range(d) if i != j}
    nonorth = all(v != 0 for v in products.values())
    pair_ok = all(sub_sasaki(G[i], G[j]) == G[j]
                  for i in range(d) for j in range(d) if i != j)
    closed, w = is_subspace_filter_family(members)
    upward = all(g.rank == d - 1 for g in G)  # coatoms: only full lies strictly above
    meet = top
    for g in G:
        meet = sub_meet(meet, g)
    bottom_free = all(not m.is_zero() for m in members)
    report = Report(
        f"nonprincipal-{d}",
        nonorth and pair_ok and closed and upward and meet.is_zero() and bottom_free,
        witness=w,
        details={
            "f": [[str(x) for x in f] for f in fs],
            "G": [[[str(x) for x in r] for r in g.basis] for g in G],
            "inner_products": {f"{i},{j}": str(v) for (i, j), v in sorted(products.items())},
            "pairwise_nonorthogonal": nonorth,
            "G_i&G_j=G_j": pair_ok,
            "sasaki_stable": closed,
            "meet_of_G_is_zero": meet.is_zero(),
            "proper": bottom_free,
        })
    return members, report


def dim2_choice_check(pairs, choice):
    """Whether ``choice`` plus the full space is a Sasaki filter.

    ``pairs`` are (line, line) pairs of mutually orthogonal lines in a
    2-dimensional space; ``choice`` lists chosen lines, each a member of
    some pair.
    """
    if not pairs:
        raise MalformedPairs("no pairs given")
    d = pairs[0][0].dim
    if d != 2:
        raise MalformedPairs(f"pairs must live in a 2-dimensional space, got {d}")
    known = set()
    for p, q in pairs:
        if p.dim != 2 or q.dim != 2 or p.rank != 1 or q.rank != 1:
            raise MalformedPairs("each pair must consist of two lines of the plane")
        if sub_ortho(p) != q:
            raise MalformedPairs("pair members are not orthogonal")
        known.update((p, q))
    for c in choice:
        if c not in known:
            raise MalformedPairs("chosen line does not belong to any pair")
    family = list(dict.fromkeys(list(choice) + [full(2)]))
    ok, _ = is_subspace_filter_family(family)
    return ok


# ---------------------------------------------------------------------------
# atom-forcing probe


@dataclass
class ReachedBot:
    depth: int
    chain: list = field(default_factory=list)
    verified: bool = False

    outcome = "ReachedBot"


@dataclass
class Inconclusive:
    depth: int
    explored: int = 0
    reason: str = ""

    outcome = "Inconclusive"


def _is_rational(sub):
    return all(not isinstance(x, GaussianRational) for r in sub.basis for x in r)


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _prim(w):
    """Primitive integer vector with positive leading entry, or None for zero."""
    den = 1
    for x in w:
        q = Fraction(x).denominator
        den = den * q // gcd(den, q)
    v = [int(Fraction(x) * den) for x in w]
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return None
    v = [x // g for x in v]
    lead = next(x for x in v if x)
    return tuple(v) if lead > 0 else tuple(-x for x in v)


def _conic_point(u, v, m, n):
    """Point ``(m:n)`` on the conic of projections of ``u`` onto planes through ``v``.

    For ``d`` orthogonal to ``u``, the projection of ``u`` onto
    ``span(v, w)`` is ``w`` when ``w ~ (u.v)|d|^2 u + |u|^2 (v.d) d``.
    """
    d1 = _cross(u, v)
    d2 = _cross(u, d1)
    dd = tuple(n * x + m * y for x, y in zip(d1, d2))
    uv, uu, vd, nd = _dot(u, v), _dot(u, u), _dot(v, dd), _dot(dd, dd)
    return _prim(tuple(uv * nd * a + uu * vd * b for a, b in zip(u, dd)))


def _conic_hit(u, v, z):
    """A rational conic point ``w`` of ``(u, v)`` with ``w . z = 0``, or None.

    Parametrize ``d = s*d1 + t*d2`` over the plane orthogonal to ``u``; the
    condition ``w . z = 0`` is a binary quadratic form in ``(s, t)`` whose
    rational roots exist iff its discriminant is a square.
    """
    d1 = _cross(u, z)
    if d1 == (0, 0, 0):
        return None
    d2 = _cross(u, d1)
    uv, uu, uz = _dot(u, v), _dot(u, u), _dot(u, z)
    A = uv * uz * _dot(d1, d1) + uu * _dot(v, d1) * _dot(d1, z)
    C = uv * uz * _dot(d2, d2) + uu * _dot(v, d2) * _dot(d2, z)
    B = uu * (_dot(v, d1) * _dot(d2, z) + _dot(v, d2) * _dot(d1, z)) + 2 * uv * uz * _dot(d1, d2)
    disc = B * B - 4 * A * C
    if disc < 0:
        return None
    r = isqrt(disc)
    if r * r != disc:
        return None
    roots = [(1, 0), (-C, B)] if A == 0 else [(-B + r, 2 * A), (-B - r, 2 * A)]
    for s, t in roots:
        dd = tuple(s * p + t * q for p, q in zip(d1, d2))
        if dd == (0, 0, 0):
            continue
        w = _prim(tuple(uv * _dot(dd, dd) * a + uu * _dot(v, dd) * b for a, b in zip(u, dd)))
        if w is not None and w not in (u, v) and _dot(w, z) == 0:
            return w
    return None


_CONIC_PARAMS = ((0, 1), (1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (2, 1), (-2, 1))


def _line(v):
    return span([list(v)], 3)


def replay_chain(chain):
    """Re-derive every step of a certificate with the generic subspace code.

    Steps: ``("given", S)``, ``("sasaki", X, Y, R)`` meaning ``X & Y = R``,
    ``("join", X, Y, R)``, ``("up", X, Y)`` meaning ``X <= Y``.  Every
    operand must have been produced by an earlier step.
    """
    have = set()
    for step in chain:
        kind = step[0]
        if kind == "given":
            have.add(step[1])
            continue
        if kind == "up":
            _, X, Y = step
            if X not in have or not sub_le(X, Y):
                return False
            have.add(Y)
            continue
        _, X, Y, R = step
        if X not in have or Y not in have:
            return False
        got = sub_sasaki(X, Y) if kind == "sasaki" else sub_join(X, Y)
        if got != R:
            return False
        have.add(R)
    return bool(chain) and chain[-1][-1].is_zero()


def probe_atom_forcing(a, x, depth_cap=DEFAULT_DEPTH_CAP, conic_lines=12):
    """Search for the zero space in the Sasaki filter generated by ``{a, x}``.

    Each round first closes the family generated by ``a`` and ``x`` under
    Sasaki products and joins.  For rational inputs in dimension 3 it then
    also uses upward closure, on a separate pool of lines.  Projecting a
    line ``u`` onto a plane through another member line ``v`` gives a
    point of a conic through ``u`` and ``v``; a rational conic point
    orthogonal to a third member line ``z`` yields zero.  At most
    ``conic_lines`` lines are kept for that phase.

    Returns :class:`ReachedBot` with a replayable derivation chain, or
    :class:`Inconclusive` once ``depth_cap`` rounds are spent.
    """
    if a.rank != 1:
        raise PrecondViolated("a must be a line")
    if a.dim != x.dim:
        raise PrecondViolated("a and x live in different spaces")
    if a.dim < 3:
        raise PrecondViolated("ambient dimension must be at least 3")
    if sub_le(a, x):
        raise PrecondViolated("a lies below x")
    if depth_cap <= 0:
        return Inconclusive(0, 0, "depth cap is zero")

    origin = {a: ("given", a), x: ("given", x)}
    family = [a, x]
    use_conics = a.dim == 3 and _is_rational(a) and _is_rational(x)
    lines = {}          # primitive int vector -> Subspace
    tried = set()

    def chain_to(target):
        out, seen = [], set()

        def visit(s):
            if s in seen:
                return
            seen.add(s)
            step = origin[s]
            if step[0] == "up":
                visit(step[1])
            elif step[0] != "given":
                visit(step[1])
                visit(step[2])
            out.append(step)

        visit(target)
        return out

    def found(depth, target):
        chain = chain_to(target)
        return ReachedBot(depth, chain, replay_chain(chain))

    for depth in range(1, depth_cap + 1):
        new = []
        for X, Y in itertools.product(list(family), repeat=2):
            for kind, R in (("sasaki", sub_sasaki(X, Y)), ("join", sub_join(X, Y))):
                if R not in origin:
                    origin[R] = (kind, X, Y, R)
                    new.append(R)
                    if R.is_zero():
                        return found(depth, R)
        family.extend(new)

        if not use_conics:
            if not new:
                return Inconclusive(depth, len(family), "family closed without reaching zero")
            continue

        for s in family:
            if s.rank == 1 and len(lines) < conic_lines:
                lines.setdefault(_prim(s.basis[0]), s)
        keys = list(lines)
        for u, v in itertools.permutations(keys, 2):
            for z in keys:
                if z in (u, v) or (u, v, z) in tried:
                    continue
                tried.add((u, v, z))
                w = _conic_hit(u, v, z)
                if w is None:
                    continue
                U, V, Z, W = lines[u], lines[v], lines[z], _line(w)
                plane = span([list(v), list(w)], 3)
                origin.setdefault(plane, ("up", V, plane))
                origin.setdefault(W, ("sasaki", U, plane, W))
                zero3 = zero(3)
                origin[zero3] = ("sasaki", W, Z, zero3)
                return found(depth, zero3)
        grown = False
        for u, v in itertools.permutations(keys, 2):
            for m, n in _CONIC_PARAMS:
                if len(lines) >= conic_lines:
                    break
                w = _conic_point(u, v, m, n)
                if w is None or w in lines:
                    continue
                W = _line(w)
                plane = span([list(v), list(w)], 3)
                origin.setdefault(plane, ("up", lines[v], plane))
                origin.setdefault(W, ("sasaki", lines[u], plane, W))
                lines[w] = W
                grown = True
        if not new and not grown:
            return Inconclusive(depth, len(family), "search space exhausted without reaching zero")
    return Inconclusive(depth_cap, len(family), "depth cap reached")
