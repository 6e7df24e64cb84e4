"""Exact subspaces of Q^d or Q(i)^d in reduced row-echelon form.

The inner product is ``<u, v> = sum(conj(u_k) * v_k)``.  Because the RREF
of a row space is unique, two ``Subspace`` values are equal exactly when
they span the same space.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimMismatch, ZeroVector
from .scalars import normalize, parse_scalar

__all__ = [
    "Subspace", "rref", "span", "zero", "full", "sub_meet", "sub_join", "sub_ortho",
    "sub_sasaki", "sasaki_by_projection", "sub_le", "inner", "project",
    "orthogonal_basis", "null_space", "parse_vectors", "parse_subspaces",
]


def rref(rows, ncols):
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    m = [[normalize(x) for x in r] for r in rows]
    for r in m:
        if len(r) != ncols:
            raise DimMismatch(f"row of length {len(r)} in a {ncols}-dimensional space")
    pivots = []
    lead = 0
    for c in range(ncols):
        piv = next((i for i in range(lead, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        p = m[lead][c]
        if p != 1:
            m[lead] = [normalize(x / p) for x in m[lead]]
        for i in range(len(m)):
            if i != lead and m[i][c] != 0:
                f = m[i][c]
                m[i] = [normalize(a - f * b) for a, b in zip(m[i], m[lead])]
        pivots.append(c)
        lead += 1
        if lead == len(m):
            break
    return tuple(tuple(r) for r in m[:lead]), tuple(pivots)


def null_space(rows, ncols):
    """Basis of ``{v : r . v = 0 for every row r}`` (no conjugation)."""
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = normalize(-row[f])
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    dim: int
    basis: tuple

    @property
    def rank(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.rank == self.dim

    def vectors(self):
        return [list(r) for r in self.basis]

    def __repr__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(dim={self.dim}, span{{{rows}}})"


def span(vectors, dim=None):
    vecs = [list(v) for v in vectors]
    if dim is None:
        if not vecs:
            raise ValueError("span of no vectors needs an explicit dim")
        dim = len(vecs[0])
    red, _ = rref(vecs, dim)
    return Subspace(dim, red)


def zero(dim):
    return Subspace(dim, ())


def full(dim):
    return span([[1 if i == j else 0 for j in range(dim)] for i in range(dim)], dim)


def _same_dim(*subs):
    d = subs[0].dim
    for s in subs[1:]:
        if s.dim != d:
            raise DimMismatch(f"ambient dimensions differ: {d} vs {s.dim}")
    return d


def inner(u, v):
    return normalize(sum((x.conjugate() * y for x, y in zip(u, v)), Fraction(0)))


def sub_join(A, B):
    d = _same_dim(A, B)
    return span(list(A.basis) + list(B.basis), d)


def sub_ortho(A):
    d = A.dim
    conj_rows = [[x.conjugate() for x in r] for r in A.basis]
    return span(null_space(conj_rows, d), d) if conj_rows else full(d)


def sub_meet(A, B):
    """Intersection by the kernel method.

    Coefficient vectors ``c`` with ``sum c_i a_i - sum c'_j b_j = 0`` form
    the null space of the transposed stacked matrix; each one yields
    ``sum c_i a_i`` in the intersection.
    """
    d = _same_dim(A, B)
    if A.is_zero() or B.is_zero():
        return zero(d)
    stacked = list(A.basis) + [[-x for x in r] for r in B.basis]
    transposed = [[stacked[i][k] for i in range(len(stacked))] for k in range(d)]
    coeffs = null_space(transposed, len(stacked))
    ra = A.rank
    vecs = []
    for c in coeffs:
        v = [Fraction(0)] * d
        for i in range(ra):
            if c[i] != 0:
                v = [a + c[i] * b for a, b in zip(v, A.basis[i])]
        vecs.append(v)
    return span(vecs, d) if vecs else zero(d)


def sub_le(A, B):
    _same_dim(A, B)
    return sub_join(A, B) == B


def sub_sasaki(X, Y):
    """``(X v Y') ^ Y``."""
    return sub_meet(sub_join(X, sub_ortho(Y)), Y)


def orthogonal_basis(A):
    """Gram-Schmidt without normalization (stays in the base field)."""
    out = []
    for r in A.basis:
        v = list(r)
        for u in out:
            c = inner(u, v) / inner(u, u)
            v = [normalize(a - c * b) for a, b in zip(v, u)]
        out.append(v)
    return out


def project(v, Y, ortho_basis=None):
    """Orthogonal projection of vector ``v`` onto ``Y``."""
    ob = orthogonal_basis(Y) if ortho_basis is None else ortho_basis
    out = [Fraction(0)] * Y.dim
    for u in ob:
        c = inner(u, v) / inner(u, u)
        out = [normalize(a + c * b) for a, b in zip(out, u)]
    return out


def sasaki_by_projection(X, Y):
    """Span of the orthogonal projections of X's basis onto Y."""
    d = _same_dim(X, Y)
    ob = orthogonal_basis(Y)
    vecs = [project(r, Y, ob) for r in X.basis]
    return span(vecs, d) if vecs else zero(d)


def parse_vectors(text):
    """One vector per line, whitespace-separated scalars."""
    vecs = []
    for line in text.splitlines():
        toks = line.split("#", 1)[0].split()
        if toks:
            vecs.append([parse_scalar(t) for t in toks])
    return vecs


def parse_subspaces(text, dim=None):
    """Blank-line separated groups of vectors, each group spanning one subspace."""
    groups, cur = [], []
    for line in text.splitlines() + [""]:
        if line.strip().startswith("#"):
            continue
        toks = line.split("#", 1)[0].split()
        if toks:
            cur.append([parse_scalar(t) for t in toks])
        elif cur:
            groups.append(cur)
            cur = []
    out = []
    for g in groups:
        d = dim if dim is not None else len(g[0])
        if any(len(v) != d for v in g):
            raise DimMismatch("vectors in a group have different lengths")
        if all(all(x == 0 for x in v) for v in g):
            raise ZeroVector("group spans the zero space")
        out.append(span(g, d))
    return out
