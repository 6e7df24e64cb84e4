import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sasaki_lattice.constructors import boolean_algebra, mo
from sasaki_lattice.errors import (BaseMismatch, ContainsBot, JoinNotTop, NotBooleanSubalgebra,
                                   NotComparable, NotFiner, NotPairwiseOrthogonal, TooLarge)
from sasaki_lattice.measurements import (enumerate_fbas, enumerate_measurements,
                                         fba_to_measurement, finer_than, measurement_to_fba,
                                         pi_b, refinement_map, sem, sem2, validate_fba,
                                         validate_measurement)

from conftest import LATTICES, SMALL, brute_fbas, lattices


def brute_measurements(L):
    out = []
    nonzero = [x for x in range(L.n) if x != L.bot]
    for r in range(1, len(nonzero) + 1):
        for c in itertools.combinations(nonzero, r):
            if all(L.le(x, L.oc(y)) for x, y in itertools.combinations(c, 2)) \
                    and L.join_all(c) == L.top:
                out.append(frozenset(c))
    return out


def test_validate_measurement_examples():
    B = boolean_algebra(3)
    M = validate_measurement(B, B.atoms())
    assert len(M) == 3
    L = mo(2)
    a, b = L.index("a"), L.index("b")
    with pytest.raises(NotPairwiseOrthogonal) as ei:
        validate_measurement(L, [a, b])
    assert set(ei.value.witness) == {a, b}
    assert len(validate_measurement(L, [a, L.oc(a)])) == 2
    with pytest.raises(ContainsBot):
        validate_measurement(L, [L.bot, L.top])
    with pytest.raises(JoinNotTop):
        validate_measurement(B, B.atoms()[:2])
    with pytest.raises(ValueError):
        validate_measurement(B, [])


def test_finer_than_examples():
    B = boolean_algebra(3)
    a, b, c = B.atoms()
    atoms = validate_measurement(B, [a, b, c])
    coarse = validate_measurement(B, [B.join(a, b), c])
    assert finer_than(atoms, atoms)
    assert finer_than(atoms, coarse)
    assert not finer_than(coarse, atoms)
    L = mo(2)
    a, b = L.index("a"), L.index("b")
    assert not finer_than(validate_measurement(L, [a, L.oc(a)]),
                          validate_measurement(L, [b, L.oc(b)]))
    with pytest.raises(BaseMismatch):
        finer_than(atoms, validate_measurement(L, [L.top]))


def test_refinement_map_examples():
    B = boolean_algebra(3)
    a, b, c = B.atoms()
    atoms = validate_measurement(B, [a, b, c])
    ab = B.join(a, b)
    coarse = validate_measurement(B, [ab, c])
    assert refinement_map(atoms, atoms) == {a: a, b: b, c: c}
    assert refinement_map(atoms, coarse) == {a: ab, b: ab, c: c}
    with pytest.raises(NotFiner):
        refinement_map(coarse, atoms)


def test_fba_roundtrip_examples():
    L = mo(2)
    a = L.index("a")
    B = measurement_to_fba(validate_measurement(L, [a, L.oc(a)]))
    assert B.elems == {L.bot, a, L.oc(a), L.top}
    B2 = boolean_algebra(2)
    assert measurement_to_fba(validate_measurement(B2, B2.atoms())).elems == set(range(4))


def test_pi_b_examples():
    L = mo(2)
    a, b = L.index("a"), L.index("b")
    B = sem(L, a)
    assert pi_b(B, a) == a
    assert pi_b(B, b) == L.top
    assert pi_b(B, L.bot) == L.bot


def test_sem_examples():
    L = boolean_algebra(3)
    assert sem(L, L.top).elems == {L.bot, L.top}
    x = L.index("a")
    y = L.index("a+b")
    assert sem2(L, x, x) == sem(L, x)
    assert len(sem2(L, x, y)) == 8
    with pytest.raises(NotComparable):
        sem2(L, y, x)
    M = mo(2)
    a = M.index("a")
    assert sem2(M, M.bot, a) == sem(M, a)


def test_enumeration_examples():
    B2 = boolean_algebra(2)
    ms = enumerate_measurements(B2)
    assert [m.sorted() for m in ms] == [[B2.top], [1, 2]]
    L = mo(2)
    fbas = enumerate_fbas(L)
    assert [sorted(f.elems) for f in fbas] == [[0, 5], [0, 1, 2, 5], [0, 3, 4, 5]]
    for name, L in LATTICES.items():
        assert frozenset({L.top}) in {m.outcomes for m in enumerate_measurements(L)}


def test_cap_enforced(monkeypatch):
    with pytest.raises(TooLarge):
        enumerate_measurements(boolean_algebra(4), cap=8)
    monkeypatch.setenv("SASAKI_LATTICE_CAP", "4")
    with pytest.raises(TooLarge):
        enumerate_fbas(mo(2))
    monkeypatch.delenv("SASAKI_LATTICE_CAP")
    assert len(enumerate_fbas(mo(2))) == 3


def test_enumeration_matches_brute_force(small_lattice):
    L = small_lattice
    assert {m.outcomes for m in enumerate_measurements(L)} == set(brute_measurements(L))
    assert {b.elems for b in enumerate_fbas(L)} == set(brute_fbas(L))


def test_validate_fba():
    L = mo(2)
    a, b = L.index("a"), L.index("b")
    assert len(validate_fba(L, [L.bot, L.top, a, L.oc(a)])) == 4
    with pytest.raises(NotBooleanSubalgebra):
        validate_fba(L, [L.bot, L.top, a, L.oc(a), b, L.oc(b)])
    with pytest.raises(NotBooleanSubalgebra):
        validate_fba(L, [L.bot, L.top, a])


def test_fba_measurement_bijection(lattice):
    ms = enumerate_measurements(lattice)
    fbas = enumerate_fbas(lattice)
    assert len(ms) == len(fbas)
    for M in ms:
        assert fba_to_measurement(measurement_to_fba(M)) == M
    for B in fbas:
        assert measurement_to_fba(fba_to_measurement(B)) == B


@pytest.mark.parametrize("name", sorted(SMALL))
def test_finer_than_partial_order(name):
    L = SMALL[name]
    ms = enumerate_measurements(L)
    for M in ms:
        assert finer_than(M, M)
    for M, N in itertools.product(ms, repeat=2):
        if finer_than(M, N) and finer_than(N, M):
            assert M == N
    for M, N, P in itertools.product(ms, repeat=3):
        if finer_than(M, N) and finer_than(N, P):
            assert finer_than(M, P)
            f, g, h = refinement_map(M, N), refinement_map(N, P), refinement_map(M, P)
            assert all(h[e] == g[f[e]] for e in M.outcomes)


@settings(max_examples=80, deadline=None)
@given(lattices, st.data())
def test_pi_b_closure_properties(L, data):
    fbas = enumerate_fbas(L)
    B = data.draw(st.sampled_from(fbas))
    x = data.draw(st.integers(0, L.n - 1))
    y = data.draw(st.integers(0, L.n - 1))
    p = pi_b(B, x)
    assert p in B.elems
    assert L.le(x, p)
    assert pi_b(B, p) == p
    if L.le(x, y):
        assert L.le(p, pi_b(B, y))
