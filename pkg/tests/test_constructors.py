import itertools

import pytest

from sasaki_lattice.constructors import (GreechieDiagram, boolean_algebra, from_greechie,
                                         horizontal_sum, mo, parse_greechie)
from sasaki_lattice.errors import NotOrthomodular, PastingNotOrthomodular
from sasaki_lattice.oml import verify_oml


def isomorphic(A, B):
    """Brute-force search for an order- and ortho-preserving bijection."""
    if A.n != B.n:
        return False
    heights_a = sorted(A.height(x) for x in range(A.n))
    if heights_a != sorted(B.height(x) for x in range(B.n)):
        return False
    by_h = {}
    for y in range(B.n):
        by_h.setdefault(B.height(y), []).append(y)
    order = sorted(range(A.n), key=A.height)
    phi = {}

    def walk(i):
        if i == len(order):
            return True
        x = order[i]
        for y in by_h[A.height(x)]:
            if y in phi.values():
                continue
            ok = all(A.le(x, z) == B.le(y, w) and A.le(z, x) == B.le(w, y)
                     for z, w in phi.items())
            if not ok:
                continue
            phi[x] = y
            if all(A.oc(z) not in phi or phi[A.oc(z)] == B.oc(w) for z, w in phi.items()) \
                    and walk(i + 1):
                return True
            del phi[x]
        return False

    return walk(0)


def test_boolean_sizes():
    assert boolean_algebra(1).n == 2
    B2 = boolean_algebra(2)
    assert B2.n == 4 and len(B2.atoms()) == 2
    assert verify_oml(8, boolean_algebra(3).leq, boolean_algebra(3).ortho).n == 8
    with pytest.raises(ValueError):
        boolean_algebra(0)


def test_mo_shapes():
    assert isomorphic(mo(1), boolean_algebra(2))
    assert mo(2).n == 6
    L = mo(3)
    a1, a2 = L.index("a"), L.index("b")
    assert L.sasaki(a1, a2) == a2
    assert L.join(a1, L.oc(a2)) == L.top
    with pytest.raises(ValueError):
        mo(0)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_mo_atoms_and_coatoms(k):
    L = mo(k)
    atoms = L.atoms()
    assert len(atoms) == 2 * k
    coatoms = {x for x in range(L.n) if x != L.top and all(
        not L.le(x, y) or y in (x, L.top) for y in range(L.n))}
    for x in range(L.n):
        if x not in (L.bot, L.top):
            assert x in atoms and x in coatoms


@pytest.mark.parametrize("k", [2, 3, 4])
def test_single_block_is_boolean(k):
    names = [f"q{i}" for i in range(k)]
    assert isomorphic(from_greechie([names]), boolean_algebra(k))


def test_bowtie_and_disjoint_blocks():
    bow = from_greechie([["a", "b", "c"], ["c", "d", "e"]])
    assert bow.n == 12          # 8 + 8 - 4 shared elements {0, c, c', 1}
    assert len(bow.atoms()) == 5
    assert horizontal_sum(3, 3).n == 14
    c = bow.index("c")
    a, d = bow.index("a"), bow.index("d")
    assert bow.le(a, bow.oc(c)) and bow.le(d, bow.oc(c))
    assert not bow.commutes(a, d)


def test_loop_of_order_three_rejected():
    g = GreechieDiagram([["a", "b", "x"], ["b", "c", "y"], ["c", "a", "z"]])
    with pytest.raises(NotOrthomodular) as ei:
        from_greechie(g)
    assert isinstance(ei.value, PastingNotOrthomodular)
    assert ei.value.witness
    assert ei.value.cause is not None


def test_loop_of_order_four_rejected_five_accepted():
    four = [["a", "b", "p"], ["b", "c", "q"], ["c", "d", "r"], ["d", "a", "s"]]
    with pytest.raises(PastingNotOrthomodular):
        from_greechie(four)
    five = [["a", "b", "p"], ["b", "c", "q"], ["c", "d", "r"], ["d", "e", "s"], ["e", "a", "t"]]
    L = from_greechie(five)
    assert len(L.atoms()) == 10


def test_illegal_diagrams():
    with pytest.raises(ValueError):
        GreechieDiagram([["a"]])
    with pytest.raises(ValueError):
        GreechieDiagram([["a", "b", "c"], ["a", "b", "d"]])
    with pytest.raises(ValueError):
        GreechieDiagram([])
    with pytest.raises(ValueError):
        GreechieDiagram([["a", "a"]])


def test_parse_greechie_text():
    text = "# bowtie\na b c   # first block\n\nc d e\n"
    g = parse_greechie(text)
    assert g.blocks == (("a", "b", "c"), ("c", "d", "e"))
    assert from_greechie(g).n == 12


def test_canonical_order_and_labels():
    L = from_greechie([["c", "a", "b"]])
    assert L.bot == 0 and L.top == L.n - 1
    assert [L.label(x) for x in L.atoms()] == ["a", "b", "c"]
    assert all(L.height(x) <= L.height(y) for x, y in itertools.combinations(range(L.n), 2))
