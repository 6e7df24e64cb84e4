import itertools

import pytest
from hypothesis import strategies as st

from sasaki_lattice.constructors import boolean_algebra, from_greechie, horizontal_sum, mo

BOWTIE = [["a", "b", "c"], ["c", "d", "e"]]


def _named():
    out = {f"2^{k}": boolean_algebra(k) for k in range(1, 5)}
    out.update({f"MO({k})": mo(k) for k in range(1, 5)})
    out["bowtie"] = from_greechie(BOWTIE)
    out["2^2+2^2"] = horizontal_sum(2, 2)
    return out


LATTICES = _named()
SMALL = {k: v for k, v in LATTICES.items() if v.n <= 12}


@pytest.fixture(params=sorted(LATTICES), ids=str)
def lattice(request):
    return LATTICES[request.param]


@pytest.fixture(params=sorted(SMALL), ids=str)
def small_lattice(request):
    return SMALL[request.param]


lattices = st.sampled_from(sorted(LATTICES)).map(LATTICES.__getitem__)


def element_pairs(L):
    return itertools.product(range(L.n), repeat=2)


def brute_filters(L):
    """Every subset that is up-closed and &-stable, by definition."""
    out = []
    for mask in range(1, 1 << L.n):
        S = [x for x in range(L.n) if mask >> x & 1]
        up = all(mask >> y & 1 for x in S for y in range(L.n) if L.le(x, y))
        amp = all(mask >> L.sasaki(x, y) & 1 for x in S for y in S)
        if up and amp:
            out.append(frozenset(S))
    return out


def brute_fbas(L):
    """Subsets containing 0, 1 closed under meet/join/ortho with pairwise commuting elements."""
    out = []
    others = [x for x in range(L.n) if x not in (L.bot, L.top)]
    for r in range(len(others) + 1):
        for c in itertools.combinations(others, r):
            S = set(c) | {L.bot, L.top}
            if all(L.oc(x) in S for x in S) and all(
                    L.meet(x, y) in S and L.join(x, y) in S and L.commutes(x, y)
                    for x in S for y in S):
                out.append(frozenset(S))
    return out
