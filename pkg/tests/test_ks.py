import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sasaki_lattice.errors import DimMismatch, ZeroVector
from sasaki_lattice.ks import (NoSelection, Selection, build_config, cabello_18,
                               canonical_ray, product_oracle, search_coloring,
                               selection_to_filter_check)
from sasaki_lattice.scalars import GaussianRational

E3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
# two bases of Q^3 sharing e2
TWO = E3 + [[1, 1, 0], [1, -1, 0]]


def test_canonical_ray():
    assert canonical_ray([0, -2, 4]) == (0, 1, -2)
    assert canonical_ray([1, 2]) == canonical_ray([3, 6])
    g = canonical_ray([GaussianRational(0, 2), GaussianRational(2, 0)])
    assert g[0] == 1 and g[1] == GaussianRational(0, -1)
    with pytest.raises(ZeroVector):
        canonical_ray([0, 0])


def test_build_config_examples():
    cfg = build_config(E3, 3)
    assert len(cfg) == 3 and cfg.bases == ((0, 1, 2),)
    cfg = build_config(TWO, 3)
    assert len(cfg) == 5 and len(cfg.bases) == 2
    assert len(build_config(E3 + [[2, 0, 0]], 3)) == 3
    with pytest.raises(DimMismatch):
        build_config([[1, 0]], 3)
    with pytest.raises(ZeroVector):
        build_config([[0, 0, 0]], 3)


def test_single_basis_selection():
    cfg = build_config(E3, 3)
    r = search_coloring(cfg)
    assert isinstance(r, Selection) and r.rays == (0,)
    assert len([p for p in itertools.product(*cfg.bases)]) == 3
    assert selection_to_filter_check(cfg, r).passed


def test_empty_config_vacuous():
    cfg = build_config([], 3)
    r = search_coloring(cfg)
    assert r.found and r.rays == ()


def test_two_bases():
    cfg = build_config(TWO, 3)
    r = search_coloring(cfg)
    assert r.found and product_oracle(cfg) is not None
    assert selection_to_filter_check(cfg, r).passed


def test_orthogonal_selection_fails_check():
    cfg = build_config(E3, 3)
    rep = selection_to_filter_check(cfg, (0, 1))
    assert not rep.passed
    assert rep.witness["orthogonal_pair"] == [0, 1] and rep.witness["sasaki_is_zero"]


def test_cabello_no_selection():
    cfg = build_config(cabello_18(), 4)
    assert len(cfg) == 18 and len(cfg.bases) == 9
    assert all(sum(i in b for b in cfg.bases) == 2 for i in range(18))
    r = search_coloring(cfg)
    assert isinstance(r, NoSelection)
    assert product_oracle(cfg) is None
    again = search_coloring(cfg)
    assert again.nodes == r.nodes and again.certificate == r.certificate
    assert r.certificate["result"] == "NoSelection" and "note" in r.certificate


def test_cabello_minus_one_basis_has_selection():
    cfg = build_config(cabello_18(), 4)
    for drop in range(len(cfg.bases)):
        sub = type(cfg)(cfg.dim, cfg.vectors, cfg.orth,
                        cfg.bases[:drop] + cfg.bases[drop + 1:])
        r = search_coloring(sub)
        assert r.found == (product_oracle(sub) is not None)


small_vecs = st.lists(st.lists(st.integers(-1, 1), min_size=3, max_size=3)
                      .filter(lambda v: any(v)), min_size=1, max_size=9)


@settings(max_examples=60, deadline=None)
@given(small_vecs)
def test_search_agrees_with_oracle_and_filter_check(vecs):
    cfg = build_config(vecs, 3)
    r = search_coloring(cfg)
    assert r.found == (product_oracle(cfg) is not None)
    if r.found:
        assert selection_to_filter_check(cfg, r).passed
    assert search_coloring(cfg).nodes == r.nodes
