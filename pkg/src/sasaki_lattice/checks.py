"""Named reproduction checks, one per headline claim.

Each check takes a :class:`RunConfig` and returns a :class:`Report`.  The
CLI ``reproduce`` command and the acceptance tests both go through this
registry.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .config import RunConfig
from .constructors import boolean_algebra, from_greechie, hexagon_tables, mo
from .descriptions import check_e1_iff_e2, roundtrip_check
from .errors import NotOrthomodular, UnknownCheck
from .filters import (check_principal_trace, embed_up_properties, enumerate_filters,
                      sf_atoms, sf_join)
from .hilbert import dim2_choice_check, nonprincipal_construction, probe_atom_forcing
from .ks import build_config, cabello_18, product_oracle, search_coloring
from .measurements import enumerate_measurements, finer_than, refinement_map
from .oml import verify_oml
from .reports import Report
from .subspace import sasaki_by_projection, span, sub_le, sub_sasaki

BOWTIE = [["a", "b", "c"], ["c", "d", "e"]]


def random_rational(rng, lo=-4, hi=4, max_den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_subspace(rng, d, rank=None):
    r = rng.randint(0, d) if rank is None else rank
    vecs = [[random_rational(rng) for _ in range(d)] for _ in range(r)]
    return span(vecs, d)


def check_oml_axioms(cfg):
    accepted = {}
    for k in range(1, 5):
        for name, L in ((f"2^{k}", boolean_algebra(k)), (f"MO({k})", mo(k))):
            again = verify_oml(L.n, L.leq, L.ortho, L.labels)
            accepted[name] = again.n
    bow = from_greechie(BOWTIE)
    accepted["bowtie"] = bow.n
    try:
        verify_oml(*hexagon_tables())
        rejected, witness = False, None
    except NotOrthomodular as exc:
        rejected, witness = True, exc.witness
    return Report("oml-axioms", rejected and witness is not None, witness=witness,
                  details={"accepted": accepted, "O6_rejected": rejected})


def check_refinement(cfg):
    pairs = 0
    for L in (mo(3), boolean_algebra(3)):
        ms = enumerate_measurements(L)
        for M, M2 in itertools.product(ms, repeat=2):
            if not finer_than(M, M2):
                continue
            pairs += 1
            f = refinement_map(M, M2)
            for e in M.outcomes:
                above = [g for g in M2.outcomes if L.le(e, g)]
                if above != [f[e]]:
                    return Report("refinement-uniqueness", False,
                                  witness={"M": M.sorted(), "M2": M2.sorted(), "e": e})
    return Report("refinement-uniqueness", True, details={"finer_pairs": pairs})


def check_e1_e2(cfg):
    out = {}
    for name, L in (("MO(2)", mo(2)), ("2^2", boolean_algebra(2))):
        r = check_e1_iff_e2(L, seed=cfg.seed)
        if not r.passed or r.details["mode"] != "exhaustive":
            return Report("e1-iff-e2", False, witness={name: r.to_dict()})
        out[name] = r.details
    return Report("e1-iff-e2", True, details=out)


def _lattices_small():
    return (("MO(2)", mo(2)), ("MO(3)", mo(3)), ("2^3", boolean_algebra(3)))


def check_roundtrip(cfg):
    out = {}
    for name, L in _lattices_small():
        r = roundtrip_check(L)
        if not r.passed:
            return Report("roundtrip", False, witness={name: r.to_dict()})
        out[name] = r.details
    return Report("roundtrip", True, details=out)


def check_trace(cfg):
    out = {}
    for name, L in _lattices_small():
        r = check_principal_trace(L, seed=cfg.seed, mutants=100)
        if not r.passed:
            return Report("principal-trace", False, witness={name: r.to_dict()})
        out[name] = r.details
    return Report("principal-trace", True, details=out)


def _lub_matches_intersection(sfl):
    fs = sfl.filters
    for F, G in itertools.product(fs, repeat=2):
        # upper bounds under reverse inclusion are common subsets
        ubs = [H for H in fs if H.issubset(F) and H.issubset(G)]
        least = [H for H in ubs if all(K.issubset(H) for K in ubs)]
        if len(least) != 1 or least[0] != sf_join([F, G]):
            return (F.sorted(), G.sorted())
    return None


def check_sf_structure(cfg):
    sf_mo2 = enumerate_filters(mo(2))
    sf_b2 = enumerate_filters(boolean_algebra(2))
    L = mo(2)
    atoms = sf_atoms(sf_mo2)
    expected = {frozenset({x, y, L.top}) for x in (1, 2) for y in (3, 4)}
    atoms_ok = {F.members for F in atoms} == expected
    lub = _lub_matches_intersection(sf_mo2) or _lub_matches_intersection(sf_b2)
    atomic = all(any(F.issubset(A) for A in sf_atoms(s)) for s in (sf_mo2, sf_b2)
                 for F in s.proper())
    bounded = all(s.greatest.members == {s.base.top} and len(s.least) == s.base.n
                  for s in (sf_mo2, sf_b2))
    ok = (len(sf_mo2) == 10 and len(atoms) == 4 and atoms_ok and len(sf_b2) == 4
          and lub is None and atomic and bounded)
    return Report("sf-structure", ok, witness=lub,
                  details={"SF(MO(2))": len(sf_mo2), "atoms(SF(MO(2)))": len(atoms),
                           "SF(2^2)": len(sf_b2), "partial_states": [F.labels() for F in atoms],
                           "join_is_lub": lub is None, "atomic": atomic, "bounded": bounded})


def check_up_embedding(cfg):
    out = {}
    ok = True
    for name, L in (("MO(3)", mo(3)), ("2^3", boolean_algebra(3))):
        r = embed_up_properties(L)
        ok = ok and r.passed
        out[name] = {k: v for k, v in r.details.items() if k != "meet_counterexamples"}
        out[name]["meet_counterexample_count"] = len(r.details["meet_counterexamples"])
    return Report("up-embedding", ok, details=out)


def _dim2_mo(k):
    L = mo(k)
    atoms = sf_atoms(enumerate_filters(L))
    pairs = [(2 * i + 1, 2 * i + 2) for i in range(k)]
    expected = set()
    for pick in itertools.product(*pairs):
        expected.add(frozenset(pick) | {L.top})
    got = {F.members for F in atoms}
    one_each = all(sum(x in F for x in p) == 1 for F in atoms for p in pairs)
    return got == expected and one_each, atoms


def check_dim2_mo2(cfg):
    ok, atoms = _dim2_mo(2)
    return Report("dim2-mo2", ok and len(atoms) == 4,
                  details={"partial_states": [F.labels() for F in atoms]})


def check_dim2_mo(cfg):
    counts = {}
    for k in range(1, 5):
        ok, atoms = _dim2_mo(k)
        counts[f"MO({k})"] = len(atoms)
        if not ok or len(atoms) != 2 ** k:
            return Report("dim2-mo", False, witness={"k": k}, details=counts)
    return Report("dim2-mo", True, details=counts)


def check_dim2_rays(cfg):
    e = (span([[1, 0]]), span([[0, 1]]))
    h = (span([[1, 1]]), span([[1, -1]]))
    good = dim2_choice_check([e, h], [e[0], h[0]])
    bad = dim2_choice_check([e, h], [e[0], e[1]])
    return Report("dim2-rays", good and not bad,
                  details={"one_per_pair": good, "both_of_one_pair": bad})


def _nonprincipal(d):
    def run(cfg):
        _, rep = nonprincipal_construction(d)
        return rep
    return run


def check_sasaki_projection(cfg, trials=1000):
    rng = random.Random(cfg.seed)
    for t in range(trials):
        d = rng.randint(2, 4)
        X, Y = random_subspace(rng, d), random_subspace(rng, d)
        if sub_sasaki(X, Y) != sasaki_by_projection(X, Y):
            return Report("sasaki-projection", False,
                          witness={"trial": t, "X": repr(X), "Y": repr(Y)})
    return Report("sasaki-projection", True, details={"trials": trials})


def check_ks(cfg):
    cab = build_config(cabello_18(), 4)
    res = search_coloring(cab)
    oracle = product_oracle(cab)
    single = build_config([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    sres = search_coloring(single)
    ok = (len(cab) == 18 and len(cab.bases) == 9 and not res.found and oracle is None
          and sres.found)
    return Report("ks-cabello", ok, details={
        "rays": len(cab), "bases": len(cab.bases), "search": res.certificate,
        "oracle_found": oracle is not None, "single_basis_selection": list(sres.rays)})


def random_probe_pairs(seed, count=200):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = [rng.randint(-5, 5) for _ in range(3)]
        if not any(a):
            continue
        k = rng.choice([1, 2])
        x = span([[rng.randint(-5, 5) for _ in range(3)] for _ in range(k)], 3)
        A = span([a])
        if x.is_zero() or sub_le(A, x):
            continue
        out.append((A, x))
    return out


def check_atom_forcing(cfg, count=200, depth_cap=16):
    tally = {"ReachedBot": 0, "Inconclusive": 0}
    unverified = 0
    first_miss = None
    for i, (a, x) in enumerate(random_probe_pairs(cfg.seed, count)):
        r = probe_atom_forcing(a, x, depth_cap=depth_cap)
        tally[r.outcome] += 1
        if r.outcome == "ReachedBot" and not r.verified:
            unverified += 1
        if r.outcome == "Inconclusive" and first_miss is None:
            first_miss = {"index": i, "a": repr(a), "x": repr(x), "reason": r.reason}
    return Report("atom-forcing", tally["Inconclusive"] == 0 and unverified == 0,
                  witness=first_miss, details={**tally, "unverified_chains": unverified})


REGISTRY = {
    "oml-axioms": ("OML axioms accepted/rejected on standard lattices", check_oml_axioms),
    "refinement-uniqueness": ("refinement map is single-valued", check_refinement),
    "e1-iff-e2": ("E1 and E2 agree on every candidate table", check_e1_e2),
    "roundtrip": ("filters and descriptions round-trip", check_roundtrip),
    "principal-trace": ("filters are exactly the sets with principal traces", check_trace),
    "sf-structure": ("SF(L) counts, atoms, joins", check_sf_structure),
    "up-embedding": ("x -> x^ is injective, monotone, join-preserving", check_up_embedding),
    "dim2-mo2": ("partial states of MO(2)", check_dim2_mo2),
    "dim2-mo": ("partial states of MO(k), k <= 4", check_dim2_mo),
    "dim2-rays": ("one line per orthogonal pair in the plane", check_dim2_rays),
    "nonprincipal-3": ("non-principal filter, d = 3", _nonprincipal(3)),
    "nonprincipal-4": ("non-principal filter, d = 4", _nonprincipal(4)),
    "nonprincipal-5": ("non-principal filter, d = 5", _nonprincipal(5)),
    "sasaki-projection": ("lattice Sasaki product equals projection", check_sasaki_projection),
    "ks-cabello": ("18-ray set admits no selection", check_ks),
    "atom-forcing": ("random line pairs reach zero", check_atom_forcing),
}


def run_check(check_id, cfg=None):
    if check_id not in REGISTRY:
        raise UnknownCheck(f"unknown check id {check_id!r}; known: {', '.join(sorted(REGISTRY))}")
    return REGISTRY[check_id][1](cfg or RunConfig())
