"""Table of SF(L) sizes, atoms and description counts for the small lattices."""
import argparse

from sasaki_lattice.constructors import boolean_algebra, from_greechie, horizontal_sum, mo
from sasaki_lattice.descriptions import candidate_count, enumerate_descriptions
from sasaki_lattice.filters import embed_up_properties, enumerate_filters, sf_atoms
from sasaki_lattice.measurements import enumerate_fbas


def lattices(max_k):
    for k in range(1, max_k + 1):
        yield f"2^{k}", boolean_algebra(k)
    for k in range(1, max_k + 1):
        yield f"MO({k})", mo(k)
    yield "bowtie", from_greechie([["a", "b", "c"], ["c", "d", "e"]])
    yield "2^2+2^2", horizontal_sum(2, 2)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()
    head = (f"{'L':10} {'|L|':>4} {'FBAs':>5} {'|SF|':>5} {'atoms':>6} {'tables':>8} "
            f"{'descr':>6} meet-pres")
    print(head)
    print("-" * len(head))
    for name, L in lattices(args.max_k):
        sfl = enumerate_filters(L)
        fbas = enumerate_fbas(L)
        tables = candidate_count(L)
        descr = len(enumerate_descriptions(L)) if tables <= 10 ** 6 else "-"
        meet = embed_up_properties(L).details["meet_preserving"]
        print(f"{name:10} {L.n:4d} {len(fbas):5d} {len(sfl):5d} {len(sf_atoms(sfl)):6d} "
              f"{tables:8d} {descr!s:>6} {meet}")


if __name__ == "__main__":
    main()
