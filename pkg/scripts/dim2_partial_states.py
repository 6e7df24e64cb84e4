"""List the partial states (atoms of SF) of MO(k): one element from each pair."""
import argparse

from sasaki_lattice.constructors import mo
from sasaki_lattice.filters import enumerate_filters, sf_atoms


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()
    for k in range(1, args.max_k + 1):
        L = mo(k)
        atoms = sf_atoms(enumerate_filters(L))
        print(f"MO({k}): {len(atoms)} partial states (expected {2 ** k})")
        for F in atoms:
            print("   ", " ".join(l for l in F.labels() if l != "1"))


if __name__ == "__main__":
    main()
