"""Build the non-principal Sasaki filter of Q^d and print the verification report."""
import argparse

from sasaki_lattice.hilbert import nonprincipal_construction


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[3, 4, 5])
    args = ap.parse_args()
    for d in args.dims:
        members, rep = nonprincipal_construction(d)
        print(f"d = {d}: {'ok' if rep.passed else 'FAILED'}")
        for i, g in enumerate(members[1:]):
            rows = "  ".join("(" + ",".join(str(x) for x in r) + ")" for r in g.basis)
            print(f"  G_{i} = span {rows}")
        for key in ("pairwise_nonorthogonal", "G_i&G_j=G_j", "sasaki_stable",
                    "meet_of_G_is_zero", "proper"):
            print(f"  {key}: {rep.details[key]}")


if __name__ == "__main__":
    main()
