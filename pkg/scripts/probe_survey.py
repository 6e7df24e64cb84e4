"""Survey the atom-forcing probe on seeded random (line, subspace) pairs of Q^3."""
import argparse
import collections
import time

from sasaki_lattice.checks import random_probe_pairs
from sasaki_lattice.config import DEFAULT_SEED
from sasaki_lattice.hilbert import probe_atom_forcing
from sasaki_lattice.subspace import inner


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--depth", type=int, default=16)
    ap.add_argument("--show", type=int, default=5, help="inconclusive examples to print")
    args = ap.parse_args()
    tally = collections.Counter()
    kinds = collections.Counter()
    shown = 0
    t = time.perf_counter()
    for i, (a, x) in enumerate(random_probe_pairs(args.seed, args.count)):
        r = probe_atom_forcing(a, x, depth_cap=args.depth)
        tally[r.outcome] += 1
        if r.outcome == "ReachedBot":
            kinds["via upward closure" if any(s[0] == "up" for s in r.chain) else "direct"] += 1
        elif shown < args.show:
            shown += 1
            orth = x.rank == 1 and inner(a.basis[0], x.basis[0]) == 0
            print(f"  #{i}: a={a} x={x} orth={orth} -> {r.reason}")
    dt = time.perf_counter() - t
    print(f"{dict(tally)} in {dt:.2f}s; ReachedBot breakdown {dict(kinds)}")


if __name__ == "__main__":
    main()
