"""Selection search on the 18-ray set, its 9 one-basis-removed subsets, and the oracle."""
import time

from sasaki_lattice.ks import RayConfig, build_config, cabello_18, product_oracle, search_coloring


def main():
    cfg = build_config(cabello_18(), 4)
    t = time.perf_counter()
    res = search_coloring(cfg)
    t_search = time.perf_counter() - t
    t = time.perf_counter()
    oracle = product_oracle(cfg)
    t_oracle = time.perf_counter() - t
    print(f"rays {len(cfg)}, bases {len(cfg.bases)}")
    print(f"search: {res.certificate['result']} after {res.nodes} nodes ({t_search:.3f}s)")
    print(f"oracle: {'selection' if oracle else 'none'} ({t_oracle:.3f}s)")
    for drop in range(len(cfg.bases)):
        sub = RayConfig(cfg.dim, cfg.vectors, cfg.orth, cfg.bases[:drop] + cfg.bases[drop + 1:])
        r = search_coloring(sub)
        picked = [cfg.describe()[i] for i in r.rays] if r.found else []
        print(f"  without basis {drop}: {'Selection' if r.found else 'NoSelection'} "
              f"({r.nodes} nodes) {picked}")


if __name__ == "__main__":
    main()
