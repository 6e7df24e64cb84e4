"""Command-line entry point: ``sasaki-lattice <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import oml
from .checks import REGISTRY, run_check
from .config import DEFAULT_DEPTH_CAP, DEFAULT_SEED, RunConfig
from .constructors import boolean_algebra, from_greechie, mo, parse_greechie
from .descriptions import filter_to_description
from .dot import export_dot
from .errors import SasakiLatticeError
from .filters import enumerate_filters, generate_filter, is_sasaki_filter, sf_atoms
from .hilbert import nonprincipal_construction, probe_atom_forcing
from .ks import SCOPE_NOTE, build_config, search_coloring
from .measurements import enumerate_fbas, enumerate_measurements
from .reports import RunReport
from .scalars import format_scalar
from .subspace import parse_subspaces, parse_vectors


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(obj, out=None):
    text = json.dumps(obj, sort_keys=True, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_lattice(path):
    return oml.loads(_read(path))


def _sub_json(S):
    return [[format_scalar(x) for x in r] for r in S.basis]


def cmd_build(args, cfg):
    if args.greechie:
        L = from_greechie(parse_greechie(_read(args.greechie)))
    elif args.mo:
        L = mo(args.mo)
    else:
        L = boolean_algebra(args.boolean)
    _emit(oml.to_json(L, args.kind), args.out)
    return 0


def cmd_enum(args, cfg):
    L = _load_lattice(args.lattice)
    if args.what == "measurements":
        items = [M.sorted() for M in enumerate_measurements(L, cfg.cap)]
    else:
        items = [B.sorted() for B in enumerate_fbas(L, cfg.cap)]
    _emit(items, args.out)
    return 0


def cmd_filters(args, cfg):
    L = _load_lattice(args.lattice)
    sfl = enumerate_filters(L, cfg.cap)
    fs = sf_atoms(sfl) if args.atoms_only else list(sfl.filters)
    atom_masks = {F.mask for F in sf_atoms(sfl)}
    _emit([{"members": F.sorted(), "labels": F.labels(), "proper": F.proper,
            "atom": F.mask in atom_masks} for F in fs], args.out)
    if args.dot:
        export_dot(sfl, args.dot)
    return 0


def cmd_describe(args, cfg):
    L = _load_lattice(args.lattice)
    raw = json.loads(_read(args.filter))
    members = raw["members"] if isinstance(raw, dict) else raw
    ok, w = is_sasaki_filter(L, members)
    if not ok:
        print(f"error: not a Sasaki filter (witness {w})", file=sys.stderr)
        return 1
    F = generate_filter(L, members)
    d = filter_to_description(F)
    _emit(d.to_json(), args.out)
    return 0


def cmd_nonprincipal(args, cfg):
    members, rep = nonprincipal_construction(args.dim)
    _emit({"members": [_sub_json(S) for S in members], "report": rep.to_dict()}, args.out)
    return 0 if rep.passed else 1


def cmd_probe(args, cfg):
    a = parse_subspaces(_read(args.atom))
    x = parse_subspaces(_read(args.other))
    if len(a) != 1 or len(x) != 1:
        print("error: each file must hold exactly one subspace", file=sys.stderr)
        return 2
    r = probe_atom_forcing(a[0], x[0], depth_cap=args.depth)
    out = {"outcome": r.outcome, "depth": r.depth}
    if r.outcome == "ReachedBot":
        out["verified"] = r.verified
        out["chain"] = [[step[0]] + [_sub_json(S) for S in step[1:]] for step in r.chain]
    else:
        out["reason"] = r.reason
    _emit(out, args.out)
    return 0 if r.outcome == "ReachedBot" else 1


def cmd_ks(args, cfg):
    cfgk = build_config(parse_vectors(_read(args.rays)), args.dim)
    res = search_coloring(cfgk)
    cert = dict(res.certificate)
    cert["rays_canonical"] = cfgk.describe()
    cert["bases"] = [list(b) for b in cfgk.bases]
    cert["scope"] = SCOPE_NOTE
    if args.certificate:
        _emit(cert, args.certificate)
    print(json.dumps({"result": cert["result"], "nodes": res.nodes,
                      "rays": len(cfgk), "bases": len(cfgk.bases)}, sort_keys=True))
    return 0


def _worker(job):
    check_id, seed, cap = job
    t = time.perf_counter()
    rep = run_check(check_id, RunConfig(seed=seed, cap=cap))
    return rep, time.perf_counter() - t


def cmd_reproduce(args, cfg):
    ids = sorted(REGISTRY) if args.all or not args.ids else args.ids
    for i in ids:
        if i not in REGISTRY:
            run_check(i)  # raises UnknownCheck
    jobs = [(i, cfg.seed, cfg.cap) for i in ids]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_worker, jobs))
    else:
        results = [_worker(j) for j in jobs]
    report = RunReport(
        command=["reproduce", *ids],
        config={"seed": cfg.seed, "cap": cfg.cap, "jobs": cfg.jobs},
        results=[r for r, _ in results],
        timing={i: round(dt, 4) for i, (_, dt) in zip(ids, results)})
    for r in report.results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}", file=sys.stderr)
    text = report.to_json(with_timing=not args.no_timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.passed else 1


def cmd_export_dot(args, cfg):
    L = _load_lattice(args.lattice)
    obj = enumerate_filters(L, cfg.cap) if args.sf else L
    export_dot(obj, args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="sasaki-lattice",
                                description="Finite orthomodular lattices and Sasaki filters.")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"seed for randomized checks (default {DEFAULT_SEED})")
    p.add_argument("--cap", type=int, default=None,
                   help="element cap for enumerations (default $SASAKI_LATTICE_CAP or 64)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for reproduce")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a lattice and write its JSON")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--greechie", metavar="FILE")
    g.add_argument("--mo", type=int, metavar="K")
    g.add_argument("--boolean", type=int, metavar="K")
    b.add_argument("--kind", choices=["covers", "full"], default="covers")
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("enum", help="enumerate measurements or boolean subalgebras")
    e.add_argument("--lattice", required=True)
    e.add_argument("--what", choices=["measurements", "fbas"], required=True)
    e.add_argument("--out")
    e.set_defaults(func=cmd_enum)

    f = sub.add_parser("filters", help="enumerate Sasaki filters")
    f.add_argument("--lattice", required=True)
    f.add_argument("--atoms-only", action="store_true")
    f.add_argument("--dot")
    f.add_argument("--out")
    f.set_defaults(func=cmd_filters)

    d = sub.add_parser("describe", help="partial description induced by a filter")
    d.add_argument("--lattice", required=True)
    d.add_argument("--filter", required=True)
    d.add_argument("--out")
    d.set_defaults(func=cmd_describe)

    n = sub.add_parser("nonprincipal", help="non-principal filter construction")
    n.add_argument("--dim", type=int, required=True)
    n.add_argument("--out")
    n.set_defaults(func=cmd_nonprincipal)

    pf = sub.add_parser("probe-forcing", help="atom-forcing falsification probe")
    pf.add_argument("--atom", required=True)
    pf.add_argument("--other", required=True)
    pf.add_argument("--depth", type=int, default=DEFAULT_DEPTH_CAP)
    pf.add_argument("--out")
    pf.set_defaults(func=cmd_probe)

    k = sub.add_parser("ks", help="selection search on a ray configuration")
    k.add_argument("--rays", required=True)
    k.add_argument("--dim", type=int, required=True)
    k.add_argument("--certificate")
    k.set_defaults(func=cmd_ks)

    r = sub.add_parser("reproduce", help="run named reproduction checks")
    r.add_argument("ids", nargs="*", help=f"check ids: {', '.join(sorted(REGISTRY))}")
    r.add_argument("--all", action="store_true")
    r.add_argument("--out")
    r.add_argument("--no-timing", action="store_true",
                   help="omit timing fields (byte-stable output)")
    r.set_defaults(func=cmd_reproduce)

    x = sub.add_parser("export-dot", help="Hasse diagram of a lattice or of SF(L)")
    x.add_argument("--lattice", required=True)
    x.add_argument("--sf", action="store_true", help="export SF(L) instead of L")
    x.add_argument("--out", required=True)
    x.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(seed=args.seed, cap=args.cap, jobs=max(1, args.jobs))
    try:
        return args.func(args, cfg)
    except SasakiLatticeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
