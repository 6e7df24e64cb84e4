"""Graphviz DOT export of Hasse diagrams."""
from __future__ import annotations

from .filters import SfLattice, sf_atoms
from .oml import FiniteOml


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def lattice_to_dot(L, name="L"):
    atoms = set(L.atoms())
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(L.n):
        extra = ", style=filled, fillcolor=lightblue" if x in atoms else ""
        lines.append(f"  n{x} [label={_q(L.label(x))}{extra}];")
    for x, y in L.covers():
        lines.append(f"  n{x} -> n{y} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sf_to_dot(sfl, name="SF"):
    """Hasse diagram of SF(L) under reverse inclusion; partial states filled."""
    L = sfl.base
    atom_masks = {F.mask for F in sf_atoms(sfl)}
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, F in enumerate(sfl.filters):
        label = "{" + ",".join(L.label(x) for x in F.sorted()) + "}"
        extra = ", style=filled, fillcolor=gold" if F.mask in atom_masks else ""
        lines.append(f"  f{i} [label={_q(label)}{extra}];")
    for i, j in sfl.covers():
        lines.append(f"  f{i} -> f{j} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(obj, name=None):
    if isinstance(obj, SfLattice):
        return sf_to_dot(obj, name or "SF")
    if isinstance(obj, FiniteOml):
        return lattice_to_dot(obj, name or "L")
    raise TypeError(f"cannot export {type(obj).__name__} as DOT")


def export_dot(obj, path, name=None):
    text = to_dot(obj, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
