"""Hasse diagrams as Graphviz DOT or plain text."""

from __future__ import annotations

from typing import Sequence


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(labels: Sequence[str], ranks: Sequence[int], edges: Sequence[tuple[int, int]],
              title: str = "lattice") -> str:
    """Digraph drawn bottom-up, one ``rank=same`` group per rank."""
    out = [f"digraph {_quote(title)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for k, label in enumerate(labels):
        out.append(f"  n{k} [label={_quote(label)}];")
    for r in sorted(set(ranks)):
        members = " ".join(f"n{k};" for k, rk in enumerate(ranks) if rk == r)
        out.append(f"  {{ rank=same; {members} }}")
    for a, b in edges:
        out.append(f"  n{a} -> n{b} [dir=none];")
    out.append("}")
    return "\n".join(out) + "\n"


def hasse_ascii(labels: Sequence[str], ranks: Sequence[int], edges: Sequence[tuple[int, int]],
                rank_name: str = "dim") -> str:
    """Levels from top to bottom, followed by the covering pairs."""
    width = max(len(str(r)) for r in ranks)
    lines = []
    for r in sorted(set(ranks), reverse=True):
        row = "   ".join(labels[k] for k, rk in enumerate(ranks) if rk == r)
        lines.append(f"{rank_name} {r:>{width}} | {row}")
    lines.append("covers:")
    for a, b in sorted(edges, key=lambda e: (ranks[e[0]], e[0], e[1])):
        lines.append(f"  {labels[a]} < {labels[b]}")
    return "\n".join(lines) + "\n"
