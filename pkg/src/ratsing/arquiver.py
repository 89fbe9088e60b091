"""AR quivers of stable categories as doubles of relative dual graphs.

The quiver is exactly the double of the dual graph: two opposed arrows per
edge and nothing else.  Some conventions also draw the AR translation as a
loop at each vertex; those loops are deliberately not emitted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .dualgraph import DualGraph, UnknownVertexError


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    label: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise ValueError(f"arrow {a.label!r} references an unknown vertex")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("arrow labels must be unique")

    def induced(self, subset: Iterable[str]) -> Quiver:
        keep = set(subset)
        return Quiver(
            tuple(v for v in self.vertices if v in keep),
            tuple(a for a in self.arrows if a.source in keep and a.target in keep),
        )

    def components(self) -> list[tuple[str, ...]]:
        """Connected components of the underlying undirected graph."""
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen: set[str] = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp, stack = {start}, [start]
            while stack:
                for y in adj[stack.pop()]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(tuple(v for v in self.vertices if v in comp))
        return out

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"from": a.source, "to": a.target, "label": a.label} for a in self.arrows],
        }


def dual_graph_of_morphism(tree: DualGraph, s: Iterable[str]) -> DualGraph:
    """Dual graph of ``Y -> X^S``: the curves in ``s`` with their meetings and weights."""
    s = set(s)
    unknown = s - set(tree.vertices)
    if unknown:
        raise UnknownVertexError(f"unknown curves {sorted(unknown)}")
    return tree.induced(s)


def double(graph: DualGraph) -> Quiver:
    arrows = []
    for u, v in graph.edges:
        arrows.append(Arrow(u, v, f"{u}->{v}"))
        arrows.append(Arrow(v, u, f"{v}->{u}"))
    arrows.sort(key=lambda a: (a.source, a.target))
    return Quiver(graph.vertices, tuple(arrows))


def ar_quiver(tree: DualGraph, s: Iterable[str]) -> Quiver:
    return double(dual_graph_of_morphism(tree, s))


_UNSAFE = re.compile(r"[^A-Za-z0-9]")


def _dot_ids(names: Iterable[str]) -> dict[str, str]:
    ids: dict[str, str] = {}
    used: set[str] = set()
    for name in names:
        base = _UNSAFE.sub("_", name) or "_"
        if base[0].isdigit():
            base = "v" + base
        ident, k = base, 1
        while ident in used:
            k += 1
            ident = f"{base}_{k}"
        used.add(ident)
        ids[name] = ident
    return ids


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(q: Quiver, name: str = "AR") -> str:
    """Deterministic Graphviz digraph for ``q``."""
    ids = _dot_ids(q.vertices)
    lines = [f"digraph {name} {{"]
    for v in q.vertices:
        lines.append(f"  {ids[v]} [label={_quote(v)}];")
    for a in sorted(q.arrows, key=lambda a: (a.source, a.target, a.label)):
        lines.append(f"  {ids[a.source]} -> {ids[a.target]} [label={_quote(a.label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
