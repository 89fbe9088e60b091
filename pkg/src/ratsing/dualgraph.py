"""Labelled dual graphs: parsing, validation and canonical serialization.

A dual graph has one vertex per exceptional curve, labelled with the curve's
self-intersection number, and an edge for each pair of meeting curves.  The
text format is line oriented::

    # T9
    vertex E1 -3
    vertex E2 -3
    edge E1 E2

Vertex order is the order of first mention in the document, which fixes the
row order of every matrix and vector derived from the graph.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence


class TreeError(ValueError):
    """Base class for malformed dual graph input."""

    kind = "invalid"


class TreeSyntaxError(TreeError):
    kind = "syntax"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DuplicateVertexError(TreeError):
    kind = "duplicate-vertex"


class MissingWeightError(TreeError):
    kind = "missing-weight"


class DisconnectedError(TreeError):
    kind = "disconnected"


class CycleDetectedError(TreeError):
    kind = "cycle"


class SelfLoopError(TreeError):
    kind = "self-loop"


class MultiEdgeError(TreeError):
    kind = "multi-edge"


class EmptyTreeError(TreeError):
    kind = "empty"


class UnknownVertexError(TreeError):
    kind = "unknown-vertex"


def _edge_key(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class DualGraph:
    """Weighted simple graph on named vertices; acyclic but possibly disconnected.

    ``weights`` is aligned with ``vertices``.  ``edges`` holds sorted pairs in
    canonical (lexicographic) order, so two graphs compare equal exactly when
    they have the same vertex order, weights and edge set.
    """

    vertices: tuple[str, ...]
    weights: tuple[int, ...]
    edges: tuple[tuple[str, str], ...]

    @classmethod
    def build(
        cls,
        vertices: Sequence[str],
        weights: Mapping[str, int] | Sequence[int],
        edges: Iterable[tuple[str, str]],
    ):
        vertices = tuple(vertices)
        if isinstance(weights, Mapping):
            missing = [v for v in vertices if v not in weights]
            if missing:
                raise MissingWeightError(f"no weight for vertex {missing[0]!r}")
            weights = tuple(int(weights[v]) for v in vertices)
        else:
            weights = tuple(int(w) for w in weights)
        return cls(vertices, weights, tuple(sorted({_edge_key(u, v) for u, v in edges})))

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            dup = next(v for v, c in Counter(self.vertices).items() if c > 1)
            raise DuplicateVertexError(f"vertex {dup!r} declared twice")
        if len(self.weights) != len(self.vertices):
            raise MissingWeightError("weights and vertices differ in length")
        known = set(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop at {u!r}")
            for x in (u, v):
                if x not in known:
                    raise UnknownVertexError(f"edge mentions unknown vertex {x!r}")
        if len(set(self.edges)) != len(self.edges):
            raise MultiEdgeError("repeated edge")
        # union-find: a repeated join means a cycle
        parent = {v: v for v in self.vertices}

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise CycleDetectedError(f"edge {u}-{v} closes a cycle")
            parent[ru] = rv

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def __contains__(self, name: object) -> bool:
        return name in self.index

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def weight_map(self) -> dict[str, int]:
        return dict(zip(self.vertices, self.weights))

    def weight(self, v: str) -> int:
        return self.weights[self.index[v]]

    @cached_property
    def neighbours(self) -> dict[str, tuple[str, ...]]:
        """Adjacency lists, each in declared vertex order."""
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns, key=self.index.__getitem__)) for v, ns in adj.items()}

    @cached_property
    def neighbour_indices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.index[u] for u in self.neighbours[v]) for v in self.vertices)

    def degree(self, v: str) -> int:
        return len(self.neighbours[v])

    def adjacent(self, u: str, v: str) -> bool:
        return _edge_key(u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges)

    def induced(self, subset: Iterable[str]) -> DualGraph:
        """Induced subgraph on ``subset``, keeping declared order and weights."""
        subset = set(subset)
        unknown = subset - set(self.vertices)
        if unknown:
            raise UnknownVertexError(f"unknown vertices {sorted(unknown)}")
        keep = tuple(v for v in self.vertices if v in subset)
        # a subgraph of a valid graph is valid, so skip __post_init__
        sub = object.__new__(DualGraph)
        weights = self.weight_map
        object.__setattr__(sub, "vertices", keep)
        object.__setattr__(sub, "weights", tuple(weights[v] for v in keep))
        object.__setattr__(sub, "edges", tuple(e for e in self.edges if e[0] in subset and e[1] in subset))
        return sub

    def components(self) -> list[tuple[str, ...]]:
        """Connected components, each in declared order, ordered by first vertex."""
        seen: set[str] = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.neighbours[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(tuple(v for v in self.vertices if v in comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class LabelledTree(DualGraph):
    """A nonempty connected :class:`DualGraph`: the dual graph of a resolution."""

    def __post_init__(self):
        super().__post_init__()
        if not self.vertices:
            raise EmptyTreeError("a tree needs at least one vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise DisconnectedError(
                f"{len(self.vertices)} vertices but {len(self.edges)} edges; graph is disconnected"
            )


@dataclass(frozen=True)
class Cycle:
    """Integer combination of the curves of a tree, in declared vertex order."""

    vertices: tuple[str, ...]
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.coeffs):
            raise ValueError("cycle coefficients do not match the vertex set")

    @classmethod
    def of(cls, tree: DualGraph, coeffs: Mapping[str, int] | Sequence[int]) -> Cycle:
        if isinstance(coeffs, Mapping):
            if set(coeffs) != set(tree.vertices):
                raise ValueError("cycle support must be exactly the tree's vertex set")
            return cls(tree.vertices, tuple(int(coeffs[v]) for v in tree.vertices))
        return cls(tree.vertices, tuple(int(a) for a in coeffs))

    @classmethod
    def zero(cls, tree: DualGraph) -> Cycle:
        return cls(tree.vertices, (0,) * len(tree))

    @classmethod
    def reduced(cls, tree: DualGraph) -> Cycle:
        return cls(tree.vertices, (1,) * len(tree))

    @classmethod
    def curve(cls, tree: DualGraph, v: str) -> Cycle:
        i = tree.index[v]
        return cls(tree.vertices, tuple(int(j == i) for j in range(len(tree))))

    def __getitem__(self, v: str) -> int:
        return self.coeffs[self.vertices.index(v)]

    def __add__(self, other: Cycle) -> Cycle:
        self._same_domain(other)
        return Cycle(self.vertices, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Cycle) -> Cycle:
        self._same_domain(other)
        return Cycle(self.vertices, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int) -> Cycle:
        return Cycle(self.vertices, tuple(k * a for a in self.coeffs))

    def __le__(self, other: Cycle) -> bool:
        self._same_domain(other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def _same_domain(self, other: Cycle) -> None:
        if self.vertices != other.vertices:
            raise ValueError("cycles live on different vertex sets")

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.vertices, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


_NAME = re.compile(r"[^\s#]+")
_INT = re.compile(r"[+-]?\d+")


def _tokens(line: str) -> list[tuple[str, int]]:
    body = line.split("#", 1)[0]
    return [(m.group(0), m.start() + 1) for m in _NAME.finditer(body)]


def parse_tree(text: str) -> LabelledTree:
    """Parse the line-oriented tree format into a validated :class:`LabelledTree`."""
    order: dict[str, None] = {}
    weights: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    seen_edges: set[tuple[str, str]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        keyword, col = toks[0]
        if keyword == "vertex":
            if len(toks) != 3:
                raise TreeSyntaxError("expected 'vertex <name> <weight>'", lineno, col)
            (name, _), (wtext, wcol) = toks[1], toks[2]
            if not _INT.fullmatch(wtext):
                raise TreeSyntaxError(f"weight {wtext!r} is not an integer", lineno, wcol)
            if name in weights:
                raise DuplicateVertexError(f"line {lineno}: vertex {name!r} declared twice")
            order.setdefault(name)
            weights[name] = int(wtext)
        elif keyword == "edge":
            if len(toks) != 3:
                raise TreeSyntaxError("expected 'edge <name> <name>'", lineno, col)
            u, v = toks[1][0], toks[2][0]
            if u == v:
                raise SelfLoopError(f"line {lineno}: self-loop at {u!r}")
            key = _edge_key(u, v)
            if key in seen_edges:
                raise MultiEdgeError(f"line {lineno}: edge {u}-{v} repeated")
            seen_edges.add(key)
            order.setdefault(u)
            order.setdefault(v)
            edges.append((u, v))
        else:
            raise TreeSyntaxError(f"unknown keyword {keyword!r}", lineno, col)
    missing = [v for v in order if v not in weights]
    if missing:
        raise MissingWeightError(f"vertex {missing[0]!r} is used in an edge but has no weight")
    if not order:
        raise EmptyTreeError("document declares no vertices")
    vertices = tuple(order)
    # report a cycle before a count-based disconnection verdict
    DualGraph.build(vertices, weights, edges)
    return LabelledTree.build(vertices, weights, edges)


def serialize_tree(tree: DualGraph) -> str:
    """Canonical text: vertex lines in declared order, then sorted edge lines."""
    lines = [f"vertex {v} {w}" for v, w in zip(tree.vertices, tree.weights)]
    lines += [f"edge {u} {v}" for u, v in tree.edges]
    return "\n".join(lines) + "\n"


def degree_census(tree: DualGraph) -> dict[int, int]:
    counts = Counter(tree.degree(v) for v in tree.vertices)
    return dict(sorted(counts.items()))
