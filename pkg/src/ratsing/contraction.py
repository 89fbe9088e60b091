"""Crepant/discrepant partition, ADE recognition and partial contractions.

Contracting a set ``S`` of curves in the minimal resolution ``Y`` gives a
partial resolution ``X^S``.  Each connected component of ``S`` collapses to
one point of ``X^S``; when ``S`` consists of (-2)-curves that point is a
du Val singularity whose type is read off the component's shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dualgraph import DualGraph, UnknownVertexError
from .lattice import (
    NotNegativeDefiniteError,
    canonical_rhs,
    intersection_matrix,
    is_negative_definite,
    solve_rational,
)

PLUS = "⊕"


class ContractionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ADEType:
    series: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.series == "A" and self.rank >= 1)
            or (self.series == "D" and self.rank >= 4)
            or (self.series == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise ValueError(f"no Dynkin diagram {self.series}{self.rank}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> ADEType:
        return cls(text[0].upper(), int(text[1:]))

    def cyclic_quotient_label(self) -> str | None:
        """``A_k`` is the cyclic quotient ``1/(k+1)(1,k)``; other series have no label."""
        if self.series != "A":
            return None
        return f"1/{self.rank + 1}(1,{self.rank})"

    def to_json(self) -> dict:
        return {
            "label": str(self),
            "series": self.series,
            "rank": self.rank,
            "cyclic_quotient": self.cyclic_quotient_label(),
        }


@dataclass(frozen=True)
class CurvePartition:
    curves: tuple[str, ...]
    crepant: tuple[str, ...]
    discrepant: tuple[str, ...]

    @property
    def module_labels(self) -> dict[str, str]:
        """Labels of the special CM modules: ``R`` plus ``M_i`` per curve."""
        labels = {"R": "R"}
        for v in self.curves:
            labels[v] = f"M_{v}"
        return labels

    @property
    def d_module_label(self) -> str:
        return f" {PLUS} ".join(["R"] + [f"M_{d}" for d in self.discrepant])

    @property
    def is_gorenstein(self) -> bool:
        return not self.discrepant

    @property
    def inj_dim_prediction(self) -> int:
        return 2 if self.is_gorenstein else 3


def partition_curves(tree: DualGraph) -> CurvePartition:
    bad = [v for v, w in zip(tree.vertices, tree.weights) if w > -2]
    if bad:
        raise ContractionError(f"curves {bad} have self-intersection > -2")
    crepant = tuple(v for v, w in zip(tree.vertices, tree.weights) if w == -2)
    discrepant = tuple(v for v, w in zip(tree.vertices, tree.weights) if w != -2)
    return CurvePartition(tree.vertices, crepant, discrepant)


def _arm_lengths(graph: DualGraph, centre: str) -> list[int]:
    arms = []
    for start in graph.neighbours[centre]:
        length, prev, cur = 1, centre, start
        while True:
            nxt = [u for u in graph.neighbours[cur] if u != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return []
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def classify_shape(graph: DualGraph) -> ADEType | None:
    """Dynkin type of a connected tree by shape alone (weights ignored)."""
    n = len(graph)
    degrees = [graph.degree(v) for v in graph.vertices]
    if max(degrees, default=0) <= 2:
        return ADEType("A", n)
    branch = [v for v, d in zip(graph.vertices, degrees) if d >= 3]
    if len(branch) != 1 or graph.degree(branch[0]) != 3:
        return None
    arms = _arm_lengths(graph, branch[0])
    if len(arms) != 3:
        return None
    if arms[:2] == [1, 1]:
        return ADEType("D", arms[2] + 3)
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        return ADEType("E", arms[2] + 4)
    return None


def ade_type(component: Iterable[str], tree: DualGraph) -> ADEType | None:
    """ADE type of a connected configuration of (-2)-curves, or ``None``."""
    sub = tree.induced(component)
    if not sub.vertices:
        raise ContractionError("empty component")
    off = [v for v, w in zip(sub.vertices, sub.weights) if w != -2]
    if off:
        raise ContractionError(f"curves {off} are not (-2)-curves")
    if not sub.is_connected():
        raise ContractionError("component is disconnected")
    return classify_shape(sub)


@dataclass(frozen=True)
class Component:
    curves: tuple[str, ...]
    ade: ADEType | None

    def to_json(self) -> dict:
        return {"curves": list(self.curves), "ade": self.ade.to_json() if self.ade else None}


@dataclass(frozen=True)
class SingularPoint:
    component_index: int
    on_curves: tuple[str, ...]

    def to_json(self) -> dict:
        return {"component_index": self.component_index, "on_curves": list(self.on_curves)}


@dataclass(frozen=True)
class ContractionResult:
    contracted: tuple[str, ...]
    components: tuple[Component, ...]
    quotient_vertices: tuple[str, ...]
    quotient_edges: tuple[tuple[str, str], ...]
    singular_points: tuple[SingularPoint, ...] | None
    n_module_label: str
    inj_dim_prediction: int
    stable_object_count: int | None
    s_subset_of_c: bool

    @property
    def singularity_content(self) -> list[ADEType] | None:
        """Sorted du Val types of the singular points, when ``S`` is crepant."""
        if not self.s_subset_of_c:
            return None
        return sorted(c.ade for c in self.components if c.ade is not None)

    def to_json(self) -> dict:
        return {
            "contracted": list(self.contracted),
            "components": [c.to_json() for c in self.components],
            "quotient": {
                "vertices": list(self.quotient_vertices),
                "edges": [list(e) for e in self.quotient_edges],
            },
            "singular_points": (
                [p.to_json() for p in self.singular_points]
                if self.singular_points is not None
                else None
            ),
            "n_module_label": self.n_module_label,
            "inj_dim_prediction": self.inj_dim_prediction,
            "stable_object_count": self.stable_object_count,
            "s_subset_of_C": self.s_subset_of_c,
        }


def _check_subset(tree: DualGraph, s: Iterable[str]) -> tuple[str, ...]:
    s = set(s)
    unknown = s - set(tree.vertices)
    if unknown:
        raise UnknownVertexError(f"unknown curves {sorted(unknown)}")
    return tuple(v for v in tree.vertices if v in s)


def n_module_label(partition: CurvePartition, contracted: Sequence[str]) -> str:
    s = set(contracted)
    if s <= set(partition.crepant):
        kept = [f"M_{j}" for j in partition.crepant if j not in s]
        return "N^S = " + f" {PLUS} ".join(["D"] + kept)
    kept = [f"M_{i}" for i in partition.curves if i not in s]
    return "N^S = " + f" {PLUS} ".join(["R"] + kept)


def contract(tree: DualGraph, s: Iterable[str], place_points: bool = True) -> ContractionResult:
    """Contract the curves ``s`` and describe the resulting partial resolution.

    Singularity content (ADE types, stable object count) is only filled in
    when every contracted curve is a (-2)-curve; otherwise the quotient graph
    is still computed but those fields are ``None``.
    """
    contracted = _check_subset(tree, s)
    partition = partition_curves(tree)
    crepant_ok = set(contracted) <= set(partition.crepant)
    if place_points and contracted and len(contracted) == len(tree):
        raise ContractionError("every curve is contracted; no surviving curve to place points on")

    comps = tree.induced(contracted).components()
    # comps are connected (-2)-configurations when crepant_ok, so classify the shape directly
    components = tuple(
        Component(c, classify_shape(tree.induced(c)) if crepant_ok else None) for c in comps
    )

    cset = set(contracted)
    quotient_vertices = tuple(v for v in tree.vertices if v not in cset)
    edges = {e for e in tree.edges if e[0] not in cset and e[1] not in cset}
    points = []
    for k, comp in enumerate(comps):
        touching = sorted(
            {u for v in comp for u in tree.neighbours[v] if u not in cset},
            key=tree.index.__getitem__,
        )
        for i, u in enumerate(touching):
            for v in touching[i + 1:]:
                edges.add((u, v) if u <= v else (v, u))
        points.append(SingularPoint(k, tuple(touching)))

    return ContractionResult(
        contracted=contracted,
        components=components,
        quotient_vertices=quotient_vertices,
        quotient_edges=tuple(sorted(edges)),
        singular_points=tuple(points) if place_points else None,
        n_module_label=n_module_label(partition, contracted),
        inj_dim_prediction=partition.inj_dim_prediction,
        stable_object_count=len(contracted) if crepant_ok else None,
        s_subset_of_c=crepant_ok,
    )


def contraction_discrepancy(tree: DualGraph, s: Iterable[str]) -> dict[str, Fraction]:
    """Relative discrepancies of ``Y -> X^S``: solve ``M_S d = (-2 - w_i)_{i in S}``.

    The contraction is crepant exactly when every value is zero.
    """
    contracted = _check_subset(tree, s)
    form = intersection_matrix(tree)
    if not is_negative_definite(form):
        raise NotNegativeDefiniteError("intersection form is not negative definite")
    if not contracted:
        return {}
    sub = form.restrict(contracted)
    rhs = canonical_rhs([tree.weight(v) for v in contracted])
    return dict(zip(contracted, solve_rational(sub, rhs)))
