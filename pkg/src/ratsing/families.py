"""Generators for named dual graphs and the tautness obstruction census.

Naming of the four hub families
-------------------------------
All four share a tail: a (-6) hub carrying three (-3) curves, each of which
carries two (-3) leaves.  The (-2) part hangs off the hub and is named first:

``typeA(n)``
    chain ``E1 - ... - En`` with ``En`` meeting the hub ``E(n+1)``.
``typeD(n)``
    leaves ``E1, E2`` on ``E3``, chain ``E3 - ... - E(n+2)``, hub ``E(n+3)``.
``typeE6``
    chain ``E1 - ... - E5`` with ``E6`` on ``E3``; hub ``E7`` meets ``E5``.
``typeE7``
    chain ``E1 - ... - E6`` with ``E7`` on ``E3``; hub ``E8`` meets ``E6``.

After the hub ``H`` come the three (-3) curves ``H+1, H+2, H+3`` and then the
six leaves, two per (-3) curve, in that order.

The T9 tree is ``E1 - E2 - E3 - E4`` with ``E5`` also meeting ``E2``; its
weights are ``-3, -3, -2, -2, -2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from fractions import Fraction
from typing import Sequence

from .contraction import ADEType
from .dualgraph import LabelledTree, degree_census

KINDS = ("typeA", "typeD", "typeE6", "typeE7", "T9", "ADE", "cyclic")
HUB_FAMILIES = ("typeA", "typeD", "typeE6", "typeE7")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    series: str | None = None
    rank: int | None = None
    m: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family {self.kind!r}; expected one of {KINDS}")
        if self.kind in ("typeA", "typeD"):
            if self.n is None or self.n < 1:
                raise FamilyError(f"{self.kind} needs a chain length n >= 1")
        elif self.kind == "ADE":
            if self.series is None or self.rank is None:
                raise FamilyError("ADE needs a series and a rank")
            try:
                ADEType(self.series, self.rank)
            except ValueError as exc:
                raise FamilyError(str(exc)) from None
        elif self.kind == "cyclic":
            _check_mq(self.m, self.q)


def _check_mq(m: int | None, q: int | None) -> None:
    if m is None or q is None or not 0 < q < m or gcd(m, q) != 1:
        raise FamilyError(f"cyclic quotient 1/m(1,q) needs 0 < q < m coprime, got m={m}, q={q}")


def _names(k: int) -> list[str]:
    return [f"E{i}" for i in range(1, k + 1)]


def _tree(weights: Sequence[int], edges: Sequence[tuple[int, int]]) -> LabelledTree:
    names = _names(len(weights))
    return LabelledTree.build(names, list(weights), [(names[i - 1], names[j - 1]) for i, j in edges])


def _chain_edges(first: int, last: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(first, last)]


def _ade_edges(series: str, rank: int) -> list[tuple[int, int]]:
    if series == "A":
        return _chain_edges(1, rank)
    if series == "D":
        return [(1, 3), (2, 3)] + _chain_edges(3, rank)
    # E: chain E1..E(rank-1) with the short arm E(rank) on E3
    return _chain_edges(1, rank - 1) + [(3, rank)]


def _with_hub(minus_two: int, edges: list[tuple[int, int]], attach: int) -> LabelledTree:
    hub = minus_two + 1
    mids = [hub + 1, hub + 2, hub + 3]
    edges = edges + [(attach, hub)] + [(hub, x) for x in mids]
    leaf = hub + 4
    for x in mids:
        edges += [(x, leaf), (x, leaf + 1)]
        leaf += 2
    weights = [-2] * minus_two + [-6] + [-3] * 9
    return _tree(weights, edges)


def type_a(n: int) -> LabelledTree:
    return _with_hub(n, _chain_edges(1, n), n)


def type_d(n: int) -> LabelledTree:
    return _with_hub(n + 2, [(1, 3), (2, 3)] + _chain_edges(3, n + 2), n + 2)


def type_e6() -> LabelledTree:
    return _with_hub(6, _ade_edges("E", 6), 5)


def type_e7() -> LabelledTree:
    return _with_hub(7, _ade_edges("E", 7), 6)


def t9() -> LabelledTree:
    return _tree([-3, -3, -2, -2, -2], [(1, 2), (2, 3), (3, 4), (2, 5)])


def ade_tree(series: str, rank: int) -> LabelledTree:
    ADEType(series, rank)
    return _tree([-2] * rank, _ade_edges(series, rank))


def hj_chain(m: int, q: int) -> tuple[int, ...]:
    """Hirzebruch-Jung chain of ``1/m(1,q)``: ``m/q = b1 - 1/(b2 - ...)`` as ``(-b1, ...)``."""
    _check_mq(m, q)
    out = []
    while q:
        b = -(-m // q)  # ceiling
        out.append(-b)
        m, q = q, b * q - m
    return tuple(out)


def hj_value(chain: Sequence[int]) -> Fraction:
    """Evaluate ``b1 - 1/(b2 - 1/(...))`` for a chain of weights ``(-b1, -b2, ...)``."""
    if not chain:
        raise ValueError("empty chain")
    value = Fraction(-chain[-1])
    for w in reversed(chain[:-1]):
        value = -w - 1 / value
    return value


def cyclic_tree(m: int, q: int) -> LabelledTree:
    weights = hj_chain(m, q)
    return _tree(weights, _chain_edges(1, len(weights)))


def generate(spec: FamilySpec) -> LabelledTree:
    if spec.kind == "typeA":
        return type_a(spec.n)
    if spec.kind == "typeD":
        return type_d(spec.n)
    if spec.kind == "typeE6":
        return type_e6()
    if spec.kind == "typeE7":
        return type_e7()
    if spec.kind == "T9":
        return t9()
    if spec.kind == "ADE":
        return ade_tree(spec.series, spec.rank)
    return cyclic_tree(spec.m, spec.q)


def boxed_type(kind: str) -> str:
    """Dynkin series of the boxed (-2) configuration of a hub family."""
    return {"typeA": "A", "typeD": "D", "typeE6": "E6", "typeE7": "E7"}[kind]


@dataclass(frozen=True)
class TautCensus:
    """Degree-based obstructions to (pseudo-)tautness.

    A false flag means no obstruction was found, not that the graph is taut.
    """

    deg3_count: int
    deg4_witness: str | None
    not_pseudo_taut: bool
    not_taut: bool

    def to_json(self) -> dict:
        return {
            "deg3_count": self.deg3_count,
            "deg4plus_witness": self.deg4_witness,
            "not_pseudo_taut": self.not_pseudo_taut,
            "not_taut": self.not_taut,
        }


def taut_census(tree: LabelledTree) -> TautCensus:
    census = degree_census(tree)
    deg3 = census.get(3, 0)
    witness = next((v for v in tree.vertices if tree.degree(v) == 4), None)
    return TautCensus(deg3, witness, deg3 > 1, witness is not None)
