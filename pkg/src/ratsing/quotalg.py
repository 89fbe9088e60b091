"""Monomial invariant theory of ``1/m(1,2)`` and the two-vertex algebra ``Lambda_n``.

The group ``1/m(1,2)`` acts on ``x^i y^j`` by the character ``i + 2j mod m``,
so invariance is a congruence and no root of unity is ever represented.

``Lambda_n`` (``n >= 3``) is the path algebra of the quiver with vertices
``1`` and ``2``, arrows ``a, b: 1 -> 2`` and ``s_1, ..., s_n: 2 -> 1``, modulo

* ``s_{n-1} b s_n = s_n b s_{n-1}``
* ``a s_n = (b s_{n-1})^2`` and ``s_n a = (s_{n-1} b)^2``
* ``a s_{i+1} = b s_i`` and ``s_{i+1} a = s_i b`` for ``1 <= i <= n-2``.

Paths are written left to right: ``a s_n`` is ``a`` followed by ``s_n``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

MAX_HILBERT_CAP = 8


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    xexp: int
    yexp: int
    coeff: Fraction = Fraction(1)

    def __post_init__(self):
        if self.xexp < 0 or self.yexp < 0:
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0 and (self.xexp or self.yexp):
            object.__setattr__(self, "xexp", 0)
            object.__setattr__(self, "yexp", 0)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.xexp + other.xexp, self.yexp + other.yexp, self.coeff * other.coeff)

    def __pow__(self, k: int) -> Monomial:
        return Monomial(self.xexp * k, self.yexp * k, self.coeff**k)

    @property
    def exponents(self) -> tuple[int, int]:
        return (self.xexp, self.yexp)

    def weight(self, m: int) -> int:
        """Character of the monomial under ``1/m(1,2)``."""
        return (self.xexp + 2 * self.yexp) % m

    def __str__(self) -> str:
        parts = []
        if self.coeff != 1 or not (self.xexp or self.yexp):
            parts.append(str(self.coeff))
        for var, e in (("x", self.xexp), ("y", self.yexp)):
            if e == 1:
                parts.append(var)
            elif e:
                parts.append(f"{var}^{e}")
        return "*".join(parts)


Polynomial = dict[tuple[int, int], Fraction]


def _poly(terms: Iterable[Monomial]) -> Polynomial:
    out: Polynomial = defaultdict(Fraction)
    for t in terms:
        out[t.exponents] += t.coeff
    return {k: v for k, v in out.items() if v != 0}


def is_invariant(mono: Monomial, m: int) -> bool:
    if m < 2:
        raise ValueError("m must be at least 2")
    return mono.weight(m) == 0


def _check_n(n: int) -> int:
    if n < 3:
        raise PresentationError(f"n must be at least 3, got {n}")
    return 2 * n - 1


def invariant_generators(n: int) -> dict[str, Monomial]:
    """``a = x^m``, ``b_i = x^(m-2i) y^i`` for ``1 <= i <= n-1``, ``c = y^m`` with ``m = 2n-1``."""
    m = _check_n(n)
    gens = {"a": Monomial(m, 0)}
    for i in range(1, n):
        gens[f"b{i}"] = Monomial(m - 2 * i, i)
    gens["c"] = Monomial(0, m)
    return gens


def relation_matrix(n: int) -> tuple[tuple[Monomial, ...], tuple[Monomial, ...]]:
    """The 2 x n matrix whose 2 x 2 minors cut out the invariant ring.

    Top row ``a, b_1, ..., b_{n-2}, b_{n-1}^2``; bottom row ``b_1, ..., b_{n-1}, c``.
    """
    g = invariant_generators(n)
    top = [g["a"]] + [g[f"b{i}"] for i in range(1, n - 1)] + [g[f"b{n - 1}"] ** 2]
    bottom = [g[f"b{i}"] for i in range(1, n)] + [g["c"]]
    return tuple(top), tuple(bottom)


@dataclass(frozen=True)
class MinorReport:
    n: int
    m: int
    checked: int
    nonzero: tuple[tuple[int, int], ...]

    @property
    def all_zero(self) -> bool:
        return not self.nonzero

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "checked": self.checked,
            "nonzero_minors": [list(p) for p in self.nonzero],
            "all_zero": self.all_zero,
        }


def minor(n: int, j: int, k: int) -> Polynomial:
    """Minor on columns ``j < k`` (0-based) after substituting the monomials."""
    top, bottom = relation_matrix(n)
    minus = Monomial(0, 0, Fraction(-1))
    return _poly([top[j] * bottom[k], minus * top[k] * bottom[j]])


def verify_minor_relations(n: int) -> MinorReport:
    m = _check_n(n)
    pairs = list(combinations(range(n), 2))
    nonzero = tuple(p for p in pairs if minor(n, *p))
    return MinorReport(n, m, len(pairs), nonzero)


# --- the quiver presentation -------------------------------------------------


@dataclass(frozen=True)
class QArrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class PathWord:
    """``(arrows[0] arrows[1] ...)^power``."""

    arrows: tuple[str, ...]
    power: int = 1

    def expanded(self) -> tuple[str, ...]:
        return self.arrows * self.power

    def __str__(self) -> str:
        body = "·".join(self.arrows)
        return f"({body})^{self.power}" if self.power != 1 else body

    def to_json(self) -> dict:
        return {"arrows": list(self.arrows), "power": self.power}


@dataclass(frozen=True)
class Relation:
    lhs: PathWord
    rhs: PathWord

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class QuiverPresentation:
    vertices: tuple[str, ...]
    arrows: tuple[QArrow, ...]
    relations: tuple[Relation, ...]

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("arrow names must be unique")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise PresentationError(f"arrow {a.name} has an unknown endpoint")
        for rel in self.relations:
            if self.endpoints(rel.lhs) != self.endpoints(rel.rhs):
                raise PresentationError(f"relation {rel} is not parallel")

    @property
    def arrow_map(self) -> dict[str, QArrow]:
        return {a.name: a for a in self.arrows}

    def endpoints(self, word: PathWord) -> tuple[str, str]:
        """Source and target of a composable word; raises if it does not compose."""
        arrows = self.arrow_map
        seq = word.expanded()
        if not seq:
            raise PresentationError("empty path word")
        try:
            path = [arrows[x] for x in seq]
        except KeyError as exc:
            raise PresentationError(f"unknown arrow {exc.args[0]}") from None
        for p, q in zip(path, path[1:]):
            if p.target != q.source:
                raise PresentationError(f"{word} does not compose at {p.name}·{q.name}")
        return path[0].source, path[-1].target

    def is_parallel(self, rel: Relation) -> bool:
        try:
            return self.endpoints(rel.lhs) == self.endpoints(rel.rhs)
        except PresentationError:
            return False

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
            "relations": [{"lhs": r.lhs.to_json(), "rhs": r.rhs.to_json()} for r in self.relations],
        }


def _w(*arrows: str, power: int = 1) -> PathWord:
    return PathWord(tuple(arrows), power)


def lambda_relations(n: int) -> list[Relation]:
    _check_n(n)
    s = [None] + [f"s{i}" for i in range(1, n + 1)]
    rels = [
        Relation(_w(s[n - 1], "b", s[n]), _w(s[n], "b", s[n - 1])),
        Relation(_w("a", s[n]), _w("b", s[n - 1], power=2)),
        Relation(_w(s[n], "a"), _w(s[n - 1], "b", power=2)),
    ]
    for i in range(1, n - 1):
        rels.append(Relation(_w("a", s[i + 1]), _w("b", s[i])))
        rels.append(Relation(_w(s[i + 1], "a"), _w(s[i], "b")))
    return rels


def non_minimal_relations(n: int) -> list[Relation]:
    """The longer list obtained before reduction; not machine-checked equivalent."""
    _check_n(n)
    s = [None] + [f"s{i}" for i in range(1, n + 1)]
    rels = [Relation(_w("a", s[i], "b"), _w("b", s[i], "a")) for i in range(1, n + 1)]
    rels += [
        Relation(_w(s[i], "a", s[j]), _w(s[j], "a", s[i]))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    rels += [
        Relation(_w("a", s[n]), _w("b", s[n - 1], power=2)),
        Relation(_w(s[n], "a"), _w(s[n - 1], "b", power=2)),
    ]
    rels += [Relation(_w("a", s[i + 1]), _w("b", s[i])) for i in range(1, n - 1)]
    rels += [Relation(_w(s[i + 1], "a"), _w(s[i], "b")) for i in range(1, n - 1)]
    return rels


def lambda_presentation(n: int, minimal: bool = True) -> QuiverPresentation:
    _check_n(n)
    arrows = [QArrow("a", "1", "2"), QArrow("b", "1", "2")]
    arrows += [QArrow(f"s{i}", "2", "1") for i in range(1, n + 1)]
    rels = lambda_relations(n) if minimal else non_minimal_relations(n)
    return QuiverPresentation(("1", "2"), tuple(arrows), tuple(rels))


# --- monomial realisation of Lambda_n = End_R(R + (a, b_1)) -------------------


def arrow_monomials(n: int) -> dict[str, Monomial]:
    """Each arrow as a monomial map between the rank-one summands.

    Vertex 1 is ``R`` (weight 0) and vertex 2 is the module generated by
    ``x^2, y`` (weight 2), isomorphic to the ideal ``(a, b_1)``.  Arrows
    ``1 -> 2`` are its generators ``a = x^2``, ``b = y``; arrows ``2 -> 1`` are
    the generators of the dual, of weight ``m - 2``:
    ``s_i = x^(m-2i) y^(i-1)`` for ``i < n`` and ``s_n = y^(m-1)``.
    """
    m = _check_n(n)
    mons = {"a": Monomial(2, 0), "b": Monomial(0, 1)}
    for i in range(1, n):
        mons[f"s{i}"] = Monomial(m - 2 * i, i - 1)
    mons[f"s{n}"] = Monomial(0, m - 1)
    return mons


def evaluate(word: PathWord, mons: dict[str, Monomial]) -> Monomial:
    out = Monomial(0, 0)
    for name in word.expanded():
        out = out * mons[name]
    return out


def relations_hold(n: int, minimal: bool = True) -> bool:
    """Every relation of the presentation is an identity between monomials."""
    mons = arrow_monomials(n)
    pres = lambda_presentation(n, minimal)
    return all(evaluate(r.lhs, mons) == evaluate(r.rhs, mons) for r in pres.relations)


@dataclass(frozen=True)
class PieceDimensions:
    source: str
    target: str
    weight_class: int
    by_length: tuple[int, ...]
    cumulative: tuple[int, ...]
    all_in_class: bool
    degree_bound: int
    covers_class: bool

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "weight_class": self.weight_class,
            "by_length": list(self.by_length),
            "cumulative": list(self.cumulative),
            "all_in_class": self.all_in_class,
            "degree_bound": self.degree_bound,
            "covers_class": self.covers_class,
        }


def _weighted_degree(e: tuple[int, int]) -> int:
    return e[0] + 2 * e[1]


def class_monomials(m: int, r: int, max_degree: int) -> set[tuple[int, int]]:
    """All ``x^i y^j`` with ``i + 2j = r mod m`` and weighted degree ``i + 2j <= max_degree``."""
    return {
        (i, j)
        for j in range(max_degree // 2 + 1)
        for i in range(max_degree - 2 * j + 1)
        if (i + 2 * j) % m == r % m
    }


def hilbert_consistency(n: int, degree_cap: int) -> dict[tuple[str, str], PieceDimensions]:
    """Graded dimensions of the four pieces ``e_i Lambda_n e_j`` under the monomial realisation.

    For each path length ``d <= degree_cap``, count the distinct monomials
    reached by paths of length ``d`` (``by_length``) and of length at most
    ``d`` (``cumulative``).  Each piece must stay inside its weight class,
    and the paths of length at most ``degree_cap`` must reach every monomial
    of that class up to the weighted degree ``degree_bound``.
    """
    m = _check_n(n)
    if not 0 <= degree_cap <= MAX_HILBERT_CAP:
        raise ValueError(f"degree_cap must lie in 0..{MAX_HILBERT_CAP}")
    mons = arrow_monomials(n)
    pres = lambda_presentation(n)
    out_arrows: dict[str, list[QArrow]] = {v: [] for v in pres.vertices}
    for a in pres.arrows:
        out_arrows[a.source].append(a)

    # reached[(src, tgt)][d] = set of exponent pairs of paths of length d
    reached = {(s, t): [set() for _ in range(degree_cap + 1)] for s in "12" for t in "12"}
    for src in "12":
        frontier = {src: {(0, 0)}}
        reached[(src, src)][0].add((0, 0))
        for d in range(1, degree_cap + 1):
            nxt: dict[str, set[tuple[int, int]]] = {"1": set(), "2": set()}
            for node, exps in frontier.items():
                for arrow in out_arrows[node]:
                    mx, my = mons[arrow.name].exponents
                    nxt[arrow.target] |= {(x + mx, y + my) for x, y in exps}
            for node, exps in nxt.items():
                reached[(src, node)][d] |= exps
            frontier = nxt

    weight_of_vertex = {"1": 0, "2": 2}
    # one step across the quiver raises weighted degree by 2 (1 -> 2) or m - 2 (2 -> 1)
    half = degree_cap // 2
    bounds = {
        ("1", "1"): m * half,
        ("2", "2"): m * half,
        ("1", "2"): 2 + m * ((degree_cap - 1) // 2) if degree_cap >= 1 else -1,
        ("2", "1"): m - 2 + m * ((degree_cap - 1) // 2) if degree_cap >= 1 else -1,
    }
    report = {}
    for (src, tgt), layers in reached.items():
        r = (weight_of_vertex[tgt] - weight_of_vertex[src]) % m
        union: set[tuple[int, int]] = set()
        cumulative = []
        for layer in layers:
            union |= layer
            cumulative.append(len(union))
        bound = bounds[(src, tgt)]
        target = class_monomials(m, r, bound) if bound >= 0 else set()
        report[(src, tgt)] = PieceDimensions(
            source=src,
            target=tgt,
            weight_class=r,
            by_length=tuple(len(layer) for layer in layers),
            cumulative=tuple(cumulative),
            all_in_class=all((x + 2 * y) % m == r for x, y in union),
            degree_bound=bound,
            covers_class=target <= union,
        )
    return report
