"""Brute-force cross-checks, kept separate from the algorithms they check.

Nothing here calls into :mod:`ratsing.fundcycle`; pairings are recomputed
from the tree's weights and edges directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dualgraph import Cycle, DualGraph
from .lattice import IntersectionForm

EXHAUSTIVE_MAX_DIM = 6
RANDOM_SAMPLES = 10**5
SEED = 20240611


class OracleError(RuntimeError):
    pass


class TreeTooLargeError(OracleError):
    pass


class NonUniqueMinimumError(OracleError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    coeff_bound: int = 8
    sample_bound: int = 3
    max_vertices: int = 8

    def __post_init__(self):
        if min(self.coeff_bound, self.sample_bound, self.max_vertices) < 1:
            raise ValueError("oracle bounds must be at least 1")


def _search_order(tree: DualGraph) -> tuple[list[int], list[list[int]]]:
    """Vertex order for the search plus, per step, the curves whose pairing is then fixed.

    A curve's pairing ``Z.E_i`` depends on its own coefficient and its
    neighbours', so it can be checked as soon as all of those are assigned.
    """
    n = len(tree)
    nbrs = tree.neighbour_indices
    order, seen = [], set()
    for root in range(n):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in nbrs[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    position = {v: k for k, v in enumerate(order)}
    ready: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        last = max([position[v]] + [position[u] for u in nbrs[v]])
        ready[last].append(v)
    return order, ready


def ztop_members(tree: DualGraph, coeff_bound: int) -> list[tuple[int, ...]]:
    """Every cycle with ``1 <= a_i <= coeff_bound`` that pairs nonpositively with all curves.

    Exhaustive over the box; partial assignments are abandoned only once some
    fully determined pairing is already positive.
    """
    n = len(tree)
    nbrs = tree.neighbour_indices
    weights = tree.weights
    order, ready = _search_order(tree)
    coeffs = [0] * n
    found = []

    def ok(i: int) -> bool:
        return weights[i] * coeffs[i] + sum(coeffs[j] for j in nbrs[i]) <= 0

    def extend(k: int) -> None:
        if k == n:
            found.append(tuple(coeffs))
            return
        v = order[k]
        for a in range(1, coeff_bound + 1):
            coeffs[v] = a
            if all(ok(i) for i in ready[k]):
                extend(k + 1)
        coeffs[v] = 0

    extend(0)
    return found


def brute_force_zmin(tree: DualGraph, cfg: OracleConfig = OracleConfig()) -> Cycle | None:
    """Coordinatewise-minimal member of Z_top in the box ``[1, coeff_bound]^n``.

    Returns ``None`` when the box holds no member; raises
    :class:`NonUniqueMinimumError` when there are several minimal members.
    """
    if len(tree) > cfg.max_vertices:
        raise TreeTooLargeError(f"{len(tree)} vertices exceeds oracle limit {cfg.max_vertices}")
    members = ztop_members(tree, cfg.coeff_bound)
    if not members:
        return None
    minimal = [
        z
        for z in members
        if not any(w != z and all(a <= b for a, b in zip(w, z)) for w in members)
    ]
    if len(minimal) != 1:
        raise NonUniqueMinimumError(f"{len(minimal)} minimal members: {minimal[:4]}")
    return Cycle(tree.vertices, minimal[0])


def _matrix(form: IntersectionForm | DualGraph) -> np.ndarray:
    if isinstance(form, IntersectionForm):
        return np.array(form.matrix, dtype=np.int64).reshape(len(form), len(form))
    n = len(form)
    m = np.diag(np.array(form.weights, dtype=np.int64)).reshape(n, n)
    for u, v in form.edges:
        i, j = form.index[u], form.index[v]
        m[i, j] = m[j, i] = 1
    return m


def definiteness_witness(
    form: IntersectionForm | DualGraph, cfg: OracleConfig = OracleConfig()
) -> tuple[int, ...] | None:
    """A nonzero integer vector ``x`` with ``x^T M x >= 0``, or ``None`` if none is found.

    Exhaustive over ``[-sample_bound, sample_bound]^n`` for up to six
    dimensions, seeded random sampling from the same box above that.
    """
    m = _matrix(form)
    n = m.shape[0]
    if n == 0:
        return None
    b = cfg.sample_bound
    if n <= EXHAUSTIVE_MAX_DIM:
        xs = np.array(list(itertools.product(range(-b, b + 1), repeat=n)), dtype=np.int64)
        xs = xs[np.any(xs != 0, axis=1)]
    else:
        rng = np.random.default_rng(SEED)
        xs = rng.integers(-b, b + 1, size=(RANDOM_SAMPLES, n), dtype=np.int64)
        xs = xs[np.any(xs != 0, axis=1)]
    values = np.einsum("ij,jk,ik->i", xs, m, xs)
    hits = np.nonzero(values >= 0)[0]
    if hits.size == 0:
        return None
    return tuple(int(v) for v in xs[hits[0]])


def sample_definiteness(form: IntersectionForm | DualGraph, cfg: OracleConfig = OracleConfig()) -> bool:
    """False iff a sampled nonzero vector has nonnegative self-pairing."""
    return definiteness_witness(form, cfg) is None


def continued_fraction_value(chain: tuple[int, ...]) -> Fraction:
    """Independent evaluation of ``b1 - 1/(b2 - ...)`` via convergent recurrences."""
    # p_k = b_k p_{k-1} - p_{k-2}, same for q; value = p/q
    p_prev, p = 1, -chain[0]
    q_prev, q = 0, 1
    for w in chain[1:]:
        p_prev, p = p, -w * p - p_prev
        q_prev, q = q, -w * q - q_prev
    return Fraction(p, q)
