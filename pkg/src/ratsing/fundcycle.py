"""Fundamental cycles and Artin's rationality criterion for weighted trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .dualgraph import Cycle, DualGraph, LabelledTree
from .lattice import NotNegativeDefiniteError, intersection_matrix, is_negative_definite, pair

MAX_LAUFER_STEPS = 10**6

#: picks one index out of the (nonempty, increasing) list of curves with Z.E_i > 0
ChoiceRule = Callable[[Sequence[int]], int]


class LauferDivergenceError(RuntimeError):
    """Raised when Laufer's loop exceeds its safety cap; indicates a bug."""


def smallest_index(candidates: Sequence[int]) -> int:
    return candidates[0]


def _dot_curve(tree: DualGraph, coeffs: Sequence[int], i: int) -> int:
    return tree.weights[i] * coeffs[i] + sum(coeffs[j] for j in tree.neighbour_indices[i])


def in_ztop(tree: DualGraph, z: Cycle | Sequence[int]) -> bool:
    """Is ``z`` nonzero, effective, and nonpositive against every curve?"""
    coeffs = z.coeffs if isinstance(z, Cycle) else tuple(z)
    if len(coeffs) != len(tree):
        raise ValueError("cycle does not match tree")
    if not any(coeffs) or min(coeffs) < 0:
        return False
    return all(_dot_curve(tree, coeffs, i) <= 0 for i in range(len(tree)))


def laufer(tree: DualGraph, choose: ChoiceRule = smallest_index) -> Cycle:
    """Laufer's algorithm for the fundamental cycle.

    Start from the reduced cycle ``sum E_i`` and, while some curve has
    ``Z.E_i > 0``, add that curve to ``Z``.  ``choose`` decides which
    offending curve is bumped; the fixed point does not depend on it.
    """
    if not isinstance(tree, LabelledTree) and not tree.is_connected():
        raise ValueError("Laufer's algorithm needs a connected graph")
    if not is_negative_definite(intersection_matrix(tree)):
        raise NotNegativeDefiniteError("intersection form is not negative definite")
    n = len(tree)
    coeffs = [1] * n
    pos = [_dot_curve(tree, coeffs, i) for i in range(n)]
    for _ in range(MAX_LAUFER_STEPS):
        bad = [i for i in range(n) if pos[i] > 0]
        if not bad:
            return Cycle(tree.vertices, tuple(coeffs))
        i = choose(bad)
        if i not in bad:
            raise ValueError(f"choice rule returned {i}, not one of {bad}")
        coeffs[i] += 1
        pos[i] += tree.weights[i]
        for j in tree.neighbour_indices[i]:
            pos[j] += 1
    raise LauferDivergenceError(f"no fixed point after {MAX_LAUFER_STEPS} steps")


@dataclass(frozen=True)
class RationalityReport:
    weights_ok: bool
    negative_definite: bool
    fundamental_cycle: Cycle | None
    self_pairing: int | None
    correction: int | None
    artin_sum: int | None
    is_rational: bool

    def to_json(self) -> dict:
        return {
            "weights_ok": self.weights_ok,
            "negative_definite": self.negative_definite,
            "fundamental_cycle": (
                self.fundamental_cycle.as_dict() if self.fundamental_cycle is not None else None
            ),
            "self_pairing": self.self_pairing,
            "correction": self.correction,
            "artin_sum": self.artin_sum,
            "is_rational": self.is_rational,
        }


def artin_correction(tree: DualGraph, z: Cycle) -> int:
    """``sum a_i (-w_i - 2)``."""
    return sum(a * (-w - 2) for a, w in zip(z.coeffs, tree.weights))


def artin_check(tree: LabelledTree) -> RationalityReport:
    """Evaluate the three combinatorial conditions for a rational tree.

    The existence of some ``Z`` in Z_top with ``Z.Z < 0`` is equivalent to
    negative definiteness of the form; when it holds the fundamental cycle
    itself is such a witness.
    """
    weights_ok = all(w <= -2 for w in tree.weights)
    form = intersection_matrix(tree)
    negdef = is_negative_definite(form)
    if not negdef:
        return RationalityReport(weights_ok, False, None, None, None, None, False)
    zf = laufer(tree)
    zz = pair(form, zf, zf)
    corr = artin_correction(tree, zf)
    total = zz + corr
    return RationalityReport(
        weights_ok=weights_ok,
        negative_definite=zz < 0,
        fundamental_cycle=zf,
        self_pairing=zz,
        correction=corr,
        artin_sum=total,
        is_rational=weights_ok and zz < 0 and total == -2,
    )
