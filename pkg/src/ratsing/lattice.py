"""Exact intersection-form arithmetic on the lattice of cycles.

Everything here is integer or :class:`fractions.Fraction` arithmetic; no
floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dualgraph import Cycle, DualGraph

Matrix = tuple[tuple[int, ...], ...]


class SingularMatrixError(ArithmeticError):
    pass


class NotNegativeDefiniteError(ValueError):
    pass


@dataclass(frozen=True)
class IntersectionForm:
    """Symmetric integer matrix of a dual graph, rows in declared vertex order."""

    vertices: tuple[str, ...]
    matrix: Matrix

    def __len__(self) -> int:
        return len(self.vertices)

    def rows(self) -> str:
        return "\n".join(" ".join(f"{x:d}" for x in row) for row in self.matrix)

    def restrict(self, subset: Sequence[str]) -> IntersectionForm:
        """Principal subform on ``subset`` (kept in declared order)."""
        wanted = set(subset)
        idx = [i for i, v in enumerate(self.vertices) if v in wanted]
        return IntersectionForm(
            tuple(self.vertices[i] for i in idx),
            tuple(tuple(self.matrix[i][j] for j in idx) for i in idx),
        )


@dataclass(frozen=True)
class DiscrepancyVector:
    vertices: tuple[str, ...]
    values: tuple[Fraction, ...]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.vertices, self.values))

    def is_zero(self) -> bool:
        return not any(self.values)


def intersection_matrix(tree: DualGraph) -> IntersectionForm:
    n = len(tree)
    rows = [[0] * n for _ in range(n)]
    for i, w in enumerate(tree.weights):
        rows[i][i] = w
    for u, v in tree.edges:
        i, j = tree.index[u], tree.index[v]
        rows[i][j] = rows[j][i] = 1
    return IntersectionForm(tree.vertices, tuple(map(tuple, rows)))


def _coeffs(form: IntersectionForm, z: Cycle | Sequence[int]) -> Sequence[int]:
    if isinstance(z, Cycle):
        if z.vertices != form.vertices:
            raise ValueError("cycle and form are indexed by different vertex sets")
        return z.coeffs
    if len(z) != len(form):
        raise ValueError(f"dimension mismatch: {len(z)} != {len(form)}")
    return z


def pair(form: IntersectionForm, y: Cycle | Sequence[int], z: Cycle | Sequence[int]) -> int:
    """The bilinear pairing ``y . z = y^T M z``."""
    a, b = _coeffs(form, y), _coeffs(form, z)
    total = 0
    for i, row in enumerate(form.matrix):
        if a[i]:
            total += a[i] * sum(m * bj for m, bj in zip(row, b) if m)
    return total


def pairing_vector(form: IntersectionForm, z: Cycle | Sequence[int]) -> tuple[int, ...]:
    """``(z . E_i)`` for every vertex ``i``."""
    b = _coeffs(form, z)
    return tuple(sum(m * bj for m, bj in zip(row, b)) for row in form.matrix)


def leading_minors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Leading principal minors ``det M[:k,:k]`` for k = 1..n by Bareiss elimination.

    No pivoting is done, so elimination stops at the first vanishing minor; the
    returned list is then shorter than ``n`` and ends with that zero.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination with row pivoting."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def is_negative_definite(form: IntersectionForm | Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion: ``(-1)^k det M_k > 0`` for every leading minor."""
    matrix = form.matrix if isinstance(form, IntersectionForm) else form
    minors = leading_minors(matrix)
    if len(minors) < len(matrix):
        return False
    return all((-1) ** k * d > 0 for k, d in enumerate(minors, start=1))


def solve_rational(
    form: IntersectionForm | Sequence[Sequence[int]], b: Sequence[int | Fraction]
) -> tuple[Fraction, ...]:
    """Solve ``M x = b`` exactly over the rationals."""
    matrix = form.matrix if isinstance(form, IntersectionForm) else form
    n = len(matrix)
    if len(b) != n:
        raise ValueError(f"dimension mismatch: {len(b)} != {n}")
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(matrix, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k]:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    x = tuple(row[n] for row in aug)
    for row, bi in zip(matrix, b):
        if sum(m * xi for m, xi in zip(row, x)) != bi:
            raise ArithmeticError("back-substitution failed")  # pragma: no cover
    return x


def canonical_rhs(weights: Sequence[int]) -> tuple[int, ...]:
    """Adjunction right-hand side ``b_i = -2 - w_i``."""
    return tuple(-2 - w for w in weights)


def discrepancies(tree: DualGraph) -> DiscrepancyVector:
    """Discrepancies ``d`` solving ``M d = (-2 - w_i)_i``.

    By adjunction ``K_Y = sum d_i E_i`` over the singularity, so ``d_i = 0``
    for every ``i`` exactly when the resolution is crepant.
    """
    form = intersection_matrix(tree)
    if not is_negative_definite(form):
        raise NotNegativeDefiniteError("intersection form is not negative definite")
    return DiscrepancyVector(tree.vertices, solve_rational(form, canonical_rhs(tree.weights)))
