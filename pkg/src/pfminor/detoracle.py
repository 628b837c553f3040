"""Determinant oracles used as ground truth.

Two deliberately independent routes: recursive first-row cofactor
expansion (factorial time, any ring, small matrices only) and
fraction-free Bareiss elimination (cubic time, integer and rational
rings). Each one cross-checks the other and both cross-check the
Pfaffian machinery.
"""

from __future__ import annotations

from .scalar import ModularRing, Scalar, UnsupportedRingError, exact_div
from .skewmatrix import GeneralMatrix

MAX_COFACTOR_DIM = 8


def _require_square(M: GeneralMatrix) -> int:
    if M.rows != M.cols:
        raise ValueError(f"determinant needs a square matrix, got {M.rows}x{M.cols}")
    return M.rows


def det_cofactor(M: GeneralMatrix) -> Scalar:
    """Exact determinant by first-row Laplace expansion, full depth.

    Guarded to dimension MAX_COFACTOR_DIM; the cost is factorial and the
    point is obvious correctness, not speed. The empty matrix has
    determinant one.
    """
    n = _require_square(M)
    if n > MAX_COFACTOR_DIM:
        raise ValueError(f"cofactor oracle is limited to dimension {MAX_COFACTOR_DIM}, got {n}")
    zero = M.ring.zero
    if n == 0:
        return M.ring.one

    def expand(rows: list[list[Scalar]]) -> Scalar:
        if len(rows) == 1:
            return rows[0][0]
        first = rows[0]
        rest = rows[1:]
        total = zero
        for j, pivot in enumerate(first):
            if pivot == zero:
                continue
            minor = [row[:j] + row[j + 1 :] for row in rest]
            term = pivot * expand(minor)
            total = total - term if j & 1 else total + term
        return total

    return expand(M.row_lists())


def det_bareiss(M: GeneralMatrix) -> Scalar:
    """Exact determinant by fraction-free elimination.

    Pivots by row search when a leading entry vanishes, tracking the swap
    parity; a column with no pivot means the determinant is zero. Over
    the integers every division is exact by Sylvester's identity; a
    failed division would raise and signal a bug.
    """
    n = _require_square(M)
    if isinstance(M.ring, ModularRing):
        raise UnsupportedRingError("det_bareiss requires the integer or rational ring")
    ring = M.ring
    if n == 0:
        return ring.one
    A = M.row_lists()
    zero = ring.zero
    prev = ring.one
    negate = False
    for k in range(n - 1):
        if A[k][k] == zero:
            for r in range(k + 1, n):
                if A[r][k] != zero:
                    A[k], A[r] = A[r], A[k]
                    negate = not negate
                    break
            else:
                return zero
        pivot = A[k][k]
        row_k = A[k]
        for i in range(k + 1, n):
            row_i = A[i]
            a_ik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * pivot - a_ik * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
    d = A[n - 1][n - 1]
    return -d if negate else d
