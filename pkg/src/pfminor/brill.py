"""Minors of a skew-symmetric matrix as signed sums of Pfaffian products.

For row and column sets R, S of equal size m, the determinant of the
rectangular submatrix T[R; S] equals

    (-1)**(m//2) * sum over k of (-1)**k * sum over even subwords w of
    the row word (|w| = 2k) of  sgn * P[w] * P[(rest of rows)(columns)]

where P is the word function from the pfaffian module and sgn is the
sign of unshuffling w to the front of the row word. The formula is
evaluated verbatim here, for disjoint and overlapping R, S alike.

When R and S overlap, a subword w that misses part of the overlap makes
the concatenated word repeat a letter, so its term is zero by the word
conventions. Those terms can be skipped outright; the skip is an
optimization with no effect on the value, and both behaviors are
exposed.

A second, independent route doubles the matrix first: every minor of T
is a minor of the doubled matrix with odd-lifted rows and even-lifted
columns, which never overlap. Agreement of the two routes on overlapping
inputs is one of the package's acceptance properties.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .pfaffian import PfCache, _check_letters, _pf_word
from .scalar import Scalar
from .skewmatrix import IndexSet, SkewMatrix, even_lift, odd_lift

PATH_DIRECT = "direct_brill"
PATH_DOUBLING = "doubling"
PATH_ORACLE = "oracle"


@dataclass(frozen=True)
class MinorReport:
    """A minor's value plus bookkeeping about how it was computed.

    For the formula paths, terms_evaluated + terms_skipped_vanishing
    equals the total number of even-size subwords of the row word.
    """

    value: Scalar
    path: str
    terms_evaluated: int
    terms_skipped_vanishing: int


def _validated_pair(T: SkewMatrix, row_indices, col_indices) -> tuple[IndexSet, IndexSet]:
    R = IndexSet(row_indices)
    S = IndexSet(col_indices)
    if len(R) != len(S):
        raise ValueError(
            f"row set has {len(R)} indices but column set has {len(S)}; "
            "minors need equal-size sets"
        )
    _check_letters(T, R)
    _check_letters(T, S)
    return R, S


def _minor_sum(
    T: SkewMatrix,
    R: IndexSet,
    S: IndexSet,
    skip_vanishing: bool,
    cache: Optional[PfCache],
    path: str,
) -> MinorReport:
    ring = T.ring
    m = len(R)
    rho = tuple(R)
    sigma = tuple(S)
    overlap = frozenset(rho) & frozenset(sigma)
    must_contain = bool(overlap)
    if cache is None:
        cache = PfCache()
    total = ring.zero
    evaluated = 0
    skipped = 0
    base_parity = (m // 2) & 1
    for k in range(m // 2 + 1):
        # Unshuffling positions p0 < ... < p(2k-1) to the front costs
        # (-1)**(sum(p) - (0 + 1 + ... + (2k-1))).
        k_parity = (base_parity + k + k * (2 * k - 1)) & 1
        for pos in combinations(range(m), 2 * k):
            omega = tuple(rho[p] for p in pos)
            if must_contain and skip_vanishing and not overlap.issubset(omega):
                skipped += 1
                continue
            evaluated += 1
            pf_front = _pf_word(T, omega, cache)
            if not pf_front:
                continue
            chosen = set(pos)
            rest = tuple(rho[i] for i in range(m) if i not in chosen)
            pf_back = _pf_word(T, rest + sigma, cache)
            if not pf_back:
                continue
            term = pf_front * pf_back
            if (k_parity + sum(pos)) & 1:
                total = total - term
            else:
                total = total + term
    return MinorReport(total, path, evaluated, skipped)


def brill_minor(
    T: SkewMatrix,
    row_indices: Sequence[int],
    col_indices: Sequence[int],
    *,
    skip_vanishing: bool = True,
    cache: Optional[PfCache] = None,
) -> MinorReport:
    """det(T[R; S]) by the Pfaffian double sum, evaluated directly.

    Works for any overlap pattern of R and S. An optional cache (keyed
    against T) shares word values across minors of the same matrix.
    """
    R, S = _validated_pair(T, row_indices, col_indices)
    return _minor_sum(T, R, S, skip_vanishing, cache, PATH_DIRECT)


def brill_minor_via_doubling(
    T: SkewMatrix,
    row_indices: Sequence[int],
    col_indices: Sequence[int],
    *,
    cache: Optional[PfCache] = None,
) -> MinorReport:
    """det(T[R; S]) through the doubled matrix, as an independent witness.

    Rows lift to odd indices and columns to even ones, so the lifted sets
    never overlap and the double sum runs in its disjoint form. An
    optional cache must be keyed against T.double(), not T.
    """
    R, S = _validated_pair(T, row_indices, col_indices)
    doubled = T.double()
    report = _minor_sum(
        doubled, odd_lift(R), even_lift(S), True, cache, PATH_DOUBLING
    )
    return report


def vanishing_term_check(
    T: SkewMatrix, row_indices: Sequence[int], col_indices: Sequence[int]
) -> bool:
    """Confirm that every subword missing part of the overlap contributes zero.

    True is the only correct outcome; the check exists as a self-test of
    the repeated-letter convention that the skip optimization relies on.
    Vacuously true when R and S are disjoint.
    """
    R, S = _validated_pair(T, row_indices, col_indices)
    m = len(R)
    rho = tuple(R)
    sigma = tuple(S)
    overlap = frozenset(rho) & frozenset(sigma)
    if not overlap:
        return True
    zero = T.ring.zero
    cache = PfCache()
    for k in range(m // 2 + 1):
        for pos in combinations(range(m), 2 * k):
            omega = tuple(rho[p] for p in pos)
            if overlap.issubset(omega):
                continue
            chosen = set(pos)
            rest = tuple(rho[i] for i in range(m) if i not in chosen)
            if _pf_word(T, rest + sigma, cache) != zero:
                return False
    return True
