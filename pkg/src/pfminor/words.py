"""Words over 1-based letters and the sign relating two rearrangements.

A word is a plain tuple of positive integers; repeats are allowed and
order matters. Functions accept any integer sequence and return tuples.

sign(alpha, beta) is the workhorse of the whole package: it is +1 or -1
when beta is a repeat-free rearrangement of alpha, and 0 in every
degenerate case (a repeated letter, unequal lengths, different letter
sets). Returning 0 instead of raising keeps summations uniform, since
degenerate terms are exactly the ones that must vanish.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

Word = tuple[int, ...]


def sort_word(alpha: Iterable[int]) -> Word:
    """The letters of alpha in non-decreasing order."""
    return tuple(sorted(alpha))


def has_repeated_letter(alpha: Sequence[int]) -> bool:
    return len(set(alpha)) != len(alpha)


def _merge_count(seq: list[int]) -> tuple[list[int], int]:
    # Merge sort that also counts inversions.
    n = len(seq)
    if n < 2:
        return seq, 0
    mid = n // 2
    left, linv = _merge_count(seq[:mid])
    right, rinv = _merge_count(seq[mid:])
    merged: list[int] = []
    inv = linv + rinv
    i = j = 0
    nl = len(left)
    while i < nl and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            inv += nl - i
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, inv


def sign(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Sign of the permutation carrying alpha to beta, or 0 if there is none.

    The result is 0 whenever either word has a repeated letter or the two
    words are not rearrangements of each other; otherwise it is the parity
    of the permutation, computed by inversion counting.
    """
    if len(alpha) != len(beta):
        return 0
    position: dict[int, int] = {}
    for i, letter in enumerate(alpha):
        if letter in position:
            return 0
        position[letter] = i
    perm: list[int] = []
    seen = 0
    for letter in beta:
        i = position.get(letter)
        if i is None:
            return 0
        perm.append(i)
        seen |= 1 << i
    if seen.bit_count() != len(perm):
        return 0
    _, inversions = _merge_count(perm)
    return -1 if inversions & 1 else 1


def word_remove(alpha: Sequence[int], gamma: Sequence[int]) -> Word:
    """alpha with one occurrence of each letter of gamma deleted.

    The earliest occurrences are removed and the order of the remaining
    letters is preserved. A letter of gamma that is not available in
    alpha is a caller bug and raises ValueError.
    """
    need = Counter(gamma)
    kept: list[int] = []
    for letter in alpha:
        if need[letter] > 0:
            need[letter] -= 1
        else:
            kept.append(letter)
    missing = +need
    if missing:
        raise ValueError(f"letters not present to remove: {sorted(missing.elements())}")
    return tuple(kept)


def subwords_of_size(alpha: Sequence[int], k: int) -> list[Word]:
    """All order-preserving selections of k letters from alpha.

    alpha is assumed repeat-free. Subwords are listed in lexicographic
    order of the selected positions, so the order is deterministic.
    """
    if k < 0:
        raise ValueError(f"subword size must be >= 0, got {k}")
    return list(combinations(alpha, k))
