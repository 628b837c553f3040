"""Evaluators for the word function that extends Pfaffians.

A word of even length 2k is assigned the signed sum, over all partitions
of its letters into k pairs, of the products of the paired matrix
entries. Three conventions are applied before any arithmetic, in every
evaluator: the empty word has value 1, odd-length words have value 0,
and a word with a repeated letter has value 0. On a sorted repeat-free
word of even size this value is the Pfaffian of the principal submatrix
selected by the word.

Three independent evaluators are provided.

pf_matchsum enumerates the pairings directly; it is the brute-force
reference everything else is judged against.

pf_expand recurses on the expansion along the smallest letter, with
memoization keyed by sorted words; unsorted queries are answered through
the sign of the sorting permutation.

pf_eliminate runs fraction-free skew Gaussian elimination in cubic time
and only accepts the integer and rational rings, where its divisions are
exact.
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import words
from .scalar import ModularRing, Scalar, UnsupportedRingError, exact_div
from .skewmatrix import IndexSet, SkewMatrix

STRATEGIES = ("expand", "matchsum", "eliminate")


class PfCache:
    """Memo of word values, keyed by sorted repeat-free words.

    A cache belongs to one matrix; reusing it with another matrix gives
    wrong answers. Callers that share a cache across threads must
    serialize writes; reads of a frozen cache are safe anywhere.
    """

    __slots__ = ("_memo",)

    def __init__(self):
        self._memo: dict[words.Word, Scalar] = {}

    def __len__(self):
        return len(self._memo)


def _check_letters(T: SkewMatrix, word: Sequence[int]) -> None:
    n = T.n
    for letter in word:
        if not (1 <= letter <= n):
            raise IndexError(f"letter {letter} outside 1..{n}")


def _pairing_sum(T: SkewMatrix, word: Sequence[int]) -> Scalar:
    """Raw signed sum over all pairings of the word's positions.

    No degenerate-input shortcuts: repeated letters are enumerated like
    any others (their contributions cancel against the zero diagonal, a
    fact the tests check rather than assume). Odd-length words come out
    zero because no pairing exists.
    """
    ring = T.ring
    grid = T._grid
    zero = ring.zero

    def rec(w: tuple[int, ...]) -> Scalar:
        a = w[0]
        row = grid[a]
        total = zero
        for g in range(1, len(w)):
            t = row[w[g]]
            if t != zero:
                rest = w[1:g] + w[g + 1 :]
                term = t * rec(rest) if rest else t
                # Pairing the first letter with position g costs (-1)**(g-1).
                total = total - term if g & 1 == 0 else total + term
        return total

    w = tuple(word)
    if not w:
        return ring.one
    return rec(w)


def pf_matchsum(T: SkewMatrix, alpha: Sequence[int]) -> Scalar:
    """Word value by direct enumeration of all pairings."""
    word = tuple(alpha)
    _check_letters(T, word)
    ring = T.ring
    if len(word) & 1:
        return ring.zero
    if not word:
        return ring.one
    if len(set(word)) != len(word):
        return ring.zero
    return _pairing_sum(T, word)


def _expand_sorted(grid, w: words.Word, memo: dict, zero: Scalar) -> Scalar:
    """Value of a sorted repeat-free even word by expansion on its first letter."""
    cached = memo.get(w)
    if cached is not None:
        return cached
    a = w[0]
    rest = w[1:]
    row = grid[a]
    total = zero
    negate = False
    for idx in range(len(rest)):
        t = row[rest[idx]]
        if t != zero:
            sub = rest[:idx] + rest[idx + 1 :]
            term = t * _expand_sorted(grid, sub, memo, zero) if sub else t
            total = total - term if negate else total + term
        negate = not negate
    memo[w] = total
    return total


def _pf_word(T: SkewMatrix, word: words.Word, cache: PfCache) -> Scalar:
    """pf_expand without letter validation, for callers that already checked."""
    ring = T.ring
    length = len(word)
    if length & 1:
        return ring.zero
    if not length:
        return ring.one
    if len(set(word)) != length:
        return ring.zero
    ordered = tuple(sorted(word))
    s = 1 if word == ordered else words.sign(word, ordered)
    value = _expand_sorted(T._grid, ordered, cache._memo, ring.zero)
    return value if s > 0 else -value


def pf_expand(T: SkewMatrix, alpha: Sequence[int], cache: Optional[PfCache] = None) -> Scalar:
    """Word value by memoized expansion along the smallest letter.

    Agrees with pf_matchsum on every word. Pass a cache to share work
    across many words of the same matrix.
    """
    word = tuple(alpha)
    _check_letters(T, word)
    return _pf_word(T, word, cache if cache is not None else PfCache())


def pf_eliminate(T: SkewMatrix, indices: Sequence[int]) -> Scalar:
    """Pfaffian of the principal submatrix on an index set, by elimination.

    Fraction-free two-row pivoting in O(m**3) ring operations. Integer
    and rational rings only; the elimination schedule guarantees every
    integer division is exact, so a non-divisible quotient raises and
    would signal a bug here, never bad input.
    """
    R = IndexSet(indices)
    _check_letters(T, R)
    ring = T.ring
    if isinstance(ring, ModularRing):
        raise UnsupportedRingError("pf_eliminate requires the integer or rational ring")
    m = len(R)
    if m & 1:
        return ring.zero
    if m == 0:
        return ring.one
    grid = T._grid
    A = [[grid[r][c] for c in R] for r in R]
    zero = ring.zero
    prev = ring.one
    negate = False
    for i in range(0, m, 2):
        if A[i][i + 1] == zero:
            for j in range(i + 2, m):
                if A[i][j] != zero:
                    A[i + 1], A[j] = A[j], A[i + 1]
                    for row in A:
                        row[i + 1], row[j] = row[j], row[i + 1]
                    negate = not negate
                    break
            else:
                return zero
        p = A[i][i + 1]
        row_i = A[i]
        row_i1 = A[i + 1]
        for r in range(i + 2, m):
            row_r = A[r]
            a_ri = row_r[i]
            a_ri1 = row_r[i + 1]
            for c in range(r + 1, m):
                v = exact_div(p * row_r[c] - a_ri1 * row_i[c] + a_ri * row_i1[c], prev)
                row_r[c] = v
                A[c][r] = -v
        prev = p
    pf = A[m - 2][m - 1]
    return -pf if negate else pf


def pfaffian(T: SkewMatrix, indices: Sequence[int], strategy: str = "expand") -> Scalar:
    """Pfaffian of the principal submatrix on an index set.

    The default strategy is the memoized expansion; "matchsum" and
    "eliminate" select the brute-force and elimination evaluators.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    R = IndexSet(indices)
    if strategy == "matchsum":
        return pf_matchsum(T, R)
    if strategy == "eliminate":
        return pf_eliminate(T, R)
    return pf_expand(T, R)
