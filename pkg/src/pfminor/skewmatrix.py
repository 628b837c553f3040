"""Skew-symmetric matrices stored by their strict upper triangle.

Only entries above the diagonal are stored, so the zero diagonal and the
mirror rule entry(j, i) == -entry(i, j) hold by construction instead of
by audit. Indices are 1-based at every public surface.

The module also owns the plain-text matrix file format consumed by the
command line tool::

    # comment lines start with a hash
    skew <n> <ring>          ring is one of: int, rat, mod <m>
    <i> <j> <value>          one stored entry per line, i < j

Absent pairs are zero. A repeated (i, j) pair is an error, as is any
line with i >= j.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .scalar import Ring, Scalar, ZZ, parse_ring


class MatrixFormatError(ValueError):
    """A matrix file failed to parse; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IndexSet(tuple):
    """A strictly increasing tuple of 1-based indices.

    Input is sorted on construction; a duplicate index is an error, not
    something to deduplicate silently.
    """

    def __new__(cls, indices: Iterable[int] = ()):
        items = list(indices)
        for i in items:
            if not isinstance(i, int) or isinstance(i, bool):
                raise ValueError(f"indices must be integers, got {i!r}")
            if i < 1:
                raise ValueError(f"indices are 1-based, got {i}")
        items.sort()
        for a, b in zip(items, items[1:]):
            if a == b:
                raise ValueError(f"duplicate index {a}")
        return super().__new__(cls, items)

    def __repr__(self):
        return f"IndexSet({list(self)})"


def odd_lift(indices: Sequence[int]) -> IndexSet:
    """Map each index r to 2r - 1; turns any set into odd indices."""
    return IndexSet(2 * r - 1 for r in IndexSet(indices))


def even_lift(indices: Sequence[int]) -> IndexSet:
    """Map each index s to 2s; turns any set into even indices."""
    return IndexSet(2 * s for s in IndexSet(indices))


@dataclass(frozen=True)
class GeneralMatrix:
    """A dense rows x cols matrix over one ring, entries row-major.

    Positions passed to :meth:`at` are 0-based; this is a plain value
    container, not a view into the source matrix's index space.
    """

    ring: Ring
    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be >= 0")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        for x in self.entries:
            self.ring.validate(x)

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Scalar]]) -> "GeneralMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        flat = tuple(x for row in rows for x in row)
        return cls(ring, nrows, ncols, flat)

    def at(self, a: int, b: int) -> Scalar:
        if not (0 <= a < self.rows and 0 <= b < self.cols):
            raise IndexError(f"position ({a}, {b}) outside {self.rows}x{self.cols} matrix")
        return self.entries[a * self.cols + b]

    def row_lists(self) -> list[list[Scalar]]:
        """Mutable row-major copy, for elimination algorithms."""
        c = self.cols
        return [list(self.entries[r * c : (r + 1) * c]) for r in range(self.rows)]


UpperEntries = Union[Mapping[tuple[int, int], Scalar], Iterable[tuple[int, int, Scalar]]]


class SkewMatrix:
    """An n x n skew-symmetric matrix with zero diagonal over one ring.

    Construction takes the strict upper triangle, either as a mapping
    {(i, j): value} or as an iterable of (i, j, value) triples with
    i < j. Entries equal to zero are dropped, so two matrices are equal
    exactly when their stored triangles match. Instances are immutable.
    """

    __slots__ = ("n", "ring", "_upper", "_grid", "_doubled")

    def __init__(self, n: int, ring: Ring = ZZ, entries: UpperEntries = ()):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"dimension must be an integer >= 0, got {n!r}")
        self.n = n
        self.ring = ring
        if isinstance(entries, Mapping):
            triples = [(i, j, v) for (i, j), v in entries.items()]
        else:
            triples = [(i, j, v) for (i, j, v) in entries]
        zero = ring.zero
        upper: dict[tuple[int, int], Scalar] = {}
        for i, j, v in triples:
            if not (isinstance(i, int) and isinstance(j, int)):
                raise ValueError(f"indices must be integers, got ({i!r}, {j!r})")
            if i == j:
                raise ValueError(f"diagonal entry ({i}, {j}) is not storable; it is fixed at zero")
            if i > j:
                raise ValueError(f"entry ({i}, {j}) is below the diagonal; store ({j}, {i}) instead")
            if not (1 <= i and j <= n):
                raise IndexError(f"entry ({i}, {j}) outside 1..{n}")
            if (i, j) in upper:
                raise ValueError(f"entry ({i}, {j}) given twice")
            v = ring.validate(v)
            if v != zero:
                upper[(i, j)] = v
        self._upper = upper
        grid = [[zero] * (n + 1) for _ in range(n + 1)]
        for (i, j), v in upper.items():
            grid[i][j] = v
            grid[j][i] = -v
        self._grid = tuple(tuple(row) for row in grid)
        self._doubled = None

    def entry(self, i: int, j: int) -> Scalar:
        """t_ij; zero on the diagonal, the negated mirror below it."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i}, {j}) outside 1..{self.n}")
        return self._grid[i][j]

    def upper_entries(self) -> Iterator[tuple[int, int, Scalar]]:
        """Stored (i, j, value) triples in row-major order."""
        for (i, j) in sorted(self._upper):
            yield i, j, self._upper[(i, j)]

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> GeneralMatrix:
        """The |R| x |S| matrix of entries (r, s) for r in R, s in S."""
        R = IndexSet(row_indices)
        S = IndexSet(col_indices)
        for idx in (*R, *S):
            if idx > self.n:
                raise IndexError(f"index {idx} outside 1..{self.n}")
        grid = self._grid
        flat = tuple(grid[r][s] for r in R for s in S)
        return GeneralMatrix(self.ring, len(R), len(S), flat)

    def double(self) -> "SkewMatrix":
        """The 2n x 2n matrix repeating every entry in a 2x2 block.

        Off the diagonal, entry(a, b) of the result equals
        entry(ceil(a/2), ceil(b/2)) of the source; each diagonal 2x2
        block is zero because the source diagonal is. The result is
        cached, which is safe because instances are immutable.
        """
        if self._doubled is None:
            upper: dict[tuple[int, int], Scalar] = {}
            for (i, j), v in self._upper.items():
                for a in (2 * i - 1, 2 * i):
                    for b in (2 * j - 1, 2 * j):
                        upper[(a, b)] = v
            self._doubled = SkewMatrix(2 * self.n, self.ring, upper)
        return self._doubled

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self.n == other.n and self.ring == other.ring and self._upper == other._upper

    def __hash__(self):
        return hash((self.n, self.ring, frozenset(self._upper.items())))

    def __repr__(self):
        return f"SkewMatrix(n={self.n}, ring={self.ring.token}, stored={len(self._upper)})"


def random_skew_matrix(
    rng: random.Random, n: int, ring: Ring = ZZ, entry_bound: int = 9
) -> SkewMatrix:
    """Uniform entries from [-entry_bound, entry_bound], mapped into the ring.

    Iteration order over the triangle is fixed, so a seeded generator
    reproduces the same matrix.
    """
    entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            entries[(i, j)] = ring.from_int(rng.randint(-entry_bound, entry_bound))
    return SkewMatrix(n, ring, entries)


def parse_skew_matrix(text: str) -> SkewMatrix:
    """Parse the matrix file format; errors carry 1-based line numbers."""
    ring: Ring | None = None
    n = 0
    upper: dict[tuple[int, int], Scalar] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ring is None:
            parts = line.split()
            if parts[0] != "skew" or len(parts) < 3:
                raise MatrixFormatError(
                    f"expected header 'skew <n> <ring>', got {line!r}", lineno
                )
            try:
                n = int(parts[1])
            except ValueError:
                raise MatrixFormatError(f"bad dimension {parts[1]!r}", lineno) from None
            if n < 0:
                raise MatrixFormatError(f"dimension must be >= 0, got {n}", lineno)
            try:
                ring = parse_ring(" ".join(parts[2:]))
            except ValueError as exc:
                raise MatrixFormatError(str(exc), lineno) from None
            continue
        parts = line.split(maxsplit=2)
        if len(parts) != 3:
            raise MatrixFormatError(f"expected '<i> <j> <value>', got {line!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise MatrixFormatError(f"bad indices in {line!r}", lineno) from None
        if i == j:
            raise MatrixFormatError(f"diagonal entry ({i}, {j}) is fixed at zero", lineno)
        if i > j:
            raise MatrixFormatError(f"entry ({i}, {j}) must be given as ({j}, {i})", lineno)
        if not (1 <= i and j <= n):
            raise MatrixFormatError(f"entry ({i}, {j}) outside 1..{n}", lineno)
        if (i, j) in upper:
            raise MatrixFormatError(f"entry ({i}, {j}) given twice", lineno)
        try:
            upper[(i, j)] = ring.parse(parts[2])
        except ValueError as exc:
            raise MatrixFormatError(str(exc), lineno) from None
    if ring is None:
        raise MatrixFormatError("missing 'skew <n> <ring>' header")
    return SkewMatrix(n, ring, upper)


def format_skew_matrix(T: SkewMatrix) -> str:
    """Serialize a matrix in the file format; round-trips through parse."""
    lines = [f"skew {T.n} {T.ring.token}"]
    for i, j, v in T.upper_entries():
        lines.append(f"{i} {j} {T.ring.literal(v)}")
    return "\n".join(lines) + "\n"
