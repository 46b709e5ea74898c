"""Column diagrams, fillings, and the queue-inversion / HHL statistics.

The diagram of a partition lam = (lam_1 >= ... >= lam_k) has k
bottom-justified columns, the i'th of height lam_i.  Cell (r, i) lies in
row r (counted from the bottom, starting at 1) of column i.  The reading
order runs along rows from right to left, rows taken top to bottom.

A triple consists of cells (r+1, i), (r, i), (r, j) with i < j, drawn

        a .
        b ... c

and degenerates to the pair (r, i), (r, j) when column i ends at row r, in
which case the missing top entry is taken to be 0.  With I(x, y) = 1 iff
x > y, the triple is a queue-inversion (quinv) triple iff exactly one of

        I(a, b) = 1,   I(c, b) = 0,   I(a, c) = 0

holds.  For distinct entries this says a, b, c increase counterclockwise;
ties: (a = b != c) counts, all-equal does not, and a degenerate triple
counts iff b < c.

The HHL inversion statistic uses the mirrored triples (r, i), (r-1, i),
(r, j) with i < j, degenerate at r = 1 with the missing bottom entry taken
to be +infinity.

Both statistics weight the same fillings sum:

    sum over fillings sigma of  x^sigma t^stat(sigma) q^maj(sigma)

and the two sums agree (this is the headline check of the test suite);
their common value is the modified Macdonald polynomial of lam truncated
to n variables.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import inf
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from macq.algebra import MPoly
from macq.symfunc import Partition, check_partition, conjugate

Cell = Tuple[int, int]  # (row, column), both 1-based


# ------------------------------------------------------------------ diagram

@lru_cache(maxsize=None)
def reading_order(lam: Partition) -> Tuple[Cell, ...]:
    """Cells in reading order: rows top to bottom, right to left in a row."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    cells: List[Cell] = []
    nrows = lam[0] if lam else 0
    for r in range(nrows, 0, -1):
        for i in range(conj[r - 1], 0, -1):
            cells.append((r, i))
    return tuple(cells)


def leg(lam: Partition, cell: Cell) -> int:
    """Number of cells above `cell` in its column."""
    r, i = cell
    if not (1 <= i <= len(lam) and 1 <= r <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside diagram of {lam}")
    return lam[i - 1] - r


def size(lam: Partition) -> int:
    return sum(lam)


# ------------------------------------------------------------------ filling

class Filling:
    """A filling of the diagram of `lam` with entries in 1..n.

    Entries are stored per column, bottom to top: entry(r, i) is
    cols[i-1][r-1].
    """

    __slots__ = ("lam", "cols", "n")

    def __init__(self, lam: Partition, cols: Tuple[Tuple[int, ...], ...], n: int):
        self.lam = lam
        self.cols = cols
        self.n = n

    @classmethod
    def from_rows(cls, lam: Sequence[int], rows: Sequence[Sequence[int]],
                  n: int) -> "Filling":
        """Build from rows listed bottom to top."""
        lam = check_partition(tuple(lam))
        conj = conjugate(lam)
        if [len(r) for r in rows] != list(conj):
            raise ValueError(f"row lengths {[len(r) for r in rows]} != {conj}")
        cols = tuple(tuple(rows[r][i] for r in range(lam[i]))
                     for i in range(len(lam)))
        return cls(lam, cols, n)

    def entry(self, r: int, i: int) -> int:
        return self.cols[i - 1][r - 1]

    def rows(self) -> List[Tuple[int, ...]]:
        conj = conjugate(self.lam)
        return [tuple(self.cols[i][r] for i in range(conj[r]))
                for r in range(len(conj))]

    def content(self) -> Tuple[int, ...]:
        counts = [0] * self.n
        for col in self.cols:
            for v in col:
                counts[v - 1] += 1
        return tuple(counts)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Filling) and self.lam == other.lam
                and self.cols == other.cols and self.n == other.n)

    def __hash__(self):
        return hash((self.lam, self.cols, self.n))

    def __repr__(self):
        return f"Filling({self.lam}, {to_text(self)!r})"


def to_text(f: Filling) -> str:
    """Rows bottom to top, comma-separated, rows joined by ';'."""
    return ";".join(",".join(str(v) for v in row) for row in f.rows())


def from_text(s: str, lam: Sequence[int], n: int) -> Filling:
    rows = [[int(v) for v in row.split(",")] for row in s.split(";")]
    f = Filling.from_rows(tuple(lam), rows, n)
    for col in f.cols:
        for v in col:
            if not 1 <= v <= n:
                raise ValueError(f"entry {v} outside alphabet 1..{n}")
    return f


def enumerate_fillings(lam: Partition, n: int,
                       prefix: Tuple[int, ...] = ()) -> Iterator[Filling]:
    """All n^|lam| fillings, as a base-n counter over reading-order cells.

    A prefix pins the first len(prefix) reading-order entries, so disjoint
    prefixes partition the enumeration (parallelism-friendly).
    """
    lam = check_partition(lam)
    if n < 1:
        raise ValueError("alphabet bound must be >= 1")
    cells = reading_order(lam)
    free = len(cells) - len(prefix)
    if free < 0:
        raise ValueError("prefix longer than the diagram")
    for values in product(range(1, n + 1), repeat=free):
        cols: List[List[int]] = [[0] * h for h in lam]
        for (r, i), v in zip(cells, prefix + values):
            cols[i - 1][r - 1] = v
        yield Filling(lam, tuple(tuple(c) for c in cols), n)


# --------------------------------------------------------------- statistics

def is_quinv_triple(a: int, b: int, c: int) -> bool:
    """Membership of contents (a, b, c) in the quinv set; a may be 0."""
    return ((a > b) + (c <= b) + (a <= c)) == 1


def quinv(f: Filling) -> int:
    """Number of quinv triples, degenerate triples at column tops included."""
    lam, cols = f.lam, f.cols
    total = 0
    for j in range(1, len(lam)):
        cj = cols[j]
        for i in range(j):
            ci = cols[i]
            hi = lam[i]
            for r in range(lam[j]):
                a = ci[r + 1] if r + 1 < hi else 0
                if ((a > ci[r]) + (cj[r] <= ci[r]) + (a <= cj[r])) == 1:
                    total += 1
    return total


def hhl_inv(f: Filling) -> int:
    """HHL inversion triples (r,i),(r-1,i),(r,j); virtual bottom entry +inf."""
    lam, cols = f.lam, f.cols
    total = 0
    for j in range(1, len(lam)):
        cj = cols[j]
        for i in range(j):
            ci = cols[i]
            for r in range(lam[j]):
                a = ci[r]
                b = ci[r - 1] if r >= 1 else inf
                c = cj[r]
                if ((a > b) + (c <= b) + (a <= c)) == 1:
                    total += 1
    return total


def descent_set(f: Filling) -> frozenset:
    """Cells whose entry strictly exceeds the entry directly below."""
    out = []
    for i, col in enumerate(f.cols, start=1):
        for r in range(2, len(col) + 1):
            if col[r - 1] > col[r - 2]:
                out.append((r, i))
    return frozenset(out)


def maj(f: Filling) -> int:
    """Sum of leg+1 over descent cells; row-1 cells never contribute."""
    lam = f.lam
    total = 0
    for i, col in enumerate(f.cols):
        h = lam[i]
        for r in range(2, h + 1):
            if col[r - 1] > col[r - 2]:
                total += h - r + 1
    return total


def hat_arm(lam: Partition, cell: Cell) -> int:
    """Cells one row below and strictly to the right of `cell`."""
    leg(lam, cell)  # validates the cell
    r, i = cell
    if r == 1:
        return 0
    return conjugate(lam)[r - 2] - i


def hat_inv(f: Filling) -> int:
    """Attacking inversions: pairs in the same row (right > left entry-wise
    read as sigma(u) > sigma(v) for u right of v), or with u one row above
    and strictly left of v, sigma(u) > sigma(v)."""
    conj = conjugate(f.lam)
    rows = f.rows()
    total = 0
    for r in range(1, len(conj) + 1):
        row = rows[r - 1]
        w = conj[r - 1]
        for jj in range(w):
            for ii in range(jj + 1, w):
                if row[ii] > row[jj]:  # u=(r,ii+1) right of v=(r,jj+1)
                    total += 1
        if r >= 2:
            below = rows[r - 2]
            wb = conj[r - 2]
            for ii in range(w):
                for jj in range(ii + 1, wb):
                    if row[ii] > below[jj]:  # u=(r,ii+1), v=(r-1,jj+1), i<j
                        total += 1
    return total


def weight(f: Filling) -> MPoly:
    """x^sigma t^quinv(sigma) q^maj(sigma) as a one-term polynomial."""
    return MPoly(f.n, {(f.content(), maj(f), quinv(f)): 1})


def hhl_weight(f: Filling) -> MPoly:
    return MPoly(f.n, {(f.content(), maj(f), hhl_inv(f)): 1})


# ----------------------------------------------------- the two formula sums

def filling_sum(lam: Partition, n: int, stat,
                prefix: Tuple[int, ...] = ()) -> MPoly:
    """sum of x^sigma t^stat(sigma) q^maj(sigma), optionally over the
    fillings with a pinned reading-order prefix."""
    acc: Dict[tuple, int] = {}
    for f in enumerate_fillings(lam, n, prefix):
        key = (f.content(), maj(f), stat(f))
        acc[key] = acc.get(key, 0) + 1
    return MPoly(n, acc)


def macdonald_quinv(lam: Partition, n: int) -> MPoly:
    """sum over fillings of x^sigma t^quinv q^maj."""
    return filling_sum(check_partition(lam), n, quinv)


def macdonald_hhl(lam: Partition, n: int) -> MPoly:
    """sum over fillings of x^sigma t^inv q^maj with the HHL statistic."""
    return filling_sum(check_partition(lam), n, hhl_inv)


# ------------------------------------------------------ row-equivalency data

RowClass = Tuple[Tuple[int, ...], ...]  # per row, bottom to top, sorted entries


def row_class(f: Filling) -> RowClass:
    return tuple(tuple(sorted(row)) for row in f.rows())


def _multiset_perms(values: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    return sorted(set(permutations(values)))


def class_members(lam: Partition, n: int, rc: RowClass) -> Iterator[Filling]:
    """All fillings whose row multisets match rc (rows are independent)."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    if [len(ms) for ms in rc] != list(conj):
        raise ValueError(f"class row sizes {[len(m) for m in rc]} != {conj}")
    per_row = [_multiset_perms(tuple(ms)) for ms in rc]
    for rows in product(*per_row):
        yield Filling.from_rows(lam, rows, n)


def class_gf(lam: Partition, n: int, rc: RowClass, stat: str = "quinv") -> MPoly:
    """Generating function sum t^stat q^maj over a row-equivalency class."""
    statf = {"quinv": quinv, "hhl": hhl_inv}[stat]
    acc: Dict[tuple, int] = {}
    for f in class_members(lam, n, rc):
        key = ((), maj(f), statf(f))
        acc[key] = acc.get(key, 0) + 1
    return MPoly(0, acc)


def search_delta(lam: Partition, n: int, rc: RowClass
                 ) -> Optional[List[Tuple[Filling, Filling]]]:
    """A pairing of class members matching (maj, quinv) to (maj, hhl inv).

    Exists iff the two key multisets over the class agree; returns None
    (a reportable finding, not an error) otherwise.
    """
    members = list(class_members(lam, n, rc))
    left: Dict[tuple, List[Filling]] = {}
    right: Dict[tuple, List[Filling]] = {}
    for f in members:
        left.setdefault((maj(f), quinv(f)), []).append(f)
        right.setdefault((maj(f), hhl_inv(f)), []).append(f)
    if sorted(left) != sorted(right):
        return None
    if any(len(left[k]) != len(right[k]) for k in left):
        return None
    pairing: List[Tuple[Filling, Filling]] = []
    for key in sorted(left):
        for src, dst in zip(sorted(left[key], key=lambda f: f.cols),
                            sorted(right[key], key=lambda f: f.cols)):
            pairing.append((src, dst))
    return pairing


def row_classes(lam: Partition, n: int) -> Dict[RowClass, List[Filling]]:
    """Partition of all fillings of (lam, n) into row-equivalency classes."""
    out: Dict[RowClass, List[Filling]] = {}
    for f in enumerate_fillings(lam, n):
        out.setdefault(row_class(f), []).append(f)
    return out
