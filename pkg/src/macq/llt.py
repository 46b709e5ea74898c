"""Ribbons, ribbon-tuple inversion polynomials, and the column-to-ribbon map.

A ribbon is a connected skew shape with no 2x2 square: a staircase path of
cells labeled 1..k from northwest to southeast, stepping east or south.
Its descent set collects the labels whose successor lies below them (a
south step).  Cells carry diagonals d(u) = row - col + 1 (rows numbered
bottom to top); ribbons here are always anchored so the southeast-most
cell sits on diagonal 1, which is all that matters since inversions only
compare diagonals.

A semistandard filling weakly increases along east steps and strictly
decreases along south steps (so columns increase bottom to top); filling a
ribbon with any word w whose descent set matches the shape is automatically
semistandard.

For a tuple of filled ribbons, cells u (in ribbon i) and v (in ribbon j)
form an inversion when entry(u) > entry(v) and either i < j with
d(u) = d(v), or i > j with d(u) = d(v) + 1.  The inversion-weighted sum

    G(nu; mbound) = sum over semistandard fillings with entries <= mbound
                    of t^inv x^content

is symmetric in the x's.  The tuple nu_hat(lam, D) built from a diagram
descent set D (one ribbon per column, rightmost column first) satisfies
G = F, where F sums t^(attacking inversions) x^sigma over fillings of the
diagram with descent set exactly D; the column-reading map realizes the
bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from macq.algebra import MPoly
from macq.symfunc import Partition, check_partition
from macq.tableaux import (Cell, Filling, descent_set, enumerate_fillings,
                           hat_inv)


@dataclass(frozen=True)
class Ribbon:
    """Cells of the path, northwest to southeast, last cell on diagonal 1."""
    cells: Tuple[Tuple[int, int], ...]  # (row, col)

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def des(self) -> FrozenSet[int]:
        out = []
        for i in range(len(self.cells) - 1):
            (r1, c1), (r2, c2) = self.cells[i], self.cells[i + 1]
            if (r2, c2) == (r1 - 1, c1):
                out.append(i + 1)
        return frozenset(out)

    @property
    def diagonals(self) -> Tuple[int, ...]:
        return tuple(r - c + 1 for r, c in self.cells)


def ribbon_shape(length: int, des) -> Ribbon:
    """The unique ribbon of the given length and descent set."""
    des = frozenset(des)
    if length < 1:
        raise ValueError("ribbon must have at least one cell")
    if not des <= set(range(1, length)):
        raise ValueError(f"descents {sorted(des)} outside 1..{length - 1}")
    cells = [(0, 0)]  # southeast-most cell; diagonal 0 - 0 + 1 = 1
    for i in range(length - 1, 0, -1):
        r, c = cells[0]
        cells.insert(0, (r + 1, c) if i in des else (r, c - 1))
    return Ribbon(tuple(cells))


@dataclass(frozen=True)
class FilledRibbon:
    ribbon: Ribbon
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.ribbon.size:
            raise ValueError("entry count must match ribbon size")


def ribbon_from_word(w: Sequence[int]) -> FilledRibbon:
    """The ribbon whose descent set matches w, filled with w (an SSYT)."""
    w = tuple(w)
    if not w or any(v < 1 for v in w):
        raise ValueError("word must be nonempty with positive entries")
    des = {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}
    return FilledRibbon(ribbon_shape(len(w), des), w)


def is_ssyt(fr: FilledRibbon) -> bool:
    """Rows weakly increase west to east; columns strictly increase upward."""
    w, des = fr.entries, fr.ribbon.des
    return all(w[i - 1] > w[i] if i in des else w[i - 1] <= w[i]
               for i in range(1, len(w)))


def ssyt_entries(rib: Ribbon, mbound: int) -> Iterator[Tuple[int, ...]]:
    """All semistandard fillings of a ribbon with entries in 1..mbound."""
    des = rib.des
    k = rib.size

    def rec(acc: List[int]) -> Iterator[Tuple[int, ...]]:
        i = len(acc)
        if i == k:
            yield tuple(acc)
            return
        if i == 0:
            lo, hi = 1, mbound
        elif i in des:          # south step: next strictly below previous
            lo, hi = 1, acc[-1] - 1
        else:                   # east step: next weakly above previous
            lo, hi = acc[-1], mbound
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from rec(acc)
            acc.pop()

    yield from rec([])


RibbonTuple = Tuple[Ribbon, ...]


def llt_inv(filled: Sequence[FilledRibbon]) -> int:
    """Inversions across ribbon pairs of a filled tuple."""
    data = [list(zip(fr.ribbon.diagonals, fr.entries)) for fr in filled]
    total = 0
    for p in range(len(data)):
        for q in range(p + 1, len(data)):
            for du, eu in data[p]:
                for dv, ev in data[q]:
                    if du == dv and eu > ev:
                        total += 1
                    elif dv == du + 1 and ev > eu:
                        total += 1
    return total


def llt_content(filled: Sequence[FilledRibbon], nvars: int) -> Tuple[int, ...]:
    counts = [0] * nvars
    for fr in filled:
        for v in fr.entries:
            counts[v - 1] += 1
    return tuple(counts)


def G(nu: RibbonTuple, mbound: int) -> MPoly:
    """sum over semistandard fillings with entries <= mbound of t^inv x^content."""
    per_ribbon = [list(ssyt_entries(rib, mbound)) for rib in nu]
    acc: Dict[tuple, int] = {}
    for combo in product(*per_ribbon):
        filled = [FilledRibbon(rib, entries) for rib, entries in zip(nu, combo)]
        key = (llt_content(filled, mbound), 0, llt_inv(filled))
        acc[key] = acc.get(key, 0) + 1
    return MPoly(mbound, acc)


def nu_hat(lam: Partition, D) -> RibbonTuple:
    """One ribbon per diagram column, rightmost column first; the ribbon of
    column c has length lam_c and descents {lam_c - r + 1 : (r, c) in D}."""
    lam = check_partition(lam)
    D = frozenset(D)
    for (r, c) in D:
        if not (1 <= c <= len(lam) and 2 <= r <= lam[c - 1]):
            raise ValueError(f"descent cell {(r, c)} not above row 1 of {lam}")
    ribbons = []
    for c in range(len(lam), 0, -1):
        des = {lam[c - 1] - r + 1 for (r, cc) in D if cc == c}
        ribbons.append(ribbon_shape(lam[c - 1], des))
    return tuple(ribbons)


def hat_llt_map(f: Filling) -> List[FilledRibbon]:
    """Read each column top to bottom into a ribbon; list columns right to
    left.  Preserves the inversion count: llt_inv of the image equals the
    attacking-inversion count of the filling."""
    out = []
    for i in range(len(f.lam), 0, -1):
        word = tuple(reversed(f.cols[i - 1]))
        out.append(ribbon_from_word(word))
    return out


def F(lam: Partition, D, mbound: int) -> MPoly:
    """sum of t^(attacking inversions) x^sigma over fillings with descent
    set exactly D and entries <= mbound."""
    lam = check_partition(lam)
    D = frozenset(D)
    acc: Dict[tuple, int] = {}
    for f in enumerate_fillings(lam, mbound):
        if descent_set(f) == D:
            key = (f.content(), 0, hat_inv(f))
            acc[key] = acc.get(key, 0) + 1
    return MPoly(mbound, acc)


def fillings_by_descent(lam: Partition, n: int) -> Dict[FrozenSet[Cell], List[Filling]]:
    out: Dict[FrozenSet[Cell], List[Filling]] = {}
    for f in enumerate_fillings(lam, n):
        out.setdefault(descent_set(f), []).append(f)
    return out
