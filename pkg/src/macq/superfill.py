"""Fillings over the signed alphabet {1, -1, 2, -2, ...} and the
sign-reversing maps used to cancel terms in the plethystic weight sums.

A super entry is a nonzero int: +v is the plain letter v, -v is the barred
letter v~.  Two total orders are used:

    O1:  0 < 1 < 1~ < 2 < 2~ < 3 < ...
    O2:  0 < 1 < 2 < 3 < ... < 3~ < 2~ < 1~

The descent indicator I(a, b) is 1 when a > b in the chosen order, or when
a = b is barred; it is 0 when a < b, or a = b is unbarred (0 compares as
the minimum in both orders).  A triple with top entry a over b, and c to
the right of b, is a quinv triple iff exactly one of

    I(a, b) = 1,   I(c, b) = 0,   I(a, c) = 0

holds (a = 0 for degenerate triples at column tops).  maj sums leg+1 over
cells x with I(sigma(x), sigma(below x)) = 1.

On top of the statistics this module provides:

  * standardization (order- and statistic-preserving relabeling by 1..|lam|),
  * the involution psi (negate the designated cell of the last attacking
    pair with equal absolute values; identity on non-attacking fillings),
  * the cell negation phi_u and the trivial/nondegenerate/degenerate
    classification by distinguished label and cell (order O2),
  * the column-pair swap tau_j on equal-height adjacent columns,
  * the bijection theta on degenerate fillings, built from a
    quinv'-preserving word pairing and a canonical reduced word
    (lexicographically smallest) of the required position permutation,
  * the two signed sums over all super fillings whose monomial expansions
    are dominance-triangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from macq.algebra import MPoly
from macq.symfunc import Partition, check_partition, conjugate
from macq import words as wordsmod
from macq.tableaux import Cell, Filling, reading_order

Entry = int  # +v plain, -v barred; 0 is the virtual minimum


class Ordering:
    __slots__ = ("name", "key")

    def __init__(self, name: str, key: Callable[[Entry], tuple]):
        self.name = name
        self.key = key

    def __repr__(self):
        return self.name


O1 = Ordering("O1", lambda e: (abs(e), 0 if e >= 0 else 1))
O2 = Ordering("O2", lambda e: (0, 0) if e == 0 else ((1, e) if e > 0 else (2, e)))


def I(a: Entry, b: Entry, ord: Ordering) -> int:
    """Descent indicator: 1 iff a > b, or a = b barred."""
    ka, kb = ord.key(a), ord.key(b)
    if ka > kb:
        return 1
    if ka < kb:
        return 0
    return 1 if a < 0 else 0


def is_super_quinv_triple(a: Entry, b: Entry, c: Entry, ord: Ordering) -> bool:
    return (I(a, b, ord) + (1 - I(c, b, ord)) + (1 - I(a, c, ord))) == 1


class SuperFilling:
    """A filling with signed entries of absolute value <= n."""

    __slots__ = ("lam", "cols", "n")

    def __init__(self, lam: Partition, cols: Tuple[Tuple[Entry, ...], ...], n: int):
        self.lam = lam
        self.cols = cols
        self.n = n

    @classmethod
    def from_rows(cls, lam: Sequence[int], rows: Sequence[Sequence[Entry]],
                  n: int) -> "SuperFilling":
        lam = check_partition(tuple(lam))
        conj = conjugate(lam)
        if [len(r) for r in rows] != list(conj):
            raise ValueError(f"row lengths {[len(r) for r in rows]} != {conj}")
        cols = tuple(tuple(rows[r][i] for r in range(lam[i]))
                     for i in range(len(lam)))
        return cls(lam, cols, n)

    def entry(self, r: int, i: int) -> Entry:
        return self.cols[i - 1][r - 1]

    def rows(self) -> List[Tuple[Entry, ...]]:
        conj = conjugate(self.lam)
        return [tuple(self.cols[i][r] for i in range(conj[r]))
                for r in range(len(conj))]

    def abs_content(self) -> Tuple[int, ...]:
        counts = [0] * self.n
        for col in self.cols:
            for v in col:
                counts[abs(v) - 1] += 1
        return tuple(counts)

    def positives(self) -> int:
        return sum(1 for col in self.cols for v in col if v > 0)

    def negatives(self) -> int:
        return sum(1 for col in self.cols for v in col if v < 0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SuperFilling) and self.lam == other.lam
                and self.cols == other.cols and self.n == other.n)

    def __hash__(self):
        return hash((self.lam, self.cols, self.n))

    def __repr__(self):
        return f"SuperFilling({self.lam}, {to_text(self)!r})"


def to_text(s: SuperFilling) -> str:
    """Rows bottom to top; barred entries carry a trailing '~'."""
    def fmt(v: Entry) -> str:
        return f"{-v}~" if v < 0 else str(v)
    return ";".join(",".join(fmt(v) for v in row) for row in s.rows())


def from_text(txt: str, lam: Sequence[int], n: int) -> SuperFilling:
    def parse(tok: str) -> Entry:
        tok = tok.strip()
        return -int(tok[:-1]) if tok.endswith("~") else int(tok)
    rows = [[parse(v) for v in row.split(",")] for row in txt.split(";")]
    s = SuperFilling.from_rows(tuple(lam), rows, n)
    for col in s.cols:
        for v in col:
            if not 1 <= abs(v) <= n:
                raise ValueError(f"entry {v} outside +-1..{n}")
    return s


def enumerate_super_fillings(lam: Partition, nbound: int) -> Iterator[SuperFilling]:
    """All (2*nbound)^|lam| super fillings, deterministic order."""
    lam = check_partition(lam)
    cells = reading_order(lam)
    alphabet = [s * v for v in range(1, nbound + 1) for s in (1, -1)]
    for values in product(alphabet, repeat=len(cells)):
        cols: List[List[Entry]] = [[0] * h for h in lam]
        for (r, i), v in zip(cells, values):
            cols[i - 1][r - 1] = v
        yield SuperFilling(lam, tuple(tuple(c) for c in cols), nbound)


# --------------------------------------------------------------- statistics

def super_maj(s: SuperFilling, ord: Ordering) -> int:
    lam = s.lam
    total = 0
    for i, col in enumerate(s.cols):
        h = lam[i]
        for r in range(2, h + 1):
            if I(col[r - 1], col[r - 2], ord):
                total += h - r + 1
    return total


def super_quinv(s: SuperFilling, ord: Ordering) -> int:
    lam, cols = s.lam, s.cols
    total = 0
    for j in range(1, len(lam)):
        cj = cols[j]
        for i in range(j):
            ci = cols[i]
            hi = lam[i]
            for r in range(lam[j]):
                a = ci[r + 1] if r + 1 < hi else 0
                if is_super_quinv_triple(a, ci[r], cj[r], ord):
                    total += 1
    return total


def super_descent_set(s: SuperFilling, ord: Ordering) -> frozenset:
    out = []
    for i, col in enumerate(s.cols, start=1):
        for r in range(2, len(col) + 1):
            if I(col[r - 1], col[r - 2], ord):
                out.append((r, i))
    return frozenset(out)


def abs_filling(s: SuperFilling) -> Filling:
    return Filling(s.lam, tuple(tuple(abs(v) for v in col) for col in s.cols),
                   s.n)


def standardize(s: SuperFilling, ord: Ordering) -> Filling:
    """The unique relabeling by 1..|lam| that is weakly increasing as a
    function of the letters and, within one letter, increases along reading
    order for plain letters and decreases for barred ones.  Preserves maj
    and quinv."""
    cells = reading_order(s.lam)
    pos = {cell: idx for idx, cell in enumerate(cells)}
    by_letter: Dict[Entry, List[Cell]] = {}
    for cell in cells:
        by_letter.setdefault(s.entry(*cell), []).append(cell)
    label = 1
    labels: Dict[Cell, int] = {}
    for letter in sorted(by_letter, key=ord.key):
        group = sorted(by_letter[letter], key=lambda c: pos[c],
                       reverse=letter < 0)
        for cell in group:
            labels[cell] = label
            label += 1
    cols = tuple(tuple(labels[(r, i)] for r in range(1, s.lam[i - 1] + 1))
                 for i in range(1, len(s.lam) + 1))
    return Filling(s.lam, cols, sum(s.lam))


# -------------------------------------------------- attacking pairs and psi

@lru_cache(maxsize=None)
def _attack_neighbors(lam: Partition) -> Dict[Cell, Tuple[Cell, ...]]:
    """For each cell, the earlier-in-reading-order cells attacking it.

    Cells attack when they share a row, or sit in adjacent rows with the
    upper cell strictly left of the lower one.
    """
    cells = reading_order(lam)
    pos = {cell: idx for idx, cell in enumerate(cells)}
    out: Dict[Cell, List[Cell]] = {c: [] for c in cells}
    for v in cells:
        rv, iv = v
        for u in cells:
            if pos[u] >= pos[v]:
                continue
            ru, iu = u
            if (ru == rv and iu != iv) or (ru == rv + 1 and iu < iv) \
                    or (rv == ru + 1 and iv < iu):
                out[v].append(u)
    return {c: tuple(us) for c, us in out.items()}


def phi_u(s: SuperFilling, u: Cell) -> SuperFilling:
    """Negate the entry at cell u."""
    r, i = u
    if not (1 <= i <= len(s.lam) and 1 <= r <= s.lam[i - 1]):
        raise ValueError(f"cell {u} outside diagram of {s.lam}")
    cols = list(s.cols)
    col = list(cols[i - 1])
    col[r - 1] = -col[r - 1]
    cols[i - 1] = tuple(col)
    return SuperFilling(s.lam, tuple(cols), s.n)


def psi(s: SuperFilling) -> SuperFilling:
    """Identity on non-attacking fillings; otherwise negate the cell u of
    the designated attacking pair: a is the smallest absolute value shared
    by an attacking pair, v the last cell in reading order among such
    pairs, u the last cell attacking v with |entry| = a."""
    neighbors = _attack_neighbors(s.lam)
    cells = reading_order(s.lam)
    best_a: Optional[int] = None
    # smallest shared absolute value over attacking pairs
    for v in cells:
        av = abs(s.entry(*v))
        for u in neighbors[v]:
            if abs(s.entry(*u)) == av and (best_a is None or av < best_a):
                best_a = av
    if best_a is None:
        return s
    v_cell: Optional[Cell] = None
    for v in reversed(cells):  # last in reading order first
        av = abs(s.entry(*v))
        if av == best_a and any(abs(s.entry(*u)) == best_a
                                for u in neighbors[v]):
            v_cell = v
            break
    assert v_cell is not None
    u_cell: Optional[Cell] = None
    for u in reversed(neighbors[v_cell]):  # neighbors are in reading order
        if abs(s.entry(*u)) == best_a:
            u_cell = u
            break
    assert u_cell is not None
    return phi_u(s, u_cell)


def is_non_attacking(s: SuperFilling) -> bool:
    neighbors = _attack_neighbors(s.lam)
    return all(abs(s.entry(*u)) != abs(s.entry(*v))
               for v in neighbors for u in neighbors[v])


# ------------------------------------------------------------ classification

@dataclass(frozen=True)
class PhiClass:
    kind: str                       # "trivial" | "nondegenerate" | "degenerate"
    label: Optional[int] = None     # distinguished label a
    cell: Optional[Cell] = None     # distinguished cell
    segment: Tuple[Cell, ...] = ()  # degenerate segment, left to right


def classify(s: SuperFilling) -> PhiClass:
    """Distinguished label = smallest a with a cell of absolute value a
    strictly above row a; distinguished cell = first such cell in reading
    order; degenerate iff that cell belongs to a degenerate triple."""
    lam = s.lam
    max_row: Dict[int, int] = {}
    for i, col in enumerate(s.cols, start=1):
        for r in range(1, len(col) + 1):
            v = abs(col[r - 1])
            if r > max_row.get(v, 0):
                max_row[v] = r
    candidates = [a for a, r in max_row.items() if r > a]
    if not candidates:
        return PhiClass("trivial")
    a = min(candidates)
    r = max_row[a]
    row_width = conjugate(lam)[r - 1]
    cell = None
    for i in range(row_width, 0, -1):  # reading order within row r
        if abs(s.entry(r, i)) == a:
            cell = (r, i)
            break
    assert cell is not None
    tops = tuple((r, i) for i in range(1, len(lam) + 1) if lam[i - 1] == r)
    if lam[cell[1] - 1] == r and len(tops) >= 2:
        return PhiClass("degenerate", a, cell, tops)
    return PhiClass("nondegenerate", a, cell)


def degenerate_word(s: SuperFilling) -> Tuple[Entry, ...]:
    cls = classify(s)
    if cls.kind != "degenerate":
        raise ValueError("filling is not degenerate")
    return tuple(s.entry(*c) for c in cls.segment)


# -------------------------------------------------------------------- tau_j

def tau(s: SuperFilling, j: int, ord: Ordering = O2) -> SuperFilling:
    """Swap the top segments of equal-height columns j, j+1: always the top
    pair, then downward as long as each swap changes whether the triple
    just below is a quinv triple."""
    lam = s.lam
    if not 1 <= j <= len(lam) - 1 or lam[j - 1] != lam[j]:
        raise ValueError(f"columns {j}, {j + 1} must exist with equal height")
    k = lam[j - 1]
    a, b = list(s.cols[j - 1]), list(s.cols[j])
    r_max = 1
    for r in range(k, 1, -1):
        t1 = is_super_quinv_triple(a[r - 1], a[r - 2], b[r - 2], ord)
        t2 = is_super_quinv_triple(b[r - 1], a[r - 2], b[r - 2], ord)
        if t1 == t2:
            r_max = r
            break
    for r in range(r_max, k + 1):
        a[r - 1], b[r - 1] = b[r - 1], a[r - 1]
    cols = list(s.cols)
    cols[j - 1], cols[j] = tuple(a), tuple(b)
    return SuperFilling(lam, tuple(cols), s.n)


# -------------------------------------------------------------------- theta

def _lex_min_reduced_word(perm: Tuple[int, ...]) -> List[int]:
    """Lexicographically smallest reduced word [j1..jm] such that applying
    adjacent swaps j1, j2, ... to a word realizes the position permutation:
    result[i] = source[perm[i]]."""
    p = list(perm)
    word: List[int] = []
    n = len(p)
    while True:
        for j in range(1, n):
            # value j+1 before value j: left-multiplying by s_j shortens
            if p.index(j + 1) < p.index(j):
                word.append(j)
                ii, jj = p.index(j), p.index(j + 1)
                p[ii], p[jj] = p[jj], p[ii]
                break
        else:
            break
    return word


def _position_perm(src: Sequence, dst: Sequence) -> Tuple[int, ...]:
    """One-line permutation p with dst[i] = src[p[i]-1], equal letters kept
    in relative order."""
    queues: Dict[object, List[int]] = {}
    for idx, v in enumerate(src, start=1):
        queues.setdefault(v, []).append(idx)
    out = []
    for v in dst:
        if v not in queues or not queues[v]:
            raise ValueError("words are not rearrangements of each other")
        out.append(queues[v].pop(0))
    return tuple(out)


def _apply_swaps(word: Sequence, swaps: Sequence[int]) -> Tuple:
    w = list(word)
    for j in swaps:
        w[j - 1], w[j] = w[j], w[j - 1]
    return tuple(w)


def _segment_word_spec(s: SuperFilling, cls: PhiClass):
    """Map the degenerate word onto the alphabet 1..n (order-preserving for
    O2, with the distinguished letter and its bar always rank 1 and n)."""
    w = tuple(s.entry(*c) for c in cls.segment)
    a = cls.label
    universe = sorted(set(w) | {a, -a}, key=O2.key)
    # segment letters all have absolute value >= the distinguished label,
    # so the label and its bar are the extremes of the universe
    assert universe[0] == a and universe[-1] == -a
    rank = {letter: idx + 1 for idx, letter in enumerate(universe)}
    n = len(universe)
    alpha = tuple(w.count(universe[i]) for i in range(1, n - 1))
    barred = [rank[x] for x in universe if x < 0]
    spec = wordsmod.WordSpec(n=n, N=len(w), alpha=alpha, ell=min(barred))
    mapped = tuple(rank[x] for x in w)
    return spec, universe, mapped


def segment_side(s: SuperFilling) -> str:
    """'gt' or 'leq' according to the degenerate word."""
    cls = classify(s)
    if cls.kind != "degenerate":
        raise ValueError("filling is not degenerate")
    spec, _, mapped = _segment_word_spec(s, cls)
    return wordsmod.side_of(spec, mapped)


def theta(s: SuperFilling) -> SuperFilling:
    """On the 'gt' side of the degenerate fillings: negate the last plain
    occurrence of the distinguished label in the segment, then carry the
    segment word to its phi-image by column swaps.  Adds 1 to maj, fixes
    quinv, turns one plain letter barred."""
    cls = classify(s)
    if cls.kind != "degenerate":
        raise ValueError("filling is not degenerate")
    spec, universe, mapped = _segment_word_spec(s, cls)
    if wordsmod.side_of(spec, mapped) != "gt":
        raise ValueError("filling is not on the 'gt' side")
    phi = wordsmod.build_phi(spec)
    target = phi[mapped]
    a = cls.label
    w = tuple(s.entry(*c) for c in cls.segment)
    p = max(idx for idx, v in enumerate(w) if v == a)  # first in reading order
    out = phi_u(s, cls.segment[p])
    hatted = list(mapped)
    hatted[p] = spec.n
    perm = _position_perm(tuple(hatted), target)
    offset = cls.segment[0][1] - 1  # columns strictly left of the segment
    for j in _lex_min_reduced_word(perm):
        out = tau(out, j + offset, O2)
    return out


def theta_inverse(s: SuperFilling) -> SuperFilling:
    cls = classify(s)
    if cls.kind != "degenerate":
        raise ValueError("filling is not degenerate")
    spec, universe, mapped = _segment_word_spec(s, cls)
    if wordsmod.side_of(spec, mapped) != "leq":
        raise ValueError("filling is not on the 'leq' side")
    source = wordsmod.build_phi_inverse(spec)[mapped]
    p = max(idx for idx, v in enumerate(source) if v == 1)
    hatted = list(source)
    hatted[p] = spec.n
    perm = _position_perm(tuple(hatted), mapped)
    offset = cls.segment[0][1] - 1
    out = s
    for j in reversed(_lex_min_reduced_word(perm)):
        out = tau(out, j + offset, O2)
    out = phi_u(out, cls.segment[p])
    return out


# -------------------------------------------------------------- signed sums

def sum_C1(lam: Partition, nbound: int, restrict=None) -> MPoly:
    """sum over super fillings of (-1)^m q^maj t^(p + quinv) x^|sigma|,
    statistics under O1; optionally restricted by a predicate."""
    acc: Dict[tuple, int] = {}
    for s in enumerate_super_fillings(lam, nbound):
        if restrict is not None and not restrict(s):
            continue
        key = (s.abs_content(), super_maj(s, O1),
               s.positives() + super_quinv(s, O1))
        acc[key] = acc.get(key, 0) + (-1 if s.negatives() % 2 else 1)
    return MPoly(nbound, acc)


def sum_C2(lam: Partition, nbound: int, restrict=None) -> MPoly:
    """sum over super fillings of (-1)^m q^(p + maj) t^quinv x^|sigma|,
    statistics under O2; optionally restricted by a predicate."""
    acc: Dict[tuple, int] = {}
    for s in enumerate_super_fillings(lam, nbound):
        if restrict is not None and not restrict(s):
            continue
        key = (s.abs_content(), s.positives() + super_maj(s, O2),
               super_quinv(s, O2))
        acc[key] = acc.get(key, 0) + (-1 if s.negatives() % 2 else 1)
    return MPoly(nbound, acc)
