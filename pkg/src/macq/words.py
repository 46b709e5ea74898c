"""Word universes with a top/bottom letter split and a coinversion statistic.

Fix an alphabet [n], a length N, and positive counts alpha = (alpha_2, ...,
alpha_{n-1}) for the middle letters.  With L = N - |alpha|, the universe

    W_k = words with k letters n, L-k letters 1, alpha_i letters i

is split two ways: a word is in W_k^<= when the position of its leftmost n
(from the left) is <= the position of its rightmost 1 from the right after
deleting all n's, and in W_k^> otherwise; by convention W_0 = W_0^> and
W_L = W_L^<=.

The statistic quinv'(w) = coinv(w) + sum_{i=ell}^{n-1} C(alpha_i, 2) + C(k, 2)
treats the letters ell..n as barred: coinv counts strictly increasing pairs,
and each pair of equal barred letters contributes 1.  Closed forms for the
quinv' generating functions of W_k^> and W_k^<= (and refinements by the
position of the leftmost n / the rightmost 1) are provided next to their
brute-force counterparts, together with a constructive pairing
phi : W_k^> -> W_{k+1}^<= that preserves quinv' and the middle subword.

n = 2 (no middle letters) is allowed; the degenerate-segment machinery of
the super-filling module needs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, inf
from typing import Dict, Iterator, List, Sequence, Tuple

from macq.algebra import MPoly, qmultinom, qbinom

Word = Tuple[int, ...]


@dataclass(frozen=True)
class WordSpec:
    n: int                    # alphabet size, >= 2
    N: int                    # word length
    alpha: Tuple[int, ...]    # counts of the middle letters 2..n-1
    ell: int                  # letters ell..n are treated as barred

    def __post_init__(self):
        if self.n < 2 or self.n != len(self.alpha) + 2:
            raise ValueError("need n = len(alpha) + 2 >= 2")
        if any(a < 1 for a in self.alpha):
            raise ValueError("middle-letter counts must be positive")
        if self.N <= sum(self.alpha):
            raise ValueError("need N > |alpha|")
        if not 2 <= self.ell <= self.n:
            raise ValueError("need 2 <= ell <= n")

    @property
    def L(self) -> int:
        return self.N - sum(self.alpha)


def multiset_words(counts: Sequence[Tuple[int, int]]) -> Iterator[Word]:
    """Distinct arrangements of a multiset, in lexicographic order."""
    total = sum(c for _, c in counts)
    letters = [v for v, _ in counts]
    remaining = {v: c for v, c in counts}

    def rec(prefix: List[int]) -> Iterator[Word]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for v in letters:
            if remaining[v]:
                remaining[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                remaining[v] += 1

    yield from rec([])


def enumerate_Wk(spec: WordSpec, k: int) -> Iterator[Word]:
    if not 0 <= k <= spec.L:
        raise ValueError(f"k = {k} outside 0..{spec.L}")
    counts = [(1, spec.L - k)]
    counts += [(i + 2, a) for i, a in enumerate(spec.alpha)]
    counts += [(spec.n, k)]
    return multiset_words([(v, c) for v, c in counts if c])


def coinv(w: Word) -> int:
    """Pairs (i, j), i < j, with w_i < w_j."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] < w[j])


def p_top(w: Word, n: int) -> float:
    """Position (1-based) of the leftmost letter n; +inf if absent."""
    for i, v in enumerate(w):
        if v == n:
            return i + 1
    return inf


def p_bottom(w: Word, n: int) -> float:
    """Position from the right of the rightmost 1 after deleting all n's;
    +inf if there is no 1."""
    kept = [v for v in w if v != n]
    for pos_from_right, v in enumerate(reversed(kept), start=1):
        if v == 1:
            return pos_from_right
    return inf


def p_bottom_raw(w: Word) -> float:
    """Position from the right of the rightmost 1 in w itself; +inf if none."""
    for pos_from_right, v in enumerate(reversed(w), start=1):
        if v == 1:
            return pos_from_right
    return inf


def side_of(spec: WordSpec, w: Word) -> str:
    """'leq' or 'gt'; words without n's are 'gt', words without 1's 'leq'."""
    return "leq" if p_top(w, spec.n) <= p_bottom(w, spec.n) else "gt"


def split(spec: WordSpec, k: int) -> Tuple[List[Word], List[Word]]:
    leq: List[Word] = []
    gt: List[Word] = []
    for w in enumerate_Wk(spec, k):
        (leq if side_of(spec, w) == "leq" else gt).append(w)
    return leq, gt


def quinv_prime(spec: WordSpec, w: Word) -> int:
    k = w.count(spec.n)
    bars = sum(comb(spec.alpha[i - 2], 2) for i in range(spec.ell, spec.n))
    return coinv(w) + bars + comb(k, 2)


def middle_subword(spec: WordSpec, w: Word) -> Word:
    return tuple(v for v in w if 2 <= v <= spec.n - 1)


def gf_brute(spec: WordSpec, words) -> MPoly:
    """sum of q^quinv'(w) over an iterable of words."""
    acc: Dict[tuple, int] = {}
    for w in words:
        key = ((), quinv_prime(spec, w), 0)
        acc[key] = acc.get(key, 0) + 1
    return MPoly(0, acc)


def _bar_shift(spec: WordSpec) -> int:
    return sum(comb(spec.alpha[i - 2], 2) for i in range(spec.ell, spec.n))


def gf_closed(spec: WordSpec, k: int, side: str) -> MPoly:
    """Closed form for the quinv' generating function of W_k^> or W_k^<=."""
    pre = qmultinom((spec.L,) + spec.alpha)
    if side == "gt":
        return MPoly.q(exp=_bar_shift(spec) + comb(k + 1, 2)) * pre \
            * qbinom(spec.L - 1, k)
    if side == "leq":
        return MPoly.q(exp=_bar_shift(spec) + comb(k, 2)) * pre \
            * qbinom(spec.L - 1, k - 1)
    raise ValueError("side must be 'gt' or 'leq'")


def gf_refined_closed(spec: WordSpec, k: int, side: str, pos: int) -> MPoly:
    """Closed form refined by position: for side 'gt' the sum is over
    w in W_k^> with p_bottom(w) = pos, for 'leq' over w in W_k^<= with
    p_top(w) = pos."""
    N, L = spec.N, spec.L
    if not 1 <= pos <= N + 1 - L:
        raise ValueError(f"position {pos} outside 1..{N + 1 - L}")
    pre = qmultinom(spec.alpha)
    if side == "gt":
        e = _bar_shift(spec) + comb(k + 1, 2) + (pos - 1) * L
        return MPoly.q(exp=e) * pre \
            * qmultinom((k, N - L - pos + 1, L - k - 1))
    if side == "leq":
        e = _bar_shift(spec) + comb(k, 2) + (pos - 1) * L
        return MPoly.q(exp=e) * pre \
            * qmultinom((k - 1, N - L - pos + 1, L - k))
    raise ValueError("side must be 'gt' or 'leq'")


# ------------------------------------------- three-letter refined case sums

def top_before_bottom(w: Word, n: int) -> bool:
    """True iff the leftmost n sits strictly left of the rightmost 1."""
    lt = p_top(w, n)                       # counted from the left
    rb = len(w) + 1 - p_bottom_raw(w)      # rightmost 1, from the left
    return lt < rb


def lemma_sums(spec: WordSpec, k: int, pos: int, case: str) -> MPoly:
    """Closed forms for the three-letter coinv sums over W_k^> with
    p_bottom = pos (cases gt_*) or W_k^<= with p_top = pos (cases leq_*),
    split by whether the leftmost top letter precedes the rightmost 1.

    Cases: gt_l, gt_r1, gt_r2, leq_l, leq_r1, leq_r2; positions outside the
    stated range of each formula raise ValueError.
    """
    if spec.n != 3:
        raise ValueError("case sums are defined for a three-letter alphabet")
    N, L = spec.N, spec.L
    if case.startswith("gt") and not 0 <= k <= L - 1:
        raise ValueError(f"k = {k} outside 0..{L - 1} for the 'gt' side")
    if case.startswith("leq") and not 1 <= k <= L:
        raise ValueError(f"k = {k} outside 1..{L} for the 'leq' side")
    i = j = pos
    q = MPoly.q
    if case == "gt_l":
        if not 1 <= i <= (N - k) // 2:
            raise ValueError("position outside the stated range")
        return q(exp=(i - 1) * L) * qbinom(N - k - i, L - k - 1) * (
            qbinom(N - i, k) * q(exp=k)
            - qbinom(k + i - 1, k) * q(exp=k * (N - k - 2 * i + 2)))
    if case == "gt_r1":
        if not 1 <= i <= (N - k) // 2:
            raise ValueError("position outside the stated range")
        return q(exp=(i - 1) * L + k * (N - k - 2 * i + 2)) \
            * qbinom(N - k - i, L - k - 1) * qbinom(k + i - 1, k)
    if case == "gt_r2":
        if not (N - k) // 2 + 1 <= i <= N + 1 - L:
            raise ValueError("position outside the stated range")
        return q(exp=(i - 1) * L + k) \
            * qbinom(N - k - i, L - k - 1) * qbinom(N - i, k)
    if case == "leq_l":
        if not 1 <= j <= (N - k + 1) // 2:
            raise ValueError("position outside the stated range")
        return qbinom(N - j, k - 1) * (
            qbinom(N - j - k + 1, L - k) * q(exp=(j - 1) * L)
            - qbinom(j - 1, L - k)
            * q(exp=(j - 1) * k + (L - k) * (N - j - k + 1)))
    if case == "leq_r1":
        if not L - k + 1 <= j <= (N - k + 1) // 2:
            raise ValueError("position outside the stated range")
        return q(exp=(j - 1) * k + (L - k) * (N - j - k + 1)) \
            * qbinom(j - 1, L - k) * qbinom(N - j, k - 1)
    if case == "leq_r2":
        if not (N - k + 1) // 2 + 1 <= j <= N + 1 - L:
            raise ValueError("position outside the stated range")
        return q(exp=(j - 1) * L) \
            * qbinom(N - j - k + 1, L - k) * qbinom(N - j, k - 1)
    raise ValueError(f"unknown case {case!r}")


# ------------------------------------------------------------- the bijection

class PhiCardinalityError(RuntimeError):
    """A (k, middle-subword, quinv') group count differs between the two
    sides; this would falsify the pairing's existence."""


@lru_cache(maxsize=None)
def build_phi(spec: WordSpec) -> Dict[Word, Word]:
    """An explicit bijection W^> -> W^<= mapping W_k^> onto W_{k+1}^<=,
    preserving quinv' and the middle subword.

    Words are grouped by (middle subword, quinv'); groups are paired in
    lexicographic order.  Raises PhiCardinalityError on any count mismatch.
    """
    phi: Dict[Word, Word] = {}
    for k in range(spec.L):
        _, gt = split(spec, k)
        leq, _ = split(spec, k + 1)
        src: Dict[tuple, List[Word]] = {}
        dst: Dict[tuple, List[Word]] = {}
        for w in gt:
            src.setdefault((middle_subword(spec, w), quinv_prime(spec, w)),
                           []).append(w)
        for w in leq:
            dst.setdefault((middle_subword(spec, w), quinv_prime(spec, w)),
                           []).append(w)
        if sorted(src) != sorted(dst):
            raise PhiCardinalityError(f"group keys differ at k={k} for {spec}")
        for key in src:
            a, b = sorted(src[key]), sorted(dst[key])
            if len(a) != len(b):
                raise PhiCardinalityError(
                    f"group sizes differ at k={k}, key={key} for {spec}")
            phi.update(zip(a, b))
    return phi


@lru_cache(maxsize=None)
def build_phi_inverse(spec: WordSpec) -> Dict[Word, Word]:
    return {v: k for k, v in build_phi(spec).items()}
