"""Partitions, dominance order, and monomial-symmetric expansions.

A partition is a weakly decreasing tuple of positive ints; () is allowed.
Symmetric polynomials (as MPoly values) can be expanded in the monomial
basis m_mu, and such expansions can be tested for dominance triangularity,
i.e. support contained in {mu : mu <= lam} or {mu : mu <= lam'}.

The m_mu restricted to n variables stay linearly independent as long as
mu has at most n parts, so triangularity checks of a degree-d polynomial
are sound whenever n >= d (every partition of d has at most d parts).
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterator, Tuple

from macq.algebra import MPoly

Partition = Tuple[int, ...]


def is_partition(lam: Tuple[int, ...]) -> bool:
    return all(isinstance(a, int) and a >= 1 for a in lam) and \
        all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def check_partition(lam: Tuple[int, ...]) -> Partition:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def conjugate(lam: Partition) -> Partition:
    """Transpose partition: part r of the conjugate counts parts >= r.

    >>> conjugate((3, 2, 1, 1))
    (4, 2, 1)
    >>> conjugate(())
    ()
    """
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= r) for r in range(1, lam[0] + 1))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """mu <= lam in dominance order; requires |mu| == |lam|.

    >>> dominance_leq((2, 2), (3, 1))
    True
    >>> dominance_leq((3, 1), (2, 2))
    False
    """
    if sum(mu) != sum(lam):
        raise ValueError("dominance order compares partitions of equal size")
    pm = pl = 0
    for j in range(max(len(mu), len(lam))):
        pm += mu[j] if j < len(mu) else 0
        pl += lam[j] if j < len(lam) else 0
        if pm > pl:
            return False
    return True


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest-first parts, decreasing-lex order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def m_sym(mu: Partition, nvars: int) -> MPoly:
    """Monomial symmetric polynomial m_mu in x_1..x_nvars.

    Zero when mu has more than nvars parts.
    """
    if len(mu) > nvars:
        return MPoly.zero(nvars)
    padded = tuple(mu) + (0,) * (nvars - len(mu))
    exps = set(permutations(padded))
    return MPoly(nvars, {(xe, 0, 0): 1 for xe in exps})


def is_symmetric(p: MPoly) -> bool:
    """True iff p is invariant under every adjacent transposition of x's."""
    return all(p.swap_x(i, i + 1) == p for i in range(1, p.nvars))


def monomial_expand(p: MPoly) -> Dict[Partition, MPoly]:
    """Expand a symmetric polynomial in the m_mu basis.

    Returns {mu: c_mu(q,t)} with p = sum_mu c_mu * m_mu(x_1..x_nvars).
    Raises ValueError if p is not symmetric.
    """
    if not is_symmetric(p):
        raise ValueError("input not symmetric")
    out: Dict[Partition, MPoly] = {}
    for (xe, qe, te), c in p.terms.items():
        if any(xe[i] < xe[i + 1] for i in range(len(xe) - 1)):
            continue  # only the weakly decreasing representative of each orbit
        mu = tuple(e for e in xe if e)
        cur = out.setdefault(mu, MPoly.zero(0))
        out[mu] = cur + MPoly(0, {((), qe, te): c})
    return {mu: c for mu, c in out.items() if c}


def expand_to_x(expansion: Dict[Partition, MPoly], nvars: int) -> MPoly:
    """Inverse of monomial_expand: sum_mu c_mu(q,t) * m_mu."""
    out = MPoly.zero(nvars)
    for mu, c in expansion.items():
        out = out + c.with_nvars(nvars) * m_sym(mu, nvars)
    return out


def triangularity_check(expansion: Dict[Partition, MPoly], lam: Partition,
                        target: str = "lambda") -> bool:
    """True iff every mu in the support satisfies mu <= lam (target="lambda")
    or mu <= lam' (target="conjugate") in dominance order."""
    bound = check_partition(lam)
    if target == "conjugate":
        bound = conjugate(bound)
    elif target != "lambda":
        raise ValueError("target must be 'lambda' or 'conjugate'")
    return all(dominance_leq(mu, bound) for mu, c in expansion.items() if c)
