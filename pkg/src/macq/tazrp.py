"""Multispecies totally asymmetric zero-range process on a ring, solved
exactly, plus the tableau partition-function cross-check.

Sites 1..n sit on a ring (jumps go from site j to j-1, and from site 1 to
site n).  The particle types are the parts of a partition; particles of
equal type are indistinguishable.  For every site j and level a >= 1, a
bell rings at rate t^(a-1) / x_j; if site j holds at least a particles,
the a'th highest-typed one jumps to site j-1, otherwise nothing happens.

The stationary distribution is computed two ways:

  * exactly, by rational Gaussian elimination on the generator, and
  * from fillings: place the type of each diagram column at the site given
    by its bottom entry, weight by x^sigma t^quinv, and normalize by the
    quinv Macdonald sum at q = 1.

Their exact agreement is the cross-check; a mismatch is reported as data
against the bottom-row placement rule, never raised.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, List, Sequence, Tuple

from macq.symfunc import Partition, check_partition
from macq.tableaux import Filling, enumerate_fillings, macdonald_quinv, quinv

Config = Tuple[Tuple[int, ...], ...]  # per site, types sorted decreasingly


@dataclass(frozen=True)
class RateParams:
    x: Tuple[Fraction, ...]
    t: Fraction

    def __post_init__(self):
        if any(v <= 0 for v in self.x):
            raise ValueError("site parameters must be positive")
        if self.t < 0:
            raise ValueError("t must be non-negative")


def make_params(x: Sequence, t) -> RateParams:
    return RateParams(tuple(Fraction(v) for v in x), Fraction(t))


def config_space(lam: Partition, n: int) -> List[Config]:
    """All distinguishable placements of the particle multiset on n sites."""
    lam = check_partition(lam)
    type_counts = sorted(Counter(lam).items(), reverse=True)
    placements = [list(combinations_with_replacement(range(1, n + 1), mult))
                  for _, mult in type_counts]
    out: List[Config] = []
    for combo in product(*placements):
        sites: List[List[int]] = [[] for _ in range(n)]
        for (ptype, _), where in zip(type_counts, combo):
            for site in where:
                sites[site - 1].append(ptype)
        out.append(tuple(tuple(sorted(s, reverse=True)) for s in sites))
    return out


def _move(cfg: Config, site: int, level: int, n: int, direction: str) -> Config:
    """Move the level'th highest-typed particle at `site` one step around
    the ring ('down': to site-1, 'up': to site+1)."""
    src = list(cfg[site - 1])
    ptype = src.pop(level - 1)  # already sorted decreasingly
    if direction == "down":
        target = site - 1 if site > 1 else n
    else:
        target = site + 1 if site < n else 1
    dst = sorted(cfg[target - 1] + (ptype,), reverse=True)
    sites = list(cfg)
    sites[site - 1] = tuple(src)
    sites[target - 1] = tuple(dst)
    return tuple(sites)


def generator(lam: Partition, n: int, params: RateParams,
              direction: str = "down"
              ) -> Tuple[List[Config], List[List[Fraction]]]:
    """Configurations and the CTMC rate matrix (row sums zero).

    direction 'down' is the stated model (jumps j -> j-1, out of site 1
    into site n); 'up' mirrors the jumps while keeping the bell rates at
    the source site, which is the variant the bottom-row projection
    reproduces exactly.
    """
    if len(params.x) != n:
        raise ValueError("need one site parameter per site")
    if direction not in ("down", "up"):
        raise ValueError("direction must be 'down' or 'up'")
    configs = config_space(lam, n)
    index = {cfg: i for i, cfg in enumerate(configs)}
    m = len(configs)
    Q = [[Fraction(0)] * m for _ in range(m)]
    for src_i, cfg in enumerate(configs):
        for site in range(1, n + 1):
            for level in range(1, len(cfg[site - 1]) + 1):
                rate = params.t ** (level - 1) / params.x[site - 1]
                if rate == 0:
                    continue
                dst_i = index[_move(cfg, site, level, n, direction)]
                Q[src_i][dst_i] += rate
                Q[src_i][src_i] -= rate
    return configs, Q


def _solve_stationary(Q: List[List[Fraction]]) -> List[Fraction]:
    """The probability vector v with v Q = 0, by exact elimination."""
    m = len(Q)
    # equations: sum_s v_s Q[s][j] = 0 for each j, plus sum v_s = 1
    rows = [[Q[s][j] for s in range(m)] + [Fraction(0)] for j in range(m)]
    rows.append([Fraction(1)] * m + [Fraction(1)])
    pivot_col = 0
    pivots = []
    for col in range(m):
        pivot = next((r for r in range(len(pivots), len(rows))
                      if rows[r][col] != 0), None)
        if pivot is None:
            continue
        r0 = len(pivots)
        rows[r0], rows[pivot] = rows[pivot], rows[r0]
        pv = rows[r0][col]
        rows[r0] = [v / pv for v in rows[r0]]
        for r in range(len(rows)):
            if r != r0 and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[r0])]
        pivots.append(col)
    if len(pivots) < m:
        raise ValueError("singular system: generator not irreducible?")
    for r in range(len(pivots), len(rows)):
        if any(rows[r]):
            raise ValueError("inconsistent stationary system")
    sol = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        sol[col] = rows[r][-1]
    return sol


def stationary(lam: Partition, n: int, params: RateParams,
               direction: str = "down") -> Dict[Config, Fraction]:
    """Exact stationary distribution of the ring process."""
    configs, Q = generator(lam, n, params, direction)
    v = _solve_stationary(Q)
    # defining property, checked exactly
    m = len(configs)
    for j in range(m):
        assert sum(v[s] * Q[s][j] for s in range(m)) == 0
    assert sum(v) == 1
    return dict(zip(configs, v))


def f_map(f: Filling) -> Config:
    """Bottom-row placement: the type of column i goes to site entry(1, i)."""
    sites: List[List[int]] = [[] for _ in range(f.n)]
    for i in range(1, len(f.lam) + 1):
        sites[f.entry(1, i) - 1].append(f.lam[i - 1])
    return tuple(tuple(sorted(s, reverse=True)) for s in sites)


def tableaux_measure(lam: Partition, n: int, params: RateParams
                     ) -> Dict[Config, Fraction]:
    """Per configuration, sum of x^sigma t^quinv over fillings mapping to it
    under the bottom-row rule, divided by the quinv Macdonald sum at q=1."""
    lam = check_partition(lam)
    if len(params.x) != n:
        raise ValueError("need one site parameter per site")
    denom = macdonald_quinv(lam, n).eval(params.x, qval=1, tval=params.t)
    acc: Dict[Config, Fraction] = {cfg: Fraction(0)
                                   for cfg in config_space(lam, n)}
    for f in enumerate_fillings(lam, n):
        w = params.t ** quinv(f)
        for i, count in enumerate(f.content()):
            if count:
                w *= params.x[i] ** count
        acc[f_map(f)] += w
    return {cfg: v / denom for cfg, v in acc.items()}


def config_to_text(cfg: Config) -> str:
    return "|".join(",".join(str(p) for p in site) if site else "-"
                    for site in cfg)
