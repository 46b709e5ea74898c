"""Exact sparse polynomial arithmetic in x_1..x_n, q, t over the integers.

A term is keyed by a monomial (xexp, qexp, texp), where xexp is a tuple of
non-negative exponents (one per x variable) and qexp, texp are the exponents
of the two parameters.  Coefficients are Python ints, so all arithmetic is
exact at arbitrary precision.  Zero coefficients are never stored; equal
polynomials therefore have identical term maps.

Also provided: Gaussian binomial and multinomial coefficients via the Pascal
recurrence, and executable checks of the classical q-series identities
(q-binomial theorem, q-Chu-Vandermonde, its dual form, and a telescoping
sum) as exact polynomial comparisons.

Rationals (exact evaluation points, probabilities) are fractions.Fraction;
polynomial coefficients themselves are always integers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple

Monomial = Tuple[Tuple[int, ...], int, int]  # (xexp, qexp, texp)


def _sort_key(mono: Monomial):
    # graded lexicographic: total degree first, then earlier variables with
    # higher exponents first (so x1^2 precedes x1*x2 precedes x2^2), then q
    # powers before t powers
    xe, qe, te = mono
    return (sum(xe) + qe + te, tuple(-e for e in xe), -qe, -te)


class MPoly:
    """Polynomial in x_1..x_nvars, q, t with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Monomial, int] | None = None):
        self.nvars = nvars
        self.terms: Dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    # ------------------------------------------------------------- builders

    @classmethod
    def zero(cls, nvars: int = 0) -> "MPoly":
        return cls(nvars)

    @classmethod
    def const(cls, c: int, nvars: int = 0) -> "MPoly":
        return cls(nvars, {((0,) * nvars, 0, 0): c})

    @classmethod
    def x(cls, i: int, nvars: int) -> "MPoly":
        if not 1 <= i <= nvars:
            raise ValueError(f"x_{i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {(tuple(e), 0, 0): 1})

    @classmethod
    def q(cls, nvars: int = 0, exp: int = 1) -> "MPoly":
        return cls(nvars, {((0,) * nvars, exp, 0): 1})

    @classmethod
    def t(cls, nvars: int = 0, exp: int = 1) -> "MPoly":
        return cls(nvars, {((0,) * nvars, 0, exp): 1})

    @classmethod
    def term(cls, nvars: int, xexp: Sequence[int], qexp: int = 0, texp: int = 0,
             coeff: int = 1) -> "MPoly":
        xe = tuple(xexp)
        if len(xe) != nvars:
            raise ValueError("xexp length must equal nvars")
        return cls(nvars, {(xe, qexp, texp): coeff})

    # ----------------------------------------------------------- arithmetic

    def _check(self, other: "MPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(self.nvars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out: Dict[Monomial, int] = {}
        for (xa, qa, ta), ca in self.terms.items():
            for (xb, qb, tb), cb in other.terms.items():
                m = (tuple(a + b for a, b in zip(xa, xb)), qa + qb, ta + tb)
                out[m] = out.get(m, 0) + ca * cb
        return MPoly(self.nvars, out)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "MPoly":
        return MPoly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, MPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -------------------------------------------------------------- queries

    def coeff(self, xexp: Sequence[int], qexp: int = 0, texp: int = 0) -> int:
        return self.terms.get((tuple(xexp), qexp, texp), 0)

    def x_slice(self, xexp: Sequence[int]) -> "MPoly":
        """The q,t-polynomial coefficient of the x-monomial x^xexp."""
        xe = tuple(xexp)
        return MPoly(0, {((), qe, te): c
                         for (x, qe, te), c in self.terms.items() if x == xe})

    def with_nvars(self, nvars: int) -> "MPoly":
        """Reinterpret in a larger x-alphabet (pad exponents with zeros)."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable set")
        pad = (0,) * (nvars - self.nvars)
        return MPoly(nvars, {(xe + pad, qe, te): c
                             for (xe, qe, te), c in self.terms.items()})

    def swap_x(self, i: int, j: int) -> "MPoly":
        """Transpose the variables x_i and x_j."""
        out: Dict[Monomial, int] = {}
        for (xe, qe, te), c in self.terms.items():
            e = list(xe)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            m = (tuple(e), qe, te)
            out[m] = out.get(m, 0) + c
        return MPoly(self.nvars, out)

    def eval(self, xvals: Sequence[Fraction | int], qval: Fraction | int = 0,
             tval: Fraction | int = 0) -> Fraction:
        """Exact rational value at the given point."""
        if len(xvals) != self.nvars:
            raise ValueError("xvals length must equal nvars")
        xs = [Fraction(v) for v in xvals]
        qv, tv = Fraction(qval), Fraction(tval)
        total = Fraction(0)
        for (xe, qe, te), c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(xs, xe):
                if e:
                    term *= v ** e
            if qe:
                term *= qv ** qe
            if te:
                term *= tv ** te
            total += term
        return total

    # ------------------------------------------------------- serialization

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: _sort_key(mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: List[str] = []
        for idx, ((xe, qe, te), c) in enumerate(self.sorted_terms()):
            factors = []
            for i, e in enumerate(xe):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e:
                    factors.append(f"x{i + 1}^{e}")
            if qe == 1:
                factors.append("q")
            elif qe:
                factors.append(f"q^{qe}")
            if te == 1:
                factors.append("t")
            elif te:
                factors.append(f"t^{te}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append((" + " if c > 0 else " - ") + body)
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self})"


_FACTOR_RE = re.compile(r"^(?:x(\d+)|q|t)(?:\^(\d+))?$")


def mpoly_from_text(s: str, nvars: int) -> MPoly:
    """Parse the canonical text format back into an MPoly (exact round-trip)."""
    s = s.strip()
    if s == "0":
        return MPoly.zero(nvars)
    if s.startswith("-"):
        signs, bodies = ["-"], []
        rest = s[1:]
    else:
        signs, bodies = ["+"], []
        rest = s
    parts = re.split(r"\s([+-])\s", rest)
    bodies.append(parts[0])
    for k in range(1, len(parts), 2):
        signs.append(parts[k])
        bodies.append(parts[k + 1])
    terms: Dict[Monomial, int] = {}
    for sign, body in zip(signs, bodies):
        coeff = 1
        xe = [0] * nvars
        qe = te = 0
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r}")
            exp = int(m.group(2)) if m.group(2) else 1
            if factor.startswith("x"):
                i = int(m.group(1))
                if not 1 <= i <= nvars:
                    raise ValueError(f"variable x{i} outside alphabet of size {nvars}")
                xe[i - 1] += exp
            elif factor.startswith("q"):
                qe += exp
            else:
                te += exp
        if sign == "-":
            coeff = -coeff
        key = (tuple(xe), qe, te)
        terms[key] = terms.get(key, 0) + coeff
    return MPoly(nvars, terms)


def mpoly_to_json(p: MPoly) -> List[dict]:
    """Canonically ordered list of term records with decimal-string coefficients."""
    return [{"coeff": str(c), "xexp": list(xe), "qexp": qe, "texp": te}
            for (xe, qe, te), c in p.sorted_terms()]


def mpoly_from_json(data: Iterable[dict], nvars: int) -> MPoly:
    terms: Dict[Monomial, int] = {}
    for rec in data:
        key = (tuple(rec["xexp"]), rec["qexp"], rec["texp"])
        terms[key] = terms.get(key, 0) + int(rec["coeff"])
    return MPoly(nvars, terms)


# ---------------------------------------------------------------- q-series

_ONE = MPoly.const(1)
_ZERO = MPoly.zero()


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> MPoly:
    """Gaussian binomial [n choose k]_q, via the Pascal recurrence.

    Returns the zero polynomial when k < 0 or k > n.  n must be >= 0.

    >>> str(qbinom(4, 2))
    '1 + q + 2*q^2 + q^3 + q^4'
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return _ZERO
    if k == 0 or k == n:
        return _ONE
    # [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k]
    return qbinom(n - 1, k - 1) + MPoly.q(exp=k) * qbinom(n - 1, k)


def qmultinom(alpha: Sequence[int]) -> MPoly:
    """q-multinomial [|alpha| choose alpha_1,...,alpha_n]_q.

    Computed as a product of Gaussian binomials.  Any negative part gives 0.
    """
    parts = tuple(alpha)
    if any(a < 0 for a in parts):
        return _ZERO
    rem = sum(parts)
    out = _ONE
    for a in parts:
        out = out * qbinom(rem, a)
        rem -= a
    return out


def qnumber(n: int) -> MPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return MPoly(0, {((), e, 0): 1 for e in range(n)})


def check_qbinom_theorem(n: int) -> bool:
    """sum_i x^i q^C(i,2) [n choose i]_q == prod_{j=0}^{n-1} (1 + x q^j)."""
    x = MPoly.x(1, 1)
    lhs = MPoly.zero(1)
    for i in range(n + 1):
        lhs = lhs + (x ** i) * MPoly.q(1, comb(i, 2)) * qbinom(n, i).with_nvars(1)
    rhs = MPoly.const(1, 1)
    for j in range(n):
        rhs = rhs * (MPoly.const(1, 1) + x * MPoly.q(1, j))
    return lhs == rhs


def check_q_chu_vandermonde(m: int, n: int, k: int) -> bool:
    """sum_i [m choose k-i][n choose i] q^{i(m-k+i)} == [m+n choose k]."""
    if min(m, n, k) < 0:
        raise ValueError("arguments must be non-negative")
    lhs = _ZERO
    for i in range(k + 1):
        lhs = lhs + qbinom(m, k - i) * qbinom(n, i) * MPoly.q(exp=i * (m - k + i))
    return lhs == qbinom(m + n, k)


def check_q_dual_chu(m: int, n: int, k: int) -> bool:
    """sum_{i=k}^{m-n+k} [i choose k][m-i choose n-k] q^{i(n-k+1)}
    == [m+1 choose n+1] q^{k(n-k+1)}."""
    if not 0 <= k <= n <= m:
        raise ValueError("requires 0 <= k <= n <= m")
    lhs = _ZERO
    for i in range(k, m - n + k + 1):
        lhs = lhs + qbinom(i, k) * qbinom(m - i, n - k) * MPoly.q(exp=i * (n - k + 1))
    return lhs == qbinom(m + 1, n + 1) * MPoly.q(exp=k * (n - k + 1))


def check_q_telescope(m: int, n: int, k: int) -> bool:
    """sum_{i=k}^{n} [m-i choose n-i] q^{i(m-n+1)}
    == [m-k+1 choose n-k] q^{k(m-n+1)}."""
    if not 0 <= k <= n <= m:
        raise ValueError("requires 0 <= k <= n <= m")
    lhs = _ZERO
    for i in range(k, n + 1):
        lhs = lhs + qbinom(m - i, n - i) * MPoly.q(exp=i * (m - n + 1))
    return lhs == qbinom(m - k + 1, n - k) * MPoly.q(exp=k * (m - n + 1))
