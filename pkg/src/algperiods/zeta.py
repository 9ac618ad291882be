"""Lefschetz zeta functions as formal products of binomials (1 + d*z^r)^m.

The zeta function of an integer sequence (L_n) is exp(sum L_n z^n / n).
For a finitely supported Dold class it is the finite product

    prod_k (1 - z^k)^(-a_k),

the exponent convention being pinned down by the series identity: taking
z d/dz log of the product must reproduce L_n = sum_{k | n} k a_k, which
the test suite checks against ``lefschetz_from_dold``.

Canonicalization rewrites every (1 + z^k) factor through
(1 + z^k) = (1 - z^(2k)) / (1 - z^k), leaving the unique representation
prod (1 - z^k)^(e_k):

    e_k = c_k + d_(k/2) - d_k   (k even),      e_k = c_k - d_k   (k odd),

where c and d collect the exponents of (1 - z^k) and (1 + z^k) factors.
The odd part of the support of e is the minimal set of Lefschetz periods
of any sequence with this zeta function; it never contains even numbers.

Factor string grammar (used by the command line): semicolon-separated
terms "SIGN,r,m" with SIGN in {+,-}, e.g. "+,3,2;-,1,-1" for
(1+z^3)^2 (1-z)^(-1).  Whitespace is ignored and duplicate (sign, r)
terms merge by adding exponents.
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, NamedTuple

from .arith import DoldClass

__all__ = [
    "Factor",
    "ZetaFactorization",
    "zeta_from_dold",
    "series_expand",
    "lefschetz_from_zeta",
    "canonicalize",
    "mper_from_factorization",
    "parse_factors",
    "format_factors",
]


class Factor(NamedTuple):
    delta: int  # +1 or -1
    r: int      # exponent of z inside the binomial
    m: int      # integer exponent of the whole binomial


class ZetaFactorization:
    """Normalized finite product of binomials (1 + delta*z^r)^m.

    Normalization merges factors with the same (delta, r), drops zero
    exponents and sorts by (r, delta), so equal products compare equal.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[tuple[int, int, int]] = ()):
        merged: Dict[tuple[int, int], int] = {}
        for delta, r, m in factors:
            delta, r, m = int(delta), int(r), int(m)
            if delta not in (1, -1):
                raise ValueError(f"factor sign must be +1 or -1, got {delta}")
            if r < 1:
                raise ValueError(f"factor degree must be positive, got {r}")
            merged[(delta, r)] = merged.get((delta, r), 0) + m
        self.factors = tuple(
            Factor(delta, r, m)
            for (delta, r), m in sorted(merged.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            if m
        )

    def __eq__(self, other: object):
        if isinstance(other, ZetaFactorization):
            return self.factors == other.factors
        return NotImplemented

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"ZetaFactorization({format_factors(self)!r})"


def zeta_from_dold(d: DoldClass) -> ZetaFactorization:
    """The zeta function of the sequence L_n = sum_{k|n} k a_k."""
    return ZetaFactorization((-1, k, -a) for k, a in d.items())


def _binomial(m: int, j: int) -> int:
    """comb(m, j) extended to negative m: (-1)^j comb(-m+j-1, j)."""
    if j < 0:
        return 0
    if m >= 0:
        return comb(m, j)
    return (-1) ** j * comb(-m + j - 1, j)


def _mul_trunc(a: list[int], b: list[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, c in enumerate(a):
        if c:
            top = n_max - i
            for j, d in enumerate(b[: top + 1]):
                if d:
                    out[i + j] += c * d
    return out


def series_expand(f: ZetaFactorization, n_max: int) -> list[int]:
    """Integer power-series coefficients of the product through degree n_max."""
    if n_max < 1:
        raise ValueError("truncation order must be positive")
    series = [1] + [0] * n_max
    for delta, r, m in f.factors:
        factor = [0] * (n_max + 1)
        for t in range(n_max // r + 1):
            factor[t * r] = _binomial(m, t) * (delta ** t)
        series = _mul_trunc(series, factor, n_max)
    return series


def lefschetz_from_zeta(f: ZetaFactorization, n_max: int) -> list[int]:
    """Recover L_1..L_{n_max} from z d/dz log of the product.

    Each factor (1 + d*z^r)^m contributes -m * r * (-d)^(n/r) to L_n when
    r divides n; summing over factors inverts exp(sum L_n z^n / n).
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    out = [0] * n_max
    for delta, r, m in f.factors:
        for n in range(r, n_max + 1, r):
            out[n - 1] -= m * r * (-delta) ** (n // r)
    return out


def canonicalize(f: ZetaFactorization) -> Dict[int, int]:
    """Exponents e_k of the unique representation prod (1 - z^k)^(e_k)."""
    c: Dict[int, int] = {}
    d: Dict[int, int] = {}
    for delta, r, m in f.factors:
        table = d if delta == 1 else c
        table[r] = table.get(r, 0) + m
    keys = set(c) | set(d) | {2 * k for k in d}
    out: Dict[int, int] = {}
    for k in sorted(keys):
        e = c.get(k, 0) - d.get(k, 0)
        if k % 2 == 0:
            e += d.get(k // 2, 0)
        if e:
            out[k] = e
    return out


def mper_from_factorization(f: ZetaFactorization) -> set[int]:
    """Odd indices with nonzero canonical exponent; never contains evens."""
    return {k for k in canonicalize(f) if k % 2}


def parse_factors(text: str) -> ZetaFactorization:
    """Parse the "SIGN,r,m;..." factor grammar."""
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty factor string")
    factors = []
    for term in compact.split(";"):
        if not term:
            continue
        fields = term.split(",")
        if len(fields) != 3:
            raise ValueError(f"factor term {term!r} is not SIGN,r,m")
        sign, r_text, m_text = fields
        if sign in ("+",):
            delta = 1
        elif sign in ("-", "−"):
            delta = -1
        else:
            raise ValueError(f"factor sign {sign!r} must be + or -")
        try:
            r = int(r_text)
            m = int(m_text)
        except ValueError as exc:
            raise ValueError(f"factor term {term!r} has non-integer fields") from exc
        if r < 1:
            raise ValueError(f"factor degree must be positive, got {r}")
        factors.append((delta, r, m))
    if not factors:
        raise ValueError("factor string contains no terms")
    return ZetaFactorization(factors)


def format_factors(f: ZetaFactorization) -> str:
    """Inverse of parse_factors, for round-tripping reports."""
    return ";".join(f"{'+' if delta == 1 else '-'},{r},{m}" for delta, r, m in f.factors)
