"""Lefschetz numbers, Dold coefficients and algebraic periods of homology models.

A homology model is a surface kind plus the integer matrix of the induced
map on rank-relevant first homology.  Lefschetz numbers of iterations are
computed degree-wise:

    orientable:      L_l = 1 - tr(A^l) + eps^l   (eps = +1 preserving, -1 reversing)
    non-orientable:  L_l = 1 - tr(A^l)

In the non-orientable case the trace lives on rational first homology
(rank genus - 1); the torsion Z/2 part never contributes and is never
represented.

``algebraic_periods`` is total and exact on quasi-unipotent models: the
support of the Dold class is contained in the divisors of the cyclotomic
orders of the characteristic polynomial together with {1, 2} (the reg_1
and reg_2 terms contributed by degrees 0 and 2), so computing the
expansion on that divisor-closed candidate set captures every nonzero
coefficient.  Non-quasi-unipotent models have unbounded Lefschetz
sequences and potentially infinite period sets, hence the error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import DoldClass, LefschetzSequence, divisors, dold_coefficients
from .exactmat import (
    DimensionMismatch,
    IntMatrix,
    charpoly,
    is_antisymplectic,
    is_symplectic,
    mat_mul,
)
from .exactmat import trace as mat_trace
from .polycyc import cyclotomic_factorization, trace_sequence_from_charpoly

__all__ = [
    "WrongKind",
    "FormViolation",
    "SurfaceKind",
    "HomologyModel",
    "PeriodicPointGuarantee",
    "euler_characteristic",
    "lefschetz_number",
    "lefschetz_numbers",
    "lefschetz_numbers_from_charpoly",
    "algebraic_periods",
    "ap_odd",
    "mper_l",
    "odd_vanishing_check",
    "periodic_point_certificate",
]


class WrongKind(Exception):
    """The operation applies to a different surface kind."""


class FormViolation(Exception):
    """Strict mode: the matrix does not satisfy the form predicate of its kind."""


class SurfaceKind(enum.Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"
    NONORIENTABLE = "nonorientable"


def _degree_two_term(kind: SurfaceKind, l: int) -> int:
    if kind is SurfaceKind.PRESERVING:
        return 1
    if kind is SurfaceKind.REVERSING:
        return -1 if l % 2 else 1
    return 0


class HomologyModel:
    """Surface kind, genus, and the matrix of the induced map on H_1.

    Orientable kinds act on rank 2*genus, the non-orientable kind on the
    torsion-free rank genus - 1.  With ``strict=True`` the constructor
    additionally enforces the form predicate of the kind (symplectic for
    preserving, antisymplectic for reversing); analysis of arbitrary
    matrices should leave it off.
    """

    __slots__ = ("kind", "matrix", "genus")

    def __init__(self, kind: SurfaceKind, matrix: IntMatrix, genus: int, strict: bool = False):
        genus = int(genus)
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        if kind is SurfaceKind.NONORIENTABLE:
            if genus < 1:
                raise ValueError("a non-orientable surface has genus at least 1")
            if matrix.dim != genus - 1:
                raise DimensionMismatch(
                    f"non-orientable genus {genus} needs a matrix of dimension {genus - 1},"
                    f" got {matrix.dim}"
                )
        else:
            if matrix.dim != 2 * genus:
                raise DimensionMismatch(
                    f"orientable genus {genus} needs a matrix of dimension {2 * genus},"
                    f" got {matrix.dim}"
                )
        if strict:
            if kind is SurfaceKind.PRESERVING and not is_symplectic(matrix):
                raise FormViolation("orientation-preserving matrix must be symplectic")
            if kind is SurfaceKind.REVERSING and not is_antisymplectic(matrix):
                raise FormViolation("orientation-reversing matrix must be antisymplectic")
        self.kind = kind
        self.matrix = matrix
        self.genus = genus

    def __eq__(self, other: object):
        if isinstance(other, HomologyModel):
            return (
                self.kind is other.kind
                and self.matrix == other.matrix
                and self.genus == other.genus
            )
        return NotImplemented

    def __repr__(self) -> str:
        return f"HomologyModel({self.kind.value!r}, dim={self.matrix.dim}, genus={self.genus})"


def euler_characteristic(m: HomologyModel) -> int:
    """2 - 2*genus for orientable kinds, 2 - genus for non-orientable."""
    if m.kind is SurfaceKind.NONORIENTABLE:
        return 2 - m.genus
    return 2 - 2 * m.genus


def lefschetz_number(m: HomologyModel, l: int) -> int:
    """L_l of the model, from the l-th matrix power."""
    if l < 1:
        raise ValueError("iteration index must be positive")
    power = IntMatrix.identity(m.matrix.dim)
    base = m.matrix
    e = l
    while e:
        if e & 1:
            power = mat_mul(power, base)
        base = mat_mul(base, base)
        e >>= 1
    return 1 - mat_trace(power) + _degree_two_term(m.kind, l)


def lefschetz_numbers(m: HomologyModel, n_max: int) -> list[int]:
    """[L_1, ..., L_{n_max}] via incremental matrix powers."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    out = []
    power = IntMatrix.identity(m.matrix.dim)
    for l in range(1, n_max + 1):
        power = mat_mul(power, m.matrix)
        out.append(1 - mat_trace(power) + _degree_two_term(m.kind, l))
    return out


def lefschetz_numbers_from_charpoly(kind: SurfaceKind, cp, n_max: int) -> list[int]:
    """Same sequence, but with traces taken from the characteristic polynomial.

    Newton power sums make this cheap for large matrices; it must agree
    with ``lefschetz_numbers`` and the test suite holds it to that.
    """
    traces = trace_sequence_from_charpoly(cp, n_max)
    return [1 - traces[l - 1] + _degree_two_term(kind, l) for l in range(1, n_max + 1)]


def algebraic_periods(m: HomologyModel) -> DoldClass:
    """The Dold class of the model; its support is the set of algebraic periods.

    Requires the matrix to be quasi-unipotent (NotQuasiUnipotent
    propagates from the cyclotomic factorization otherwise).
    """
    cp = charpoly(m.matrix)
    mults = cyclotomic_factorization(cp)
    candidates = {1, 2}
    for d in mults:
        candidates.update(divisors(d))
    n_max = max(candidates)
    lefschetz = lefschetz_numbers_from_charpoly(m.kind, cp, n_max)
    values = {l: lefschetz[l - 1] for l in candidates}
    return dold_coefficients(LefschetzSequence(values))


def ap_odd(m: HomologyModel) -> set[int]:
    """The odd algebraic periods of the model."""
    return {n for n in algebraic_periods(m).support() if n % 2}


def mper_l(m: HomologyModel) -> set[int]:
    """Minimal set of Lefschetz periods; coincides with ap_odd."""
    return ap_odd(m)


def odd_vanishing_check(m: HomologyModel, bound: int) -> bool:
    """Whether L_l = 0 for every odd l <= bound (reversing models only)."""
    if m.kind is not SurfaceKind.REVERSING:
        raise WrongKind("odd vanishing is a property of orientation-reversing models")
    if bound < 1:
        raise ValueError("bound must be positive")
    square = mat_mul(m.matrix, m.matrix)
    power = m.matrix
    l = 1
    while l <= bound:
        if 1 - mat_trace(power) - 1 != 0:
            return False
        l += 2
        if l <= bound:
            power = mat_mul(power, square)
    return True


@dataclass(frozen=True)
class PeriodicPointGuarantee:
    """A statement about minimal periods forced in a whole homotopy class."""

    period: int
    guarantee: str  # "odd" or "either"
    periods: tuple[int, ...]
    statement: str


def periodic_point_certificate(d: DoldClass) -> list[PeriodicPointGuarantee]:
    """Periodic-point guarantees carried by a nonzero Dold coefficient.

    For transversal maps (Morse-Smale diffeomorphisms included), a_n != 0
    forces a point of minimal period n when n is odd, and a point of
    minimal period n or n/2 when n is even.
    """
    records = []
    for n in d.support():
        if n % 2:
            records.append(
                PeriodicPointGuarantee(
                    period=n,
                    guarantee="odd",
                    periods=(n,),
                    statement=(
                        f"every transversal map in the class has a point of minimal period {n}"
                    ),
                )
            )
        else:
            records.append(
                PeriodicPointGuarantee(
                    period=n,
                    guarantee="either",
                    periods=(n, n // 2),
                    statement=(
                        f"every transversal map in the class has a point of minimal period"
                        f" {n} or {n // 2}"
                    ),
                )
            )
    return records
