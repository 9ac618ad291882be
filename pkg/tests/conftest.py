"""Shared generators and independent oracles for the test suite.

Every randomized test owns a seeded ``random.Random`` so runs are
reproducible; nothing here depends on the code paths it is used to
check (the cofactor determinant below is the independent oracle for the
Faddeev-LeVerrier characteristic polynomial).
"""

from __future__ import annotations

import random

from algperiods import (
    IntMatrix,
    IntPolynomial,
    Mode,
    block_diag,
    mat_mul,
    mat_scale,
    realize_orientable_reversing,
    symplectic_transvection,
)


def random_matrix(rng: random.Random, dim: int, lo: int = -3, hi: int = 3) -> IntMatrix:
    return IntMatrix([[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)])


def charpoly_cofactor(a: IntMatrix) -> IntPolynomial:
    """det(xI - A) by recursive cofactor expansion over polynomial entries."""
    n = a.dim
    entries = [
        [
            IntPolynomial([-a.rows[i][j], 1]) if i == j else IntPolynomial([-a.rows[i][j]])
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(m):
        k = len(m)
        if k == 0:
            return IntPolynomial([1])
        if k == 1:
            return m[0][0]
        total = IntPolynomial()
        for j in range(k):
            c = m[0][j]
            if c.is_zero():
                continue
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            term = c * det(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return det(entries)


def plus_minus_identity(g: int) -> IntMatrix:
    """diag(I_g, -I_g), the basic antisymplectic block."""
    return block_diag([IntMatrix.identity(g), mat_scale(IntMatrix.identity(g), -1)])


def random_symplectic_pair(rng: random.Random, g: int, count: int = 3):
    """A random product of symplectic transvections together with its inverse."""
    n = 2 * g
    s = IntMatrix.identity(n)
    s_inv = IntMatrix.identity(n)
    for _ in range(count):
        v = [0] * n
        for idx in rng.sample(range(n), k=min(n, rng.randint(1, 3))):
            v[idx] = rng.choice([-1, 1])
        lam = rng.choice([-1, 1])
        s = mat_mul(s, symplectic_transvection(v, lam))
        s_inv = mat_mul(symplectic_transvection(v, -lam), s_inv)
    return s, s_inv


def random_antisymplectic_quasiunipotent(rng: random.Random) -> IntMatrix:
    """An antisymplectic quasi-unipotent matrix, usually dense.

    Built from a library antisymplectic block (either diag(I, -I) or a
    reversing realization matrix) conjugated by a random symplectic
    transvection product, which preserves both properties.
    """
    if rng.random() < 0.4:
        base = plus_minus_identity(rng.randint(1, 5))
    else:
        targets = sorted(rng.sample([2, 4, 6, 8], k=rng.randint(1, 2)))
        mode = rng.choice([Mode.FAITHFUL, Mode.CORRECTED])
        base = realize_orientable_reversing(set(targets), mode).model.matrix
        if base.dim == 0:
            base = plus_minus_identity(rng.randint(1, 3))
    s, s_inv = random_symplectic_pair(rng, base.dim // 2, count=rng.randint(2, 4))
    return mat_mul(mat_mul(s_inv, base), s)
