"""Explicit eigenfunction certificates for the g_ktd family (0 < d < k).

Each constructor returns (exact eigenvalue, functions as rows); they mirror
the six families used to exhibit the closed-form spectrum and are consumed
by the verification suite and the tests only.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graphs import GraphError

__all__ = ["g_ktd_certificates"]


def _vidx(i: int, j: int, k: int) -> int:
    # v_j^i with 1-based class i and column j
    return (i - 1) * k + (j - 1)


def g_ktd_certificates(
    k: int, theta: int, d: int
) -> list[tuple[Fraction, np.ndarray]]:
    """All certificate eigenfunctions of g_ktd(k, theta, d) with eigenvalues."""
    if not (0 < d < k) or theta < 2:
        raise GraphError("certificates cover 0 < d < k and theta >= 2 only")
    n = k * theta
    out: list[tuple[Fraction, np.ndarray]] = []

    # column-difference functions across all classes
    for j in range(2, d + 1):
        f = np.zeros(n)
        for i in range(1, theta + 1):
            f[_vidx(i, 1, k)] = 1.0
            f[_vidx(i, j, k)] = -1.0
        out.append((Fraction(k, k - 1), f))

    # two-level function separating removed-clique columns from the rest
    f = np.zeros(n)
    for i in range(1, theta + 1):
        for j in range(1, k + 1):
            f[_vidx(i, j, k)] = -k * (k - d) if j <= d else d * (k - 1)
    out.append((Fraction(k * k - d, k * (k - 1)), f))

    # class-indicator functions
    for i in range(2, theta + 1):
        f = np.zeros(n)
        for j in range(1, k + 1):
            f[_vidx(1, j, k)] = 1.0
            f[_vidx(i, j, k)] = -1.0
        out.append((Fraction(theta, theta - 1), f))

    # duplicate-pair functions within a class
    for i in range(1, theta + 1):
        for j in range(d + 2, k + 1):
            f = np.zeros(n)
            f[_vidx(i, d + 1, k)] = 1.0
            f[_vidx(i, j, k)] = -1.0
            out.append((Fraction(1), f))

    # two-level class-pair functions
    for i in range(2, theta + 1):
        f = np.zeros(n)
        for j in range(1, k + 1):
            level = k * (k - d) if j <= d else -d * (k - 1)
            f[_vidx(1, j, k)] = level
            f[_vidx(i, j, k)] = -level
        out.append((1 - Fraction(k - d, k * (k - 1) * (theta - 1)), f))

    # four-point functions mixing class and column swaps
    for i in range(2, theta + 1):
        for j in range(2, d + 1):
            f = np.zeros(n)
            f[_vidx(1, 1, k)] = 1.0
            f[_vidx(i, j, k)] = 1.0
            f[_vidx(1, j, k)] = -1.0
            f[_vidx(i, 1, k)] = -1.0
            out.append((1 - Fraction(1, (k - 1) * (theta - 1)), f))

    return out
