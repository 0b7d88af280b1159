# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""Chebyshev polynomials of the first and second kind.

Values come from the three-term recurrence, which stays accurate at |x| near
1 where the trigonometric form divides by a vanishing sine.
"""

from enum import Enum

import numpy as np


class ChebyshevKind(Enum):
    FIRST = "T"
    SECOND = "U"


def _result(values):
    return float(values) if np.ndim(values) == 0 else values


def eval_U(m: int, x):
    """U_m(x) with U_{-1} = 0 and U_0 = 1. Accepts scalars or arrays."""
    if m < -1:
        raise ValueError(f"U_m needs m >= -1, got {m}")
    x = np.asarray(x, dtype=float)
    previous, current = np.zeros_like(x), np.ones_like(x)
    if m == -1:
        return _result(previous)
    for _ in range(m):
        previous, current = current, 2.0 * x * current - previous
    return _result(current)


def eval_T(m: int, x):
    """T_m(x), so that T_m(cos t) = cos(m t)."""
    if m < 0:
        raise ValueError(f"T_m needs m >= 0, got {m}")
    x = np.asarray(x, dtype=float)
    previous, current = np.ones_like(x), x.copy()
    if m == 0:
        return _result(previous)
    for _ in range(m - 1):
        previous, current = current, 2.0 * x * current - previous
    return _result(current)


def evaluate(kind: ChebyshevKind, m: int, x):
    if kind is ChebyshevKind.FIRST:
        return eval_T(m, x)
    return eval_U(m, x)


def roots_U(m: int) -> list[float]:
    """Roots cos(k pi / (m + 1)), k = 1..m, in decreasing order."""
    if m < 1:
        raise ValueError(f"U_m has roots only for m >= 1, got {m}")
    return [float(np.cos(k * np.pi / (m + 1))) for k in range(1, m + 1)]
