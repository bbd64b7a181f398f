"""Exact integer arithmetic for quadratic irrationals.

Every sequence in this package whose definition involves a number of the
form (a + sqrt(b)) / c is evaluated through the helpers below, never
through floating point.  A single misrounded floor near an integer
boundary would silently corrupt a table or falsify a verification sweep,
so floors and comparisons are certified by integer inequalities.
"""

from __future__ import annotations

from math import isqrt

import numpy as np


def floor_quadratic(a: int, b: int, c: int) -> int:
    """Return floor((a + sqrt(b)) / c) exactly, for integers with b >= 0, c > 0.

    Works whether or not b is a perfect square.
    """
    if b < 0 or c <= 0:
        raise ValueError("need b >= 0 and c > 0")
    s = isqrt(b)
    if s * s == b:
        return (a + s) // c
    # s < sqrt(b) < s+1, so the true floor is (a+s)//c or one more.
    q = (a + s) // c
    t = (q + 1) * c - a
    if t <= 0 or t * t <= b:  # q+1 <= (a + sqrt(b))/c; equality impossible (b non-square)
        q += 1
    return q


def cmp_linear_sqrt(x: int, y: int, d: int) -> int:
    """Return the sign of x - y*sqrt(d) for integers x, y and d >= 0."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if y == 0:
        return (x > 0) - (x < 0)
    if y > 0:
        if x <= 0:
            return -1 if (x, d) != (0, 0) else 0
        lhs, rhs = x * x, y * y * d
        return (lhs > rhs) - (lhs < rhs)
    # y < 0: x - y*sqrt(d) = x + |y|*sqrt(d)
    if x >= 0:
        return 1 if (x, d) != (0, 0) else 0
    lhs, rhs = x * x, y * y * d
    # both sides negative before squaring; comparison flips
    return (rhs > lhs) - (rhs < lhs)


def floor_quadratic_vec(a: np.ndarray, b: np.ndarray, c: int) -> np.ndarray:
    """Vectorised floor((a + sqrt(b)) / c), exact for int64 inputs.

    Requires every b to be non-square (true for all uses here: the
    discriminants 4p^2+1 and m'^2+4 are never perfect squares) and
    small enough that b and the squared correction terms fit in int64.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if c <= 0:
        raise ValueError("c must be positive")
    if b.size and int(b.max()) > (1 << 53):
        raise OverflowError("b too large for exact float64 conversion")
    s = np.sqrt(b.astype(np.float64)).astype(np.int64)
    # certify the integer square root: s^2 <= b < (s+1)^2
    s = np.where((s + 1) * (s + 1) <= b, s + 1, s)
    s = np.where(s * s > b, s - 1, s)
    q = (a + s) // c
    t = (q + 1) * c - a
    bump = (t <= 0) | (t * t <= b)
    return q + bump.astype(np.int64)
