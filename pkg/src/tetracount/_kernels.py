"""Compiled inner loops.

All arithmetic is exact: 64-bit integers for the fold terms, and a 128-bit
product assembled from 32-bit limbs for the final comparison. Callers keep
the diameter at or below ``geometry.FAST_PATH_MAX_DIAMETER``.
"""

import numpy as np
from numba import njit

_MASK32 = np.uint64(0xFFFFFFFF)
_SHIFT32 = np.uint64(32)


@njit(cache=True, inline="always")
def mul_u128(x, y):
    """Full product of two unsigned 64-bit integers as ``(hi, lo)``."""
    x = np.uint64(x)
    y = np.uint64(y)
    x0 = x & _MASK32
    x1 = x >> _SHIFT32
    y0 = y & _MASK32
    y1 = y >> _SHIFT32
    p00 = x0 * y0
    p01 = x0 * y1
    p10 = x1 * y0
    p11 = x1 * y1
    mid = (p00 >> _SHIFT32) + (p01 & _MASK32) + (p10 & _MASK32)
    lo = (p00 & _MASK32) | (mid << _SHIFT32)
    hi = p11 + (p01 >> _SHIFT32) + (p10 >> _SHIFT32) + (mid >> _SHIFT32)
    return hi, lo


@njit(cache=True, inline="always")
def square_below(p, hh, hl):
    """``p*p < (hh, hl)`` for a signed 64-bit ``p``."""
    if p < 0:
        p = -p
    ph, pl = mul_u128(p, p)
    return ph < hh or (ph == hh and pl < hl)


@njit(cache=True, inline="always")
def is_triangle(x, y, z):
    return x + y + z > 2 * max(x, max(y, z))


@njit(cache=True)
def fold_ok(A, a, B, b, C, c):
    A2 = A * A
    u = A2 + B * B - C * C
    v = A2 + c * c - b * b
    h1 = 4 * A2 * B * B - u * u
    h2 = 4 * A2 * c * c - v * v
    if h1 <= 0 or h2 <= 0:
        return False
    hh, hl = mul_u128(h1, h2)
    p = 2 * A2 * (a * a - B * B - c * c) + u * v
    return square_below(p, hh, hl)


@njit(cache=True)
def is_valid(A, a, B, b, C, c):
    return is_triangle(A, B, C) and is_triangle(A, b, c) and fold_ok(A, a, B, b, C, c)


@njit(cache=True, inline="always")
def is_canonical(A, a, B, b, C, c):
    t = (A, a, B, b, C, c)
    if (A, a, b, B, c, C) > t:
        return False
    if (a, A, B, b, c, C) > t:
        return False
    if (a, A, b, B, C, c) > t:
        return False
    if (C, c, A, a, B, b) > t:
        return False
    if (c, C, A, a, b, B) > t:
        return False
    if (c, C, a, A, B, b) > t:
        return False
    if (C, c, a, A, b, B) > t:
        return False
    if (B, b, C, c, A, a) > t:
        return False
    if (b, B, c, C, A, a) > t:
        return False
    if (B, b, c, C, a, A) > t:
        return False
    if (b, B, C, c, a, A) > t:
        return False
    if (A, a, C, c, B, b) > t:
        return False
    if (A, a, c, C, b, B) > t:
        return False
    if (a, A, c, C, B, b) > t:
        return False
    if (a, A, C, c, b, B) > t:
        return False
    if (B, b, A, a, C, c) > t:
        return False
    if (b, B, A, a, c, C) > t:
        return False
    if (B, b, a, A, c, C) > t:
        return False
    if (b, B, a, A, C, c) > t:
        return False
    if (C, c, B, b, A, a) > t:
        return False
    if (c, C, b, B, A, a) > t:
        return False
    if (c, C, B, b, a, A) > t:
        return False
    if (C, c, b, B, a, A) > t:
        return False
    return True


@njit(cache=True)
def canonical(A, a, B, b, C, c):
    m = (A, a, B, b, C, c)
    if (A, a, b, B, c, C) > m:
        m = (A, a, b, B, c, C)
    if (a, A, B, b, c, C) > m:
        m = (a, A, B, b, c, C)
    if (a, A, b, B, C, c) > m:
        m = (a, A, b, B, C, c)
    if (C, c, A, a, B, b) > m:
        m = (C, c, A, a, B, b)
    if (c, C, A, a, b, B) > m:
        m = (c, C, A, a, b, B)
    if (c, C, a, A, B, b) > m:
        m = (c, C, a, A, B, b)
    if (C, c, a, A, b, B) > m:
        m = (C, c, a, A, b, B)
    if (B, b, C, c, A, a) > m:
        m = (B, b, C, c, A, a)
    if (b, B, c, C, A, a) > m:
        m = (b, B, c, C, A, a)
    if (B, b, c, C, a, A) > m:
        m = (B, b, c, C, a, A)
    if (b, B, C, c, a, A) > m:
        m = (b, B, C, c, a, A)
    if (A, a, C, c, B, b) > m:
        m = (A, a, C, c, B, b)
    if (A, a, c, C, b, B) > m:
        m = (A, a, c, C, b, B)
    if (a, A, c, C, B, b) > m:
        m = (a, A, c, C, B, b)
    if (a, A, C, c, b, B) > m:
        m = (a, A, C, c, b, B)
    if (B, b, A, a, C, c) > m:
        m = (B, b, A, a, C, c)
    if (b, B, A, a, c, C) > m:
        m = (b, B, A, a, c, C)
    if (B, b, a, A, c, C) > m:
        m = (B, b, a, A, c, C)
    if (b, B, a, A, C, c) > m:
        m = (b, B, a, A, C, c)
    if (C, c, B, b, A, a) > m:
        m = (C, c, B, b, A, a)
    if (c, C, b, B, A, a) > m:
        m = (c, C, b, B, A, a)
    if (c, C, B, b, a, A) > m:
        m = (c, C, B, b, a, A)
    if (C, c, b, B, a, A) > m:
        m = (C, c, b, B, a, A)
    return m


@njit(cache=True)
def column_counts(A, n_lo, n_hi, bs, out):
    """Count canonical tetrahedra with diameter ``A`` per perimeter.

    ``out[n - n_lo]`` is incremented for every canonical valid labeling of
    perimeter ``n`` in ``[n_lo, n_hi]`` whose ``B`` lies in ``bs``. The loops
    only visit ``A >= every entry`` and ``B >= C, b, c``, which every
    canonical form satisfies.
    """
    A2 = A * A
    m_max = (2 * n_hi - 3) // 3
    for B in bs:
        if B > A or 2 * B <= A:
            continue
        for C in range(max(1, A + 1 - B), B + 1):
            if A + B + C > m_max or 2 * A + B + C + 2 > n_hi:
                break
            u = A2 + B * B - C * C
            h1 = 4 * A2 * B * B - u * u
            for b in range(1, B + 1):
                c0 = max(1, A + 1 - b)
                if A + B + C + b + c0 + 1 > n_hi:
                    break
                for c in range(c0, B + 1):
                    if A + b + c > m_max:
                        break
                    s = A + B + C + b + c
                    if s + 1 > n_hi:
                        break
                    lo = max(max(1, n_lo - s), max(abs(B - c), abs(b - C)) + 1)
                    hi = min(min(A, n_hi - s), min(B + c, b + C) - 1)
                    if lo > hi:
                        continue
                    v = A2 + c * c - b * b
                    h2 = 4 * A2 * c * c - v * v
                    hh, hl = mul_u128(h1, h2)
                    k = u * v - 2 * A2 * (B * B + c * c)
                    for a in range(lo, hi + 1):
                        p = 2 * A2 * a * a + k
                        if not square_below(p, hh, hl):
                            if p >= 0:
                                break
                            continue
                        if is_canonical(A, a, B, b, C, c):
                            out[s + a - n_lo] += 1


@njit(cache=True)
def naive_representatives(A, n, out):
    """Store the canonical form of every valid pairing of two faces on ``A``.

    Faces ``(A, B, C)`` and ``(A, b, c)`` run over all triangles with longest
    side ``A`` and perimeter at most ``(2n - 3) // 3``; ``a`` is whatever is
    left of ``n``. Returns the number of rows written, or -1 when ``out`` is
    full. Rows repeat when an orbit is reached more than once.
    """
    m_max = (2 * n - 3) // 3
    s_max = min(2 * A, m_max - A)
    if s_max < A + 1:
        return 0
    # triangles bucketed by B + C
    n_tri = 0
    for s in range(A + 1, s_max + 1):
        n_tri += min(A, s - 1) - max(1, s - A) + 1
    tri_b = np.empty(n_tri, np.int64)
    tri_c = np.empty(n_tri, np.int64)
    start = np.zeros(2 * A + 2, np.int64)
    k = 0
    for s in range(A + 1, s_max + 1):
        start[s] = k
        for x in range(max(1, s - A), min(A, s - 1) + 1):
            tri_b[k] = x
            tri_c[k] = s - x
            k += 1
        start[s + 1] = k
    rows = 0
    cap = out.shape[0]
    for i in range(n_tri):
        B = tri_b[i]
        C = tri_c[i]
        for a in range(1, A + 1):
            s2 = n - A - B - C - a
            if s2 < A + 1:
                break
            if s2 > s_max:
                continue
            for j in range(start[s2], start[s2 + 1]):
                b = tri_c[j]
                c = tri_b[j]
                if fold_ok(A, a, B, b, C, c):
                    if rows == cap:
                        return -1
                    m = canonical(A, a, B, b, C, c)
                    for q in range(6):
                        out[rows, q] = m[q]
                    rows += 1
    return rows


@njit(cache=True)
def count_all_valid(n):
    """Number of valid labelings (not orbits) of perimeter ``n``."""
    top = (n - 3) // 3
    total = 0
    for A in range(1, top + 1):
        for B in range(1, top + 1):
            for C in range(abs(A - B) + 1, min(top, A + B - 1) + 1):
                for b in range(1, top + 1):
                    for c in range(abs(A - b) + 1, min(top, A + b - 1) + 1):
                        a = n - (A + B + C + b + c)
                        if a < 1:
                            break
                        if a <= top and fold_ok(A, a, B, b, C, c):
                            total += 1
    return total


@njit(cache=True)
def valid_labelings(n):
    """All valid labelings of perimeter ``n`` as rows of an array."""
    top = (n - 3) // 3
    cap = 1024
    out = np.empty((cap, 6), np.int64)
    rows = 0
    for A in range(1, top + 1):
        for B in range(1, top + 1):
            for C in range(abs(A - B) + 1, min(top, A + B - 1) + 1):
                for b in range(1, top + 1):
                    for c in range(abs(A - b) + 1, min(top, A + b - 1) + 1):
                        a = n - (A + B + C + b + c)
                        if a < 1:
                            break
                        if a <= top and fold_ok(A, a, B, b, C, c):
                            if rows == cap:
                                cap *= 2
                                grown = np.empty((cap, 6), np.int64)
                                grown[:rows] = out[:rows]
                                out = grown
                            out[rows, 0] = A
                            out[rows, 1] = a
                            out[rows, 2] = B
                            out[rows, 3] = b
                            out[rows, 4] = C
                            out[rows, 5] = c
                            rows += 1
    return out[:rows]


@njit(cache=True)
def fix_symmetric(n):
    """Fixed-point counts for the four non-identity class representatives.

    Returns ``(three_cycle, double_transposition, transposition, four_cycle)``
    by direct loops over the constrained labelings.
    """
    top = max(0, (n - 3) // 3)
    f3 = 0
    if n % 3 == 0:
        for A in range(1, top + 1):
            a = n // 3 - A
            if 1 <= a and is_valid(A, a, A, a, A, a):
                f3 += 1
    fd = 0
    ft = 0
    for A in range(1, top + 1):
        for a in range(1, top + 1):
            for B in range(1, top + 1):
                rest = n - A - a - 2 * B
                if rest < 2:
                    break
                if rest % 2 == 0:
                    x = rest // 2
                    # B=b, C=c
                    if is_valid(A, a, B, B, x, x):
                        fd += 1
                    # B=C, b=c
                    if is_valid(A, a, B, x, B, x):
                        ft += 1
    f4 = 0
    for A in range(1, top + 1):
        rest = n - 2 * A
        if rest >= 4 and rest % 4 == 0:
            B = rest // 4
            if is_valid(A, A, B, B, B, B):
                f4 += 1
    return f3, fd, ft, f4
