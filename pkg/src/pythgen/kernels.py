"""Integer hot loops: triple enumeration, brute-force scans, squarefree sieve.

Each kernel has a numba ``@njit`` version and a pure-numpy version.  The numba
path is used when numba imports and ``PYTHGEN_DISABLE_NUMBA`` is unset (or
``0``); set ``PYTHGEN_DISABLE_NUMBA=1`` to force numpy.  Both paths return
identical arrays, and ``tests/test_kernels.py`` holds them to that.

Kernels work in int64, so sides are limited to ``MAX_KERNEL_HYP``.  The exact
layers above fall back to plain Python ints beyond that.
"""
from __future__ import annotations

import math
import os

import numpy as np

MAX_KERNEL_HYP = 3_000_000_000  # c*c and 2*c*c stay below 2**63

_disabled = os.environ.get("PYTHGEN_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("disabled by PYTHGEN_DISABLE_NUMBA")
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


def _check_bound(max_hyp: int) -> None:
    if max_hyp > MAX_KERNEL_HYP:
        raise OverflowError(f"max_hyp {max_hyp} exceeds int64 kernel bound {MAX_KERNEL_HYP}")


def sort_triples(tri: np.ndarray) -> np.ndarray:
    """Order rows ``(small_leg, big_leg, hyp)`` by hyp, then small leg."""
    if len(tri) == 0:
        return tri.reshape(0, 3)
    order = np.lexsort((tri[:, 0], tri[:, 2]))
    return tri[order]


# --------------------------------------------------------------------------
# numpy implementations

def primitive_triples_numpy(max_hyp: int) -> np.ndarray:
    smax = math.isqrt(max(max_hyp - 1, 0))
    if smax < 2:
        return np.empty((0, 3), dtype=np.int64)
    s = np.arange(2, smax + 1, dtype=np.int64)[:, None]
    t = np.arange(1, smax, dtype=np.int64)[None, :]
    mask = (t < s) & ((s - t) % 2 == 1) & (s * s + t * t <= max_hyp) & (np.gcd(s, t) == 1)
    ss, tt = np.broadcast_arrays(s, t)
    ss, tt = ss[mask], tt[mask]
    odd = ss * ss - tt * tt
    even = 2 * ss * tt
    out = np.stack([np.minimum(odd, even), np.maximum(odd, even), ss * ss + tt * tt], axis=1)
    return out


def expand_multiples_numpy(prim: np.ndarray, max_hyp: int) -> np.ndarray:
    if len(prim) == 0:
        return prim.reshape(0, 3)
    counts = max_hyp // prim[:, 2]
    rows = np.repeat(prim, counts, axis=0)
    starts = np.cumsum(counts) - counts
    k = np.arange(counts.sum(), dtype=np.int64) - np.repeat(starts, counts) + 1
    return rows * k[:, None]


def brute_force_triples_numpy(max_hyp: int, primitive_only: bool) -> np.ndarray:
    """Double loop over ``a < b``, testing whether ``a*a + b*b`` is a square."""
    found = []
    limit = max_hyp * max_hyp
    for a in range(1, max_hyp + 1):
        bmax = math.isqrt(limit - a * a)
        if bmax <= a:
            break
        b = np.arange(a + 1, bmax + 1, dtype=np.int64)
        s = a * a + b * b
        c = np.sqrt(s.astype(np.float64)).astype(np.int64)
        c += (c + 1) * (c + 1) <= s
        c -= c * c > s
        hit = c * c == s
        if primitive_only:
            hit &= np.gcd(b, a) == 1
        if hit.any():
            bb = b[hit]
            found.append(np.stack([np.full_like(bb, a), bb, c[hit]], axis=1))
    if not found:
        return np.empty((0, 3), dtype=np.int64)
    return np.concatenate(found)


def squarefree_parts_numpy(n_max: int) -> np.ndarray:
    """Squarefree part of every ``n`` in ``[0, n_max]`` by sieving prime squares."""
    part = np.arange(n_max + 1, dtype=np.int64)
    root = math.isqrt(n_max)
    is_p = np.ones(root + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(root) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    for p in np.flatnonzero(is_p):
        pp = int(p) * int(p)
        idx = np.arange(pp, n_max + 1, pp)
        while len(idx):
            part[idx] //= pp
            idx = idx[part[idx] % pp == 0]
    return part


def integer_pair_scan_numpy(c: int, leg_a: int, leg_b: int) -> tuple[int, int]:
    r = math.isqrt(c)
    y = np.arange(1, r + 1, dtype=np.int64)
    if r <= 1024:
        xg = y[:, None]
        p, q = 2 * xg * y, y * y - xg * xg
        hit = (xg < y) & (xg * xg + y * y == c) & (((p == leg_a) & (q == leg_b)) | ((p == leg_b) & (q == leg_a)))
        i, j = np.nonzero(hit)
        if len(i) == 0:
            return 0, 0
        return int(i[0]) + 1, int(j[0]) + 1
    for x in range(1, r):
        yy = y[x:]
        p, q = 2 * x * yy, yy * yy - x * x
        hit = (x * x + yy * yy == c) & (((p == leg_a) & (q == leg_b)) | ((p == leg_b) & (q == leg_a)))
        j = np.flatnonzero(hit)
        if len(j):
            return x, int(yy[j[0]])
    return 0, 0


# --------------------------------------------------------------------------
# numba implementations

if HAS_NUMBA:

    @njit(cache=True)
    def _gcd(a, b):
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True)
    def _isqrt(s):
        r = np.int64(math.sqrt(s))
        while r * r > s:
            r -= 1
        while (r + 1) * (r + 1) <= s:
            r += 1
        return r

    @njit(cache=True)
    def _primitive_triples_nb(max_hyp):
        count = 0
        s = 2
        while s * s + 1 <= max_hyp:
            t = 1 if s % 2 == 0 else 2
            while t < s and s * s + t * t <= max_hyp:
                if _gcd(s, t) == 1:
                    count += 1
                t += 2
            s += 1
        out = np.empty((count, 3), dtype=np.int64)
        i = 0
        s = 2
        while s * s + 1 <= max_hyp:
            t = 1 if s % 2 == 0 else 2
            while t < s and s * s + t * t <= max_hyp:
                if _gcd(s, t) == 1:
                    odd = s * s - t * t
                    even = 2 * s * t
                    out[i, 0] = min(odd, even)
                    out[i, 1] = max(odd, even)
                    out[i, 2] = s * s + t * t
                    i += 1
                t += 2
            s += 1
        return out

    @njit(cache=True)
    def _expand_multiples_nb(prim, max_hyp):
        total = 0
        for i in range(prim.shape[0]):
            total += max_hyp // prim[i, 2]
        out = np.empty((total, 3), dtype=np.int64)
        j = 0
        for i in range(prim.shape[0]):
            for k in range(1, max_hyp // prim[i, 2] + 1):
                out[j, 0] = k * prim[i, 0]
                out[j, 1] = k * prim[i, 1]
                out[j, 2] = k * prim[i, 2]
                j += 1
        return out

    @njit(cache=True)
    def _brute_force_triples_nb(max_hyp, primitive_only):
        limit = max_hyp * max_hyp
        out = np.empty((1024, 3), dtype=np.int64)
        n = 0
        for a in range(1, max_hyp + 1):
            if a * a + (a + 1) * (a + 1) > limit:
                break
            for b in range(a + 1, max_hyp + 1):
                s = a * a + b * b
                if s > limit:
                    break
                c = _isqrt(s)
                if c * c != s:
                    continue
                if primitive_only and _gcd(a, b) != 1:
                    continue
                if n == out.shape[0]:
                    grown = np.empty((2 * n, 3), dtype=np.int64)
                    grown[:n] = out
                    out = grown
                out[n, 0] = a
                out[n, 1] = b
                out[n, 2] = c
                n += 1
        return out[:n].copy()

    @njit(cache=True)
    def _squarefree_parts_nb(n_max):
        part = np.arange(n_max + 1).astype(np.int64)
        root = _isqrt(n_max)
        is_p = np.ones(root + 1, dtype=np.bool_)
        for p in range(2, root + 1):
            if not is_p[p]:
                continue
            for m in range(p * p, root + 1, p):
                is_p[m] = False
            pp = p * p
            for m in range(pp, n_max + 1, pp):
                while part[m] % pp == 0:
                    part[m] //= pp
        return part

    @njit(cache=True)
    def _integer_pair_scan_nb(c, leg_a, leg_b):
        r = _isqrt(c)
        for x in range(1, r + 1):
            for y in range(x + 1, r + 1):
                if x * x + y * y != c:
                    continue
                p = 2 * x * y
                q = y * y - x * x
                if (p == leg_a and q == leg_b) or (p == leg_b and q == leg_a):
                    return x, y
        return 0, 0


# --------------------------------------------------------------------------
# dispatch

def primitive_triples(max_hyp: int) -> np.ndarray:
    """All primitive triples with hyp <= max_hyp, rows ``(small, big, hyp)``, sorted."""
    _check_bound(max_hyp)
    if HAS_NUMBA:
        raw = _primitive_triples_nb(np.int64(max_hyp))
    else:
        raw = primitive_triples_numpy(max_hyp)
    return sort_triples(raw)


def all_triples(max_hyp: int, primitive_only: bool = False) -> np.ndarray:
    """Every triple with hyp <= max_hyp via Euclid's parameters plus scaling, sorted."""
    _check_bound(max_hyp)
    if HAS_NUMBA:
        prim = _primitive_triples_nb(np.int64(max_hyp))
        raw = prim if primitive_only else _expand_multiples_nb(prim, np.int64(max_hyp))
    else:
        prim = primitive_triples_numpy(max_hyp)
        raw = prim if primitive_only else expand_multiples_numpy(prim, max_hyp)
    return sort_triples(raw)


def brute_force_triples(max_hyp: int, primitive_only: bool = False) -> np.ndarray:
    """Independent double-loop enumeration, same row layout and order."""
    _check_bound(max_hyp)
    if HAS_NUMBA:
        raw = _brute_force_triples_nb(np.int64(max_hyp), primitive_only)
    else:
        raw = brute_force_triples_numpy(max_hyp, primitive_only)
    return sort_triples(raw)


def squarefree_parts(n_max: int) -> np.ndarray:
    if HAS_NUMBA:
        return _squarefree_parts_nb(np.int64(n_max))
    return squarefree_parts_numpy(n_max)


def integer_pair_scan(c: int, leg_a: int, leg_b: int) -> tuple[int, int]:
    """Literal scan of ``1 <= x < y <= isqrt(c)``; ``(0, 0)`` when nothing matches."""
    if c > MAX_KERNEL_HYP:
        r = math.isqrt(c)
        legs = {leg_a, leg_b}
        for x in range(1, r + 1):
            for y in range(x + 1, r + 1):
                if x * x + y * y == c and {2 * x * y, y * y - x * x} == legs:
                    return x, y
        return 0, 0
    if HAS_NUMBA:
        x, y = _integer_pair_scan_nb(np.int64(c), np.int64(leg_a), np.int64(leg_b))
        return int(x), int(y)
    return integer_pair_scan_numpy(c, leg_a, leg_b)
