"""Compiled orbit loops.

Branch indices follow the registry order of each algorithm, so the Python
classifier and ``classify`` below must agree (tested).
"""

import math

import numpy as np
from numba import njit

from .algorithms import algorithm

KIND_SORTED, KIND_MIN, KIND_ARP, KIND_REVERSE, KIND_CASSAIGNE = range(5)

_KINDS = {
    "Brun": KIND_SORTED,
    "Selmer": KIND_SORTED,
    "Poincare": KIND_SORTED,
    "FullySubtractive": KIND_MIN,
    "ARP": KIND_ARP,
    "Reverse": KIND_REVERSE,
    "Cassaigne": KIND_CASSAIGNE,
}

TINY = 1e-100


def tables(algo):
    """``(kind, inverses, matrices)`` as float arrays for the kernels."""
    algo = algorithm(algo)
    inv = np.array([b.inverse_np for b in algo.branches])
    mat = np.array([b.matrix_np for b in algo.branches])
    return _KINDS[algo.name], inv, mat


@njit(cache=True)
def _less(x, i, j):
    return x[i] < x[j] or (x[i] == x[j] and i < j)


@njit(cache=True)
def _perm_index(x):
    # index in PERMUTATIONS of the (value, index) sorting order
    if _less(x, 0, 1):
        if _less(x, 1, 2):
            return 0
        return 1 if _less(x, 0, 2) else 4
    if _less(x, 0, 2):
        return 2
    return 3 if _less(x, 1, 2) else 5


@njit(cache=True)
def _dominant(x):
    for i in range(3):
        if x[i] > x[(i + 1) % 3] + x[(i + 2) % 3]:
            return i
    return -1


@njit(cache=True)
def classify(kind, x):
    if kind == KIND_SORTED:
        return _perm_index(x)
    if kind == KIND_MIN:
        p = _perm_index(x)
        return 0 if p < 2 else (1 if p < 4 else 2)
    if kind == KIND_ARP:
        d = _dominant(x)
        return d if d >= 0 else 3 + _perm_index(x)
    if kind == KIND_REVERSE:
        d = _dominant(x)
        return d if d >= 0 else 3
    return 0 if x[0] > x[2] else 1


@njit(cache=True)
def _step(kind, inv, x, out):
    # out <- F(x) / |F(x)|_1 ; returns (branch, |F(x)|_1) or (-1, 0) on failure
    b = classify(kind, x)
    s = 0.0
    for i in range(3):
        v = inv[b, i, 0] * x[0] + inv[b, i, 1] * x[1] + inv[b, i, 2] * x[2]
        out[i] = v
        s += v
    if not s > 0.0:
        return -1, 0.0
    zeros = 0
    for i in range(3):
        out[i] /= s
        # an exact zero is a boundary point and the orbit goes on; an
        # underflowing positive coordinate (or NaN) ends it
        if out[i] == 0.0:
            zeros += 1
        elif not out[i] >= TINY:
            return -1, 0.0
    if zeros > 1:
        return -1, 0.0
    return b, s


@njit(cache=True, nogil=True)
def lyapunov_kernel(kind, inv, mat, x0, y0, n):
    """Returns ``(ok, S1, S2, x, y)`` after ``n`` steps."""
    x = x0.copy()
    y = y0.copy()
    nx = np.empty(3)
    ny = np.empty(3)
    s1 = 0.0
    s2 = 0.0
    for _ in range(n):
        b, s = _step(kind, inv, x, nx)
        if b < 0:
            return False, 0.0, 0.0, x, y
        ls = math.log(s)
        for i in range(3):
            ny[i] = mat[b, 0, i] * y[0] + mat[b, 1, i] * y[1] + mat[b, 2, i] * y[2]
        # y <- y - <y,x>/<x,x> x
        c = (ny[0] * nx[0] + ny[1] * nx[1] + ny[2] * nx[2]) / (
            nx[0] * nx[0] + nx[1] * nx[1] + nx[2] * nx[2])
        t = 0.0
        for i in range(3):
            ny[i] -= c * nx[i]
            t += abs(ny[i])
        if not t > 0.0:
            return False, 0.0, 0.0, x, y
        lt = math.log(t)
        if not (math.isfinite(ls) and math.isfinite(lt)):
            return False, 0.0, 0.0, x, y
        s1 -= ls
        s2 += lt
        for i in range(3):
            x[i] = nx[i]
            y[i] = ny[i] / t
    return True, s1, s2, x, y


@njit(cache=True)
def bin_index(x, ndivs):
    """``(i, j, up)`` of the barycentric grid cell containing ``x``."""
    u = x[0] * ndivs
    v = x[1] * ndivs
    i = min(int(math.floor(u)), ndivs - 1)
    j = min(int(math.floor(v)), ndivs - 1)
    up = (u - i) + (v - j) < 1.0 or i + j > ndivs - 2
    if i + j > ndivs - 1:
        # rounding pushed the point across the outer edge
        j = ndivs - 1 - i
        up = True
    return i, j, up


@njit(cache=True, nogil=True)
def histogram_kernel(kind, inv, x0, n, ndivs, counts):
    """Bins ``n`` orbit points into ``counts[i, j, 0 (up) or 1 (down)]``.

    Returns the number of points binned before the orbit failed (``n`` on success).
    """
    x = x0.copy()
    nx = np.empty(3)
    for it in range(n):
        b, s = _step(kind, inv, x, nx)
        if b < 0:
            return it
        i, j, up = bin_index(nx, ndivs)
        counts[i, j, 0 if up else 1] += 1
        for k in range(3):
            x[k] = nx[k]
    return n

