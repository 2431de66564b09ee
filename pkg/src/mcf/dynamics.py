"""Orbit simulation: invariant measure histograms, densities, the natural
extension and Lyapunov exponents."""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .algorithms import algorithm, is_exact, project, sorting_permutation
from .errors import MCFError
from .geometry import to_plane

MAX_RESTARTS = 100


def max_threads():
    """Worker count for orbit sweeps, capped by ``MCF_THREADS`` when set."""
    n = os.cpu_count() or 1
    env = os.environ.get("MCF_THREADS")
    if env:
        try:
            n = max(1, min(n, int(env)))
        except ValueError:
            raise MCFError("MCF_THREADS must be an integer, got %r" % env) from None
    return n


def _start(rng):
    x = rng.standard_exponential(3)
    return x / x.sum()


def random_simplex_point(seed):
    """Uniform point of the simplex, deterministic in ``seed``."""
    return _start(np.random.default_rng(seed))


# --- invariant measure ---------------------------------------------------

@dataclass
class SimplexHistogram:
    """Visit counts on the barycentric grid of the simplex.

    ``counts[i, j, 0]`` is the upward triangle with corner ``(i, j, ndivs-1-i-j)/ndivs``,
    ``counts[i, j, 1]`` the downward one next to it (only for ``i + j <= ndivs - 2``).
    All ``ndivs**2`` cells have the same area.
    """

    algo: str
    ndivs: int
    counts: np.ndarray
    restarts: int = 0

    @property
    def total(self):
        return int(self.counts.sum())

    def cells(self):
        """``(i, j, k, up, count)`` for every cell, in a fixed order."""
        n = self.ndivs
        out = []
        for i in range(n):
            for j in range(n - i):
                out.append((i, j, n - 1 - i - j, True, int(self.counts[i, j, 0])))
                if i + j <= n - 2:
                    out.append((i, j, n - 2 - i - j, False, int(self.counts[i, j, 1])))
        return out


def cell_barycenter(i, j, k, up, ndivs):
    off = 1 / 3 if up else 2 / 3
    return ((i + off) / ndivs, (j + off) / ndivs, (k + off) / ndivs)


def invariant_measure_histogram(algo, n_iterations, ndivs, seed):
    """Histogram of ``n_iterations`` points of the projective orbit.

    An orbit that degenerates is continued from a fresh random start drawn
    from the same generator; more than ``MAX_RESTARTS`` restarts is an error.
    """
    algo = algorithm(algo)
    if ndivs < 1:
        raise ValueError("ndivs must be >= 1")
    if n_iterations < 0:
        raise ValueError("n_iterations must be >= 0")
    kind, inv, _ = _kernels.tables(algo)
    counts = np.zeros((ndivs, ndivs, 2), dtype=np.int64)
    rng = np.random.default_rng(seed)
    remaining = n_iterations
    restarts = -1
    while remaining > 0:
        restarts += 1
        if restarts > MAX_RESTARTS:
            raise MCFError(
                "%s orbit failed more than %d times; histogram incomplete" % (algo, MAX_RESTARTS)
            )
        remaining -= _kernels.histogram_kernel(kind, inv, _start(rng), remaining, ndivs, counts)
    return SimplexHistogram(algo.name, ndivs, counts, max(restarts, 0))


def has_density(algo):
    return algorithm(algo).name in ("Brun", "Reverse", "Cassaigne")


def density_value(algo, x):
    """Closed-form invariant density at ``x`` (up to normalization).

    Returns ``None`` for the algorithms whose density has no known closed form.
    """
    algo = algorithm(algo)
    x = tuple(float(c) for c in x)
    if algo.name == "Brun":
        p = sorting_permutation(x)
        a, b = x[int(p[0]) - 1], x[int(p[1]) - 1]
        den = 2 * b * (1 - b) * (1 - a - b)
    elif algo.name == "Reverse":
        den = (1 - x[0]) * (1 - x[1]) * (1 - x[2])
    elif algo.name == "Cassaigne":
        den = (1 - x[0]) * (1 - x[2])
    else:
        return None
    if den == 0:
        raise MCFError("density of %s is singular at %s" % (algo, x))
    return 1 / den


# --- natural extension ---------------------------------------------------

@dataclass
class NaturalExtensionState:
    step: int
    label: str
    x: tuple
    a: tuple
    px: float = field(init=False)
    py: float = field(init=False)
    pax: float = field(init=False)
    pay: float = field(init=False)

    def __post_init__(self):
        self.px, self.py = to_plane(project(self.x))
        self.pax, self.pay = to_plane(project(self.a))

    def pairing(self):
        return sum(ai * xi for ai, xi in zip(self.a, self.x))

    def row(self):
        return [self.step, self.label, *map(float, self.x), *map(float, self.a),
                self.px, self.py, self.pax, self.pay]


NATURAL_EXTENSION_COLUMNS = ["step", "label", "x1", "x2", "x3", "a1", "a2", "a3",
                             "px", "py", "pax", "pay"]


def natural_extension_sample(algo, n, seed=None, x0=None, normalize=None):
    """States ``(x_k, a_k)`` for ``k = 1 .. n`` of the coupled recursions
    ``x <- M^-1 x`` and ``a <- M^T a`` with ``a_0 = (1/3, 1/3, 1/3)``.

    ``x0`` defaults to a random simplex point drawn from ``seed``.  Rational
    ``x0`` gives an exact orbit.

    With ``normalize`` (the default for float input) ``x`` is rescaled onto the
    simplex after each step and ``a`` by the inverse factor, which keeps
    ``<a, x>`` unchanged.  Unnormalized float orbits are exact dyadic
    computations and stop after a few hundred steps, like integer vectors.
    """
    algo = algorithm(algo)
    if n < 1:
        raise ValueError("n must be >= 1")
    if x0 is None:
        x0 = random_simplex_point(seed)
    exact = is_exact(x0)
    if normalize is None:
        normalize = not exact
    if exact:
        x = tuple(x0)
        a = (Fraction(1, 3),) * 3
    else:
        x = tuple(float(c) for c in x0)
        a = (1 / 3,) * 3
    states = []
    for k in range(1, n + 1):
        label, x = algo.step(x)
        m = algo.branch(label).matrix
        a = tuple(sum(m[i][j] * a[i] for i in range(3)) for j in range(3))
        if normalize:
            s = sum(x)
            x = tuple(c / s for c in x)
            a = tuple(c * s for c in a)
        states.append(NaturalExtensionState(k, label, x, a))
    return states


# --- Lyapunov exponents --------------------------------------------------

@dataclass(frozen=True)
class LyapunovEstimate:
    theta1: float
    theta2: float
    ratio: float
    iterations: int
    success: bool
    seed: int = 0


def _orbit_start(seed):
    rng = np.random.default_rng(seed)
    x = _start(rng)
    y = rng.standard_normal(3)
    y -= (y @ x) / (x @ x) * x
    return x, y / np.abs(y).sum()


def _lyapunov_raw(algo, n_iterations, seed):
    kind, inv, mat = _kernels.tables(algo)
    x, y = _orbit_start(seed)
    return _kernels.lyapunov_kernel(kind, inv, mat, x, y, n_iterations)


def lyapunov_orbit(algo, n_iterations, seed):
    """Estimate ``theta1`` and ``theta2`` on one orbit of ``n_iterations`` steps.

    ``theta1`` is the mean contraction rate of ``x`` under ``F``.  ``theta2`` is
    the growth rate of a vector ``y`` pushed by the transposed matrices and kept
    orthogonal to ``x``; pairing invariance makes the orthogonality exact up to
    rounding.  A degenerate orbit gives ``success=False`` instead of raising.
    """
    algo = algorithm(algo)
    if n_iterations < 1:
        raise ValueError("n_iterations must be >= 1")
    ok, s1, s2, _, _ = _lyapunov_raw(algo, n_iterations, seed)
    if not ok:
        nan = float("nan")
        return LyapunovEstimate(nan, nan, nan, 0, False, seed)
    t1, t2 = s1 / n_iterations, s2 / n_iterations
    ratio = 1 - t2 / t1 if t1 != 0 else float("nan")
    return LyapunovEstimate(t1, t2, ratio, n_iterations, True, seed)


@dataclass(frozen=True)
class Summary:
    min: float
    mean: float
    max: float
    std: float

    @classmethod
    def of(cls, values):
        values = [float(v) for v in values]
        n = len(values)
        mean = math.fsum(values) / n
        var = math.fsum((v - mean) ** 2 for v in values) / (n - 1) if n > 1 else 0.0
        return cls(min(values), mean, max(values), math.sqrt(var))


QUANTITIES = ("theta1", "theta2", "ratio")


@dataclass(frozen=True)
class LyapunovTable:
    algo: str
    n_orbits: int
    n_success: int
    n_iterations: int
    theta1: Summary
    theta2: Summary
    ratio: Summary

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        kw = dict(d)
        for q in QUANTITIES:
            kw[q] = Summary(**d[q])
        return cls(**kw)


def _map_orbits(algo, n_orbits, n_iterations, seed, threads):
    seeds = [seed + k for k in range(n_orbits)]
    threads = min(threads or max_threads(), n_orbits)
    if threads <= 1:
        return [lyapunov_orbit(algo, n_iterations, s) for s in seeds]
    with ThreadPoolExecutor(threads) as ex:
        return list(ex.map(lambda s: lyapunov_orbit(algo, n_iterations, s), seeds))


def lyapunov_table(algo, n_orbits, n_iterations, seed, threads=None):
    """Min, mean, max and sample std of the estimates over successful orbits.

    Orbit ``k`` uses seed ``seed + k``, so the result does not depend on the
    number of worker threads.
    """
    algo = algorithm(algo)
    if n_orbits < 1:
        raise ValueError("n_orbits must be >= 1")
    if n_iterations < 1:
        raise ValueError("n_iterations must be >= 1")
    est = [e for e in _map_orbits(algo, n_orbits, n_iterations, seed, threads) if e.success]
    if not est:
        raise MCFError("all %d orbits of %s failed" % (n_orbits, algo))
    stats = {q: Summary.of(getattr(e, q) for e in est) for q in QUANTITIES}
    return LyapunovTable(algo.name, n_orbits, len(est), n_iterations, **stats)


@dataclass
class ComparisonRow:
    algo: str
    table: LyapunovTable = None
    error: str = None


def lyapunov_comparison(algos, n_orbits, n_iterations, seed, threads=None):
    """One row per algorithm, sorted by mean ``1 - theta2/theta1`` descending.

    An algorithm whose orbits all fail keeps a row carrying the error text;
    such rows go last.
    """
    if not algos:
        raise ValueError("algorithm list is empty")
    rows = []
    for a in algos:
        a = algorithm(a)
        try:
            rows.append(ComparisonRow(a.name, lyapunov_table(a, n_orbits, n_iterations, seed,
                                                             threads)))
        except MCFError as e:
            rows.append(ComparisonRow(a.name, error=str(e)))

    def key(r):
        if r.table is None or math.isnan(r.table.ratio.mean):
            return (1, 0.0)
        return (0, -r.table.ratio.mean)

    return sorted(rows, key=key)
