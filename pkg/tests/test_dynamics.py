import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcf import MCFError, algorithm
from mcf import _kernels
from mcf.dynamics import (
    NATURAL_EXTENSION_COLUMNS,
    ComparisonRow,
    Summary,
    _orbit_start,
    cell_barycenter,
    density_value,
    has_density,
    invariant_measure_histogram,
    lyapunov_comparison,
    lyapunov_orbit,
    lyapunov_table,
    max_threads,
    natural_extension_sample,
    random_simplex_point,
)


def test_random_simplex_point():
    assert (random_simplex_point(4) == random_simplex_point(4)).all()
    assert not (random_simplex_point(4) == random_simplex_point(5)).all()
    pts = np.array([random_simplex_point(s) for s in range(2000)])
    assert np.all(pts > 0)
    assert np.abs(pts.sum(axis=1) - 1).max() <= 1e-12


def test_uniform_start_mean():
    rng = np.random.default_rng(0)
    x = rng.standard_exponential((10**5, 3))
    x /= x.sum(axis=1, keepdims=True)
    assert np.abs(x.mean(axis=0) - 1 / 3).max() < 0.005


def test_histogram_zero_iterations():
    h = invariant_measure_histogram("Brun", 0, 10, seed=1)
    assert h.total == 0 and h.counts.shape == (10, 10, 2)


@pytest.mark.parametrize("name", ["Brun", "ARP", "Poincare"])
def test_histogram_counts_every_point(name):
    h = invariant_measure_histogram(name, 20000, 12, seed=3)
    assert h.total == 20000
    assert len(h.cells()) == 144
    again = invariant_measure_histogram(name, 20000, 12, seed=3)
    assert (h.counts == again.counts).all()


def test_histogram_unused_down_cells_stay_empty():
    h = invariant_measure_histogram("Cassaigne", 50000, 8, seed=0)
    for i in range(8):
        for j in range(8):
            if i + j > 6:
                assert h.counts[i, j, 1] == 0
            if i + j > 7:
                assert h.counts[i, j, 0] == 0


def test_histogram_bad_args():
    with pytest.raises(ValueError):
        invariant_measure_histogram("Brun", 10, 0, seed=0)
    with pytest.raises(ValueError):
        invariant_measure_histogram("Brun", -1, 5, seed=0)


@given(st.floats(0, 1), st.floats(0, 1), st.integers(1, 40))
def test_bin_index_contains_point(u, v, n):
    if u + v > 1:
        u, v = 1 - u, 1 - v
    x = np.array([u, v, 1 - u - v])
    i, j, up = _kernels.bin_index(x, n)
    k = n - 1 - i - j if up else n - 2 - i - j
    assert 0 <= i < n and 0 <= j < n and k >= 0
    # barycentric coordinates relative to the cell corner lie within one grid step
    lo = np.array([i, j, k]) / n
    d = x - lo
    tol = 1e-9
    if up:
        assert np.all(d >= -tol)
    else:
        assert np.all(d <= 1 / n + tol)


def test_cell_barycenters_cover_simplex():
    n = 5
    cells = invariant_measure_histogram("Brun", 0, n, seed=0).cells()
    bary = np.array([cell_barycenter(i, j, k, up, n) for i, j, k, up, _ in cells])
    assert np.allclose(bary.sum(axis=1), 1)
    assert np.allclose(bary.mean(axis=0), 1 / 3)


def test_density_examples():
    assert density_value("Brun", (0.2, 0.3, 0.5)) == pytest.approx(1 / (2 * 0.3 * 0.7 * 0.5))
    assert density_value("Brun", (0.2, 0.3, 0.5)) == pytest.approx(4.7619, abs=1e-4)
    assert density_value("Reverse", (1 / 3, 1 / 3, 1 / 3)) == pytest.approx(3.375)
    assert density_value("Cassaigne", (0.5, 0.2, 0.3)) == pytest.approx(1 / (0.5 * 0.7))
    for name in ("ARP", "Selmer", "Poincare", "FullySubtractive"):
        assert density_value(name, (0.2, 0.3, 0.5)) is None
        assert not has_density(name)
    with pytest.raises(MCFError):
        density_value("Cassaigne", (1.0, 0.0, 0.0))


@given(st.permutations([0.15, 0.25, 0.6]))
def test_brun_density_symmetric(x):
    assert density_value("Brun", x) == pytest.approx(density_value("Brun", (0.15, 0.25, 0.6)))


def test_natural_extension_hand_example():
    x0 = (Fraction(1, 5), Fraction(3, 10), Fraction(1, 2))
    (s,) = natural_extension_sample("Brun", 1, x0=x0)
    assert s.step == 1 and s.label == "123"
    assert s.x == (Fraction(1, 5), Fraction(3, 10), Fraction(1, 5))
    assert s.a == (Fraction(1, 3), Fraction(2, 3), Fraction(1, 3))
    assert s.pairing() == Fraction(1, 3)
    (f,) = natural_extension_sample("Brun", 1, x0=(0.2, 0.3, 0.5), normalize=False)
    assert f.x == pytest.approx((0.2, 0.3, 0.2), abs=1e-15)
    assert f.a == pytest.approx((1 / 3, 2 / 3, 1 / 3), abs=1e-15)


def test_natural_extension_exact_pairing():
    x0 = (Fraction(1, 7), Fraction(2, 7), Fraction(4, 7))
    for s in natural_extension_sample("ARP", 3, x0=x0):
        assert s.pairing() == Fraction(1, 3)


@pytest.mark.parametrize("name", ["Brun", "Selmer", "ARP", "Reverse", "Cassaigne"])
def test_natural_extension_drift(name):
    states = natural_extension_sample(name, 1200, seed=9)
    assert len(states) == 1200
    p0 = sum(random_simplex_point(9)) / 3
    drift = max(abs(s.pairing() - p0) for s in states) / p0
    assert drift <= 1e-9
    assert all(abs(sum(s.x) - 1) < 1e-12 for s in states)


def test_natural_extension_rows():
    (s,) = natural_extension_sample("Cassaigne", 1, seed=0)
    row = s.row()
    assert len(row) == len(NATURAL_EXTENSION_COLUMNS)
    with pytest.raises(ValueError):
        natural_extension_sample("Brun", 0, seed=0)


def test_lyapunov_deterministic():
    a = lyapunov_orbit("Brun", 20000, seed=2)
    b = lyapunov_orbit("Brun", 20000, seed=2)
    assert a == b and a.success
    assert a.theta1 > 0 > a.theta2


@pytest.mark.parametrize("name", ["Brun", "ARP", "Cassaigne", "Reverse"])
def test_orthogonality_maintained(name):
    algo = algorithm(name)
    kind, inv, mat = _kernels.tables(algo)
    for seed in range(3):
        x, y = _orbit_start(seed)
        assert abs(x @ y) <= 1e-12 * np.linalg.norm(x) * np.linalg.norm(y)
        ok, _, _, x, y = _kernels.lyapunov_kernel(kind, inv, mat, x, y, 5000)
        assert ok
        assert abs(x @ y) <= 1e-12 * np.linalg.norm(x) * np.linalg.norm(y)


def test_single_orbit_table():
    t = lyapunov_table("Selmer", 1, 5000, seed=0)
    for q in (t.theta1, t.theta2, t.ratio):
        assert q.min == q.mean == q.max and q.std == 0


def test_table_independent_of_threads():
    one = lyapunov_table("ARP", 4, 5000, seed=7, threads=1)
    many = lyapunov_table("ARP", 4, 5000, seed=7, threads=3)
    assert one == many


def test_table_bad_args():
    with pytest.raises(ValueError):
        lyapunov_table("Brun", 0, 10, seed=0)
    with pytest.raises(ValueError):
        lyapunov_orbit("Brun", 0, seed=0)


def test_summary():
    s = Summary.of([1.0, 2.0, 3.0])
    assert (s.min, s.mean, s.max) == (1.0, 2.0, 3.0)
    assert s.std == pytest.approx(1.0)


@settings(max_examples=20)
@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=30))
def test_summary_matches_numpy(values):
    s = Summary.of(values)
    assert s.min <= s.mean <= s.max or math.isclose(s.min, s.max)
    if len(values) > 1:
        assert s.std == pytest.approx(np.std(values, ddof=1), rel=1e-9, abs=1e-9)


def test_comparison_sorted_by_ratio():
    rows = lyapunov_comparison(["Brun", "Reverse", "ARP"], 2, 20000, seed=0)
    assert all(isinstance(r, ComparisonRow) for r in rows)
    ratios = [r.table.ratio.mean for r in rows]
    assert ratios == sorted(ratios, reverse=True)
    assert rows[-1].algo == "Reverse"
    (only,) = lyapunov_comparison(["Cassaigne"], 1, 1000, seed=0)
    assert only.algo == "Cassaigne" and only.error is None
    with pytest.raises(ValueError):
        lyapunov_comparison([], 1, 10, seed=0)


def test_max_threads_env(monkeypatch):
    monkeypatch.setenv("MCF_THREADS", "1")
    assert max_threads() == 1
    monkeypatch.setenv("MCF_THREADS", "many")
    with pytest.raises(MCFError):
        max_threads()
