"""The seven 3-dimensional continued fraction algorithms.

Each algorithm is a piecewise linear map ``F(x) = M(x)^-1 x`` on the positive
cone.  The cone is cut into labelled cells and each cell carries an integer
matrix ``M``, a substitution whose incidence matrix is ``M`` and a dual
substitution whose incidence matrix is ``M^T``.

Vectors are plain tuples.  Tuples of ``int``/``Fraction`` are iterated in
exact arithmetic, anything containing a ``float`` in double precision.

>>> brun = algorithm("Brun")
>>> brun.classify((0.2, 0.3, 0.5))
'123'
>>> [str(c) for c in brun.step((1, 2, 3))[1]]
['1', '2', '1']
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import DegenerateVectorError, MCFError
from .words import Substitution, det3

PERMUTATIONS = ("123", "132", "213", "231", "312", "321")

_EPS = np.finfo(float).eps


def _mat(rows):
    return tuple(tuple(int(a) for a in r) for r in rows)


def inverse3(m):
    """Exact inverse of a 3x3 integer matrix, entries as ``Fraction``."""
    d = det3(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
            cof[i][j] = (-1) ** (i + j) * minor
    # adjugate is the transposed cofactor matrix
    return tuple(tuple(Fraction(cof[j][i], d) for j in range(3)) for i in range(3))


@dataclass(frozen=True)
class Branch:
    label: str
    matrix: tuple
    substitution: Substitution
    dual_substitution: Substitution
    inverse: tuple = field(init=False)
    det: int = field(init=False)
    adjugate: tuple = field(init=False, repr=False, compare=False)
    matrix_np: np.ndarray = field(init=False, repr=False, compare=False)
    inverse_np: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        inv = inverse3(self.matrix)
        object.__setattr__(self, "inverse", inv)
        d = det3(self.matrix)
        object.__setattr__(self, "det", d)
        object.__setattr__(
            self, "adjugate", tuple(tuple(int(a * d) for a in r) for r in inv)
        )
        m = np.array(self.matrix, dtype=float)
        mi = np.array([[float(a) for a in r] for r in inv])
        m.flags.writeable = False
        mi.flags.writeable = False
        object.__setattr__(self, "matrix_np", m)
        object.__setattr__(self, "inverse_np", mi)


def sorting_permutation(x):
    """Label ``pi`` with ``x[pi1] <= x[pi2] <= x[pi3]``; ties broken by index."""
    order = sorted(range(3), key=lambda i: (x[i], i))
    return "".join(str(i + 1) for i in order)


def _classify_sorted(x):
    return sorting_permutation(x)


def _classify_min(x):
    return sorting_permutation(x)[0]


def _dominant(x):
    # index i with x_i > sum of the others (at most one exists)
    for i in range(3):
        j, k = [a for a in range(3) if a != i]
        if x[i] > x[j] + x[k]:
            return str(i + 1)
    return None


def _classify_arp(x):
    return _dominant(x) or sorting_permutation(x)


def _classify_reverse(x):
    return _dominant(x) or "4"


def _classify_cassaigne(x):
    return "1" if x[0] > x[2] else "2"


@dataclass(frozen=True)
class AlgorithmDef:
    name: str
    branches: tuple
    classifier: Callable = field(repr=False)
    title: str = ""

    def __post_init__(self):
        labels = [b.label for b in self.branches]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate branch labels in %s" % self.name)
        object.__setattr__(self, "_index", {b.label: b for b in self.branches})

    @property
    def labels(self):
        return tuple(b.label for b in self.branches)

    def branch(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(
                "unknown branch %r for %s (labels: %s)"
                % (label, self.name, ", ".join(self.labels))
            ) from None

    def substitutions(self):
        return {b.label: b.substitution for b in self.branches}

    def dual_substitutions(self):
        return {b.label: b.dual_substitution for b in self.branches}

    def matrices(self):
        return {b.label: b.matrix for b in self.branches}

    def classify(self, x):
        _check_vector(x)
        return self.classifier(x)

    def step(self, x):
        """Return ``(label, F(x))``."""
        label = self.classify(x)
        return label, apply_inverse(self.branch(label), x)

    def coding(self, x, n):
        """First ``n`` branch labels along the orbit of ``x``."""
        out = []
        for k in range(n):
            try:
                label, x = self.step(x)
            except DegenerateVectorError as e:
                raise DegenerateVectorError(e.vector, step=k) from None
            out.append(label)
        return out

    def coding_iterator(self, x):
        k = 0
        while True:
            try:
                label, x = self.step(x)
            except DegenerateVectorError as e:
                raise DegenerateVectorError(e.vector, step=k) from None
            yield label
            k += 1

    def __str__(self):
        return self.title or self.name


def is_exact(x):
    return not any(isinstance(c, (float, np.floating)) for c in x)


def _check_vector(x):
    if len(x) != 3:
        raise DegenerateVectorError(x)
    for c in x:
        if c < 0 or (isinstance(c, (float, np.floating)) and not math.isfinite(c)):
            raise DegenerateVectorError(x)
    if sum(1 for c in x if c == 0) >= 2:
        raise DegenerateVectorError(x)


def _exact(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def apply_inverse(branch, x):
    """``branch.inverse @ x``, exact for rational input."""
    if is_exact(x):
        adj, d = branch.adjugate, branch.det
        y = []
        for r in adj:
            num = r[0] * x[0] + r[1] * x[1] + r[2] * x[2]
            if isinstance(num, int) and num % d == 0:
                y.append(num // d)
            else:
                y.append(_exact(Fraction(num) / d))
        y = tuple(y)
        if min(y) < 0:
            raise MCFError("internal error: negative entry after step %s" % (y,))
        return y
    inv = branch.inverse_np
    x = [float(c) for c in x]
    y = [inv[i, 0] * x[0] + inv[i, 1] * x[1] + inv[i, 2] * x[2] for i in range(3)]
    tol = 8 * _EPS * (x[0] + x[1] + x[2])
    for i in range(3):
        if y[i] < 0:
            if y[i] < -tol:
                raise MCFError("internal error: negative entry after step %s" % (y,))
            y[i] = 0.0
    return tuple(float(c) for c in y)


def project(x):
    """Normalize a nonnegative vector to the simplex ``x1 + x2 + x3 = 1``."""
    s = sum(x)
    if s == 0:
        raise DegenerateVectorError(x)
    if is_exact(x):
        return tuple(_exact(Fraction(c) / s) for c in x)
    return tuple(float(c) / s for c in x)


# --- registry ------------------------------------------------------------

def _b(label, matrix, sub, dual):
    return Branch(label, _mat(matrix), Substitution(*sub), Substitution(*dual))


_BRUN = [
    _b("123", [[1, 0, 0], [0, 1, 0], [0, 1, 1]], ("1", "23", "3"), ("1", "2", "32")),
    _b("132", [[1, 0, 0], [0, 1, 1], [0, 0, 1]], ("1", "2", "32"), ("1", "23", "3")),
    _b("213", [[1, 0, 0], [0, 1, 0], [1, 0, 1]], ("13", "2", "3"), ("1", "2", "31")),
    _b("231", [[1, 0, 1], [0, 1, 0], [0, 0, 1]], ("1", "2", "31"), ("13", "2", "3")),
    _b("312", [[1, 0, 0], [1, 1, 0], [0, 0, 1]], ("12", "2", "3"), ("1", "21", "3")),
    _b("321", [[1, 1, 0], [0, 1, 0], [0, 0, 1]], ("1", "21", "3"), ("12", "2", "3")),
]

_SELMER = [
    _b("123", [[1, 0, 0], [0, 1, 0], [1, 0, 1]], ("13", "2", "3"), ("1", "2", "31")),
    _b("132", [[1, 0, 0], [1, 1, 0], [0, 0, 1]], ("12", "2", "3"), ("1", "21", "3")),
    _b("213", [[1, 0, 0], [0, 1, 0], [0, 1, 1]], ("1", "23", "3"), ("1", "2", "32")),
    _b("231", [[1, 1, 0], [0, 1, 0], [0, 0, 1]], ("1", "21", "3"), ("12", "2", "3")),
    _b("312", [[1, 0, 0], [0, 1, 1], [0, 0, 1]], ("1", "2", "32"), ("1", "23", "3")),
    _b("321", [[1, 0, 1], [0, 1, 0], [0, 0, 1]], ("1", "2", "31"), ("13", "2", "3")),
]

_POINCARE = [
    _b("123", [[1, 0, 0], [1, 1, 0], [1, 1, 1]], ("123", "23", "3"), ("1", "21", "321")),
    _b("132", [[1, 0, 0], [1, 1, 1], [1, 0, 1]], ("132", "2", "32"), ("1", "231", "31")),
    _b("213", [[1, 1, 0], [0, 1, 0], [1, 1, 1]], ("13", "213", "3"), ("12", "2", "312")),
    _b("231", [[1, 1, 1], [0, 1, 0], [0, 1, 1]], ("1", "231", "31"), ("132", "2", "32")),
    _b("312", [[1, 0, 1], [1, 1, 1], [0, 0, 1]], ("12", "2", "312"), ("13", "213", "3")),
    _b("321", [[1, 1, 1], [0, 1, 1], [0, 0, 1]], ("1", "21", "321"), ("123", "23", "3")),
]

_FULLY_SUBTRACTIVE = [
    _b("1", [[1, 0, 0], [1, 1, 0], [1, 0, 1]], ("123", "2", "3"), ("1", "21", "31")),
    _b("2", [[1, 1, 0], [0, 1, 0], [0, 1, 1]], ("1", "231", "3"), ("12", "2", "32")),
    _b("3", [[1, 0, 1], [0, 1, 1], [0, 0, 1]], ("1", "2", "312"), ("13", "23", "3")),
]

_AR = [
    _b("1", [[1, 1, 1], [0, 1, 0], [0, 0, 1]], ("1", "21", "31"), ("123", "2", "3")),
    _b("2", [[1, 0, 0], [1, 1, 1], [0, 0, 1]], ("12", "2", "32"), ("1", "231", "3")),
    _b("3", [[1, 0, 0], [0, 1, 0], [1, 1, 1]], ("13", "23", "3"), ("1", "2", "312")),
]

_REVERSE_4 = _b("4", [[0, 1, 1], [1, 0, 1], [1, 1, 0]], ("23", "31", "12"), ("23", "13", "12"))

_CASSAIGNE = [
    _b("1", [[1, 1, 0], [0, 0, 1], [0, 1, 0]], ("1", "13", "2"), ("12", "3", "2")),
    _b("2", [[0, 1, 0], [1, 0, 0], [0, 1, 1]], ("2", "13", "3"), ("2", "1", "23")),
]

_REGISTRY = {
    "Brun": AlgorithmDef("Brun", tuple(_BRUN), _classify_sorted, "Brun"),
    "Selmer": AlgorithmDef("Selmer", tuple(_SELMER), _classify_sorted, "Selmer"),
    "Poincare": AlgorithmDef("Poincare", tuple(_POINCARE), _classify_sorted, "Poincaré"),
    "FullySubtractive": AlgorithmDef(
        "FullySubtractive", tuple(_FULLY_SUBTRACTIVE), _classify_min, "Fully Subtractive"
    ),
    "ARP": AlgorithmDef("ARP", tuple(_AR + _POINCARE), _classify_arp, "Arnoux-Rauzy-Poincaré"),
    "Reverse": AlgorithmDef("Reverse", tuple(_AR + [_REVERSE_4]), _classify_reverse, "Reverse"),
    "Cassaigne": AlgorithmDef("Cassaigne", tuple(_CASSAIGNE), _classify_cassaigne, "Cassaigne"),
}

ALGORITHM_NAMES = tuple(_REGISTRY)

# lower-case lookup table, plus a few common spellings
_ALIASES = {n.lower(): n for n in _REGISTRY}
_ALIASES.update({"fully_subtractive": "FullySubtractive", "fully-subtractive": "FullySubtractive",
                 "fullysubtractive": "FullySubtractive", "arnoux-rauzy-poincare": "ARP"})


def algorithm(name):
    """Look up one of the seven algorithms by name (case insensitive)."""
    if isinstance(name, AlgorithmDef):
        return name
    key = _ALIASES.get(str(name).lower())
    if key is None:
        raise KeyError(
            "unknown algorithm %r; supported: %s" % (name, ", ".join(ALGORITHM_NAMES))
        )
    return _REGISTRY[key]


def all_algorithms():
    return [_REGISTRY[n] for n in ALGORITHM_NAMES]
