"""Cylinders of the algorithms and dual substitution patches.

A cylinder is the cone of vectors whose coding starts with a given word.  It
is computed exactly: cell inequalities of each step are pulled back through
the product of the preceding matrices, and the extreme rays of the resulting
3-dimensional cone are found by intersecting pairs of facets.

Patches are finite sets of unit faces ``(x, i*)`` of the integer lattice, the
face ``i*`` at ``x`` being the unit square at ``x`` orthogonal to ``e_i``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import NamedTuple

from .algorithms import PERMUTATIONS, algorithm, project
from .errors import UnimodularityError
from .words import Substitution, parikh

# orthonormal basis of the plane x1 + x2 + x3 = 0, used for every 2-d picture
BASIS = (
    (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0),
    (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6)),
)

_E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _unit(i, sign=1):
    return tuple(sign if k == i else 0 for k in range(3))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def primitive(v):
    """Scale a rational vector to the primitive integer vector with the same direction."""
    v = [Fraction(c) for c in v]
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in v), 1)
    ints = [int(c * den) for c in v]
    g = reduce(math.gcd, (abs(c) for c in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(c // g for c in ints)


def _positivity():
    return [_E[0], _E[1], _E[2]]


def cell_halfspaces(algo, label):
    """Rows ``h`` such that the closed cell of ``label`` is ``{x : <h, x> >= 0}``.

    Positivity rows ``e1, e2, e3`` are always included.
    """
    algo = algorithm(algo)
    label = str(label)
    algo.branch(label)
    rows = _positivity()
    name = algo.name
    if name == "Cassaigne":
        rows.append((1, 0, -1) if label == "1" else (-1, 0, 1))
    elif name == "FullySubtractive":
        i = int(label) - 1
        rows += [_sub(_E[j], _E[i]) for j in range(3) if j != i]
    elif label in PERMUTATIONS:
        a, b, c = (int(ch) - 1 for ch in label)
        rows += [_sub(_E[b], _E[a]), _sub(_E[c], _E[b])]
        if name == "ARP":
            # not dominated by the largest coordinate
            rows.append(_sub(_sub(_E[a], _E[c]), _unit(b, -1)))
    elif label in ("1", "2", "3"):
        i = int(label) - 1
        j, k = [a for a in range(3) if a != i]
        rows.append(_sub(_sub(_E[i], _E[j]), _E[k]))
    elif label == "4":
        for i in range(3):
            j, k = [a for a in range(3) if a != i]
            rows.append(_sub(_add(_E[j], _E[k]), _E[i]))
    return [primitive(r) for r in rows]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )


def _row_times(h, m):
    return tuple(sum(h[k] * m[k][j] for k in range(3)) for j in range(3))


_IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class ConeCell:
    algo: str
    word: tuple
    halfspaces: tuple
    rays: tuple
    product_matrix: tuple

    def simplex_vertices(self):
        """Extreme rays normalized to the simplex (exact)."""
        return [project(r) for r in self.rays]

    def barycenter(self):
        verts = self.simplex_vertices()
        return tuple(sum(v[i] for v in verts) / len(verts) for i in range(3))

    def area_fraction(self):
        """Area of ``cell ∩ simplex`` as an exact fraction of the simplex area."""
        pts = _ccw([v[:2] for v in self.simplex_vertices()])
        twice = sum(
            pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1]
            for i in range(len(pts))
        )
        # the simplex projects to the triangle (1,0),(0,1),(0,0) of area 1/2
        return abs(Fraction(twice))


def _ccw(pts):
    cx = sum(float(p[0]) for p in pts) / len(pts)
    cy = sum(float(p[1]) for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx))


def extreme_rays(halfspaces):
    """Primitive integer extreme rays of the pointed cone ``{x : <h, x> >= 0}``."""
    rows = [h for h in halfspaces if any(h)]
    rays = set()
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            d = _cross(rows[a], rows[b])
            if not any(d):
                continue
            for cand in (d, tuple(-c for c in d)):
                if all(_dot(h, cand) >= 0 for h in rows):
                    rays.add(primitive(cand))
    return sorted(rays)


def _is_full_dimensional(halfspaces, rays):
    if len(rays) < 3:
        return False
    # sum of rays normalized to the simplex is interior iff the cone is solid
    b = [sum(Fraction(r[i], sum(r)) for r in rays) for i in range(3)]
    return all(_dot(h, b) > 0 for h in halfspaces if any(h))


def _dedupe(rows):
    seen = []
    for r in rows:
        if r not in seen:
            seen.append(r)
    return seen


def _extend(algo, state, label):
    rows, prod, prod_inv = state
    new = [primitive(_row_times(h, prod_inv)) for h in cell_halfspaces(algo, label)]
    br = algo.branch(label)
    return (
        _dedupe(rows + new),
        _matmul(prod, br.matrix),
        _matmul(br.inverse, prod_inv),
    )


def _make_cell(algo, word, state):
    rows, prod, _ = state
    rays = extreme_rays(rows)
    if not _is_full_dimensional(rows, rays):
        return None
    return ConeCell(algo.name, tuple(word), tuple(rows), tuple(rays), prod)


def cylinder(algo, word):
    """The cone of vectors whose coding starts with ``word``, or ``None`` if it
    has empty interior."""
    algo = algorithm(algo)
    word = [str(w) for w in word]
    if not word:
        raise ValueError("cylinder word must be nonempty")
    state = (_positivity(), _IDENTITY, _IDENTITY)
    for label in word:
        state = _extend(algo, state, label)
    return _make_cell(algo, word, state)


def enumerate_cylinders(algo, n):
    """All nonempty cylinders of length ``n`` in lexicographic word order."""
    algo = algorithm(algo)
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def rec(word, state):
        for label in algo.labels:
            st = _extend(algo, state, label)
            cell = _make_cell(algo, word + [label], st)
            if cell is None:
                continue
            if len(word) + 1 == n:
                out.append(cell)
            else:
                rec(word + [label], st)

    rec([], (_positivity(), _IDENTITY, _IDENTITY))
    return out


def to_plane(x):
    """Coordinates of a vector in the fixed basis of ``x1 + x2 + x3 = 0``."""
    return (
        sum(BASIS[0][i] * float(x[i]) for i in range(3)),
        sum(BASIS[1][i] * float(x[i]) for i in range(3)),
    )


def cylinder_polygon(cell):
    """Counterclockwise 2-d polygon of ``cell ∩ simplex`` in the plane basis."""
    pts = {to_plane(v) for v in cell.simplex_vertices()}
    if len(pts) < 3:
        raise ValueError("degenerate polygon for cylinder %s" % (cell.word,))
    return _ccw(list(pts))


# --- E1* ---------------------------------------------------------------------

class Face(NamedTuple):
    position: tuple
    type: int

    def corners(self):
        """The four corners of the unit square, in cyclic order."""
        i = self.type - 1
        j, k = [a for a in range(3) if a != i]
        x = self.position
        return [x, _add(x, _E[j]), _add(_add(x, _E[j]), _E[k]), _add(x, _E[k])]


UNIT_CUBE = frozenset(Face((0, 0, 0), i) for i in (1, 2, 3))


def _check_unimodular(sub):
    if not sub.is_unimodular():
        raise UnimodularityError(sub)


def e_one_star_images(sub, patch):
    """All faces produced by ``E1*(sub)`` on ``patch``, with multiplicity.

    ``E1*(s)(x, i*)`` is the union over letters ``j`` and factorizations
    ``s(j) = p i q`` of the faces ``(M^-1 (x + parikh(q)), j*)``, where ``M`` is
    the incidence matrix of ``s``.
    """
    _check_unimodular(sub)
    from .algorithms import inverse3

    m = tuple(tuple(int(a) for a in r) for r in sub.incidence().tolist())
    inv = tuple(tuple(int(a) for a in r) for r in inverse3(m))
    # (letter i, shift of x, new face type) for each occurrence
    table = {1: [], 2: [], 3: []}
    for j, img in enumerate(sub.images, start=1):
        for pos, letter in enumerate(img):
            table[int(letter)].append((parikh(img[pos + 1:]), j))
    out = []
    for face in patch:
        for suffix, j in table[face.type]:
            y = _add(face.position, suffix)
            out.append(Face(tuple(_dot(r, y) for r in inv), j))
    return out


def e_one_star(sub, patch):
    """Apply the dual map ``E1*(sub)`` to a patch; the result is a frozenset."""
    return frozenset(e_one_star_images(sub, patch))


def composed_dual(algo, labels):
    """``sigma*_{ln} o ... o sigma*_{l1}`` for labels ``l1 ... ln``."""
    algo = algorithm(algo)
    duals = algo.dual_substitutions()
    out = Substitution.identity()
    for label in labels:
        out = duals[label].compose(out)
    return out


def e_one_star_iterate(algo, v, n, seed=UNIT_CUBE):
    """``E1*(s*_{i1}) ... E1*(s*_{in})`` applied to ``seed``, where ``i1 ... in``
    is the coding of ``v``.

    Raises ``UnimodularityError`` naming the composed dual substitution when
    its incidence determinant is not +-1.
    """
    algo = algorithm(algo)
    labels = algo.coding(tuple(v), n)
    det = 1
    for label in labels:
        det *= algo.branch(label).det
    if abs(det) != 1:
        raise UnimodularityError(composed_dual(algo, labels))
    duals = algo.dual_substitutions()
    patch = frozenset(seed)
    for label in reversed(labels):
        patch = e_one_star(duals[label], patch)
    return patch
