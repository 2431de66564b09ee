"""CSV, JSON, aligned-text and SVG writers.

Every writer returns ``bytes`` and is deterministic.
"""

import csv
import io
import json
import math
import re
from dataclasses import dataclass, field

from .dynamics import QUANTITIES, ComparisonRow, LyapunovTable, Summary
from .geometry import cylinder_polygon, to_plane

_HEX = re.compile(r"^#[0-9a-fA-F]{6}$")

PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]
FACE_COLORS = {1: "#d62728", 2: "#2ca02c", 3: "#1f77b4"}


# --- CSV / JSON ----------------------------------------------------------

def _cell(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(header, rows):
    """Header line then one line per row, LF line endings."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for k, row in enumerate(rows):
        row = list(row)
        if len(row) != len(header):
            raise ValueError("row %d has %d fields, expected %d" % (k, len(row), len(header)))
        w.writerow([_cell(v) for v in row])
    return buf.getvalue().encode("utf-8")


def read_csv(data):
    rows = list(csv.reader(io.StringIO(data.decode("utf-8"))))
    return rows[0], rows[1:]


def _clean(obj):
    # JSON has no NaN; use null
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def write_json(obj):
    return (json.dumps(_clean(obj), indent=2, sort_keys=True, allow_nan=False) + "\n").encode()


def read_json(data):
    return json.loads(data.decode("utf-8"))


# --- Lyapunov tables -----------------------------------------------------

def _fmt(v):
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "nan"
    return "%.5g" % v


def _with_std(s):
    return "%s (%s)" % (_fmt(s.mean), _fmt(s.std))


def _summary_from(d):
    return Summary(**{k: (float("nan") if v is None else v) for k, v in d.items()})


def table_to_dict(table):
    if isinstance(table, LyapunovTable):
        return {"kind": "lyapunov", **table.to_dict()}
    return {
        "kind": "comparison",
        "rows": [{"algo": r.algo, "table": r.table.to_dict() if r.table else None,
                  "error": r.error} for r in table],
    }


def table_from_dict(d):
    def tab(t):
        t = dict(t)
        t.pop("kind", None)
        for q in QUANTITIES:
            t[q] = _summary_from(t[q])
        return LyapunovTable(**t)

    if d["kind"] == "lyapunov":
        return tab(d)
    return [ComparisonRow(r["algo"], tab(r["table"]) if r["table"] else None, r["error"])
            for r in d["rows"]]


def _align(rows):
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(wd) for cell, wd in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def write_table(table, format="text"):
    """A ``LyapunovTable`` or a comparison (list of rows) as JSON or aligned text."""
    if format == "json":
        return write_json(table_to_dict(table))
    if format != "text":
        raise ValueError("unknown table format %r" % format)
    if isinstance(table, LyapunovTable):
        rows = [["%d successful orbits" % table.n_success, "min", "mean", "max", "std"]]
        for name, q in (("theta1", table.theta1), ("theta2", table.theta2),
                        ("1-theta2/theta1", table.ratio)):
            rows.append([name, _fmt(q.min), _fmt(q.mean), _fmt(q.max), _fmt(q.std)])
        return _align(rows).encode()
    rows = [["Algorithm", "#Orbits", "theta1 (std)", "theta2 (std)", "1-theta2/theta1 (std)"]]
    for r in table:
        if r.table is None:
            rows.append([r.algo, "0", "error: %s" % r.error, "", ""])
        else:
            t = r.table
            rows.append([r.algo, str(t.n_success), _with_std(t.theta1), _with_std(t.theta2),
                         _with_std(t.ratio)])
    return _align(rows).encode()


# --- SVG -----------------------------------------------------------------

@dataclass
class Polygon:
    points: list
    fill: str = "#cccccc"
    stroke: str = "#000000"


@dataclass
class Point:
    x: float
    y: float
    fill: str = "#000000"
    r: float = 1.0


@dataclass
class Text:
    x: float
    y: float
    text: str
    fill: str = "#000000"


@dataclass
class Scene:
    """Elements with coordinates in the unit square, ``y`` pointing up."""

    width: int = 400
    height: int = 400
    elements: list = field(default_factory=list)

    def validate(self):
        for e in self.elements:
            coords = e.points if isinstance(e, Polygon) else [(e.x, e.y)]
            for c in coords:
                if not all(math.isfinite(v) for v in c):
                    raise ValueError("non-finite coordinate in %r" % (e,))
            colors = [e.fill] + ([e.stroke] if isinstance(e, Polygon) else [])
            for col in colors:
                if not _HEX.match(col):
                    raise ValueError("invalid color %r" % col)


def _xy(scene, p):
    return "%.3f,%.3f" % (p[0] * scene.width, (1 - p[1]) * scene.height)


def write_svg(scene):
    scene.validate()
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%d" height="%d" '
           'viewBox="0 0 %d %d">' % (scene.width, scene.height, scene.width, scene.height)]
    for e in scene.elements:
        if isinstance(e, Polygon):
            out.append('<polygon points="%s" fill="%s" stroke="%s" stroke-width="0.5"/>'
                       % (" ".join(_xy(scene, p) for p in e.points), e.fill, e.stroke))
        elif isinstance(e, Point):
            x, y = _xy(scene, (e.x, e.y)).split(",")
            out.append('<circle cx="%s" cy="%s" r="%.3f" fill="%s"/>' % (x, y, e.r, e.fill))
        else:
            x, y = _xy(scene, (e.x, e.y)).split(",")
            txt = e.text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            out.append('<text x="%s" y="%s" font-size="10" fill="%s">%s</text>'
                       % (x, y, e.fill, txt))
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def _fit(point_lists, margin=0.05):
    # affine map of plane coordinates into the unit square, aspect preserved
    xs = [p[0] for pts in point_lists for p in pts]
    ys = [p[1] for pts in point_lists for p in pts]
    if not xs:
        return lambda p: p
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0) or 1.0
    scale = (1 - 2 * margin) / span
    return lambda p: (margin + (p[0] - x0) * scale, margin + (p[1] - y0) * scale)


SIMPLEX = [to_plane(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]


def cylinder_scene(cells, labels=False):
    """One polygon per cylinder, colored by its last letter."""
    polys = [cylinder_polygon(c) for c in cells]
    f = _fit(polys + [SIMPLEX])
    letters = sorted({c.word[-1] for c in cells})
    color = {a: PALETTE[k % len(PALETTE)] for k, a in enumerate(letters)}
    sc = Scene()
    for c, poly in zip(cells, polys):
        sc.elements.append(Polygon([f(p) for p in poly], color[c.word[-1]]))
    if labels:
        for c, poly in zip(cells, polys):
            cx = sum(p[0] for p in poly) / len(poly)
            cy = sum(p[1] for p in poly) / len(poly)
            sc.elements.append(Text(*f((cx, cy)), "".join(c.word)))
    return sc


def patch_scene(patch):
    """Faces as rhombi seen along (1, 1, 1)."""
    faces = sorted(patch)
    polys = [[to_plane(c) for c in face.corners()] for face in faces]
    f = _fit(polys)
    sc = Scene()
    for face, poly in zip(faces, polys):
        sc.elements.append(Polygon([f(p) for p in poly], FACE_COLORS[face.type]))
    return sc


def _gray(t):
    v = int(round(255 * (1 - t)))
    return "#%02x%02x%02x" % (v, v, v)


def histogram_scene(hist):
    """Cells shaded by visit count (linear gray scale)."""
    n = hist.ndivs
    cells = hist.cells()
    top = max((c[4] for c in cells), default=0) or 1
    f = _fit([SIMPLEX])
    sc = Scene()
    for i, j, k, up, count in cells:
        if up:
            corners = [(i + 1, j, k), (i, j + 1, k), (i, j, k + 1)]
        else:
            corners = [(i, j + 1, k + 1), (i + 1, j, k + 1), (i + 1, j + 1, k)]
        poly = [f(to_plane([a / n for a in c])) for c in corners]
        sc.elements.append(Polygon(poly, _gray(count / top), _gray(count / top)))
    return sc


def points_scene(series):
    """Point clouds, one color per series; each series is a list of plane points."""
    f = _fit(list(series) + [SIMPLEX])
    sc = Scene()
    sc.elements.append(Polygon([f(p) for p in SIMPLEX], "#ffffff"))
    for k, pts in enumerate(series):
        col = PALETTE[k % len(PALETTE)]
        sc.elements.extend(Point(*f(p), col, 0.8) for p in pts)
    return sc


__all__ = ["Polygon", "Point", "Text", "Scene", "cylinder_scene",
           "histogram_scene", "patch_scene", "points_scene", "read_csv", "read_json",
           "table_from_dict", "table_to_dict", "write_csv", "write_json", "write_svg",
           "write_table"]
