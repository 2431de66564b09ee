"""Grow a stepped-plane patch with the dual substitutions.

Iterates E1* along the Cassaigne coding of (1, e, pi) and writes one SVG per
depth.  The Reverse algorithm is shown failing: its fourth branch has
determinant 2, so the composed dual map is not unimodular.
"""

import math

from mcf import UnimodularityError
from mcf.emit import patch_scene, write_svg
from mcf.geometry import e_one_star_iterate

v = (1, math.e, math.pi)

for n in (3, 6, 9):
    patch = e_one_star_iterate("Cassaigne", v, n)
    name = "cassaigne_patch_%d.svg" % n
    with open(name, "wb") as f:
        f.write(write_svg(patch_scene(patch)))
    print("depth %d: %d faces -> %s" % (n, len(patch), name))

try:
    e_one_star_iterate("Reverse", v, 2)
except UnimodularityError as e:
    print("Reverse:", e)
