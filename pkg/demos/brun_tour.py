"""A short walk through the Brun algorithm.

Run with ``python3 demos/brun_tour.py``.  Prints the branch matrices, the
coding of (1, e, pi), the start of its S-adic word and a two-orbit Lyapunov
estimate, then writes ``brun_cylinders.svg`` to the current directory.
"""

import math

from mcf import algorithm
from mcf.dynamics import lyapunov_table
from mcf.emit import cylinder_scene, write_svg, write_table
from mcf.geometry import enumerate_cylinders
from mcf.symbolic import factor_complexity, s_adic_prefix, s_adic_word

brun = algorithm("Brun")
v = (1, math.e, math.pi)

print(brun)
for b in brun.branches[:2]:
    print(b.label, b.matrix, "sigma:", b.substitution)

# one step subtracts the middle entry from the largest
print("step of (0.2, 0.3, 0.5):", brun.step((0.2, 0.3, 0.5)))
print("first labels of (1, e, pi):", brun.coding(v, 8))
print("S-adic prefix:", s_adic_prefix(brun, v, 40))

w = s_adic_word(brun, v)[:10000]
print("factor complexity p(0..12):", factor_complexity(w, 12))

table = lyapunov_table(brun, 2, 10**5, seed=0)
print(write_table(table).decode())

cells = enumerate_cylinders(brun, 2)
print("%d non-empty 2-cylinders" % len(cells))
with open("brun_cylinders.svg", "wb") as f:
    f.write(write_svg(cylinder_scene(cells, labels=True)))
