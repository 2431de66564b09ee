"""Lyapunov exponents of all seven algorithms side by side.

The default is a quick desk run (4 orbits of 10^6 steps).  Pass ``--full``
for 10 orbits of 10^7 steps, which takes a few minutes on one core.
"""

import sys

from mcf import ALGORITHM_NAMES
from mcf.dynamics import lyapunov_comparison
from mcf.emit import write_table

orbits, iterations = (10, 10**7) if "--full" in sys.argv else (4, 10**6)
rows = lyapunov_comparison(ALGORITHM_NAMES, orbits, iterations, seed=0)
print(write_table(rows).decode(), end="")
# Poincare and Fully Subtractive have theta1 close to 0, so their ratio is meaningless
