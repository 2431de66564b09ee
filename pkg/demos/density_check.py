"""Compare an orbit histogram with the closed-form invariant density.

For Brun, Reverse and Cassaigne the visit frequencies of a long orbit on a
30 x 30 grid are correlated against the density at each cell barycenter.
Try a few seeds: single orbits of 10^6 steps can linger near the corners
where the density blows up, and the correlation moves with them.
"""

import numpy as np

from mcf.dynamics import cell_barycenter, density_value, invariant_measure_histogram

NDIVS = 30

for name in ("Brun", "Reverse", "Cassaigne"):
    for seed in (0, 1, 2):
        h = invariant_measure_histogram(name, 10**6, NDIVS, seed)
        cells = h.cells()
        freq = np.array([c[4] for c in cells]) / h.total
        dens = np.array([density_value(name, cell_barycenter(*c[:4], NDIVS)) for c in cells])
        r = np.corrcoef(freq, dens)[0, 1]
        print("%-9s seed %d  r = %.4f  restarts %d" % (name, seed, r, h.restarts))
