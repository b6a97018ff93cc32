"""
Crossed multiplicities of the subdivided K4
===========================================

Subdividing each edge of K4 gives a bipartite graph on 10 vertices. Hanging
the distance partition from a midpoint and from an original vertex gives two
quotients; each yields a whole table of crossed multiplicities.
"""

import numpy as np

from quospec import crossed_table
from quospec.families import hadamard_quotients, subdivided_complete

np.set_printoptions(precision=5, suppress=True)

g = subdivided_complete(4)

# Vertex 4 is the midpoint of edge {0, 1}: distance cells 1, 2, 4, 2, 1.
t1 = crossed_table(g, 4)
print("from a subdivision vertex, cells", t1.cell_sizes)
print(t1.table)
print("column sums", t1.column_sums)

# Vertex 0 is an original vertex: cells 1, 3, 3, 3, and eigenvalue 0 is invisible.
t2 = crossed_table(g, 0)
print("from a branch vertex, cells", t2.cell_sizes)
print(t2.table)

# The same in closed form, valid for the whole Hadamard family.
h = hadamard_quotients(1)
print("closed forms match:", np.allclose(t1.table, h.crossed1), np.allclose(t2.table, h.crossed2))

# Multiplicities: weight each local column by the size of its side.
for n in range(1, 6):
    h = hadamard_quotients(n)
    big, small = h.side_sizes
    m = big * h.crossed1[:, 0] + small * h.crossed2[:, 0]
    print(n, np.round(m, 9), "on", h.order, "vertices")
