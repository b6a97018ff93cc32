"""
Spectra of walk-regular graphs from one vertex
==============================================

When every vertex sees the same number of closed walks of each length, the
local spectra all coincide and the ordinary multiplicity of an eigenvalue is
n times its local multiplicity at any single vertex.
"""

from quospec import is_walk_regular, oracle_spectrum, walk_regular_multiplicities, walk_counts
from quospec.families import complete_bipartite, cycle, hypercube, path, petersen

for name, g in [("C6", cycle(6)), ("K33", complete_bipartite(3, 3)), ("Q3", hypercube(3)), ("Petersen", petersen())]:
    s = walk_regular_multiplicities(g, 0)
    print(f"{name:9s} {s}  oracle agrees: {s.multiplicities == oracle_spectrum(g).multiplicities}")

# A path is not walk-regular: its ends see fewer closed 2-walks.
p = path(4)
print("P4 closed 2-walks:", walk_counts(p, 2).diagonal(), is_walk_regular(p))
