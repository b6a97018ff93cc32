"""
Whole spectrum without diagonalising A
======================================

Summing local multiplicities over all vertices gives ordinary
multiplicities. Vertices with the same quotient share one small eigenproblem,
so a graph with few vertex classes needs only a handful of tiny matrices.
"""

from quospec import oracle_spectrum, reconstruct_spectrum
from quospec.families import cone, cycle, subdivided_complete, wheel
from quospec.localspec import local_spectra

for name, g in [("subdivided K5", subdivided_complete(5)), ("wheel W6", wheel(6)), ("cone over C7", cone(cycle(7)))]:
    classes = {s.quotient.key() for s in local_spectra(g)}
    s = reconstruct_spectrum(g)
    print(f"{name}: {g.n} vertices, {len(classes)} distinct quotient(s)")
    print("  from quotients:", s)
    print("  direct       :", oracle_spectrum(g))
