"""
Local spectrum of a cone apex
=============================

Joining a new vertex to every vertex of a regular graph gives a cone. The
partition {apex}, {everything else} is equitable, so a 2x2 quotient already
knows everything the apex can see of the spectrum.
"""

import numpy as np

from quospec import local_spectrum, oracle_spectrum, quotient_matrix, vertex_partition
from quospec.families import cone, cone_closed_form, petersen

base = petersen()
g = cone(base)
apex = base.n

pi = vertex_partition(g, apex)
q = quotient_matrix(g, pi)
print("cells:", pi.sizes)
print(q.matrix)

# Two eigenvalues, with local multiplicities summing to one.
ls = local_spectrum(g, apex)
for tau, m in ls:
    print(f"  {tau: .6f}  m_apex = {m:.6f}")

# Roots of x^2 - kx - n and their weights, in closed form.
cf = cone_closed_form(base.n, 3)
print("closed form:", (round(cf.theta0, 6), round(cf.local0, 6)), (round(cf.theta1, 6), round(cf.local1, 6)))

# The full spectrum has more eigenvalues; the apex just cannot see them.
print("whole graph:", oracle_spectrum(g))
print("agree:", np.allclose(ls.multiplicities, [cf.local0, cf.local1]))
