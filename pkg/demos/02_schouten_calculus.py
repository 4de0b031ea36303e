#!/usr/bin/env python3
"""Divergence operator and Schouten bracket on polynomial polyvector fields.

The divergence is the odd Laplacian Delta = sum_i d/dx_i d/dxi_i; the
Schouten bracket measures its failure to be a derivation of the product.
Contraction with the volume element transports Delta to the de Rham
differential up to a per-degree sign, which is pinned in conventions.py.
"""

from polyvec import (
    conventions,
    divergence,
    divergence_via_transport,
    schouten,
    vee_omega,
)
from polyvec.superpoly import SuperPoly, random_poly

d = 3
x1, x2 = SuperPoly.x(d, 1), SuperPoly.x(d, 2)
xi1, xi2, xi3 = (SuperPoly.xi(d, i) for i in (1, 2, 3))

print("# the odd Laplacian lowers xi-degree and squares to zero")
mu = x1 * x1 * xi1 * xi2
print("Delta(x1^2 xi1 xi2)   =", divergence(mu))
print("Delta^2 (...)         =", divergence(divergence(mu)))

print("\n# Schouten brackets")
print("[xi1, x1]             =", schouten(xi1, x1))
print("[xi1 xi2, x1 x2]      =", schouten(xi1 * xi2, x1 * x2))

print("\n# shifted Jacobi, on a seeded triple")
a = random_poly(d, 3, xi_degree_filter=2, seed=1)
b = random_poly(d, 3, xi_degree_filter=1, seed=2)
c = random_poly(d, 3, xi_degree_filter=1, seed=3)
sign = -1 if ((a.xi_degree() - 1) * (b.xi_degree() - 1)) % 2 else 1
lhs = schouten(a, schouten(b, c))
rhs = schouten(schouten(a, b), c) + schouten(b, schouten(a, c)).scale(sign)
print("defect =", lhs - rhs)

print("\n# transport through the volume element")
print("xi1 xi2 xi3 against Omega:", vee_omega(xi1 * xi2 * xi3))
for j in (1, 2, 3):
    mu = random_poly(d, 3, xi_degree_filter=j, seed=10 + j)
    match = divergence_via_transport(mu) == divergence(mu).scale(conventions.transport_sign(j))
    print(f"de Rham transport on degree {j}: sign {conventions.transport_sign(j):+d}, matches: {match}")
