#!/usr/bin/env python3
"""The sl2 action: outer derivations of SHO(3|3) against the field theory.

h is diagonal in the xi-degree, e is the adjoint of an element that is
symplectic but outside the derived subalgebra, f is a table on low
principal degrees.  On the center the action is the standard
representation, and the embedding into the Z/2 field complex intertwines
it with the linear action on the even function pair.
"""

from fractions import Fraction

from polyvec import ExtElement, act_e, act_f, act_h, embed, ext_element, field_action
from polyvec.sl2 import equivariance_compare_theorem, sl2_relations_check
from polyvec.superpoly import SuperPoly

x = lambda i: SuperPoly.x(3, i)
xi = lambda i: SuperPoly.xi(3, i)

print("# actions on generators")
print("h(gen x1)          =", act_h(ext_element(x(1))))
print("h(gen xi1)         =", act_h(ext_element(xi(1))))
print("e(gen -x1)         =", act_e(ext_element(-x(1))))
print("f(gen xi1 xi2)     =", act_f(ext_element(xi(1) * xi(2))))
print("f(gen x1 xi2 xi3)  =", act_f(ext_element(x(1) * xi(2) * xi(3))))

print("\n# the standard representation on the center")
e1 = ExtElement(SuperPoly.zero(3), Fraction(1), Fraction(0))
e2 = ExtElement(SuperPoly.zero(3), Fraction(0), Fraction(1))
print("h e1 =", act_h(e1), "   h e2 =", act_h(e2))
print("e e2 =", act_e(e2), "   f e1 =", act_f(e1))

print("\n# operator relations and derivation properties")
print(sl2_relations_check(truncation=3, trials=15, seed=0).summary_text())

print("\n# the embedding into the field complex is equivariant")
v = ext_element(xi(1) * xi(2))
psi = embed(v)
print("embed(gen xi1 xi2): phi1 =", psi.phi1, ", phi2 =", psi.phi2)
print("field f moves phi1 to phi2:", field_action("f", psi).phi2)
print("matches embed(f . v)      :", embed(act_f(v)).phi2)
print()
print(equivariance_compare_theorem(truncation=3, trials=15, seed=0).summary_text())
