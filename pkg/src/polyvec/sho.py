"""Vector fields on C^{d|d}, Hamiltonian generators, and SHO(d|d).

A function f on C^{d|d} generates the odd-Hamiltonian vector field

    Ham(f) = sum_i df/dx_i d/dxi_i + (-1)^{|f|} df/dxi_i d/dx_i

(left derivatives).  The super-divergence of Ham(f) is a fixed multiple
of the divergence of f, so divergence-free generators give exactly the
super-divergence-free symplectic fields: the SHO' filtration.  SHO(d|d)
is cut out by dropping the constants (the center) and the top monomial
xi_1...xi_d.

ExtElement realizes, for d = 3, the odd two-dimensional central
extension of SHO(3|3): Hamiltonian generators with the Schouten bracket
plus two central coordinates fed by the constant-term channel (c2) and
the top-constant pairing channel (c1).  Sign pinnings live in
conventions.py; with them the extension satisfies

    [d/dx_i, xi_k d/dx_j - xi_j d/dx_k] = eps_{ijk} e1
    [d/dxi_i, d/dx_j] = delta_ij e2

verbatim, with vector fields named through X = -Ham(f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import conventions, pvcalc
from ._linalg import independent_indices, solve_combination
from .reporting import Report
from .superpoly import SuperPoly, monomial_basis, random_poly


@dataclass
class SuperVectorField:
    """sum mu_x[i] d/dx_{i+1} + sum mu_xi[i] d/dxi_{i+1} with SuperPoly coefficients."""

    d: int
    mu_x: tuple[SuperPoly, ...]
    mu_xi: tuple[SuperPoly, ...]

    @classmethod
    def zero(cls, d: int) -> "SuperVectorField":
        z = SuperPoly.zero(d)
        return cls(d, (z,) * d, (z,) * d)

    def apply(self, g: SuperPoly) -> SuperPoly:
        out = SuperPoly.zero(self.d)
        for i in range(self.d):
            out = out + self.mu_x[i] * g.d_even(i + 1)
            out = out + self.mu_xi[i] * g.d_odd(i + 1)
        return out

    def __add__(self, other: "SuperVectorField") -> "SuperVectorField":
        return SuperVectorField(
            self.d,
            tuple(a + b for a, b in zip(self.mu_x, other.mu_x)),
            tuple(a + b for a, b in zip(self.mu_xi, other.mu_xi)),
        )

    def __neg__(self) -> "SuperVectorField":
        return SuperVectorField(self.d, tuple(-a for a in self.mu_x), tuple(-a for a in self.mu_xi))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SuperVectorField":
        return SuperVectorField(self.d, tuple(a.scale(c) for a in self.mu_x),
                                tuple(a.scale(c) for a in self.mu_xi))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperVectorField)
            and self.d == other.d
            and self.mu_x == other.mu_x
            and self.mu_xi == other.mu_xi
        )

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.mu_x) and all(a.is_zero() for a in self.mu_xi)

    def parity_components(self) -> dict[int, "SuperVectorField"]:
        """Split into parity-homogeneous vector fields.

        A coefficient on d/dx_i contributes its own parity; a coefficient
        on d/dxi_i contributes the opposite one.
        """
        z = SuperPoly.zero(self.d)
        comps = {0: [list([z] * self.d), list([z] * self.d)],
                 1: [list([z] * self.d), list([z] * self.d)]}
        for i in range(self.d):
            for p in (0, 1):
                comps[p][0][i] = comps[p][0][i] + self.mu_x[i].parity_component(p)
                comps[p ^ 1][1][i] = comps[p ^ 1][1][i] + self.mu_xi[i].parity_component(p)
        out = {}
        for p, (mx, mxi) in comps.items():
            vf = SuperVectorField(self.d, tuple(mx), tuple(mxi))
            if not vf.is_zero():
                out[p] = vf
        return out

    def __str__(self) -> str:
        pieces = []
        for i, c in enumerate(self.mu_x):
            if not c.is_zero():
                pieces.append(f"({c})*d/dx{i + 1}")
        for i, c in enumerate(self.mu_xi):
            if not c.is_zero():
                pieces.append(f"({c})*d/dxi{i + 1}")
        return " + ".join(pieces) if pieces else "0"


def hamiltonian_vf(f: SuperPoly) -> SuperVectorField:
    """The odd-Hamiltonian field of a generator; mixed parities decompose."""
    d = f.d
    out = SuperVectorField.zero(d)
    for p in (0, 1):
        comp = f.parity_component(p)
        if comp.is_zero():
            continue
        sign = -1 if p else 1
        mu_x = tuple(comp.d_odd(i + 1).scale(sign) for i in range(d))
        mu_xi = tuple(comp.d_even(i + 1) for i in range(d))
        out = out + SuperVectorField(d, mu_x, mu_xi)
    return out


def super_divergence(mu: SuperVectorField) -> SuperPoly:
    """D(mu) = sum dmu_x_i/dx_i + sum (-1)^{|mu_xi_i|} dmu_xi_i/dxi_i."""
    out = SuperPoly.zero(mu.d)
    for i in range(mu.d):
        out = out + mu.mu_x[i].d_even(i + 1)
        for p in (0, 1):
            comp = mu.mu_xi[i].parity_component(p)
            if not comp.is_zero():
                out = out + comp.d_odd(i + 1).scale(-1 if p else 1)
    return out


def vf_bracket(a: SuperVectorField, b: SuperVectorField) -> SuperVectorField:
    """Super-commutator [a, b] = a b - (-1)^{|a||b|} b a, read off coordinates."""
    d = a.d
    out = SuperVectorField.zero(d)
    for pa, A in a.parity_components().items():
        for pb, B in b.parity_components().items():
            sign = -1 if pa & pb else 1

            def comm(g: SuperPoly) -> SuperPoly:
                first = A.apply(B.apply(g))
                second = B.apply(A.apply(g))
                return first - second.scale(sign)

            mu_x = tuple(comm(SuperPoly.x(d, i + 1)) for i in range(d))
            mu_xi = tuple(comm(SuperPoly.xi(d, i + 1)) for i in range(d))
            out = out + SuperVectorField(d, mu_x, mu_xi)
    return out


def ham_generator(x: SuperVectorField, max_degree: int = 6) -> SuperPoly | None:
    """Solve Ham(f) = x for f over the monomial basis up to max_degree."""
    d = x.d
    basis = [m for m in monomial_basis(d, max_degree)]

    def vf_coords(vf: SuperVectorField) -> dict:
        out = {}
        for i in range(d):
            for mono, c in vf.mu_x[i]._terms.items():
                out[("x", i, mono)] = c
            for mono, c in vf.mu_xi[i]._terms.items():
                out[("xi", i, mono)] = c
        return out

    columns = [vf_coords(hamiltonian_vf(SuperPoly(d, {m: Fraction(1)}))) for m in basis]
    coeffs = solve_combination(columns, vf_coords(x))
    if coeffs is None:
        return None
    return SuperPoly(d, {m: c for m, c in zip(basis, coeffs) if c})


def generator_of_field(x: SuperVectorField, max_degree: int = 6) -> SuperPoly | None:
    """The generator f with x = -Ham(f); the Lie-map naming convention."""
    f = ham_generator(x, max_degree)
    return None if f is None else -f


def membership(f: SuperPoly) -> str:
    """Classify the Hamiltonian field of a generator.

    Returns one of "not-HO-generator" (constants: the field vanishes),
    "HO" (symplectic only), "SHO-prime" (super-divergence-free, contains
    the top monomial), "SHO".  Constant parts are disregarded, matching
    the carving of the center.
    """
    core = f - SuperPoly.const(f.d, f.constant_term())
    if core.is_zero():
        return "not-HO-generator"
    if not pvcalc.divergence(core).is_zero():
        return "HO"
    if core.top_constant() != 0:
        return "SHO-prime"
    return "SHO"


def principal_degrees(f: SuperPoly) -> set[int]:
    return set(f.homogeneous_components("principal"))


# -- the d = 3 central extension ---------------------------------------


@dataclass
class ExtElement:
    """Element of the odd two-dimensional central extension of SHO(3|3).

    gen is a divergence-free generator with no constant term and no top
    monomial; c1, c2 are the central coordinates along e1 (top-pairing
    channel) and e2 (constant-term channel).
    """

    gen: SuperPoly
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    def __post_init__(self):
        self.c1 = Fraction(self.c1)
        self.c2 = Fraction(self.c2)

    @property
    def d(self) -> int:
        return self.gen.d

    def __add__(self, other: "ExtElement") -> "ExtElement":
        return ExtElement(self.gen + other.gen, self.c1 + other.c1, self.c2 + other.c2)

    def __neg__(self) -> "ExtElement":
        return ExtElement(-self.gen, -self.c1, -self.c2)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExtElement":
        return ExtElement(self.gen.scale(c), self.c1 * Fraction(c), self.c2 * Fraction(c))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtElement)
            and self.gen == other.gen
            and self.c1 == other.c1
            and self.c2 == other.c2
        )

    def is_zero(self) -> bool:
        return self.gen.is_zero() and self.c1 == 0 and self.c2 == 0

    def __str__(self) -> str:
        return f"({self.gen}) + ({self.c1})e1 + ({self.c2})e2"


def ext_element(f: SuperPoly, c1=0, c2=0) -> ExtElement:
    """Build an extension element, carving constants and the top monomial
    out of the generator into the central slots."""
    if f.d != 3:
        raise ValueError("the extension is implemented for d = 3")
    if not pvcalc.divergence(f).is_zero():
        raise ValueError("generator must be divergence free")
    const = f.constant_term()
    top = f.top_constant()
    gen = f
    if const:
        gen = gen - SuperPoly.const(3, const)
    if top:
        gen = gen - SuperPoly.monomial(3, (0, 0, 0), (1, 2, 3), top)
    return ExtElement(gen, Fraction(c1) + top, Fraction(c2) + const)


def ext_from_field(x: SuperVectorField) -> ExtElement:
    """Extension element named by a vector field through x = -Ham(f)."""
    f = generator_of_field(x)
    if f is None:
        raise ValueError("field is not Hamiltonian")
    return ext_element(f)


def ext_bracket_d3(a: ExtElement, b: ExtElement) -> ExtElement:
    """Bracket of the extension: Schouten on generators plus the two
    central channels.

    The constant term of the Schouten bracket feeds c2; the top-pairing
    cocycle feeds c1 with the decalage sign per xi-degree and the pinned
    global sign (conventions.EXT_C1_SIGN).  Central coordinates of the
    inputs are inert.
    """
    if a.d != 3 or b.d != 3:
        raise ValueError("d = 3 only")
    raw = pvcalc.schouten(a.gen, b.gen)
    c1 = Fraction(0)
    for k, comp in a.gen.xi_components().items():
        decalage = -1 if (k - 1) & 1 else 1
        c1 += conventions.EXT_C1_SIGN * decalage * pvcalc.top_constant_pairing(comp, b.gen)
    c2 = (conventions.EXT_C2_SIGN - 1) * raw.constant_term()  # carving supplies the +1 part
    return ext_element(raw, c1=c1, c2=c2)


def ext_parity(v: ExtElement) -> int:
    """Lie-algebra parity: a generator of xi-degree k has parity k + 1;
    both central lines are odd."""
    pars = {(k + 1) & 1 for k in v.gen.xi_degrees()}
    if v.c1 != 0:
        pars.add((v.d - 1 + 1) & 1)
    if v.c2 != 0:
        pars.add(1)
    if len(pars) > 1:
        raise ValueError("element is not parity-homogeneous")
    return pars.pop() if pars else 0


def lie_jacobi_defect(a: ExtElement, b: ExtElement, c: ExtElement) -> ExtElement:
    """[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]] for the extension."""
    pa, pb = ext_parity(a), ext_parity(b)
    sign = -1 if pa & pb else 1
    first = ext_bracket_d3(a, ext_bracket_d3(b, c))
    second = ext_bracket_d3(ext_bracket_d3(a, b), c)
    third = ext_bracket_d3(b, ext_bracket_d3(a, c)).scale(sign)
    return first - second - third


def random_sho_generator(max_degree: int, seed: int, d: int = 3,
                         xi_degree: int | None = None) -> SuperPoly:
    """Seeded divergence-free generator with constants and top carved off.

    The output is xi-homogeneous (the divergence-free projection
    preserves xi-degree), hence parity-homogeneous.
    """
    from .contraction import contraction_K

    import random as _random

    if xi_degree is None:
        xi_degree = _random.Random(seed ^ 0x5EED).randrange(0, d + 1)
    raw = random_poly(d, max_degree, xi_degree_filter=xi_degree, seed=seed, n_terms=5)
    ker = raw - contraction_K(pvcalc.divergence(raw))
    ker = ker - SuperPoly.const(d, ker.constant_term())
    top = ker.top_constant()
    if top:
        ker = ker - SuperPoly.monomial(d, (0,) * d, tuple(range(1, d + 1)), top)
    return ker


def cocycle_check(pairing, trials: int = 50, seed: int = 0, max_degree: int = 4,
                  label: str = "cocycle") -> Report:
    """Verify the super 2-cocycle identity of a central pairing over the
    Schouten algebra of divergence-free generators (d = 3).

    The identity is the central component of the extension Jacobi:
    c(a,[b,x]) - c([a,b],x) - (-1)^{|a||b|} c(b,[a,x]) = 0 with
    Lie parities |f| + 1.
    """
    report = Report()
    bad = None
    for t in range(trials):
        a, b, x = [random_sho_generator(max_degree, seed=hash((seed, t, i)) % (2**32))
                   for i in range(3)]
        if a.is_zero() or b.is_zero():
            continue
        pa = (a.parity() + 1) & 1
        pb = (b.parity() + 1) & 1
        sign = -1 if pa & pb else 1
        defect = (
            pairing(a, pvcalc.schouten(b, x))
            - pairing(pvcalc.schouten(a, b), x)
            - sign * pairing(b, pvcalc.schouten(a, x))
        )
        if defect != 0:
            bad = {"a": str(a), "b": str(b), "x": str(x), "defect": str(defect)}
            break
    report.add(f"{label}.identity", bad is None, **({"witness": bad} if bad else {}))
    return report


# -- structure constants ------------------------------------------------


def sho_basis(d: int, max_principal_degree: int):
    """A basis of SHO(d|d) generators through a principal-degree cap."""
    from .contraction import contraction_K

    cap = max_principal_degree + 2
    projected = []
    for m in monomial_basis(d, cap):
        poly = SuperPoly(d, {m: Fraction(1)})
        ker = poly - contraction_K(pvcalc.divergence(poly))
        ker = ker - SuperPoly.const(d, ker.constant_term())
        top = ker.top_constant()
        if top:
            ker = ker - SuperPoly.monomial(d, (0,) * d, tuple(range(1, d + 1)), top)
        if not ker.is_zero() and ker.total_degree() <= cap:
            projected.append(ker)
    vectors = [p._terms for p in projected]
    return [projected[i] for i in independent_indices(vectors)]


def structure_constants(d: int, max_principal_degree: int) -> list[dict]:
    """Brackets of all basis-generator pairs, with central channels at d=3."""
    basis = sho_basis(d, max_principal_degree)
    rows = []
    for i, f in enumerate(basis):
        for j, g in enumerate(basis):
            if j < i:
                continue
            if d == 3:
                out = ext_bracket_d3(ext_element(f), ext_element(g))
                rows.append({
                    "left": str(f), "right": str(g),
                    "bracket": str(out.gen), "e1": str(out.c1), "e2": str(out.c2),
                })
            else:
                rows.append({"left": str(f), "right": str(g),
                             "bracket": str(pvcalc.schouten(f, g))})
    return rows
