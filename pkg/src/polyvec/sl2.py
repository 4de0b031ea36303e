"""The sl2 action on SHO(3|3), its central extension, and the field theory.

On generators, h is diagonal with eigenvalue (xi-degree - 1); e is the
adjoint action of the cubic generator c * xi1 xi2 xi3 (a member of
SHO' but not of SHO, so the derivation is outer); f is given by an
explicit table on the principal-degree 0 and 1 pieces and vanishes on
degree -1.  On the odd two-dimensional center the action is the
standard representation: h = diag(1, -1), e: e2 -> e1, f: e1 -> e2 in
the (e1, e2) basis.

The field side packages the Z/2 description of the 2-potential theory
in three dimensions: an even pair of functions (the e1 and e2
coordinates), an odd 1-polyvector, and an odd descendant function.  sl2
acts by the standard representation on the pair and by zero elsewhere;
embed() identifies the extension with field configurations, and the
equivariance comparison checks that the two actions agree through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import conventions, pvcalc
from .contraction import contraction_K
from .reporting import Report
from .sho import (
    ExtElement,
    ext_bracket_d3,
    ext_element,
    random_sho_generator,
)
from .superpoly import SuperPoly


def _eps(i: int, j: int, k: int) -> int:
    if {i, j, k} != {1, 2, 3}:
        return 0
    return 1 if (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def _xitop(coeff=1) -> SuperPoly:
    return SuperPoly.monomial(3, (0, 0, 0), (1, 2, 3), coeff)


E_GENERATOR = _xitop(conventions.E_GENERATOR_COEFF)


@dataclass(frozen=True)
class Sl2Element:
    """a_e e + a_h h + a_f f in the basis with [h,e]=2e, [h,f]=-2f, [e,f]=h."""

    a_e: Fraction = Fraction(0)
    a_h: Fraction = Fraction(0)
    a_f: Fraction = Fraction(0)


def act_h(v: ExtElement) -> ExtElement:
    """h: a generator of xi-degree s has weight s - 1; h e1 = e1, h e2 = -e2."""
    _require_d3(v)
    gen = SuperPoly.zero(3)
    for s, comp in v.gen.xi_components().items():
        gen = gen + comp.scale(s - 1)
    return ExtElement(gen, v.c1, -v.c2)


def act_e(v: ExtElement) -> ExtElement:
    """e: the adjoint of the outer generator; e e2 = e1, e e1 = 0.

    The Schouten bracket against the outer generator lands in the
    2-polyvectors, so it needs no carving and feeds no channel.
    """
    _require_d3(v)
    image = pvcalc.schouten(E_GENERATOR, v.gen)
    out = ext_element(image)
    return ExtElement(out.gen, out.c1 + v.c2, out.c2)


class OutsideVerifiedDomain(ValueError):
    """f is only defined on principal degrees <= 1 (plus the center)."""


def act_f(v: ExtElement) -> ExtElement:
    """f by its table on principal degrees -1, 0, 1; f e1 = e2, f e2 = 0.

    Raises OutsideVerifiedDomain when the generator has components of
    principal degree above 1.
    """
    _require_d3(v)
    if any(deg > 1 for deg in v.gen.homogeneous_components("principal")):
        raise OutsideVerifiedDomain("generator has principal degree above 1")
    gen = SuperPoly.zero(3)
    # only xi-degree-2 components map nontrivially
    two = v.gen.xi_component(2)
    for mono, coeff in two._terms.items():
        xdeg = sum(mono.exps)
        a, b = mono.odd
        if xdeg == 0:
            # f(xi_i xi_j) = sign * eps_{ijk} x_k
            k = ({1, 2, 3} - {a, b}).pop()
            gen = gen + SuperPoly.x(3, k).scale(
                conventions.F_TABLE_QUADRATIC * _eps(a, b, k) * coeff)
        else:
            l = next(idx + 1 for idx, e in enumerate(mono.exps) if e)
            if l not in (a, b):
                # f(x_i xi_j xi_k) = sign * (1/2) eps_{ijk} x_i^2
                square = SuperPoly.x(3, l) * SuperPoly.x(3, l)
                gen = gen + square.scale(
                    Fraction(conventions.F_TABLE_CUBIC * _eps(l, a, b), 2) * coeff)
            else:
                # diagonal terms pair up into x_i xi_i xi_j - x_k xi_k xi_j;
                # divergence freeness makes the decomposition unique
                j = b if l == a else a
                sign_order = 1 if l == a else -1  # x_l xi_l xi_j vs x_l xi_j xi_l
                i = l
                k = ({1, 2, 3} - {i, j}).pop()
                t = sign_order * coeff  # coefficient of x_i xi_i xi_j in product order
                value = SuperPoly.x(3, i) * SuperPoly.x(3, k)
                gen = gen + value.scale(
                    Fraction(conventions.F_TABLE_DIAGONAL * _eps(i, j, k) * t, 2))
    return ExtElement(gen, Fraction(0), v.c1)


def _require_d3(v: ExtElement):
    if v.d != 3:
        raise ValueError("the sl2 action is implemented for d = 3")


def act(x: Sl2Element, v: ExtElement) -> ExtElement:
    out = ExtElement(SuperPoly.zero(3))
    if x.a_e:
        out = out + act_e(v).scale(x.a_e)
    if x.a_h:
        out = out + act_h(v).scale(x.a_h)
    if x.a_f:
        out = out + act_f(v).scale(x.a_f)
    return out


# Diagonal branch bookkeeping: divergence freeness forces the two diagonal
# coefficients t_{i,j}, t_{k,j} for a fixed j to be opposite, so assigning
# each monomial half of its difference's table value reproduces
# f(x_i xi_i xi_j - x_k xi_k xi_j) exactly.


def extend_f(v: ExtElement, _cache=None) -> ExtElement | None:
    """Best-effort extension of f above principal degree 1.

    Components of degree n >= 2 are decomposed as sums of brackets of a
    degree-1 generator with a degree-(n-1) generator; when a
    decomposition exists, f is propagated through the derivation rule.
    Returns None ("undetermined") when no decomposition is found.
    Different decompositions are not checked against each other.
    """
    _require_d3(v)
    from . import pvcalc as _pv
    from ._linalg import solve_combination
    from .sho import sho_basis

    by_degree = v.gen.homogeneous_components("principal")
    total = act_f(ExtElement(SuperPoly.zero(3), v.c1, v.c2))
    for deg, comp in by_degree.items():
        if deg <= 1:
            total = total + act_f(ExtElement(comp))
            continue
        ones = [g for g in sho_basis(3, 1)
                if set(g.homogeneous_components("principal")) == {1}]
        lowers = [g for g in sho_basis(3, deg - 1)
                  if set(g.homogeneous_components("principal")) == {deg - 1}]
        pairs = [(u, w) for u in ones for w in lowers]
        columns = [_pv.schouten(u, w)._terms for u, w in pairs]
        coeffs = solve_combination(columns, comp._terms)
        if coeffs is None:
            return None
        for c, (u, w) in zip(coeffs, pairs):
            if c == 0:
                continue
            fu = act_f(ext_element(u))
            fw = extend_f(ext_element(w)) if deg - 1 > 1 else act_f(ext_element(w))
            if fw is None:
                return None
            piece = ext_bracket_d3(fu, ext_element(w)) + ext_bracket_d3(ext_element(u), fw)
            total = total + piece.scale(c)
    return total


def sl2_relations_check(truncation: int = 3, trials: int = 40, seed: int = 0) -> Report:
    """Derivation properties and operator relations on the verified domain."""
    report = Report()

    # h and e are derivations at every sampled principal degree
    for name, action in (("h", act_h), ("e", act_e)):
        bad = None
        for t in range(trials):
            a = ext_element(random_sho_generator(truncation + 2, seed=hash((seed, name, t, 0)) % 2**32))
            b = ext_element(random_sho_generator(truncation + 2, seed=hash((seed, name, t, 1)) % 2**32))
            lhs = action(ext_bracket_d3(a, b))
            rhs = ext_bracket_d3(action(a), b) + ext_bracket_d3(a, action(b))
            if lhs != rhs:
                bad = {"a": str(a), "b": str(b)}
                break
        report.add(f"sl2.derivation.{name}", bad is None, **({"witness": bad} if bad else {}))

    # f is a derivation on degree <= 1 pairs whose bracket stays in degree <= 1
    bad = None
    checked = 0
    for t in range(8 * trials):
        a = _random_low_degree(seed=hash((seed, "fa", t)) % 2**32)
        b = _random_low_degree(seed=hash((seed, "fb", t)) % 2**32)
        ab = ext_bracket_d3(a, b)
        if any(deg > 1 for deg in ab.gen.homogeneous_components("principal")):
            continue
        checked += 1
        lhs = act_f(ab)
        rhs = ext_bracket_d3(act_f(a), b) + ext_bracket_d3(a, act_f(b))
        if lhs != rhs:
            bad = {"a": str(a), "b": str(b)}
            break
        if checked >= trials:
            break
    report.add("sl2.derivation.f", bad is None and checked > 0,
               **({"witness": bad} if bad else {"pairs": checked}))

    # operator relations
    for name, lhs_fn, rhs_fn, domain in (
        ("h_e", lambda v: _comm(act_h, act_e, v), lambda v: act_e(v).scale(2), 4),
        ("h_f", lambda v: _comm(act_h, act_f, v), lambda v: act_f(v).scale(-2), 1),
        ("e_f", lambda v: _comm(act_e, act_f, v), act_h, 0),
    ):
        bad = None
        for t in range(trials):
            deg = hash((seed, name, t)) % (domain + 2) - 1  # principal degree in [-1, domain]
            v = _random_principal(deg, seed=hash((seed, name, t, "v")) % 2**32)
            if v.gen.is_zero():
                continue
            if lhs_fn(v) != rhs_fn(v):
                bad = {"element": str(v), "degree": deg}
                break
        report.add(f"sl2.relation.{name}", bad is None, **({"witness": bad} if bad else {}))
    return report


def _comm(first, second, v: ExtElement) -> ExtElement:
    return first(second(v)) - second(first(v))


def _random_low_degree(seed: int) -> ExtElement:
    """Seeded extension element of principal degree <= 1."""
    import random as _random

    rng = _random.Random(seed)
    deg = rng.choice([-1, 0, 0, 1, 1])
    return _random_principal(deg, seed=rng.randrange(2**32))


def _random_principal(deg: int, seed: int) -> ExtElement:
    """Seeded element concentrated in one principal degree (-1, 0, or up)."""
    gen = random_sho_generator(deg + 2, seed=seed)
    comp = gen.homogeneous_components("principal").get(deg, SuperPoly.zero(3))
    return ext_element(comp)


def equivariance_check_cocycle(trials: int = 30, seed: int = 0) -> Report:
    """The center action is compatible with the extension bracket.

    Runs the named cases on constant and linear fields for every index
    combination, then seeded pairs in the verified domain.
    """
    report = Report()
    actions = {"h": act_h, "e": act_e, "f": act_f}

    # named cases: a = d/dx_i (generator xi_i), b = xi_k d/dx_j - xi_j d/dx_k
    # (generator -xi_j xi_k), u = d/dxi_i (generator -x_i)
    for name, action in actions.items():
        bad = None
        for i, j, k in permutations((1, 2, 3)):
            a = ext_element(SuperPoly.xi(3, i))
            b = ext_element(-(SuperPoly.xi(3, j) * SuperPoly.xi(3, k)))
            u = ext_element(-SuperPoly.x(3, i))
            aj = ext_element(SuperPoly.xi(3, j))
            for left, right in ((a, b), (u, aj)):
                lhs = action(ext_bracket_d3(left, right))
                rhs = ext_bracket_d3(action(left), right) + ext_bracket_d3(left, action(right))
                if lhs != rhs:
                    bad = {"x": name, "left": str(left), "right": str(right),
                           "lhs": str(lhs), "rhs": str(rhs)}
                    break
            if bad:
                break
        report.add(f"sl2.cocycle_equivariance.named.{name}", bad is None,
                   **({"witness": bad} if bad else {}))

    # seeded pairs
    for name, action in actions.items():
        bad = None
        for t in range(trials):
            a = _random_low_degree(seed=hash((seed, name, t, 0)) % 2**32)
            b = _random_low_degree(seed=hash((seed, name, t, 1)) % 2**32)
            if name == "f":
                ab = ext_bracket_d3(a, b)
                if any(deg > 1 for deg in ab.gen.homogeneous_components("principal")):
                    continue
            lhs = action(ext_bracket_d3(a, b))
            rhs = ext_bracket_d3(action(a), b) + ext_bracket_d3(a, action(b))
            if lhs != rhs:
                bad = {"x": name, "a": str(a), "b": str(b)}
                break
        report.add(f"sl2.cocycle_equivariance.seeded.{name}", bad is None,
                   **({"witness": bad} if bad else {}))
    return report


# -- the field side -----------------------------------------------------


@dataclass
class ZTwoField:
    """Fields of the Z/2 form of the 2-potential theory on C^3.

    phi1 and phi2 are the two function coordinates of the even pair (the
    e1 and e2 directions), mu the odd 1-polyvector, nu the odd
    descendant function.
    """

    phi1: SuperPoly
    phi2: SuperPoly
    mu: SuperPoly
    nu: SuperPoly

    @classmethod
    def zero(cls) -> "ZTwoField":
        z = SuperPoly.zero(3)
        return cls(z, z, z, z)

    def __post_init__(self):
        for name, part, degs in (("phi1", self.phi1, {0}), ("phi2", self.phi2, {0}),
                                 ("mu", self.mu, {1}), ("nu", self.nu, {0})):
            if part.xi_degrees() - degs:
                raise ValueError(f"{name} has a wrong xi-degree")

    def __add__(self, other: "ZTwoField") -> "ZTwoField":
        return ZTwoField(self.phi1 + other.phi1, self.phi2 + other.phi2,
                         self.mu + other.mu, self.nu + other.nu)

    def __neg__(self) -> "ZTwoField":
        return ZTwoField(-self.phi1, -self.phi2, -self.mu, -self.nu)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ZTwoField)
                and (self.phi1, self.phi2, self.mu, self.nu)
                == (other.phi1, other.phi2, other.mu, other.nu))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in (self.phi1, self.phi2, self.mu, self.nu))


def field_action(x: Sl2Element | str, psi: ZTwoField) -> ZTwoField:
    """Infinitesimal sl2 action: the standard representation on the pair
    (phi1, phi2), zero on mu and nu."""
    if isinstance(x, str):
        x = Sl2Element(**{f"a_{x}": Fraction(1)})
    z = SuperPoly.zero(3)
    phi1 = psi.phi2.scale(x.a_e) + psi.phi1.scale(x.a_h)
    phi2 = psi.phi1.scale(x.a_f) + psi.phi2.scale(-x.a_h)
    return ZTwoField(phi1, phi2, z, z)


def symplectic_pair(psi: ZTwoField, chi: ZTwoField) -> SuperPoly:
    """The antisymmetric pairing on the function pair: w(psi, chi) =
    phi1 phi2' - phi2 phi1'."""
    return psi.phi1 * chi.phi2 - psi.phi2 * chi.phi1


def embed(v: ExtElement) -> ZTwoField:
    """Identify the extension with field configurations.

    The degree-0 generator part and the e2 coordinate feed phi2; the
    degree-1 part feeds mu; the degree-2 part, lifted to a potential by
    the pinned sign times K, and the e1 coordinate feed phi1 through the
    contraction with the volume element.
    """
    _require_d3(v)
    parts = v.gen.xi_components()
    pot = _xitop(v.c1) + contraction_K(parts.get(2, SuperPoly.zero(3))).scale(conventions.EMBED_K_SIGN)
    phi1 = pvcalc.vee_omega(pot)
    phi2 = parts.get(0, SuperPoly.zero(3)) + SuperPoly.const(3, v.c2)
    mu = parts.get(1, SuperPoly.zero(3))
    return ZTwoField(phi1, phi2, mu, SuperPoly.zero(3))


def equivariance_compare_theorem(truncation: int = 3, trials: int = 40, seed: int = 0) -> Report:
    """Compare the two sl2 actions through embed().

    For x in {e, h} on all sampled truncation elements and for f on its
    verified domain: embed(x . v) must equal x acting on embed(v) by the
    field representation.  Mismatches are reported with witnesses.
    """
    report = Report()
    named = {
        "h.on_e1": ("h", ExtElement(SuperPoly.zero(3), Fraction(1), Fraction(0))),
        "h.on_gen_xi1": ("h", ext_element(SuperPoly.xi(3, 1))),
        "e.on_e2": ("e", ExtElement(SuperPoly.zero(3), Fraction(0), Fraction(1))),
    }
    actions = {"e": act_e, "h": act_h, "f": act_f}
    for label, (name, v) in named.items():
        lhs = embed(actions[name](v))
        rhs = field_action(name, embed(v))
        report.add(f"sl2.field_equivariance.named.{label}", lhs == rhs,
                   **({} if lhs == rhs else {"witness": {"x": name, "v": str(v)}}))

    for name in ("e", "h", "f"):
        bad = None
        tried = 0
        for t in range(4 * trials):
            deg = hash((seed, name, t)) % (truncation + 2) - 1
            v = _random_principal(deg, seed=hash((seed, name, t, 7)) % 2**32)
            v = v + ExtElement(SuperPoly.zero(3),
                               Fraction(hash((seed, t, 1)) % 5 - 2),
                               Fraction(hash((seed, t, 2)) % 5 - 2))
            if name == "f" and any(dd > 1 for dd in v.gen.homogeneous_components("principal")):
                continue
            tried += 1
            lhs = embed(actions[name](v))
            rhs = field_action(name, embed(v))
            if lhs != rhs:
                bad = {"x": name, "v": str(v)}
                break
            if tried >= trials:
                break
        report.add(f"sl2.field_equivariance.seeded.{name}", bad is None and tried > 0,
                   **({"witness": bad} if bad else {"elements": tried}))
    return report
