"""Contraction homotopies: the operator K and the homotopy data (H, p, iota).

K inverts the divergence up to homotopy: Delta K + K Delta = id on
xi-degrees 0..d-1, with K into top degree producing no constant term.
It is obtained by transporting the Euler-scaling homotopy of the
polynomial de Rham complex through contraction with the volume element,
with a per-degree sign fixed in conventions.py.

Homotopy data relate a field complex to its cohomology carrier:
p iota = id and id - iota p = Q H + H Q, checked summand by summand by
verify_datum.  The side conditions H^2 = 0, H iota = 0, p H = 0 are not
required, only measured; normalize_homotopy arranges them when absent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import conventions, pvcalc
from .complexes import (
    CarrierModel,
    DescendantField,
    ModelElement,
    Variant,
    cohomology_model,
    differential,
    random_field,
    summands,
)
from .reporting import Report
from .superpoly import SuperPoly


def contraction_K(mu: SuperPoly) -> SuperPoly:
    """Degree-raising homotopy for the divergence: PV^j -> PV^{j+1}.

    On each (form-degree p, coefficient-degree q) component of the
    transported form, contract with the Euler vector field and scale by
    1/(p+q); components with p + q = 0 (constants in top polyvector
    degree) are annihilated.  Output into PV^d never has a constant term.
    """
    out = SuperPoly.zero(mu.d)
    for k, comp in mu.xi_components().items():
        w = pvcalc.vee_omega(comp)
        acc = SuperPoly.zero(mu.d)
        for (q, p), piece in w.bidegree_components().items():
            if p + q == 0:
                continue
            acc = acc + pvcalc.euler_contraction(piece).scale(Fraction(1, p + q))
        out = out + pvcalc.vee_omega_inv(acc).scale(conventions.euler_homotopy_sign(k))
    return out


@dataclass(frozen=True)
class HomotopyDatum:
    """Operators (H, p, iota) between a field complex and its carrier."""

    d: int
    variant: Variant
    carrier: CarrierModel
    homotopy: Callable[[DescendantField], DescendantField]
    project: Callable[[DescendantField], ModelElement]
    include: Callable[[ModelElement], DescendantField]

    def differential(self, psi: DescendantField) -> DescendantField:
        return differential(psi)


def build_datum(d: int, variant: Variant) -> HomotopyDatum:
    """The explicit homotopy datum for a complex.

    H vanishes on the minimal t^0 summands and on the final potential
    summand, and acts by t^{-1} K everywhere else.  p projects onto
    divergence-free representatives (id - K Delta) on minimal t^0
    summands, takes quotient classes and the top constant term on the
    potential tower, and vanishes elsewhere.  iota includes
    divergence-free polyvectors at t^0, canonical quotient
    representatives at the head of the tower, and scalars as constant
    top polyvectors at its tail.
    """
    variant.validate(d)
    carrier = cohomology_model(d, variant)
    k = variant.k if variant.kind == "potential" else None
    zero = lambda: DescendantField.zero(d, variant)

    def homotopy(psi: DescendantField) -> DescendantField:
        out = zero()
        for key, poly in psi.parts.items():
            if key[0] == "f":
                _, i, j = key
                if i == 0:
                    continue
                out = out + DescendantField.single(d, variant, ("f", i - 1, j + 1), contraction_K(poly))
            else:
                m = key[1]
                if m == d - k - 1:
                    continue
                out = out + DescendantField.single(d, variant, ("p", m + 1), contraction_K(poly))
        return out

    def project(psi: DescendantField) -> ModelElement:
        parts: dict = {}
        scalar = Fraction(0)
        for key, poly in psi.parts.items():
            if key[0] == "f":
                _, i, j = key
                if i != 0:
                    continue
                if j == 0:
                    value = poly
                else:
                    value = poly - contraction_K(pvcalc.divergence(poly))
                if not value.is_zero():
                    parts[("pv", j)] = parts.get(("pv", j), SuperPoly.zero(d)) + value
            else:
                m = key[1]
                if k == d - 1:
                    # single-summand tower: the full PV^d slot
                    parts[("pot",)] = parts.get(("pot",), SuperPoly.zero(d)) + poly
                elif m == 0:
                    rep = contraction_K(pvcalc.divergence(poly))
                    if not rep.is_zero():
                        parts[("quot",)] = parts.get(("quot",), SuperPoly.zero(d)) + rep
                elif m == d - k - 1:
                    scalar += poly.top_constant()
        return ModelElement(d, variant, parts, scalar)

    def include(v: ModelElement) -> DescendantField:
        out = zero()
        for slot, poly in v.parts.items():
            if slot[0] == "pv":
                out = out + DescendantField.single(d, variant, ("f", 0, slot[1]), poly)
            elif slot == ("pot",):
                out = out + DescendantField.single(d, variant, ("p", 0), poly)
            elif slot == ("quot",):
                # canonical representatives satisfy rep = K Delta rep
                out = out + DescendantField.single(d, variant, ("p", 0), poly)
        if v.scalar:
            top = SuperPoly.monomial(d, (0,) * d, tuple(range(1, d + 1)), v.scalar)
            out = out + DescendantField.single(d, variant, ("p", d - k - 1), top)
        return out

    # The mbcov datum never touches the potential branches above.
    if variant.kind == "mbcov":
        def project_mbcov(psi: DescendantField) -> ModelElement:
            parts: dict = {}
            for key, poly in psi.parts.items():
                _, i, j = key
                if i != 0:
                    continue
                value = poly if j == 0 else poly - contraction_K(pvcalc.divergence(poly))
                if not value.is_zero():
                    parts[("pv", j)] = parts.get(("pv", j), SuperPoly.zero(d)) + value
            return ModelElement(d, variant, parts)

        def include_mbcov(v: ModelElement) -> DescendantField:
            out = zero()
            for slot, poly in v.parts.items():
                out = out + DescendantField.single(d, variant, ("f", 0, slot[1]), poly)
            return out

        return HomotopyDatum(d, variant, carrier, homotopy, project_mbcov, include_mbcov)

    return HomotopyDatum(d, variant, carrier, homotopy, project, include)


def scale_homotopy(datum: HomotopyDatum, factor) -> HomotopyDatum:
    """Deliberately corrupted datum (negative control): H -> factor * H."""

    def homotopy(psi: DescendantField) -> DescendantField:
        out = datum.homotopy(psi)
        return DescendantField(out.d, out.variant, {k: p.scale(factor) for k, p in out.parts.items()})

    return HomotopyDatum(datum.d, datum.variant, datum.carrier, homotopy, datum.project, datum.include)


def perturb_side_conditions(datum: HomotopyDatum) -> HomotopyDatum:
    """A datum with intact homotopy relations but broken side conditions.

    Adds iota . lam . p to H, where lam is an odd carrier map; since
    Q iota = 0 and p Q = 0 the defining relations survive, while
    p H iota = lam breaks the side conditions.
    """
    d = datum.d

    def lam(v: ModelElement) -> ModelElement:
        c = sum(v.part(("pv", 0))._terms.values(), Fraction(0))
        if c == 0:
            return datum.carrier.zero()
        return ModelElement(d, datum.variant, {("pv", 1): SuperPoly.xi(d, 1).scale(c)})

    def homotopy(psi: DescendantField) -> DescendantField:
        return datum.homotopy(psi) + datum.include(lam(datum.project(psi)))

    return HomotopyDatum(d, datum.variant, datum.carrier, homotopy, datum.project, datum.include)


def normalize_homotopy(datum: HomotopyDatum) -> HomotopyDatum:
    """Arrange the side conditions H iota = 0, p H = 0, H^2 = 0.

    Applies the classical replacements H <- H (1 - iota p),
    H <- (1 - iota p) H, H <- H Q H; each step preserves the homotopy
    relations (Q iota = 0 and p Q = 0 hold for every datum built here).
    """
    Q = datum.differential

    def one_minus_ip(psi):
        return psi - datum.include(datum.project(psi))

    h1 = lambda psi: datum.homotopy(one_minus_ip(psi))
    h2 = lambda psi: one_minus_ip(h1(psi))
    h3 = lambda psi: h2(Q(h2(psi)))
    return HomotopyDatum(datum.d, datum.variant, datum.carrier, h3, datum.project, datum.include)


def verify_datum(datum: HomotopyDatum, sample_budget: int = 50, seed: int = 0,
                 max_degree: int = 4) -> Report:
    """Exact checks of the homotopy relations on every summand and slot.

    Required: p iota = id on every carrier slot, and
    id - iota p = Q H + H Q on every summand of the complex.
    Side conditions (H^2, H iota, p H) are reported informationally.
    """
    report = Report()
    d, variant = datum.d, datum.variant
    keys = summands(d, variant)
    slots = datum.carrier.slots
    per_slot = max(1, sample_budget // max(1, len(slots)))
    per_key = max(1, sample_budget // max(1, len(keys)))
    label = variant.label

    for slot in slots:
        ok = True
        witness = None
        for t in range(per_slot):
            v = datum.carrier.random_element(slot, max_degree, seed=hash((seed, slot, t)) % (2**32))
            got = datum.project(datum.include(v))
            if got != v:
                ok = False
                witness = {"slot": list(slot), "element": _el_str(v), "projected": _el_str(got)}
                break
        report.add(f"datum.{label}.d{d}.p_iota.{_slot_id(slot)}", ok,
                   **({"witness": witness} if witness else {}))

    for key in keys:
        ok = True
        witness = None
        for t in range(per_key):
            psi = random_field(d, variant, key, max_degree, seed=hash((seed, key, t)) % (2**32))
            lhs = psi - datum.include(datum.project(psi))
            rhs = datum.differential(datum.homotopy(psi)) + datum.homotopy(datum.differential(psi))
            if lhs != rhs:
                ok = False
                witness = {"summand": list(key), "field": psi.to_dict()}
                break
        report.add(f"datum.{label}.d{d}.homotopy.{_key_id(key)}", ok,
                   **({"witness": witness} if witness else {}))

    # side conditions, informational only
    for name, check in (
        ("H_squared", lambda psi: datum.homotopy(datum.homotopy(psi)).is_zero()),
        ("p_H", lambda psi: datum.project(datum.homotopy(psi)).is_zero()),
    ):
        ok = True
        for key in keys:
            psi = random_field(d, variant, key, max_degree, seed=hash((seed, name, key)) % (2**32))
            if not check(psi):
                ok = False
                break
        report.add(f"datum.{label}.d{d}.side.{name}", ok, required=False)
    ok = True
    for slot in slots:
        v = datum.carrier.random_element(slot, max_degree, seed=hash((seed, "Hi", slot)) % (2**32))
        if not datum.homotopy(datum.include(v)).is_zero():
            ok = False
            break
    report.add(f"datum.{label}.d{d}.side.H_iota", ok, required=False)
    return report


def _slot_id(slot) -> str:
    return "_".join(str(s) for s in slot)


def _key_id(key) -> str:
    return "_".join(str(s) for s in key)


def _el_str(v: ModelElement) -> str:
    body = {("/".join(map(str, slot))): str(poly) for slot, poly in sorted(v.parts.items())}
    if v.scalar:
        body["c"] = str(v.scalar)
    return repr(body)
