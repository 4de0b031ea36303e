"""Graded field complexes over C^d with polynomial coefficients.

Two families of complexes are modelled, both with differential Q = t*Delta
where t is an even formal parameter:

* the minimal theory: summands t^i PV^j with i, j >= 0 and i + j <= d - 1;
* the k-potential variants (2 <= k <= d-1, and k != (d-1)/2 for odd d):
  the minimal summands with the diagonal i + j = k removed, together with
  a separate potential tower t^{-m} PV^{k+m+1} for 0 <= m <= d-k-1.

Summand keys are ("f", i, j) for the minimal summands and ("p", m) for
the potential tower; the tower's final summand carries no outgoing
differential.  The comparison map phi sends a potential complex to the
minimal complex by the divergence on the m = 0 potential summand and the
identity elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import pvcalc
from .superpoly import SuperPoly, random_poly

FieldKey = tuple
SlotKey = tuple


@dataclass(frozen=True)
class Variant:
    kind: str  # "mbcov" | "potential"
    k: int | None = None

    @classmethod
    def mbcov(cls) -> "Variant":
        return cls("mbcov")

    @classmethod
    def potential(cls, k: int) -> "Variant":
        return cls("potential", k)

    def validate(self, d: int):
        if self.kind == "mbcov":
            if d < 2:
                raise ValueError("minimal theory requires d >= 2")
            return
        if self.kind == "potential":
            # The self-pairing case k = (d-1)/2 (d odd) lacks the Poisson
            # pairing but has the same complex and bracket structure, so it
            # is accepted here.
            k = self.k
            if k is None or not 2 <= k <= d - 1:
                raise ValueError(f"potential variant requires 2 <= k <= d-1, got k={k}, d={d}")
            return
        raise ValueError(f"unknown variant kind {self.kind!r}")

    @property
    def label(self) -> str:
        return "mbcov" if self.kind == "mbcov" else f"potential({self.k})"


def summands(d: int, variant: Variant) -> list[FieldKey]:
    variant.validate(d)
    keys: list[FieldKey] = []
    if variant.kind == "mbcov":
        for s in range(d):
            for i in range(s + 1):
                keys.append(("f", i, s - i))
        return keys
    k = variant.k
    for s in range(d):
        if s == k:
            continue
        for i in range(s + 1):
            keys.append(("f", i, s - i))
    for m in range(d - k):
        keys.append(("p", m))
    return keys


def xi_degree_of(key: FieldKey, variant: Variant) -> int:
    if key[0] == "f":
        return key[2]
    return variant.k + key[1] + 1


def t_power_of(key: FieldKey) -> int:
    if key[0] == "f":
        return key[1]
    return -key[1]


def parity_of(key: FieldKey, variant: Variant) -> int:
    """Parity used for Koszul bookkeeping (the shifted-symmetric convention).

    Minimal summands carry the xi-parity of their polyvector (t is even);
    a potential summand sits one degree off its underlying polyvector.
    """
    if key[0] == "f":
        return key[2] & 1
    return (variant.k + key[1]) & 1


@dataclass
class DescendantField:
    """Finitely supported map from summand keys to xi-homogeneous SuperPolys."""

    d: int
    variant: Variant
    parts: dict[FieldKey, SuperPoly] = field(default_factory=dict)

    def __post_init__(self):
        valid = set(summands(self.d, self.variant))
        cleaned = {}
        for key, poly in self.parts.items():
            if key not in valid:
                raise ValueError(f"invalid summand {key} for {self.variant.label}, d={self.d}")
            if poly.is_zero():
                continue
            if poly.xi_degrees() - {xi_degree_of(key, self.variant)}:
                raise ValueError(f"summand {key} holds a wrong xi-degree")
            cleaned[key] = poly
        self.parts = cleaned

    @classmethod
    def zero(cls, d: int, variant: Variant) -> "DescendantField":
        return cls(d, variant, {})

    @classmethod
    def single(cls, d: int, variant: Variant, key: FieldKey, poly: SuperPoly) -> "DescendantField":
        return cls(d, variant, {key: poly})

    def __add__(self, other: "DescendantField") -> "DescendantField":
        if (self.d, self.variant) != (other.d, other.variant):
            raise ValueError("cannot add fields of different complexes")
        parts = dict(self.parts)
        for key, poly in other.parts.items():
            parts[key] = parts.get(key, SuperPoly.zero(self.d)) + poly
        return DescendantField(self.d, self.variant, parts)

    def __neg__(self) -> "DescendantField":
        return DescendantField(self.d, self.variant, {k: -p for k, p in self.parts.items()})

    def __sub__(self, other: "DescendantField") -> "DescendantField":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DescendantField)
            and (self.d, self.variant) == (other.d, other.variant)
            and self.parts == other.parts
        )

    def is_zero(self) -> bool:
        return not self.parts

    def part(self, key: FieldKey) -> SuperPoly:
        return self.parts.get(key, SuperPoly.zero(self.d))

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "variant": self.variant.label,
            "summands": [
                {"key": list(key), "poly": str(poly)}
                for key, poly in sorted(self.parts.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DescendantField":
        label = data["variant"]
        if label == "mbcov":
            variant = Variant.mbcov()
        else:
            variant = Variant.potential(int(label[len("potential("):-1]))
        d = data["d"]
        parts = {}
        for item in data["summands"]:
            key = tuple(item["key"][:1]) + tuple(int(v) for v in item["key"][1:])
            parts[key] = SuperPoly.parse(d, item["poly"])
        return cls(d, variant, parts)


def differential(psi: DescendantField) -> DescendantField:
    """Q = t * Delta, acting summand-wise.

    On ("f", i, j) the image lands at ("f", i+1, j-1), which is always a
    valid summand when j >= 1 (Delta vanishes on xi-degree 0).  On the
    potential tower Q maps ("p", m) to ("p", m-1); the m = 0 summand has
    no outgoing arrow.
    """
    parts: dict[FieldKey, SuperPoly] = {}

    def put(key, poly):
        if poly.is_zero():
            return
        parts[key] = parts.get(key, SuperPoly.zero(psi.d)) + poly

    for key, poly in psi.parts.items():
        if key[0] == "f":
            _, i, j = key
            img = pvcalc.divergence(poly)
            if img.is_zero():
                continue
            if j == 0:
                raise AssertionError("Delta must vanish on xi-degree 0")
            put(("f", i + 1, j - 1), img)
        else:
            m = key[1]
            if m == 0:
                continue
            put(("p", m - 1), pvcalc.divergence(poly))
    return DescendantField(psi.d, psi.variant, parts)


def phi_map(psi: DescendantField) -> DescendantField:
    """Chain map from a potential complex to the minimal complex.

    Acts by the divergence on the m = 0 potential summand (landing on the
    i + j = k diagonal), annihilates the rest of the tower, and is the
    identity on the minimal summands.
    """
    if psi.variant.kind != "potential":
        raise ValueError("phi_map expects a potential-variant field")
    k = psi.variant.k
    target = Variant.mbcov()
    parts: dict[FieldKey, SuperPoly] = {}
    for key, poly in psi.parts.items():
        if key[0] == "f":
            parts[key] = parts.get(key, SuperPoly.zero(psi.d)) + poly
        elif key[1] == 0:
            img = pvcalc.divergence(poly)
            if not img.is_zero():
                parts[("f", 0, k)] = parts.get(("f", 0, k), SuperPoly.zero(psi.d)) + img
    return DescendantField(psi.d, target, parts)


# -- cohomology carriers ----------------------------------------------


@dataclass
class ModelElement:
    """Element of a minimal-model carrier: slot-indexed polyvector parts
    plus a scalar coordinate for the central slot (potential variants with
    k < d-1).  Quotient parts are stored by their canonical representative."""

    d: int
    variant: Variant
    parts: dict[SlotKey, SuperPoly] = field(default_factory=dict)
    scalar: Fraction = Fraction(0)

    def __post_init__(self):
        self.parts = {k: p for k, p in self.parts.items() if not p.is_zero()}
        self.scalar = Fraction(self.scalar)

    def __add__(self, other: "ModelElement") -> "ModelElement":
        if (self.d, self.variant) != (other.d, other.variant):
            raise ValueError("carrier mismatch")
        parts = dict(self.parts)
        for key, poly in other.parts.items():
            parts[key] = parts.get(key, SuperPoly.zero(self.d)) + poly
        return ModelElement(self.d, self.variant, parts, self.scalar + other.scalar)

    def __neg__(self) -> "ModelElement":
        return ModelElement(self.d, self.variant, {k: -p for k, p in self.parts.items()}, -self.scalar)

    def __sub__(self, other: "ModelElement") -> "ModelElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModelElement)
            and (self.d, self.variant) == (other.d, other.variant)
            and self.parts == other.parts
            and self.scalar == other.scalar
        )

    def is_zero(self) -> bool:
        return not self.parts and self.scalar == 0

    def part(self, key: SlotKey) -> SuperPoly:
        return self.parts.get(key, SuperPoly.zero(self.d))


@dataclass(frozen=True)
class CarrierModel:
    """Description of a minimal-model carrier with membership predicates."""

    d: int
    variant: Variant
    slots: tuple[SlotKey, ...]

    def parity(self, slot: SlotKey) -> int:
        if slot[0] == "pv":
            return slot[1] & 1
        if slot[0] == "pot":
            return (self.d - 1) & 1
        if slot[0] == "quot":
            return self.variant.k & 1
        if slot[0] == "c":
            return (self.d - 1) & 1
        raise ValueError(f"unknown slot {slot}")

    def membership(self, slot: SlotKey, poly: SuperPoly) -> bool:
        """Whether a SuperPoly is a valid value for the slot."""
        from .contraction import contraction_K  # local import to avoid a cycle

        if slot not in self.slots:
            return False
        if poly.is_zero():
            return True
        if poly.xi_degrees() - {self.slot_xi_degree(slot)}:
            return False
        if slot[0] == "pv":
            return pvcalc.divergence(poly).is_zero()
        if slot[0] == "pot":
            return True
        if slot[0] == "quot":
            # canonical representatives are K Delta reduced
            return poly == contraction_K(pvcalc.divergence(poly))
        return False

    def slot_xi_degree(self, slot: SlotKey) -> int:
        if slot[0] == "pv":
            return slot[1]
        if slot[0] == "pot":
            return self.d
        if slot[0] == "quot":
            return self.variant.k + 1
        raise ValueError(f"slot {slot} holds no polyvector")

    def zero(self) -> ModelElement:
        return ModelElement(self.d, self.variant, {})

    def element(self, parts: dict | None = None, scalar=0) -> ModelElement:
        """Build an element, canonicalizing quotient representatives."""
        from .contraction import contraction_K

        parts = dict(parts or {})
        for slot, poly in list(parts.items()):
            if slot not in self.slots:
                raise ValueError(f"unknown slot {slot}")
            if slot[0] == "quot":
                parts[slot] = contraction_K(pvcalc.divergence(poly))
        if scalar != 0 and ("c",) not in self.slots:
            raise ValueError("carrier has no central scalar slot")
        return ModelElement(self.d, self.variant, parts, Fraction(scalar))

    def random_element(self, slot: SlotKey, max_degree: int, seed: int) -> ModelElement:
        """Seeded slot-homogeneous element (divergence free where required)."""
        from .contraction import contraction_K

        if slot == ("c",):
            import random as _random

            rng = _random.Random(seed)
            return self.element({}, scalar=Fraction(rng.choice([-3, -2, -1, 1, 2, 3])))
        j = self.slot_xi_degree(slot)
        raw = random_poly(self.d, max_degree, xi_degree_filter=j, seed=seed)
        if slot[0] == "pv":
            # project onto ker Delta: id - K Delta
            raw = raw - contraction_K(pvcalc.divergence(raw))
        return self.element({slot: raw})


def cohomology_model(d: int, variant: Variant) -> CarrierModel:
    """The carrier of the minimal model for the given complex.

    * minimal theory: divergence-free polyvectors of degree 0..d-1;
    * k = d-1 potentials: full PV^d plus divergence-free degrees 0..d-2;
    * k < d-1 potentials: a scalar slot, the quotient PV^{k+1} / Delta PV^{k+2}
      (stored via canonical representatives), and divergence-free degrees
      j <= d-1 with j != k.
    """
    variant.validate(d)
    if variant.kind == "mbcov":
        slots = tuple(("pv", j) for j in range(d))
    elif variant.k == d - 1:
        slots = tuple(("pv", j) for j in range(d - 1)) + (("pot",),)
    else:
        slots = tuple(("pv", j) for j in range(d) if j != variant.k) + (("quot",), ("c",))
    return CarrierModel(d, variant, slots)


def random_field(d: int, variant: Variant, key: FieldKey, max_degree: int, seed: int) -> DescendantField:
    """Seeded single-summand field."""
    j = xi_degree_of(key, variant)
    poly = random_poly(d, max_degree, xi_degree_filter=j, seed=seed)
    if poly.is_zero():
        poly = SuperPoly.monomial(d, (0,) * d, tuple(range(1, j + 1)))
    return DescendantField.single(d, variant, key, poly)
