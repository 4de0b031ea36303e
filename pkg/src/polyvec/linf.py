"""L-infinity structures, generalized Jacobi checks, and homotopy transfer.

Everything uses the shifted-symmetric convention: all multibrackets are
graded symmetric for the plain xi-parity of the carrier, every bracket
is odd, and the generalized Jacobi identity reads

    sum over 1 <= i <= n and (i, n-i)-unshuffles sigma of
    eps(sigma) * b_{n-i+1}(b_i(x_{sigma(1..i)}), x_{sigma(i+1..n)}) = 0

with eps the Koszul sign and no further sign factors.  A differential
graded Lie structure enters through decalage; in particular the
symmetric form of the Schouten bracket is Delta(mu nu) on divergence
free inputs.

Homotopy transfer is the standard sum over rooted trees with
iota on the leaves, the homotopy on internal edges, and the projection
at the root, organized as a recursion over set partitions of the
inputs.  It requires the side conditions (H^2 = 0, H iota = 0, p H = 0);
data lacking them are normalized first.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any, Callable

from . import pvcalc
from .complexes import (
    CarrierModel,
    DescendantField,
    ModelElement,
    Variant,
    cohomology_model,
    parity_of,
    t_power_of,
)
from .contraction import HomotopyDatum, contraction_K, normalize_homotopy
from .superpoly import SuperPoly


class LInftyStructure:
    """A differential (arity-1 bracket) plus finitely many multibrackets.

    Brackets not present in the table are zero.  Elements of the carrier
    must support +, unary -, and is_zero(); parity_of must return the
    Koszul parity of a (parity-homogeneous) element.
    """

    def __init__(self, zero: Callable[[], Any], parity_of: Callable[[Any], int],
                 brackets: dict[int, Callable], name: str = ""):
        self.zero = zero
        self.parity_of = parity_of
        self.brackets = dict(brackets)
        self.name = name

    def arities(self) -> list[int]:
        return sorted(self.brackets)

    def bracket(self, n: int) -> Callable:
        if n in self.brackets:
            return self.brackets[n]
        return lambda *args: self.zero()


def koszul_reorder_sign(order, parities) -> int:
    """Sign for reordering x_0..x_{n-1} into the given index order."""
    sign = 1
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            if order[a] > order[b] and (parities[order[a]] & parities[order[b]] & 1):
                sign = -sign
    return sign


def jacobi_defect(structure: LInftyStructure, n: int, inputs) -> Any:
    """The arity-n generalized Jacobi combination; zero iff the identity holds."""
    inputs = tuple(inputs)
    if len(inputs) != n or n < 1:
        raise ValueError("need exactly n >= 1 inputs")
    parities = [structure.parity_of(x) for x in inputs]
    acc = structure.zero()
    for i in range(1, n + 1):
        inner_bracket = structure.bracket(i)
        outer_bracket = structure.bracket(n - i + 1)
        for subset in combinations(range(n), i):
            rest = tuple(j for j in range(n) if j not in subset)
            sign = koszul_reorder_sign(subset + rest, parities)
            inner = inner_bracket(*(inputs[j] for j in subset))
            term = outer_bracket(inner, *(inputs[j] for j in rest))
            acc = acc + (term if sign > 0 else -term)
    return acc


def symmetry_defects(structure: LInftyStructure, n: int, inputs) -> list:
    """Defects of graded symmetry under adjacent transpositions."""
    inputs = list(inputs)
    parities = [structure.parity_of(x) for x in inputs]
    bracket = structure.bracket(n)
    base = bracket(*inputs)
    out = []
    for a in range(n - 1):
        swapped = list(inputs)
        swapped[a], swapped[a + 1] = swapped[a + 1], swapped[a]
        sign = -1 if (parities[a] & parities[a + 1] & 1) else 1
        val = bracket(*swapped)
        out.append(base - (val if sign > 0 else -val))
    return out


# -- concrete structures ----------------------------------------------


def schouten_structure(d: int, with_differential: bool = True) -> LInftyStructure:
    """The (Delta, Schouten) structure on all polyvectors, symmetric form."""
    brackets: dict[int, Callable] = {2: pvcalc.symmetric_bracket}
    if with_differential:
        brackets[1] = pvcalc.divergence
    return LInftyStructure(
        zero=lambda: SuperPoly.zero(d),
        parity_of=lambda p: p.parity(),
        brackets=brackets,
        name=f"schouten(d={d})",
    )


def field_structure(d: int) -> LInftyStructure:
    """(Q = t Delta, t-linear symmetric Schouten) on the minimal complex.

    Raises if a bracket output would leave the family of summands; this
    never happens for the inputs reached during transfer onto the
    divergence-free carrier.
    """
    variant = Variant.mbcov()

    def b2(psi: DescendantField, chi: DescendantField) -> DescendantField:
        out = DescendantField.zero(d, variant)
        for key1, p1 in psi.parts.items():
            for key2, p2 in chi.parts.items():
                val = pvcalc.symmetric_bracket(p1, p2)
                if val.is_zero():
                    continue
                i = t_power_of(key1) + t_power_of(key2)
                j = val.xi_degree()
                if i + j > d - 1:
                    raise ValueError("bracket output leaves the minimal complex")
                out = out + DescendantField.single(d, variant, ("f", i, j), val)
        return out

    from .complexes import differential as Q

    return LInftyStructure(
        zero=lambda: DescendantField.zero(d, variant),
        parity_of=lambda psi: field_parity(psi),
        brackets={1: Q, 2: b2},
        name=f"fields(mbcov, d={d})",
    )


def field_parity(psi: DescendantField) -> int:
    pars = {parity_of(key, psi.variant) for key in psi.parts}
    if len(pars) > 1:
        raise ValueError("field is not parity-homogeneous")
    return pars.pop() if pars else 0


def model_parity(carrier: CarrierModel, v: ModelElement) -> int:
    pars = {carrier.parity(slot) for slot in v.parts}
    if v.scalar != 0:
        pars.add(carrier.parity(("c",)) if ("c",) in carrier.slots else carrier.parity(("pot",)))
    if len(pars) > 1:
        raise ValueError("element is not parity-homogeneous")
    return pars.pop() if pars else 0


# -- minimal models ----------------------------------------------------


def _content(v: ModelElement) -> SuperPoly:
    """Flatten a carrier element to a divergence-free polyvector.

    Divergence-free slots contribute as they are; potential and quotient
    slots contribute through the divergence of their representative.  The
    scalar slot is central and contributes nothing.
    """
    acc = SuperPoly.zero(v.d)
    for slot, poly in v.parts.items():
        if slot[0] == "pv":
            acc = acc + poly
        else:
            acc = acc + pvcalc.divergence(poly)
    return acc


def mbcov_minimal_l2(alpha: SuperPoly, beta: SuperPoly) -> SuperPoly:
    """Lie bracket of the minimal model on divergence-free polyvectors.

    Coincides with the Schouten bracket; in the symmetric convention it
    is Delta(alpha beta), related by the decalage sign (-1)^(|alpha|-1).
    """
    for p in (alpha, beta):
        if not pvcalc.divergence(p).is_zero():
            raise ValueError("inputs must be divergence free")
    return pvcalc.schouten(alpha, beta)


def minimal_model_structure(d: int, variant: Variant) -> LInftyStructure:
    """The transferred minimal model, in closed form.

    * minimal theory: b2 = Delta(content product), placed by xi-degree.
    * k = d-1 potentials: the same, with xi-degree d-1 output lifted into
      the full PV^d slot through K and the top-constant channel; this
      reproduces the wedge and wedge-of-divergence bracket families.
    * k < d-1 potentials: b2 as above with xi-degree k output lifted to a
      quotient class, plus the (d-k+1)-ary bracket into the central slot
      given by the constant top coefficient of the content product.
    """
    variant.validate(d)
    carrier = cohomology_model(d, variant)
    k = variant.k if variant.kind == "potential" else None

    def b2(v: ModelElement, w: ModelElement) -> ModelElement:
        cv, cw = _content(v), _content(w)
        prod = cv * cw
        image = pvcalc.divergence(prod)
        parts: dict = {}

        def put(slot, poly):
            if not poly.is_zero():
                parts[slot] = parts.get(slot, SuperPoly.zero(d)) + poly

        for j, comp in image.xi_components().items():
            if variant.kind == "mbcov":
                put(("pv", j), comp)
            elif k == d - 1:
                if j <= d - 2:
                    put(("pv", j), comp)
                else:
                    put(("pot",), contraction_K(comp))
            else:
                if j == k:
                    put(("quot",), contraction_K(comp))
                else:
                    put(("pv", j), comp)
        if k == d - 1:
            tc = prod.top_constant()
            if tc:
                top = SuperPoly.monomial(d, (0,) * d, tuple(range(1, d + 1)), tc)
                put(("pot",), top)
        return ModelElement(d, variant, parts)

    brackets: dict[int, Callable] = {2: b2}

    if variant.kind == "potential" and k != d - 1:
        arity = d - k + 1

        def l_top(*vs: ModelElement) -> ModelElement:
            if len(vs) != arity:
                raise ValueError(f"bracket has arity {arity}")
            prod = SuperPoly.const(d, 1)
            for v in vs:
                prod = prod * _content(v)
            return ModelElement(d, variant, {}, prod.top_constant())

        brackets[arity] = l_top

    return LInftyStructure(
        zero=carrier.zero,
        parity_of=lambda v: model_parity(carrier, v),
        brackets=brackets,
        name=f"minimal({variant.label}, d={d})",
    )


def potential_d_brackets(d: int) -> LInftyStructure:
    """Minimal model of the (d-1)-potential theory: a Lie superalgebra."""
    return minimal_model_structure(d, Variant.potential(d - 1))


def potential_k_brackets(d: int, k: int) -> LInftyStructure:
    """Minimal model of the k-potential theory for k < d-1: quadratic plus
    (d-k+1)-ary brackets, the latter central."""
    if k == d - 1:
        raise ValueError("use potential_d_brackets for k = d-1")
    return minimal_model_structure(d, Variant.potential(k))


# -- homotopy transfer --------------------------------------------------


def _set_partitions(n: int):
    """Partitions of range(n) into unordered nonempty blocks, each block
    sorted, blocks ordered by least element."""
    def helper(items):
        if not items:
            yield []
            return
        head, tail = items[0], items[1:]
        for sub in helper(tail):
            yield [[head]] + sub
            for idx in range(len(sub)):
                yield sub[:idx] + [[head] + sub[idx]] + sub[idx + 1 :]

    for part in helper(list(range(n))):
        yield [sorted(b) for b in sorted(part, key=min)]


def _side_conditions_hold(datum: HomotopyDatum, probes: int = 6,
                          max_degree: int = 3) -> bool:
    from .complexes import random_field, summands

    d, variant = datum.d, datum.variant
    for t, key in enumerate(summands(d, variant)[:probes] * 2):
        psi = random_field(d, variant, key, max_degree, seed=9000 + t)
        if not datum.homotopy(datum.homotopy(psi)).is_zero():
            return False
        if not datum.project(datum.homotopy(psi)).is_zero():
            return False
    for i, slot in enumerate(datum.carrier.slots):
        v = datum.carrier.random_element(slot, max_degree, seed=9100 + i)
        if not datum.homotopy(datum.include(v)).is_zero():
            return False
    return True


def transfer(structure: LInftyStructure, datum: HomotopyDatum, arity_cap: int) -> LInftyStructure:
    """Transferred structure on the cohomology carrier up to arity_cap.

    The n-ary bracket is the sum over rooted trees with n leaves, leaves
    decorated by iota, internal edges by the homotopy, the root by the
    projection, and vertices by the source brackets, with Koszul signs;
    evaluated by recursion over set partitions of the inputs.
    """
    if arity_cap < 2:
        raise ValueError("arity_cap must be at least 2")
    if not _side_conditions_hold(datum):
        datum = normalize_homotopy(datum)
    carrier = datum.carrier
    vertex_arities = [n for n in structure.arities() if n >= 2]

    def theta(xs):
        if len(xs) == 1:
            return datum.include(xs[0][0])
        return datum.homotopy(big_b(xs))

    def big_b(xs):
        acc = structure.zero()
        n = len(xs)
        parities = [p for _, p in xs]
        for blocks in _set_partitions(n):
            if len(blocks) < 2 or len(blocks) not in vertex_arities:
                continue
            order = [i for blk in blocks for i in blk]
            sign = koszul_reorder_sign(order, parities)
            args = [theta(tuple(xs[i] for i in blk)) for blk in blocks]
            val = structure.brackets[len(blocks)](*args)
            acc = acc + (val if sign > 0 else -val)
        return acc

    def make_bracket(n: int) -> Callable:
        if n == 1:
            def b1(v: ModelElement) -> ModelElement:
                return datum.project(structure.bracket(1)(datum.include(v)))
            return b1

        def bn(*vs: ModelElement) -> ModelElement:
            if len(vs) != n:
                raise ValueError(f"expected {n} inputs")
            xs = tuple((v, model_parity(carrier, v)) for v in vs)
            return datum.project(big_b(xs))

        return bn

    return LInftyStructure(
        zero=carrier.zero,
        parity_of=lambda v: model_parity(carrier, v),
        brackets={n: make_bracket(n) for n in range(1, arity_cap + 1)},
        name=f"transferred({structure.name})",
    )
