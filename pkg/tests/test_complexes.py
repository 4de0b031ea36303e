from fractions import Fraction

import pytest

from polyvec import pvcalc
from polyvec.complexes import (
    DescendantField,
    Variant,
    cohomology_model,
    differential,
    parity_of,
    phi_map,
    random_field,
    summands,
)
from polyvec.superpoly import SuperPoly, random_poly


def test_summand_tables():
    assert set(summands(3, Variant.mbcov())) == {
        ("f", 0, 0), ("f", 0, 1), ("f", 1, 0), ("f", 0, 2), ("f", 1, 1), ("f", 2, 0)}
    # four summands for the 2-potential theory in three dimensions
    assert set(summands(3, Variant.potential(2))) == {
        ("f", 0, 0), ("f", 0, 1), ("f", 1, 0), ("p", 0)}
    # the tower has d-k entries in general
    keys = summands(5, Variant.potential(2))
    assert {k for k in keys if k[0] == "p"} == {("p", 0), ("p", 1), ("p", 2)}
    assert ("f", 0, 2) not in keys and ("f", 1, 1) not in keys


def test_parities():
    v = Variant.potential(2)
    assert parity_of(("f", 0, 1), v) == 1
    assert parity_of(("f", 1, 0), v) == 0
    assert parity_of(("p", 0), v) == 0  # potential sits off its xi-parity
    assert parity_of(("p", 1), v) == 1


def test_differential_example():
    d, v = 3, Variant.mbcov()
    psi = DescendantField.single(d, v, ("f", 0, 1), SuperPoly.x(d, 1) * SuperPoly.xi(d, 1))
    out = differential(psi)
    assert out.parts == {("f", 1, 0): SuperPoly.const(d, 1)}


def test_differential_squares_to_zero():
    for d, v in [(3, Variant.mbcov()), (4, Variant.potential(2))]:
        for i, key in enumerate(summands(d, v)):
            for seed in range(6):
                psi = random_field(d, v, key, 4, seed=seed + 31 * i)
                assert differential(differential(psi)).is_zero()


def test_potential_head_has_no_outgoing_differential():
    d, v = 3, Variant.potential(2)
    gamma = SuperPoly.x(d, 1) * SuperPoly.xi(d, 1) * SuperPoly.xi(d, 2) * SuperPoly.xi(d, 3)
    psi = DescendantField.single(d, v, ("p", 0), gamma)
    assert differential(psi).is_zero()


def test_phi_map_examples():
    d, v = 3, Variant.potential(2)
    gamma = SuperPoly.x(d, 1) * SuperPoly.xi(d, 1) * SuperPoly.xi(d, 2) * SuperPoly.xi(d, 3)
    out = phi_map(DescendantField.single(d, v, ("p", 0), gamma))
    assert out.parts == {("f", 0, 2): SuperPoly.xi(d, 2) * SuperPoly.xi(d, 3)}
    mu = random_poly(d, 3, xi_degree_filter=1, seed=2)
    out = phi_map(DescendantField.single(d, v, ("f", 0, 1), mu))
    assert out.parts == {("f", 0, 1): mu}


@pytest.mark.parametrize("d,k", [(3, 2), (4, 2), (4, 3), (5, 3)])
def test_phi_is_a_chain_map(d, k):
    v = Variant.potential(k)
    keys = summands(d, v)
    count = 0
    for i, key in enumerate(keys):
        for seed in range(100 // len(keys) + 1):
            psi = random_field(d, v, key, 4, seed=seed + 97 * i)
            assert phi_map(differential(psi)) == differential(phi_map(psi))
            count += 1
    assert count >= 100 // len(keys)


def test_phi_rejects_mbcov():
    with pytest.raises(ValueError):
        phi_map(DescendantField.zero(3, Variant.mbcov()))


def test_field_validation():
    d, v = 3, Variant.mbcov()
    with pytest.raises(ValueError):
        DescendantField(d, v, {("f", 0, 5): SuperPoly.xi(d, 1)})
    with pytest.raises(ValueError):
        DescendantField(d, v, {("f", 0, 1): SuperPoly.x(d, 1)})  # wrong xi-degree


def test_field_serialization_round_trip():
    for d, v in [(3, Variant.mbcov()), (4, Variant.potential(2))]:
        keys = summands(d, v)
        psi = DescendantField.zero(d, v)
        for i, key in enumerate(keys[: 3]):
            psi = psi + random_field(d, v, key, 3, seed=i)
        assert DescendantField.from_dict(psi.to_dict()) == psi


def test_cohomology_model_membership():
    model = cohomology_model(3, Variant.mbcov())
    xi = lambda i: SuperPoly.xi(3, i)
    assert model.membership(("pv", 2), xi(1) * xi(2))
    assert model.membership(("pv", 1), SuperPoly.x(3, 1) * xi(2))  # divergence free
    assert not model.membership(("pv", 1), SuperPoly.x(3, 1) * xi(1))
    assert not model.membership(("pv", 1), xi(1) * xi(2))  # wrong degree


def test_cohomology_model_slots():
    assert cohomology_model(3, Variant.mbcov()).slots == (("pv", 0), ("pv", 1), ("pv", 2))
    assert cohomology_model(3, Variant.potential(2)).slots == (("pv", 0), ("pv", 1), ("pot",))
    assert cohomology_model(4, Variant.potential(2)).slots == (
        ("pv", 0), ("pv", 1), ("pv", 3), ("quot",), ("c",))


def test_quotient_canonicalization():
    from polyvec.contraction import contraction_K

    model = cohomology_model(4, Variant.potential(2))
    nu = random_poly(4, 4, xi_degree_filter=3, seed=8)
    v = model.element({("quot",): nu})
    rep = v.part(("quot",))
    assert rep == contraction_K(pvcalc.divergence(rep))
    # representatives of the same class agree after canonicalization
    shift = pvcalc.divergence(random_poly(4, 4, xi_degree_filter=4, seed=9))
    w = model.element({("quot",): nu + shift})
    assert w == v


def test_scalar_slot_requires_central_carrier():
    model = cohomology_model(3, Variant.mbcov())
    with pytest.raises(ValueError):
        model.element({}, scalar=1)


def test_random_elements_live_in_carrier():
    for d, v in [(3, Variant.mbcov()), (4, Variant.potential(2))]:
        model = cohomology_model(d, v)
        for slot in model.slots:
            el = model.random_element(slot, 3, seed=5)
            for s, poly in el.parts.items():
                assert model.membership(s, poly)
