"""Ladder-operator exactness: sqrt(n) factors, Jordan-Wigner signs, CCR/CAR."""

import math

import numpy as np
import pytest

from entwb.fock import (
    ModeCatalog,
    StateVector,
    Statistics,
    apply_annihilate,
    apply_create,
    basis_state,
    inner,
    vacuum,
)

BOSE2 = ModeCatalog(("1", "2"), Statistics.BOSE)
FERMI2 = ModeCatalog(("1", "2"), Statistics.FERMI)
FERMI4 = ModeCatalog(("L,up", "L,dn", "R,up", "R,dn"), Statistics.FERMI)


def random_state(catalog, rng, max_occ=3, nterms=6):
    amps = {}
    for _ in range(nterms):
        cap = 1 if catalog.is_fermi else max_occ
        occ = tuple(int(rng.integers(0, cap + 1)) for _ in catalog.labels)
        if sum(occ) > 6:
            continue
        amps[occ] = complex(rng.normal(), rng.normal())
    if not amps:
        amps[(0,) * len(catalog)] = 1.0
    return StateVector(catalog, amps)


def test_vacuum_is_single_unit_term():
    for catalog in (BOSE2, FERMI4):
        v = vacuum(catalog)
        assert v.amps == {(0,) * len(catalog): 1.0 + 0.0j}
        assert v.norm() == pytest.approx(1.0)


def test_bosonic_double_creation_sqrt_factor():
    s = apply_create(0, apply_create(0, vacuum(BOSE2)))
    assert s.amps == pytest.approx({(2, 0): math.sqrt(2)})


def test_fermionic_reordering_antisymmetry():
    # With the Jordan-Wigner string counted against catalog order,
    # ascending creation order gives the +|1,1> basis state.
    up_then_down = apply_create(1, apply_create(0, vacuum(FERMI2)))
    down_then_up = apply_create(0, apply_create(1, vacuum(FERMI2)))
    assert down_then_up.amps == pytest.approx({(1, 1): 1.0})
    assert up_then_down.amps == pytest.approx({(1, 1): -1.0})


def test_fermionic_double_creation_vanishes():
    rng = np.random.default_rng(3)
    for _ in range(10):
        s = random_state(FERMI4, rng)
        assert apply_create(2, apply_create(2, s)).is_zero


def test_spatially_separated_pair_matches_catalog_basis():
    # adag_{L,up} adag_{R,dn} |vac> occupies exactly those two modes.
    s = apply_create(FERMI4.index("L,up"), apply_create(FERMI4.index("R,dn"), vacuum(FERMI4)))
    assert s.amps == pytest.approx({(1, 0, 0, 1): 1.0})


def test_annihilate_vacuum_and_sqrt_factor():
    assert apply_annihilate(0, vacuum(BOSE2)).is_zero
    two = basis_state(BOSE2, (2, 0))
    assert apply_annihilate(0, two).amps == pytest.approx({(1, 0): math.sqrt(2)})


def test_fermi_annihilation_jw_sign():
    # Brute-force JW string: annihilating mode 2 of |1,1> crosses the
    # occupied mode 1 and picks up a minus sign.
    s = basis_state(FERMI2, (1, 1))
    assert apply_annihilate(1, s).amps == pytest.approx({(1, 0): -1.0})


def test_inner_products():
    assert inner(vacuum(BOSE2), vacuum(BOSE2)) == pytest.approx(1.0)
    a = apply_create(0, vacuum(BOSE2))
    b = apply_create(1, vacuum(BOSE2))
    assert inner(a, b) == pytest.approx(0.0)
    # conjugate linearity in the first slot
    assert inner(2j * a, a) == pytest.approx(-2j)
    assert inner(a, 2j * a) == pytest.approx(2j)


def test_pair_superposition_normalized():
    # (adag_{L,up} adag_{R,dn} + adag_{L,dn} adag_{R,up}) |vac> / sqrt(2)
    cat = FERMI4
    t1 = apply_create(cat.index("L,up"), apply_create(cat.index("R,dn"), vacuum(cat)))
    t2 = apply_create(cat.index("L,dn"), apply_create(cat.index("R,up"), vacuum(cat)))
    s = (t1 + t2) * (1 / math.sqrt(2))
    assert inner(s, s) == pytest.approx(1.0)


@pytest.mark.parametrize("catalog", [BOSE2, FERMI2, FERMI4, ModeCatalog(("a", "b", "c"), Statistics.BOSE)])
def test_ccr_car_on_random_states(catalog):
    rng = np.random.default_rng(11)
    m = len(catalog)
    sign = -1.0 if not catalog.is_fermi else 1.0  # commutator for Bose, anticommutator for Fermi
    for _ in range(25):
        s = random_state(catalog, rng)
        i = int(rng.integers(0, m))
        j = int(rng.integers(0, m))
        lhs = apply_annihilate(i, apply_create(j, s)) + sign * apply_create(j, apply_annihilate(i, s))
        expect = s if i == j else s * 0.0
        diff = lhs - expect
        assert diff.norm() < 1e-10


@pytest.mark.parametrize("catalog", [BOSE2, FERMI4])
def test_annihilate_is_adjoint_of_create(catalog):
    rng = np.random.default_rng(5)
    for _ in range(20):
        u = random_state(catalog, rng)
        v = random_state(catalog, rng)
        i = int(rng.integers(0, len(catalog)))
        assert inner(apply_create(i, u), v) == pytest.approx(inner(u, apply_annihilate(i, v)))


def test_number_operator_diagonal():
    rng = np.random.default_rng(7)
    for catalog in (BOSE2, FERMI4):
        s = random_state(catalog, rng)
        for occ, amp in s.terms():
            term = basis_state(catalog, occ)
            total = None
            for i in range(len(catalog)):
                piece = apply_create(i, apply_annihilate(i, term))
                total = piece if total is None else total + piece
            assert (total - sum(occ) * term).norm() < 1e-12


def test_validation_errors():
    with pytest.raises(ValueError):
        ModeCatalog(("x", "x"), Statistics.BOSE)
    with pytest.raises(ValueError):
        StateVector(FERMI2, {(2, 0): 1.0})
    with pytest.raises(IndexError):
        apply_create(5, vacuum(BOSE2))
    with pytest.raises(ValueError):
        inner(vacuum(BOSE2), vacuum(FERMI2))
