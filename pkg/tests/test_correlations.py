"""Factorization gaps: Bell values, counterexample formulas, sep2 mixtures."""

import math

import numpy as np
import pytest

from entwb.algebra import ModeBipartition, OperatorExpr, ParticleLocalPair, lift_single_particle
from entwb.correlations import (
    ExplicitDecomposition,
    check_sep2,
    factorization_gap,
    max_gap,
    separable_I_witness,
    sweep_mode_local_gaps,
)
from entwb.firstq import FirstQTensor, product_tensor, sym_operator, symmetrize
from entwb.fock import ModeCatalog, Statistics, apply_create, vacuum

UP = np.array([1.0, 0.0])
DN = np.array([0.0, 1.0])


# The Bell pair whose P1/P2 expectations are 1/2 vs 1/4: (ud + du)/sqrt(2).
def bell_plus():
    amps = (product_tensor([UP, DN]).amps + product_tensor([DN, UP]).amps) / math.sqrt(2)
    return FirstQTensor(amps)


def bell_minus_vec():
    return ((product_tensor([UP, DN]).amps - product_tensor([DN, UP]).amps) / math.sqrt(2)).reshape(-1)


P1 = np.kron(np.outer(UP, UP), np.eye(2))
P2 = np.kron(np.eye(2), np.outer(DN, DN))


def test_bell_projector_gap():
    rep = factorization_gap(bell_plus(), P1, P2)
    assert rep.lhs == pytest.approx(0.5)
    assert rep.rhs == pytest.approx(0.25)
    assert rep.gap == pytest.approx(0.25)
    assert not rep.factorizes


def test_bell_global_observables_factorize():
    vp = bell_plus().amps.reshape(-1)
    vm = bell_minus_vec()
    rng = np.random.default_rng(31)
    for _ in range(10):
        ap, bp, am, bm = rng.normal(size=4)
        o_plus = ap * np.eye(4) + bp * np.outer(vp, vp.conj())
        o_minus = am * np.eye(4) + bm * np.outer(vm, vm.conj())
        rep = factorization_gap(bell_plus(), o_plus, o_minus)
        assert rep.factorizes
        assert rep.lhs == pytest.approx(am * (ap + bp))


def test_separable_I_formula_gap():
    # psi x psi with psi = (e+ + e-)/sqrt(2), probes P(sz,1) twice: gap 2
    psi = (UP + DN) / math.sqrt(2)
    state = product_tensor([psi, psi])
    sz = np.diag([1.0, -1.0])
    a = sym_operator([sz, np.eye(2)])
    rep = factorization_gap(state, a, a)
    assert rep.gap == pytest.approx(2.0)


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_separable_II_formula_gap(statistics):
    # sqrt(2) S[psi1 x psi2], d=3, O1=O2=diag(1,-1,0), (l,k,m)=(1,2,3): gap 1
    e = np.eye(3)
    psi1 = (e[0] + e[1]) / math.sqrt(2)
    psi2 = e[2]
    state = (math.sqrt(2) * symmetrize(product_tensor([psi1, psi2]), statistics)).normalized()
    o = np.diag([1.0, -1.0, 0.0])
    a = sym_operator([o, np.eye(3)])
    rep = factorization_gap(state, a, a)
    assert rep.gap == pytest.approx(0.25 * 2.0 * 2.0)


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_counterexample_formulas_random_diagonals(statistics):
    rng = np.random.default_rng(32)
    e = np.eye(3)
    for _ in range(10):
        o1 = np.diag(rng.normal(size=3))
        o2 = np.diag(rng.normal(size=3))
        a = sym_operator([o1, np.eye(3)])
        b = sym_operator([o2, np.eye(3)])
        d1 = o1[0, 0] - o1[1, 1]
        d2 = o2[0, 0] - o2[1, 1]
        if statistics is Statistics.BOSE:
            psi = (e[0] + e[1]) / math.sqrt(2)
            rep = factorization_gap(product_tensor([psi, psi]), a, b)
            assert rep.gap == pytest.approx(0.5 * d1 * d2, abs=1e-9)
        psi1 = (e[0] + e[1]) / math.sqrt(2)
        state = (math.sqrt(2) * symmetrize(product_tensor([psi1, e[2]]), statistics)).normalized()
        rep = factorization_gap(state, a, b)
        assert rep.gap == pytest.approx(0.25 * d1 * d2, abs=1e-9)


def test_separable_I_witness_construction():
    rng = np.random.default_rng(33)
    for _ in range(5):
        o1 = np.diag(rng.normal(size=4))
        o2 = np.diag(rng.normal(size=4))
        pair = ParticleLocalPair(o1, o2)
        state, a, b, predicted = separable_I_witness(pair)
        rep = factorization_gap(state, a, b)
        assert abs(predicted) > 1e-9
        assert rep.gap == pytest.approx(predicted, abs=1e-9)
    with pytest.raises(ValueError):
        separable_I_witness(ParticleLocalPair(np.eye(3), np.diag([1.0, 2.0, 3.0])))


def test_gap_scale_covariance_and_reality():
    state = bell_plus()
    rep1 = factorization_gap(state, P1, P2)
    rep3 = factorization_gap(state, 3.0 * P1, P2)
    assert rep3.gap == pytest.approx(3.0 * rep1.gap)
    assert abs(rep1.gap.imag) < 1e-12


def test_warns_on_noncommuting_probes():
    sx = np.array([[0.0, 1.0], [1.0, 0.0]])
    sz = np.diag([1.0, -1.0])
    a = np.kron(sx, np.eye(2))
    b = np.kron(sz, np.eye(2))
    with pytest.warns(UserWarning):
        factorization_gap(bell_plus(), a, b)


# --- second-quantized probes -------------------------------------------------


def catalog4(statistics):
    return ModeCatalog(("L,up", "L,dn", "R,up", "R,dn"), statistics)


def number_on(catalog, labels):
    o = np.zeros((4, 4))
    for lab in labels:
        i = catalog.index(lab)
        o[i, i] = 1.0
    return lift_single_particle(o, catalog)


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_classically_correlated_mixture_factorizes(statistics):
    cat = catalog4(statistics)
    s1 = apply_create(0, apply_create(3, vacuum(cat)))  # L,up R,dn
    s2 = apply_create(1, apply_create(2, vacuum(cat)))  # L,dn R,up
    decomp = ExplicitDecomposition(((0.5, s1), (0.5, s2)))
    n_l = number_on(cat, ("L,up", "L,dn"))
    n_r = number_on(cat, ("R,up", "R,dn"))
    rep = check_sep2(decomp, n_l, n_r)
    assert rep.factorizes
    assert rep.lhs == pytest.approx(1.0)


def test_single_term_decomposition_reduces_to_pure_gap():
    cat = catalog4(Statistics.BOSE)
    s = apply_create(0, apply_create(3, vacuum(cat)))
    decomp = ExplicitDecomposition(((1.0, s),))
    n_l = number_on(cat, ("L,up", "L,dn"))
    n_r = number_on(cat, ("R,up", "R,dn"))
    assert check_sep2(decomp, n_l, n_r).factorizes


def test_bell_as_its_own_decomposition_fails():
    decomp = ExplicitDecomposition(((1.0, bell_plus()),))
    rep = check_sep2(decomp, P1, P2)
    assert not rep.factorizes
    assert rep.lhs == pytest.approx(0.5)
    assert rep.rhs == pytest.approx(0.25)


def test_decomposition_validation():
    with pytest.raises(ValueError):
        ExplicitDecomposition(((0.7, bell_plus()),))
    with pytest.raises(ValueError):
        ExplicitDecomposition(((-0.5, bell_plus()), (1.5, bell_plus())))


# --- random mode-local sweeps --------------------------------------------------


@pytest.mark.parametrize("statistics", [Statistics.BOSE, Statistics.FERMI])
def test_separable_V_states_have_zero_gap(statistics):
    cat = catalog4(statistics)
    bip = ModeBipartition.from_labels(cat, ("L,up", "L,dn"))
    rng = np.random.default_rng(34)
    for _ in range(4):
        # random polynomial product state P(left) Q(right) |vac>
        p = OperatorExpr.identity(cat, complex(rng.normal(), rng.normal()))
        q = OperatorExpr.identity(cat, complex(rng.normal(), rng.normal()))
        for i in bip.left:
            p = p + OperatorExpr.ladder(cat, create=(i,), coeff=complex(rng.normal(), rng.normal()))
        for i in bip.right:
            q = q + OperatorExpr.ladder(cat, create=(i,), coeff=complex(rng.normal(), rng.normal()))
        state = p.apply(q.apply(vacuum(cat))).normalized()
        reports = sweep_mode_local_gaps(state, bip, samples=24, seed=100)
        assert max_gap(reports) < 1e-9


def test_entangled_V_state_shows_gap():
    cat = catalog4(Statistics.BOSE)
    bip = ModeBipartition.from_labels(cat, ("L,up", "L,dn"))
    s1 = apply_create(0, apply_create(3, vacuum(cat)))
    s2 = apply_create(1, apply_create(2, vacuum(cat)))
    bellish = (s1 + s2) * (1 / math.sqrt(2))
    reports = sweep_mode_local_gaps(bellish, bip, samples=24, seed=101)
    assert max_gap(reports) > 1e-3


def test_report_record_shape():
    rep = factorization_gap(bell_plus(), P1, P2, state_id="bell", a_id="P1", b_id="P2")
    rec = rep.record()
    assert rec[0] == "bell" and rec[-1] == "correlated"
