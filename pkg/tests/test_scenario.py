"""Scenario DSL: parsing, evaluation, canonical printing, error paths."""

import math

import numpy as np
import pytest

from entwb.firstq import FirstQTensor
from entwb.fock import StateVector
from entwb.scenario import (
    ScenarioError,
    parse_expression,
    parse_scenario,
    print_expression,
    print_scenario,
)

PAIR = """
# the spatially separated pair
id = pair
statistics = fermi
modes = L,up; L,dn; R,up; R,dn
external = L; R
internal = up; dn
state = adag(L,up)*adag(R,dn)|vac>
partition = L,up; L,dn | R,up; R,dn
provenance = paper
expect_separable_V = true
"""


def test_second_quantized_state():
    s = parse_scenario(PAIR)
    assert isinstance(s.state, StateVector)
    assert s.state.amps == pytest.approx({(1, 0, 0, 1): 1.0})
    assert s.normalization == pytest.approx(1.0)
    assert s.partition.left == (0, 1)
    assert s.expectations == {"separable_V": True}


def test_first_quantized_state_autonormalized():
    text = """
id = sym-pair
statistics = bose
modes = L,up; L,dn; R,up; R,dn
state = S[ ket(L,up) (x) ket(L,dn) ]
"""
    s = parse_scenario(text)
    assert isinstance(s.state, FirstQTensor)
    # S[...] has norm 1/sqrt(2); the recorded normalization is the raw norm
    assert s.normalization == pytest.approx(1 / math.sqrt(2))
    assert s.state.norm() == pytest.approx(1.0)
    assert s.state.amps[0, 1] == pytest.approx(1 / math.sqrt(2))


def test_scalar_arithmetic_and_imaginary():
    text = """
id = scalars
modes = a; b
state = (0.5+0.5i)*adag(a)*adag(b)|vac> + (1/sqrt(2))*adag(a)*adag(a)|vac>
"""
    s = parse_scenario(text)
    amps = s.state.amps
    # both amplitudes present, state normalized
    assert set(amps) == {(1, 1), (2, 0)}
    assert s.state.norm() == pytest.approx(1.0)


def test_superposition_with_vac_terms():
    text = """
id = sectors
modes = a; b
state = adag(a)|vac> + adag(b)|vac>
"""
    s = parse_scenario(text)
    assert s.state.amps == pytest.approx({(1, 0): 1 / math.sqrt(2), (0, 1): 1 / math.sqrt(2)})


def test_apply_and_collective():
    text = """
id = frozen
statistics = bose
modes = L,up; L,dn; R,up; R,dn
external = L; R
internal = up; dn
state = S[ (ket(L,up) + ket(R,up)) (x) (ket(L,dn) + ket(R,dn)) ]
apply = sym(proj(ket(L,up)) + proj(ket(L,dn)), proj(ket(R,up)) + proj(ket(R,dn)))
"""
    s = parse_scenario(text)
    assert isinstance(s.state, FirstQTensor)
    assert s.state.norm() == pytest.approx(1.0)
    # the projected state lives in the L x R cross block
    amps = s.state.amps
    assert abs(amps[0, 3]) > 0.1  # (L,up) x (R,dn)
    assert abs(amps[0, 1]) < 1e-12  # no L x L weight survives


def test_probe_operators():
    text = """
id = probes
modes = up; dn
state = ket(up) (x) ket(dn) + ket(dn) (x) ket(up)
A = proj(ket(up)) (x) id
B = id (x) proj(ket(dn))
"""
    s = parse_scenario(text)
    assert s.probes["A"].shape == (4, 4)
    assert np.allclose(s.probes["A"], np.kron(np.diag([1.0, 0.0]), np.eye(2)))


def test_kbasis_and_sectors():
    text = """
id = bases
statistics = bose
modes = L,up; L,dn; R,up; R,dn
state = adag(L,up)*adag(L,dn)|vac>
K = ket(L,up); ket(L,dn)
V1 = ket(L,up); ket(L,dn)
V2 = ket(R,up); ket(R,dn)
"""
    s = parse_scenario(text)
    assert s.kbasis.shape == (4, 2)
    assert s.sectors is not None


def test_round_trip_is_identity():
    for text in (
        PAIR,
        """
id = mixed
statistics = bose
modes = a; b
state = sqrt(2)*S[ ket(a) (x) ket(b) ] - 0.5i*(ket(a) (x) ket(a))
G = adag(a)*a(b) + adag(b)*a(a)
expect_qfi = 4
""",
    ):
        s1 = parse_scenario(text)
        printed = print_scenario(s1)
        s2 = parse_scenario(printed)
        assert s1.asts == s2.asts
        assert print_scenario(s2) == printed
        assert s1.expectations == s2.expectations


def test_expression_round_trip():
    samples = [
        "adag(L,up)*adag(R,dn)|vac>",
        "S[ ket(a) (x) ket(b) ]",
        "(1/sqrt(2))*(adag(a)*adag(b)|vac> + adag(b)*adag(a)|vac>)",
        "3*id + 4*proj(ket(up) (x) ket(up) + ket(dn) (x) ket(dn))",
        "outer(ket(a), ket(b)) + outer(ket(b), ket(a))",
        "2i*A[ ket(a) (x) ket(b) ]",
    ]
    for text in samples:
        ast = parse_expression(text)
        assert parse_expression(print_expression(ast)) == ast


def test_syntax_error_carries_position():
    with pytest.raises(ScenarioError) as err:
        parse_scenario("id = bad\nmodes = a; b\nstate = adag(a\n")
    assert "line 3" in str(err.value)


def test_unknown_mode_label():
    with pytest.raises(ScenarioError, match="unknown mode label"):
        parse_scenario("id = x\nmodes = a; b\nstate = adag(zz)|vac>\n")


def test_zero_state_rejected():
    with pytest.raises(ScenarioError, match="zero"):
        parse_scenario("id = x\nmodes = a; b\nstate = A[ ket(a) (x) ket(a) ]\n")


def test_duplicate_key_rejected():
    with pytest.raises(ScenarioError, match="duplicate"):
        parse_scenario("id = x\nid = y\nmodes = a\nstate = adag(a)|vac>\n")


def test_fermionic_anticommutation_in_dsl():
    text = """
id = signs
statistics = fermi
modes = a; b
state = adag(b)*adag(a)|vac>
"""
    s = parse_scenario(text)
    assert s.state.amps == pytest.approx({(1, 1): -1.0})
