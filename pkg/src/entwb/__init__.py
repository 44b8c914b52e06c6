"""Entanglement workbench for few-mode systems of identical particles.

Represents bosonic and fermionic states in first and second
quantization, decides separability under five rival entanglement
definitions, probes factorization of two-point correlation functions
over declared operator subalgebras, and reproduces the consistency
verdict table those definitions are tested against.
"""

from .algebra import (
    ModeBipartition,
    OperatorExpr,
    ParticleLocalPair,
    SectorLocal,
    commutator,
    commutator_norm,
    expectation,
    lift_single_particle,
    multiply,
    number_operator,
)
from .classify import (
    ReducedX1,
    UnsupportedParticleCount,
    Verdict,
    is_entangled_IV,
    is_separable_I,
    is_separable_II,
    is_separable_III,
    is_separable_V,
    product_pair_overlap,
    qfi_phase,
    reduced_X1,
    slater_values,
    takagi,
    von_neumann_entropy,
)
from .correlations import (
    ExplicitDecomposition,
    FactorizationReport,
    check_sep2,
    factorization_gap,
    separable_I_witness,
    sweep_mode_local_gaps,
)
from .firstq import (
    FirstQTensor,
    SingleParticleBasis,
    apply_each,
    effective_distinguish,
    from_fock,
    permute,
    product_tensor,
    sym_operator,
    symmetrize,
    to_fock,
)
from .fock import (
    ModeCatalog,
    StateVector,
    Statistics,
    apply_annihilate,
    apply_create,
    basis_state,
    inner,
    vacuum,
)
from .harness import generate_table1, run_repro_suite
from .scenario import Scenario, ScenarioError, parse_scenario, print_scenario

__version__ = "0.1.0"
