"""Two-point correlation gaps: the universal entanglement probe.

For commuting probes A, B and a pure state the quantity
<AB> - <A><B> vanishes exactly on states that are separable for the
partition the probes belong to; a nonzero gap witnesses correlations
across that partition.  Mixed states are handled only through
explicitly supplied decompositions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from .algebra import ModeBipartition, OperatorExpr, lift_single_particle, multiply
from .config import DEFAULT_PROBE_SAMPLES, EPS_TOL
from .firstq import FirstQTensor
from .fock import ModeCatalog, StateVector

State = Union[StateVector, FirstQTensor]
Probe = Union[OperatorExpr, np.ndarray]


@dataclass(frozen=True)
class FactorizationReport:
    """Outcome of one factorization probe <AB> vs <A><B>."""

    lhs: complex
    rhs: complex
    tolerance: float = EPS_TOL
    state_id: str = ""
    a_id: str = ""
    b_id: str = ""

    @property
    def gap(self) -> complex:
        return self.lhs - self.rhs

    @property
    def factorizes(self) -> bool:
        return abs(self.gap) < self.tolerance

    def record(self) -> Tuple[str, str, str, complex, complex, complex, str]:
        verdict = "factorizes" if self.factorizes else "correlated"
        return (self.state_id, self.a_id, self.b_id, self.lhs, self.rhs, self.gap, verdict)


def factorization_gap(
    state: State,
    a: Probe,
    b: Probe,
    *,
    tolerance: float = EPS_TOL,
    state_id: str = "",
    a_id: str = "",
    b_id: str = "",
) -> FactorizationReport:
    """Report <AB> - <A><B> on a pure state.

    Probes are expected to commute; a violation only warns, since the
    gap remains a computable diagnostic for non-commuting pairs.
    Products act sequentially, so no normal-ordering pass is needed.
    """
    if isinstance(a, OperatorExpr) and isinstance(b, OperatorExpr):
        if not isinstance(state, StateVector):
            raise TypeError("OperatorExpr probes need a StateVector state")
        from .fock import inner

        a_s = a.apply(state)
        b_s = b.apply(state)
        ab_s = a.apply(b_s)
        residual = (ab_s - b.apply(a_s)).norm()
        lhs = inner(state, ab_s)
        rhs = inner(state, a_s) * inner(state, b_s)
    else:
        if isinstance(state, StateVector):
            raise TypeError("matrix probes need a FirstQTensor state")
        am = np.asarray(a, dtype=complex)
        bm = np.asarray(b, dtype=complex)
        v = state.amps.reshape(-1)
        a_v = am @ v
        b_v = bm @ v
        ab_v = am @ b_v
        residual = float(np.linalg.norm(ab_v - bm @ a_v))
        lhs = complex(np.vdot(v, ab_v))
        rhs = complex(np.vdot(v, a_v)) * complex(np.vdot(v, b_v))
    if residual > EPS_TOL:
        warnings.warn(
            f"probe pair does not commute on this state (|[A,B]state| = {residual:.3g})",
            stacklevel=2,
        )
    return FactorizationReport(lhs, rhs, tolerance, state_id, a_id, b_id)


@dataclass(frozen=True)
class ExplicitDecomposition:
    """Convex mixture of pure product-form states, supplied explicitly.

    Each term carries a weight and the joint pure state of that term;
    one-sided observables evaluated on the joint state realize the
    per-side traces of the mixture form.
    """

    terms: Tuple[Tuple[float, State], ...]

    def __post_init__(self):
        terms = tuple((float(p), s) for p, s in self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("decomposition needs at least one term")
        if any(p < -EPS_TOL for p, _ in terms):
            raise ValueError("weights must be non-negative")
        total = sum(p for p, _ in terms)
        if abs(total - 1.0) > EPS_TOL:
            raise ValueError(f"weights sum to {total:.6g}, expected 1")


def check_sep2(
    decomp: ExplicitDecomposition,
    a: Probe,
    b: Probe,
    *,
    tolerance: float = EPS_TOL,
    state_id: str = "",
    a_id: str = "",
    b_id: str = "",
) -> FactorizationReport:
    """Mixed-state factorization check.

    lhs = sum_j p_j <s_j|AB|s_j> is the mixture expectation of the
    product; rhs = sum_j p_j <s_j|A|s_j><s_j|B|s_j> is the separable
    form; the report factorizes iff they agree within tolerance.
    """
    lhs = 0.0 + 0.0j
    rhs = 0.0 + 0.0j
    for p, s in decomp.terms:
        if p < EPS_TOL:
            continue
        term = factorization_gap(s, a, b, tolerance=tolerance)
        lhs += p * term.lhs
        rhs += p * term.rhs
    return FactorizationReport(lhs, rhs, tolerance, state_id, a_id, b_id)


# --- random mode-local probes ---------------------------------------------


def _random_hermitian(k: int, rng: np.random.Generator) -> np.ndarray:
    m = rng.normal(size=(k, k)) + 1j * rng.normal(size=(k, k))
    return (m + m.conj().T) / 2


def _embed(catalog: ModeCatalog, modes: Sequence[int], block: np.ndarray) -> np.ndarray:
    o = np.zeros((len(catalog), len(catalog)), dtype=complex)
    for a, i in enumerate(modes):
        for b, j in enumerate(modes):
            o[i, j] = block[a, b]
    return o


def random_mode_local_probe(
    catalog: ModeCatalog,
    modes: Sequence[int],
    rng: np.random.Generator,
    body: int = 1,
) -> OperatorExpr:
    """Random Hermitian polynomial in the ladder operators of `modes`.

    body=1 draws a one-body element sum O_ij adag_i a_j; body=2 draws a
    Hermitianized product of two such elements (degree four).
    """
    k = len(modes)
    one = lift_single_particle(_embed(catalog, modes, _random_hermitian(k, rng)), catalog)
    if body == 1:
        return one
    if body == 2:
        other = lift_single_particle(_embed(catalog, modes, _random_hermitian(k, rng)), catalog)
        prod = multiply(one, other)
        return (prod + prod.adjoint()).scaled(0.5)
    raise ValueError("body must be 1 or 2")


def sweep_mode_local_gaps(
    state: StateVector,
    bipartition: ModeBipartition,
    *,
    samples: int = DEFAULT_PROBE_SAMPLES,
    seed: int = 0,
    tolerance: float = EPS_TOL,
    state_id: str = "",
) -> List[FactorizationReport]:
    """Factorization reports for `samples` random mode-local probe pairs.

    Alternates one- and two-body probes on each side; the sample count
    and seed are recorded in the probe ids for reproducibility.
    """
    if bipartition.catalog != state.catalog:
        raise ValueError("bipartition catalog does not match the state")
    rng = np.random.default_rng(seed)
    reports = []
    for k in range(samples):
        body_a = 1 + (k % 2)
        body_b = 1 + ((k // 2) % 2)
        a = random_mode_local_probe(state.catalog, bipartition.left, rng, body_a)
        b = random_mode_local_probe(state.catalog, bipartition.right, rng, body_b)
        reports.append(
            factorization_gap(
                state,
                a,
                b,
                tolerance=tolerance,
                state_id=state_id,
                a_id=f"left[{body_a}-body,seed={seed},k={k}]",
                b_id=f"right[{body_b}-body,seed={seed},k={k}]",
            )
        )
    return reports


def max_gap(reports: Sequence[FactorizationReport]) -> float:
    return max((abs(r.gap) for r in reports), default=0.0)


# --- the separable-I counterexample construction ----------------------------


def separable_I_witness(pair) -> Tuple[FirstQTensor, np.ndarray, np.ndarray, float]:
    """Build psi x psi breaking factorization for a nontrivial commuting pair.

    Returns (state, A, B, predicted_gap) with A = P(O1, 1), B = P(O2, 1)
    and psi the equal superposition of two common eigenvectors whose
    eigenvalues differ in both operators, so that the predicted gap is
    (o1_l - o1_k)(o2_l - o2_k)/2.  Raises if either operator is a
    multiple of the identity (then every such gap vanishes).
    """
    from .algebra import ParticleLocalPair
    from .firstq import product_tensor, sym_operator

    if not isinstance(pair, ParticleLocalPair):
        raise TypeError("expected a ParticleLocalPair")
    o1, o2 = pair.o1, pair.o2
    d = pair.dim
    herm = (
        np.linalg.norm(o1 - o1.conj().T) < EPS_TOL
        and np.linalg.norm(o2 - o2.conj().T) < EPS_TOL
    )
    if not herm:
        raise ValueError("witness construction needs Hermitian observables")
    # random real combination lifts degeneracies of the common eigenbasis
    rng = np.random.default_rng(1234)
    for _ in range(32):
        xi = rng.normal()
        _, basis = np.linalg.eigh(o1 + xi * o2)
        e1 = np.diag(basis.conj().T @ o1 @ basis)
        e2 = np.diag(basis.conj().T @ o2 @ basis)
        if (
            np.linalg.norm(basis.conj().T @ o1 @ basis - np.diag(e1)) < 1e-8
            and np.linalg.norm(basis.conj().T @ o2 @ basis - np.diag(e2)) < 1e-8
        ):
            break
    else:
        raise ValueError("failed to find a common eigenbasis")
    for lam in range(d):
        for kap in range(lam + 1, d):
            d1 = (e1[lam] - e1[kap]).real
            d2 = (e2[lam] - e2[kap]).real
            if abs(d1) > EPS_TOL and abs(d2) > EPS_TOL:
                psi = (basis[:, lam] + basis[:, kap]) / np.sqrt(2)
                state = product_tensor([psi, psi])
                a = sym_operator([o1, np.eye(d)])
                b = sym_operator([o2, np.eye(d)])
                return state, a, b, 0.5 * d1 * d2
    raise ValueError("both operators act trivially on every eigenvector pair")
