"""First-quantization tensors and the bridges into second quantization.

An N-particle state over a d-dimensional single-particle space is a
dense rank-N complex tensor.  This module provides permutation
operators, the (anti-)symmetrization projectors, symmetrized operators
built from single-particle matrices, the norm-preserving map between
(anti-)symmetric tensors and Fock vectors, and the isometry that turns
states with frozen orthogonal external degrees of freedom into ordinary
distinguishable-particle tensors over the internal space.

Permutation convention, stated once and tested by composition: for a
permutation p (0-based tuple), slot j of permute(p, t) holds the content
of slot p[j], so on product states permute(p, v_0 x ... x v_{N-1}) has
v_{p[j]} in slot j.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .config import EPS_DROP, EPS_TOL, MAX_PARTICLES
from .fock import ModeCatalog, StateVector, Statistics

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"

_SYMTAG_FOR = {Statistics.BOSE: SYMMETRIC, Statistics.FERMI: ANTISYMMETRIC}


@dataclass(frozen=True)
class FirstQTensor:
    """Rank-N complex tensor over a d-dimensional single-particle space.

    `symtag` is verified at construction: swapping any adjacent pair of
    slots must multiply the tensor by +1 (symmetric) or -1
    (antisymmetric) within EPS_TOL, relative to the tensor norm.
    """

    amps: np.ndarray
    symtag: Optional[str] = None

    def __post_init__(self):
        arr = np.asarray(self.amps, dtype=complex)
        if arr.ndim == 0:
            raise ValueError("tensor needs at least one slot")
        if len(set(arr.shape)) != 1:
            raise ValueError(f"all slots must share one dimension, got shape {arr.shape}")
        if arr.ndim > MAX_PARTICLES:
            raise ValueError(f"at most {MAX_PARTICLES} particles supported")
        object.__setattr__(self, "amps", arr)
        if self.symtag is not None:
            if self.symtag not in (SYMMETRIC, ANTISYMMETRIC):
                raise ValueError(f"unknown symtag {self.symtag!r}")
            sign = 1.0 if self.symtag == SYMMETRIC else -1.0
            scale = max(np.linalg.norm(arr), 1.0)
            for k in range(arr.ndim - 1):
                swapped = np.swapaxes(arr, k, k + 1)
                if np.linalg.norm(swapped - sign * arr) > EPS_TOL * scale:
                    raise ValueError(f"tensor is not {self.symtag} on slots ({k},{k + 1})")

    @property
    def d(self) -> int:
        return self.amps.shape[0]

    @property
    def n_particles(self) -> int:
        return self.amps.ndim

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> "FirstQTensor":
        n = self.norm()
        if n < EPS_DROP:
            raise ValueError("cannot normalize a zero tensor")
        return FirstQTensor(self.amps / n, self.symtag)

    def __add__(self, other: "FirstQTensor") -> "FirstQTensor":
        if other.amps.shape != self.amps.shape:
            raise ValueError("shape mismatch")
        tag = self.symtag if self.symtag == other.symtag else None
        return FirstQTensor(self.amps + other.amps, tag)

    def __sub__(self, other: "FirstQTensor") -> "FirstQTensor":
        return self + other * (-1.0)

    def __mul__(self, scalar: complex) -> "FirstQTensor":
        return FirstQTensor(self.amps * complex(scalar), self.symtag)

    __rmul__ = __mul__


@dataclass(frozen=True)
class SingleParticleBasis:
    """Single-particle basis, optionally factored as external x internal.

    When factored, the flat index of (external e, internal i) is
    e * len(internal) + i, so internal labels vary fastest.
    """

    dim: int
    external: Optional[Tuple[str, ...]] = None
    internal: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if (self.external is None) != (self.internal is None):
            raise ValueError("external and internal labels come together or not at all")
        if self.external is not None:
            ext = tuple(self.external)
            intl = tuple(self.internal)
            object.__setattr__(self, "external", ext)
            object.__setattr__(self, "internal", intl)
            if len(ext) * len(intl) != self.dim:
                raise ValueError("factorization does not match dimension")

    @property
    def d_ext(self) -> int:
        return len(self.external) if self.external else 1

    @property
    def d_int(self) -> int:
        return len(self.internal) if self.internal else self.dim

    def flat_index(self, ext_label: str, int_label: str) -> int:
        if self.external is None:
            raise ValueError("basis is not factored")
        return self.external.index(ext_label) * len(self.internal) + self.internal.index(int_label)

    def labels(self) -> Tuple[str, ...]:
        if self.external is None:
            return tuple(str(k) for k in range(self.dim))
        return tuple(f"{e},{i}" for e in self.external for i in self.internal)


def product_tensor(vectors: Sequence[np.ndarray]) -> FirstQTensor:
    """Plain tensor product v_0 x ... x v_{N-1}."""
    out = np.asarray(vectors[0], dtype=complex)
    for v in vectors[1:]:
        out = np.tensordot(out, np.asarray(v, dtype=complex), axes=0)
    return FirstQTensor(out)


def permute(pi: Sequence[int], t: FirstQTensor) -> FirstQTensor:
    """Apply the permutation operator: slot j of the result holds slot pi[j]."""
    n = t.n_particles
    pi = tuple(int(x) for x in pi)
    if sorted(pi) != list(range(n)):
        raise ValueError(f"{pi} is not a permutation of 0..{n - 1}")
    return FirstQTensor(np.transpose(t.amps, axes=pi), None)


def permutation_parity(pi: Sequence[int]) -> int:
    """Parity sign of a permutation given in one-line notation."""
    pi = list(pi)
    sign = 1
    seen = [False] * len(pi)
    for start in range(len(pi)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = pi[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symmetrize(t: FirstQTensor, statistics: Statistics) -> FirstQTensor:
    """Apply the (anti-)symmetrization projector (1/N!) sum_pi (+-1)^pi Pi_pi."""
    statistics = Statistics(statistics)
    n = t.n_particles
    acc = np.zeros_like(t.amps)
    for pi in itertools.permutations(range(n)):
        sign = 1 if statistics is Statistics.BOSE else permutation_parity(pi)
        acc += sign * np.transpose(t.amps, axes=pi)
    acc /= math.factorial(n)
    return FirstQTensor(acc, _SYMTAG_FOR[statistics])


def apply_each(u: np.ndarray, t: FirstQTensor) -> FirstQTensor:
    """Apply the collective operator U x U x ... x U (one U per slot)."""
    u = np.asarray(u, dtype=complex)
    amps = t.amps
    n = t.n_particles
    for axis in range(n):
        amps = np.moveaxis(np.tensordot(u, amps, axes=([1], [axis])), 0, axis)
    return FirstQTensor(amps, t.symtag)


def sym_operator(ops: Sequence[np.ndarray]) -> np.ndarray:
    """Permutation-invariant operator sum_pi O_{pi(0)} x ... x O_{pi(N-1)}.

    For two matrices this is O1 x O2 + O2 x O1.  Returns a dense matrix
    on (C^d)^(x N).
    """
    mats = [np.asarray(o, dtype=complex) for o in ops]
    d = mats[0].shape[0]
    for m in mats:
        if m.shape != (d, d):
            raise ValueError("all single-particle matrices must be d x d")
    n = len(mats)
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    for pi in itertools.permutations(range(n)):
        term = mats[pi[0]]
        for j in range(1, n):
            term = np.kron(term, mats[pi[j]])
        out += term
    return out


def expectation_matrix(t: FirstQTensor, op: np.ndarray) -> complex:
    """<t| op |t> for a dense operator on the full N-slot space."""
    v = t.amps.reshape(-1)
    op = np.asarray(op, dtype=complex)
    if op.shape != (v.size, v.size):
        raise ValueError(f"operator shape {op.shape} does not match state dimension {v.size}")
    return complex(np.vdot(v, op @ v))


def rdm1(t: FirstQTensor) -> np.ndarray:
    """Single-particle reduced density matrix of a normalized pure tensor."""
    m = t.amps.reshape(t.d, -1)
    rho = m @ m.conj().T
    tr = np.trace(rho).real
    if tr < EPS_DROP:
        raise ValueError("zero state has no reduced density matrix")
    return rho / tr


def slot_schmidt_values(t: FirstQTensor, k: int) -> np.ndarray:
    """Schmidt coefficients across the slot cut (0..k-1 | k..N-1)."""
    if not 0 < k < t.n_particles:
        raise ValueError("cut must leave slots on both sides")
    m = t.amps.reshape(t.d**k, -1)
    return np.linalg.svd(m, compute_uv=False)


def _occupations(modes: int, total: int) -> Iterable[Tuple[int, ...]]:
    if modes == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _occupations(modes - 1, total - head):
            yield (head,) + rest


def sector_occupations(catalog: ModeCatalog, n_particles: int) -> Tuple[Tuple[int, ...], ...]:
    """Deterministically ordered occupation basis of the N-particle sector."""
    occs = [
        occ
        for occ in _occupations(len(catalog), n_particles)
        if not (catalog.is_fermi and any(n > 1 for n in occ))
    ]
    return tuple(sorted(occs))


def _ascending_indices(occ: Sequence[int]) -> Tuple[int, ...]:
    out: Tuple[int, ...] = ()
    for mode, n in enumerate(occ):
        out += (mode,) * n
    return out


def _occ_weight(occ: Sequence[int]) -> float:
    # sqrt(N! / prod n_i!): ratio between the Fock amplitude and the
    # first-quantized amplitude at the ascending multi-index.
    n = sum(occ)
    w = math.factorial(n)
    for k in occ:
        w //= math.factorial(k)
    return math.sqrt(w)


def to_fock(t: FirstQTensor, catalog: ModeCatalog) -> StateVector:
    """Norm-preserving map from an (anti-)symmetric tensor to a Fock vector.

    Mode k of the catalog is identified with single-particle basis
    vector k.  The tensor's symmetry tag must match the catalog
    statistics; asymmetric input is an error, never silently projected.
    """
    want = _SYMTAG_FOR[catalog.statistics]
    if t.symtag != want:
        raise ValueError(f"tensor symtag {t.symtag!r} does not match {catalog.statistics.value} statistics")
    if t.d != len(catalog):
        raise ValueError(f"single-particle dimension {t.d} != catalog size {len(catalog)}")
    n = t.n_particles
    amps = {}
    for occ in sector_occupations(catalog, n):
        idx = _ascending_indices(occ)
        amp = t.amps[idx] * _occ_weight(occ)
        if abs(amp) >= EPS_DROP:
            amps[occ] = complex(amp)
    return StateVector(catalog, amps)


def from_fock(s: StateVector) -> FirstQTensor:
    """Inverse of to_fock; requires a single particle-number sector."""
    sectors = s.particle_numbers()
    if len(sectors) != 1:
        raise ValueError(f"state spans sectors {sectors}; a first-quantized tensor needs exactly one")
    n = sectors[0]
    if n == 0:
        raise ValueError("the vacuum has no first-quantized tensor")
    d = len(s.catalog)
    fermi = s.catalog.is_fermi
    amps = np.zeros((d,) * n, dtype=complex)
    for occ, amp in s.terms():
        asc = _ascending_indices(occ)
        # Every distinct arrangement of the ascending multi-index carries
        # amp * sqrt(prod n! / N!), signed by the sorting parity for fermions.
        base = amp / _occ_weight(occ)
        seen = set()
        for pi in itertools.permutations(range(n)):
            idx = tuple(asc[pi[j]] for j in range(n))
            if idx in seen:
                continue
            seen.add(idx)
            sign = permutation_parity(pi) if fermi else 1
            amps[idx] += sign * base
    return FirstQTensor(amps, _SYMTAG_FOR[s.catalog.statistics])


def effective_distinguish(
    t: FirstQTensor,
    external_states: Sequence[np.ndarray],
    basis: SingleParticleBasis,
) -> FirstQTensor:
    """Relabel frozen external degrees of freedom into particle slots.

    Given N pairwise orthonormal external states psi_j, maps
    sqrt(N!) * S[ (x)_j |psi_j, sigma_j> ]  to  (x)_j |sigma_j>,
    an isometry from the localized subspace onto the plain tensor
    product of internal spaces.  Input with weight outside that
    subspace (relative to EPS_TOL) is rejected.
    """
    if basis.external is None:
        raise ValueError("basis must declare an external/internal factorization")
    if t.symtag is None:
        raise ValueError("input must be (anti-)symmetric")
    n = t.n_particles
    if len(external_states) != n:
        raise ValueError("need one external state per particle")
    ext = [np.asarray(p, dtype=complex) for p in external_states]
    de, di = basis.d_ext, basis.d_int
    if any(p.shape != (de,) for p in ext):
        raise ValueError("external states must live in the external factor")
    gram = np.array([[np.vdot(a, b) for b in ext] for a in ext])
    if np.linalg.norm(gram - np.eye(n)) > EPS_TOL:
        raise ValueError("external states must be pairwise orthonormal")

    statistics = Statistics.BOSE if t.symtag == SYMMETRIC else Statistics.FERMI
    root = math.sqrt(math.factorial(n))
    internal = np.eye(di, dtype=complex)
    out = np.zeros((di,) * n, dtype=complex)
    for sigmas in itertools.product(range(di), repeat=n):
        # <(x)_j (psi_j, sigma_j), t> equals <S[...], t> because t is
        # already in the image of the projector.
        vec = t.amps
        for j in range(n):
            single = np.kron(ext[j], internal[sigmas[j]])
            vec = np.tensordot(single.conj(), vec, axes=([0], [0]))
        out[sigmas] = root * complex(vec)

    # Verify t actually lives in the localized subspace.
    recon = np.zeros_like(t.amps)
    for sigmas in itertools.product(range(di), repeat=n):
        if abs(out[sigmas]) < EPS_DROP:
            continue
        prod = product_tensor([np.kron(ext[j], internal[sigmas[j]]) for j in range(n)])
        recon = recon + out[sigmas] * root * symmetrize(prod, statistics).amps
    scale = max(t.norm(), 1.0)
    if np.linalg.norm(recon - t.amps) > EPS_TOL * scale:
        raise ValueError("state has weight outside the effectively distinguishable subspace")
    return FirstQTensor(out, None)
