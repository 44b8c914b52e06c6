"""Observables as normally ordered ladder-monomial sums.

One representation serves both mode-local and particle-local
subalgebras: an operator is a finite complex combination of terms
adag_{c1}..adag_{ck} a_{d1}..a_{dl} with each index block stored in
ascending catalog order.  Products are rewritten into normal order with
the canonical (anti-)commutation relations, so applying a product to a
state equals sequential application by construction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .config import EPS_DROP, EPS_TOL, MAX_PARTICLES
from .firstq import FirstQTensor, expectation_matrix, sector_occupations
from .fock import ModeCatalog, StateVector, apply_annihilate, apply_create, inner

TermKey = Tuple[Tuple[int, ...], Tuple[int, ...]]  # (creations asc, annihilations asc)


def _sort_block(indices: Sequence[int], fermi: bool) -> Tuple[Tuple[int, ...], int]:
    """Ascending canonical order of a creation (or annihilation) block.

    Bosonic reordering is free; fermionic adjacent swaps contribute -1
    and a repeated fermionic index kills the term (sign 0).
    """
    idx = list(indices)
    if fermi and len(set(idx)) != len(idx):
        return (), 0
    sign = 1
    # insertion sort, counting inversions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            if fermi:
                sign = -sign
            j -= 1
    return tuple(idx), sign


def _normal_order(seq: List[Tuple[bool, int]], coeff: complex, fermi: bool) -> Dict[TermKey, complex]:
    """Rewrite a ladder string into normal order via CCR/CAR.

    `seq` lists (is_creation, mode) left to right.  Bose: a_i adag_j =
    delta_ij + adag_j a_i; Fermi: a_i adag_j = delta_ij - adag_j a_i.
    """
    out: Dict[TermKey, complex] = {}
    stack = [(seq, coeff)]
    while stack:
        s, c = stack.pop()
        if abs(c) < EPS_DROP:
            continue
        pos = -1
        for k in range(len(s) - 1):
            if (not s[k][0]) and s[k + 1][0]:
                pos = k
                break
        if pos < 0:
            creations = [m for kind, m in s if kind]
            annihilations = [m for kind, m in s if not kind]
            cre, sign_c = _sort_block(creations, fermi)
            ann, sign_a = _sort_block(annihilations, fermi)
            if sign_c and sign_a:
                key = (cre, ann)
                out[key] = out.get(key, 0.0) + c * sign_c * sign_a
            continue
        i, j = s[pos][1], s[pos + 1][1]
        swapped = s[:pos] + [s[pos + 1], s[pos]] + s[pos + 2 :]
        stack.append((swapped, -c if fermi else c))
        if i == j:
            stack.append((s[:pos] + s[pos + 2 :], c))
    return {k: v for k, v in out.items() if abs(v) >= EPS_DROP}


class OperatorExpr:
    """Finite sum of normally ordered ladder monomials over one catalog."""

    __slots__ = ("catalog", "_terms")

    def __init__(self, catalog: ModeCatalog, terms: Dict[TermKey, complex]):
        self.catalog = catalog
        clean: Dict[TermKey, complex] = {}
        m = len(catalog)
        for (cre, ann), coeff in terms.items():
            for idx in (*cre, *ann):
                if not 0 <= idx < m:
                    raise ValueError(f"mode index {idx} outside catalog of size {m}")
            if catalog.is_fermi and (len(set(cre)) != len(cre) or len(set(ann)) != len(ann)):
                raise ValueError("repeated fermionic index within a monomial block")
            z = complex(coeff)
            if abs(z) >= EPS_DROP:
                clean[(tuple(cre), tuple(ann))] = z
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, catalog: ModeCatalog) -> "OperatorExpr":
        return cls(catalog, {})

    @classmethod
    def identity(cls, catalog: ModeCatalog, coeff: complex = 1.0) -> "OperatorExpr":
        return cls(catalog, {((), ()): coeff})

    @classmethod
    def ladder(
        cls,
        catalog: ModeCatalog,
        create: Sequence[int] = (),
        annihilate: Sequence[int] = (),
        coeff: complex = 1.0,
    ) -> "OperatorExpr":
        """Monomial adag_{create} a_{annihilate}; blocks are canonicalized."""
        fermi = catalog.is_fermi
        cre, sc = _sort_block(create, fermi)
        ann, sa = _sort_block(annihilate, fermi)
        if sc == 0 or sa == 0:
            return cls.zero(catalog)
        return cls(catalog, {(cre, ann): coeff * sc * sa})

    # -- algebra -------------------------------------------------------------

    @property
    def terms(self) -> Dict[TermKey, complex]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        self._check(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0.0) + c
        return OperatorExpr(self.catalog, terms)

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return self + other.scaled(-1.0)

    def scaled(self, z: complex) -> "OperatorExpr":
        return OperatorExpr(self.catalog, {k: complex(z) * c for k, c in self._terms.items()})

    def __mul__(self, other: Union["OperatorExpr", complex]) -> "OperatorExpr":
        if isinstance(other, OperatorExpr):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, other: complex) -> "OperatorExpr":
        return self.scaled(other)

    def adjoint(self) -> "OperatorExpr":
        fermi = self.catalog.is_fermi
        terms: Dict[TermKey, complex] = {}
        for (cre, ann), c in self._terms.items():
            sign = 1
            if fermi:
                # reversing each block of k distinct operators costs (-1)^{k(k-1)/2}
                k1, k2 = len(cre), len(ann)
                if (k1 * (k1 - 1) // 2 + k2 * (k2 - 1) // 2) % 2:
                    sign = -1
            key = (ann, cre)
            terms[key] = terms.get(key, 0.0) + sign * c.conjugate()
        return OperatorExpr(self.catalog, terms)

    def is_hermitian(self, tol: float = EPS_TOL) -> bool:
        diff = self - self.adjoint()
        return all(abs(c) <= tol for c in diff._terms.values())

    def apply(self, s: StateVector) -> StateVector:
        self._check_state(s)
        total = StateVector(self.catalog, {})
        for (cre, ann), coeff in self._terms.items():
            # rightmost ladder operator acts first
            piece = s
            for mode in reversed(ann):
                piece = apply_annihilate(mode, piece)
            for mode in reversed(cre):
                piece = apply_create(mode, piece)
            if not piece.is_zero:
                total = total + piece * coeff
        return total

    def _check(self, other: "OperatorExpr") -> None:
        if other.catalog != self.catalog:
            raise ValueError("operator catalogs differ")

    def _check_state(self, s: StateVector) -> None:
        if s.catalog != self.catalog:
            raise ValueError("state catalog does not match operator catalog")

    def __repr__(self) -> str:
        def fmt(key):
            cre, ann = key
            c = "".join(f"adag({self.catalog.labels[i]})" for i in cre) or ""
            a = "".join(f"a({self.catalog.labels[i]})" for i in ann) or ""
            return (c + a) or "1"

        body = " + ".join(f"({c:.6g})*{fmt(k)}" for k, c in sorted(self._terms.items()))
        return f"OperatorExpr[{body or '0'}]"


def multiply(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """Operator product, re-expressed in normal order via CCR/CAR."""
    a._check(b)
    fermi = a.catalog.is_fermi
    terms: Dict[TermKey, complex] = {}
    for (c1, d1), x in a._terms.items():
        for (c2, d2), y in b._terms.items():
            seq = (
                [(True, m) for m in c1]
                + [(False, m) for m in d1]
                + [(True, m) for m in c2]
                + [(False, m) for m in d2]
            )
            for key, coeff in _normal_order(seq, x * y, fermi).items():
                terms[key] = terms.get(key, 0.0) + coeff
    return OperatorExpr(a.catalog, terms)


def commutator(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    return multiply(a, b) - multiply(b, a)


def lift_single_particle(o: np.ndarray, catalog: ModeCatalog) -> OperatorExpr:
    """Second-quantized one-body operator sum_ij O_ij adag_i a_j."""
    o = np.asarray(o, dtype=complex)
    m = len(catalog)
    if o.shape != (m, m):
        raise ValueError(f"matrix shape {o.shape} does not match catalog of size {m}")
    terms: Dict[TermKey, complex] = {}
    for i in range(m):
        for j in range(m):
            if abs(o[i, j]) >= EPS_DROP:
                terms[((i,), (j,))] = o[i, j]
    return OperatorExpr(catalog, terms)


def number_operator(catalog: ModeCatalog) -> OperatorExpr:
    return lift_single_particle(np.eye(len(catalog)), catalog)


def sector_matrix(op: OperatorExpr, n_particles: int) -> Tuple[np.ndarray, Tuple, Tuple]:
    """Dense matrix of `op` from the N-particle sector into the sectors it reaches.

    Returns (matrix, row_occupations, column_occupations); rows cover the
    union of occupations produced, columns the N-particle basis.
    """
    if n_particles > MAX_PARTICLES:
        raise ValueError(f"sector {n_particles} exceeds particle bound {MAX_PARTICLES}")
    cols = sector_occupations(op.catalog, n_particles)
    images = [op.apply(StateVector(op.catalog, {occ: 1.0})) for occ in cols]
    rows = sorted({occ for img in images for occ, _ in img.terms()} | set(cols))
    row_index = {occ: k for k, occ in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=complex)
    for c, img in enumerate(images):
        for occ, amp in img.terms():
            mat[row_index[occ], c] = amp
    return mat, tuple(rows), cols


def operator_norm(op: OperatorExpr, n_particles: int) -> float:
    """Largest singular value of the dense sector realization."""
    mat, _, _ = sector_matrix(op, n_particles)
    if mat.size == 0:
        return 0.0
    return float(np.linalg.svd(mat, compute_uv=False)[0])


def commutator_norm(a: OperatorExpr, b: OperatorExpr, n_particles: int) -> float:
    """Operator norm of [a, b] restricted to the N-particle sector."""
    return operator_norm(commutator(a, b), n_particles)


def expectation(
    state: Union[StateVector, FirstQTensor],
    op: Union[OperatorExpr, np.ndarray],
    *,
    warn_unnormalized: bool = True,
) -> complex:
    """<state| op |state> for ladder expressions or dense sector matrices."""
    if isinstance(state, StateVector):
        if not isinstance(op, OperatorExpr):
            raise TypeError("a StateVector takes an OperatorExpr observable")
        norm = state.norm()
        if warn_unnormalized and abs(norm - 1.0) > EPS_TOL:
            warnings.warn(f"state norm {norm:.6g} != 1; expectation not normalized", stacklevel=2)
        return inner(state, op.apply(state))
    if isinstance(state, FirstQTensor):
        if isinstance(op, OperatorExpr):
            raise TypeError("a FirstQTensor takes a dense matrix observable")
        norm = state.norm()
        if warn_unnormalized and abs(norm - 1.0) > EPS_TOL:
            warnings.warn(f"state norm {norm:.6g} != 1; expectation not normalized", stacklevel=2)
        return expectation_matrix(state, np.asarray(op, dtype=complex))
    raise TypeError(f"unsupported state type {type(state).__name__}")


# --- declared operator subalgebras ---------------------------------------


@dataclass(frozen=True)
class ParticleLocalPair:
    """Two commuting single-particle observables; probes are P(O_j, 1...1).

    Admission requires numerically commuting matrices: non-commuting
    input is rejected, never symmetrized.
    """

    o1: np.ndarray
    o2: np.ndarray

    def __post_init__(self):
        o1 = np.asarray(self.o1, dtype=complex)
        o2 = np.asarray(self.o2, dtype=complex)
        if o1.shape != o2.shape or o1.ndim != 2 or o1.shape[0] != o1.shape[1]:
            raise ValueError("need two square matrices of equal dimension")
        if np.linalg.norm(o1 @ o2 - o2 @ o1) > EPS_TOL:
            raise ValueError("single-particle operators must commute")
        object.__setattr__(self, "o1", o1)
        object.__setattr__(self, "o2", o2)

    @property
    def dim(self) -> int:
        return self.o1.shape[0]


@dataclass(frozen=True)
class ModeBipartition:
    """Disjoint mode index sets whose union is the whole catalog."""

    catalog: ModeCatalog
    left: Tuple[int, ...]
    right: Tuple[int, ...]

    def __post_init__(self):
        left = tuple(sorted(int(i) for i in self.left))
        right = tuple(sorted(int(i) for i in self.right))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if set(left) & set(right):
            raise ValueError("bipartition blocks overlap")
        if set(left) | set(right) != set(range(len(self.catalog))):
            raise ValueError("bipartition must cover the whole catalog")
        if not left or not right:
            raise ValueError("both blocks must be non-empty")

    @classmethod
    def from_labels(cls, catalog: ModeCatalog, left_labels: Iterable[str]) -> "ModeBipartition":
        left = tuple(catalog.index(l) for l in left_labels)
        right = tuple(i for i in range(len(catalog)) if i not in left)
        return cls(catalog, left, right)


@dataclass(frozen=True)
class SectorLocal:
    """Orthogonal single-particle subspaces V1, V2 given by orthonormal columns."""

    v1: np.ndarray
    v2: np.ndarray

    def __post_init__(self):
        v1 = np.atleast_2d(np.asarray(self.v1, dtype=complex))
        v2 = np.atleast_2d(np.asarray(self.v2, dtype=complex))
        if v1.shape[0] != v2.shape[0]:
            raise ValueError("subspace bases must share the ambient dimension")
        for name, v in (("V1", v1), ("V2", v2)):
            gram = v.conj().T @ v
            if np.linalg.norm(gram - np.eye(v.shape[1])) > EPS_TOL:
                raise ValueError(f"{name} basis is not orthonormal")
        if np.linalg.norm(v1.conj().T @ v2) > EPS_TOL:
            raise ValueError("V1 and V2 are not orthogonal")
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    @property
    def dim(self) -> int:
        return self.v1.shape[0]


SubalgebraSpec = Union[ParticleLocalPair, ModeBipartition, SectorLocal]
