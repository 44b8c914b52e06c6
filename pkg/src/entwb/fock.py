"""Occupation-number representation of multi-mode Fock states.

States are sparse complex maps over occupation tuples of a fixed mode
catalog.  Creation and annihilation act exactly: bosonic ladder factors
are sqrt(n), fermionic signs follow a Jordan-Wigner string counted
against the catalog order.  That single ordering convention is the sign
authority for every other module (first/second quantization bridges,
mode-bipartition reshaping).

Everything here is immutable and pure: operations return new state
vectors and never touch their inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, Tuple

from .config import EPS_DROP, MAX_MODES


class Statistics(str, Enum):
    BOSE = "bose"
    FERMI = "fermi"


# Fock basis label: one non-negative occupation per catalog mode.
OccupationState = Tuple[int, ...]


@dataclass(frozen=True)
class ModeCatalog:
    """Ordered set of mode labels plus the particle statistics.

    The label order is fixed at construction and defines the fermionic
    sign convention; two catalogs with the same labels in a different
    order are different catalogs.
    """

    labels: Tuple[str, ...]
    statistics: Statistics

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "statistics", Statistics(self.statistics))
        if len(set(labels)) != len(labels):
            raise ValueError(f"mode labels must be distinct, got {labels}")
        if not labels:
            raise ValueError("catalog needs at least one mode")
        if len(labels) > MAX_MODES:
            raise ValueError(f"at most {MAX_MODES} modes supported, got {len(labels)}")

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def is_fermi(self) -> bool:
        return self.statistics is Statistics.FERMI

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown mode label {label!r}; catalog has {self.labels}") from None


# Sparse states may hold any occupancies consistent with the statistics;
# the MAX_PARTICLES bound is enforced where dense sector matrices are built.
def _validate_occ(catalog: ModeCatalog, occ: OccupationState) -> None:
    if len(occ) != len(catalog):
        raise ValueError(f"occupation {occ} does not match catalog of size {len(catalog)}")
    for n in occ:
        if n < 0:
            raise ValueError(f"negative occupation in {occ}")
        if catalog.is_fermi and n > 1:
            raise ValueError(f"fermionic occupation exceeds 1 in {occ}")


class StateVector:
    """Sparse complex amplitude map over occupation states.

    May span several particle-number sectors.  Amplitudes with magnitude
    below EPS_DROP are pruned at construction.
    """

    __slots__ = ("catalog", "_amps")

    def __init__(self, catalog: ModeCatalog, amps: Dict[OccupationState, complex]):
        self.catalog = catalog
        clean: Dict[OccupationState, complex] = {}
        for occ, amp in amps.items():
            occ = tuple(int(n) for n in occ)
            _validate_occ(catalog, occ)
            z = complex(amp)
            if abs(z) >= EPS_DROP:
                clean[occ] = z
        self._amps = clean

    @property
    def amps(self) -> Dict[OccupationState, complex]:
        return dict(self._amps)

    def amplitude(self, occ: OccupationState) -> complex:
        return self._amps.get(tuple(occ), 0.0 + 0.0j)

    def terms(self) -> Iterator[Tuple[OccupationState, complex]]:
        return iter(self._amps.items())

    def __len__(self) -> int:
        return len(self._amps)

    @property
    def is_zero(self) -> bool:
        return not self._amps

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self._amps.values()))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n < EPS_DROP:
            raise ValueError("cannot normalize a zero state")
        return self * (1.0 / n)

    def particle_numbers(self) -> Tuple[int, ...]:
        """Sorted particle-number sectors carrying weight."""
        return tuple(sorted({sum(occ) for occ in self._amps}))

    def __add__(self, other: "StateVector") -> "StateVector":
        if other.catalog != self.catalog:
            raise ValueError("catalog mismatch")
        amps = dict(self._amps)
        for occ, amp in other._amps.items():
            amps[occ] = amps.get(occ, 0.0) + amp
        return StateVector(self.catalog, amps)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + (other * (-1.0))

    def __mul__(self, scalar: complex) -> "StateVector":
        z = complex(scalar)
        return StateVector(self.catalog, {occ: z * amp for occ, amp in self._amps.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = " + ".join(
            f"({amp:.6g})|{','.join(map(str, occ))}>" for occ, amp in sorted(self._amps.items())
        )
        return f"StateVector[{self.catalog.statistics.value}: {body or '0'}]"


def vacuum(catalog: ModeCatalog) -> StateVector:
    """The Fock vacuum: all occupancies zero, amplitude one."""
    return StateVector(catalog, {(0,) * len(catalog): 1.0})


def basis_state(catalog: ModeCatalog, occ: OccupationState) -> StateVector:
    return StateVector(catalog, {tuple(occ): 1.0})


def _check_mode(catalog: ModeCatalog, mode: int) -> None:
    if not 0 <= mode < len(catalog):
        raise IndexError(f"mode index {mode} out of range for catalog of size {len(catalog)}")


def _jw_sign(occ: OccupationState, mode: int) -> int:
    # Jordan-Wigner string: parity of the occupations strictly below `mode`
    # in catalog order.
    return -1 if sum(occ[:mode]) % 2 else 1


def apply_create(mode: int, s: StateVector) -> StateVector:
    """Apply the creation operator of `mode` to every term of `s`."""
    _check_mode(s.catalog, mode)
    fermi = s.catalog.is_fermi
    amps: Dict[OccupationState, complex] = {}
    for occ, amp in s.terms():
        n = occ[mode]
        if fermi:
            if n == 1:
                continue
            factor = _jw_sign(occ, mode)
        else:
            factor = math.sqrt(n + 1)
        new = occ[:mode] + (n + 1,) + occ[mode + 1 :]
        amps[new] = amps.get(new, 0.0) + factor * amp
    return StateVector(s.catalog, amps)


def apply_annihilate(mode: int, s: StateVector) -> StateVector:
    """Apply the annihilation operator of `mode`; kills the vacuum."""
    _check_mode(s.catalog, mode)
    fermi = s.catalog.is_fermi
    amps: Dict[OccupationState, complex] = {}
    for occ, amp in s.terms():
        n = occ[mode]
        if n == 0:
            continue
        factor = _jw_sign(occ, mode) if fermi else math.sqrt(n)
        new = occ[:mode] + (n - 1,) + occ[mode + 1 :]
        amps[new] = amps.get(new, 0.0) + factor * amp
    return StateVector(s.catalog, amps)


def inner(s1: StateVector, s2: StateVector) -> complex:
    """Hermitian inner product, conjugate-linear in the first argument."""
    if s1.catalog != s2.catalog:
        raise ValueError("catalog mismatch")
    if len(s1) <= len(s2):
        return sum(
            (amp.conjugate() * s2.amplitude(occ) for occ, amp in s1.terms()),
            start=0.0 + 0.0j,
        )
    return sum(
        (s1.amplitude(occ).conjugate() * amp for occ, amp in s2.terms()),
        start=0.0 + 0.0j,
    )
