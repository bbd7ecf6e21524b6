"""Particle kinematics: momentum states, polar directions, four-vectors.

Three equivalent parametrizations of a massive particle's motion are
supported and kept mutually consistent:

* Cartesian momentum ``p`` with energy branches ``E = +/- R``,
  ``R = sqrt(c^2 p^2 + m^2 c^4)``;
* rapidity ``th`` with ``E = m c^2 cosh(th)``, ``|p| = m c sinh(th)``;
* the subluminal parameter ``eta = tanh(th/2) = c|p| / (R + m c^2)`` on
  ``[0, 1)``, which rationalizes all half-angle formulas.

Natural units (c = hbar = 1) are the default, but both constants stay
explicit fields so dimensional factors can be exercised with c != 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import EtaOutOfRange, MasslessState


class EnergyBranch(Enum):
    """Sign of the energy eigenvalue, E = sign * R."""

    POSITIVE = 1
    NEGATIVE = -1

    @property
    def sign(self) -> int:
        return self.value


@dataclass(frozen=True)
class PhysicalConstants:
    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if not (self.c > 0 and self.hbar > 0):
            raise ValueError("physical constants must be strictly positive")


NATURAL_UNITS = PhysicalConstants()


@dataclass(frozen=True)
class PolarAngles:
    """Spherical direction (theta, phi); theta clamped to [0, pi], phi mod 2 pi."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", min(max(float(self.theta), 0.0), math.pi))
        object.__setattr__(self, "phi", float(self.phi) % (2.0 * math.pi))


def direction(angles: PolarAngles) -> np.ndarray:
    """Unit vector (sin th cos ph, sin th sin ph, cos th).

    The third component is cos(theta); see the documented-deviations section
    of the verification report for the one printed source that disagrees.
    """
    st, ct = math.sin(angles.theta), math.cos(angles.theta)
    sp, cp = math.sin(angles.phi), math.cos(angles.phi)
    n = np.array([st * cp, st * sp, ct])
    n.setflags(write=False)
    return n


def angles_of(v) -> PolarAngles:
    """Polar angles of a nonzero 3-vector."""
    v = np.asarray(v, dtype=float)
    r = float(np.linalg.norm(v))
    if r == 0.0:
        raise ValueError("zero vector has no direction")
    return PolarAngles(math.acos(max(-1.0, min(1.0, v[2] / r))), math.atan2(v[1], v[0]))


@dataclass(frozen=True, eq=False)
class FourVector:
    """Contravariant four-vector a^mu = (a0, a) with metric diag(1,-1,-1,-1)."""

    t: float
    r: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        r = np.array(self.r, dtype=float)
        if r.shape != (3,):
            raise ValueError("spatial part must be a 3-vector")
        r.setflags(write=False)
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "r", r)

    def as_array(self) -> np.ndarray:
        return np.concatenate(([self.t], self.r))

    def __iter__(self):
        return iter(self.as_array())


def minkowski_dot(a: FourVector, b: FourVector) -> float:
    return a.t * b.t - float(np.dot(a.r, b.r))


@dataclass(frozen=True, eq=False)
class MomentumState:
    """Mass, momentum, and unit system of a free particle; m >= 0."""

    m: float
    p: np.ndarray
    constants: PhysicalConstants = NATURAL_UNITS

    def __post_init__(self):
        p = np.array(self.p, dtype=float)
        if p.shape != (3,):
            raise ValueError("momentum must be a 3-vector")
        if self.m < 0:
            raise ValueError("mass must be nonnegative")
        p.setflags(write=False)
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "p", p)

    @property
    def c(self) -> float:
        return self.constants.c

    @property
    def hbar(self) -> float:
        return self.constants.hbar

    @property
    def p_abs(self) -> float:
        return float(np.linalg.norm(self.p))

    @property
    def rest_energy(self) -> float:
        return self.m * self.c**2

    @property
    def R(self) -> float:
        """Energy magnitude sqrt(c^2 p^2 + m^2 c^4)."""
        return math.hypot(self.c * self.p_abs, self.rest_energy)

    def energy(self, branch: EnergyBranch = EnergyBranch.POSITIVE) -> float:
        return branch.sign * self.R

    def momentum_four_vector(self, branch: EnergyBranch = EnergyBranch.POSITIVE) -> FourVector:
        """p^mu = (E/c, p); satisfies p.p = m^2 c^2 on either branch."""
        return FourVector(self.energy(branch) / self.c, self.p)


def check_eta(eta: float) -> float:
    if not (0.0 <= eta < 1.0):
        raise EtaOutOfRange(f"eta must lie in [0, 1), got {eta}")
    return float(eta)


def from_eta(m: float, c: float, eta: float, dir: PolarAngles,
             hbar: float = 1.0) -> MomentumState:
    """State with |p| = 2 m c eta / (1 - eta^2) along the given direction."""
    eta = check_eta(eta)
    if m <= 0:
        raise MasslessState("eta parametrization requires m > 0")
    p_abs = 2.0 * m * c * eta / (1.0 - eta**2)
    return MomentumState(m, p_abs * direction(dir), PhysicalConstants(c, hbar))


def to_eta(state: MomentumState) -> float:
    """eta = c|p| / (R + m c^2); inverse of ``from_eta`` on [0, 1)."""
    if state.m == 0:
        raise MasslessState("eta parameter is undefined for m = 0")
    return state.c * state.p_abs / (state.R + state.rest_energy)


def rapidity(state: MomentumState) -> float:
    """Boost parameter th with E = m c^2 cosh th, |p| = m c sinh th."""
    if state.m == 0:
        raise MasslessState("rapidity is undefined for m = 0")
    return math.asinh(state.p_abs / (state.m * state.c))
