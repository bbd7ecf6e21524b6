"""Plane-wave spinor constructions for the free Dirac particle.

Covers the two-component helicity eigenspinors and their unitary column
matrices Phi / Phi-tilde, the axis-3 spin basis matrix U with bi-spinor
columns u(1)..u(4), the relativistic helicity basis matrices V / V-tilde
(built both by the direct block solution and by the Lorentz boost), the
box-normalized eta-parametrized columns, and charge conjugation.

Sign and phase conventions are fixed once here and never rephased:

* phi(+1/2) = (cos(t/2) e^{-i f/2}, sin(t/2) e^{+i f/2}),
  phi(-1/2) = (-sin(t/2) e^{-i f/2}, cos(t/2) e^{+i f/2});
* positive-branch bi-spinors put the momentum factor in the lower block,
  ``(phi, c(sigma.p)/(m c^2 + E) phi)``;
* negative-branch bi-spinors use the mirrored form with the momentum
  factor in the upper block, ``(c(sigma.p)/(R + m c^2) phi, phi)``.  Their
  plane wave carries phase ``exp(+i(R t - p.r)/hbar)``, i.e. physical
  momentum ``-p``: they are eigenvectors of the Hamiltonian built from
  ``-p``, not of the one built from ``p``.  The direct ``-R`` eigenvector
  of the momentum-``p`` Hamiltonian is ``negative_energy_eigenvector``.

Normalization is always an explicit final step: internal construction is
unnormalized and a ``Normalization`` value selects among u+u = 1, |u-bar u|
= 1, |u-bar u| = 2mc, and the box convention u+u = 1/V.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    EtaOutOfRange,
    MasslessState,
    NonPositiveVolume,
    UnnormalizablePhi,
    ZeroMomentum,
)
from .gamma import BETA, GAMMA, alpha_dot, hamiltonian, sigma_dot
from .kinematics import (
    EnergyBranch,
    MomentumState,
    PolarAngles,
    angles_of,
    check_eta,
    rapidity,
)
from .smallmat import max_abs


class Helicity(Enum):
    """Spin projection on the momentum direction, +1/2 or -1/2."""

    PLUS = 1
    MINUS = -1

    @property
    def sign(self) -> int:
        return self.value

    @property
    def half(self) -> float:
        return 0.5 * self.value


class Normalization(Enum):
    UNIT = "unit"
    INVARIANT_UNIT = "inv1"
    INVARIANT_2MC = "inv2mc"
    BOX = "box"


def helicity_spinor(lam: Helicity, angles: PolarAngles) -> np.ndarray:
    """Eigenspinor of sigma.n(theta, phi) with eigenvalue +/-1."""
    half_theta = 0.5 * angles.theta
    minus = np.exp(-0.5j * angles.phi)
    plus = np.exp(0.5j * angles.phi)
    if lam is Helicity.PLUS:
        return np.array([math.cos(half_theta) * minus, math.sin(half_theta) * plus])
    return np.array([-math.sin(half_theta) * minus, math.cos(half_theta) * plus])


def phi_matrix(angles: PolarAngles) -> np.ndarray:
    """Unitary 2x2 matrix with the two helicity spinors as columns."""
    return np.column_stack(
        [helicity_spinor(Helicity.PLUS, angles), helicity_spinor(Helicity.MINUS, angles)]
    )


def phi_tilde_matrix(angles: PolarAngles) -> np.ndarray:
    """Companion matrix (phi(+1/2), -phi(-1/2)); sigma.n = tilde Phi . Phi+."""
    return np.column_stack(
        [helicity_spinor(Helicity.PLUS, angles), -helicity_spinor(Helicity.MINUS, angles)]
    )


def spin_basis_matrix(state: MomentumState) -> np.ndarray:
    """Hermitian involutive matrix whose columns are the axis-3 spin bi-spinors.

    Columns 1-2 are +R eigenvectors of the Hamiltonian, columns 3-4 are -R
    eigenvectors; at p = 0 the matrix reduces to diag(1, 1, -1, -1).
    """
    kappa = state.c / (state.rest_energy + state.R)
    sp = kappa * sigma_dot(state.p)
    eye = np.eye(2)
    u = np.block([[eye, sp], [sp, -eye]])
    return math.sqrt((state.rest_energy + state.R) / (2.0 * state.R)) * u


def _adjoint_norm(u: np.ndarray) -> float:
    """u-bar u = |upper|^2 - |lower|^2 for a raw column."""
    return float(np.vdot(u[:2], u[:2]).real - np.vdot(u[2:], u[2:]).real)


def _normalize(raw: np.ndarray, state: MomentumState, norm: Normalization,
               volume: float | None) -> np.ndarray:
    nsq = float(np.vdot(raw, raw).real)
    if nsq == 0.0:
        raise UnnormalizablePhi("two-spinor must be nonzero")
    if norm is Normalization.UNIT:
        return raw / math.sqrt(nsq)
    if norm is Normalization.BOX:
        if volume is None or volume <= 0:
            raise NonPositiveVolume("box normalization requires volume > 0")
        return raw / math.sqrt(volume * nsq)
    invariant = abs(_adjoint_norm(raw))
    if invariant == 0.0:
        raise UnnormalizablePhi("invariant norm vanishes; state is light-like")
    if norm is Normalization.INVARIANT_UNIT:
        return raw / math.sqrt(invariant)
    target = 2.0 * state.m * state.c
    return raw * math.sqrt(target / invariant)


def bispinor_block(phi: np.ndarray, state: MomentumState, branch: EnergyBranch,
                   norm: Normalization = Normalization.UNIT,
                   volume: float | None = None) -> np.ndarray:
    """Bi-spinor from a two-spinor by the block solution of the eigenproblem.

    Positive branch: ``(phi, c(sigma.p)/(m c^2 + R) phi)`` with energy +R.
    Negative branch: ``(c(sigma.p)/(R + m c^2) phi, phi)``; its plane wave
    carries momentum -p and energy -R (see module docstring).  The adjoint
    norm u-bar u is positive on the first branch and negative on the second,
    so the 2mc convention yields +2mc and -2mc respectively.
    """
    phi = np.asarray(phi, dtype=np.complex128)
    if not np.any(phi):
        raise UnnormalizablePhi("two-spinor must be nonzero")
    coupled = (state.c / (state.rest_energy + state.R)) * (sigma_dot(state.p) @ phi)
    if branch is EnergyBranch.POSITIVE:
        raw = np.concatenate([phi, coupled])
    else:
        raw = np.concatenate([coupled, phi])
    return _normalize(raw, state, norm, volume)


def negative_energy_eigenvector(chi: np.ndarray, state: MomentumState,
                                norm: Normalization = Normalization.UNIT,
                                volume: float | None = None) -> np.ndarray:
    """Direct -R eigenvector of the momentum-p Hamiltonian.

    ``(c(sigma.p)/(m c^2 + R) chi, -chi)``: the alternate lower-block
    construction, kept for cross-checks against the mirrored form used by
    ``bispinor_block(..., NEGATIVE)``.
    """
    chi = np.asarray(chi, dtype=np.complex128)
    if not np.any(chi):
        raise UnnormalizablePhi("two-spinor must be nonzero")
    coupled = (state.c / (state.rest_energy + state.R)) * (sigma_dot(state.p) @ chi)
    raw = np.concatenate([coupled, -chi])
    return _normalize(raw, state, norm, volume)


def boost_bispinor(phi: np.ndarray, state: MomentumState) -> np.ndarray:
    """Positive-branch bi-spinor by boosting the rest-frame solution (phi, 0).

    ``cosh(th/2) (phi, (sigma.l) tanh(th/2) phi)`` with l = p/|p|; equals the
    direct block construction scaled so that u-bar u = phi+ phi.
    """
    if state.m == 0:
        raise MasslessState("boost construction requires m > 0")
    phi = np.asarray(phi, dtype=np.complex128)
    th = rapidity(state)
    if state.p_abs == 0.0:
        return np.concatenate([phi, np.zeros(2, dtype=np.complex128)])
    ell = state.p / state.p_abs
    lower = math.tanh(0.5 * th) * (sigma_dot(ell) @ phi)
    return math.cosh(0.5 * th) * np.concatenate([phi, lower])


@dataclass(frozen=True)
class HelicityBasis:
    """Unitary matrix V of helicity bi-spinor columns and its partner.

    Columns of V: (+R, +1/2), (+R, -1/2), (-R, +1/2), (-R, -1/2) by energy
    and helicity.  V-tilde flips the sign of the last two columns, giving
    H V = R V-tilde and H V-tilde = R V.
    """

    V: np.ndarray
    V_tilde: np.ndarray


def helicity_basis(state: MomentumState) -> HelicityBasis:
    if state.p_abs == 0.0:
        raise ZeroMomentum("helicity basis needs a momentum direction")
    angles = angles_of(state.p)
    kappa = state.c * state.p_abs / (state.rest_energy + state.R)
    phi_m = phi_matrix(angles)
    phi_t = phi_tilde_matrix(angles)
    v = np.block([[phi_m, kappa * phi_t], [kappa * phi_t, -phi_m]])
    v *= math.sqrt((state.rest_energy + state.R) / (2.0 * state.R))
    flip = np.diag([1.0, 1.0, -1.0, -1.0])
    return HelicityBasis(V=v, V_tilde=v @ flip)


def eta_bispinor(lam: Helicity, branch: EnergyBranch, eta: float,
                 angles: PolarAngles, volume: float = 1.0) -> np.ndarray:
    """Box-normalized helicity plane-wave column in the eta parametrization.

    The branch/helicity table of explicit half-angle columns, prefactor
    1/sqrt(V (1 + eta^2)).  Negative-branch columns describe waves with
    physical momentum opposite to the (theta, phi) direction.
    """
    eta = check_eta(eta)
    if volume <= 0:
        raise NonPositiveVolume("volume must be positive")
    half = 0.5 * angles.theta
    a = math.cos(half) * np.exp(-0.5j * angles.phi)
    b = math.sin(half) * np.exp(0.5j * angles.phi)
    sm = math.sin(half) * np.exp(-0.5j * angles.phi)
    cm = math.cos(half) * np.exp(0.5j * angles.phi)
    if branch is EnergyBranch.POSITIVE:
        if lam is Helicity.PLUS:
            column = [a, b, eta * a, eta * b]
        else:
            column = [sm, -cm, -eta * sm, eta * cm]
    else:
        if lam is Helicity.PLUS:
            column = [eta * sm, -eta * cm, -sm, cm]
        else:
            column = [eta * a, eta * b, a, b]
    return np.array(column) / math.sqrt(volume * (1.0 + eta**2))


def charge_conjugate(u: np.ndarray) -> np.ndarray:
    """i gamma^2 u*; maps positive-branch columns onto negative-branch ones.

    Applying it twice returns +u (checked once in the test suite rather than
    assumed).
    """
    return 1j * (GAMMA[2] @ np.conjugate(np.asarray(u)))


def plane_wave(u: np.ndarray, state: MomentumState, branch: EnergyBranch,
               r, t: float) -> np.ndarray:
    """Attach the propagation phase exp(+/- i (p.r - R t) / hbar) to u."""
    r = np.asarray(r, dtype=float)
    arg = (float(np.dot(state.p, r)) - state.R * t) / state.hbar
    return np.asarray(u) * np.exp(1j * branch.sign * arg)


def dirac_residual(u: np.ndarray, state: MomentumState, branch: EnergyBranch) -> float:
    """Eigenvalue-equation residual of a bi-spinor, before any phase.

    Positive branch: |H(p) u - R u|; negative branch: |H(-p) u + R u|,
    matching the momentum carried by each branch's plane wave.
    """
    if branch is EnergyBranch.POSITIVE:
        h = hamiltonian(state)
        return max_abs(h @ u - state.R * np.asarray(u))
    h = -state.c * alpha_dot(state.p) + state.rest_energy * BETA
    return max_abs(h @ u + state.R * np.asarray(u))
