"""Covariant quantities built from bi-spinors.

Dirac adjoint and bilinears, the polarization four-vector of a spin
direction, the matrix constraint it satisfies together with the Dirac
equation, the conserved current, and relativistic spin expectation values.

Physical components (polarization four-vector, current) are computed as
complex bilinears and their imaginary parts are *checked* against a
tolerance instead of being discarded: a stray imaginary part is a bug
detector, not noise.
"""

from __future__ import annotations

import numpy as np

from .gamma import GAMMA, GAMMA0, GAMMA5_LOWER, ID4, SPIN, gamma_slash
from .kinematics import EnergyBranch, FourVector, MomentumState, angles_of
from .smallmat import max_abs
from .spinors import Helicity, Normalization, bispinor_block, helicity_spinor

_IMAG_TOL = 1e-10


def dirac_adjoint(u: np.ndarray) -> np.ndarray:
    """Row vector u+ gamma^0."""
    return np.conjugate(np.asarray(u)) @ GAMMA0


def bilinear(u_left: np.ndarray, m: np.ndarray, u_right: np.ndarray) -> complex:
    """u-bar_left M u_right."""
    return complex(dirac_adjoint(u_left) @ m @ np.asarray(u_right))


def adjoint_norm(u: np.ndarray) -> float:
    """u-bar u (always real for finite components)."""
    return complex(dirac_adjoint(u) @ np.asarray(u)).real


def _real_part(value: complex, what: str) -> float:
    if abs(value.imag) > _IMAG_TOL * max(1.0, abs(value.real)):
        raise ValueError(f"{what} has a non-negligible imaginary part: {value}")
    return value.real


def polarization_four_vector(state: MomentumState, n) -> FourVector:
    """Closed-form polarization four-vector of a rest-frame spin direction n.

    a0 = (p.n)/(m c), a = n + p (p.n) / (m (E + m c^2)) with E = +R.  For
    unit n and an on-shell state it satisfies p.a = 0 and a.a = -1, and it
    reduces to (0, n) at rest.
    """
    n = np.asarray(n, dtype=float)
    p_dot_n = float(np.dot(state.p, n))
    a0 = p_dot_n / (state.m * state.c)
    avec = n + state.p * (p_dot_n / (state.m * (state.R + state.rest_energy)))
    return FourVector(a0, avec)


def polarization_from_bilinear(state: MomentumState, n) -> FourVector:
    """Same four-vector evaluated as the pseudo-vector bilinear.

    Builds the positive-branch bi-spinor from the +1 eigenspinor of
    sigma.n with unit invariant norm and evaluates u-bar (gamma_5,lower
    gamma^mu) u componentwise.  Independent route used to cross-check the
    closed form.
    """
    phi = helicity_spinor(Helicity.PLUS, angles_of(n))
    u = bispinor_block(phi, state, EnergyBranch.POSITIVE, Normalization.INVARIANT_UNIT)
    comps = [
        _real_part(bilinear(u, GAMMA5_LOWER @ GAMMA[mu], u), f"a^{mu}")
        for mu in range(4)
    ]
    return FourVector(comps[0], np.array(comps[1:]))


def check_polarization_equation(u: np.ndarray, a: FourVector) -> float:
    """Residual of (gamma_5,lower a-slash + 1) u = 0.

    Vanishes when u is the positive-branch bi-spinor whose two-spinor is the
    +1 eigenvector of sigma.n and a is the polarization four-vector of n;
    order-one for the wrong helicity, so the check discriminates.
    """
    m = GAMMA5_LOWER @ gamma_slash(a) + ID4
    return max_abs(m @ np.asarray(u))


def current_density(u: np.ndarray, state: MomentumState) -> FourVector:
    """Current four-vector j^mu = u-bar gamma^mu u.

    Proportional to p^mu: j^mu = (p^mu / m c) u-bar u for any normalization
    of the underlying two-spinor.
    """
    comps = [_real_part(bilinear(u, GAMMA[mu], u), f"j^{mu}") for mu in range(4)]
    return FourVector(comps[0], np.array(comps[1:]))


def spin_expectations(u: np.ndarray) -> np.ndarray:
    """Expectation value of the spin operator (1/2) Sigma in state u."""
    u = np.asarray(u)
    nsq = float(np.vdot(u, u).real)
    return np.array(
        [0.5 * float(np.vdot(u, s @ u).real) / nsq for s in SPIN]
    )


def relate_spin_expectations(state: MomentumState, s_nonrel: np.ndarray) -> np.ndarray:
    """Relativistic spin expectation from the rest-frame one.

    (m c^2 / E) <s> + c^2 p (p . <s>) / (E (E + m c^2)) with E = +R:
    the component along p is unchanged, transverse components shrink by
    m c^2 / E.
    """
    s_nonrel = np.asarray(s_nonrel, dtype=float)
    e = state.R
    mc2 = state.rest_energy
    longitudinal = state.c**2 * state.p * float(np.dot(state.p, s_nonrel))
    return (mc2 / e) * s_nonrel + longitudinal / (e * (e + mc2))
