"""Audit of the free-electron bi-spinors in Fermi's 1954 lecture notes.

Fermi's Chicago quantum-mechanics notes list four "orthogonal normalized"
plane-wave bi-spinors, the second pair attributed to the negative energy
eigenvalue -R.  Direct substitution shows all four are +R eigenvectors of
the free Hamiltonian and the set is linearly dependent (vanishing
determinant).  This module preserves the original set verbatim as a
regression fixture, provides the corrected set (the axis-3 spin basis,
whose last two columns really are -R eigenvectors), the energy projection
operators built from H/R, and Fermi's variant gamma representation with
the primed spin matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ZeroMomentum
from .gamma import ALPHA, BETA, ID4, hamiltonian
from .kinematics import MomentumState
from .smallmat import cmat
from .spinors import spin_basis_matrix

FERMI_GAMMA1 = cmat(
    [
        [0, 0, 0, -1j],
        [0, 0, -1j, 0],
        [0, 1j, 0, 0],
        [1j, 0, 0, 0],
    ]
)
FERMI_GAMMA2 = cmat(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ]
)
FERMI_GAMMA3 = cmat(
    [
        [0, 0, -1j, 0],
        [0, 0, 0, 1j],
        [1j, 0, 0, 0],
        [0, -1j, 0, 0],
    ]
)
FERMI_GAMMA4 = BETA


def fermi_gamma_set() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Fermi's gamma_1..gamma_4 (gamma_4 = beta).

    These square to the identity, pairwise anticommute, and reproduce the
    standard alpha matrices through alpha_k = i beta gamma_k.
    """
    return FERMI_GAMMA1, FERMI_GAMMA2, FERMI_GAMMA3, FERMI_GAMMA4


def fermi_sigma_primes() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Primed spin matrices (1/i) alpha_2 alpha_3, etc.

    Entrywise equal to the block-diagonal spin matrices Sigma_k.
    """
    a1, a2, a3 = ALPHA
    return (-1j * a2 @ a3, -1j * a3 @ a1, -1j * a1 @ a2)


def fermi_bispinors_original(state: MomentumState) -> list[np.ndarray]:
    """The four bi-spinors exactly as printed in the notes.

    The 1/(R - m c^2) factors in the second pair blow up at rest, hence the
    |p| > 0 precondition.  All four satisfy H u = +R u; the set has a
    vanishing determinant.  Preserved verbatim, bugs included: the audit is
    the feature.
    """
    if state.p_abs == 0.0:
        raise ZeroMomentum("the original set is singular at p = 0")
    c = state.c
    px, py, pz = state.p
    r = state.R
    mc2 = state.rest_energy
    plus = math.sqrt((mc2 + r) / (2.0 * r))
    minus = math.sqrt((r - mc2) / (2.0 * r))
    dp = mc2 + r
    dm = r - mc2
    u1 = plus * np.array([1, 0, c * pz / dp, c * (px + 1j * py) / dp])
    u2 = plus * np.array([0, 1, c * (px - 1j * py) / dp, -c * pz / dp])
    u3 = minus * np.array([c * pz / dm, c * (px + 1j * py) / dm, 1, 0])
    u4 = minus * np.array([c * (px - 1j * py) / dm, -c * pz / dm, 0, 1])
    return [u1, u2, u3, u4]


def fermi_bispinors_corrected(state: MomentumState) -> list[np.ndarray]:
    """The corrected set: columns of the axis-3 spin basis matrix.

    Well defined at p = 0, unimodular determinant, and the second pair are
    genuine -R eigenvectors.
    """
    u = spin_basis_matrix(state)
    return [u[:, k].copy() for k in range(4)]


@dataclass(frozen=True)
class FermiProjectors:
    """Complementary projectors onto the energy branches."""

    P: np.ndarray
    N: np.ndarray


def fermi_projectors(state: MomentumState) -> FermiProjectors:
    """P = 1/2 + H/(2R) and N = 1/2 - H/(2R).

    Idempotent, complementary, orthogonal; on the corrected bi-spinors they
    select the positive / negative energy pairs.
    """
    h = hamiltonian(state)
    p = 0.5 * ID4 + h / (2.0 * state.R)
    return FermiProjectors(P=p, N=ID4 - p)
