"""Energy projectors and pure-state polarization density matrices.

Conventions, fixed by the explicit component checks in the test suite:

* the slash of the energy-momentum four-vector always carries E = +R; the
  negative branch flips the sign of the whole slash, Lambda(+/-) = mc -/+
  p-slash (sic: Lambda_+ = mc + p-slash, Lambda_- = mc - p-slash);
* inside a density matrix the polarization four-vector is evaluated along
  ``sign(2 lambda) n`` on both branches, giving the factor
  ``1 - sign(2 lambda) gamma_5 a-slash``;
* outer products: u u-bar = rho_+ for the positive branch and v v-bar =
  -rho_- for the negative one, with the 2mc-invariant normalization.
"""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRange, NonUnitDirection
from .gamma import (
    GAMMA,
    GAMMA5_LOWER,
    ID4,
    METRIC,
    alpha_dot,
    gamma_slash,
    sigma_dot,
    spin_dot,
)
from .kinematics import (
    EnergyBranch,
    FourVector,
    MomentumState,
    PolarAngles,
    angles_of,
    from_eta,
)
from .observables import dirac_adjoint, polarization_four_vector
from .smallmat import Block2x2, assemble, block_mul, disassemble, max_abs
from .spinors import Helicity, Normalization, bispinor_block, helicity_spinor

_UNIT_TOL = 1e-12


def _check_unit(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if abs(float(np.dot(n, n)) - 1.0) > _UNIT_TOL:
        raise NonUnitDirection("polarization direction must be a unit vector")
    return n


def nonrel_density(lam: Helicity, n) -> np.ndarray:
    """Two-level pure-state density matrix (1 +/- sigma.n) / 2."""
    n = _check_unit(n)
    return 0.5 * (np.eye(2) + lam.sign * sigma_dot(n))


def energy_projector(state: MomentumState, branch: EnergyBranch) -> np.ndarray:
    """mc +/- p-slash, projecting (up to 2mc) onto one energy branch."""
    p4 = state.momentum_four_vector(EnergyBranch.POSITIVE)
    return state.m * state.c * ID4 + branch.sign * gamma_slash(p4)


def outer_with_adjoint(u: np.ndarray) -> np.ndarray:
    """Rank-one matrix u u-bar."""
    return np.outer(np.asarray(u), dirac_adjoint(u))


def density4(state: MomentumState, branch: EnergyBranch, lam: Helicity, n) -> np.ndarray:
    """Pure-state density matrix (mc +/- p-slash)(1 - s gamma_5 a-slash)/2.

    ``s = sign(2 lambda)`` and the a-slash is built from the polarization
    four-vector of ``s n``.  Equals the outer product of the corresponding
    2mc-normalized bi-spinor with its Dirac adjoint (positive branch), or
    its negative (negative branch); see ``density4_outer``.
    """
    n = _check_unit(n)
    a = polarization_four_vector(state, lam.sign * n)
    polarizer = ID4 - GAMMA5_LOWER @ gamma_slash(a)
    return 0.5 * energy_projector(state, branch) @ polarizer


def density4_outer(state: MomentumState, branch: EnergyBranch, lam: Helicity, n) -> np.ndarray:
    """Outer-product route to the same density matrix.

    The negative-branch bi-spinor carries the opposite two-spinor label
    (its plane wave has momentum -p), and its outer product equals
    -rho_-, hence the overall sign flip.
    """
    n = _check_unit(n)
    phi_label = lam if branch is EnergyBranch.POSITIVE else _flip(lam)
    phi = helicity_spinor(phi_label, angles_of(n))
    u = bispinor_block(phi, state, branch, Normalization.INVARIANT_2MC)
    return branch.sign * outer_with_adjoint(u)


def _flip(lam: Helicity) -> Helicity:
    return Helicity.MINUS if lam is Helicity.PLUS else Helicity.PLUS


def density_block_form(eta: float, angles: PolarAngles, branch: EnergyBranch,
                       lam: Helicity, m: float = 1.0, c: float = 1.0) -> Block2x2:
    """Density matrix of an eta-parametrized helicity state, in 2x2 blocks.

    Returns ``+/-(1 - eta^2) u u-bar / (u-bar u)``, which factorizes as a
    scalar block pattern times the two-level density matrix of the
    polarization direction: for positive energy
    ``[[rho, -s eta rho], [s eta rho, -eta^2 rho]]`` and for negative energy
    ``[[eta^2 rho, s eta rho], [-s eta rho, -rho]]`` with s = sign(2 lambda)
    and rho evaluated along s n (positive branch) or -s n (negative).
    In the rest limit eta -> 0 the positive branch reduces to
    diag(rho, 0).
    """
    state = from_eta(m, c, eta, angles)
    phi_label = lam if branch is EnergyBranch.POSITIVE else _flip(lam)
    phi = helicity_spinor(phi_label, angles)
    u = bispinor_block(phi, state, branch, Normalization.INVARIANT_2MC)
    norm = complex(dirac_adjoint(u) @ u).real
    scaled = branch.sign * (1.0 - eta**2) * outer_with_adjoint(u) / norm
    return disassemble(scaled)


def sigma_tensor(mu: int, nu: int) -> np.ndarray:
    """Antisymmetric tensor of matrices (gamma^mu gamma^nu - gamma^nu gamma^mu)/2."""
    if mu not in range(4) or nu not in range(4):
        raise IndexOutOfRange("tensor indices must lie in 0..3")
    return 0.5 * (GAMMA[mu] @ GAMMA[nu] - GAMMA[nu] @ GAMMA[mu])


def slash_pair(p: FourVector, a: FourVector) -> np.ndarray:
    """Contraction Sigma^{mu nu} p_mu a_nu of two four-vectors.

    Equals -p0 (alpha.a) + a0 (alpha.p) - i Sigma.(p x a); the relation
    p-slash gamma_5 a-slash = -gamma_5 (this contraction) holds whenever
    p.a = 0.
    """
    p_low = METRIC @ p.as_array()
    a_low = METRIC @ a.as_array()
    total = np.zeros((4, 4), dtype=np.complex128)
    for mu in range(4):
        for nu in range(4):
            if mu != nu:
                total += sigma_tensor(mu, nu) * (p_low[mu] * a_low[nu])
    return total


def slash_pair_components(p: FourVector, a: FourVector) -> np.ndarray:
    """Componentwise route -p0 (alpha.a) + a0 (alpha.p) - i Sigma.(p x a)."""
    cross = np.cross(p.r, a.r)
    return -p.t * alpha_dot(a.r) + a.t * alpha_dot(p.r) - 1j * spin_dot(cross)


def covariant_density_identity(state: MomentumState, branch: EnergyBranch,
                               lam: Helicity) -> float:
    """Residual of the covariant density-matrix decomposition.

    Compares (mc +/- p-slash)(1 - gamma_5 a-slash) against
    mc (1 - gamma_5 a-slash) +/- [p-slash + gamma_5 (pa-contraction)], and
    additionally recomputes the left side by 2x2 block multiplication.
    Returns the larger of the two mismatches.
    """
    n = state.p / state.p_abs if state.p_abs > 0 else np.array([0.0, 0.0, 1.0])
    a = polarization_four_vector(state, lam.sign * n)
    p4 = state.momentum_four_vector(EnergyBranch.POSITIVE)
    a_slash = gamma_slash(a)
    p_slash = gamma_slash(p4)
    polarizer = ID4 - GAMMA5_LOWER @ a_slash
    b = branch.sign
    lhs = (state.m * state.c * ID4 + b * p_slash) @ polarizer
    rhs = state.m * state.c * polarizer + b * (p_slash + GAMMA5_LOWER @ slash_pair(p4, a))
    lhs_blocks = assemble(
        block_mul(
            disassemble(state.m * state.c * ID4 + b * p_slash),
            disassemble(polarizer),
        )
    )
    return max(max_abs(lhs - rhs), max_abs(lhs_blocks - lhs))
