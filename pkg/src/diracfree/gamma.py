"""Matrix constants of the standard (Dirac) representation.

Pauli sigma_k, Dirac alpha_k / beta, covariant gamma^mu, gamma^5, the
block-diagonal spin matrices Sigma_k, the Levi-Civita symbol, and the
commutator / anticommutator helpers.  Conventions:

* metric g = diag(1, -1, -1, -1), stored in ``METRIC``;
* gamma^0 = beta, gamma^k = beta alpha_k;
* gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = [[0, 1], [1, 0]] in blocks;
  the index-lowered companion is GAMMA5_LOWER = -GAMMA5;
* Sigma_k = alpha_k gamma^5 (block-diagonal sigma_k).

All constants are immutable module-level arrays; every function here is
pure, so the module is safe to use concurrently.
"""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRange, ZeroMomentum
from .kinematics import FourVector, MomentumState
from .smallmat import cmat

SIGMA1 = cmat([[0, 1], [1, 0]])
SIGMA2 = cmat([[0, -1j], [1j, 0]])
SIGMA3 = cmat([[1, 0], [0, -1]])
PAULI = (SIGMA1, SIGMA2, SIGMA3)

ID2 = cmat(np.eye(2))
ID4 = cmat(np.eye(4))
ZERO2 = cmat(np.zeros((2, 2)))


def _block(a, b, c, d) -> np.ndarray:
    return cmat(np.block([[np.asarray(a), np.asarray(b)], [np.asarray(c), np.asarray(d)]]))


ALPHA = tuple(_block(ZERO2, s, s, ZERO2) for s in PAULI)
BETA = _block(ID2, ZERO2, ZERO2, -ID2)

GAMMA0 = BETA
GAMMA = (GAMMA0,) + tuple(cmat(BETA @ a) for a in ALPHA)
GAMMA5 = cmat(1j * GAMMA[0] @ GAMMA[1] @ GAMMA[2] @ GAMMA[3])
GAMMA5_LOWER = cmat(-GAMMA5)

# gamma^5 must come out as the off-diagonal block form; the product above
# is the defining construction, this is the independent cross-check.
assert np.array_equal(GAMMA5, _block(ZERO2, ID2, ID2, ZERO2))

SPIN = tuple(cmat(a @ GAMMA5) for a in ALPHA)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)

_LEVI = np.zeros((3, 3, 3), dtype=int)
for _q, _r, _s in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _LEVI[_q, _r, _s] = 1
    _LEVI[_q, _s, _r] = -1
_LEVI.setflags(write=False)


def levi_civita(q: int, r: int, s: int) -> int:
    """Totally antisymmetric symbol e(q, r, s), 1-based indices in {1, 2, 3}."""
    if not all(k in (1, 2, 3) for k in (q, r, s)):
        raise IndexOutOfRange("Levi-Civita indices must be 1, 2, or 3")
    return int(_LEVI[q - 1, r - 1, s - 1])


def sigma_dot(v) -> np.ndarray:
    """v1 sigma1 + v2 sigma2 + v3 sigma3."""
    v = np.asarray(v)
    return v[0] * SIGMA1 + v[1] * SIGMA2 + v[2] * SIGMA3


def alpha_dot(v) -> np.ndarray:
    v = np.asarray(v)
    return v[0] * ALPHA[0] + v[1] * ALPHA[1] + v[2] * ALPHA[2]


def spin_dot(v) -> np.ndarray:
    """Contraction with the block-diagonal spin matrices Sigma_k."""
    v = np.asarray(v)
    return v[0] * SPIN[0] + v[1] * SPIN[1] + v[2] * SPIN[2]


def gamma_slash(a) -> np.ndarray:
    """Feynman slash a0 gamma^0 - a . gamma of a contravariant four-vector."""
    if isinstance(a, FourVector):
        a = a.as_array()
    a = np.asarray(a)
    return a[0] * GAMMA[0] - a[1] * GAMMA[1] - a[2] * GAMMA[2] - a[3] * GAMMA[3]


def hamiltonian(state: MomentumState) -> np.ndarray:
    """Free-particle matrix c alpha.p + m c^2 beta."""
    return state.c * alpha_dot(state.p) + state.rest_energy * BETA


def helicity_operator(state: MomentumState) -> np.ndarray:
    """Spin projection on the momentum direction, (1/2) Sigma.p / |p|."""
    if state.p_abs == 0.0:
        raise ZeroMomentum("helicity is undefined at rest")
    return spin_dot(state.p) / (2.0 * state.p_abs)


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return x @ y - y @ x


def anticommutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return x @ y + y @ x
