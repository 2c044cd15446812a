"""Dense linear algebra for two qubits.

Operators are ``(2, 2)`` / ``(4, 4)`` complex arrays and states are length-4
complex vectors in the basis |DD>, |DH>, |HD>, |HH> (= |00>..|11>), with the
row player's qubit first.
"""
from __future__ import annotations

import numpy as np

from .exceptions import DomainError

ATOL = 1e-12

GAMMA_MAX = np.pi / 4

BASIS_LABELS = ("DD", "DH", "HD", "HH")

IDENTITY2 = np.eye(2, dtype=complex)
IDENTITY4 = np.eye(4, dtype=complex)
# Hawk operator; HAWK @ HAWK == -I, hence kron(HAWK, HAWK) squares to I4.
HAWK = np.array([[0, 1], [-1, 0]], dtype=complex)
HAWK_HAWK = np.kron(HAWK, HAWK)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product ``a (x) b`` of two 2x2 operators."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise DomainError(f"kron expects two 2x2 operators, got {a.shape} and {b.shape}")
    out = np.empty((4, 4), dtype=complex)
    for r in range(2):
        for c in range(2):
            out[2 * r:2 * r + 2, 2 * c:2 * c + 2] = a[r, c] * b
    return out


def check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not 0.0 <= gamma <= GAMMA_MAX:
        raise DomainError(f"gamma={gamma!r} outside [0, pi/4]")
    return gamma


def entangler(gamma: float) -> np.ndarray:
    """The entangling gate exp(i*gamma*H(x)H) = cos(gamma) I + i sin(gamma) H(x)H."""
    gamma = check_gamma(gamma)
    return np.cos(gamma) * IDENTITY4 + 1j * np.sin(gamma) * HAWK_HAWK


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(m)).T


def basis_state(label: str) -> np.ndarray:
    """Computational basis state by label, e.g. ``basis_state("DD")``."""
    try:
        k = BASIS_LABELS.index(label)
    except ValueError:
        raise DomainError(f"unknown basis label {label!r}; expected one of {BASIS_LABELS}") from None
    s = np.zeros(4, dtype=complex)
    s[k] = 1.0
    return s


def apply(m: np.ndarray, state: np.ndarray) -> np.ndarray:
    return np.asarray(m, dtype=complex) @ np.asarray(state, dtype=complex)


def is_unitary(m: np.ndarray, atol: float = ATOL) -> bool:
    m = np.asarray(m, dtype=complex)
    eye = np.eye(m.shape[0])
    return bool(np.allclose(m @ dagger(m), eye, rtol=0.0, atol=atol))


def is_normalized(state: np.ndarray, atol: float = ATOL) -> bool:
    return abs(float(np.sum(np.abs(state) ** 2)) - 1.0) <= atol


def concurrence(state: np.ndarray) -> float:
    """Concurrence 2|a00*a11 - a01*a10| of a normalized two-qubit pure state."""
    state = np.asarray(state, dtype=complex)
    if state.shape != (4,):
        raise DomainError(f"expected 4 amplitudes, got shape {state.shape}")
    if not is_normalized(state):
        raise DomainError("concurrence requires a normalized state")
    value = 2.0 * abs(state[0] * state[3] - state[1] * state[2])
    return min(value, 1.0)
