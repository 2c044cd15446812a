"""Two-parameter strategy space U(theta, phi), theta, phi in [0, pi/2]."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError

THETA_MAX = np.pi / 2
PHI_MAX = np.pi / 2

# Tolerance for identifying two strategies by their parameters.
IDENTIFY_TOL = 1e-9


@dataclass(frozen=True, order=True)
class Strategy:
    """A point (theta, phi) of the strategy space.

    ``phi_max`` widens the admissible phase range for exploration; it does not
    take part in comparisons.
    """

    theta: float
    phi: float
    phi_max: float = field(default=PHI_MAX, compare=False, repr=False)

    def __post_init__(self):
        theta, phi = float(self.theta), float(self.phi)
        if not 0.0 <= theta <= THETA_MAX:
            raise DomainError(f"theta={theta!r} outside [0, pi/2]")
        if not 0.0 <= phi <= self.phi_max:
            raise DomainError(f"phi={phi!r} outside [0, {self.phi_max!r}]")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def canonical(self) -> "Strategy":
        # At theta = pi/2 the phase drops out of U, so every phi gives H.
        if abs(self.theta - THETA_MAX) <= IDENTIFY_TOL and self.phi != 0.0:
            return Strategy(THETA_MAX, 0.0, phi_max=self.phi_max)
        return self

    def isclose(self, other: "Strategy", tol: float = IDENTIFY_TOL) -> bool:
        a, b = self.canonical(), other.canonical()
        return abs(a.theta - b.theta) <= tol and abs(a.phi - b.phi) <= tol

    def as_list(self) -> list[float]:
        return [self.theta, self.phi]


DOVE = Strategy(0.0, 0.0)
HAWK = Strategy(np.pi / 2, 0.0)
QUANTUM = Strategy(0.0, np.pi / 2)


def named_strategies() -> dict[str, Strategy]:
    return {"D": DOVE, "H": HAWK, "Q": QUANTUM}


def unitary(theta, phi) -> np.ndarray:
    """U(theta, phi) = [[e^{i phi} cos theta, sin theta], [-sin theta, e^{-i phi} cos theta]].

    Broadcasts over array arguments; the result has shape ``(..., 2, 2)``.
    """
    theta, phi = np.broadcast_arrays(np.asarray(theta, dtype=float), np.asarray(phi, dtype=float))
    ct, st = np.cos(theta), np.sin(theta)
    u = np.empty(theta.shape + (2, 2), dtype=complex)
    u[..., 0, 0] = np.exp(1j * phi) * ct
    u[..., 0, 1] = st
    u[..., 1, 0] = -st
    u[..., 1, 1] = np.exp(-1j * phi) * ct
    return u


def to_unitary(s: Strategy) -> np.ndarray:
    return unitary(s.theta, s.phi)


def classical_embedding(theta: float) -> float:
    """Hawk probability sin^2(theta) of the phase-free strategy U(theta, 0)."""
    theta = float(theta)
    if not 0.0 <= theta <= THETA_MAX:
        raise DomainError(f"theta={theta!r} outside [0, pi/2]")
    return float(np.sin(theta) ** 2)


def theta_for_probability(p: float) -> float:
    """Inverse of :func:`classical_embedding`."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p!r} is not a probability in [0, 1]")
    return float(np.arcsin(np.sqrt(p)))


def lattice(grid_n: int, phi_max: float = PHI_MAX) -> tuple[np.ndarray, np.ndarray]:
    """Uniform ``grid_n x grid_n`` lattice over [0, pi/2] x [0, phi_max].

    Returns ``(thetas, phis)`` as 1-D axes. With ``phi_max == 0`` the phase axis
    collapses to the single value 0 (the classical restriction).
    """
    if grid_n < 2:
        raise DomainError(f"grid_n must be >= 2, got {grid_n}")
    thetas = np.linspace(0.0, THETA_MAX, grid_n)
    phis = np.array([0.0]) if phi_max == 0 else np.linspace(0.0, phi_max, grid_n)
    return thetas, phis


def lattice_points(grid_n: int, phi_max: float = PHI_MAX) -> tuple[np.ndarray, np.ndarray]:
    """Flattened lattice with the redundant theta = pi/2 phases collapsed to phi = 0.

    Returns parallel ``(theta, phi)`` arrays, each row a distinct operator.
    """
    thetas, phis = lattice(grid_n, phi_max)
    tt, pp = np.meshgrid(thetas[:-1], phis, indexing="ij")
    theta = np.append(tt.ravel(), THETA_MAX)
    phi = np.append(pp.ravel(), 0.0)
    return theta, phi
