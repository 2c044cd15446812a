"""The quantized Hawk-Dove game: entangle, play local unitaries, disentangle, measure.

``play`` is the reference pipeline on explicit 4x4 matrices. ``expected_payoffs``
is the same computation vectorized over strategy arrays and is what the
equilibrium searches use. ``payoff_closed_form`` is an analytic shortcut that
is only trusted after :func:`validate_closed_form` has checked it.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from . import quantum_core as qc
from .exceptions import DomainError
from .game_model import PayoffMatrix
from .strategy_space import HAWK as HAWK_STRATEGY
from .strategy_space import QUANTUM, DOVE, Strategy, to_unitary, unitary

CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class GameOutcome:
    p_dd: float
    p_dh: float
    p_hd: float
    p_hh: float
    payoff_row: float
    payoff_col: float

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([self.p_dd, self.p_dh, self.p_hd, self.p_hh])

    def as_dict(self) -> dict:
        return asdict(self)


def _clamp(p: np.ndarray) -> np.ndarray:
    if np.any(p < -CLAMP_TOL) or np.any(p > 1 + CLAMP_TOL):
        raise ArithmeticError(f"probabilities out of range: {p}")
    return np.clip(p, 0.0, 1.0)


def final_state(row: Strategy, col: Strategy, gamma: float) -> np.ndarray:
    """|psi_f> = J^dagger (U_R (x) U_C) J |DD>."""
    j = qc.entangler(gamma)
    local = qc.kron(to_unitary(row), to_unitary(col))
    psi = qc.apply(j, qc.basis_state("DD"))
    psi = qc.apply(local, psi)
    return qc.apply(qc.dagger(j), psi)


def _payoffs(p: np.ndarray, m: PayoffMatrix) -> tuple:
    p_dd, p_dh, p_hd, p_hh = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    row = m.c * p_dd + m.b * p_hd - m.a * p_hh
    col = m.c * p_dd + m.b * p_dh - m.a * p_hh
    return row, col


def play(row: Strategy, col: Strategy, gamma: float, m: PayoffMatrix) -> GameOutcome:
    """Run one game through the state-vector pipeline and score it."""
    psi = final_state(row, col, gamma)
    p = _clamp(np.abs(psi) ** 2)
    payoff_row, payoff_col = _payoffs(p, m)
    return GameOutcome(*(float(x) for x in p), float(payoff_row), float(payoff_col))


def outcome_probabilities(theta_r, phi_r, theta_c, phi_c, gamma: float) -> np.ndarray:
    """Joint measurement probabilities, broadcast over strategy arrays.

    The two-qubit state is held as a 2x2 tensor T[row, col]: J|DD> is
    diag(cos g, i sin g), ``U_R (x) U_C`` maps T to ``U_R T U_C^T`` and
    ``H (x) H`` maps T to ``H T H^T``. Output shape is ``broadcast_shape + (4,)``
    in the order DD, DH, HD, HH.
    """
    gamma = qc.check_gamma(gamma)
    cg, sg = np.cos(gamma), np.sin(gamma)
    u_r = unitary(theta_r, phi_r)
    u_c = unitary(theta_c, phi_c)
    # U_R T0 U_C^T, component by component.
    t = [[cg * u_r[..., r, 0] * u_c[..., c, 0] + 1j * sg * u_r[..., r, 1] * u_c[..., c, 1]
          for c in range(2)] for r in range(2)]
    # H T H^T = [[T11, -T10], [-T01, T00]]
    dd = cg * t[0][0] - 1j * sg * t[1][1]
    dh = cg * t[0][1] + 1j * sg * t[1][0]
    hd = cg * t[1][0] + 1j * sg * t[0][1]
    hh = cg * t[1][1] - 1j * sg * t[0][0]
    return np.stack([np.abs(x) ** 2 for x in (dd, dh, hd, hh)], axis=-1)


def expected_payoffs(theta_r, phi_r, theta_c, phi_c, gamma: float, m: PayoffMatrix):
    """Vectorized (row, column) expected payoffs."""
    return _payoffs(outcome_probabilities(theta_r, phi_r, theta_c, phi_c, gamma), m)


def row_payoff(row: Strategy, col: Strategy, gamma: float, m: PayoffMatrix) -> float:
    r, _ = expected_payoffs(row.theta, row.phi, col.theta, col.phi, gamma, m)
    return float(r)


def payoff_closed_form(row: Strategy, col: Strategy, gamma: float, m: PayoffMatrix,
                       form: str = "corrected") -> float:
    """Row payoff from the analytic three-term expression.

    ``form="printed"`` evaluates the expression as commonly quoted, whose
    hawk-dove term carries ``cos(phi_C) [1 + i cos 2gamma]``. That factor does
    not have unit modulus and disagrees with the pipeline even at phi = 0.
    ``form="corrected"`` (default) uses ``cos(phi_C) + i cos(2gamma) sin(phi_C)``,
    obtained by expanding the pipeline symbolically.
    """
    if form not in ("corrected", "printed"):
        raise DomainError(f"unknown closed form {form!r}")
    gamma = qc.check_gamma(gamma)
    tr, pr, tc, pc = row.theta, row.phi, col.theta, col.phi
    s2g, c2g = np.sin(2 * gamma), np.cos(2 * gamma)
    cos_tr, sin_tr, cos_tc, sin_tc = np.cos(tr), np.sin(tr), np.cos(tc), np.sin(tc)

    dd = cos_tr * cos_tc * (np.cos(pr + pc) + 1j * c2g * np.sin(pr + pc))
    if form == "printed":
        hd_phase = np.cos(pc) * (1 + 1j * c2g)
    else:
        hd_phase = np.cos(pc) + 1j * c2g * np.sin(pc)
    hd = s2g * np.sin(pr) * cos_tr * sin_tc - sin_tr * cos_tc * hd_phase
    hh = sin_tr * sin_tc + s2g * np.sin(pr + pc) * cos_tr * cos_tc
    return float(m.c * abs(dd) ** 2 + m.b * abs(hd) ** 2 - m.a * abs(hh) ** 2)


RESTRICTIONS = ("none", "phi-zero", "named-vs-Q")


@dataclass(frozen=True)
class ClosedFormReport:
    form: str
    restrict: str
    sample_count: int
    tolerance: float
    seed: int
    max_deviation: float
    passed: bool
    counterexample: dict | None

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def _sample_inputs(rng: np.random.Generator, k: int, restrict: str):
    if restrict == "named-vs-Q":
        named = (DOVE, HAWK_STRATEGY, QUANTUM)
        gamma = rng.uniform(0.0, qc.GAMMA_MAX)
        return named[k % 3], QUANTUM, gamma
    tr, pr, tc, pc = rng.uniform(0.0, np.pi / 2, size=4)
    gamma = rng.uniform(0.0, qc.GAMMA_MAX)
    if restrict == "phi-zero":
        pr = pc = 0.0
    return Strategy(tr, pr), Strategy(tc, pc), gamma


def validate_closed_form(sample_count: int, tolerance: float, m: PayoffMatrix,
                         restrict: str = "none", form: str = "corrected",
                         seed: int = 0) -> ClosedFormReport:
    """Compare :func:`payoff_closed_form` with :func:`play` on seeded random inputs.

    ``restrict`` is one of ``"none"``, ``"phi-zero"`` (both phases zero) or
    ``"named-vs-Q"`` (D, H, Q in turn against Q). The first input whose
    deviation exceeds ``tolerance`` is kept as the counterexample.
    """
    if sample_count < 1:
        raise DomainError("sample_count must be >= 1")
    if restrict not in RESTRICTIONS:
        raise DomainError(f"restrict must be one of {RESTRICTIONS}, got {restrict!r}")
    rng = np.random.default_rng(seed)
    worst = 0.0
    counterexample = None
    for k in range(sample_count):
        row, col, gamma = _sample_inputs(rng, k, restrict)
        reference = play(row, col, gamma, m).payoff_row
        approx = payoff_closed_form(row, col, gamma, m, form=form)
        dev = abs(reference - approx)
        worst = max(worst, dev)
        if dev > tolerance and counterexample is None:
            counterexample = {
                "row": row.as_list(), "col": col.as_list(), "gamma": gamma,
                "pipeline": reference, "closed_form": approx, "deviation": dev,
            }
    return ClosedFormReport(form=form, restrict=restrict, sample_count=sample_count,
                            tolerance=tolerance, seed=seed, max_deviation=worst,
                            passed=counterexample is None, counterexample=counterexample)


def sample_outcomes(outcome: GameOutcome, shots: int, rng: np.random.Generator) -> dict[str, int]:
    """Simulated measurement counts; demonstration only, payoffs use exact probabilities."""
    if shots < 1:
        raise DomainError("shots must be >= 1")
    counts = rng.multinomial(shots, outcome.probabilities / outcome.probabilities.sum())
    return dict(zip(qc.BASIS_LABELS, (int(n) for n in counts)))
