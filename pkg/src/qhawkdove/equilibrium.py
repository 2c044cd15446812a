"""Best responses, Nash / ESS / Pareto checks and the critical entanglement."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.ndimage import maximum_filter
from scipy.optimize import minimize_scalar

from . import quantum_core as qc
from .ewl_protocol import expected_payoffs, play
from .game_model import ClassicalEquilibrium, PayoffMatrix, classical_mixed_ess
from .strategy_space import (
    IDENTIFY_TOL, PHI_MAX, QUANTUM, THETA_MAX, Strategy, lattice, lattice_points, named_strategies,
)

TIE_TOL = 1e-9
DEFAULT_GRID_N = 181
# Refinement stops once a sweep improves the payoff by less than this.
REFINE_TOL = 1e-10
MAX_REFINED = 32


def critical_gamma(m: PayoffMatrix) -> float:
    """Entanglement above which Q is a best response to itself: 1/2 arccos(sqrt(c/b))."""
    return 0.5 * float(np.arccos(np.sqrt(m.c / m.b)))


def critical_gamma_from_costs(m: PayoffMatrix) -> float:
    """Same threshold written in the original parameters, 1/2 arccos(sqrt(1/2 - d/v))."""
    return 0.5 * float(np.arccos(np.sqrt(0.5 - m.d / m.v)))


def payoffs_against_quantum(gamma: float, m: PayoffMatrix) -> dict[str, float]:
    """Closed-form row payoffs of D, H and Q against Q.

    Expanding the pipeline gives ``c cos^2(2g) - a sin^2(2g)`` for D. The
    frequently quoted ``c - 4a cos^2(g) sin^2(g)`` omits the loss on the
    dove-dove term and is not used here.
    """
    gamma = qc.check_gamma(gamma)
    c2, s2 = np.cos(2 * gamma) ** 2, np.sin(2 * gamma) ** 2
    return {"D": m.c * c2 - m.a * s2, "H": m.b * c2, "Q": m.c}


# --------------------------------------------------------------------------
# best responses


@dataclass(frozen=True)
class BestResponses:
    strategies: tuple[Strategy, ...]
    value: float
    grid_n: int

    def contains(self, s: Strategy, tol: float = IDENTIFY_TOL) -> bool:
        return any(s.isclose(t, tol) for t in self.strategies)


def _row_payoff(row: Strategy, col: Strategy, gamma, m) -> float:
    r, _ = expected_payoffs(row.theta, row.phi, col.theta, col.phi, gamma, m)
    return float(r)


def _lattice_payoffs(opponent: Strategy, gamma, m, thetas, phis) -> np.ndarray:
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    r, _ = expected_payoffs(tt, pp, opponent.theta, opponent.phi, gamma, m)
    return r


def lattice_maximum(opponent: Strategy, gamma: float, m: PayoffMatrix,
                    grid_n: int = DEFAULT_GRID_N, phi_max: float = PHI_MAX) -> float:
    """Largest row payoff against ``opponent`` over the lattice alone."""
    thetas, phis = lattice(grid_n, phi_max)
    return float(_lattice_payoffs(opponent, gamma, m, thetas, phis).max())


def _best_on_interval(f, lo: float, hi: float, x0: float) -> tuple[float, float]:
    best_x, best_v = x0, f(x0)
    for x in (lo, hi):
        v = f(x)
        if v > best_v:
            best_x, best_v = x, v
    if hi > lo:
        res = minimize_scalar(lambda x: -f(x), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12})
        if -res.fun > best_v:
            best_x, best_v = float(res.x), float(-res.fun)
    return best_x, best_v


def _refine(start: Strategy, opponent: Strategy, gamma, m, phi_max) -> tuple[Strategy, float]:
    """Coordinate ascent in (theta, phi), each 1-D step also trying both bounds."""
    theta, phi = start.theta, start.phi
    value = _row_payoff(start, opponent, gamma, m)
    for _ in range(200):
        theta, _ = _best_on_interval(
            lambda x: _row_payoff(Strategy(x, phi, phi_max), opponent, gamma, m),
            0.0, THETA_MAX, theta)
        phi, new_value = _best_on_interval(
            lambda y: _row_payoff(Strategy(theta, y, phi_max), opponent, gamma, m),
            0.0, phi_max, phi)
        improved = new_value - value
        value = new_value
        if improved < REFINE_TOL:
            break
    return Strategy(theta, phi, phi_max).canonical(), value


def _dedupe(strategies) -> tuple[Strategy, ...]:
    """Sorted strategies with near-duplicates (within ``IDENTIFY_TOL``) dropped."""
    out: list[Strategy] = []
    buckets: dict[tuple[int, int], list[Strategy]] = {}
    for s in sorted(s.canonical() for s in strategies):
        key = (round(s.theta / IDENTIFY_TOL), round(s.phi / IDENTIFY_TOL))
        near = (t for dt in (-1, 0, 1) for dp in (-1, 0, 1)
                for t in buckets.get((key[0] + dt, key[1] + dp), ()))
        if not any(s.isclose(t) for t in near):
            out.append(s)
            buckets.setdefault(key, []).append(s)
    return tuple(out)


def best_responses(opponent: Strategy, gamma: float, m: PayoffMatrix,
                   grid_n: int = DEFAULT_GRID_N, phi_max: float = PHI_MAX) -> BestResponses:
    """All row strategies maximizing the payoff against ``opponent``.

    The lattice is scanned first; its local maxima within a Lipschitz window of
    the lattice maximum are refined by coordinate ascent. Every refined point
    or lattice point within ``TIE_TOL`` of the overall maximum is returned, so
    flat ridges of maximizers come back as their lattice samples.
    """
    gamma = qc.check_gamma(gamma)
    thetas, phis = lattice(grid_n, phi_max)
    values = _lattice_payoffs(opponent, gamma, m, thetas, phis)
    top = values.max()
    # |dP/dx| <= 2 per coordinate, so a maximizer's lattice neighbour lies within this.
    step = thetas[1] - thetas[0]
    window = 2.0 * (m.a + m.b + m.c) * step
    local = (values >= maximum_filter(values, size=3, mode="nearest")) & (values >= top - window)
    idx = np.argwhere(local)
    order = np.argsort(-values[local], kind="stable")
    starts = _dedupe(Strategy(thetas[i], phis[j], phi_max) for i, j in idx[order])
    starts = sorted(starts, key=lambda s: -_row_payoff(s, opponent, gamma, m))[:MAX_REFINED]

    refined = [_refine(s, opponent, gamma, m, phi_max) for s in starts]
    best = max([top] + [v for _, v in refined])
    winners = [s for s, v in refined if v >= best - TIE_TOL]
    winners += [Strategy(thetas[i], phis[j], phi_max)
                for i, j in np.argwhere(values >= best - TIE_TOL)]
    return BestResponses(strategies=_dedupe(winners), value=float(best), grid_n=grid_n)


# --------------------------------------------------------------------------
# equilibrium tests


def is_nash(pair: tuple[Strategy, Strategy], gamma: float, m: PayoffMatrix,
            grid_n: int = DEFAULT_GRID_N, phi_max: float = PHI_MAX) -> bool:
    row, col = pair
    if _row_payoff(row, col, gamma, m) < best_responses(col, gamma, m, grid_n, phi_max).value - TIE_TOL:
        return False
    if row.isclose(col):
        return True
    # Column payoff of (row, col) is the row payoff of (col, row).
    return _row_payoff(col, row, gamma, m) >= best_responses(row, gamma, m, grid_n, phi_max).value - TIE_TOL


def _invaders(s: Strategy, gamma, m, grid_n, phi_max) -> tuple[np.ndarray, np.ndarray]:
    theta, phi = lattice_points(grid_n, phi_max)
    extra = [n for n in named_strategies().values() if n.phi <= phi_max]
    extra += list(best_responses(s, gamma, m, grid_n, phi_max).strategies)
    theta = np.append(theta, [t.theta for t in extra])
    phi = np.append(phi, [t.phi for t in extra])
    c = s.canonical()
    at_hawk = np.abs(theta - THETA_MAX) <= IDENTIFY_TOL
    same_phase = np.abs(phi - c.phi) <= IDENTIFY_TOL
    if abs(c.theta - THETA_MAX) <= IDENTIFY_TOL:
        same_phase |= at_hawk
    same = (np.abs(theta - c.theta) <= IDENTIFY_TOL) & same_phase
    return theta[~same], phi[~same]


def is_ess(s: Strategy, gamma: float, m: PayoffMatrix, grid_n: int = DEFAULT_GRID_N,
           phi_max: float = PHI_MAX) -> bool:
    """Maynard Smith's conditions against every lattice, named and best-response invader T:
    E(s,s) > E(T,s), or E(s,s) == E(T,s) and E(s,T) > E(T,T)."""
    gamma = qc.check_gamma(gamma)
    t_theta, t_phi = _invaders(s, gamma, m, grid_n, phi_max)
    e_ss = _row_payoff(s, s, gamma, m)
    e_ts, e_st = expected_payoffs(t_theta, t_phi, s.theta, s.phi, gamma, m)
    e_tt, _ = expected_payoffs(t_theta, t_phi, t_theta, t_phi, gamma, m)
    strict = e_ss > e_ts + TIE_TOL
    tie = np.abs(e_ss - e_ts) <= TIE_TOL
    second = e_st > e_tt + TIE_TOL
    return bool(np.all(strict | (tie & second)))


def pareto_dominator(pair: tuple[Strategy, Strategy], gamma: float, m: PayoffMatrix,
                     grid_n: int = DEFAULT_GRID_N, phi_max: float = PHI_MAX,
                     chunk: int = 64):
    """First lattice pair whose payoffs beat ``pair``'s for both players by more
    than ``TIE_TOL``, as ``(row, col, payoff_row, payoff_col)``; None if there is none."""
    outcome = play(*pair, gamma, m)
    r0, c0 = outcome.payoff_row, outcome.payoff_col
    # No outcome pays more than b to either player.
    if r0 + TIE_TOL > m.b or c0 + TIE_TOL > m.b:
        return None
    th, ph = lattice_points(grid_n, phi_max)
    for start in range(0, len(th), chunk):
        rt = th[start:start + chunk, None]
        rp = ph[start:start + chunk, None]
        r, c = expected_payoffs(rt, rp, th[None, :], ph[None, :], gamma, m)
        hit = np.argwhere((r >= r0 + TIE_TOL) & (c >= c0 + TIE_TOL))
        if len(hit):
            i, j = hit[0]
            row = Strategy(th[start + i], ph[start + i], phi_max)
            col = Strategy(th[j], ph[j], phi_max)
            return row, col, float(r[i, j]), float(c[i, j])
    return None


def is_pareto_optimal(pair: tuple[Strategy, Strategy], gamma: float, m: PayoffMatrix,
                      grid_n: int = DEFAULT_GRID_N, phi_max: float = PHI_MAX) -> bool:
    return pareto_dominator(pair, gamma, m, grid_n, phi_max) is None


# --------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class EquilibriumReport:
    gamma: float
    gamma_critical: float
    best_responses_to_Q: tuple[Strategy, ...]
    best_response_value: float
    is_QQ_nash: bool
    is_QQ_ess: bool
    is_QQ_unique_best_response: bool
    is_QQ_pareto_optimal: bool
    classical_baseline: ClassicalEquilibrium
    pareto_dominator: tuple | None = None
    grid_n: int = DEFAULT_GRID_N
    tolerance: float = TIE_TOL
    payoff_matrix: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        dom = None
        if self.pareto_dominator is not None:
            row, col, pr, pc = self.pareto_dominator
            dom = {"row": row.as_list(), "col": col.as_list(), "payoff_row": pr, "payoff_col": pc}
        return {
            "gamma": self.gamma,
            "gamma_critical": self.gamma_critical,
            "best_responses_to_Q": [s.as_list() for s in self.best_responses_to_Q],
            "best_response_value": self.best_response_value,
            "is_QQ_nash": self.is_QQ_nash,
            "is_QQ_ess": self.is_QQ_ess,
            "is_QQ_unique_best_response": self.is_QQ_unique_best_response,
            "is_QQ_pareto_optimal": self.is_QQ_pareto_optimal,
            "pareto_dominator": dom,
            "classical_baseline": self.classical_baseline.as_dict(),
            "payoff_matrix": self.payoff_matrix,
            "grid_n": self.grid_n,
            "tolerance": self.tolerance,
        }


def analyze(gamma: float, m: PayoffMatrix, grid_n: int = DEFAULT_GRID_N) -> EquilibriumReport:
    gamma = qc.check_gamma(gamma)
    br = best_responses(QUANTUM, gamma, m, grid_n)
    qq = _row_payoff(QUANTUM, QUANTUM, gamma, m)
    nash = qq >= br.value - TIE_TOL
    unique = nash and len(br.strategies) == 1 and br.strategies[0].isclose(QUANTUM)
    dominator = pareto_dominator((QUANTUM, QUANTUM), gamma, m, grid_n)
    return EquilibriumReport(
        gamma=gamma,
        gamma_critical=critical_gamma(m),
        best_responses_to_Q=br.strategies,
        best_response_value=br.value,
        is_QQ_nash=nash,
        is_QQ_ess=nash and is_ess(QUANTUM, gamma, m, grid_n),
        is_QQ_unique_best_response=unique,
        is_QQ_pareto_optimal=dominator is None,
        classical_baseline=classical_mixed_ess(m),
        pareto_dominator=dominator,
        grid_n=grid_n,
        payoff_matrix=m.as_dict(),
    )
