"""Exit criteria, each at its stated tolerance.

A per-criterion PASS/FAIL line is printed in the terminal summary (see conftest).
"""
import time

import numpy as np
import pytest

from oracles import classical_regret, purity_concurrence, random_game, series_expm
from qhawkdove import (
    HAWK, QUANTUM, Strategy, analyze, classical_embedding, classical_mixed_ess, classical_payoff,
    critical_gamma, is_nash, make_payoff_matrix, play, to_unitary, validate_closed_form,
)
from qhawkdove import quantum_core as qc
from qhawkdove.cli import sweep_rows
from qhawkdove.equilibrium import lattice_maximum
from qhawkdove.ewl_protocol import final_state

GAMMA_C_FIG2 = 0.495566


# -- 1: payoff curves against Q over gamma -------------------------------------

@pytest.fixture(scope="module")
def fig2_sweep():
    m = make_payoff_matrix(50, 100, 10)
    start = time.perf_counter()
    rows = sweep_rows(m, 256)
    return rows, time.perf_counter() - start


def test_criterion_1_quantum_curve(fig2_sweep, record_criterion):
    rows, _ = fig2_sweep
    dev = max(abs(r["payoff_Q_vs_Q"] - 15) for r in rows)
    assert record_criterion(1, "Q vs Q == 15", dev <= 1e-10, f"max dev {dev:.3g}")


def test_criterion_1_hawk_curve(fig2_sweep, record_criterion):
    rows, _ = fig2_sweep
    dev = max(abs(r["payoff_H_vs_Q"] - 50 * np.cos(2 * r["gamma"]) ** 2) for r in rows)
    assert record_criterion(1, "H vs Q == 50 cos^2(2g)", dev <= 1e-10, f"max dev {dev:.3g}")


def test_criterion_1_dove_curve(fig2_sweep, record_criterion):
    rows, _ = fig2_sweep
    dev = max(abs(r["payoff_D_vs_Q"] - (15 - 25 * np.sin(2 * r["gamma"]) ** 2)) for r in rows)
    assert record_criterion(1, "D vs Q == 15 - 25 sin^2(2g)", dev <= 1e-10, f"max dev {dev:.3g}")


def test_criterion_1_crossing(fig2_sweep, record_criterion):
    rows, _ = fig2_sweep
    step = (np.pi / 4) / 255
    diff = np.array([r["payoff_H_vs_Q"] - r["payoff_Q_vs_Q"] for r in rows])
    changes = np.nonzero(np.diff(np.sign(diff)))[0]
    ok = len(changes) == 1
    if ok:
        k = changes[0]
        g0, g1, d0, d1 = rows[k]["gamma"], rows[k + 1]["gamma"], diff[k], diff[k + 1]
        crossing = g0 - d0 * (g1 - g0) / (d1 - d0)
        ok = abs(crossing - GAMMA_C_FIG2) <= step and abs(crossing - critical_gamma(make_payoff_matrix(50, 100, 10))) <= step
    assert record_criterion(1, "single H/Q crossing within one step of gamma_c", ok)


def test_criterion_1_runtime(fig2_sweep, record_criterion):
    _, elapsed = fig2_sweep
    assert record_criterion(1, "runtime < 1 s", elapsed < 1.0, f"{elapsed:.3f} s")


# -- 2: threshold law ----------------------------------------------------------

def test_criterion_2_threshold_law(record_criterion):
    rng = np.random.default_rng(2)
    start = time.perf_counter()
    failures = []
    for _ in range(100):
        m = make_payoff_matrix(*random_game(rng))
        g = critical_gamma(m)
        if not np.pi / 8 < g < np.pi / 4:
            failures.append(("bounds", m))
        if is_nash((QUANTUM, QUANTUM), g - 0.01, m, grid_n=181):
            failures.append(("below", m))
        if not is_nash((QUANTUM, QUANTUM), g + 0.01, m, grid_n=181):
            failures.append(("above", m))
    elapsed = time.perf_counter() - start
    record_criterion(2, "threshold verdicts", not failures, f"{len(failures)} failures")
    record_criterion(2, "runtime < 30 s", elapsed < 30, f"{elapsed:.1f} s")
    assert not failures
    assert elapsed < 30


# -- 3: classical containment --------------------------------------------------

def test_criterion_3_classical_containment(record_criterion):
    rng = np.random.default_rng(3)
    m = make_payoff_matrix(50, 100, 10)
    worst = 0.0
    for tr, tc in rng.uniform(0, np.pi / 2, size=(1000, 2)):
        out = play(Strategy(tr, 0), Strategy(tc, 0), 0.0, m)
        row, col = classical_payoff(np.sin(tr) ** 2, np.sin(tc) ** 2, m)
        worst = max(worst, abs(out.payoff_row - row), abs(out.payoff_col - col))
    assert record_criterion(3, "pipeline == classical payoff", worst <= 1e-12, f"max dev {worst:.3g}")


# -- 4: classical baseline vs brute force --------------------------------------

@pytest.mark.parametrize("params", [(50, 100, 10), (30, 45, 3), (80, 400, 35), (10, 11, 4.9)])
def test_criterion_4_classical_baseline(params, record_criterion):
    v, i, d = params
    m = make_payoff_matrix(v, i, d)
    eq = classical_mixed_ess(m)
    grid = np.linspace(0, 1, 1001)
    regrets = np.array([classical_regret(p, v, i, d, grid) for p in grid])
    located = grid[int(np.argmin(regrets))]
    ok_location = abs(located - eq.p_star) <= 1e-3
    ok_indifference = classical_regret(eq.p_star, v, i, d, grid) <= 1e-9
    ok_payoff = abs(classical_payoff(eq.p_star, eq.p_star, m)[0] - eq.average_payoff) <= 1e-9
    ok_formula = (abs(eq.p_star - (v + 2 * d) / (i + 2 * d)) <= 1e-15
                  and abs(eq.average_payoff - (i - v) / (i + 2 * d) * (v / 2 - d)) <= 1e-12)
    ok = ok_location and ok_indifference and ok_payoff and ok_formula and eq.average_payoff < m.c
    if params == (50, 100, 10):
        ok = ok and abs(eq.p_star - 7 / 12) <= 1e-15 and abs(eq.average_payoff - 6.25) <= 1e-12
        ok = ok and eq.p_star < m.c and eq.average_payoff < m.c
    assert record_criterion(4, f"baseline {params}", ok, f"located {located}, p* {eq.p_star:.6f}")


# -- 5: ESS and Pareto verdicts ------------------------------------------------

@pytest.fixture(scope="module")
def report_max_entanglement():
    return analyze(np.pi / 4, make_payoff_matrix(50, 100, 10), grid_n=181)


def test_criterion_5_ess_at_max_entanglement(report_max_entanglement, record_criterion):
    r = report_max_entanglement
    ok = r.is_QQ_ess and r.is_QQ_unique_best_response
    assert record_criterion(5, "ESS and unique best response at pi/4", ok)


def test_criterion_5_pareto_at_max_entanglement(report_max_entanglement, record_criterion):
    r = report_max_entanglement
    detail = ""
    if r.pareto_dominator is not None:
        row, col, pr, pc = r.pareto_dominator
        detail = f"dominated by row={row.as_list()}, col={col.as_list()} with payoffs ({pr:.6g}, {pc:.6g})"
    assert record_criterion(5, "(Q,Q) Pareto optimal at pi/4", r.is_QQ_pareto_optimal, detail)


def test_criterion_5_no_nash_without_entanglement(record_criterion):
    r = analyze(0.0, make_payoff_matrix(50, 100, 10), grid_n=181)
    assert record_criterion(5, "no NE at gamma = 0", not r.is_QQ_nash)


def test_criterion_5_grid_maximum(record_criterion):
    m = make_payoff_matrix(50, 100, 10)
    worst = 0.0
    for g in np.linspace(0, np.pi / 4, 64):
        candidates = (15.0, 50 * np.cos(2 * g) ** 2, 15 - 4 * 25 * np.cos(g) ** 2 * np.sin(g) ** 2)
        worst = max(worst, abs(lattice_maximum(QUANTUM, g, m, grid_n=181) - max(candidates)))
    assert record_criterion(5, "grid max == analytic max", worst <= 2e-3, f"max dev {worst:.3g}")


# -- 6: quantum-core properties ------------------------------------------------

def test_criterion_6_quantum_core(record_criterion):
    rng = np.random.default_rng(6)
    start = time.perf_counter()
    n = 1000
    gammas = rng.uniform(0, np.pi / 4, n)
    worst_j = worst_u = worst_norm = worst_exp = worst_conc = 0.0
    m = make_payoff_matrix(50, 100, 10)
    for g, (t1, p1, t2, p2) in zip(gammas, rng.uniform(0, np.pi / 2, size=(n, 4))):
        j = qc.entangler(g)
        worst_j = max(worst_j, np.abs(j @ qc.dagger(j) - np.eye(4)).max())
        u = to_unitary(Strategy(t1, p1))
        worst_u = max(worst_u, np.abs(u @ qc.dagger(u) - np.eye(2)).max())
        psi = final_state(Strategy(t1, p1), Strategy(t2, p2), g)
        worst_norm = max(worst_norm, abs(np.sum(np.abs(psi) ** 2) - 1),
                         abs(play(Strategy(t1, p1), Strategy(t2, p2), g, m).probabilities.sum() - 1))
        worst_exp = max(worst_exp, np.abs(j - series_expm(1j * g * qc.HAWK_HAWK)).max())
        initial = qc.apply(j, qc.basis_state("DD"))
        worst_conc = max(worst_conc, abs(qc.concurrence(initial) - np.sin(2 * g)),
                         abs(purity_concurrence(initial) - np.sin(2 * g)) if g > 1e-4 else 0.0)
    elapsed = time.perf_counter() - start
    checks = [
        ("J unitary", worst_j <= 1e-12, worst_j),
        ("U unitary", worst_u <= 1e-12, worst_u),
        ("normalization", worst_norm <= 1e-12, worst_norm),
        ("J == series exp", worst_exp <= 1e-10, worst_exp),
        ("concurrence == sin 2g", worst_conc <= 1e-12, worst_conc),
    ]
    for name, ok, dev in checks:
        record_criterion(6, name, ok, f"max dev {dev:.3g}")
    record_criterion(6, "runtime < 5 s", elapsed < 5, f"{elapsed:.2f} s")
    assert all(ok for _, ok, _ in checks)
    assert elapsed < 5


# -- 7: closed-form audit ------------------------------------------------------

@pytest.mark.parametrize("restrict", ["phi-zero", "named-vs-Q"])
def test_criterion_7_restricted_audits(restrict, record_criterion):
    m = make_payoff_matrix(50, 100, 10)
    report = validate_closed_form(10000, 1e-10, m, restrict=restrict)
    assert record_criterion(7, f"closed form, {restrict}", report.passed,
                            f"max dev {report.max_deviation:.3g}")


def test_criterion_7_unrestricted_report(tmp_path, record_criterion):
    m = make_payoff_matrix(50, 100, 10)
    texts = []
    for k in range(2):
        path = tmp_path / f"audit{k}.json"
        parts = [validate_closed_form(10000, 1e-10, m, restrict="none", form=form).to_json()
                 for form in ("corrected", "printed")]
        path.write_text("".join(parts))
        texts.append(path.read_bytes())
    ok = texts[0] == texts[1] and b"max_deviation" in texts[0]
    assert record_criterion(7, "deterministic unrestricted report", ok)
