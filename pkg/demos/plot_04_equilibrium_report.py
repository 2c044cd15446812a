"""
Equilibrium report below and above the threshold
================================================

Best responses to Q, Nash and ESS verdicts, and the Pareto check for (Q, Q).
The Pareto check comes back negative at every entanglement level. Since
c < b/2, correlated hawk/dove outcomes, or a small hawk probability at
gamma = 0, give both players more than the cooperative payoff c.
"""

import json

import numpy as np

from qhawkdove import HAWK, Strategy, analyze, critical_gamma, make_payoff_matrix, play

m = make_payoff_matrix(50, 100, 10)
print(f"gamma_c = {critical_gamma(m):.6f}")

for gamma in (0.2, critical_gamma(m), 0.7, np.pi / 4):
    r = analyze(gamma, m, grid_n=91)
    print(f"\ngamma={gamma:.4f}")
    print(f"  best responses to Q: {len(r.best_responses_to_Q)} strategies, value {r.best_response_value:.4f}")
    print(f"  NE={r.is_QQ_nash} ESS={r.is_QQ_ess} unique={r.is_QQ_unique_best_response} "
          f"Pareto={r.is_QQ_pareto_optimal}")
    if r.pareto_dominator:
        row, col, pr, pc = r.pareto_dominator
        print(f"  (Q,Q) dominated by {row.as_list()} vs {col.as_list()} -> ({pr:.4f}, {pc:.4f})")

# A cleaner dominating pair at maximal entanglement.
out = play(Strategy(0, np.pi / 4), HAWK, np.pi / 4, m)
print("\nU(0, pi/4) vs H at gamma = pi/4:", json.dumps(out.as_dict()))
