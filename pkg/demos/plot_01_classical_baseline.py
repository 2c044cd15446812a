"""
Classical Hawk-Dove baseline
============================

The mixed ESS of the classical game and why it is inefficient.
"""

import numpy as np

from qhawkdove import classical_mixed_ess, classical_payoff, make_payoff_matrix

m = make_payoff_matrix(v=50, i=100, d=10)
print("reduced payoffs a, b, c =", m.a, m.b, m.c)

eq = classical_mixed_ess(m)
print(f"hawk probability at the mixed ESS: {eq.p_star:.6f}")
print(f"average payoff per round:          {eq.average_payoff:.4f}  (mutual dove pays {m.c})")

# Against a population at p*, hawk and dove earn the same.
for p in (0.0, 0.25, 1.0):
    print(f"  row plays hawk w.p. {p:.2f} -> {classical_payoff(p, eq.p_star, m)[0]:.6f}")

# Brute-force check: the symmetric profile with the smallest regret.
grid = np.linspace(0, 1, 1001)
regret = [max(classical_payoff(x, p, m)[0] for x in grid) - classical_payoff(p, p, m)[0] for p in grid]
print("grid equilibrium:", grid[int(np.argmin(regret))])
