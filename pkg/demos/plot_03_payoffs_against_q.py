"""
Payoffs against Q as entanglement grows
=======================================

Row payoffs of D, H and Q against a column player using Q, together with the
critical entanglement where H stops beating Q. The same numbers are written by
``qhdg sweep``.
"""

import numpy as np

from qhawkdove import critical_gamma, make_payoff_matrix
from qhawkdove.cli import sweep_rows

m = make_payoff_matrix(50, 100, 10)
rows = sweep_rows(m, 256)
g_c = critical_gamma(m)
print(f"gamma_c = {g_c:.6f}")

for r in rows[::32] + [rows[-1]]:
    print("gamma={gamma:.4f}  D={payoff_D_vs_Q:8.3f}  H={payoff_H_vs_Q:8.3f}  Q={payoff_Q_vs_Q:8.3f}".format(**r))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    g = np.array([r["gamma"] for r in rows])
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(g, [r["payoff_D_vs_Q"] for r in rows], ":", label="D vs Q")
    ax.plot(g, [r["payoff_H_vs_Q"] for r in rows], "--", label="H vs Q")
    ax.plot(g, [r["payoff_Q_vs_Q"] for r in rows], "-", label="Q vs Q")
    ax.axvline(g_c, color="grey", lw=0.8)
    ax.set_xlabel("gamma")
    ax.set_ylabel("row payoff")
    ax.legend()
    fig.tight_layout()
    fig.savefig("payoffs_against_q.png", dpi=120)
    print("wrote payoffs_against_q.png")
