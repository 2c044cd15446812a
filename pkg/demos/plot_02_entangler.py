"""
Entangling gate and prepared entanglement
=========================================

J(gamma) applied to |DD> and the concurrence of the result.
"""

import numpy as np

from qhawkdove import quantum_core as qc

np.set_printoptions(precision=4, suppress=True)

print("J(pi/4) =")
print(qc.entangler(np.pi / 4))

for gamma in np.linspace(0, np.pi / 4, 5):
    psi = qc.apply(qc.entangler(gamma), qc.basis_state("DD"))
    print(f"gamma={gamma:.4f}  psi={psi}  concurrence={qc.concurrence(psi):.4f}  sin(2 gamma)={np.sin(2 * gamma):.4f}")
