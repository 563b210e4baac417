"""
How the normalized q-concurrence depends on q
=============================================

f(q) = C_q / (1 - d^(1-q)) is what lets a C_2 bound be lifted to larger q.
"""

import numpy as np

from qcbounds import critical_s, f_ratio, g_dq, q_concurrence_pure

#%%
# Two qubits: f(2) = f(3) for every spectrum, and f increases from s onward.

lam = np.array([0.8, 0.2])
print("s =", critical_s())
for q in (2.0, 2.2, critical_s(), 3.0, 4.0, 6.0):
    print(f"q={q:.4f} f={f_ratio(lam, q, 2):.6f}")
print("C3 / C2 =", q_concurrence_pure(lam, 3) / q_concurrence_pure(lam, 2))

#%%
# Qutrits with one dominant Schmidt coefficient: f dips slightly just above
# q = 2 before it starts to grow.

lam = np.array([0.947, 0.0266, 0.0264])
for q in np.linspace(2, 2.2, 9):
    print(f"q={q:.3f} f={f_ratio(lam, q, 3):.7f} G={g_dq(lam, q, 3):+.2e}")
