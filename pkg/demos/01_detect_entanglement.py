"""
Detecting entanglement with the PPT and realignment criteria
=============================================================

Both tests are one-sided: a state that passes them may still be entangled.
"""

import numpy as np

from qcbounds import BipartiteDims, detect, isotropic_state, partial_transpose, validate_density
from qcbounds.states import maximally_entangled, random_separable_state

#%%
# A Bell state fails both tests. The partial transpose of |Phi+><Phi+| is
# SWAP/2, whose smallest eigenvalue is -1/2.

bell = maximally_entangled(2).projector()
print(np.round(partial_transpose(bell).real, 3))
for v in detect(bell):
    print(v.criterion.value, v.status.value, round(v.witness, 6))

#%%
# Isotropic states are entangled exactly when F > 1/d.

for d in (2, 3):
    for F in (1 / d - 0.05, 1 / d, 1 / d + 0.05, 1.0):
        ppt, ccnr = detect(isotropic_state(F, d))
        print(f"d={d} F={F:.3f}  PPT {ppt.status.value:12s} CCNR {ccnr.status.value:12s} "
              f"||R||-1 = {ccnr.witness:+.4f}")

#%%
# Mixtures of product states never trigger either test.

rho = random_separable_state(BipartiteDims(3, 3), terms=5, seed=1)
print([v.status.value for v in detect(rho)])

#%%
# A 3x3 PPT-entangled state (Horodecki, a = 0.5) passes the PPT test but the
# realignment test catches it.

a = 0.5
m = np.zeros((9, 9))
for i in (0, 4, 8):
    for j in (0, 4, 8):
        m[i, j] = a
for i in (1, 2, 3, 5, 7):
    m[i, i] = a
m[6, 6] = m[8, 8] = (1 + a) / 2
m[6, 8] = m[8, 6] = np.sqrt(1 - a * a) / 2
rho = validate_density(m / np.trace(m), BipartiteDims(3, 3))
for v in detect(rho):
    print(v.criterion.value, v.status.value, f"{v.witness:+.5f}")
