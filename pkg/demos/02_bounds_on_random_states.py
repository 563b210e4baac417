"""
Bounding the q-concurrence of random mixed states
=================================================

The lower bound comes from trace norms; the upper bound is a randomized
search over pure-state decompositions. The exact convex roof lies between.
"""

from qcbounds import BipartiteDims, bound_report, random_density

#%%

for rank in (1, 2, 3, 4):
    rho = random_density(BipartiteDims(3, 3), rank, seed=rank)
    rep = bound_report(rho, q=3.0, upper_iterations=400, seed=0)
    print(f"rank {rank}: ||rho^T||={rep.ppt_norm:.4f} ||R||={rep.realign_norm:.4f} "
          f"lower={rep.best_lower:.5f} upper={rep.upper_estimate:.5f}")

#%%
# Two qubits with q between 2 and s ~ 2.4721 have no trace-norm bound of this
# kind; the report says so through its regime tag.

rho = random_density(BipartiteDims(2, 2), 1, seed=3)
for q in (2.2, 2.6, 3.0):
    rep = bound_report(rho, q)
    print(q, rep.regime, rep.theorem1_bound, round(rep.prior_bound, 6))
