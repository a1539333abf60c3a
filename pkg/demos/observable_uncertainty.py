"""Walk through the truncated local orthogonal observables and their
uncertainty bound.

The n^2 observables are orthonormal, their squares sum to n times the
truncated identity, and the resulting variance-sum bound is saturated exactly
by pure states inside the truncation.
"""

import numpy as np

from cvsteer import (
    apply_loss,
    build_tloos,
    expectation_values,
    fock_density,
    rotate_tloos,
    tmsv_covariance,
    uncertainty_sum,
)

tloos = build_tloos(2)
print("2-level set (canonical order: projectors, symmetric pair, antisymmetric pair)")
for label, mat in zip(tloos.pair_labels(), tloos.matrices):
    print(f"  {label}:\n{np.array_str(mat, precision=4)}")

gram = np.einsum("iab,jba->ij", tloos.matrices, tloos.matrices)
print(f"\northonormality, max |Tr(Ai Aj) - delta_ij| = {np.abs(gram - np.eye(4)).max():.2e}")
total = np.einsum("jab,jbc->ac", tloos.matrices, tloos.matrices)
print(f"completeness,  max |sum Aj^2 - 2*I|       = {np.abs(total - 2 * np.eye(2)).max():.2e}")

print("\nvariance sums against the bound (n - 1) * weight:")
for name, state in [
    ("vacuum", np.diag([1.0, 0.0])),
    ("maximally mixed qubit", np.diag([0.5, 0.5])),
    ("thermal marginal of a lossy squeezed state",
     fock_density(apply_loss(tmsv_covariance(0.5), 0.5, "B"), 2, 2).reduced_b),
]:
    total_var, bound = uncertainty_sum(state, tloos)
    print(f"  {name}: sum = {total_var:.6f}, bound = {bound:.6f}")

print("\npure states saturate the bound; mixing opens a gap:")
rng = np.random.default_rng(1)
psi = rng.standard_normal(2) + 1j * rng.standard_normal(2)
psi /= np.linalg.norm(psi)
pure = np.outer(psi, psi.conj())
for p in (0.0, 0.2, 0.5):
    state = (1 - p) * pure + p * np.eye(2) / 2
    total_var, bound = uncertainty_sum(state, tloos)
    print(f"  mixing p = {p}: sum - bound = {total_var - bound:+.6f}")

print("\northogonal mixing preserves the identities and the squared-mean sum:")
state = fock_density(apply_loss(tmsv_covariance(0.5), 0.5, "B"), 3, 3).reduced_b
tloos3 = build_tloos(3)
base = (expectation_values(state, tloos3) ** 2).sum()
q, _ = np.linalg.qr(rng.standard_normal((9, 9)))
rotated = rotate_tloos(tloos3, q)
after = (expectation_values(state, rotated) ** 2).sum()
print(f"  sum <A_j>^2 before: {base:.10f}  after a random rotation: {after:.10f}")
