"""Measure how far above the Gaussian boundary the truncated-observable
criterion keeps detecting amplified states.

For each squeezing the Gaussian A->B window closes at
G* = 2*cosh(2r)/(cosh(2r) + 1); the 2-level criterion still fires in a band
G* < G < G* + eps(r) whose measured width peaks near r = 0.4.
"""

from cvsteer import A_TO_B, gaussian_gain_boundary, squeezing_range
from cvsteer.scan import evaluate_point

result = squeezing_range("gain", "tloo-n2", A_TO_B, r_step=0.05, r_max=0.8)

print("excess-gain window of the 2-level criterion over the Gaussian boundary")
print("  r      G* (gaussian)   eps(r)")
for r, eps in result.eps_curve:
    print(f"  {r:4.2f}   {gaussian_gain_boundary(r):.6f}       {eps:.5f}")

print(f"\n  detected squeezing interval: ({result.r_low:.3f}, {result.r_high:.3f})")
print(f"  widest window: eps = {result.eps_max:.5f} at r = {result.eps_argmax:.2f}")

r = result.eps_argmax
boundary = gaussian_gain_boundary(r)
print(f"\nspot check at r = {r:.2f}: gains just above the Gaussian boundary")
for offset in (0.0, 0.02, 0.04, 0.06):
    verdict = evaluate_point("gain", r, boundary + offset, "tloo-n2", A_TO_B)
    print(f"  G = G* + {offset:.2f}: tloo margin = {verdict.margin:+.5f} "
          f"steerable = {verdict.steerable}")
