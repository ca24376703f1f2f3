"""Finding catalysts automatically: float descent, exact certification.

The search minimizes the worst lifted prefix excess in floating point, then
snaps promising points to rationals and re-checks them exactly.  Only the
exact check can say yes; the floats just point at candidates.
"""

import time

from trumpkit import (
    SearchConfig,
    find_catalyst,
    h_value,
    majorizes,
    minimize_f,
    pv,
    ray_probe,
)

x = pv("0.4", "0.4", "0.1", "0.1")
y = pv("0.5", "0.25", "0.25", "0")

print("objective at the flat two-level point:", h_value(x, y, (0.5, 0.5)))
print("objective at the known good catalyst: ", h_value(x, y, (0.6, 0.4)))

numeric = minimize_f(x, y, SearchConfig(k=2))
print("numeric minimum:", numeric.f_value, "at z ~", numeric.z_float)

t0 = time.perf_counter()
result = find_catalyst(x, y, k_max=2)
dt = time.perf_counter() - t0
print(f"certified in {dt * 1000:.0f} ms:",
      [str(c) for c in result.certificate.z.components])

print()
blocked = pv("0.6", "0.2", "0.1", "0.1")
target = pv("0.5", "0.3", "0.1", "0.1")
res = find_catalyst(blocked, target, k_max=3)
print("x with a larger top component than y:", res.status.value,
      "| impossible by extremes:", res.impossible_by_extremes)

print()
print("How far can catalysts reach along a fixed ray out of the flat point?")
print("Probing y = (0.4, 0.3, 0.2, 0.1) for each catalyst dimension:")
probe = ray_probe(pv("0.4", "0.3", "0.2", "0.1"), 3)
for k, t in probe.ladder:
    print(f"  dimension {k}: certified up to t = {float(t):.6f}")
witness = probe.certificate.x
print("witness at the top bound still plainly majorized?",
      majorizes(witness, pv("0.4", "0.3", "0.2", "0.1")).verdict)
print("catalyst behind the bound:",
      [str(c) for c in probe.certificate.z.components])
