"""Map where plain majorization ends and certified catalysis begins.

Samples points around a target, labels each exactly, and writes a CSV plus
one JSON certificate sidecar per certified row - ready for plotting.
"""

import os

from trumpkit import SearchConfig, pv, sample_region, write_region_csv

y = pv("0.5", "0.25", "0.25", "0")
out = os.path.join(os.path.dirname(__file__) or ".", "region.csv")

records = sample_region(y, k_max=2, n=40, seed=11,
                        config=SearchConfig(restarts=3, max_iters=16))

inside = sum(r.in_S for r in records)
caught = sum(r.certificate is not None and not r.in_S for r in records)
print(f"{len(records)} points: {inside} plainly majorized,")
print(f"{caught} outside yet certified with a catalyst of dimension <= 2")

sidecars = write_region_csv(records, out, 2)
print("wrote", out, "and", len(sidecars), "certificate files")

with open(out, encoding="utf-8") as fh:
    for line in list(fh)[:6]:
        print(" ", line.rstrip())
print("  ...")
