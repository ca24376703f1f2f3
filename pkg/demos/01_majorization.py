"""Tour of the exact majorization order.

Walks through comparing two distributions, reading the prefix gaps, and
building the doubly stochastic matrix that carries one onto the other.
"""

from trumpkit import ds_witness, majorizes, majorizes_alt, pv, sort_desc, t_transform_chain

x = pv("0.3", "0.3", "0.2", "0.2")
y = pv("0.5", "0.25", "0.25", "0")

print("x =", x, " y =", y)
report = majorizes(x, y)
print("y majorizes x?", report.verdict)
print("prefix gaps (y ahead of x after each sorted prefix):",
      [str(g) for g in report.prefix_gaps])
print("tight prefixes:", report.tight_indices)

tail, tsum = majorizes_alt(x, y)
print("independent routes agree:", tail == tsum == report.verdict)

print()
print("Because the order holds, a doubly stochastic matrix maps sorted y")
print("onto sorted x.  It is assembled from two-coordinate averaging steps:")
chain = t_transform_chain(x, y)
for i, step in enumerate(chain, 1):
    print(f"  step {i}:")
    for row in step.entries:
        print("   ", [str(e) for e in row])
d = ds_witness(x, y)
print("product applied to sorted y:",
      [str(c) for c in d.apply(sort_desc(y).components)])
print("sorted x:                   ",
      [str(c) for c in sort_desc(x).components])

print()
bad = pv("0.4", "0.4", "0.1", "0.1")
report = majorizes(bad, y)
print("x =", bad, "fails against the same y:")
print("gaps:", [str(g) for g in report.prefix_gaps],
      "- the negative entry pins the failing prefix")
