"""A borrowed distribution can unlock a blocked transformation.

The pair here is the classic surprise: y does not majorize x, yet after
tensoring both sides with the right two-level helper z the order holds.
The helper is returned unchanged, hence "catalyst".
"""

from trumpkit import (
    boundary_witness,
    classify,
    majorizes,
    nonuniform_demo,
    pv,
    separating_example,
    trumps_with,
)

x = pv("0.4", "0.4", "0.1", "0.1")
y = pv("0.5", "0.25", "0.25", "0")
z = pv("0.6", "0.4")

print("plain comparison:", majorizes(x, y).verdict)
cert = trumps_with(x, y, z)
print("with catalyst z =", z, "->", cert.report.verdict)
print("lifted gaps:", [str(g) for g in cert.report.prefix_gaps])
print("(one gap is zero, so this certificate sits on the boundary)")

print()
print("Which targets can be helped at all?  Count the components at the")
print("extremes: with d1 at the top, d2 at the bottom, help exists exactly")
print("when d1 + d2 + 2 <= dimension.")
for target in (y, pv("0.5", "0.5"), pv("1/3", "1/3", "1/3"), pv("0.4", "0.3", "0.2", "0.1")):
    c = classify(target)
    print(f"  {target}: useful={c.useful} (d1={c.d1}, d2={c.d2})")

print()
w = boundary_witness(y)
print("averaged boundary point for y:", w)
print("it is majorized with a tight prefix:", majorizes(w, y).tight_indices)

print()
print("Nudging that point off the boundary leaves plain majorization but")
print("stays catalyzable - a constructive separation:")
sep = separating_example(y)
print("  x' =", sep.x_prime)
print("  y majorizes x'?", sep.not_majorized_proof.verdict)
print("  catalyst dimension:", sep.certificate.z.dim,
      "| lifted verdict:", sep.certificate.report.verdict)

print()
print("The same recipe shows any non-flat z catalyzes something:")
demo = nonuniform_demo(pv("1/2", "1/3", "1/6"))
print("  built pair x' =", demo.x_prime, " y =", demo.y)
print("  y majorizes x'?", demo.not_majorized_proof.verdict,
      "| with z:", demo.certificate.report.verdict)
