# Pure diagrams from degree sequences.
#
# A strictly increasing sequence d_0 < ... < d_s determines a rational
# Betti table with one entry per column: the unique (up to scale) table of
# that shape satisfying the first s Herzog-Kuhl equations.  Run this file
# top to bottom; it prints the tables it builds.

from bettidecomp import emit_diagram, hk_residuals, normalize, pure_diagram

# The sequence (0, 2, 3, 5) in three variables: a module resolved with
# generators in degree 0, first syzygies in 2, then 3, then 5.
p = pure_diagram((0, 2, 3, 5), 3)
print("pi(0, 2, 3, 5):")
print(emit_diagram(p.betti, "table"))

# Every entry is positive, and the alternating column sums weighted by
# powers of the degree vanish: the Herzog-Kuhl equations.
print("entries:", [str(p.entry(i)) for i in range(4)])
print("residuals through s=3:", hk_residuals(p.betti, 3))

# A single degree gives the free module shifted to that degree.
print("\npi(5):")
print(emit_diagram(pure_diagram((5,), 3).betti, "table"))

# Normalization rescales a degree-zero-generated diagram so the corner
# entry is 1; for (0, 2, 3, 5) the scale is 2 * 3 * 5 = 30.
nd = normalize(p)
print(f"\nnormalized by {nd.scale}:")
print(emit_diagram(nd.betti, "table"))

# The Koszul complex on three variables is the pure diagram of
# (0, 1, 2, 3) scaled by 6.
koszul = pure_diagram((0, 1, 2, 3), 3)
print("\npi(0, 1, 2, 3)  (Koszul shape, scaled by 6 gives 1, 3, 3, 1):")
print(emit_diagram(koszul.betti.scaled(6), "table"))
