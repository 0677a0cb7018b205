# Greedy chain decomposition of a real Betti table.
#
# The quotient k[x,y,z]/(x^2, x*y, x*z^2) has the Betti table stored in
# fixtures/quotient_x2_xy_xz2.json.  Its diagram is a positive integer
# combination of four pure diagrams forming a chain, found by repeatedly
# subtracting as much as possible of the pure diagram of the minimal
# degrees.

from pathlib import Path

from bettidecomp import (
    emit_decomposition,
    emit_diagram,
    greedy_decompose,
    parse_diagram,
    verify_decomposition,
)

fixture = Path(__file__).resolve().parent.parent / "fixtures" / "quotient_x2_xy_xz2.json"
diagram = parse_diagram(fixture.read_text(), "json")

print("input table:")
print(emit_diagram(diagram, "table"))

dec = greedy_decompose(diagram)
print("decomposition:")
for coefficient, p in dec.terms:
    print(f"  {coefficient} * pi{tuple(p.degrees)}")

# The verifier reconstructs the sum exactly and cross-checks every
# coefficient through the dual functional of its chain element.
print("verified:", bool(verify_decomposition(dec, diagram)))
print("as json: ", emit_decomposition(dec))

# Codimensions along the chain drop from the projective dimension (3)
# down to the codimension of the module (1), one Cohen-Macaulay piece
# for each value in between.
print("codimensions:", [p.codimension for _, p in dec.terms])
