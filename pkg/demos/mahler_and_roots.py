# Mahler measures and root tests for a few integer polynomials.
#
# The measure is |leading| * product of |root| over roots outside the unit
# circle, computed from certified root enclosures. A positive real root is
# an immediate obstruction to dividing any Newman polynomial: Newman values
# at positive arguments are positive.

from newmanpoly import (
    complex_roots,
    has_positive_real_root,
    mahler_measure,
    parse_polynomial,
)

salem = parse_polynomial("x^10-x^9+x^7-x^6+x^5-x^4+x^3-x+1")
golden = parse_polynomial("x^2-x-1")
cyclo = parse_polynomial("x^4+x^3+x^2+x+1")

for p in (salem, golden, cyclo):
    m = mahler_measure(p)
    print(f"{str(p):45s}  M = {m.formatted(9)}  positive real root: "
          f"{has_positive_real_root(p)}")

# the salem polynomial has exactly one root outside the closed unit disk
roots = complex_roots(salem)
outside = [r for r in roots if abs(r.value) > 1 + r.radius]
print()
print("roots of the salem polynomial outside |z| = 1:", len(outside))
for r in outside:
    print("  value", complex(r.value), " enclosure radius", float(r.radius))
