"""Find the smallest Newman multiple of a degree-16 reciprocal polynomial.

The search walks the product degree upward. For each degree it builds a
linear system over the unknown cofactor coefficients whose rows force every
product coefficient into {0, 1}, then asks the feasibility engine. Degrees
below 38 all come back infeasible; 38 is feasible and the witness product
has a cofactor with a coefficient equal to 2, so the multiple is not a
product of two Newman polynomials.
"""

from newmanpoly import SearchConfig, SearchStatus, find_newman_multiple, parse_polynomial

p = parse_polynomial("x^16+x^15-x^11-x^8-x^5+x+1")
print("p =", p)
print("reciprocal:", p.is_reciprocal())

result = find_newman_multiple(p, SearchConfig(max_total_degree=60))
assert result.status is SearchStatus.FOUND

print("minimal total degree:", result.total_degree)
print("refuted degrees:", f"{p.degree + 1}..{result.total_degree - 1}",
      "with", len(result.unknown_degrees), "unknowns")
print("product  n =", result.product.to_polynomial())
print("hex      n =", result.product.to_hex())
print("cofactor q =", result.cofactor)

n = result.product.to_polynomial()
q = result.cofactor
assert p * q == n
assert n.is_newman()
print("verified: p * q == n and n has {0,1} coefficients")
print("largest cofactor coefficient:", max(q.coeffs))
