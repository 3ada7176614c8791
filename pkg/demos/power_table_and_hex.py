# Newman multiples of the square of the small-measure salem polynomial.
#
# Multiples of the square first appear at total degree 59. Witnesses are
# stored as hex strings: read the bits as coefficients, most significant
# bit = leading term, so the integer value is just n(2).

from newmanpoly import (
    SearchConfig,
    SearchStatus,
    decode_hex,
    encode_hex,
    find_newman_multiple,
    parse_polynomial,
)

l = parse_polynomial("x^10-x^9+x^7-x^6+x^5-x^4+x^3-x+1")
g = l * l

config = SearchConfig(
    max_total_degree=59,
    min_total_degree=59,
    power=2,
    binary_cofactor=True,       # unknowns are the multiple's own 0/1 coefficients
    explore_all_degrees=True,
)
result = find_newman_multiple(l, config)
assert result.status is SearchStatus.FOUND

for degree in sorted(result.witnesses):
    w = result.witnesses[degree]
    hx = encode_hex(w)
    print(degree, hx)
    back = decode_hex(hx)
    assert back == w
    assert back.to_polynomial().divrem(g)[1].is_zero()
    assert w(2) == int(hx, 16)

# the cube is a different story: no multiple up to degree 60 at all
config = SearchConfig(max_total_degree=60, power=3, binary_cofactor=True,
                      explore_all_degrees=True)
result = find_newman_multiple(l, config)
print("cube search:", result.status.name.lower(),
      "frontier", result.frontier, "unknowns", len(result.unknown_degrees))
