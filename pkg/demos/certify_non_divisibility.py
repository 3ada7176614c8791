"""Prove that no Newman polynomial is divisible by a given polynomial.

Pick a root beta with |beta| > 1. Values of Newman polynomials at beta are
generated from 1 by w -> beta*w + bit. Any value with |w| > |beta|/(|beta|-1)
can never come back to zero, so the closure of {1} inside that disk is
finite for these inputs. No zero in the closure means no Newman multiple of
any degree. Reaching zero instead yields a concrete witness multiple.
"""

from newmanpoly import CertificateKind, certify, parse_polynomial, replay_witness

blocked = [
    "x^6-x^5-x^3+x^2+1",
    "x^8-x^7-x^4+1",
    "x^10-x^8-x^5+x+1",
]
for text in blocked:
    p = parse_polynomial(text)
    cert = certify(p)
    assert cert.kind is CertificateKind.NON_DIVISIBILITY
    print(f"{text:22s} closed set of {cert.set_size:4d} residues at depth "
          f"{cert.depth:2d}, zero absent: divides no Newman polynomial")

print()

# the salem polynomial goes the other way: the closure reaches zero
salem = parse_polynomial("x^10-x^9+x^7-x^6+x^5-x^4+x^3-x+1")
cert = certify(salem)
assert cert.kind is CertificateKind.NEWMAN_WITNESS
w = cert.witness
print("witness for", salem)
print("  degree", w.degree, " hex", w.to_hex())
assert replay_witness(w, salem)
_, rem = w.to_polynomial().divrem(salem)
assert rem.is_zero()
print("  replay through residue arithmetic and exact division both confirm")

print()
print("certificate block:")
print(cert.serialize())
