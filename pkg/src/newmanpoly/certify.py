"""Reachable-set certification: does any Newman polynomial vanish at a root of p?

Fix a root beta of p with |beta| > 1.  Every Newman polynomial F of degree d
can be read off Horner-style from its leading coefficient down, so the values
F(beta) of all candidates are generated by starting from 1 and repeatedly
applying w -> beta*w + b with bits b in {0, 1}.  Once |w| exceeds
|beta| / (|beta| - 1) the orbit can never return to 0, so the breadth-first
closure only needs to keep values inside that closed disk.  If the closure
reaches 0, the bit string along the back-pointers is a Newman multiple of p
(checked by exact division); if it reaches a fixpoint without 0, no Newman
multiple exists for any degree, which is the non-divisibility certificate.

Set elements are exact integer vectors in Z[x]/(p(x)); deduplication and the
zero test never involve floating point.  Only the disk test is numeric, with
an outward tolerance so borderline elements are kept, never dropped.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import mpmath as mp

from .polynomial import IntPolynomial, NewmanPolynomial
from .roots import (
    NoRootOutsideUnitDisk,
    RootEnclosure,
    complex_roots,
    select_beta,
)

__all__ = [
    "CapExceeded",
    "Residue",
    "ReachableSet",
    "CertificateKind",
    "Certificate",
    "CertifyOptions",
    "certify",
    "replay_witness",
]


class CapExceeded(RuntimeError):
    """An element-count or coefficient-magnitude cap stopped the closure."""


@dataclass(frozen=True)
class Residue:
    """An element of Z[x]/(p(x)) as an exact integer coordinate vector.

    ``vector[k]`` is the coefficient of x**k; the length equals deg(p).
    """

    vector: tuple[int, ...]
    modulus: IntPolynomial

    def __post_init__(self):
        n = self.modulus.degree
        if not self.modulus.is_monic() or not isinstance(n, int) or n < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if len(self.vector) != n:
            raise ValueError(f"vector length {len(self.vector)} != degree {n}")

    @classmethod
    def one(cls, modulus: IntPolynomial) -> "Residue":
        return cls((1,) + (0,) * (modulus.degree - 1), modulus)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.vector)

    def advance(self, bit: int) -> "Residue":
        """Return x * self + bit, reduced mod the modulus."""
        if bit not in (0, 1):
            raise ValueError("bit must be 0 or 1")
        n = len(self.vector)
        p = self.modulus.coeffs
        top = self.vector[-1]
        out = [bit] + list(self.vector[:-1])
        if top:
            for i in range(n):
                out[i] -= top * p[i]
        return Residue(tuple(out), self.modulus)

    def to_polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.vector)


class CertificateKind(Enum):
    NON_DIVISIBILITY = "non-divisibility"
    NEWMAN_WITNESS = "newman-witness"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Certificate:
    """Outcome of a certification run, serializable as a versioned text block."""

    kind: CertificateKind
    polynomial: IntPolynomial
    beta_index: int
    beta_value: complex
    beta_radius: float
    disk_radius: float
    tolerance: float
    depth: int
    set_size: int
    witness: Optional[NewmanPolynomial] = None
    reason: str = ""

    def serialize(self) -> str:
        lines = [
            "certv1",
            f"kind: {self.kind.value}",
            f"polynomial: {self.polynomial.to_line()}",
            f"root-index: {self.beta_index}",
            f"root: {self.beta_value.real!r} {self.beta_value.imag!r}",
            f"root-radius: {self.beta_radius!r}",
            f"disk-radius: {self.disk_radius!r}",
            f"tolerance: {self.tolerance!r}",
            f"depth: {self.depth}",
            f"set-size: {self.set_size}",
        ]
        if self.witness is not None:
            lines.append(f"witness-hex: {self.witness.to_hex()}")
        if self.reason:
            lines.append(f"reason: {self.reason}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CertifyOptions:
    """Caps and numeric knobs for :func:`certify`.

    ``tolerance`` widens the pruning disk multiplicatively, so elements whose
    embedding straddles the boundary are kept.  Embeddings advance
    incrementally and are recomputed from the exact vector at full precision
    every ``recompute_interval`` insertions.  ``coeff_limit`` aborts runs
    whose exact coordinates grow absurdly instead of consuming all memory.
    """

    max_elements: int = 10_000_000
    tolerance: float = 1e-12
    root_index: Optional[int] = None
    dps: int = 40
    recompute_interval: int = 10_000
    coeff_limit: int = 1 << 256
    time_budget: Optional[float] = None


class ReachableSet:
    """Breadth-first closure of {1} under w -> beta*w + b inside the pruning disk.

    Elements are exact residue vectors.  Each carries a back-pointer to its
    predecessor, the appended bit, and its birth depth, so any element can be
    replayed into the Newman prefix that produced it.
    """

    def __init__(
        self,
        modulus: IntPolynomial,
        beta: RootEnclosure,
        beta_index: int,
        options: Optional[CertifyOptions] = None,
    ):
        self.options = options or CertifyOptions()
        n = modulus.degree
        if not modulus.is_monic() or not isinstance(n, int) or n < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = modulus
        self.n = n
        self.beta = beta
        self.beta_index = beta_index
        with mp.workdps(self.options.dps):
            mod_low = abs(beta.value) - beta.radius
            if mod_low <= 1:
                raise NoRootOutsideUnitDisk(
                    f"expansion root {complex(beta.value)} not certified outside |z| = 1"
                )
            # Disk radius |beta| / (|beta| - 1), rounded outward by using the
            # modulus lower bound, then widened by the tolerance.
            disk = mod_low / (mod_low - 1)
            self.disk_radius = float(disk)
            self.limit_sq = float((disk * (1 + self.options.tolerance)) ** 2)
        self._beta_mp = beta.value
        self._beta_c = complex(beta.value)
        # x**n == -p_0 - p_1 x - ... - p_{n-1} x**(n-1)
        self._reduction = tuple(-c for c in modulus.coeffs[:n])

        root = (1,) + (0,) * (n - 1)
        self.elements: dict[tuple[int, ...], tuple[Optional[tuple], int, int]] = {
            root: (None, 1, 0)
        }
        self._values: dict[tuple[int, ...], complex] = {root: 1 + 0j}
        self.frontier: list[tuple[int, ...]] = [root]
        self.depth = 0
        self.zero = (0,) * n
        self.zero_found = False
        self._inserts = 0

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        key = tuple(item.vector) if isinstance(item, Residue) else tuple(item)
        return key in self.elements

    def _exact_value(self, vec: tuple[int, ...]) -> complex:
        with mp.workdps(self.options.dps):
            acc = mp.mpc(0)
            for c in reversed(vec):
                acc = acc * self._beta_mp + c
            return complex(acc)

    def step(self) -> int:
        """Advance one depth level; returns the number of new elements.

        Raises :class:`CapExceeded` when the element cap or the coefficient
        magnitude cap is hit.  A return of 0 means the closure reached its
        fixpoint: the sets at consecutive depths are equal (they grow
        monotonically, so equal size is equal content).
        """
        opts = self.options
        elements = self.elements
        values = self._values
        beta_c = self._beta_c
        limit_sq = self.limit_sq
        red = self._reduction
        n = self.n
        coeff_limit = opts.coeff_limit
        new_frontier: list[tuple[int, ...]] = []
        next_depth = self.depth + 1

        for key in self.frontier:
            base_val = beta_c * values[key]
            top = key[-1]
            if top:
                shifted = [0] + list(key[:-1])
                for i in range(n):
                    shifted[i] += top * red[i]
            else:
                shifted = [0] + list(key[:-1])
            for b in (0, 1):
                if b:
                    vec = (shifted[0] + 1,) + tuple(shifted[1:])
                    val = base_val + 1
                else:
                    vec = tuple(shifted)
                    val = base_val
                if vec in elements:
                    continue
                if val.real * val.real + val.imag * val.imag > limit_sq:
                    continue
                for c in vec:
                    if c > coeff_limit or -c > coeff_limit:
                        raise CapExceeded(
                            f"coefficient magnitude exceeded 2**256 at depth {next_depth}"
                        )
                if len(elements) >= opts.max_elements:
                    raise CapExceeded(
                        f"element cap {opts.max_elements} reached at depth {next_depth}"
                    )
                elements[vec] = (key, b, next_depth)
                self._inserts += 1
                if self._inserts % opts.recompute_interval == 0:
                    val = self._exact_value(vec)
                values[vec] = val
                if vec == self.zero:
                    self.zero_found = True
                new_frontier.append(vec)

        self.frontier = new_frontier
        self.depth = next_depth
        return len(new_frontier)

    def witness_bits(self) -> NewmanPolynomial:
        """Reconstruct the Newman polynomial whose value at beta reached 0."""
        if not self.zero_found:
            raise ValueError("zero residue was not reached")
        bits_low_first: list[int] = []
        cur = self.zero
        while True:
            prev, bit, _depth = self.elements[cur]
            if prev is None:
                break
            bits_low_first.append(bit)
            cur = prev
        degree = len(bits_low_first)
        mask = 1 << degree
        for i, b in enumerate(bits_low_first):
            mask |= b << i
        return NewmanPolynomial(mask)


def replay_witness(witness: NewmanPolynomial, modulus: IntPolynomial) -> bool:
    """Drive the witness bits through Residue arithmetic; True if zero results.

    Independent of the search: only the shift-and-add residue update is used.
    """
    degree = witness.degree
    r = Residue.one(modulus)
    for k in range(degree - 1, -1, -1):
        r = r.advance(witness.coefficient(k))
    return r.is_zero()


def certify(
    p: IntPolynomial,
    options: Optional[CertifyOptions] = None,
    **kwargs,
) -> Certificate:
    """Decide whether some Newman polynomial is divisible by ``p``.

    Returns a :class:`Certificate` of kind NEWMAN_WITNESS (with the witness
    polynomial, re-verified by exact division), NON_DIVISIBILITY (the closure
    reached its fixpoint without 0), or INCONCLUSIVE (a cap stopped the run).

    The expansion root is the largest-modulus root by default;
    ``root_index`` overrides it with an index into the canonical root
    ordering.  Raises :class:`NoRootOutsideUnitDisk` when no usable root
    exists.  A positive real root is no obstacle here: the disk argument is
    valid at any root of modulus above 1, so such inputs still certify
    (typically quickly, since all reachable values are then positive reals
    and every branch escapes the disk within a few steps).

    The closure deduplicates residues modulo ``p`` itself, so for reducible
    ``p`` the outcome states divisibility by the whole input, not by one
    irreducible factor.
    """
    if kwargs:
        base = options or CertifyOptions()
        options = CertifyOptions(
            **{
                **{k: getattr(base, k) for k in base.__dataclass_fields__},
                **kwargs,
            }
        )
    options = options or CertifyOptions()
    if not p.is_monic() or p.degree < 1:
        raise ValueError("certification requires a monic polynomial of degree >= 1")

    if options.root_index is None:
        beta, beta_index = select_beta(p, dps=options.dps)
    else:
        roots = complex_roots(p, dps=options.dps)
        if not 0 <= options.root_index < len(roots.enclosures):
            raise ValueError(f"root index {options.root_index} out of range")
        beta = roots[options.root_index]
        beta_index = options.root_index
        with mp.workdps(options.dps):
            if abs(beta.value) - beta.radius <= 1:
                raise NoRootOutsideUnitDisk(
                    f"root {beta_index} of {p} is not certified outside |z| = 1"
                )

    rset = ReachableSet(p, beta, beta_index, options)

    def cert(kind: CertificateKind, witness=None, reason="") -> Certificate:
        return Certificate(
            kind=kind,
            polynomial=p,
            beta_index=beta_index,
            beta_value=complex(beta.value),
            beta_radius=float(beta.radius),
            disk_radius=rset.disk_radius,
            tolerance=options.tolerance,
            depth=rset.depth,
            set_size=rset.size,
            witness=witness,
            reason=reason,
        )

    start = time.perf_counter()
    while True:
        try:
            grew = rset.step()
        except CapExceeded as exc:
            return cert(CertificateKind.INCONCLUSIVE, reason=str(exc))
        if rset.zero_found:
            witness = rset.witness_bits()
            _, rem = witness.to_polynomial().divrem(p)
            if not rem.is_zero():
                raise RuntimeError(
                    "internal error: reconstructed witness fails exact division"
                )
            return cert(CertificateKind.NEWMAN_WITNESS, witness=witness)
        if grew == 0:
            return cert(CertificateKind.NON_DIVISIBILITY)
        if options.time_budget is not None:
            if time.perf_counter() - start > options.time_budget:
                return cert(
                    CertificateKind.INCONCLUSIVE,
                    reason=f"time budget {options.time_budget}s exhausted "
                    f"at depth {rset.depth} with {rset.size} elements",
                )
