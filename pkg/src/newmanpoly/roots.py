"""Root enclosures and root-driven predicates for integer polynomials.

Complex roots are located by Aberth-Ehrlich simultaneous iteration in
multiprecision arithmetic (at least 128-bit working precision), with an
a-posteriori error radius per root.  Repeated roots are split off first by
an exact squarefree decomposition, so the iteration only ever sees simple
roots.  On top of the enclosures sit the Mahler measure, the golden-ratio
annulus check for Newman multiples, and the selection of the expansion root
used by the reachable-set certifier.

The positive-real-root decision is exact: a Sturm chain over rational
arithmetic on (0, root bound], with no floating point anywhere in the
decision path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Optional, Sequence

import mpmath as mp

from .polynomial import IntPolynomial, NewmanPolynomial

__all__ = [
    "RootEnclosure",
    "RootSet",
    "MahlerResult",
    "NonConvergence",
    "NoRootOutsideUnitDisk",
    "BoundaryUndecided",
    "PositiveRealRoot",
    "complex_roots",
    "mahler_measure",
    "has_positive_real_root",
    "annulus_check",
    "select_beta",
]


class NonConvergence(RuntimeError):
    """The simultaneous iteration failed to converge at the working precision."""


class NoRootOutsideUnitDisk(ValueError):
    """No root is certified to have modulus strictly greater than 1."""


class BoundaryUndecided(RuntimeError):
    """A root enclosure still straddles the annulus boundary at the tightest precision."""


class PositiveRealRoot(ValueError):
    """The polynomial has a positive real root, so no Newman multiple exists."""

    def __init__(self, polynomial: IntPolynomial):
        super().__init__(f"{polynomial} has a positive real root")
        self.polynomial = polynomial


@dataclass(frozen=True)
class RootEnclosure:
    """One root: a center, an error radius, and a multiplicity."""

    value: mp.mpc
    radius: mp.mpf
    multiplicity: int = 1

    def modulus(self) -> mp.mpf:
        return abs(self.value)

    def approx(self) -> complex:
        return complex(self.value)


@dataclass(frozen=True)
class RootSet:
    """All roots of a polynomial, multiplicity-aware, in a canonical order.

    Roots are sorted by descending modulus, then descending real part, then
    descending imaginary part, so an index into ``enclosures`` identifies the
    same root run after run.
    """

    polynomial: IntPolynomial
    enclosures: tuple[RootEnclosure, ...]
    precision_dps: int

    def __post_init__(self):
        total = sum(e.multiplicity for e in self.enclosures)
        deg = self.polynomial.degree
        if total != deg:
            raise ValueError(f"root multiplicities sum to {total}, degree is {deg}")

    def __len__(self) -> int:
        return len(self.enclosures)

    def __iter__(self):
        return iter(self.enclosures)

    def __getitem__(self, i: int) -> RootEnclosure:
        return self.enclosures[i]


@dataclass(frozen=True)
class MahlerResult:
    """Mahler measure with the number of certified decimal digits."""

    value: float
    certified_digits: int

    def formatted(self, digits: int = 9) -> str:
        return f"{self.value:.{digits}f}"


# ---------------------------------------------------------------------------
# Exact polynomial helpers over rationals (squarefree split, Sturm chains).


def _frac_tuple(p: IntPolynomial) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in p.coeffs)


def _f_degree(a: Sequence[Fraction]) -> int:
    return len(a) - 1


def _f_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _f_monic(a: Sequence[Fraction]) -> list[Fraction]:
    lead = a[-1]
    return [c / lead for c in a]


def _f_deriv(a: Sequence[Fraction]) -> list[Fraction]:
    return _f_trim([k * c for k, c in enumerate(a)][1:])


def _f_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _f_trim(out)


def _f_rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    rem = list(a)
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        c = rem[-1] / b[-1]
        shift = len(rem) - 1 - db
        for j in range(db + 1):
            rem[shift + j] -= c * b[j]
        rem.pop()
        _f_trim(rem)
    return rem


def _f_quot(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    rem = list(a)
    db = len(b) - 1
    quot = [Fraction(0)] * max(0, len(rem) - db)
    while len(rem) - 1 >= db and rem:
        c = rem[-1] / b[-1]
        shift = len(rem) - 1 - db
        quot[shift] = c
        for j in range(db + 1):
            rem[shift + j] -= c * b[j]
        rem.pop()
        _f_trim(rem)
    if _f_trim(rem):
        raise ArithmeticError("division was expected to be exact")
    return _f_trim(quot)


def _f_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _f_rem(a, b)
    if not a:
        return []
    return _f_monic(a)


def _squarefree_factors(p: IntPolynomial) -> list[tuple[list[Fraction], int]]:
    """Yun decomposition: pairs (factor, multiplicity) with factors squarefree.

    Factors are monic rational polynomials whose product with multiplicities
    reconstructs ``p`` up to the leading coefficient.
    """
    f = list(_frac_tuple(p))
    if _f_degree(f) < 1:
        return []
    f = _f_monic(f)
    fp = _f_deriv(f)
    g = _f_gcd(f, fp)
    if _f_degree(g) < 1:
        return [(f, 1)]
    out: list[tuple[list[Fraction], int]] = []
    b = _f_quot(f, g)
    c = _f_quot(fp, g)
    d = _f_sub(c, _f_deriv(b))
    i = 1
    while _f_degree(b) >= 1:
        a = _f_gcd(b, d)
        if _f_degree(a) >= 1:
            out.append((a, i))
        b = _f_quot(b, a) if _f_degree(a) >= 1 else b
        c = _f_quot(d, a) if _f_degree(a) >= 1 else d
        d = _f_sub(c, _f_deriv(b))
        i += 1
    return out


def _sturm_chain(p: Sequence[Fraction]) -> list[list[Fraction]]:
    chain = [list(p), _f_deriv(p)]
    while chain[-1]:
        rem = _f_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _f_eval(p: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def _sign_variations(values: Sequence[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def has_positive_real_root(p: IntPolynomial) -> bool:
    """Exact decision: does ``p`` have a real root strictly greater than 0?

    Uses a Sturm chain over rational arithmetic on (0, B] where B is the
    Cauchy root bound, counting distinct positive roots.  Multiple roots are
    removed by an exact squarefree pass first; there is no floating point in
    the decision path.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:  # roots at 0 are not positive
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return False
    f = _f_monic([Fraction(c) for c in coeffs])
    g = _f_gcd(f, _f_deriv(f))
    if _f_degree(g) >= 1:
        f = _f_quot(f, g)

    bound = Fraction(1) + max(abs(c) for c in f[:-1])  # f is monic
    chain = _sturm_chain(f)
    at_zero = [_f_eval(q, Fraction(0)) for q in chain]
    # f(0) != 0 after stripping x-powers, but a chain element may vanish at 0;
    # zeros are simply skipped by the variation count.
    at_bound = [_f_eval(q, bound) for q in chain]
    return _sign_variations(at_zero) - _sign_variations(at_bound) > 0


# ---------------------------------------------------------------------------
# Aberth-Ehrlich simultaneous root iteration.


def _horner_pair(coeffs: Sequence[mp.mpf], z: mp.mpc) -> tuple[mp.mpc, mp.mpc]:
    """Evaluate p(z) and p'(z) together."""
    val = mp.mpc(0)
    der = mp.mpc(0)
    for c in reversed(coeffs):
        der = der * z + val
        val = val * z + c
    return val, der


def _aberth(coeffs: Sequence[int], dps: int, max_iter: int = 500) -> list[mp.mpc]:
    """Roots of a squarefree polynomial by simultaneous iteration."""
    n = len(coeffs) - 1
    with mp.workdps(dps):
        cs = [mp.mpf(c) for c in coeffs]
        lead = cs[-1]
        radius = mp.mpf(1) + max(abs(c) / abs(lead) for c in cs[:-1]) if n else mp.mpf(1)
        # Initial estimates on a circle, rotated off the axes so that real
        # roots do not trap the iteration in a symmetric configuration.
        z = [
            mp.mpf("0.7") * radius * mp.exp(mp.mpc(0, 2) * mp.pi * (k + mp.mpf("0.354")) / n)
            for k in range(n)
        ]
        target = mp.mpf(10) ** (-(dps - 6))
        for _ in range(max_iter):
            max_step = mp.mpf(0)
            for k in range(n):
                val, der = _horner_pair(cs, z[k])
                if val == 0:
                    continue
                if der == 0:
                    z[k] += mp.mpf("0.5") * target + mp.mpc(0, 1) * target
                    max_step = max(max_step, mp.mpf(1))
                    continue
                w = val / der
                s = mp.mpc(0)
                for j in range(n):
                    if j != k:
                        s += 1 / (z[k] - z[j])
                denom = 1 - w * s
                step = w if denom == 0 else w / denom
                z[k] -= step
                scale = max(mp.mpf(1), abs(z[k]))
                max_step = max(max_step, abs(step) / scale)
            if max_step < target:
                return z
        raise NonConvergence(
            f"Aberth-Ehrlich did not converge in {max_iter} iterations at {dps} digits"
        )


def complex_roots(p: IntPolynomial, dps: int = 40) -> RootSet:
    """All complex roots of ``p`` with per-root error radii.

    ``dps`` is the working precision in decimal digits (40 digits is above
    128 bits).  Repeated roots are detected exactly beforehand, so the given
    multiplicities are exact, not numerical guesses.  Raises
    ``NonConvergence`` if the iteration stalls.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined root set")
    if p.degree == 0:
        return RootSet(p, (), dps)

    enclosures: list[RootEnclosure] = []
    with mp.workdps(dps):
        for factor, mult in _squarefree_factors(p):
            denom = 1
            for c in factor:
                denom = denom * c.denominator // _int_gcd(denom, c.denominator)
            int_coeffs = [int(c * denom) for c in factor]
            n = len(int_coeffs) - 1
            zs = _aberth(int_coeffs, dps)
            cs = [mp.mpf(c) for c in int_coeffs]
            # evaluation itself carries rounding error, so the radius gets an
            # outward floor of a few ulps; a radius of zero would overclaim
            floor = (abs(max(int_coeffs, key=abs)) + 1) * mp.mpf(10) ** (-(dps - 3))
            for z in zs:
                val, der = _horner_pair(cs, z)
                if der == 0:
                    radius = mp.mpf(10) ** (-(dps - 10))
                else:
                    radius = n * abs(val) / abs(der) + floor
                enclosures.append(RootEnclosure(mp.mpc(z), mp.mpf(radius), mult))
        enclosures.sort(key=lambda e: (-abs(e.value), -e.value.real, -e.value.imag))
    return RootSet(p, tuple(enclosures), dps)


def mahler_measure(p: IntPolynomial, dps: int = 40) -> MahlerResult:
    """Mahler measure: |leading| times the product of root moduli outside the unit circle.

    The certified digit count reflects the root error radii, including the
    ambiguity of roots whose enclosure straddles the unit circle.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = complex_roots(p, dps=dps)
    with mp.workdps(dps):
        measure = mp.mpf(abs(p.leading_coefficient()))
        rel_err = mp.mpf(0)
        for enc in roots:
            m = abs(enc.value)
            low = max(mp.mpf(1), m - enc.radius)
            high = max(mp.mpf(1), m + enc.radius)
            mid = max(mp.mpf(1), m)
            measure *= mid**enc.multiplicity
            if high > low:
                rel_err += enc.multiplicity * (high - low) / low
        if rel_err == 0:
            digits = dps - 8
        else:
            digits = int(mp.floor(-mp.log10(rel_err))) - 1
            digits = min(digits, dps - 8)
        return MahlerResult(float(measure), max(0, digits))


def annulus_check(f: NewmanPolynomial | IntPolynomial, dps: int = 40) -> bool:
    """Check that every root lies strictly inside the golden-ratio annulus.

    Every Newman polynomial has all of its roots alpha in
    1/phi < |alpha| < phi with phi the golden ratio, so this is a cheap
    sanity check on claimed Newman products.  A root enclosure that touches
    a boundary triggers up to three retries at tenfold tighter precision;
    if the straddle persists, ``BoundaryUndecided`` is raised rather than
    guessing a boolean.
    """
    p = f.to_polynomial() if isinstance(f, NewmanPolynomial) else f
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    attempt_dps = dps
    for _ in range(4):
        roots = complex_roots(p, dps=attempt_dps)
        with mp.workdps(attempt_dps):
            phi = (1 + mp.sqrt(5)) / 2
            inv_phi = 1 / phi
            undecided = False
            for enc in roots:
                m = abs(enc.value)
                if m - enc.radius > phi or m + enc.radius < inv_phi:
                    return False
                inside = (m + enc.radius < phi) and (m - enc.radius > inv_phi)
                if not inside:
                    undecided = True
                    break
            if not undecided:
                return True
        attempt_dps *= 2  # radii shrink far faster than tenfold per retry
    raise BoundaryUndecided(
        f"a root enclosure of {p} still straddles the annulus boundary "
        f"at {attempt_dps // 2} digits"
    )


def select_beta(p: IntPolynomial, dps: int = 40) -> tuple[RootEnclosure, int]:
    """Pick the expansion root for certification: the largest-modulus root.

    Ties within enclosure error are broken by largest real part, then largest
    imaginary part.  Returns the enclosure and its index in the canonical
    ordering of :func:`complex_roots`.  Raises ``NoRootOutsideUnitDisk`` when
    no root is certified to lie strictly outside the closed unit disk.
    """
    roots = complex_roots(p, dps=dps)
    with mp.workdps(dps):
        outside = [
            (i, e) for i, e in enumerate(roots.enclosures) if abs(e.value) - e.radius > 1
        ]
        if not outside:
            raise NoRootOutsideUnitDisk(f"no root of {p} is certified outside |z| = 1")
        top = max(abs(e.value) for _, e in outside)
        cluster = [
            (i, e)
            for i, e in outside
            if abs(e.value) + e.radius >= top - mp.mpf(10) ** (-(dps - 12))
        ]
        best_i, best_e = max(
            cluster, key=lambda ie: (ie[1].value.real, ie[1].value.imag)
        )
        return best_e, best_i
