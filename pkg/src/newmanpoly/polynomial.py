"""Exact integer polynomial arithmetic and the Newman (0/1) subclass.

Coefficients are arbitrary-precision Python integers stored constant term
first, so ``coeffs[k]`` is the coefficient of ``x**k``.  The zero polynomial
is the empty coefficient tuple and its degree is the distinguished marker
``NEG_INFINITY`` rather than an ordinary integer.

A Newman polynomial has every coefficient in {0, 1} and constant term 1.
Such a polynomial is stored as a bitmask: bit k of ``bits`` is the
coefficient of ``x**k``, so evaluating at 2 returns ``bits`` itself.  The
hexadecimal codec writes that evaluation in uppercase hex without a prefix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "NEG_INFINITY",
    "IntPolynomial",
    "NewmanPolynomial",
    "NonMonicDivisor",
    "ZeroDivisor",
    "InvalidHex",
    "EvenValue",
    "parse_polynomial",
    "encode_hex",
    "decode_hex",
]

#: Degree of the zero polynomial.  Compares below every integer.
NEG_INFINITY = float("-inf")


class ZeroDivisor(ZeroDivisionError):
    """Euclidean division by the zero polynomial."""


class NonMonicDivisor(ValueError):
    """Euclidean division by a divisor whose leading coefficient is not 1."""


class InvalidHex(ValueError):
    """Hex decoding rejected a string that is not plain uppercase/lowercase hex."""


class EvenValue(ValueError):
    """Hex decoding rejected an even value (its constant term would be 0)."""


@dataclass(frozen=True)
class IntPolynomial:
    """An integer polynomial in one variable, exact at every degree.

    >>> p = IntPolynomial((1, 2, 1))     # 1 + 2x + x^2
    >>> p.degree
    2
    >>> p(3)
    16
    >>> (p * p).coeffs
    (1, 4, 6, 4, 1)
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        """Degree, or ``NEG_INFINITY`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> int:
        """Coefficient of x**k (0 beyond the degree)."""
        if k < 0:
            raise ValueError("negative exponent")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def is_newman(self) -> bool:
        """True when every coefficient is 0 or 1 and the constant term is 1.

        >>> IntPolynomial((1, 1, 0, 1)).is_newman()
        True
        >>> IntPolynomial((0, 1)).is_newman()
        False
        """
        return (
            bool(self.coeffs)
            and self.coeffs[0] == 1
            and all(c in (0, 1) for c in self.coeffs)
        )

    def is_reciprocal(self) -> bool:
        """True when the coefficient sequence is palindromic.

        The zero polynomial is not reciprocal.
        """
        return bool(self.coeffs) and self.coeffs == self.coeffs[::-1]

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        # Schoolbook convolution.  Exact integers only; no floating point
        # and no transform-based shortcuts, so every product is reproducible
        # bit for bit on any platform.
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divrem(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Euclidean division by a monic divisor: self = q * divisor + r.

        The remainder degree is strictly below the divisor degree, and the
        identity is exact over the integers.

        >>> n = IntPolynomial((1, 1, 1))       # x^2 + x + 1
        >>> q, r = n.divrem(IntPolynomial((1, 1)))
        >>> (q.coeffs, r.coeffs)
        ((0, 1), (1,))
        """
        if divisor.is_zero():
            raise ZeroDivisor("division by the zero polynomial")
        if divisor.coeffs[-1] != 1:
            raise NonMonicDivisor(
                f"divisor leading coefficient is {divisor.coeffs[-1]}, expected 1"
            )
        d = len(divisor.coeffs) - 1
        rem = list(self.coeffs)
        if len(rem) <= d:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - d)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            quot[top - d] = c
            for j in range(d + 1):
                rem[top - d + j] -= c * divisor.coeffs[j]
        return IntPolynomial(quot), IntPolynomial(rem[:d])

    def __call__(self, t: int) -> int:
        """Exact evaluation at an integer via Horner's rule.

        >>> IntPolynomial((1, 0, 1, 1))(2)     # x^3 + x^2 + 1 at 2
        13
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def substitute_power(self, k: int) -> "IntPolynomial":
        """Return p(x**k)."""
        if k < 1:
            raise ValueError("power must be >= 1")
        if not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial(out)

    # -- text form ---------------------------------------------------------

    def to_line(self) -> str:
        """One-line coefficient form: constant term first, space separated."""
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_line(cls, line: str) -> "IntPolynomial":
        return cls(int(tok) for tok in line.split())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xpow = "x" if k == 1 else f"x^{k}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            parts.append(sign + body)
        return "".join(parts)


@dataclass(frozen=True)
class NewmanPolynomial:
    """A 0/1-coefficient polynomial with constant term 1, stored as a bitmask.

    Bit k of ``bits`` is the coefficient of ``x**k``; bit 0 is always set and
    the highest set bit is the degree.  Evaluation at 2 is the bitmask itself,
    which makes the hexadecimal codec a plain radix conversion.

    >>> NewmanPolynomial(0b1011).to_hex()      # x^3 + x + 1
    'B'
    >>> NewmanPolynomial.from_hex("B").degree
    3
    """

    bits: int

    def __init__(self, bits: int):
        bits = int(bits)
        if bits <= 0:
            raise ValueError("Newman bitmask must be positive")
        if bits & 1 == 0:
            raise EvenValue(f"bitmask {bits:#x} has no constant term")
        object.__setattr__(self, "bits", bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def coefficient(self, k: int) -> int:
        return (self.bits >> k) & 1 if k >= 0 else 0

    def exponents(self) -> tuple:
        """Exponents with coefficient 1, ascending."""
        out = []
        bits, k = self.bits, 0
        while bits:
            if bits & 1:
                out.append(k)
            bits >>= 1
            k += 1
        return tuple(out)

    def to_polynomial(self) -> IntPolynomial:
        return IntPolynomial(tuple((self.bits >> k) & 1 for k in range(self.bits.bit_length())))

    @classmethod
    def from_polynomial(cls, p: IntPolynomial) -> "NewmanPolynomial":
        if not p.is_newman():
            raise ValueError(f"not a Newman polynomial: {p}")
        bits = 0
        for k, c in enumerate(p.coeffs):
            bits |= c << k
        return cls(bits)

    @classmethod
    def from_exponents(cls, exponents: Sequence[int]) -> "NewmanPolynomial":
        bits = 0
        for e in exponents:
            bits |= 1 << e
        return cls(bits)

    def __call__(self, t: int) -> int:
        return self.to_polynomial()(t)

    def to_hex(self) -> str:
        """Uppercase hex of the value at 2, without any prefix."""
        return format(self.bits, "X")

    @classmethod
    def from_hex(cls, text: str) -> "NewmanPolynomial":
        """Decode an uppercase/lowercase hex string produced by :meth:`to_hex`.

        Raises ``InvalidHex`` for anything that is not plain hex digits and
        ``EvenValue`` when the encoded value is even, since the constant term
        of the decoded polynomial would then be 0.
        """
        text = text.strip()
        if not text or not re.fullmatch(r"[0-9a-fA-F]+", text):
            raise InvalidHex(f"not a hex string: {text!r}")
        bits = int(text, 16)
        if bits & 1 == 0:
            raise EvenValue(f"value {text!r} is even; constant term would be 0")
        return cls(bits)

    def __str__(self) -> str:
        return str(self.to_polynomial())


def encode_hex(n: NewmanPolynomial) -> str:
    """Uppercase, prefix-free hex string of the bitmask (the value at 2)."""
    return n.to_hex()


def decode_hex(text: str) -> NewmanPolynomial:
    """Inverse of :func:`encode_hex`; see :meth:`NewmanPolynomial.from_hex`."""
    return NewmanPolynomial.from_hex(text)


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)\s*(?:(?P<coeff>\d+)\s*\*?\s*)?(?P<var>x)?(?:\^(?P<exp>\d+))?"
)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse either a coefficient list or a compact monomial string.

    Coefficient lists are constant term first, separated by spaces or commas:
    ``"1 1 0 -1"``.  Monomial strings look like ``"x^10-x^8-x^5+x+1"`` with
    optional integer coefficients.

    >>> parse_polynomial("1, 1").coeffs
    (1, 1)
    >>> parse_polynomial("x^2+2x+1").coeffs
    (1, 2, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if "x" not in text:
        toks = text.replace(",", " ").split()
        try:
            return IntPolynomial(int(t) for t in toks)
        except ValueError:
            raise ValueError(f"bad coefficient list: {text!r}") from None

    compact = text.replace(" ", "")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax near {compact[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff_txt, var, exp_txt = m.group("coeff"), m.group("var"), m.group("exp")
        if var is None:
            if coeff_txt is None:
                raise ValueError(f"bad polynomial syntax near {compact[pos:]!r}")
            exp = 0
        else:
            exp = int(exp_txt) if exp_txt is not None else 1
        coeff = int(coeff_txt) if coeff_txt is not None else 1
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPolynomial(out)
