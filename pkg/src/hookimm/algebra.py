"""Exact rational scalars and dense univariate polynomials over them.

Scalars are plain :class:`fractions.Fraction` values.  Polynomials store
their coefficients ascending by power of ``x`` and are always kept in
canonical form (no trailing zeros; the zero polynomial has no coefficients).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def to_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ``value`` to a Fraction.  Strings use the ``p/q`` or ``p`` form.

    A leading unicode minus sign is accepted as well as ``-``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if not text:
            raise ValueError("empty rational literal")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial in ``x`` with Fraction coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple = _trim([Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # caller guarantees Fractions and canonical form
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def linear(cls, root: Scalar) -> "Poly":
        """The monic linear polynomial ``x - root``."""
        return cls((-Fraction(root), 1))

    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def canonicalize(self) -> "Poly":
        return Poly._raw(_trim(list(self.coeffs)))

    # ------------------------------------------------------------------
    def __add__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly.constant(other) - self

    def scale(self, c: Scalar) -> "Poly":
        if c == 0 or not self.coeffs:
            return ZERO
        if c == 1:
            return self
        return Poly._raw(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(_trim(out))

    __rmul__ = __mul__

    def times_linear(self, root: Scalar) -> "Poly":
        """``(x - root) * self`` without a general convolution."""
        a = self.coeffs
        if not a:
            return ZERO
        out = [Fraction(0)] + list(a)
        if root != 0:
            for i, c in enumerate(a):
                out[i] -= root * c
        return Poly._raw(_trim(out))

    def __call__(self, at: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = format_rational(mag)
            else:
                mono = "x" if power == 1 else f"x^{power}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{mono}"
                else:
                    body = f"({format_rational(mag)}){mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # ------------------------------------------------------------------
    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "Poly":
        return cls(to_rational(s) for s in items)


ZERO = Poly._raw(())
ONE = Poly._raw((Fraction(1),))


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_eval(p: Poly, at: Scalar) -> Fraction:
    """Horner evaluation; the zero polynomial evaluates to 0 everywhere."""
    return p(at)
