"""Scalars over the four real idempotent semifields.

A semifield value is either the semifield zero (kept as an explicit marker,
never as an infinite carrier number) or a carrier number: an exact
``fractions.Fraction`` for the additive-group carriers (max-plus, min-plus),
or a positive float for the multiplicative-group carriers (max-times,
min-times), whose roots leave the rationals.

Operator sugar on :class:`Scalar`: ``+`` is the idempotent addition,
``*`` the group multiplication, ``**`` the (rational) power, and the
comparison operators follow the order induced by the addition
(``a <= b`` iff ``a + b == b``).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    CarrierDomainError,
    TagMismatchError,
    ZeroInversionError,
)

#: Relative tolerance for comparing multiplicative-carrier scalars.
REL_TOL = 1e-9

_ADDITIVE_TAGS = ("max-plus", "min-plus")
_MULT_TAGS = ("max-times", "min-times")


class Semifield:
    """One of the four real idempotent semifields, identified by tag.

    Instances are singletons (see :data:`MAX_PLUS` etc.); equality is
    identity.  The three bits of behavior that differ per tag: whether
    the idempotent addition takes the naturally larger or smaller carrier
    value, whether the group operation is carrier ``+`` or ``*``, and the
    carrier representation that follows from it (exact Fractions vs floats).
    """

    __slots__ = ("tag", "maximizing", "additive", "_zero", "_one")

    def __init__(self, tag: str):
        if tag not in _ADDITIVE_TAGS and tag not in _MULT_TAGS:
            raise ValueError(f"unknown semifield tag {tag!r}")
        self.tag = tag
        self.maximizing = tag.startswith("max")
        self.additive = tag in _ADDITIVE_TAGS
        self._zero = Scalar(self, None, _token=_TOKEN)
        unit = Fraction(0) if self.additive else 1.0
        self._one = Scalar(self, unit, _token=_TOKEN)

    def __repr__(self) -> str:
        return f"Semifield({self.tag})"

    @property
    def zero(self) -> Scalar:
        return self._zero

    @property
    def one(self) -> Scalar:
        return self._one

    def scalar(self, value) -> Scalar:
        """Wrap a carrier value (``None`` means the zero) into a Scalar."""
        if value is None:
            return self._zero
        if isinstance(value, Scalar):
            if value.sf is not self:
                raise TagMismatchError(f"{value!r} is not a {self.tag} scalar")
            return value
        return Scalar(self, self._coerce(value), _token=_TOKEN)

    def _coerce(self, value):
        if self.additive:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                return Fraction(value)
            if isinstance(value, float):
                # decimal-faithful: 0.25 -> 1/4, not the binary expansion
                return Fraction(str(value))
            raise CarrierDomainError(
                f"cannot use {value!r} as a {self.tag} carrier value")
        out = float(Fraction(value) if isinstance(value, str) else value)
        if not math.isfinite(out) or out <= 0.0:
            raise CarrierDomainError(
                f"{self.tag} carrier values must be finite and positive, got {value!r}")
        return out

    def _wrap(self, payload) -> Scalar:
        # fast path for already-validated payloads (internal hot loops)
        return Scalar(self, payload, _token=_TOKEN)

    def from_literal(self, text: str, zero_tokens: tuple[str, ...] = ("null", ".")) -> Scalar:
        """Parse a scalar literal: decimal or rational text, or a zero token."""
        stripped = text.strip()
        if stripped in zero_tokens:
            return self._zero
        return self.scalar(stripped)

    def sum(self, scalars) -> Scalar:
        """Idempotent sum of an iterable (zero if empty)."""
        acc = self._zero
        for s in scalars:
            acc = acc + s
        return acc

    # carrier-level order: the semifield order restricted to nonzero payloads
    def _le_payload(self, u, v) -> bool:
        if not self.additive and math.isclose(u, v, rel_tol=REL_TOL):
            return True
        return u <= v if self.maximizing else v <= u

    def _eq_payload(self, u, v) -> bool:
        if self.additive:
            return u == v
        return math.isclose(u, v, rel_tol=REL_TOL)


# guards Scalar.__init__ against accidental direct construction with a raw payload
_TOKEN = object()


class Scalar:
    """An element of one semifield: the zero marker or a carrier number."""

    __slots__ = ("sf", "v")

    def __init__(self, sf: Semifield, payload, _token=None):
        if _token is not _TOKEN:
            raise TypeError("use Semifield.scalar() to construct scalars")
        self.sf = sf
        self.v = payload

    @property
    def is_zero(self) -> bool:
        return self.v is None

    @property
    def is_one(self) -> bool:
        return self.v is not None and self.sf._eq_payload(self.v, self.sf._one.v)

    def _check_tag(self, other: Scalar) -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected a Scalar, got {other!r}")
        if other.sf is not self.sf:
            raise TagMismatchError(
                f"mixed semifields: {self.sf.tag} and {other.sf.tag}")

    def __add__(self, other: Scalar) -> Scalar:
        self._check_tag(other)
        if self.v is None:
            return other
        if other.v is None:
            return self
        if self.sf._le_payload(self.v, other.v):
            return other
        return self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented  # lets Matrix.__rmul__ handle scalar*matrix
        self._check_tag(other)
        if self.v is None or other.v is None:
            return self.sf._zero
        if self.sf.additive:
            payload = self.v + other.v
        else:
            payload = self.v * other.v
        return Scalar(self.sf, payload, _token=_TOKEN)

    def inv(self) -> Scalar:
        if self.v is None:
            raise ZeroInversionError("the semifield zero has no inverse")
        payload = -self.v if self.sf.additive else 1.0 / self.v
        return Scalar(self.sf, payload, _token=_TOKEN)

    def __pow__(self, exponent) -> Scalar:
        if isinstance(exponent, int):
            exponent = Fraction(exponent)
        if not isinstance(exponent, Fraction):
            raise TypeError(f"exponent must be an int or Fraction, got {exponent!r}")
        if self.v is None:
            if exponent > 0:
                return self.sf._zero
            raise ZeroInversionError(
                "the semifield zero admits only positive powers")
        if self.sf.additive:
            payload = self.v * exponent
        else:
            payload = self.v ** float(exponent)
        return Scalar(self.sf, payload, _token=_TOKEN)

    # order induced by the idempotent addition; the zero is the least element
    def __le__(self, other: Scalar) -> bool:
        self._check_tag(other)
        if self.v is None:
            return True
        if other.v is None:
            return False
        return self.sf._le_payload(self.v, other.v)

    def __lt__(self, other: Scalar) -> bool:
        return self <= other and not self == other

    def __ge__(self, other: Scalar) -> bool:
        return other <= self

    def __gt__(self, other: Scalar) -> bool:
        return other < self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar) or other.sf is not self.sf:
            return False
        if self.v is None or other.v is None:
            return self.v is None and other.v is None
        return self.sf._eq_payload(self.v, other.v)

    __hash__ = None  # tolerance-based equality on (., x) carriers

    def literal(self, zero_token: str = "null") -> str:
        """Text form: `7/2`, `-3`, `2.5`, or the zero token."""
        if self.v is None:
            return zero_token
        if isinstance(self.v, Fraction):
            return str(self.v)
        return repr(self.v)

    def __repr__(self) -> str:
        return f"Scalar({self.literal()}, {self.sf.tag})"


MAX_PLUS = Semifield("max-plus")
MIN_PLUS = Semifield("min-plus")
MAX_TIMES = Semifield("max-times")
MIN_TIMES = Semifield("min-times")

SEMIFIELDS = {
    sf.tag: sf for sf in (MAX_PLUS, MIN_PLUS, MAX_TIMES, MIN_TIMES)
}


def oplus(a: Scalar, b: Scalar) -> Scalar:
    """Idempotent addition."""
    return a + b


def otimes(a: Scalar, b: Scalar) -> Scalar:
    """Group multiplication (zero is absorbing)."""
    return a * b


def inverse(a: Scalar) -> Scalar:
    """Multiplicative inverse of a nonzero scalar."""
    return a.inv()


def power(a: Scalar, exponent) -> Scalar:
    """Rational power; exact on additive carriers."""
    return a ** exponent


def leq(a: Scalar, b: Scalar) -> bool:
    """The total order induced by addition: a <= b iff a + b == b."""
    return a <= b
