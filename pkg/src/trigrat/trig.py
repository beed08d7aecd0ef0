"""Rationality of powers of cos, sin and tan at rational multiples of pi.

For theta = p/q the three functions at pi*theta live in Q(zeta_M) with
M = lcm(2q, 4): writing z = zeta_M and e = pM/(2q),

    cos(pi p/q) = (z^e + z^-e) / 2
    sin(pi p/q) = (z^e - z^-e) / (2i),  i = z^(M/4)
    tan(pi p/q) = sin / cos

so every power can be expanded exactly and tested for rationality with
:meth:`CycElem.as_rational`.  ``classify`` summarises the full picture for
one (function, angle) pair: either some power is rational and we report the
least such exponent with its value, or no power ever is, which happens only
when the value itself is zero-free of rational powers entirely (irrational
tangent squares, for instance, stay irrational for all even exponents and
odd powers of an irrational number whose square is rational are irrational).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import CycElem, zeta_power
from .numtheory import format_rational, nth_root_rational, parse_rational


class TrigFunc(enum.Enum):
    COS = "cos"
    SIN = "sin"
    TAN = "tan"

    @classmethod
    def parse(cls, text: str) -> "TrigFunc":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown trig function {text!r}; expected cos, sin or tan") from None

    def __str__(self) -> str:
        return self.value


class UndefinedTrigValue(ArithmeticError):
    """Raised when tan is evaluated at an odd multiple of pi/2."""


@dataclass(frozen=True)
class Angle:
    """A rational multiple theta = p/q of pi, normalised to 0 <= p/q < 2.

    The constructor insists on the normal form (q >= 1, gcd(p, q) = 1,
    0 <= p < 2q); use :meth:`normalized` to build one from arbitrary p, q.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"denominator must be positive, got {self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms")
        if not 0 <= self.p < 2 * self.q:
            raise ValueError(f"numerator {self.p} outside [0, {2 * self.q}) for denominator {self.q}")

    @classmethod
    def normalized(cls, p: int, q: int) -> "Angle":
        """Reduce p/q mod 2 into the fundamental window [0, 2)."""
        if q == 0:
            raise ValueError("denominator must be nonzero")
        if q < 0:
            p, q = -p, -q
        p %= 2 * q
        g = gcd(p, q)
        return cls(p // g, q // g)

    @classmethod
    def parse(cls, text: str) -> "Angle":
        value = parse_rational(text)
        return cls.normalized(value.numerator, value.denominator)

    @property
    def theta(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


class Case(enum.Enum):
    """How (func(pi*theta))^n first becomes rational as n grows."""

    VALUE_RATIONAL = "value_rational"    # rational already at n = 1
    SQUARE_RATIONAL = "square_rational"  # irrational value, rational square
    NEVER = "never"                      # no positive power is rational
    UNDEFINED = "undefined"              # tan at a pole

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    """Verdict for one (function, angle) pair.

    ``minimal_n`` is the least exponent with a rational power (None for the
    NEVER and UNDEFINED cases) and ``value`` the power's exact value at that
    exponent.  ``witness`` carries the underlying field element.
    """

    func: TrigFunc
    angle: Angle
    case: Case
    minimal_n: int | None
    value: Fraction | None
    witness: CycElem | None

    @property
    def value_at_minimal_n(self) -> Fraction | None:
        return self.value

    def to_json(self) -> dict:
        return {
            "func": str(self.func),
            "theta": str(self.angle),
            "case": str(self.case),
            "minimal_n": self.minimal_n,
            "value": None if self.value is None else format_rational(self.value),
            "witness": None if self.witness is None else self.witness.to_json(),
        }


@lru_cache(maxsize=None)
def trig_elem(func: TrigFunc, angle: Angle) -> CycElem:
    """The exact value of func(pi * angle) as an element of Q(zeta_M),
    M = lcm(2q, 4).  Raises UndefinedTrigValue at tangent poles."""
    m = lcm(2 * angle.q, 4)
    e = angle.p * m // (2 * angle.q)
    plus = zeta_power(m, e)
    minus = zeta_power(m, -e)
    half = Fraction(1, 2)
    if func is TrigFunc.COS:
        return (plus + minus) * half
    i_unit = zeta_power(m, m // 4)
    sine = (plus - minus) * half / i_unit
    if func is TrigFunc.SIN:
        return sine
    cosine = (plus + minus) * half
    if cosine.is_zero():
        raise UndefinedTrigValue(f"tan(pi * {angle}) is undefined")
    return sine / cosine


def power_rational(func: TrigFunc, angle: Angle, n: int) -> Fraction | None:
    """Exact value of func(pi*angle)^n when rational, else None.

    Raises UndefinedTrigValue at tangent poles and ValueError for n < 1.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    return (trig_elem(func, angle) ** n).as_rational()


@lru_cache(maxsize=None)
def classify(func: TrigFunc, angle: Angle) -> Classification:
    """Decide how powers of func(pi*angle) behave, exactly.

    Only three things can happen for x = func(pi*angle): x is rational
    (case VALUE_RATIONAL, n = 1); x is irrational with x^2 rational (case
    SQUARE_RATIONAL, n = 2; then x^n is rational exactly for even n); or
    x^n is irrational for every n >= 1 (case NEVER).  No angle produces a
    least rational exponent of 3 or more: if x^n is rational with n minimal,
    x generates a Kummer-type extension whose degree divides both n and the
    abelian field Q(zeta_M), forcing n <= 2.  ``classify`` certifies the
    verdict by exact computation of x and x^2 alone.
    """
    try:
        x = trig_elem(func, angle)
    except UndefinedTrigValue:
        return Classification(func, angle, Case.UNDEFINED, None, None, None)
    v1 = x.as_rational()
    if v1 is not None:
        return Classification(func, angle, Case.VALUE_RATIONAL, 1, v1, x)
    v2 = (x * x).as_rational()
    if v2 is not None:
        return Classification(func, angle, Case.SQUARE_RATIONAL, 2, v2, x)
    return Classification(func, angle, Case.NEVER, None, None, x)


@dataclass(frozen=True)
class ValueDescriptor:
    """A real number of the form sign * sqrt(square), sign in {+1, -1, 0}.

    Canonical form: sign = 0 iff square = 0; square >= 0.  Describes every
    value that a rational-square trig value can take, rational or not.
    """

    sign: int
    square: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.square < 0:
            raise ValueError("square must be nonnegative")
        if (self.sign == 0) != (self.square == 0):
            raise ValueError("sign 0 iff square 0")

    @classmethod
    def from_rational(cls, value: Fraction) -> "ValueDescriptor":
        if value == 0:
            return cls(0, Fraction(0))
        return cls(1 if value > 0 else -1, value * value)

    def is_rational(self) -> bool:
        return nth_root_rational(self.square, 2) is not None if self.square else True

    def as_rational(self) -> Fraction | None:
        if self.square == 0:
            return Fraction(0)
        root = nth_root_rational(self.square, 2)
        return None if root is None else self.sign * root

    def __str__(self) -> str:
        r = self.as_rational()
        if r is not None:
            return format_rational(r)
        body = f"sqrt({format_rational(self.square)})"
        return body if self.sign > 0 else f"-{body}"


def theorem_value_list(func: TrigFunc, parity: str) -> frozenset[ValueDescriptor]:
    """The complete set of values func(pi*theta) can take when its n-th power
    is rational, split by the parity of n.

    Odd n: cos and sin land in {0, +-1/2, +-1}; tan in {0, +-1}.  Even n
    additionally admits the quadratic irrationalities +-sqrt(2)/2 and
    +-sqrt(3)/2 for cos and sin, and +-sqrt(3)/3, +-sqrt(3) for tan.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")

    def both(square: Fraction) -> list[ValueDescriptor]:
        return [ValueDescriptor(1, square), ValueDescriptor(-1, square)]

    values = [ValueDescriptor(0, Fraction(0))]
    if func in (TrigFunc.COS, TrigFunc.SIN):
        values += both(Fraction(1, 4)) + both(Fraction(1))
        if parity == "even":
            values += both(Fraction(1, 2)) + both(Fraction(3, 4))
    else:
        values += both(Fraction(1))
        if parity == "even":
            values += both(Fraction(1, 3)) + both(Fraction(3))
    return frozenset(values)
