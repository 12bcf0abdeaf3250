"""Scalar arithmetic layer: rationals, residues mod p^k, capped p-adics, and Z[w].

Everything downstream (gamma sweeps, series evaluators, congruence checkers)
works over the four scalar kinds defined here:

  * exact rationals      -- fractions.Fraction, used as-is
  * PrimePowerResidue    -- an element of Z/p^k for an odd prime p, 1 <= k <= 6
  * PadicCapped          -- p^v * unit with a tracked relative precision
  * CycloElem            -- c0 + c1*w with w^2 + w + 1 = 0, over either of the
                            exact or residue scalar kinds above

Valuations are computed exactly on rationals; nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import (
    NonInvertible,
    NonUnitDenominator,
    PrecisionExhausted,
    PrecisionOutOfRange,
)

RationalLike = Union[int, Fraction]

#: Largest supported precision exponent.  Residues and capped p-adics live in
#: Z/p^k with 1 <= k <= MAX_PRECISION; congruence work in this package never
#: needs more than p^6.
MAX_PRECISION = 6

INFINITY = math.inf


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Trial-division primality test; ample for the prime ranges used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_odd_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p) or p == 2:
        raise ValueError(f"expected an odd prime, got {p!r}")
    return p


def primes_in(lo: int, hi: int) -> tuple[int, ...]:
    """All primes in the closed interval [lo, hi]."""
    return tuple(n for n in range(max(lo, 2), hi + 1) if is_prime(n))


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def vp(x: RationalLike, p: int):
    """p-adic valuation of a rational; INFINITY for zero.

    Exact on Fraction inputs: v_p(a/b) = v_p(a) - v_p(b).  Works for any
    prime, including 2, even though the rest of the package is odd-only.
    """
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")
    x = _as_fraction(x)
    if x == 0:
        return INFINITY
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _check_precision(k: int) -> int:
    if not isinstance(k, int) or not 1 <= k <= MAX_PRECISION:
        raise PrecisionOutOfRange(
            f"precision exponent must be an integer in 1..{MAX_PRECISION}, got {k!r}"
        )
    return k


@dataclass(frozen=True)
class PrimePowerResidue:
    """An element of Z/p^k, p an odd prime, 1 <= k <= 6.

    The stored value is always normalized to [0, p^k).  Arithmetic between
    residues requires matching (p, k); mixing moduli is a bug, not a
    coercion opportunity.  Plain ints coerce on the right and left.
    """

    p: int
    k: int
    value: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError(f"modulus base must be an odd prime, got {self.p}")
        _check_precision(self.k)
        object.__setattr__(self, "value", self.value % self.p**self.k)

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def _coerce(self, other) -> "PrimePowerResidue":
        if isinstance(other, PrimePowerResidue):
            if other.p != self.p or other.k != self.k:
                raise ValueError(
                    f"modulus mismatch: {self.p}^{self.k} vs {other.p}^{other.k}"
                )
            return other
        if isinstance(other, int):
            return PrimePowerResidue(self.p, self.k, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimePowerResidue(self.p, self.k, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimePowerResidue(self.p, self.k, self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimePowerResidue(self.p, self.k, o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimePowerResidue(self.p, self.k, self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimePowerResidue(self.p, self.k, -self.value)

    def is_unit(self) -> bool:
        return self.value % self.p != 0

    def inverse(self) -> "PrimePowerResidue":
        if not self.is_unit():
            raise NonInvertible(
                f"{self.value} is divisible by {self.p}, not invertible mod {self.p}^{self.k}"
            )
        return PrimePowerResidue(self.p, self.k, pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int) -> "PrimePowerResidue":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return PrimePowerResidue(self.p, self.k, pow(self.value, n, self.modulus))

    def lift(self, k: int) -> "PrimePowerResidue":
        """Reinterpret at a lower precision k' <= k (digit truncation)."""
        _check_precision(k)
        if k > self.k:
            raise PrecisionOutOfRange(
                f"cannot lift a mod-{self.p}^{self.k} residue to precision {k}"
            )
        return PrimePowerResidue(self.p, k, self.value)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def reduce_mod(x: RationalLike, p: int, k: int) -> PrimePowerResidue:
    """Reduce a rational with p-unit denominator into Z/p^k.

    The denominator is inverted mod p^k; a p in the denominator raises
    NonUnitDenominator since the value then has no residue at all.
    """
    check_odd_prime(p)
    _check_precision(k)
    x = _as_fraction(x)
    if x.denominator % p == 0:
        raise NonUnitDenominator(
            f"{x} has {p} in its denominator; not a {p}-adic integer"
        )
    m = p**k
    return PrimePowerResidue(p, k, x.numerator * pow(x.denominator, -1, m) % m)


def least_residue(x: RationalLike, p: int) -> int:
    """The representative of x mod p in [0, p)."""
    return reduce_mod(x, p, 1).value


@dataclass(frozen=True)
class PadicCapped:
    """A p-adic number known to finitely many digits: p^valuation * unit.

    ``unit`` holds ``precision`` base-p digits (so the value is pinned down
    modulo p^(valuation + precision)).  The additive identity is a
    distinguished exact zero with no valuation; full cancellation in ``+``
    lands there rather than inventing digits nobody computed.

    Multiplication adds valuations and keeps the smaller relative precision.
    Addition works at the smaller absolute precision.  ``residue(k)`` raises
    PrecisionExhausted when the digits in hand cannot certify a class mod p^k.
    """

    p: int
    valuation: int
    unit: int
    precision: int
    exact_zero: bool = False

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError(f"base must be an odd prime, got {self.p}")
        if self.exact_zero:
            object.__setattr__(self, "valuation", 0)
            object.__setattr__(self, "unit", 0)
            object.__setattr__(self, "precision", 0)
            return
        _check_precision(self.precision)
        u = self.unit % self.p**self.precision
        if u % self.p == 0:
            raise ValueError(
                f"unit part {self.unit} is divisible by {self.p}; "
                "normalize the valuation instead"
            )
        object.__setattr__(self, "unit", u)

    @classmethod
    def zero(cls, p: int) -> "PadicCapped":
        return cls(p, 0, 0, 0, exact_zero=True)

    @classmethod
    def from_rational(cls, x: RationalLike, p: int, precision: int) -> "PadicCapped":
        """Embed an exact rational with the given relative precision.

        Negative valuations are allowed here (the input is exact); they only
        become a problem if a residue is later requested.
        """
        check_odd_prime(p)
        _check_precision(precision)
        x = _as_fraction(x)
        if x == 0:
            return cls.zero(p)
        v = vp(x, p)
        u = x / Fraction(p) ** v
        m = p**precision
        unit = u.numerator * pow(u.denominator, -1, m) % m
        return cls(p, v, unit, precision)

    @property
    def is_zero(self) -> bool:
        return self.exact_zero

    @property
    def abs_precision(self):
        """Exponent N such that the value is known mod p^N (INFINITY for zero)."""
        if self.exact_zero:
            return INFINITY
        return self.valuation + self.precision

    def _require_same_p(self, other: "PadicCapped"):
        if not isinstance(other, PadicCapped):
            raise TypeError(f"expected PadicCapped, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def __mul__(self, other: "PadicCapped") -> "PadicCapped":
        self._require_same_p(other)
        if self.exact_zero or other.exact_zero:
            return PadicCapped.zero(self.p)
        r = min(self.precision, other.precision)
        return PadicCapped(
            self.p, self.valuation + other.valuation, self.unit * other.unit, r
        )

    def __truediv__(self, other: "PadicCapped") -> "PadicCapped":
        self._require_same_p(other)
        if other.exact_zero:
            raise ZeroDivisionError("division by exact p-adic zero")
        if self.exact_zero:
            return PadicCapped.zero(self.p)
        r = min(self.precision, other.precision)
        inv = pow(other.unit, -1, self.p**r)
        return PadicCapped(
            self.p, self.valuation - other.valuation, self.unit * inv, r
        )

    def __neg__(self) -> "PadicCapped":
        if self.exact_zero:
            return self
        return PadicCapped(self.p, self.valuation, -self.unit, self.precision)

    def __add__(self, other: "PadicCapped") -> "PadicCapped":
        self._require_same_p(other)
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        n = min(self.abs_precision, other.abs_precision)
        v = min(self.valuation, other.valuation)
        if n - v < 1:
            raise PrecisionExhausted(
                "sum has no justified digits: absolute precision "
                f"{n} at valuation {v}"
            )
        m = self.p ** (n - v)
        total = (
            self.unit * self.p ** (self.valuation - v)
            + other.unit * other.p ** (other.valuation - v)
        ) % m
        if total == 0:
            # Cancellation through every digit in hand.  The true value is
            # in p^n Z_p; report exact zero rather than a unit we never saw.
            return PadicCapped.zero(self.p)
        shift = 0
        while total % self.p == 0:
            total //= self.p
            shift += 1
        r = n - v - shift
        return PadicCapped(self.p, v + shift, total, min(r, MAX_PRECISION))

    def __sub__(self, other: "PadicCapped") -> "PadicCapped":
        return self + (-other)

    def residue(self, k: int) -> PrimePowerResidue:
        """The class mod p^k, if the digits in hand pin it down."""
        _check_precision(k)
        if self.exact_zero:
            return PrimePowerResidue(self.p, k, 0)
        if self.valuation >= k:
            return PrimePowerResidue(self.p, k, 0)
        if self.valuation < 0:
            raise PrecisionExhausted(
                f"valuation {self.valuation} < 0: not a {self.p}-adic integer"
            )
        if self.abs_precision < k:
            raise PrecisionExhausted(
                f"value known mod {self.p}^{self.abs_precision}, "
                f"residue mod {self.p}^{k} requested"
            )
        return PrimePowerResidue(self.p, k, self.p**self.valuation * self.unit)

    def congruent(self, other: "PadicCapped") -> bool:
        """Agreement on every digit both sides actually know."""
        self._require_same_p(other)
        if self.exact_zero and other.exact_zero:
            return True
        if self.exact_zero or other.exact_zero:
            # A nonzero capped value has a certified leading unit digit.
            return False
        n = min(self.abs_precision, other.abs_precision)
        v = min(self.valuation, other.valuation)
        if n <= v:
            return True
        m = self.p ** (n - v)
        a = self.unit * self.p ** (self.valuation - v) % m
        b = other.unit * other.p ** (other.valuation - v) % m
        return a == b

    def __str__(self) -> str:
        if self.exact_zero:
            return "0 (exact)"
        return (
            f"{self.p}^{self.valuation} * {self.unit} "
            f"(+O({self.p}^{self.abs_precision}))"
        )


Scalar = Union[Fraction, PrimePowerResidue]


def _is_scalar(x) -> bool:
    return isinstance(x, (Fraction, PrimePowerResidue))


@dataclass(frozen=True)
class CycloElem:
    """c0 + c1*w in the ring generated by a primitive cube root of unity.

    The defining relation is w^2 = -(1 + w); coordinates are either both
    exact Fractions or both PrimePowerResidue with matching modulus.  The
    exact ring is an integral domain whose norm form c0^2 - c0*c1 + c1^2
    vanishes only at zero, so exact division is total away from zero.
    Modular coordinates support ring operations but not division.
    """

    c0: Scalar
    c1: Scalar

    def __post_init__(self):
        a0, a1 = self.c0, self.c1
        if isinstance(a0, int):
            a0 = Fraction(a0)
        if isinstance(a1, int):
            a1 = Fraction(a1)
        if isinstance(a0, Fraction) != isinstance(a1, Fraction):
            raise TypeError("coordinates must both be exact or both residues")
        if isinstance(a0, PrimePowerResidue) and (
            a0.p != a1.p or a0.k != a1.k
        ):
            raise ValueError("coordinate moduli differ")
        object.__setattr__(self, "c0", a0)
        object.__setattr__(self, "c1", a1)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.c0, Fraction)

    @property
    def is_zero(self) -> bool:
        if self.is_exact:
            return self.c0 == 0 and self.c1 == 0
        return self.c0.value == 0 and self.c1.value == 0

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.is_exact != self.is_exact:
                raise TypeError("cannot mix exact and modular ring elements")
            return other
        if isinstance(other, (int, Fraction)):
            if self.is_exact:
                return CycloElem(_as_fraction(other), Fraction(0))
            p, k = self.c0.p, self.c0.k
            return CycloElem(reduce_mod(other, p, k), PrimePowerResidue(p, k, 0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloElem(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloElem(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return CycloElem(-self.c0, -self.c1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        # (a + b*w)(c + d*w) with w^2 = -1 - w
        a, b, c, d = self.c0, self.c1, o.c0, o.c1
        bd = b * d
        return CycloElem(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycloElem":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self._one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _one(self) -> "CycloElem":
        if self.is_exact:
            return CycloElem(Fraction(1), Fraction(0))
        return CycloElem(
            PrimePowerResidue(self.c0.p, self.c0.k, 1),
            PrimePowerResidue(self.c0.p, self.c0.k, 0),
        )

    def conjugate(self) -> "CycloElem":
        """Image under w -> w^2 = -1 - w."""
        return CycloElem(self.c0 - self.c1, -self.c1)

    def norm(self) -> Scalar:
        """c0^2 - c0*c1 + c1^2; multiplicative, and zero only at zero (exact)."""
        return self.c0 * self.c0 - self.c0 * self.c1 + self.c1 * self.c1

    def inverse(self) -> "CycloElem":
        if not self.is_exact:
            raise NonInvertible(
                "modular ring elements are not inverted here; work exactly, "
                "then reduce"
            )
        n = self.norm()
        if n == 0:
            raise NonInvertible("zero has no inverse")
        return CycloElem(self.conjugate().c0 / n, self.conjugate().c1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __str__(self) -> str:
        return f"{self.c0} + {self.c1}*w"


#: The generator itself, as an exact ring element.
OMEGA = CycloElem(Fraction(0), Fraction(1))


def cyclo_reduce(x: CycloElem, p: int, k: int) -> CycloElem:
    """Coordinatewise reduction of an exact ring element mod p^k."""
    if not isinstance(x, CycloElem) or not x.is_exact:
        raise TypeError("cyclo_reduce expects an exact ring element")
    return CycloElem(reduce_mod(x.c0, p, k), reduce_mod(x.c1, p, k))
