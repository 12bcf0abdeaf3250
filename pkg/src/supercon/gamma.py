"""Morita's p-adic Gamma function at rational arguments, mod p^k.

For an integer m >= 0 the function is the p-free factorial with a sign,

    G_p(m) = (-1)^m * prod of j for 0 <= j < m with p not dividing j

(empty product for m <= 1, so G_p(0) = 1 and G_p(1) = -1).  That map is
continuous, so its value mod p^k depends only on m mod p^k; a rational
x in Z_p is handled by reducing it to its representative in [0, p^k).

Cost is one multiply per unit below the representative, so a single value
costs O(p^k).  ``GammaBatch`` shares one ascending sweep across many
arguments at the same (p, k); congruence checkers lean on it so a whole
prime's worth of values costs the same as the largest single one.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import (
    PrimePowerResidue,
    RationalLike,
    _check_precision,
    check_odd_prime,
    least_residue,
    reduce_mod,
    vp,
)
from .errors import HypothesisViolated


def _sweep_rep(x: RationalLike, p: int, k: int) -> int:
    """Representative of x in [0, p^k); the sweep length for gamma at x."""
    return reduce_mod(x, p, k).value


def residue_rep(x: RationalLike, p: int) -> int:
    """The representative of x mod p in {1, ..., p}.

    Same as least_residue except that the class of zero maps to p, not 0.
    This is the exponent convention the reflection law uses.
    """
    r = least_residue(x, p)
    return r if r else p


def _unit_span_product(lo: int, hi: int, p: int, pk: int) -> int:
    """Product mod pk of all j in [lo, hi) with p not dividing j.

    Walks block by block between multiples of p; one big-int product and
    one reduction per block keeps the constant factor low without changing
    the O(hi - lo) contract.
    """
    acc = 1
    cur = lo
    while cur < hi:
        if cur % p == 0:
            cur += 1
            continue
        stop = min(hi, cur + (p - cur % p))
        acc = acc * math.prod(range(cur, stop)) % pk
        cur = stop
    return acc


def gamma_p(x: RationalLike, p: int, k: int) -> PrimePowerResidue:
    """G_p(x) mod p^k for x in Z_p (denominator must be a p-unit)."""
    check_odd_prime(p)
    _check_precision(k)
    m = _sweep_rep(x, p, k)
    pk = p**k
    val = _unit_span_product(1, m, p, pk)
    if m % 2:
        val = -val % pk
    return PrimePowerResidue(p, k, val)


class GammaBatch:
    """One shared sweep answering many gamma queries at fixed (p, k).

    Arguments are registered up front (order remembered, duplicates fine),
    the sweep runs once to the largest representative, and values are read
    back per argument.  Deliberately not a cross-prime cache; build one per
    (p, k) job and let it go.
    """

    def __init__(self, p: int, k: int):
        check_odd_prime(p)
        _check_precision(k)
        self.p = p
        self.k = k
        self.args: list[Fraction] = []
        self._reps: set[int] = set()
        self._values: dict[int, PrimePowerResidue] | None = None

    def add(self, x: RationalLike) -> "GammaBatch":
        if self._values is not None:
            raise RuntimeError("batch already swept; create a new one")
        x = Fraction(x)
        self.args.append(x)
        self._reps.add(_sweep_rep(x, self.p, self.k))
        return self

    def add_all(self, xs) -> "GammaBatch":
        for x in xs:
            self.add(x)
        return self

    @property
    def sweep_length(self) -> int:
        """Units visited by run(); the cost estimate used by work guards."""
        return max(self._reps, default=0)

    def run(self) -> "GammaBatch":
        if self._values is not None:
            return self
        p, k = self.p, self.k
        pk = p**k
        values: dict[int, PrimePowerResidue] = {}
        acc = 1
        prev = 1
        for m in sorted(self._reps):
            acc = acc * _unit_span_product(prev, max(m, 1), p, pk) % pk
            prev = max(m, 1)
            val = -acc % pk if m % 2 else acc
            values[m] = PrimePowerResidue(p, k, val)
        self._values = values
        return self

    def value(self, x: RationalLike) -> PrimePowerResidue:
        if self._values is None:
            self.run()
        m = _sweep_rep(x, self.p, self.k)
        try:
            return self._values[m]
        except KeyError:
            raise KeyError(
                f"argument {x} (rep {m}) was not registered before the sweep"
            ) from None


def gamma_p_batch(batch: GammaBatch) -> list[PrimePowerResidue]:
    """Values for the batch's arguments, in registration order."""
    batch.run()
    return [batch.value(x) for x in batch.args]


def gamma_map(args, p: int, k: int) -> dict[Fraction, PrimePowerResidue]:
    """Batch-evaluate gamma at each argument; one sweep total."""
    batch = GammaBatch(p, k).add_all(args)
    batch.run()
    return {Fraction(a): batch.value(a) for a in args}


def pochhammer_gamma(a: RationalLike, n: int, p: int, k: int) -> PrimePowerResidue:
    """Rising factorial (a)_n mod p^k via the gamma quotient.

    Valid only when every factor a, a+1, ..., a+n-1 is a p-unit; the
    translation identity behind it breaks on p-divisible factors, so those
    raise HypothesisViolated instead of returning garbage.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    for j in range(n):
        if vp(Fraction(a) + j, p) != 0:
            raise HypothesisViolated(
                f"factor {Fraction(a) + j} of ({a})_{n} is not a {p}-unit"
            )
    batch = GammaBatch(p, k).add(a).add(Fraction(a) + n)
    batch.run()
    quotient = batch.value(Fraction(a) + n) / batch.value(a)
    return -quotient if n % 2 else quotient
