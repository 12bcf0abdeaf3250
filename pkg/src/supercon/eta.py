"""Integer q-expansions of the weight-4 eta product on level 8.

The series expanded here is

    q * prod_{n >= 1} (1 - q^(2n))^4 * (1 - q^(4n))^4,

a normalized cusp form whose prime coefficients feed the truncated-series
congruence checks.  Coefficients are exact integers; truncation is at a
caller-chosen exponent and every coefficient up to it is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import check_odd_prime
from .errors import LimitExceeded


@dataclass(frozen=True)
class QSeries:
    """A truncated power series in q with integer coefficients.

    coeffs[n] is the coefficient of q^n; everything above ``limit`` is
    unknown (not zero), so reading past the end is an error rather than
    a silent 0.
    """

    coeffs: tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative exponent")
        if n > self.limit:
            raise LimitExceeded(
                f"coefficient of q^{n} requested; expansion stops at q^{self.limit}"
            )
        return self.coeffs[n]


def eta_product_qexp(limit: int) -> QSeries:
    """Expand the eta product through q^limit.

    Each factor (1 - q^m)^4 is applied as four in-place passes of the
    sparse update c[i] -= c[i-m], walked downward so a pass never reuses
    its own output.  Total work is O(limit^2) with small constants; a few
    hundred terms is instant.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    c = [0] * (limit + 1)
    c[1] = 1
    for step in (2, 4):
        m = step
        while m <= limit:
            for _ in range(4):
                for i in range(limit, m - 1, -1):
                    c[i] -= c[i - m]
            m += step
    return QSeries(tuple(c))


def a_p(p: int, series: QSeries) -> int:
    """The p-th coefficient, for odd prime p within the expansion limit."""
    check_odd_prime(p)
    return series.coefficient(p)
