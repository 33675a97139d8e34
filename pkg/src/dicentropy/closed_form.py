"""Closed-form laws for fair coins and cycles, and Shannon entropy in bits."""

from __future__ import annotations

import math
from fractions import Fraction

from .pmf import Pmf


def binom(a: int, b: int) -> int:
    """C(a, b) from a Pascal row; zero when b < 0 or b > a."""
    if b < 0 or a < b or a < 0:
        return 0
    return pascal_row(a)[b]


_ROWS: list[list[int]] = [[1]]


def pascal_row(a: int) -> list[int]:
    while len(_ROWS) <= a:
        prev = _ROWS[-1]
        _ROWS.append([1] + [x + y for x, y in zip(prev, prev[1:])] + [1])
    return _ROWS[a]


def binomial_pmf(n: int) -> Pmf:
    """Bin(n, 1/2)."""
    if n < 0:
        raise ValueError(f"trials must be non-negative, got {n}")
    den = 2**n
    return Pmf.from_mapping({k: Fraction(c, den) for k, c in enumerate(pascal_row(n))})


def binomial_even_pmf(n: int) -> Pmf:
    """Bin(n, 1/2) conditioned on an even outcome: C(n, k) / 2^(n-1) for even k."""
    if n < 1:
        raise ValueError(f"even-conditioned binomial needs n >= 1, got {n}")
    den = 2 ** (n - 1)
    return Pmf.from_mapping({k: Fraction(binom(n, k), den) for k in range(0, n + 1, 2)})


def cycle_colour_pmf(n: int) -> Pmf:
    """Law of the number of hit vertices on the n-cycle: P(X = n-k) = C(n, 2k) / 2^(n-1)."""
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got {n}")
    den = 2 ** (n - 1)
    return Pmf.from_mapping({n - k: Fraction(binom(n, 2 * k), den) for k in range(n // 2 + 1)})


def coupling_pmf(n: int) -> Pmf:
    """Law of Y + (Y mod 2) for Y ~ Bin(n-1, 1/2): odd draws are rounded up."""
    if n < 1:
        raise ValueError(f"coupling needs n >= 1, got {n}")
    base = binomial_pmf(n - 1).as_dict()
    zero = Fraction(0)
    return Pmf.from_mapping({k: base.get(k, zero) + base.get(k - 1, zero) for k in range(0, n + 1, 2)})


def entropy(p: Pmf) -> float:
    """Shannon entropy in bits, 0 log 0 = 0.

    log2 of each mass is taken as log2(num) - log2(den) on the exact integers,
    which keeps tiny masses accurate.
    """
    if len(p.probs) == 1:
        return 0.0
    terms = []
    for q in p.probs:
        terms.append(-float(q) * (math.log2(q.numerator) - math.log2(q.denominator)))
    return math.fsum(terms)


def entropy_floats(probs) -> float:
    """Plug-in entropy of float frequencies, for Monte Carlo estimates."""
    return math.fsum(-q * math.log2(q) for q in probs if q > 0)
