"""Entropy upper and lower bounds, and checks of them against exact laws.

All bounds are in bits and evaluated in float64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .closed_form import binomial_even_pmf, binomial_pmf, cycle_colour_pmf, entropy
from .exact_dist import exact_moments, exact_pmf
from .hypergraph import Hypergraph

TWO_PI_E = 2 * math.pi * math.e  # 17.0794684...
PI_E = math.pi * math.e  # 8.5397342...
VIOLATION_TOL = 1e-9

BOUND_CSV_COLUMNS = ("id", "n", "m", "r", "entropy", "variance_num", "variance_den",
                     "massey", "theorem2", "violations")


def massey_bound(variance) -> float:
    """H(X) <= 1/2 log2(2 pi e (Var X + 1/12)) for integer-valued X."""
    if variance < 0:
        raise ValueError(f"variance must be non-negative, got {variance}")
    return 0.5 * math.log2(TWO_PI_E * (float(variance) + 1 / 12))


def theorem2_bound(n: int) -> float:
    """Upper bound 1/2 log2(n) + 1/2 log2(pi e) on the entropy of X for any n-vertex hypergraph."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return 0.5 * math.log2(n) + 0.5 * math.log2(PI_E)


def cycle_lower_bound(n: int) -> float:
    if n < 3:
        raise ValueError(f"cycle bound needs n >= 3, got {n}")
    return 0.5 * math.log2(n) + 0.5 * math.log2(PI_E) - 1.5 - 1 / (2 * math.log(2) * (n - 1))


def binomial_entropy_cited_bound(trials: int) -> float:
    """Claimed lower bound on H(Bin(trials, 1/2)); does not hold for small trial counts."""
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    return 0.5 * math.log2(trials) + 0.5 * math.log2(PI_E) - 0.5


@dataclass(frozen=True)
class BoundReport:
    entropy: float
    variance: Fraction
    massey: float
    theorem2: float
    slack_massey: float
    slack_theorem2: float
    violations: tuple[str, ...] = field(default_factory=tuple)


def bound_report(H: Hypergraph, entropy_bits: float, variance: Fraction) -> BoundReport:
    massey = massey_bound(variance)
    thm2 = theorem2_bound(H.n)
    slacks = {"massey": massey - entropy_bits, "theorem2": thm2 - entropy_bits}
    violations = tuple(name for name, s in slacks.items() if s < -VIOLATION_TOL)
    return BoundReport(entropy_bits, variance, massey, thm2, slacks["massey"], slacks["theorem2"], violations)


def verify_bounds(H: Hypergraph) -> BoundReport:
    p = exact_pmf(H)
    return bound_report(H, entropy(p), exact_moments(H).variance)


@dataclass(frozen=True)
class CycleCheck:
    n: int
    entropy: float
    even_binomial_entropy: float
    lower_bound: float
    binomial_minus_one_bound: float  # H(Bin(n-1, 1/2)) - 1

    @property
    def holds(self) -> bool:
        return self.entropy >= self.lower_bound - VIOLATION_TOL

    @property
    def binomial_minus_one_holds(self) -> bool:
        return self.entropy >= self.binomial_minus_one_bound - VIOLATION_TOL


def check_cycle(n: int) -> CycleCheck:
    return CycleCheck(
        n=n,
        entropy=entropy(cycle_colour_pmf(n)),
        even_binomial_entropy=entropy(binomial_even_pmf(n)),
        lower_bound=cycle_lower_bound(n),
        binomial_minus_one_bound=entropy(binomial_pmf(n - 1)) - 1,
    )


@dataclass(frozen=True)
class CitedBoundCheck:
    trials: int
    exact_entropy: float
    bound: float

    @property
    def slack(self) -> float:
        return self.exact_entropy - self.bound

    @property
    def holds(self) -> bool:
        return self.slack >= -VIOLATION_TOL


def check_cited_binomial_bound(trials: int) -> CitedBoundCheck:
    """Report-only: compares the cited bound with the exact entropy."""
    return CitedBoundCheck(trials, entropy(binomial_pmf(trials)), binomial_entropy_cited_bound(trials))
