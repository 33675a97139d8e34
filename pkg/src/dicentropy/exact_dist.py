"""Random orientations and the law of the number of hit vertices.

Every edge points at one of its ``r`` vertices uniformly and independently
(one roll of the dice). ``X`` counts vertices with positive in-degree, i.e.
the number of distinct colours showing.

Two exact engines are provided and kept independent of each other:
brute-force enumeration of all ``r**m`` orientations, and inclusion-exclusion
over vertex subsets. Monte Carlo is the fallback for large instances.

RNG: numpy ``Generator(PCG64)``. Monte Carlo splits the sample budget into
blocks of ``MC_BLOCK`` draws whose seeds are spawned from
``SeedSequence(seed)``, so results do not depend on the worker count.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import BudgetExceeded, Hypergraph, HypergraphError, pair_overlap
from .pmf import Pmf

ENUMERATION_CAP = 2**30
INCLEXCL_CAP = 24
MC_BLOCK = 10_000


@dataclass(frozen=True)
class Orientation:
    heads: tuple[int, ...]


@dataclass(frozen=True)
class InDegreeProfile:
    indeg: tuple[int, ...]
    zero_count: int
    even_count: int
    ones: int
    twos: int


@dataclass(frozen=True)
class MomentReport:
    hit_prob: tuple[Fraction, ...]
    mean: Fraction
    variance: Fraction


@dataclass(frozen=True)
class MonteCarloPmf:
    support: tuple[int, ...]
    probs: tuple[float, ...]
    stderr: tuple[float, ...]
    samples: int
    seed: int

    def as_dict(self) -> dict[int, float]:
        return dict(zip(self.support, self.probs))


def _rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.Generator(np.random.PCG64(rng))


def sample_orientation(H: Hypergraph, rng) -> Orientation:
    """Draw one head per edge, edges taken in stored order.

    ``rng`` is a numpy Generator or an integer seed.
    """
    picks = _rng(rng).integers(0, H.r, size=H.m)
    return Orientation(tuple(edge[int(k)] for edge, k in zip(H.edges, picks)))


def indegree_profile(H: Hypergraph, o: Orientation) -> InDegreeProfile:
    if len(o.heads) != H.m:
        raise HypergraphError(f"orientation has {len(o.heads)} heads for {H.m} edges")
    indeg = [0] * H.n
    for edge, head in zip(H.edges, o.heads):
        if head not in edge:
            raise HypergraphError(f"head {head} is not a vertex of edge {list(edge)}")
        indeg[head] += 1
    return InDegreeProfile(
        indeg=tuple(indeg),
        zero_count=indeg.count(0),
        even_count=sum(1 for d in indeg if d % 2 == 0),
        ones=indeg.count(1),
        twos=indeg.count(2),
    )


def colour_count(H: Hypergraph, o: Orientation) -> int:
    return H.n - indegree_profile(H, o).zero_count


def exact_pmf_enumeration(H: Hypergraph, cap: int = ENUMERATION_CAP) -> Pmf:
    total = H.r ** H.m
    if total > cap:
        raise BudgetExceeded(
            f"{total} orientations exceed the enumeration cap {cap}; "
            "use inclusion-exclusion (small n) or Monte Carlo", total)
    # itertools.product walks the mixed-radix order, last edge fastest
    counts = Counter(len(set(heads)) for heads in itertools.product(*H.edges))
    return Pmf.from_counts(counts, total)


def exact_pmf_inclusion_exclusion(H: Hypergraph, cap: int = INCLEXCL_CAP) -> Pmf:
    """Law of X from P(no head lands in S) = prod_E (r - |E & S|) / r.

    With N(S) the number of orientations avoiding S, s_j = sum over |S| = j of
    N(S) counts pairs (orientation, S inside its zero set), so the number of
    orientations with exactly k zero vertices is
    sum_j (-1)^(j-k) C(j, k) s_j.
    """
    n, r = H.n, H.r
    if n > cap:
        raise BudgetExceeded(f"inclusion-exclusion is capped at n <= {cap}, got n={n}", 2**n)
    masks = [sum(1 << v for v in edge) for edge in H.edges]
    s = [0] * (n + 1)
    for S in range(1 << n):
        prod = 1
        for e in masks:
            prod *= r - (e & S).bit_count()
            if prod == 0:
                break
        s[S.bit_count()] += prod
    total = r ** H.m
    counts = {}
    for k in range(n + 1):
        c = sum((-1) ** (j - k) * math.comb(j, k) * s[j] for j in range(k, n + 1))
        if c:
            counts[n - k] = c
    return Pmf.from_counts(counts, total)


def exact_pmf(H: Hypergraph) -> Pmf:
    """Whichever exact engine is cheaper for this instance."""
    if H.n <= INCLEXCL_CAP and (2 ** H.n) * H.m <= H.r ** H.m:
        return exact_pmf_inclusion_exclusion(H)
    return exact_pmf_enumeration(H)


def _mc_block(edges: np.ndarray, n: int, size: int, seed: np.random.SeedSequence) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    m, r = edges.shape
    picks = rng.integers(0, r, size=(size, m))
    heads = edges[np.arange(m), picks]  # (size, m)
    hit = np.zeros((size, n), dtype=bool)
    hit[np.arange(size)[:, None], heads] = True
    return np.bincount(hit.sum(axis=1), minlength=n + 1)


def monte_carlo_pmf(H: Hypergraph, samples: int, seed: int, workers: int = 1) -> MonteCarloPmf:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    edges = np.asarray(H.edges, dtype=np.int64)
    sizes = [MC_BLOCK] * (samples // MC_BLOCK)
    if samples % MC_BLOCK:
        sizes.append(samples % MC_BLOCK)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = list(zip(sizes, seeds))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda job: _mc_block(edges, H.n, *job), jobs))
    else:
        parts = [_mc_block(edges, H.n, *job) for job in jobs]
    counts = np.sum(parts, axis=0)
    support = tuple(int(x) for x in np.nonzero(counts)[0])
    probs = tuple(float(counts[x]) / samples for x in support)
    stderr = tuple(math.sqrt(p * (1 - p) / samples) for p in probs)
    return MonteCarloPmf(support, probs, stderr, samples, seed)


# -- moments -----------------------------------------------------------------

def hit_probability(H: Hypergraph, v: int) -> Fraction:
    """E[I_v] = 1 - ((r-1)/r)^deg(v)."""
    return 1 - Fraction(H.r - 1, H.r) ** H.degrees()[v]


def covariance_pair(H: Hypergraph, v1: int, v2: int) -> Fraction:
    """Cov(I_v1, I_v2) = ((r-2)/r)^d3 ((r-1)/r)^(d1+d2) - ((r-1)/r)^(d1+d2+2 d3)."""
    d = pair_overlap(H, v1, v2)
    r = H.r
    q = Fraction(r - 1, r)
    return Fraction(r - 2, r) ** d.d3 * q ** (d.d1 + d.d2) - q ** (d.d1 + d.d2 + 2 * d.d3)


def joint_hit_probability(H: Hypergraph, v1: int, v2: int) -> Fraction:
    """E[I_v1 I_v2] summed over how the shared edges treat the pair.

    A1: no shared edge points at v1 or v2. A2: some shared edge points at v1,
    none at v2. A3: the mirror of A2. A4: shared edges hit both.
    """
    d = pair_overlap(H, v1, v2)
    r = H.r
    q = Fraction(r - 1, r)
    p_a1 = Fraction(r - 2, r) ** d.d3
    p_a2 = Fraction((r - 1) ** d.d3 - (r - 2) ** d.d3, r ** d.d3)
    p_a4 = 1 - p_a1 - 2 * p_a2
    return (p_a1 * (1 - q ** d.d1) * (1 - q ** d.d2)
            + p_a2 * (1 - q ** d.d2)
            + p_a2 * (1 - q ** d.d1)
            + p_a4)


def exact_moments(H: Hypergraph) -> MomentReport:
    hit = tuple(hit_probability(H, v) for v in range(H.n))
    mean = sum(hit, Fraction(0))
    variance = sum((p * (1 - p) for p in hit), Fraction(0))
    for v1, v2 in itertools.combinations(range(H.n), 2):
        variance += 2 * covariance_pair(H, v1, v2)
    return MomentReport(hit, mean, variance)
