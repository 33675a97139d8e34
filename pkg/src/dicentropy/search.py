"""Exhaustive entropy maximization over D(n, m, r) and conjecture checkers.

The checkers emit verdicts; they never assert that a conjecture holds.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .closed_form import cycle_colour_pmf, entropy
from .exact_dist import exact_pmf, exact_pmf_enumeration, exact_pmf_inclusion_exclusion
from .hypergraph import (
    ISO_CAP, BudgetExceeded, Hypergraph, HypergraphError, canonical_form, canonical_keys,
    canonical_representative, degree_gap, enumerate_class, gen_circular, gen_cycle, gen_special, raw_key,
)

TIE_TOL = 1e-9
CHUNK = 512

SEARCH_CSV_COLUMNS = ("rank", "canonical_key", "entropy", "degree_gap", "is_maximizer")


@dataclass(frozen=True)
class RankEntry:
    canonical_key: str
    entropy: float
    degree_gap: int


@dataclass(frozen=True)
class SearchReport:
    n: int
    m: int
    r: int
    up_to_iso: bool
    candidates_evaluated: int
    max_entropy: float
    maximizers: tuple[str, ...]
    maximizer_degree_gaps: tuple[int, ...]
    conjecture1_verdict: str
    ranking: tuple[RankEntry, ...]
    counterexamples: tuple[dict, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ranking"] = [asdict(e) for e in self.ranking]
        d["counterexamples"] = list(self.counterexamples)
        d["maximizers"] = list(self.maximizers)
        d["maximizer_degree_gaps"] = list(self.maximizer_degree_gaps)
        return d


def _evaluate(graphs: list[Hypergraph]) -> list[tuple[float, int]]:
    return [(entropy(exact_pmf(H)), degree_gap(H)) for H in graphs]


def in_conjecture_regime(n: int, m: int, r: int) -> bool:
    return m >= n > r >= 2


def maximize_entropy(n: int, m: int, r: int, up_to_iso: bool = False, top_k: int = 10,
                     workers: int = 1) -> SearchReport:
    """Exact entropy of every member of D(n, m, r); argmax with canonical-key tie-break.

    Ranking and maximizers are listed per isomorphism class. Without
    ``up_to_iso`` every multiset is still evaluated, then folded onto its
    canonical key (raw key when n exceeds the isomorphism cap).
    """
    stream = enumerate_class(n, m, r, up_to_iso=up_to_iso)
    best: dict[str, tuple[float, int]] = {}
    evaluated = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while True:
            batches = [list(itertools.islice(stream, CHUNK)) for _ in range(max(1, workers))]
            batches = [b for b in batches if b]
            if not batches:
                break
            results = pool.map(_evaluate, batches) if pool else map(_evaluate, batches)
            for batch, scores in zip(batches, results):
                if up_to_iso:
                    keys = [raw_key(H) for H in batch]
                elif n <= ISO_CAP:
                    keys = canonical_keys(batch)
                else:
                    keys = [raw_key(H) for H in batch]
                for key, score in zip(keys, scores):
                    best.setdefault(key.decode("ascii"), score)
                evaluated += len(batch)
    finally:
        if pool:
            pool.shutdown()

    ordered = sorted(best.items(), key=lambda kv: (-kv[1][0], kv[0]))
    max_entropy = ordered[0][1][0]
    maximizers = [k for k, (h, _) in ordered if h >= max_entropy - TIE_TOL]
    maximizers.sort()
    gaps = [best[k][1] for k in maximizers]
    if not in_conjecture_regime(n, m, r):
        verdict = "not-applicable"
    elif all(g <= 1 for g in gaps):
        verdict = "consistent"
    else:
        verdict = "counterexample"
    counterexamples = tuple(
        {"canonical_key": k, "entropy": best[k][0], "degree_gap": best[k][1],
         "edges": [list(e) for e in canonical_representative(k.encode("ascii")).edges]}
        for k in maximizers if best[k][1] > 1
    )
    ranking = tuple(RankEntry(k, h, g) for k, (h, g) in ordered[:top_k])
    return SearchReport(n, m, r, up_to_iso, evaluated, max_entropy, tuple(maximizers), tuple(gaps),
                        verdict, ranking, counterexamples)


def check_conjecture1(n: int, m: int, r: int, up_to_iso: bool = False, top_k: int = 10,
                      workers: int = 1) -> SearchReport:
    """Do all entropy maximizers have degree gap at most 1?"""
    return maximize_entropy(n, m, r, up_to_iso=up_to_iso, top_k=top_k, workers=workers)


@dataclass(frozen=True)
class CircularRow:
    n: int
    entropy: float | None
    half_log_n_over_r: float
    residual: float | None
    skipped: bool = False


@dataclass(frozen=True)
class CircularTable:
    r: int
    rows: tuple[CircularRow, ...]

    @property
    def min_residual(self) -> float | None:
        vals = [row.residual for row in self.rows if row.residual is not None]
        return min(vals) if vals else None


ROW_ENUMERATION_CAP = 2**20
ROW_INCLEXCL_CAP = 20


def _circular_entropy(H: Hypergraph) -> float:
    try:
        return entropy(exact_pmf_inclusion_exclusion(H, cap=ROW_INCLEXCL_CAP))
    except BudgetExceeded:
        return entropy(exact_pmf_enumeration(H, cap=ROW_ENUMERATION_CAP))


def check_circular_conjecture(r: int, n_min: int, n_max: int) -> CircularTable:
    """Residual H(X) - 1/2 log2(n/r) of circular hypergraphs; the O(1) is left open."""
    if r < 2:
        raise HypergraphError(f"r must be at least 2, got {r}")
    if n_min <= r:
        raise HypergraphError(f"circular hypergraphs need n > r, got n_min={n_min}, r={r}")
    rows = []
    for n in range(n_min, n_max + 1):
        half = 0.5 * math.log2(n / r)
        try:
            h = _circular_entropy(gen_circular(n, r))
        except BudgetExceeded:
            rows.append(CircularRow(n, None, half, None, skipped=True))
            continue
        rows.append(CircularRow(n, h, half, h - half))
    return CircularTable(r, tuple(rows))


@dataclass(frozen=True)
class CycleComparison:
    n: int
    cycle_entropy: float
    cycle_key: str
    max_entropy: float
    gap: float
    maximizers: tuple[str, ...]
    cycle_is_maximizer: bool
    reference_entropies: dict
    verdict: str
    candidates_evaluated: int


EXHAUSTIVE_N = 5


def compare_cycle_vs_all(n: int, workers: int = 1) -> CycleComparison:
    """Does the n-cycle reach the largest entropy in G_n? Report only."""
    if n < 3:
        raise HypergraphError(f"a cycle needs n >= 3, got {n}")
    up_to_iso = n > EXHAUSTIVE_N
    report = maximize_entropy(n, n, 2, up_to_iso=up_to_iso, top_k=1, workers=workers)
    cycle_h = entropy(cycle_colour_pmf(n))
    cycle_key = canonical_form(gen_cycle(n)).decode("ascii")
    refs = {"cycle": cycle_h}
    for kind in ("double-edges", "star-plus-edge"):
        try:
            refs[kind] = entropy(exact_pmf(gen_special(n, kind)))
        except HypergraphError:
            continue
    is_max = cycle_h >= report.max_entropy - TIE_TOL
    return CycleComparison(
        n=n, cycle_entropy=cycle_h, cycle_key=cycle_key, max_entropy=report.max_entropy,
        gap=report.max_entropy - cycle_h, maximizers=report.maximizers, cycle_is_maximizer=is_max,
        reference_entropies=refs, verdict="consistent" if is_max else "counterexample-to-remark",
        candidates_evaluated=report.candidates_evaluated,
    )
