"""r-uniform multi-hypergraphs: construction, generators, canonical forms and
class enumeration.

A hypergraph here is a coloured-dice configuration: ``n`` colours are the
vertices and each die is an edge holding the ``r`` distinct colours painted on
its sides. Repeated dice give repeated edges.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

ISO_CAP = 8
ENUMERATION_BUDGET = 10**7


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input."""


class ImproperColouringError(HypergraphError):
    """An edge repeats a vertex (a colour used twice on one die)."""


class BudgetExceeded(RuntimeError):
    """Work would exceed a configured cap; ``estimate`` holds the size that was refused."""

    def __init__(self, message: str, estimate: int | None = None):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class PairOverlap:
    d1: int  # edges containing v1 but not v2
    d2: int  # edges containing v2 but not v1
    d3: int  # edges containing both


@dataclass(frozen=True)
class Hypergraph:
    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.r < 2:
            raise HypergraphError(f"edge size r must be at least 2, got {self.r}")
        if self.n < 1:
            raise HypergraphError(f"vertex count must be positive, got {self.n}")
        if len(self.edges) == 0:
            raise HypergraphError("edge list is empty")
        normalized = []
        for edge in self.edges:
            edge = tuple(int(v) for v in edge)
            if len(set(edge)) != len(edge):
                raise ImproperColouringError(f"edge {list(edge)} repeats a vertex")
            if len(edge) != self.r:
                raise HypergraphError(f"edge {list(edge)} has size {len(edge)}, expected r={self.r}")
            for v in edge:
                if not 0 <= v < self.n:
                    raise HypergraphError(f"vertex {v} out of range [0, {self.n})")
            normalized.append(tuple(sorted(edge)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for edge in self.edges:
            for v in edge:
                deg[v] += 1
        return deg

    @property
    def in_dice_regime(self) -> bool:
        """True when m >= n > r >= 2, the regime of the dice problem."""
        return self.m >= self.n > self.r >= 2

    def to_text(self) -> str:
        lines = [f"n={self.n} r={self.r}"]
        lines += [" ".join(str(v) for v in edge) for edge in self.edges]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}


def new_hypergraph(n: int, r: int, edges: Sequence[Sequence[int]]) -> Hypergraph:
    return Hypergraph(n, r, tuple(tuple(e) for e in edges))


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise HypergraphError(f"vertex {v} out of range [0, {H.n})")


def degree(H: Hypergraph, v: int) -> int:
    _check_vertex(H, v)
    return sum(1 for edge in H.edges if v in edge)


def degree_gap(H: Hypergraph) -> int:
    deg = H.degrees()
    return max(deg) - min(deg)


def pair_overlap(H: Hypergraph, v1: int, v2: int) -> PairOverlap:
    _check_vertex(H, v1)
    _check_vertex(H, v2)
    if v1 == v2:
        raise HypergraphError("pair_overlap needs two distinct vertices")
    d1 = d2 = d3 = 0
    for edge in H.edges:
        a, b = v1 in edge, v2 in edge
        if a and b:
            d3 += 1
        elif a:
            d1 += 1
        elif b:
            d2 += 1
    return PairOverlap(d1, d2, d3)


# -- generators --------------------------------------------------------------

def gen_cycle(n: int) -> Hypergraph:
    if n < 3:
        raise HypergraphError(f"a cycle needs n >= 3 vertices, got {n}")
    return new_hypergraph(n, 2, [(i, (i + 1) % n) for i in range(n)])


def gen_circular(n: int, r: int) -> Hypergraph:
    """All n windows of r consecutive vertices on Z_n."""
    if r < 2:
        raise HypergraphError(f"r must be at least 2, got {r}")
    if n <= r:
        raise HypergraphError(f"circular hypergraph needs n > r, got n={n}, r={r}")
    return new_hypergraph(n, r, [[(i + j) % n for j in range(r)] for i in range(n)])


SPECIAL_KINDS = ("double-edges", "star-plus-edge")


def gen_special(n: int, kind: str) -> Hypergraph:
    if kind == "double-edges":
        if n < 2 or n % 2:
            raise HypergraphError(f"double-edges needs an even n >= 2, got {n}")
        return new_hypergraph(n, 2, [(2 * i, 2 * i + 1) for i in range(n // 2) for _ in range(2)])
    if kind == "star-plus-edge":
        if n < 3:
            raise HypergraphError(f"star-plus-edge needs n >= 3, got {n}")
        return new_hypergraph(n, 2, [(0, i) for i in range(1, n)] + [(1, 2)])
    raise HypergraphError(f"unknown special kind {kind!r}; expected one of {SPECIAL_KINDS}")


# -- canonical form ----------------------------------------------------------

def _serialize(n: int, r: int, edges: Sequence[Sequence[int]]) -> bytes:
    body = "|".join(",".join(str(v) for v in e) for e in edges)
    return f"{n}:{r}:{body}".encode("ascii")


def canonical_form(H: Hypergraph, cap: int = ISO_CAP) -> bytes:
    """Lexicographically least relabelled edge list over all n! vertex permutations."""
    if H.n > cap:
        raise BudgetExceeded(f"canonical_form is brute force and capped at n <= {cap}, got n={H.n}",
                             math.factorial(H.n))
    best = None
    for perm in itertools.permutations(range(H.n)):
        relabelled = sorted(tuple(sorted(perm[v] for v in e)) for e in H.edges)
        if best is None or relabelled < best:
            best = relabelled
    return _serialize(H.n, H.r, best)


def raw_key(H: Hypergraph) -> bytes:
    """Serialization of the stored (not canonicalized) edge list."""
    return _serialize(H.n, H.r, H.edges)


def canonical_representative(key: bytes) -> Hypergraph:
    n, r, body = key.decode("ascii").split(":")
    edges = [[int(v) for v in e.split(",")] for e in body.split("|")]
    return new_hypergraph(int(n), int(r), edges)


class _EdgeRelabeller:
    """Action of all vertex permutations on the lexicographic list of r-subsets.

    A multiset of edges is stored as a sorted tuple of edge indices. Because
    edge indices follow the lexicographic order of the edges themselves,
    comparing sorted index tuples is the same as comparing sorted edge lists,
    so the minimum over permutations agrees with ``canonical_form``.
    """

    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self.edges = list(itertools.combinations(range(n), r))
        index = {e: i for i, e in enumerate(self.edges)}
        perms = list(itertools.permutations(range(n)))
        table = np.empty((len(perms), len(self.edges)), dtype=np.int64)
        for p, perm in enumerate(perms):
            for i, e in enumerate(self.edges):
                table[p, i] = index[tuple(sorted(perm[v] for v in e))]
        self.table = table

    def rows_per_chunk(self, m: int) -> int:
        return max(1, 4_000_000 // (self.table.shape[0] * m))

    def canonical_codes(self, batch: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """For a (B, m) array of sorted index tuples return (own code, canonical code).

        Codes are base-|edges| integers of the sorted tuple, monotone in
        lexicographic order.
        """
        base = len(self.edges)
        m = batch.shape[1]
        weights = base ** np.arange(m - 1, -1, -1, dtype=np.int64)
        own = batch @ weights
        mapped = self.table[:, batch]  # (P, B, m)
        mapped.sort(axis=2)
        return own, (mapped @ weights).min(axis=0)

    def decode(self, code: int, m: int) -> list[tuple[int, ...]]:
        base = len(self.edges)
        idx = []
        for _ in range(m):
            code, d = divmod(code, base)
            idx.append(d)
        return [self.edges[i] for i in reversed(idx)]


@functools.lru_cache(maxsize=16)
def _relabeller(n: int, r: int) -> _EdgeRelabeller:
    return _EdgeRelabeller(n, r)


def multiset_count(n: int, m: int, r: int) -> int:
    k = math.comb(n, r)
    return math.comb(k + m - 1, m)


def enumerate_class(n: int, m: int, r: int, up_to_iso: bool = False,
                    budget: int = ENUMERATION_BUDGET) -> Iterator[Hypergraph]:
    """All r-uniform multi-hypergraphs with n vertices and m edges, lexicographic order.

    With ``up_to_iso`` only canonical representatives are yielded, one per
    isomorphism class.
    """
    if r < 2 or m < 1 or math.comb(n, r) < 1:
        raise HypergraphError(f"empty class D(n={n}, m={m}, r={r})")
    total = multiset_count(n, m, r)
    if total > budget:
        raise BudgetExceeded(f"D(n={n}, m={m}, r={r}) holds {total} multisets, over budget {budget}", total)
    if up_to_iso and n > ISO_CAP:
        raise BudgetExceeded(f"isomorphism reduction is capped at n <= {ISO_CAP}, got n={n}", total)
    edges = list(itertools.combinations(range(n), r))
    multisets = itertools.combinations_with_replacement(range(len(edges)), m)
    if not up_to_iso:
        for ms in multisets:
            yield Hypergraph(n, r, tuple(edges[i] for i in ms))
        return
    if len(edges) ** m >= 2**63:
        for ms in multisets:
            H = Hypergraph(n, r, tuple(edges[i] for i in ms))
            if canonical_form(H) == raw_key(H):
                yield H
        return
    # every class contains a member using edge 0 = (0, ..., r-1), and the
    # canonical representative is lexicographically least, so it starts there
    multisets = ((0,) + rest for rest in itertools.combinations_with_replacement(range(len(edges)), m - 1))
    relabeller = _relabeller(n, r)
    chunk = relabeller.rows_per_chunk(m)
    while True:
        block = list(itertools.islice(multisets, chunk))
        if not block:
            return
        arr = np.asarray(block, dtype=np.int64)
        own, canon = relabeller.canonical_codes(arr)
        for row, keep in zip(block, own == canon):
            if keep:
                yield Hypergraph(n, r, tuple(edges[i] for i in row))


def canonical_keys(graphs: Sequence[Hypergraph]) -> list[bytes]:
    """Canonical keys for many hypergraphs of one (n, r), vectorized per edge count."""
    out: list[bytes | None] = [None] * len(graphs)
    groups: dict[tuple[int, int, int], list[int]] = {}
    for i, H in enumerate(graphs):
        if H.n > ISO_CAP:
            raise BudgetExceeded(f"canonical keys are capped at n <= {ISO_CAP}, got n={H.n}")
        groups.setdefault((H.n, H.r, H.m), []).append(i)
    for (n, r, m), idx in groups.items():
        relabeller = _relabeller(n, r)
        if len(relabeller.edges) ** m >= 2**63:
            for i in idx:
                out[i] = canonical_form(graphs[i])
            continue
        index = {e: j for j, e in enumerate(relabeller.edges)}
        arr = np.asarray([[index[e] for e in graphs[i].edges] for i in idx], dtype=np.int64)
        step = relabeller.rows_per_chunk(m)
        for start in range(0, len(idx), step):
            _, canon = relabeller.canonical_codes(arr[start:start + step])
            for i, code in zip(idx[start:start + step], canon):
                out[i] = _serialize(n, r, relabeller.decode(int(code), m))
    return out  # type: ignore[return-value]


def class_size(n: int, m: int, r: int, up_to_iso: bool = False) -> int:
    if not up_to_iso:
        return multiset_count(n, m, r)
    return sum(1 for _ in enumerate_class(n, m, r, up_to_iso=True))


# -- file I/O ----------------------------------------------------------------

def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``n=<int> r=<int>`` text format, or a JSON object with n, r, edges."""
    stripped = text.strip()
    if not stripped:
        raise HypergraphError("empty hypergraph file")
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return new_hypergraph(int(data["n"]), int(data["r"]), data["edges"])
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise HypergraphError(f"malformed structured hypergraph: {exc}") from exc
    lines = [ln.strip() for ln in stripped.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    header = dict(tok.split("=", 1) for tok in lines[0].split() if "=" in tok)
    try:
        n, r = int(header["n"]), int(header["r"])
        edges = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except (KeyError, ValueError) as exc:
        raise HypergraphError(f"malformed hypergraph header or edge line: {exc}") from exc
    return new_hypergraph(n, r, edges)


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def write_hypergraph(H: Hypergraph, path: str | Path, structured: bool = False) -> None:
    text = json.dumps(H.to_dict()) + "\n" if structured else H.to_text()
    Path(path).write_text(text)


def degree_histogram(H: Hypergraph) -> dict[int, int]:
    return dict(sorted(Counter(H.degrees()).items()))
