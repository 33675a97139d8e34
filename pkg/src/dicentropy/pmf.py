"""Exact probability mass functions over integers."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

CSV_COLUMNS = ("x", "numerator", "denominator", "probability_float")


@dataclass(frozen=True)
class Pmf:
    support: tuple[int, ...]
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.support) != len(self.probs):
            raise ValueError("support and probs differ in length")
        if list(self.support) != sorted(set(self.support)):
            raise ValueError("support must be distinct and ascending")
        if any(p <= 0 for p in self.probs):
            raise ValueError("probabilities must be positive (zero entries are omitted)")
        if sum(self.probs, Fraction(0)) != 1:
            raise ValueError(f"probabilities sum to {sum(self.probs)}, not 1")

    @classmethod
    def from_mapping(cls, masses: Mapping[int, Fraction | int]) -> "Pmf":
        items = sorted((int(x), Fraction(p)) for x, p in masses.items() if p != 0)
        return cls(tuple(x for x, _ in items), tuple(p for _, p in items))

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], total: int | None = None) -> "Pmf":
        total = sum(counts.values()) if total is None else total
        return cls.from_mapping({x: Fraction(c, total) for x, c in counts.items()})

    def as_dict(self) -> dict[int, Fraction]:
        return dict(zip(self.support, self.probs))

    def floats(self) -> list[float]:
        return [float(p) for p in self.probs]

    def __getitem__(self, x: int) -> Fraction:
        return self.as_dict().get(x, Fraction(0))

    def mean(self) -> Fraction:
        return sum((x * p for x, p in zip(self.support, self.probs)), Fraction(0))

    def variance(self) -> Fraction:
        mu = self.mean()
        return sum(((x - mu) ** 2 * p for x, p in zip(self.support, self.probs)), Fraction(0))

    def map(self, f) -> "Pmf":
        """Law of f(X); masses of colliding images are added."""
        out: dict[int, Fraction] = {}
        for x, p in zip(self.support, self.probs):
            y = f(x)
            out[y] = out.get(y, Fraction(0)) + p
        return Pmf.from_mapping(out)


def format_float(x: float) -> str:
    return f"{x:.6g}"


def pmf_rows(p: Pmf) -> list[tuple[int, int, int, str]]:
    return [(x, q.numerator, q.denominator, format_float(float(q))) for x, q in zip(p.support, p.probs)]


def pmf_to_csv(p: Pmf) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(pmf_rows(p))
    return buf.getvalue()


def pmf_from_csv(text: str | Iterable[str]) -> Pmf:
    """Read the exact columns back; the float column is ignored."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    reader = csv.DictReader(lines)
    return Pmf.from_mapping({int(row["x"]): Fraction(int(row["numerator"]), int(row["denominator"]))
                             for row in reader})
