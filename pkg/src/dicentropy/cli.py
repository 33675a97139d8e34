"""Command-line front end.

Every report starts with ``#`` comment lines recording the command, its
parameters and the hypergraph it ran on, so a run can be repeated exactly.
The input's origin (file or generator) is deliberately not recorded: the
same hypergraph gives the same bytes however it was supplied.

Exit codes: 0 ok, 1 input error, 2 cap or budget exceeded, 3 bound violated
(``bounds --assert``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .closed_form import binomial_even_pmf, binomial_pmf, coupling_pmf, cycle_colour_pmf, entropy, entropy_floats
from .entropy_bounds import (
    BOUND_CSV_COLUMNS, check_cited_binomial_bound, check_cycle, verify_bounds,
)
from .exact_dist import (
    exact_moments, exact_pmf_enumeration, exact_pmf_inclusion_exclusion, monte_carlo_pmf,
)
from .hypergraph import (
    ISO_CAP, BudgetExceeded, Hypergraph, HypergraphError, canonical_form, gen_circular,
    gen_cycle, gen_special, raw_key, read_hypergraph, write_hypergraph,
)
from .pmf import CSV_COLUMNS, Pmf, format_float, pmf_rows
from .search import (
    SEARCH_CSV_COLUMNS, check_circular_conjecture, check_conjecture1, compare_cycle_vs_all,
    maximize_entropy,
)

AUTO_ENUMERATION_CAP = 2**20
AUTO_INCLEXCL_CAP = 20
DEFAULT_SAMPLES = 100_000

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VIOLATION = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any]
    output: str = "csv"
    output_path: str | None = None
    hypergraph: Hypergraph | None = None


@dataclass
class Report:
    columns: Sequence[str]
    rows: list[Sequence[Any]]
    summary: dict[str, Any] = field(default_factory=dict)
    structured: dict[str, Any] = field(default_factory=dict)


# -- formatting ---------------------------------------------------------------

def _cell(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format_float(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if x is None:
        return ""
    return str(x)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _edges_str(H: Hypergraph) -> str:
    return ";".join(" ".join(str(v) for v in e) for e in H.edges)


def _header(cfg: RunConfig) -> list[str]:
    params = " ".join(f"{k}={_cell(v)}" for k, v in cfg.params.items())
    lines = [f"# dicentropy {cfg.command} {params}".rstrip()]
    if cfg.hypergraph is not None:
        H = cfg.hypergraph
        lines.append(f"# hypergraph n={H.n} r={H.r} m={H.m} edges={_edges_str(H)}")
    return lines


def render(cfg: RunConfig, report: Report) -> str:
    if cfg.output == "json":
        doc = {"config": {"command": cfg.command, "version": __version__, **_jsonable(cfg.params)}}
        if cfg.hypergraph is not None:
            doc["hypergraph"] = cfg.hypergraph.to_dict()
        doc["result"] = _jsonable(report.structured or {
            "columns": list(report.columns), "rows": [list(r) for r in report.rows], **report.summary})
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    lines = _header(cfg)
    lines += [f"# {k}={_cell(v)}" for k, v in report.summary.items()]
    cells = [[_cell(x) for x in row] for row in report.rows]
    if cfg.output == "table":
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(report.columns)]
        lines.append("  ".join(c.rjust(w) for c, w in zip(report.columns, widths)))
        lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    writer.writerows(cells)
    return "\n".join(lines) + "\n" + buf.getvalue()


# -- hypergraph input ---------------------------------------------------------

GEN_KINDS = ("cycle", "circular", "double-edges", "star-plus-edge")


def build_generator(kind: str, n: int | None, r: int | None) -> Hypergraph:
    if n is None:
        raise InputError(f"--n is required for generator {kind!r}")
    if kind == "cycle":
        return gen_cycle(n)
    if kind == "circular":
        if r is None:
            raise InputError("--r is required for the circular generator")
        return gen_circular(n, r)
    return gen_special(n, kind)


def load_input(args) -> Hypergraph:
    if args.input and args.gen:
        raise InputError("give either --in or --gen, not both")
    if args.input:
        try:
            return read_hypergraph(args.input)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror or exc}") from exc
    if args.gen:
        return build_generator(args.gen, args.n, args.r)
    raise InputError("a hypergraph is required: use --in PATH or --gen KIND")


def _id(H: Hypergraph) -> str:
    key = canonical_form(H) if H.n <= ISO_CAP else raw_key(H)
    return key.decode("ascii")


# -- subcommands --------------------------------------------------------------

def _choose_engine(H: Hypergraph, engine: str) -> str:
    if engine != "auto":
        return engine
    if H.r ** H.m <= AUTO_ENUMERATION_CAP:
        return "enumerate"
    if H.n <= AUTO_INCLEXCL_CAP:
        return "inclexcl"
    print(f"warning: no exact engine within caps for n={H.n}, m={H.m}, r={H.r}; using Monte Carlo",
          file=sys.stderr)
    return "mc"


def _law(H: Hypergraph, args) -> tuple[str, Pmf | Any]:
    engine = _choose_engine(H, args.engine)
    if engine == "enumerate":
        return engine, exact_pmf_enumeration(H)
    if engine == "inclexcl":
        return engine, exact_pmf_inclusion_exclusion(H)
    return engine, monte_carlo_pmf(H, args.samples, args.seed, workers=args.workers)


def cmd_pmf(args, cfg: RunConfig) -> Report:
    H = cfg.hypergraph = load_input(args)
    engine, law = _law(H, args)
    cfg.params = {"engine": engine, "seed": args.seed, "samples": args.samples}
    if engine == "mc":
        rows = [(x, p, s) for x, p, s in zip(law.support, law.probs, law.stderr)]
        return Report(("x", "probability_float", "stderr"), rows)
    return Report(CSV_COLUMNS, pmf_rows(law))


def cmd_entropy(args, cfg: RunConfig) -> Report:
    H = cfg.hypergraph = load_input(args)
    engine, law = _law(H, args)
    cfg.params = {"engine": engine, "seed": args.seed, "samples": args.samples}
    h = entropy_floats(law.probs) if engine == "mc" else entropy(law)
    return Report(("engine", "entropy_bits"), [(engine, h)], structured={"engine": engine, "entropy_bits": h})


def cmd_moments(args, cfg: RunConfig) -> Report:
    H = cfg.hypergraph = load_input(args)
    cfg.params = {}
    rep = exact_moments(H)
    rows = [("mean", rep.mean.numerator, rep.mean.denominator, float(rep.mean)),
            ("variance", rep.variance.numerator, rep.variance.denominator, float(rep.variance))]
    rows += [(f"hit_prob_{v}", p.numerator, p.denominator, float(p)) for v, p in enumerate(rep.hit_prob)]
    return Report(("quantity", "numerator", "denominator", "float"), rows,
                  structured={"mean": rep.mean, "variance": rep.variance, "hit_prob": list(rep.hit_prob)})


def cmd_bounds(args, cfg: RunConfig) -> Report:
    H = cfg.hypergraph = load_input(args)
    cfg.params = {"assert": args.assert_bounds}
    rep = verify_bounds(H)
    row = (_id(H), H.n, H.m, H.r, rep.entropy, rep.variance.numerator, rep.variance.denominator,
           rep.massey, rep.theorem2, " ".join(rep.violations))
    structured = {"id": row[0], "n": H.n, "m": H.m, "r": H.r, "entropy": rep.entropy,
                  "variance": rep.variance, "massey": rep.massey, "theorem2": rep.theorem2,
                  "slack_massey": rep.slack_massey, "slack_theorem2": rep.slack_theorem2,
                  "violations": list(rep.violations)}
    report = Report(BOUND_CSV_COLUMNS, [row], structured=structured)
    report.violated = bool(rep.violations)  # type: ignore[attr-defined]
    return report


def _n_range(args) -> range:
    n_max = args.n_max if args.n_max is not None else args.n
    if n_max < args.n:
        raise InputError("--n-max must be at least --n")
    return range(args.n, n_max + 1)


def cmd_cycle(args, cfg: RunConfig) -> Report:
    cfg.params = {"n": args.n, "n_max": args.n_max if args.n_max is not None else args.n, "law": args.law}
    if args.law:
        law = cycle_colour_pmf(args.n)
        return Report(CSV_COLUMNS, pmf_rows(law))
    rows = []
    for n in _n_range(args):
        c = check_cycle(n)
        rows.append((n, c.entropy, c.even_binomial_entropy, c.binomial_minus_one_bound, c.lower_bound,
                     c.entropy - c.lower_bound, c.holds))
    return Report(("n", "entropy", "even_binomial_entropy", "binomial_minus_one_bound", "cycle_bound", "slack", "holds"),
                  rows)


def cmd_binom_even(args, cfg: RunConfig) -> Report:
    cfg.params = {"n": args.n, "n_max": args.n_max if args.n_max is not None else args.n}
    rows = []
    for n in _n_range(args):
        h_even = entropy(binomial_even_pmf(n))
        h_prev = entropy(binomial_pmf(n - 1))
        cited = check_cited_binomial_bound(n - 1) if n >= 2 else None
        rows.append((n, h_even, h_prev, coupling_pmf(n) == binomial_even_pmf(n),
                     h_prev - 1 <= h_even <= h_prev,
                     cited.bound if cited else None, cited.slack if cited else None))
    return Report(("n", "even_binomial_entropy", "binomial_n_minus_1_entropy", "coupling_matches",
                   "sandwich_holds", "cited_bound", "cited_slack"), rows)


def _search_report(rep, args) -> Report:
    rows = [(i + 1, e.canonical_key, e.entropy, e.degree_gap, e.canonical_key in rep.maximizers)
            for i, e in enumerate(rep.ranking)]
    summary = {"candidates_evaluated": rep.candidates_evaluated, "max_entropy": rep.max_entropy,
               "maximizers": " ".join(rep.maximizers),
               "maximizer_degree_gaps": " ".join(str(g) for g in rep.maximizer_degree_gaps),
               "conjecture1_verdict": rep.conjecture1_verdict}
    return Report(SEARCH_CSV_COLUMNS, rows, summary, structured=rep.to_dict())


def _search_params(args) -> dict:
    return {"n": args.n, "m": args.m, "r": args.r, "up_to_iso": args.up_to_iso, "top_k": args.top_k}


def cmd_search(args, cfg: RunConfig) -> Report:
    cfg.params = _search_params(args)
    rep = maximize_entropy(args.n, args.m, args.r, up_to_iso=args.up_to_iso, top_k=args.top_k,
                           workers=args.workers)
    return _search_report(rep, args)


def cmd_conjecture1(args, cfg: RunConfig) -> Report:
    cfg.params = _search_params(args)
    rep = check_conjecture1(args.n, args.m, args.r, up_to_iso=args.up_to_iso, top_k=args.top_k,
                            workers=args.workers)
    return _search_report(rep, args)


def cmd_conjecture2(args, cfg: RunConfig) -> Report:
    cfg.params = {"r": args.r, "n_min": args.n_min, "n_max": args.n_max}
    table = check_circular_conjecture(args.r, args.n_min, args.n_max)
    rows = [(row.n, row.entropy, row.half_log_n_over_r, row.residual, row.skipped) for row in table.rows]
    return Report(("n", "entropy", "half_log_n_over_r", "residual", "skipped"), rows,
                  {"min_residual": table.min_residual})


def cmd_cycle_vs_all(args, cfg: RunConfig) -> Report:
    cfg.params = {"n": args.n}
    cmp = compare_cycle_vs_all(args.n, workers=args.workers)
    rows = [(name, h) for name, h in cmp.reference_entropies.items()]
    rows.append(("class_max", cmp.max_entropy))
    summary = {"candidates_evaluated": cmp.candidates_evaluated, "cycle_key": cmp.cycle_key,
               "maximizers": " ".join(cmp.maximizers), "gap": cmp.gap,
               "cycle_is_maximizer": cmp.cycle_is_maximizer, "verdict": cmp.verdict}
    return Report(("graph", "entropy"), rows, summary)


def cmd_gen(args, cfg: RunConfig) -> str:
    H = build_generator(args.kind, args.n, args.r)
    if args.out:
        write_hypergraph(H, args.out, structured=args.format == "json")
        return ""
    return json.dumps(H.to_dict()) + "\n" if args.format == "json" else H.to_text()


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dicentropy", description="Entropy of the number of colours seen on rolled dice.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, *, source=False, seed=False, workers=False):
        p.add_argument("--output", choices=("csv", "json", "table"), default="csv")
        p.add_argument("--output-path")
        if source:
            p.add_argument("--in", dest="input", metavar="PATH")
            p.add_argument("--gen", choices=GEN_KINDS)
            p.add_argument("--n", type=int)
            p.add_argument("--r", type=int)
        if seed:
            p.add_argument("--engine", choices=("auto", "enumerate", "inclexcl", "mc"), default="auto")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        if workers or seed:
            p.add_argument("--workers", type=int, default=1)

    common(sub.add_parser("pmf", help="law of X"), source=True, seed=True)
    common(sub.add_parser("entropy", help="entropy of X in bits"), source=True, seed=True)
    common(sub.add_parser("moments", help="exact mean, variance and hit probabilities"), source=True)
    p = sub.add_parser("bounds", help="entropy against the variance and vertex-count bounds")
    common(p, source=True)
    p.add_argument("--assert", dest="assert_bounds", action="store_true",
                   help="exit 3 if any bound is violated")

    p = sub.add_parser("cycle", help="closed-form cycle law and its lower bound")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--law", action="store_true", help="emit the law itself")

    p = sub.add_parser("binom-even", help="even-conditioned binomial and the coupling check")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int)

    for name in ("search", "conjecture1"):
        p = sub.add_parser(name, help="exhaustive entropy maximization over D(n, m, r)")
        common(p, workers=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--r", type=int, default=2)
        p.add_argument("--up-to-iso", action="store_true")
        p.add_argument("--top-k", type=int, default=10)

    p = sub.add_parser("conjecture2", help="circular hypergraph residual table")
    common(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("cycle-vs-all", help="cycle entropy against the maximum over G_n")
    common(p, workers=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("gen", help="write a generated hypergraph")
    p.add_argument("--kind", choices=GEN_KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


COMMANDS = {
    "pmf": cmd_pmf, "entropy": cmd_entropy, "moments": cmd_moments, "bounds": cmd_bounds,
    "cycle": cmd_cycle, "binom-even": cmd_binom_even, "search": cmd_search,
    "conjecture1": cmd_conjecture1, "conjecture2": cmd_conjecture2, "cycle-vs-all": cmd_cycle_vs_all,
}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise InputError("a subcommand is required")
        if args.command == "gen":
            text = cmd_gen(args, None)
            stdout.write(text)
            return EXIT_OK
        cfg = RunConfig(args.command, {}, args.output, args.output_path)
        report = COMMANDS[args.command](args, cfg)
        text = render(cfg, report)
        if cfg.output_path:
            with open(cfg.output_path, "w") as fh:
                fh.write(text)
        else:
            stdout.write(text)
        if getattr(report, "violated", False) and cfg.params.get("assert"):
            return EXIT_VIOLATION
        return EXIT_OK
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, HypergraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
