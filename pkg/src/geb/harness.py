"""Corpus drivers: soundness verification, conjecture checks, equality search.

Each driver consumes an iterable of graphs, processes them in chunks (so
eigenvalue solves batch across a chunk), and folds the per-chunk results
into one CorpusSummary. Chunks may be farmed out to worker processes; the
merge is commutative and the final lists are sorted, so the outcome is
identical for any worker count and any chunk order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Iterator

from .bounds import BoundReport, bound_report
from .errors import InvariantViolation
from .graphs import Graph, is_complete_bipartite
from .gruss import energy_chain
from .spectral import DEFAULT_ZERO_TOL, Spectrum, eigenvalues_batch, spectral_stats

DEFAULT_TOL = 1e-9
DEFAULT_EQUALITY_EPS = 1e-7

EQUALITY_BOUNDS = ("cor_nice", "main", "rank_bound", "caporossi", "mcclelland_lower")

_CHUNK_SIZE = 1024
_GRUSS_IDENTITY_TOL = 1e-6

_PROVEN_LOWER = ("mcclelland_lower", "caporossi", "main", "cor_nice", "amgm", "rank_bound")


@dataclass(frozen=True)
class Violation:
    graph6: str
    bound_name: str
    bound_value: float
    energy: float
    detail: str | None = None


@dataclass(frozen=True)
class EqualityHit:
    graph6: str
    bound_name: str
    slack: float
    is_complete_bipartite: bool


@dataclass(frozen=True)
class Extreme:
    graph6: str
    slack: float


@dataclass
class CorpusSummary:
    graphs_seen: int = 0
    graphs_skipped: int = 0
    violations: list[Violation] = field(default_factory=list)
    equality_hits: list[EqualityHit] = field(default_factory=list)
    extremes: dict[str, Extreme] = field(default_factory=dict)

    def merge(self, other: "CorpusSummary") -> None:
        self.graphs_seen += other.graphs_seen
        self.graphs_skipped += other.graphs_skipped
        self.violations.extend(other.violations)
        self.equality_hits.extend(other.equality_hits)
        for name, ext in other.extremes.items():
            mine = self.extremes.get(name)
            if mine is None or (ext.slack, ext.graph6) < (mine.slack, mine.graph6):
                self.extremes[name] = ext

    def finalize(self) -> "CorpusSummary":
        self.violations.sort(key=lambda v: (v.graph6, v.bound_name))
        self.equality_hits.sort(key=lambda h: (h.graph6, h.bound_name))
        return self


def _note_extreme(summary: CorpusSummary, name: str, graph6: str, slack: float) -> None:
    mine = summary.extremes.get(name)
    if mine is None or (slack, graph6) < (mine.slack, mine.graph6):
        summary.extremes[name] = Extreme(graph6, slack)


def _g6(report: BoundReport) -> str:
    return report.graph6 if report.graph6 is not None else f"<n={report.n}>"


def _reports(graphs: list[Graph], zero_tol: float) -> Iterator[tuple[Graph, BoundReport]]:
    specs = eigenvalues_batch(graphs)
    for g, spec in zip(graphs, specs):
        yield g, bound_report(g, zero_tol, spectrum=spec)


def _check_gruss_chain(
    summary: CorpusSummary,
    g: Graph,
    spec: "Spectrum",
    report: BoundReport,
    zero_tol: float,
) -> None:
    """Product-sum identity and chain soundness, full and rank-restricted."""
    stats = spectral_stats(spec, zero_tol)
    g6 = _g6(report)
    target = spec.energy * spec.energy - 2.0 * g.edge_count
    for restricted in (False, True):
        if restricted and stats.rank == 0:
            continue
        try:
            chain = energy_chain(spec, stats, restrict_to_nonzero=restricted)
        except InvariantViolation as exc:
            summary.violations.append(
                Violation(g6, "gruss:chain" + (":restricted" if restricted else ""),
                          float("nan"), spec.energy, str(exc))
            )
            continue
        if abs(chain.P - target) > _GRUSS_IDENTITY_TOL:
            summary.violations.append(
                Violation(g6, "gruss:identity" + (":restricted" if restricted else ""),
                          chain.P, target, "P != E^2 - 2m")
            )


def _verify_chunk(graphs: list[Graph], tol: float, zero_tol: float) -> CorpusSummary:
    summary = CorpusSummary()
    specs = eigenvalues_batch(graphs)
    for g, spec in zip(graphs, specs):
        report = bound_report(g, zero_tol, spectrum=spec)
        summary.graphs_seen += 1
        g6 = _g6(report)
        energy = report.energy

        for name in _PROVEN_LOWER:
            value = getattr(report, name)
            if value is None:
                continue
            if energy + tol < value:
                summary.violations.append(Violation(g6, name, value, energy))
            _note_extreme(summary, name, g6, energy - value)
        if energy - tol > report.mcclelland_upper:
            summary.violations.append(
                Violation(g6, "mcclelland_upper", report.mcclelland_upper, energy)
            )
        _note_extreme(summary, "mcclelland_upper", g6, report.mcclelland_upper - energy)

        if report.m >= 1:
            assert report.main is not None and report.cor_nice is not None
            if report.rank_bound is not None and report.rank_bound < report.main - tol:
                summary.violations.append(
                    Violation(g6, "chain:rank_ge_main", report.rank_bound, report.main,
                              "rank_bound fell below main")
                )
            if report.main < report.cor_nice - tol:
                summary.violations.append(
                    Violation(g6, "chain:main_ge_cor_nice", report.main, report.cor_nice,
                              "main fell below cor_nice")
                )
            if report.amgm is not None and report.amgm > report.main + tol:
                summary.violations.append(
                    Violation(g6, "chain:amgm_le_main", report.amgm, report.main,
                              "amgm exceeded main")
                )
            if report.is_triangle_free and report.cor_nice < report.caporossi - tol:
                summary.violations.append(
                    Violation(g6, "dominance:triangle_free", report.cor_nice,
                              report.caporossi, "cor_nice fell below caporossi")
                )
            if report.is_connected and report.is_regular:
                if abs(report.cor_nice - report.n) > tol:
                    summary.violations.append(
                        Violation(g6, "regular:gutman", report.cor_nice, float(report.n),
                                  "cor_nice differs from n on a regular graph")
                    )
            if report.is_connected:
                assert report.epsilon is not None and report.beta is not None
                if report.beta < report.epsilon - tol:
                    summary.violations.append(
                        Violation(g6, "irregularity:beta_ge_eps", report.beta,
                                  report.epsilon, "beta fell below epsilon")
                    )
                if report.epsilon < 1.0 - tol:
                    summary.violations.append(
                        Violation(g6, "irregularity:eps_ge_1", report.epsilon, 1.0,
                                  "epsilon fell below 1")
                    )
            _check_gruss_chain(summary, g, spec, report, zero_tol)
    return summary


def _conjectures_chunk(graphs: list[Graph], tol: float, zero_tol: float) -> CorpusSummary:
    summary = CorpusSummary()
    for g, report in _reports(graphs, zero_tol):
        summary.graphs_seen += 1
        if not report.is_connected or report.m == 0:
            summary.graphs_skipped += 1
            continue
        assert report.conj1 is not None and report.conj2 is not None
        g6 = _g6(report)
        energy = report.energy
        if energy < report.conj1 - tol:
            summary.violations.append(
                Violation(g6, "conj1", report.conj1, energy,
                          f"spectrum={_spectrum_detail(g)}")
            )
        if energy > report.conj2 + tol:
            summary.violations.append(
                Violation(g6, "conj2", report.conj2, energy,
                          f"spectrum={_spectrum_detail(g)}")
            )
        _note_extreme(summary, "conj1", g6, energy - report.conj1)
        _note_extreme(summary, "conj2", g6, report.conj2 - energy)
    return summary


def _spectrum_detail(g: Graph) -> str:
    spec = eigenvalues_batch([g])[0]
    return "[" + ", ".join(f"{v:.12g}" for v in spec.values) + "]"


def _equality_chunk(
    graphs: list[Graph], bound: str, eps: float, zero_tol: float
) -> CorpusSummary:
    summary = CorpusSummary()
    for g, report in _reports(graphs, zero_tol):
        summary.graphs_seen += 1
        value = getattr(report, bound)
        if value is None:
            summary.graphs_skipped += 1
            continue
        slack = report.energy - value
        g6 = _g6(report)
        if abs(slack) <= eps:
            summary.equality_hits.append(
                EqualityHit(g6, bound, slack, is_complete_bipartite(g))
            )
        _note_extreme(summary, bound, g6, slack)
    return summary


def _chunked(graphs: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    buf: list[Graph] = []
    for g in graphs:
        buf.append(g)
        if len(buf) >= size:
            yield buf
            buf = []
    if buf:
        yield buf


def _run(
    processor: Callable[[list[Graph]], CorpusSummary],
    graphs: Iterable[Graph],
    jobs: int,
) -> CorpusSummary:
    chunks = _chunked(graphs, _CHUNK_SIZE)
    summary = CorpusSummary()
    if jobs <= 1:
        for chunk in chunks:
            summary.merge(processor(chunk))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(processor, chunks):
                summary.merge(part)
    return summary.finalize()


def run_verify(
    graphs: Iterable[Graph],
    tol: float = DEFAULT_TOL,
    zero_tol: float = DEFAULT_ZERO_TOL,
    jobs: int = 1,
) -> CorpusSummary:
    """Check every proven bound and cross-bound invariant on a corpus."""
    return _run(partial(_verify_chunk, tol=tol, zero_tol=zero_tol), graphs, jobs)


def run_conjectures(
    graphs: Iterable[Graph],
    tol: float = DEFAULT_TOL,
    zero_tol: float = DEFAULT_ZERO_TOL,
    jobs: int = 1,
) -> CorpusSummary:
    """Check both conjectured bounds on the connected graphs of a corpus.

    Disconnected and edgeless graphs are gated out (counted as skipped):
    the conjectures are stated for connected graphs only.
    """
    return _run(partial(_conjectures_chunk, tol=tol, zero_tol=zero_tol), graphs, jobs)


def run_equality(
    graphs: Iterable[Graph],
    bound: str,
    eps: float = DEFAULT_EQUALITY_EPS,
    zero_tol: float = DEFAULT_ZERO_TOL,
    jobs: int = 1,
) -> CorpusSummary:
    """Find graphs where |E - bound| <= eps for one named lower bound."""
    if bound not in EQUALITY_BOUNDS:
        raise ValueError(
            f"unknown bound {bound!r}; choose one of {', '.join(EQUALITY_BOUNDS)}"
        )
    return _run(partial(_equality_chunk, bound=bound, eps=eps, zero_tol=zero_tol), graphs, jobs)
