"""Per-vertex maximum-independent-set membership.

A graph is 1-extendable when every vertex lies in some maximum independent
set.  Each vertex query searches only the subgraph induced by the vertex's
non-neighborhood for an independent set of target size, which is exact and
usually far cheaper than re-solving the whole graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import Graph, induced_subgraph, non_neighborhood
from .mis import find_independent_set, max_independent_set


@dataclass(frozen=True)
class VertexVerdict:
    vertex: int
    covered: bool
    witness: tuple[int, ...] | None
    best_size: int | None  # diagnostic for uncovered vertices

    def to_json_dict(self) -> dict:
        out: dict = {"id": self.vertex, "covered": self.covered}
        if self.covered:
            out["witness"] = list(self.witness or ())
        else:
            out["best_size"] = self.best_size
        return out


@dataclass(frozen=True)
class ExtendabilityReport:
    alpha: int
    is_one_extendable: bool
    verdicts: tuple[VertexVerdict, ...]
    complete: bool  # False when the scan stopped at the first uncovered vertex

    def uncovered(self) -> tuple[int, ...]:
        return tuple(v.vertex for v in self.verdicts if not v.covered)

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "one_extendable": self.is_one_extendable,
            "complete": self.complete,
            "vertices": [v.to_json_dict() for v in self.verdicts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _query_vertex(g: Graph, v: int, k: int, budget: int | None, diagnose: bool) -> VertexVerdict:
    sub, idmap = induced_subgraph(g, non_neighborhood(g, v))
    found = find_independent_set(sub, k, budget)
    if found is not None:
        back = {new: old for old, new in idmap.items()}
        wit = sorted(back[x] for x in found)
        if v not in wit:
            wit = sorted(set(wit[:-1]) | {v})
        return VertexVerdict(v, True, tuple(wit), None)
    best = max_independent_set(sub, budget).alpha if diagnose else None
    return VertexVerdict(v, False, None, best)


def is_one_extendable(
    g: Graph,
    budget: int | None = None,
    stop_at_first_uncovered: bool = False,
) -> ExtendabilityReport:
    """Decide 1-extendability, with per-vertex witnesses.

    The default report covers every vertex.  With stop_at_first_uncovered the
    scan ends at the first uncovered vertex (the overall verdict is still
    exact); the report is then marked incomplete.  The budget caps each
    internal solver invocation separately.
    """
    alpha = max_independent_set(g, budget).alpha
    verdicts: list[VertexVerdict] = []
    all_covered = True
    for v in range(g.n):
        verdict = _query_vertex(g, v, alpha, budget, diagnose=True)
        verdicts.append(verdict)
        if not verdict.covered:
            all_covered = False
            if stop_at_first_uncovered:
                break
    complete = len(verdicts) == g.n
    return ExtendabilityReport(alpha, all_covered, tuple(verdicts), complete)


def param_one_extendability(
    g: Graph, k: int, budget: int | None = None
) -> tuple[bool, tuple[VertexVerdict, ...]]:
    """Does every vertex belong to an independent set of size k?"""
    if k < 0:
        raise ValueError("k must be non-negative")
    verdicts = []
    ok = True
    for v in range(g.n):
        if k == 0:
            verdicts.append(VertexVerdict(v, True, (), None))
            continue
        verdict = _query_vertex(g, v, k, budget, diagnose=False)
        verdicts.append(verdict)
        ok = ok and verdict.covered
    return ok, tuple(verdicts)
