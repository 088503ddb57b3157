"""Polynomial kernel for the parameterized per-vertex independence problem.

The reduction peels disjoint large independent sets S_0, S_1, ... off the
graph with a pluggable extractor, marks a bounded subset of S_0 (k arbitrary
vertices plus, per residue vertex x, up to k-1 non-neighbors of x), deletes
the unmarked part of S_0, and repeats the whole rule until nothing is
removed or the graph is already small.  "Arbitrary" choices are fixed to
lowest vertex id so kernels are reproducible.

An extractor comes with constants (t, 1/c) such that it returns an
independent set of size at least t * n^c on every graph of its class; each
call is checked against that bound and a violation raises
OracleIntegrityError (a bug detector, never expected on class members).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .graph import Graph, degeneracy_order, induced_subgraph


class OracleIntegrityError(RuntimeError):
    """Extractor returned a smaller set than its class guarantees."""


class CliqueFoundError(ValueError):
    """The graph is not K_r-free; carries one witnessing clique."""

    def __init__(self, r: int, clique: tuple[int, ...]):
        super().__init__(f"graph contains K_{r}: {clique}")
        self.clique = clique


@dataclass(frozen=True, eq=False)
class FriendlyOracle:
    """Independent-set extractor with guarantee |S| >= t * n^(1/inv_c)."""

    name: str
    inv_c: int
    t_for: Callable[[Graph], Fraction]
    extract: Callable[[Graph], tuple[int, ...]]
    precheck: Callable[[Graph], None]


@dataclass(frozen=True)
class KernelTrace:
    rounds: int
    threshold: Fraction
    t: Fraction
    inv_c: int
    layers: tuple[tuple[int, ...], ...]
    residue: tuple[int, ...]
    marked: tuple[int, ...]
    removed: tuple[int, ...]
    marked_per_round: tuple[int, ...]
    removed_per_round: tuple[int, ...]
    kept: tuple[int, ...]
    id_map: dict[int, int]

    def to_json_dict(self) -> dict:
        return {
            "rounds": self.rounds,
            "threshold": str(self.threshold),
            "t": str(self.t),
            "inv_c": self.inv_c,
            "layers": [list(layer) for layer in self.layers],
            "residue": list(self.residue),
            "marked": list(self.marked),
            "removed": list(self.removed),
            "marked_per_round": list(self.marked_per_round),
            "removed_per_round": list(self.removed_per_round),
            "kept": list(self.kept),
            "id_map": {str(k): v for k, v in self.id_map.items()},
        }


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def _greedy_degenerate(g: Graph) -> tuple[int, ...]:
    """Greedy along the min-degree removal order: size >= n/(d+1)."""
    order, _ = degeneracy_order(g)
    chosen_mask = 0
    chosen = []
    for v in order:
        if not g.adj[v] & chosen_mask:
            chosen.append(v)
            chosen_mask |= 1 << v
    return tuple(sorted(chosen))


def oracle_degenerate() -> FriendlyOracle:
    """Class of d-degenerate graphs: t = 1/(d+1) with d taken from the
    kernelization input graph (subgraphs are never denser)."""
    return FriendlyOracle(
        name="degenerate",
        inv_c=1,
        t_for=lambda g: Fraction(1, degeneracy_order(g)[1] + 1),
        extract=_greedy_degenerate,
        precheck=lambda g: None,
    )


def find_clique(g: Graph, r: int) -> tuple[int, ...] | None:
    """Some clique of size r, or None."""
    if r <= 0:
        return ()
    hit: list[tuple[int, ...]] = []

    def rec(chosen: tuple[int, ...], cand: int) -> bool:
        if len(chosen) == r:
            hit.append(chosen)
            return True
        if len(chosen) + cand.bit_count() < r:
            return False
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= ~(1 << v)
            if rec(chosen + (v,), rest & g.adj[v]):
                return True
        return False

    rec((), (1 << g.n) - 1)
    return hit[0] if hit else None


def _ramsey_extract(g: Graph, r: int) -> tuple[int, ...]:
    """Recursive extraction from a K_r-free graph: min-degree descent into
    the non-neighborhood, switching into a high-degree neighborhood (which
    is K_{r-1}-free) when the minimum degree is large."""
    if g.n == 0:
        return ()
    if r == 2:
        return tuple(range(g.n))
    v = min(range(g.n), key=lambda u: (g.degree(u), u))
    d = g.degree(v)
    if d > 0 and d ** (r - 1) >= g.n ** (r - 2):
        sub, idmap = induced_subgraph(g, g.neighbors(v))
        back = {new: old for old, new in idmap.items()}
        return tuple(sorted(back[x] for x in _ramsey_extract(sub, r - 1)))
    keep = [u for u in range(g.n) if u != v and not g.has_edge(u, v)]
    sub, idmap = induced_subgraph(g, keep)
    back = {new: old for old, new in idmap.items()}
    inner = tuple(back[x] for x in _ramsey_extract(sub, r))
    return tuple(sorted(inner + (v,)))


def oracle_krfree(r: int) -> FriendlyOracle:
    """Class of K_r-free graphs: guarantees an independent set of size at
    least n^(1/(r-1)), checked with floor semantics."""
    if r < 3:
        raise ValueError("r must be at least 3")

    def precheck(g: Graph) -> None:
        clique = find_clique(g, r)
        if clique is not None:
            raise CliqueFoundError(r, clique)

    return FriendlyOracle(
        name=f"k{r}free",
        inv_c=r - 1,
        t_for=lambda g: Fraction(1),
        extract=lambda g: _ramsey_extract(g, r),
        precheck=precheck,
    )


# ---------------------------------------------------------------------------
# the reduction rule
# ---------------------------------------------------------------------------

def _check_bound(size: int, n: int, t: Fraction, inv_c: int, oracle: str) -> None:
    # |S| >= floor(t * n^(1/inv_c))  <=>  ((|S|+1)/t)^inv_c > n
    if (Fraction(size + 1, 1) / t) ** inv_c <= n:
        raise OracleIntegrityError(
            f"oracle {oracle} returned {size} vertices on an {n}-vertex graph"
        )


def kernelize(
    g: Graph, k: int, oracle: FriendlyOracle
) -> tuple[Graph, KernelTrace]:
    """Shrink G to an equivalent instance for "every vertex in some size-k
    independent set", assuming G belongs to the oracle's class."""
    if k < 1:
        raise ValueError("k must be >= 1")
    oracle.precheck(g)
    t = oracle.t_for(g)
    inv_c = oracle.inv_c
    threshold = (Fraction(k) / t) ** inv_c

    alive: list[int] = list(range(g.n))
    rounds = 0
    layers: tuple[tuple[int, ...], ...] = ()
    residue: tuple[int, ...] = tuple(alive)
    marked: tuple[int, ...] = ()
    removed: tuple[int, ...] = ()
    marked_counts: list[int] = []
    removed_counts: list[int] = []

    while len(alive) >= threshold:
        rounds += 1
        layer_list: list[tuple[int, ...]] = []
        rest = list(alive)
        residue = ()
        while rest:
            sub, idmap = induced_subgraph(g, rest)
            back = {new: old for old, new in idmap.items()}
            found = oracle.extract(sub)
            _check_bound(len(found), sub.n, t, inv_c, oracle.name)
            layer = tuple(sorted(back[x] for x in found))
            if layer_list and len(layer) < k:
                residue = tuple(rest)
                break
            if len(layer) < k:
                raise OracleIntegrityError(
                    f"first layer smaller than k on {sub.n} vertices"
                )
            layer_list.append(layer)
            layer_set = set(layer)
            rest = [v for v in rest if v not in layer_set]
        layers = tuple(layer_list)

        s0 = layers[0]
        mark = set(s0[:k])
        for x in residue:
            non_neighbors = [u for u in s0 if not g.has_edge(x, u)]
            mark.update(non_neighbors[: k - 1])
        marked = tuple(sorted(mark))
        removed = tuple(v for v in s0 if v not in mark)
        marked_counts.append(len(marked))
        removed_counts.append(len(removed))
        if not removed:
            break
        removed_set = set(removed)
        alive = [v for v in alive if v not in removed_set]

    out, id_map = induced_subgraph(g, alive)
    trace = KernelTrace(
        rounds=rounds,
        threshold=threshold,
        t=t,
        inv_c=inv_c,
        layers=layers,
        residue=residue,
        marked=marked,
        removed=removed,
        marked_per_round=tuple(marked_counts),
        removed_per_round=tuple(removed_counts),
        kept=tuple(alive),
        id_map=id_map,
    )
    return out, trace


def marking_bound(k: int, t: Fraction, inv_c: int) -> Fraction:
    """Most vertices any round may mark: k + (k-1) * (k/t)^(1/c)."""
    return k + (k - 1) * (Fraction(k) / t) ** inv_c
