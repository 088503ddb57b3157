"""Realize orthogonally-embedded low-degree planar graphs as unit disk graphs.

The embedding (integer grid coordinates, axis-parallel edge polylines) is
scaled up and every edge chain is subdivided so that consecutive disk
centers sit at distance at most 2 while everything else stays farther
apart.  Each edge receives an even number of internal vertices, so the
output is an even subdivision of the input and shares its 1-extendability.

Disk radius is 1 everywhere; tangency (center distance exactly 2) counts
as intersecting.  All coordinates are exact rationals, so the realized
intersection graph is computed without epsilon ambiguity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .transforms import TransformCertificate

# grid scale factor: makes every scaled segment at least 8 long, which
# leaves room for one spacing-4/3 squeeze window per edge (parity fix)
# that never touches a bend or an original vertex
_SCALE = 8

Point = tuple[int, int]


class EmbeddingError(ValueError):
    """The supplied drawing is not a valid orthogonal embedding."""


@dataclass(frozen=True)
class OrthogonalEmbedding:
    coords: dict[int, Point]
    polylines: dict[tuple[int, int], tuple[Point, ...]]  # bends only, u -> v


@dataclass(frozen=True)
class DiskLayout:
    points: dict[int, tuple[Fraction, Fraction]]

    @property
    def n(self) -> int:
        return len(self.points)


def parse_embedding(text: str) -> OrthogonalEmbedding:
    data = json.loads(text)
    coords: dict[int, Point] = {}
    for row in data["vertices"]:
        v = int(row["id"])
        if v in coords:
            raise EmbeddingError(f"vertex {v} listed twice")
        coords[v] = (int(row["x"]), int(row["y"]))
    polylines: dict[tuple[int, int], tuple[Point, ...]] = {}
    for row in data["edges"]:
        u, v = int(row["u"]), int(row["v"])
        key = (min(u, v), max(u, v))
        if key in polylines:
            raise EmbeddingError(f"edge {key} listed twice")
        bends = tuple((int(x), int(y)) for x, y in row.get("bends", ()))
        if u > v:
            bends = tuple(reversed(bends))
        polylines[key] = bends
    return OrthogonalEmbedding(coords, polylines)


def serialize_embedding(emb: OrthogonalEmbedding) -> str:
    return json.dumps(
        {
            "vertices": [
                {"id": v, "x": x, "y": y} for v, (x, y) in sorted(emb.coords.items())
            ],
            "edges": [
                {"u": u, "v": v, "bends": [list(p) for p in bends]}
                for (u, v), bends in sorted(emb.polylines.items())
            ],
        },
        sort_keys=True,
    )


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def serialize_layout(layout: DiskLayout) -> str:
    return json.dumps(
        {
            "radius": "1",
            "points": [
                {"id": v, "x": _frac_str(x), "y": _frac_str(y)}
                for v, (x, y) in sorted(layout.points.items())
            ],
        },
        sort_keys=True,
    )


def parse_layout(text: str) -> DiskLayout:
    data = json.loads(text)
    points = {
        int(row["id"]): (Fraction(row["x"]), Fraction(row["y"]))
        for row in data["points"]
    }
    if sorted(points) != list(range(len(points))):
        raise ValueError("layout ids must be dense 0..n-1")
    return DiskLayout(points)


def _lattice_points(a: Point, b: Point) -> list[Point]:
    if a[0] == b[0]:
        step = 1 if b[1] > a[1] else -1
        return [(a[0], y) for y in range(a[1], b[1] + step, step)]
    step = 1 if b[0] > a[0] else -1
    return [(x, a[1]) for x in range(a[0], b[0] + step, step)]


def _full_polyline(emb: OrthogonalEmbedding, u: int, v: int) -> list[Point]:
    return [emb.coords[u], *emb.polylines[(u, v)], emb.coords[v]]


def validate_embedding(g: Graph, emb: OrthogonalEmbedding) -> None:
    """Exact validation on the integer grid.

    Checks: coordinates present and distinct, polylines axis-parallel with
    no zero-length segments, one polyline per edge, self- and cross-
    intersections absent (shared graph vertices excepted), no polyline
    passing through a vertex point, degree at most 4.
    """
    if set(emb.coords) != set(range(g.n)):
        raise EmbeddingError("vertex coordinate set does not match the graph")
    if len(set(emb.coords.values())) != g.n:
        raise EmbeddingError("two vertices share a coordinate")
    if set(emb.polylines) != set(g.edges()):
        raise EmbeddingError("edge polylines do not match the edge set")
    for v in range(g.n):
        if g.degree(v) > 4:
            raise EmbeddingError(f"vertex {v} has degree {g.degree(v)} > 4")
    vertex_points = {p: v for v, p in emb.coords.items()}
    # point -> edge -> whether the point is a chain terminal for that edge
    usage: dict[Point, dict[tuple[int, int], bool]] = {}
    for (u, v) in g.edges():
        pts = _full_polyline(emb, u, v)
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise EmbeddingError(f"edge ({u},{v}) has a zero-length segment")
            if a[0] != b[0] and a[1] != b[1]:
                raise EmbeddingError(f"edge ({u},{v}) has a non-axis-parallel segment")
        covered: list[Point] = []
        for a, b in zip(pts, pts[1:]):
            seg = _lattice_points(a, b)
            covered.extend(seg if not covered else seg[1:])
        if len(covered) != len(set(covered)):
            raise EmbeddingError(f"edge ({u},{v}) intersects itself")
        for i, p in enumerate(covered):
            terminal = i == 0 or i == len(covered) - 1
            if not terminal and p in vertex_points:
                raise EmbeddingError(
                    f"edge ({u},{v}) passes through vertex {vertex_points[p]}"
                )
            usage.setdefault(p, {})[(u, v)] = terminal
    for p, edges in usage.items():
        if len(edges) == 1:
            continue
        if p not in vertex_points:
            raise EmbeddingError(f"edges {sorted(edges)} cross at {p}")
        if not all(edges.values()):
            raise EmbeddingError(f"edges {sorted(edges)} overlap at vertex point {p}")


def _chain_offsets(length: int, squeeze: bool) -> list[Fraction]:
    """Interior offsets along a scaled segment: spacing 2, with one middle
    window re-spaced to 4/3 when squeeze is requested."""
    gaps = length // 2
    offsets = [Fraction(2 * i) for i in range(1, gaps)]
    if squeeze:
        gsel = gaps // 2 - 1
        mid = Fraction(2 * gsel)
        replaced = [mid + Fraction(4, 3), mid + Fraction(8, 3)]
        offsets = [o for o in offsets if o != mid + 2]
        offsets.extend(replaced)
        offsets.sort()
    return offsets


def to_unit_disk(
    g: Graph, emb: OrthogonalEmbedding
) -> tuple[Graph, DiskLayout, TransformCertificate]:
    """Subdivide each drawn edge into a chain of unit disks.

    Every edge receives an even number of internal vertices (turns count),
    so the result is an even subdivision of the input graph realized
    exactly as a unit disk intersection graph.
    """
    validate_embedding(g, emb)
    points: dict[int, tuple[Fraction, Fraction]] = {}
    for v, (x, y) in emb.coords.items():
        points[v] = (Fraction(_SCALE * x), Fraction(_SCALE * y))
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {
        v: g.labels[v] for v in range(g.n) if g.labels[v] is not None
    }
    edge_map: dict[tuple[int, int], tuple[int, ...]] = {}
    nxt = g.n
    for (u, v) in g.edges():
        pts = [(Fraction(_SCALE * x), Fraction(_SCALE * y)) for x, y in _full_polyline(emb, u, v)]
        seg_lengths = [
            int(abs(b[0] - a[0]) + abs(b[1] - a[1])) for a, b in zip(pts, pts[1:])
        ]
        longest = seg_lengths.index(max(seg_lengths))
        chain: list[tuple[Fraction, Fraction]] = []
        for i, (a, b) in enumerate(zip(pts, pts[1:])):
            dx = (b[0] > a[0]) - (b[0] < a[0])
            dy = (b[1] > a[1]) - (b[1] < a[1])
            for off in _chain_offsets(seg_lengths[i], squeeze=(i == longest)):
                chain.append((a[0] + dx * off, a[1] + dy * off))
            if i < len(seg_lengths) - 1:
                chain.append(b)
        assert len(chain) % 2 == 0
        ids = list(range(nxt, nxt + len(chain)))
        nxt += len(chain)
        for k, (w, pos) in enumerate(zip(ids, chain), start=1):
            points[w] = pos
            labels[w] = f"disk:{u}-{v}:{k}"
        path = [u, *ids, v]
        edges.extend(zip(path, path[1:]))
        edge_map[(u, v)] = tuple(ids)
    out = Graph.from_edges(nxt, edges, labels)
    cert = TransformCertificate(
        "to_unit_disk",
        {"scale": _SCALE},
        {u: (u,) for u in range(g.n)},
        edge_map,
    )
    return out, DiskLayout(points), cert


def intersection_graph(layout: DiskLayout) -> Graph:
    """Edge iff squared center distance <= 4 (radius-1 disks, tangency in)."""
    ids = sorted(layout.points)
    edges = []
    for i, u in enumerate(ids):
        ux, uy = layout.points[u]
        for v in ids[i + 1:]:
            vx, vy = layout.points[v]
            if (ux - vx) ** 2 + (uy - vy) ** 2 <= 4:
                edges.append((u, v))
    return Graph.from_edges(len(ids), edges)
