"""Exact polytopes: H-representation, vertex enumeration, incidence.

The central construction takes a trivalent graph and intersects, for every
vertex of the graph, the pullback of the pair-of-pants tetrahedron

    x1 + x2 + x3 <= 2,   x1 + x2 - x3 >= 0,
    x1 - x2 + x3 >= 0,  -x1 + x2 + x3 >= 0

under the projection onto that vertex's triple of edge coordinates.  The
result is a full-dimensional polytope inside the unit cube [0,1]^(3g-3).

All rows are stored as integer inequalities a.x <= b, gcd-reduced and
deduplicated; a repeated index in a trinion triple (a loop) folds into a
coefficient of 2.  Vertex enumeration is exact: the reference algorithm is
the double description method on the homogenising cone, cross-checked by a
brute-force tight-subset oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from .exactmath import (
    EchelonBasis,
    QMatrix,
    UNIQUE,
    inverse,
    primitive_direction,
    solve,
)
from .graph_core import TrivalentGraph

# Provenance kinds for rows built from a trinion triple: "sum" is the
# x1+x2+x3 <= 2 face, "tri{k}" the triangle inequality with the k-th
# triple position negated.
KIND_SUM = "sum"
KIND_TRI = ("tri0", "tri1", "tri2")

# The corners of the pair-of-pants tetrahedron, used to recognise 0/1
# edge labellings that give cube vertices of the big polytope.
_TET_CORNERS = {(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}


class NotFullDimensional(Exception):
    """Operation requires a polytope of full affine dimension."""


class UnboundedPolytope(Exception):
    """Vertex enumeration hit an unbounded inequality system."""


class RowTag(NamedTuple):
    """Where an inequality row came from: graph vertex and row kind."""

    vertex: int
    kind: str


class Row(NamedTuple):
    """One inequality a.x <= b with integer data and provenance tags."""

    a: tuple[int, ...]
    b: int
    tags: tuple[RowTag, ...]


@dataclass(frozen=True)
class HPolytope:
    """An inequality system A.x <= b with normalized integer rows."""

    dim: int
    rows: tuple[Row, ...]

    @classmethod
    def from_inequalities(cls, dim: int, inequalities: Iterable) -> "HPolytope":
        """Build from (a, b) or (a, b, tags) items; rows may be rational.

        Each row is scaled to integers, gcd-reduced, and exact duplicates
        are merged (tags concatenated).  Trivial rows 0.x <= b with b >= 0
        are dropped.
        """
        merged: dict[tuple[tuple[int, ...], int], list[RowTag]] = {}
        for item in inequalities:
            a, b = item[0], item[1]
            tags = tuple(item[2]) if len(item) > 2 else ()
            norm = _normalize_row(a, b)
            if norm is None:
                continue
            merged.setdefault(norm, []).extend(tags)
        rows = tuple(Row(a, b, tuple(tags)) for (a, b), tags in merged.items())
        return cls(dim, rows)


def _normalize_row(a: Sequence, b) -> tuple[tuple[int, ...], int] | None:
    coeffs = [Fraction(x) for x in a]
    rhs = Fraction(b)
    mult = lcm(*(x.denominator for x in coeffs + [rhs]))
    ints = [int(x * mult) for x in coeffs]
    rb = int(rhs * mult)
    g = gcd(*ints, rb)
    if g == 0:
        return None  # 0 <= 0
    if all(x == 0 for x in ints):
        return None if rb > 0 else (tuple(ints), -1)  # keep only 0 <= -1 markers
    return tuple(x // g for x in ints), rb // g


def build_hrep(graph: TrivalentGraph) -> HPolytope:
    """H-representation of the moment polytope of a trivalent graph.

    Emits the four tetrahedron rows per trinion triple, with a loop's
    repeated index summed into a single coefficient.
    """
    n = graph.n_edges
    inequalities = []
    for triple in graph.trinion_triples():
        coeffs = [0] * n
        for index in triple.edges:
            coeffs[index] += 1
        inequalities.append((tuple(coeffs), 2, (RowTag(triple.vertex, KIND_SUM),)))
        for pos in range(3):
            row = [0] * n
            for q, index in enumerate(triple.edges):
                row[index] += -1 if q == pos else 1
            # row.x >= 0, stored as (-row).x <= 0
            inequalities.append(
                (tuple(-x for x in row), 0, (RowTag(triple.vertex, KIND_TRI[pos]),))
            )
    return HPolytope.from_inequalities(n, inequalities)


def contains(h: HPolytope, x: Sequence) -> bool:
    """Exact membership test."""
    point = [Fraction(v) for v in x]
    if len(point) != h.dim:
        raise ValueError(f"point has length {len(point)}, expected {h.dim}")
    return all(
        sum(c * v for c, v in zip(row.a, point)) <= row.b for row in h.rows
    )


@dataclass(frozen=True)
class VPolytope:
    """Exact vertex set with incidence, sorted lexicographically.

    ``incidence[i]`` lists the indices of all H-rows tight at vertex i;
    ``dim`` is the affine dimension of the vertex set (-1 when empty).
    """

    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    incidence: tuple[tuple[int, ...], ...]


def dimension(v: VPolytope) -> int:
    return v.dim


def _vpolytope_from_points(h: HPolytope, points: Iterable[Sequence[Fraction]]) -> VPolytope:
    verts = sorted({tuple(Fraction(x) for x in p) for p in points})
    incidence = []
    for p in verts:
        tight = tuple(
            i
            for i, row in enumerate(h.rows)
            if sum(c * v for c, v in zip(row.a, p)) == row.b
        )
        incidence.append(tight)
    if not verts:
        dim = -1
    else:
        basis = EchelonBasis()
        origin = verts[0]
        for p in verts[1:]:
            basis.add([x - y for x, y in zip(p, origin)])
            if basis.rank == h.dim:
                break
        dim = basis.rank
    return VPolytope(dim, tuple(verts), tuple(incidence))


# ---------------------------------------------------------------------------
# Double description vertex enumeration
# ---------------------------------------------------------------------------

def enumerate_vertices(h: HPolytope) -> VPolytope:
    """Exact vertex enumeration by the double description method.

    The system is homogenised to the cone {(t, x) : t >= 0, b*t - a.x >= 0}
    in dimension n+1 and the extreme rays are grown one inequality at a
    time from an initial simplicial cone, in lexicographic row order.
    Rays are primitive integer vectors, so all arithmetic stays in Z.
    Rays with t > 0 are the polytope vertices; a surviving ray with t = 0
    means the polytope is unbounded, which is reported as an error.
    """
    n = h.dim
    hom = {(row.b,) + tuple(-x for x in row.a) for row in h.rows}
    hom.add((1,) + (0,) * n)
    rows = sorted(hom)
    d = n + 1
    m = len(rows)

    basis = EchelonBasis()
    initial = [j for j in range(m) if basis.add(rows[j])]
    if len(initial) < d:
        raise UnboundedPolytope(
            "inequality system is invariant along a direction; it has no vertices"
        )
    binv = inverse(QMatrix([rows[j] for j in initial]))
    rays = [primitive_direction(col) for col in zip(*binv.rows)]
    dots = [[_idot(ray, row) for row in rows] for ray in rays]
    zmasks = [_zero_mask(dot) for dot in dots]
    processed = 0
    for j in initial:
        processed |= 1 << j

    for j in range(m):
        if processed >> j & 1:
            continue
        pos = [r for r in range(len(rays)) if dots[r][j] > 0]
        neg = [r for r in range(len(rays)) if dots[r][j] < 0]
        if neg:
            keep = [r for r in range(len(rays)) if dots[r][j] >= 0]
            new_rays, new_dots = [], []
            for p, q in _adjacent_pairs(pos, neg, zmasks, processed, d, len(rays)):
                alpha, beta = dots[p][j], dots[q][j]
                vec = [alpha * y - beta * x for x, y in zip(rays[p], rays[q])]
                dot = [alpha * y - beta * x for x, y in zip(dots[p], dots[q])]
                g = gcd(*vec)
                new_rays.append(tuple(x // g for x in vec))
                new_dots.append([x // g for x in dot])
            rays = [rays[r] for r in keep] + new_rays
            dots = [dots[r] for r in keep] + new_dots
            zmasks = [_zero_mask(dot) for dot in dots]
        processed |= 1 << j

    vertices = []
    for ray in rays:
        if ray[0] == 0:
            raise UnboundedPolytope(f"recession direction {ray[1:]} found")
        vertices.append(tuple(Fraction(c, ray[0]) for c in ray[1:]))
    return _vpolytope_from_points(h, vertices)


def _idot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _zero_mask(dot: Sequence[int]) -> int:
    mask = 0
    for j, val in enumerate(dot):
        if val == 0:
            mask |= 1 << j
    return mask


def _adjacent_pairs(pos, neg, zmasks, processed, d, count):
    """Yield (p, q) whose rays span a 2-face of the current cone.

    Combinatorial adjacency test for pointed cones: the common zero set
    of p and q (among processed rows) must not be contained in the zero
    set of any third ray.  Pairs with fewer than d-2 common tight rows
    cannot be adjacent and are skipped outright.
    """
    for p in pos:
        zp = zmasks[p] & processed
        for q in neg:
            z = zp & zmasks[q]
            if z.bit_count() < d - 2:
                continue
            if any(
                r != p and r != q and z & ~zmasks[r] == 0 for r in range(count)
            ):
                continue
            yield p, q


def brute_force_vertices(h: HPolytope) -> VPolytope:
    """Independent enumeration oracle: solve every n-subset of tight rows.

    A candidate survives if its tight system has a unique solution that
    satisfies all rows.  Exponential in the row count; intended for
    dimensions up to about 9.
    """
    n = h.dim
    points = []
    rhs = [row.b for row in h.rows]
    for subset in itertools.combinations(range(len(h.rows)), n):
        result = solve(
            QMatrix([h.rows[i].a for i in subset]), [rhs[i] for i in subset]
        )
        if result.status == UNIQUE and contains(h, result.solution):
            points.append(result.solution)
    return _vpolytope_from_points(h, points)


# ---------------------------------------------------------------------------
# Facets and simplicity
# ---------------------------------------------------------------------------

def facet_defining_rows(h: HPolytope, v: VPolytope) -> tuple[int, ...]:
    """Indices of rows whose tight vertex set has affine dimension n-1."""
    if v.dim != h.dim:
        raise NotFullDimensional(f"polytope has dimension {v.dim} in ambient {h.dim}")
    tight_at: dict[int, list[int]] = {i: [] for i in range(len(h.rows))}
    for vi, tight in enumerate(v.incidence):
        for i in tight:
            tight_at[i].append(vi)
    facets = []
    for i, vis in tight_at.items():
        if len(vis) < h.dim:
            continue
        basis = EchelonBasis()
        origin = v.vertices[vis[0]]
        for vi in vis[1:]:
            basis.add([x - y for x, y in zip(v.vertices[vi], origin)])
            if basis.rank == h.dim - 1:
                facets.append(i)
                break
    return tuple(facets)


@dataclass(frozen=True)
class SimplicityVerdict:
    """Whether exactly n facets meet at every vertex; if not, the first
    offending vertex (lexicographic) and its facet count."""

    simple: bool
    witness: tuple[Fraction, ...] | None = None
    witness_facets: int | None = None


def is_simple(
    h: HPolytope, v: VPolytope, facet_rows: tuple[int, ...] | None = None
) -> SimplicityVerdict:
    if facet_rows is None:
        facet_rows = facet_defining_rows(h, v)
    facet_set = set(facet_rows)
    for vertex, tight in zip(v.vertices, v.incidence):
        count = sum(1 for i in tight if i in facet_set)
        if count != h.dim:
            return SimplicityVerdict(False, vertex, count)
    return SimplicityVerdict(True)


# ---------------------------------------------------------------------------
# Cube-vertex labellings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeLabelling:
    """A 0/1 label per edge whose every trinion triple (loops doubled) is
    a corner of the pair-of-pants tetrahedron."""

    labels: tuple[int, ...]

    def point(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in self.labels)


def cube_vertex_labellings(graph: TrivalentGraph) -> list[EdgeLabelling]:
    """All admissible 0/1 edge labellings, in lexicographic label order.

    Backtracks over edges in index order, pruning as soon as all three
    slots of some triple are assigned.  Every labelling read as a 0/1
    point is a vertex of the polytope lying on the unit cube.
    """
    m = graph.n_edges
    triples_by_last: list[list[tuple[int, int, int]]] = [[] for _ in range(m)]
    for triple in graph.trinion_triples():
        triples_by_last[max(triple.edges)].append(triple.edges)
    labels = [0] * m
    out: list[EdgeLabelling] = []

    def extend(i: int) -> None:
        if i == m:
            out.append(EdgeLabelling(tuple(labels)))
            return
        for value in (0, 1):
            labels[i] = value
            if all(
                tuple(labels[e] for e in t) in _TET_CORNERS
                for t in triples_by_last[i]
            ):
                extend(i + 1)

    extend(0)
    return out


# ---------------------------------------------------------------------------
# Exact text export (cdd polyhedra format)
# ---------------------------------------------------------------------------

def format_hrep(h: HPolytope) -> str:
    """cdd-style H-format: each row is  b  -a1 ... -an  (b - a.x >= 0)."""
    lines = ["H-representation", "begin", f"{len(h.rows)} {h.dim + 1} rational"]
    for row in h.rows:
        lines.append(" ".join([_fmt(row.b)] + [_fmt(-x) for x in row.a]))
    lines.extend(["end", ""])
    return "\n".join(lines)


def format_vrep(v: VPolytope) -> str:
    """cdd-style V-format: each vertex is  1  v1 ... vn."""
    width = len(v.vertices[0]) + 1 if v.vertices else 1
    lines = ["V-representation", "begin", f"{len(v.vertices)} {width} rational"]
    for vertex in v.vertices:
        lines.append(" ".join(["1"] + [_fmt(x) for x in vertex]))
    lines.extend(["end", ""])
    return "\n".join(lines)


def _fmt(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
