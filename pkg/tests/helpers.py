"""Shared test utilities: random generators and independent oracles.

The oracles here deliberately re-derive results with different
algorithms than the package (cofactor determinants, abs-pivot Gaussian
elimination, exhaustive labelling search, GF(2) bit elimination) so that
agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from graphtoric.graph_core import GraphError, TrivalentGraph
from graphtoric.polytope import HPolytope


def random_trivalent_graph(rng: random.Random, n_vertices: int) -> TrivalentGraph:
    """Random connected trivalent multigraph on n_vertices (even >= 2).

    Pairs up 3 stubs per vertex; resamples until the result is connected.
    """
    if n_vertices % 2 or n_vertices < 2:
        raise ValueError("need an even vertex count >= 2")
    while True:
        stubs = [v for v in range(n_vertices) for _ in range(3)]
        rng.shuffle(stubs)
        edges = tuple(
            tuple(sorted((stubs[i], stubs[i + 1]))) for i in range(0, len(stubs), 2)
        )
        try:
            return TrivalentGraph(n_vertices, edges)
        except GraphError:
            continue


def random_hsystem(rng: random.Random, n: int, extra_rows: int = 3) -> HPolytope:
    """The unit cube in dimension n cut by extra random integer rows."""
    inequalities = []
    for i in range(n):
        e = tuple(int(i == k) for k in range(n))
        inequalities.append((e, 1))
        inequalities.append((tuple(-x for x in e), 0))
    for _ in range(extra_rows):
        a = tuple(rng.randint(-2, 2) for _ in range(n))
        inequalities.append((a, rng.randint(-2, 2)))
    return HPolytope.from_inequalities(n, inequalities)


# ---------------------------------------------------------------------------
# Linear algebra oracles
# ---------------------------------------------------------------------------

def cofactor_det(rows) -> Fraction:
    """Determinant by recursive cofactor expansion along the first row."""
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def gauss_rref(rows):
    """Reduced row echelon form with largest-absolute-value pivoting.

    Returns (rref rows, pivot column list).  The pivot rule differs from
    the package's first-nonzero rule on purpose.
    """
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        best = max(range(r, len(a)), key=lambda i: abs(a[i][c]), default=None)
        if best is None or a[best][c] == 0:
            continue
        a[r], a[best] = a[best], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                a[i] = [x - a[i][c] * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def gauss_rank(rows) -> int:
    return len(gauss_rref(rows)[1])


def gauss_solve(rows, rhs):
    """Solve A x = rhs; returns ('unique', x) | ('inconsistent', None) |
    ('underdetermined', None), mirroring the package statuses."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rref, pivots = gauss_rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return "inconsistent", None
    if len(pivots) < ncols:
        return "underdetermined", None
    x = [Fraction(0)] * ncols
    for row, c in zip(rref, pivots):
        x[c] = row[-1]
    return "unique", tuple(x)


def gf2_rank(vectors) -> int:
    """Rank over the two-element field, vectors given as 0/1 iterables."""
    masks = []
    for vec in vectors:
        m = 0
        for j, x in enumerate(vec):
            if x % 2:
                m |= 1 << j
        masks.append(m)
    rank = 0
    for m in masks:
        for b in masks[:rank]:
            m = min(m, m ^ b)
        if m:
            masks[rank] = m
            rank += 1
    return rank


def trinion_parity_vectors(graph: TrivalentGraph):
    """Per graph vertex: the mod-2 edge incidence of its trinion triple
    (so a loop edge contributes 0)."""
    out = []
    for triple in graph.trinion_triples():
        vec = [0] * graph.n_edges
        for e in triple.edges:
            vec[e] ^= 1
        out.append(vec)
    return out


def exhaustive_labellings(graph: TrivalentGraph):
    """All admissible 0/1 edge labellings by brute force over 2^m."""
    corners = {(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
    triples = [t.edges for t in graph.trinion_triples()]
    out = []
    for bits in itertools.product((0, 1), repeat=graph.n_edges):
        if all(tuple(bits[e] for e in t) in corners for t in triples):
            out.append(bits)
    return out
