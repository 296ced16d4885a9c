"""Dynkin diagrams, Cartan matrices, root systems, and weight diagrams.

Supports the classical families A/B/C/D plus G2, F4, and E6.  Cartan data
is exact (integers and Fractions); root coordinates use floats built from a
triangular factorization of the Gram matrix with the long-root length
normalized to sqrt(2).  Vertex identity uses coordinates rounded at 1e-7.

Geometry helpers: slicing a diagram into parallel hyperplane levels,
projecting along a direction (Gram-Schmidt, drop the first coordinate),
and a finite isometry search deciding diagram embeddings.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .linalg import invert_dense

ROUND = 7
TOL = 1e-7


class SingularCartan(ValueError):
    """Malformed diagram: the Cartan matrix is singular."""


class SearchBudgetExceeded(RuntimeError):
    """The embedding search ran out of candidate budget."""


@dataclass(frozen=True)
class DynkinDiagram:
    """Nodes 0..rank-1; edges (i, j, multiplicity, shorter-node or None)."""

    name: str
    rank: int
    edges: tuple

    def neighbors(self, i: int):
        for a, b, m, short in self.edges:
            if i == a:
                yield b, m, short
            elif i == b:
                yield a, m, short


def _chain(name: str, n: int, special=()):
    """Simply-laced chain 0-1-...-(n-1) with overrides from `special`."""
    edges = [(i, i + 1, 1, None) for i in range(n - 1)]
    for e in special:
        edges[e[0]] = e[1]
    return DynkinDiagram(name, n, tuple(edges))


def diagram(name: str) -> DynkinDiagram:
    """Named diagrams: A1..A5, B2..B4, C2..C4, D3/D4, G2, F4, E6."""
    family, n = name[0].upper(), int(name[1:])
    if family == "A":
        return _chain(name, n)
    if family == "B":
        # last node short, double bond at the end
        return _chain(name, n, special=[(n - 2, (n - 2, n - 1, 2, n - 1))])
    if family == "C":
        # first node long, double bond toward the short chain
        return _chain(name, n, special=[(0, (0, 1, 2, 1))])
    if family == "D":
        if n < 3:
            raise ValueError("D needs rank >= 3")
        edges = [(i, i + 1, 1, None) for i in range(n - 2)]
        edges.append((n - 3, n - 1, 1, None))
        return DynkinDiagram(name, n, tuple(edges))
    if family == "G" and n == 2:
        return DynkinDiagram(name, 2, ((0, 1, 3, 1),))
    if family == "F" and n == 4:
        return DynkinDiagram(
            name, 4, ((0, 1, 1, None), (1, 2, 2, 2), (2, 3, 1, None))
        )
    if family == "E" and n == 6:
        # chain 0-1-2-3-4 with node 5 attached to the middle node 2
        edges = [(i, i + 1, 1, None) for i in range(4)] + [(2, 5, 1, None)]
        return DynkinDiagram(name, 6, tuple(edges))
    raise ValueError(f"unsupported diagram {name!r}")


def cartan_matrix(d: DynkinDiagram) -> list:
    """Exact integer Cartan matrix a_ij = 2 (r_i . r_j) / (r_i . r_i)."""
    a = [[2 if i == j else 0 for j in range(d.rank)] for i in range(d.rank)]
    for i, j, m, short in d.edges:
        if m == 1:
            a[i][j] = a[j][i] = -1
        else:
            lng = i if short == j else j
            a[lng][short] = -1
            a[short][lng] = -m
    return a


def inverse_cartan(d: DynkinDiagram) -> list:
    a = [[Fraction(v) for v in row] for row in cartan_matrix(d)]
    inv = invert_dense(a)
    if inv is None:
        raise SingularCartan(d.name)
    return inv


def root_norms(d: DynkinDiagram) -> list:
    """Squared lengths per node, long roots normalized to 2 (exact)."""
    a = cartan_matrix(d)
    norms = [None] * d.rank
    norms[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j, m, short in d.neighbors(i):
            if norms[j] is None:
                # n_j / n_i = a_ij / a_ji
                norms[j] = norms[i] * Fraction(a[i][j], a[j][i])
                queue.append(j)
    top = max(norms)
    return [Fraction(2) * n / top for n in norms]


def gram_matrix(d: DynkinDiagram) -> list:
    """Exact Gram matrix G_ij = r_i . r_j of the simple roots."""
    a = cartan_matrix(d)
    norms = root_norms(d)
    return [
        [norms[i] if i == j else Fraction(a[i][j]) * norms[i] / 2
         for j in range(d.rank)]
        for i in range(d.rank)
    ]


def simple_roots(d: DynkinDiagram) -> list:
    """Float vectors in R^rank whose Gram matrix matches the diagram."""
    g = [[float(v) for v in row] for row in gram_matrix(d)]
    n = d.rank
    low = [[0.0] * n for _ in range(n)]  # lower-triangular factor
    for i in range(n):
        for j in range(i + 1):
            s = g[i][j] - sum(low[i][k] * low[j][k] for k in range(j))
            if i == j:
                if s <= 0:
                    raise SingularCartan(d.name)
                low[i][j] = math.sqrt(s)
            else:
                low[i][j] = s / low[j][j]
    return [tuple(row) for row in low]


def fundamental_weights(d: DynkinDiagram) -> list:
    """Weight vectors w^i = sum_k (A^-1)_ki r^k in simple-root coordinates."""
    inv = inverse_cartan(d)
    return [[inv[k][i] for k in range(d.rank)] for i in range(d.rank)]


# ---------------------------------------------------------------------------
# weight diagrams by the mark algorithm

@dataclass(frozen=True)
class Weight:
    mark: tuple
    coords: tuple


@dataclass
class WeightDiagram:
    diagram: DynkinDiagram
    highest: tuple
    weights: list
    edges: list  # (from_mark, to_mark, simple-root index)


def _mark_coords(d: DynkinDiagram, mark: tuple, roots: list) -> tuple:
    inv = inverse_cartan(d)
    # coefficients on simple roots: c_k = sum_i mark_i * (A^-1)_ki
    cs = [sum(Fraction(mark[i]) * inv[k][i] for i in range(d.rank))
          for k in range(d.rank)]
    dim = len(roots[0])
    return tuple(
        sum(float(cs[k]) * roots[k][t] for k in range(d.rank))
        for t in range(dim)
    )


def weights_from_highest(d: DynkinDiagram, highest) -> WeightDiagram:
    """All weights reached by mark subtraction from the highest mark.

    Lowering along node j subtracts t copies of the j-th Cartan column from
    the mark, for t = 1 .. mark[j].
    """
    a = cartan_matrix(d)
    roots = simple_roots(d)
    highest = tuple(int(x) for x in highest)
    seen = {highest}
    frontier = [highest]
    edges = []
    while frontier:
        nxt = []
        for mark in frontier:
            for j in range(d.rank):
                if mark[j] <= 0:
                    continue
                cur = mark
                for _ in range(mark[j]):
                    new = tuple(cur[k] - a[k][j] for k in range(d.rank))
                    edges.append((cur, new, j))
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
                    cur = new
        frontier = nxt
    weights = [Weight(m, _mark_coords(d, m, roots)) for m in sorted(seen)]
    return WeightDiagram(d, highest, weights, edges)


# ---------------------------------------------------------------------------
# root systems by Weyl closure

def _key(v: tuple) -> tuple:
    return tuple(0.0 if abs(x) < TOL else round(x, ROUND) for x in v)


def reflect(x: tuple, r: tuple) -> tuple:
    c = 2 * sum(a * b for a, b in zip(x, r)) / sum(a * a for a in r)
    return tuple(a - c * b for a, b in zip(x, r))


def root_system(d: DynkinDiagram) -> list:
    """Nonzero roots: closure of the simple roots under Weyl reflections."""
    simple = simple_roots(d)
    roots = {_key(r): r for r in simple}
    changed = True
    while changed:
        changed = False
        for x in list(roots.values()):
            for r in simple:
                y = reflect(x, r)
                k = _key(y)
                if k not in roots:
                    roots[k] = y
                    changed = True
    return list(roots.values())


# ---------------------------------------------------------------------------
# slicing, projection, embedding

@dataclass
class Slice:
    level: float
    vertices: list


def slice_diagram(points: list, normal: tuple, roots: Optional[list] = None):
    """Bucket points by inner product with the (normalized) normal.

    Returns (slices sorted by level, struts).  Struts are pairs of points in
    different levels whose difference is a root (only when roots given).
    """
    nn = math.sqrt(sum(x * x for x in normal))
    unit = tuple(x / nn for x in normal)
    buckets: dict = {}
    for p in points:
        lvl = round(sum(a * b for a, b in zip(p, unit)), ROUND)
        lvl = 0.0 if abs(lvl) < TOL else lvl
        buckets.setdefault(lvl, []).append(p)
    slices = [Slice(lvl, pts) for lvl, pts in sorted(buckets.items())]
    struts = []
    if roots is not None:
        rkeys = {_key(r) for r in roots}
        for s1, s2 in itertools.combinations(slices, 2):
            for p in s1.vertices:
                for q in s2.vertices:
                    if _key(tuple(a - b for a, b in zip(p, q))) in rkeys:
                        struts.append((p, q))
    return slices, struts


def middle_slice(points: list, normal: tuple) -> list:
    slices, _ = slice_diagram(points, normal)
    for s in slices:
        if s.level == 0.0:
            return s.vertices
    return []


def orthogonal_direction(vectors: list) -> tuple:
    """A float direction orthogonal to the given (independent) vectors."""
    dim = len(vectors[0])
    basis = []
    for v in list(vectors) + [tuple(1.0 if i == k else 0.0 for i in range(dim))
                              for k in range(dim)]:
        w = list(v)
        for b in basis:
            c = sum(a * x for a, x in zip(w, b))
            w = [a - c * x for a, x in zip(w, b)]
        nn = math.sqrt(sum(a * a for a in w))
        if nn > 1e-9:
            basis.append(tuple(a / nn for a in w))
        if len(basis) == dim:
            break
    if len(basis) <= len(vectors):
        raise ValueError("no orthogonal direction: vectors span the space")
    return basis[len(vectors)]


def project(points: list, direction: tuple, perturb: bool = False) -> list:
    """Project along `direction`: orthonormalize with it first, drop coord 1.

    With perturb=True the direction is first nudged by 0.015 along each
    coordinate axis (the degenerate-span escape used for display).
    """
    p = tuple(direction)
    if perturb:
        p = tuple(x + 0.015 for x in p)
    dim = len(p)
    basis = []
    for v in [p] + [tuple(1.0 if i == k else 0.0 for i in range(dim))
                    for k in range(dim)]:
        w = list(v)
        for b in basis:
            c = sum(a * x for a, x in zip(w, b))
            w = [a - c * x for a, x in zip(w, b)]
        nn = math.sqrt(sum(a * a for a in w))
        if nn > 1e-9:
            basis.append(tuple(a / nn for a in w))
        if len(basis) == dim:
            break
    return [tuple(sum(a * x for a, x in zip(pt, b)) for b in basis[1:])
            for pt in points]


def _norm2(v: tuple) -> float:
    return sum(x * x for x in v)


def embed_check(points1: list, points2: list, budget: int = 200000) -> bool:
    """Is there a scaled isometry taking diagram 1 into diagram 2?

    The map must send every vertex of diagram 1 onto a vertex of diagram 2
    and must send the maximal-norm shell of diagram 1 into the
    maximal-norm shell of diagram 2 (the highest-weight rule).  Search:
    pick a spanning tuple of diagram-1 vertices and try Gram-compatible
    image tuples in diagram 2.
    """
    if not points1:
        return True
    dim = len(points1[0])
    # a linearly independent spanning subset of points1
    span: list = []
    basis: list = []
    for v in points1:
        w = list(v)
        for b in basis:
            c = sum(a * x for a, x in zip(w, b))
            w = [a - c * x for a, x in zip(w, b)]
        nn = math.sqrt(sum(a * a for a in w))
        if nn > 1e-6:
            basis.append(tuple(a / nn for a in w))
            span.append(v)
    k = len(span)
    max1 = max(_norm2(p) for p in points1)
    max2 = max(_norm2(p) for p in points2)
    shell1 = {_key(p) for p in points1 if abs(_norm2(p) - max1) < 1e-6}
    keys2 = {_key(p) for p in points2}
    shell2 = {_key(p) for p in points2 if abs(_norm2(p) - max2) < 1e-6}
    gram1 = [[sum(a * b for a, b in zip(u, v)) for v in span] for u in span]

    tried = 0

    def compatible(partial: list, scale2: float) -> bool:
        n = len(partial) - 1
        for t in range(len(partial)):
            want = gram1[n][t] * scale2
            got = sum(a * b for a, b in zip(partial[n], partial[t]))
            if abs(got - want) > 1e-6 * max(1.0, abs(want)):
                return False
        return True

    def solve_map(images: list, scale2: float) -> Optional[list]:
        # linear map T with T(span[i]) = images[i]; build via the
        # orthonormal basis of span ("basis" above extends span exactly)
        # express each span vector in `basis`, invert the triangular system
        coords = [[sum(a * x for a, x in zip(v, b)) for b in basis]
                  for v in span]
        # solve for T(basis[j]) column by column (coords is lower-triangular)
        timg = []
        for i in range(k):
            rhs = list(images[i])
            for j in range(i):
                rhs = [r - coords[i][j] * t for r, t in zip(rhs, timg[j])]
            timg.append(tuple(r / coords[i][i] for r in rhs))
        return timg

    def apply_map(timg: list, v: tuple) -> tuple:
        cs = [sum(a * x for a, x in zip(v, b)) for b in basis]
        out = [0.0] * len(points2[0])
        for c, t in zip(cs, timg):
            out = [o + c * x for o, x in zip(out, t)]
        return tuple(out)

    # candidate scale^2 values from matching the first spanning vector
    n1 = _norm2(span[0])
    scales = sorted({round(_norm2(q) / n1, ROUND) for q in points2})

    for scale2 in scales:
        stack = [[]]
        while stack:
            partial = stack.pop()
            if len(partial) == k:
                timg = solve_map(partial, scale2)
                if timg is None:
                    continue
                images = [apply_map(timg, p) for p in points1]
                if all(_key(q) in keys2 for q in images) and all(
                    _key(apply_map(timg, p)) in shell2
                    for p in points1 if _key(p) in shell1
                ):
                    return True
                continue
            for q in points2:
                tried += 1
                if tried > budget:
                    raise SearchBudgetExceeded(str(budget))
                cand = partial + [q]
                if compatible(cand, scale2):
                    stack.append(cand)
    return False
