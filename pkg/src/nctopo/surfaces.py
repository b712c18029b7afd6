"""Recognition of closed surfaces among 2-dimensional complexes.

The route is intrinsic: pseudomanifold check, vertex links, then an
orientation attempt by sign propagation over the triangle adjacency
graph.  Orientability obtained this way is independent of the rank of
H_2, so homology can cross-validate it.  Closed surfaces are classified
by orientability and Euler characteristic alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex


def is_pseudomanifold(k, d=None):
    """Pure d-dimensional and non-branching: every (d-1)-face lies in
    exactly two maximal simplices.  d defaults to dim(k); requires d >= 1.
    """
    if d is None:
        d = k.dim()
    if d < 1 or k.dim() != d or not k.is_pure():
        return False
    counts = {}
    for m in k.maximal_simplices:
        for f in combinations(m, d):
            counts[f] = counts.get(f, 0) + 1
    return all(c == 2 for c in counts.values())


def vertex_link(k, v):
    """Link of vertex v: all faces gamma with gamma + {v} a face, v not in gamma."""
    if v not in k.vertices():
        raise ValueError(f"{v} is not a vertex of the complex")
    gens = []
    for m in k.maximal_simplices:
        if v in m:
            rest = tuple(x for x in m if x != v)
            if rest:
                gens.append(rest)
    return SimplicialComplex(gens)


def _link_is_single_cycle(link):
    if link.dim() != 1 or not link.is_pure():
        return False
    degree = {}
    for e in link.maximal_simplices:
        for x in e:
            degree[x] = degree.get(x, 0) + 1
    if any(c != 2 for c in degree.values()):
        return False
    return len(link.components()) == 1


def is_closed_surface(k):
    """Every vertex link a single cycle; implies a closed 2-manifold."""
    if k.dim() != 2 or not k.is_pure():
        return False
    if not is_pseudomanifold(k, 2):
        return False
    return all(_link_is_single_cycle(vertex_link(k, v)) for v in k.vertices())


def _edge_sign(triangle, edge):
    # Sign of the edge in the boundary of the sorted triangle.
    for i in range(3):
        if triangle[:i] + triangle[i + 1 :] == edge:
            return -1 if i % 2 else 1
    raise ValueError(f"{edge} is not a facet of {triangle}")


def orient(k):
    """Compatible orientation signs for a pure-2 pseudomanifold, or None.

    Returns {triangle: +1 or -1} meaning the triangle is taken with or
    against the orientation induced by its sorted vertex order.  Signs are
    propagated across shared edges; adjacent triangles must induce the
    shared edge with opposite signs.  A propagation conflict means the
    complex is non-orientable, reported as None.
    """
    if not is_pseudomanifold(k, 2):
        raise ValueError("orientation is defined here for pure-2 pseudomanifolds")
    by_edge = {}
    for m in k.maximal_simplices:
        for e in combinations(m, 2):
            by_edge.setdefault(e, []).append(m)
    signs = {}
    for start in k.maximal_simplices:
        if start in signs:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            tri = stack.pop()
            for e in combinations(tri, 2):
                a, b = by_edge[e]
                other = b if a == tri else a
                want = -signs[tri] * _edge_sign(tri, e) * _edge_sign(other, e)
                have = signs.get(other)
                if have is None:
                    signs[other] = want
                    stack.append(other)
                elif have != want:
                    return None
    return signs


@dataclass(frozen=True)
class SurfaceReport:
    pure2: bool
    pseudomanifold: bool
    closed_surface: bool
    connected: bool
    orientable: bool | None   # None when the question does not arise
    euler: int
    classification: str


def classify_surface(k):
    """Surface recognition report; classification uses chi and orientability.

    classification is one of "sphere", "orientable-genus-g",
    "nonorientable-crosscap-c", or "not-a-surface" (the latter also for
    disconnected or lower-dimensional input).
    """
    pure2 = k.dim() == 2 and k.is_pure()
    pm = is_pseudomanifold(k, 2) if pure2 else False
    closed = is_closed_surface(k) if pm else False
    connected = len(k.components()) == 1
    orientable = None
    if pm:
        orientable = orient(k) is not None
    euler = k.euler_characteristic()
    if closed and connected:
        if orientable:
            assert euler % 2 == 0 and euler <= 2
            genus = (2 - euler) // 2
            classification = "sphere" if genus == 0 else f"orientable-genus-{genus}"
        else:
            crosscaps = 2 - euler
            assert crosscaps >= 1
            classification = f"nonorientable-crosscap-{crosscaps}"
    else:
        classification = "not-a-surface"
    return SurfaceReport(
        pure2=pure2,
        pseudomanifold=pm,
        closed_surface=closed,
        connected=connected,
        orientable=orientable,
        euler=euler,
        classification=classification,
    )


def tetrahedron_boundary_pieces(k):
    """All 4-vertex sets whose full tetrahedron boundary lies in k.

    Candidates come from pairs of triangles sharing an edge, so the scan
    is quadratic only in the triangles per edge.  Used to certify garland
    structure: cores made of boundary-of-tetrahedron pieces glued along
    edges, where the piece count is the top Betti number.
    """
    tris = set(k.faces(2))
    by_edge = {}
    for m in tris:
        for e in combinations(m, 2):
            by_edge.setdefault(e, []).append(m)
    pieces = set()
    for e, holders in by_edge.items():
        for a, b in combinations(holders, 2):
            quad = tuple(sorted(set(a) | set(b)))
            if len(quad) != 4:
                continue
            if all(f in tris for f in combinations(quad, 3)):
                pieces.add(quad)
    return sorted(pieces)
