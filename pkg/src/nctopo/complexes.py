"""Abstract simplicial complexes presented by their maximal simplices.

A complex stores an antichain of sorted vertex tuples.  Construction
normalizes any generating family: faces of larger simplices and duplicates
are dropped, so two presentations of the same complex compare equal.
"""

from __future__ import annotations

from itertools import combinations


class SimplicialComplex:
    """Immutable simplicial complex given by maximal simplices.

    Face enumeration per dimension is cached lazily; the cache write is a
    single dict assignment, so concurrent readers are safe under the GIL.
    """

    __slots__ = ("_maximal", "_faces")

    def __init__(self, simplices):
        cleaned = sorted(
            {tuple(sorted(set(s))) for s in simplices if len(s) > 0},
            key=lambda s: (-len(s), s),
        )
        maximal = []
        for s in cleaned:  # longest first, so one containment sweep suffices
            ss = set(s)
            if not any(ss <= m for m in maximal):
                maximal.append(ss)
        self._maximal = tuple(sorted(tuple(sorted(m)) for m in maximal))
        self._faces = {}

    @property
    def maximal_simplices(self):
        return self._maximal

    def vertices(self):
        vs = set()
        for m in self._maximal:
            vs.update(m)
        return tuple(sorted(vs))

    def dim(self):
        """Dimension; -1 for the empty complex."""
        return max((len(m) for m in self._maximal), default=0) - 1

    def is_pure(self):
        dims = {len(m) for m in self._maximal}
        return len(dims) <= 1

    def faces(self, d):
        """Sorted tuple of all d-dimensional faces."""
        if d < 0:
            return ()
        cached = self._faces.get(d)
        if cached is None:
            out = set()
            for m in self._maximal:
                if len(m) >= d + 1:
                    out.update(combinations(m, d + 1))
            cached = tuple(sorted(out))
            self._faces[d] = cached
        return cached

    def all_faces(self):
        out = []
        for d in range(self.dim() + 1):
            out.extend(self.faces(d))
        return out

    def has_face(self, simplex):
        s = tuple(sorted(set(simplex)))
        if not s:
            return False
        return any(set(s) <= set(m) for m in self._maximal)

    def f_vector(self):
        return tuple(len(self.faces(d)) for d in range(self.dim() + 1))

    def euler_characteristic(self):
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    def components(self):
        """Connected components as complexes, ordered by minimum vertex."""
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in self._maximal:
            for v in m:
                parent.setdefault(v, v)
            root = find(m[0])
            for v in m[1:]:
                parent[find(v)] = root

        groups = {}
        for m in self._maximal:
            groups.setdefault(find(m[0]), []).append(m)
        keyed = sorted(groups.values(), key=lambda ms: min(min(m) for m in ms))
        return [SimplicialComplex(ms) for ms in keyed]

    def to_json_obj(self):
        """Canonical dict form: sorted vertices, sorted maximal simplices."""
        return {
            "vertices": list(self.vertices()),
            "maximal_simplices": [list(m) for m in self._maximal],
        }

    @classmethod
    def from_json_obj(cls, obj):
        k = cls(obj["maximal_simplices"])
        declared = set(obj.get("vertices", ()))
        if declared and declared != set(k.vertices()):
            raise ValueError("vertex list does not match the maximal simplices")
        return k

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._maximal == other._maximal

    def __hash__(self):
        return hash(self._maximal)

    def __repr__(self):
        return f"SimplicialComplex({list(self._maximal)!r})"


def boundary_of_simplex(vertices):
    """Boundary complex of the full simplex on the given vertices."""
    vs = tuple(sorted(set(vertices)))
    if len(vs) < 2:
        raise ValueError("boundary needs a simplex of dimension at least 1")
    return SimplicialComplex(combinations(vs, len(vs) - 1))


def neighborhood_complex(g):
    """Complex whose maximal simplices are the maximal open neighborhoods.

    Vertices with empty neighborhoods contribute nothing.  For a graph with
    no edges the result is the empty complex.
    """
    return SimplicialComplex(ns for v in g.vertices() if (ns := g.neighborhood(v)))
