"""Shelling orders of pure complexes and their homotopy consequences.

An ordering F_1, ..., F_m of the maximal d-simplices is a shelling when
for every j >= 2 the intersection of F_j with the union of its
predecessors is a pure nonempty complex of dimension d-1.  Because all
the F_i are full simplices, that intersection is the union of the full
simplices on the vertex sets V(F_i) & V(F_j), i < j, so only those
vertex intersections need inspecting.  A shellable complex is homotopy
equivalent to a wedge with one d-sphere per spanning simplex (a simplex
whose entire boundary lies in its predecessors).
"""

from __future__ import annotations

from dataclasses import dataclass


class SearchLimitExceeded(RuntimeError):
    """Raised when find_shelling would exceed its size limit.

    Distinct from a negative answer: exceeding the limit is inconclusive,
    not a certificate of non-shellability.
    """


@dataclass(frozen=True)
class ShellingReport:
    order: tuple
    valid: bool
    spanning: tuple      # spanning simplices, in order of appearance
    sphere_dims: tuple   # one entry d per spanning simplex; empty = contractible

    def describe(self):
        if not self.valid:
            return "not a shelling"
        if not self.sphere_dims:
            return "contractible"
        d = self.sphere_dims[0]
        return f"wedge of {len(self.sphere_dims)} sphere(s) of dimension {d}"


def _prefix_intersections(prefix_sets, current):
    """Maximal nonempty vertex intersections of current with the prefix."""
    raw = {frozenset(p & current) for p in prefix_sets}
    raw.discard(frozenset())
    return [a for a in raw if not any(a < b for b in raw)]


def verify_shelling(k, order):
    """Check a proposed shelling order of the maximal simplices of k.

    The complex must be pure and order must be a permutation of its
    maximal simplices; both violations raise ValueError.  Returns a
    ShellingReport with validity, the spanning simplices, and the wedge
    description they imply.
    """
    if not k.is_pure():
        raise ValueError("shelling is defined for pure complexes only")
    order = tuple(tuple(sorted(set(s))) for s in order)
    if sorted(order) != list(k.maximal_simplices):
        raise ValueError("order is not a permutation of the maximal simplices")
    d = k.dim()
    spanning = []
    prefix_sets = []
    valid = True
    for j, cur in enumerate(order):
        cur_set = set(cur)
        if j > 0:
            pieces = _prefix_intersections(prefix_sets, cur_set)
            if not pieces or any(len(a) != d for a in pieces):
                valid = False
                break
            # Spanning: all d+1 facets of cur lie in earlier simplices.
            # Each valid piece has size d, hence is a facet of cur, so all
            # facets are covered exactly when there are d+1 pieces.
            if len(pieces) == len(cur):
                spanning.append(cur)
        prefix_sets.append(cur_set)
    if not valid:
        return ShellingReport(order=order, valid=False, spanning=(), sphere_dims=())
    return ShellingReport(
        order=order,
        valid=True,
        spanning=tuple(spanning),
        sphere_dims=tuple(d for _ in spanning),
    )


def find_shelling(k, limit=64):
    """Search for a shelling order; None certifies there is none.

    Exhaustive backtracking over orderings, so the answer None is a proof
    of non-shellability.  Complexes with more than limit maximal simplices
    raise SearchLimitExceeded instead of attempting the search.  Connected
    1-dimensional complexes use a direct greedy construction.
    """
    if not k.is_pure():
        raise ValueError("shelling is defined for pure complexes only")
    maximal = list(k.maximal_simplices)
    if len(maximal) > limit:
        raise SearchLimitExceeded(
            f"{len(maximal)} maximal simplices exceed the search limit {limit}"
        )
    if len(maximal) <= 1:
        return list(maximal)
    d = k.dim()

    if d == 1:
        # Any edge order that grows a connected subgraph is a shelling.
        remaining = set(maximal)
        first = maximal[0]
        order = [first]
        seen = set(first)
        remaining.remove(first)
        while remaining:
            nxt = min((e for e in remaining if seen & set(e)), default=None)
            if nxt is None:
                return None  # disconnected, hence not shellable
            order.append(nxt)
            seen |= set(nxt)
            remaining.remove(nxt)
        return order

    sets = [set(m) for m in maximal]
    order_idx = []
    used = [False] * len(maximal)

    def ok_next(i):
        if not order_idx:
            return True
        pieces = _prefix_intersections([sets[j] for j in order_idx], sets[i])
        return bool(pieces) and all(len(a) == d for a in pieces)

    def extend():
        if len(order_idx) == len(maximal):
            return True
        for i in range(len(maximal)):
            if not used[i] and ok_next(i):
                used[i] = True
                order_idx.append(i)
                if extend():
                    return True
                order_idx.pop()
                used[i] = False
        return False

    if extend():
        return [maximal[i] for i in order_idx]
    return None


def wedge_shelling_orders(n, s, t):
    """Canonical per-component shelling orders for the doubled-sphere cores.

    For the two parameter families that admit a free-triangle collapse
    schedule (t == 3s with n == 12s, and 5s == 3t with n == 4s) the
    collapsed core splits into components of twelve triangles each, and
    each component carries a closed-form shelling with exactly two
    spanning triangles, certifying the wedge of two 2-spheres.  Returns a
    list of (order, spanning) pairs, one per component; raises ValueError
    for parameters outside both families.
    """

    def tri(base, k):
        return tuple(sorted((a + k) % n for a in base))

    if t == 3 * s and n == 12 * s:
        step = 2 * s
        t1 = (s, t, n - s)
        t2 = (t, n - t, n - s)
        swap_at = 3
        span_kinds = ((4, t2), (5, t2))
    elif 5 * s == 3 * t and n == 4 * s:
        step = 2 * (s // 3)
        t1 = (s, n - s, n - t)
        t2 = (t, n - s, n - t)
        swap_at = None
        span_kinds = ((5, t1), (5, t2))
    else:
        raise ValueError(f"no canonical shelling order for (n, s, t) = ({n}, {s}, {t})")

    out = []
    for c in range(step):
        ks = [(c + step * l) % n for l in range(6)]
        order = []
        for pos, k in enumerate(ks):
            first, second = tri(t1, k), tri(t2, k)
            if pos == swap_at:
                first, second = second, first
            order.append(first)
            order.append(second)
        spanning = [tri(base, ks[pos]) for pos, base in span_kinds]
        out.append((order, spanning))
    return out
