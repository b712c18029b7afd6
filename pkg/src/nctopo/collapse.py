"""Elementary collapses and deterministic collapse cores.

An elementary collapse removes the open interval between a free face
sigma and its unique maximal coface tau, that is every face gamma with
sigma <= gamma <= tau.  After the removal the candidates for new maximal
simplices are exactly the sets tau minus one vertex of sigma; a candidate
that is contained in another maximal simplex is absorbed instead.

The circulant strategy first tries the closed-form pair schedules that
exist for two-generator circulant graphs (an edge schedule in two
mirrored forms, plus a free-triangle schedule for two special parameter
families), verifying every pair as it is applied, and then lets the
generic strategy run to a fixed point.  Everything is deterministic.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations

from .complexes import SimplicialComplex


class CollapseError(ValueError):
    """A collapse pair is invalid or a schedule does not apply."""


class CongruenceError(CollapseError):
    """A congruence hypothesis of the edge-pair schedule is violated."""

    def __init__(self, name, n, s, t):
        self.congruence = name
        super().__init__(
            f"hypothesis violated: {name} == 0 (mod {n}) for (n, s, t) = ({n}, {s}, {t})"
        )


def _proper_faces(simplex):
    for r in range(1, len(simplex)):
        yield from combinations(simplex, r)


class _Engine:
    """Mutable maximal-simplex set with coface counts for fast collapsing."""

    def __init__(self, k):
        self.maximal = set(k.maximal_simplices)
        self.cofaces = {}
        for m in self.maximal:
            self._register(m)

    def _register(self, m):
        for f in _proper_faces(m):
            self.cofaces.setdefault(f, set()).add(m)

    def is_free_pair(self, sigma, tau):
        return tau in self.maximal and self.cofaces.get(sigma) == {tau}

    def collapse(self, sigma, tau):
        self.maximal.remove(tau)
        for f in _proper_faces(tau):
            cfs = self.cofaces.get(f)
            if cfs is not None:
                cfs.discard(tau)
                if not cfs:
                    del self.cofaces[f]
        for x in sigma:
            cand = tuple(v for v in tau if v != x)
            # A candidate contained in another maximal simplex is absorbed.
            if cand and cand not in self.cofaces:
                self.maximal.add(cand)
                self._register(cand)

    def find_free_generic(self):
        """Free pair with highest-dimension coface, ties by smallest face."""
        best_key = None
        best = None
        for f, cfs in self.cofaces.items():
            if len(cfs) == 1:
                tau = next(iter(cfs))
                key = (-len(tau), f)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (f, tau)
        return best


class CollapseTrace:
    """Sequence of collapse pairs together with the resulting core."""

    __slots__ = ("pairs", "core", "strategy", "schedule")

    def __init__(self, pairs, core, strategy, schedule=None):
        self.pairs = tuple(pairs)
        self.core = core
        self.strategy = strategy
        self.schedule = schedule

    def replay(self, start):
        """Re-apply the recorded pairs to start; must reproduce the core."""
        return reduce(collapse_step, self.pairs, start)

    def __repr__(self):
        return (
            f"CollapseTrace({len(self.pairs)} pairs, strategy={self.strategy!r}, "
            f"schedule={self.schedule!r})"
        )


def verify_collapsible_pair(k, sigma, tau):
    """True iff sigma is a free face of k whose unique maximal coface is tau.

    Raises CollapseError when sigma or tau is not a face of k at all.
    """
    sigma = tuple(sorted(set(sigma)))
    tau = tuple(sorted(set(tau)))
    if not k.has_face(sigma):
        raise CollapseError(f"{sigma} is not a face of the complex")
    if not k.has_face(tau):
        raise CollapseError(f"{tau} is not a face of the complex")
    if not set(sigma) < set(tau):
        return False
    if tau not in k.maximal_simplices:
        return False
    holders = [m for m in k.maximal_simplices if set(sigma) <= set(m)]
    return holders == [tau]


def collapse_step(k, pair):
    """Single elementary collapse; returns the smaller complex.

    The pair must verify via verify_collapsible_pair, otherwise
    CollapseError is raised.
    """
    sigma, tau = pair
    sigma = tuple(sorted(set(sigma)))
    tau = tuple(sorted(set(tau)))
    if not verify_collapsible_pair(k, sigma, tau):
        raise CollapseError(f"({sigma}, {tau}) is not a collapsible pair")
    new_maximal = [m for m in k.maximal_simplices if m != tau]
    for x in sigma:
        cand = tuple(v for v in tau if v != x)
        if cand:
            new_maximal.append(cand)
    return SimplicialComplex(new_maximal)


def _edge_congruences(n, s, t):
    return (
        ("2s", (2 * s) % n),
        ("2(s+t)", (2 * (s + t)) % n),
        ("3s+t", (3 * s + t) % n),
        ("3s-t", (3 * s - t) % n),
        ("4s", (4 * s) % n),
    )


def _neighborhood_tuple(n, s, t, k):
    return tuple(sorted({(s + k) % n, (t + k) % n, (n - s + k) % n, (n - t + k) % n}))


def circulant_collapse_pairs(n, s, t, check=True):
    """Edge pairs ({s+k, n-s+k}, N(k)) for all k in Z_n, for C_n(s, t).

    The schedule is valid when none of 2s, 2(s+t), 3s+t, 3s-t, 4s vanishes
    mod n.  The first generator plays the edge role; call with (n, t, s)
    for the mirrored family.  With check=True a violated congruence raises
    CongruenceError naming the violation; check=False skips the guard so
    tests can build counterexample pairs.
    """
    if n < 2 or s % n == 0 or t % n == 0:
        raise ValueError("generators must be nonzero mod n")
    if check:
        for name, value in _edge_congruences(n, s, t):
            if value == 0:
                raise CongruenceError(name, n, s, t)
    return [
        (
            tuple(sorted({(s + k) % n, (n - s + k) % n})),
            _neighborhood_tuple(n, s, t, k),
        )
        for k in range(n)
    ]


def triangle_collapse_pairs(n, s, t):
    """Free-triangle pairs for the two doubled-sphere parameter families.

    For t == 3s with n == 12s the pair is ({s+k, t+k, n-t+k}, N(k)); for
    5s == 3t with n == 4s it is ({s+k, t+k, n-s+k}, N(k)).  Raises
    CollapseError for parameters outside both families.
    """
    if n < 2 or s % n == 0 or t % n == 0:
        raise ValueError("generators must be nonzero mod n")
    if t == 3 * s and n == 12 * s:
        sig = (s, t, n - t)
    elif 5 * s == 3 * t and n == 4 * s:
        sig = (s, t, n - s)
    else:
        raise CollapseError(f"no triangle schedule for (n, s, t) = ({n}, {s}, {t})")
    return [
        (
            tuple(sorted((a + k) % n for a in sig)),
            _neighborhood_tuple(n, s, t, k),
        )
        for k in range(n)
    ]


def _schedule_candidates(n, s, t):
    out = []
    try:
        out.append(("edges(s)", circulant_collapse_pairs(n, s, t)))
    except CollapseError:
        pass
    try:
        out.append(("edges(t)", circulant_collapse_pairs(n, t, s)))
    except CollapseError:
        pass
    try:
        out.append(("triangles", triangle_collapse_pairs(n, s, t)))
    except CollapseError:
        pass
    return out


def collapse_core(k, strategy="generic", circulant=None):
    """Collapse k to a core with no free faces; returns a CollapseTrace.

    strategy "generic" repeatedly removes the free pair whose coface has
    highest dimension, tie-broken by lexicographically smallest free face.
    strategy "circulant" expects circulant=(n, s, t) and first applies the
    closed-form pair schedule for those parameters when one exists and
    verifies step by step, then finishes generically.  Both strategies are
    deterministic; the core is a fixed point of collapsing but is not
    guaranteed to have minimal size.
    """
    if strategy not in ("generic", "circulant"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pairs_applied = []
    schedule_used = None
    eng = _Engine(k)
    if strategy == "circulant":
        if circulant is None:
            raise ValueError("strategy 'circulant' needs circulant=(n, s, t)")
        n, s, t = circulant
        for label, sched in _schedule_candidates(n, s, t):
            trial = _Engine(k)
            done = []
            ok = True
            for sigma, tau in sched:
                if not trial.is_free_pair(sigma, tau):
                    ok = False
                    break
                trial.collapse(sigma, tau)
                done.append((sigma, tau))
            if ok:
                eng = trial
                pairs_applied.extend(done)
                schedule_used = label
                break
    while True:
        nxt = eng.find_free_generic()
        if nxt is None:
            break
        eng.collapse(*nxt)
        pairs_applied.append(nxt)
    core = SimplicialComplex(eng.maximal)
    return CollapseTrace(pairs=pairs_applied, core=core, strategy=strategy, schedule=schedule_used)
