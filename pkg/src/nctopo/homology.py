"""Simplicial homology over Z and over GF(2).

Unreduced homology throughout: a point has betti_z == (1,).  The integer
route goes through Smith normal form of the boundary matrices; the mod-2
route does bit-packed Gaussian elimination on incidence masks built
directly from face containment, sharing no elimination code with the SNF
path.  The universal-coefficient relation between the two is a checkable
consequence, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels


class ChainComplex:
    """Bases and integer boundary matrices of a simplicial complex.

    bases[d] is the sorted tuple of d-simplices; boundaries[d] is the
    matrix of the boundary map C_d -> C_{d-1} as a list of rows (rows
    indexed by (d-1)-simplices, columns by d-simplices).  boundaries[0]
    is the empty matrix with f_0 columns.
    """

    __slots__ = ("bases", "boundaries")

    def __init__(self, bases, boundaries):
        self.bases = bases
        self.boundaries = boundaries

    def dim(self):
        return len(self.bases) - 1


def chain_complex(k):
    """Chain complex of a simplicial complex over the integers.

    Boundary signs alternate over the sorted vertex list of each simplex:
    the face dropping the i-th vertex carries sign (-1)**i.
    """
    top = k.dim()
    bases = [k.faces(d) for d in range(top + 1)]
    boundaries = [[] for _ in range(top + 1)]
    for d in range(1, top + 1):
        index = {s: i for i, s in enumerate(bases[d - 1])}
        rows = [[0] * len(bases[d]) for _ in bases[d - 1]]
        for col, s in enumerate(bases[d]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                rows[index[face]][col] = -1 if i % 2 else 1
        boundaries[d] = rows
    if top >= 0:
        boundaries[0] = []
    return ChainComplex([tuple(b) for b in bases], boundaries)


def smith_normal_form(mat):
    """Invariant factors (d1 | d2 | ...) and rank of an integer matrix.

    Returns (factors, rank) where factors is the full positive diagonal of
    the Smith normal form, ones included, so rank == len(factors).
    """
    factors = tuple(_kernels.snf_diagonal(mat))
    return factors, len(factors)


def _rank_gf2(cc, d):
    """Rank of the d-th boundary map over GF(2).

    Builds incidence bitmasks straight from face containment, one mask per
    d-simplex over the (d-1)-simplex indices; no sign bookkeeping and no
    shared code with the Smith route.
    """
    if d <= 0 or d > cc.dim():
        return 0
    lower = {s: i for i, s in enumerate(cc.bases[d - 1])}
    masks = []
    for s in cc.bases[d]:
        m = 0
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            m |= 1 << lower[face]
        masks.append(m)
    return _kernels.gf2_rank(masks, nbits=len(cc.bases[d - 1]))


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers, torsion, and mod-2 Betti numbers per dimension.

    torsion[d] lists the invariant factors > 1 of H_d(.; Z), smallest
    first.  euler is the alternating f-vector sum, cross-checked against
    the alternating Betti sum on construction by homology().
    """

    betti_z: tuple
    torsion: tuple
    betti_z2: tuple
    euler: int

    def top_dim(self):
        return len(self.betti_z) - 1


def homology(k):
    """Homology profile of a simplicial complex (unreduced)."""
    cc = chain_complex(k)
    top = cc.dim()
    if top < 0:
        return HomologyProfile(betti_z=(), torsion=(), betti_z2=(), euler=0)

    snf = [()] * (top + 2)  # snf[d] for boundary map d, 1..top
    for d in range(1, top + 1):
        snf[d] = tuple(_kernels.snf_diagonal(cc.boundaries[d]))
    rank_z = [len(snf[d]) for d in range(top + 2)]
    rank_2 = [0] * (top + 2)
    for d in range(1, top + 1):
        rank_2[d] = _rank_gf2(cc, d)

    f = [len(b) for b in cc.bases]
    betti_z = tuple(f[d] - rank_z[d] - rank_z[d + 1] for d in range(top + 1))
    torsion = tuple(
        tuple(sorted(v for v in snf[d + 1] if v > 1)) if d + 1 <= top else ()
        for d in range(top + 1)
    )
    betti_z2 = tuple(f[d] - rank_2[d] - rank_2[d + 1] for d in range(top + 1))

    euler = sum((-1) ** d * f[d] for d in range(top + 1))
    alt = sum((-1) ** d * betti_z[d] for d in range(top + 1))
    assert euler == alt, f"Euler mismatch: f-vector gives {euler}, Betti sum gives {alt}"
    return HomologyProfile(betti_z=betti_z, torsion=torsion, betti_z2=betti_z2, euler=euler)


def uct_check(profile):
    """Universal coefficients over GF(2), checked dimension by dimension.

    b2[i] must equal b[i] plus the number of even torsion factors in
    dimensions i and i-1.
    """
    even = [sum(1 for v in t if v % 2 == 0) for t in profile.torsion]
    for i, b2 in enumerate(profile.betti_z2):
        expect = profile.betti_z[i] + even[i] + (even[i - 1] if i > 0 else 0)
        if b2 != expect:
            return False
    return True


def boundary_composition_is_zero(cc):
    """Check d o d == 0 for consecutive boundary matrices (test helper)."""
    for d in range(2, cc.dim() + 1):
        upper = cc.boundaries[d]
        lower = cc.boundaries[d - 1]
        if not upper or not lower:
            continue
        ncols = len(upper[0])
        nmid = len(upper)
        for j in range(ncols):
            col = [upper[i][j] for i in range(nmid)]
            for row in lower:
                if sum(row[i] * col[i] for i in range(nmid)) != 0:
                    return False
    return True
