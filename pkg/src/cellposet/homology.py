"""Reduced GF(2) homology of simplicial posets, h''-vectors, and the
homology sphere / manifold predicates.

Two independent engines are provided: `betti_gf2` works on the cellular
chain complex read off the cover relation, `betti_order_complex` builds
the barycentric subdivision (the complex of chains of the poset minus its
minimum) and computes simplicial homology.  They must agree on every
poset; the test suite enforces this.

Matrices over GF(2) are bit-packed: a row is a Python int, elimination is
XOR.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .posets import SimplicialPoset, link, is_pure

MAX_CHAINS = 10 ** 6


def gf2_rank(rows) -> int:
    """Rank of a bit-packed GF(2) matrix (one int per row)."""
    basis: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            other = basis.get(low)
            if other is None:
                basis[low] = row
                rank += 1
                break
            row ^= other
    return rank


@dataclass(frozen=True)
class ChainComplexGF2:
    """Augmented cellular chain complex of a simplicial poset over GF(2).

    ``dims[k]`` counts rank-k cells (dims[0] == 1 for the minimum, which
    serves as the augmentation generator); ``boundaries[k-1]`` holds the
    rows of the degree-k boundary map, one bit-packed row per rank-k cell.
    """

    dims: tuple[int, ...]
    boundaries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_poset(cls, p: SimplicialPoset) -> "ChainComplexGF2":
        pos: dict[int, int] = {}
        for r in range(p.d + 1):
            for i, c in enumerate(p.cells_by_rank[r]):
                pos[c] = i
        rows_by_degree: list[tuple[int, ...]] = []
        for k in range(1, p.d + 1):
            rows = []
            for c in p.cells_by_rank[k]:
                row = 0
                for j in p.covers[c]:
                    row ^= 1 << pos[j]
                rows.append(row)
            rows_by_degree.append(tuple(rows))
        cx = cls(tuple(len(p.cells_by_rank[r]) for r in range(p.d + 1)),
                 tuple(rows_by_degree))
        cx._check_square_zero(p, pos)
        return cx

    def _check_square_zero(self, p: SimplicialPoset, pos: dict[int, int]) -> None:
        for k in range(2, p.d + 1):
            lower = self.boundaries[k - 2]
            for c in p.cells_by_rank[k]:
                acc = 0
                for j in p.covers[c]:
                    acc ^= lower[pos[j]]
                if acc:
                    raise ValueError(
                        f"boundary squared is nonzero at cell {c}; "
                        "lower intervals are not boolean")

    def betti(self) -> tuple[int, ...]:
        """Reduced Betti numbers (degrees 0..d-1) from kernel/image ranks."""
        d = len(self.dims) - 1
        ranks = [gf2_rank(rows) for rows in self.boundaries]
        out = []
        for i in range(d):
            kernel = self.dims[i + 1] - ranks[i]
            image = ranks[i + 1] if i + 1 < len(ranks) else 0
            out.append(kernel - image)
        return tuple(out)


def betti_gf2(p: SimplicialPoset) -> tuple[int, ...]:
    """Reduced GF(2) Betti vector (beta_0, ..., beta_{d-1}) of the poset."""
    return ChainComplexGF2.from_poset(p).betti()


def betti_order_complex(p: SimplicialPoset) -> tuple[int, ...]:
    """Independent engine: reduced GF(2) Betti numbers of the complex of
    chains of the poset minus its minimum (its barycentric subdivision).

    Exponential in chain length; refuses posets with more than
    ``MAX_CHAINS`` chains.
    """
    n = p.n_cells
    below = [0] * n
    order = sorted(range(1, n), key=lambda c: p.ranks[c])
    for c in order:
        mask = 0
        for j in p.covers[c]:
            if j != 0:
                mask |= below[j] | (1 << j)
        below[c] = mask

    chains_at: dict[int, list[tuple[int, ...]]] = {}
    total = 0
    for c in order:
        lst: list[tuple[int, ...]] = [(c,)]
        mask = below[c]
        while mask:
            low = mask & -mask
            b = low.bit_length() - 1
            mask ^= low
            for ch in chains_at[b]:
                lst.append(ch + (c,))
        total += len(lst)
        if total > MAX_CHAINS:
            raise ValueError(f"order complex exceeds {MAX_CHAINS} chains")
        chains_at[c] = lst

    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(p.d)]
    for lst in chains_at.values():
        for ch in lst:
            by_dim[len(ch) - 1].append(ch)
    index: list[dict[tuple[int, ...], int]] = [
        {ch: i for i, ch in enumerate(simps)} for simps in by_dim]

    dims = (1,) + tuple(len(simps) for simps in by_dim)
    boundaries = []
    for k, simps in enumerate(by_dim):
        rows = []
        if k == 0:
            rows = [1] * len(simps)
        else:
            lower = index[k - 1]
            for ch in simps:
                row = 0
                for drop in range(len(ch)):
                    face = ch[:drop] + ch[drop + 1:]
                    row ^= 1 << lower[face]
                rows.append(row)
        boundaries.append(tuple(rows))
    return ChainComplexGF2(dims, tuple(boundaries)).betti()


# --- h'' vectors ---------------------------------------------------------------

def h_double_prime(h: tuple[int, ...], betti: tuple[int, ...]) -> tuple[int, ...]:
    """h''-vector from an h-vector and reduced Betti numbers.

    h''_0 = 1; for 0 < k < d,
    h''_k = h_k - C(d,k) * sum_{l=1..k} (-1)^(l-k) betti_{l-1};
    h''_d = betti_{d-1}.
    """
    d = len(h) - 1
    if len(betti) != d:
        raise ValueError(
            f"betti vector has length {len(betti)}, expected {d}")
    out = [1]
    for k in range(1, d):
        s = sum((-1) ** ((k - l) % 2) * betti[l - 1] for l in range(1, k + 1))
        out.append(h[k] - comb(d, k) * s)
    if d >= 1:
        out.append(betti[d - 1])
    return tuple(out)


def betti_presentation(betti: tuple[int, ...]) -> tuple[int, ...]:
    """Betti vector in the (1, beta_1, ..., beta_{d-1}) presentation."""
    return (1,) + tuple(betti[1:])


# --- homology sphere / manifold predicates --------------------------------------

def _sphere_pattern(length: int) -> tuple[int, ...]:
    if length == 0:
        return ()
    return (0,) * (length - 1) + (1,)


def is_homology_sphere(p: SimplicialPoset) -> bool:
    """True iff every cell's link (the poset itself included, as the link
    of the minimum) has the reduced GF(2) homology of a sphere of the
    matching dimension."""
    if betti_gf2(p) != _sphere_pattern(p.d):
        return False
    return _positive_links_spherical(p)


def is_homology_manifold(p: SimplicialPoset) -> bool:
    """True iff the poset is pure and every vertex link is a homology
    sphere over GF(2).

    Since a link of a link is a link of the ambient poset, the vertex-link
    condition unfolds to: every cell of rank >= 1 has a sphere-patterned
    link; that is what is checked.
    """
    return is_pure(p) and _positive_links_spherical(p)


def _positive_links_spherical(p: SimplicialPoset) -> bool:
    for c in range(1, p.n_cells):
        lk = link(p, c)
        if betti_gf2(lk) != _sphere_pattern(lk.d):
            return False
    return True


def is_orientable_gf2(p: SimplicialPoset) -> bool:
    """Orientability in the GF(2) sense: top reduced Betti number is 1."""
    if p.d < 1:
        raise ValueError("need a poset of rank at least 1")
    return betti_gf2(p)[p.d - 1] == 1
