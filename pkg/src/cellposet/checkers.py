"""Decision procedures on integer vectors: which vectors arise as
h''-vectors of cell spheres / products of spheres, as h-vectors of real
projective spaces, and as h-vectors of odd-dimensional manifolds.

All arithmetic is exact; negative results carry the violated condition,
positive ones a witness where the theorem calls for one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    failed_condition: str | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failed_condition": self.failed_condition,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def check_sphere_h(h) -> CheckResult:
    """Does `h` occur as the h-vector of a cell sphere (equivalently, as
    the h''-vector of a cell decomposition of a product of spheres of
    total dimension len(h)-2)?

    Conditions: (1) h_0 = h_d = 1 and h is symmetric; (2) all entries
    nonnegative; (3) an internal zero forces an even entry sum.
    """
    h = tuple(h)
    if len(h) < 2:
        raise ValueError("need a vector of length at least 2 (d >= 1)")
    d = len(h) - 1
    if any(x < 0 for x in h):
        return CheckResult(False, "nonnegativity")
    if h[0] != 1 or h[d] != 1 or any(h[i] != h[d - i] for i in range(d + 1)):
        return CheckResult(False, "symmetry with h_0 = h_d = 1")
    if any(h[i] == 0 for i in range(1, d)) and sum(h) % 2 == 1:
        return CheckResult(False, "internal zero with odd entry sum")
    return CheckResult(True)


def sphere_h_geq(h, h2) -> bool:
    """Partial order on admissible sphere h-vectors: h >= h2 when their
    difference, re-capped with ones, is again admissible."""
    h, h2 = tuple(h), tuple(h2)
    if len(h) != len(h2):
        raise ValueError("length mismatch")
    cap = (1,) + (0,) * (len(h) - 2) + (1,)
    diff = tuple(a - b + c for a, b, c in zip(h, h2, cap))
    return bool(check_sphere_h(diff))


def r_value(n: int, i: int) -> int:
    """Correction term for projective-space h-vectors: C(n,i) at even
    i < n, 0 at odd i < n, and -1 or 0 at i = n for odd or even n."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    if i == n:
        return -1 if n % 2 == 1 else 0
    return comb(n, i) if i % 2 == 0 else 0


def check_rp_h(h, n: int) -> CheckResult:
    """Does `h` occur as the h-vector of a cell decomposition of
    (n-1)-dimensional real projective space?

    The sphere conditions are applied to the shifted entries
    h_i - r(n, i).
    """
    h = tuple(h)
    if len(h) != n + 1:
        raise ValueError(f"h must have length {n + 1}, got {len(h)}")
    shifted = [h[0]] + [h[i] - r_value(n, i) for i in range(1, n + 1)]
    if any(shifted[i] < 0 for i in range(1, n)):
        return CheckResult(False, "shifted nonnegativity")
    if shifted[0] != 1 or shifted[n] != 1 \
            or any(shifted[i] != shifted[n - i] for i in range(1, n)):
        return CheckResult(False, "shifted symmetry with ends equal to 1")
    if any(shifted[i] == 0 for i in range(1, n)) and sum(h) % 2 == 1:
        return CheckResult(False, "internal shifted zero with odd entry sum")
    return CheckResult(True)


def h_beta(h, beta) -> tuple[int, ...]:
    """The h''-style transform of `h` by a hypothetical Betti vector
    beta = (1, beta_1, ..., beta_{d-1}).

    For a connected poset with its actual h- and Betti vectors this equals
    the h''-vector.
    """
    h, beta = tuple(h), tuple(beta)
    d = len(h) - 1
    if len(beta) != d:
        raise ValueError(f"beta must have length {d}, got {len(beta)}")
    if beta[0] != 1:
        raise ValueError("beta must start with 1")
    out = [h[0]]
    for k in range(1, d):
        s = sum((-1) ** ((k - l) % 2) * beta[l - 1] for l in range(2, k + 1))
        out.append(h[k] - comb(d, k) * s)
    s = sum((-1) ** ((d - l) % 2) * beta[l - 1] for l in range(2, d))
    out.append(h[d] - s)
    return tuple(out)


def check_manifold_h(h, d: int) -> CheckResult:
    """For even d: does `h` occur as the h-vector of a cell decomposition
    of some closed (d-1)-manifold?

    Searches exhaustively for a nonnegative symmetric Betti vector
    beta = (1, beta_1, ..., beta_{d-1}), beta_i = beta_{d-1-i} for interior
    i, whose transform passes :func:`check_sphere_h`.  Nonnegativity of the
    transform bounds each free entry, so the search terminates; the
    lexicographically smallest witness is reported.
    """
    h = tuple(h)
    if d % 2 == 1:
        raise ValueError("the characterization applies to even d only")
    if len(h) != d + 1:
        raise ValueError(f"h must have length {d + 1}, got {len(h)}")
    if d == 0:
        raise ValueError("need d >= 2")

    n_free = (d - 2) // 2           # beta_1 .. beta_{(d-2)/2}; mirrors fill the rest

    def full_beta(free: list[int]) -> tuple[int, ...]:
        beta = [0] * d
        beta[0] = 1
        for i, val in enumerate(free, start=1):
            beta[i] = val
            beta[d - 1 - i] = val
        return tuple(beta)

    def search(free: list[int], partial_sum: int) -> tuple[int, ...] | None:
        k = len(free) + 1
        if len(free) == n_free:
            beta = full_beta(free)
            if check_sphere_h(h_beta(h, beta)):
                return beta
            return None
        # transform entry k+1 must stay nonnegative:
        #   sum_{l<=k+1} (-1)^(l-k-1) beta_{l-1} <= h_{k+1} / C(d, k+1)
        bound = h[k + 1] // comb(d, k + 1) + partial_sum
        for val in range(0, bound + 1):
            found = search(free + [val], val - partial_sum)
            if found is not None:
                return found
        return None

    witness = search([], 0)
    if witness is None:
        return CheckResult(False, "no symmetric Betti vector makes the "
                                  "transform a sphere h-vector")
    return CheckResult(True, witness=witness)
