"""Exact lattice data for the A-series algebras (rank n, group SU(n+1)).

Weights are plain tuples of integers giving coordinates in the omega basis
(fundamental weights).  e-basis coordinates are exact ``fractions.Fraction``
values on the hyperplane where all n+1 coordinates sum to zero.  Everything
here is exact rational arithmetic; floating point enters only at evaluation
time in :mod:`orbitpoly.orbit_functions` and :mod:`orbitpoly.analysis`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

#: Default cap on the rank.  At n = 8 a generic orbit already has
#: 9! = 362880 points; operations never assume small rank structurally,
#: so the cap is only a guard against accidentally huge computations.
MAX_RANK = 8

Weight = tuple[int, ...]


def check_rank(n: int, maximum: int | None = None) -> None:
    """Raise ValueError unless 1 <= n <= maximum (MAX_RANK when omitted).

    The module-level MAX_RANK is read at call time, so reassigning it
    reconfigures every entry point at once.
    """
    if maximum is None:
        maximum = MAX_RANK
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")
    if n > maximum:
        raise ValueError(f"rank {n} exceeds the configured maximum {maximum}")


def as_weight(coords: Sequence[int]) -> Weight:
    """Validate and normalize omega-basis coordinates to a tuple of ints."""
    out = []
    for c in coords:
        if isinstance(c, bool) or not isinstance(c, int):
            raise ValueError(f"weight coordinates must be integers, got {c!r}")
        out.append(c)
    check_rank(len(out))
    return tuple(out)


@lru_cache(maxsize=None)
def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """n x n Cartan matrix: 2 on the diagonal, -1 on the sub/super-diagonal."""
    check_rank(n)
    return tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def cartan_inverse(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse Cartan matrix, entries min(i,j)*(n+1-max(i,j))/(n+1)."""
    check_rank(n)
    return tuple(
        tuple(
            Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1)
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def omega_to_e_matrix(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """(n+1) x n conversion matrix from omega to e coordinates.

    Row j, column k is (n+1-k)/(n+1) for k >= j and -k/(n+1) for k < j;
    column k is the e-coordinate vector of the k-th fundamental weight.
    """
    check_rank(n)
    return tuple(
        tuple(
            Fraction(n + 1 - k, n + 1) if k >= j else Fraction(-k, n + 1)
            for k in range(1, n + 1)
        )
        for j in range(1, n + 2)
    )


def omega_to_e_scaled(lam: Sequence[int]) -> tuple[int, ...]:
    """e-coordinates of an integer weight, scaled by n+1 (exact integers).

    All n+1 scaled coordinates are congruent mod n+1, so coordinate
    differences of any rearrangement divide back to integer omega
    coordinates.  Workhorse representation for orbit generation.
    """
    n = len(lam)
    # l_j * (n+1) = sum_{k>=j} (n+1-k) lam_k  -  sum_{k<j} k lam_k
    suffix = 0
    for k in range(1, n + 1):
        suffix += (n + 1 - k) * lam[k - 1]
    prefix = 0
    out = []
    for j in range(1, n + 2):
        out.append(suffix - prefix)
        if j <= n:
            term = lam[j - 1]
            suffix -= (n + 1 - j) * term
            prefix += j * term
    return tuple(out)


def omega_to_e(lam: Sequence[int]) -> tuple[Fraction, ...]:
    """e-basis coordinates of a weight; they sum to exactly zero."""
    n = len(lam)
    return tuple(Fraction(s, n + 1) for s in omega_to_e_scaled(lam))


def e_to_omega(coords: Sequence) -> tuple:
    """Inverse conversion on the zero-sum hyperplane: lam_i = l_i - l_{i+1}.

    Exact inputs (int/Fraction) must sum to exactly zero; float inputs are
    accepted within a small tolerance.
    """
    coords = tuple(coords)
    if len(coords) < 2:
        raise ValueError("e-coordinates need length rank+1 >= 2")
    total = sum(coords)
    exact = all(isinstance(c, (int, Fraction)) for c in coords)
    if exact:
        if total != 0:
            raise ValueError(f"e-coordinates must sum to zero, got {total}")
    else:
        scale = max(1.0, max(abs(float(c)) for c in coords))
        if abs(float(total)) > 1e-9 * scale:
            raise ValueError(f"e-coordinates must sum to ~zero, got {total}")
    return tuple(coords[i] - coords[i + 1] for i in range(len(coords) - 1))


def inner_product(lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """W-invariant scalar product: lam^T C^{-1} mu in omega coordinates.

    Equals the Euclidean dot product of the e-coordinate images (the omega
    basis has Gram matrix C^{-1} because every simple root has squared
    length 2).
    """
    if len(lam) != len(mu):
        raise ValueError(f"rank mismatch: {len(lam)} vs {len(mu)}")
    cinv = cartan_inverse(len(lam))
    total = Fraction(0)
    for i, li in enumerate(lam):
        if li == 0:
            continue
        row = cinv[i]
        total += li * sum(row[j] * mu[j] for j in range(len(mu)))
    return total


def norm_sq(lam: Sequence[int]) -> Fraction:
    return inner_product(lam, lam)


def congruence_number(lam: Sequence[int]) -> int:
    """sum_k k*lam_k mod (n+1); additive under weight addition."""
    n = len(lam)
    return sum(k * lam[k - 1] for k in range(1, n + 1)) % (n + 1)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)


def is_strictly_dominant(lam: Sequence[int]) -> bool:
    return all(c > 0 for c in lam)


def alpha_to_e_point(x: Sequence[float]) -> tuple[float, ...]:
    """Real vector in the alpha basis -> e-coordinates (zero-sum)."""
    x = tuple(x)
    n = len(x)
    prev = 0.0
    out = []
    for j in range(n):
        out.append(x[j] - prev)
        prev = x[j]
    out.append(-x[n - 1])
    return tuple(out)


def e_to_alpha_point(coords: Sequence[float]) -> tuple[float, ...]:
    """Real zero-sum e-point -> alpha coordinates (partial sums)."""
    coords = tuple(coords)
    out = []
    run = 0.0
    for c in coords[:-1]:
        run += c
        out.append(run)
    return tuple(out)
