"""The Weyl group of the A-series, acting as the symmetric group S_{n+1}.

Orbits of a dominant weight are generated by permuting its e-basis
coordinates (held as exact integers scaled by n+1), never by reflection
closure, so duplicate points cannot arise.  Each orbit point carries a
parity sign.

Sign convention.  The sign of a point is the parity of the permutation
carrying the dominant arrangement of e-coordinates to the point's
arrangement.  For a weight with pairwise distinct e-coordinates that
permutation is unique.  When coordinates repeat, the sign is fixed by the
minimal sorting permutation (a stable descending sort), which makes the
dominant point's sign +1; such points only matter through the documented
even-point rule, since antisymmetrized sums vanish on them identically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from . import lie


def signed_permutations(items: tuple) -> Iterator[tuple[tuple, int]]:
    """Yield (arrangement, parity) for all permutations of distinct items.

    Parity is relative to the input order.  Built by inserting the head
    element into every gap of each sub-permutation; an insertion that skips
    p elements costs p adjacent transpositions.
    """
    if len(items) <= 1:
        yield items, 1
        return
    head, rest = items[0], items[1:]
    for sub, s in signed_permutations(rest):
        for pos in range(len(sub) + 1):
            sign = s if pos % 2 == 0 else -s
            yield sub[:pos] + (head,) + sub[pos:], sign


def _multiset_arrangements(values: tuple) -> Iterator[tuple]:
    """Distinct arrangements of a multiset, each exactly once."""
    if not values:
        yield ()
        return
    seen = set()
    for i, v in enumerate(values):
        if v in seen:
            continue
        seen.add(v)
        for rest in _multiset_arrangements(values[:i] + values[i + 1:]):
            yield (v,) + rest


def stable_sort_sign(arrangement: Sequence) -> int:
    """Parity of the stable descending sort of the arrangement.

    This is the minimal sorting permutation; for distinct values it is the
    unique one.  Already-sorted input gives +1.
    """
    order = sorted(range(len(arrangement)), key=lambda i: (arrangement[i], -i), reverse=True)
    inversions = 0
    for a, b in itertools.combinations(order, 2):
        if a > b:
            inversions += 1
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class SignedOrbit:
    """A Weyl orbit with parity signs and the even-subgroup sub-orbit.

    Points are omega-coordinate weights ordered by descending lexicographic
    e-coordinates, so the dominant point always comes first.  ``even[i]`` is
    True when point i is reachable from the dominant point by an even
    permutation; when the stabilizer contains an odd permutation (repeated
    e-coordinates) every point is, otherwise exactly the sign +1 points are.
    """

    rank: int
    dominant: tuple[int, ...]
    points: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]
    even: tuple[bool, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def stabilizer_order(self) -> int:
        return factorial(self.rank + 1) // len(self.points)

    @property
    def even_points(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p for p, e in zip(self.points, self.even) if e)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return zip(self.points, self.signs)


def _to_omega(arrangement: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = []
    for i in range(n):
        q, r = divmod(arrangement[i] - arrangement[i + 1], n + 1)
        if r:
            raise AssertionError("scaled e-coordinates lost congruence")
        out.append(q)
    return tuple(out)


@lru_cache(maxsize=128)
def orbit(lam: tuple[int, ...]) -> SignedOrbit:
    """Signed Weyl orbit of a dominant weight (eagerly materialized)."""
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"orbit requires a dominant weight, got {lam}")
    n = len(lam)
    scaled = lie.omega_to_e_scaled(lam)
    if len(set(scaled)) == len(scaled):
        # Generic: arrangements are in bijection with permutations, and the
        # even-subgroup orbit is exactly the +1-parity half.
        entries = [(arr, s, s > 0) for arr, s in signed_permutations(scaled)]
    else:
        # An equal pair puts an odd element in the stabilizer, so every
        # arrangement is reachable by an even permutation as well.
        entries = [
            (arr, stable_sort_sign(arr), True)
            for arr in _multiset_arrangements(scaled)
        ]
    entries.sort(key=lambda t: t[0], reverse=True)
    return SignedOrbit(
        rank=n,
        dominant=lam,
        points=tuple(_to_omega(arr, n) for arr, _, _ in entries),
        signs=tuple(s for _, s, _ in entries),
        even=tuple(e for _, _, e in entries),
    )


def dominant_representative(mu: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Dominant weight of mu's orbit and the parity carrying it to mu.

    Sorts the e-coordinates descending; the sign is the parity of the
    (stable) sorting permutation, so dominant input returns (mu, +1).
    """
    mu = lie.as_weight(mu)
    n = len(mu)
    scaled = lie.omega_to_e_scaled(mu)
    sign = stable_sort_sign(scaled)
    return _to_omega(tuple(sorted(scaled, reverse=True)), n), sign


def orbit_size(lam: Sequence[int]) -> int:
    """(n+1)! divided by the factorials of e-coordinate multiplicities."""
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"orbit_size requires a dominant weight, got {lam}")
    scaled = lie.omega_to_e_scaled(lam)
    size = factorial(len(scaled))
    for v in set(scaled):
        size //= factorial(scaled.count(v))
    return size


def stabilizer_order(lam: Sequence[int]) -> int:
    return factorial(len(lam) + 1) // orbit_size(lam)


def is_generic(mu: Sequence[int]) -> bool:
    """True when the stabilizer is trivial (all e-coordinates distinct)."""
    scaled = lie.omega_to_e_scaled(tuple(mu))
    return len(set(scaled)) == len(scaled)


def reflect(i: int, coords: Sequence) -> tuple:
    """Elementary reflection r_i on e-coordinates: swap entries i and i+1.

    1-based index, 1 <= i <= n for a length-(n+1) vector; works on exact
    weights and real points alike and preserves the zero-sum hyperplane.
    """
    coords = tuple(coords)
    if not 1 <= i <= len(coords) - 1:
        raise ValueError(f"reflection index {i} out of range 1..{len(coords) - 1}")
    j = i - 1
    return coords[:j] + (coords[j + 1], coords[j]) + coords[j + 2:]


def reflect_weight(i: int, lam: Sequence[int]) -> tuple[int, ...]:
    """r_i acting on omega coordinates: lam - lam_i * alpha_i."""
    lam = tuple(lam)
    n = len(lam)
    if not 1 <= i <= n:
        raise ValueError(f"reflection index {i} out of range 1..{n}")
    cartan = lie.cartan_matrix(n)
    c = lam[i - 1]
    return tuple(lam[j] - c * cartan[j][i - 1] for j in range(n))
