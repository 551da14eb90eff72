"""Exact arithmetic in the group ring of the weight lattice.

An :class:`ExpSum` is a finite integer combination of formal lattice
exponentials, keyed by omega-coordinate weights.  Products are exact
convolutions, W-invariant sums decompose uniquely into orbit sums (distinct
orbits have disjoint supports), and the ring admits exact long division,
which is what turns antisymmetrized sums into characters.

Coefficients are Python ints (arbitrary precision); convolution
coefficients grow combinatorially and must never overflow silently.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import lie, weyl

KINDS = ("C", "S", "E")

#: Safety valve for the long-division loop.  Exact divisions terminate in
#: one step per quotient term; this cap only catches pathological
#: non-divisible inputs that would otherwise drift sideways forever.
_DIVISION_STEP_CAP = 200_000


class NotInvariantError(ValueError):
    """Raised when a sum is not constant on Weyl orbits."""

    def __init__(self, message: str, weight: tuple[int, ...]):
        super().__init__(message)
        self.weight = weight


class InexactDivisionError(ValueError):
    """Raised when group-ring division leaves an irreducible remainder."""

    def __init__(self, message: str, term: tuple[int, ...]):
        super().__init__(message)
        self.term = term


def grlex_key(w: Sequence[int]) -> tuple:
    """Graded lexicographic sort key: total degree first, then lex."""
    return (sum(w), tuple(w))


def _clean(terms: Mapping[tuple[int, ...], int]) -> dict:
    return {w: c for w, c in terms.items() if c != 0}


@dataclass(frozen=True)
class ExpSum:
    """Formal exponential sum: finite map weight -> nonzero int coefficient."""

    rank: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExpSum)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __add__(self, other: "ExpSum") -> "ExpSum":
        self._check_rank(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return ExpSum(self.rank, out)

    def __sub__(self, other: "ExpSum") -> "ExpSum":
        self._check_rank(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return ExpSum(self.rank, out)

    def __mul__(self, other: "ExpSum") -> "ExpSum":
        self._check_rank(other)
        out: dict = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(wa, wb))
                out[key] = out.get(key, 0) + ca * cb
        return ExpSum(self.rank, out)

    def _check_rank(self, other: "ExpSum") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def support_bound(self) -> int:
        """max |mu_j| over all stored weights (0 for the empty sum)."""
        if not self.terms:
            return 0
        return max(abs(c) for w in self.terms for c in w)

    def evaluate(self, x: Sequence[float], basis: str = "alpha") -> complex:
        """Numeric value at x: sum of coeff * exp(2*pi*i <mu, x>)."""
        if not self.terms:
            return 0j
        weights = np.array(list(self.terms.keys()), dtype=float)
        coeffs = np.array(list(self.terms.values()), dtype=float)
        if basis == "alpha":
            phases = weights @ np.asarray(x, dtype=float)
        elif basis == "e":
            conv = np.array(lie.omega_to_e_matrix(self.rank), dtype=float)
            phases = (weights @ conv.T) @ np.asarray(x, dtype=float)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return complex((coeffs * np.exp(2j * np.pi * phases)).sum())

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"weight": list(w), "coeff": c} for w, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "ExpSum":
        data = json.loads(text)
        return cls(
            int(data["rank"]),
            {tuple(t["weight"]): int(t["coeff"]) for t in data["terms"]},
        )


@dataclass(frozen=True)
class OrbitDecomposition:
    """Map dominant weight -> positive integer orbit multiplicity."""

    rank: int
    terms: dict = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrbitDecomposition)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def expand(self) -> ExpSum:
        """Re-expansion into the plain exponential sum it denotes."""
        out: dict = {}
        for lam, mult in self.terms.items():
            for p in weyl.orbit(lam).points:
                out[p] = out.get(p, 0) + mult
        return ExpSum(self.rank, out)

    def weight_count(self) -> int:
        """sum of multiplicity * orbit size (e.g. a character's dimension)."""
        return sum(m * weyl.orbit(lam).size for lam, m in self.terms.items())

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"weight": list(w), "coeff": c} for w, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "OrbitDecomposition":
        data = json.loads(text)
        return cls(
            int(data["rank"]),
            {tuple(t["weight"]): int(t["coeff"]) for t in data["terms"]},
        )


def exp_sum(lam: Sequence[int], kind: str) -> ExpSum:
    """Formal sum of a C-, S-, or E-orbit function (coefficients +-1)."""
    lam = lie.as_weight(lam)
    if kind == "C":
        if not lie.is_dominant(lam):
            raise ValueError(f"C requires a dominant weight, got {lam}")
        orb = weyl.orbit(lam)
        return ExpSum(orb.rank, {p: 1 for p in orb.points})
    if kind == "S":
        if not lie.is_strictly_dominant(lam):
            raise ValueError(f"S requires a strictly dominant weight, got {lam}")
        orb = weyl.orbit(lam)
        return ExpSum(orb.rank, dict(orb.items()))
    if kind == "E":
        dom, _ = weyl.dominant_representative(lam)
        if dom != lam and not _is_reflected_dominant(lam):
            raise ValueError(f"E requires a weight in P+ or r_i P+, got {lam}")
        orb = weyl.orbit(dom)
        return ExpSum(orb.rank, {p: 1 for p in orb.even_points})
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _is_reflected_dominant(lam: tuple[int, ...]) -> bool:
    return any(
        lie.is_dominant(weyl.reflect_weight(i, lam)) for i in range(1, len(lam) + 1)
    )


def multiply(a: ExpSum, b: ExpSum) -> ExpSum:
    return a * b


def decompose_into_c(s: ExpSum) -> OrbitDecomposition:
    """Decompose a W-invariant sum into orbit sums with multiplicities.

    Greedy extraction: repeatedly take the graded-lex maximal dominant
    weight still present and subtract its orbit times its coefficient.
    Distinct orbits have disjoint supports, so the result is the unique
    decomposition; non-invariant input surfaces as a negative coefficient
    or a leftover weight with no dominant representative present.
    """
    rem = dict(s.terms)
    out: dict = {}
    while rem:
        dominant = [w for w in rem if lie.is_dominant(w)]
        if not dominant:
            w_bad = max(rem, key=grlex_key)
            raise NotInvariantError(
                f"no dominant weight left but {w_bad} remains with "
                f"coefficient {rem[w_bad]}",
                w_bad,
            )
        lam = max(dominant, key=grlex_key)
        mult = rem[lam]
        if mult < 0:
            raise NotInvariantError(
                f"negative multiplicity {mult} at dominant weight {lam}", lam
            )
        for p in weyl.orbit(lam).points:
            c = rem.get(p, 0) - mult
            if c < 0:
                raise NotInvariantError(
                    f"sum is not constant on the orbit of {lam}: "
                    f"weight {p} falls short by {-c}",
                    p,
                )
            if c == 0:
                rem.pop(p, None)
            else:
                rem[p] = c
        out[lam] = mult
    return OrbitDecomposition(s.rank, out)


def exact_divide(num: ExpSum, den: ExpSum) -> ExpSum:
    """Exact quotient num/den in the group ring.

    Multivariate long division by the graded-lex leading term of den.  A
    graded-lex floor (leading/trailing terms respect the monomial order
    under products) cuts off non-divisible inputs early; exactness is
    enforced post hoc by re-multiplication.
    """
    num._check_rank(den)
    if not den.terms:
        raise ZeroDivisionError("division by the zero sum")
    if not num.terms:
        return ExpSum(num.rank, {})
    lead_den = max(den.terms, key=grlex_key)
    lead_coeff = den.terms[lead_den]
    floor_key = grlex_key(
        tuple(
            a - b
            for a, b in zip(
                min(num.terms, key=grlex_key), min(den.terms, key=grlex_key)
            )
        )
    )

    rem = dict(num.terms)
    quotient: dict = {}
    steps = 0
    while rem:
        steps += 1
        if steps > _DIVISION_STEP_CAP:
            t = max(rem, key=grlex_key)
            raise InexactDivisionError(
                f"division did not terminate within {_DIVISION_STEP_CAP} steps; "
                f"remainder leads with {t}",
                t,
            )
        t = max(rem, key=grlex_key)
        c = rem[t]
        mono = tuple(a - b for a, b in zip(t, lead_den))
        if grlex_key(mono) < floor_key or c % lead_coeff != 0:
            raise InexactDivisionError(
                f"not divisible: irreducible remainder term {t} (coeff {c})", t
            )
        qc = c // lead_coeff
        quotient[mono] = quotient.get(mono, 0) + qc
        for w, d in den.terms.items():
            key = tuple(a + b for a, b in zip(mono, w))
            left = rem.get(key, 0) - qc * d
            if left == 0:
                rem.pop(key, None)
            else:
                rem[key] = left
    result = ExpSum(num.rank, quotient)
    if result * den != num:
        t = max(quotient, key=grlex_key) if quotient else (0,) * num.rank
        raise InexactDivisionError("re-multiplication check failed", t)
    return result


def character(lam: Sequence[int]) -> OrbitDecomposition:
    """Weyl character of the highest weight lam as a sum of C-functions.

    chi_lam = S_{lam+rho} / S_rho with rho = (1, ..., 1); the quotient is
    W-invariant and decomposes with the dominant-weight multiplicities.
    """
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"character requires a dominant weight, got {lam}")
    rho = (1,) * len(lam)
    shifted = tuple(c + 1 for c in lam)
    return decompose_into_c(exact_divide(exp_sum(shifted, "S"), exp_sum(rho, "S")))
