"""Multivariate Chebyshev-type polynomials built from orbit functions.

Two constructions live here.  ``poly_t`` / ``poly_u`` express orbit sums and
characters as exact integer polynomials in the fundamental variables
X_1..X_n (the orbit sums of the fundamental weights), found by recursively
decomposing products X_j * C_mu in the group ring.  ``substitute_p`` applies
the exponential change of variables y_j = exp(2*pi*i x_j), turning each
orbit exponential into a Laurent monomial.

The one-variable classical Chebyshev polynomials are kept alongside as the
reduction oracle: at rank 1, T-polynomials are twice the classical first
kind under X = 2z, and U-polynomials are exactly the classical second kind.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Mapping, Sequence

from . import exp_ring, lie
from .exp_ring import OrbitDecomposition, exp_sum, grlex_key


# ---------------------------------------------------------------------------
# Classical one-variable polynomials (dense integer coefficients).

@dataclass(frozen=True)
class ClassicalPoly:
    """Integer polynomial in one variable z; coeffs[k] multiplies z^k."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "ClassicalPoly":
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        return ClassicalPoly(tuple(coeffs[:end]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "ClassicalPoly") -> "ClassicalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ClassicalPoly.of(*out)

    def __sub__(self, other: "ClassicalPoly") -> "ClassicalPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "ClassicalPoly") -> "ClassicalPoly":
        if not self.coeffs or not other.coeffs:
            return ClassicalPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ClassicalPoly.of(*out)

    def scale(self, k: int) -> "ClassicalPoly":
        return ClassicalPoly.of(*(k * c for c in self.coeffs))

    def derivative(self) -> "ClassicalPoly":
        return ClassicalPoly.of(
            *(k * self.coeffs[k] for k in range(1, len(self.coeffs)))
        )

    def __call__(self, z: complex) -> complex:
        out = 0j
        for c in reversed(self.coeffs):
            out = out * z + c
        return out


_Z = ClassicalPoly.of(0, 1)
_ONE = ClassicalPoly.of(1)


@lru_cache(maxsize=None)
def classical_t(m: int) -> ClassicalPoly:
    """First-kind Chebyshev polynomial via the three-term recursion."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    prev, cur = _ONE, _Z
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, _Z.scale(2) * cur - prev
    return cur


@lru_cache(maxsize=None)
def classical_u(m: int) -> ClassicalPoly:
    """Second-kind Chebyshev polynomial via the three-term recursion."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    prev, cur = _ONE, _Z.scale(2)
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, _Z.scale(2) * cur - prev
    return cur


def check_classical_identities(m: int) -> dict[str, bool]:
    """Exact integer-identity checks tying the two classical kinds together.

    Verifies, in their valid ranges: T_m' = m U_{m-1}; T_m is half the
    difference U_m - U_{m-2}; T_{m+1} = z T_m - (1 - z^2) U_{m-1};
    and T_m = U_m - z U_{m-1}.
    """
    out: dict[str, bool] = {}
    if m >= 1:
        out["derivative"] = classical_t(m).derivative() == classical_u(m - 1).scale(m)
        out["mixed_step"] = classical_t(m + 1) == (
            _Z * classical_t(m) - (_ONE - _Z * _Z) * classical_u(m - 1)
        )
        out["u_minus_zu"] = classical_t(m) == classical_u(m) - _Z * classical_u(m - 1)
    if m >= 2:
        diff = classical_u(m) - classical_u(m - 2)
        half = tuple(c // 2 for c in diff.coeffs)
        out["u_difference"] = (
            all(c % 2 == 0 for c in diff.coeffs)
            and ClassicalPoly(half) == classical_t(m)
        )
    out["all"] = all(v for k, v in out.items())
    return out


# ---------------------------------------------------------------------------
# Sparse polynomials in the fundamental variables / in the y-variables.

def _merge(a: dict, b: Mapping, factor: int = 1) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + factor * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


@dataclass(frozen=True)
class XPolynomial:
    """Integer polynomial in X_1..X_n: map degree tuple -> coefficient."""

    rank: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {d: c for d, c in self.terms.items() if c != 0}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, XPolynomial)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        return XPolynomial(self.rank, _merge(self.terms, other.terms))

    def __sub__(self, other: "XPolynomial") -> "XPolynomial":
        return XPolynomial(self.rank, _merge(self.terms, other.terms, -1))

    def __mul__(self, other: "XPolynomial") -> "XPolynomial":
        out: dict = {}
        for da, ca in self.terms.items():
            for db, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(da, db))
                out[key] = out.get(key, 0) + ca * cb
        return XPolynomial(self.rank, out)

    def scale(self, k: int) -> "XPolynomial":
        return XPolynomial(self.rank, {d: k * c for d, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __call__(self, values: Sequence[complex]) -> complex:
        total = 0j
        for deg, c in self.terms.items():
            prod = complex(c)
            for v, d in zip(values, deg):
                if d:
                    prod *= v ** d
            total += prod
        return total

    def to_json_dict(self, lam: Sequence[int], kind: str) -> dict:
        return _poly_json(self, lam, kind)

    def __str__(self) -> str:
        return _poly_str(self, "X")


@dataclass(frozen=True)
class YLaurent:
    """Integer Laurent polynomial in y_1..y_n (exponents may be negative)."""

    rank: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {d: c for d, c in self.terms.items() if c != 0}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, YLaurent)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __add__(self, other: "YLaurent") -> "YLaurent":
        return YLaurent(self.rank, _merge(self.terms, other.terms))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __call__(self, values: Sequence[complex]) -> complex:
        total = 0j
        for deg, c in self.terms.items():
            prod = complex(c)
            for v, d in zip(values, deg):
                if d:
                    prod *= v ** d
            total += prod
        return total

    def to_json_dict(self, lam: Sequence[int], kind: str) -> dict:
        return _poly_json(self, lam, kind)

    def __str__(self) -> str:
        return _poly_str(self, "y")


def _poly_json(poly, lam: Sequence[int], kind: str) -> dict:
    return {
        "algebra": f"A{poly.rank}",
        "lambda": list(lam),
        "kind": kind,
        "terms": [{"deg": list(d), "coeff": c} for d, c in poly.sorted_terms()],
    }


def _poly_str(poly, var: str) -> str:
    items = poly.sorted_terms()
    if not items:
        return "0"
    parts = []
    for deg, c in items:
        factors = []
        for j, d in enumerate(deg, start=1):
            if d == 1:
                factors.append(f"{var}{j}")
            elif d != 0:
                factors.append(f"{var}{j}^{d}")
        body = "*".join(factors)
        mag = abs(c)
        if not body:
            chunk = str(mag)
        elif mag == 1:
            chunk = body
        else:
            chunk = f"{mag}*{body}"
        if not parts:
            parts.append(chunk if c > 0 else f"-{chunk}")
        else:
            parts.append(f"+ {chunk}" if c > 0 else f"- {chunk}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Recursive construction.

def _x_monomial(n: int, j: int) -> XPolynomial:
    deg = tuple(1 if k == j else 0 for k in range(n))
    return XPolynomial(n, {deg: 1})


def _build_t(
    lam: tuple[int, ...],
    pick: Callable[[tuple[int, ...]], int],
    memo: dict,
) -> XPolynomial:
    if lam in memo:
        return memo[lam]
    n = len(lam)
    if not any(lam):
        result = XPolynomial(n, {(0,) * n: 1})
    elif sum(lam) == 1:
        result = _x_monomial(n, lam.index(1))
    else:
        j = pick(lam)
        mu = tuple(c - 1 if k == j else c for k, c in enumerate(lam))
        omega_j = tuple(1 if k == j else 0 for k in range(n))
        dec = exp_ring.decompose_into_c(exp_sum(omega_j, "C") * exp_sum(mu, "C"))
        if dec.terms.get(lam) != 1:
            raise AssertionError(
                f"expected multiplicity 1 for {lam} in X_{j + 1} * C_{mu}"
            )
        result = _x_monomial(n, j) * _build_t(mu, pick, memo)
        for nu, mult in dec.terms.items():
            if nu == lam:
                continue
            result = result - _build_t(nu, pick, memo).scale(mult)
    memo[lam] = result
    return result


_T_MEMO: dict[tuple[int, ...], XPolynomial] = {}


def _first_positive(lam: tuple[int, ...]) -> int:
    return next(k for k, c in enumerate(lam) if c > 0)


def poly_t(lam: Sequence[int]) -> XPolynomial:
    """First-kind polynomial of lam: the orbit sum C_lam written exactly in
    the fundamental variables X_j = C at the j-th fundamental weight.

    Built by induction: split off the first fundamental weight with a
    positive coordinate, decompose the product X_j * C_mu into orbit sums
    (lam enters with multiplicity one), and solve for C_lam.  Results are
    memoized per weight; any valid choice of j yields the same polynomial.
    """
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"poly_t requires a dominant weight, got {lam}")
    return _build_t(lam, _first_positive, _T_MEMO)


def _poly_t_pick_last(lam: Sequence[int]) -> XPolynomial:
    # Alternative construction strategy, used to verify choice-independence.
    lam = lie.as_weight(lam)
    return _build_t(
        lam, lambda w: max(k for k, c in enumerate(w) if c > 0), {}
    )


def poly_u(lam: Sequence[int]) -> XPolynomial:
    """Second-kind polynomial: the character of lam in the X variables.

    The character decomposes into C-functions with dominant-weight
    multiplicities, so this is the multiplicity-weighted sum of poly_t's.
    """
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"poly_u requires a dominant weight, got {lam}")
    chi = exp_ring.character(lam)
    n = len(lam)
    total = XPolynomial(n, {})
    for nu, mult in chi.terms.items():
        total = total + poly_t(nu).scale(mult)
    return total


def substitute_p(lam: Sequence[int], kind: str) -> YLaurent:
    """Laurent polynomial from the substitution y_j = exp(2*pi*i x_j).

    Every orbit exponential becomes the monomial with the orbit point's
    omega coordinates as exponents; coefficients stay +-1 (the signs of an
    S-sum live in the coefficients, never an explicit imaginary factor).
    """
    s = exp_sum(lam, kind)
    return YLaurent(s.rank, dict(s.terms))


@dataclass(frozen=True)
class RecursionRelation:
    """Decomposition of X_j * C_a, the step underlying poly_t."""

    rank: int
    j: int  # 1-based fundamental-variable index
    a: tuple[int, ...]
    rhs: OrbitDecomposition

    @property
    def total_terms(self) -> int:
        """Orbit terms on the right plus the product on the left."""
        return len(self.rhs.terms) + 1

    @property
    def generic_terms(self) -> int:
        """Expected total for generic a: orbit size of omega_j, plus one."""
        return comb(self.rank + 1, self.j) + 1

    @property
    def is_generic(self) -> bool:
        """All decomposition weights strictly dominant with multiplicity 1."""
        return all(
            mult == 1 and lie.is_strictly_dominant(nu)
            for nu, mult in self.rhs.terms.items()
        )


def recursion_relation(j: int, a: Sequence[int]) -> RecursionRelation:
    a = lie.as_weight(a)
    n = len(a)
    if not 1 <= j <= n:
        raise ValueError(f"fundamental index {j} out of range 1..{n}")
    if not lie.is_dominant(a):
        raise ValueError(f"recursion requires a dominant weight, got {a}")
    omega_j = tuple(1 if k == j - 1 else 0 for k in range(n))
    dec = exp_ring.decompose_into_c(exp_sum(omega_j, "C") * exp_sum(a, "C"))
    return RecursionRelation(rank=n, j=j, a=a, rhs=dec)


def a1_z_coefficients(poly: XPolynomial) -> tuple[int, ...]:
    """Coefficients in z after substituting X = 2z into a rank-1 polynomial."""
    if poly.rank != 1:
        raise ValueError("substitution X = 2z only applies at rank 1")
    if not poly.terms:
        return ()
    top = max(d for (d,) in poly.terms)
    out = [0] * (top + 1)
    for (d,), c in poly.terms.items():
        out[d] = c * 2 ** d
    return ClassicalPoly.of(*out).coeffs
