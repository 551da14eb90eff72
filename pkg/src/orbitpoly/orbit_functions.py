"""Numeric evaluation of C-, S- and E-orbit functions, and the permanent /
determinant / alternating-sum exponential forms they coincide with.

The argument point x may be given in alpha coordinates (length n, the
pairing with an omega-coordinate weight is then the plain dot product) or
as a real e-point of length n+1; adding a multiple of (1,...,1) to an
e-point never changes a value because weights sum to zero there.

Sums over orbit points accumulate with numpy reductions (pairwise
summation); orbit sizes reach (n+1)! and naive left-to-right accumulation
would leak cancellation error into the identity checks.
"""
from __future__ import annotations

import warnings
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import lie, weyl


class NonGenericWeightWarning(UserWarning):
    """An antisymmetrized sum was requested on a Weyl-chamber wall."""


@lru_cache(maxsize=64)
def _orbit_arrays(lam: tuple[int, ...]):
    orb = weyl.orbit(lam)
    m_omega = np.array(orb.points, dtype=float).reshape(orb.size, orb.rank)
    conv = np.array(lie.omega_to_e_matrix(orb.rank), dtype=float)
    m_e = m_omega @ conv.T
    signs = np.array(orb.signs, dtype=float)
    even = np.array(orb.even, dtype=bool)
    return m_omega, m_e, signs, even


def _phases(lam: tuple[int, ...], x: Sequence[float], basis: str) -> np.ndarray:
    m_omega, m_e, _, _ = _orbit_arrays(lam)
    x = np.asarray(x, dtype=float)
    if basis == "alpha":
        if x.shape != (len(lam),):
            raise ValueError(f"alpha point must have length {len(lam)}")
        return m_omega @ x
    if basis == "e":
        if x.shape != (len(lam) + 1,):
            raise ValueError(f"e point must have length {len(lam) + 1}")
        return m_e @ x
    raise ValueError(f"unknown basis {basis!r}")


def eval_c(lam: Sequence[int], x: Sequence[float], basis: str = "alpha") -> complex:
    """C-orbit function: plain exponential sum over the orbit of lam.

    Normalized over distinct orbit points, so C_0 = 1 and C_lam(0) equals
    the orbit size.
    """
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"C requires a dominant weight, got {lam}")
    return complex(np.exp(2j * np.pi * _phases(lam, x, basis)).sum())


def eval_s(lam: Sequence[int], x: Sequence[float], basis: str = "alpha") -> complex:
    """S-orbit function: parity-signed exponential sum over the orbit.

    Strictly dominant lam is the meaningful domain.  A dominant lam on a
    chamber wall returns exactly 0 with a NonGenericWeightWarning -- the
    antisymmetrization cancels identically there, and callers composing
    characters need a total function rather than an error.
    """
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"S requires a dominant weight, got {lam}")
    if not lie.is_strictly_dominant(lam):
        warnings.warn(
            f"S vanishes identically at the non-generic weight {lam}",
            NonGenericWeightWarning,
            stacklevel=2,
        )
        return 0j
    _, _, signs, _ = _orbit_arrays(lam)
    return complex((signs * np.exp(2j * np.pi * _phases(lam, x, basis))).sum())


def eval_e(lam: Sequence[int], x: Sequence[float], basis: str = "alpha") -> complex:
    """E-orbit function: exponential sum over the even-subgroup orbit.

    The value depends on lam only through its dominant representative, so
    E is invariant under lam -> r_i lam.  For strictly dominant lam it
    equals (C_lam + S_lam)/2.
    """
    dom, _ = weyl.dominant_representative(lam)
    _, _, _, even = _orbit_arrays(dom)
    phases = _phases(dom, x, basis)[even]
    return complex(np.exp(2j * np.pi * phases).sum())


# ---------------------------------------------------------------------------
# Exponential functions in n+1 variables: permanent, determinant and
# alternating-sum forms of the matrix exp(2*pi*i * l_j * x_k).

def permanent(a: np.ndarray) -> complex:
    """Permanent by Ryser inclusion-exclusion, O(2^m m); m <= 9."""
    a = np.asarray(a)
    m = a.shape[0]
    if a.shape != (m, m):
        raise ValueError("permanent requires a square matrix")
    if m > 9:
        raise ValueError(f"permanent limited to order 9, got {m}")
    total = 0j
    for mask in range(1, 1 << m):
        cols = [j for j in range(m) if mask >> j & 1]
        prod = a[:, cols].sum(axis=1).prod()
        total += prod if (m - len(cols)) % 2 == 0 else -prod
    return complex(total)


def permanent_naive(a: np.ndarray) -> complex:
    """Permanent by direct expansion over all permutations; m <= 6.

    Kept as an independent cross-check of the inclusion-exclusion path.
    """
    a = np.asarray(a)
    m = a.shape[0]
    if m > 6:
        raise ValueError(f"naive permanent limited to order 6, got {m}")
    total = 0j
    for perm, _ in weyl.signed_permutations(tuple(range(m))):
        prod = 1.0 + 0j
        for i, j in enumerate(perm):
            prod *= a[i, j]
        total += prod
    return complex(total)


def _check_e_inputs(l: Sequence[float], x: Sequence[float]):
    l = np.asarray(l, dtype=float)
    x = np.asarray(x, dtype=float)
    if l.shape != x.shape or l.ndim != 1:
        raise ValueError("l and x must be e-vectors of equal length n+1")
    scale = max(1.0, float(np.abs(l).max()))
    if abs(l.sum()) > 1e-9 * scale:
        raise ValueError("l must sum to zero")
    if np.any(l[:-1] < l[1:] - 1e-12 * scale):
        raise ValueError("l must be weakly decreasing (dominant e-coordinates)")
    return l, x


def _exp_matrix(l: np.ndarray, x: np.ndarray) -> np.ndarray:
    return np.exp(2j * np.pi * np.outer(l, x))


def d_plus(l: Sequence[float], x: Sequence[float]) -> complex:
    """Symmetric form: permanent of exp(2*pi*i l_j x_k).

    Equals the full group sum, hence (|W|/|W_lam|) times the C-function of
    the same weight.
    """
    l, x = _check_e_inputs(l, x)
    return permanent(_exp_matrix(l, x))


def d_minus(l: Sequence[float], x: Sequence[float]) -> complex:
    """Antisymmetric form: conventional determinant of the same matrix.

    Equals the S-function for generic weights and vanishes (repeated rows)
    on non-generic ones.
    """
    l, x = _check_e_inputs(l, x)
    return complex(np.linalg.det(_exp_matrix(l, x)))


def d_alt(l: Sequence[float], x: Sequence[float]) -> complex:
    """Alternating form: sum over even permutations only.

    Always equals (d_plus + d_minus)/2, and the E-function at generic
    weights.
    """
    l, x = _check_e_inputs(l, x)
    m = len(l)
    total = 0j
    for perm, sign in weyl.signed_permutations(tuple(range(m))):
        if sign != 1:
            continue
        total += np.exp(2j * np.pi * float(sum(l[i] * x[j] for i, j in enumerate(perm))))
    return complex(total)
