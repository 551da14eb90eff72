"""Verification harness: torus orthogonality, quadrature cross-checks,
Laplacian eigenvalue tests, and symmetry identities.

Orthogonality is tested on the full torus [0,1]^n in alpha coordinates.
There the inner product of two formal exponential sums reduces to an exact
integer (distinct lattice exponentials integrate to zero), so the diagonal
values read off directly as orbit sizes for C, (n+1)! for S and the
even-orbit size for E, with no fundamental-region volume factor involved.

Randomized checks draw from a numpy Generator seeded with DEFAULT_SEED
unless told otherwise, and reports record the seed used.
"""
from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

import numpy as np

from . import chebyshev, exp_ring, lie, orbit_functions, weyl
from .exp_ring import ExpSum, exp_sum

DEFAULT_SEED = 1729


class AliasingWarning(UserWarning):
    """Quadrature grid below the Nyquist bound; aliasing is possible."""


def torus_inner_product(a: ExpSum, b: ExpSum) -> int:
    """Exact torus integral of a * conj(b): sum of matching coefficients.

    Integer coefficients make the conjugation trivial; only weights shared
    by both supports contribute.
    """
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    small, large = (a.terms, b.terms) if len(a.terms) <= len(b.terms) else (b.terms, a.terms)
    return sum(c * large[w] for w, c in small.items() if w in large)


def nyquist_points(a: ExpSum, b: ExpSum) -> int:
    """Smallest grid size per axis guaranteeing exact rectangle quadrature."""
    return 2 * max(a.support_bound(), b.support_bound()) + 1


@dataclass
class OrthogonalityReport:
    """Outcome of pairing every orbit sum of one kind against every other."""

    kind: str
    rank: int
    coord_bound: int
    pairs_tested: int
    max_deviation: int
    expected_diagonal: str
    passed: bool

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "coord_bound": self.coord_bound,
            "pairs_tested": self.pairs_tested,
            "max_deviation": self.max_deviation,
            "expected_diagonal": self.expected_diagonal,
            "passed": self.passed,
        }


def orthogonality_report(kind: str, rank: int, coord_bound: int) -> OrthogonalityReport:
    """Exact pairwise torus products for one function family.

    Diagonal entries must equal the orbit size (C), the Weyl group order
    (S), or the even-orbit size (E); off-diagonal entries must vanish.
    """
    if kind == "S":
        labels = strictly_dominant_weights(rank, coord_bound)
        diag = lambda lam: factorial(rank + 1)
        expected = f"{rank + 1}!"
    elif kind == "C":
        labels = dominant_weights(rank, coord_bound)
        diag = lambda lam: weyl.orbit(lam).size
        expected = "orbit size"
    elif kind == "E":
        labels = dominant_weights(rank, coord_bound)
        diag = lambda lam: len(weyl.orbit(lam).even_points)
        expected = "even-orbit size"
    else:
        raise ValueError(f"kind must be C, S or E, got {kind!r}")
    sums = {lam: exp_sum(lam, kind) for lam in labels}
    worst = 0
    pairs = 0
    for a, b in itertools.combinations_with_replacement(labels, 2):
        pairs += 1
        expect = diag(a) if a == b else 0
        worst = max(worst, abs(torus_inner_product(sums[a], sums[b]) - expect))
    return OrthogonalityReport(
        kind=kind,
        rank=rank,
        coord_bound=coord_bound,
        pairs_tested=pairs,
        max_deviation=worst,
        expected_diagonal=expected,
        passed=worst == 0,
    )


def _grid_values(s: ExpSum, n_points: int) -> np.ndarray:
    n = s.rank
    axis = np.arange(n_points) / n_points
    mesh = np.meshgrid(*([axis] * n), indexing="ij")
    pts = np.stack([m.reshape(-1) for m in mesh], axis=1)
    weights = np.array(list(s.terms.keys()), dtype=float).reshape(len(s.terms), n)
    coeffs = np.array(list(s.terms.values()), dtype=float)
    return np.exp(2j * np.pi * (pts @ weights.T)) @ coeffs


def quadrature_inner_product(
    kind: str, lam_a: Sequence[int], lam_b: Sequence[int], n_points: int
) -> complex:
    """Rectangle-rule inner product on the torus with n_points per axis.

    Exact for trigonometric sums once n_points exceeds twice the largest
    frequency; below that bound an AliasingWarning is issued and the value
    may fold distinct frequencies together.
    """
    a = exp_sum(lam_a, kind)
    b = exp_sum(lam_b, kind)
    if n_points < nyquist_points(a, b):
        warnings.warn(
            f"{n_points} points per axis is below the alias-free bound "
            f"{nyquist_points(a, b)}",
            AliasingWarning,
            stacklevel=2,
        )
    va = _grid_values(a, n_points)
    vb = _grid_values(b, n_points)
    return complex((va * vb.conj()).mean())


# ---------------------------------------------------------------------------
# Laplacian eigenvalue checks.

def hyperplane_frame(n: int, reverse: bool = False) -> np.ndarray:
    """Orthonormal frame of the zero-sum hyperplane in R^{n+1}.

    Gram-Schmidt on the difference vectors e_i - e_{i+1} (reversed order
    when asked; the Laplacian is frame-independent and tests exploit that).
    """
    basis = [np.eye(n + 1)[i] - np.eye(n + 1)[i + 1] for i in range(n)]
    if reverse:
        basis = basis[::-1]
    frame: list[np.ndarray] = []
    for v in basis:
        w = v.astype(float)
        for u in frame:
            w = w - (w @ u) * u
        frame.append(w / np.linalg.norm(w))
    return np.array(frame)


_EVALUATORS = {
    "C": orbit_functions.eval_c,
    "S": orbit_functions.eval_s,
    "E": orbit_functions.eval_e,
}


def fd_laplacian(
    kind: str,
    lam: Sequence[int],
    x_e: np.ndarray,
    h: float,
    frame: np.ndarray | None = None,
) -> complex:
    """Central-difference Laplacian along an orthonormal frame of the
    zero-sum hyperplane."""
    f = _EVALUATORS[kind]
    n = len(lam)
    if frame is None:
        frame = hyperplane_frame(n)
    center = f(lam, x_e, basis="e")
    total = 0j
    for v in frame:
        total += f(lam, x_e + h * v, basis="e") - 2 * center + f(lam, x_e - h * v, basis="e")
    return total / (h * h)


def laplacian_eigenvalue_check(
    kind: str,
    lam: Sequence[int],
    x: Sequence[float] | None = None,
    h: float = 1e-3,
    rng: np.random.Generator | None = None,
    retries: int = 8,
    min_abs: float | None = None,
    frame: np.ndarray | None = None,
) -> float | None:
    """Relative error of the finite-difference eigenvalue identity.

    The orbit functions satisfy laplacian(f) = -4*pi^2 <lam,lam> f; the
    check returns |fd_laplacian(f) + 4*pi^2 <lam,lam> f| normalized by
    4*pi^2 <lam,lam> |f|.  Points where |f| is not bounded away from zero
    are re-drawn (the ratio is meaningless there); None signals that every
    retry landed on a near-zero of f.
    """
    if not 0 < h <= 0.01:
        raise ValueError("step h must lie in (0, 0.01]")
    lam = lie.as_weight(lam)
    n = len(lam)
    norm = float(lie.norm_sq(lam))
    if norm == 0.0:
        return 0.0
    if min_abs is None:
        # Orbit-size fraction below which the relative error is dominated by
        # the fluctuation of |f| rather than by the h^2 truncation term.
        min_abs = 0.05 * weyl.orbit(weyl.dominant_representative(lam)[0]).size
    if rng is None:
        rng = np.random.default_rng(DEFAULT_SEED)
    f = _EVALUATORS[kind]
    candidates: list[np.ndarray] = []
    if x is not None:
        candidates.append(np.asarray(x, dtype=float))
    while len(candidates) < retries + (x is not None):
        candidates.append(np.asarray(lie.alpha_to_e_point(rng.random(n)), dtype=float))
    factor = 4 * np.pi * np.pi * norm
    for x_e in candidates:
        val = f(lam, x_e, basis="e")
        if abs(val) < min_abs:
            continue
        lap = fd_laplacian(kind, lam, x_e, h, frame=frame)
        return float(abs(lap + factor * val) / (factor * abs(val)))
    return None


# ---------------------------------------------------------------------------
# Symmetry identities.

@dataclass
class SymmetryReport:
    lam: tuple[int, ...]
    trials: int
    seed: int
    scale: float
    max_c_dev: float = 0.0
    max_s_dev: float = 0.0
    max_e_dev: float = 0.0
    tolerance: float = 1e-12

    @property
    def passed(self) -> bool:
        bound = self.tolerance * self.scale
        return max(self.max_c_dev, self.max_s_dev, self.max_e_dev) < bound

    def as_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "trials": self.trials,
            "seed": self.seed,
            "scale": self.scale,
            "max_c_dev": self.max_c_dev,
            "max_s_dev": self.max_s_dev,
            "max_e_dev": self.max_e_dev,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def symmetry_suite(
    lam: Sequence[int], trials: int = 100, seed: int = DEFAULT_SEED,
    tolerance: float = 1e-12,
) -> SymmetryReport:
    """Reflection identities at random points: C invariant, S flips sign,
    E unchanged when the label is reflected.

    Deviations are compared against tolerance * orbit size (each value is a
    sum of that many unit exponentials).
    """
    lam = lie.as_weight(lam)
    if not lie.is_dominant(lam):
        raise ValueError(f"symmetry suite requires a dominant weight, got {lam}")
    n = len(lam)
    orb = weyl.orbit(lam)
    strict = lie.is_strictly_dominant(lam)
    rng = np.random.default_rng(seed)
    report = SymmetryReport(lam=lam, trials=trials, seed=seed, scale=float(orb.size),
                            tolerance=tolerance)
    for _ in range(trials):
        x_e = np.asarray(lie.alpha_to_e_point(rng.random(n)), dtype=float)
        c0 = orbit_functions.eval_c(lam, x_e, basis="e")
        s0 = orbit_functions.eval_s(lam, x_e, basis="e") if strict else 0j
        e0 = orbit_functions.eval_e(lam, x_e, basis="e")
        for i in range(1, n + 1):
            rx = np.asarray(weyl.reflect(i, tuple(x_e)), dtype=float)
            report.max_c_dev = max(
                report.max_c_dev, abs(orbit_functions.eval_c(lam, rx, basis="e") - c0)
            )
            if strict:
                report.max_s_dev = max(
                    report.max_s_dev,
                    abs(orbit_functions.eval_s(lam, rx, basis="e") + s0),
                )
            refl_lam = weyl.reflect_weight(i, lam)
            report.max_e_dev = max(
                report.max_e_dev,
                abs(orbit_functions.eval_e(refl_lam, x_e, basis="e") - e0),
            )
    return report


# ---------------------------------------------------------------------------
# Named verification suites (consumed by the CLI).

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def render_text(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed})"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f"  {c.detail}" if c.detail else ""
            lines.append(f"  [{status}] {c.name}{suffix}")
        lines.append(f"  => {'all checks passed' if self.passed else 'FAILURES PRESENT'}")
        return "\n".join(lines)


def dominant_weights(n: int, coord_bound: int) -> list[tuple[int, ...]]:
    return [tuple(w) for w in itertools.product(range(coord_bound + 1), repeat=n)]


def strictly_dominant_weights(n: int, coord_bound: int) -> list[tuple[int, ...]]:
    return [tuple(w) for w in itertools.product(range(1, coord_bound + 1), repeat=n)]


def run_ortho_suite(
    rank_bound: int = 3, coord_bound: int = 3, seed: int = DEFAULT_SEED,
    n_points: int = 16,
) -> SuiteReport:
    """Exact torus orthogonality for C/S/E plus quadrature cross-checks."""
    report = SuiteReport("ortho", seed)
    for n in range(1, rank_bound + 1):
        for kind in ("C", "S", "E"):
            rep = orthogonality_report(kind, n, coord_bound)
            report.add(
                f"A{n} {kind}-orthogonality exact (diagonal = {rep.expected_diagonal})",
                rep.passed,
                f"{rep.pairs_tested} pairs, max deviation {rep.max_deviation}",
            )

        if n >= 2:
            c_sums = {w: exp_sum(w, "C") for w in dominant_weights(n, coord_bound)}
            max_dev = _quadrature_gram_deviation(c_sums, n_points)
            report.add(
                f"A{n} quadrature N={n_points} matches exact values",
                max_dev < 1e-9,
                f"max deviation {max_dev:.3e}",
            )

    # Negative control: a grid below the bound must alias.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AliasingWarning)
        aliased = quadrature_inner_product("C", (3,), (3,), 6)
    report.add(
        "undersampled grid demonstrates aliasing",
        abs(aliased - 2) > 0.5,
        f"N=6 diagonal value {aliased.real:.6f} (exact 2)",
    )
    return report


def _quadrature_gram_deviation(sums: dict, n_points: int) -> float:
    labels = list(sums)
    values = np.stack([_grid_values(sums[w], n_points) for w in labels])
    gram = (values @ values.conj().T) / values.shape[1]
    expect = np.zeros_like(gram)
    for i, w in enumerate(labels):
        expect[i, i] = torus_inner_product(sums[w], sums[w])
        for j in range(i + 1, len(labels)):
            expect[i, j] = expect[j, i] = torus_inner_product(sums[w], sums[labels[j]])
    return float(np.abs(gram - expect).max())


def _laplace_cases(rank_bound: int) -> list[tuple[str, tuple[int, ...]]]:
    cases = []
    for n in range(1, rank_bound + 1):
        rho = (1,) * n
        cases.append(("C", rho))
        cases.append(("S", rho))
        cases.append(("E", rho))
        for j in range(n):
            cases.append(("C", tuple(2 if k == j else 0 for k in range(n))))
    return cases


def run_laplace_suite(
    rank_bound: int = 3, seed: int = DEFAULT_SEED, points: int = 20, h: float = 1e-3
) -> SuiteReport:
    """Finite-difference eigenvalue identity and its h^2 convergence rate."""
    report = SuiteReport("laplace", seed)
    rng = np.random.default_rng(seed)
    for kind, lam in _laplace_cases(rank_bound):
        n = len(lam)
        f = _EVALUATORS[kind]
        factor = 4 * np.pi * np.pi * float(lie.norm_sq(lam))
        min_abs = 0.05 * weyl.orbit(lam).size
        errs_h, errs_half = [], []
        attempts = 0
        while len(errs_h) < points and attempts < 20 * points:
            attempts += 1
            x = np.asarray(lie.alpha_to_e_point(rng.random(n)), dtype=float)
            val = f(lam, x, basis="e")
            if abs(val) < min_abs:
                continue
            # Both step sizes at the same point, or the ratio is meaningless.
            e1 = abs(fd_laplacian(kind, lam, x, h) + factor * val) / (factor * abs(val))
            e2 = abs(fd_laplacian(kind, lam, x, h / 2) + factor * val) / (factor * abs(val))
            errs_h.append(e1)
            errs_half.append(e2)
        name = f"A{n} {kind}_{''.join(map(str, lam))}"
        if not errs_h:
            report.add(f"{name} eigenvalue", False, "all points degenerate")
            continue
        worst = max(errs_h)
        report.add(
            f"{name} relative error < 1e-4 at h={h:g}",
            worst < 1e-4,
            f"max {worst:.3e} over {len(errs_h)} points",
        )
        ratio = max(errs_h) / max(errs_half)
        report.add(
            f"{name} halving h shrinks error ~4x",
            3.0 <= ratio <= 5.0,
            f"ratio {ratio:.2f}",
        )
    # Frame independence at one deterministic case: two frames agree up to
    # the h^2 truncation term, so normalize like the eigenvalue check.
    lam = (1,) * min(2, rank_bound)
    x = np.asarray(lie.alpha_to_e_point(np.random.default_rng(seed).random(len(lam))), float)
    l1 = fd_laplacian("C", lam, x, h, frame=hyperplane_frame(len(lam)))
    l2 = fd_laplacian("C", lam, x, h, frame=hyperplane_frame(len(lam), reverse=True))
    scale = 4 * np.pi * np.pi * float(lie.norm_sq(lam)) * abs(
        orbit_functions.eval_c(lam, x, basis="e")
    )
    report.add(
        "Laplacian independent of the orthonormal frame",
        abs(l1 - l2) < 1e-4 * scale,
        f"relative delta {abs(l1 - l2) / scale:.3e}",
    )
    return report


def run_symmetry_suite(
    rank_bound: int = 3, coord_bound: int = 3, seed: int = DEFAULT_SEED,
    trials: int = 100, tolerance: float = 1e-11,
) -> SuiteReport:
    report = SuiteReport("symmetry", seed)
    rng = np.random.default_rng(seed)
    for n in range(1, rank_bound + 1):
        lams = {(1,) * n}
        pool = strictly_dominant_weights(n, coord_bound)
        idx = rng.choice(len(pool), size=min(2, len(pool)), replace=False)
        lams.update(pool[i] for i in idx)
        lams.add(tuple(coord_bound if k == 0 else 0 for k in range(n)))
        for lam in sorted(lams):
            rep = symmetry_suite(lam, trials=trials, seed=seed, tolerance=tolerance)
            report.add(
                f"A{n} symmetry at {lam}",
                rep.passed,
                f"max dev C {rep.max_c_dev:.2e} S {rep.max_s_dev:.2e} "
                f"E {rep.max_e_dev:.2e} (scale {rep.scale:g})",
            )
    return report


def run_chebyshev_suite(max_degree: int = 20) -> SuiteReport:
    """Rank-1 reduction to the classical polynomials, exactly."""
    report = SuiteReport("chebyshev", DEFAULT_SEED)
    ok_t = all(
        chebyshev.a1_z_coefficients(chebyshev.poly_t((m,)))
        == chebyshev.classical_t(m).scale(2).coeffs
        for m in range(1, max_degree + 1)
    )
    report.add(
        f"T-polynomials reduce to doubled first kind, m=1..{max_degree}", ok_t
    )
    report.add(
        "T at m=0 is the unit (distinct-point normalization)",
        chebyshev.a1_z_coefficients(chebyshev.poly_t((0,))) == (1,),
    )
    ok_u = all(
        chebyshev.a1_z_coefficients(chebyshev.poly_u((m,)))
        == chebyshev.classical_u(m).coeffs
        for m in range(0, max_degree + 1)
    )
    report.add(f"U-polynomials reduce to second kind, m=0..{max_degree}", ok_u)
    ok_ids = all(
        chebyshev.check_classical_identities(m)["all"] for m in range(max_degree + 1)
    )
    report.add(f"classical identity suite exact, m<= {max_degree}", ok_ids)
    fixed = {
        (2,): {(2,): 1, (0,): -2},
        (3,): {(3,): 1, (1,): -3},
        (4,): {(4,): 1, (2,): -4, (0,): 2},
    }
    ok_table = all(chebyshev.poly_t(k).terms == v for k, v in fixed.items())
    fixed_u = {
        (2,): {(2,): 1, (0,): -1},
        (3,): {(3,): 1, (1,): -2},
        (4,): {(4,): 1, (2,): -3, (0,): 1},
    }
    ok_table &= all(chebyshev.poly_u(k).terms == v for k, v in fixed_u.items())
    report.add("fixed low-degree coefficient tables", ok_table)
    return report


def run_detforms_suite(
    rank_bound: int = 4, seed: int = DEFAULT_SEED, samples: int = 100,
    coord_bound: int = 3, tolerance: float = 1e-9,
) -> SuiteReport:
    """Permanent/determinant/alternating forms against C, S, E functions."""
    report = SuiteReport("detforms", seed)
    rng = np.random.default_rng(seed)
    for n in range(1, rank_bound + 1):
        worst = {"plus": 0.0, "minus": 0.0, "alt": 0.0, "half": 0.0}
        for _ in range(samples):
            lam = tuple(int(c) for c in rng.integers(1, coord_bound + 1, size=n))
            x = np.asarray(lie.alpha_to_e_point(rng.random(n)), dtype=float)
            l_e = np.array([float(v) for v in lie.omega_to_e(lam)])
            k = weyl.stabilizer_order(lam)
            dp = orbit_functions.d_plus(l_e, x)
            dm = orbit_functions.d_minus(l_e, x)
            da = orbit_functions.d_alt(l_e, x)
            worst["plus"] = max(
                worst["plus"], abs(dp - k * orbit_functions.eval_c(lam, x, basis="e"))
            )
            worst["minus"] = max(
                worst["minus"], abs(dm - orbit_functions.eval_s(lam, x, basis="e"))
            )
            worst["alt"] = max(
                worst["alt"], abs(da - orbit_functions.eval_e(lam, x, basis="e"))
            )
            worst["half"] = max(worst["half"], abs(da - (dp + dm) / 2))
        report.add(
            f"A{n} permanent form = stabilizer * C",
            worst["plus"] < tolerance, f"max dev {worst['plus']:.3e}",
        )
        report.add(
            f"A{n} determinant form = S",
            worst["minus"] < tolerance, f"max dev {worst['minus']:.3e}",
        )
        report.add(
            f"A{n} alternating form = E",
            worst["alt"] < tolerance, f"max dev {worst['alt']:.3e}",
        )
        report.add(
            f"A{n} alternating = (permanent + determinant)/2",
            worst["half"] < tolerance, f"max dev {worst['half']:.3e}",
        )

        if n >= 2:
            # On a chamber wall the permanent form picks up the stabilizer
            # order and the determinant form vanishes outright.
            wall = tuple(2 if k == 0 else 0 for k in range(n))
            k = weyl.stabilizer_order(wall)
            l_e = np.array([float(v) for v in lie.omega_to_e(wall)])
            dev_plus = dev_minus = dev_half = 0.0
            for _ in range(10):
                x = np.asarray(lie.alpha_to_e_point(rng.random(n)), dtype=float)
                dp = orbit_functions.d_plus(l_e, x)
                dm = orbit_functions.d_minus(l_e, x)
                da = orbit_functions.d_alt(l_e, x)
                dev_plus = max(
                    dev_plus,
                    abs(dp - k * orbit_functions.eval_c(wall, x, basis="e")),
                )
                dev_minus = max(dev_minus, abs(dm))
                dev_half = max(dev_half, abs(da - (dp + dm) / 2))
            report.add(
                f"A{n} wall weight {wall}: permanent = {k} * C, determinant = 0",
                max(dev_plus, dev_minus, dev_half) < tolerance,
                f"max dev {max(dev_plus, dev_minus, dev_half):.3e}",
            )
    return report


SUITES = {
    "ortho": run_ortho_suite,
    "laplace": run_laplace_suite,
    "symmetry": run_symmetry_suite,
    "chebyshev": lambda **kw: run_chebyshev_suite(),
    "detforms": run_detforms_suite,
}


def run_suite(
    name: str, rank_bound: int | None = None, coord_bound: int | None = None,
    seed: int = DEFAULT_SEED,
) -> list[SuiteReport]:
    """Run one named suite, or all of them; returns one report per suite."""
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {list(SUITES)} or 'all'")
        kwargs: dict = {}
        if suite in ("ortho", "laplace", "symmetry", "detforms"):
            kwargs["seed"] = seed
        if rank_bound is not None and suite in ("ortho", "laplace", "symmetry", "detforms"):
            kwargs["rank_bound"] = rank_bound
        if coord_bound is not None and suite in ("ortho", "symmetry", "detforms"):
            kwargs["coord_bound"] = coord_bound
        reports.append(SUITES[suite](**kwargs))
    return reports
