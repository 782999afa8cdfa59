"""Dense symmetric eigenvalues by cyclic Jacobi rotations, and spectral statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AsymmetricMatrixError

__all__ = [
    "DEFAULT_GROUP_TOL",
    "Spectrum",
    "GroupedSpectrum",
    "jacobi_eigenvalues",
    "eigenvalues",
    "energy",
    "xi",
    "group",
    "is_symmetric_about_origin",
]

DEFAULT_GROUP_TOL = 1e-7
_MAX_SWEEPS = 100


def jacobi_eigenvalues(m: np.ndarray, rel_tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, unsorted (diagonal after convergence).

    Sweeps rows in cyclic order, annihilating each off-diagonal pair with a
    Rutishauser-style rotation, until the off-diagonal Frobenius norm drops
    below ``rel_tol * (1 + ||m||_F)``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise AsymmetricMatrixError("matrix is not exactly symmetric")
    n = len(a)
    threshold = rel_tol * (1.0 + np.linalg.norm(a))
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        if np.linalg.norm(a[offdiag]) <= threshold:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(diff) > 1e150 * abs(apq):
                    t = apq / diff  # small-angle limit of 1 / (2 theta)
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p].copy()
                rq = a[q].copy()
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise RuntimeError(f"Jacobi did not converge in {_MAX_SWEEPS} sweeps")


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted in descending order."""

    values: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def spectral_radius(self) -> float:
        return self.values[0]

    @property
    def second_largest(self) -> float:
        return self.values[1]

    @property
    def least(self) -> float:
        return self.values[-1]

    @property
    def energy(self) -> float:
        return energy(self)

    def xi(self, k: int) -> float:
        return xi(self, k)


@dataclass(frozen=True)
class GroupedSpectrum:
    pairs: tuple[tuple[float, int], ...]

    def multiplicity(self, value: float, tol: float = DEFAULT_GROUP_TOL) -> int:
        return sum(m for v, m in self.pairs if abs(v - value) <= tol)


def eigenvalues(m: np.ndarray) -> Spectrum:
    raw = jacobi_eigenvalues(m)
    # stable sort keeps ties in diagonal order
    order = sorted(range(len(raw)), key=lambda i: -raw[i])
    return Spectrum(tuple(float(raw[i]) for i in order))


def energy(s: Spectrum) -> float:
    return math.fsum(abs(x) for x in s.values)


def xi(s: Spectrum, k: int) -> float:
    """k-th largest eigenvalue, 1-based."""
    if not 1 <= k <= s.n:
        raise IndexError(f"eigenvalue index {k} outside 1..{s.n}")
    return s.values[k - 1]


def group(s: Spectrum, tol: float = DEFAULT_GROUP_TOL) -> GroupedSpectrum:
    """Merge runs of consecutive eigenvalues closer than ``tol``; each group reports its mean."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    runs: list[list[float]] = []
    for x in s.values:
        if runs and runs[-1][-1] - x <= tol:
            runs[-1].append(x)
        else:
            runs.append([x])
    return GroupedSpectrum(tuple((math.fsum(r) / len(r), len(r)) for r in runs))


def is_symmetric_about_origin(s: Spectrum, tol: float = 1e-8) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return all(abs(x + y) <= tol for x, y in zip(s.values, reversed(s.values)))
