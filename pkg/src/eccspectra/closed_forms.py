"""Closed-form spectra, energies and extremal bounds for tree complements.

Every function is a pure double-precision evaluation.  Notation: ``t3(n, a, b)``
is the diameter-3 double broom built by :func:`eccspectra.graphs.build_t3`,
``t4(n)`` is ``build_dnd(n, 4, 0, n - 5)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

from scipy.optimize import bisect

from .errors import InconsistentParametersError, InvalidOrderError

__all__ = [
    "ClosedFormSpectrum",
    "BoundValue",
    "CUBIC_FORMS",
    "spec_t3_complement",
    "energy_t3_complement",
    "spec_t4_complement",
    "energy_t4_complement",
    "path_adjacency_energy",
    "path_complement_energy",
    "xi1_path_complement",
    "bounds_diam3",
    "energy_bounds_diam3",
    "adjacency_tree_bounds",
    "exceptional_root",
    "tree_ecc_minima",
    "nordhaus_gaddum_bounds",
]


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Eigenvalues with multiplicities, as produced by a formula."""

    pairs: tuple[tuple[float, int], ...]

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[float]:
        """Expanded eigenvalue list, descending."""
        out = [v for v, m in self.pairs for _ in range(m)]
        return sorted(out, reverse=True)

    @property
    def energy(self) -> float:
        return math.fsum(abs(v) * m for v, m in self.pairs)


@dataclass(frozen=True)
class BoundValue:
    value: float
    kind: Literal["lower", "upper", "exact"]
    attainer: str


def _check_t3(n: int, a: int, b: int) -> None:
    if n < 4 or a < 0 or b < a or a + b != n - 4:
        raise InconsistentParametersError(
            f"need n >= 4, b >= a >= 0, a + b = n - 4; got n={n}, a={a}, b={b}"
        )


def _pm_pairs(big: float, small: float, zeros: int) -> ClosedFormSpectrum:
    pairs = [(big, 1), (small, 1)]
    if zeros:
        pairs.append((0.0, zeros))
    pairs += [(-small, 1), (-big, 1)]
    return ClosedFormSpectrum(tuple(pairs))


def spec_t3_complement(n: int, a: int, b: int) -> ClosedFormSpectrum:
    """E-spectrum of the complement of t3(n, a, b): two +/- pairs and ``n - 4`` zeros."""
    _check_t3(n, a, b)
    s = 4 * n + 1
    root = math.sqrt(s * s - 64 * (a + 1) * (b + 1))
    return _pm_pairs(math.sqrt((s + root) / 2), math.sqrt((s - root) / 2), n - 4)


def energy_t3_complement(n: int, a: int, b: int) -> float:
    _check_t3(n, a, b)
    return 2 * math.sqrt(4 * n + 1 + 8 * math.sqrt((a + 1) * (b + 1)))


def _check_t4(n: int) -> None:
    if n < 5:
        raise InvalidOrderError(f"t4(n) needs n >= 5, got n={n}")


def spec_t4_complement(n: int) -> ClosedFormSpectrum:
    _check_t4(n)
    root = 2 * math.sqrt(n * n - 10 * n + 29)
    return _pm_pairs(math.sqrt(2 * n - 2 + root), math.sqrt(2 * n - 2 - root), n - 4)


def energy_t4_complement(n: int) -> float:
    _check_t4(n)
    return 2 * math.sqrt(4 * (n - 1) + 8 * math.sqrt(2 * n - 7))


def path_adjacency_energy(n: int) -> float:
    """Adjacency energy of P_n via the cot/csc closed form."""
    if n < 1:
        raise InvalidOrderError(f"path needs n >= 1, got {n}")
    x = math.pi / (2 * (n + 1))
    if n % 2:
        return 2 * (1 / math.tan(x) - 1)
    return 2 * (1 / math.sin(x) - 1)


def path_complement_energy(n: int) -> float:
    """E-energy of the complement of P_n for n >= 5, where E(P_n^c) = 2A(P_n)."""
    if n <= 4:
        raise InvalidOrderError(
            f"P_{n} has diameter <= 3 so E(P_n^c) != 2A(P_n); use spec_t3_complement(4, 0, 0) for P4"
        )
    return 2 * path_adjacency_energy(n)


def xi1_path_complement(n: int) -> float:
    if n <= 4:
        raise InvalidOrderError(f"closed form needs n >= 5, got {n}")
    return 4 * math.cos(math.pi / (n + 1))


def _balanced(n: int) -> tuple[int, int]:
    a = (n - 4) // 2
    return a, n - 4 - a


def bounds_diam3(n: int) -> dict[str, BoundValue]:
    """Extremes of xi_1 and xi_2 over complements of diameter-3 trees on n vertices."""
    if n < 4:
        raise InvalidOrderError(f"need n >= 4, got {n}")
    s = 4 * n + 1
    skewed = math.sqrt(s * s - 64 * (n - 3))
    balanced = math.sqrt(72 * n - 63 if n % 2 == 0 else 72 * n - 47)
    a, b = _balanced(n)
    return {
        "xi1_max": BoundValue(math.sqrt((s + skewed) / 2), "upper", f"T_{{{n},3}}^{{0,{n - 4}}}"),
        "xi1_min": BoundValue(math.sqrt((s + balanced) / 2), "lower", f"T_{{{n},3}}^{{{a},{b}}}"),
        # halved form; the doubled 2*sqrt(s - skewed) does not match the T3 spectrum
        "xi2_min": BoundValue(math.sqrt((s - skewed) / 2), "lower", f"T_{{{n},3}}^{{0,{n - 4}}}"),
        "xi2_max": BoundValue(math.sqrt((s - balanced) / 2), "upper", f"T_{{{n},3}}^{{{a},{b}}}"),
    }


def energy_bounds_diam3(n: int) -> dict[str, BoundValue]:
    if n < 4:
        raise InvalidOrderError(f"need n >= 4, got {n}")
    a, b = _balanced(n)
    if n % 2 == 0:
        top = 2 * math.sqrt(8 * n - 7)
    else:
        top = 2 * math.sqrt(4 * n + 1 + 4 * math.sqrt(n * n - 4 * n + 3))
    return {
        "energy_min": BoundValue(
            2 * math.sqrt(4 * n + 1 + 8 * math.sqrt(n - 3)), "lower", f"T_{{{n},3}}^{{0,{n - 4}}}"
        ),
        "energy_max": BoundValue(top, "upper", f"T_{{{n},3}}^{{{a},{b}}}"),
    }


# Candidate readings of the cubic whose positive root is lambda_2 of D_{2s+4,5}^{s-1,s-1}.
CUBIC_FORMS: dict[str, Callable[[float, int], float]] = {
    "x^3+x^2-(s+1)x-s": lambda x, s: x**3 + x**2 - (s + 1) * x - s,
    "x^3+x^2-(s+1)-s (literal)": lambda x, s: x**3 + x**2 - (s + 1) - s,
}
RESOLVED_CUBIC = "x^3+x^2-(s+1)x-s"


def exceptional_root(s: int, form: str = RESOLVED_CUBIC) -> float:
    """Unique positive root of the chosen cubic, by bisection on (0, s + 2)."""
    if s < 1:
        raise InconsistentParametersError(f"s must be >= 1, got {s}")
    f = CUBIC_FORMS[form]
    return bisect(f, 0.0, s + 2.0, args=(s,), xtol=1e-14, rtol=4 * 2.0**-52, maxiter=200)


def adjacency_tree_bounds(n: int, s: int | None = None) -> dict[str, BoundValue]:
    """Adjacency-spectrum extremes over trees on n vertices.

    ``lambda2_exceptional`` is included when ``n = 2s + 4`` for some ``s >= 1``
    (or when ``s`` is given explicitly and matches).
    """
    if n < 4:
        raise InvalidOrderError(f"need n >= 4, got {n}")
    out = {
        "lambda1_min": BoundValue(2 * math.cos(math.pi / (n + 1)), "lower", f"P_{n}"),
        "lambda1_max": BoundValue(
            math.sqrt((n - 1 + math.sqrt(n * n - 6 * n + 13)) / 2), "upper", f"T_{{{n},3}}^{{0,{n - 4}}}"
        ),
        "lambda2_min": BoundValue(1.0, "lower", "any tree other than the star and T_{n,3}^{0,n-4}"),
        "lambda2_max": BoundValue(
            math.sqrt((n - 3) / 2),
            "upper",
            "n = 2s+3: T_{n,4}^{s-1,s-1}, T_{n,5}^{s-2,s-1}, T_{n,6}^{s-2,s-2}",
        ),
    }
    if s is None and n % 2 == 0 and n >= 6:
        s = (n - 4) // 2
    if s is not None:
        if s < 1 or n != 2 * s + 4:
            raise InconsistentParametersError(f"exceptional family needs n = 2s + 4 with s >= 1; got n={n}, s={s}")
        out["lambda2_exceptional"] = BoundValue(
            exceptional_root(s), "exact", f"T_{{{n},5}}^{{{s - 1},{s - 1}}}"
        )
    return out


def _tree_xi2_min(n: int) -> float:
    return math.sqrt((13 * n - 35 - math.sqrt(169 * n * n - 974 * n + 1417)) / 2)


def _tree_energy_min(n: int) -> float:
    return 2 * math.sqrt(13 * n - 35 + 8 * math.sqrt(n - 3))


def tree_ecc_minima(n: int) -> dict[str, BoundValue]:
    """Minimum xi_2(T) (n >= 4) and minimum E-energy of T (n >= 5) over non-star trees."""
    if n < 4:
        raise InvalidOrderError(f"need n >= 4, got {n}")
    attainer = f"T_{{{n},3}}^{{0,{n - 4}}}"
    out = {"xi2_min": BoundValue(_tree_xi2_min(n), "lower", attainer)}
    if n >= 5:
        out["energy_min"] = BoundValue(_tree_energy_min(n), "lower", attainer)
    return out


def nordhaus_gaddum_bounds(n: int) -> dict[str, BoundValue]:
    """Lower bounds on xi_2(T) + xi_2(T^c) and E(T) + E(T^c)."""
    if n < 4:
        raise InvalidOrderError(f"need n >= 4, got {n}")
    attainer = f"T_{{{n},3}}^{{0,{n - 4}}}"
    comp_xi2 = math.sqrt((4 * n + 1 - math.sqrt(16 * n * n - 56 * n + 193)) / 2)
    comp_energy = 2 * math.sqrt(4 * n + 1 + 8 * math.sqrt(n - 3))
    return {
        "ng_xi2": BoundValue(_tree_xi2_min(n) + comp_xi2, "lower", attainer),
        "ng_energy": BoundValue(_tree_energy_min(n) + comp_energy, "lower", attainer),
    }
