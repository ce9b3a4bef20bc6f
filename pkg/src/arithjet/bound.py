"""Explicit torsion-coset bounds for subvarieties of abelian varieties.

For X of dimension d in an abelian variety of dimension n, with N_i the
degree of the i-th signed Segre class of the Frobenius-pulled-back
cotangent bundle against (3 theta)^(d-i), the bound is

    p^n  *  p^(2n) 3^n n!  *  sum_i C(2d, d+i) N_i

(coset count, degree of each translate of the maximal abelian
subvariety, degree of the projective bundle). Everything is exact integer
arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .chow import (
    THETA,
    AmbientSpec,
    CycleClass,
    IntersectionTable,
    ci_cotangent_segre,
    evaluate,
    restrict_to_ci,
)
from .delta import is_prime
from .errors import HypothesisViolation, InvalidInput, InvariantViolation

__all__ = [
    "BoundReport",
    "SegreDegreeVector",
    "buium_curve_bound",
    "complete_intersection_bound",
    "curve_bound_closed_form",
    "interior_degree",
    "theorem_b_bound",
]

BASE_ASSUMPTIONS = (
    "X_0 has ample cotangent bundle",
    "p is a prime of good reduction for X and A",
    "rho^* O(3 Theta_0) (x) O(1) is very ample on P(E_A0)",
)


@dataclass(frozen=True)
class SegreDegreeVector:
    """``N_0..N_d``: signed Segre degrees against powers of 3 theta on X."""

    d: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if self.d < 0:
            raise InvalidInput(f"dimension must be non-negative, got {self.d}")
        if len(entries) != self.d + 1:
            raise InvalidInput(
                f"expected {self.d + 1} Segre degrees for d = {self.d}, got {len(entries)}"
            )
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InvalidInput(f"Segre degrees must be integers, got {x!r}")
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class BoundReport:
    p: int
    n: int
    d: int
    segre: SegreDegreeVector
    interior: int
    coset_constant: int
    translate_factor: int
    bound: int
    warnings: tuple = ()
    assumptions: tuple = field(default=BASE_ASSUMPTIONS)

    @property
    def envelope(self) -> int:
        return self.coset_constant * self.translate_factor

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "d": self.d,
            "segre_degrees": [str(x) for x in self.segre.entries],
            "interior": str(self.interior),
            "coset_constant": str(self.coset_constant),
            "translate_factor": str(self.translate_factor),
            "bound": str(self.bound),
            "warnings": list(self.warnings),
            "assumptions": list(self.assumptions),
        }


def interior_degree(d: int, N: SegreDegreeVector | Sequence[int]) -> int:
    """``sum_i C(2d, d+i) N_i``: the degree of P(E_X) under the polarization."""
    if not isinstance(N, SegreDegreeVector):
        N = SegreDegreeVector(d, tuple(N))
    elif N.d != d:
        raise InvalidInput(f"Segre vector is for d = {N.d}, not {d}")
    return sum(math.comb(2 * d, d + i) * x for i, x in enumerate(N.entries))


def _check_prime(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidInput(f"p must be an integer, got {p!r}")
    if p == 2 or not is_prime(p):
        raise InvalidInput(f"p = {p} must be an odd prime")


def theorem_b_bound(
    p: int,
    n: int,
    d: int,
    N: SegreDegreeVector | Sequence[int],
    genus: Optional[int] = None,
    warnings: Sequence[str] = (),
) -> BoundReport:
    """Assemble the full bound from the Segre degrees.

    If ``genus`` is given (a smooth curve of that genus lies on X) the
    arithmetic hypothesis ``p > 2 d^2 g`` is enforced.
    """
    _check_prime(p)
    if isinstance(n, bool) or not isinstance(n, int) or isinstance(d, bool) or not isinstance(d, int):
        raise InvalidInput("n and d must be integers")
    if not 1 <= d <= n:
        raise InvalidInput(f"need 1 <= d <= n, got d = {d}, n = {n}")
    if not isinstance(N, SegreDegreeVector):
        N = SegreDegreeVector(d, tuple(N))
    warnings = list(warnings)
    assumptions = list(BASE_ASSUMPTIONS)
    if genus is not None:
        if genus < 2:
            raise InvalidInput(f"curve genus must be at least 2, got {genus}")
        if p <= 2 * d * d * genus:
            raise HypothesisViolation(
                f"p = {p} must exceed 2 d^2 g = {2 * d * d * genus} (d = {d}, g = {genus})"
            )
    else:
        assumptions.append("X contains a smooth curve of genus g >= 2 with p > 2 d^2 g")
    interior = interior_degree(d, N)
    if interior <= 0:
        warnings.append(f"interior degree {interior} is not positive; check the Segre degrees")
    coset = p**n
    translate = p ** (2 * n) * 3**n * math.factorial(n)
    return BoundReport(
        p=p,
        n=n,
        d=d,
        segre=N,
        interior=interior,
        coset_constant=coset,
        translate_factor=translate,
        bound=coset * translate * interior,
        warnings=tuple(warnings),
        assumptions=tuple(assumptions),
    )


def curve_bound_closed_form(p: int, g: int) -> int:
    return p ** (3 * g) * 3**g * math.factorial(g) * (6 * g + p * (2 * g - 2))


def buium_curve_bound(p: int, g: int) -> BoundReport:
    """Bound for a genus-g curve in its Jacobian (n = g, d = 1)."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 2:
        raise InvalidInput(f"genus must be an integer >= 2, got {g!r}")
    _check_prime(p)
    if p <= 2 * g:
        raise HypothesisViolation(f"p = {p} must exceed 2g = {2 * g} for a genus-{g} curve")
    # deg_Theta of a curve in its Jacobian is g; c_1 of F^* Omega is p(2g - 2).
    N = SegreDegreeVector(1, (3 * g, p * (2 * g - 2)))
    report = theorem_b_bound(p, g, 1, N, genus=g)
    if report.interior != 6 * g + p * (2 * g - 2):
        raise InvariantViolation(f"interior degree {report.interior} != 6g + p(2g-2)")
    return report


def ci_segre_degrees(
    p: int, ambient: AmbientSpec, hyps: Sequence[str], table: IntersectionTable
) -> SegreDegreeVector:
    """``N_i = (-1)^i deg(s_i(F^* Omega_X) . (3 theta)^(d-i) . [X])`` for X = cap H_j."""
    d = ambient.n - len(hyps)
    segre = ci_cotangent_segre(ambient, hyps, p)
    theta = CycleClass.symbol(ambient, THETA)
    entries = []
    for i in range(d + 1):
        cls = segre[i] * (theta ** (d - i)).scale(3 ** (d - i))
        entries.append((-1) ** i * evaluate(restrict_to_ci(cls, hyps), table))
    return SegreDegreeVector(d, tuple(entries))


def complete_intersection_bound(
    p: int,
    ambient: AmbientSpec,
    hyps: Sequence[str],
    table: IntersectionTable,
) -> BoundReport:
    """Bound for a complete intersection of the hypersurfaces ``hyps``.

    Genericity of the hypersurfaces cannot be checked; ``c <= n/2`` only
    produces a warning.
    """
    _check_prime(p)
    if table.ambient != ambient:
        raise InvalidInput("intersection table does not match the ambient spec")
    if THETA not in ambient.symbols:
        raise InvalidInput(f"ambient spec must declare the {THETA!r} symbol")
    if THETA in hyps:
        raise InvalidInput(f"{THETA!r} cannot be one of the hypersurfaces")
    c, n = len(hyps), ambient.n
    d = n - c
    if d < 1:
        raise InvalidInput(f"{c} hypersurfaces in dimension {n} leave no positive-dimensional X")
    warnings = []
    if 2 * c <= n:
        warnings.append(
            f"c = {c} <= n/2 = {n / 2:g}: ampleness of the cotangent bundle is not guaranteed"
        )
    N = ci_segre_degrees(p, ambient, hyps, table)
    report = theorem_b_bound(p, n, d, N, warnings=warnings)
    assumptions = report.assumptions + (
        "H_1..H_c are general, sufficiently ample, of large and divisible enough degree",
        "X remains a smooth complete intersection modulo p",
    )
    return BoundReport(**{**report.__dict__, "assumptions": assumptions})
