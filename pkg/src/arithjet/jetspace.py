"""Finite presentations of arithmetic jet algebras.

For an affine scheme cut out by f_1, ..., f_s in base variables x_1..x_m,
the order-r jet algebra is presented on the jet variables x_i@k (k <= r)
modulo the generators delta^k f_j. Presentations are compared
syntactically; equality of ideals under a change of generators is not
decided, and no p-adic completion is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .delta import DeltaContext, delta
from .errors import InvalidInput
from .polyring import Polynomial, Variable

__all__ = [
    "JetPresentation",
    "SpecialFiberPresentation",
    "jet_presentation",
    "prolongation_commutation_check",
    "special_fiber",
]


@dataclass(frozen=True)
class JetPresentation:
    p: int
    r: int
    base_vars: tuple
    generators: tuple  # generators[k] is the tuple (delta^k f_1, ..., delta^k f_s)

    @property
    def variables(self) -> tuple:
        return tuple(Variable(name, k) for k in range(self.r + 1) for name in self.base_vars)

    @property
    def num_generators(self) -> int:
        return sum(len(g) for g in self.generators)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "base_vars": list(self.base_vars),
            "generators": [[str(f) for f in level] for level in self.generators],
        }


@dataclass(frozen=True)
class SpecialFiberPresentation(JetPresentation):
    """Same layout, with every coefficient reduced into [0, p-1]."""

    def to_json(self) -> dict:
        out = super().to_json()
        out["special_fiber"] = True
        return out


def _base_names(generators: Iterable[Polynomial]) -> list:
    return sorted({v.name for f in generators for v in f.variables})


def jet_presentation(
    generators: Sequence[Polynomial],
    ctx: DeltaContext,
    r: int,
    base_vars: Optional[Sequence[str]] = None,
) -> JetPresentation:
    """Generators ``delta^k f_j`` for 0 <= k <= r, grouped by k, in input order.

    ``base_vars`` fixes the ambient coordinates; it defaults to the base
    names occurring in ``generators`` and must be given for the zero ideal
    if the ambient space matters.
    """
    if not isinstance(r, int) or r < 0:
        raise InvalidInput(f"jet order must be a non-negative integer, got {r!r}")
    gens = tuple(generators)
    for f in gens:
        if f.max_order > 0:
            raise InvalidInput(f"generator {f} involves jet variables of positive order")
    names = _base_names(gens)
    if base_vars is None:
        base_vars = names
    else:
        base_vars = list(base_vars)
        if len(set(base_vars)) != len(base_vars):
            raise InvalidInput("base variables must be distinct")
        for name in base_vars:
            Variable(name)
        stray = sorted(set(names) - set(base_vars))
        if stray:
            raise InvalidInput(f"generators use undeclared variables {stray}")
    levels = [gens]
    for _ in range(r):
        levels.append(tuple(delta(f, ctx) for f in levels[-1]))
    return JetPresentation(ctx.p, r, tuple(base_vars), tuple(levels))


def prolongation_commutation_check(pres: JetPresentation, ctx: DeltaContext) -> bool:
    """True iff level k+1 is exactly delta applied to level k, for every k < r."""
    if ctx.p != pres.p:
        return False
    if len(pres.generators) != pres.r + 1:
        return False
    s = len(pres.generators[0]) if pres.generators else 0
    if any(len(level) != s for level in pres.generators):
        return False
    for lower, upper in zip(pres.generators, pres.generators[1:]):
        for f, g in zip(lower, upper):
            if delta(f, ctx) != g:
                return False
    return True


def special_fiber(pres: JetPresentation) -> SpecialFiberPresentation:
    p = pres.p
    return SpecialFiberPresentation(
        p,
        pres.r,
        pres.base_vars,
        tuple(tuple(f.reduce_mod(p) for f in level) for level in pres.generators),
    )

