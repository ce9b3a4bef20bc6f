"""p-derivations on integer polynomial rings in jet variables.

The Frobenius lift phi fixes integers and sends ``v@k`` to
``v@k^p + p*v@(k+1)``. The p-derivation is then *defined* as

    delta(f) = (phi(f) - f^p) / p,

so the additive and multiplicative identities of a p-derivation are
theorems checked by the test suite rather than the code path itself.
On constants this is the Fermat quotient (c - c^p)/p.
"""

from __future__ import annotations

import builtins
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInput, InvariantViolation, NotDivisible
from .polyring import Polynomial, divide_exact, pow, substitute

__all__ = [
    "DeltaContext",
    "delta",
    "delta_iter",
    "fermat_quotient",
    "frobenius_substitution",
    "is_prime",
]

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_BOUND = 3317044064679887385961981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= _MR_BOUND:
        raise InvalidInput(f"primality of {n} cannot be certified deterministically")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = builtins.pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class DeltaContext:
    """A fixed odd prime, optionally with the base names the inputs may use."""

    p: int
    base_names: Optional[frozenset] = None

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise InvalidInput(f"p must be an integer, got {self.p!r}")
        if self.p == 2:
            raise InvalidInput("p = 2 is not supported: the prime is assumed odd throughout")
        if not is_prime(self.p):
            raise InvalidInput(f"p = {self.p} is not prime")
        if self.base_names is not None:
            object.__setattr__(self, "base_names", frozenset(self.base_names))

    def check(self, f: Polynomial) -> None:
        if self.base_names is None:
            return
        stray = sorted({v.name for v in f.variables} - self.base_names)
        if stray:
            raise InvalidInput(f"variables {stray} are outside the context {sorted(self.base_names)}")


def fermat_quotient(c: int, ctx: DeltaContext) -> int:
    p = ctx.p
    q, r = divmod(c - c**p, p)
    if r:
        raise InvariantViolation(f"Fermat quotient of {c} at p={p} is not integral")
    return q


def frobenius_substitution(f: Polynomial, ctx: DeltaContext) -> Polynomial:
    ctx.check(f)
    p = ctx.p
    images = {
        v: pow(Polynomial.var(v), p) + Polynomial.var(v.shift()).scale(p)
        for v in f.variables
    }
    return substitute(f, images)


def delta(f: Polynomial, ctx: DeltaContext) -> Polynomial:
    difference = frobenius_substitution(f, ctx) - pow(f, ctx.p)
    try:
        return divide_exact(difference, ctx.p)
    except NotDivisible as exc:
        raise InvariantViolation(f"phi(f) - f^p not divisible by p: {exc}") from exc


def delta_iter(f: Polynomial, ctx: DeltaContext, r: int) -> Polynomial:
    """Apply delta ``r`` times. ``r = 0`` returns ``f``."""
    if not isinstance(r, int) or r < 0:
        raise InvalidInput(f"iteration count must be a non-negative integer, got {r!r}")
    for _ in range(r):
        f = delta(f, ctx)
    return f
