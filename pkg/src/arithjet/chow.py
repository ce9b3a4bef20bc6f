"""Formal Chow-ring calculus over named divisor classes.

A ``CycleClass`` is an integer polynomial in divisor symbols (``theta`` for
a theta divisor, ``h1``..``hc`` for hypersurface classes) graded by
codimension; anything above the ambient dimension is zero and is dropped.
A ``ChernSeries`` is a truncated total characteristic class
``1 + s_1 + s_2 + ...`` with component ``i`` of pure codimension ``i``.

Sign convention: the Segre-type series returned by ``ci_cotangent_segre``
is the inverse of the total Chern class, so its degree-one part is
``-c_1``. The bound pipeline applies the ``(-1)^i`` weight itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    AmbientMismatch,
    InvalidInput,
    InvalidSeries,
    MissingIntersectionNumber,
)
from .parsing import parse_polynomial
from .polyring import Variable, format_terms

__all__ = [
    "AmbientSpec",
    "ChernSeries",
    "CycleClass",
    "IntersectionTable",
    "ci_cotangent_segre",
    "evaluate",
    "frobenius_pullback",
    "invert_series",
    "restrict_to_ci",
    "whitney_product",
]

THETA = "theta"


@dataclass(frozen=True)
class AmbientSpec:
    """An abelian variety of dimension ``n`` with named divisor classes."""

    n: int
    symbols: tuple = (THETA,)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"ambient dimension must be a positive integer, got {self.n!r}")
        symbols = tuple(self.symbols)
        for name in symbols:
            Variable(name)
        if len(set(symbols)) != len(symbols):
            raise InvalidInput(f"duplicate divisor symbols in {list(symbols)}")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def with_hypersurfaces(cls, n: int, c: int) -> "AmbientSpec":
        return cls(n, (THETA,) + tuple(f"h{j}" for j in range(1, c + 1)))

    def index(self, name: str) -> int:
        try:
            return self.symbols.index(name)
        except ValueError:
            raise AmbientMismatch(f"symbol {name!r} is not one of {list(self.symbols)}") from None

    def unit(self, name: str) -> tuple:
        k = [0] * len(self.symbols)
        k[self.index(name)] = 1
        return tuple(k)

    def format_monomial(self, k: tuple) -> str:
        """``theta^2*h1``; factors in declaration order, ``""`` for the unit."""
        return "*".join(
            s if e == 1 else f"{s}^{e}" for s, e in zip(self.symbols, k) if e
        )

    def parse_class(self, text: str) -> dict:
        """Parse an integer combination of symbol monomials into exponent tuples."""
        poly = parse_polynomial(text)
        out = {}
        for mono, c in poly.terms().items():
            k = [0] * len(self.symbols)
            for v, e in mono.powers:
                if v.order:
                    raise InvalidInput(f"jet variable {v} is not a divisor symbol")
                k[self.index(v.name)] = e
            out[tuple(k)] = c
        return out


def _codim(k: tuple) -> int:
    return sum(k)


class CycleClass:
    """Graded element of the formal Chow ring of an ambient space."""

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient: AmbientSpec, terms: Mapping[tuple, int] | None = None):
        self.ambient = ambient
        width = len(ambient.symbols)
        out = {}
        for k, c in (terms or {}).items():
            if len(k) != width:
                raise InvalidInput(f"exponent vector {k} does not match {list(ambient.symbols)}")
            if c and _codim(k) <= ambient.n:
                out[tuple(k)] = out.get(tuple(k), 0) + c
        self._terms = {k: c for k, c in out.items() if c}

    @classmethod
    def one(cls, ambient: AmbientSpec) -> "CycleClass":
        return cls(ambient, {(0,) * len(ambient.symbols): 1})

    @classmethod
    def symbol(cls, ambient: AmbientSpec, name: str) -> "CycleClass":
        return cls(ambient, {ambient.unit(name): 1})

    @classmethod
    def parse(cls, ambient: AmbientSpec, text: str) -> "CycleClass":
        return cls(ambient, ambient.parse_class(text))

    def terms(self) -> dict:
        return dict(self._terms)

    def codims(self) -> set:
        return {_codim(k) for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.codims()) <= 1

    @property
    def max_codim(self) -> int:
        return max(self.codims(), default=0)

    def component(self, i: int) -> "CycleClass":
        return CycleClass(self.ambient, {k: c for k, c in self._terms.items() if _codim(k) == i})

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "CycleClass") -> None:
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"classes live on {self.ambient} and {other.ambient}")

    def _lift(self, other) -> "CycleClass":
        if isinstance(other, int) and not isinstance(other, bool):
            return CycleClass.one(self.ambient).scale(other)
        if not isinstance(other, CycleClass):
            raise TypeError(f"cannot combine CycleClass with {type(other).__name__}")
        self._check(other)
        return other

    def __add__(self, other) -> "CycleClass":
        other = self._lift(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return CycleClass(self.ambient, out)

    __radd__ = __add__

    def __neg__(self) -> "CycleClass":
        return self.scale(-1)

    def __sub__(self, other) -> "CycleClass":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "CycleClass":
        return self._lift(other) - self

    def scale(self, m: int) -> "CycleClass":
        return CycleClass(self.ambient, {k: c * m for k, c in self._terms.items()})

    def __mul__(self, other) -> "CycleClass":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        other = self._lift(other)
        n = self.ambient.n
        out: dict = {}
        for ka, ca in self._terms.items():
            da = _codim(ka)
            for kb, cb in other._terms.items():
                if da + _codim(kb) > n:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return CycleClass(self.ambient, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycleClass":
        if e < 0:
            raise InvalidInput("negative powers are not defined")
        out = CycleClass.one(self.ambient)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = CycleClass.one(self.ambient).scale(other)
        if not isinstance(other, CycleClass):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self._terms.items())))

    def __str__(self) -> str:
        items = sorted(self._terms.items(), key=lambda kc: (_codim(kc[0]), kc[0]), reverse=True)
        return format_terms((self.ambient.format_monomial(k), c) for k, c in items)

    def __repr__(self) -> str:
        return f"CycleClass({str(self)!r})"


class ChernSeries:
    """Truncated total class ``1 + sigma_1 + ... + sigma_N``."""

    __slots__ = ("ambient", "components")

    def __init__(self, ambient: AmbientSpec, components: Sequence[CycleClass]):
        comps = tuple(components)
        if not comps:
            raise InvalidSeries("a series needs at least its degree-0 component")
        for i, comp in enumerate(comps):
            if comp.ambient != ambient:
                raise AmbientMismatch(f"component {i} lives on a different ambient space")
            if comp.codims() - {i}:
                raise InvalidSeries(f"component {i} is not of pure codimension {i}: {comp}")
        if comps[0] != CycleClass.one(ambient):
            raise InvalidSeries(f"degree-0 component must be 1, got {comps[0]}")
        self.ambient = ambient
        self.components = comps

    @classmethod
    def from_class(cls, total: CycleClass, truncation: int | None = None) -> "ChernSeries":
        """Split a total class by codimension, discarding anything above ``truncation``."""
        N = total.ambient.n if truncation is None else truncation
        if N < 0:
            raise InvalidInput("truncation must be non-negative")
        return cls(total.ambient, [total.component(i) for i in range(N + 1)])

    @classmethod
    def parse(cls, ambient: AmbientSpec, text: str, truncation: int | None = None) -> "ChernSeries":
        return cls.from_class(CycleClass.parse(ambient, text), truncation)

    @classmethod
    def one(cls, ambient: AmbientSpec, truncation: int | None = None) -> "ChernSeries":
        return cls.from_class(CycleClass.one(ambient), truncation)

    @property
    def truncation(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, i: int) -> CycleClass:
        if 0 <= i < len(self.components):
            return self.components[i]
        if i > self.truncation:
            return CycleClass(self.ambient)
        raise IndexError(i)

    def total(self) -> CycleClass:
        out = CycleClass(self.ambient)
        for comp in self.components:
            out = out + comp
        return out

    def __mul__(self, other: "ChernSeries") -> "ChernSeries":
        return whitney_product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChernSeries):
            return NotImplemented
        return self.ambient == other.ambient and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.ambient, self.components))

    def __str__(self) -> str:
        return str(self.total())

    def __repr__(self) -> str:
        return f"ChernSeries({str(self)!r}, N={self.truncation})"

    def to_json(self) -> dict:
        return {
            "n": self.ambient.n,
            "symbols": list(self.ambient.symbols),
            "truncation": self.truncation,
            "components": [str(c) for c in self.components],
        }


def invert_series(s: ChernSeries) -> ChernSeries:
    """Multiplicative inverse up to the truncation: ``t_i = -sum_j s_j t_(i-j)``."""
    if s.components[0] != CycleClass.one(s.ambient):
        raise InvalidSeries("only series with constant term 1 are invertible here")
    t = [s.components[0]]
    for i in range(1, s.truncation + 1):
        acc = CycleClass(s.ambient)
        for j in range(1, i + 1):
            acc = acc + s.components[j] * t[i - j]
        t.append(-acc)
    return ChernSeries(s.ambient, t)


def whitney_product(a: ChernSeries, b: ChernSeries) -> ChernSeries:
    if a.ambient != b.ambient:
        raise AmbientMismatch("series live on different ambient spaces")
    if a.truncation != b.truncation:
        raise AmbientMismatch(
            f"series truncated at different lengths ({a.truncation} vs {b.truncation})"
        )
    comps = []
    for k in range(a.truncation + 1):
        acc = CycleClass(a.ambient)
        for i in range(k + 1):
            acc = acc + a.components[i] * b.components[k - i]
        comps.append(acc)
    return ChernSeries(a.ambient, comps)


def frobenius_pullback(s: ChernSeries, p: int) -> ChernSeries:
    """Scale component ``i`` by ``p^i``.

    Pullback by the absolute Frobenius multiplies divisor classes by ``p``;
    by the splitting principle the Chern roots scale by ``p`` and the
    degree-``i`` part of any total class by ``p^i``.
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise InvalidInput(f"Frobenius degree must be a positive integer, got {p!r}")
    return ChernSeries(s.ambient, [c.scale(p**i) for i, c in enumerate(s.components)])


def _hypersurfaces(ambient: AmbientSpec, hyps: Iterable[str]) -> list:
    hyps = list(hyps)
    if len(set(hyps)) != len(hyps):
        raise InvalidInput(f"repeated hypersurface symbols in {hyps}")
    for h in hyps:
        ambient.index(h)
    return hyps


def ci_cotangent_segre(
    ambient: AmbientSpec,
    hyps: Sequence[str],
    p: int,
    truncation: int | None = None,
) -> ChernSeries:
    """Segre series of the Frobenius-pulled-back cotangent bundle of a complete intersection.

    With trivial cotangent bundle on the abelian variety, the conormal
    sequence gives ``s(Omega_X) = prod_j (1 - h_j)``; Frobenius pullback
    turns this into ``prod_j (1 - p h_j)``, whose degree-``i`` part is
    ``(-p)^i e_i(h_1, ..., h_c)``. Truncation defaults to ``n - c``.
    """
    hyps = _hypersurfaces(ambient, hyps)
    c = len(hyps)
    if c > ambient.n:
        raise InvalidInput(f"{c} hypersurfaces cannot cut a subvariety of a {ambient.n}-fold")
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise InvalidInput(f"p must be a positive integer, got {p!r}")
    d = ambient.n - c if truncation is None else truncation
    if not 0 <= d <= ambient.n:
        raise InvalidInput(f"truncation {d} outside [0, {ambient.n}]")
    # Elementary symmetric polynomials, built one hypersurface at a time.
    elem = [CycleClass.one(ambient)]
    for h in hyps:
        hc = CycleClass.symbol(ambient, h)
        nxt = [elem[0]]
        for i in range(1, len(elem) + 1):
            below = elem[i - 1] * hc
            nxt.append(elem[i] + below if i < len(elem) else below)
        elem = nxt
    comps = [
        elem[i].scale((-p) ** i) if i < len(elem) else CycleClass(ambient) for i in range(d + 1)
    ]
    return ChernSeries(ambient, comps)


class IntersectionTable:
    """Top-codimension intersection numbers supplied by the user.

    Absent monomials are errors on lookup, never zeros.
    """

    def __init__(self, ambient: AmbientSpec, numbers: Mapping[tuple, int]):
        self.ambient = ambient
        table = {}
        for k, v in numbers.items():
            k = tuple(k)
            if len(k) != len(ambient.symbols) or any(e < 0 for e in k):
                raise InvalidInput(f"bad exponent vector {k}")
            if _codim(k) != ambient.n:
                raise InvalidInput(
                    f"{ambient.format_monomial(k) or '1'} has codimension {_codim(k)}, "
                    f"expected {ambient.n}"
                )
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidInput(f"intersection number for {ambient.format_monomial(k)} must be an integer")
            table[k] = v
        self._numbers = table

    @classmethod
    def from_json(cls, data: Mapping) -> "IntersectionTable":
        try:
            ambient = AmbientSpec(data["n"], tuple(data["symbols"]))
            raw = data["numbers"]
        except KeyError as exc:
            raise InvalidInput(f"intersection table is missing field {exc.args[0]!r}") from None
        numbers = {}
        for key, value in raw.items():
            parsed = ambient.parse_class(key)
            if len(parsed) != 1 or next(iter(parsed.values())) != 1:
                raise InvalidInput(f"table key {key!r} is not a single monomial")
            k = next(iter(parsed))
            if k in numbers:
                raise InvalidInput(f"table key {key!r} repeats an earlier monomial")
            if isinstance(value, str):
                try:
                    value = int(value)
                except ValueError:
                    raise InvalidInput(f"value for {key!r} is not an integer") from None
            numbers[k] = value
        return cls(ambient, numbers)

    def to_json(self) -> dict:
        keys = sorted(self._numbers, reverse=True)
        return {
            "n": self.ambient.n,
            "symbols": list(self.ambient.symbols),
            "numbers": {self.ambient.format_monomial(k): self._numbers[k] for k in keys},
        }

    def __getitem__(self, k: tuple) -> int:
        try:
            return self._numbers[tuple(k)]
        except KeyError:
            raise MissingIntersectionNumber(self.ambient.format_monomial(k)) from None

    def __contains__(self, k) -> bool:
        return tuple(k) in self._numbers

    def __len__(self) -> int:
        return len(self._numbers)


def evaluate(cls: CycleClass, table: IntersectionTable) -> int:
    """Degree of a top-codimension class, by linear extension of the table."""
    if cls.ambient != table.ambient:
        raise AmbientMismatch("class and intersection table use different ambient specs")
    bad = cls.codims() - {cls.ambient.n}
    if bad:
        raise InvalidInput(
            f"only classes of codimension {cls.ambient.n} have a degree; {cls} has parts in {sorted(bad)}"
        )
    return sum(c * table[k] for k, c in cls.terms().items())


def restrict_to_ci(cls: CycleClass, hyps: Sequence[str]) -> CycleClass:
    """Push a class on X = H_1 cap ... cap H_c into the ambient ring: multiply by [X]."""
    hyps = _hypersurfaces(cls.ambient, hyps)
    if cls.max_codim + len(hyps) > cls.ambient.n:
        raise InvalidInput(
            f"class of codimension {cls.max_codim} on a codimension-{len(hyps)} subvariety "
            f"exceeds ambient dimension {cls.ambient.n}"
        )
    out = cls
    for h in hyps:
        out = out * CycleClass.symbol(cls.ambient, h)
    return out

