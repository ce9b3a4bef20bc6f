"""Sparse multivariate polynomials with integer coefficients.

Coefficients are Python ints, so arithmetic never overflows. Variables are
jet variables ``name@k``: ``x`` is ``x@0``, ``x@1`` is its first arithmetic
derivative, and so on. Coefficients live in the integers rather than in the
Witt vectors of an algebraic closure of F_p; the integers are stable under
the Fermat quotient, which is all the derivation calculus needs.

Values are immutable. Every result is normalized: no zero coefficients and
no variable that occurs with exponent zero in every term, so structural
equality is equality of polynomials.

Canonical text order (used by ``str``) sorts terms by descending weighted
degree, where ``name@k`` has weight ``k + 1``; ties are broken
lexicographically with higher jet orders most significant, then base names
alphabetically. ``x@1 - x^2 - x`` and ``x^3 + 3*x@1`` are canonical.
"""

from __future__ import annotations

import contextlib
import contextvars
import re
from array import array
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import InvalidInput, NotDivisible, ResourceLimit

__all__ = [
    "DEFAULT_TERM_LIMIT",
    "Monomial",
    "Polynomial",
    "Variable",
    "add",
    "divide_exact",
    "get_term_limit",
    "mul",
    "pow",
    "substitute",
    "term_limit",
]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")

DEFAULT_TERM_LIMIT = 10**6
_TERM_LIMIT = contextvars.ContextVar("arithjet_term_limit", default=DEFAULT_TERM_LIMIT)


def get_term_limit() -> int:
    return _TERM_LIMIT.get()


@contextlib.contextmanager
def term_limit(limit: int) -> Iterator[None]:
    """Temporarily cap the number of terms any single product may produce."""
    if limit < 1:
        raise InvalidInput("term limit must be positive")
    token = _TERM_LIMIT.set(limit)
    try:
        yield
    finally:
        _TERM_LIMIT.reset(token)


@dataclass(frozen=True, order=True)
class Variable:
    name: str
    order: int = 0

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME_RE.match(self.name):
            raise InvalidInput(f"invalid variable name {self.name!r}")
        if not isinstance(self.order, int) or self.order < 0:
            raise InvalidInput(f"jet order must be a non-negative integer, got {self.order!r}")

    def shift(self, k: int = 1) -> "Variable":
        return Variable(self.name, self.order + k)

    def __str__(self) -> str:
        return self.name if self.order == 0 else f"{self.name}@{self.order}"


def _significance(v: Variable):
    return (-v.order, v.name)


@dataclass(frozen=True)
class Monomial:
    """Product of variables with positive exponents, stored sorted by variable."""

    powers: tuple = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[Variable, int]) -> "Monomial":
        for v, e in mapping.items():
            if not isinstance(v, Variable):
                raise InvalidInput(f"monomial keys must be Variables, got {v!r}")
            if e < 0:
                raise InvalidInput(f"negative exponent {e} for {v}")
        return cls(tuple(sorted((v, e) for v, e in mapping.items() if e)))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def as_dict(self) -> dict:
        return dict(self.powers)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.powers)


Coercible = Union["Polynomial", int]


class Polynomial:
    """Immutable sparse polynomial over the integers.

    Internally a tuple of variables and a dict from exponent tuples (aligned
    with that variable tuple) to nonzero ints.
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        acc: dict = {}
        for mono, c in (terms or {}).items():
            if not isinstance(c, int):
                raise InvalidInput(f"coefficients must be integers, got {c!r}")
            if not isinstance(mono, Monomial):
                mono = Monomial.from_mapping(mono)
            acc[mono] = acc.get(mono, 0) + c
        acc = {mono: c for mono, c in acc.items() if c}
        variables = sorted({v for mono in acc for v, _ in mono.powers})
        index = {v: i for i, v in enumerate(variables)}
        out = {}
        for mono, c in acc.items():
            if c:
                exps = [0] * len(variables)
                for v, e in mono.powers:
                    exps[index[v]] = e
                out[tuple(exps)] = c
        self._set(tuple(variables), out)

    def _set(self, variables: tuple, terms: dict) -> None:
        self._vars = variables
        self._terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple, terms: dict, normalized: bool = False) -> "Polynomial":
        """Build from aligned data, dropping zero terms and unused variables."""
        if not normalized:
            terms = {k: c for k, c in terms.items() if c}
        if variables and not normalized:
            used = [False] * len(variables)
            for k in terms:
                for i, e in enumerate(k):
                    if e:
                        used[i] = True
            if not all(used):
                keep = [i for i, u in enumerate(used) if u]
                variables = tuple(variables[i] for i in keep)
                terms = {tuple(k[i] for i in keep): c for k, c in terms.items()}
        obj = cls.__new__(cls)
        obj._set(variables, terms)
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw((), {(): c})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw((), {})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def var(cls, name: str | Variable, order: int = 0) -> "Polynomial":
        v = name if isinstance(name, Variable) else Variable(name, order)
        return cls._raw((v,), {(1,): 1})

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(text)

    # -- inspection -------------------------------------------------------

    @property
    def variables(self) -> tuple:
        """Variables that actually occur, sorted by (name, order)."""
        return self._vars

    @property
    def max_order(self) -> int:
        return max((v.order for v in self._vars), default=0)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(k) for k in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._vars

    def constant_value(self) -> int:
        if self._vars:
            raise InvalidInput(f"{self} is not constant")
        return self._terms.get((), 0)

    def terms(self) -> dict:
        """Mapping Monomial -> coefficient."""
        return {self._monomial(k): c for k, c in self._terms.items()}

    def coefficients(self) -> list:
        return list(self._terms.values())

    def _monomial(self, k: tuple) -> Monomial:
        return Monomial(tuple((v, e) for v, e in zip(self._vars, k) if e))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms().items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- equality ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Coercible) -> "Polynomial":
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._vars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "Polynomial":
        return add(self, -_coerce(other))

    def __rsub__(self, other: Coercible) -> "Polynomial":
        return add(_coerce(other), -self)

    def __mul__(self, other: Coercible) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        return pow(self, e)

    def scale(self, m: int) -> "Polynomial":
        return Polynomial._raw(self._vars, {k: c * m for k, c in self._terms.items()})

    def reduce_mod(self, m: int) -> "Polynomial":
        """Coefficients reduced into [0, m-1]; terms that vanish are dropped."""
        if m < 1:
            raise InvalidInput("modulus must be positive")
        return Polynomial._raw(self._vars, {k: c % m for k, c in self._terms.items()})

    def align(self, variables: tuple) -> dict:
        """Exponent dict re-indexed onto a superset ``variables`` of our own."""
        if variables == self._vars:
            return self._terms
        pos = {v: i for i, v in enumerate(variables)}
        try:
            idx = [pos[v] for v in self._vars]
        except KeyError as exc:
            raise InvalidInput(f"variable {exc.args[0]} missing from target set") from None
        n = len(variables)
        out = {}
        for k, c in self._terms.items():
            e = [0] * n
            for i, x in zip(idx, k):
                e[i] = x
            out[tuple(e)] = c
        return out

    # -- text -------------------------------------------------------------

    def sorted_terms(self) -> list:
        """(exponent tuple, coeff) pairs in canonical descending order."""
        vs = self._vars
        sig = sorted(range(len(vs)), key=lambda i: _significance(vs[i]))
        weights = [v.order + 1 for v in vs]

        def key(item):
            k = item[0]
            return (sum(w * e for w, e in zip(weights, k)), tuple(k[i] for i in sig))

        return sorted(self._terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        return format_terms(
            (str(self._monomial(k)) if any(k) else "", c) for k, c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def format_terms(pairs: Iterable) -> str:
    """Render ``(monomial text, coeff)`` pairs as ``a*m1 - m2 + 3``; empty text is 1."""
    parts = []
    for mono, c in pairs:
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) or "0"


def _coerce(x: Coercible) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def _union(a: tuple, b: tuple) -> tuple:
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b)))


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    vs = _union(a._vars, b._vars)
    out = dict(a.align(vs))
    get = out.get
    for k, c in b.align(vs).items():
        out[k] = get(k, 0) + c
    return Polynomial._raw(vs, out)


def _check_limit(n: int) -> None:
    limit = _TERM_LIMIT.get()
    if n > limit:
        raise ResourceLimit(f"intermediate result exceeds term limit of {limit} terms")


class _Packing:
    """Exponent vectors packed into one int with byte-aligned fields.

    Field width is chosen so every exponent up to ``max(maxima)`` fits, hence
    adding packed ints adds exponent vectors without carries.
    """

    _CODES = ((1, "B"), (2, "H"), (4, "L"), (8, "Q"))

    def __init__(self, maxima: list):
        top = max(maxima, default=0)
        for width, code in self._CODES:
            if top < 1 << (8 * width) and array(code).itemsize == width:
                break
        else:
            raise ResourceLimit(f"exponent {top} too large to represent")
        self.width, self.code, self.nbytes = width, code, width * len(maxima)

    def pack(self, terms: dict) -> dict:
        from_bytes = int.from_bytes
        if self.width == 1:
            return {from_bytes(bytes(k), "little"): c for k, c in terms.items()}
        code = self.code
        return {from_bytes(array(code, k).tobytes(), "little"): c for k, c in terms.items()}

    def unpack(self, packed: dict) -> dict:
        nbytes = self.nbytes
        if self.width == 1:
            return {tuple(k.to_bytes(nbytes, "little")): c for k, c in packed.items() if c}
        code = self.code
        return {
            tuple(memoryview(k.to_bytes(nbytes, "little")).cast(code)): c
            for k, c in packed.items()
            if c
        }


def _packed_mul(pa: dict, pb: dict) -> dict:
    if len(pa) < len(pb):
        pa, pb = pb, pa
    limit = _TERM_LIMIT.get()
    items_b = list(pb.items())
    acc: dict = {}
    get = acc.get
    for ka, ca in pa.items():
        for kb, cb in items_b:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
        if len(acc) > limit:
            _check_limit(len(acc))
    return {k: c for k, c in acc.items() if c}


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a._terms or not b._terms:
        return Polynomial.zero()
    vs = _union(a._vars, b._vars)
    ta, tb = a.align(vs), b.align(vs)
    n = len(vs)
    if n == 0:
        return Polynomial.constant(ta[()] * tb[()])
    packing = _Packing([max(k[i] for k in ta) + max(k[i] for k in tb) for i in range(n)])
    out = packing.unpack(_packed_mul(packing.pack(ta), packing.pack(tb)))
    # deg_v(ab) = deg_v(a) + deg_v(b) over the integers, so no variable drops out.
    return Polynomial._raw(vs, out, normalized=True)


def pow(a: Polynomial, e: int) -> Polynomial:  # noqa: A001 - mirrors the ring operation name
    if not isinstance(e, int) or e < 0:
        raise InvalidInput(f"exponent must be a non-negative integer, got {e!r}")
    if e == 0:
        return Polynomial.one()
    if len(a._terms) <= 1 or not a._vars:
        return Polynomial._raw(
            a._vars, {tuple(x * e for x in k): c**e for k, c in a._terms.items()}
        )
    n = len(a._vars)
    packing = _Packing([max(k[i] for k in a._terms) * e for i in range(n)])
    base = packing.pack(a._terms)
    result = None
    while True:
        if e & 1:
            result = base if result is None else _packed_mul(result, base)
        e >>= 1
        if not e:
            break
        base = _packed_mul(base, base)
    return Polynomial._raw(a._vars, packing.unpack(result), normalized=True)


def substitute(f: Polynomial, mapping: Mapping[Variable, Coercible]) -> Polynomial:
    """Simultaneous substitution; variables absent from ``mapping`` stay fixed."""
    if not f._terms:
        return f
    images = [
        _coerce(mapping[v]) if v in mapping else Polynomial.var(v) for v in f._vars
    ]
    vs = tuple(sorted({u for img in images for u in img._vars}))
    aligned = [img.align(vs) for img in images]
    n = len(vs)
    if n == 0:
        consts = [t.get((), 0) for t in aligned]
        total = 0
        for k, c in f._terms.items():
            for x, e in zip(consts, k):
                c *= x**e
            total += c
        return Polynomial.constant(total)
    # Exponent bound per target variable, over all terms of f.
    degs = [[max((k[j] for k in t), default=0) for j in range(n)] for t in aligned]
    maxima = [0] * n
    for k in f._terms:
        for j in range(n):
            m = sum(e * d[j] for e, d in zip(k, degs))
            if m > maxima[j]:
                maxima[j] = m
    packing = _Packing(maxima)
    packed = [packing.pack(t) for t in aligned]
    cache: dict = {}

    def power(i: int, e: int) -> dict:
        key = (i, e)
        if key not in cache:
            if e == 1:
                cache[key] = packed[i]
            else:
                half = power(i, e // 2)
                sq = _packed_mul(half, half)
                cache[key] = _packed_mul(sq, packed[i]) if e & 1 else sq
        return cache[key]

    acc: dict = {}
    get = acc.get
    for k, c in f._terms.items():
        term = {0: c}
        for i, e in enumerate(k):
            if e:
                term = _packed_mul(term, power(i, e))
        for m, x in term.items():
            acc[m] = get(m, 0) + x
    return Polynomial._raw(vs, packing.unpack(acc))


def divide_exact(f: Polynomial, m: int) -> Polynomial:
    """Return g with m*g == f, or raise NotDivisible naming an offending monomial."""
    if m == 0:
        raise InvalidInput("division by zero")
    out = {}
    for k, c in f._terms.items():
        q, r = divmod(c, m)
        if r:
            raise NotDivisible(m, str(f._monomial(k)), c)
        out[k] = q
    return Polynomial._raw(f._vars, out)


def sum_polynomials(polys: Iterable[Polynomial]) -> Polynomial:
    """Sum many polynomials with a single alignment pass."""
    polys = list(polys)
    vs: set = set()
    for p in polys:
        vs.update(p._vars)
    vs = tuple(sorted(vs))
    out: dict = {}
    get = out.get
    for p in polys:
        for k, c in p.align(vs).items():
            out[k] = get(k, 0) + c
    return Polynomial._raw(vs, out)
