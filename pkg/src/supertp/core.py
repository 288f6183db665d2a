"""Exact arithmetic in a free commutative superalgebra.

The algebra is ``Q[even generators] (x) Lambda(odd generators)``. An element is
a sparse map from canonical monomials to nonzero :class:`fractions.Fraction`
coefficients, so two elements are equal exactly when their term maps agree.

A monomial stores the exponent vector of the even generators and a bitmask of
the odd generators it contains. Odd factors are always read in ascending index
order; bringing a product back to that order costs the sign of the sorting
permutation, and a repeated odd factor kills the term.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import SignatureMismatch

__all__ = [
    "Parity",
    "ANY_PARITY",
    "INHOMOGENEOUS",
    "AlgebraSignature",
    "Monomial",
    "Element",
    "mul",
    "linear_combine",
    "parity_of",
    "decompose_homogeneous",
    "koszul_sign",
]


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()


# parity_of() results that are not a single Parity
ANY_PARITY = "any"
INHOMOGENEOUS = "inhomogeneous"


def koszul_sign(exponent: int) -> int:
    """Return ``(-1) ** exponent``."""
    return -1 if exponent & 1 else 1


class Monomial(NamedTuple):
    """Canonical supermonomial: even exponents plus an odd-generator bitmask."""

    exps: tuple
    odd: int

    @property
    def odd_factors(self) -> tuple:
        bits, i, out = self.odd, 0, []
        while bits:
            if bits & 1:
                out.append(i)
            bits >>= 1
            i += 1
        return tuple(out)

    @property
    def parity(self) -> int:
        return self.odd.bit_count() & 1

    @property
    def even_degree(self) -> int:
        return sum(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps) + self.odd.bit_count()


def _odd_product_sign(a: int, b: int) -> int:
    # each odd factor of b passes every factor of a with a larger index
    swaps = 0
    while b:
        low = b & -b
        swaps += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return koszul_sign(swaps)


@dataclass(frozen=True)
class AlgebraSignature:
    """Ordered even and odd generator names of a free commutative superalgebra."""

    even_generators: tuple = ()
    odd_generators: tuple = ()
    name: str = "A"

    def __post_init__(self):
        object.__setattr__(self, "even_generators", tuple(self.even_generators))
        object.__setattr__(self, "odd_generators", tuple(self.odd_generators))
        names = self.even_generators + self.odd_generators
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")

    @property
    def generators(self) -> tuple:
        return self.even_generators + self.odd_generators

    def generator_parity(self, name: str) -> int:
        if name in self.even_generators:
            return 0
        if name in self.odd_generators:
            return 1
        raise KeyError(f"unknown generator {name!r} in algebra {self.name}")

    def unit_monomial(self) -> Monomial:
        return Monomial((0,) * len(self.even_generators), 0)

    def generator_monomial(self, name: str) -> Monomial:
        if name in self.even_generators:
            i = self.even_generators.index(name)
            exps = tuple(1 if j == i else 0 for j in range(len(self.even_generators)))
            return Monomial(exps, 0)
        i = self.odd_generators.index(name)
        return Monomial((0,) * len(self.even_generators), 1 << i)

    def gen(self, name: str) -> "Element":
        if name not in self.generators:
            raise KeyError(f"unknown generator {name!r} in algebra {self.name}")
        return Element({self.generator_monomial(name): Fraction(1)}, self)

    def gens(self) -> tuple:
        return tuple(self.gen(g) for g in self.generators)

    def one(self) -> "Element":
        return Element({self.unit_monomial(): Fraction(1)}, self)

    def zero(self) -> "Element":
        return Element({}, self)

    def scalar(self, c) -> "Element":
        return Element({self.unit_monomial(): Fraction(c)}, self)

    def monomial(self, even: dict | None = None, odd: Sequence[str] = (), coeff=1) -> "Element":
        """Build ``coeff * prod(g**e) * odd[0]*odd[1]*...`` in the written odd order."""
        even = even or {}
        exps = tuple(int(even.get(g, 0)) for g in self.even_generators)
        result = Element({Monomial(exps, 0): Fraction(coeff)}, self)
        for name in odd:
            result = result * self.gen(name)
        return result

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.even_generators, m.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        parts.extend(self.odd_generators[i] for i in m.odd_factors)
        return "*".join(parts)

    def monomial_key(self, m: Monomial):
        # canonical print order: total degree, then even exponents, then odd factors
        return (m.degree, tuple(-e for e in m.exps), m.odd_factors)

    def describe(self) -> str:
        even = " ".join(self.even_generators)
        odd = " ".join(self.odd_generators)
        return f"{self.name}(even: {even or '-'}; odd: {odd or '-'})"


class Element:
    """Exact element of a free commutative superalgebra.

    ``terms`` maps :class:`Monomial` to nonzero ``Fraction``; zero coefficients
    are never stored. Instances are treated as immutable.
    """

    __slots__ = ("terms", "signature", "_hash")

    def __init__(self, terms: dict, signature: AlgebraSignature):
        self.terms = {m: c for m, c in terms.items() if c}
        self.signature = signature
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, signature: AlgebraSignature) -> "Element":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.signature = signature
        obj._hash = None
        return obj

    # -- structure -------------------------------------------------------
    def _check(self, other: "Element"):
        if self.signature != other.signature:
            raise SignatureMismatch(
                f"{self.signature.describe()} vs {other.signature.describe()}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.signature == other.signature and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self == self.signature.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.signature, frozenset(self.terms.items())))
        return self._hash

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    # -- vector space ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = self.signature.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Element._raw(terms, self.signature)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw({m: -c for m, c in self.terms.items()}, self.signature)

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = self.signature.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        c = Fraction(c)
        if not c:
            return self.signature.zero()
        return Element._raw({m: v * c for m, v in self.terms.items()}, self.signature)

    # -- algebra ---------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.signature.one()
        for _ in range(n):
            result = mul(result, self)
        return result

    # -- parity ----------------------------------------------------------
    def parity(self):
        return parity_of(self)

    def homogeneous_parity(self, default: int = 0) -> int:
        """Parity as an int; the zero element reports ``default``."""
        p = parity_of(self)
        if p == INHOMOGENEOUS:
            raise ValueError(f"element is not homogeneous: {self}")
        return default if p == ANY_PARITY else int(p)

    # -- printing --------------------------------------------------------
    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: self.signature.monomial_key(mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            mono = self.signature.monomial_str(m)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Element({str(self)!r})"


def mul(a: Element, b: Element) -> Element:
    """Supercommutative product with Koszul reordering signs."""
    a._check(b)
    terms: dict = {}
    get = terms.get
    for m, c in a.terms.items():
        for n, d in b.terms.items():
            if m.odd & n.odd:
                continue
            sign = _odd_product_sign(m.odd, n.odd)
            exps = tuple(i + j for i, j in zip(m.exps, n.exps))
            key = Monomial(exps, m.odd | n.odd)
            v = get(key, 0) + (c * d if sign > 0 else -(c * d))
            if v:
                terms[key] = v
            else:
                del terms[key]
    return Element._raw(terms, a.signature)


def linear_combine(coeffs: Iterable, elems: Iterable[Element]) -> Element:
    coeffs, elems = list(coeffs), list(elems)
    if len(coeffs) != len(elems):
        raise ValueError("coefficient and element lists differ in length")
    if not elems:
        raise ValueError("linear_combine needs at least one element")
    sig = elems[0].signature
    terms: dict = {}
    for c, e in zip(coeffs, elems):
        if e.signature != sig:
            raise SignatureMismatch(f"{sig.describe()} vs {e.signature.describe()}")
        c = Fraction(c)
        if not c:
            continue
        for m, v in e.terms.items():
            s = terms.get(m, 0) + c * v
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
    return Element._raw(terms, sig)


def parity_of(a: Element):
    """``Parity`` of a homogeneous element, ``ANY_PARITY`` for zero, else ``INHOMOGENEOUS``."""
    parities = {m.odd.bit_count() & 1 for m in a.terms}
    if not parities:
        return ANY_PARITY
    if len(parities) == 2:
        return INHOMOGENEOUS
    return Parity(parities.pop())


def decompose_homogeneous(a: Element) -> tuple:
    even = {m: c for m, c in a.terms.items() if not m.odd.bit_count() & 1}
    odd = {m: c for m, c in a.terms.items() if m.odd.bit_count() & 1}
    return Element._raw(even, a.signature), Element._raw(odd, a.signature)


def homogeneous_parts(a: Element):
    """Yield ``(parity, part)`` for the nonzero homogeneous components of ``a``."""
    even, odd = decompose_homogeneous(a)
    if even.terms:
        yield 0, even
    if odd.terms:
        yield 1, odd
