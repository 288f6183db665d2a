"""Graded derivations of a free commutative superalgebra.

A derivation is determined by the images of the generators (universal property
of the free algebra), so that is all we store. Application to a monomial
``E * th_i1 * ... * th_ik`` (``E`` even) follows the graded Leibniz rule::

    D(E*O) = D(E)*O + E*D(O)
    D(th_i1...th_ik) = sum_j (-1)^(|D|(j-1)) th_i1..D(th_ij)..th_ik
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    ANY_PARITY,
    AlgebraSignature,
    Element,
    INHOMOGENEOUS,
    Monomial,
    Parity,
    koszul_sign,
    linear_combine,
    mul,
    parity_of,
)
from .errors import ParityError, SignatureMismatch, SuperAlgebraError

__all__ = [
    "Derivation",
    "make_derivation",
    "apply",
    "graded_commutator",
    "is_square_zero",
    "partial",
]


class Derivation:
    """Homogeneous derivation given by generator images; missing images are 0."""

    __slots__ = ("signature", "parity", "images", "name", "_cache")

    def __init__(self, signature: AlgebraSignature, parity, images: dict, name: str = "D"):
        self.signature = signature
        self.parity = int(parity) % 2
        self.name = name
        self.images = {}
        for g, img in images.items():
            if g not in signature.generators:
                raise SuperAlgebraError(f"unknown generator {g!r} in algebra {signature.name}")
            gp = signature.generator_parity(g)
            if img.signature != signature:
                raise SignatureMismatch(f"image of {g} lives in another algebra")
            p = parity_of(img)
            if p == ANY_PARITY:
                continue
            if p == INHOMOGENEOUS or int(p) != (gp + self.parity) % 2:
                want = Parity((gp + self.parity) % 2)
                raise ParityError(
                    f"{name}({g}) = {img} must be {want}: |{g}| + |{name}| = {int(want)}"
                )
            self.images[g] = img
        self._cache = {}

    def image(self, g: str) -> Element:
        return self.images.get(g) or self.signature.zero()

    def __call__(self, a: Element) -> Element:
        return apply(self, a)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.parity == other.parity
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.signature, self.parity, frozenset(self.images.items())))

    def is_zero(self) -> bool:
        return not self.images

    def __repr__(self):
        kind = "odd" if self.parity else "even"
        body = "; ".join(f"{g} -> {img}" for g, img in self.images.items())
        return f"Derivation({self.name} {kind} {{{body}}})"

    def _apply_monomial(self, m: Monomial) -> Element:
        cached = self._cache.get(m)
        if cached is not None:
            return cached
        sig = self.signature
        n_even = len(sig.even_generators)
        result: dict = {}

        def accumulate(elem: Element, coeff):
            for mm, c in elem.terms.items():
                v = result.get(mm, 0) + coeff * c
                if v:
                    result[mm] = v
                else:
                    result.pop(mm, None)

        odd_part = Element._raw({Monomial((0,) * n_even, m.odd): Fraction(1)}, sig)
        for i, e in enumerate(m.exps):
            if not e:
                continue
            img = self.images.get(sig.even_generators[i])
            if img is None:
                continue
            lowered = tuple(x - 1 if j == i else x for j, x in enumerate(m.exps))
            rest = Element._raw({Monomial(lowered, 0): Fraction(1)}, sig)
            accumulate(mul(mul(rest, img), odd_part), e)

        if m.odd:
            even_part = Element._raw({Monomial(m.exps, 0): Fraction(1)}, sig)
            factors = m.odd_factors
            for j, idx in enumerate(factors):
                img = self.images.get(sig.odd_generators[idx])
                if img is None:
                    continue
                before = sum(1 << k for k in factors[:j])
                after = sum(1 << k for k in factors[j + 1:])
                left = Element._raw({Monomial(m.exps, before): Fraction(1)}, sig)
                right = Element._raw({Monomial((0,) * n_even, after): Fraction(1)}, sig)
                accumulate(mul(mul(left, img), right), koszul_sign(self.parity * j))
        out = Element._raw(result, sig)
        self._cache[m] = out
        return out


def make_derivation(signature: AlgebraSignature, parity, images: dict, name: str = "D") -> Derivation:
    """Validated constructor; images may be given keyed by generator name."""
    return Derivation(signature, parity, images, name=name)


def partial(signature: AlgebraSignature, generator: str) -> Derivation:
    """Partial derivative with respect to one generator."""
    return Derivation(
        signature,
        signature.generator_parity(generator),
        {generator: signature.one()},
        name=f"d/d{generator}",
    )


def apply(D: Derivation, a: Element) -> Element:
    if a.signature != D.signature:
        raise SignatureMismatch(f"{D.name} acts on {D.signature.describe()}")
    if not a.terms:
        return a
    terms = list(a.terms.items())
    return linear_combine([c for _, c in terms], [D._apply_monomial(m) for m, _ in terms])


def graded_commutator(D1: Derivation, D2: Derivation, name: str | None = None) -> Derivation:
    """``[D1, D2] = D1 o D2 - (-1)^(|D1||D2|) D2 o D1``, computed on generators."""
    if D1.signature != D2.signature:
        raise SignatureMismatch("derivations act on different algebras")
    sign = koszul_sign(D1.parity * D2.parity)
    images = {}
    for g in D1.signature.generators:
        gen = D1.signature.gen(g)
        img = apply(D1, apply(D2, gen)) - apply(D2, apply(D1, gen)).scale(sign)
        if img:
            images[g] = img
    return Derivation(
        D1.signature, D1.parity + D2.parity, images, name=name or f"[{D1.name},{D2.name}]"
    )


def is_square_zero(delta: Derivation) -> bool:
    """True iff ``delta o delta`` vanishes; checking generators suffices for odd ``delta``."""
    if delta.parity != 1:
        raise ParityError("square-zero test applies to odd derivations only")
    return all(not apply(delta, img) for img in delta.images.values())
