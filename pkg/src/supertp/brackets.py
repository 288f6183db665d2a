"""Brackets built from derivations.

* ``even_lie_bracket``: ``[x,y] = x D(y) - (-1)^(|x||y|) y D(x)`` for an even ``D``;
  together with the product this is a transposed Poisson superalgebra.
* vector fields ``x.delta`` over an odd derivation, with the symmetric bracket
  ``{X,Y} = (x delta(y) + (-1)^((|x|+1)(|y|+1)) y delta(x)).delta``.
* ``ternary_bracket``: the 3-Lie superbracket obtained from a second even
  derivation that also differentiates the binary bracket.

Every bracket is written for homogeneous arguments; inhomogeneous inputs are
split into even and odd parts and the result is extended bilinearly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import AlgebraSignature, Element, homogeneous_parts, koszul_sign, mul, parity_of
from .derivations import Derivation, apply, graded_commutator
from .errors import ParityError, PreconditionError, SignatureMismatch

__all__ = [
    "VectorField",
    "TPStructure",
    "even_lie_bracket",
    "pseudo_bracket",
    "vf_graded_commutator",
    "vf_bracket",
    "module_action",
    "jordan_sum_product",
    "ternary_bracket",
]


def _bilinear(op, x: Element, y: Element) -> Element:
    result = x.signature.zero()
    for px, xh in homogeneous_parts(x):
        for py, yh in homogeneous_parts(y):
            result = result + op(px, xh, py, yh)
    return result


def even_lie_bracket(D: Derivation, x: Element, y: Element) -> Element:
    if D.parity != 0:
        raise ParityError("the element bracket needs an even derivation")

    def op(px, x, py, y):
        return mul(x, apply(D, y)) - mul(y, apply(D, x)).scale(koszul_sign(px * py))

    return _bilinear(op, x, y)


def pseudo_bracket(D: Derivation, x: Element, y: Element) -> Element:
    """Sign-flipped bracket ``x D(y) + (-1)^(|x||y|) y D(x)``; not a Lie bracket."""

    def op(px, x, py, y):
        return mul(x, apply(D, y)) + mul(y, apply(D, x)).scale(koszul_sign(px * py))

    return _bilinear(op, x, y)


@dataclass(frozen=True)
class VectorField:
    """The operator ``coefficient . derivation``, i.e. ``f -> coefficient * derivation(f)``."""

    coefficient: Element
    derivation: Derivation

    def __post_init__(self):
        if self.coefficient.signature != self.derivation.signature:
            raise SignatureMismatch("vector field coefficient lives in another algebra")

    @property
    def parity(self):
        p = parity_of(self.coefficient)
        if isinstance(p, str):
            return p
        return p + self.derivation.parity

    def homogeneous_parity(self, default: int = 0) -> int:
        return (self.coefficient.homogeneous_parity((default + self.derivation.parity) % 2)
                + self.derivation.parity) % 2

    def __call__(self, f: Element) -> Element:
        return mul(self.coefficient, apply(self.derivation, f))

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()

    def __bool__(self):
        return bool(self.coefficient)

    def _same(self, other):
        if self.derivation != other.derivation:
            raise SignatureMismatch("vector fields over different derivations")

    def __add__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        self._same(other)
        return VectorField(self.coefficient + other.coefficient, self.derivation)

    def __sub__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        self._same(other)
        return VectorField(self.coefficient - other.coefficient, self.derivation)

    def __neg__(self):
        return VectorField(-self.coefficient, self.derivation)

    def scale(self, c) -> "VectorField":
        return VectorField(self.coefficient.scale(c), self.derivation)

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.derivation == other.derivation and self.coefficient == other.coefficient

    def __hash__(self):
        return hash((self.coefficient, self.derivation))

    def __str__(self):
        return f"({self.coefficient}).{self.derivation.name}"


def module_action(z: Element, X: VectorField) -> VectorField:
    """Left module structure ``z . (x.delta) = (z x).delta``."""
    return VectorField(mul(z, X.coefficient), X.derivation)


def vf_graded_commutator(D: Derivation, X: VectorField, Y: VectorField) -> tuple:
    """Graded commutator of ``x.D`` and ``y.D`` as ``(coefficient of D, coefficient of D^2)``.

    Coefficients of ``X`` and ``Y`` are read as elements; the derivation stored
    on the vector fields is not consulted, only ``D`` is.
    """
    x, y = X.coefficient, Y.coefficient
    if x.signature != D.signature or y.signature != D.signature:
        raise SignatureMismatch("vector field coefficients live in another algebra")
    d = D.parity
    first = x.signature.zero()
    second = x.signature.zero()
    for px, xh in homogeneous_parts(x):
        for py, yh in homogeneous_parts(y):
            first = first + mul(xh, apply(D, yh)) - mul(yh, apply(D, xh)).scale(
                koszul_sign((px + d) * (py + d))
            )
            c = koszul_sign(py * d) - koszul_sign(py * d + d)
            if c:
                second = second + mul(xh, yh).scale(c)
    return first, second


def vf_bracket(delta: Derivation, X: VectorField, Y: VectorField) -> VectorField:
    if delta.parity != 1:
        raise ParityError("the vector-field bracket needs an odd derivation")
    x, y = X.coefficient, Y.coefficient
    if x.signature != delta.signature or y.signature != delta.signature:
        raise SignatureMismatch("vector field coefficients live in another algebra")

    def op(px, x, py, y):
        return mul(x, apply(delta, y)) + mul(y, apply(delta, x)).scale(
            koszul_sign((px + 1) * (py + 1))
        )

    return VectorField(_bilinear(op, x, y), delta)


def jordan_sum_product(delta: Derivation, P: tuple, Q: tuple) -> tuple:
    """``(X0,X1).(Y0,Y1) = ({X0,Y0}, {X0,Y1} + {X1,Y0})`` on even (+) odd vector fields."""
    (X0, X1), (Y0, Y1) = P, Q
    for V, want in ((X0, 0), (X1, 1), (Y0, 0), (Y1, 1)):
        p = V.parity
        if p != "any" and p != want:
            raise ParityError(f"component {V} should have parity {want}")
    return (
        vf_bracket(delta, X0, Y0),
        vf_bracket(delta, X0, Y1) + vf_bracket(delta, X1, Y0),
    )


@dataclass(frozen=True)
class TPStructure:
    """Transposed Poisson superalgebra ``(A, ., [,])`` with bracket from an even derivation.

    ``ternary_source`` (optional) must be an even derivation of both the product
    and the bracket. The product condition is automatic for a derivation given
    by generator images. For the bracket, ``E[x,y] - [Ex,y] - [x,Ey]`` equals
    ``x C(y) - y C(x)`` with ``C = [E, D]``, and taking ``x = 1`` shows it
    vanishes iff ``C = 0``; that commutator is what gets checked.
    """

    signature: AlgebraSignature
    bracket_source: Derivation
    ternary_source: Derivation | None = None
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.bracket_source.signature != self.signature:
            raise SignatureMismatch("bracket source acts on another algebra")
        if self.bracket_source.parity != 0:
            raise ParityError("bracket source must be an even derivation")
        E = self.ternary_source
        if E is not None:
            if E.signature != self.signature:
                raise SignatureMismatch("ternary source acts on another algebra")
            if E.parity != 0:
                raise ParityError("ternary source must be an even derivation")
            if not graded_commutator(E, self.bracket_source).is_zero():
                raise PreconditionError(
                    f"{E.name} is not a derivation of the bracket: it does not commute "
                    f"with {self.bracket_source.name}"
                )

    def bracket(self, x: Element, y: Element) -> Element:
        return even_lie_bracket(self.bracket_source, x, y)

    def ternary(self, x: Element, y: Element, z: Element) -> Element:
        return ternary_bracket(self, x, y, z)

    def describe(self) -> str:
        text = f"bracket from {self.bracket_source.name} on {self.signature.describe()}"
        if self.ternary_source is not None:
            text += f", ternary source {self.ternary_source.name}"
        return text


def ternary_bracket(S: TPStructure, x: Element, y: Element, z: Element) -> Element:
    """``[x,y,z] = D(x)[y,z] + (-1)^(|x|(|y|+|z|)) D(y)[z,x] + (-1)^((|x|+|y|)|z|) D(z)[x,y]``."""
    D = S.ternary_source
    if D is None:
        raise PreconditionError("structure has no ternary source derivation")
    result = x.signature.zero()
    for px, xh in homogeneous_parts(x):
        for py, yh in homogeneous_parts(y):
            for pz, zh in homogeneous_parts(z):
                result = (
                    result
                    + mul(apply(D, xh), S.bracket(yh, zh))
                    + mul(apply(D, yh), S.bracket(zh, xh)).scale(koszul_sign(px * (py + pz)))
                    + mul(apply(D, zh), S.bracket(xh, yh)).scale(koszul_sign((px + py) * pz))
                )
    return result


def vector_field(coefficient, delta: Derivation) -> VectorField:
    if not isinstance(coefficient, Element):
        coefficient = delta.signature.scalar(Fraction(coefficient))
    return VectorField(coefficient, delta)
