"""Identity templates: signed sums of expression trees over named slots.

A template term is ``coefficient * (-1)^sign * expression``. The sign exponent
is a mod-2 polynomial in slot parities written in the usual shorthand, e.g.
``"x,yz + xz,uv"`` means ``|x|(|y|+|z|) + (|x|+|z|)(|u|+|v|)``; a bare group
``"x"`` is ``|x|`` and ``"1"`` is the constant 1.

Expressions are small immutable trees, evaluated against an *interpretation*
that supplies the operations (product, brackets, derivation). The sparse
kernel interpretation lives here; tests plug in an independent dense one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from ..brackets import (
    TPStructure,
    VectorField,
    even_lie_bracket,
    module_action,
    pseudo_bracket,
    ternary_bracket,
    vf_bracket,
)
from ..core import Element, koszul_sign, linear_combine, mul
from ..derivations import Derivation, apply, is_square_zero
from ..errors import ParityError, PreconditionError, SignatureMismatch, SuperAlgebraError

ELEMENT = "element"
VECTOR_FIELD = "vector-field"


# -- expression trees ----------------------------------------------------------

class Node:
    __slots__ = ()

    def __mul__(self, other):
        return Mul(self, other)


@dataclass(frozen=True)
class Slot(Node):
    index: int
    name: str = ""


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Bracket(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class PseudoBracket(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class VBracket(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Act(Node):
    scalar: Node
    field: Node


@dataclass(frozen=True)
class Ternary(Node):
    first: Node
    second: Node
    third: Node


@dataclass(frozen=True)
class Der(Node):
    arg: Node


def br(a, b):
    return Bracket(a, b)


def vbr(a, b):
    return VBracket(a, b)


def act(z, X):
    return Act(z, X)


def tern(a, b, c):
    return Ternary(a, b, c)


def der(a):
    return Der(a)


def pbr(a, b):
    return PseudoBracket(a, b)


_OPERATIONS = {
    Mul: "product",
    Bracket: "binary-bracket",
    PseudoBracket: "pseudo-bracket",
    VBracket: "module-bracket",
    Act: "module-action",
    Ternary: "ternary-bracket",
    Der: "derivation-apply",
}

# which structure component each operation needs
_REQUIREMENTS = {
    Bracket: "bracket",
    PseudoBracket: "bracket",
    Mul: "product",
    Ternary: "ternary",
    Der: "ternary",
    VBracket: "delta",
}


def _children(node):
    if isinstance(node, Slot):
        return ()
    if isinstance(node, Ternary):
        return (node.first, node.second, node.third)
    if isinstance(node, Der):
        return (node.arg,)
    if isinstance(node, Act):
        return (node.scalar, node.field)
    return (node.left, node.right)


def walk(node):
    yield node
    for child in _children(node):
        yield from walk(child)


def infer_kind(node, slot_kinds) -> str:
    """Carrier of ``node`` (element or vector field); raises on ill-typed trees."""
    if isinstance(node, Slot):
        return slot_kinds[node.index]
    kinds = [infer_kind(c, slot_kinds) for c in _children(node)]
    if isinstance(node, VBracket):
        want, out = [VECTOR_FIELD, VECTOR_FIELD], VECTOR_FIELD
    elif isinstance(node, Act):
        want, out = [ELEMENT, VECTOR_FIELD], VECTOR_FIELD
    else:
        want, out = [ELEMENT] * len(kinds), ELEMENT
    if kinds != want:
        raise SuperAlgebraError(f"{_OPERATIONS[type(node)]} expects {want}, got {kinds}")
    return out


def render(node, names) -> str:
    if isinstance(node, Slot):
        return names[node.index]
    if isinstance(node, Mul):
        return f"{render(node.left, names)}*{render(node.right, names)}"
    if isinstance(node, Bracket):
        return f"[{render(node.left, names)},{render(node.right, names)}]"
    if isinstance(node, PseudoBracket):
        return f"<{render(node.left, names)},{render(node.right, names)}>"
    if isinstance(node, VBracket):
        return "{" + f"{render(node.left, names)},{render(node.right, names)}" + "}"
    if isinstance(node, Act):
        return f"{render(node.scalar, names)}.{render(node.field, names)}"
    if isinstance(node, Ternary):
        inner = ",".join(render(c, names) for c in _children(node))
        return f"[{inner}]"
    return f"D({render(node.arg, names)})"


# -- sign exponents ------------------------------------------------------------

@dataclass(frozen=True)
class SignExponent:
    """Mod-2 sum of products of slot parities; ``()`` in ``monomials`` is the constant 1."""

    monomials: tuple = ()
    text: str = ""

    def evaluate(self, parities) -> int:
        total = 0
        for mono in self.monomials:
            term = 1
            for i in mono:
                term &= parities[i]
            total ^= term
        return total

    @classmethod
    def parse(cls, text: str, slot_names) -> "SignExponent":
        index = {n: i for i, n in enumerate(slot_names)}
        counts: dict = {}
        for chunk in filter(None, (c.strip() for c in text.split("+"))):
            if chunk == "1":
                counts[()] = counts.get((), 0) ^ 1
                continue
            groups = [g.strip() for g in chunk.split(",")]
            try:
                factors = [[index[ch] for ch in g] for g in groups]
            except KeyError as exc:
                raise SuperAlgebraError(f"unknown slot {exc} in sign {text!r}") from None
            for picks in cartesian(*factors):
                key = tuple(sorted(set(picks)))  # |x|^2 = |x| mod 2
                counts[key] = counts.get(key, 0) ^ 1
        return cls(tuple(sorted(k for k, v in counts.items() if v)), text)


# -- templates -----------------------------------------------------------------

@dataclass(frozen=True)
class SlotSpec:
    name: str
    kind: str = ELEMENT
    parity: int | None = None  # fixed parity of the slot value, or None to sweep


@dataclass(frozen=True)
class TemplateTerm:
    coefficient: int
    sign: SignExponent
    expression: Node


@dataclass(frozen=True)
class IdentityTemplate:
    name: str
    slots: tuple
    terms: tuple
    anchor: str = ""
    kind: str = "theorem"  # theorem | conjecture | control
    requires_square_zero: bool = False
    notes: tuple = ()
    carrier: str = field(init=False, default=ELEMENT)
    requirements: frozenset = field(init=False, default=frozenset())

    def __post_init__(self):
        if not self.slots:
            raise SuperAlgebraError("a template needs at least one slot")
        kinds = self.slot_kinds
        carriers = set()
        reqs = set()
        for term in self.terms:
            for node in walk(term.expression):
                if isinstance(node, Slot) and not 0 <= node.index < len(self.slots):
                    raise SuperAlgebraError(f"{self.name}: undeclared slot {node.index}")
                if type(node) in _REQUIREMENTS:
                    reqs.add(_REQUIREMENTS[type(node)])
            carriers.add(infer_kind(term.expression, kinds))
        if len(carriers) != 1:
            raise SuperAlgebraError(f"{self.name}: terms land in different carriers")
        if VECTOR_FIELD in kinds:
            reqs.add("delta")
        if self.requires_square_zero:
            reqs.add("square-zero")
        object.__setattr__(self, "carrier", carriers.pop())
        object.__setattr__(self, "requirements", frozenset(reqs))

    @property
    def arity(self) -> int:
        return len(self.slots)

    @property
    def slot_kinds(self) -> tuple:
        return tuple(s.kind for s in self.slots)

    @property
    def slot_names(self) -> tuple:
        return tuple(s.name for s in self.slots)

    def occurrences(self) -> tuple:
        """Maximum number of times each slot appears in a single term."""
        most = [0] * self.arity
        for term in self.terms:
            seen = [0] * self.arity
            for node in walk(term.expression):
                if isinstance(node, Slot):
                    seen[node.index] += 1
            most = [max(a, b) for a, b in zip(most, seen)]
        return tuple(most)

    @property
    def multilinear(self) -> bool:
        return all(n <= 1 for n in self.occurrences())

    def parity_assignments(self, overrides=None) -> list:
        """Every parity assignment of the slots, fixed slots held at their parity."""
        choices = []
        for i, s in enumerate(self.slots):
            fixed = s.parity
            if overrides is not None and overrides[i] is not None:
                fixed = overrides[i]
            choices.append((fixed,) if fixed is not None else (0, 1))
        return list(cartesian(*choices))

    def formula(self) -> str:
        names = self.slot_names
        parts = []
        for k, term in enumerate(self.terms):
            c = term.coefficient
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = render(term.expression, names)
            if term.sign.text:
                body = f"(-1)^({term.sign.text}) {body}"
            if mag != 1:
                body = f"{mag} {body}"
            parts.append((sign if k else ("-" if c < 0 else "")) + ("" if not k else " ") + body)
        return " ".join(parts) + " = 0"


def term(coefficient: int, sign: str, expression: Node, slot_names) -> TemplateTerm:
    return TemplateTerm(coefficient, SignExponent.parse(sign, slot_names), expression)


def template(name, slots, terms, **kwargs) -> IdentityTemplate:
    """Build a template; ``terms`` are ``(coefficient, sign_text, expression)`` triples."""
    slots = tuple(s if isinstance(s, SlotSpec) else SlotSpec(s) for s in slots)
    names = [s.name for s in slots]
    built = tuple(term(c, sgn, e, names) for c, sgn, e in terms)
    return IdentityTemplate(name, slots, built, **kwargs)


def slots(names: str):
    """``slots("xyz")`` -> ``(Slot(0,'x'), Slot(1,'y'), Slot(2,'z'))``."""
    return tuple(Slot(i, n) for i, n in enumerate(names))


# -- evaluation ----------------------------------------------------------------

class SparseInterpretation:
    """Evaluates template operations with the exact sparse kernel."""

    def __init__(self, structure: TPStructure | None = None, delta: Derivation | None = None):
        self.structure = structure
        self.delta = delta
        if structure is not None and delta is not None and structure.signature != delta.signature:
            raise SignatureMismatch("structure and delta act on different algebras")
        self.signature = structure.signature if structure is not None else (
            delta.signature if delta is not None else None
        )

    def check(self, template: IdentityTemplate):
        reqs = template.requirements
        if {"bracket", "ternary"} & reqs and self.structure is None:
            raise PreconditionError(f"{template.name} needs a bracket structure")
        if "product" in reqs and self.signature is None:
            raise PreconditionError(f"{template.name} needs an algebra")
        if "ternary" in reqs and self.structure.ternary_source is None:
            raise PreconditionError(f"{template.name} needs a ternary source derivation")
        if "delta" in reqs:
            if self.delta is None:
                raise PreconditionError(f"{template.name} needs an odd derivation delta")
            if self.delta.parity != 1:
                raise ParityError("delta must be an odd derivation")
        if "square-zero" in reqs and not is_square_zero(self.delta):
            raise PreconditionError(
                f"{template.name} requires delta^2 = 0, but {self.delta.name}^2 != 0"
            )

    def parity(self, value) -> int:
        return value.homogeneous_parity()

    def mul(self, a, b):
        return mul(a, b)

    def bracket(self, a, b):
        return even_lie_bracket(self.structure.bracket_source, a, b)

    def pseudo_bracket(self, a, b):
        return pseudo_bracket(self.structure.bracket_source, a, b)

    def vbracket(self, X, Y):
        return vf_bracket(self.delta, X, Y)

    def act(self, z, X):
        return module_action(z, X)

    def ternary(self, a, b, c):
        return ternary_bracket(self.structure, a, b, c)

    def der(self, a):
        return apply(self.structure.ternary_source, a)

    def combine(self, coeffs, values, carrier):
        if carrier == VECTOR_FIELD:
            if not values:
                return VectorField(self.delta.signature.zero(), self.delta)
            coeff = linear_combine(coeffs, [v.coefficient for v in values])
            return VectorField(coeff, self.delta)
        if not values:
            return self.signature.zero()
        return linear_combine(coeffs, values)


def evaluate_node(node, inputs, ops, memo):
    hit = memo.get(node)
    if hit is not None:
        return hit
    if isinstance(node, Slot):
        value = inputs[node.index]
    elif isinstance(node, Mul):
        value = ops.mul(evaluate_node(node.left, inputs, ops, memo),
                        evaluate_node(node.right, inputs, ops, memo))
    elif isinstance(node, Bracket):
        value = ops.bracket(evaluate_node(node.left, inputs, ops, memo),
                            evaluate_node(node.right, inputs, ops, memo))
    elif isinstance(node, PseudoBracket):
        value = ops.pseudo_bracket(evaluate_node(node.left, inputs, ops, memo),
                                   evaluate_node(node.right, inputs, ops, memo))
    elif isinstance(node, VBracket):
        value = ops.vbracket(evaluate_node(node.left, inputs, ops, memo),
                             evaluate_node(node.right, inputs, ops, memo))
    elif isinstance(node, Act):
        value = ops.act(evaluate_node(node.scalar, inputs, ops, memo),
                        evaluate_node(node.field, inputs, ops, memo))
    elif isinstance(node, Ternary):
        value = ops.ternary(*(evaluate_node(c, inputs, ops, memo) for c in _children(node)))
    elif isinstance(node, Der):
        value = ops.der(evaluate_node(node.arg, inputs, ops, memo))
    else:
        raise TypeError(f"unknown node {node!r}")
    memo[node] = value
    return value


def evaluate_with(template: IdentityTemplate, ops, inputs, parities):
    """Residual (LHS - RHS) of ``template`` under an arbitrary interpretation."""
    memo: dict = {}
    coeffs, values = [], []
    for t in template.terms:
        c = t.coefficient * koszul_sign(t.sign.evaluate(parities))
        coeffs.append(c)
        values.append(evaluate_node(t.expression, inputs, ops, memo))
    return ops.combine(coeffs, values, template.carrier)


def _input_parities(template, inputs, parities):
    if parities is not None:
        return tuple(int(p) for p in parities)
    out = []
    for spec, value in zip(template.slots, inputs):
        default = spec.parity if spec.parity is not None else 0
        try:
            out.append(value.homogeneous_parity(default))
        except ValueError:
            raise ParityError(f"slot {spec.name} input is not homogeneous: {value}") from None
    return tuple(out)


def evaluate(template: IdentityTemplate, structure: TPStructure | None, inputs, delta=None,
             parities=None):
    """Exact residual of ``template`` on homogeneous ``inputs``.

    ``parities`` overrides the parity read off the inputs; it only matters for
    zero inputs, where any parity is consistent.
    """
    inputs = tuple(inputs)
    if len(inputs) != template.arity:
        raise SuperAlgebraError(f"{template.name} takes {template.arity} inputs, got {len(inputs)}")
    for spec, value in zip(template.slots, inputs):
        want = VectorField if spec.kind == VECTOR_FIELD else Element
        if not isinstance(value, want):
            raise SuperAlgebraError(f"slot {spec.name} expects a {spec.kind}")
    ops = SparseInterpretation(structure, delta)
    ops.check(template)
    for value in inputs:
        sig = value.signature if isinstance(value, Element) else value.coefficient.signature
        if sig != ops.signature:
            raise SignatureMismatch("input lives in another algebra")
        if isinstance(value, VectorField) and value.derivation != delta:
            raise SignatureMismatch("vector field is built on another derivation")
    pars = _input_parities(template, inputs, parities)
    for spec, p in zip(template.slots, pars):
        if spec.parity is not None and p != spec.parity:
            raise ParityError(f"slot {spec.name} must have parity {spec.parity}")
    return evaluate_with(template, ops, inputs, pars)
