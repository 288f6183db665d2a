"""Randomized verification and exhaustive counterexample search."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ..brackets import TPStructure, VectorField, ternary_bracket
from ..core import Element, Monomial
from ..derivations import Derivation
from .sampler import SamplerConfig, sample_tuple
from .templates import (
    VECTOR_FIELD,
    IdentityTemplate,
    SparseInterpretation,
    evaluate_with,
)

HOLDS = "holds-on-samples"
VIOLATED = "violated"


def serialize(value) -> str:
    return str(value)


@dataclass
class Violation:
    index: int
    inputs: tuple
    residual: object

    def to_json(self) -> dict:
        return {"inputs": [serialize(v) for v in self.inputs], "residual": serialize(self.residual)}


@dataclass
class VerificationReport:
    identity: str
    structure: str
    samples: int
    seed: int
    parity_sweeps: int
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return VIOLATED if self.violations else HOLDS

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        ordered = sorted(self.violations, key=lambda v: v.index)
        return {
            "identity": self.identity,
            "structure": self.structure,
            "samples": self.samples,
            "seed": self.seed,
            "parity_sweeps": self.parity_sweeps,
            "status": "holds" if self.holds else "violated",
            "violations": [v.to_json() for v in ordered],
            "notes": list(self.notes),
        }


def describe_context(structure: TPStructure | None, delta: Derivation | None) -> str:
    parts = []
    if structure is not None:
        parts.append(structure.describe())
    if delta is not None:
        kind = "odd" if delta.parity else "even"
        text = f"vector fields over {kind} {delta.name}"
        if structure is None:
            text += f" on {delta.signature.describe()}"
        parts.append(text)
    return "; ".join(parts)


def _context(structure, delta):
    ops = SparseInterpretation(structure, delta)
    return ops, ops.signature


def ternary_degeneracy_note(structure: TPStructure, config: SamplerConfig, samples: int = 20):
    """Observation only: does the ternary bracket vanish when both derivations coincide?"""
    if structure.ternary_source is None or structure.ternary_source != structure.bracket_source:
        return None
    vanished = 0
    for i in range(samples):
        x, y, z = sample_tuple(config, ("element",) * 3, structure.signature, index=10**6 + i)
        if not ternary_bracket(structure, x, y, z):
            vanished += 1
    return (f"observed: with ternary source equal to bracket source the ternary bracket "
            f"vanished on {vanished}/{samples} sampled triples (not asserted)")


def verify(template: IdentityTemplate, structure: TPStructure | None, config: SamplerConfig,
           samples: int = 100, delta: Derivation | None = None) -> VerificationReport:
    """Evaluate ``template`` on ``samples`` seeded tuples.

    Draw ``i`` uses parity assignment ``i mod n`` of the ``n`` admissible
    assignments, so every sign branch is hit once ``samples >= n``.
    """
    ops, signature = _context(structure, delta)
    ops.check(template)
    assignments = template.parity_assignments(config.parities)
    report = VerificationReport(
        identity=template.name,
        structure=describe_context(structure, delta),
        samples=samples,
        seed=config.seed,
        parity_sweeps=min(samples, len(assignments)),
        notes=list(template.notes),
    )
    kinds = template.slot_kinds
    for i in range(samples):
        pars = assignments[i % len(assignments)]
        inputs = sample_tuple(config, kinds, signature, index=i, parities=pars, delta=delta)
        residual = evaluate_with(template, ops, inputs, pars)
        if residual:
            report.violations.append(Violation(i, inputs, residual))
    if "ternary" in template.requirements:
        note = ternary_degeneracy_note(structure, config)
        if note:
            report.notes.append(note)
    return report


def check_ternary_parity(structure: TPStructure, config: SamplerConfig, samples: int = 100):
    """Sampled check that ``|[x,y,z]| = |x|+|y|+|z|``; returns the failing draws."""
    failures = []
    assignments = list(product((0, 1), repeat=3))
    for i in range(samples):
        pars = assignments[i % len(assignments)]
        x, y, z = sample_tuple(config, ("element",) * 3, structure.signature, index=i,
                               parities=pars)
        value = ternary_bracket(structure, x, y, z)
        if value and value.homogeneous_parity() != sum(pars) % 2:
            failures.append((i, (x, y, z), value))
    return failures


# -- exhaustive search ---------------------------------------------------------

@dataclass
class SearchResult:
    identity: str
    witness: tuple | None
    residual: object
    examined: int
    degree_bound: int
    notes: list = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def __str__(self):
        if not self.found:
            return f"{self.identity}: none found ({self.examined} tuples, degree <= {self.degree_bound})"
        args = ", ".join(serialize(v) for v in self.witness)
        return f"{self.identity}: witness ({args}) -> residual {serialize(self.residual)}"

    def to_report(self, structure_text: str) -> VerificationReport:
        report = VerificationReport(
            identity=self.identity,
            structure=structure_text,
            samples=self.examined,
            seed=0,
            parity_sweeps=0,
            notes=list(self.notes),
        )
        if self.found:
            report.violations.append(Violation(0, self.witness, self.residual))
        return report


def bounded_monomials(signature, degree_bound: int) -> list:
    """Monomials of total degree (even exponents plus odd factors) <= bound, canonical order."""
    n_even, n_odd = len(signature.even_generators), len(signature.odd_generators)
    out = []
    for exps in product(range(degree_bound + 1), repeat=n_even):
        for mask in range(1 << n_odd):
            m = Monomial(exps, mask)
            if m.degree <= degree_bound:
                out.append(m)
    return sorted(out, key=signature.monomial_key)


def _candidates(spec, monomials, signature, delta, repeated: bool, max_terms: int):
    """Candidate values for one slot: monomials, then (for repeated slots) binomial sums."""
    one = Fraction(1)
    shift = delta.parity if spec.kind == VECTOR_FIELD else 0
    usable = [m for m in monomials
              if spec.parity is None or (m.parity + shift) % 2 == spec.parity]
    values = [{m: one} for m in usable]
    if repeated and max_terms >= 2:
        for i, m in enumerate(usable):
            for n in usable[i + 1:]:
                if m.parity == n.parity:
                    values.append({m: one, n: one})
    out = []
    for terms in values:
        elem = Element(terms, signature)
        parity = (next(iter(terms)).parity + shift) % 2
        out.append(((VectorField(elem, delta) if spec.kind == VECTOR_FIELD else elem), parity))
    return out


def search_counterexample(template: IdentityTemplate, structure: TPStructure | None,
                          degree_bound: int, delta: Derivation | None = None,
                          max_terms: int = 2) -> SearchResult:
    """Exhaustive, lexicographically ordered search for a nonzero residual.

    Each slot ranges over unit-coefficient monomials of total degree at most
    ``degree_bound``. A slot that occurs more than once in some term makes the
    template nonlinear in it, so monomials do not span; such slots also range
    over sums of two distinct same-parity monomials (``max_terms >= 2``).
    """
    ops, signature = _context(structure, delta)
    ops.check(template)
    monomials = bounded_monomials(signature, degree_bound)
    occurrences = template.occurrences()
    pools = [
        _candidates(spec, monomials, signature, delta, occurrences[i] > 1, max_terms)
        for i, spec in enumerate(template.slots)
    ]
    examined = 0
    notes = list(template.notes)
    if not template.multilinear and max_terms >= 2:
        notes.append("repeated slots also range over sums of two monomials")
    for combo in product(*pools):
        examined += 1
        inputs = tuple(v for v, _ in combo)
        pars = tuple(p for _, p in combo)
        residual = evaluate_with(template, ops, inputs, pars)
        if residual:
            return SearchResult(template.name, inputs, residual, examined, degree_bound, notes)
    return SearchResult(template.name, None, None, examined, degree_bound, notes)
