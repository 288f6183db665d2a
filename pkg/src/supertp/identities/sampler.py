"""Seeded sampling of homogeneous elements and vector fields."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from ..brackets import VectorField
from ..core import AlgebraSignature, Element, Monomial
from ..derivations import Derivation
from ..errors import SuperAlgebraError
from .templates import VECTOR_FIELD


@dataclass(frozen=True)
class SamplerConfig:
    max_monomials: int = 3
    max_even_degree: int = 2
    coefficient_bound: int = 3
    parities: tuple | None = None  # per-slot fixed parity or None to sweep
    seed: int = 0

    def __post_init__(self):
        for field_name in ("max_monomials", "max_even_degree", "coefficient_bound"):
            if getattr(self, field_name) < 1:
                raise SuperAlgebraError(f"{field_name} must be >= 1")


@lru_cache(maxsize=64)
def monomial_pool(signature: AlgebraSignature, max_even_degree: int) -> tuple:
    """Monomials with even degree <= bound, split by parity: ``(even, odd)``."""
    n_even, n_odd = len(signature.even_generators), len(signature.odd_generators)
    pools = ([], [])
    for exps in product(range(max_even_degree + 1), repeat=n_even):
        if sum(exps) > max_even_degree:
            continue
        for mask in range(1 << n_odd):
            m = Monomial(exps, mask)
            pools[m.parity].append(m)
    return tuple(sorted(p, key=signature.monomial_key) for p in pools)


def draw_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"supertp:{seed}:{index}")


def random_element(rng: random.Random, signature: AlgebraSignature, parity: int,
                   config: SamplerConfig) -> Element:
    pool = monomial_pool(signature, config.max_even_degree)[parity]
    if not pool:
        return signature.zero()
    count = rng.randint(1, min(config.max_monomials, len(pool)))
    bound = config.coefficient_bound
    terms = {}
    for m in rng.sample(pool, count):
        c = rng.randint(1, bound)
        terms[m] = Fraction(c if rng.random() < 0.5 else -c)
    return Element(terms, signature)


def sample_tuple(config: SamplerConfig, slot_kinds, signature: AlgebraSignature,
                 index: int = 0, parities=None, delta: Derivation | None = None) -> tuple:
    """Draw number ``index`` of the stream fixed by ``config.seed``.

    ``parities`` gives the parity of each slot value (vector fields included);
    unspecified slots take ``config.parities`` or a random parity.
    """
    rng = draw_rng(config.seed, index)
    out = []
    for i, kind in enumerate(slot_kinds):
        p = None
        if parities is not None:
            p = parities[i]
        if p is None and config.parities is not None:
            p = config.parities[i]
        if p is None:
            p = rng.randint(0, 1)
        if kind == VECTOR_FIELD:
            if delta is None:
                raise SuperAlgebraError("vector-field slots need a derivation delta")
            coeff = random_element(rng, signature, (p + delta.parity) % 2, config)
            out.append(VectorField(coeff, delta))
        else:
            out.append(random_element(rng, signature, p, config))
    return tuple(out)
