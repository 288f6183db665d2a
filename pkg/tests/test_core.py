from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SIG, elements, homogeneous
from dense_oracle import DenseGrassmann
from supertp import (
    ANY_PARITY,
    INHOMOGENEOUS,
    AlgebraSignature,
    Element,
    Monomial,
    Parity,
    decompose_homogeneous,
    linear_combine,
    mul,
    parity_of,
)
from supertp.core import koszul_sign
from supertp.errors import SignatureMismatch


def test_odd_generators_anticommute(A):
    th1, th2 = A.gen("th1"), A.gen("th2")
    assert str(th1 * th2) == "th1*th2"
    assert th2 * th1 == -(th1 * th2)


def test_odd_square_is_zero(A):
    th1 = A.gen("th1")
    assert (th1 * th1).is_zero()


def test_distributive_example(A):
    t, th1, th2 = A.gens()
    lhs = (t + th1 * th2) * t
    assert lhs == t**2 + t * th1 * th2


def test_mul_rejects_other_signature(A):
    B = AlgebraSignature(("t",), ("th1",), name="B")
    with pytest.raises(SignatureMismatch):
        mul(A.gen("t"), B.gen("t"))


@pytest.mark.parametrize(
    "coeffs, build, expected",
    [
        ([1, -1], lambda A: [A.gen("t"), A.gen("t")], lambda A: A.zero()),
        ([2, 3], lambda A: [A.gen("th1"), A.gen("th1")], lambda A: A.gen("th1").scale(5)),
        (
            [1, 1],
            lambda A: [A.gen("t") + A.gen("th1"), A.gen("t") - A.gen("th1")],
            lambda A: A.gen("t").scale(2),
        ),
    ],
)
def test_linear_combine(A, coeffs, build, expected):
    assert linear_combine(coeffs, build(A)) == expected(A)


def test_linear_combine_signature_mismatch(A):
    B = AlgebraSignature(("u",), ())
    with pytest.raises(SignatureMismatch):
        linear_combine([1, 1], [A.gen("t"), B.gen("u")])


def test_parity_of(A):
    t, th1, th2 = A.gens()
    assert parity_of(t**2 * th1) == Parity.ODD
    assert parity_of(t + th1) == INHOMOGENEOUS
    assert parity_of(A.zero()) == ANY_PARITY
    assert parity_of(th1 * th2) == Parity.EVEN


def test_decompose_homogeneous(A):
    t, th1, th2 = A.gens()
    assert decompose_homogeneous(t + th1) == (t, th1)
    assert decompose_homogeneous(th1 * th2) == (th1 * th2, A.zero())
    assert decompose_homogeneous(A.zero()) == (A.zero(), A.zero())


def test_zero_coefficients_not_stored(A):
    e = Element({A.unit_monomial(): Fraction(0)}, A)
    assert e.terms == {}
    assert (A.gen("t") - A.gen("t")).terms == {}


def test_canonical_printing(A):
    t, th1, th2 = A.gens()
    e = th2 * th1 * Fraction(3, 2) - t**2 + 1
    assert str(e) == "1 - t^2 - 3/2*th1*th2"


@given(homogeneous(), homogeneous())
def test_supercommutativity(pa, pb):
    (p, a), (q, b) = pa, pb
    assert mul(a, b) == mul(b, a).scale(koszul_sign(p * q))


@given(elements(), elements(), elements())
@settings(max_examples=60)
def test_associativity(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(elements(), elements(), elements())
@settings(max_examples=60)
def test_distributivity(a, b, c):
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@given(homogeneous(), homogeneous())
def test_parity_additivity(pa, pb):
    (p, a), (q, b) = pa, pb
    prod = mul(a, b)
    assert prod.is_zero() or parity_of(prod) == (p + q) % 2


@given(elements())
def test_decomposition_recombines(a):
    even, odd = decompose_homogeneous(a)
    assert even + odd == a
    assert parity_of(even) in (Parity.EVEN, ANY_PARITY)
    assert parity_of(odd) in (Parity.ODD, ANY_PARITY)


def test_grassmann_products_match_dense_table():
    sig = AlgebraSignature((), ("th1", "th2", "th3", "th4"))
    dense = DenseGrassmann(4)
    mismatches = 0
    for a in range(16):
        for b in range(16):
            sparse = mul(Element({Monomial((), a): 1}, sig), Element({Monomial((), b): 1}, sig))
            expected = dense.mul(dense.basis(a), dense.basis(b))
            if dense.from_element(sparse) != expected:
                mismatches += 1
    assert mismatches == 0


def test_monomial_builder_follows_written_order(A):
    assert A.monomial(odd=("th2", "th1")) == -(A.gen("th1") * A.gen("th2"))
    assert A.monomial({"t": 3}, ("th1",), coeff=2) == A.gen("t") ** 3 * A.gen("th1") * 2


def test_signature_rejects_duplicates():
    with pytest.raises(ValueError):
        AlgebraSignature(("t",), ("t",))


@given(st.integers(0, 255), st.integers(0, 255))
def test_odd_sign_matches_bubble_sort(a, b):
    from dense_oracle import sorted_sign

    sig = AlgebraSignature((), tuple(f"e{i}" for i in range(8)))
    prod = mul(Element({Monomial((), a): 1}, sig), Element({Monomial((), b): 1}, sig))
    fa = [i for i in range(8) if a >> i & 1]
    fb = [i for i in range(8) if b >> i & 1]
    sign, mask = sorted_sign(fa + fb)
    if sign == 0:
        assert prod.is_zero()
    else:
        assert prod.terms == {Monomial((), mask): sign}


def test_hypothesis_signature_is_stable():
    assert SIG.even_generators == ("t", "s")
