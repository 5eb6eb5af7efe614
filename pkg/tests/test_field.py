import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fewweight.errors import BadDivisor, DivisionByZero, LogOfZero, NotIrreducible, NotOddPrime, NotPrimitive
from fewweight.field import build_field, field_arith, is_irreducible

from .conftest import field

SMALL_FIELDS = [(3, 1), (3, 2), (3, 3), (5, 2), (7, 2), (3, 4), (5, 3)]


def brute_order(elem_mul, one, x):
    k, cur = 1, x
    while cur != one:
        cur = elem_mul(cur, x)
        k += 1
    return k


def test_f3_alpha_is_smallest_primitive_root():
    orders = {g: brute_order(lambda a, b: a * b % 3, 1, g) for g in (1, 2)}
    smallest = min(g for g, k in orders.items() if k == 2)
    assert build_field(3, 1).alpha == smallest == 2


def test_non_primitive_modulus_rejected():
    # F_3[i]/(i^2 + 1): represent a + b i as a pair and find the order of i directly
    def mul(x, y):
        a, b = x
        c, d = y
        return ((a * c - b * d) % 3, (a * d + b * c) % 3)

    assert brute_order(mul, (1, 0), (0, 1)) == 4
    with pytest.raises(NotPrimitive):
        build_field(3, 2, [1, 0, 1])


def test_reducible_modulus_rejected():
    with pytest.raises(NotIrreducible):
        build_field(3, 2, [2, 0, 1])  # x^2 - 1 = (x - 1)(x + 1)


@pytest.mark.parametrize("p", [2, 4, 9, 1])
def test_not_odd_prime(p):
    with pytest.raises(NotOddPrime):
        build_field(p, 2)


def test_supplied_modulus_must_be_monic_degree_m():
    with pytest.raises(ValueError):
        build_field(3, 2, [2, 1, 2])
    with pytest.raises(ValueError):
        build_field(3, 2, [2, 1])


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_canonical_modulus_is_smallest_primitive(p, m):
    F = field(p, m)
    assert F.modulus[-1] == 1 and len(F.modulus) == m + 1
    for tail in itertools.product(range(p), repeat=m):
        if tuple(tail) == F.modulus[:-1]:
            break
        f = list(tail) + [1]
        if f[0] == 0 or not is_irreducible(f, p):
            continue
        with pytest.raises(NotPrimitive):
            build_field(p, m, f)


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_alpha_has_full_order_and_log_roundtrip(p, m):
    F = field(p, m)
    powers = [F.exp(i) for i in range(F.q - 1)]
    assert len(set(powers)) == F.q - 1 and 0 not in powers
    assert F.pow(F.alpha, F.q - 1) == 1
    for x in range(1, F.q):
        assert F.exp(F.log(x)) == x
    for i in range(F.q - 1):
        assert F.log(F.exp(i)) == i


@pytest.mark.parametrize("p,m", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_table_and_polynomial_multiplication_agree(p, m):
    F = field(p, m)
    for x in range(F.q):
        for y in range(F.q):
            assert F._mul_table(x, y) == F._mul_poly(x, y)


def test_mul_array_matches_scalar(F9):
    xs = np.arange(9)
    table = F9.mul_array(xs[:, None], xs[None, :])
    assert all(table[x, y] == F9.mul(x, y) for x in range(9) for y in range(9))


def test_field_axioms_exhaustive_f9(F9):
    els = range(9)
    for x, y, z in itertools.product(els, repeat=3):
        assert F9.mul(x, F9.add(y, z)) == F9.add(F9.mul(x, y), F9.mul(x, z))
        assert F9.mul(F9.mul(x, y), z) == F9.mul(x, F9.mul(y, z))
    for x in els:
        assert F9.add(x, F9.neg(x)) == 0
        if x:
            assert F9.mul(x, F9.inv(x)) == 1


def test_f9_alpha4_is_minus_one(F9):
    order_two = [x for x in range(1, 9) if x != 1 and F9.mul(x, x) == 1]
    assert order_two == [F9.neg(1)]
    assert F9.pow(F9.alpha, 4) == F9.neg(1)


def test_inverse_of_zero():
    F = field(5, 2)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        field_arith(F, "inv", 0)


def test_field_arith_dispatch(F9):
    assert field_arith(F9, "mul", 5, F9.inv(5)) == 1
    assert field_arith(F9, "pow", F9.alpha, 8) == 1
    assert field_arith(F9, "sub", 7, 7) == 0
    with pytest.raises(ValueError):
        field_arith(F9, "div", 1, 1)


def test_discrete_log():
    F = field(7, 2)
    assert F.log(1) == 0
    assert F.log(F.alpha) == 1
    assert F.log(F.pow(F.alpha, 5)) == 5
    assert F.log(F.pow(F.alpha, 53)) == 53 % 48
    with pytest.raises(LogOfZero):
        F.log(0)


def test_tokens_roundtrip(F9):
    for x in range(9):
        assert F9.from_token(F9.to_token(x)) == x
    assert F9.to_token(0) == "0" and F9.to_token(1) == 0 and F9.to_token(F9.alpha) == 1
    with pytest.raises(ValueError):
        F9.from_token("1")


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_trace_properties(p, m):
    F = field(p, m)
    traces = [F.trace(x) for x in range(F.q)]
    assert traces == F.trace_table.tolist()
    assert F.trace(0) == 0
    assert F.trace(1) == m % p
    # kernel has p^(m-1) elements and every residue is hit equally often
    assert np.bincount(traces, minlength=p).tolist() == [p ** (m - 1)] * p
    for x in range(F.q):
        assert F.trace(F.pow(x, p)) == F.trace(x)


def test_trace_kernel_f9_by_enumeration(F9):
    assert sum(1 for x in range(9) if F9.trace(x) == 0) == 3


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_trace_is_fp_linear(pm, data):
    F = field(*pm)
    x = data.draw(st.integers(0, F.q - 1))
    y = data.draw(st.integers(0, F.q - 1))
    c = data.draw(st.integers(0, F.p - 1))
    assert F.trace(F.add(F.mul(c, x), y)) == (c * F.trace(x) + F.trace(y)) % F.p


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_additive_character_completeness(p, m):
    """For z != 0, tr(zx) takes each residue equally often, so sum omega^tr(zx) = 0."""
    F = field(p, m)
    for z in range(1, F.q):
        counts = np.bincount([F.trace(F.mul(z, x)) for x in range(F.q)], minlength=p)
        assert len(set(counts.tolist())) == 1


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_cyclotomic_classes_partition(p, m):
    F = field(p, m)
    for N in (d for d in range(1, F.q) if (F.q - 1) % d == 0):
        classes = [F.cyclotomic_class(i, N) for i in range(N)]
        flat = [x for c in classes for x in c]
        assert len(flat) == len(set(flat)) == F.q - 1
        assert [F.log(x) for x in classes[0]] == sorted(F.log(x) for x in classes[0])


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_prime_subfield_is_a_cyclotomic_class(p, m):
    F = field(p, m)
    assert sorted(F.cyclotomic_class(0, (F.q - 1) // (p - 1))) == list(range(1, p))


def test_cyclotomic_examples(F9):
    assert sorted(F9.cyclotomic_class(0, 1)) == list(range(1, 9))
    assert all(len(F9.cyclotomic_class(i, 8)) == 1 for i in range(8))
    squares = sorted({F9.mul(x, x) for x in range(1, 9)})
    assert sorted(F9.cyclotomic_class(0, 2)) == squares and len(squares) == 4
    with pytest.raises(BadDivisor):
        F9.cyclotomic_class(0, 3)


def test_large_field_uses_polynomial_path():
    F = build_field(3, 13)
    assert not F.has_tables
    a = F.alpha
    assert F.pow(a, F.q - 1) == 1
    assert F.pow(a, (F.q - 1) // 2) != 1
    x = F.pow(a, 123457)
    assert F.mul(x, F.inv(x)) == 1
    assert F.log(x) == 123457
    assert F.trace(1) == 13 % 3


def test_alternative_modulus():
    F = build_field(3, 2, [2, 2, 1])  # x^2 + 2x + 2 is primitive over F_3
    assert F.modulus == (2, 2, 1)
    assert F.pow(F.alpha, 8) == 1 and F.pow(F.alpha, 4) != 1
