"""Determinants, minor gcds, and Smith normal form against oracles."""

from __future__ import annotations

import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from weldmux import EmptyInput, LaurentPolynomial, NotSquare, SizeOutOfRange, associates, normalize
from weldmux.matrices import (
    cofactor_determinant,
    determinant,
    minors_gcd,
    smith_normal_form,
)


def random_poly(rng: random.Random, arity: int) -> LaurentPolynomial:
    terms = {}
    for _ in range(rng.randint(0, 3)):
        exp = tuple(rng.randint(-2, 2) for _ in range(arity))
        terms[exp] = rng.randint(-4, 4)
    return LaurentPolynomial(arity, terms)


def random_matrix(rng: random.Random, n: int, arity: int):
    return [[random_poly(rng, arity) for _ in range(n)] for _ in range(n)]


# --------------------------------------------------------------------------
# Determinant.
# --------------------------------------------------------------------------

def test_determinant_matches_cofactor_oracle():
    rng = random.Random(20240817)
    for trial in range(120):
        n = rng.randint(1, 4)
        arity = rng.randint(1, 2)
        m = random_matrix(rng, n, arity)
        assert determinant(m) == cofactor_determinant(m), (trial, n)


def test_determinant_row_swap_negates():
    rng = random.Random(5)
    for _ in range(20):
        m = random_matrix(rng, 3, 1)
        swapped = [m[1], m[0], m[2]]
        assert determinant(swapped) == -determinant(m)


def test_determinant_of_triangular_is_diagonal_product():
    t = LaurentPolynomial.variable(1, 0)
    one = LaurentPolynomial.one(1)
    zero = LaurentPolynomial.zero(1)
    m = [
        [one - t, one, t],
        [zero, t**2, one - t],
        [zero, zero, one + t],
    ]
    assert determinant(m) == (one - t) * t**2 * (one + t)


def test_determinant_handles_negative_exponents():
    t = LaurentPolynomial.variable(1, 0)
    tinv = LaurentPolynomial.monomial(1, (-1,))
    one = LaurentPolynomial.one(1)
    m = [[tinv, one], [one, t]]
    assert determinant(m) == LaurentPolynomial.zero(1)
    m2 = [[tinv, one], [one, tinv]]
    assert determinant(m2) == LaurentPolynomial.monomial(1, (-2,)) - one


def test_determinant_shape_errors():
    one = LaurentPolynomial.one(1)
    with pytest.raises(NotSquare):
        determinant([[one, one]])
    with pytest.raises(EmptyInput):
        determinant([])
    with pytest.raises(EmptyInput):
        cofactor_determinant([])


# --------------------------------------------------------------------------
# Minor gcds.
# --------------------------------------------------------------------------

def test_minors_gcd_conventions():
    t = LaurentPolynomial.variable(1, 0)
    one = LaurentPolynomial.one(1)
    zero = LaurentPolynomial.zero(1)
    m = [[one - t, zero], [zero, one - t]]
    assert minors_gcd(m, 0).is_one()
    assert associates(minors_gcd(m, 1), one - t)
    assert associates(minors_gcd(m, 2), (one - t) ** 2)
    with pytest.raises(SizeOutOfRange):
        minors_gcd(m, 3)
    assert minors_gcd([], 0, arity=1).is_one()
    with pytest.raises(EmptyInput):
        minors_gcd([], 0)


def test_minors_gcd_of_all_zero_matrix_is_zero():
    zero = LaurentPolynomial.zero(1)
    m = [[zero, zero], [zero, zero]]
    assert minors_gcd(m, 1).is_zero()


def test_minors_gcd_is_normalized():
    t = LaurentPolynomial.variable(1, 0)
    p = (LaurentPolynomial.one(1) - t).scale(-2).shift((3,))
    got = minors_gcd([[p]], 1)
    assert got == normalize(p)


# --------------------------------------------------------------------------
# Smith normal form.
# --------------------------------------------------------------------------

def test_smith_normal_form_examples():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) == (2, 2, 156)
    assert smith_normal_form([[1, 0], [0, 1]]) == (1, 1)
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, 0)
    assert smith_normal_form([[6]]) == (6,)
    assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)


def test_smith_normal_form_matches_sympy():
    rng = random.Random(99)
    for trial in range(150):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        ours = smith_normal_form(m)
        ref = sympy_snf(sympy.Matrix(m))
        k = min(rows, cols)
        theirs = [abs(ref[i, i]) for i in range(min(ref.rows, ref.cols))]
        theirs += [0] * (k - len(theirs))
        assert list(ours) == theirs, (trial, m)


def test_smith_normal_form_divisibility_chain():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)]
        f = smith_normal_form(m)
        assert len(f) == min(rows, cols)
        for a, b in zip(f, f[1:]):
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0
