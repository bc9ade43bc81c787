"""Words, presentations, Fox calculus, and abelianization."""

from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from weldmux import (
    LaurentPolynomial,
    Word,
    abelianization,
    count_homs,
    fox_derivative,
    generalized_presentation,
    jacobian,
    load_fixture,
    multiplex,
    parse_presentation,
    render_presentation,
    simplify,
    symmetric_group,
    wirtinger_presentation,
)
from weldmux.invariants import alexander_of_presentation

from conftest import all_fixtures, gauss_diagrams

words = st.lists(
    st.tuples(st.integers(0, 3), st.sampled_from((1, -1))), max_size=8
).map(lambda ls: Word.of(*ls))


# --------------------------------------------------------------------------
# Free-group words.
# --------------------------------------------------------------------------

@given(words, words)
def test_word_multiplication_reduces(u, v):
    w = u * v
    for (a, ea), (b, eb) in zip(w.letters, w.letters[1:]):
        assert not (a == b and ea + eb == 0)


@given(words)
def test_word_inverse_cancels(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()
    assert w.inverse().inverse() == w


@given(words, st.integers(-4, 4))
def test_word_powers(w, n):
    expected = Word()
    step = w if n >= 0 else w.inverse()
    for _ in range(abs(n)):
        expected = expected * step
    assert w**n == expected


@given(words, words)
def test_word_substitute_self_is_identity_map(u, v):
    # substituting x9 (absent) changes nothing
    assert u.substitute(9, v) == u


def test_word_substitute_replaces_both_signs():
    w = Word.of((0, 1), (1, 1), (0, -1))
    sub = Word.of((2, 1), (3, 1))
    got = w.substitute(0, sub)
    assert got == Word.of((2, 1), (3, 1), (1, 1), (3, -1), (2, -1))


# --------------------------------------------------------------------------
# Fox derivative: defining laws.
# --------------------------------------------------------------------------

def fox_product_rule(u: Word, v: Word, g: int) -> dict[Word, int]:
    out = dict(fox_derivative(u, g))
    for w, c in fox_derivative(v, g).items():
        key = u * w
        out[key] = out.get(key, 0) + c
        if not out[key]:
            del out[key]
    return out


@given(words, words, st.integers(0, 3))
def test_fox_derivative_product_rule(u, v, g):
    assert fox_derivative(u * v, g) == fox_product_rule(u, v, g)


@given(st.integers(0, 3))
def test_fox_derivative_of_generators(g):
    assert fox_derivative(Word.gen(g), g) == {Word(): 1}
    assert fox_derivative(Word.gen(g, -1), g) == {Word.gen(g, -1): -1}
    assert fox_derivative(Word.gen((g + 1) % 4), g) == {}


@given(words, st.integers(0, 3))
def test_fox_derivative_of_inverse(w, g):
    # ∂(w^-1) = -w^-1 · ∂w
    lhs = fox_derivative(w.inverse(), g)
    rhs: dict[Word, int] = {}
    for u, c in fox_derivative(w, g).items():
        key = w.inverse() * u
        rhs[key] = rhs.get(key, 0) - c
        if not rhs[key]:
            del rhs[key]
    assert lhs == rhs


# --------------------------------------------------------------------------
# Diagram presentations.
# --------------------------------------------------------------------------

def test_trefoil_wirtinger_shape():
    p = wirtinger_presentation(load_fixture("trefoil"))
    assert len(p.generators) == 3
    assert len(p.relators) == 3
    ab = abelianization(p)
    assert ab.rank == 1 and ab.torsion == ()


@given(gauss_diagrams(max_crossings=4))
def test_abelianization_is_free_of_component_rank(d):
    p = wirtinger_presentation(d)
    ab = abelianization(p)
    # arcless components contribute a free generator each
    assert ab.torsion == ()
    assert ab.rank == d.n_components


def test_generalized_weight_one_is_wirtinger():
    for name, d in all_fixtures():
        assert generalized_presentation(d, 1) == wirtinger_presentation(d), name


def test_generalized_weight_zero_abelianization_is_free():
    for name, d in all_fixtures():
        p = generalized_presentation(d, 0)
        ab = abelianization(p)
        assert ab.torsion == (), name
        assert ab.rank == d.n_components, name
        assert count_homs(p, symmetric_group(3)) == 6**d.n_components, name


def test_generalized_presentation_matches_multiplexed_wirtinger_on_trefoil():
    d = load_fixture("trefoil")
    for m in (-2, -1, 0, 1, 2, 3):
        gp = generalized_presentation(d, m)
        wp = wirtinger_presentation(multiplex(d, (m,)))
        assert count_homs(gp, symmetric_group(4)) == count_homs(wp, symmetric_group(4)), m
        assert alexander_of_presentation(gp, 1, "single") == alexander_of_presentation(
            wp, 1, "single"
        ), m


# --------------------------------------------------------------------------
# Simplification preserves everything we compute.
# --------------------------------------------------------------------------

@given(gauss_diagrams(max_crossings=4))
def test_simplify_preserves_invariants(d):
    p = wirtinger_presentation(d)
    q = simplify(p)
    assert len(q.generators) <= len(p.generators)
    s3 = symmetric_group(3)
    assert count_homs(p, s3) == count_homs(q, s3)
    assert abelianization(p).rank == abelianization(q).rank
    assert abelianization(p).torsion == abelianization(q).torsion
    assert alexander_of_presentation(p, 1, "single") == alexander_of_presentation(
        q, 1, "single"
    )


# --------------------------------------------------------------------------
# Jacobian.
# --------------------------------------------------------------------------

@given(gauss_diagrams(max_crossings=4))
def test_jacobian_rows_annihilate_the_augmentation_column(d):
    """Fox calculus chain rule: the row of ∂r/∂x_j, weighted by
    (φ(x_j) - 1), sums to φ(r) - 1 = 0 for every relator."""
    p = wirtinger_presentation(d)
    for mode in ("single", "multi"):
        arity = 1 if mode == "single" else max(p.n_components, 1)
        j = jacobian(p, mode)
        comp_of = p.component_of()
        cols = []
        for g in p.generators:
            exp = [0] * arity
            exp[0 if mode == "single" else comp_of[g.id]] = 1
            cols.append(
                LaurentPolynomial.monomial(arity, tuple(exp))
                - LaurentPolynomial.one(arity)
            )
        for row in j:
            total = LaurentPolynomial.zero(arity)
            for entry, col in zip(row, cols):
                total = total + entry * col
            assert total.is_zero()


def test_jacobian_shape_and_single_variable_collapse():
    p = wirtinger_presentation(load_fixture("hopf"))
    jm = jacobian(p, "multi")
    js = jacobian(p, "single")
    assert len(jm) == len(p.relators) and len(jm[0]) == len(p.generators)
    # collapsing t1, t2 -> t turns the multi Jacobian into the single one
    from weldmux import specialize

    t = LaurentPolynomial.variable(1, 0)
    collapsed = [[specialize(e, [t, t]) for e in row] for row in jm]
    assert collapsed == js


# --------------------------------------------------------------------------
# Text form.
# --------------------------------------------------------------------------

def test_presentation_render_parse_round_trip():
    for name, d in all_fixtures():
        p = simplify(wirtinger_presentation(d))
        back = parse_presentation(render_presentation(p))
        assert [g.id for g in back.generators] == [g.id for g in p.generators], name
        assert back.relators == p.relators, name


def test_parse_presentation_rejects_garbage():
    from weldmux import GaussSyntaxError

    with pytest.raises(GaussSyntaxError):
        parse_presentation("x0 | x1")
    with pytest.raises(GaussSyntaxError):
        parse_presentation("< y0 | >")
