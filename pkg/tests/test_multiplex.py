"""The crossing-multiplexing transform and its band relation."""

from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from weldmux import (
    LengthMismatch,
    OVER,
    Word,
    load_fixture,
    mirror,
    multiplex,
    same_diagram,
    verify_multiplex_relation,
)

from conftest import all_fixtures, gauss_diagrams

weight_lists = st.lists(st.integers(-3, 3), min_size=1, max_size=3)


def weights_for(d, values):
    vals = list(values) + [1] * d.n_components
    return tuple(vals[: d.n_components])


# --------------------------------------------------------------------------
# Counting and signs.
# --------------------------------------------------------------------------

@given(gauss_diagrams(), weight_lists)
def test_multiplex_crossing_count(d, values):
    m = weights_for(d, values)
    out = multiplex(d, m)
    expected = sum(abs(m[d.over_component(c)]) for c in d.signs)
    assert len(out.signs) == expected


@given(gauss_diagrams(), weight_lists)
def test_multiplex_sign_multiset(d, values):
    m = weights_for(d, values)
    out = multiplex(d, m)
    expected: list[int] = []
    for c, s in d.signs.items():
        w = m[d.over_component(c)]
        expected += [s * (1 if w > 0 else -1)] * abs(w)
    assert sorted(out.signs.values()) == sorted(expected)


@given(gauss_diagrams())
def test_identity_weights_change_nothing(d):
    assert same_diagram(multiplex(d, (1,) * d.n_components), d)


@given(gauss_diagrams())
def test_zero_weights_erase_all_crossings(d):
    out = multiplex(d, (0,) * d.n_components)
    assert not out.signs
    assert out.n_components == d.n_components


@given(gauss_diagrams(), weight_lists, st.lists(st.integers(-2, 2), min_size=1, max_size=3))
def test_multiplex_composes_by_weightwise_product(d, values, values2):
    a = weights_for(d, values)
    b = weights_for(d, values2)
    lhs = multiplex(multiplex(d, a), b)
    rhs = multiplex(d, tuple(x * y for x, y in zip(a, b)))
    assert same_diagram(lhs, rhs)


def test_multiplex_weight_arity_is_checked():
    d = load_fixture("hopf")
    with pytest.raises(LengthMismatch):
        multiplex(d, (2,))
    with pytest.raises(LengthMismatch):
        multiplex(d, (2, 1, 1))


def test_mirror_compatibility_for_knots():
    for name, d in all_fixtures():
        if d.n_components != 1:
            continue
        for m in (-2, 0, 2, 3):
            assert same_diagram(
                multiplex(mirror(d), (m,)), mirror(multiplex(d, (m,)))
            ), (name, m)


def test_multiplexed_trefoil_weight_two_structure():
    out = multiplex(load_fixture("trefoil"), (2,))
    assert out.n_components == 1
    assert len(out.signs) == 6
    assert set(out.signs.values()) == {1}


# --------------------------------------------------------------------------
# The band relation: substituting the multiplexed strands back out of the
# Wirtinger relators must reproduce the weighted conjugation relator.
# --------------------------------------------------------------------------

@pytest.mark.parametrize("sign", (1, -1))
@pytest.mark.parametrize("m", range(-4, 5))
def test_band_relation_reduces_to_weighted_conjugation(sign, m):
    reduced = verify_multiplex_relation(sign, m)
    a, b, c = 0, 1, 2
    expected = (
        Word.gen(c, -1)
        * Word.gen(b) ** (-sign * m)
        * Word.gen(a)
        * Word.gen(b) ** (sign * m)
    )
    assert reduced == expected
