"""Gauss-code parsing, serialization, and canonical-form laws."""

from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from weldmux import (
    Endpoint,
    GaussDiagram,
    GaussSyntaxError,
    LengthMismatch,
    OVER,
    RoleConflict,
    SignConflict,
    UNDER,
    UnpairedCrossing,
    canonical,
    fixture_names,
    load_fixture,
    mirror,
    parse_gauss_code,
    relabel_components,
    same_diagram,
    serialize_gauss_code,
)
from weldmux.fixtures import fixture_text

from conftest import gauss_diagrams


def rotate(d: GaussDiagram, offsets) -> GaussDiagram:
    comps = tuple(
        tuple(c[(off + k) % len(c)] for k in range(len(c))) if c else c
        for c, off in zip(d.components, offsets)
    )
    return GaussDiagram(comps, d.signs)


def scramble(d: GaussDiagram, shift: int) -> GaussDiagram:
    """Relabel crossing ids by a rotation-then-offset bijection."""
    ids = sorted(d.signs)
    n = len(ids)
    if not n:
        return d
    rotated = ids[shift % n:] + ids[: shift % n]
    new = {c: 2000 + j for j, c in enumerate(rotated)}
    comps = tuple(
        tuple(Endpoint(new[ep.crossing], ep.role) for ep in c) for c in d.components
    )
    return GaussDiagram(comps, {new[c]: s for c, s in d.signs.items()})


# --------------------------------------------------------------------------
# Round trips.
# --------------------------------------------------------------------------

def test_fixture_files_are_canonical_and_stable():
    for name in fixture_names():
        text = fixture_text(name)
        d = parse_gauss_code(text)
        assert serialize_gauss_code(d) == text, name
        assert canonical(d) == d, name


@given(gauss_diagrams())
def test_parse_serialize_round_trip(d):
    assert parse_gauss_code(serialize_gauss_code(d)) == canonical(d)


@given(gauss_diagrams())
def test_canonical_idempotent(d):
    c = canonical(d)
    assert canonical(c) == c
    assert same_diagram(d, c)


@given(gauss_diagrams(), st.integers(0, 11), st.integers(0, 11), st.integers(0, 11))
def test_serialization_invariant_under_rotation(d, o1, o2, o3):
    offsets = [o1, o2, o3][: len(d.components)]
    offsets += [0] * (len(d.components) - len(offsets))
    assert serialize_gauss_code(rotate(d, offsets)) == serialize_gauss_code(d)


@given(gauss_diagrams(), st.integers(0, 11))
def test_serialization_invariant_under_relabelling(d, shift):
    assert serialize_gauss_code(scramble(d, shift)) == serialize_gauss_code(d)


@given(gauss_diagrams())
def test_same_diagram_is_reflexive_and_sees_through_rotation(d):
    assert same_diagram(d, d)
    assert same_diagram(d, rotate(d, [1] * len(d.components)))


# --------------------------------------------------------------------------
# Mirror.
# --------------------------------------------------------------------------

@given(gauss_diagrams())
def test_mirror_is_an_involution(d):
    assert mirror(mirror(d)) == d


@given(gauss_diagrams())
def test_mirror_swaps_roles_and_signs(d):
    m = mirror(d)
    assert {c: -s for c, s in d.signs.items()} == dict(m.signs)
    for comp, mcomp in zip(d.components, m.components):
        for ep, mep in zip(comp, mcomp):
            assert ep.crossing == mep.crossing
            assert mep.role == (UNDER if ep.role == OVER else OVER)


# --------------------------------------------------------------------------
# Component relabelling.
# --------------------------------------------------------------------------

def test_relabel_components_identity_and_composition():
    d = load_fixture("borromean")
    assert relabel_components(d, (0, 1, 2)) == d
    once = relabel_components(d, (1, 2, 0))
    twice = relabel_components(once, (1, 2, 0))
    assert twice == relabel_components(d, (2, 0, 1))


def test_relabel_components_rejects_non_permutations():
    d = load_fixture("hopf")
    with pytest.raises(LengthMismatch):
        relabel_components(d, (0,))
    with pytest.raises(LengthMismatch):
        relabel_components(d, (0, 0))
    with pytest.raises(LengthMismatch):
        relabel_components(d, (1, 2))


# --------------------------------------------------------------------------
# Parsing.
# --------------------------------------------------------------------------

def test_empty_code_is_the_crossing_free_unknot():
    d = parse_gauss_code("")
    assert d.n_components == 1
    assert d.components == ((),)
    assert not d.signs
    assert serialize_gauss_code(d) == ""


def test_semicolons_create_empty_components():
    d = parse_gauss_code(" ; ")
    assert d.n_components == 2
    assert d.components == ((), ())


@pytest.mark.parametrize(
    "code, err",
    [
        ("O1*", GaussSyntaxError),
        ("X1+ U1+", GaussSyntaxError),
        ("O1+", UnpairedCrossing),
        ("O1+ U1+ O2-", UnpairedCrossing),
        ("O1+ O1+", RoleConflict),
        ("O1+ U1-", SignConflict),
    ],
)
def test_parse_rejects_malformed_codes(code, err):
    with pytest.raises(err):
        parse_gauss_code(code)


def test_parse_accepts_arbitrary_ids_and_whitespace():
    d = parse_gauss_code("  O7+   U9-\nO9- U7+ ")
    assert len(d.signs) == 2
    assert d.n_components == 1
