"""Counting homomorphisms into finite targets, against exhaustive oracles."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from weldmux import (
    Generator,
    GroupPresentation,
    HomCountProfile,
    TargetTooLarge,
    Word,
    count_homs,
    count_homs_exhaustive,
    load_fixture,
    simplify,
    symmetric_group,
    target_by_name,
    wirtinger_presentation,
)

from conftest import all_fixtures


def presentation(n_gens: int, relator_letters) -> GroupPresentation:
    gens = tuple(Generator(i, 0) for i in range(n_gens))
    relators = tuple(Word.of(*ls) for ls in relator_letters)
    return GroupPresentation(gens, relators)


small_presentations = st.integers(1, 3).flatmap(
    lambda n: st.lists(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.sampled_from((1, -1))),
            max_size=6,
        ),
        max_size=3,
    ).map(lambda rels: presentation(n, rels))
)


# --------------------------------------------------------------------------
# Targets.
# --------------------------------------------------------------------------

def test_symmetric_group_structure():
    s4 = symmetric_group(4)
    assert s4.order == 24
    assert s4.name == "S4"
    e = s4.identity
    for a in s4.elements:
        assert s4.mul(a, e) == a
        assert s4.mul(s4.inv(a), a) == e
    # associativity spot check
    rng = random.Random(1)
    els = list(s4.elements)
    for _ in range(50):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert s4.mul(s4.mul(a, b), c) == s4.mul(a, s4.mul(b, c))


def test_target_by_name():
    assert target_by_name("S3").order == 6
    assert target_by_name("S5").name == "S5"
    with pytest.raises(Exception):
        target_by_name("Q8")


def test_target_too_large():
    p = presentation(1, [])
    with pytest.raises(TargetTooLarge):
        count_homs(p, symmetric_group(8))


# --------------------------------------------------------------------------
# Oracle agreement.
# --------------------------------------------------------------------------

@given(small_presentations)
def test_count_homs_matches_exhaustive_into_s3(p):
    s3 = symmetric_group(3)
    assert count_homs(p, s3) == count_homs_exhaustive(p, s3)


def test_count_homs_matches_exhaustive_into_s4_sampled():
    rng = random.Random(4242)
    s4 = symmetric_group(4)
    for trial in range(30):
        n = rng.randint(1, 3)
        rels = []
        for _ in range(rng.randint(0, 3)):
            rels.append(
                [
                    (rng.randrange(n), rng.choice((1, -1)))
                    for _ in range(rng.randint(0, 6))
                ]
            )
        p = presentation(n, rels)
        assert count_homs(p, s4) == count_homs_exhaustive(p, s4), (trial, str(p))


def test_count_homs_matches_exhaustive_on_fixture_presentations():
    s3 = symmetric_group(3)
    for name, d in all_fixtures():
        p = simplify(wirtinger_presentation(d))
        if len(p.generators) > 5:
            continue  # exhaustive cost guard; the small ones cover the engine
        assert count_homs(p, s3) == count_homs_exhaustive(p, s3), name


# --------------------------------------------------------------------------
# Structural counting laws.
# --------------------------------------------------------------------------

def test_free_groups_count_all_tuples():
    s3 = symmetric_group(3)
    for rank in range(4):
        p = presentation(max(rank, 1), []) if rank else GroupPresentation((), ())
        expected = 6**rank if rank else 1
        assert count_homs(p, s3) == expected


def test_trivializing_relator_forces_identity():
    p = presentation(2, [[(0, 1)], [(1, 1)]])
    assert count_homs(p, symmetric_group(4)) == 1


def test_counts_are_multiplicative_over_disjoint_generators():
    # < a, b | a^2, b^3 > = Z/2 * Z/3 has |Hom| = |Hom(Z/2)| * |Hom(Z/3)|
    s3 = symmetric_group(3)
    both = presentation(2, [[(0, 1)] * 2, [(1, 1)] * 3])
    left = presentation(1, [[(0, 1)] * 2])
    right = presentation(1, [[(0, 1)] * 3])
    assert count_homs(both, s3) == count_homs(left, s3) * count_homs(right, s3)


# --------------------------------------------------------------------------
# Pinned diagram-group counts.
# --------------------------------------------------------------------------

@pytest.mark.parametrize(
    "name, target, expected",
    [
        ("unknot", "S3", 6),
        ("trefoil", "S3", 12),
        ("trefoil", "S4", 96),
        ("hopf", "S3", 18),
        ("borromean", "S3", 138),
        ("square_knot", "S3", 30),
        ("granny_knot", "S3", 30),
    ],
)
def test_pinned_hom_counts(name, target, expected):
    p = wirtinger_presentation(load_fixture(name))
    assert count_homs(p, target_by_name(target)) == expected


def test_hom_count_profile():
    p = wirtinger_presentation(load_fixture("trefoil"))
    prof = HomCountProfile.of(p, [symmetric_group(3), symmetric_group(4)])
    assert prof.counts == {"S3": 12, "S4": 96}
