"""Local moves: soundness, enumeration, scripts, and walk determinism."""

from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from weldmux import (
    Move,
    MoveScript,
    NotApplicable,
    apply_move,
    default_weight_grid,
    enumerate_moves,
    full_report,
    load_fixture,
    multiplex,
    normalize,
    random_walk,
    same_diagram,
)

from conftest import all_fixtures, gauss_diagrams


def reports_equal(a, b) -> bool:
    return (
        normalize(a.delta1_single) == normalize(b.delta1_single)
        and normalize(a.delta2_single) == normalize(b.delta2_single)
        and normalize(a.delta1_multi) == normalize(b.delta1_multi)
        and a.linking == b.linking
        and a.intersection == b.intersection
        and a.hom_counts == b.hom_counts
    )


# --------------------------------------------------------------------------
# Enumeration is sound: every offered move applies.
# --------------------------------------------------------------------------

@given(gauss_diagrams(max_crossings=4))
def test_every_enumerated_move_applies(d):
    for move in enumerate_moves(d):
        out = apply_move(d, move)
        assert out.n_components == d.n_components


@given(gauss_diagrams(max_crossings=4), st.integers(0, 10**6))
def test_add_moves_are_undone_by_their_removals(d, salt):
    moves = [m for m in enumerate_moves(d) if m.kind in ("r1_add", "r2_add")]
    if not moves:
        return
    move = moves[salt % len(moves)]
    bigger = apply_move(d, move)
    new_ids = sorted(set(bigger.signs) - set(d.signs))
    back_kind = "r1_remove" if move.kind == "r1_add" else "r2_remove"
    back = Move(back_kind, tuple(new_ids))
    assert same_diagram(apply_move(bigger, back), d)


def test_inapplicable_moves_raise():
    d = load_fixture("trefoil")  # no adjacent kink, no r2 pair
    with pytest.raises(NotApplicable):
        apply_move(d, Move("r1_remove", (1,)))
    with pytest.raises(NotApplicable):
        apply_move(d, Move("r2_remove", (1, 2)))
    with pytest.raises(NotApplicable):
        apply_move(d, Move("oc_swap", (0, 0)))  # O1 U2 not two overs
    with pytest.raises(NotApplicable):
        apply_move(d, Move("no_such_kind", ()))


# --------------------------------------------------------------------------
# Moves preserve every invariant we compute.
# --------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["trefoil", "hopf"])
def test_each_move_kind_preserves_the_full_report(name):
    d = load_fixture(name)
    base = full_report(d)
    seen_kinds = set()
    frontier = [d]
    for _ in range(2):  # two plies of the move graph
        nxt = []
        for cur in frontier:
            for move in enumerate_moves(cur):
                if move.kind in seen_kinds and len(seen_kinds) == 6:
                    continue
                out = apply_move(cur, move)
                if move.kind not in seen_kinds:
                    seen_kinds.add(move.kind)
                    assert reports_equal(full_report(out), base), (name, move)
                    nxt.append(out)
        frontier = nxt or frontier


def test_short_walk_preserves_cable_invariants():
    d = load_fixture("cabled_whitehead")
    walked, script = random_walk(d, 6, seed=42)
    assert reports_equal(full_report(walked), full_report(d))
    m = (2, 1, 1)
    assert reports_equal(
        full_report(multiplex(walked, m)), full_report(multiplex(d, m))
    )
    assert same_diagram(script.replay(d), walked)


# --------------------------------------------------------------------------
# Walks and scripts.
# --------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["unknot", "trefoil", "borromean"])
def test_random_walk_is_deterministic_and_replayable(name):
    d = load_fixture(name)
    w1, s1 = random_walk(d, 12, seed=7)
    w2, s2 = random_walk(d, 12, seed=7)
    assert w1 == w2
    assert s1 == s2
    assert s1.replay(d) == w1
    w3, _ = random_walk(d, 12, seed=8)
    # different seed almost surely walks elsewhere; don't require it, but
    # the scripts must still replay deterministically
    assert random_walk(d, 12, seed=8)[0] == w3


def test_move_script_text_round_trip():
    d = load_fixture("hopf")
    _, script = random_walk(d, 9, seed=3)
    text = script.to_text()
    back = MoveScript.from_text(text)
    assert back == script
    assert text.splitlines()[0] == "seed 3"
    assert back.replay(d) == script.replay(d)


def test_move_parse_rejects_garbage():
    from weldmux import GaussSyntaxError

    with pytest.raises(GaussSyntaxError):
        Move.parse("")
    with pytest.raises(GaussSyntaxError):
        Move.parse("r1_add one two")


# --------------------------------------------------------------------------
# The default weight grid used by the fuzzer.
# --------------------------------------------------------------------------

def test_default_weight_grid_shapes():
    for n in range(1, 6):
        grid = default_weight_grid(n)
        assert len(grid) == 6
        assert all(len(v) == n for v in grid)
    assert default_weight_grid(1) == ((1,), (2,), (0,), (-1,), (3,), (-2,))
    assert default_weight_grid(2)[0] == (1, 1)
    assert default_weight_grid(3)[2] == (0, 1, 2)
    # wider arities tile the three-component patterns cyclically
    assert default_weight_grid(4)[2] == (0, 1, 2, 0)
