"""Shared strategies, helpers, and the acceptance-summary reporter."""

from __future__ import annotations

import hypothesis
import hypothesis.strategies as st

from weldmux import (
    Endpoint,
    GaussDiagram,
    LaurentPolynomial,
    OVER,
    UNDER,
    fixture_names,
    load_fixture,
)

hypothesis.settings.register_profile(
    "weldmux", deadline=None, max_examples=60, derandomize=True
)
hypothesis.settings.load_profile("weldmux")


# --------------------------------------------------------------------------
# Acceptance reporting: tests in test_acceptance.py record one line per
# criterion; the terminal summary prints them after the run.
# --------------------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(
    index: int, name: str, ok: bool, elapsed: float, limit: float | None = None
) -> None:
    status = "PASS" if ok else "FAIL"
    timing = f"{elapsed:.1f}s"
    if limit is not None:
        timing += f" < {limit:.0f}s" if elapsed < limit else f" >= {limit:.0f}s LATE"
    ACCEPTANCE_LINES.append(f"{status}  acceptance {index}: {name}  [{timing}]")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


# --------------------------------------------------------------------------
# Strategies.
# --------------------------------------------------------------------------

@st.composite
def gauss_diagrams(draw, max_crossings: int = 5, max_components: int = 3):
    """Random valid diagrams: every crossing once as O and once as U."""
    n = draw(st.integers(0, max_crossings))
    c = draw(st.integers(1, max_components))
    tokens = [Endpoint(i, OVER) for i in range(1, n + 1)]
    tokens += [Endpoint(i, UNDER) for i in range(1, n + 1)]
    order = draw(st.permutations(tokens)) if tokens else []
    homes = draw(st.lists(st.integers(0, c - 1), min_size=len(order), max_size=len(order)))
    comps: list[list[Endpoint]] = [[] for _ in range(c)]
    for ep, home in zip(order, homes):
        comps[home].append(ep)
    signs = {
        i: draw(st.sampled_from((1, -1)), label=f"sign{i}") for i in range(1, n + 1)
    }
    return GaussDiagram(tuple(tuple(comp) for comp in comps), signs)


@st.composite
def laurent_polys(draw, arity: int = 1, max_terms: int = 4):
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(-3, 3) for _ in range(arity)]),
            st.integers(-5, 5),
            max_size=max_terms,
        )
    )
    return LaurentPolynomial(arity, terms)


# --------------------------------------------------------------------------
# Helpers.
# --------------------------------------------------------------------------

def all_fixtures() -> list[tuple[str, GaussDiagram]]:
    return [(name, load_fixture(name)) for name in fixture_names()]
