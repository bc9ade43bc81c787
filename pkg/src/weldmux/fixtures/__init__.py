"""Named example diagrams shipped with the package.

Each fixture is a ``.gauss`` file in this directory: ``#`` lines are
comments, the remaining lines are joined and parsed as one Gauss code.
``load_fixture`` returns the parsed diagram; ``fixture_names`` lists what
is available.  The comments in each file say what the diagram is and which
properties the test suite pins on it.
"""

from __future__ import annotations

from importlib import resources

from ..gauss import GaussDiagram, parse_gauss_code

_SUFFIX = ".gauss"


def _root():
    return resources.files(__package__)


def fixture_names() -> list[str]:
    """Sorted names of all shipped fixtures."""
    return sorted(
        entry.name[: -len(_SUFFIX)]
        for entry in _root().iterdir()
        if entry.name.endswith(_SUFFIX)
    )


def fixture_text(name: str) -> str:
    """Raw Gauss code of the fixture (comments stripped)."""
    path = _root() / f"{name}{_SUFFIX}"
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(
            f"no fixture {name!r}; available: {', '.join(fixture_names())}"
        ) from None
    lines = [
        ln.strip() for ln in raw.splitlines() if ln.strip() and not ln.lstrip().startswith("#")
    ]
    return " ".join(lines)


def load_fixture(name: str) -> GaussDiagram:
    """Parse and return the named fixture diagram."""
    return parse_gauss_code(fixture_text(name))
