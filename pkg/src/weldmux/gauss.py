"""Gauss diagrams for virtual and welded link diagrams.

A diagram is an ordered list of components; each component is a cyclic
sequence of crossing endpoints.  A classical crossing contributes exactly
two endpoints, one where the strand passes over (role ``O``) and one where
it passes under (role ``U``), together with a sign.  Virtual crossings are
not recorded: any plane realisation routes strands between the recorded
endpoints with virtual crossings as needed, and all such routings are
equivalent, so the combinatorial data below is the whole object.

Text form (one line, components separated by ``;``)::

    O1+ U2+ O3+ U1+ O2+ U3+        a trefoil
    O1+ U2+ ; O2+ U1+              a Hopf link

``parse_gauss_code`` and ``serialize_gauss_code`` convert between the text
form and :class:`GaussDiagram`.  Serialisation is canonical: crossing ids
are renumbered in first-appearance order and every component starts at a
deterministic rotation, so equal diagrams render identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    GaussSyntaxError,
    LengthMismatch,
    RoleConflict,
    SignConflict,
    UnpairedCrossing,
)

OVER = "O"
UNDER = "U"

_TOKEN_RE = re.compile(r"^([OU])([0-9]+)([+-])$")


@dataclass(frozen=True)
class Endpoint:
    """One visit of a strand to a crossing: the crossing id and the role."""

    crossing: int
    role: str  # OVER or UNDER

    def __post_init__(self) -> None:
        if self.role not in (OVER, UNDER):
            raise ValueError(f"bad role {self.role!r}")


class GaussDiagram:
    """Immutable Gauss diagram: components, endpoint sequences, signs.

    ``components`` is a tuple of tuples of :class:`Endpoint`; ``signs``
    maps each crossing id to +1 or -1.  Construction validates the pairing
    invariants (each id appears exactly once as O and once as U, with one
    sign), so every reachable instance is well formed.
    """

    __slots__ = ("components", "signs")

    def __init__(
        self,
        components: Iterable[Iterable[Endpoint]],
        signs: Mapping[int, int],
    ) -> None:
        comps = tuple(tuple(c) for c in components)
        sgns = dict(signs)
        _validate(comps, sgns)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "signs", sgns)

    def __setattr__(self, name: str, value) -> None:  # pragma: no cover
        raise AttributeError("GaussDiagram is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.components == other.components and self.signs == other.signs

    def __repr__(self) -> str:
        return f"GaussDiagram({serialize_gauss_code(self)!r})"

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(sorted(self.signs))

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    def endpoint_positions(self) -> dict[tuple[int, str], tuple[int, int]]:
        """Map (crossing, role) -> (component index, position)."""
        out: dict[tuple[int, str], tuple[int, int]] = {}
        for ci, comp in enumerate(self.components):
            for pi, ep in enumerate(comp):
                out[(ep.crossing, ep.role)] = (ci, pi)
        return out

    def over_component(self, crossing: int) -> int:
        """Component index carrying the over endpoint of ``crossing``."""
        for ci, comp in enumerate(self.components):
            for ep in comp:
                if ep.crossing == crossing and ep.role == OVER:
                    return ci
        raise KeyError(crossing)


def _validate(
    components: tuple[tuple[Endpoint, ...], ...], signs: Mapping[int, int]
) -> None:
    """Shared validator used by every constructor and by the moves engine."""
    seen: dict[tuple[int, str], int] = {}
    ids: set[int] = set()
    for comp in components:
        for ep in comp:
            ids.add(ep.crossing)
            key = (ep.crossing, ep.role)
            seen[key] = seen.get(key, 0) + 1
            if seen[key] > 1:
                raise RoleConflict(
                    f"crossing {ep.crossing} appears twice as {ep.role}"
                )
    for cid in ids:
        if (cid, OVER) not in seen or (cid, UNDER) not in seen:
            raise UnpairedCrossing(f"crossing {cid} lacks its partner endpoint")
    if set(signs) != ids:
        stray = set(signs) ^ ids
        raise SignConflict(f"sign table does not match crossing set: {sorted(stray)}")
    for cid, s in signs.items():
        if s not in (1, -1):
            raise SignConflict(f"crossing {cid} has sign {s}, expected +1/-1")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse the text form into a validated diagram.

    The empty string denotes a single crossing-free component; each ``;``
    introduces one more component.  Raises :class:`GaussSyntaxError` on
    malformed tokens and the pairing errors on inconsistent codes.
    """
    parts = text.replace(";", " ; ").split()
    components: list[list[Endpoint]] = [[]]
    sign_of: dict[int, int] = {}
    sign_seen_at: dict[int, str] = {}
    for tok in parts:
        if tok == ";":
            components.append([])
            continue
        m = _TOKEN_RE.match(tok)
        if not m:
            raise GaussSyntaxError(f"bad token {tok!r}")
        role, num, sg = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
        if num in sign_of and sign_of[num] != sg:
            raise SignConflict(
                f"crossing {num} seen with sign {sign_seen_at[num]} and {m.group(3)}"
            )
        sign_of[num] = sg
        sign_seen_at[num] = m.group(3)
        components[-1].append(Endpoint(num, role))
    return GaussDiagram(components, sign_of)


def canonical(d: GaussDiagram) -> GaussDiagram:
    """Canonical form: the rotation/renumbering minimising the rendered code.

    Components are processed in order.  For each one, every rotation is
    rendered as a sequence of ``(role, id, sign)`` tokens under
    first-appearance renumbering extending the ids fixed by earlier
    components, and the rotations achieving the minimal sequence are kept.
    Exact ties must all be carried forward: two rotations can render
    identically here yet assign the same ids to different crossings, and so
    diverge on a later component.  Ties that survive to the end render the
    whole diagram identically and therefore reconstruct the same object.
    The result depends only on the diagram up to component rotation and
    crossing relabelling.
    """
    # state: (ids assigned so far, rotated components chosen so far)
    states: list[tuple[dict[int, int], tuple[tuple[Endpoint, ...], ...]]] = [({}, ())]
    for comp in d.components:
        n = len(comp)
        best_key: list[tuple[str, int, int]] | None = None
        winners: list[tuple[dict[int, int], tuple[tuple[Endpoint, ...], ...]]] = []
        for relabel, chosen in states:
            for start in range(n) if n else (0,):
                ids = dict(relabel)
                rot = tuple(comp[(start + k) % n] for k in range(n))
                key = []
                for ep in rot:
                    if ep.crossing not in ids:
                        ids[ep.crossing] = len(ids) + 1
                    sign = d.signs[ep.crossing]
                    key.append((ep.role, ids[ep.crossing], 0 if sign > 0 else 1))
                if best_key is None or key < best_key:
                    best_key = key
                    winners = [(ids, chosen + (rot,))]
                elif key == best_key:
                    winners.append((ids, chosen + (rot,)))
        states = winners
    relabel, chosen = states[0]
    comps = tuple(
        tuple(Endpoint(relabel[ep.crossing], ep.role) for ep in comp)
        for comp in chosen
    )
    signs = {relabel[c]: s for c, s in d.signs.items()}
    return GaussDiagram(comps, signs)


def same_diagram(a: GaussDiagram, b: GaussDiagram) -> bool:
    """Equality up to component rotation and crossing relabelling."""
    return canonical(a) == canonical(b)


def serialize_gauss_code(d: GaussDiagram) -> str:
    """Render the canonical text form of ``d``."""
    c = canonical(d)
    comps = []
    for comp in c.components:
        toks = [
            f"{ep.role}{ep.crossing}{'+' if c.signs[ep.crossing] > 0 else '-'}"
            for ep in comp
        ]
        comps.append(" ".join(toks))
    return " ; ".join(comps)


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Swap over/under roles at every crossing and negate every sign."""
    comps = tuple(
        tuple(Endpoint(ep.crossing, UNDER if ep.role == OVER else OVER) for ep in comp)
        for comp in d.components
    )
    return GaussDiagram(comps, {c: -s for c, s in d.signs.items()})


def relabel_components(d: GaussDiagram, perm: Sequence[int]) -> GaussDiagram:
    """Reorder components by ``perm``: new component i is old ``perm[i]``."""
    if sorted(perm) != list(range(d.n_components)):
        raise LengthMismatch(
            f"not a permutation of 0..{d.n_components - 1}: {perm}"
        )
    comps = tuple(d.components[p] for p in perm)
    return GaussDiagram(comps, d.signs)
