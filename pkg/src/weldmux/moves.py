"""Local moves on Gauss diagrams and deterministic random walks.

The legal moves are the diagrammatic Reidemeister moves R1, R2, R3
together with the transposition of two adjacent *over* endpoints on a
strand (overpasses slide freely past each other; the mirror transposition
of under endpoints is exactly the move that is **not** legal and is not
provided).  Every move preserves the equivalence class of the diagram, so
invariants must be constant along any sequence of applications — that is
what the fuzzer checks.

Move inventory (arguments are plain integers so scripts serialise):

``r1_add comp pos sign order``
    insert a kink — an adjacent O/U pair of a fresh crossing — at ``pos``;
    ``order`` 0 puts the over endpoint first, 1 the under endpoint.
``r1_remove cid``
    delete a crossing whose two endpoints are cyclically adjacent on one
    component.
``r2_add comp_o pos_o comp_u pos_u sign uorder``
    insert two fresh crossings of opposite signs (``sign`` is the first),
    over endpoints adjacent on ``comp_o``, under endpoints adjacent on
    ``comp_u``; ``uorder`` 1 reverses the under pair (the antiparallel
    poke).
``r2_remove cid1 cid2``
    delete two crossings of opposite sign whose over endpoints are
    adjacent and whose under endpoints are adjacent (in any order — a
    preliminary over-transposition is always available).
``r3 cid1 cid2 cid3``
    slide a strand across a crossing: the braid-relation pattern with all
    three signs equal, over pairs ``[O1 O2] [U1 O3] [U2 U3]`` (or the
    mirror pattern for negative signs), each pair adjacent on a strand.
``oc_swap comp pos``
    transpose the adjacent over endpoints at ``pos`` and ``pos + 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .errors import GaussSyntaxError, NotApplicable
from .gauss import OVER, UNDER, Endpoint, GaussDiagram

ADD_SITE_CAP = 24  # bound on enumerated insertion sites per move family


@dataclass(frozen=True)
class Move:
    kind: str
    args: tuple[int, ...]

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.args)])

    @staticmethod
    def parse(line: str) -> "Move":
        parts = line.split()
        if not parts:
            raise GaussSyntaxError("empty move line")
        try:
            return Move(parts[0], tuple(int(x) for x in parts[1:]))
        except ValueError as exc:
            raise GaussSyntaxError(f"bad move line {line!r}") from exc


def _fresh_ids(d: GaussDiagram, n: int) -> list[int]:
    top = max(d.signs, default=0)
    return [top + 1 + i for i in range(n)]


def _insert(comp: tuple[Endpoint, ...], pos: int, items: list[Endpoint]):
    return comp[:pos] + tuple(items) + comp[pos:]


def _adjacent_pairs(comp: tuple[Endpoint, ...]) -> Iterator[tuple[int, Endpoint, Endpoint]]:
    n = len(comp)
    if n < 2:
        return
    for i in range(n):
        yield i, comp[i], comp[(i + 1) % n]


def apply_move(d: GaussDiagram, move: Move) -> GaussDiagram:
    """Apply one move, validating applicability (:class:`NotApplicable`)."""
    handler = _HANDLERS.get(move.kind)
    if handler is None:
        raise NotApplicable(f"unknown move kind {move.kind!r}")
    return handler(d, *move.args)


def _r1_add(d: GaussDiagram, comp: int, pos: int, sign: int, order: int) -> GaussDiagram:
    if not (0 <= comp < d.n_components):
        raise NotApplicable("no such component")
    target = d.components[comp]
    if not (0 <= pos <= len(target)) or sign not in (1, -1) or order not in (0, 1):
        raise NotApplicable("bad kink parameters")
    (cid,) = _fresh_ids(d, 1)
    pair = [Endpoint(cid, OVER), Endpoint(cid, UNDER)]
    if order:
        pair.reverse()
    comps = list(d.components)
    comps[comp] = _insert(target, pos, pair)
    return GaussDiagram(comps, {**d.signs, cid: sign})


def _r1_remove(d: GaussDiagram, cid: int) -> GaussDiagram:
    if cid not in d.signs:
        raise NotApplicable(f"no crossing {cid}")
    pos = d.endpoint_positions()
    (co, po), (cu, pu) = pos[(cid, OVER)], pos[(cid, UNDER)]
    n = len(d.components[co])
    if co != cu or (po - pu) % n not in (1, n - 1):
        raise NotApplicable(f"crossing {cid} is not a kink")
    comps = list(d.components)
    comps[co] = tuple(ep for ep in comps[co] if ep.crossing != cid)
    signs = {k: v for k, v in d.signs.items() if k != cid}
    return GaussDiagram(comps, signs)


def _r2_add(
    d: GaussDiagram, comp_o: int, pos_o: int, comp_u: int, pos_u: int, sign: int, uorder: int
) -> GaussDiagram:
    nc = d.n_components
    if not (0 <= comp_o < nc and 0 <= comp_u < nc):
        raise NotApplicable("no such component")
    if sign not in (1, -1) or uorder not in (0, 1):
        raise NotApplicable("bad poke parameters")
    if not (0 <= pos_o <= len(d.components[comp_o])):
        raise NotApplicable("over position out of range")
    if not (0 <= pos_u <= len(d.components[comp_u])):
        raise NotApplicable("under position out of range")
    c1, c2 = _fresh_ids(d, 2)
    overs = [Endpoint(c1, OVER), Endpoint(c2, OVER)]
    unders = [Endpoint(c1, UNDER), Endpoint(c2, UNDER)]
    if uorder:
        unders.reverse()
    comps = list(d.components)
    if comp_o == comp_u:
        # Insert at the later position first so the earlier stays valid.
        first, second = sorted(
            [(pos_o, overs), (pos_u, unders)], key=lambda t: -t[0]
        )
        seq = _insert(comps[comp_o], first[0], first[1])
        seq = _insert(seq, second[0], second[1])
        comps[comp_o] = seq
    else:
        comps[comp_o] = _insert(comps[comp_o], pos_o, overs)
        comps[comp_u] = _insert(comps[comp_u], pos_u, unders)
    return GaussDiagram(comps, {**d.signs, c1: sign, c2: -sign})


def _r2_remove(d: GaussDiagram, c1: int, c2: int) -> GaussDiagram:
    if c1 not in d.signs or c2 not in d.signs or c1 == c2:
        raise NotApplicable("need two distinct crossings")
    if d.signs[c1] + d.signs[c2] != 0:
        raise NotApplicable("signs must be opposite")
    pos = d.endpoint_positions()

    def adjacent(role: str) -> bool:
        (ca, pa), (cb, pb) = pos[(c1, role)], pos[(c2, role)]
        n = len(d.components[ca])
        return ca == cb and (pa - pb) % n in (1, n - 1)

    if not (adjacent(OVER) and adjacent(UNDER)):
        raise NotApplicable("endpoint pairs are not adjacent")
    comps = [
        tuple(ep for ep in comp if ep.crossing not in (c1, c2))
        for comp in d.components
    ]
    signs = {k: v for k, v in d.signs.items() if k not in (c1, c2)}
    return GaussDiagram(comps, signs)


def _r3_pairs(sign: int, flip: bool):
    """Adjacent endpoint pairs of the braid pattern for crossings (1, 2, 3).

    The positive pattern comes from reading the three strands through the
    braid-relation word: strand pairs ``[O1 O2]``, ``[U1 O3]``, ``[U2 U3]``.
    The negative pattern is its mirror (roles exchanged).  ``flip`` selects
    the other side of the relation, where every pair appears reversed; the
    move itself always swaps the two endpoints of each matched pair, so a
    flipped match undoes an unflipped one.
    """
    if sign > 0:
        pairs = [
            (Endpoint(1, OVER), Endpoint(2, OVER)),
            (Endpoint(1, UNDER), Endpoint(3, OVER)),
            (Endpoint(2, UNDER), Endpoint(3, UNDER)),
        ]
    else:
        pairs = [
            (Endpoint(1, UNDER), Endpoint(2, UNDER)),
            (Endpoint(1, OVER), Endpoint(3, UNDER)),
            (Endpoint(2, OVER), Endpoint(3, OVER)),
        ]
    if flip:
        pairs = [(b, a) for a, b in pairs]
    return pairs


def _find_pair(d: GaussDiagram, first: Endpoint, second: Endpoint):
    """Locate (component, position) where ``first`` directly precedes
    ``second`` cyclically; None if they are not adjacent in that order."""
    pos = d.endpoint_positions()
    (ca, pa) = pos[(first.crossing, first.role)]
    (cb, pb) = pos[(second.crossing, second.role)]
    n = len(d.components[ca])
    if ca == cb and (pb - pa) % n == 1:
        return ca, pa
    return None


def _r3_sites(d: GaussDiagram, c1: int, c2: int, c3: int):
    """Matched pair locations for the slide move, or None."""
    ids = (c1, c2, c3)
    if len(set(ids)) != 3 or any(c not in d.signs for c in ids):
        return None
    s = d.signs[c1]
    if d.signs[c2] != s or d.signs[c3] != s:
        return None
    relabel = {1: c1, 2: c2, 3: c3}
    for flip in (False, True):
        sites = []
        for a, b in _r3_pairs(s, flip):
            site = _find_pair(
                d,
                Endpoint(relabel[a.crossing], a.role),
                Endpoint(relabel[b.crossing], b.role),
            )
            if site is None:
                break
            sites.append(site)
        else:
            return sites
    return None


def _r3_impl(d: GaussDiagram, c1: int, c2: int, c3: int) -> GaussDiagram:
    sites = _r3_sites(d, c1, c2, c3)
    if sites is None:
        raise NotApplicable("braid pattern not present")
    comps = [list(c) for c in d.components]
    for ci, pi in sites:
        n = len(comps[ci])
        comps[ci][pi], comps[ci][(pi + 1) % n] = (
            comps[ci][(pi + 1) % n],
            comps[ci][pi],
        )
    return GaussDiagram([tuple(c) for c in comps], d.signs)


def _oc_swap(d: GaussDiagram, comp: int, pos: int) -> GaussDiagram:
    if not (0 <= comp < d.n_components):
        raise NotApplicable("no such component")
    seq = d.components[comp]
    n = len(seq)
    if n < 2 or not (0 <= pos < n):
        raise NotApplicable("position out of range")
    nxt = (pos + 1) % n
    if seq[pos].role != OVER or seq[nxt].role != OVER:
        raise NotApplicable("both endpoints must be over endpoints")
    comps = [list(c) for c in d.components]
    comps[comp][pos], comps[comp][nxt] = comps[comp][nxt], comps[comp][pos]
    return GaussDiagram([tuple(c) for c in comps], d.signs)


_HANDLERS = {
    "r1_add": _r1_add,
    "r1_remove": _r1_remove,
    "r2_add": _r2_add,
    "r2_remove": _r2_remove,
    "r3": _r3_impl,
    "oc_swap": _oc_swap,
}


def enumerate_moves(d: GaussDiagram) -> list[Move]:
    """All applicable removal/swap/slide moves plus a bounded sample of
    addition sites, in a deterministic order."""
    moves: list[Move] = []
    pos = d.endpoint_positions()

    # r1_remove at every kink.
    for cid in d.crossings:
        (co, po), (cu, pu) = pos[(cid, OVER)], pos[(cid, UNDER)]
        n = len(d.components[co])
        if co == cu and (po - pu) % n in (1, n - 1):
            moves.append(Move("r1_remove", (cid,)))

    # r2_remove for opposite-sign pairs with both adjacencies.
    crossings = d.crossings
    for i, a in enumerate(crossings):
        for b in crossings[i + 1 :]:
            if d.signs[a] + d.signs[b] != 0:
                continue

            def adj(role: str) -> bool:
                (ca, pa), (cb, pb) = pos[(a, role)], pos[(b, role)]
                n = len(d.components[ca])
                return ca == cb and (pa - pb) % n in (1, n - 1)

            if adj(OVER) and adj(UNDER):
                moves.append(Move("r2_remove", (a, b)))

    # r3 triples: resolve the three pattern pairs along the cyclic
    # successor/predecessor maps, anchoring on the first crossing slot.
    succ: dict[tuple[int, str], tuple[int, str]] = {}
    for comp in d.components:
        n = len(comp)
        if n < 2:
            continue
        for i, ep in enumerate(comp):
            nxt = comp[(i + 1) % n]
            succ[(ep.crossing, ep.role)] = (nxt.crossing, nxt.role)
    pred = {v: k for k, v in succ.items()}
    seen_r3: set[tuple[int, int, int]] = set()
    for s in (1, -1):
        for flip in (False, True):
            pairs = _r3_pairs(s, flip)
            for anchor in crossings:
                if d.signs[anchor] != s:
                    continue
                slot: dict[int, int] = {1: anchor}
                ok = True
                for a, b in pairs:
                    if a.crossing in slot and b.crossing in slot:
                        if succ.get((slot[a.crossing], a.role)) != (
                            slot[b.crossing],
                            b.role,
                        ):
                            ok = False
                            break
                        continue
                    if a.crossing in slot:
                        mate = succ.get((slot[a.crossing], a.role))
                        free, want = b, b.role
                    else:
                        mate = pred.get((slot[b.crossing], b.role))
                        free, want = a, a.role
                    if (
                        mate is None
                        or mate[1] != want
                        or mate[0] in slot.values()
                        or d.signs.get(mate[0]) != s
                    ):
                        ok = False
                        break
                    slot[free.crossing] = mate[0]
                if ok and len(slot) == 3:
                    trip = (slot[1], slot[2], slot[3])
                    if trip not in seen_r3:
                        seen_r3.add(trip)
                        moves.append(Move("r3", trip))

    # oc_swap wherever two over endpoints sit side by side.
    for ci, comp in enumerate(d.components):
        for i, a, b in _adjacent_pairs(comp):
            if a.role == OVER and b.role == OVER:
                moves.append(Move("oc_swap", (ci, i)))

    # Addition sites: positions next to existing endpoints, capped, plus
    # position 0 so empty components are reachable.
    def sites(ci: int) -> list[int]:
        n = len(d.components[ci])
        return list(range(min(n + 1, ADD_SITE_CAP)))

    for ci in range(d.n_components):
        for p in sites(ci):
            for sign in (1, -1):
                for order in (0, 1):
                    moves.append(Move("r1_add", (ci, p, sign, order)))
    for ci in range(d.n_components):
        for cj in range(d.n_components):
            pairs = [
                (p, q)
                for p in sites(ci)
                for q in sites(cj)
            ]
            for p, q in pairs[:ADD_SITE_CAP]:
                for sign in (1, -1):
                    for uorder in (0, 1):
                        moves.append(Move("r2_add", (ci, p, cj, q, sign, uorder)))
    return moves


@dataclass(frozen=True)
class MoveScript:
    """A reproducible walk: the seed and the moves applied, in order."""

    seed: int
    moves: tuple[Move, ...]

    def to_text(self) -> str:
        lines = [f"seed {self.seed}"]
        lines.extend(str(m) for m in self.moves)
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "MoveScript":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("seed "):
            raise GaussSyntaxError("move script must start with a seed line")
        try:
            seed = int(lines[0].split()[1])
        except (IndexError, ValueError) as exc:
            raise GaussSyntaxError("bad seed line") from exc
        return MoveScript(seed, tuple(Move.parse(ln) for ln in lines[1:]))

    def replay(self, d: GaussDiagram) -> GaussDiagram:
        for m in self.moves:
            d = apply_move(d, m)
        return d


_REMOVAL_KINDS = ("r1_remove", "r2_remove")

_GRID_PATTERNS: dict[int, tuple[tuple[int, ...], ...]] = {
    1: ((1,), (2,), (0,), (-1,), (3,), (-2,)),
    2: ((1, 1), (2, 2), (0, 1), (-1, 1), (2, 1), (1, -2)),
    3: ((1, 1, 1), (2, 2, 2), (0, 1, 2), (-1, 1, 1), (2, 1, 0), (1, -2, 1)),
}


def default_weight_grid(n_components: int) -> tuple[tuple[int, ...], ...]:
    """Six deterministic weight vectors for invariance checking.

    The vectors cover the identity weight, widening, deletion, negative
    weights and mixed asymmetric weights; above three components the
    three-component patterns are tiled cyclically.
    """
    if n_components < 1:
        return ()
    if n_components in _GRID_PATTERNS:
        return _GRID_PATTERNS[n_components]
    return tuple(
        tuple(pat[i % 3] for i in range(n_components))
        for pat in _GRID_PATTERNS[3]
    )


def random_walk(
    d: GaussDiagram, steps: int, seed: int
) -> tuple[GaussDiagram, MoveScript]:
    """Apply ``steps`` random moves and return the final diagram plus a
    replayable script.

    Selection is two-stage: first a move *kind* is drawn from the kinds
    with at least one applicable instance — removal kinds carry twice the
    weight of the others, so walks stay bounded instead of ballooning on
    the (far more numerous) insertion sites — then an instance of that
    kind is drawn uniformly.  Fully deterministic in (diagram, steps,
    seed).
    """
    rng = random.Random(seed)
    applied: list[Move] = []
    current = d
    for _ in range(steps):
        moves = enumerate_moves(current)
        if not moves:
            break
        by_kind: dict[str, list[Move]] = {}
        for m in moves:
            by_kind.setdefault(m.kind, []).append(m)
        pool: list[str] = []
        for kind in sorted(by_kind):
            pool.extend([kind] * (2 if kind in _REMOVAL_KINDS else 1))
        kind = pool[rng.randrange(len(pool))]
        bucket = by_kind[kind]
        choice = bucket[rng.randrange(len(bucket))]
        current = apply_move(current, choice)
        applied.append(choice)
    return current, MoveScript(seed, tuple(applied))
