"""Multiplexing of crossings, driven by a per-component weight vector.

Given a diagram and integer weights ``m = (m_0, ..., m_{n-1})``, every
crossing whose *over* strand lies on component ``j`` is replaced by a band
of ``|m_j|`` parallel crossings, each of sign ``sign * sgn(m_j)``; weight 0
deletes the crossing outright (virtualization — at the Gauss-code level a
virtual crossing simply leaves no trace).  Weights all 1 reproduce the
diagram; weights all 0 erase every crossing.

Band endpoints are inserted consecutively at the two former endpoint
sites, in orientation order on both strands, pairing the i-th over passage
with the i-th under passage.  Any other pairing differs by transpositions
of adjacent over endpoints, which the move engine provides as a legal
move, so the choice is immaterial up to welded equivalence; this one also
makes multiplexing commute with ``mirror`` on equal-weight vectors as a
plain equality of diagrams.

``verify_multiplex_relation`` is the symbolic check that pins the
construction: eliminating the band's intermediate arcs from its arc
relators must reproduce the weighted conjugation ``c = b^-em a b^em``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import LengthMismatch, ReductionMismatch
from .gauss import OVER, UNDER, Endpoint, GaussDiagram
from .groups import Word


def multiplex(d: GaussDiagram, weights: Sequence[int]) -> GaussDiagram:
    """The diagram with every crossing multiplexed by its over-component weight."""
    if len(weights) != d.n_components:
        raise LengthMismatch(
            f"{len(weights)} weights for {d.n_components} components"
        )
    weight_of: dict[int, int] = {}
    for cid in d.crossings:
        weight_of[cid] = weights[d.over_component(cid)]
    # Deterministic fresh ids: consecutive blocks in crossing-id order.
    base: dict[int, int] = {}
    nxt = 1
    for cid in d.crossings:
        base[cid] = nxt
        nxt += abs(weight_of[cid])

    def sgn(x: int) -> int:
        return (x > 0) - (x < 0)

    comps = []
    for comp in d.components:
        seq: list[Endpoint] = []
        for ep in comp:
            m = weight_of[ep.crossing]
            if m == 0:
                continue
            for i in range(abs(m)):
                seq.append(Endpoint(base[ep.crossing] + i, ep.role))
        comps.append(tuple(seq))
    signs = {
        base[cid] + i: d.signs[cid] * sgn(weight_of[cid])
        for cid in d.crossings
        for i in range(abs(weight_of[cid]))
    }
    return GaussDiagram(comps, signs)


def verify_multiplex_relation(sign: int, m: int) -> Word:
    """Symbolically reduce one multiplexed band and return its relation.

    Generators 0, 1, 2 stand for the incoming under-arc ``a``, the over-arc
    ``b`` and the outgoing under-arc ``c``; the band's ``|m| - 1``
    intermediate arcs get fresh ids 3, 4, ...  One conjugation relator per
    band crossing is written down exactly as the arc presentation of the
    multiplexed diagram would contain it, the intermediate generators are
    eliminated by solving their defining relator and substituting, and the
    single surviving relator must equal ``c^-1 b^-(sign*m) a b^(sign*m)``
    as a free-group word, else :class:`ReductionMismatch` is raised.
    Returns the verified relator.

    This is the executable form of the band-ordering convention: it holds
    for the orientation-order insertion used by :func:`multiplex`.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be ±1")
    a, b, c = 0, 1, 2
    k = abs(m)
    band_sign = sign * ((m > 0) - (m < 0))
    # Under-strand arcs through the band in orientation order.  A weight-0
    # band has no crossings at all, so the strand passes straight through
    # and the "reduction" is the bare identification c = a.
    arcs = [a, *range(3, 3 + k - 1), c] if k else [a, c]
    relators = [
        Word.gen(arcs[i + 1], -1)
        * Word.gen(b, -band_sign)
        * Word.gen(arcs[i])
        * Word.gen(b, band_sign)
        for i in range(k)
    ]
    if k == 0:
        reduced = Word.gen(c, -1) * Word.gen(a)
    else:
        remaining = list(relators)
        for x in arcs[1:-1]:
            idx = next(
                i
                for i, r in enumerate(remaining)
                if sum(1 for h, _ in r.letters if h == x) == 1
            )
            r = remaining.pop(idx)
            pos = next(i for i, (h, _) in enumerate(r.letters) if h == x)
            e = r.letters[pos][1]
            u = Word(r.letters[:pos])
            v = Word(r.letters[pos + 1 :])
            # r = u x^e v = 1  solves to  x = (u^-1 v^-1)^e-inverse.
            w = u.inverse() * v.inverse() if e == 1 else v * u
            remaining = [s.substitute(x, w) for s in remaining]
        if len(remaining) != 1:
            raise ReductionMismatch(
                f"band (sign={sign}, m={m}) left {len(remaining)} relators"
            )
        reduced = remaining[0]
    expected = (
        Word.gen(c, -1)
        * Word.gen(b) ** (-sign * m)
        * Word.gen(a)
        * Word.gen(b) ** (sign * m)
    )
    if reduced != expected:
        raise ReductionMismatch(
            f"band (sign={sign}, m={m}) reduced to {reduced}, expected {expected}"
        )
    return reduced
