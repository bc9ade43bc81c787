"""Group presentations of link diagrams and their Fox-calculus matrices.

A diagram's group is presented by one generator per arc — a maximal run of
a component between consecutive under-passages — and one relator per
crossing.  At a crossing of sign ``e`` with over-arc ``b``, incoming
under-arc ``a`` and outgoing under-arc ``c``, the relator is::

    c^-1 b^-e a b^e

The generalized presentation replaces the conjugating power ``e`` by
``e*m`` for an integer weight ``m``; with ``m = 1`` it is the plain arc
presentation, and it agrees with the arc presentation of the multiplexed
diagram (see :mod:`weldmux.multiplex`).

Fox derivatives of relators, evaluated under the homomorphism sending each
generator to the variable of its component (or to a single ``t``), produce
the Jacobian matrices that the Alexander-type invariants are read from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Mapping, Sequence

import re

from .errors import GaussSyntaxError
from .gauss import OVER, UNDER, GaussDiagram
from .laurent import LaurentPolynomial

# -- free-group words -------------------------------------------------------

Letter = tuple[int, int]  # (generator id, exponent +1/-1)


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be ±1, got {e}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word in free-group generators."""

    letters: tuple[Letter, ...] = ()

    @staticmethod
    def of(*letters: Letter) -> "Word":
        return Word(_reduce(letters))

    @staticmethod
    def gen(g: int, power: int = 1) -> "Word":
        e = 1 if power > 0 else -1
        return Word(((g, e),) * abs(power))

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def substitute(self, g: int, w: "Word") -> "Word":
        """Replace every occurrence of generator ``g`` by the word ``w``."""
        out: list[Letter] = []
        for h, e in self.letters:
            if h == g:
                out.extend(w.letters if e > 0 else w.inverse().letters)
            else:
                out.append((h, e))
        return Word(_reduce(out))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        bits: list[str] = []
        i = 0
        while i < len(self.letters):
            g, e = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == (g, e):
                j += 1
            power = e * (j - i)
            bits.append(f"x{g}" if power == 1 else f"x{g}^{power}")
            i = j
        return " ".join(bits)


# -- presentations -----------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """A presentation generator tagged with the component that carries it."""

    id: int
    component: int


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        ids = {g.id for g in self.generators}
        if len(ids) != len(self.generators):
            raise ValueError("duplicate generator ids")
        for r in self.relators:
            if not r.generators() <= ids:
                raise ValueError(f"relator {r} uses undeclared generators")

    @property
    def n_components(self) -> int:
        if not self.generators:
            return 0
        return 1 + max(g.component for g in self.generators)

    def component_of(self) -> dict[int, int]:
        return {g.id: g.component for g in self.generators}

    def __str__(self) -> str:
        gens = ", ".join(f"x{g.id}" for g in self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {gens} | {rels} >"


_GEN_RE = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_presentation(text: str) -> GroupPresentation:
    """Parse the ``< x0, x1 | x1^-1 x0 x1 ... >`` text form.

    The text form does not carry component labels; parsed generators are
    all labelled component 0 (callers may re-attach labels).
    """
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise GaussSyntaxError("presentation must be wrapped in < ... >")
    body = s[1:-1]
    if "|" not in body:
        raise GaussSyntaxError("presentation needs a | separator")
    gpart, rpart = body.split("|", 1)
    gens: list[Generator] = []
    for tok in gpart.replace(",", " ").split():
        m = _GEN_RE.match(tok)
        if not m or m.group(2) is not None:
            raise GaussSyntaxError(f"bad generator token {tok!r}")
        gens.append(Generator(int(m.group(1)), 0))
    relators: list[Word] = []
    for chunk in rpart.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        letters: list[Letter] = []
        for tok in chunk.split():
            if tok == "1":
                continue
            m = _GEN_RE.match(tok)
            if not m:
                raise GaussSyntaxError(f"bad word token {tok!r}")
            g = int(m.group(1))
            power = int(m.group(2)) if m.group(2) else 1
            e = 1 if power > 0 else -1
            letters.extend([(g, e)] * abs(power))
        relators.append(Word(_reduce(letters)))
    return GroupPresentation(tuple(gens), tuple(relators))


def render_presentation(p: GroupPresentation) -> str:
    return str(p)


# -- arc structure of a diagram ----------------------------------------------


@dataclass(frozen=True)
class CrossingFrame:
    """The data of one crossing needed to write its relator."""

    crossing: int
    sign: int
    over_arc: int  # generator ids
    in_arc: int
    out_arc: int
    over_component: int


def _arc_structure(d: GaussDiagram):
    """Assign one generator per arc; return (generators, frames).

    On a component with under-passages, arcs end at (and include) each
    under endpoint; a component with none is a single arc.  Generators are
    numbered consecutively, components in order, arcs by the position of
    their final under endpoint.
    """
    generators: list[Generator] = []
    ends_at: dict[tuple[int, int], int] = {}  # (component, under position) -> gen
    whole: dict[int, int] = {}  # crossing-free component -> gen
    under_positions: list[list[int]] = []
    for ci, comp in enumerate(d.components):
        unders = [pi for pi, ep in enumerate(comp) if ep.role == UNDER]
        under_positions.append(unders)
        if not unders:
            gid = len(generators)
            generators.append(Generator(gid, ci))
            whole[ci] = gid
            continue
        for pos in unders:
            gid = len(generators)
            generators.append(Generator(gid, ci))
            ends_at[(ci, pos)] = gid

    def arc_containing(ci: int, pos: int) -> int:
        """Generator of the arc through position ``pos`` of component ci."""
        unders = under_positions[ci]
        if not unders:
            return whole[ci]
        for u in unders:
            if u >= pos:
                return ends_at[(ci, u)]
        return ends_at[(ci, unders[0])]  # wraps past the end

    def arc_after(ci: int, pos: int) -> int:
        """Generator of the arc that starts just after under position pos."""
        unders = under_positions[ci]
        for u in unders:
            if u > pos:
                return ends_at[(ci, u)]
        return ends_at[(ci, unders[0])]

    positions = d.endpoint_positions()
    frames: list[CrossingFrame] = []
    for cid in d.crossings:
        oc, opos = positions[(cid, OVER)]
        uc, upos = positions[(cid, UNDER)]
        frames.append(
            CrossingFrame(
                crossing=cid,
                sign=d.signs[cid],
                over_arc=arc_containing(oc, opos),
                in_arc=ends_at[(uc, upos)],
                out_arc=arc_after(uc, upos),
                over_component=oc,
            )
        )
    return tuple(generators), tuple(frames)


def _conjugation_relator(frame: CrossingFrame, power: int) -> Word:
    """Relator ``out^-1 over^-power in over^power`` (freely reduced)."""
    b = Word.gen(frame.over_arc)
    return (
        Word.gen(frame.out_arc, -1)
        * b ** (-power)
        * Word.gen(frame.in_arc)
        * b**power
    )


def wirtinger_presentation(d: GaussDiagram) -> GroupPresentation:
    """Arc presentation of the diagram's group (one relator per crossing)."""
    generators, frames = _arc_structure(d)
    relators = tuple(_conjugation_relator(f, f.sign) for f in frames)
    return GroupPresentation(generators, relators)


def generalized_presentation(d: GaussDiagram, m: int) -> GroupPresentation:
    """Weight-``m`` presentation: conjugation powers scaled by ``m``.

    Agrees with ``wirtinger_presentation(multiplex(d, (m, ..., m)))`` after
    eliminating the intermediate band generators; with ``m = 1`` it is the
    plain arc presentation.
    """
    generators, frames = _arc_structure(d)
    relators = tuple(_conjugation_relator(f, f.sign * m) for f in frames)
    return GroupPresentation(generators, relators)


# -- Tietze simplification -----------------------------------------------------


def simplify(p: GroupPresentation) -> GroupPresentation:
    """Eliminate generators pinned by a relator (Tietze reductions).

    Whenever some relator uses a generator exactly once, the relator
    expresses that generator as a word in the others; the generator is
    substituted away and the relator dropped.  Eliminations repeat until
    none applies, scanning deterministically (first relator, first letter).
    The group, its component-graded abelianization and all derived
    invariants are unchanged.
    """
    gens = list(p.generators)
    relators = [r for r in p.relators]
    while True:
        target: tuple[int, int] | None = None  # (relator index, generator)
        for ri, r in enumerate(relators):
            counts: dict[int, int] = {}
            for g, _ in r.letters:
                counts[g] = counts.get(g, 0) + 1
            for g, _ in r.letters:
                if counts[g] == 1:
                    target = (ri, g)
                    break
            if target:
                break
        if target is None:
            break
        ri, g = target
        r = relators[ri]
        idx = next(i for i, (h, _) in enumerate(r.letters) if h == g)
        e = r.letters[idx][1]
        u = Word(r.letters[:idx])
        v = Word(r.letters[idx + 1 :])
        # r = u g^e v = 1  =>  g^e = u^-1 v^-1  =>  g = (u^-1 v^-1)^e
        w = (u.inverse() * v.inverse()) ** e
        relators = [
            s.substitute(g, w) for si, s in enumerate(relators) if si != ri
        ]
        gens = [x for x in gens if x.id != g]
    return GroupPresentation(tuple(gens), tuple(relators))


# -- Fox calculus ---------------------------------------------------------------


def fox_derivative(w: Word, g: int) -> dict[Word, int]:
    """Free Fox derivative ∂w/∂x_g as a formal integer sum of words.

    Satisfies ∂(uv) = ∂u + u·∂v, ∂x_g = 1, ∂x_g^-1 = -x_g^-1 and kills
    other generators.
    """
    out: dict[Word, int] = {}

    def add(word: Word, c: int) -> None:
        n = out.get(word, 0) + c
        if n:
            out[word] = n
        else:
            out.pop(word, None)

    prefix = Word()
    for h, e in w.letters:
        if h == g:
            if e == 1:
                add(prefix, 1)
            else:
                add(prefix * Word.gen(g, -1), -1)
        prefix = prefix * Word(((h, e),))
    return out


VariableMode = Literal["single", "multi"]


def _phi_monomial(
    w: Word, comp_of: Mapping[int, int], arity: int, mode: VariableMode
) -> tuple[int, ...]:
    if mode == "single":
        return (sum(e for _, e in w.letters),)
    exp = [0] * arity
    for g, e in w.letters:
        exp[comp_of[g]] += e
    return tuple(exp)


def jacobian(
    p: GroupPresentation, mode: VariableMode = "single"
) -> list[list[LaurentPolynomial]]:
    """Fox Jacobian of the presentation under the abelianizing map.

    Entry (i, j) is the image of ∂r_i/∂x_j when each generator maps to its
    component's variable (mode ``multi``) or to the single variable ``t``
    (mode ``single``).  The matrix has one row per relator and one column
    per generator, in presentation order.
    """
    comp_of = p.component_of()
    arity = 1 if mode == "single" else p.n_components
    rows: list[list[LaurentPolynomial]] = []
    col_of = {g.id: j for j, g in enumerate(p.generators)}
    for r in p.relators:
        row = [dict() for _ in p.generators]  # exponent -> coefficient
        prefix = [0] * arity

        def bump(col: int, exp: Sequence[int], c: int) -> None:
            key = tuple(exp)
            row[col][key] = row[col].get(key, 0) + c

        for g, e in r.letters:
            j = col_of[g]
            if e == 1:
                bump(j, prefix, 1)
            vexp = [0] * arity
            if mode == "single":
                vexp[0] = e
            else:
                vexp[comp_of[g]] = e
            prefix = [a + b for a, b in zip(prefix, vexp)]
            if e == -1:
                bump(j, prefix, -1)
        rows.append([LaurentPolynomial(arity, cells) for cells in row])
    return rows


def abelianization_matrix(p: GroupPresentation) -> list[list[int]]:
    """Exponent-sum matrix (relators x generators)."""
    col_of = {g.id: j for j, g in enumerate(p.generators)}
    out = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r.letters:
            row[col_of[g]] += e
        out.append(row)
    return out


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank and torsion of the abelianized group."""

    rank: int
    torsion: tuple[int, ...]
    invariant_factors: tuple[int, ...]


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    """Invariant factors of the abelianization, via Smith normal form.

    For any link diagram's arc presentation this is free of rank equal to
    the component count — one of the cheap sanity invariants.
    """
    from .matrices import smith_normal_form

    g = len(p.generators)
    if g == 0:
        return AbelianInvariants(0, (), ())
    mat = abelianization_matrix(p)
    if not mat:
        return AbelianInvariants(g, (), (0,) * g)
    factors = smith_normal_form(mat)
    nonzero = [f for f in factors if f]
    rank = g - len(nonzero)
    torsion = tuple(f for f in nonzero if f != 1)
    return AbelianInvariants(rank, torsion, factors)
