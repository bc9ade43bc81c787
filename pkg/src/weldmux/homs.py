"""Counting homomorphisms from presented groups into small finite groups.

The count of homomorphisms G -> T is an isomorphism invariant of G, so a
profile of counts over a few symmetric groups is a cheap, exact fingerprint
for telling presented groups apart.

Counting is exact backtracking over generator images.  A relator is
checked as soon as all its generators are assigned; a relator with
exactly one unassigned generator (appearing once) *determines* that
generator's image; and when nothing is forced, the search branches on a
generator from the relator with the fewest unassigned generators, so the
next step can propagate instead of enumerating blindly.  Group elements
are handled as indices into lazily built multiplication-table rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

from .errors import TargetTooLarge
from .groups import GroupPresentation, Word

MAX_TARGET_ORDER = 5040


@dataclass(frozen=True)
class FiniteTarget:
    """A finite group given by its elements and multiplication."""

    name: str
    elements: tuple[tuple[int, ...], ...]
    identity: tuple[int, ...]

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        # permutation composition: (a*b)(i) = a(b(i))
        return tuple(a[b[i]] for i in range(len(b)))

    def inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(a)
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    @property
    def order(self) -> int:
        return len(self.elements)

    def evaluate(self, w: Word, assignment) -> tuple[int, ...]:
        acc = self.identity
        for g, e in w.letters:
            x = assignment[g]
            acc = self.mul(acc, x if e > 0 else self.inv(x))
        return acc


def symmetric_group(n: int) -> FiniteTarget:
    """S_n as permutations of {0..n-1} in one-line notation."""
    if n < 1:
        raise ValueError("n >= 1")
    elements = tuple(sorted(permutations(range(n))))
    if len(elements) > MAX_TARGET_ORDER:
        raise TargetTooLarge(f"S{n} has order {len(elements)} > {MAX_TARGET_ORDER}")
    return FiniteTarget(f"S{n}", elements, tuple(range(n)))


def target_by_name(name: str) -> FiniteTarget:
    name = name.strip().upper()
    if name.startswith("S") and name[1:].isdigit():
        return symmetric_group(int(name[1:]))
    raise ValueError(f"unknown target {name!r}; use S2, S3, ...")


def count_homs(p: GroupPresentation, target: FiniteTarget) -> int:
    """Number of homomorphisms from the presented group into ``target``."""
    if target.order > MAX_TARGET_ORDER:
        raise TargetTooLarge(f"target order {target.order} > {MAX_TARGET_ORDER}")
    gen_ids = [g.id for g in p.generators]
    if not gen_ids:
        return 1  # only the trivial homomorphism exists
    relators = [r for r in p.relators if not r.is_identity()]
    rel_gens = [sorted(r.generators()) for r in relators]

    elems = target.elements
    n_el = len(elems)
    e_index = {e: i for i, e in enumerate(elems)}
    ident = e_index[target.identity]
    inv_t = [e_index[target.inv(a)] for a in elems]
    # Multiplication-table rows, built on first use so a large target only
    # pays for the rows the search actually touches.
    mul_rows: list[list[int] | None] = [None] * n_el

    def row_of(i: int) -> list[int]:
        a = elems[i]
        r = [e_index[target.mul(a, b)] for b in elems]
        mul_rows[i] = r
        return r

    # Each relator as ((gen, sign), ...); signs are +-1 because words
    # store unit-exponent letters.
    letters = [tuple(r.letters) for r in relators]
    occurrences = [
        {g: sum(1 for h, _ in ls if h == g) for g in gs}
        for ls, gs in zip(letters, rel_gens)
    ]
    adjacent: dict[int, list[int]] = {g: [] for g in gen_ids}
    for k, gs in enumerate(rel_gens):
        for g in gs:
            adjacent.setdefault(g, []).append(k)

    # Conjugacy classes (representative index, class size).  Before the
    # first branch every assigned image is the identity (propagation from
    # nothing can only pin generators to the identity), and conjugating a
    # homomorphism by a fixed element is a bijection of Hom(G, T) that
    # preserves identity images, so the number of homomorphisms sending
    # the first branched generator to x is constant on each class: try one
    # representative and weight by class size.  Skipped for very large
    # targets, where computing the classes would cost more than it saves.
    classes: list[tuple[int, int]] = []
    if n_el <= 1024:
        seen = bytearray(n_el)
        for i in range(n_el):
            if seen[i]:
                continue
            a = elems[i]
            orbit = {
                e_index[target.mul(target.mul(t, a), target.inv(t))]
                for t in elems
            }
            for j in orbit:
                seen[j] = 1
            classes.append((i, len(orbit)))
    else:
        classes = [(i, 1) for i in range(n_el)]

    assignment: dict[int, int] = {}
    unassigned_in = [len(gs) for gs in rel_gens]
    branched = False

    def evaluate(ls) -> int:
        acc = ident
        for g, e in ls:
            x = assignment[g]
            if e < 0:
                x = inv_t[x]
            row = mul_rows[acc]
            if row is None:
                row = row_of(acc)
            acc = row[x]
        return acc

    def solve_for(k: int, g: int) -> int:
        """The unique image of g making relator k evaluate to the identity.

        Requires that g occurs exactly once.  If the relator is u g^e v
        then g^e = u^-1 v^-1.
        """
        ls = letters[k]
        idx = next(i for i, (h, _) in enumerate(ls) if h == g)
        e = ls[idx][1]
        u = inv_t[evaluate(ls[:idx])]
        v = inv_t[evaluate(ls[idx + 1 :])]
        row = mul_rows[u]
        if row is None:
            row = row_of(u)
        rhs = row[v]
        return rhs if e == 1 else inv_t[rhs]

    def assign(g: int, img: int) -> bool:
        """Record g -> img; check the relators it completes."""
        assignment[g] = img
        ok = True
        for k in adjacent[g]:
            unassigned_in[k] -= 1
            if ok and unassigned_in[k] == 0 and evaluate(letters[k]) != ident:
                ok = False
        return ok

    def unassign(g: int) -> None:
        del assignment[g]
        for k in adjacent[g]:
            unassigned_in[k] += 1

    def extend() -> int:
        # Propagate: any relator with exactly one unassigned generator,
        # occurring once, pins that generator.
        for k, gs in enumerate(rel_gens):
            if unassigned_in[k] != 1:
                continue
            g = next(h for h in gs if h not in assignment)
            if occurrences[k][g] == 1:
                n = extend() if assign(g, solve_for(k, g)) else 0
                unassign(g)
                return n
        # Branch on the most constrained spot: a generator from a relator
        # with the fewest unassigned generators, so the very next call can
        # propagate along that relator instead of enumerating blindly.
        best_g: int | None = None
        best_n = 0
        for k, gs in enumerate(rel_gens):
            n_un = unassigned_in[k]
            if n_un == 0 or (best_g is not None and n_un > best_n):
                continue
            g = next(h for h in gs if h not in assignment)
            if best_g is None or n_un < best_n or g < best_g:
                best_n = n_un
                best_g = g
        if best_g is None:
            # Every relator is fully assigned (and was checked when its
            # last generator got its image); the rest are free choices.
            free = sum(1 for g in gen_ids if g not in assignment)
            return n_el**free
        nonlocal branched
        total = 0
        if branched:
            for img in range(n_el):
                if assign(best_g, img):
                    total += extend()
                unassign(best_g)
        else:
            branched = True
            for img, size in classes:
                if assign(best_g, img):
                    total += size * extend()
                unassign(best_g)
            branched = False
        return total

    return extend()


def count_homs_exhaustive(p: GroupPresentation, target: FiniteTarget) -> int:
    """Brute-force oracle: try every assignment of generator images.

    Exponential; intended for cross-checking ``count_homs`` on small
    presentations only.
    """
    gen_ids = [g.id for g in p.generators]
    total = 0
    for images in product(target.elements, repeat=len(gen_ids)):
        assignment = dict(zip(gen_ids, images))
        if all(
            target.evaluate(r, assignment) == target.identity for r in p.relators
        ):
            total += 1
    return total


@dataclass
class HomCountProfile:
    """Hom counts of one presentation across several targets."""

    counts: dict[str, int] = field(default_factory=dict)

    @staticmethod
    def of(p: GroupPresentation, targets: Sequence[FiniteTarget]) -> "HomCountProfile":
        return HomCountProfile({t.name: count_homs(p, t) for t in targets})
