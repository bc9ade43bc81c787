"""Exact multivariate Laurent polynomials over the integers.

Terms are stored sparsely as a map from exponent vectors (tuples of ints,
negative exponents allowed) to nonzero arbitrary-precision coefficients.
The zero polynomial stores no terms.  All operations are exact; nothing
here ever touches floating point.

Polynomial gcds, which the invariants are defined through, are computed by
primitive pseudo-remainder sequences: contents and primitive parts are
split off recursively variable by variable, so the method works uniformly
for any arity.  A gcd is returned in *unit normal form*: multiplied by the
unique unit ``±t^k`` making every variable's minimal exponent zero and the
graded-lexicographically least monomial's coefficient positive.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, EmptyInput, NonMonomialImage

Exponent = tuple[int, ...]


class LaurentPolynomial:
    """Immutable Laurent polynomial in ``arity`` variables over Z."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Exponent, int] | None = None):
        if arity < 0:
            raise ValueError("arity must be >= 0")
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, coef in terms.items():
                if coef == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != arity:
                    raise ArityMismatch(
                        f"exponent {exp} has length {len(exp)}, arity is {arity}"
                    )
                clean[exp] = clean.get(exp, 0) + coef
                if clean[exp] == 0:
                    del clean[exp]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(arity: int) -> "LaurentPolynomial":
        return LaurentPolynomial(arity, {})

    @staticmethod
    def constant(arity: int, c: int) -> "LaurentPolynomial":
        return LaurentPolynomial(arity, {(0,) * arity: c})

    @staticmethod
    def one(arity: int) -> "LaurentPolynomial":
        return LaurentPolynomial.constant(arity, 1)

    @staticmethod
    def variable(arity: int, index: int, power: int = 1) -> "LaurentPolynomial":
        """The monomial ``t_index ** power``."""
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exp = [0] * arity
        exp[index] = power
        return LaurentPolynomial(arity, {tuple(exp): 1})

    @staticmethod
    def monomial(arity: int, exp: Sequence[int], coef: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial(arity, {tuple(exp): coef})

    # -- basics ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """True for ``±t^k`` — the invertible elements of the ring."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.arity: 1}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            out[exp] = out.get(exp, 0) + coef
        return LaurentPolynomial(self.arity, out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.arity, out)

    def scale(self, c: int) -> "LaurentPolynomial":
        return LaurentPolynomial(self.arity, {e: c * v for e, v in self.terms.items()})

    def shift(self, exp: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial ``t^exp``."""
        exp = tuple(exp)
        return LaurentPolynomial(
            self.arity,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()},
        )

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            exp, coef = next(iter(self.terms.items()))
            return LaurentPolynomial.monomial(
                self.arity, tuple(n * e for e in exp), coef if n % 2 else 1
            )
        out = LaurentPolynomial.one(self.arity)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure --------------------------------------------------------

    def min_exponents(self) -> Exponent:
        """Per-variable minimum exponent over all terms (zero poly: all 0)."""
        if not self.terms:
            return (0,) * self.arity
        mins = [min(e[i] for e in self.terms) for i in range(self.arity)]
        return tuple(mins)

    def max_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.arity
        return tuple(max(e[i] for e in self.terms) for i in range(self.arity))

    def integer_content(self) -> int:
        return math.gcd(*self.terms.values()) if self.terms else 0

    def degree_in(self, var: int) -> int:
        """Maximum exponent of variable ``var`` (zero polynomial: -1)."""
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def coefficients_in(self, var: int) -> dict[int, "LaurentPolynomial"]:
        """View as a polynomial in ``t_var`` with coefficients of arity-1."""
        out: dict[int, dict[Exponent, int]] = {}
        for e, c in self.terms.items():
            rest = e[:var] + e[var + 1 :]
            out.setdefault(e[var], {})[rest] = c
        return {
            d: LaurentPolynomial(self.arity - 1, t) for d, t in sorted(out.items())
        }

    @staticmethod
    def from_coefficients_in(
        arity: int, var: int, coeffs: Mapping[int, "LaurentPolynomial"]
    ) -> "LaurentPolynomial":
        terms: dict[Exponent, int] = {}
        for d, poly in coeffs.items():
            for e, c in poly.terms.items():
                full = e[:var] + (d,) + e[var:]
                terms[full] = terms.get(full, 0) + c
        return LaurentPolynomial(arity, terms)

    # -- display / serialisation ------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in graded-lexicographic order (the normalisation order)."""
        return sorted(self.terms.items(), key=lambda it: _grlex_key(it[0]))

    def to_json_obj(self) -> dict:
        return {
            "arity": self.arity,
            "terms": [
                {"exp": list(e), "coef": c} for e, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json_obj(obj: Mapping) -> "LaurentPolynomial":
        return LaurentPolynomial(
            obj["arity"], {tuple(t["exp"]): t["coef"] for t in obj["terms"]}
        )

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self!s})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = (
            ["t"]
            if self.arity == 1
            else [f"t{i + 1}" for i in range(self.arity)]
        )
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{p}" if p != 1 else names[i]
                for i, p in enumerate(e)
                if p != 0
            )
            if not mono:
                bits.append(f"{c:+d}")
            elif abs(c) == 1:
                bits.append(("+" if c > 0 else "-") + mono)
            else:
                bits.append(f"{c:+d}*{mono}")
        s = " ".join(bits)
        return s[1:] if s.startswith("+") and " " not in s else s


def _grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


# -- unit normal form -----------------------------------------------------


def normalize(p: LaurentPolynomial) -> LaurentPolynomial:
    """Unit normal form of ``p``.

    Multiplies by the unique unit monomial so that every variable's minimal
    exponent becomes 0 and the graded-lex least monomial has a positive
    coefficient.  Two polynomials are associates (equal up to ``±t^k``) iff
    their normal forms are equal; ``normalize`` is idempotent.
    """
    if p.is_zero():
        return p
    shifted = p.shift(tuple(-m for m in p.min_exponents()))
    least = min(shifted.terms, key=_grlex_key)
    if shifted.terms[least] < 0:
        shifted = -shifted
    return shifted


def associates(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """True when p and q agree up to multiplication by a unit."""
    return normalize(p) == normalize(q)


# -- exact division --------------------------------------------------------


def divide_exact(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient p / q; raises ``ValueError`` if q does not divide p."""
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    # Clear Laurent shifts so ordinary polynomial division applies.
    pshift = p.min_exponents()
    qshift = q.min_exponents()
    pp = p.shift(tuple(-m for m in pshift))
    qq = q.shift(tuple(-m for m in qshift))
    quot = _poly_divide(pp, qq)
    if quot is None:
        raise ValueError("inexact polynomial division")
    return quot.shift(tuple(a - b for a, b in zip(pshift, qshift)))


def _poly_divide(
    p: LaurentPolynomial, q: LaurentPolynomial
) -> LaurentPolynomial | None:
    """Division for nonnegative-exponent polynomials; None when inexact."""
    arity = p.arity
    lead_q = max(q.terms, key=_grlex_key)
    cq = q.terms[lead_q]
    rem = dict(p.terms)
    quot: dict[Exponent, int] = {}
    while rem:
        lead_r = max(rem, key=_grlex_key)
        cr = rem[lead_r]
        mono = tuple(a - b for a, b in zip(lead_r, lead_q))
        if any(m < 0 for m in mono) or cr % cq != 0:
            return None
        k = cr // cq
        quot[mono] = quot.get(mono, 0) + k
        for e, c in q.terms.items():
            tgt = tuple(a + b for a, b in zip(mono, e))
            nv = rem.get(tgt, 0) - k * c
            if nv:
                rem[tgt] = nv
            else:
                rem.pop(tgt, None)
    return LaurentPolynomial(arity, quot)


# -- gcd --------------------------------------------------------------------


def gcd(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Greatest common divisor in Z[t_1^{±1},...], in unit normal form.

    ``gcd(p, 0) = normalize(p)``; ``gcd(0, 0) = 0``.  Computed by primitive
    pseudo-remainder sequences, recursing on the variable count.
    """
    p._check(q)
    if p.is_zero():
        return normalize(q)
    if q.is_zero():
        return normalize(p)
    a = normalize(p)
    b = normalize(q)
    return normalize(_gcd_poly(a, b))


def gcd_many(polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    """Fold ``gcd`` over a non-empty collection (EmptyInput otherwise)."""
    it = list(polys)
    if not it:
        raise EmptyInput("gcd_many of no polynomials")
    acc = normalize(it[0])
    for q in it[1:]:
        acc = gcd(acc, q)
        if acc.is_one():
            # gcd can only shrink; 1 is absorbing.
            break
    return acc


def _gcd_poly(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """gcd of two nonzero nonnegative-exponent polynomials (any arity)."""
    arity = a.arity
    if arity == 0:
        return LaurentPolynomial.constant(
            0, math.gcd(a.terms.get((), 0), b.terms.get((), 0))
        )
    var = arity - 1
    da, db = a.degree_in(var), b.degree_in(var)
    if da == 0 and db == 0:
        # The main variable is absent from both: drop it and recurse.
        sub = _gcd_poly(_drop_var(a, var), _drop_var(b, var))
        return _lift_var(sub, var)
    if da < db:
        a, b, da, db = b, a, db, da
    # Split contents (gcds of coefficient polynomials in the main variable).
    cont_a, pp_a = _content_split(a, var)
    cont_b, pp_b = _content_split(b, var)
    cont = _gcd_poly(cont_a, cont_b)
    # Primitive PRS on the primitive parts.
    while not pp_b.is_zero():
        r = _pseudo_rem(pp_a, pp_b, var)
        pp_a = pp_b
        if r.is_zero():
            pp_b = r
        else:
            _, pp_b = _content_split(r, var)
    _, result = _content_split(pp_a, var)
    return _lift_var(cont, var) * result


def _drop_var(p: LaurentPolynomial, var: int) -> LaurentPolynomial:
    return LaurentPolynomial(
        p.arity - 1, {e[:var] + e[var + 1 :]: c for e, c in p.terms.items()}
    )


def _lift_var(p: LaurentPolynomial, var: int) -> LaurentPolynomial:
    return LaurentPolynomial(
        p.arity + 1, {e[:var] + (0,) + e[var:]: c for e, c in p.terms.items()}
    )


def _content_split(
    p: LaurentPolynomial, var: int
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """(content, primitive part) of ``p`` viewed in the variable ``var``.

    The content is the gcd (arity-1 polynomial) of the coefficients; the
    primitive part is the exact quotient, lifted back to full arity.
    """
    coeffs = p.coefficients_in(var)
    items = list(coeffs.values())
    cont = items[0]
    for c in items[1:]:
        cont = _gcd_poly(normalize(cont), normalize(c))
        if cont.is_one():
            break
    cont = normalize(cont)
    if cont.is_one():
        return cont, p
    pp = {d: divide_exact(c, cont) for d, c in coeffs.items()}
    return cont, LaurentPolynomial.from_coefficients_in(p.arity, var, pp)


def _pseudo_rem(
    a: LaurentPolynomial, b: LaurentPolynomial, var: int
) -> LaurentPolynomial:
    """Pseudo-remainder of a by b in the variable ``var``."""
    da, db = a.degree_in(var), b.degree_in(var)
    if da < db:
        return a
    cb = b.coefficients_in(var)
    lc_b = _lift_var(cb[db], var)
    rem = a
    while not rem.is_zero() and rem.degree_in(var) >= db:
        dr = rem.degree_in(var)
        lc_r = _lift_var(rem.coefficients_in(var)[dr], var)
        shift = [0] * a.arity
        shift[var] = dr - db
        rem = rem * lc_b - b * lc_r.shift(shift)
    return rem


# -- substitution ------------------------------------------------------------


def specialize(
    p: LaurentPolynomial, images: Sequence[LaurentPolynomial]
) -> LaurentPolynomial:
    """Ring substitution t_i -> images[i]; images must be unit monomials.

    Used to pass from the multivariable setting to one variable, e.g.
    ``t_i -> t^{m_i}``.  Raises :class:`NonMonomialImage` unless every image
    is ``±t^k`` (so that the map is a ring homomorphism on Laurent rings).
    """
    if len(images) != p.arity:
        raise ArityMismatch(f"{len(images)} images for arity {p.arity}")
    if not images:
        return p
    target_arity = images[0].arity
    for im in images:
        if im.arity != target_arity:
            raise ArityMismatch("images of mixed arity")
        if not im.is_unit():
            raise NonMonomialImage(f"image {im} is not a unit monomial")
    out = LaurentPolynomial.zero(target_arity)
    for e, c in p.terms.items():
        term = LaurentPolynomial.constant(target_arity, c)
        for i, power in enumerate(e):
            term = term * images[i] ** power
        out = out + term
    return out
