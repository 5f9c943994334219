"""
The nil-Hecke algebra $\\mathcal H(t_{aff}, \\widetilde W)$ in its $\\theta$-basis.

An element is $\\sum_{\\tilde w} f_{\\tilde w}\\,\\theta_{\\tilde w}$ with
polynomial coefficients in ``x_1..x_r, h``, where
$\\theta_{\\tilde w} = [\\omega]\\,\\theta_{i_1}\\cdots\\theta_{i_k}$ for the
deterministic reduced factorization ``reduced_word(w) = (omega, [i_1..i_k])``.

Membership of an arbitrary skew element is decided by peeling: the support of
$\\theta_{\\tilde w}$ consists of $\\tilde w$ and elements of strictly smaller
length, so the top coefficients determine the expansion one by one. The
element belongs to the algebra iff every peeled coefficient is a polynomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from ..exactalg import Poly, RootFraction
from ..skew import SkewElement, theta_simple
from ..weyl import ExtAffineElement, ExtAffineWeylGroup, weyl_group

__all__ = [
    "NilHecke", "NilHeckeElement", "NotInNilHecke", "nil_hecke",
]


class NotInNilHecke(ValueError):
    """Raised by membership; ``index`` and ``coeff`` are the first bad term."""

    def __init__(self, index: ExtAffineElement, coeff: RootFraction):
        self.index = index
        self.coeff = coeff
        super().__init__(f"non-polynomial coefficient {coeff} at {index!r}")

    def witness(self) -> dict:
        return {"index": self.index.to_json(), "coeff": self.coeff.to_json(),
                "coeff_text": str(self.coeff)}


class NilHecke:
    """Bookkeeping for one root datum: the $\\theta$-basis and its expansions."""

    def __init__(self, group: ExtAffineWeylGroup):
        self.group = group
        self.rank = group.rank
        self.nvars = group.rank + 1
        self._theta: dict[ExtAffineElement, SkewElement] = {}
        self._inv_lead: dict[ExtAffineElement, RootFraction] = {}

    def __repr__(self) -> str:
        return f"NilHecke({self.group.datum.cartan_type})"

    # -- basis ---------------------------------------------------------------

    def theta(self, w: ExtAffineElement) -> SkewElement:
        """$\\theta_{\\tilde w}$ as a skew element (cached)."""
        got = self._theta.get(w)
        if got is not None:
            return got
        g = self.group
        if g.length(w) == 0:
            out = SkewElement.element(g, w)
        else:
            i = next(i for i in g.indices if g.is_right_descent(w, i))
            out = self.theta(w * g.s(i)) * theta_simple(g, i)
        self._theta[w] = out
        return out

    def theta_word(self, word, omega: ExtAffineElement | None = None) -> SkewElement:
        """$[\\omega]\\,\\theta_{i_1}\\cdots\\theta_{i_k}$ for an arbitrary word."""
        g = self.group
        out = SkewElement.element(g, omega if omega is not None else g.identity)
        for i in word:
            out = out * theta_simple(g, i)
        return out

    def inverse_leading(self, w: ExtAffineElement) -> RootFraction:
        """$1/c$ where $c$ is the coefficient of $[\\tilde w]$ in $\\theta_{\\tilde w}$."""
        got = self._inv_lead.get(w)
        if got is not None:
            return got
        lead = self.theta(w).coeff(w)
        if lead.is_zero() or not lead.num.is_constant():
            raise AssertionError(f"unexpected leading coefficient {lead}")
        out = RootFraction.from_poly(lead.den_poly().scale(1 / lead.num.constant_term()))
        self._inv_lead[w] = out
        return out

    def sort_key(self, w: ExtAffineElement):
        return (self.group.length(w), w.translation, w.finite)

    # -- constructors ------------------------------------------------------------

    def element(self, terms=None, hbar=None) -> NilHeckeElement:
        return NilHeckeElement(self, terms or {}, hbar)

    def zero(self) -> NilHeckeElement:
        return self.element()

    def one(self) -> NilHeckeElement:
        return self.poly(Poly.const(1, self.nvars))

    def poly(self, f: Poly) -> NilHeckeElement:
        return self.element({self.group.identity: f})

    def basis(self, w: ExtAffineElement, f: Poly | None = None) -> NilHeckeElement:
        return self.element({w: f if f is not None else Poly.const(1, self.nvars)})

    def gen(self, i: int) -> NilHeckeElement:
        """The generator $\\theta_i$."""
        return self.basis(self.group.s(i))

    def x(self, i: int) -> Poly:
        return Poly.var(i - 1, self.nvars)

    def hbar(self) -> Poly:
        return Poly.hbar(self.nvars)

    def group_element(self, w: ExtAffineElement) -> NilHeckeElement:
        return self.membership(SkewElement.element(self.group, w))

    # -- the decision procedure ------------------------------------------------

    def membership(self, u: SkewElement) -> NilHeckeElement:
        """The $\\theta$-expansion of ``u``; raises :class:`NotInNilHecke` otherwise."""
        if u.group.datum.cartan_type != self.group.datum.cartan_type:
            raise ValueError("element belongs to a different root datum")
        rem = u
        found: dict[ExtAffineElement, Poly] = {}
        while rem.terms:
            w = max(rem.terms, key=self.sort_key)
            f = rem.terms[w] * self.inverse_leading(w)
            p = f.as_poly()
            if p is None:
                raise NotInNilHecke(w, f)
            found[w] = p
            rem = rem - f * self.theta(w)
        return self.element(found)

    def try_membership(self, u: SkewElement) -> NilHeckeElement | None:
        try:
            return self.membership(u)
        except NotInNilHecke:
            return None

    def is_member(self, u: SkewElement) -> bool:
        return self.try_membership(u) is not None

    # -- distinguished elements -----------------------------------------------------

    @property
    def finite_elements(self) -> list[ExtAffineElement]:
        return self.group.finite_elements

    def symmetrizer(self) -> NilHeckeElement:
        """$\\mathbf e = \\frac{1}{\\#W}\\sum_{w \\in W} w$."""
        return self._symmetrizer

    @property
    def _symmetrizer(self) -> NilHeckeElement:
        cached = getattr(self, "_e", None)
        if cached is None:
            els = self.finite_elements
            c = RootFraction.const(mpq(1, len(els)), self.nvars)
            u = SkewElement(self.group, {w: c for w in els})
            cached = self._e = self.membership(u)
        return cached

    def spherical_project(self, u: NilHeckeElement) -> NilHeckeElement:
        e = self.symmetrizer()
        return e * u * e

    def reynolds(self, f: Poly) -> Poly:
        """Average of ``f`` over the finite Weyl group."""
        els = self.finite_elements
        total = Poly.zero(self.nvars)
        for w in els:
            total = total + RootFraction.from_poly(f).substitute(w.substitution).num
        return total.scale(mpq(1, len(els)))


@lru_cache(maxsize=None)
def nil_hecke(label: str) -> NilHecke:
    return NilHecke(weyl_group(label))


class NilHeckeElement:
    """$\\sum f_{\\tilde w}\\theta_{\\tilde w}$, or its image at $\\hbar = c$ if ``hbar`` is set."""
    __slots__ = ("algebra", "terms", "hbar")

    def __init__(self, algebra: NilHecke, terms, hbar=None):
        self.algebra = algebra
        self.hbar = None if hbar is None else mpq(hbar)
        clean = {}
        for w, f in terms.items():
            if not isinstance(f, Poly):
                f = Poly.const(f, algebra.nvars)
            if self.hbar is not None:
                f = f.eval_hbar(self.hbar)
            if f.terms:
                clean[w] = f
        self.terms = clean

    def _like(self, terms) -> NilHeckeElement:
        return NilHeckeElement(self.algebra, terms, self.hbar)

    def _check(self, other: NilHeckeElement) -> None:
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")
        if other.hbar != self.hbar:
            raise ValueError("elements live at different specializations of hbar")

    def expand(self) -> SkewElement:
        """The element as a skew-algebra element (lifted if specialized)."""
        alg = self.algebra
        out = SkewElement.zero(alg.group)
        for w, f in self.terms.items():
            out = out + RootFraction.from_poly(f) * alg.theta(w)
        return out

    def __add__(self, other: NilHeckeElement) -> NilHeckeElement:
        self._check(other)
        t = dict(self.terms)
        for w, f in other.terms.items():
            t[w] = t[w] + f if w in t else f
        return self._like(t)

    def __neg__(self) -> NilHeckeElement:
        return self._like({w: -f for w, f in self.terms.items()})

    def __sub__(self, other: NilHeckeElement) -> NilHeckeElement:
        return self + (-other)

    def __mul__(self, other) -> NilHeckeElement:
        if isinstance(other, NilHeckeElement):
            return nh_mul(self, other)
        if isinstance(other, Poly):
            return nh_mul(self, self._like({self.algebra.group.identity: other}))
        return self._like({w: f.scale(other) for w, f in self.terms.items()})

    def __rmul__(self, other) -> NilHeckeElement:
        # left multiplication by a polynomial only touches coefficients
        if isinstance(other, Poly):
            return self._like({w: other * f for w, f in self.terms.items()})
        return self._like({w: f.scale(other) for w, f in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        return (self.algebra is other.algebra and self.hbar == other.hbar
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: ExtAffineElement) -> Poly:
        return self.terms.get(w, Poly.zero(self.algebra.nvars))

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda t: self.algebra.sort_key(t[0]))

    def degree_of_term(self, w: ExtAffineElement, f: Poly) -> set[int]:
        ell = self.algebra.group.length(w)
        return {d - ell for d in f.homogeneous_parts()}

    def is_homogeneous(self) -> bool:
        return len(grade(self)) <= 1

    def to_json(self) -> dict:
        out = {"type": self.algebra.group.datum.cartan_type,
               "terms": [{"index": w.to_json(), "coeff": f.to_json()}
                         for w, f in self.sorted_items()]}
        if self.hbar is not None:
            out["hbar"] = str(self.hbar)
        return out

    @classmethod
    def from_json(cls, algebra: NilHecke, obj) -> NilHeckeElement:
        if isinstance(obj, str):
            obj = json.loads(obj)
        terms: dict = {}
        for term in obj["terms"]:
            w = ExtAffineElement.from_json(term["index"])
            if w.rank != algebra.rank:
                raise ValueError("index rank does not match the datum")
            f = Poly.from_json(term["coeff"], algebra.nvars)
            terms[w] = terms[w] + f if w in terms else f
        return cls(algebra, terms, obj.get("hbar"))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        g = self.algebra.group
        parts = []
        for w, f in self.sorted_items():
            omega, word = g.reduced_word(w)
            label = "".join(str(i) for i in word) or "id"
            if not omega.is_identity:
                label = f"w{list(omega.translation)}{[list(r) for r in omega.finite]}*{label}"
            parts.append(f"({f})*theta[{label}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NilHeckeElement({self})"


def membership(algebra: NilHecke, u: SkewElement) -> NilHeckeElement:
    return algebra.membership(u)


def nh_mul(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    """Product via the skew algebra followed by membership."""
    a._check(b)
    alg = a.algebra
    prod = alg.membership(a.expand() * b.expand())
    if a.hbar is not None:
        return NilHeckeElement(alg, prod.terms, a.hbar)
    return prod


def grade(u: NilHeckeElement) -> dict[int, NilHeckeElement]:
    """Homogeneous components; $\\deg(f\\theta_w) = \\deg f - \\ell(w)$."""
    g = u.algebra.group
    parts: dict[int, dict] = {}
    for w, f in u.terms.items():
        ell = g.length(w)
        for d, piece in f.homogeneous_parts().items():
            parts.setdefault(d - ell, {})[w] = piece
    return {d: u._like(t) for d, t in sorted(parts.items())}


def specialize(u: NilHeckeElement, c) -> NilHeckeElement:
    """Image in $\\mathcal H|_{\\hbar = c}$."""
    if isinstance(c, Fraction):
        c = mpq(c.numerator, c.denominator)
    if u.hbar is not None and u.hbar != mpq(c):
        raise ValueError("element is already specialized at a different value")
    return NilHeckeElement(u.algebra, u.terms, c)


def theta_word_invariance(algebra: NilHecke, w: ExtAffineElement, words) -> bool:
    """All given words must be reduced words of ``w``; their $\\theta$-products agree."""
    g = algebra.group
    omega, _ = g.reduced_word(w)
    products = []
    for word in words:
        if g.word(word, omega) != w or len(word) != g.length(w):
            raise ValueError(f"{list(word)} is not a reduced word for the element")
        products.append(algebra.theta_word(word, omega))
    return all(p == products[0] for p in products[1:])


@dataclass
class WordInvarianceReport:
    element: ExtAffineElement
    words: list[list[int]]
    agree: bool
