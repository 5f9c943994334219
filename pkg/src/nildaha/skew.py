"""
The skew group algebra $\\widetilde W \\ltimes \\mathbb{Q}(t^*_{aff})$.

Elements are finite sums $\\sum c_{\\tilde w}\\,[\\tilde w]$ with the
coefficient on the left, multiplied by

    (c [u]) (d [v]) = (c * (u |> d)) [u v],     (u |> d)(p) = d(u^{-1} p).

The Demazure element of an affine simple index ``i`` is
$\\theta_i = \\frac{1}{\\phi_i}([s_i] - [1])$ with $\\phi_i = x_i$ for
``i >= 1`` and $\\phi_0 = \\hbar - \\langle x, \\check\\theta\\rangle$, the
affine coroot that is positive on the fundamental alcove. With the opposite
orientation $\\langle x, \\check\\theta\\rangle - \\hbar$ (see
:func:`theta_hyperplane`) the odd-order braid relations through the affine node hold
only up to sign.

>>> from nildaha.weyl import weyl_group
>>> W = weyl_group("A1")
>>> x = Poly.var(0, 2)
>>> str(theta_hyperplane(W).act(x * x))
'-4*h'
>>> theta_simple(W, 0) == -theta_hyperplane(W)
True

The same module holds :class:`TorusSkewElement`, the $\\hbar = 0$ target
$W \\ltimes \\mathbb{C}[T \\times t^*, (t^\\alpha - 1)/\\check\\alpha]$.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping

from .exactalg import Poly, RootFraction, TorusMixed
from .rootdata import Coroot, Weight, pairing
from .weyl import ExtAffineElement, ExtAffineWeylGroup

__all__ = [
    "SkewElement", "TorusSkewElement",
    "skew_mul", "act", "theta_simple", "theta_hyperplane", "theta_root_direct", "theta_root", "group_embed", "check_ddh",
    "simple_form", "affine_root_pairing", "specialize_to_torus",
]

Coeff = RootFraction


class SkewElement:
    """$\\sum_{\\tilde w} c_{\\tilde w} [\\tilde w]$; ``terms`` never holds zeros."""
    __slots__ = ("group", "terms")

    def __init__(self, group: ExtAffineWeylGroup,
                 terms: Mapping[ExtAffineElement, RootFraction] | None = None):
        self.group = group
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @property
    def nvars(self) -> int:
        return self.group.rank + 1

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, group) -> SkewElement:
        return cls(group, {})

    @classmethod
    def one(cls, group) -> SkewElement:
        return cls.scalar(group, 1)

    @classmethod
    def element(cls, group, w: ExtAffineElement, coeff=None) -> SkewElement:
        if coeff is None:
            coeff = RootFraction.const(1, group.rank + 1)
        return cls(group, {w: _as_fraction(coeff, group.rank + 1)})

    @classmethod
    def scalar(cls, group, c) -> SkewElement:
        return cls(group, {group.identity: _as_fraction(c, group.rank + 1)})

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: SkewElement) -> None:
        if other.group.datum.cartan_type != self.group.datum.cartan_type:
            raise ValueError("elements belong to different root data")

    def __add__(self, other: SkewElement) -> SkewElement:
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t[w] + c if w in t else c
        return SkewElement(self.group, t)

    def __neg__(self) -> SkewElement:
        return SkewElement(self.group, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: SkewElement) -> SkewElement:
        return self + (-other)

    def __mul__(self, other) -> SkewElement:
        if isinstance(other, SkewElement):
            return skew_mul(self, other)
        # right multiplication by a scalar means multiplying by scalar * [1]
        return skew_mul(self, SkewElement.scalar(self.group, other))

    def __rmul__(self, other) -> SkewElement:
        c = _as_fraction(other, self.nvars)
        return SkewElement(self.group, {w: c * d for w, d in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewElement):
            return NotImplemented
        return (self.group.datum.cartan_type == other.group.datum.cartan_type
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: ExtAffineElement) -> RootFraction:
        return self.terms.get(w, RootFraction.const(0, self.nvars))

    def support(self) -> list[ExtAffineElement]:
        return list(self.terms)

    def act(self, f: Poly) -> RootFraction:
        return act(self, f)

    def conjugate(self, g: ExtAffineElement) -> SkewElement:
        """$[g] \\cdot u \\cdot [g]^{-1}$."""
        G = SkewElement.element
        return G(self.group, g) * self * G(self.group, g.inverse())

    def specialize_hbar_zero(self) -> TorusSkewElement:
        return specialize_to_torus(self)

    # -- serialization ---------------------------------------------------------

    def sorted_items(self):
        g = self.group
        return sorted(self.terms.items(),
                      key=lambda t: (g.length(t[0]), t[0].translation, t[0].finite))

    def to_json(self) -> dict:
        return {"type": self.group.datum.cartan_type,
                "terms": [{"group": w.to_json(), "coeff": c.to_json()}
                          for w, c in self.sorted_items()]}

    @classmethod
    def from_json(cls, group, obj) -> SkewElement:
        if isinstance(obj, str):
            obj = json.loads(obj)
        out = cls.zero(group)
        n = group.rank + 1
        for term in obj["terms"]:
            w = ExtAffineElement.from_json(term["group"])
            if w.rank != group.rank:
                raise ValueError("group element rank does not match the datum")
            out = out + cls.element(group, w, RootFraction.from_json(term["coeff"], n))
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{_wlabel(w)}]" for w, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"SkewElement({self})"


def _wlabel(w: ExtAffineElement) -> str:
    return f"t{list(w.translation)} w{[list(r) for r in w.finite]}"


def _as_fraction(c, nvars: int) -> RootFraction:
    if isinstance(c, RootFraction):
        return c
    if isinstance(c, Poly):
        return RootFraction.from_poly(c)
    return RootFraction.const(c, nvars)


def skew_mul(a: SkewElement, b: SkewElement) -> SkewElement:
    """Product in the skew group algebra."""
    a._check(b)
    out: dict = {}
    for u, c in a.terms.items():
        rows = u.substitution
        for v, d in b.terms.items():
            key = u * v
            val = c * d.substitute(rows)
            out[key] = out[key] + val if key in out else val
    return SkewElement(a.group, out)


def act(a: SkewElement, f: Poly) -> RootFraction:
    """Action on $\\mathbb{Q}[t^*][\\hbar]$; the result may have denominators."""
    total = RootFraction.const(0, a.nvars)
    for w, c in a.terms.items():
        total = total + c * RootFraction.from_poly(_substitute(f, w))
    return total


def _substitute(f: Poly, w: ExtAffineElement) -> Poly:
    return RootFraction.from_poly(f).substitute(w.substitution).num


def simple_form(group: ExtAffineWeylGroup, i: int) -> tuple[int, ...]:
    """Coefficients of $\\phi_i$ on ``(x_1..x_r, h)``."""
    r = group.rank
    if i == 0:
        return tuple(-c for c in group.datum.affine_root.coroot.coords) + (1,)
    if not 1 <= i <= r:
        raise ValueError(f"affine simple index {i} out of range 0..{r}")
    return tuple(int(j == i - 1) for j in range(r)) + (0,)


def affine_root_pairing(group: ExtAffineWeylGroup, i: int, h: Poly) -> object:
    """$\\langle\\alpha_i, h\\rangle$ for a linear ``h`` on $t_{aff}$.

    The affine root $\\alpha_0$ pairs with $h$ as $-\\theta$ does with its
    $x$-part, and kills $\\hbar$.
    """
    datum = group.datum
    if i == 0:
        return -h.evaluate(datum.affine_root.weight.coords + (0,))
    return h.evaluate(datum.simple_root(i).weight.coords + (0,))


@lru_cache(maxsize=None)
def _theta_simple(group: ExtAffineWeylGroup, i: int) -> SkewElement:
    form = simple_form(group, i)
    inv = RootFraction.inverse_form(form)
    return SkewElement(group, {group.s(i): inv, group.identity: -inv})


def theta_simple(group: ExtAffineWeylGroup, i: int) -> SkewElement:
    """$\\theta_i = \\phi_i^{-1}([s_i] - [1])$."""
    return _theta_simple(group, i)


def theta_hyperplane(group: ExtAffineWeylGroup, root=None) -> SkewElement:
    """The operator $\\frac{1}{\\langle x,\\check\\beta\\rangle - \\hbar}([t_\\beta s_\\beta] - 1)$.

    By default $\\beta = \\theta$ is the root of the affine node, and the
    result is $-\\theta_0$. Any other positive root may be passed as ``root``.
    """
    root = group.datum.affine_root if root is None else root
    form = root.coroot.coords + (-1,)
    inv = RootFraction.inverse_form(form)
    refl = group.translation(root.weight) * group.reflection(root.weight.coords)
    return SkewElement(group, {refl: inv, group.identity: -inv})


def theta_root(group: ExtAffineWeylGroup, beta: Weight | tuple,
               via: ExtAffineElement | None = None) -> SkewElement:
    """$\\theta_\\beta$ for a finite root $\\beta$, as $w\\,\\theta_i\\,w^{-1}$.

    ``via`` may pick the conjugating element; it must send some simple root
    to ``beta``. By default the shortest such ``w`` (smallest index) is used.
    """
    coords = beta.coords if isinstance(beta, Weight) else tuple(beta)
    datum = group.datum
    datum.root_from_weight(coords)  # raises if not a root
    candidates = [via] if via is not None else group.finite_elements
    for w in candidates:
        for i in range(1, group.rank + 1):
            image = tuple(sum(a * b for a, b in zip(row, datum.simple_root(i).weight.coords))
                          for row in w.finite)
            if image == coords:
                return theta_simple(group, i).conjugate(w)
    raise ValueError(f"{coords} is not conjugate to a simple root via the given element")


def theta_root_direct(group: ExtAffineWeylGroup, beta) -> SkewElement:
    """$\\theta_\\beta = \\check\\beta^{-1}([s_\\beta] - [1])$ straight from the definition."""
    coords = beta.coords if isinstance(beta, Weight) else tuple(beta)
    root = group.datum.root_from_weight(coords)
    inv = RootFraction.inverse_form(root.coroot.coords + (0,))
    return SkewElement(group, {group.reflection(coords): inv, group.identity: -inv})


def group_embed(group: ExtAffineWeylGroup, w: ExtAffineElement) -> SkewElement:
    """$[\\tilde w]$ as an element of the skew algebra."""
    return SkewElement.element(group, w)


def check_ddh(group: ExtAffineWeylGroup, mu: Weight, xi: Coroot) -> bool:
    """$\\xi \\cdot e^\\mu = e^\\mu \\cdot (\\xi + \\langle\\mu,\\xi\\rangle\\hbar)$."""
    n = group.rank + 1
    xi_poly = Poly.linear(xi.coords + (0,))
    shifted = xi_poly + Poly.hbar(n).scale(pairing(mu, xi))
    e_mu = SkewElement.element(group, group.translation(mu))
    lhs = SkewElement.scalar(group, xi_poly) * e_mu
    rhs = e_mu * SkewElement.scalar(group, shifted)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the hbar = 0 target ring


class TorusSkewElement:
    """$\\sum_{w \\in W} c_w [w]$ with torus-mixed coefficients $c_w$."""
    __slots__ = ("group", "terms")

    def __init__(self, group: ExtAffineWeylGroup,
                 terms: Mapping[ExtAffineElement, TorusMixed] | None = None):
        self.group = group
        for w in (terms or {}):
            if not w.is_finite:
                raise ValueError("group part must lie in the finite Weyl group")
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @property
    def nvars(self) -> int:
        return self.group.rank + 1

    @classmethod
    def element(cls, group, w: ExtAffineElement, coeff: TorusMixed | None = None):
        n = group.rank + 1
        if coeff is None:
            coeff = TorusMixed.monomial((0,) * group.rank, nvars=n)
        return cls(group, {w: coeff})

    @classmethod
    def torus(cls, group, mu, coeff: RootFraction | None = None):
        """$c\\,t^\\mu [1]$."""
        mu = mu.coords if isinstance(mu, Weight) else tuple(mu)
        return cls(group, {group.identity: TorusMixed.monomial(mu, coeff, nvars=group.rank + 1)})

    @classmethod
    def scalar(cls, group, c) -> TorusSkewElement:
        return cls(group, {group.identity: TorusMixed.scalar(_as_fraction(c, group.rank + 1))})

    def __add__(self, other: TorusSkewElement) -> TorusSkewElement:
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t[w] + c if w in t else c
        return TorusSkewElement(self.group, t)

    def __neg__(self):
        return TorusSkewElement(self.group, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> TorusSkewElement:
        if not isinstance(other, TorusSkewElement):
            other = TorusSkewElement.scalar(self.group, other)
        out: dict = {}
        for u, c in self.terms.items():
            rows = u.substitution
            for v, d in other.terms.items():
                key = u * v
                val = c * d.act(u.finite, rows)
                out[key] = out[key] + val if key in out else val
        return TorusSkewElement(self.group, out)

    def __rmul__(self, other) -> TorusSkewElement:
        c = _as_fraction(other, self.nvars)
        return TorusSkewElement(self.group, {w: d * c for w, d in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusSkewElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{_wlabel(w)}]" for w, c in
                          sorted(self.terms.items(), key=lambda t: t[0].finite))

    __repr__ = __str__


def specialize_to_torus(u: SkewElement) -> TorusSkewElement:
    """$c\\,[t_\\mu w] \\mapsto c|_{\\hbar=0}\\, t^\\mu [w]$.

    At $\\hbar = 0$ translations act trivially on functions, so this is an
    algebra map on elements whose denominators stay nonzero at $\\hbar = 0$.
    """
    g = u.group
    out: dict = {}
    for w, c in u.terms.items():
        fin = ExtAffineElement((0,) * g.rank, w.finite)
        piece = TorusMixed.monomial(w.translation, c.eval_hbar_zero())
        out[fin] = out[fin] + piece if fin in out else piece
    return TorusSkewElement(g, out)


def sum_elements(items: Iterable[SkewElement], group) -> SkewElement:
    total = SkewElement.zero(group)
    for x in items:
        total = total + x
    return total
