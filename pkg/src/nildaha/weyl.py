"""
Finite, affine and extended affine Weyl groups.

An element of $\\widetilde W = W \\ltimes X^*$ is stored as a pair
``(translation, finite)`` meaning $t_\\mu w$. The finite part is the integer
matrix of $w$ acting on fundamental-weight coordinates. On points
$(x, \\hbar)$ of $t^*_{aff}$ it acts by

    t_mu w : (x, h) -> (w x + h mu, h),

so on functions $(\\tilde w \\triangleright f)(p) = f(\\tilde w^{-1} p)$ and
in particular $(e^\\mu f)(x, \\hbar) = f(x - \\hbar\\mu, \\hbar)$.

The affine simple reflection $s_0 = t_\\theta s_\\theta$ is the reflection in
the hyperplane $\\langle x, \\check\\theta\\rangle = \\hbar$, where $\\theta$ is
:attr:`RootDatum.affine_root`. Lengths use the closed formula

    l(t_mu w) = sum_{b > 0} | <mu, b^> - [w^{-1} b < 0] |

which counts the walls separating the fundamental alcove from its image.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .rootdata import RootDatum, Weight, build_root_datum

__all__ = ["ExtAffineElement", "ExtAffineWeylGroup", "weyl_group", "identity_matrix"]

Matrix = tuple[tuple[int, ...], ...]


def identity_matrix(r: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(b)
    cols = list(zip(*b))
    return tuple(tuple(sum(a[i][k] * cols[j][k] for k in range(n)) for j in range(len(cols)))
                 for i in range(len(a)))


def _matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


@lru_cache(maxsize=None)
def _matinv(a: Matrix) -> Matrix:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    inv = tuple(tuple(int(x) for x in row[n:]) for row in m)
    assert _matmul(a, inv) == identity_matrix(n), "not unimodular"
    return inv


@dataclass(frozen=True)
class ExtAffineElement:
    """$t_\\mu w$, with ``translation`` = $\\mu$ and ``finite`` = matrix of $w$."""
    translation: tuple[int, ...]
    finite: Matrix

    def __mul__(self, other: ExtAffineElement) -> ExtAffineElement:
        # (t_mu u)(t_nu v) = t_{mu + u(nu)} uv
        un = _matvec(self.finite, other.translation)
        return ExtAffineElement(
            tuple(a + b for a, b in zip(self.translation, un)),
            _matmul(self.finite, other.finite),
        )

    def inverse(self) -> ExtAffineElement:
        winv = _matinv(self.finite)
        return ExtAffineElement(tuple(-c for c in _matvec(winv, self.translation)), winv)

    @property
    def rank(self) -> int:
        return len(self.translation)

    @property
    def is_finite(self) -> bool:
        return not any(self.translation)

    @property
    def is_identity(self) -> bool:
        return self.is_finite and self.finite == identity_matrix(self.rank)

    def act_point(self, x: Sequence, hbar=1) -> tuple:
        """Image of the point $(x, \\hbar)$ (x in weight coordinates)."""
        wx = _matvec(self.finite, x)
        return tuple(a + hbar * m for a, m in zip(wx, self.translation))

    @cached_property
    def substitution(self) -> tuple[tuple[int, ...], ...]:
        """Linear substitution realizing $f \\mapsto f \\circ \\tilde w^{-1}$.

        Row ``k`` gives the image of the variable ``x_{k+1}`` as integer
        coefficients on ``(x_1, ..., x_r, h)``; ``h`` is fixed.
        """
        inv = self.inverse()
        r = self.rank
        rows = [tuple(inv.finite[k]) + (inv.translation[k],) for k in range(r)]
        rows.append(tuple(int(j == r) for j in range(r + 1)))
        return tuple(rows)

    def to_json(self) -> dict:
        return {"t": list(self.translation), "w": [list(row) for row in self.finite]}

    @classmethod
    def from_json(cls, obj) -> ExtAffineElement:
        if isinstance(obj, str):
            obj = json.loads(obj)
        t = tuple(int(c) for c in obj["t"])
        w = tuple(tuple(int(c) for c in row) for row in obj["w"])
        if len(w) != len(t) or any(len(row) != len(t) for row in w):
            raise ValueError("element JSON: 't' and 'w' dimensions disagree")
        return cls(t, w)

    def __repr__(self) -> str:
        return f"ExtAffineElement(t={list(self.translation)}, w={[list(r) for r in self.finite]})"


class ExtAffineWeylGroup:
    """The extended affine Weyl group of a root datum, with length machinery.

    Affine simple indices are ``0`` (the affine node) and ``1..r``.
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        r = self.rank = datum.rank
        a = datum.cartan
        self.identity = ExtAffineElement((0,) * r, identity_matrix(r))
        gens = [None]
        for i in range(r):
            # s_i x = x - x_i alpha_i, alpha_i = column i of the Cartan matrix
            m = tuple(tuple(int(k == j) - (a[k][i] if j == i else 0) for j in range(r))
                      for k in range(r))
            gens.append(ExtAffineElement((0,) * r, m))
        theta = datum.affine_root
        s_theta = self.reflection(theta.weight.coords)
        gens[0] = ExtAffineElement(theta.weight.coords, s_theta.finite)
        self._gens = tuple(gens)
        self._pos = [(b.weight.coords, b.coroot.coords) for b in datum.positive_roots]
        self._positive = {b.weight.coords for b in datum.positive_roots}
        self._length_cache: dict[ExtAffineElement, int] = {}

    def __repr__(self) -> str:
        return f"ExtAffineWeylGroup({self.datum.cartan_type})"

    @property
    def indices(self) -> range:
        return range(self.rank + 1)

    def simple_reflection(self, i: int) -> ExtAffineElement:
        if not 0 <= i <= self.rank:
            raise ValueError(f"affine simple index {i} out of range 0..{self.rank}")
        return self._gens[i]

    s = simple_reflection

    def reflection(self, root_weight: Sequence[int]) -> ExtAffineElement:
        """Finite reflection $s_\\beta$ for a root given in weight coordinates."""
        beta = self.datum.root_from_weight(tuple(root_weight))
        r = self.rank
        c = beta.coroot.coords
        w = beta.weight.coords
        # s_b x = x - <x, b^> b
        m = tuple(tuple(int(k == j) - w[k] * c[j] for j in range(r)) for k in range(r))
        return ExtAffineElement((0,) * r, m)

    def translation(self, mu: Weight | Sequence[int]) -> ExtAffineElement:
        coords = mu.coords if isinstance(mu, Weight) else tuple(mu)
        if len(coords) != self.rank:
            raise ValueError("weight rank mismatch")
        return ExtAffineElement(tuple(coords), identity_matrix(self.rank))

    def word(self, word: Sequence[int], omega: ExtAffineElement | None = None) -> ExtAffineElement:
        """The product ``omega * s_{i_1} * ... * s_{i_k}``."""
        g = omega if omega is not None else self.identity
        for i in word:
            g = g * self.simple_reflection(i)
        return g

    def length(self, w: ExtAffineElement) -> int:
        try:
            return self._length_cache[w]
        except KeyError:
            pass
        if w.rank != self.rank:
            raise ValueError("element rank mismatch")
        winv = _matinv(w.finite)
        mu = w.translation
        total = 0
        for bw, bc in self._pos:
            p = sum(m * c for m, c in zip(mu, bc))
            if _matvec(winv, bw) not in self._positive:
                p -= 1
            total += abs(p)
        self._length_cache[w] = total
        return total

    def is_right_descent(self, w: ExtAffineElement, i: int) -> bool:
        return self.length(w * self.simple_reflection(i)) < self.length(w)

    def is_left_descent(self, w: ExtAffineElement, i: int) -> bool:
        return self.length(self.simple_reflection(i) * w) < self.length(w)

    def right_descents(self, w: ExtAffineElement) -> list[int]:
        return [i for i in self.indices if self.is_right_descent(w, i)]

    def reduced_word(self, w: ExtAffineElement) -> tuple[ExtAffineElement, list[int]]:
        """``(omega, word)`` with ``w == omega * s_word`` and ``l(omega) == 0``.

        Right descents are stripped smallest index first.
        """
        word: list[int] = []
        while True:
            for i in self.indices:
                if self.is_right_descent(w, i):
                    w = w * self.simple_reflection(i)
                    word.append(i)
                    break
            else:
                break
        word.reverse()
        return w, word

    def reduced_words(self, w: ExtAffineElement) -> list[list[int]]:
        """All reduced words of ``w`` (modulo its length-zero part), sorted."""
        memo: dict[ExtAffineElement, list[list[int]]] = {}

        def rec(u):
            if u in memo:
                return memo[u]
            if self.length(u) == 0:
                out = [[]]
            else:
                out = [pre + [i] for i in self.right_descents(u)
                       for pre in rec(u * self.simple_reflection(i))]
            memo[u] = out
            return out

        return sorted(rec(w))

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.length(self.word(word)) == len(word)

    def demazure_product(self, word: Sequence[int]) -> ExtAffineElement:
        """Product in the 0-Hecke monoid: $s_i \\ast w = s_i w$ if longer, else $w$.

        The word is folded right to left starting from the identity.
        """
        w = self.identity
        for i in reversed(word):
            s = self.simple_reflection(i)
            if self.length(s * w) > self.length(w):
                w = s * w
        return w

    def order(self, w: ExtAffineElement, bound: int = 12) -> int | None:
        """Multiplicative order of ``w``, or ``None`` if it exceeds ``bound``."""
        g = w
        for k in range(1, bound + 1):
            if g.is_identity:
                return k
            g = g * w
        return None

    def braid_order(self, i: int, j: int) -> int | None:
        """Order of $s_i s_j$ (``None`` when infinite)."""
        return self.order(self.s(i) * self.s(j))

    @cached_property
    def finite_elements(self) -> list[ExtAffineElement]:
        """All of $W$, sorted by length then matrix."""
        return sorted(self._closure(range(1, self.rank + 1)),
                      key=lambda g: (self.length(g), g.finite))

    @cached_property
    def omega(self) -> list[ExtAffineElement]:
        """The length-zero subgroup, found as residues of translations."""
        found = {self.identity}
        frontier = [self.reduced_word(self.translation(self.datum.fundamental_weight(i)))[0]
                    for i in range(1, self.rank + 1)]
        while frontier:
            g = frontier.pop()
            if g in found:
                continue
            found.add(g)
            frontier.extend(g * h for h in list(found))
            frontier.extend(h * g for h in list(found))
        return sorted(found, key=lambda g: (g.translation, g.finite))

    def elements_up_to_length(self, max_length: int, extended: bool = True) -> list[ExtAffineElement]:
        """Elements of $W_{aff}$ (times $\\Omega$ if ``extended``) with length <= bound."""
        layer = {self.identity}
        out = set(layer)
        for ell in range(max_length):
            nxt = set()
            for g in layer:
                for i in self.indices:
                    h = g * self.simple_reflection(i)
                    if self.length(h) == ell + 1:
                        nxt.add(h)
            out |= nxt
            layer = nxt
        if extended:
            out = {o * g for o in self.omega for g in out}
        return sorted(out, key=lambda g: (self.length(g), g.translation, g.finite))

    def _closure(self, indices) -> set[ExtAffineElement]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for i in indices:
                    h = g * self.simple_reflection(i)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return seen

    def finite_elements_iter(self) -> Iterator[ExtAffineElement]:
        return iter(self.finite_elements)


@lru_cache(maxsize=None)
def weyl_group(label: str) -> ExtAffineWeylGroup:
    return ExtAffineWeylGroup(build_root_datum(label))
