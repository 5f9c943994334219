"""
Exact sparse arithmetic over $\\mathbb{Q}$.

* :class:`Poly` -- sparse polynomials in ``x_1..x_r`` and ``h`` (for
  $\\hbar$, always the last variable), rational coefficients.
* :class:`AffineForm` -- a nonzero integer linear form
  $\\langle x, v\\rangle + k\\hbar$, primitive and with its first nonzero
  coefficient positive.
* :class:`RootFraction` -- a polynomial divided by a multiset of affine forms,
  kept fully reduced so that equal values have equal representations.
* :class:`TorusMixed` -- finite sums $\\sum_\\mu c_\\mu t^\\mu$ of Laurent
  monomials on the torus with :class:`RootFraction` coefficients.

Coefficients are :class:`gmpy2.mpq`; nothing here ever rounds.

>>> x = Poly.var(0, 2)
>>> h = Poly.var(1, 2)
>>> str((x - h) * (x + h))
'x1^2 - h^2'
>>> exact_divide(x * x - h * h, AffineForm.from_coeffs((1, -1))[1])
Poly('x1 + h')
"""

from __future__ import annotations

import json
import math
import numbers
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

__all__ = [
    "Poly", "AffineForm", "RootFraction", "TorusMixed",
    "exact_divide", "substitute_linear", "reduce", "is_polynomial", "torus_mul",
    "parse_poly",
]

_ZERO = mpq(0)
_ONE = mpq(1)


_SCALARS = (numbers.Number, str)


def _q(c) -> mpq:
    if isinstance(c, str):
        return mpq(c.strip())
    return mpq(c)


def _fmt_q(c: mpq) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Poly:
    """Sparse polynomial; ``terms`` maps exponent tuples to nonzero ``mpq``.

    The last of the ``nvars`` variables is $\\hbar$ and prints as ``h``.
    Instances are treated as immutable.
    """
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None,
                 _trusted: bool = False):
        self.nvars = nvars
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            for m, c in (terms or {}).items():
                c = _q(c)
                if c:
                    m = tuple(m)
                    if len(m) != nvars:
                        raise ValueError(f"exponent {m} has wrong length for {nvars} variables")
                    clean[m] = clean.get(m, _ZERO) + c
            self.terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def const(cls, c, nvars: int) -> Poly:
        c = _q(c)
        return cls(nvars, {(0,) * nvars: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, i: int, nvars: int) -> Poly:
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): _ONE}, _trusted=True)

    @classmethod
    def hbar(cls, nvars: int) -> Poly:
        return cls.var(nvars - 1, nvars)

    @classmethod
    def linear(cls, coeffs: Sequence) -> Poly:
        n = len(coeffs)
        return cls(n, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> Poly:
        return cls(len(exps), {tuple(exps): coeff})

    # -- queries ------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_term(self) -> mpq:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_parts(self) -> dict[int, Poly]:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Poly(self.nvars, t, _trusted=True) for d, t in sorted(parts.items())}

    def uses_hbar(self) -> bool:
        return any(m[-1] for m in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, mpq)) or type(other).__name__ == "Fraction":
            return self == Poly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v = v + c
                if v:
                    t[m] = v
                else:
                    del t[m]
        return Poly(self.nvars, t, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def scale(self, c) -> Poly:
        c = _q(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {m: v * c for m, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if not isinstance(other, _SCALARS):
                return NotImplemented
            return self.scale(other)
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = t.get(m)
                t[m] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.nvars, {m: c for m, c in t.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def substitute(self, images: Sequence[Poly]) -> Poly:
        """Replace variable ``j`` by ``images[j]`` (a ring homomorphism)."""
        if len(images) != self.nvars:
            raise ValueError("substitution has the wrong number of images")
        if not self.terms:
            return self
        nv = images[0].nvars
        powers: list[list[Poly]] = [[Poly.const(1, nv)] for _ in images]
        out: dict = {}
        for m, c in self.terms.items():
            term = None
            for j, e in enumerate(m):
                if not e:
                    continue
                pw = powers[j]
                while len(pw) <= e:
                    pw.append(pw[-1] * images[j])
                term = pw[e] if term is None else term * pw[e]
            if term is None:
                key = (0,) * nv
                out[key] = out.get(key, _ZERO) + c
            else:
                for mm, cc in term.terms.items():
                    out[mm] = out.get(mm, _ZERO) + c * cc
        return Poly(nv, {m: c for m, c in out.items() if c}, _trusted=True)

    def eval_hbar(self, c) -> Poly:
        """Specialize $\\hbar \\mapsto c$ (the variable is kept, now absent)."""
        c = _q(c)
        out: dict = {}
        for m, v in self.terms.items():
            if m[-1]:
                v = v * c ** m[-1]
                m = m[:-1] + (0,)
            if v:
                out[m] = out.get(m, _ZERO) + v
        return Poly(self.nvars, {m: v for m, v in out.items() if v}, _trusted=True)

    def evaluate(self, point: Sequence) -> mpq:
        total = _ZERO
        pt = [_q(p) for p in point]
        for m, c in self.terms.items():
            v = c
            for p, e in zip(pt, m):
                if e:
                    v *= p ** e
            total += v
        return total

    # -- printing / serialization ----------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], mpq]]:
        """Graded lexicographic order, ``x1 > x2 > ... > h``."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def var_names(self) -> list[str]:
        return [f"x{i + 1}" for i in range(self.nvars - 1)] + ["h"]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.var_names()
        out = []
        for m, c in self.sorted_terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = _fmt_q(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_fmt_q(a)}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"Poly('{self}')"

    def to_json(self) -> list:
        """``[[exps...], [coeffs...]]`` in canonical order, coefficients as strings."""
        items = self.sorted_terms()
        return [[list(m) for m, _ in items], [_fmt_q(c) for _, c in items]]

    @classmethod
    def from_json(cls, obj, nvars: int) -> Poly:
        exps, coeffs = obj
        if len(exps) != len(coeffs):
            raise ValueError("polynomial JSON: exponent and coefficient lists differ in length")
        return cls(nvars, {tuple(int(e) for e in m): _q(str(c)) for m, c in zip(exps, coeffs)})


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(x(\d+)|h)(?:\^(\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly(text: str, nvars: int) -> Poly:
    """Parse the text format, e.g. ``3/2*x1^2*h - x2``.

    >>> parse_poly("3/2*x1^2*h - x2", 3)
    Poly('3/2*x1^2*h - x2')
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    parts = _TERM_SPLIT.split(s)[1:]
    terms: dict = {}
    for sign, body in zip(parts[0::2], parts[1::2]):
        coeff = _ONE
        exps = [0] * nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if _NUMBER.match(factor):
                coeff *= mpq(factor)
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            idx = nvars - 1 if m.group(1) == "h" else int(m.group(2)) - 1
            if not 0 <= idx < nvars - (0 if m.group(1) == "h" else 1):
                raise ValueError(f"variable {m.group(1)!r} out of range")
            exps[idx] += int(m.group(3) or 1)
        if sign == "-":
            coeff = -coeff
        key = tuple(exps)
        terms[key] = terms.get(key, _ZERO) + coeff
    return Poly(nvars, terms)


def substitute_linear(p: Poly, matrix: Sequence[Sequence[int]],
                      shift: Sequence[int] | None = None) -> Poly:
    """Apply $x \\mapsto A x + \\hbar b$ (``h`` fixed).

    Row ``k`` of ``matrix`` expresses the new value of ``x_{k+1}`` in terms of
    ``x_1..x_r``; ``shift[k]`` is its $\\hbar$ coefficient.

    >>> x = Poly.var(0, 2)
    >>> str(substitute_linear(x, [[1]], [-1]))
    'x1 - h'
    """
    r = p.nvars - 1
    if len(matrix) != r or any(len(row) != r for row in matrix):
        raise ValueError("substitution matrix has the wrong shape")
    shift = list(shift) if shift is not None else [0] * r
    if len(shift) != r:
        raise ValueError("shift vector has the wrong length")
    rows = [tuple(matrix[k]) + (shift[k],) for k in range(r)]
    rows.append(tuple(int(j == r) for j in range(r + 1)))
    return _substitute_rows(p, tuple(rows))


def _substitute_rows(p: Poly, rows: tuple[tuple[int, ...], ...]) -> Poly:
    if not p.terms:
        return p
    if _is_identity(rows):
        return p
    images = [Poly.linear(row) for row in rows]
    return p.substitute(images)


def _is_identity(rows) -> bool:
    return all(v == (i == j) for i, row in enumerate(rows) for j, v in enumerate(row))


# ---------------------------------------------------------------------------
# affine forms and exact division


@dataclass(frozen=True, slots=True)
class AffineForm:
    """A primitive integer linear form ``coeffs`` on ``(x_1..x_r, h)``."""
    coeffs: tuple[int, ...]

    @staticmethod
    def from_coeffs(coeffs: Sequence[int]) -> tuple[int, AffineForm]:
        """Split ``coeffs`` as ``scalar * form`` with ``form`` normalized."""
        coeffs = tuple(int(c) for c in coeffs)
        g = 0
        for c in coeffs:
            g = math.gcd(g, c)
        if g == 0:
            raise ValueError("the zero form is not allowed")
        lead = next(c for c in coeffs if c)
        if lead < 0:
            g = -g
        return g, AffineForm(tuple(c // g for c in coeffs))

    @property
    def coroot(self) -> tuple[int, ...]:
        return self.coeffs[:-1]

    @property
    def hbar_coeff(self) -> int:
        return self.coeffs[-1]

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def poly(self) -> Poly:
        return Poly.linear(self.coeffs)

    def substitute(self, rows) -> tuple[int, AffineForm]:
        """Image under a linear substitution, as ``scalar * form``."""
        n = len(self.coeffs)
        new = [0] * n
        for k, c in enumerate(self.coeffs):
            if c:
                row = rows[k]
                for j in range(n):
                    new[j] += c * row[j]
        return AffineForm.from_coeffs(new)

    def __str__(self) -> str:
        return str(self.poly())


def exact_divide(p: Poly, form: AffineForm) -> Poly | None:
    """The quotient ``p / form`` if it is a polynomial, else ``None``.

    >>> x = Poly.var(0, 2)
    >>> exact_divide(x + 1, AffineForm((1, 0))) is None
    True
    """
    if not p.terms:
        return p
    coeffs = form.coeffs
    n = p.nvars
    piv = next(i for i, c in enumerate(coeffs) if c)
    c = mpq(coeffs[piv])
    rest = [(j, coeffs[j]) for j in range(n) if j != piv and coeffs[j]]
    # p = sum_k y^k g_k with y the pivot variable; solve p = (c y + L) q
    groups: dict[int, dict] = {}
    for m, v in p.terms.items():
        k = m[piv]
        groups.setdefault(k, {})[m[:piv] + (0,) + m[piv + 1:]] = v
    top = max(groups)
    if top == 0:
        return None
    quotient: dict = {}
    carry: dict = {}  # L * q_k, to be subtracted from g_k
    for k in range(top, 0, -1):
        g = dict(groups.get(k, {}))
        for m, v in carry.items():
            w = g.get(m, _ZERO) - v
            if w:
                g[m] = w
            else:
                g.pop(m, None)
        qk = {m: v / c for m, v in g.items()}   # q_{k-1}
        carry = {}
        for m, v in qk.items():
            mm = list(m)
            mm[piv] = k - 1
            quotient[tuple(mm)] = v
            for j, cj in rest:
                m2 = list(m)
                m2[j] += 1
                m2 = tuple(m2)
                carry[m2] = carry.get(m2, _ZERO) + cj * v
    g0 = groups.get(0, {})
    carry = {m: v for m, v in carry.items() if v}
    if carry != g0:
        return None
    return Poly(n, quotient, _trusted=True)


# ---------------------------------------------------------------------------
# fractions with affine-form denominators


class RootFraction:
    """``num / prod(den)`` with ``den`` a sorted tuple of ``(form, multiplicity)``.

    Construction always reduces: no denominator form divides the numerator.
    Because the forms are normalized irreducibles, two fractions are equal iff
    their reduced representations coincide.
    """
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Iterable[tuple[AffineForm, int]] = (), _reduced=False):
        den = tuple(sorted(((f, m) for f, m in den if m), key=lambda fm: fm[0].coeffs))
        if not num.terms:
            den = ()
        if not _reduced and den:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def from_poly(cls, p: Poly) -> RootFraction:
        return cls(p, (), _reduced=True)

    @classmethod
    def const(cls, c, nvars: int) -> RootFraction:
        return cls(Poly.const(c, nvars), (), _reduced=True)

    @classmethod
    def inverse_form(cls, coeffs: Sequence[int], c=1) -> RootFraction:
        """``c / (linear form with these coefficients)``."""
        scalar, f = AffineForm.from_coeffs(coeffs)
        return cls(Poly.const(mpq(c) / scalar, len(coeffs)), ((f, 1),), _reduced=True)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def is_zero(self) -> bool:
        return not self.num.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, RootFraction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return not self.den and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def den_poly(self) -> Poly:
        out = Poly.const(1, self.nvars)
        for f, m in self.den:
            out = out * f.poly() ** m
        return out

    def __neg__(self) -> RootFraction:
        return RootFraction(-self.num, self.den, _reduced=True)

    def __add__(self, other) -> RootFraction:
        if not isinstance(other, RootFraction):
            other = RootFraction.from_poly(self.num._coerce(other))
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            return RootFraction(self.num + other.num, self.den)
        da, db = dict(self.den), dict(other.den)
        common = {f: max(da.get(f, 0), db.get(f, 0)) for f in set(da) | set(db)}
        na = self.num * _forms_poly(common, da, self.nvars)
        nb = other.num * _forms_poly(common, db, self.nvars)
        return RootFraction(na + nb, common.items())

    __radd__ = __add__

    def __sub__(self, other) -> RootFraction:
        if not isinstance(other, RootFraction):
            other = RootFraction.from_poly(self.num._coerce(other))
        return self + (-other)

    def __mul__(self, other) -> RootFraction:
        if isinstance(other, Poly):
            other = RootFraction.from_poly(other)
        elif not isinstance(other, RootFraction):
            if not isinstance(other, _SCALARS):
                return NotImplemented
            c = _q(other)
            if not c:
                return RootFraction.const(0, self.nvars)
            return RootFraction(self.num.scale(c), self.den, _reduced=True)
        if not self.num.terms or not other.num.terms:
            return RootFraction.const(0, self.nvars)
        den = dict(self.den)
        for f, m in other.den:
            den[f] = den.get(f, 0) + m
        if not self.den and not other.den:
            return RootFraction(self.num * other.num, (), _reduced=True)
        return RootFraction(self.num * other.num, den.items())

    __rmul__ = __mul__

    def divide_by_form(self, coeffs: Sequence[int]) -> RootFraction:
        scalar, f = AffineForm.from_coeffs(coeffs)
        den = dict(self.den)
        den[f] = den.get(f, 0) + 1
        return RootFraction(self.num.scale(mpq(1, scalar)), den.items())

    def substitute(self, rows) -> RootFraction:
        """Apply an invertible linear substitution (rows as in :class:`ExtAffineElement`)."""
        if _is_identity(rows) or not self.num.terms:
            return self
        num = _substitute_rows(self.num, rows)
        if not self.den:
            return RootFraction(num, (), _reduced=True)
        scalar = 1
        den = {}
        for f, m in self.den:
            s, g = f.substitute(rows)
            scalar *= s ** m
            den[g] = den.get(g, 0) + m
        # an invertible substitution maps irreducibles to irreducibles, and the
        # reduced numerator to a numerator with no common factor
        return RootFraction(num.scale(mpq(1, scalar)), den.items(), _reduced=True)

    def eval_hbar_zero(self) -> RootFraction:
        """Set $\\hbar = 0$; every denominator form must keep a nonzero $x$-part."""
        num = self.num.eval_hbar(0)
        scalar = 1
        den: dict = {}
        for f, m in self.den:
            if not any(f.coroot):
                raise ZeroDivisionError(f"form {f} vanishes at h = 0")
            s, g = AffineForm.from_coeffs(f.coroot + (0,))
            scalar *= s ** m
            den[g] = den.get(g, 0) + m
        return RootFraction(num.scale(mpq(1, scalar)), den.items())

    def as_poly(self) -> Poly | None:
        return None if self.den else self.num

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        d = "*".join(f"({f})" if m == 1 else f"({f})^{m}" for f, m in self.den)
        return f"({self.num})/({d})"

    def __repr__(self) -> str:
        return f"RootFraction('{self}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(),
                "den": [[list(f.coroot), f.hbar_coeff] for f, m in self.den for _ in range(m)]}

    @classmethod
    def from_json(cls, obj, nvars: int) -> RootFraction:
        num = Poly.from_json(obj["num"], nvars)
        out = cls.from_poly(num)
        for coroot, k in obj.get("den", []):
            coeffs = [int(c) for c in coroot] + [int(k)]
            if len(coeffs) != nvars:
                raise ValueError("denominator form has the wrong length")
            out = out.divide_by_form(coeffs)
        return out


def _forms_poly(common: dict, have: dict, nvars: int) -> Poly:
    out = Poly.const(1, nvars)
    for f, m in common.items():
        e = m - have.get(f, 0)
        if e:
            out = out * f.poly() ** e
    return out


def _reduce(num: Poly, den: tuple) -> tuple[Poly, tuple]:
    left = []
    for f, m in den:
        while m:
            q = exact_divide(num, f)
            if q is None:
                break
            num, m = q, m - 1
        if m:
            left.append((f, m))
    return num, tuple(left)


def reduce(f: RootFraction) -> RootFraction:
    """Fully reduced form of ``f`` (instances are already kept reduced)."""
    num, den = _reduce(f.num, f.den)
    return RootFraction(num, den, _reduced=True)


def is_polynomial(f: RootFraction) -> Poly | None:
    """The polynomial value of ``f`` if its reduced denominator is empty."""
    return reduce(f).as_poly()


# ---------------------------------------------------------------------------
# torus-mixed coefficients (the ring C[T x t*] with root denominators)


class TorusMixed:
    """$\\sum_\\mu c_\\mu t^\\mu$ with ``terms[mu] = c_mu`` a :class:`RootFraction`.

    Here $t^\\mu$ commutes with everything in the coefficient ring, as it does
    after setting $\\hbar = 0$.
    """
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], RootFraction] | None = None):
        self.nvars = nvars
        self.terms = {tuple(mu): c for mu, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def monomial(cls, mu: Sequence[int], coeff: RootFraction | None = None,
                 nvars: int | None = None) -> TorusMixed:
        if coeff is None:
            coeff = RootFraction.const(1, nvars if nvars is not None else len(mu) + 1)
        return cls(coeff.nvars, {tuple(mu): coeff})

    @classmethod
    def scalar(cls, c: RootFraction) -> TorusMixed:
        return cls(c.nvars, {(0,) * (c.nvars - 1): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusMixed) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: TorusMixed) -> TorusMixed:
        t = dict(self.terms)
        for mu, c in other.terms.items():
            t[mu] = t[mu] + c if mu in t else c
        return TorusMixed(self.nvars, t)

    def __neg__(self) -> TorusMixed:
        return TorusMixed(self.nvars, {mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: TorusMixed) -> TorusMixed:
        return self + (-other)

    def __mul__(self, other) -> TorusMixed:
        if isinstance(other, TorusMixed):
            return torus_mul(self, other)
        if isinstance(other, (RootFraction, Poly)):
            return TorusMixed(self.nvars, {mu: c * other for mu, c in self.terms.items()})
        return TorusMixed(self.nvars, {mu: c * other for mu, c in self.terms.items()})

    def act(self, finite: Sequence[Sequence[int]], rows) -> TorusMixed:
        """Apply a finite Weyl element: $t^\\mu \\mapsto t^{w\\mu}$, coefficients by ``rows``."""
        out = {}
        for mu, c in self.terms.items():
            wmu = tuple(sum(a * b for a, b in zip(row, mu)) for row in finite)
            out[wmu] = c.substitute(rows)
        return TorusMixed(self.nvars, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mu, c in sorted(self.terms.items()):
            mono = "" if not any(mu) else f"t^{list(mu)}"
            parts.append(f"[{c}]" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__


def torus_mul(a: TorusMixed, b: TorusMixed) -> TorusMixed:
    """Product in the torus-mixed ring; exponents add.

    >>> one = TorusMixed.monomial((0,), nvars=2)
    >>> t = TorusMixed.monomial((1,), nvars=2)
    >>> torus_mul(t, TorusMixed.monomial((-1,), nvars=2)) == one
    True
    """
    out: dict = {}
    for mu, c in a.terms.items():
        for nu, d in b.terms.items():
            key = tuple(x + y for x, y in zip(mu, nu))
            v = c * d
            out[key] = out[key] + v if key in out else v
    return TorusMixed(a.nvars, out)


def poly_dumps(p: Poly) -> str:
    return json.dumps(p.to_json())
