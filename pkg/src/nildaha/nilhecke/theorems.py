"""Named identities of the nil-Hecke algebra, each returning an exact verdict."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from ..exactalg import Poly, RootFraction
from ..linalg import qmatrix, rank
from ..rootdata import find_weight_pairing_one
from ..skew import (SkewElement, affine_root_pairing, theta_hyperplane, theta_root_direct,
                    theta_simple)
from ..weyl import ExtAffineWeylGroup
from .algebra import NilHecke

__all__ = [
    "Th0Report", "verify_th0", "braid_failures", "defrel_failures",
    "monomials", "invariant_polynomials", "centrality_failures",
    "faithfulness_rank",
]


def alternating(group: ExtAffineWeylGroup, i: int, j: int, m: int) -> SkewElement:
    """$\\theta_i\\theta_j\\theta_i\\cdots$ with ``m`` factors."""
    out = SkewElement.one(group)
    for k in range(m):
        out = out * theta_simple(group, i if k % 2 == 0 else j)
    return out


def braid_failures(group: ExtAffineWeylGroup) -> list[dict]:
    """Nil relations $\\theta_i^2 = 0$ and braid identities of finite order; failures only."""
    bad = []
    for i in group.indices:
        if not (theta_simple(group, i) * theta_simple(group, i)).is_zero():
            bad.append({"relation": "square", "i": i})
    for i in group.indices:
        for j in group.indices:
            if j <= i:
                continue
            m = group.braid_order(i, j)
            if m is None:
                continue
            if alternating(group, i, j, m) != alternating(group, j, i, m):
                bad.append({"relation": "braid", "i": i, "j": j, "m": m})
    return bad


def defrel_failures(group: ExtAffineWeylGroup, include_affine: bool = True) -> list[dict]:
    """$\\theta_i (s_i h) - h\\,\\theta_i = \\langle\\alpha_i, h\\rangle$ for $h$ in a basis of $t_{aff}$."""
    n = group.rank + 1
    basis = [Poly.var(k, n) for k in range(n)]
    bad = []
    for i in group.indices:
        if i == 0 and not include_affine:
            continue
        th = theta_simple(group, i)
        rows = group.s(i).substitution
        for k, h in enumerate(basis):
            sh = RootFraction.from_poly(h).substitute(rows)
            lhs = th * SkewElement.scalar(group, sh) - SkewElement.scalar(group, h) * th
            rhs = SkewElement.scalar(group, affine_root_pairing(group, i, h))
            if lhs != rhs:
                bad.append({"relation": "defrel", "i": i, "h": str(h)})
    return bad


@dataclass
class Th0Report:
    """Conjugation of the root element by $e^\\mu$ versus the affine generator."""
    mu: tuple[int, ...]
    matches_hyperplane_operator: bool
    matches_generator: bool
    lhs: SkewElement
    rhs: SkewElement

    @property
    def ok(self) -> bool:
        return self.matches_hyperplane_operator and self.matches_generator


def verify_th0(group: ExtAffineWeylGroup, root=None) -> Th0Report:
    """Check $e^\\mu\\theta_\\beta e^{-\\mu}$ against the hyperplane operator of $\\beta$.

    With $\\langle\\mu,\\check\\beta\\rangle = 1$ the left side must equal
    $\\frac{1}{\\langle x,\\check\\beta\\rangle - \\hbar}([t_\\beta s_\\beta] - 1)$.
    By default $\\beta$ is the root of the affine node, and then the
    operator is also compared with $-\\theta_0$.

    >>> from nildaha.weyl import weyl_group
    >>> verify_th0(weyl_group("A2")).ok
    True
    """
    datum = group.datum
    affine = root is None or root == datum.affine_root
    root = datum.affine_root if root is None else root
    mu = find_weight_pairing_one(datum, root.coroot)
    e_mu = SkewElement.element(group, group.translation(mu))
    e_minus = SkewElement.element(group, group.translation(-mu))
    lhs = e_mu * theta_root_direct(group, root.weight) * e_minus
    rhs = theta_hyperplane(group, root)
    gen = lhs == -theta_simple(group, 0) if affine else True
    return Th0Report(mu.coords, lhs == rhs, gen, lhs, rhs)


def monomials(nvars: int, degree: int, max_degree: int | None = None) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``degree`` (or ``degree..max_degree``)."""
    top = degree if max_degree is None else max_degree
    out = []
    for d in range(degree, top + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for k in combo:
                e[k] += 1
            out.append(tuple(e))
    return out


def _x_monomial(exps: tuple[int, ...], nvars: int) -> Poly:
    return Poly.monomial(tuple(exps) + (0,) * (nvars - len(exps)))


def invariant_polynomials(algebra: NilHecke, max_degree: int) -> list[Poly]:
    """A basis of the $W$-invariant polynomials in $x$ of degree <= ``max_degree``."""
    r, n = algebra.rank, algebra.nvars
    out: list[Poly] = []
    for d in range(max_degree + 1):
        found: list[Poly] = []
        monos = monomials(r, d)
        for e in monos:
            f = algebra.reynolds(_x_monomial(e, n))
            if not f.terms:
                continue
            trial = found + [f]
            m = qmatrix([[p.terms.get(e2 + (0,), 0) for e2 in monos] for p in trial])
            if rank(m) == len(trial):
                found = trial
        out.extend(found)
    return out


def centrality_failures(algebra: NilHecke, invariants: list[Poly]) -> list[dict]:
    """Invariant $f$ against each finite $\\theta_i$ and the symmetrizer."""
    g = algebra.group
    e = algebra.symmetrizer()
    bad = []
    for f in invariants:
        fs = SkewElement.scalar(g, f)
        for i in range(1, g.rank + 1):
            th = theta_simple(g, i)
            if fs * th != th * fs:
                bad.append({"relation": "central", "f": str(f), "i": i})
        fe = algebra.poly(f) * e
        if e * algebra.poly(f) * e != fe:
            bad.append({"relation": "spherical", "f": str(f)})
        if algebra.spherical_project(algebra.poly(f)) != f * e:
            bad.append({"relation": "project", "f": str(f)})
    return bad


@dataclass
class RankReport:
    spanning: int
    rank: int
    test_dimension: int
    labels: list = field(default_factory=list, repr=False)

    @property
    def injective(self) -> bool:
        return self.rank == self.spanning


def faithfulness_rank(algebra: NilHecke, max_coeff_degree: int = 3,
                      max_test_degree: int = 6) -> RankReport:
    """Rank of $\\{x^a\\theta_w\\}$ acting on polynomials of bounded degree."""
    g = algebra.group
    r, n = algebra.rank, algebra.nvars
    tests = [_x_monomial(e, n) for e in monomials(r, 0, max_test_degree)]
    thetas = {w: algebra.theta(w) for w in g.finite_elements}
    images = {w: [th.act(p) for p in tests] for w, th in thetas.items()}
    rows, labels, columns = [], [], {}
    for w in g.finite_elements:
        base = []
        for q in images[w]:
            p = q.as_poly()
            if p is None:
                raise AssertionError("theta_w produced a non-polynomial image")
            base.append(p)
        for a in monomials(r, 0, max_coeff_degree):
            xa = _x_monomial(a, n)
            row = {}
            for t, p in enumerate(base):
                for m, c in (xa * p).terms.items():
                    row[columns.setdefault((t, m), len(columns))] = c
            rows.append(row)
            labels.append((a, w))
    mat = qmatrix([[row.get(k, 0) for k in range(len(columns))] for row in rows],
                  len(rows), len(columns))
    return RankReport(len(rows), rank(mat), len(tests), labels)
