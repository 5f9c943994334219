"""
Two Morita-type statements about the finite nil-Hecke algebra.

:func:`morita_unit` writes $1 = \\sum_i h'_i\\,\\mathbf e\\,h''_i$. Because
$\\theta_w\\mathbf e = 0$ for $w \\ne 1$, the left factors may be taken to be
monomials $x^a$ and the right factors $x^b\\theta_w$ with
$|a| + |b| = \\ell(w)$; the coefficients come from an exact linear solve.

:func:`module_extension_check` takes a graded module over
$\\mathrm{Sym}\\,t \\rtimes W$ given by matrices and asks whether the action
extends to $\\theta_\\alpha$: multiplication by $\\check\\alpha$ must map the
$s_\\alpha$-invariants in degree $d$ bijectively onto the anti-invariants in
degree $d + 1$. When it does, $\\theta_\\alpha$ is forced by
$s_\\alpha = \\check\\alpha\\,\\theta_\\alpha + 1$.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq
from sympy import QQ

from ..exactalg import Poly, RootFraction
from ..linalg import nullspace, qmatrix, rank, solve, to_rows, zeros
from ..weyl import ExtAffineWeylGroup
from .algebra import NilHecke, NilHeckeElement
from .theorems import monomials

__all__ = [
    "MoritaUnitNotFound", "morita_unit", "verify_morita_unit",
    "GradedModuleSlice", "sym_slice", "direct_sum", "swap_slice", "regular_slice",
    "DegreeReport", "ModuleReport", "module_extension_check",
]


# ---------------------------------------------------------------------------
# unit decomposition


class MoritaUnitNotFound(ValueError):
    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"no decomposition of 1 with total degree <= {bound}; raise the bound")


def _xpoly(a: tuple[int, ...], nvars: int) -> Poly:
    return Poly.monomial(tuple(a) + (0,) * (nvars - len(a)))


def morita_unit(algebra: NilHecke, bound: int) -> list[tuple[NilHeckeElement, NilHeckeElement]]:
    """Pairs $(h', h'')$ with $\\sum h'\\,\\mathbf e\\,h'' = 1$, searched by increasing degree.

    >>> from nildaha.nilhecke import nil_hecke
    >>> H = nil_hecke("A1")
    >>> pairs = morita_unit(H, 2)
    >>> [(str(a), str(b)) for a, b in pairs]
    [('(1)*theta[id]', '(1)*theta[id]'), ('(x1)*theta[id]', '(-1/2)*theta[1]')]
    >>> verify_morita_unit(H, pairs)
    True
    """
    g = algebra.group
    r, n = algebra.rank, algebra.nvars
    e = algebra.symmetrizer()
    cache: dict = {}

    def e_times(b, w):
        key = (b, w)
        if key not in cache:
            cache[key] = e * algebra.basis(w, _xpoly(b, n))
        return cache[key]

    for top in range(bound + 1):
        unknowns = []
        for w in g.finite_elements:
            ell = g.length(w)
            if ell > top:
                continue
            for da in range(ell + 1):
                for a in monomials(r, da):
                    for b in monomials(r, ell - da):
                        unknowns.append((a, b, w))
        columns = []
        for a, b, w in unknowns:
            prod = _xpoly(a, n) * e_times(b, w)
            columns.append({(v, m): c for v, f in prod.terms.items() for m, c in f.terms.items()})
        keys = sorted({k for col in columns for k in col} | {(g.identity, (0,) * n)},
                      key=lambda k: (algebra.sort_key(k[0]), k[1]))
        index = {k: j for j, k in enumerate(keys)}
        mat = qmatrix([[col.get(k, 0) for col in columns] for k in keys],
                      len(keys), len(columns))
        rhs = [[0] for _ in keys]
        rhs[index[(g.identity, (0,) * n)]] = [1]
        sol = solve(mat, qmatrix(rhs))
        if sol is None:
            continue
        coeffs = [row[0] for row in to_rows(sol)]
        grouped: dict = {}
        for (a, b, w), c in zip(unknowns, coeffs):
            if c:
                grouped.setdefault(a, []).append((b, w, c))
        pairs = []
        for a in sorted(grouped, key=lambda a: (sum(a), tuple(-x for x in a))):
            right = algebra.zero()
            for b, w, c in grouped[a]:
                right = right + algebra.basis(w, _xpoly(b, n).scale(c))
            pairs.append((algebra.poly(_xpoly(a, n)), right))
        return pairs
    raise MoritaUnitNotFound(bound)


def verify_morita_unit(algebra: NilHecke, pairs) -> bool:
    """Recompute $\\sum h'\\,\\mathbf e\\,h''$ by full products and compare with 1."""
    e = algebra.symmetrizer()
    total = algebra.zero()
    for left, right in pairs:
        total = total + left * e * right
    return total == algebra.one()


# ---------------------------------------------------------------------------
# graded module slices


Matrix = list  # list of rows of exact rationals


@dataclass
class GradedModuleSlice:
    """Degrees ``0..top`` of a graded $\\mathrm{Sym}\\,t \\rtimes W$-module.

    ``s[i][d]`` is the action of $s_i$ on $M_d$ and ``x[i][d]`` the map
    $M_d \\to M_{d+1}$ given by the coordinate $x_i$ (so ``d < top``).
    Indices ``i`` run over ``1..rank``.
    """
    group: ExtAffineWeylGroup
    dims: list[int]
    s: dict[int, list[Matrix]]
    x: dict[int, list[Matrix]]
    label: str = ""

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    @property
    def rank(self) -> int:
        return self.group.rank

    def validate(self) -> list[str]:
        """Broken relations of $\\mathrm{Sym}\\,t \\rtimes W$ on the slice (empty if fine)."""
        problems = []
        r = self.rank
        for i in range(1, r + 1):
            if len(self.s.get(i, [])) != len(self.dims):
                problems.append(f"s{i} missing in some degree")
                continue
            if self.top and len(self.x.get(i, [])) != self.top:
                problems.append(f"x{i} missing in some degree")
        if problems:
            return problems
        mats = {i: [qmatrix(m, self.dims[d], self.dims[d]) for d, m in enumerate(self.s[i])]
                for i in range(1, r + 1)}
        xs = {i: [qmatrix(m, self.dims[d + 1], self.dims[d]) for d, m in enumerate(self.x.get(i, []))]
              for i in range(1, r + 1)}
        for d, dim in enumerate(self.dims):
            one = qmatrix([[int(a == b) for b in range(dim)] for a in range(dim)], dim, dim)
            for i in range(1, r + 1):
                if mats[i][d] * mats[i][d] != one:
                    problems.append(f"s{i}^2 != 1 in degree {d}")
                for j in range(i + 1, r + 1):
                    m = self.group.braid_order(i, j)
                    a, b = one, one
                    for k in range(m):
                        a = a * mats[i if k % 2 == 0 else j][d]
                        b = b * mats[j if k % 2 == 0 else i][d]
                    if a != b:
                        problems.append(f"braid ({i},{j}) fails in degree {d}")
        cartan = self.group.datum.cartan
        for d in range(self.top):
            for i in range(1, r + 1):
                for j in range(1, r + 1):
                    if d + 1 < self.top and xs[i][d + 1] * xs[j][d] != xs[j][d + 1] * xs[i][d]:
                        problems.append(f"x{i}, x{j} do not commute in degree {d}")
                    # s_i x_j = (x_j - a_{ji} x_i) s_i
                    lhs = mats[i][d + 1] * xs[j][d]
                    rhs = (xs[j][d] - xs[i][d] * _qq(cartan[j - 1][i - 1])) * mats[i][d]
                    if lhs != rhs:
                        problems.append(f"s{i} x{j} twist fails in degree {d}")
        return problems


def _qq(c):
    return QQ.convert(mpq(c))


def sym_slice(group: ExtAffineWeylGroup, top: int) -> GradedModuleSlice:
    """$\\mathrm{Sym}\\,t$ in degrees ``0..top`` with monomial bases."""
    r, n = group.rank, group.rank + 1
    bases = [monomials(r, d) for d in range(top + 1)]
    index = [{m: k for k, m in enumerate(b)} for b in bases]
    s: dict = {}
    x: dict = {}
    for i in range(1, r + 1):
        rows = group.s(i).substitution
        s[i] = []
        for d, basis in enumerate(bases):
            mat = [[0] * len(basis) for _ in basis]
            for col, m in enumerate(basis):
                img = RootFraction.from_poly(_xpoly(m, n)).substitute(rows).num
                for exps, c in img.terms.items():
                    mat[index[d][exps[:r]]][col] = c
            s[i].append(mat)
        x[i] = []
        for d in range(top):
            mat = [[0] * len(bases[d]) for _ in bases[d + 1]]
            for col, m in enumerate(bases[d]):
                up = list(m)
                up[i - 1] += 1
                mat[index[d + 1][tuple(up)]][col] = 1
            x[i].append(mat)
    return GradedModuleSlice(group, [len(b) for b in bases], s, x, "Sym t")


def _block(a: Matrix, b: Matrix, ra: int, ca: int, rb: int, cb: int) -> Matrix:
    out = [[0] * (ca + cb) for _ in range(ra + rb)]
    for p in range(ra):
        for q in range(ca):
            out[p][q] = a[p][q]
    for p in range(rb):
        for q in range(cb):
            out[ra + p][ca + q] = b[p][q]
    return out


def direct_sum(m1: GradedModuleSlice, m2: GradedModuleSlice) -> GradedModuleSlice:
    """Block-diagonal direct sum, truncated to the smaller top degree."""
    top = min(m1.top, m2.top)
    dims = [m1.dims[d] + m2.dims[d] for d in range(top + 1)]
    s = {i: [_block(m1.s[i][d], m2.s[i][d], m1.dims[d], m1.dims[d], m2.dims[d], m2.dims[d])
             for d in range(top + 1)] for i in m1.s}
    x = {i: [_block(m1.x[i][d], m2.x[i][d], m1.dims[d + 1], m1.dims[d],
                    m2.dims[d + 1], m2.dims[d]) for d in range(top)] for i in m1.x}
    return GradedModuleSlice(m1.group, dims, s, x, f"{m1.label} + {m2.label}")


def swap_slice(group: ExtAffineWeylGroup, top: int) -> GradedModuleSlice:
    """$\\mathrm{Sym}\\,t \\oplus \\mathrm{Sym}\\,t$ where $s_i$ swaps the summands.

    The swap is composed with the natural action, so that the twisted
    commutation with $x$ still holds. This is a module for rank one only; in
    higher rank the swap breaks the braid relations.
    """
    if group.rank != 1:
        raise ValueError("the swap module is defined for rank one only")
    base = sym_slice(group, top)
    s: dict = {}
    for j in base.s:
        s[j] = []
        for d in range(top + 1):
            k = base.dims[d]
            m = base.s[j][d]
            s[j].append(_swap(m, k))
    x = {j: [_block(base.x[j][d], base.x[j][d], base.dims[d + 1], base.dims[d],
                    base.dims[d + 1], base.dims[d]) for d in range(top)] for j in base.x}
    return GradedModuleSlice(group, [2 * k for k in base.dims], s, x,
                             "Sym t (+) Sym t, s swapping")


def _swap(m: Matrix, k: int) -> Matrix:
    out = [[0] * (2 * k) for _ in range(2 * k)]
    for p in range(k):
        for q in range(k):
            out[k + p][q] = m[p][q]
            out[p][k + q] = m[p][q]
    return out


def regular_slice(group: ExtAffineWeylGroup) -> GradedModuleSlice:
    """The regular representation of $W$ placed in degree 0, with no $x$-maps."""
    els = group.finite_elements
    index = {w: k for k, w in enumerate(els)}
    s = {}
    for i in range(1, group.rank + 1):
        mat = [[0] * len(els) for _ in els]
        for col, w in enumerate(els):
            mat[index[group.s(i) * w]][col] = 1
        s[i] = [mat]
    return GradedModuleSlice(group, [len(els)], s, {}, "regular representation")


@dataclass
class DegreeReport:
    degree: int
    dim_plus: int
    dim_minus_next: int
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


@dataclass
class ModuleReport:
    """Outcome of the extension criterion along one simple root."""
    index: int
    examined: list[DegreeReport]
    theta: dict[int, Matrix] | None = None
    square_zero: bool | None = None
    defrel: bool | None = None
    reconstructs_s: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def checkable(self) -> bool:
        return bool(self.examined)

    @property
    def bijective(self) -> bool:
        return self.checkable and all(r.bijective for r in self.examined)

    @property
    def ok(self) -> bool:
        return self.bijective and bool(self.square_zero and self.defrel and self.reconstructs_s)

    def summary(self) -> str:
        if not self.checkable:
            return f"alpha_{self.index}: not checkable beyond degree 0 (empty range)"
        lines = [f"alpha_{self.index}: degrees -1..{self.examined[-1].degree} examined"]
        for r in self.examined:
            lines.append(f"  d={r.degree}: dim M+={r.dim_plus}, dim M-(d+1)={r.dim_minus_next}, "
                         f"injective={r.injective}, surjective={r.surjective}")
        if self.theta is not None:
            lines.append(f"  theta: square zero={self.square_zero}, defrel={self.defrel}, "
                         f"s = x theta + 1: {self.reconstructs_s}")
        lines.extend(f"  {n}" for n in self.notes)
        return "\n".join(lines)


def module_extension_check(module: GradedModuleSlice, i: int) -> ModuleReport:
    """Criterion for extending the action along $\\alpha_i$ on degrees ``< top``."""
    problems = module.validate()
    if problems:
        raise ValueError("malformed module slice: " + "; ".join(problems))
    top = module.top
    dims = module.dims
    S = [qmatrix(m, dims[d], dims[d]) for d, m in enumerate(module.s[i])]
    X = {j: [qmatrix(m, dims[d + 1], dims[d]) for d, m in enumerate(module.x[j])]
         for j in module.x}
    eye = [qmatrix([[int(a == b) for b in range(k)] for a in range(k)], k, k) for k in dims]
    plus = [nullspace(S[d] - eye[d]) for d in range(top + 1)]
    minus = [nullspace(S[d] + eye[d]) for d in range(top + 1)]
    report = ModuleReport(i, [])
    if top == 0:
        return report
    # below degree 0 the module vanishes, so M_0 must have no anti-invariants
    d0 = minus[0].shape[1]
    report.examined.append(DegreeReport(-1, 0, d0, True, d0 == 0))
    for d in range(top):
        P, N = plus[d], minus[d + 1]
        img = X[i][d] * P if P.shape[1] else zeros(dims[d + 1], 0)
        r_img = rank(img)
        coords_ok = solve(N, img) is not None if img.shape[1] else True
        injective = r_img == P.shape[1]
        surjective = coords_ok and r_img == N.shape[1]
        report.examined.append(DegreeReport(d, P.shape[1], N.shape[1], injective, surjective))
    if not report.bijective:
        bad = [r.degree for r in report.examined if not r.bijective]
        report.notes.append(f"criterion fails at degrees {bad}: no theta extends the action")
        return report
    # theta maps M_{d+1} -> M_d; on M_0 it is zero because s acts trivially there
    theta: dict[int, object] = {0: zeros(0, dims[0])}
    for d in range(top):
        P, N = plus[d], minus[d + 1]
        C = solve(N, X[i][d] * P)
        rhs = solve(N, S[d + 1] - eye[d + 1])
        theta[d + 1] = P * solve(C, rhs)
    report.theta = {d: to_rows(m) for d, m in theta.items()}
    report.reconstructs_s = all(X[i][d] * theta[d + 1] + eye[d + 1] == S[d + 1]
                                for d in range(top))
    report.square_zero = all((theta[d] * theta[d + 1]).is_zero_matrix
                             for d in range(1, top))
    cartan = module.group.datum.cartan
    ok = True
    for d in range(top):
        for j in X:
            c = cartan[j - 1][i - 1]
            sh = X[j][d] - X[i][d] * _qq(c)  # multiplication by s_i(x_j)
            lhs = theta[d + 1] * sh
            if d >= 1:
                lhs = lhs - X[j][d - 1] * theta[d]
            if lhs != eye[d] * _qq(c):
                ok = False
    report.defrel = ok
    return report
