"""
The $\\hbar = 0$ picture: generators of $\\mathrm{gr}\\,\\mathbb H$ mapped into
$W \\ltimes \\mathbb{Q}[T \\times t^*, (t^\\alpha - 1)/\\check\\alpha]$.

Finite generators go to $\\frac{1}{\\check\\alpha_i}([s_i] - 1)$. The affine
generator goes to $\\frac{1}{\\phi_0}(t^\\theta [s_\\theta] - 1)$ with
$\\phi_0 = -\\langle x, \\check\\theta\\rangle$ the $\\hbar = 0$ value of its
hyperplane form. The torus factor $t^\\theta$ is what remains of the
translation in $s_0 = t_\\theta s_\\theta$ once $\\hbar$ is set to zero.
"""

from __future__ import annotations

from ..exactalg import Poly, RootFraction, TorusMixed
from ..rootdata import Weight
from ..skew import TorusSkewElement, simple_form, specialize_to_torus, theta_simple
from ..weyl import ExtAffineElement, ExtAffineWeylGroup

__all__ = ["phi_image", "verify_phi2", "phi_relation_failures", "phi2_failures"]


def _finite_part(w: ExtAffineElement) -> ExtAffineElement:
    return ExtAffineElement((0,) * w.rank, w.finite)


def phi_image(group: ExtAffineWeylGroup, i: int) -> TorusSkewElement:
    """Image of $\\bar\\theta_i$, built from the formula (not by specializing).

    >>> from nildaha.weyl import weyl_group
    >>> W = weyl_group("A1")
    >>> print(phi_image(W, 1))
    ([(1)/((x1))])*[t[0] w[[-1]]] + ([(-1)/((x1))])*[t[0] w[[1]]]
    """
    n = group.rank + 1
    form = simple_form(group, i)[:-1] + (0,)
    inv = RootFraction.inverse_form(form)
    s = group.s(i)
    mu = s.translation
    return TorusSkewElement(group, {
        _finite_part(s): TorusMixed.monomial(mu, inv),
        group.identity: TorusMixed.monomial((0,) * group.rank, -inv, nvars=n),
    })


def phi_relation_failures(group: ExtAffineWeylGroup) -> list[dict]:
    """Square-zero, braid and $\\hbar = 0$ def-rel for the images; failures only.

    Each image is also compared with the specialization of the generator.
    """
    n = group.rank + 1
    bad = []
    images = {i: phi_image(group, i) for i in group.indices}
    for i, img in images.items():
        if img != specialize_to_torus(theta_simple(group, i)):
            bad.append({"relation": "specialization", "i": i})
        if not (img * img).is_zero():
            bad.append({"relation": "square", "i": i})
    for i in group.indices:
        for j in group.indices:
            m = group.braid_order(i, j) if j > i else None
            if m is None:
                continue
            lhs = _alternating(images, i, j, m, group)
            rhs = _alternating(images, j, i, m, group)
            if lhs != rhs:
                bad.append({"relation": "braid", "i": i, "j": j, "m": m})
    datum = group.datum
    for i in group.indices:
        s = group.s(i)
        pair_root = datum.affine_root.weight.coords if i == 0 else datum.simple_root(i).weight.coords
        sign = -1 if i == 0 else 1
        for k in range(group.rank):
            h = Poly.var(k, n)
            sh = RootFraction.from_poly(h).substitute(s.substitution).eval_hbar_zero()
            lhs = (images[i] * TorusSkewElement.scalar(group, sh)
                   - TorusSkewElement.scalar(group, h) * images[i])
            rhs = TorusSkewElement.scalar(group, sign * pair_root[k])
            if lhs != rhs:
                bad.append({"relation": "defrel", "i": i, "h": str(h)})
    return bad


def _alternating(images, i, j, m, group) -> TorusSkewElement:
    out = TorusSkewElement.scalar(group, 1)
    for k in range(m):
        out = out * images[i if k % 2 == 0 else j]
    return out


def verify_phi2(group: ExtAffineWeylGroup, mu: Weight | tuple, i: int) -> bool:
    """$t^\\mu\\Phi(\\theta_i)t^{-\\mu}[s_i] + \\Phi(\\theta_i) = (t^{\\langle\\mu,\\check\\alpha_i\\rangle\\alpha_i} - 1)/\\check\\alpha_i$.

    >>> from nildaha.weyl import weyl_group
    >>> verify_phi2(weyl_group("A2"), (1, 0), 2)
    True
    """
    lhs, rhs = _phi2_sides(group, mu, i)
    return lhs == rhs


def _phi2_sides(group: ExtAffineWeylGroup, mu, i: int):
    if not 1 <= i <= group.rank:
        raise ValueError("the identity concerns finite simple roots")
    mu = mu.coords if isinstance(mu, Weight) else tuple(mu)
    img = phi_image(group, i)
    t_mu = TorusSkewElement.torus(group, mu)
    t_minus = TorusSkewElement.torus(group, tuple(-c for c in mu))
    s_i = TorusSkewElement.element(group, group.s(i))
    lhs = t_mu * img * t_minus * s_i + img
    k = mu[i - 1]
    alpha = group.datum.simple_root(i).weight.coords
    inv = RootFraction.inverse_form(simple_form(group, i))
    rhs = (TorusSkewElement.torus(group, tuple(k * a for a in alpha), inv)
           - TorusSkewElement.torus(group, (0,) * group.rank, inv))
    return lhs, rhs


def phi2_failures(group: ExtAffineWeylGroup) -> list[dict]:
    """The identity over all fundamental weights and finite simple roots."""
    bad = []
    for j in range(1, group.rank + 1):
        mu = group.datum.fundamental_weight(j)
        for i in range(1, group.rank + 1):
            if not verify_phi2(group, mu, i):
                bad.append({"relation": "phi2", "mu": list(mu.coords), "i": i})
    return bad
