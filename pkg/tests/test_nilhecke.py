import random

import pytest

from nildaha.exactalg import Poly, RootFraction, parse_poly
from nildaha.nilhecke import (
    NilHeckeElement, NotInNilHecke, direct_sum, faithfulness_rank, grade,
    invariant_polynomials, module_extension_check, morita_unit, nil_hecke, phi_image,
    regular_slice, specialize, swap_slice, sym_slice, theta_word_invariance,
    verify_morita_unit, verify_phi2, verify_th0, MoritaUnitNotFound,
)
from nildaha.skew import SkewElement, specialize_to_torus, theta_simple
from nildaha.suites import random_product
from nildaha.weyl import weyl_group


def P(text, n=2):
    return parse_poly(text, n)


@pytest.fixture
def A1():
    return nil_hecke("A1")


def test_membership_examples(A1):
    g = A1.group
    assert A1.membership(theta_simple(g, 1)) == A1.gen(1)
    got = A1.membership(SkewElement.element(g, g.s(1)))
    assert got.terms == {g.s(1): P("x1"), g.identity: P("1")}
    bad = SkewElement.scalar(g, RootFraction.inverse_form((1, 0)))
    with pytest.raises(NotInNilHecke) as err:
        A1.membership(bad)
    assert err.value.index == g.identity
    assert err.value.coeff == RootFraction.inverse_form((1, 0))
    assert A1.try_membership(bad) is None


def test_nh_mul_examples(A1):
    t = A1.gen(1)
    assert (t * t).is_zero()
    got = t * A1.poly(P("x1"))
    assert got == A1.basis(A1.group.s(1), P("-x1")) + A1.poly(Poly.const(-2, 2))
    a2 = nil_hecke("A2")
    g = a2.group
    assert a2.gen(1) * a2.gen(2) == a2.basis(g.s(1) * g.s(2))


def test_word_invariance_examples():
    a2 = nil_hecke("A2")
    g = a2.group
    w0 = g.word([1, 2, 1])
    assert theta_word_invariance(a2, w0, [[1, 2, 1], [2, 1, 2]])
    assert theta_word_invariance(a2, g.s(1), [[1]])
    a1 = nil_hecke("A1")
    t = a1.group.translation((2,))
    assert a1.group.reduced_words(t) == [[0, 1]]
    assert theta_word_invariance(a1, t, [[0, 1]])
    with pytest.raises(ValueError):
        theta_word_invariance(a2, w0, [[1, 2, 1], [1, 1, 2, 1, 2]])


def test_grade_examples(A1):
    g = A1.group
    assert grade(A1.gen(1)) == {-1: A1.gen(1)}
    assert grade(A1.poly(P("x1"))) == {1: A1.poly(P("x1"))}
    xt = A1.basis(g.s(1), P("x1"))
    assert grade(xt) == {0: xt}
    mixed = A1.basis(g.s(1), P("x1^2 + h + 1"))
    parts = grade(mixed)
    assert sorted(parts) == [-1, 0, 1]
    total = A1.zero()
    for v in parts.values():
        total = total + v
    assert total == mixed


def test_specialize_examples(A1):
    g = A1.group
    assert specialize(A1.poly(P("h")), 0).is_zero()
    got = specialize(A1.basis(g.s(1), P("x1 + h")), 1)
    assert got.terms == {g.s(1): P("x1 + 1")}
    # at h = 0 the translations commute with coordinates
    e = A1.group_element(g.translation((1,)))
    x = A1.poly(P("x1"))
    assert specialize(x * e, 0) == specialize(e * x, 0)
    assert x * e != e * x


def test_specialize_is_multiplicative():
    H = nil_hecke("A2")
    rng = random.Random(3)
    for _ in range(20):
        a = H.membership(random_product("A2", rng, (1, 3)))
        b = H.membership(random_product("A2", rng, (1, 3)))
        for c in (0, 1, -2):
            assert specialize(a, c) * specialize(b, c) == specialize(a * b, c)


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_expansion_roundtrip(label):
    H = nil_hecke(label)
    rng = random.Random(label)
    for _ in range(30):
        u = random_product(label, rng)
        got = H.membership(u)
        assert got.expand() == u
        assert H.membership(got.expand()) == got
        assert NilHeckeElement.from_json(H, got.to_json()) == got


def test_symmetrizer_examples(A1):
    g = A1.group
    e = A1.symmetrizer()
    assert e.terms == {g.identity: P("1"), g.s(1): P("1/2*x1")}
    assert e * e == e
    x2 = A1.poly(P("x1^2"))
    assert x2 * e == e * x2


def test_spherical_project_examples(A1):
    e = A1.symmetrizer()
    assert A1.spherical_project(e) == e
    p = A1.spherical_project(A1.gen(1))
    assert p == e * A1.gen(1) * e
    assert A1.spherical_project(p) == p
    f = P("x1^2")
    assert A1.spherical_project(A1.poly(f)) == f * e


def test_invariants():
    H = nil_hecke("A2")
    inv = invariant_polynomials(H, 3)
    assert [f.degree() for f in inv] == [0, 2, 3]
    for f in inv:
        for w in H.group.finite_elements:
            assert RootFraction.from_poly(f).substitute(w.substitution).num == f


@pytest.mark.parametrize("label", ["A1", "A2", "G2"])
def test_th0(label):
    rep = verify_th0(weyl_group(label))
    assert rep.ok
    d = weyl_group(label).datum
    assert sum(m * c for m, c in zip(rep.mu, d.affine_root.coroot.coords)) == 1


def test_phi_examples():
    g = weyl_group("A1")
    assert phi_image(g, 1) == specialize_to_torus(theta_simple(g, 1))
    assert phi_image(g, 0) == specialize_to_torus(theta_simple(g, 0))
    for i in (0, 1):
        assert (phi_image(g, i) * phi_image(g, i)).is_zero()


def test_phi2_examples():
    a1 = weyl_group("A1")
    assert verify_phi2(a1, (1,), 1)
    assert verify_phi2(a1, (0,), 1)
    a2 = weyl_group("A2")
    # <varpi_1, coroot_2> = 0 and a weight pairing to -1
    assert verify_phi2(a2, (1, 0), 2)
    assert verify_phi2(a2, (0, -1), 2)


def test_morita_examples():
    H = nil_hecke("A1")
    pairs = morita_unit(H, 2)
    assert verify_morita_unit(H, pairs)
    assert not verify_morita_unit(H, pairs[:1])
    with pytest.raises(MoritaUnitNotFound):
        morita_unit(nil_hecke("A2"), 1)


def test_faithfulness_small():
    rep = faithfulness_rank(nil_hecke("A1"), 2, 4)
    assert rep.injective and rep.spanning == 6


def test_module_examples():
    a1 = weyl_group("A1")
    rep = module_extension_check(sym_slice(a1, 5), 1)
    assert rep.ok
    assert all(r.dim_plus in (0, 1) and r.dim_minus_next in (0, 1) for r in rep.examined)
    reg = module_extension_check(regular_slice(a1), 1)
    assert not reg.checkable and "not checkable" in reg.summary()
    ds = module_extension_check(direct_sum(sym_slice(a1, 4), sym_slice(a1, 4)), 1)
    assert ds.ok


def test_swap_module_has_no_extension():
    # s swaps two copies of Sym t: the anti-invariant constants have nowhere to come from
    rep = module_extension_check(swap_slice(weyl_group("A1"), 4), 1)
    assert [r.degree for r in rep.examined if not r.bijective] == [-1]
    assert all(r.bijective for r in rep.examined if r.degree >= 0)
    assert not rep.ok
    with pytest.raises(ValueError):
        swap_slice(weyl_group("A2"), 2)


def test_malformed_slice():
    m = sym_slice(weyl_group("A1"), 2)
    m.s[1][1] = [[1]]
    with pytest.raises(ValueError, match="malformed"):
        module_extension_check(m, 1)
