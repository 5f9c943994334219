import pytest
from hypothesis import given, strategies as st

from nildaha.weyl import ExtAffineElement, weyl_group


def bfs_lengths(group, depth):
    """Word length by breadth-first search over the affine generators only."""
    dist = {group.identity: 0}
    layer = [group.identity]
    for k in range(1, depth + 1):
        nxt = []
        for g in layer:
            for i in group.indices:
                h = g * group.s(i)
                if h not in dist:
                    dist[h] = k
                    nxt.append(h)
        layer = nxt
    return dist


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_length_matches_bfs(label):
    g = weyl_group(label)
    dist = bfs_lengths(g, 5)
    for w, k in dist.items():
        assert g.length(w) == k
        for omega in g.omega:
            assert g.length(omega * w) == k


def test_simple_reflection_examples():
    g = weyl_group("A1")
    assert g.s(1).translation == (0,)
    assert g.s(1).act_point((5,), 1) == (-5,)
    # s_0 acts by x -> -x + 2h
    assert g.s(0).act_point((5,), 1) == (-3,)
    assert g.s(0).act_point((5,), 0) == (-5,)
    a2 = weyl_group("A2")
    assert (a2.s(0) * a2.s(0)).is_identity


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "C2", "G2", "A3"])
def test_s0_fixes_its_hyperplane(label):
    g = weyl_group(label)
    theta = g.datum.affine_root
    # pick points with <x, coroot> = h
    for x in [(1,) * g.rank, tuple(range(g.rank))]:
        val = sum(c * v for c, v in zip(theta.coroot.coords, x))
        assert g.s(0).act_point(x, val) == x


def test_mul_examples():
    g = weyl_group("A1")
    w = g.translation((1,))
    assert w * w == g.translation((2,))
    assert g.s(0) * g.s(1) == g.translation((2,))
    for h in [g.s(0), g.translation((3,)), g.s(0) * g.s(1) * g.s(0)]:
        assert (h * h.inverse()).is_identity


elements = st.builds(
    lambda word, k: weyl_group("A2").word(word, weyl_group("A2").omega[k]),
    st.lists(st.integers(0, 2), max_size=6), st.integers(0, 2))


@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements, st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-2, 2))
def test_action_is_compatible_with_product(a, x, h):
    b = weyl_group("A2").s(0) * weyl_group("A2").translation((1, 0))
    assert (a * b).act_point(x, h) == a.act_point(b.act_point(x, h), h)


def test_length_examples():
    g = weyl_group("A1")
    assert g.length(g.identity) == 0
    assert g.length(g.translation((2,))) == 2
    assert g.length(g.translation((1,))) == 1


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_length_changes_by_one(label):
    g = weyl_group(label)
    for w in g.elements_up_to_length(4):
        for i in g.indices:
            assert abs(g.length(w * g.s(i)) - g.length(w)) == 1
            assert abs(g.length(g.s(i) * w) - g.length(w)) == 1


def test_reduced_word_examples():
    g = weyl_group("A1")
    assert g.reduced_word(g.identity) == (g.identity, [])
    omega, word = g.reduced_word(g.translation((2,)))
    assert omega.is_identity and word == [0, 1]
    omega, word = g.reduced_word(g.translation((1,)))
    assert not omega.is_identity and g.length(omega) == 0 and word == [1]
    assert g.word(word, omega) == g.translation((1,))


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_reduced_word_reconstructs(label):
    g = weyl_group(label)
    for w in g.elements_up_to_length(4):
        omega, word = g.reduced_word(w)
        assert g.length(omega) == 0
        assert len(word) == g.length(w)
        assert g.word(word, omega) == w


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_exchange_property(label):
    g = weyl_group(label)
    for w in g.finite_elements:
        words = g.reduced_words(w)
        for i in g.right_descents(w):
            assert any(word[-1] == i for word in words)


@pytest.mark.parametrize("label,size", [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 2),
                                        ("C2", 2), ("D4", 4), ("G2", 1)])
def test_omega_is_a_group(label, size):
    g = weyl_group(label)
    om = set(g.omega)
    assert len(om) == size
    for a in om:
        assert g.length(a) == 0
        assert a.inverse() in om
        for b in om:
            assert a * b in om


def test_demazure_product_examples():
    g = weyl_group("A1")
    assert g.demazure_product([1, 1]) == g.s(1)
    assert g.demazure_product([]) == g.identity
    a2 = weyl_group("A2")
    w0 = a2.demazure_product([1, 2, 1])
    assert w0 == a2.demazure_product([2, 1, 2])
    assert a2.length(w0) == 3 == max(a2.length(w) for w in a2.finite_elements)


@pytest.mark.parametrize("label,orders", [
    ("A1", {(0, 1): None}),
    ("A2", {(0, 1): 3, (0, 2): 3, (1, 2): 3}),
    ("B2", {(0, 1): 4, (0, 2): 2, (1, 2): 4}),
    ("G2", {(1, 2): 6}),
])
def test_braid_orders(label, orders):
    g = weyl_group(label)
    for (i, j), m in orders.items():
        assert g.braid_order(i, j) == m


def test_finite_group_orders():
    for label, n in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12)]:
        assert len(weyl_group(label).finite_elements) == n


def test_json_roundtrip():
    g = weyl_group("A2")
    w = g.word([0, 1, 2], g.omega[1])
    assert ExtAffineElement.from_json(w.to_json()) == w
    with pytest.raises(ValueError):
        ExtAffineElement.from_json({"t": [1, 2], "w": [[1]]})
