import pytest

from nildaha.rootdata import (Coroot, Weight, build_root_datum, cartan_matrix,
                              find_weight_pairing_one, pairing)

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
             "E6", "E7", "E8", "F4", "G2"]

# number of roots, from the classification tables
ROOT_COUNTS = {"A1": 2, "A2": 6, "A3": 12, "A4": 20, "B2": 8, "B3": 18, "B4": 32,
               "C2": 8, "C3": 18, "C4": 32, "D4": 24, "D5": 40, "E6": 72, "E7": 126,
               "E8": 240, "F4": 48, "G2": 12}


@pytest.mark.parametrize("label", ALL_TYPES)
def test_cartan_shape(label):
    a = cartan_matrix(label)
    r = len(a)
    assert all(a[i][i] == 2 for i in range(r))
    assert all(a[i][j] <= 0 for i in range(r) for j in range(r) if i != j)
    # symmetrizable: a_ij = 0 iff a_ji = 0
    assert all((a[i][j] == 0) == (a[j][i] == 0) for i in range(r) for j in range(r))


@pytest.mark.parametrize("label", ALL_TYPES)
def test_root_counts_and_closure(label):
    d = build_root_datum(label)
    assert len(d.roots) == ROOT_COUNTS[label]
    assert len(d.positive_roots) * 2 == len(d.roots)
    weights = {b.weight.coords for b in d.roots}
    for b in d.roots:
        assert tuple(-c for c in b.weight.coords) in weights
        # pairing with own coroot is 2
        assert pairing(b.weight, b.coroot) == 2


@pytest.mark.parametrize("label", ALL_TYPES)
def test_highest_root(label):
    d = build_root_datum(label)
    delta = d.highest_root
    for i in range(1, d.rank + 1):
        s = tuple(x + y for x, y in zip(delta.weight.coords, d.simple_root(i).weight.coords))
        assert not d.is_root(s)
    assert delta.height == max(b.height for b in d.positive_roots)


@pytest.mark.parametrize("label", ALL_TYPES)
def test_affine_root_has_highest_coroot(label):
    d = build_root_datum(label)
    top = max(sum(b.coroot.coords) for b in d.positive_roots)
    assert sum(d.affine_root.coroot.coords) == top
    if label[0] in "ADE":
        assert d.affine_root == d.highest_root


def test_examples():
    assert len(build_root_datum("A1").roots) == 2
    assert build_root_datum("A1").highest_root.simple_coords == (1,)
    assert build_root_datum("A2").highest_root.simple_coords == (1, 1)
    g2 = build_root_datum("G2")
    assert len(g2.roots) == 12
    assert g2.highest_root.simple_coords == (3, 2)


def test_unknown_label():
    with pytest.raises(ValueError, match="X3"):
        build_root_datum("X3")
    with pytest.raises(ValueError):
        build_root_datum("D3")


def test_pairing_examples():
    d = build_root_datum("A2")
    for i in (1, 2):
        assert pairing(d.simple_root(i).weight, d.simple_coroot(i)) == 2
    assert pairing(d.simple_root(1).weight, d.simple_coroot(2)) == -1
    a1 = build_root_datum("A1")
    assert pairing(a1.fundamental_weight(1), a1.simple_coroot(1)) == 1


@pytest.mark.parametrize("label", ALL_TYPES)
def test_pairing_matches_cartan(label):
    d = build_root_datum(label)
    for i in range(1, d.rank + 1):
        for j in range(1, d.rank + 1):
            assert pairing(d.simple_root(j).weight, d.simple_coroot(i)) == d.cartan[i - 1][j - 1]


def test_pairing_rank_mismatch():
    with pytest.raises(ValueError):
        pairing(Weight((1, 0)), Coroot((1,)))


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "F4", "G2"])
def test_roots_conjugate_to_simple(label):
    d = build_root_datum(label)
    simple = {d.simple_root(i).weight.coords for i in range(1, d.rank + 1)}
    a = d.cartan
    r = d.rank

    def reflect(w, i):
        return tuple(w[k] - w[i] * a[k][i] for k in range(r))

    for b in d.roots:
        seen, frontier = {b.weight.coords}, [b.weight.coords]
        while frontier and not (seen & simple):
            frontier = [q for w in frontier for i in range(r)
                        for q in [reflect(w, i)] if q not in seen and not seen.add(q)]
        assert seen & simple


@pytest.mark.parametrize("label", ALL_TYPES)
def test_find_weight_pairing_one(label):
    d = build_root_datum(label)
    for b in (d.highest_root, d.affine_root, d.simple_root(1)):
        mu = find_weight_pairing_one(d, b.coroot)
        assert pairing(mu, b.coroot) == 1
        assert find_weight_pairing_one(d, b.coroot) == mu


def test_find_weight_examples():
    a2 = build_root_datum("A2")
    assert find_weight_pairing_one(a2, a2.highest_root.coroot) == a2.fundamental_weight(1)
    a1 = build_root_datum("A1")
    assert find_weight_pairing_one(a1, a1.simple_coroot(1)) == a1.fundamental_weight(1)


def test_find_weight_rejects_non_primitive():
    d = build_root_datum("A2")
    with pytest.raises(ValueError, match="2"):
        find_weight_pairing_one(d, Coroot((2, 2)))


def test_json():
    d = build_root_datum("G2")
    obj = d.to_json()
    assert obj["type"] == "G2" and obj["rank"] == 2
    assert obj["cartan"] == [[2, -3], [-1, 2]]
