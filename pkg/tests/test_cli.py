import json

import pytest

from nildaha.cli import run
from nildaha.exactalg import RootFraction
from nildaha.nilhecke import NilHeckeElement, nil_hecke
from nildaha.skew import SkewElement, theta_simple
from nildaha.weyl import ExtAffineElement, weyl_group

INV_X = ('{"terms":[{"group":{"t":[0],"w":[[1]]},'
         '"coeff":{"num":[[[0,0]],["1"]],"den":[[[1],0]]}}]}')


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_th0(capsys):
    code, out, _ = call(capsys, "nh", "verify", "th0", "--type", "A2")
    assert code == 0
    assert out.strip() == "th0: OK (1 identity, exact)"


def test_weyl_length(capsys):
    code, out, _ = call(capsys, "weyl", "length", "--type", "A1", "--elem",
                        '{"t":[2],"w":[[1]]}')
    assert (code, out.strip()) == (0, "2")


def test_reduced_word_json(capsys):
    code, out, _ = call(capsys, "weyl", "reduced-word", "--type", "A1", "--json",
                        "--elem", '{"t":[1],"w":[[1]]}')
    obj = json.loads(out)
    g = weyl_group("A1")
    assert g.word(obj["word"], ExtAffineElement.from_json(obj["omega"])) == g.translation((1,))


def test_membership_rejects(capsys):
    code, out, _ = call(capsys, "nh", "membership", "--type", "A1", "--elem", INV_X, "--json")
    assert code == 1
    obj = json.loads(out)
    assert obj["member"] is False
    assert obj["witness"]["index"] == {"t": [0], "w": [[1]]}
    assert RootFraction.from_json(obj["witness"]["coeff"], 2) == RootFraction.inverse_form((1, 0))


def test_membership_accepts_and_roundtrips(capsys):
    g = weyl_group("A2")
    u = theta_simple(g, 0) * theta_simple(g, 2) + SkewElement.element(g, g.translation((1, 0)))
    code, out, _ = call(capsys, "nh", "membership", "--type", "A2", "--json",
                        "--elem", json.dumps(u.to_json()))
    assert code == 0
    got = NilHeckeElement.from_json(nil_hecke("A2"), json.loads(out)["element"])
    assert got.expand() == u


def test_skew_commands(capsys):
    s1 = '{"terms":[{"group":{"t":[0],"w":[[-1]]},"coeff":"1"}]}'
    code, out, _ = call(capsys, "skew", "mul", "--type", "A1", "--a", s1, "--b", s1, "--json")
    g = weyl_group("A1")
    assert SkewElement.from_json(g, json.loads(out)) == SkewElement.one(g)
    code, out, _ = call(capsys, "skew", "act", "--type", "A1", "--poly", "x1",
                        "--elem", '{"terms":[{"group":{"t":[1],"w":[[1]]},"coeff":"1"}]}')
    assert out.strip() == "x1 - h"


def test_nh_mul(capsys):
    th = '{"terms":[{"index":{"t":[0],"w":[[-1]]},"coeff":"1"}]}'
    x = '{"terms":[{"index":{"t":[0],"w":[[1]]},"coeff":"x1"}]}'
    code, out, _ = call(capsys, "nh", "mul", "--type", "A1", "--a", th, "--b", th)
    assert (code, out.strip()) == (0, "0")
    code, out, _ = call(capsys, "nh", "mul", "--type", "A1", "--a", th, "--b", x, "--json")
    H = nil_hecke("A1")
    got = NilHeckeElement.from_json(H, json.loads(out))
    assert got == H.gen(1) * H.poly(H.x(1))


def test_root_show(capsys):
    code, out, _ = call(capsys, "root", "show", "--type", "G2", "--json")
    obj = json.loads(out)
    assert obj["highest_root"] == [3, 2] and len(obj["positive_roots"]) == 6


@pytest.mark.parametrize("argv", [
    ["nh", "verify", "nonsense"],
    ["weyl", "length", "--elem", "{}"],
    ["root", "show", "--type", "X3"],
    ["weyl", "length", "--type", "A2", "--elem", '{"t":[1],"w":[[1]]}'],
    ["nh", "verify", "braid", "--case", "{}", "--type", "A1"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_malformed_json_position(capsys):
    code, _, err = call(capsys, "nh", "membership", "--type", "A1", "--elem", '{"terms": [}')
    assert code == 2
    assert "line 1, column 12" in err


def test_deterministic_reports(capsys):
    argv = ["nh", "verify", "membership", "--type", "A1", "--seed", "7", "--samples", "10",
            "--json"]
    _, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    assert first == second
    report = json.loads(first)
    assert report[0]["cases"] == 20 and report[0]["failures"] == []


def test_case_rerun(capsys):
    code, out, _ = call(capsys, "nh", "verify", "braid", "--type", "A2", "--case",
                        '{"kind":"braid","i":0,"j":1}')
    assert (code, out.strip()) == (0, "braid: OK")
    record = {"suite": "words", "type": "A1",
              "case": {"elem": {"t": [2], "w": [[1]]}}, "detail": {}}
    code, _, _ = call(capsys, "nh", "verify", "words", "--case", json.dumps(record))
    assert code == 0


def test_verification_failure_exit_code(capsys, monkeypatch):
    from nildaha import suites
    monkeypatch.setitem(suites.SUITES, "th0", suites.Suite(
        "th0", "", ("A1",), lambda label, o: [{}], lambda label, c: {"forced": True}))
    code, out, _ = call(capsys, "nh", "verify", "th0", "--type", "A1")
    assert code == 1
    assert "counterexample" in out
