"""Acceptance criteria: ten exact identity suites, each under a time budget.

Every criterion prints one PASS/FAIL line. Tolerance is zero throughout.
"""

import time

import pytest

from nildaha.nilhecke import nil_hecke, theta_word_invariance, verify_th0
from nildaha.suites import Options, run_suite
from nildaha.weyl import weyl_group


def _suites(pairs, opts=None):
    reports = [run_suite(name, label, opts) for name, label in pairs]
    cases = sum(r.cases for r in reports)
    bad = [f for r in reports for f in r.failures]
    bad += [{"budget": r.suite} for r in reports if r.budget_exceeded]
    return not bad, f"{cases} cases, {len(bad)} failures", bad


def braid_relations():
    return _suites([("braid", t) for t in ("A1", "A2", "A3", "B2", "C2", "G2")])


def reduced_word_invariance():
    checked, bad = 0, []
    jobs = [("A2", weyl_group("A2").finite_elements), ("B2", weyl_group("B2").finite_elements),
            ("A1", weyl_group("A1").elements_up_to_length(5)),
            ("A2", weyl_group("A2").elements_up_to_length(5))]
    for label, elements in jobs:
        H = nil_hecke(label)
        for w in elements:
            assert H.group.length(w) <= 6
            checked += 1
            if not theta_word_invariance(H, w, H.group.reduced_words(w)):
                bad.append((label, w.to_json()))
    return not bad, f"{checked} elements, {len(bad)} failures", bad


def defrel_and_ddh():
    types = ("A1", "A2", "A3", "B2", "G2")
    return _suites([(s, t) for s in ("defrel", "ddh") for t in types])


def conjugation_th0():
    bad = []
    for label in ("A1", "A2", "B2", "C2", "G2"):
        g = weyl_group(label)
        for root in (g.datum.affine_root, g.datum.highest_root):
            rep = verify_th0(g, root)
            if not rep.ok:
                bad.append((label, root.simple_coords))
    return not bad, f"10 identities, {len(bad)} failures", bad


def membership_decision():
    return _suites([("membership", t) for t in ("A1", "A2")], Options(seed=0, samples=100))


def faithfulness():
    return _suites([("faithfulness", t) for t in ("A1", "A2")])


def hbar_zero_map():
    return _suites([("phi2", t) for t in ("A1", "A2", "B2")])


def symmetrizer():
    return _suites([("symmetrizer", t) for t in ("A1", "A2", "A3", "B2")])


def morita_unit_both():
    ok1, d1, b1 = _suites([("morita-unit", "A1")], Options(max_degree=2))
    ok2, d2, b2 = _suites([("morita-unit", "A2")], Options(max_degree=4))
    return ok1 and ok2, f"A1: {d1}; A2: {d2}", b1 + b2


def module_criterion():
    return _suites([("module", t) for t in ("A1", "A2")], Options(max_degree=6))


CRITERIA = [
    (1, "braid and nil relations", 30, braid_relations),
    (2, "reduced-word invariance", 120, reduced_word_invariance),
    (3, "def-rel and ddh", 20, defrel_and_ddh),
    (4, "conjugation formula", 20, conjugation_th0),
    (5, "membership decision", 120, membership_decision),
    (6, "faithfulness rank", 60, faithfulness),
    (7, "hbar = 0 homomorphism", 30, hbar_zero_map),
    (8, "symmetrizer and spherical structure", 20, symmetrizer),
    (9, "Morita unit", 120, morita_unit_both),
    (10, "module criterion", 30, module_criterion),
]


@pytest.mark.parametrize("number,title,budget,check", CRITERIA,
                         ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, budget, check, capsys):
    start = time.perf_counter()
    ok, detail, bad = check()
    elapsed = time.perf_counter() - start
    passed = ok and elapsed <= budget
    with capsys.disabled():
        print(f"\ncriterion {number} ({title}): {'PASS' if passed else 'FAIL'} "
              f"[{detail}; {elapsed:.2f}s of {budget}s]")
    assert ok, bad[:3]
    assert elapsed <= budget
