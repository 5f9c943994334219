"""
Registry of verification suites.

A suite enumerates cases (small JSON-able parameter dicts) for a Cartan type
and checks each one exactly. A failing case is reported together with its
parameters, so it can be rerun on its own.

>>> report = run_suite("th0", "A2")
>>> report.ok, report.cases
(True, 1)
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .exactalg import Poly, RootFraction
from .nilhecke import (
    NotInNilHecke, centrality_failures, faithfulness_rank, grade, invariant_polynomials,
    module_extension_check, morita_unit, nil_hecke, phi_relation_failures, specialize,
    sym_slice, theta_word_invariance, verify_morita_unit, verify_phi2, verify_th0,
)
from .nilhecke.theorems import alternating
from .rootdata import build_root_datum
from .skew import SkewElement, affine_root_pairing, check_ddh, theta_simple
from .weyl import ExtAffineElement, weyl_group

__all__ = ["SuiteReport", "Suite", "SUITES", "run_suite", "run_case", "Options",
           "random_product", "random_poly"]


@dataclass
class Options:
    max_length: int | None = None
    max_degree: int | None = None
    seed: int = 0
    budget_seconds: float = 120.0
    samples: int = 100


@dataclass
class SuiteReport:
    suite: str
    datum: str
    cases: int
    failures: list[dict] = field(default_factory=list)
    duration: float = 0.0
    budget_exceeded: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures and not self.budget_exceeded

    def to_json(self, timing: bool = False) -> dict:
        out = asdict(self)
        if not timing:
            del out["duration"]
        return out

    def text(self, timing: bool = False, show_datum: bool = True) -> str:
        head = f"{self.suite} [{self.datum}]: " if show_datum else f"{self.suite}: "
        if self.ok:
            head += f"OK ({self.cases} {'identity' if self.cases == 1 else 'identities'}, exact)"
        else:
            head += f"FAIL ({len(self.failures)} of {self.cases} cases)"
            if self.budget_exceeded:
                head += ", budget exceeded"
        if timing:
            head += f" in {self.duration:.2f}s"
        lines = [head]
        for f in self.failures:
            lines.append("  counterexample: " + json.dumps(f, sort_keys=True))
        return "\n".join(lines)


@dataclass
class Suite:
    name: str
    doc: str
    types: tuple[str, ...]
    cases: Callable[[str, Options], list[dict]]
    check: Callable[[str, dict], dict | None]


def _ok(flag: bool, detail: dict | None = None) -> dict | None:
    return None if flag else (detail or {})


# -- braid ------------------------------------------------------------------


def _braid_cases(label, opts):
    g = weyl_group(label)
    out = [{"kind": "square", "i": i} for i in g.indices]
    for i in g.indices:
        for j in g.indices:
            if j > i and g.braid_order(i, j) is not None:
                out.append({"kind": "braid", "i": i, "j": j})
    return out


def _braid_check(label, c):
    g = weyl_group(label)
    i = c["i"]
    if c["kind"] == "square":
        return _ok((theta_simple(g, i) * theta_simple(g, i)).is_zero())
    j = c["j"]
    m = g.braid_order(i, j)
    return _ok(alternating(g, i, j, m) == alternating(g, j, i, m), {"m": m})


# -- def-rel and ddh ----------------------------------------------------------


def _defrel_cases(label, opts):
    g = weyl_group(label)
    return [{"i": i, "h": k} for i in g.indices for k in range(g.rank + 1)]


def _defrel_check(label, c):
    g = weyl_group(label)
    i, h = c["i"], Poly.var(c["h"], g.rank + 1)
    th = theta_simple(g, i)
    sh = RootFraction.from_poly(h).substitute(g.s(i).substitution)
    lhs = th * SkewElement.scalar(g, sh) - SkewElement.scalar(g, h) * th
    rhs = SkewElement.scalar(g, affine_root_pairing(g, i, h))
    return _ok(lhs == rhs, {"lhs": str(lhs), "rhs": str(rhs)})


def _ddh_cases(label, opts):
    r = build_root_datum(label).rank
    return [{"mu": j, "xi": k} for j in range(1, r + 1) for k in range(1, r + 1)]


def _ddh_check(label, c):
    datum = build_root_datum(label)
    return _ok(check_ddh(weyl_group(label), datum.fundamental_weight(c["mu"]),
                         datum.simple_coroot(c["xi"])))


# -- th0 / phi2 --------------------------------------------------------------------


def _th0_check(label, c):
    rep = verify_th0(weyl_group(label))
    return _ok(rep.ok, {"mu": list(rep.mu), "lhs": str(rep.lhs), "rhs": str(rep.rhs),
                        "matches_generator": rep.matches_generator})


def _phi_cases(label, opts):
    r = build_root_datum(label).rank
    return [{"kind": "relations"}] + [{"kind": "phi2", "mu": j, "i": i}
                                      for j in range(1, r + 1) for i in range(1, r + 1)]


def _phi_check(label, c):
    g = weyl_group(label)
    if c["kind"] == "relations":
        bad = phi_relation_failures(g)
        return _ok(not bad, {"broken": bad})
    return _ok(verify_phi2(g, g.datum.fundamental_weight(c["mu"]), c["i"]))


# -- reduced words and freeness ----------------------------------------------------


def _elements(label, opts, affine_default=5):
    g = weyl_group(label)
    L = opts.max_length if opts.max_length is not None else affine_default
    seen = set(g.finite_elements)
    out = list(g.finite_elements)
    for w in g.elements_up_to_length(L):
        if w not in seen:
            seen.add(w)
            out.append(w)
    return [{"elem": w.to_json()} for w in out]


def _words_check(label, c):
    H = nil_hecke(label)
    w = ExtAffineElement.from_json(c["elem"])
    words = H.group.reduced_words(w)
    return _ok(theta_word_invariance(H, w, words), {"words": words})


def _freeness_check(label, c):
    H = nil_hecke(label)
    w = ExtAffineElement.from_json(c["elem"])
    got = H.membership(H.theta(w))
    if got != H.basis(w):
        return {"expansion": str(got)}
    # at h = 0 the leading coefficient stays a nonzero fraction, so the basis
    # remains triangular, hence independent, after specialization
    lead = H.theta(w).coeff(w).eval_hbar_zero()
    at0 = specialize(H.basis(w), 0)
    back = specialize(H.membership(at0.expand()), 0)
    return _ok(not lead.is_zero() and back == at0, {"lead_at_0": str(lead)})


# -- membership ----------------------------------------------------------------


def random_poly(rng: random.Random, nvars: int, max_degree: int = 2, terms: int = 3) -> Poly:
    """A small random polynomial in all variables, including $\\hbar$."""
    out = {}
    for _ in range(rng.randint(1, terms)):
        d = rng.randint(0, max_degree)
        e = [0] * nvars
        for _ in range(d):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Poly(nvars, out)


def random_product(label: str, rng: random.Random, factors: tuple[int, int] = (2, 5)) -> SkewElement:
    """Product of random generators: $\\theta_i$, $e^{\\pm\\varpi_j}$, low-degree polynomials."""
    g = weyl_group(label)
    r, n = g.rank, g.rank + 1
    out = SkewElement.one(g)
    for _ in range(rng.randint(*factors)):
        kind = rng.choice(["theta", "theta", "translation", "poly"])
        if kind == "theta":
            f = theta_simple(g, rng.choice(list(g.indices)))
        elif kind == "translation":
            mu = [0] * r
            mu[rng.randrange(r)] = rng.choice([-1, 1])
            f = SkewElement.element(g, g.translation(tuple(mu)))
        else:
            f = SkewElement.scalar(g, random_poly(rng, n))
        out = out * f
    return out


def _membership_cases(label, opts):
    return [{"seed": opts.seed, "index": k, "kind": kind}
            for kind in ("accept", "reject") for k in range(opts.samples)]


def _membership_check(label, c):
    H = nil_hecke(label)
    g = H.group
    rng = random.Random(f"{label}:{c['seed']}:{c['index']}")
    u = random_product(label, rng)
    if c["kind"] == "accept":
        try:
            got = H.membership(u)
        except NotInNilHecke as err:
            return {"rejected": err.witness()}
        return _ok(got.expand() == u, {"roundtrip": str(got)})
    roots = g.datum.positive_roots
    beta = roots[rng.randrange(len(roots))]
    bad = u + SkewElement.scalar(g, RootFraction.inverse_form(beta.coroot.coords + (0,)))
    try:
        H.membership(bad)
    except NotInNilHecke as err:
        return _ok(err.coeff.as_poly() is None, {"witness": err.witness()})
    return {"accepted": True}


# -- faithfulness, grading, symmetrizer -------------------------------------------


def _faithfulness_check(label, c):
    rep = faithfulness_rank(nil_hecke(label), c["coeff_degree"], c["test_degree"])
    return _ok(rep.injective, {"rank": rep.rank, "spanning": rep.spanning})


def _grading_cases(label, opts):
    return [{"seed": opts.seed, "index": k} for k in range(opts.samples)]


def _random_homogeneous(H, rng):
    g = H.group
    w = rng.choice(g.elements_up_to_length(2))
    d = rng.randint(0, 2)
    f = random_poly(rng, H.nvars, d, 2)
    f = f.homogeneous_parts().get(f.degree(), f)
    return H.basis(w, f)


def _grading_check(label, c):
    H = nil_hecke(label)
    rng = random.Random(f"{label}:{c['seed']}:{c['index']}")
    a, b = _random_homogeneous(H, rng), _random_homogeneous(H, rng)
    (da,), (db,) = grade(a).keys(), grade(b).keys()
    prod = a * b
    degrees = list(grade(prod).keys())
    if prod.terms and degrees != [da + db]:
        return {"degrees": degrees, "expected": da + db}
    cval = rng.choice([0, 1, 2])
    spec = specialize(a, cval) * specialize(b, cval)
    return _ok(spec == specialize(prod, cval), {"hbar": cval})


def _symmetrizer_cases(label, opts):
    return [{"kind": "idempotent"}, {"kind": "central",
                                     "max_degree": opts.max_degree if opts.max_degree is not None else 4}]


def _symmetrizer_check(label, c):
    H = nil_hecke(label)
    e = H.symmetrizer()
    if c["kind"] == "idempotent":
        return _ok(e * e == e and H.spherical_project(e) == e)
    bad = centrality_failures(H, invariant_polynomials(H, c["max_degree"]))
    return _ok(not bad, {"broken": bad})


# -- Morita -------------------------------------------------------------------------


def _morita_cases(label, opts):
    r = build_root_datum(label).rank
    bound = opts.max_degree if opts.max_degree is not None else (2 if r == 1 else 4)
    return [{"bound": bound}]


def _morita_check(label, c):
    H = nil_hecke(label)
    try:
        pairs = morita_unit(H, c["bound"])
    except ValueError as err:
        return {"error": str(err)}
    return _ok(verify_morita_unit(H, pairs))


def _module_cases(label, opts):
    r = build_root_datum(label).rank
    top = opts.max_degree if opts.max_degree is not None else 6
    return [{"i": i, "top": top} for i in range(1, r + 1)]


def _module_check(label, c):
    rep = module_extension_check(sym_slice(weyl_group(label), c["top"]), c["i"])
    return _ok(rep.ok, {"report": rep.summary()})


def _single(label, opts):
    return [{}]


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("braid", "nil and braid relations of the affine generators",
          ("A1", "A2", "A3", "B2", "C2", "G2"), _braid_cases, _braid_check),
    Suite("words", "theta products agree across all reduced words",
          ("A1", "A2", "B2"), _elements, _words_check),
    Suite("defrel", "twisted commutation of generators with t_aff",
          ("A1", "A2", "A3", "B2", "G2"), _defrel_cases, _defrel_check),
    Suite("ddh", "commutation of t_aff with translations",
          ("A1", "A2", "A3", "B2", "G2"), _ddh_cases, _ddh_check),
    Suite("th0", "conjugating the root element by e^mu gives the affine operator",
          ("A1", "A2", "B2", "C2", "G2"), _single, _th0_check),
    Suite("phi2", "generator images at h = 0 and the torus identity",
          ("A1", "A2", "B2"), _phi_cases, _phi_check),
    Suite("membership", "random products accepted, corrupted elements rejected",
          ("A1", "A2"), _membership_cases, _membership_check),
    Suite("freeness", "theta basis elements peel to themselves, also at h = 0",
          ("A1", "A2", "B2", "G2"), _elements, _freeness_check),
    Suite("faithfulness", "x^a theta_w act injectively on bounded-degree polynomials",
          ("A1", "A2"),
          lambda label, o: [{"coeff_degree": 3, "test_degree": o.max_degree or 6}],
          _faithfulness_check),
    Suite("grading", "degrees add under products; specialization is multiplicative",
          ("A1", "A2"), _grading_cases, _grading_check),
    Suite("symmetrizer", "idempotent symmetrizer and central invariants",
          ("A1", "A2", "A3", "B2"), _symmetrizer_cases, _symmetrizer_check),
    Suite("morita-unit", "1 = sum h' e h'' in the finite nil-Hecke algebra",
          ("A1", "A2"), _morita_cases, _morita_check),
    Suite("module", "the extension criterion on truncated Sym t",
          ("A1", "A2"), _module_cases, _module_check),
]}


def run_case(suite: str, label: str, case: dict) -> dict | None:
    """Run one case; ``None`` on success, else a failure detail."""
    build_root_datum(label)
    return SUITES[suite].check(label, case)


def run_suite(name: str, label: str, opts: Options | None = None) -> SuiteReport:
    opts = opts or Options()
    suite = SUITES[name]
    build_root_datum(label)
    start = time.perf_counter()
    report = SuiteReport(name, label, 0)
    for case in suite.cases(label, opts):
        if time.perf_counter() - start > opts.budget_seconds:
            report.budget_exceeded = True
            break
        report.cases += 1
        detail = suite.check(label, case)
        if detail is not None:
            report.failures.append({"suite": name, "type": label, "case": case,
                                    "detail": detail})
    report.duration = time.perf_counter() - start
    return report
