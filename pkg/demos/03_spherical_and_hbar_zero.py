"""
The symmetrizer, Morita units and the picture at h = 0
======================================================

The symmetrizer e averages over the finite Weyl group. Invariant polynomials
are central, and 1 lies in the two-sided ideal generated by e. At h = 0 the
generators map into a skew group ring over the torus, where translations
survive as Laurent monomials.
"""

# %%
from nildaha.nilhecke import (invariant_polynomials, module_extension_check, morita_unit,
                              nil_hecke, phi_image, sym_slice, verify_morita_unit,
                              verify_phi2)
from nildaha.nilhecke.theorems import centrality_failures

for label in ("A1", "A2"):
    H = nil_hecke(label)
    e = H.symmetrizer()
    inv = invariant_polynomials(H, 3)
    print(f"{label}: e = {e}")
    print(f"    invariants up to degree 3: {[str(f) for f in inv]}")
    print(f"    e^2 == e: {e * e == e}, broken centrality: {centrality_failures(H, inv)}")

# %%
# Writing 1 = sum h' e h'' by an exact linear solve.
for label, bound in (("A1", 2), ("A2", 4)):
    H = nil_hecke(label)
    pairs = morita_unit(H, bound)
    print(f"{label}: {len(pairs)} pairs, verified: {verify_morita_unit(H, pairs)}")
    if label == "A1":
        for left, right in pairs:
            print(f"    ({left}) e ({right})")

# %%
# On Sym t, multiplication by a simple coroot maps invariants bijectively
# onto anti-invariants one degree up, which forces the Demazure operator.
rep = module_extension_check(sym_slice(nil_hecke("A2").group, 6), 1)
print(rep.summary())

# %%
# At h = 0 the affine generator picks up the torus monomial t^theta.
W = nil_hecke("A1").group
print("Phi(theta_1) =", phi_image(W, 1))
print("Phi(theta_0) =", phi_image(W, 0))
print("torus identity for (varpi, alpha):", verify_phi2(W, (1,), 1))
