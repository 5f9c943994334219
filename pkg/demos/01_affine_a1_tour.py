"""
A tour of affine A1
===================

The smallest interesting case. The torus coordinate is a single variable
``x1`` and the affine direction is ``h``. We build the extended affine Weyl
group, look at the Demazure operators, and run the membership test on a few
elements of the skew group algebra.
"""

# %%
# The root datum and the group. Translations are by the weight lattice, so
# the length-zero subgroup has two elements.
from nildaha.exactalg import RootFraction, parse_poly
from nildaha.nilhecke import NotInNilHecke, nil_hecke
from nildaha.skew import SkewElement, theta_simple
from nildaha.weyl import weyl_group

W = weyl_group("A1")
print("positive roots:", [b.simple_coords for b in W.datum.positive_roots])
print("length-zero elements:", W.omega)

# %%
# s_0 is the reflection in the hyperplane x = h, so s_0 s_1 is translation
# by the simple root, which has length 2. Translation by the fundamental
# weight has length 1: it is a length-zero element times s_1.
t_alpha = W.s(0) * W.s(1)
print("s0 s1 =", t_alpha, "length", W.length(t_alpha))
t_w = W.translation((1,))
print("reduced factorization of t_varpi:", W.reduced_word(t_w))

# %%
# Demazure operators act on polynomials in x1 and h.
x = parse_poly("x1", 2)
print("theta_1 x   =", theta_simple(W, 1).act(x))
print("theta_1 x^2 =", theta_simple(W, 1).act(x * x))
print("theta_0 x^2 =", theta_simple(W, 0).act(x * x))

# %%
# Membership peels the longest support element first. A group element is a
# member; a bare reciprocal of the root is not, and the witness says where
# the peeling got stuck.
H = nil_hecke("A1")
print("[s1] =", H.membership(SkewElement.element(W, W.s(1))))
print("e^varpi =", H.membership(SkewElement.element(W, t_w)))
try:
    H.membership(SkewElement.scalar(W, RootFraction.inverse_form((1, 0))))
except NotInNilHecke as err:
    print("rejected:", err)

# %%
# Products are computed in the skew algebra and brought back to normal form.
print("theta_1 * x =", H.gen(1) * H.poly(H.x(1)))
print("theta_0 * theta_1 =", H.gen(0) * H.gen(1))
