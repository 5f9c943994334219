"""
Braid relations and reduced words
=================================

In affine A2 the three Demazure generators satisfy braid relations of
length three, so every reduced word of an element gives the same product.
We check this for all elements of length at most five and then look at how
the basis behaves under the grading.
"""

# %%
import time

from nildaha.nilhecke import grade, nil_hecke, theta_word_invariance
from nildaha.nilhecke.theorems import braid_failures, defrel_failures

H = nil_hecke("A2")
W = H.group

print("braid orders:", {(i, j): W.braid_order(i, j)
                        for i in W.indices for j in W.indices if i < j})
print("broken braid or nil relations:", braid_failures(W))
print("broken commutation relations:", defrel_failures(W))

# %%
# Word invariance over the ball of radius five, including the length-zero
# twists.
start = time.perf_counter()
elements = W.elements_up_to_length(5)
many = 0
for w in elements:
    words = W.reduced_words(w)
    many += len(words) > 1
    assert theta_word_invariance(H, w, words)
print(f"{len(elements)} elements, {many} with several reduced words, "
      f"all consistent ({time.perf_counter() - start:.2f}s)")

# %%
# theta_w sits in degree -length(w), coordinates and h in degree +1, so a
# product of homogeneous elements is homogeneous.
a = H.basis(W.word([1, 2]), H.x(1))
b = H.basis(W.word([0]), H.x(2) * H.hbar())
print("deg a =", list(grade(a)), " deg b =", list(grade(b)),
      " deg ab =", list(grade(a * b)))
