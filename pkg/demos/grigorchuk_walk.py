"""
Words, sections, and measures on the Grigorchuk group
=====================================================

The self-similar group acting on the infinite binary tree is presented here by
reduced words over the letters a, b, c, d.  Every element has order a power of
two, each generator is its own inverse, and membership questions are answered
by recursing through tree sections.
"""

from convreg import (
    GrigorchukGroup,
    decide_regular,
    is_identity_word,
    reduce_word,
    uniform_on,
    word_order,
    word_sections,
)

# --- reduction: squares vanish and {b, c, d} folds like the Klein group ---
for raw in ("aabb", "bc", "bd", "cd", "abab", "adad"):
    print(f"reduce({raw!r}) = {reduce_word(raw)!r}")
print()

# --- sections: how a word acts on the two subtrees -------------------------
# A word w maps x.t to (x xor s).w'(t) where s says whether the top level is
# swapped and w' is the section at the subtree the input descends into.
for word in ("a", "b", "c", "d", "ab", "ad"):
    swap, w0, w1 = word_sections(word)
    print(f"word {word!r}: swaps top level = {swap}, sections = ({w0!r}, {w1!r})")
print()

# --- orders of the generator pairs -----------------------------------------
# Orders are computed by repeated squaring of words with an identity test at
# each step, so every answer comes with a power-of-two certificate.
for word in ("a", "b", "ad", "ac", "ab"):
    print(f"order({word}) = {word_order(word)}")
print()

# --- identity testing without a normal form --------------------------------
# dadad...  is a relation exactly when the letter count hits the order.
w = "ad" * word_order("ad")
print(f"{'ad' + '...' :>6} repeated to its order is trivial:", is_identity_word(w))
print("one copy short is not:", not is_identity_word("ad" * (word_order("ad") - 1)))
print()

# --- measures on an infinite torsion group ----------------------------------
# The involution a generates a two-element subgroup, so the uniform measure
# on {e, a} is idempotent and regular even though the ambient group is
# infinite.
grig = GrigorchukGroup()
mu = uniform_on(grig, [grig.element("a")])
verdict = decide_regular(mu)
print("uniform on {e, a}:", verdict.status)
print("moore-penrose:", verdict.certificate.moore_penrose)

# Adding b breaks closure: ab is a fresh element outside {e, a, b}.
nu = uniform_on(grig, [grig.element("a"), grig.element("b")])
open_verdict = decide_regular(nu)
print("uniform on {e, a, b}:", open_verdict.status, "/", open_verdict.reason)
print("detail:", open_verdict.detail)
