"""The first Grigorchuk group as a word backend.

Elements are reduced words over ``{a, b, c, d}``.  The four generators are
involutions acting on the infinite rooted binary tree through the wreath
recursion

    a = (1, 1) sigma        b = (a, c)        c = (a, d)        d = (1, b)

where ``sigma`` swaps the two subtrees and ``(g0, g1)`` acts as ``g0`` on the
left subtree and ``g1`` on the right.  Products compose like functions:
``(g h)(x) = g(h(x))``.

Word reduction applies ``xx -> empty`` and the Klein rules
``bc = cb = d``, ``bd = db = c``, ``cd = dc = b`` with a stack pass; the
system is length-reducing and confluent, so reduced words are the normal
forms of the free product C2 * (C2 x C2).  The Grigorchuk group is a proper
quotient of that free product, so distinct reduced words can still denote
equal elements (``adadadad`` is the identity).  Equality is therefore decided
semantically: ``u == v`` iff ``u * v^-1`` is the identity, and identity
testing recurses through the tree sections.  The recursion terminates because
a reduced word of length ``L >= 2`` either swaps the subtrees (so it is not
the identity) or has sections of length at most ``ceil((L+1)/2) < L`` for
``L >= 3``; length-2 reduced words always contain exactly one ``a`` and hence
swap.

Identity tests are memoized in a bounded, lock-guarded, module-level cache
(cleared wholesale when full), so group objects stay immutable and
thread-safe.
"""

from __future__ import annotations

import threading

from .errors import OrderBudgetExceeded, ParseError
from .groups import DEFAULT_ORDER_CAP, Group, GroupElement

__all__ = [
    "GrigorchukGroup",
    "reduce_word",
    "word_sections",
    "is_identity_word",
    "word_order",
]

_ALPHABET = "abcd"

# (swap, left section, right section) for each generator.
_LETTER_SECTIONS = {
    "a": (1, "", ""),
    "b": (0, "a", "c"),
    "c": (0, "a", "d"),
    "d": (0, "", "b"),
}

# Products of distinct letters from {b, c, d}.
_KLEIN = {
    ("b", "c"): "d",
    ("c", "b"): "d",
    ("b", "d"): "c",
    ("d", "b"): "c",
    ("c", "d"): "b",
    ("d", "c"): "b",
}

_CACHE_LIMIT = 1 << 18
_cache: dict[str, bool] = {}
_cache_lock = threading.Lock()


def reduce_word(letters: str) -> str:
    """Normal form of a word: cancel squares, fold Klein pairs, repeat."""
    out: list[str] = []
    for ch in letters:
        if ch not in _ALPHABET:
            raise ParseError(f"unknown generator {ch!r} (alphabet is a, b, c, d)")
        out.append(ch)
        while len(out) >= 2:
            x, y = out[-2], out[-1]
            if x == y:
                del out[-2:]
            elif (x, y) in _KLEIN:
                folded = _KLEIN[x, y]
                del out[-2:]
                out.append(folded)
            else:
                break
    return "".join(out)


def word_sections(word: str) -> tuple[bool, str, str]:
    """Tree-level decomposition ``w = (w0, w1) sigma^swap`` of a reduced word.

    Letters are absorbed left to right: appending a letter l with sections
    (l0, l1) to an accumulator with swap s routes l0/l1 to the sections
    straight or crossed according to s, then xors the swaps.  The returned
    sections are reduced.
    """
    swap = 0
    left: list[str] = []
    right: list[str] = []
    for ch in word:
        lswap, l0, l1 = _LETTER_SECTIONS[ch]
        if swap:
            left.append(l1)
            right.append(l0)
        else:
            left.append(l0)
            right.append(l1)
        swap ^= lswap
    return bool(swap), reduce_word("".join(left)), reduce_word("".join(right))


def is_identity_word(word: str) -> bool:
    """Whether a reduced word denotes the identity automorphism."""
    if word == "":
        return True
    if len(word) == 1:
        return False
    with _cache_lock:
        cached = _cache.get(word)
    if cached is not None:
        return cached
    swap, w0, w1 = word_sections(word)
    result = (not swap) and is_identity_word(w0) and is_identity_word(w1)
    with _cache_lock:
        if len(_cache) >= _CACHE_LIMIT:
            _cache.clear()
        _cache[word] = result
    return result


def word_order(word: str, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Order of a reduced word by repeated squaring.

    Every element of the group has order a power of two, so squaring until
    the identity appears finds the exact order.
    """
    if is_identity_word(word):
        return 1
    acc = word
    k = 1
    while True:
        acc = reduce_word(acc + acc)
        k *= 2
        if k > cap:
            raise OrderBudgetExceeded(f"order of {word!r} exceeds cap {cap}")
        if is_identity_word(acc):
            return k


class GrigorchukGroup(Group):
    """Backend handle for the first Grigorchuk group; payloads are reduced words."""

    backend = "grigorchuk"
    unique_keys = False

    def _mul(self, x: str, y: str) -> str:
        return reduce_word(x + y)

    def _inv(self, x: str) -> str:
        # Generators are involutions, so inversion reverses the word; the
        # reverse of a reduced word is reduced.
        return x[::-1]

    def _identity(self) -> str:
        return ""

    def _sort_key(self, x: str) -> tuple[int, str]:
        return (len(x), x)

    def _eq(self, x: str, y: str) -> bool:
        if x == y:
            return True
        return is_identity_word(reduce_word(x + y[::-1]))

    def _hash(self, x: str) -> int:
        # An equality-invariant fingerprint: the image in the abelianization
        # (C2)^3, with a -> (1,0,0), b -> (0,1,0), c -> (0,0,1), d -> (0,1,1).
        pa = x.count("a") & 1
        pb = (x.count("b") + x.count("d")) & 1
        pc = (x.count("c") + x.count("d")) & 1
        return hash((pa, pb, pc))

    def order_of(self, x: str, cap: int) -> int:
        return word_order(x, cap)

    def parse_element(self, text: str) -> GroupElement:
        s = text.strip()
        if s == "e":
            return self.identity()
        return self.element(reduce_word(s))

    def format_payload(self, x: str) -> str:
        return x if x else "e"
