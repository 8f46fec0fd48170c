"""Finitely supported probability measures under convolution.

A measure is a formal convex combination of point masses with exact rational
weights: atoms are ``(element, Fraction)`` pairs, every weight is strictly
positive, and the weights sum to one.  Atoms are merged and sorted in the
backend's canonical order at construction.  Equality is structural for the
table and permutation backends; for the word backend it matches atoms
semantically, since distinct reduced words can denote the same element.

Convolution multiplies supports pointwise and weights multiplicatively:
``(mu * nu)({x}) = sum of mu({g}) nu({h}) over g h = x``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BackendMismatch, ParseError
from .groups import Group, GroupElement, content_lines

__all__ = [
    "Measure",
    "dirac",
    "convolve",
    "uniform_on",
    "translate",
    "support",
    "is_support_closed",
    "load_measure",
    "measure_to_json",
    "measure_from_json",
    "format_weight",
]


def _merge_atoms(
    group: Group, pairs: Iterable[tuple[GroupElement, Fraction]]
) -> list[tuple[GroupElement, Fraction]]:
    """Combine weights of equal elements; keep the canonically least payload."""
    if group.unique_keys:
        acc: dict = {}
        for el, w in pairs:
            key = el.payload
            acc[key] = acc.get(key, Fraction(0)) + w
        merged = [(group.element(key), w) for key, w in acc.items()]
    else:
        merged = []
        for el, w in pairs:
            for i, (rep, rw) in enumerate(merged):
                if rep == el:
                    keep = el if el.sort_key() < rep.sort_key() else rep
                    merged[i] = (keep, rw + w)
                    break
            else:
                merged.append((el, w))
    merged.sort(key=lambda item: item[0].sort_key())
    return merged


class Measure:
    """An immutable finitely supported probability measure."""

    __slots__ = ("group", "atoms")

    def __init__(self, group: Group, pairs: Iterable[tuple[GroupElement, Fraction]]):
        checked = []
        for el, w in pairs:
            if el.group is not group:
                raise BackendMismatch("atom element belongs to a different group")
            w = Fraction(w)
            if w <= 0:
                raise ValueError(f"weights must be positive, got {w}")
            checked.append((el, w))
        merged = _merge_atoms(group, checked)
        total = sum((w for _, w in merged), Fraction(0))
        if total != 1:
            raise ValueError(f"weights must sum to 1, got {total}")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "atoms", tuple(merged))

    def __setattr__(self, name, value):
        raise AttributeError("Measure is immutable")

    def weight_of(self, el: GroupElement) -> Fraction:
        """Weight at a single element (zero off the support)."""
        if self.group.unique_keys:
            for atom, w in self.atoms:
                if atom.payload == el.payload:
                    return w
            return Fraction(0)
        for atom, w in self.atoms:
            if atom == el:
                return w
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        if self.group is not other.group or len(self.atoms) != len(other.atoms):
            return False
        if self.group.unique_keys:
            return all(
                a.payload == b.payload and wa == wb
                for (a, wa), (b, wb) in zip(self.atoms, other.atoms)
            )
        return all(other.weight_of(el) == w for el, w in self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{el}:{w}" for el, w in self.atoms)
        return f"Measure({inner})"


def dirac(g: GroupElement) -> Measure:
    """Point mass at ``g``."""
    return Measure(g.group, [(g, Fraction(1))])


def convolve(mu: Measure, nu: Measure) -> Measure:
    """Convolution product of two measures on the same group."""
    if mu.group is not nu.group:
        raise BackendMismatch("cannot convolve measures on different groups")
    pairs = [(g * h, wg * wh) for g, wg in mu.atoms for h, wh in nu.atoms]
    return Measure(mu.group, pairs)


def uniform_on(group: Group, elements: Iterable[GroupElement]) -> Measure:
    """Uniform measure on ``{e} ∪ elements`` (the identity is always included)."""
    pool = [group.identity()]
    for el in elements:
        if el.group is not group:
            raise BackendMismatch("element belongs to a different group")
        if all(el != seen for seen in pool):
            pool.append(el)
    w = Fraction(1, len(pool))
    return Measure(group, [(el, w) for el in pool])


def translate(mu: Measure, g: GroupElement, h: GroupElement) -> Measure:
    """Two-sided translate ``dirac(g) * mu * dirac(h)``."""
    if g.group is not mu.group or h.group is not mu.group:
        raise BackendMismatch("translation elements belong to a different group")
    return Measure(mu.group, [(g * x * h, w) for x, w in mu.atoms])


def support(mu: Measure) -> tuple[GroupElement, ...]:
    """Support atoms in canonical order (the identity first when present)."""
    return tuple(el for el, _ in mu.atoms)


def is_support_closed(mu: Measure) -> bool:
    """Whether the support is closed under multiplication."""
    elems = support(mu)
    if mu.group.unique_keys:
        keys = {el.payload for el in elems}
        return all((g * h).payload in keys for g in elems for h in elems)
    return all(any((g * h) == s for s in elems) for g in elems for h in elems)


# ---------------------------------------------------------------------------
# File and JSON formats


def load_measure(text: str, group: Group) -> Measure:
    """Parse ``<element> <num>/<den>`` lines into a measure on ``group``.

    Rejects nonpositive weights and weight sums different from one, with the
    exact rational in the diagnostic.
    """
    pairs = []
    total = Fraction(0)
    for lineno, line in content_lines(text):
        parts = line.rsplit(None, 1)
        if len(parts) != 2:
            raise ParseError(f"expected '<element> <num>/<den>', got {line!r}", lineno)
        element_text, weight_text = parts
        try:
            weight = Fraction(weight_text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad weight {weight_text!r}", lineno) from None
        if weight <= 0:
            raise ParseError(f"nonpositive weight {weight}", lineno)
        try:
            el = group.parse_element(element_text)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        pairs.append((el, weight))
        total += weight
    if not pairs:
        raise ParseError("empty measure file")
    if total != 1:
        raise ParseError(f"weights sum to {total}, expected 1")
    return Measure(group, pairs)


def format_weight(w: Fraction) -> str:
    """Exact ``num/den`` spelling (denominator kept even when it is 1)."""
    return f"{w.numerator}/{w.denominator}"


def measure_to_json(mu: Measure) -> dict:
    """JSON-ready dict; weights as exact ``num/den`` strings."""
    return {
        "backend": mu.group.backend,
        "atoms": [
            {"element": str(el), "weight": format_weight(w)} for el, w in mu.atoms
        ],
    }


def measure_from_json(obj: dict, group: Group) -> Measure:
    """Inverse of :func:`measure_to_json` given the group context."""
    if obj.get("backend") != group.backend:
        raise BackendMismatch(
            f"measure backend {obj.get('backend')!r} does not match group "
            f"backend {group.backend!r}"
        )
    pairs = []
    for atom in obj["atoms"]:
        el = group.parse_element(atom["element"])
        pairs.append((el, Fraction(atom["weight"])))
    return Measure(group, pairs)
