"""Exhaustive grid search for generalized inverses.

This is the ground-truth oracle used to cross-check the linear-system engine:
it knows nothing about operator matrices or simplex tableaus and tests
``mu * nu * mu = mu`` for every candidate by direct convolution.

Candidates are Farey-style rational compositions: for each denominator
``q = 1..max_denominator`` every weight vector ``(k_1/q, …, k_m/q)`` with
nonnegative integers summing to ``q`` over the given support universe, in
deterministic order (``q`` ascending, compositions reverse-lexicographic, so
all mass on the first universe atom comes first).  Vectors whose entries
share a common factor with ``q`` already appeared at a smaller denominator
and are skipped.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import BackendMismatch, UniverseTooLarge
from .groups import GroupElement
from .measures import Measure, convolve, support

__all__ = [
    "DEFAULT_MAX_ATOMS",
    "DEFAULT_MAX_CANDIDATES",
    "candidate_universe",
    "brute_force_ginverse",
]

DEFAULT_MAX_ATOMS = 24
DEFAULT_MAX_CANDIDATES = 2_000_000


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer compositions in reverse-lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def candidate_universe(mu: Measure) -> tuple[GroupElement, ...]:
    """The smallest universe guaranteed to hold an inverse when one exists.

    For the canonically first support atom ``x``, any regular ``mu`` has a
    generalized inverse supported inside ``x^{-1} S(mu) x^{-1}`` (the
    Moore-Penrose support identity applied to the identity-supported
    translate).  When the identity is already in the support this is just
    ``S(mu)``.
    """
    x = mu.atoms[0][0]
    xinv = x.inverse()
    out: list[GroupElement] = []
    for s in support(mu):
        el = xinv * s * xinv
        if all(el != seen for seen in out):
            out.append(el)
    return tuple(sorted(out, key=lambda el: el.sort_key()))


def brute_force_ginverse(
    mu: Measure,
    max_denominator: int,
    support_universe: Sequence[GroupElement],
    *,
    max_atoms: int = DEFAULT_MAX_ATOMS,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> Measure | None:
    """First grid measure ``nu`` with ``mu * nu * mu = mu``, or None.

    ``support_universe`` fixes where candidate mass may sit (for example the
    subgroup generated by the support, or :func:`candidate_universe`).
    Raises UniverseTooLarge when the grid would exceed the atom or
    enumeration budgets.
    """
    if max_denominator < 1:
        raise ValueError(f"max_denominator must be >= 1, got {max_denominator}")
    universe: list[GroupElement] = []
    for el in support_universe:
        if el.group is not mu.group:
            raise BackendMismatch("universe element belongs to a different group")
        if all(el != seen for seen in universe):
            universe.append(el)
    m = len(universe)
    if m == 0:
        raise ValueError("support universe is empty")
    if m > max_atoms:
        raise UniverseTooLarge(f"universe has {m} atoms, budget is {max_atoms}")
    total = sum(math.comb(q + m - 1, m - 1) for q in range(1, max_denominator + 1))
    if total > max_candidates:
        raise UniverseTooLarge(
            f"grid holds {total} candidate vectors, budget is {max_candidates}"
        )
    for q in range(1, max_denominator + 1):
        for parts in _compositions(q, m):
            if math.gcd(q, *parts) > 1:
                continue  # already tested with a smaller denominator
            nu = Measure(
                mu.group,
                [(universe[i], Fraction(k, q)) for i, k in enumerate(parts) if k > 0],
            )
            if convolve(convolve(mu, nu), mu) == mu:
                return nu
    return None
