"""Group backends and element arithmetic.

Three interchangeable backends share one element model:

* :class:`CayleyGroup` — a finite group given by its full multiplication table,
  with the identity pinned at index 0;
* :class:`PermGroup` — permutations of ``{0, …, degree-1}`` stored as image
  tuples, entered in cycle notation;
* the Grigorchuk backend (see :mod:`convreg.grigorchuk`) — reduced words over
  ``{a, b, c, d}``.

Elements are lightweight handles ``(group, payload)``.  Payloads are canonical
for the table and permutation backends (equal elements have identical
payloads); the word backend resolves equality semantically.  Elements from
different group objects never mix: ``multiply`` raises
:class:`~convreg.errors.BackendMismatch`.
"""

from __future__ import annotations

import abc
from collections import deque
from typing import Any, ClassVar, Iterable, Sequence

from .errors import (
    BackendMismatch,
    CapExceeded,
    ClosureBudgetExceeded,
    NotAGroup,
    OrderBudgetExceeded,
    ParseError,
)

__all__ = [
    "DEFAULT_ORDER_CAP",
    "DEFAULT_CLOSURE_CAP",
    "Group",
    "GroupElement",
    "CayleyGroup",
    "PermGroup",
    "multiply",
    "inverse",
    "identity",
    "order",
    "closure",
    "enumerate_group",
    "load_cayley",
    "load_perm",
    "load_group",
    "content_lines",
]

DEFAULT_ORDER_CAP = 2**16
DEFAULT_CLOSURE_CAP = 4096


class Group(abc.ABC):
    """A group backend: payload arithmetic plus parsing and formatting."""

    backend: ClassVar[str]
    #: True when payloads are canonical, i.e. payload equality/hashing decides
    #: element equality.  The word backend sets this to False.
    unique_keys: ClassVar[bool] = True

    @abc.abstractmethod
    def _mul(self, x: Any, y: Any) -> Any:
        """Product of two payloads."""

    @abc.abstractmethod
    def _inv(self, x: Any) -> Any:
        """Inverse payload."""

    @abc.abstractmethod
    def _identity(self) -> Any:
        """Identity payload."""

    @abc.abstractmethod
    def _sort_key(self, x: Any) -> Any:
        """Total-order key; the identity always sorts first."""

    @abc.abstractmethod
    def parse_element(self, text: str) -> "GroupElement":
        """Parse backend-specific element syntax (``e`` is the identity)."""

    @abc.abstractmethod
    def format_payload(self, x: Any) -> str:
        """Inverse of :meth:`parse_element`, up to canonical spelling."""

    # Equality/hash on payloads; the word backend overrides both.
    def _eq(self, x: Any, y: Any) -> bool:
        return x == y

    def _hash(self, x: Any) -> int:
        return hash(x)

    def element(self, payload: Any) -> "GroupElement":
        return GroupElement(self, payload)

    def identity(self) -> "GroupElement":
        return self.element(self._identity())

    def order_of(self, x: Any, cap: int) -> int:
        """Order of a payload by iterated multiplication with equality tests."""
        e = self._identity()
        acc = x
        k = 1
        while not self._eq(acc, e):
            if k >= cap:
                raise OrderBudgetExceeded(
                    f"order of {self.format_payload(x)} exceeds cap {cap}"
                )
            acc = self._mul(acc, x)
            k += 1
        return k

    def enumerate_elements(self, cap: int) -> tuple["GroupElement", ...]:
        """All group elements in canonical order; CapExceeded if impossible."""
        raise CapExceeded(f"{self.backend} backend is not enumerable")


class GroupElement:
    """A group element: a backend handle plus an immutable payload."""

    __slots__ = ("group", "payload")

    def __init__(self, group: Group, payload: Any):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name: str, value: Any):
        raise AttributeError("GroupElement is immutable")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def inverse(self) -> "GroupElement":
        return self.group.element(self.group._inv(self.payload))

    def order(self, cap: int = DEFAULT_ORDER_CAP) -> int:
        return self.group.order_of(self.payload, cap)

    def sort_key(self) -> Any:
        return self.group._sort_key(self.payload)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.group is not other.group:
            return False
        return self.group._eq(self.payload, other.payload)

    def __hash__(self) -> int:
        return hash((id(self.group), self.group._hash(self.payload)))

    def __repr__(self) -> str:
        return f"<{self.group.backend}:{self.group.format_payload(self.payload)}>"

    def __str__(self) -> str:
        return self.group.format_payload(self.payload)


def _require_same_group(a: GroupElement, b: GroupElement) -> None:
    if a.group is not b.group:
        raise BackendMismatch(
            f"elements from different groups: {a.group.backend} vs {b.group.backend}"
        )


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group product ``a * b``."""
    _require_same_group(a, b)
    return a.group.element(a.group._mul(a.payload, b.payload))


def inverse(a: GroupElement) -> GroupElement:
    """Group inverse."""
    return a.inverse()


def identity(group: Group) -> GroupElement:
    """Identity element of the given group."""
    return group.identity()


def order(a: GroupElement, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Smallest ``k >= 1`` with ``a**k = e``; OrderBudgetExceeded past ``cap``."""
    return a.order(cap)


# ---------------------------------------------------------------------------
# Cayley-table backend


class CayleyGroup(Group):
    """Finite group presented by its multiplication table.

    ``table[i][j]`` is the index of the product of elements ``i`` and ``j``;
    index 0 is the identity.  The table is fully validated on construction:
    every row and column must be a permutation, row/column 0 must fix
    everything, and associativity is checked (exhaustively up to order 64,
    on a deterministic stride sample beyond that).
    """

    backend = "cayley"

    def __init__(self, table: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if n == 0:
            raise NotAGroup("empty multiplication table")
        full = set(range(n))
        for i, row in enumerate(rows):
            if len(row) != n:
                raise NotAGroup(f"row {i} has {len(row)} entries, expected {n}")
            if set(row) != full:
                raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            col = {rows[i][j] for i in range(n)}
            if col != full:
                raise NotAGroup(f"column {j} is not a permutation of 0..{n - 1}")
        for k in range(n):
            if rows[0][k] != k:
                raise NotAGroup(f"identity axiom fails: table[0][{k}] = {rows[0][k]}")
            if rows[k][0] != k:
                raise NotAGroup(f"identity axiom fails: table[{k}][0] = {rows[k][0]}")
        self.table = rows
        self.order = n
        self._inverses = tuple(row.index(0) for row in rows)
        self._check_associativity()

    def _check_associativity(self) -> None:
        n = self.order
        t = self.table
        idx = range(n) if n <= 64 else range(0, n, max(1, n // 64))
        for i in idx:
            for j in idx:
                for k in idx:
                    if t[t[i][j]][k] != t[i][t[j][k]]:
                        raise NotAGroup(
                            f"associativity fails at (i, j, k) = ({i}, {j}, {k})"
                        )

    def _mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def _inv(self, x: int) -> int:
        return self._inverses[x]

    def _identity(self) -> int:
        return 0

    def _sort_key(self, x: int) -> int:
        return x

    def parse_element(self, text: str) -> GroupElement:
        s = text.strip()
        if s == "e":
            return self.identity()
        try:
            i = int(s)
        except ValueError:
            raise ParseError(f"expected an element index, got {s!r}") from None
        if not 0 <= i < self.order:
            raise ParseError(f"element index {i} out of range 0..{self.order - 1}")
        return self.element(i)

    def format_payload(self, x: int) -> str:
        return str(x)

    def enumerate_elements(self, cap: int) -> tuple[GroupElement, ...]:
        if self.order > cap:
            raise CapExceeded(f"group order {self.order} exceeds cap {cap}")
        return tuple(self.element(i) for i in range(self.order))


# ---------------------------------------------------------------------------
# Permutation backend


class PermGroup(Group):
    """Permutations of ``{0, .., degree-1}``; payloads are image tuples.

    The group object carries a list of generators (used for enumeration and
    closure); arithmetic works for any permutation of the right degree.
    Products compose like functions: ``(p * q)(x) = p(q(x))``.
    """

    backend = "perm"

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        if degree < 1:
            raise NotAGroup(f"degree must be >= 1, got {degree}")
        self.degree = degree
        gens = []
        for gi, g in enumerate(generators):
            img = tuple(int(v) for v in g)
            if len(img) != degree or set(img) != set(range(degree)):
                raise NotAGroup(f"generator {gi} is not a bijection of 0..{degree - 1}")
            gens.append(img)
        self.generators = tuple(gens)

    def _mul(self, x: tuple, y: tuple) -> tuple:
        return tuple(x[y[i]] for i in range(self.degree))

    def _inv(self, x: tuple) -> tuple:
        out = [0] * self.degree
        for i, v in enumerate(x):
            out[v] = i
        return tuple(out)

    def _identity(self) -> tuple:
        return tuple(range(self.degree))

    def _sort_key(self, x: tuple) -> tuple:
        return x

    def parse_element(self, text: str) -> GroupElement:
        return self.element(_parse_cycles(text, self.degree))

    def format_payload(self, x: tuple) -> str:
        return _format_cycles(x)

    def generator_elements(self) -> tuple[GroupElement, ...]:
        return tuple(self.element(g) for g in self.generators)

    def enumerate_elements(self, cap: int) -> tuple[GroupElement, ...]:
        try:
            return closure(self, self.generator_elements(), cap=cap)
        except ClosureBudgetExceeded as exc:
            raise CapExceeded(str(exc)) from None


def _parse_cycles(text: str, degree: int) -> tuple:
    """Parse cycle notation like ``(0 1 2)(3 4)`` into an image tuple.

    Fixed points may be omitted; ``e`` and ``()`` denote the identity.
    Cycles compose like functions (rightmost cycle applied first), which is
    immaterial for the usual disjoint-cycle spelling.
    """
    s = text.strip()
    if s in ("e", "()"):
        return tuple(range(degree))
    if not s.startswith("("):
        raise ParseError(f"expected cycle notation, got {s!r}")
    cycles = []
    pos = 0
    while pos < len(s):
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"unexpected {ch!r} in cycle notation {s!r}")
        end = s.find(")", pos)
        if end < 0:
            raise ParseError(f"unbalanced parenthesis in {s!r}")
        body = s[pos + 1 : end].replace(",", " ").split()
        try:
            cyc = [int(v) for v in body]
        except ValueError:
            raise ParseError(f"non-integer entry in cycle {s[pos:end + 1]!r}") from None
        for v in cyc:
            if not 0 <= v < degree:
                raise ParseError(f"point {v} out of range 0..{degree - 1}")
        if len(set(cyc)) != len(cyc):
            raise ParseError(f"repeated point in cycle {s[pos:end + 1]!r}")
        if cyc:
            cycles.append(cyc)
        pos = end + 1
    img = list(range(degree))
    for cyc in cycles:
        step = list(range(degree))
        for i, v in enumerate(cyc):
            step[v] = cyc[(i + 1) % len(cyc)]
        img = [img[step[i]] for i in range(degree)]
    return tuple(img)


def _format_cycles(img: tuple) -> str:
    """Image tuple to cycle notation; fixed points omitted, identity is ``e``."""
    n = len(img)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or img[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = img[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = img[j]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


# ---------------------------------------------------------------------------
# Generated subgroups and enumeration


def closure(
    group: Group,
    generators: Sequence[GroupElement],
    cap: int = DEFAULT_CLOSURE_CAP,
) -> tuple[GroupElement, ...]:
    """The subgroup generated by ``generators``, as a canonically sorted tuple.

    Breadth-first products of generators; on torsion groups inverses are
    positive powers, so generator words reach the whole subgroup.  Raises
    ClosureBudgetExceeded once more than ``cap`` distinct elements appear
    (the Grigorchuk generators b, c together with a generate an infinite
    group, for example).
    """
    for g in generators:
        if g.group is not group:
            raise BackendMismatch("generator from a different group")
    e = group.identity()
    found = {e}
    frontier = deque([e])
    while frontier:
        x = frontier.popleft()
        for g in generators:
            y = x * g
            if y not in found:
                found.add(y)
                if len(found) > cap:
                    raise ClosureBudgetExceeded(
                        f"generated subgroup exceeds cap {cap}"
                    )
                frontier.append(y)
    return tuple(sorted(found, key=lambda el: el.sort_key()))


def enumerate_group(group: Group, cap: int = DEFAULT_CLOSURE_CAP) -> tuple[GroupElement, ...]:
    """Every element of the group, canonically ordered; CapExceeded if too big."""
    return group.enumerate_elements(cap)


# ---------------------------------------------------------------------------
# File formats


def content_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty, non-comment lines as ``(1-based line number, stripped text)``.

    Only 7-bit printable input is accepted; ``#`` starts a whole-line comment.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for ch in raw:
            if ord(ch) > 126 or (ord(ch) < 32 and ch != "\t"):
                raise ParseError(f"non-printable or non-ASCII character {ch!r}", lineno)
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def load_cayley(text: str) -> CayleyGroup:
    """Parse a ``cayley <n>`` header plus n table rows."""
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty group file")
    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "cayley":
        raise ParseError(f"expected 'cayley <n>' header, got {header!r}", lineno)
    try:
        n = int(tokens[1])
    except ValueError:
        raise ParseError(f"bad group order {tokens[1]!r}", lineno) from None
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} table rows, found {len(body)}")
    table = []
    for lineno, line in body:
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise ParseError(f"non-integer table entry in {line!r}", lineno) from None
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", lineno)
        table.append(row)
    return CayleyGroup(table)


def load_perm(text: str) -> PermGroup:
    """Parse a ``perm <degree>`` header plus one generator per line."""
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty group file")
    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "perm":
        raise ParseError(f"expected 'perm <degree>' header, got {header!r}", lineno)
    try:
        degree = int(tokens[1])
    except ValueError:
        raise ParseError(f"bad degree {tokens[1]!r}", lineno) from None
    group = PermGroup(degree)
    gens = []
    for lineno, line in lines[1:]:
        try:
            gens.append(group.parse_element(line).payload)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return PermGroup(degree, gens)


def load_group(text: str) -> Group:
    """Parse any group file; the header keyword picks the backend."""
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty group file")
    lineno, header = lines[0]
    keyword = header.split()[0]
    if keyword == "cayley":
        return load_cayley(text)
    if keyword == "perm":
        return load_perm(text)
    if keyword == "grigorchuk":
        if header.split() != ["grigorchuk"]:
            raise ParseError(f"unexpected tokens after 'grigorchuk': {header!r}", lineno)
        if len(lines) > 1:
            raise ParseError("unexpected content after 'grigorchuk' header", lines[1][0])
        from .grigorchuk import GrigorchukGroup

        return GrigorchukGroup()
    raise ParseError(
        f"unknown group kind {keyword!r} (expected cayley, perm, or grigorchuk)", lineno
    )
