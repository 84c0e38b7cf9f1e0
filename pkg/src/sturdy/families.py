"""Subsets and set families over a ground set [n], plus the ``.fam`` text format.

Subsets are stored as bitmasks (element ``e`` <-> bit ``e-1``), so the ground
set is capped at 64 elements and all set algebra is single-word arithmetic.
Families keep their members in a canonical order (lexicographic by element
list), which makes equality, serialization and witness reporting deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

MAX_GROUND = 64


def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Strictly increasing 1-based element tuple of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Subset:
    """An immutable subset of [n]; two subsets are equal iff their element lists are."""

    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> MAX_GROUND:
            raise ValueError("subset mask outside the 64-element ground cap")

    @classmethod
    def of(cls, *elements: int) -> "Subset":
        return cls.from_elements(elements)

    @classmethod
    def from_elements(cls, elements: Iterable[int]) -> "Subset":
        elems = tuple(elements)
        for e in elems:
            if not isinstance(e, int) or not 1 <= e <= MAX_GROUND:
                raise ValueError(f"element {e!r} outside [1, {MAX_GROUND}]")
        if len(set(elems)) != len(elems):
            raise ValueError("duplicate elements in subset")
        return cls(mask_of(elems))

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, e: int) -> bool:
        return e >= 1 and (self.mask >> (e - 1)) & 1 == 1

    def issubset(self, other: "Subset") -> bool:
        return self.mask & ~other.mask == 0

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.mask & ~other.mask)

    def __repr__(self) -> str:
        return f"Subset({' '.join(map(str, self.elements)) or '-'})"


EMPTY = Subset(0)


def _member_key(mask: int) -> tuple[int, ...]:
    return elements_of(mask)


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets of [n], not necessarily uniform.

    ``masks`` is canonical: deduplicated and sorted lexicographically by
    element list.  Construct through the classmethods, which canonicalize.
    """

    n: int
    masks: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground size {self.n} outside [1, {MAX_GROUND}]")
        full = (1 << self.n) - 1
        for m in self.masks:
            if m < 0 or m & ~full:
                raise ValueError("member outside the ground set")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        return cls(n, tuple(sorted(set(masks), key=_member_key)))

    @classmethod
    def from_subsets(cls, n: int, subsets: Iterable[Subset]) -> "SetFamily":
        return cls.from_masks(n, (s.mask for s in subsets))

    @classmethod
    def from_elements(cls, n: int, members: Iterable[Iterable[int]]) -> "SetFamily":
        return cls.from_masks(n, (Subset.from_elements(e).mask for e in members))

    @cached_property
    def _mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def union_mask(self) -> int:
        u = 0
        for m in self.masks:
            u |= m
        return u

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, s: Subset) -> bool:
        return s.mask in self._mask_set

    def has_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    @property
    def subsets(self) -> tuple[Subset, ...]:
        return tuple(Subset(m) for m in self.masks)

    def member_elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(m) for m in self.masks)

    @cached_property
    def uniform_k(self) -> int | None:
        """Common member size, or None if the family is empty or mixed."""
        sizes = {m.bit_count() for m in self.masks}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    @property
    def is_uniform(self) -> bool:
        return len(self.masks) == 0 or self.uniform_k is not None

    def __repr__(self) -> str:
        return f"SetFamily(n={self.n}, members={len(self.masks)})"


def family_key(family: SetFamily) -> tuple[tuple[int, ...], ...]:
    """Canonical comparison key: member element lists in canonical order."""
    return family.member_elements()


# ---------------------------------------------------------------------------
# Elementary family operators
# ---------------------------------------------------------------------------

def complement_family(family: SetFamily) -> SetFamily:
    """The family of member-wise complements within [n]."""
    full = family.full_mask
    return SetFamily.from_masks(family.n, (full ^ m for m in family.masks))


def link_trace(family: SetFamily, inside: Subset, window: Subset) -> SetFamily:
    """Members whose trace on ``window`` is exactly ``inside``, with the window removed.

    The ground size stays n; only the member sets are cut down.  Requires
    ``inside`` to be a subset of ``window``.
    """
    if inside.mask & ~window.mask:
        raise ValueError("inside must be a subset of window")
    wm, im = window.mask, inside.mask
    return SetFamily.from_masks(
        family.n, (m & ~wm for m in family.masks if m & wm == im)
    )


def link(family: SetFamily, i: int) -> SetFamily:
    """Members containing i, with i removed."""
    return link_trace(family, Subset.of(i), Subset.of(i))


def avoid(family: SetFamily, i: int) -> SetFamily:
    """Members avoiding i, unchanged."""
    return link_trace(family, EMPTY, Subset.of(i))


def link_avoid(family: SetFamily, i: int, j: int) -> SetFamily:
    """Members containing i and avoiding j, with i removed."""
    return link_trace(family, Subset.of(i), Subset.of(i, j))


def avoid_link(family: SetFamily, i: int, j: int) -> SetFamily:
    """Members avoiding i and containing j, with j removed."""
    return link_trace(family, Subset.of(j), Subset.of(i, j))


def restrict_family(family: SetFamily, window: Subset) -> SetFamily:
    """Distinct traces of the members on ``window`` (duplicates collapse)."""
    xm = window.mask
    return SetFamily.from_masks(family.n, {m & xm for m in family.masks})


def sym_diff_distance(a: Subset, b: Subset) -> int:
    """Size of the symmetric difference of two subsets of the same ground set."""
    return (a.mask ^ b.mask).bit_count()


# ---------------------------------------------------------------------------
# The .fam text format
# ---------------------------------------------------------------------------

class ParseError(ValueError):
    """Malformed ``.fam`` input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class FamilyDocument:
    """A parsed ``.fam`` file: header plus members in file order with line numbers."""

    n: int
    entries: tuple[tuple[int, int], ...]  # (line number, member mask)

    def to_family(self) -> SetFamily:
        return SetFamily.from_masks(self.n, (m for _, m in self.entries))


def _parse_member_line(line: str, lineno: int, n: int) -> int:
    if line == "-":
        return 0
    prev = 0
    mask = 0
    for tok in line.split():
        try:
            e = int(tok)
        except ValueError:
            raise ParseError(f"malformed element {tok!r}", lineno) from None
        if not 1 <= e <= n:
            raise ParseError(f"element {e} out of [1, {n}]", lineno)
        if e <= prev:
            raise ParseError("elements must be strictly increasing", lineno)
        prev = e
        mask |= 1 << (e - 1)
    return mask


def parse_document(text: str | bytes) -> FamilyDocument:
    """Parse ``.fam`` text into a document, rejecting duplicates and bad elements."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from None
    n: int | None = None
    entries: list[tuple[int, int]] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise ParseError("missing 'n=<int>' header", lineno)
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if not 1 <= n <= MAX_GROUND:
                raise ParseError(f"ground size {n} out of [1, {MAX_GROUND}]", lineno)
            continue
        mask = _parse_member_line(line, lineno, n)
        if mask in seen:
            raise ParseError("duplicate member", lineno)
        seen.add(mask)
        entries.append((lineno, mask))
    if n is None:
        raise ParseError("missing 'n=<int>' header")
    return FamilyDocument(n, tuple(entries))


def parse_family(text: str | bytes) -> SetFamily:
    """Parse ``.fam`` text into a canonical family."""
    return parse_document(text).to_family()


def serialize_family(family: SetFamily) -> str:
    """Canonical ``.fam`` text; ``parse_family`` inverts it exactly."""
    lines = [f"n={family.n}"]
    for m in family.masks:
        lines.append(" ".join(map(str, elements_of(m))) if m else "-")
    return "\n".join(lines) + "\n"
