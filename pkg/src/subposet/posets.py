"""Finite strict partial orders and the complete multilevel family.

A poset on p elements (indexed 0..p-1 internally, 1-based in files) stores,
for each element, the bitmask of elements strictly below it. The relation is
validated to be irreflexive, antisymmetric and transitively closed on
construction, so every Poset value in the program is a genuine strict order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
import re


class PosetParseError(ValueError):
    """Malformed poset file; carries the offending 1-based line number (0 if global)."""

    def __init__(self, message: str, line: int = 0):
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)
        self.line = line


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Poset:
    """Strict order on ``size`` elements; ``below[i]`` masks the elements < i."""

    size: int
    below: tuple[int, ...]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("poset needs at least one element")
        if len(self.below) != self.size:
            raise ValueError("below relation length does not match size")
        full = (1 << self.size) - 1
        for i, b in enumerate(self.below):
            if b < 0 or b & ~full:
                raise ValueError(f"below[{i}] references elements outside the poset")
            if b >> i & 1:
                raise ValueError(f"element {i + 1} is below itself")
            for j in _bits(b):
                if self.below[j] >> i & 1:
                    raise ValueError(f"elements {i + 1} and {j + 1} are mutually below")
                if self.below[j] & ~b:
                    raise ValueError("below relation is not transitively closed")

    def less(self, i: int, j: int) -> bool:
        """True when element i is strictly below element j."""
        return bool(self.below[j] >> i & 1)

    @cached_property
    def above(self) -> tuple[int, ...]:
        up = [0] * self.size
        for i, b in enumerate(self.below):
            for j in _bits(b):
                up[j] |= 1 << i
        return tuple(up)

    @cached_property
    def comparable(self) -> tuple[int, ...]:
        return tuple(b | a for b, a in zip(self.below, self.above))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """For each element, the number of elements on a longest chain strictly below it."""
        order = sorted(range(self.size), key=lambda i: self.below[i].bit_count())
        h = [0] * self.size
        for i in order:
            h[i] = max((h[j] + 1 for j in _bits(self.below[i])), default=0)
        return tuple(h)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        """Dual of heights: longest chain strictly above each element."""
        order = sorted(range(self.size), key=lambda i: self.above[i].bit_count())
        d = [0] * self.size
        for i in order:
            d[i] = max((d[j] + 1 for j in _bits(self.above[i])), default=0)
        return tuple(d)

    @cached_property
    def relation_count(self) -> int:
        return sum(b.bit_count() for b in self.below)


def dual(poset: Poset) -> Poset:
    """Reverse the order."""
    return Poset(poset.size, poset.above)


def longest_chain_size(poset: Poset) -> int:
    """Number of elements on a longest chain."""
    return max(poset.heights) + 1


def complete_multilevel(widths) -> Poset:
    """Complete multilevel poset for a width vector (bottom to top).

    Level i has widths[i] pairwise incomparable elements, and every element
    of a lower level lies below every element of a higher level. Element
    indices run level by level, bottom first.
    """
    widths = tuple(widths)
    if not widths or any(w < 1 for w in widths):
        raise ValueError(f"widths must be positive, got {widths}")
    below: list[int] = []
    lower = 0
    for w in widths:
        below.extend([lower] * w)
        start = len(below) - w
        lower |= ((1 << w) - 1) << start
    return Poset(len(below), tuple(below))


def chain_poset(k: int) -> Poset:
    """Total order on k elements."""
    if k < 1:
        raise ValueError("chain needs at least one element")
    return complete_multilevel([1] * k)


_NAMED = {
    "vee": (1, 2),
    "wedge": (2, 1),
    "butterfly": (2, 2),
}


def named_poset(name: str) -> Poset:
    try:
        return complete_multilevel(_NAMED[name])
    except KeyError:
        raise ValueError(f"unknown poset name {name!r}; known: {sorted(_NAMED)}") from None


_SIGNATURE_RE = re.compile(r"K\[(\d+(?:,\d+)*)\]")


def parse_signature(text: str) -> tuple[int, ...]:
    """Parse a width vector written as ``K[r,s1,...,t]``, e.g. ``K[2,4,2]``."""
    m = _SIGNATURE_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"malformed signature {text!r}; expected K[w1,...,wk]")
    widths = tuple(int(x) for x in m.group(1).split(","))
    if any(w < 1 for w in widths):
        raise ValueError(f"widths must be positive, got {widths}")
    return widths


def signature_str(widths) -> str:
    return "K[" + ",".join(str(w) for w in widths) + "]"


_ELEMENTS_RE = re.compile(r"elements=(\d+)")
_COVER_RE = re.compile(r"(\d+)<(\d+)")


def parse_poset(text: str) -> Poset:
    """Parse the poset file format (v1): ``elements=<p>`` then covers ``a<b``.

    The transitive closure of the covers is taken; cycles are rejected.
    Lines starting with '#' and blank lines are skipped.
    """
    size: int | None = None
    covers: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if size is None:
            m = _ELEMENTS_RE.fullmatch(line)
            if not m:
                raise PosetParseError(f"expected 'elements=<int>' header, got {line!r}", lineno)
            size = int(m.group(1))
            if size < 1:
                raise PosetParseError("need at least one element", lineno)
            continue
        m = _COVER_RE.fullmatch(line)
        if not m:
            raise PosetParseError(f"malformed cover {line!r}; expected 'a<b'", lineno)
        a, b = int(m.group(1)), int(m.group(2))
        for x in (a, b):
            if not 1 <= x <= size:
                raise PosetParseError(f"element {x} out of range [1, {size}]", lineno)
        if a == b:
            raise PosetParseError(f"self-relation {line!r}", lineno)
        covers.append((a - 1, b - 1))
    if size is None:
        raise PosetParseError("missing 'elements=<int>' header", 1)

    below = [0] * size
    for a, b in covers:
        below[b] |= 1 << a
    changed = True
    while changed:
        changed = False
        for i in range(size):
            acc = below[i]
            for j in _bits(below[i]):
                acc |= below[j]
            if acc != below[i]:
                below[i] = acc
                changed = True
    for i in range(size):
        if below[i] >> i & 1:
            raise PosetParseError(f"cycle detected through element {i + 1}")
    return Poset(size, tuple(below))


def serialize_poset(poset: Poset) -> str:
    """Emit the poset file text, listing the full strict relation as covers."""
    lines = [f"elements={poset.size}"]
    for j in range(poset.size):
        for i in _bits(poset.below[j]):
            lines.append(f"{i + 1}<{j + 1}")
    return "\n".join(lines) + "\n"
