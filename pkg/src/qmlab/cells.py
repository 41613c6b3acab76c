"""Dyadic cell sets.

A cell at level k is the closed square of side 2**-k whose lower-left corner
sits at (x * 2**-k, y * 2**-k); we store only the lattice pair (x, y) and keep
the level on the containing set.  A ``CellSet`` is either a finite set of
cells at one level or the complement of one (``cofinite=True``), which is what
makes complements of compact regions representable.

Every operation here is pure; instances are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Cell = tuple[int, int]

_N8 = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))
_N4 = ((-1, 0), (1, 0), (0, -1), (0, 1))


def children_of(cell: Cell) -> tuple[Cell, Cell, Cell, Cell]:
    x, y = cell
    return ((2 * x, 2 * y), (2 * x + 1, 2 * y), (2 * x, 2 * y + 1), (2 * x + 1, 2 * y + 1))


def parent_of(cell: Cell) -> Cell:
    return (cell[0] >> 1, cell[1] >> 1)


def _refine_members(members: frozenset[Cell], steps: int) -> frozenset[Cell]:
    out = members
    for _ in range(steps):
        out = frozenset(c for m in out for c in children_of(m))
    return out


def _n8(cell: Cell) -> Iterator[Cell]:
    x, y = cell
    for dx, dy in _N8:
        yield (x + dx, y + dy)


def _n4(cell: Cell) -> Iterator[Cell]:
    x, y = cell
    for dx, dy in _N4:
        yield (x + dx, y + dy)


@dataclass(frozen=True)
class CellSet:
    """A finite or cofinite set of cells at a fixed dyadic level."""

    level: int
    members: frozenset[Cell]
    cofinite: bool = False

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("level must be >= 0")
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))

    # -- membership ------------------------------------------------------

    def __contains__(self, cell: Cell) -> bool:
        return (cell in self.members) != self.cofinite

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.members

    @property
    def is_all(self) -> bool:
        return self.cofinite and not self.members

    @property
    def finite(self) -> bool:
        return not self.cofinite

    def size(self) -> int:
        """Number of cells; only meaningful for finite sets."""
        if self.cofinite:
            raise ValueError("cofinite set has no finite size")
        return len(self.members)

    # -- level changes ----------------------------------------------------

    def refine(self, steps: int = 1) -> "CellSet":
        """Replace each cell by its 4**steps descendants; same point set."""
        if steps == 0:
            return self
        return CellSet(self.level + steps, _refine_members(self.members, steps), self.cofinite)

    def at_level(self, level: int) -> "CellSet":
        if level < self.level:
            raise ValueError("cannot coarsen with at_level; use coarsen()")
        return self.refine(level - self.level)

    def coarsen(self) -> "CellSet":
        """Canonical form: repeatedly merge complete sibling quads."""
        cur = self
        while cur.level > 0:
            groups: dict[Cell, int] = {}
            for c in cur.members:
                p = parent_of(c)
                groups[p] = groups.get(p, 0) + 1
            if groups and not all(n == 4 for n in groups.values()):
                break
            cur = CellSet(cur.level - 1, frozenset(groups), cur.cofinite)
        return cur

    # -- boolean algebra (handles cofinite operands) ----------------------

    def complement(self) -> "CellSet":
        return CellSet(self.level, self.members, not self.cofinite)

    @staticmethod
    def _align(a: "CellSet", b: "CellSet") -> tuple["CellSet", "CellSet"]:
        lev = max(a.level, b.level)
        return a.at_level(lev), b.at_level(lev)

    def union(self, other: "CellSet") -> "CellSet":
        a, b = CellSet._align(self, other)
        if not a.cofinite and not b.cofinite:
            return CellSet(a.level, a.members | b.members)
        if a.cofinite and b.cofinite:
            return CellSet(a.level, a.members & b.members, True)
        fin, cof = (a, b) if not a.cofinite else (b, a)
        return CellSet(a.level, cof.members - fin.members, True)

    def intersection(self, other: "CellSet") -> "CellSet":
        return self.complement().union(other.complement()).complement()

    def difference(self, other: "CellSet") -> "CellSet":
        return self.intersection(other.complement())

    def issubset(self, other: "CellSet") -> bool:
        a, b = CellSet._align(self, other)
        if not a.cofinite and not b.cofinite:
            return a.members <= b.members
        if not a.cofinite and b.cofinite:
            return not (a.members & b.members)
        if a.cofinite and b.cofinite:
            return b.members <= a.members
        return False  # cofinite inside finite: never (grid is infinite)

    def isdisjoint(self, other: "CellSet") -> bool:
        return self.intersection(other).is_empty

    # -- morphology -------------------------------------------------------

    def dilate8(self) -> "CellSet":
        """Cells whose closed 3x3 neighborhood meets the set."""
        if not self.cofinite:
            out = set(self.members)
            for c in self.members:
                out.update(_n8(c))
            return CellSet(self.level, frozenset(out))
        # complement of {c : N8[c] inside excluded set}
        excl = CellSet(self.level, self.members)
        return excl.erode8_as_universe().complement_within(self.level)

    def erode8(self) -> "CellSet":
        """Cells whose closed 3x3 neighborhood lies inside the set."""
        if not self.cofinite:
            keep = frozenset(
                c for c in self.members if all(n in self.members for n in _n8(c))
            )
            return CellSet(self.level, keep)
        dil = CellSet(self.level, self.members).dilate8()
        return CellSet(self.level, dil.members, True)

    def erode8_as_universe(self) -> "CellSet":
        # helper for cofinite dilation: {c : N8[c] subset of finite self}
        keep = frozenset(c for c in self.members if all(n in self.members for n in _n8(c)))
        return CellSet(self.level, keep)

    def complement_within(self, level: int) -> "CellSet":
        return CellSet(level, self.members, not self.cofinite)

    def touches4(self, other: "CellSet") -> bool:
        """True if some cell of self is edge-adjacent to a cell of other."""
        a, b = CellSet._align(self, other)
        if not a.cofinite and not b.cofinite:
            small, big = (a, b) if len(a.members) <= len(b.members) else (b, a)
            return any(n in big.members for c in small.members for n in _n4(c))
        if a.cofinite and b.cofinite:
            return True  # both contain all far cells
        fin, cof = (a, b) if not a.cofinite else (b, a)
        return any(n in cof for c in fin.members for n in _n4(c))

    # -- geometry helpers --------------------------------------------------

    def bbox(self) -> tuple[int, int, int, int] | None:
        """Bounding box (x0, y0, x1, y1) of the finite member list, or None."""
        if not self.members:
            return None
        xs = [c[0] for c in self.members]
        ys = [c[1] for c in self.members]
        return (min(xs), min(ys), max(xs), max(ys))

    def sorted_members(self) -> list[Cell]:
        return sorted(self.members)

    def __iter__(self) -> Iterator[Cell]:
        if self.cofinite:
            raise ValueError("cannot iterate a cofinite set")
        return iter(self.members)


def cellset(level: int, cells: Iterable[Cell], cofinite: bool = False) -> CellSet:
    return CellSet(level, frozenset(cells), cofinite)


def box_cells(x0: int, y0: int, x1: int, y1: int) -> frozenset[Cell]:
    """All cells of the inclusive lattice rectangle."""
    return frozenset((x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1))


def neighbors8(cell: Cell) -> list[Cell]:
    return list(_n8(cell))


def neighbors4(cell: Cell) -> list[Cell]:
    return list(_n4(cell))
