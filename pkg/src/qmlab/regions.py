"""Exact open/closed grid regions of the plane and their algebra.

A region is a cell set plus a kind.  The normative point-set semantics:

* ``CLOSED`` region K(S): points belonging to the closure of at least one
  cell of S (equivalently, points one of whose incident cells is in S).
* ``OPEN`` region U(T): points all of whose incident cells lie in T, where
  the incident cells of a point are the 1, 2, or 4 cells whose closure
  contains it.

Complements swap kinds: X \\ K(S) = U(S^c) and X \\ U(T) = K(T^c).  All
predicates below (subset, disjoint, disjoint_union, components, solidity)
are exact for these semantics; the test suite cross-checks them against a
dense point-sampling oracle.

Connectivity duality is forced by the semantics: closures of two cells meet
iff the cells are 8-adjacent, while interiors communicate only across shared
edges, so CLOSED regions use 8-connectivity and OPEN regions 4-connectivity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .cells import (
    Cell,
    CellSet,
    box_cells,
    cellset,
    neighbors4,
    neighbors8,
)


class Kind(Enum):
    OPEN = "open"
    CLOSED = "closed"


class RegionError(Exception):
    """Precondition violation in a region operation."""


class CoverViolation(RegionError):
    """A point of the compact is certified outside the open cover."""

    def __init__(self, point: tuple[Fraction, Fraction]):
        self.point = point
        super().__init__(f"cover violated at {point}")


class AssignmentDepthExceeded(RegionError):
    """halmos_split hit its refinement cap before all cells were assignable."""


@dataclass(frozen=True)
class GridRegion:
    cells: CellSet
    kind: Kind

    @property
    def level(self) -> int:
        return self.cells.level

    @property
    def is_open(self) -> bool:
        return self.kind is Kind.OPEN

    @property
    def is_closed(self) -> bool:
        return self.kind is Kind.CLOSED

    @property
    def is_compact(self) -> bool:
        return self.is_closed and self.cells.finite

    @property
    def is_bounded_open(self) -> bool:
        return self.is_open and self.cells.finite

    @property
    def is_empty(self) -> bool:
        return self.cells.is_empty

    @property
    def is_all(self) -> bool:
        return self.cells.is_all

    def refine(self, steps: int = 1) -> "GridRegion":
        return GridRegion(self.cells.refine(steps), self.kind)

    def at_level(self, level: int) -> "GridRegion":
        return GridRegion(self.cells.at_level(level), self.kind)

    def canonical(self) -> "GridRegion":
        return GridRegion(self.cells.coarsen(), self.kind)

    def key(self):
        """Hashable identity of the point set (kind-tagged, coarsest level).
        Empty and全 plane collapse across kinds."""
        c = self.cells.coarsen()
        if c.is_empty:
            return ("empty",)
        if c.is_all:
            return ("all",)
        return (self.kind.value, c.level, c.cofinite, tuple(sorted(c.members)))

    def __repr__(self):
        return f"GridRegion({format_region(self)!r})"


# -- constructors -----------------------------------------------------------


def closed_region(level: int, cells, cofinite: bool = False) -> GridRegion:
    return GridRegion(cellset(level, cells, cofinite), Kind.CLOSED)


def open_region(level: int, cells, cofinite: bool = False) -> GridRegion:
    return GridRegion(cellset(level, cells, cofinite), Kind.OPEN)


def empty_region(kind: Kind = Kind.CLOSED, level: int = 0) -> GridRegion:
    return GridRegion(cellset(level, ()), kind)


def whole_plane(kind: Kind = Kind.OPEN, level: int = 0) -> GridRegion:
    return GridRegion(cellset(level, (), cofinite=True), kind)


def closed_box(x0: int, y0: int, x1: int, y1: int, level: int = 0) -> GridRegion:
    return closed_region(level, box_cells(x0, y0, x1, y1))

def open_box(x0: int, y0: int, x1: int, y1: int, level: int = 0) -> GridRegion:
    return open_region(level, box_cells(x0, y0, x1, y1))


# -- alignment and equality ---------------------------------------------------


def common_level(a: GridRegion, b: GridRegion) -> tuple[GridRegion, GridRegion]:
    lev = max(a.level, b.level)
    return a.at_level(lev), b.at_level(lev)


def region_equal(a: GridRegion, b: GridRegion) -> bool:
    """Exact point-set equality."""
    return a.key() == b.key()


# -- point membership ---------------------------------------------------------


Point = tuple[Fraction, Fraction]


def incident_cells(p: Point, level: int) -> frozenset[Cell]:
    """The 1, 2, or 4 cells at `level` whose closure contains p."""

    def axis(v: Fraction) -> tuple[int, ...]:
        t = v * (1 << level)
        if t.denominator == 1:
            i = t.numerator
            return (i - 1, i)
        fl = t.numerator // t.denominator
        return (fl,)

    xs, ys = axis(p[0]), axis(p[1])
    return frozenset((x, y) for x in xs for y in ys)


def contains_point(r: GridRegion, p: Point) -> bool:
    inc = incident_cells(p, r.level)
    if r.is_closed:
        return any(c in r.cells for c in inc)
    return all(c in r.cells for c in inc)


# -- the core algebra ---------------------------------------------------------


def complement(r: GridRegion) -> GridRegion:
    kind = Kind.OPEN if r.is_closed else Kind.CLOSED
    return GridRegion(r.cells.complement(), kind)


def subset(a: GridRegion, b: GridRegion) -> bool:
    a, b = common_level(a, b)
    if a.is_closed and b.is_closed:
        return a.cells.issubset(b.cells)
    if a.is_open and b.is_open:
        return a.cells.issubset(b.cells)
    if a.is_closed and b.is_open:
        return a.cells.dilate8().issubset(b.cells)
    return a.cells.issubset(b.cells)  # open inside closed


def disjoint(a: GridRegion, b: GridRegion) -> bool:
    a, b = common_level(a, b)
    if a.is_closed and b.is_closed:
        return a.cells.dilate8().isdisjoint(b.cells)
    return a.cells.isdisjoint(b.cells)


def _blocks_touching(cells_: CellSet) -> set[Cell]:
    """Lower-left corners (as cell coords of the 2x2 block {c, c+e1, c+e2,
    c+e1+e2}) of all corner blocks meeting a finite cell list."""
    out: set[Cell] = set()
    for (x, y) in cells_.members:
        for bx in (x - 1, x):
            for by in (y - 1, y):
                out.add((bx, by))
    return out


def _block_cells(b: Cell) -> tuple[Cell, Cell, Cell, Cell]:
    x, y = b
    return ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))


def _closed_case_exact(s: CellSet, t: CellSet) -> bool:
    """Whether K(S) | U(T) equals K(S u T) as point sets (S, T disjoint).

    Fails exactly when some point p has an incident cell in T, none in S,
    and not all in T: checked on shared edges and on 2x2 corner blocks.
    """
    # edge condition: every 4-neighbor of a T-cell lies in S u T
    union = s.union(t)
    if t.finite:
        for c in t.members:
            for n in neighbors4(c):
                if n not in union:
                    return False
        corner_seeds = _blocks_touching(t)
    else:
        # violations can only occur near the excluded cells of T or near S
        excl = CellSet(t.level, t.members)  # complement members of T
        for c in excl.dilate8().members:
            if c in t:
                for n in neighbors4(c):
                    if n not in union:
                        return False
        seeds = excl.dilate8().members | (s.members if s.finite else set())
        corner_seeds = _blocks_touching(CellSet(t.level, frozenset(seeds)))
    for b in corner_seeds:
        block = _block_cells(b)
        if any(c in t for c in block) and not any(c in s for c in block):
            if not all(c in t for c in block):
                return False
    return True


def disjoint_union(a: GridRegion, b: GridRegion) -> GridRegion | None:
    """The region a | b when that point set is itself open or closed.

    Returns None (REJECT) when the union exists as a point set but is
    neither open nor closed, mirroring the restriction of additivity to
    unions staying inside the class.  Precondition: disjoint(a, b).
    """
    if not disjoint(a, b):
        raise RegionError("disjoint_union: arguments are not disjoint")
    a, b = common_level(a, b)
    if a.is_closed and b.is_closed:
        return GridRegion(a.cells.union(b.cells), Kind.CLOSED)
    if a.is_open and b.is_open:
        if a.cells.touches4(b.cells):
            return None
        return GridRegion(a.cells.union(b.cells), Kind.OPEN)
    k, u = (a, b) if a.is_closed else (b, a)
    union = k.cells.union(u.cells)
    if k.cells.dilate8().issubset(union):
        return GridRegion(union, Kind.OPEN)
    if _closed_case_exact(k.cells, u.cells):
        return GridRegion(union, Kind.CLOSED)
    return None


def set_minus_compact(u: GridRegion, k: GridRegion) -> GridRegion:
    """U(T) minus K(S) = U(T \\ S); exact for any S, required K inside U."""
    if not (u.is_open and k.is_closed and k.cells.finite):
        raise RegionError("set_minus_compact needs open u and compact k")
    if not subset(k, u):
        raise RegionError("set_minus_compact: k not inside u")
    u2, k2 = common_level(u, k)
    return GridRegion(u2.cells.difference(k2.cells), Kind.OPEN)


# -- components, solidity, hulls ----------------------------------------------


@dataclass(frozen=True)
class Component:
    region: GridRegion
    bounded: bool


def _bfs_components(cells_: frozenset[Cell], diag: bool) -> list[frozenset[Cell]]:
    nb = neighbors8 if diag else neighbors4
    seen: set[Cell] = set()
    comps = []
    for start in sorted(cells_):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        frontier = [start]
        while frontier:
            c = frontier.pop()
            for n in nb(c):
                if n in cells_ and n not in seen:
                    seen.add(n)
                    comp.add(n)
                    frontier.append(n)
        comps.append(frozenset(comp))
    return comps


def components(r: GridRegion) -> list[Component]:
    """Connected components with boundedness flags.

    8-connectivity for CLOSED regions, 4 for OPEN; a cofinite region yields
    exactly one unbounded component (everything connected through the far
    field) plus its finitely many bounded pieces, computed in a bounding box
    two cells wider than the excluded set.
    """
    diag = r.is_closed
    cs = r.cells
    if cs.finite:
        return [
            Component(GridRegion(cellset(cs.level, comp), r.kind), True)
            for comp in _bfs_components(cs.members, diag)
        ]
    if cs.is_all:
        return [Component(r, False)]
    x0, y0, x1, y1 = cs.bbox()
    inner = box_cells(x0 - 2, y0 - 2, x1 + 2, y1 + 2)
    present = frozenset(c for c in inner if c in cs)
    ring = {c for c in inner if c[0] in (x0 - 2, x1 + 2) or c[1] in (y0 - 2, y1 + 2)}
    out: list[Component] = []
    bounded_cells: set[Cell] = set()
    for comp in _bfs_components(present, diag):
        if comp & ring:
            continue  # belongs to the unbounded far-field component
        bounded_cells |= comp
        out.append(Component(GridRegion(cellset(cs.level, comp), r.kind), True))
    unbounded = CellSet(cs.level, frozenset(cs.members) | frozenset(bounded_cells), True)
    out.sort(key=lambda c: min(c.region.cells.members))
    return [Component(GridRegion(unbounded, r.kind), False)] + out


def is_connected(r: GridRegion) -> bool:
    if r.is_empty:
        return False
    return len(components(r)) == 1


def is_solid(r: GridRegion) -> bool:
    """Connected with every complement component unbounded."""
    if not (r.is_compact or r.is_bounded_open):
        raise RegionError("is_solid needs a compact or bounded-open region")
    if r.is_empty:
        return False
    if not is_connected(r):
        return False
    return all(not c.bounded for c in components(complement(r)))


def solid_hull(r: GridRegion) -> GridRegion:
    """Union with the bounded complement components (the filled holes)."""
    if not (r.is_compact or r.is_bounded_open):
        raise RegionError("solid_hull needs a compact or bounded-open region")
    if not is_connected(r):
        raise RegionError("solid_hull needs a connected region")
    filled = r.cells
    for comp in components(complement(r)):
        if comp.bounded:
            filled = filled.union(comp.region.cells)
    return GridRegion(filled, r.kind)


def bounded_complement_components(r: GridRegion) -> list[GridRegion]:
    return [c.region for c in components(complement(r)) if c.bounded]


# -- constructive lemmas -------------------------------------------------------


def _cover_violation_witness(c: CellSet, tu: CellSet, tv: CellSet) -> Point | None:
    """Exact cover check K(c) inside U(tu) | U(tv), all at one level.

    Violations of the cover, if any, occur at grid corner points (any
    nonempty intersection of cell closures contains a lattice corner), so
    scanning the corners adjacent to c decides the cover exactly.
    """
    if c.is_empty:
        return None
    if not c.finite:
        raise RegionError("halmos_split needs a compact region")
    for b in sorted(_blocks_touching(c)):
        block = _block_cells(b)
        if not any(cc in c for cc in block):
            continue
        if all(cc in tu for cc in block):
            continue
        if all(cc in tv for cc in block):
            continue
        if not all(cc in tu or cc in tv for cc in block):
            # the corner point shared by the block
            denom = 1 << c.level
            pt = (Fraction(b[0] + 1, denom), Fraction(b[1] + 1, denom))
            inc_in_c = any(cc in c for cc in block)
            inc_u = all(cc in tu for cc in block)
            inc_v = all(cc in tv for cc in block)
            if inc_in_c and not inc_u and not inc_v:
                return pt
    # remaining possible violations have all incident cells in tu or tv mixed;
    # those points are covered (they lie in one of the opens) or were caught.
    return None


def _corner_outside_both(c: CellSet, tu: CellSet, tv: CellSet) -> Point | None:
    for b in sorted(_blocks_touching(c)):
        block = _block_cells(b)
        if not any(cc in c for cc in block):
            continue
        if all(cc in tu for cc in block) or all(cc in tv for cc in block):
            continue
        if not all((cc in tu) or (cc in tv) for cc in block):
            denom = 1 << c.level
            return (Fraction(b[0] + 1, denom), Fraction(b[1] + 1, denom))
    return None


def halmos_split(
    c: GridRegion, u: GridRegion, v: GridRegion, max_refine: int = 12
) -> tuple[GridRegion, GridRegion]:
    """Split a compact c covered by opens u, v into compacts K u D with
    K inside u and D inside v.

    Each refined cell whose closed 3x3 neighborhood lies in u's cell set goes
    to K; the rest must have their neighborhood in v's.  Refinement proceeds
    until every cell is assignable (compactness guarantees termination); the
    cap exists so a bad input fails diagnosably instead of looping.
    """
    if not c.is_compact or not u.is_open or not v.is_open:
        raise RegionError("halmos_split needs compact c and open u, v")
    lev = max(c.level, u.level, v.level)
    cs, tu, tv = c.cells.at_level(lev), u.cells.at_level(lev), v.cells.at_level(lev)
    witness = _corner_outside_both(cs, tu, tv)
    if witness is not None:
        raise CoverViolation(witness)
    for _ in range(max_refine + 1):
        left, right = [], []
        ok = True
        for cell in cs.members:
            if all(n in tu for n in neighbors8(cell)) and cell in tu:
                left.append(cell)
            elif all(n in tv for n in neighbors8(cell)) and cell in tv:
                right.append(cell)
            else:
                ok = False
                break
        if ok:
            return (
                GridRegion(cellset(cs.level, left), Kind.CLOSED),
                GridRegion(cellset(cs.level, right), Kind.CLOSED),
            )
        cs, tu, tv = cs.refine(), tu.refine(), tv.refine()
    raise AssignmentDepthExceeded(f"not assignable within {max_refine} refinements")


def interpolate(k: GridRegion, u: GridRegion) -> GridRegion:
    """A bounded open V with compact closure and K inside V inside clo(V)
    inside U.  One refinement plus an 8-dilation suffices: a double fine
    dilation stays inside the refined coarse set whenever dilate8(S) <= T."""
    if not k.is_compact or not u.is_open:
        raise RegionError("interpolate needs compact k and open u")
    if not subset(k, u):
        raise RegionError("interpolate: k not inside u")
    if k.is_empty:
        return empty_region(Kind.OPEN, k.level + 1)
    kk, uu = common_level(k, u)
    fine = kk.cells.refine()
    return GridRegion(fine.dilate8(), Kind.OPEN)


def closure_of_open(u: GridRegion) -> GridRegion:
    """Smallest closed grid region containing U(T): K(T)."""
    if not u.is_open:
        raise RegionError("closure_of_open needs an open region")
    return GridRegion(u.cells, Kind.CLOSED)


# -- erosion / dilation wrappers ------------------------------------------------


def erode(t: CellSet) -> CellSet:
    """Largest cell set whose closed region sits inside U(t)."""
    return t.erode8()


def dilate(s: CellSet) -> CellSet:
    """Smallest cell set whose open region contains K(s)."""
    return s.dilate8()


# -- text format -----------------------------------------------------------------

_FORMAT_RE = re.compile(
    r"^level=(\d+) kind=(open|closed) cofinite=([01]) cells=((?:\(-?\d+,-?\d+\))?(?:;\(-?\d+,-?\d+\))*)$"
)


def format_region(r: GridRegion) -> str:
    cells_txt = ";".join(f"({x},{y})" for x, y in sorted(r.cells.members))
    return (
        f"level={r.level} kind={r.kind.value} "
        f"cofinite={1 if r.cells.cofinite else 0} cells={cells_txt}"
    )


def parse_region(text: str) -> GridRegion:
    m = _FORMAT_RE.match(text.strip())
    if not m:
        raise RegionError(f"bad region text: {text!r}")
    level = int(m.group(1))
    kind = Kind.OPEN if m.group(2) == "open" else Kind.CLOSED
    cofinite = m.group(3) == "1"
    cells_txt = m.group(4)
    members: list[Cell] = []
    if cells_txt:
        for part in cells_txt.split(";"):
            xm = re.match(r"^\((-?\d+),(-?\d+)\)$", part)
            if not xm:
                raise RegionError(f"bad cell {part!r}")
            members.append((int(xm.group(1)), int(xm.group(2))))
    if len(set(members)) != len(members):
        raise RegionError("duplicate cells in region text")
    if sorted(members) != members:
        raise RegionError("cells not in canonical lexicographic order")
    return GridRegion(cellset(level, members, cofinite), kind)
