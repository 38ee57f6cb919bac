"""Integer partitions, Young diagrams and hook calculus.

Cells use 0-based (row, col) coordinates: row r of the diagram of
``lam`` holds the cells (r, 0) .. (r, lam[r]-1).  The monomial
z^a w^b corresponds to the cell (a, b), so rows run in the
z-direction and columns in the w-direction.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Iterator, NamedTuple, Optional


class Cell(NamedTuple):
    row: int
    col: int


class Partition:
    """Weakly decreasing sequence of positive integers (possibly empty).

    Instances are immutable, hashable and canonical: parts are stored
    sorted in descending order and zero parts are rejected.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = tuple(int(p) for p in parts)
        if any(p < 1 for p in ps):
            raise ValueError(f"parts must be positive integers, got {ps}")
        object.__setattr__(self, "_parts", tuple(sorted(ps, reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return sum(self._parts)

    @property
    def length(self) -> int:
        return len(self._parts)

    def multiplicity(self, value: int) -> int:
        return self._parts.count(value)

    def distinct_parts(self) -> tuple[int, ...]:
        """Distinct part values in descending order."""
        return tuple(sorted(set(self._parts), reverse=True))

    def conjugate(self) -> "Partition":
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def cells(self) -> Iterator[Cell]:
        for r, p in enumerate(self._parts):
            for c in range(p):
                yield Cell(r, c)

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 0 <= r < len(self._parts) and 0 <= c < self._parts[r]

    def as_list(self) -> list[int]:
        return list(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, index: int) -> int:
        return self._parts[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"


class Corner(NamedTuple):
    """Addable corner of a Young diagram.

    ``p`` is the vertical gap to the next corner below (None for the
    last corner), ``q`` the horizontal gap to the previous corner
    (None for the first corner).
    """

    index: int
    cell: Cell
    p: Optional[int]
    q: Optional[int]


EMPTY = Partition()


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, max_part), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n if n else 1, [])
    if n == 0:
        return [EMPTY]
    return out


def arm(lam: Partition, cell: Cell) -> int:
    if cell not in lam:
        raise ValueError(f"cell {cell} outside diagram of {lam}")
    return lam[cell.row] - cell.col - 1


def leg(lam: Partition, cell: Cell) -> int:
    if cell not in lam:
        raise ValueError(f"cell {cell} outside diagram of {lam}")
    return lam.conjugate()[cell.col] - cell.row - 1


def hook_length(lam: Partition, cell: Cell) -> int:
    """Arm plus leg plus one of a cell inside the diagram."""
    if cell not in lam:
        raise ValueError(f"cell {cell} outside diagram of {lam}")
    conj = lam.conjugate()
    return (lam[cell.row] - cell.col - 1) + (conj[cell.col] - cell.row - 1) + 1


def hook_product(lam: Partition) -> int:
    """Product of all hook lengths over the diagram; 1 for the empty partition."""
    conj = lam.conjugate()
    out = 1
    for r, p in enumerate(lam):
        for c in range(p):
            out *= (p - c - 1) + (conj[c] - r - 1) + 1
    return out


def step_length(lam: Partition) -> int:
    """Number of distinct part values."""
    return len(set(lam.parts))


def z_factor(nu: Partition) -> int:
    """Product over part values j of j^{m_j} * m_j!."""
    out = 1
    for j in set(nu.parts):
        m = nu.multiplicity(j)
        out *= j**m * factorial(m)
    return out


def dominance_le(lam1: Partition, lam2: Partition) -> bool:
    """True iff lam1 <= lam2 in the dominance order (same size required)."""
    if lam1.size != lam2.size:
        return False
    s1 = s2 = 0
    for k in range(max(lam1.length, lam2.length)):
        s1 += lam1[k] if k < lam1.length else 0
        s2 += lam2[k] if k < lam2.length else 0
        if s1 > s2:
            return False
    return True


def canonical_generators(lam: Partition) -> list[Corner]:
    """Addable corners of the diagram, top-right to bottom-left.

    Corner j sits at row p_0+...+p_{j-1} and column equal to the j-th
    largest distinct part value (column 0 for the last corner), where
    p_j is the multiplicity of the j-th largest distinct value.  There
    are always step_length(lam)+1 corners; the empty partition has the
    single corner (0, 0).
    """
    values = lam.distinct_parts()
    m = len(values)
    rows = [0]
    for v in values:
        rows.append(rows[-1] + lam.multiplicity(v))
    cols = list(values) + [0]
    corners = []
    for j in range(m + 1):
        p = lam.multiplicity(values[j]) if j < m else None
        q = cols[j - 1] - cols[j] if j >= 1 else None
        corners.append(Corner(j, Cell(rows[j], cols[j]), p, q))
    return corners


def add_corner(lam: Partition, cell: Cell) -> Partition:
    """Partition obtained by adding an addable corner cell to the diagram."""
    if cell.col == 0:
        if cell.row != lam.length:
            raise ValueError(f"{cell} is not an addable corner of {lam}")
        return Partition(lam.parts + (1,))
    if cell.row >= lam.length or lam[cell.row] != cell.col:
        raise ValueError(f"{cell} is not an addable corner of {lam}")
    if cell.row > 0 and lam[cell.row - 1] < cell.col + 1:
        raise ValueError(f"{cell} is not an addable corner of {lam}")
    ps = list(lam.parts)
    ps[cell.row] += 1
    return Partition(ps)


def insert_part(lam: Partition, value: int) -> Partition:
    """Partition with one extra part of the given positive value."""
    if value < 1:
        raise ValueError("part value must be positive")
    return Partition(lam.parts + (value,))


def remove_part(lam: Partition, value: int) -> Partition:
    """Partition with one copy of the given part value removed."""
    ps = list(lam.parts)
    try:
        ps.remove(value)
    except ValueError:
        raise ValueError(f"{lam} has no part {value}") from None
    return Partition(ps)
