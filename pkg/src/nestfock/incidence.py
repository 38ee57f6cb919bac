"""Incidence pairs of partitions and their equivariant Euler classes.

An incidence pair (lam, mu) consists of a partition lam of n and a
partition mu of n+1 whose diagram is that of lam plus one addable
corner.  These pairs index the torus fixed points of the incidence
Hilbert scheme of n and n+1 points in the plane; the hook products
h(lam, mu) and h_plus(lam, mu) computed here are the magnitudes of the
equivariant Euler classes of the full tangent space and of its
positive part.

Two independent routes to the Euler class are provided: the closed
marked-cell formula (h_pair) and an explicit assembly of the tangent
weight multiset (tangent_weights_incidence); their agreement is a
strong consistency check on both.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .partitions import (
    Cell,
    Partition,
    add_corner,
    canonical_generators,
    enumerate_partitions,
    hook_length,
    hook_product,
    insert_part,
    remove_part,
    step_length,
)


class IncidencePair:
    """Pair (lam, mu) with mu equal to lam plus one addable corner.

    ``value`` is the distinguished value: the column of the added
    corner, equivalently the size of the part of lam that mu
    increments (0 when mu appends a new part 1).
    """

    __slots__ = ("_lam", "_mu", "_cell")

    def __init__(self, lam: Partition, mu: Partition) -> None:
        if mu.size != lam.size + 1:
            raise ValueError(f"sizes {lam.size}, {mu.size} are not consecutive")
        cell = None
        for r in range(mu.length):
            lp = lam[r] if r < lam.length else 0
            if mu[r] == lp + 1 and cell is None:
                cell = Cell(r, lp)
            elif mu[r] != lp:
                raise ValueError(f"{mu} does not cover {lam}")
        if cell is None:
            raise ValueError(f"{mu} does not cover {lam}")
        object.__setattr__(self, "_lam", lam)
        object.__setattr__(self, "_mu", mu)
        object.__setattr__(self, "_cell", cell)

    def __setattr__(self, name, value):
        raise AttributeError("IncidencePair is immutable")

    @property
    def lam(self) -> Partition:
        return self._lam

    @property
    def mu(self) -> Partition:
        return self._mu

    @property
    def n(self) -> int:
        return self._lam.size

    @property
    def added_cell(self) -> Cell:
        return self._cell

    @property
    def value(self) -> int:
        return self._cell.col

    def as_json_obj(self) -> dict:
        return {"lambda": self._lam.as_list(), "mu": self._mu.as_list()}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IncidencePair)
            and self._lam == other._lam
            and self._mu == other._mu
        )

    def __hash__(self) -> int:
        return hash((self._lam, self._mu))

    def __repr__(self) -> str:
        return f"IncidencePair({list(self._lam)}, {list(self._mu)})"


class MarkedCells(NamedTuple):
    """Marked cells of an incidence pair.

    ``k`` is the index of the corner of lam added by mu; ``sq`` and
    ``sqp`` map each other corner index j to its marked cells, both
    inside the diagram of lam.
    """

    k: int
    sq: dict[int, Cell]
    sqp: dict[int, Cell]


class EulerClass(NamedTuple):
    sign: int
    magnitude: int
    t_exponent: int


def enumerate_incidence_pairs(n: int) -> list[IncidencePair]:
    """All pairs with |lam| = n, lam in reverse-lex order, corners top-down."""
    out = []
    for lam in enumerate_partitions(n):
        for corner in canonical_generators(lam):
            out.append(IncidencePair(lam, add_corner(lam, corner.cell)))
    return out


def derive_lambda(mu: Partition, i: int) -> Partition:
    """Replace one part i of mu by i-1 (drop it when i = 1)."""
    if i < 1 or mu.multiplicity(i) == 0:
        raise ValueError(f"{mu} has no part {i}")
    lam = remove_part(mu, i)
    if i > 1:
        lam = insert_part(lam, i - 1)
    return lam


def k_index(pair: IncidencePair) -> int:
    """Index of the canonical generator of lam at the added corner."""
    for corner in canonical_generators(pair.lam):
        if corner.cell == pair.added_cell:
            return corner.index
    raise RuntimeError(f"added cell of {pair} is not an addable corner")


def marked_cells(pair: IncidencePair) -> MarkedCells:
    """Marked cells sq[j], sqp[j] of the pair, for every corner j != k.

    For j < k the cells sit in the column of corner k at the rows of
    corner j and of the last row of that part block; for j > k they
    sit in the row of corner k at the columns of corner j and of the
    right end of that column block.  sqp[j] = sq[j] when the gap
    (p_j for j < k, q_j for j > k) is 1.
    """
    corners = canonical_generators(pair.lam)
    k = k_index(pair)
    ck = corners[k].cell
    sq: dict[int, Cell] = {}
    sqp: dict[int, Cell] = {}
    for corner in corners:
        j = corner.index
        if j < k:
            sq[j] = Cell(corner.cell.row, ck.col)
            sqp[j] = Cell(corner.cell.row + corner.p - 1, ck.col)
        elif j > k:
            sq[j] = Cell(ck.row, corner.cell.col)
            sqp[j] = Cell(ck.row, corner.cell.col + corner.q - 1)
    return MarkedCells(k, sq, sqp)


def h_pair(pair: IncidencePair) -> int:
    """Corrected hook product h(lam, mu) of an incidence pair.

    Equal to hook_product(lam)^2 times the product over j != k of
    (1 + hook(sq[j])) / hook(sqp[j]).  The value is asserted to be a
    positive integer; a non-integral result signals a marked-cell bug.
    """
    lam = pair.lam
    mc = marked_cells(pair)
    out = Fraction(hook_product(lam)) ** 2
    for j in mc.sq:
        out *= Fraction(1 + hook_length(lam, mc.sq[j]), hook_length(lam, mc.sqp[j]))
    if out.denominator != 1 or out <= 0:
        raise ArithmeticError(f"h(lam, mu) = {out} is not a positive integer for {pair}")
    return int(out)


def h_plus(pair: IncidencePair) -> int:
    """Positive-part hook product h_plus(lam, mu).

    Equal to hook_product(lam) times the product of the h_pair factors
    for j > k only.  Asserted integral and positive.
    """
    lam = pair.lam
    mc = marked_cells(pair)
    out = Fraction(hook_product(lam))
    for j in mc.sq:
        if j > mc.k:
            out *= Fraction(1 + hook_length(lam, mc.sq[j]), hook_length(lam, mc.sqp[j]))
    if out.denominator != 1 or out <= 0:
        raise ArithmeticError(f"h_plus = {out} is not a positive integer for {pair}")
    return int(out)


def euler_class(pair: IncidencePair) -> EulerClass:
    """Equivariant Euler class of the tangent space at the fixed point.

    Returns ((-1)^(n+1), h(lam, mu), 2(n+1)) for |lam| = n, encoding
    the class (-1)^(n+1) h(lam, mu) t^(2(n+1)).
    """
    n = pair.n
    return EulerClass((-1) ** (n + 1), h_pair(pair), 2 * (n + 1))


def tangent_weights_hilbert(lam: Partition) -> list[int]:
    """Tangent weight multiset {+hook, -hook over all cells}, sorted."""
    hooks = [hook_length(lam, c) for c in lam.cells()]
    return sorted(hooks + [-h for h in hooks])


def tangent_weights_incidence(pair: IncidencePair) -> list[int]:
    """Tangent weight multiset of the incidence Hilbert scheme at the pair.

    Assembled from the weight multiset of the n-point tangent space
    plus the weights of an explicit kernel basis, minus the weights of
    the homomorphism classes eliminated by the connecting map.  The
    four boundary cases are classified by whether the vertical gap p_k
    and horizontal gap q_k at the added corner equal 1; undefined gaps
    (q at the first corner, p at the last) count as infinite.

    Kernel weights: -1-hook(sq[j]) for j < k, then one or two unit
    weights depending on the case, then +1+hook(sq[j]) for j > k.
    Removed weights: -hook(sqp[j]) on the left, +hook(sqp[j]) on the
    right, over case-dependent index ranges.  Cardinality is always
    2(n+1).
    """
    lam = pair.lam
    corners = canonical_generators(lam)
    m = len(corners) - 1
    mc = marked_cells(pair)
    k = mc.k
    p_k = corners[k].p  # None when k == m
    q_k = corners[k].q  # None when k == 0
    p1 = p_k == 1
    q1 = q_k == 1

    if q1 and not p1:  # case 1a
        units = [1]
        left_max, right_min = k - 2, k + 1
    elif p1 and not q1:  # case 1b
        units = [-1]
        left_max, right_min = k - 1, k + 2
    elif not p1 and not q1:  # case 2
        units = [-1, 1]
        left_max, right_min = k - 1, k + 1
    else:  # case 3: p_k = q_k = 1
        units = []
        left_max, right_min = k - 2, k + 2

    weights = tangent_weights_hilbert(lam)
    weights += [-1 - hook_length(lam, mc.sq[j]) for j in range(k)]
    weights += units
    weights += [1 + hook_length(lam, mc.sq[j]) for j in range(k + 1, m + 1)]

    removed = [-hook_length(lam, mc.sqp[j]) for j in range(0, left_max + 1)]
    removed += [hook_length(lam, mc.sqp[j]) for j in range(right_min, m + 1)]
    for w in removed:
        try:
            weights.remove(w)
        except ValueError:
            raise RuntimeError(f"weight {w} to remove is absent for {pair}") from None

    if len(weights) != 2 * (pair.n + 1):
        raise RuntimeError(f"weight count {len(weights)} != {2 * (pair.n + 1)} for {pair}")
    return sorted(weights)


def betti_series(max_n: int) -> list[list[int]]:
    """Even Betti numbers of the incidence Hilbert schemes up to max_n.

    Expands 1/(1-z^2 q) * prod_{m>=1} 1/(1 - z^(2m-2) q^m) to order
    q^max_n; entry n is [b_0, b_2, ..., b_2n].
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    # table[n][e] = coefficient of q^n z^(2e)
    table: list[dict[int, int]] = [{} for _ in range(max_n + 1)]
    table[0][0] = 1

    def mul_geometric(z_exp: int, q_exp: int) -> None:
        # multiply the truncated series by 1 / (1 - z^z_exp q^q_exp)
        for n in range(q_exp, max_n + 1):
            for e, c in table[n - q_exp].items():
                table[n][e + z_exp] = table[n].get(e + z_exp, 0) + c

    mul_geometric(1, 1)  # the 1/(1-z^2 q) factor; z tracked in half exponents
    for m in range(1, max_n + 1):
        mul_geometric(m - 1, m)

    out = []
    for n in range(max_n + 1):
        top = max(table[n]) if table[n] else 0
        out.append([table[n].get(e, 0) for e in range(top + 1)])
    return out


def betti_from_fixed_points(n: int) -> list[int]:
    """Betti numbers from the cell decomposition indexed by (mu, i).

    b_2k counts pairs (mu, i) with mu a partition of n+1, i a part
    value of the conjugate of mu, and length(mu) = n+1-k.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    counts = [0] * (n + 1)
    for mu in enumerate_partitions(n + 1):
        k = (n + 1) - mu.length
        counts[k] += step_length(mu.conjugate())
    return counts
