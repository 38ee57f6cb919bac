"""Symmetric-function dictionary.

Symmetric functions are stored as sparse vectors over partition keys
in the power-sum basis; elements of the polynomial extension carry an
extra exponent.  The monomial transition is computed by honest
expansion of power sums in finitely many variables (degree-many
variables suffice), so it serves as an oracle independent of the
curve-class recursions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .basis_change import mat_inv, partition_keys
from .fock import B2Key, FockVector
from .partitions import Partition, z_factor
from .ring import star_tilde


class PolyVKey(NamedTuple):
    """Key of the polynomial extension: power-sum index and v-exponent."""

    nu: Partition
    v: int

    @property
    def degree(self) -> int:
        return self.nu.size + self.v


def p_in_m(nu: Partition) -> FockVector:
    """Power-sum p_nu expanded in the monomial basis, by brute force.

    Multiplies out prod_j (x_1^nu_j + ... + x_d^nu_j) with d = |nu|
    variables and reads off the coefficient of the canonical monomial
    of each shape.
    """
    n = nu.size
    if n == 0:
        return FockVector.unit(Partition())
    nvars = n
    poly: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for part in nu.parts:
        nxt: dict[tuple[int, ...], int] = {}
        for expv, c in poly.items():
            for i in range(nvars):
                e2 = expv[:i] + (expv[i] + part,) + expv[i + 1:]
                nxt[e2] = nxt.get(e2, 0) + c
        poly = nxt
    out = []
    for expv, c in poly.items():
        shape = tuple(sorted((e for e in expv if e), reverse=True))
        if expv == shape + (0,) * (nvars - len(shape)):
            out.append((Partition(shape), Fraction(c)))
    return FockVector(out)


@lru_cache(maxsize=None)
def _p_to_m_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    keys = partition_keys(n)
    rows = []
    for nu in keys:
        exp = p_in_m(nu)
        rows.append(tuple(exp[lam] for lam in keys))
    return tuple(rows)


@lru_cache(maxsize=None)
def _m_to_p_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in mat_inv([list(r) for r in _p_to_m_rows(n)]))


def m_in_p(lam: Partition) -> FockVector:
    """Monomial symmetric function m_lam in the power-sum basis."""
    keys = partition_keys(lam.size)
    row = _m_to_p_rows(lam.size)[keys.index(lam)]
    return FockVector(zip(keys, row))


@lru_cache(maxsize=None)
def character(lam: Partition, nu: Partition) -> int:
    """Symmetric group character chi^lam at cycle type nu.

    Border-strip recursion on the largest part of nu, carried out on
    the strictly decreasing first-column hook lengths of lam: removing
    a strip of size r subtracts r from one of them, with sign given by
    the number of values jumped over.
    """
    if lam.size != nu.size:
        raise ValueError("shape and cycle type must have equal size")
    if lam.size == 0:
        return 1
    r = nu[0]
    rest = Partition(nu.parts[1:])
    length = lam.length
    betas = [lam[i] + (length - 1 - i) for i in range(length)]
    bset = set(betas)
    total = 0
    for idx, b in enumerate(betas):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in betas if nb < x < b)
        rest_betas = sorted((x for j, x in enumerate(betas) if j != idx), reverse=True)
        rest_betas.append(nb)
        rest_betas.sort(reverse=True)
        m = len(rest_betas)
        parts = [rest_betas[i] - (m - 1 - i) for i in range(m) if rest_betas[i] - (m - 1 - i) > 0]
        total += (-1) ** height * character(Partition(parts), rest)
    return total


def schur_in_p(lam: Partition) -> FockVector:
    """Schur function s_lam = sum_nu chi^lam(nu)/z_nu * p_nu."""
    out = []
    for nu in partition_keys(lam.size):
        chi = character(lam, nu)
        if chi:
            out.append((nu, Fraction(chi, z_factor(nu))))
    return FockVector(out)


def phi(v: FockVector) -> FockVector:
    """Isomorphism onto symmetric functions: creation keys become power sums.

    Keys are partitions on both sides, so the map is the identity on
    the data; it exists to mark the change of interpretation.
    """
    return v


def phi_tilde(v: FockVector) -> FockVector:
    """Isomorphism onto the polynomial extension: (i, nu) -> p_nu v^i."""
    return v.map_keys(lambda k: PolyVKey(k.nu, k.i))


def phi_tilde_inverse(x: FockVector) -> FockVector:
    return x.map_keys(lambda k: B2Key(k.v, k.nu))


def hall_pairing(f: FockVector, g: FockVector) -> Fraction:
    """Hall pairing in the power-sum basis: <p_lam, p_mu> = z_lam delta."""
    out = Fraction(0)
    for k, c in f.items():
        d = g[k]
        if d:
            out += c * d * z_factor(k)
    return out


def symfunc_to_json_obj(f: FockVector) -> dict:
    """Serialize a power-sum expansion as {"p": [{"partition": ..., "coeff": ...}]}."""
    terms = [{"partition": nu.as_list(), "coeff": str(c)} for nu, c in f.items()]
    terms.sort(key=lambda t: t["partition"])
    return {"p": terms}


def polyv_to_json_obj(x: FockVector) -> dict:
    """Serialize an extended element; each term carries its v exponent."""
    terms = [
        {"partition": k.nu.as_list(), "v": k.v, "coeff": str(c)} for k, c in x.items()
    ]
    terms.sort(key=lambda t: (t["partition"], t["v"]))
    return {"p": terms}


def induced_product(x: FockVector, y: FockVector) -> FockVector:
    """Product on the polynomial extension transported from the incidence ring.

    Both operands must be homogeneous of one common total degree
    |nu| + v: the underlying ring is a direct sum over degrees and the
    product has no meaning across graded pieces.
    """
    degs = {k.degree for k in x.keys()} | {k.degree for k in y.keys()}
    if len(degs) > 1:
        raise ValueError(
            f"operands span total degrees {sorted(degs)}; the transported product "
            "is defined only within a single graded piece"
        )
    return phi_tilde(star_tilde(phi_tilde_inverse(x), phi_tilde_inverse(y)))
