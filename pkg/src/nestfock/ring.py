"""Ring structures: the normalized products, the ordinary cup product
of the incidence Hilbert scheme, and the two comparison maps.

The normalized product on the fixed-point basis is diagonal with
eigenvalue (-1)^(n+1) h(lam, mu) at ambient degree n (its n-point
analog has eigenvalue (-1)^n hook_product(lam)^2); the operator-basis
product is computed by transport through the fixed-point basis.

An ordinary cohomology class of the degree-n incidence Hilbert scheme
is represented by an operator-basis vector of degree n; the key
(i, nu) has ordinary degree 2(n - length(nu)).  The cup product of
classes that are pure in ordinary degree is the normalized product
followed by the selection of the keys with length(rho) equal to
length(nu1) + length(nu2) - n, scaled by (-1)^(n+1); general classes
are handled by bilinearity.  The rule is forced by the normalization
of the forgetful map, which kills every positive power of the
equivariant parameter.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .basis_change import b2_vector_to_b1, b1_vector_to_b2, operator_keys
from .fock import B2Key, FockVector, b2_degree, vector_degree
from .incidence import IncidencePair, derive_lambda, h_pair
from .partitions import Partition, add_corner, canonical_generators, hook_product


def star_b1(v: FockVector, w: FockVector, n: int) -> FockVector:
    """Normalized product in the fixed-point basis of ambient degree n."""
    for vec in (v, w):
        for k in vec.keys():
            if k.n != n:
                raise ValueError(f"key {k!r} has degree {k.n}, expected {n}")
    sign = (-1) ** (n + 1)
    out = []
    for k, c in v.items():
        d = w[k]
        if d:
            out.append((k, c * d * sign * h_pair(k)))
    return FockVector(out)


def star_tilde(v: FockVector, w: FockVector) -> FockVector:
    """Normalized product in the operator basis (degree inferred)."""
    if not v or not w:
        return FockVector()
    n = vector_degree(v, b2_degree)
    if vector_degree(w, b2_degree) != n:
        raise ValueError("operands live in different graded pieces")
    prod = star_b1(b2_vector_to_b1(v, n), b2_vector_to_b1(w, n), n)
    return b1_vector_to_b2(prod, n)


def star_hilb(v: FockVector, w: FockVector, n: int) -> FockVector:
    """Normalized product in the n-point fixed basis."""
    for vec in (v, w):
        for k in vec.keys():
            if k.size != n:
                raise ValueError(f"key {k!r} has degree {k.size}, expected {n}")
    sign = (-1) ** n
    out = []
    for k, c in v.items():
        d = w[k]
        if d:
            out.append((k, c * d * sign * hook_product(k) ** 2))
    return FockVector(out)


class OrdinaryClass:
    """Ordinary cohomology class of the degree-n incidence Hilbert scheme."""

    __slots__ = ("n", "vec")

    def __init__(self, n: int, vec: FockVector) -> None:
        for k in vec.keys():
            if k.degree != n:
                raise ValueError(f"key {k!r} has degree {k.degree}, expected {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vec", vec)

    def __setattr__(self, name, value):
        raise AttributeError("OrdinaryClass is immutable")

    def components(self) -> dict[int, FockVector]:
        """Split by creation length, i.e. by ordinary degree."""
        out: dict[int, list] = {}
        for k, c in self.vec.items():
            out.setdefault(k.nu.length, []).append((k, c))
        return {ell: FockVector(terms) for ell, terms in out.items()}

    def ordinary_degrees(self) -> set[int]:
        return {2 * (self.n - k.nu.length) for k in self.vec.keys()}

    def __add__(self, other: "OrdinaryClass") -> "OrdinaryClass":
        if self.n != other.n:
            raise ValueError("ambient degrees differ")
        return OrdinaryClass(self.n, self.vec + other.vec)

    def __mul__(self, scalar) -> "OrdinaryClass":
        return OrdinaryClass(self.n, self.vec * scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrdinaryClass)
            and self.n == other.n
            and self.vec == other.vec
        )

    def __repr__(self) -> str:
        return f"OrdinaryClass({self.n}, {self.vec!r})"


def ordinary_cup(a: OrdinaryClass, b: OrdinaryClass) -> OrdinaryClass:
    """Cup product of ordinary classes on the same incidence Hilbert scheme."""
    if a.n != b.n:
        raise ValueError("classes live on different incidence Hilbert schemes")
    n = a.n
    sign = (-1) ** (n + 1)
    acc = FockVector()
    for l1, va in a.components().items():
        for l2, vb in b.components().items():
            target = l1 + l2 - n
            if target < 0:
                continue
            z = star_tilde(va, vb)
            sel = FockVector([(k, c) for k, c in z.items() if k.nu.length == target])
            acc = acc + sign * sel
    return OrdinaryClass(n, acc)


@lru_cache(maxsize=None)
def _unit_data(n: int) -> tuple[Fraction, FockVector]:
    """Normalization u_n and raw degree-0 generator of the ordinary ring.

    The degree-0 line is spanned by the key (0, (1^n)); the scale u_n
    is fixed by requiring the candidate to act as u_n times the
    identity on every basis class, which is verified key by key.
    """
    raw = FockVector.unit(B2Key(0, Partition([1] * n)))
    raw_cls = OrdinaryClass(n, raw)
    u = None
    for key in operator_keys(n):
        prod = ordinary_cup(raw_cls, OrdinaryClass(n, FockVector.unit(key)))
        rest = prod.vec - prod.vec[key] * FockVector.unit(key)
        if rest:
            raise ArithmeticError(f"degree-0 class does not act diagonally on {key!r}")
        c = prod.vec[key]
        if u is None:
            u = c
        elif u != c:
            raise ArithmeticError(f"inconsistent unit normalization at {key!r}: {c} != {u}")
    if not u:
        raise ArithmeticError(f"unit normalization vanished at degree {n}")
    return u, raw


def ordinary_unit(n: int) -> OrdinaryClass:
    """Multiplicative identity of the degree-n ordinary cohomology ring."""
    u, raw = _unit_data(n)
    return OrdinaryClass(n, raw * (Fraction(1) / u))


def ordinary_unit_scale(n: int) -> Fraction:
    """The factor u_n with unit = (1/u_n) times the raw degree-0 key."""
    return _unit_data(n)[0]


def pullback_f(v: FockVector) -> FockVector:
    """Comparison map from n-point fixed classes to incidence fixed classes.

    [lam] maps to minus the sum over incidence partners mu of
    hook_product(lam)^2 / h(lam, mu) times [lam, mu].
    """
    out = []
    for lam, c in v.items():
        h2 = hook_product(lam) ** 2
        for corner in canonical_generators(lam):
            p = IncidencePair(lam, add_corner(lam, corner.cell))
            out.append((p, -c * Fraction(h2, h_pair(p))))
    return FockVector(out)


def pullback_g(v: FockVector) -> FockVector:
    """Comparison map from (n+1)-point fixed classes to incidence classes.

    [mu] maps to the sum over incidence partners lam of
    hook_product(mu)^2 / h(lam, mu) times [lam, mu].  Undefined on
    degree 0.
    """
    out = []
    for mu, c in v.items():
        if mu.size == 0:
            raise ValueError("the map is undefined below one point")
        h2 = hook_product(mu) ** 2
        for i in set(mu.parts):
            p = IncidencePair(derive_lambda(mu, i), mu)
            out.append((p, c * Fraction(h2, h_pair(p))))
    return FockVector(out)
