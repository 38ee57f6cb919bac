"""Sparse exact-rational vectors and the loop-algebra operators.

The operator basis of degree n consists of the keys (i, nu) with
i + |nu| = n: the class obtained from the vacuum by the nu-indexed
creation operators followed by i translations.  All coefficients are
Fractions; no floating point is used anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Hashable, Iterable, NamedTuple

from .incidence import h_pair
from .partitions import (
    Partition,
    enumerate_partitions,
    hook_product,
    insert_part,
    remove_part,
    z_factor,
)


class B2Key(NamedTuple):
    """Operator-basis key: translation exponent i and creation partition nu."""

    i: int
    nu: Partition

    @property
    def degree(self) -> int:
        return self.i + self.nu.size

    def as_json_obj(self) -> dict:
        return {"i": self.i, "nu": self.nu.as_list()}


VACUUM = B2Key(0, Partition())


class FockVector:
    """Finite linear combination of hashable keys with Fraction coefficients.

    Zero coefficients are never stored.  Instances behave as immutable
    values; all arithmetic returns new vectors.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Hashable, Fraction]] | dict = ()) -> None:
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            c = data.get(key, Fraction(0)) + Fraction(coeff)
            if c:
                data[key] = c
            elif key in data:
                del data[key]
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @classmethod
    def unit(cls, key: Hashable) -> "FockVector":
        return cls([(key, Fraction(1))])

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "FockVector") -> "FockVector":
        data = dict(self._terms)
        for k, c in other._terms.items():
            s = data.get(k, Fraction(0)) + c
            if s:
                data[k] = s
            elif k in data:
                del data[k]
        return FockVector(data)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __neg__(self) -> "FockVector":
        return FockVector({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar) -> "FockVector":
        s = Fraction(scalar)
        if not s:
            return FockVector()
        return FockVector({k: c * s for k, c in self._terms.items()})

    __rmul__ = __mul__

    def map_keys(self, fn: Callable[[Hashable], Hashable]) -> "FockVector":
        """Relabel keys through fn (a bijection on the support)."""
        return FockVector([(fn(k), c) for k, c in self._terms.items()])

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "FockVector(0)"
        parts = [f"{c}*{k!r}" for k, c in sorted(self._terms.items(), key=lambda t: repr(t[0]))]
        return "FockVector(" + " + ".join(parts) + ")"


def b2_keys(n: int) -> list[B2Key]:
    """Operator-basis keys of degree n: i descending, nu in reverse-lex order."""
    out = []
    for i in range(n, -1, -1):
        for nu in enumerate_partitions(n - i):
            out.append(B2Key(i, nu))
    return out


def vector_degree(v: FockVector, key_degree: Callable[[Hashable], int]) -> int:
    """Common degree of all keys of a nonzero vector; ValueError if mixed."""
    degrees = {key_degree(k) for k in v.keys()}
    if len(degrees) != 1:
        raise ValueError(f"vector is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop()


def b2_degree(key: B2Key) -> int:
    return key.degree


def creation(n: int, v: FockVector) -> FockVector:
    """Creation operator of index n >= 1 on the operator basis."""
    if n < 1:
        raise ValueError("creation index must be positive")
    return v.map_keys(lambda k: B2Key(k.i, insert_part(k.nu, n)))


def annihilation(n: int, v: FockVector) -> FockVector:
    """Annihilation operator of index n >= 1: (i, nu) -> n*m_n(nu)*(i, nu minus n)."""
    if n < 1:
        raise ValueError("annihilation index must be positive")
    out = []
    for k, c in v.items():
        m = k.nu.multiplicity(n)
        if m:
            out.append((B2Key(k.i, remove_part(k.nu, n)), c * n * m))
    return FockVector(out)


def translate(v: FockVector) -> FockVector:
    """Translation operator: (i, nu) -> (i+1, nu)."""
    return v.map_keys(lambda k: B2Key(k.i + 1, k.nu))


def cotranslate(v: FockVector) -> FockVector:
    """Adjoint of translation: (i, nu) -> (i-1, nu) for i >= 1, else 0."""
    return FockVector([(B2Key(k.i - 1, k.nu), c) for k, c in v.items() if k.i >= 1])


def translate_pow(v: FockVector, j: int) -> FockVector:
    if j < 0:
        raise ValueError("translation power must be nonnegative")
    return v.map_keys(lambda k: B2Key(k.i + j, k.nu)) if j else v


def loop_action(j: int, n: int, v: FockVector) -> FockVector:
    """Loop-algebra generator: j translations after the Heisenberg operator n.

    Negative n acts by creation of index |n|, positive n by
    annihilation, n = 0 by zero.
    """
    if j < 0:
        raise ValueError("translation power must be nonnegative")
    if n == 0:
        return FockVector()
    w = creation(-n, v) if n < 0 else annihilation(n, v)
    return translate_pow(w, j)


def pair_b2(v: FockVector, w: FockVector) -> Fraction:
    """Diagonal pairing on the operator basis with weight z_factor(nu)."""
    out = Fraction(0)
    small, big = (v, w) if len(v) <= len(w) else (w, v)
    for k, c in small.items():
        d = big[k]
        if d:
            out += c * d * z_factor(k.nu)
    return out


def pair_b1(v: FockVector, w: FockVector) -> Fraction:
    """Diagonal pairing on the fixed-point basis with weight h(lam, mu)."""
    out = Fraction(0)
    small, big = (v, w) if len(v) <= len(w) else (w, v)
    for k, c in small.items():
        d = big[k]
        if d:
            out += c * d * h_pair(k)
    return out


def pair_hilb_fixed(v: FockVector, w: FockVector) -> Fraction:
    """Diagonal pairing on the n-point fixed basis with weight hook_product^2."""
    out = Fraction(0)
    small, big = (v, w) if len(v) <= len(w) else (w, v)
    for k, c in small.items():
        d = big[k]
        if d:
            out += c * d * hook_product(k) ** 2
    return out


def pair_hilb_p(v: FockVector, w: FockVector) -> Fraction:
    """Diagonal pairing on the n-point creation basis with weight z_factor."""
    out = Fraction(0)
    small, big = (v, w) if len(v) <= len(w) else (w, v)
    for k, c in small.items():
        d = big[k]
        if d:
            out += c * d * z_factor(k)
    return out


def hilb_creation(n: int, v: FockVector) -> FockVector:
    """Creation on the n-point side: insert a part n into each key."""
    if n < 1:
        raise ValueError("creation index must be positive")
    return v.map_keys(lambda nu: insert_part(nu, n))


def hilb_annihilation(n: int, v: FockVector) -> FockVector:
    """Annihilation on the n-point side: nu -> n*m_n(nu)*(nu minus n)."""
    if n < 1:
        raise ValueError("annihilation index must be positive")
    out = []
    for nu, c in v.items():
        m = nu.multiplicity(n)
        if m:
            out.append((remove_part(nu, n), c * n * m))
    return FockVector(out)


def vector_to_json_obj(v: FockVector, key_obj: Callable[[Hashable], object]) -> list:
    """Serialize as [{"key": ..., "coeff": "p/q"}], sorted by serialized key."""
    terms = [{"key": key_obj(k), "coeff": str(c)} for k, c in v.items()]
    terms.sort(key=lambda t: json.dumps(t["key"], sort_keys=True))
    return terms


def vector_from_json_obj(obj: list, key_from: Callable[[object], Hashable]) -> FockVector:
    return FockVector([(key_from(t["key"]), Fraction(t["coeff"])) for t in obj])
