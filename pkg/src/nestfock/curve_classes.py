"""Curve-class bases and the operator actions on them.

On the n-point side the keys are partitions lam, standing for the
closure class of the locus of n points distributed on a fixed axis
with cluster sizes lam.  On the incidence side the keys are incidence
pairs (lam, mu), standing for the analogous nested loci; these form
the curve basis (b3) of the incidence Fock module.
"""

from __future__ import annotations

from .fock import FockVector
from .incidence import IncidencePair
from .partitions import Partition, insert_part, remove_part


def add_part(lam: Partition, part: int, m: int) -> Partition:
    """Remove one copy of ``part`` (no-op when 0) and insert part+m.

    This is the multiset surgery lam(part, m) behind all cluster-size
    bookkeeping; ``part`` must be 0 or an existing part value.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if part < 0:
        raise ValueError("part must be nonnegative")
    if part > 0:
        lam = remove_part(lam, part)
    return insert_part(lam, part + m)


def nakajima_L(m: int, v: FockVector) -> FockVector:
    """Creation of index m on the n-point curve basis.

    Each key lam maps to the sum over distinct cluster sizes
    lam_k in {0} union parts(lam) of the key lam(lam_k, m), weighted
    by the multiplicity of lam_k + m in the result.
    """
    if m < 1:
        raise ValueError("creation index must be positive")
    out: list = []
    for lam, c in v.items():
        for lam_k in {0} | set(lam.parts):
            target = add_part(lam, lam_k, m)
            out.append((target, c * target.multiplicity(lam_k + m)))
    return FockVector(out)


def translate_b3(pair: IncidencePair) -> IncidencePair:
    """Translation on curve keys: (lam, mu) -> (mu, nu).

    nu raises the distinguished part of mu (the value i+1 created from
    the distinguished value i of the pair) by one more step.
    """
    i = pair.value
    return IncidencePair(pair.mu, add_part(pair.mu, i + 1, 1))


def translate_b3_pow(pair: IncidencePair, j: int) -> IncidencePair:
    for _ in range(j):
        pair = translate_b3(pair)
    return pair


def create_b3(m: int, v: FockVector, *, corrected: bool = True) -> FockVector:
    """Creation of index m on the incidence curve basis.

    For a key (lam, mu) with distinguished value i the image has three
    kinds of terms:

    * for each distinct cluster size lam_k != i (including 0) the key
      (lam(lam_k, m), mu(lam_k, m)), with coefficient the multiplicity
      of lam_k + m in lam(lam_k, m), minus 1 when lam_k + m = i: the
      new cluster cannot play the role of the distinguished one;
    * the i-term (lam(i, m), mu(i, m)), with coefficient the
      multiplicity of i + m in lam(i, m); for i >= 1 it is present
      only when mu retains a free copy of i, i.e. when the
      multiplicity of i in lam is at least 2 (for i = 0 it is always
      present);
    * the absorption term (lam(i, m), mu(i+1, m)) with coefficient 1,
      which is the m-fold translate of the source key.

    ``corrected=False`` drops the "minus 1" adjustment in the first
    kind of term.  That variant breaks commutation with the
    translation operator and is kept only as a regression witness.
    """
    if m < 1:
        raise ValueError("creation index must be positive")
    out: list = []
    for pair, c in v.items():
        lam, mu, i = pair.lam, pair.mu, pair.value
        for lam_k in {0} | set(lam.parts):
            if lam_k == i:
                if i >= 1 and lam.multiplicity(i) < 2:
                    continue
                lam2 = add_part(lam, i, m)
                mu2 = add_part(mu, i, m)
                coeff = lam2.multiplicity(i + m)
            else:
                lam2 = add_part(lam, lam_k, m)
                mu2 = add_part(mu, lam_k, m)
                coeff = lam2.multiplicity(lam_k + m)
                if corrected and lam_k + m == i:
                    coeff -= 1
            if coeff:
                out.append((IncidencePair(lam2, mu2), c * coeff))
        out.append((IncidencePair(add_part(lam, i, m), add_part(mu, i + 1, m)), c))
    return FockVector(out)


def translate_b3_linear(v: FockVector) -> FockVector:
    """Linear extension of translate_b3 to curve-basis vectors."""
    return v.map_keys(translate_b3)
