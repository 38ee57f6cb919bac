"""Machine-checkable identity suites.

Every suite returns a list of CheckResult records; a failed check
carries a counterexample payload.  The suites back the ``verify``
command and the acceptance tests.  All comparisons are exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, NamedTuple

from .basis_change import (
    b1_annihilation,
    b1_cotranslate,
    b1_creation,
    b1_in_b2,
    b1_translate,
    b2_in_b1,
    b2_vector_to_b1,
    b3_in_b1,
    b3_in_b2,
    fixed_annihilation,
    fixed_creation,
    gram_b3,
    hilb_fixed_in_p,
    hilb_L_in_p,
    identity_rows,
    mat_mul,
    operator_keys,
    pair_keys,
    p_vector_to_fixed,
)
from .fock import (
    B2Key,
    FockVector,
    b2_keys,
    loop_action,
    pair_b1,
    pair_b2,
    pair_hilb_fixed,
)
from .incidence import (
    betti_from_fixed_points,
    betti_series,
    enumerate_incidence_pairs,
    euler_class,
    h_pair,
    h_plus,
    tangent_weights_incidence,
)
from .partitions import (
    Partition,
    dominance_le,
    enumerate_partitions,
    hook_product,
    z_factor,
)
from .ring import (
    OrdinaryClass,
    ordinary_cup,
    ordinary_unit,
    ordinary_unit_scale,
    pullback_f,
    pullback_g,
    star_b1,
    star_hilb,
)
from .symfunc import hall_pairing, m_in_p, phi, schur_in_p


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _result(name: str, failures: list) -> CheckResult:
    if not failures:
        return CheckResult(name, True)
    return CheckResult(name, False, json.dumps(failures[:3], default=str))


# ---------------------------------------------------------------------------
# helpers

@lru_cache(maxsize=None)
def _heis_b1_rows(p: int, d: int):
    """Rows of the Heisenberg operator of signed index p in fixed-point
    coordinates, from degree d to degree d - p; None denotes the zero map."""
    d_out = d - p
    if d_out < 0:
        return None
    rows = []
    cols = pair_keys(d_out)
    for key in pair_keys(d):
        v = FockVector.unit(key)
        w = b1_creation(-p, v, d) if p < 0 else b1_annihilation(p, v, d)
        rows.append(tuple(w[c] for c in cols))
    return tuple(rows)


def _rows_mul(a, b):
    if a is None or b is None:
        return None
    return mat_mul([list(r) for r in a], [list(r) for r in b])


def _rows_sub(a, b, shape):
    za = a if a is not None else [[Fraction(0)] * shape[1] for _ in range(shape[0])]
    zb = b if b is not None else [[Fraction(0)] * shape[1] for _ in range(shape[0])]
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(za, zb)]


def _b1_heis(p: int, v: FockVector, d: int) -> FockVector:
    return b1_creation(-p, v, d) if p < 0 else b1_annihilation(p, v, d)


def _b1_translate_pow(v: FockVector, n: int, j: int) -> FockVector:
    for _ in range(j):
        v = b1_translate(v, n)
        n += 1
    return v


# ---------------------------------------------------------------------------
# suites

def suite_hooks(max_n: int = 10) -> list[CheckResult]:
    """Sum rules for the incidence hook products."""
    bad = []
    for n in range(max_n + 1):
        for lam in enumerate_partitions(n):
            total = sum(
                Fraction(hook_product(lam) ** 2, h_pair(p))
                for p in enumerate_incidence_pairs(n)
                if p.lam == lam
            )
            if total != 1:
                bad.append({"lambda": lam.as_list(), "sum": str(total)})
    out = [_result(f"sum over mu of h(lam)^2/h(lam,mu) = 1, |lam| <= {max_n}", bad)]

    bad = []
    for n in range(max_n + 1):
        by_mu: dict[Partition, Fraction] = {}
        for p in enumerate_incidence_pairs(n):
            term = Fraction(hook_product(p.mu) ** 2, h_pair(p))
            by_mu[p.mu] = by_mu.get(p.mu, Fraction(0)) + term
        for mu, total in by_mu.items():
            if total != mu.size:
                bad.append({"mu": mu.as_list(), "sum": str(total)})
    out.append(
        _result(f"sum over lam of h(mu)^2/h(lam,mu) = |mu|, |mu| <= {max_n + 1}", bad)
    )
    return out


def suite_euler(max_n: int = 8) -> list[CheckResult]:
    """Weight-multiset oracle against the closed Euler class formulas."""
    bad_full, bad_pos = [], []
    for n in range(max_n + 1):
        for p in enumerate_incidence_pairs(n):
            weights = tangent_weights_incidence(p)
            prod = 1
            pos = 1
            for w in weights:
                prod *= w
                if w > 0:
                    pos *= w
            sign, mag, _ = euler_class(p)
            if prod != sign * mag:
                bad_full.append(
                    {"pair": p.as_json_obj(), "product": prod, "expected": sign * mag}
                )
            if pos != h_plus(p):
                bad_pos.append(
                    {"pair": p.as_json_obj(), "positive": pos, "expected": h_plus(p)}
                )
    return [
        _result(f"weight product = (-1)^(n+1) h(lam,mu), n <= {max_n}", bad_full),
        _result(f"positive weight product = h_plus(lam,mu), n <= {max_n}", bad_pos),
    ]


def suite_heisenberg(max_n: int = 6, max_index: int = 4) -> list[CheckResult]:
    """Heisenberg and translation relations in fixed-point coordinates.

    Checks [a_p, a_q] = p delta_{p,-q} Id, the left inverse law for the
    translation pair and commutation of translation with every a_p,
    whenever every intermediate degree stays within max_n.
    """
    indices = [i for a in range(1, max_index + 1) for i in (-a, a)]
    bad = []
    for p in indices:
        for q in indices:
            if p > q:
                continue
            for d in range(max_n + 1):
                inter = [d - p, d - q, d - p - q]
                if any(x < 0 or x > max_n for x in inter):
                    continue
                dim_in = len(pair_keys(d))
                dim_out = len(pair_keys(d - p - q))
                pq = _rows_mul(_heis_b1_rows(q, d), _heis_b1_rows(p, d - q))
                qp = _rows_mul(_heis_b1_rows(p, d), _heis_b1_rows(q, d - p))
                comm = _rows_sub(pq, qp, (dim_in, dim_out))
                expected = (
                    [[Fraction(p * (i == j)) for j in range(dim_in)] for i in range(dim_in)]
                    if p == -q
                    else [[Fraction(0)] * dim_out for _ in range(dim_in)]
                )
                if comm != expected:
                    bad.append({"p": p, "q": q, "degree": d})
    out = [
        _result(
            f"[a_p, a_q] = p delta Id on degrees <= {max_n}, |p|,|q| <= {max_index}", bad
        )
    ]

    bad = []
    for d in range(max_n):
        for key in pair_keys(d):
            v = FockVector.unit(key)
            if b1_cotranslate(b1_translate(v, d), d + 1) != v:
                bad.append({"degree": d, "key": key.as_json_obj()})
    out.append(_result(f"cotranslate after translate = Id, degrees < {max_n}", bad))

    bad = []
    for p in indices:
        for d in range(max_n + 1):
            if not (0 <= d - p and d - p + 1 <= max_n and d + 1 <= max_n):
                continue
            for key in pair_keys(d):
                v = FockVector.unit(key)
                if b1_translate(_b1_heis(p, v, d), d - p) != _b1_heis(
                    p, b1_translate(v, d), d + 1
                ):
                    bad.append({"p": p, "degree": d, "key": key.as_json_obj()})
                lhs = b1_cotranslate(_b1_heis(p, v, d), d - p)
                rhs = (
                    _b1_heis(p, b1_cotranslate(v, d), d - 1) if d >= 1 else FockVector()
                )
                if lhs != rhs:
                    bad.append(
                        {"p": p, "degree": d, "key": key.as_json_obj(), "side": "adjoint"}
                    )
    out.append(_result(f"translation pair commutes with a_p, degrees <= {max_n}", bad))
    return out


def suite_loop(max_n: int = 6) -> list[CheckResult]:
    """Loop bracket on the operator basis: translations carry the grading."""
    bad = []
    keys = [k for d in range(max_n + 1) for k in b2_keys(d)]
    for j1 in range(3):
        for j2 in range(3):
            for p in (-3, -2, -1, 1, 2, 3):
                for q in (-3, -2, -1, 1, 2, 3):
                    for key in keys:
                        v = FockVector.unit(key)
                        lhs = loop_action(j1, p, loop_action(j2, q, v)) - loop_action(
                            j2, q, loop_action(j1, p, v)
                        )
                        rhs = (
                            Fraction(p)
                            * FockVector.unit(B2Key(key.i + j1 + j2, key.nu))
                            if p == -q
                            else FockVector()
                        )
                        if lhs != rhs:
                            bad.append(
                                {"j1": j1, "j2": j2, "p": p, "q": q, "key": key.as_json_obj()}
                            )
    res = [_result(f"loop bracket identities on degrees <= {max_n}", bad)]

    bad = []
    for key in keys:
        if loop_action(1, 0, FockVector.unit(key)):
            bad.append({"key": key.as_json_obj()})
    res.append(_result("index-0 generator acts as zero", bad))
    return res


def suite_pairing(max_n: int = 8) -> list[CheckResult]:
    """Pairing transport between the operator and fixed-point bases."""
    bad = []
    for n in range(max_n + 1):
        mat = b2_in_b1(n)
        keys = operator_keys(n)
        images = [mat.expand(k) for k in keys]
        for a, ka in enumerate(keys):
            for b in range(a, len(keys)):
                lhs = pair_b2(FockVector.unit(ka), FockVector.unit(keys[b]))
                rhs = pair_b1(images[a], images[b])
                if lhs != rhs:
                    bad.append(
                        {
                            "degree": n,
                            "x": ka.as_json_obj(),
                            "y": keys[b].as_json_obj(),
                            "lhs": str(lhs),
                            "rhs": str(rhs),
                        }
                    )
    return [_result(f"pair_b2 = pair_b1 after change of basis, n <= {max_n}", bad)]


def suite_roundtrip(max_n: int = 8) -> list[CheckResult]:
    """Round trips, triangularity and choice independence of the solves."""
    bad = []
    for n in range(max_n + 1):
        prod = mat_mul(
            [list(r) for r in b1_in_b2(n).rows], [list(r) for r in b2_in_b1(n).rows]
        )
        if prod != identity_rows(len(prod)):
            bad.append({"degree": n})
    out = [_result(f"b1_in_b2 * b2_in_b1 = Id, n <= {max_n}", bad)]

    bad = []
    for n in range(max_n + 1):
        mat = b3_in_b1(n)
        for a, p in enumerate(mat.row_keys):
            for b, q in enumerate(mat.col_keys):
                if mat.rows[a][b] and not (
                    dominance_le(q.lam, p.lam) and dominance_le(q.mu, p.mu)
                ):
                    bad.append({"degree": n, "row": p.as_json_obj(), "col": q.as_json_obj()})
    out.append(_result(f"b3_in_b1 triangular for product dominance, n <= {max_n}", bad))

    bad = []
    for n in range(max_n + 1):
        mat = b3_in_b1(n)
        keys = mat.row_keys
        g = gram_b3(n)
        for a, p in enumerate(keys):
            check = sum(
                (mat.rows[a][t] ** 2) * h_pair(keys[t])
                for t in range(len(keys))
                if mat.rows[a][t]
            )
            if check != g[a][a]:
                bad.append({"degree": n, "pair": p.as_json_obj()})
    out.append(_result(f"gram diagonal consistency, n <= {max_n}", bad))

    bad = []
    for n in range(min(max_n, 6) + 1):
        for p in pair_keys(n):
            if b3_in_b2(p) != b3_in_b2(p, smallest_shared=True):
                bad.append({"pair": p.as_json_obj()})
    out.append(_result(f"shared-part choice independence, n <= {min(max_n, 6)}", bad))
    return out


def suite_phi(max_n: int = 9) -> list[CheckResult]:
    """Symmetric-function dictionary checks."""
    bad = []
    for n in range(max_n + 1):
        for lam in enumerate_partitions(n):
            if phi(hilb_L_in_p(lam)) != m_in_p(lam):
                bad.append({"lambda": lam.as_list()})
    out = [_result(f"curve classes map to monomial functions, |lam| <= {max_n}", bad)]

    bad = []
    for n in range(max_n + 1):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                want = Fraction(z_factor(lam)) if lam == mu else Fraction(0)
                if hall_pairing(FockVector.unit(lam), FockVector.unit(mu)) != want:
                    bad.append({"lambda": lam.as_list(), "mu": mu.as_list()})
    out.append(_result(f"Hall pairing is z_lam delta, |lam| <= {max_n}", bad))

    bad = []
    limit = min(max_n, 8)
    for n in range(limit + 1):
        mat = hilb_fixed_in_p(n)
        for lam in enumerate_partitions(n):
            img = phi(mat.expand(lam))
            if hall_pairing(img, img) != hook_product(lam) ** 2:
                bad.append({"lambda": lam.as_list(), "check": "norm"})
            if img != hook_product(lam) * schur_in_p(lam):
                bad.append({"lambda": lam.as_list(), "check": "schur"})
    out.append(
        _result(
            f"fixed classes have norm h^2 and image h(lam) s_lam, |lam| <= {limit}", bad
        )
    )

    bad = []
    for n in range(min(max_n, 6) + 1):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                sig = star_hilb(
                    Fraction(1, hook_product(lam)) * FockVector.unit(lam),
                    Fraction(1, hook_product(mu)) * FockVector.unit(mu),
                    n,
                )
                want = (
                    Fraction((-1) ** n) * FockVector.unit(lam)
                    if lam == mu
                    else FockVector()
                )
                if sig != want:
                    bad.append({"lambda": lam.as_list(), "mu": mu.as_list()})
    out.append(
        _result(f"diagonal law for normalized fixed classes, n <= {min(max_n, 6)}", bad)
    )
    return out


def suite_diagrams(max_n: int = 6) -> list[CheckResult]:
    """Comparison-map diagrams, ring homomorphism and pairing transport laws."""
    out = []

    bad = []
    for m in range(1, 5):
        for d in range(max_n - m + 1):
            for lam in enumerate_partitions(d):
                v = FockVector.unit(lam)
                if pullback_f(fixed_creation(m, v, d)) != b1_creation(m, pullback_f(v), d):
                    bad.append({"m": m, "lambda": lam.as_list()})
    out.append(_result(f"pullback_f intertwines creation, degrees <= {max_n}", bad))

    bad = []
    for m in range(1, 5):
        for dd in range(m + 1, max_n + 2):
            for mu in enumerate_partitions(dd):
                v = FockVector.unit(mu)
                lhs = pullback_g(fixed_annihilation(m, v, dd))
                rhs = b1_annihilation(m, pullback_g(v), dd - 1)
                if lhs != rhs:
                    bad.append({"m": m, "mu": mu.as_list()})
    out.append(_result(f"pullback_g intertwines annihilation, degrees <= {max_n}", bad))

    bad = []
    for m in range(1, max_n + 1):
        creation_vac = p_vector_to_fixed(FockVector.unit(Partition([m])), m)
        lhs = pullback_g(creation_vac)
        rhs = Fraction(m) * b2_vector_to_b1(
            FockVector.unit(B2Key(m - 1, Partition())), m - 1
        )
        if lhs != rhs:
            bad.append({"m": m})
    out.append(
        _result(f"vacuum relation g(a_-m vacuum) = m t^(m-1) vacuum, m <= {max_n}", bad)
    )

    bad = []
    for m in range(1, 5):
        for dd in range(1, max_n - m + 2):
            for mu in enumerate_partitions(dd):
                v = FockVector.unit(mu)
                lhs = pullback_g(fixed_creation(m, v, dd))
                rhs = b1_creation(m, pullback_g(v), dd - 1) - Fraction(m) * (
                    _b1_translate_pow(pullback_f(v), dd, m - 1)
                )
                if lhs != rhs:
                    bad.append({"m": m, "mu": mu.as_list()})
    out.append(_result(f"mixed relation for g after creation, degrees <= {max_n}", bad))

    limit = min(max_n, 5)
    bad = []
    for n in range(limit + 1):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                x, y = FockVector.unit(lam), FockVector.unit(mu)
                if pullback_f(star_hilb(x, y, n)) != star_b1(
                    pullback_f(x), pullback_f(y), n
                ):
                    bad.append({"map": "f", "lambda": lam.as_list(), "mu": mu.as_list()})
        for lam in enumerate_partitions(n + 1):
            for mu in enumerate_partitions(n + 1):
                x, y = FockVector.unit(lam), FockVector.unit(mu)
                if pullback_g(star_hilb(x, y, n + 1)) != star_b1(
                    pullback_g(x), pullback_g(y), n
                ):
                    bad.append({"map": "g", "lambda": lam.as_list(), "mu": mu.as_list()})
    out.append(_result(f"comparison maps are ring homomorphisms, n <= {limit}", bad))

    bad = []
    for n in range(max_n + 1):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                x, y = FockVector.unit(lam), FockVector.unit(mu)
                if pair_b1(pullback_f(x), pullback_f(y)) != pair_hilb_fixed(x, y):
                    bad.append({"map": "f", "lambda": lam.as_list(), "mu": mu.as_list()})
        for lam in enumerate_partitions(n + 1):
            for mu in enumerate_partitions(n + 1):
                x, y = FockVector.unit(lam), FockVector.unit(mu)
                if pair_b1(pullback_g(x), pullback_g(y)) != (n + 1) * pair_hilb_fixed(x, y):
                    bad.append({"map": "g", "lambda": lam.as_list(), "mu": mu.as_list()})
    out.append(_result(f"bilinear form transport laws, n <= {max_n}", bad))
    return out


def suite_ordinary(max_n: int = 4) -> list[CheckResult]:
    """Ring axioms and vanishing laws of the ordinary cohomology product."""
    out = []

    bad = []
    for n in range(max_n + 1):
        if ordinary_unit_scale(n) != factorial(n):
            bad.append({"n": n, "u_n": str(ordinary_unit_scale(n))})
        unit = ordinary_unit(n)
        for key in operator_keys(n):
            x = OrdinaryClass(n, FockVector.unit(key))
            if ordinary_cup(unit, x) != x:
                bad.append({"n": n, "key": key.as_json_obj()})
    out.append(_result(f"unit exists with u_n = n!, n <= {max_n}", bad))

    bad = []
    for n in range(max_n + 1):
        basis = [OrdinaryClass(n, FockVector.unit(k)) for k in operator_keys(n)]
        for a in basis:
            for b in basis:
                ab = ordinary_cup(a, b)
                if ab != ordinary_cup(b, a):
                    bad.append({"n": n, "law": "commutativity"})
                for c in basis:
                    if ordinary_cup(ab, c) != ordinary_cup(a, ordinary_cup(b, c)):
                        bad.append({"n": n, "law": "associativity"})
    out.append(
        _result(f"commutative and associative on basis triples, n <= {max_n}", bad)
    )

    bad = []
    for n in range(max_n + 1):
        betti = betti_from_fixed_points(n)
        keys = operator_keys(n)
        for ka in keys:
            da = 2 * (n - ka.nu.length)
            for kb in keys:
                db = 2 * (n - kb.nu.length)
                prod = ordinary_cup(
                    OrdinaryClass(n, FockVector.unit(ka)),
                    OrdinaryClass(n, FockVector.unit(kb)),
                )
                degs = prod.ordinary_degrees()
                if degs and degs != {da + db}:
                    bad.append({"n": n, "law": "degree additivity"})
                k = (da + db) // 2
                if (k >= len(betti) or betti[k] == 0) and prod.vec:
                    bad.append({"n": n, "law": "betti vanishing"})
    out.append(
        _result(f"degree additivity and Betti-zero vanishing, n <= {max_n}", bad)
    )

    top = OrdinaryClass(1, FockVector.unit(B2Key(1, Partition())))
    square = ordinary_cup(top, top)
    out.append(
        _result(
            "top class squares to zero on the 1-point incidence scheme",
            [] if not square.vec else [{"square": repr(square.vec)}],
        )
    )
    return out


def suite_betti(max_n: int = 12) -> list[CheckResult]:
    """Betti tables agree with the fixed-point counts and dimensions."""
    series = betti_series(max_n)
    bad = []
    for n in range(max_n + 1):
        counts = betti_from_fixed_points(n)
        pairs = len(enumerate_incidence_pairs(n))
        keys = len(b2_keys(n))
        if series[n] != counts or sum(counts) != pairs or pairs != keys:
            bad.append(
                {
                    "n": n,
                    "series": series[n],
                    "cells": counts,
                    "pairs": pairs,
                    "operator_keys": keys,
                }
            )
    return [_result(f"betti series = cell counts = dimensions, n <= {max_n}", bad)]


SUITES: dict[str, tuple[Callable[[int], list[CheckResult]], int]] = {
    "hooks": (suite_hooks, 10),
    "euler": (suite_euler, 8),
    "heisenberg": (suite_heisenberg, 6),
    "loop": (suite_loop, 6),
    "pairing": (suite_pairing, 8),
    "roundtrip": (suite_roundtrip, 8),
    "phi": (suite_phi, 9),
    "diagrams": (suite_diagrams, 6),
    "ordinary": (suite_ordinary, 4),
    "betti": (suite_betti, 12),
}


def run_suite(name: str, max_n: int | None = None) -> list[CheckResult]:
    """Run one named suite, or every suite with ``all``."""
    if name == "all":
        results = []
        for key in SUITES:
            results.extend(run_suite(key, max_n))
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    fn, default = SUITES[name]
    return fn(default if max_n is None else max_n)
