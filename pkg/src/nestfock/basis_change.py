"""Transformations among the bases of the incidence Fock module.

Three bases of the degree-n piece are handled, all indexed
deterministically:

* b1 - fixed-point basis, keys = incidence pairs in enumeration order;
* b2 - operator basis, keys = (i, nu) with i descending;
* b3 - curve basis, keys = incidence pairs in enumeration order.

The curve basis is expanded in the operator basis by a double
induction on size and length, and in the fixed-point basis by a
triangular Gram solve: the Gram matrix of the curve basis under the
operator-basis pairing must factor as M D M^T with D the diagonal of
fixed-point self-pairings and M triangular with known diagonal.  All
arithmetic is exact.

The same Gram-solve pattern expands the n-point fixed classes in the
creation basis on the Hilbert side.

Degree-level matrices can be persisted as JSON documents with a
checksum; a version mismatch is a cache miss, a corrupted file is an
explicit error.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .curve_classes import create_b3, nakajima_L, translate_b3_pow
from .fock import (
    B2Key,
    FockVector,
    annihilation,
    b2_keys,
    cotranslate,
    creation,
    hilb_annihilation,
    hilb_creation,
    pair_b2,
    pair_hilb_p,
    translate,
    translate_pow,
)
from .incidence import IncidencePair, enumerate_incidence_pairs, h_pair, h_plus
from .partitions import Partition, enumerate_partitions, hook_product, remove_part

LIBRARY_VERSION = "0.1.0"

BASIS_TAGS = ("b1", "b2", "b3")


class CacheError(Exception):
    """A persisted matrix document is damaged or inconsistent."""


# ---------------------------------------------------------------------------
# exact dense linear algebra

def mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    return [
        [sum((ra[k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for ra in a
    ]


def mat_inv(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Inverse by exact Gauss-Jordan elimination; raises on singular input."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def identity_rows(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# key books

@lru_cache(maxsize=None)
def pair_keys(n: int) -> tuple[IncidencePair, ...]:
    return tuple(enumerate_incidence_pairs(n))


@lru_cache(maxsize=None)
def operator_keys(n: int) -> tuple[B2Key, ...]:
    return tuple(b2_keys(n))


@lru_cache(maxsize=None)
def partition_keys(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n))


def _pair_sort_key(p: IncidencePair):
    # ascending tuple order refines the product dominance order
    return (p.lam.parts, p.mu.parts)


def _partition_sort_key(lam: Partition):
    return lam.parts


# ---------------------------------------------------------------------------
# transition matrix value type

def key_to_obj(tag: str, key) -> object:
    if tag in ("b1", "b3"):
        return key.as_json_obj()
    if tag == "b2":
        return key.as_json_obj()
    return key.as_list()


def key_from_obj(tag: str, obj) -> object:
    if tag in ("b1", "b3"):
        return IncidencePair(Partition(obj["lambda"]), Partition(obj["mu"]))
    if tag == "b2":
        return B2Key(int(obj["i"]), Partition(obj["nu"]))
    return Partition(obj)


class TransitionMatrix:
    """Exact change-of-basis matrix for one graded piece.

    Row key p expands the source basis element p in the target basis:
    p = sum_q rows[p][q] * q.
    """

    __slots__ = ("source", "target", "degree", "row_keys", "col_keys", "rows")

    def __init__(self, source, target, degree, row_keys, col_keys, rows) -> None:
        self.source = source
        self.target = target
        self.degree = degree
        self.row_keys = tuple(row_keys)
        self.col_keys = tuple(col_keys)
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if len(self.rows) != len(self.row_keys) or any(
            len(r) != len(self.col_keys) for r in self.rows
        ):
            raise ValueError("matrix shape does not match key lists")

    def expand(self, key) -> FockVector:
        i = self.row_keys.index(key)
        return FockVector(zip(self.col_keys, self.rows[i]))

    def apply(self, v: FockVector) -> FockVector:
        """Image of a vector given in source-basis coordinates."""
        out = FockVector()
        for key, c in v.items():
            out = out + c * self.expand(key)
        return out

    def inverse(self) -> "TransitionMatrix":
        return TransitionMatrix(
            self.target, self.source, self.degree, self.col_keys, self.row_keys,
            mat_inv([list(r) for r in self.rows]),
        )

    def entry(self, row_key, col_key) -> Fraction:
        return self.rows[self.row_keys.index(row_key)][self.col_keys.index(col_key)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TransitionMatrix)
            and self.source == other.source
            and self.target == other.target
            and self.degree == other.degree
            and self.row_keys == other.row_keys
            and self.col_keys == other.col_keys
            and self.rows == other.rows
        )

    def payload(self) -> dict:
        return {
            "version": LIBRARY_VERSION,
            "source": self.source,
            "target": self.target,
            "n": self.degree,
            "key_order": {
                "rows": [key_to_obj(self.source, k) for k in self.row_keys],
                "cols": [key_to_obj(self.target, k) for k in self.col_keys],
            },
            "rows": [[str(x) for x in row] for row in self.rows],
        }

    def to_json_doc(self) -> dict:
        doc = self.payload()
        doc["checksum"] = _checksum(doc)
        return doc

    @classmethod
    def from_json_doc(cls, doc: dict) -> "TransitionMatrix":
        payload = {k: v for k, v in doc.items() if k != "checksum"}
        if doc.get("checksum") != _checksum(payload):
            raise CacheError("checksum mismatch")
        return cls(
            doc["source"],
            doc["target"],
            doc["n"],
            [key_from_obj(doc["source"], o) for o in doc["key_order"]["rows"]],
            [key_from_obj(doc["target"], o) for o in doc["key_order"]["cols"]],
            [[Fraction(x) for x in row] for row in doc["rows"]],
        )


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


# ---------------------------------------------------------------------------
# curve basis in the operator basis

_B3_IN_B2: dict[tuple[IncidencePair, bool], FockVector] = {}


def b3_in_b2(pair: IncidencePair, *, smallest_shared: bool = False) -> FockVector:
    """Expansion of a curve-basis key in the operator basis.

    Double induction: the size-0 key is the vacuum; for a one-part lam
    the two keys are the pure translate (n, empty) and the difference
    (0, (n)) - (n, empty); otherwise pick the largest part shared by
    lam and mu (the smallest with ``smallest_shared=True``; the result
    is independent of the choice), strip one copy from both, apply the
    curve-basis creation operator to the stripped key and solve for
    the target term.  Absorption terms are translates of the stripped
    key and are expanded via the translation operator; all remaining
    terms have shorter lam and recurse.
    """
    memo_key = (pair, smallest_shared)
    hit = _B3_IN_B2.get(memo_key)
    if hit is not None:
        return hit

    lam, mu = pair.lam, pair.mu
    n = lam.size
    if n == 0:
        result = FockVector.unit(B2Key(0, Partition()))
    elif lam.length == 1:
        if mu.length == 1:
            result = FockVector.unit(B2Key(n, Partition()))
        else:
            result = FockVector.unit(B2Key(0, lam)) - FockVector.unit(B2Key(n, Partition()))
    else:
        shared = sorted(set(lam.parts) & set(mu.parts))
        if not shared:
            raise RuntimeError(f"no shared part for {pair}")
        m = shared[0] if smallest_shared else shared[-1]
        src = IncidencePair(remove_part(lam, m), remove_part(mu, m))
        src_exp = b3_in_b2(src, smallest_shared=smallest_shared)
        acc = creation(m, src_exp)
        terms = create_b3(m, FockVector.unit(src))
        target_coeff = terms[pair]
        if not target_coeff:
            raise RuntimeError(f"target {pair} missing from expansion of {src}")
        absorption = translate_b3_pow(src, m)
        for q, c in terms.items():
            if q == pair:
                continue
            if q == absorption:
                acc = acc - c * translate_pow(src_exp, m)
            else:
                acc = acc - c * b3_in_b2(q, smallest_shared=smallest_shared)
        result = acc * (Fraction(1) / target_coeff)

    _B3_IN_B2[memo_key] = result
    return result


@lru_cache(maxsize=None)
def b3_in_b2_matrix(n: int) -> TransitionMatrix:
    pairs = pair_keys(n)
    cols = operator_keys(n)
    rows = []
    for p in pairs:
        exp = b3_in_b2(p)
        rows.append([exp[k] for k in cols])
    return TransitionMatrix("b3", "b2", n, pairs, cols, rows)


@lru_cache(maxsize=None)
def gram_b3(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the curve basis under the operator-basis pairing."""
    pairs = pair_keys(n)
    exps = [b3_in_b2(p) for p in pairs]
    g = [[Fraction(0)] * len(pairs) for _ in pairs]
    for a in range(len(pairs)):
        for b in range(a, len(pairs)):
            val = pair_b2(exps[a], exps[b])
            g[a][b] = val
            g[b][a] = val
    return tuple(tuple(row) for row in g)


# ---------------------------------------------------------------------------
# triangular Gram solve

def _gram_solve(keys, sort_key, gram, diagonal, weight, label: str):
    """Recover M from G = M diag(weight) M^T with known diagonal.

    M is lower triangular along the given linear extension of the
    keys.  Rows are processed upward; each off-diagonal entry is
    isolated from the pairing with an already-finished row, and each
    finished row must reproduce its Gram diagonal exactly.
    """
    order = sorted(range(len(keys)), key=lambda i: sort_key(keys[i]))
    m = [[Fraction(0)] * len(keys) for _ in keys]
    for rank_p, ip in enumerate(order):
        for rank_q in range(rank_p):
            iq = order[rank_q]
            acc = Fraction(0)
            for rank_t in range(rank_q):
                it = order[rank_t]
                if m[ip][it] and m[iq][it]:
                    acc += m[ip][it] * m[iq][it] * weight(keys[it])
            m[ip][iq] = (gram[ip][iq] - acc) / (m[iq][iq] * weight(keys[iq]))
        m[ip][ip] = diagonal(keys[ip])
        check = Fraction(0)
        for rank_t in range(rank_p + 1):
            it = order[rank_t]
            if m[ip][it]:
                check += m[ip][it] ** 2 * weight(keys[it])
        if check != gram[ip][ip]:
            raise ArithmeticError(
                f"{label}: diagonal consistency failed at {keys[ip]!r}: "
                f"{check} != {gram[ip][ip]}"
            )
    return m


@lru_cache(maxsize=None)
def b3_in_b1(n: int) -> TransitionMatrix:
    """Curve basis expanded in the fixed-point basis via the Gram solve.

    Diagonal entries are 1/h_plus(pair); pairing weights are
    h(lam, mu); triangularity is along the product dominance order.
    """
    pairs = pair_keys(n)
    rows = _gram_solve(
        pairs,
        _pair_sort_key,
        gram_b3(n),
        lambda p: Fraction(1, h_plus(p)),
        lambda p: Fraction(h_pair(p)),
        f"b3_in_b1({n})",
    )
    return TransitionMatrix("b3", "b1", n, pairs, pairs, rows)


@lru_cache(maxsize=None)
def b2_in_b1(n: int) -> TransitionMatrix:
    a = b3_in_b2_matrix(n)
    m = b3_in_b1(n)
    rows = mat_mul(mat_inv([list(r) for r in a.rows]), [list(r) for r in m.rows])
    return TransitionMatrix("b2", "b1", n, a.col_keys, m.col_keys, rows)


@lru_cache(maxsize=None)
def b1_in_b2(n: int) -> TransitionMatrix:
    return b2_in_b1(n).inverse()


def transition_matrix(source: str, target: str, n: int) -> TransitionMatrix:
    """Change-of-basis matrix between any two of b1, b2, b3 at degree n."""
    if source not in BASIS_TAGS or target not in BASIS_TAGS:
        raise ValueError(f"unknown basis tag: {source!r} or {target!r}")
    if source == target:
        keys = operator_keys(n) if source == "b2" else pair_keys(n)
        return TransitionMatrix(source, target, n, keys, keys, identity_rows(len(keys)))
    if (source, target) == ("b3", "b2"):
        return b3_in_b2_matrix(n)
    if (source, target) == ("b3", "b1"):
        return b3_in_b1(n)
    if (source, target) == ("b2", "b1"):
        return b2_in_b1(n)
    if (source, target) == ("b1", "b2"):
        return b1_in_b2(n)
    if (source, target) == ("b2", "b3"):
        return b3_in_b2_matrix(n).inverse()
    return b3_in_b1(n).inverse()  # b1 -> b3


def b2_vector_to_b1(v: FockVector, n: int) -> FockVector:
    return b2_in_b1(n).apply(v)


def b1_vector_to_b2(v: FockVector, n: int) -> FockVector:
    return b1_in_b2(n).apply(v)


# operators conjugated into fixed-point coordinates

def b1_creation(m: int, v: FockVector, n: int) -> FockVector:
    """Creation of index m on a degree-n vector in fixed-point coordinates."""
    if not v:
        return FockVector()
    return b2_vector_to_b1(creation(m, b1_vector_to_b2(v, n)), n + m)


def b1_annihilation(m: int, v: FockVector, n: int) -> FockVector:
    if not v or n - m < 0:
        return FockVector()
    w = annihilation(m, b1_vector_to_b2(v, n))
    return b2_vector_to_b1(w, n - m) if w else FockVector()


def b1_translate(v: FockVector, n: int) -> FockVector:
    if not v:
        return FockVector()
    return b2_vector_to_b1(translate(b1_vector_to_b2(v, n)), n + 1)


def b1_cotranslate(v: FockVector, n: int) -> FockVector:
    if not v or n == 0:
        return FockVector()
    w = cotranslate(b1_vector_to_b2(v, n))
    return b2_vector_to_b1(w, n - 1) if w else FockVector()


def fixed_creation(m: int, v: FockVector, n: int) -> FockVector:
    """Creation of index m on n-point fixed classes."""
    if not v:
        return FockVector()
    return p_vector_to_fixed(hilb_creation(m, fixed_vector_to_p(v, n)), n + m)


def fixed_annihilation(m: int, v: FockVector, n: int) -> FockVector:
    if not v or n - m < 0:
        return FockVector()
    w = hilb_annihilation(m, fixed_vector_to_p(v, n))
    return p_vector_to_fixed(w, n - m) if w else FockVector()


# ---------------------------------------------------------------------------
# Hilbert side: curve and fixed classes in the creation basis

_HILB_L: dict[Partition, FockVector] = {}


def hilb_L_in_p(lam: Partition) -> FockVector:
    """n-point curve class expanded in the creation basis.

    Induction on (size, length): strip the largest part m, apply the
    creation operator of index m to the stripped expansion, and solve
    for the target; the other terms of the curve-basis creation rule
    have shorter key partitions.
    """
    hit = _HILB_L.get(lam)
    if hit is not None:
        return hit
    if lam.size == 0:
        result = FockVector.unit(Partition())
    else:
        m = lam[0]
        stripped = remove_part(lam, m)
        acc = hilb_creation(m, hilb_L_in_p(stripped))
        terms = nakajima_L(m, FockVector.unit(stripped))
        target_coeff = terms[lam]
        for q, c in terms.items():
            if q != lam:
                acc = acc - c * hilb_L_in_p(q)
        result = acc * Fraction(1, target_coeff)
    _HILB_L[lam] = result
    return result


@lru_cache(maxsize=None)
def hilb_L_in_p_matrix(n: int) -> TransitionMatrix:
    keys = partition_keys(n)
    rows = []
    for lam in keys:
        exp = hilb_L_in_p(lam)
        rows.append([exp[nu] for nu in keys])
    return TransitionMatrix("hilb_L", "hilb_p", n, keys, keys, rows)


@lru_cache(maxsize=None)
def hilb_L_in_fixed(n: int) -> TransitionMatrix:
    """Curve classes in the fixed basis: Gram solve with diagonal 1/hook_product."""
    keys = partition_keys(n)
    lmat = hilb_L_in_p_matrix(n)
    exps = [lmat.expand(k) for k in keys]
    gram = tuple(
        tuple(pair_hilb_p(exps[a], exps[b]) for b in range(len(keys)))
        for a in range(len(keys))
    )
    rows = _gram_solve(
        keys,
        _partition_sort_key,
        gram,
        lambda lam: Fraction(1, hook_product(lam)),
        lambda lam: Fraction(hook_product(lam)) ** 2,
        f"hilb_L_in_fixed({n})",
    )
    return TransitionMatrix("hilb_L", "hilb_fixed", n, keys, keys, rows)


@lru_cache(maxsize=None)
def hilb_fixed_in_p(n: int) -> TransitionMatrix:
    keys = partition_keys(n)
    m = hilb_L_in_fixed(n)
    lmat = hilb_L_in_p_matrix(n)
    rows = mat_mul(mat_inv([list(r) for r in m.rows]), [list(r) for r in lmat.rows])
    return TransitionMatrix("hilb_fixed", "hilb_p", n, keys, keys, rows)


@lru_cache(maxsize=None)
def hilb_p_in_fixed(n: int) -> TransitionMatrix:
    return hilb_fixed_in_p(n).inverse()


def fixed_vector_to_p(v: FockVector, n: int) -> FockVector:
    return hilb_fixed_in_p(n).apply(v)


def p_vector_to_fixed(v: FockVector, n: int) -> FockVector:
    return hilb_p_in_fixed(n).apply(v)


# ---------------------------------------------------------------------------
# persistent cache

def _cache_path(cache_dir, source: str, target: str, n: int) -> Path:
    return Path(cache_dir) / f"{source}--{target}--{n}.json"


def cache_store(matrix: TransitionMatrix, cache_dir) -> Path:
    """Write the matrix document; returns the file path."""
    path = _cache_path(cache_dir, matrix.source, matrix.target, matrix.degree)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(matrix.to_json_doc(), indent=2) + "\n")
    return path


def cache_load(source: str, target: str, n: int, cache_dir) -> TransitionMatrix | None:
    """Load a stored matrix; None on absence or version mismatch.

    A file that exists but fails to parse or verify raises CacheError
    rather than being silently recomputed.
    """
    path = _cache_path(cache_dir, source, target, n)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"unreadable cache file {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise CacheError(f"malformed cache file {path}")
    if doc.get("version") != LIBRARY_VERSION:
        return None
    try:
        return TransitionMatrix.from_json_doc(doc)
    except CacheError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise CacheError(f"malformed cache file {path}: {exc}") from exc
