"""Exact root-system data for A_n, B_n, C_n, D_n, F_4, G_2 and the reducible
systems nA_1 and D_2.

Weights are integer tuples in the basis of fundamental weights (omega-basis);
that basis is the universal currency of the whole package.  Euclidean
realizations live in an orthonormal e-basis with exact rational coordinates,
so the half-integer entries of B_n/F_4 and the third-integer entries of G_2
compare exactly.  No floating point is used anywhere in this module.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._linalg import dot, invert, transpose

Weight = tuple[int, ...]
Vector = tuple[Fraction, ...]

LONG = "long"
SHORT = "short"
ONLY = "only"

_FAMILIES = ("A", "B", "C", "D", "F", "G", "nA1")

# Positive-root counts used as a construction-time sanity check.
_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "F": lambda n: 24,
    "G": lambda n: 6,
    "nA1": lambda n: n,
}

_LABEL_RE = re.compile(r"^([ABCDFG])(\d+)$|^(\d+)A1$")


@dataclass(frozen=True)
class AlgebraLabel:
    """A named root system: family letter plus rank.

    family "nA1" denotes the reducible orthogonal sum of rank copies of A_1.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        n = self.rank
        constraint = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 2,
            "F": n == 4,
            "G": n == 2,
            "nA1": n >= 1,
        }[self.family]
        if not constraint:
            raise ValueError(
                f"invalid rank {n} for family {self.family}: "
                f"A needs rank >= 1, B/C/D rank >= 2, F rank 4, G rank 2, nA1 rank >= 1"
            )

    @classmethod
    def parse(cls, text: str) -> "AlgebraLabel":
        m = _LABEL_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse algebra label {text!r} (expected e.g. B3, G2, 3A1)")
        if m.group(3) is not None:
            return cls("nA1", int(m.group(3)))
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        if self.family == "nA1":
            return f"{self.rank}A1"
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootSystemData:
    """Immutable bundle of the exact data attached to a root system.

    positive_roots holds (weight in omega-coords, length class) pairs; the
    class is "long"/"short" for two-length systems and "only" otherwise.
    rho_long/rho_short are the half-sums of the long/short positive roots
    (for single-length systems all roots count as long, so rho_long = rho).
    """

    label: AlgebraLabel
    rank: int
    edim: int
    simple_roots: tuple[Vector, ...]
    fundamental_weights: tuple[Vector, ...]
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[Weight, str], ...]
    simple_classes: tuple[str, ...]
    rho: Weight
    rho_long: Weight
    rho_short: Weight

    def __str__(self) -> str:
        return str(self.label)


def is_dominant(w) -> bool:
    return all(c >= 0 for c in w)


def _check_weight(rs: RootSystemData, w) -> Weight:
    w = tuple(w)
    if len(w) != rs.rank:
        raise ValueError(f"weight {w} has length {len(w)}, {rs.label} has rank {rs.rank}")
    return w


def _e(i: int, dim: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(dim))


def _vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _vscale(c, v) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in v)


def _realization(label: AlgebraLabel):
    """Simple roots and fundamental weights as exact e-basis vectors."""
    fam, n = label.family, label.rank
    if fam == "A":
        dim = n + 1
        roots = [_vadd(_e(i, dim), _vscale(-1, _e(i + 1, dim))) for i in range(n)]
        total = tuple(Fraction(1) for _ in range(dim))
        weights = []
        for i in range(1, n + 1):
            head = tuple(Fraction(int(j < i)) for j in range(dim))
            weights.append(_vadd(head, _vscale(Fraction(-i, n + 1), total)))
        return tuple(roots), tuple(weights), dim
    if fam in ("B", "C"):
        dim = n
        roots = [_vadd(_e(i, dim), _vscale(-1, _e(i + 1, dim))) for i in range(n - 1)]
        roots.append(_e(n - 1, dim) if fam == "B" else _vscale(2, _e(n - 1, dim)))
        weights = [tuple(Fraction(int(j < i)) for j in range(dim)) for i in range(1, n)]
        last = tuple(Fraction(1) for _ in range(dim))
        weights.append(_vscale(Fraction(1, 2), last) if fam == "B" else last)
        return tuple(roots), tuple(weights), dim
    if fam == "D":
        dim = n
        roots = [_vadd(_e(i, dim), _vscale(-1, _e(i + 1, dim))) for i in range(n - 1)]
        roots.append(_vadd(_e(n - 2, dim), _e(n - 1, dim)))
        weights = [tuple(Fraction(int(j < i)) for j in range(dim)) for i in range(1, n - 1)]
        half = Fraction(1, 2)
        weights.append(tuple(half if j < n - 1 else -half for j in range(dim)))
        weights.append(tuple(half for _ in range(dim)))
        return tuple(roots), tuple(weights), dim
    if fam == "F":
        f = Fraction
        roots = (
            (f(0), f(1), f(-1), f(0)),
            (f(0), f(0), f(1), f(-1)),
            (f(0), f(0), f(0), f(1)),
            (f(1, 2), f(-1, 2), f(-1, 2), f(-1, 2)),
        )
        weights = (
            (f(1), f(1), f(0), f(0)),
            (f(2), f(1), f(1), f(0)),
            (f(3, 2), f(1, 2), f(1, 2), f(1, 2)),
            (f(1), f(0), f(0), f(0)),
        )
        return roots, weights, 4
    if fam == "G":
        f = Fraction
        roots = (
            (f(1), f(-1), f(0)),
            (f(-1, 3), f(2, 3), f(-1, 3)),
        )
        weights = (
            (f(1), f(0), f(-1)),
            (f(1, 3), f(1, 3), f(-2, 3)),
        )
        return roots, weights, 3
    if fam == "nA1":
        dim = n
        roots = [_vscale(2, _e(i, dim)) for i in range(n)]
        weights = [_e(i, dim) for i in range(n)]
        return tuple(roots), tuple(weights), dim
    raise AssertionError(fam)


def _all_roots_omega(cartan):
    """Close the simple roots (omega-coordinates = Cartan rows) under simple
    reflections; returns every root of the system."""
    rank = len(cartan)
    seen = {tuple(row) for row in cartan}
    queue = list(seen)
    while queue:
        w = queue.pop()
        for i in range(rank):
            nw = tuple(x - w[i] * c for x, c in zip(w, cartan[i]))
            if nw not in seen:
                seen.add(nw)
                queue.append(nw)
    return seen


def build_root_system(label) -> RootSystemData:
    """Construct the exact data bundle for a supported algebra label.

    Accepts an AlgebraLabel or a string such as "B3", "G2" or "3A1".
    """
    if isinstance(label, str):
        label = AlgebraLabel.parse(label)
    return _build(label)


@lru_cache(maxsize=None)
def _build(label: AlgebraLabel) -> RootSystemData:
    simple_roots, fundamental_weights, edim = _realization(label)
    rank = label.rank

    cartan_frac = [
        [2 * dot(a, b) / dot(b, b) for b in simple_roots] for a in simple_roots
    ]
    for row in cartan_frac:
        for x in row:
            if x.denominator != 1:
                raise AssertionError(f"non-integer Cartan entry for {label}: {x}")
    cartan = tuple(tuple(int(x) for x in row) for row in cartan_frac)

    # Duality check: 2<omega_i|alpha_j>/<alpha_j|alpha_j> must be delta_ij.
    for i, w in enumerate(fundamental_weights):
        for j, a in enumerate(simple_roots):
            if 2 * dot(w, a) / dot(a, a) != int(i == j):
                raise AssertionError(f"fundamental weight duality fails for {label}")

    gram = tuple(
        tuple(dot(u, v) for v in fundamental_weights) for u in fundamental_weights
    )

    ct_inv = invert(transpose(cartan))
    roots = _all_roots_omega(cartan)
    positives = []
    for w in roots:
        coeffs = [sum(ct_inv[i][j] * w[j] for j in range(rank)) for i in range(rank)]
        if all(c >= 0 for c in coeffs):
            positives.append((w, coeffs))
        elif not all(c <= 0 for c in coeffs):
            raise AssertionError(f"root {w} of {label} has mixed-sign coefficients")
    expected = _POSITIVE_COUNT[label.family](rank)
    if len(positives) != expected:
        raise AssertionError(
            f"{label}: generated {len(positives)} positive roots, expected {expected}"
        )
    positives.sort(key=lambda rc: (sum(rc[1]), rc[0]))

    def evec(w):
        out = tuple(Fraction(0) for _ in range(edim))
        for wi, fw in zip(w, fundamental_weights):
            out = _vadd(out, _vscale(wi, fw))
        return out

    lengths = sorted({dot(evec(w), evec(w)) for w, _ in positives})
    if len(lengths) > 2:
        raise AssertionError(f"{label}: more than two root lengths {lengths}")

    def classify(w):
        if len(lengths) == 1:
            return ONLY
        return LONG if dot(evec(w), evec(w)) == lengths[-1] else SHORT

    positive_roots = tuple((w, classify(w)) for w, _ in positives)
    simple_classes = tuple(classify(row) for row in cartan)

    rho = tuple(1 for _ in range(rank))
    long_sum = [0] * rank
    short_sum = [0] * rank
    for w, cls in positive_roots:
        target = short_sum if cls == SHORT else long_sum
        for j, x in enumerate(w):
            target[j] += x
    if any(x % 2 for x in long_sum) or any(x % 2 for x in short_sum):
        raise AssertionError(f"{label}: half-sum of tagged roots is not a weight")
    rho_long = tuple(x // 2 for x in long_sum)
    rho_short = tuple(x // 2 for x in short_sum)
    if tuple(a + b for a, b in zip(rho_long, rho_short)) != rho:
        raise AssertionError(f"{label}: rho_long + rho_short != rho")

    return RootSystemData(
        label=label,
        rank=rank,
        edim=edim,
        simple_roots=simple_roots,
        fundamental_weights=fundamental_weights,
        cartan=cartan,
        gram=gram,
        positive_roots=positive_roots,
        simple_classes=simple_classes,
        rho=rho,
        rho_long=rho_long,
        rho_short=rho_short,
    )


def inner_product(rs: RootSystemData, a, b) -> Fraction:
    """Exact scalar product of two weights given in omega-coordinates."""
    a = _check_weight(rs, a)
    b = _check_weight(rs, b)
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai:
            row = rs.gram[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
    return total


def to_e_basis(rs: RootSystemData, w) -> Vector:
    """Expand a weight over the fundamental-weight vectors of the realization."""
    w = _check_weight(rs, w)
    out = tuple(Fraction(0) for _ in range(rs.edim))
    for wi, fw in zip(w, rs.fundamental_weights):
        if wi:
            out = _vadd(out, _vscale(wi, fw))
    return out


def from_e_basis(rs: RootSystemData, v) -> Weight:
    """Inverse of to_e_basis on the weight lattice.

    Raises ValueError if v does not pair integrally with the coroots.
    """
    v = tuple(Fraction(x) for x in v)
    if len(v) != rs.edim:
        raise ValueError(f"vector has length {len(v)}, expected {rs.edim}")
    coords = []
    for a in rs.simple_roots:
        c = 2 * dot(v, a) / dot(a, a)
        if c.denominator != 1:
            raise ValueError(f"{v} is not in the weight lattice of {rs.label}")
        coords.append(int(c))
    return tuple(coords)


def root_e_vector(rs: RootSystemData, w) -> Vector:
    """e-basis vector of a root (or any weight) given in omega-coordinates."""
    return to_e_basis(rs, w)


def dominant_weights_up_to(rs: RootSystemData, max_coord: int):
    """All dominant weights with every coordinate <= max_coord, in
    lexicographic order."""
    if max_coord < 0:
        raise ValueError("max_coord must be >= 0")
    return [tuple(c) for c in itertools.product(range(max_coord + 1), repeat=rs.rank)]
