"""Long- and short-root subsystems of B_n, C_n, F_4 and G_2.

For each parent and kind this module fixes a simple base of the subsystem
(inside the parent's Euclidean realization), derives the exact change of
coordinates from parent fundamental-weight coordinates to subsystem ones, and
exposes the transversal subgroup generated by the opposite-length simple
reflections together with its (permutation) action on subsystem-dominant
weights.

The conversion matrix is always derived from first principles as
convert(w)_i = 2<w|beta_i>/<beta_i|beta_i> over the base vectors beta_i; it
is never transcribed from a table, and construction cross-checks it against
the parent data (the image of the long/short rho must be the subsystem rho).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._linalg import dot, invert
from .rootsystem import (
    AlgebraLabel,
    RootSystemData,
    Vector,
    Weight,
    _vadd,
    _vscale,
    _e,
    build_root_system,
    is_dominant,
    to_e_basis,
)

KIND_TO_CLASS = {"long": "long", "short": "short"}


@dataclass(frozen=True)
class SubsystemEmbedding:
    parent: AlgebraLabel
    kind: str
    sub: RootSystemData
    base: tuple[Vector, ...]
    convert_matrix: tuple[tuple[int, ...], ...]
    convert_inverse: tuple[tuple[Fraction, ...], ...]
    transversal_generators: tuple[int, ...]
    base_permutations: tuple[tuple[int, ...], ...]


def _base_table(parent: AlgebraLabel, kind: str):
    """Subsystem base vectors (parent e-basis), subsystem label, and the
    1-based parent indices generating the transversal subgroup."""
    fam, n = parent.family, parent.rank
    one = Fraction(1)

    def e(i):
        return _e(i, n)

    if fam == "B":
        if kind == "long":
            base = [_vadd(e(i), _vscale(-1, e(i + 1))) for i in range(n - 1)]
            base.append(_vadd(e(n - 2), e(n - 1)))
            return tuple(base), AlgebraLabel("D", n), (n,)
        base = [e(i) for i in range(n)]
        return tuple(base), AlgebraLabel("nA1", n), tuple(range(1, n))
    if fam == "C":
        if kind == "long":
            base = [_vscale(2, e(i)) for i in range(n)]
            return tuple(base), AlgebraLabel("nA1", n), tuple(range(1, n))
        base = [_vadd(e(i), _vscale(-1, e(i + 1))) for i in range(n - 1)]
        base.append(_vadd(e(n - 2), e(n - 1)))
        return tuple(base), AlgebraLabel("D", n), (n,)
    if fam == "F":
        f = Fraction
        if kind == "long":
            base = (
                (one, -one, f(0), f(0)),
                (f(0), one, -one, f(0)),
                (f(0), f(0), one, -one),
                (f(0), f(0), one, one),
            )
            return base, AlgebraLabel("D", 4), (3, 4)
        base = (
            (f(0), one, f(0), f(0)),
            (f(1, 2), f(-1, 2), f(-1, 2), f(-1, 2)),
            (f(0), f(0), one, f(0)),
            (f(0), f(0), f(0), one),
        )
        return base, AlgebraLabel("D", 4), (1, 2)
    if fam == "G":
        f = Fraction
        if kind == "long":
            base = (
                (one, -one, f(0)),
                (f(0), one, -one),
            )
            return base, AlgebraLabel("A", 2), (2,)
        base = (
            (f(2, 3), f(-1, 3), f(-1, 3)),
            (f(-1, 3), f(2, 3), f(-1, 3)),
        )
        return base, AlgebraLabel("A", 2), (1,)
    raise ValueError(
        f"no long/short subsystem for {parent}: only B, C, F and G have two root lengths"
    )


def _reflect_vector(v: Vector, beta: Vector) -> Vector:
    coef = 2 * dot(v, beta) / dot(beta, beta)
    return tuple(x - coef * b for x, b in zip(v, beta))


def build_embedding(parent, kind: str) -> SubsystemEmbedding:
    """Construct the long or short subsystem embedding of a parent algebra."""
    if isinstance(parent, str):
        parent = AlgebraLabel.parse(parent)
    elif isinstance(parent, RootSystemData):
        parent = parent.label
    if kind not in KIND_TO_CLASS:
        raise ValueError(f"kind must be 'long' or 'short', got {kind!r}")
    return _build_embedding(parent, kind)


@lru_cache(maxsize=None)
def _build_embedding(parent: AlgebraLabel, kind: str) -> SubsystemEmbedding:
    prs = build_root_system(parent)
    base, sub_label, generators = _base_table(parent, kind)
    sub = build_root_system(sub_label)

    # The base must consist of parent roots of the requested length class.
    tagged = {to_e_basis(prs, w): cls for w, cls in prs.positive_roots}
    for beta in base:
        if tagged.get(beta) != KIND_TO_CLASS[kind]:
            raise AssertionError(f"{parent} {kind}: base vector {beta} is not a {kind} root")

    # The base, in its listed order, must realize the subsystem's Cartan matrix.
    induced = tuple(
        tuple(int(2 * dot(a, b) / dot(b, b)) for b in base) for a in base
    )
    if induced != sub.cartan:
        raise AssertionError(f"{parent} {kind}: base ordering does not match {sub_label}")

    rows = []
    for beta in base:
        norm = dot(beta, beta)
        row = []
        for fw in prs.fundamental_weights:
            c = 2 * dot(fw, beta) / norm
            if c.denominator != 1:
                raise AssertionError(f"{parent} {kind}: non-integer conversion entry {c}")
            row.append(int(c))
        rows.append(tuple(row))
    convert_matrix = tuple(rows)
    convert_inverse = invert(convert_matrix)

    rho_kind = prs.rho_long if kind == "long" else prs.rho_short
    ones = tuple(1 for _ in range(prs.rank))
    if tuple(sum(r[j] * rho_kind[j] for j in range(prs.rank)) for r in convert_matrix) != ones:
        raise AssertionError(f"{parent} {kind}: half-sum of {kind} roots is not the subsystem rho")

    index_of = {beta: i for i, beta in enumerate(base)}
    perms = []
    for g in generators:
        alpha = prs.simple_roots[g - 1]
        perm = []
        for beta in base:
            image = _reflect_vector(beta, alpha)
            if image not in index_of:
                raise AssertionError(
                    f"{parent} {kind}: generator r_{g} does not permute the base"
                )
            perm.append(index_of[image])
        perms.append(tuple(perm))

    return SubsystemEmbedding(
        parent=parent,
        kind=kind,
        sub=sub,
        base=base,
        convert_matrix=convert_matrix,
        convert_inverse=convert_inverse,
        transversal_generators=generators,
        base_permutations=tuple(perms),
    )


def convert_weight(emb: SubsystemEmbedding, w) -> Weight:
    """Parent omega-coordinates to subsystem omega-coordinates."""
    w = tuple(w)
    if len(w) != len(emb.convert_matrix[0]):
        raise ValueError(f"weight {w} has wrong rank for {emb.parent}")
    return tuple(sum(r[j] * w[j] for j in range(len(w))) for r in emb.convert_matrix)


def parent_preimage(emb: SubsystemEmbedding, sub_w) -> Weight | None:
    """The parent integer weight mapping to sub_w, or None when sub_w is not
    in the image of the parent weight lattice."""
    sub_w = tuple(sub_w)
    coords = []
    for row in emb.convert_inverse:
        c = sum(row[j] * sub_w[j] for j in range(len(sub_w)))
        if c.denominator != 1:
            return None
        coords.append(int(c))
    return tuple(coords)


def transversal_orbit(emb: SubsystemEmbedding, lam) -> frozenset[Weight]:
    """Image of the transversal orbit of a parent-dominant weight, as a set
    of subsystem-dominant weights in subsystem coordinates.

    Computed by closing convert(lam) under the permutations the generators
    induce on the subsystem fundamental weights; the full Weyl group is never
    enumerated.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    start = convert_weight(emb, lam)
    seen = {start}
    queue = [start]
    while queue:
        w = queue.pop()
        for perm in emb.base_permutations:
            nw = tuple(w[perm[j]] for j in range(len(w)))
            if nw not in seen:
                seen.add(nw)
                queue.append(nw)
    for w in seen:
        if not is_dominant(w):
            raise AssertionError(f"transversal orbit element {w} is not dominant")
    return frozenset(seen)


def transversal_group_order(emb: SubsystemEmbedding) -> int:
    """Order of the subgroup generated by the transversal generators,
    computed by explicit closure of their integer matrices on parent
    omega-coordinates."""
    prs = build_root_system(emb.parent)
    rank = prs.rank

    def gen_matrix(g):
        row_g = prs.cartan[g - 1]
        return tuple(
            tuple(int(a == b) - int(a == g - 1) * row_g[b] for b in range(rank))
            for a in range(rank)
        )

    def matmul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(rank)) for j in range(rank))
            for i in range(rank)
        )

    gens = [gen_matrix(g) for g in emb.transversal_generators]
    identity = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    seen = {identity}
    queue = [identity]
    while queue:
        m = queue.pop()
        for g in gens:
            nm = matmul(m, g)
            if nm not in seen:
                seen.add(nm)
                queue.append(nm)
    return len(seen)
