"""Weyl group actions on weights, signed orbit generation, and the three
sign homomorphisms (determinant sign, long sign, short sign).

All reflections act on omega-coordinates, where the simple reflection r_i is
the integer operation w -> w - w_i * (i-th Cartan row).  The long sign is -1
exactly on reflections in long roots and the short sign is -1 exactly on
reflections in short roots; single-length systems count every root as long.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsystem import (
    LONG,
    ONLY,
    RootSystemData,
    Weight,
    _check_weight,
    is_dominant,
)

PLAIN = "plain"
KINDS = (PLAIN, "long", "short")

# Index into a (sign, sign_long, sign_short) triple for each sum kind.
SIGN_COMPONENT = {PLAIN: 0, "long": 1, "short": 2}


class DegenerateSeedError(ValueError):
    """Raised when a signed orbit is requested for a seed whose stabilizer
    does not lie in the kernel of the requested sign homomorphism."""


@dataclass(frozen=True)
class SignedWeight:
    weight: Weight
    sign: int
    sign_long: int
    sign_short: int


@dataclass(frozen=True)
class OrbitSet:
    """A full Weyl orbit with the signs accumulated along the breadth-first
    generation words.  For non-regular seeds the per-element triples depend on
    the (deterministic) generation order; use the sign-checked walks in
    expsum for anything sign-sensitive."""

    seed: Weight
    elements: tuple[SignedWeight, ...]
    stabilizer_order: int


def _check_index(rs: RootSystemData, i: int) -> int:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple-root index {i} out of range 1..{rs.rank}")
    return i - 1


def reflect_simple(rs: RootSystemData, i: int, w) -> Weight:
    """Apply the i-th simple reflection (Dynkin numbering, 1-based)."""
    k = _check_index(rs, i)
    w = _check_weight(rs, w)
    c = w[k]
    if not c:
        return w
    return tuple(x - c * a for x, a in zip(w, rs.cartan[k]))


def sign_of_simple(rs: RootSystemData, i: int) -> tuple[int, int, int]:
    """(sign, sign_long, sign_short) of the i-th simple reflection."""
    k = _check_index(rs, i)
    cls = rs.simple_classes[k]
    long_flip = cls in (LONG, ONLY)
    return (-1, -1 if long_flip else 1, 1 if long_flip else -1)


def generator_signs(rs: RootSystemData) -> tuple[tuple[int, int, int], ...]:
    return tuple(sign_of_simple(rs, i) for i in range(1, rs.rank + 1))


def dominant_representative(rs: RootSystemData, w) -> tuple[Weight, int, int, int]:
    """The unique dominant weight in the orbit of w, with accumulated signs.

    Deterministic: always reflects at the smallest index with a negative
    coordinate, so the returned signs are reproducible even when w has a
    nontrivial stabilizer.
    """
    w = _check_weight(rs, w)
    signs = generator_signs(rs)
    s = sl = ss = 1
    while True:
        k = next((j for j, x in enumerate(w) if x < 0), None)
        if k is None:
            return w, s, sl, ss
        c = w[k]
        w = tuple(x - c * a for x, a in zip(w, rs.cartan[k]))
        gs, gl, gss = signs[k]
        s *= gs
        sl *= gl
        ss *= gss


def orbit(rs: RootSystemData, seed) -> frozenset[Weight]:
    """Plain Weyl orbit of a weight (any chamber), without signs."""
    seed = _check_weight(rs, seed)
    seen = {seed}
    queue = [seed]
    cartan = rs.cartan
    rank = rs.rank
    while queue:
        w = queue.pop()
        for k in range(rank):
            c = w[k]
            if not c:
                continue
            nw = tuple(x - c * a for x, a in zip(w, cartan[k]))
            if nw not in seen:
                seen.add(nw)
                queue.append(nw)
    return frozenset(seen)


_ORDER_CACHE: dict = {}


def weyl_order(rs: RootSystemData) -> int:
    """|W|, computed as the orbit size of rho (self-validating, no lookup)."""
    order = _ORDER_CACHE.get(rs.label)
    if order is None:
        order = len(orbit(rs, rs.rho))
        _ORDER_CACHE[rs.label] = order
    return order


def signed_orbit_map(
    rs: RootSystemData, seed, check_component: int | None = None
) -> dict[Weight, tuple[int, int, int]]:
    """Breadth-first orbit walk recording a sign triple per element.

    When check_component is 0, 1 or 2, every re-visit of an element verifies
    that component of the triple and a disagreement raises
    DegenerateSeedError; this is exactly the condition for the corresponding
    signed orbit sum to be well defined.
    """
    seed = _check_weight(rs, seed)
    signs = generator_signs(rs)
    cartan = rs.cartan
    rank = rs.rank
    out = {seed: (1, 1, 1)}
    queue = [seed]
    pos = 0
    while pos < len(queue):
        w = queue[pos]
        pos += 1
        tw = out[w]
        for k in range(rank):
            c = w[k]
            nw = w if not c else tuple(x - c * a for x, a in zip(w, cartan[k]))
            gs = signs[k]
            nt = (tw[0] * gs[0], tw[1] * gs[1], tw[2] * gs[2])
            known = out.get(nw)
            if known is None:
                out[nw] = nt
                queue.append(nw)
            elif check_component is not None and known[check_component] != nt[check_component]:
                raise DegenerateSeedError(
                    f"signs of kind component {check_component} are not well defined "
                    f"on the orbit of seed {seed} in {rs.label}"
                )
    return out


def signed_orbit(rs: RootSystemData, seed) -> OrbitSet:
    """Signed orbit of a dominant seed (spec operation).

    Signs are the triples accumulated along the deterministic breadth-first
    words; |elements| * stabilizer_order = |W|.
    """
    seed = _check_weight(rs, seed)
    if not is_dominant(seed):
        raise ValueError(f"seed {seed} is not dominant")
    elems = signed_orbit_map(rs, seed)
    order = weyl_order(rs)
    size = len(elems)
    if order % size:
        raise AssertionError(f"orbit size {size} does not divide |W| = {order}")
    return OrbitSet(
        seed=seed,
        elements=tuple(SignedWeight(w, *t) for w, t in elems.items()),
        stabilizer_order=order // size,
    )
