"""Expansions of characters and hybrid characters into Weyl-orbit sums.

A hybrid character is the ratio of a long- (or short-) signed orbit sum at
the shifted weight over the same sum at the shift alone.  Its coefficients on
the orbit-sum basis are assembled from subsystem multiplicity tables summed
over a transversal orbit, and every expansion can be certified by the exact
group-algebra identity

    S^kind_{shift} * sum_nu coeff[nu] C_nu  ==  S^kind_{shift + lambda},

which is checked coefficient by coefficient over the weight lattice.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .expsum import ExpSum, evaluate, multiply, s_function, weighted_c_sum
from .multiplicity import certify_table, dominant_multiplicities, weyl_dimension
from .rootsystem import AlgebraLabel, RootSystemData, Weight, inner_product, is_dominant
from .subsystem import (
    build_embedding,
    convert_weight,
    parent_preimage,
    transversal_orbit,
)
from .weyl import KINDS, orbit

log = logging.getLogger(__name__)

HYBRID_KINDS = ("long", "short")


@dataclass
class HybridExpansion:
    """Coefficients of one (hybrid) character on the orbit-sum basis, indexed
    by dominant weights of the parent algebra."""

    algebra: AlgebraLabel
    highest: Weight
    kind: str
    coefficients: dict[Weight, int]


_EXPANSION_CACHE: dict = {}


def _shift_weight(rs: RootSystemData, kind: str) -> Weight:
    return {"plain": rs.rho, "long": rs.rho_long, "short": rs.rho_short}[kind]


def character_expansion(rs: RootSystemData, lam) -> HybridExpansion:
    """Ordinary character as a sum of orbit sums: the coefficients are the
    dominant weight multiplicities, certified before being returned."""
    lam = tuple(lam)
    key = (rs.label, "plain", lam)
    cached = _EXPANSION_CACHE.get(key)
    if cached is not None:
        return cached
    table = dominant_multiplicities(rs, lam)
    if not certify_table(rs, table):
        raise AssertionError(f"multiplicity table for {rs.label} {lam} failed its certificate")
    exp = HybridExpansion(
        algebra=rs.label, highest=lam, kind="plain", coefficients=dict(table.entries)
    )
    return _EXPANSION_CACHE.setdefault(key, exp)


def hybrid_expansion(rs: RootSystemData, kind: str, lam) -> HybridExpansion:
    """Coefficients of the long or short hybrid character of highest weight
    lam on the orbit-sum basis of the parent algebra.

    For each parent-dominant candidate nu the coefficient is the sum, over
    the transversal orbit of lam, of the subsystem multiplicity of the
    converted weight of nu; subsystem support weights that are not images of
    parent-dominant weights are skipped (their contribution is accounted for
    by other chamber representatives, which verify_expansion confirms).
    """
    if kind not in HYBRID_KINDS:
        raise ValueError(f"kind must be 'long' or 'short', got {kind!r}")
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong rank for {rs.label}")
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    key = (rs.label, kind, lam)
    cached = _EXPANSION_CACHE.get(key)
    if cached is not None:
        return cached

    emb = build_embedding(rs.label, kind)
    tables = [dominant_multiplicities(emb.sub, mu) for mu in sorted(transversal_orbit(emb, lam))]
    support = sorted({mu for t in tables for mu in t.entries})
    coefficients: dict[Weight, int] = {}
    for sub_mu in support:
        nu = parent_preimage(emb, sub_mu)
        if nu is None or not is_dominant(nu):
            continue
        coefficients[nu] = sum(t.get(sub_mu) for t in tables)
    if coefficients.get(lam, 0) < 1:
        raise AssertionError(f"expansion of {rs.label} {kind} {lam} lost its highest weight")
    exp = HybridExpansion(algebra=rs.label, highest=lam, kind=kind, coefficients=coefficients)
    return _EXPANSION_CACHE.setdefault(key, exp)


def expansion(rs: RootSystemData, kind: str, lam) -> HybridExpansion:
    """Dispatch on kind: plain character or hybrid expansion."""
    if kind == "plain":
        return character_expansion(rs, lam)
    return hybrid_expansion(rs, kind, lam)


def verify_expansion(rs: RootSystemData, exp: HybridExpansion) -> bool:
    """Exact certificate for an expansion of any kind.

    Multiplies the claimed orbit-sum combination by the kind's denominator
    S-function and compares with the shifted S-function; returns False (and
    logs the first differing lattice point) on mismatch.
    """
    if exp.algebra != rs.label:
        raise ValueError(f"expansion is for {exp.algebra}, root system is {rs.label}")
    if exp.kind not in KINDS:
        raise ValueError(f"unknown expansion kind {exp.kind!r}")
    shift = _shift_weight(rs, exp.kind)
    lhs = multiply(
        s_function(rs, exp.kind, shift),
        weighted_c_sum(rs, exp.coefficients),
    )
    rhs = s_function(rs, exp.kind, tuple(a + b for a, b in zip(shift, exp.highest)))
    if lhs == rhs:
        return True
    diff = lhs.first_difference(rhs)
    log.warning(
        "expansion certificate failed for %s kind=%s highest=%s: first difference "
        "at %s (product %d vs target %d)",
        rs.label, exp.kind, exp.highest, diff[0], diff[1], diff[2],
    )
    return False


def orbit_size_sum(rs: RootSystemData, exp: HybridExpansion) -> int:
    """sum_nu coeff[nu] * |W . nu|: the value of the expansion at x = 0."""
    return sum(c * len(orbit(rs, nu)) for nu, c in exp.coefficients.items())


def hybrid_dimension(rs: RootSystemData, kind: str, lam) -> int:
    """Value of the hybrid character at the origin, computed in both closed
    forms and cross-asserted:

    (a) transversal orbit size times the subsystem Weyl dimension of the
        converted highest weight;
    (b) transversal orbit size times the product, over positive roots of the
        matching length class, of <lam+shift|alpha>/<shift|alpha>.
    """
    if kind not in HYBRID_KINDS:
        raise ValueError(f"kind must be 'long' or 'short', got {kind!r}")
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    emb = build_embedding(rs.label, kind)
    size = len(transversal_orbit(emb, lam))
    form_a = size * weyl_dimension(emb.sub, convert_weight(emb, lam))

    shift = _shift_weight(rs, kind)
    shifted = tuple(a + b for a, b in zip(lam, shift))
    ratio = Fraction(1)
    for alpha, cls in rs.positive_roots:
        if cls == kind:
            ratio *= inner_product(rs, shifted, alpha) / inner_product(rs, shift, alpha)
    form_b = size * ratio
    if form_b != form_a:
        raise AssertionError(
            f"hybrid dimension forms disagree for {rs.label} {kind} {lam}: "
            f"{form_a} vs {form_b}"
        )
    return form_a


def dimension(rs: RootSystemData, kind: str, lam) -> int:
    """Dimension dispatch: Weyl dimension for plain, hybrid otherwise."""
    if kind == "plain":
        return weyl_dimension(rs, lam)
    return hybrid_dimension(rs, kind, lam)


def evaluate_hybrid(rs: RootSystemData, kind: str, lam, x) -> complex:
    """Numeric value of the (hybrid) character at a torus point, as the ratio
    of the shifted S-function over the denominator S-function.

    Raises ValueError at points where the denominator numerically vanishes
    (use hybrid_dimension / weyl_dimension for the value at the origin).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    shift = _shift_weight(rs, kind)
    den = evaluate(s_function(rs, kind, shift), x)
    if abs(den) < 1e-12:
        raise ValueError(
            f"denominator S-function vanishes at {x}; the value at the origin "
            f"is the (hybrid) dimension"
        )
    num = evaluate(s_function(rs, kind, tuple(a + b for a, b in zip(shift, lam))), x)
    return num / den


def evaluate_expansion(rs: RootSystemData, exp: HybridExpansion, x) -> complex:
    """Numeric value of the expansion side sum_nu coeff[nu] C_nu(x)."""
    return evaluate(weighted_c_sum(rs, exp.coefficients), x)


def expansion_expsum(rs: RootSystemData, exp: HybridExpansion) -> ExpSum:
    """The expansion as an explicit group-algebra element."""
    return weighted_c_sum(rs, exp.coefficients)
