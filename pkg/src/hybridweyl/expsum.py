"""Exact group-algebra arithmetic over the weight lattice.

An ExpSum is a finitely supported integer-coefficient function on the weight
lattice: the coefficient list of a finite exponential sum
sum_mu c_mu e^{2 pi i <mu|x>}.  Orbit sums (C-functions), sign-weighted orbit
sums (S-functions) and their long/short variants are all ExpSums, multiplied
exactly by convolution.  Floating point enters only in evaluate(), at the
final exponential.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Mapping

from ._linalg import dot
from .rootsystem import RootSystemData, Weight, build_root_system, is_dominant
from .weyl import KINDS, SIGN_COMPONENT, orbit, signed_orbit_map

EvaluationPoint = tuple[Fraction, ...]


class ExpSum:
    """Sparse integer-coefficient map on the weight lattice of one algebra.

    Treat instances as immutable; all operators return new objects.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms: Mapping[Weight, int]):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def __eq__(self, other):
        return (
            isinstance(other, ExpSum)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __mul__(self, other):
        return multiply(self, other)

    def __add__(self, other):
        if not isinstance(other, ExpSum):
            return NotImplemented
        self._check_same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return ExpSum(self.algebra, out)

    def __neg__(self):
        return ExpSum(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"ExpSum({self.algebra}, {len(self.terms)} terms)"

    def _check_same(self, other: "ExpSum"):
        if self.algebra != other.algebra:
            raise ValueError(f"algebra mismatch: {self.algebra} vs {other.algebra}")

    def coefficient_sum(self) -> int:
        """Exact value at x = 0."""
        return sum(self.terms.values())

    def first_difference(self, other: "ExpSum"):
        """Smallest lattice point where the two sums differ, with both
        coefficients, or None when equal."""
        self._check_same(other)
        keys = set(self.terms) | set(other.terms)
        for w in sorted(keys):
            a = self.terms.get(w, 0)
            b = other.terms.get(w, 0)
            if a != b:
                return w, a, b
        return None


def c_function(rs: RootSystemData, lam) -> ExpSum:
    """Weyl-invariant orbit sum: coefficient +1 on every element of the
    orbit of a dominant weight."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"C-function seed {lam} is not dominant")
    return ExpSum(rs.label, dict.fromkeys(orbit(rs, lam), 1))


def s_function(rs: RootSystemData, kind: str, seed) -> ExpSum:
    """Sign-weighted orbit sum of the given kind ("plain", "long", "short").

    The seed is expected to be rho + lambda (plain), rho_long + lambda or
    rho_short + lambda for some dominant lambda; what is actually enforced is
    the exact well-definedness of the requested sign on the orbit, which is
    checked during generation (DegenerateSeedError otherwise).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")
    seed = tuple(seed)
    if not is_dominant(seed):
        raise ValueError(f"S-function seed {seed} is not dominant")
    comp = SIGN_COMPONENT[kind]
    elems = signed_orbit_map(rs, seed, check_component=comp)
    return ExpSum(rs.label, {w: t[comp] for w, t in elems.items()})


def weighted_c_sum(rs: RootSystemData, coefficients: Mapping[Weight, int]) -> ExpSum:
    """sum_mu coefficients[mu] * C_mu, for dominant keys mu.

    Orbits of distinct dominant weights are disjoint, so this fills the term
    map directly.
    """
    out: dict[Weight, int] = {}
    for mu, coeff in coefficients.items():
        if not coeff:
            continue
        mu = tuple(mu)
        if not is_dominant(mu):
            raise ValueError(f"coefficient key {mu} is not dominant")
        for w in orbit(rs, mu):
            if w in out:
                raise AssertionError(f"orbits of distinct dominant weights met at {w}")
            out[w] = coeff
    return ExpSum(rs.label, out)


def multiply(a: ExpSum, b: ExpSum) -> ExpSum:
    """Exact convolution: the coefficient of w is sum over u+v=w of a[u]b[v]."""
    if not isinstance(a, ExpSum) or not isinstance(b, ExpSum):
        raise TypeError("multiply expects two ExpSums")
    a._check_same(b)
    if len(a.terms) > len(b.terms):
        a, b = b, a
    out: dict[Weight, int] = {}
    big = b.terms
    for u, cu in a.terms.items():
        for v, cv in big.items():
            w = tuple(x + y for x, y in zip(u, v))
            s = out.get(w, 0) + cu * cv
            if s:
                out[w] = s
            elif w in out:
                del out[w]
    return ExpSum(a.algebra, out)


def evaluate(f: ExpSum, x) -> complex:
    """Numeric value sum_mu f[mu] e^{2 pi i <mu|x>} at a torus point x.

    x is given in e-basis coordinates as exact rationals; each pairing
    <mu|x> is computed exactly and reduced mod 1 before the single
    floating-point exponential.
    """
    rs = build_root_system(f.algebra)
    x = tuple(Fraction(v) for v in x)
    if len(x) != rs.edim:
        raise ValueError(f"evaluation point has length {len(x)}, expected {rs.edim}")
    pair = [dot(fw, x) for fw in rs.fundamental_weights]
    total = 0j
    two_pi = 2.0 * math.pi
    for w, c in f.terms.items():
        t = sum((wi * p for wi, p in zip(w, pair) if wi), Fraction(0)) % 1
        total += c * cmath.exp(1j * two_pi * float(t))
    return total
