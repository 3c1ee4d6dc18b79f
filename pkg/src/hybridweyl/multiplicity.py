"""Dominant-weight multiplicities via the Freudenthal recursion, the Weyl
dimension formula, and an exact group-algebra certificate for every table.

The recursion
    m_mu * (|lam+rho|^2 - |mu+rho|^2) = 2 sum_{alpha>0} sum_{k>=1}
                                          m_{mu+k alpha} <mu+k alpha|alpha>
runs over the dominant support {mu dominant : lam - mu in the nonnegative
root lattice} in decreasing order of |mu+rho|^2, which always references
already-computed entries.  Inner products use an integer-rescaled Gram
matrix; the recursion is homogeneous in that scale, so results are exact and
normalization independent.  Reducible systems (nA1, D_2) need no special
casing: the recursion is valid for any semisimple system and the resulting
table is the product of the component tables.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import invert, transpose
from .expsum import multiply, s_function, weighted_c_sum
from .rootsystem import AlgebraLabel, RootSystemData, Weight, is_dominant
from .weyl import dominant_representative

log = logging.getLogger(__name__)


@dataclass
class MultiplicityTable:
    """Complete map from dominant weight mu to its multiplicity in the
    irreducible module with the given highest weight."""

    algebra: AlgebraLabel
    highest: Weight
    entries: dict[Weight, int]

    def get(self, mu, default: int = 0) -> int:
        return self.entries.get(tuple(mu), default)

    def __len__(self):
        return len(self.entries)


# Write-once memo; keyed on the Gram matrix as well so tables computed for a
# rescaled metric (used by the normalization-invariance tests) do not alias.
_TABLE_CACHE: dict = {}


def _scaled_int_gram(rs: RootSystemData):
    den = 1
    for row in rs.gram:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    return [[int(x * den) for x in row] for row in rs.gram]


def _ip(gram, a, b) -> int:
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = gram[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
    return total


def dominant_support(rs: RootSystemData, lam) -> list[Weight]:
    """All dominant mu with lam - mu a nonnegative integer combination of
    simple roots.  Every such mu has positive multiplicity."""
    lam = tuple(lam)
    rank = rs.rank
    ct_inv = invert(transpose(rs.cartan))
    bounds = [
        math.floor(sum(ct_inv[i][j] * lam[j] for j in range(rank)))
        for i in range(rank)
    ]
    cartan = rs.cartan
    support = []
    for c in itertools.product(*(range(b + 1) for b in bounds)):
        mu = list(lam)
        for i, ci in enumerate(c):
            if ci:
                row = cartan[i]
                for j in range(rank):
                    mu[j] -= ci * row[j]
        if all(x >= 0 for x in mu):
            support.append(tuple(mu))
    return support


def dominant_multiplicities(rs: RootSystemData, lam) -> MultiplicityTable:
    """Freudenthal table of all dominant weight multiplicities below lam."""
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong rank for {rs.label}")
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    key = (rs.label, rs.gram, lam)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached

    gram = _scaled_int_gram(rs)
    rho = rs.rho
    roots = [w for w, _ in rs.positive_roots]

    def norm_shifted(mu):
        v = tuple(a + b for a, b in zip(mu, rho))
        return _ip(gram, v, v)

    support = dominant_support(rs, lam)
    support_set = set(support)
    support.sort(key=lambda mu: (-norm_shifted(mu), mu))
    top_norm = norm_shifted(lam)

    entries: dict[Weight, int] = {lam: 1}
    dom_cache: dict[Weight, Weight] = {}
    for mu in support:
        if mu == lam:
            continue
        total = 0
        for alpha in roots:
            nu = mu
            while True:
                nu = tuple(a + b for a, b in zip(nu, alpha))
                dom = dom_cache.get(nu)
                if dom is None:
                    dom = dominant_representative(rs, nu)[0]
                    dom_cache[nu] = dom
                if dom not in support_set:
                    break
                total += entries[dom] * _ip(gram, nu, alpha)
        denom = top_norm - norm_shifted(mu)
        if denom <= 0:
            raise AssertionError(f"nonpositive Freudenthal denominator at {mu}")
        m, r = divmod(2 * total, denom)
        if r or m < 1:
            raise AssertionError(f"Freudenthal produced non-integer or nonpositive m at {mu}")
        entries[mu] = m

    table = MultiplicityTable(algebra=rs.label, highest=lam, entries=entries)
    return _TABLE_CACHE.setdefault(key, table)


def weyl_dimension(rs: RootSystemData, lam) -> int:
    """dim of the irreducible module with highest weight lam, as the exact
    product over positive roots of <lam+rho|alpha>/<rho|alpha>."""
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong rank for {rs.label}")
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    gram = _scaled_int_gram(rs)
    shifted = tuple(a + b for a, b in zip(lam, rs.rho))
    num = 1
    den = 1
    for alpha, _ in rs.positive_roots:
        num *= _ip(gram, shifted, alpha)
        den *= _ip(gram, rs.rho, alpha)
    dim = Fraction(num, den)
    if dim.denominator != 1 or dim <= 0:
        raise AssertionError(f"Weyl dimension for {lam} is not a positive integer: {dim}")
    return int(dim)


def certify_table(rs: RootSystemData, table: MultiplicityTable) -> bool:
    """Exact correctness certificate: S_rho * sum_mu m_mu C_mu must equal
    S_{rho+lam} coefficient by coefficient.  Multiplication by S_rho is
    injective on the group algebra, so this determines the table uniquely."""
    lhs = multiply(
        s_function(rs, "plain", rs.rho),
        weighted_c_sum(rs, table.entries),
    )
    rhs = s_function(rs, "plain", tuple(a + b for a, b in zip(rs.rho, table.highest)))
    if lhs == rhs:
        return True
    diff = lhs.first_difference(rhs)
    log.warning(
        "multiplicity certificate failed for %s, highest %s: first difference "
        "at %s (product %d vs target %d)",
        rs.label, table.highest, diff[0], diff[1], diff[2],
    )
    return False


def export_cached_tables(standard_gram_of) -> list[dict]:
    """Serializable snapshot of the in-memory memo, restricted to tables
    computed with an algebra's standard metric (the persistent-cache layer in
    the CLI owns the file format)."""
    out = []
    for (label, gram, lam), table in _TABLE_CACHE.items():
        if gram != standard_gram_of(label):
            continue
        out.append(
            {
                "algebra": str(label),
                "highest": list(lam),
                "entries": [[list(mu), m] for mu, m in sorted(table.entries.items())],
            }
        )
    return out


def install_cached_tables(payloads, standard_gram_of) -> None:
    """Install previously exported tables into the in-memory memo.

    Entries are installed write-once; malformed payloads raise ValueError.
    """
    for p in payloads:
        label = AlgebraLabel.parse(p["algebra"])
        lam = tuple(int(x) for x in p["highest"])
        entries = {tuple(int(x) for x in mu): int(m) for mu, m in p["entries"]}
        if entries.get(lam) != 1:
            raise ValueError(f"cached table for {label} {lam} lacks unit top entry")
        table = MultiplicityTable(algebra=label, highest=lam, entries=entries)
        _TABLE_CACHE.setdefault((label, standard_gram_of(label), lam), table)
