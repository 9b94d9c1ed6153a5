"""Orderings on r-partitions, beta numbers, and the core/quotient bijection.

For a rational parameter point with c0 != 0, each box b carries:

- charge     theta(b)  = d_beta(b)/(r c0) + ct(b)          (order >=_c)
- tilted     ttheta(b) = ct(b) + (d_beta(b) - beta(b))/(r c0)   (equiv ==_c)

The order >=_c compares, for every threshold j and every component cutoff l,
the counts N(j, l) = #{b : theta(b) > j, or theta(b) = j and beta(b) <= l}.
Thresholds are reduced to the finite set of realized theta values (both
counting functions are constant in between).

The core/quotient machinery: beta numbers B_s(lam) = {lam_j + s - j + 1},
interleaving r charged beta sets into one (assemble), and its inverse
(disassemble).  With integer charges a_i = d_{r-i}/(r c0), dominance order on
assembled partitions gives the order >='_c; the counting identity ties the
content counts of the assembled partition to the N(j, l) statistics.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .combinatorics import (
    BoxRef,
    Comparison,
    MultiPartition,
    Partition,
    as_partition,
    dominance_compare,
)
from .scalars import ParameterPoint


class OrderContext:
    """Parameter data for the orderings; c0 must be a nonzero rational
    (geq_c additionally requires c0 > 0)."""

    __slots__ = ("point",)

    def __init__(self, point: ParameterPoint):
        if point.c0 == 0:
            raise ValueError("c0 must be nonzero")
        self.point = point

    @property
    def r(self) -> int:
        return self.point.r

    @property
    def c0(self) -> Fraction:
        return self.point.c0

    def charge(self, b: BoxRef) -> Fraction:
        """d_beta(b)/(r c0) + ct(b)."""
        p = self.point
        return p.d[b.component % p.r] / (p.r * p.c0) + b.content

    def tilted_charge(self, b: BoxRef) -> Fraction:
        """ct(b) + (d_beta(b) - beta(b))/(r c0)."""
        p = self.point
        l = b.component % p.r
        return b.content + (p.d[l] - l) / (p.r * p.c0)

    def integer_charges(self) -> Optional[tuple[int, ...]]:
        """(a_1, ..., a_r) with a_i = d_{r-i}/(r c0), when all are integers."""
        p = self.point
        out = []
        for i in range(1, p.r + 1):
            a = p.d[(p.r - i) % p.r] / (p.r * p.c0)
            if a.denominator != 1:
                return None
            out.append(int(a))
        return tuple(out)


def _count(shape: MultiPartition, ctx: OrderContext, j: Fraction, l: int) -> int:
    total = 0
    for b in shape.boxes():
        t = ctx.charge(b)
        if t > j or (t == j and b.component <= l):
            total += 1
    return total


def geq_c(lam: MultiPartition, chi: MultiPartition, ctx: OrderContext) -> bool:
    """lam >=_c chi: N_lam(j, l) >= N_chi(j, l) for every threshold j and
    every l in [0, r)."""
    if ctx.c0 <= 0:
        raise ValueError("geq_c needs c0 > 0")
    if lam.size != chi.size:
        raise ValueError("shapes must have equal size")
    thresholds = {ctx.charge(b) for b in lam.boxes()} | {ctx.charge(b) for b in chi.boxes()}
    r = ctx.r
    for j in thresholds:
        for l in range(r):
            if _count(lam, ctx, j, l) < _count(chi, ctx, j, l):
                return False
    return True


def equiv_c(lam: MultiPartition, chi: MultiPartition, ctx: OrderContext) -> bool:
    """lam ==_c chi: the multisets of tilted charges agree mod 1/c0."""
    def classes(shape: MultiPartition) -> list[Fraction]:
        # x mod 1/c0 is decided by x*c0 mod 1
        return sorted((ctx.tilted_charge(b) * ctx.c0) % 1 for b in shape.boxes())

    return classes(lam) == classes(chi)


# ---------------------------------------------------------------------------
# linkage matchings


def linkage_matching(lam: MultiPartition, chi: MultiPartition,
                     ctx: OrderContext) -> Optional[list[tuple[BoxRef, BoxRef, int]]]:
    """A bijection b_i <-> b_i' between the boxes together with non-negative
    integers mu_i satisfying
        mu_i = d_beta(b_i) - d_beta(b_i') + r(ct(b_i) - ct(b_i'))c0   and
        beta(b_i) - mu_i = beta(b_i') mod r,
    found by maximum bipartite matching over admissible pairs (lex tie-break);
    None if no perfect matching exists."""
    if lam.size != chi.size:
        raise ValueError("shapes must have equal size")
    p = ctx.point
    r = p.r
    left = sorted(lam.boxes(), key=BoxRef.sort_key)
    right = sorted(chi.boxes(), key=BoxRef.sort_key)

    def admissible(b: BoxRef, b2: BoxRef) -> Optional[int]:
        value = (p.d[b.component % r] - p.d[b2.component % r]
                 + r * (b.content - b2.content) * p.c0)
        if value.denominator != 1 or value < 0:
            return None
        mu = int(value)
        if (b.component - mu - b2.component) % r != 0:
            return None
        return mu

    adj = [[j for j, b2 in enumerate(right) if admissible(b, b2) is not None]
           for b in left]
    match_right: list[Optional[int]] = [None] * len(right)

    def augment(i: int, visited: set[int]) -> bool:
        for j in adj[i]:
            if j in visited:
                continue
            visited.add(j)
            if match_right[j] is None or augment(match_right[j], visited):
                match_right[j] = i
                return True
        return False

    matched = 0
    for i in range(len(left)):
        if augment(i, set()):
            matched += 1
    if matched != len(left):
        return None
    out = []
    for j, i in enumerate(match_right):
        if i is not None:
            mu = admissible(left[i], right[j])
            out.append((left[i], right[j], mu))
    out.sort(key=lambda t: t[0].sort_key())
    return out


# ---------------------------------------------------------------------------
# beta numbers and the core/quotient bijection


@dataclass(frozen=True)
class BetaSet:
    """The set {lam_j + s - j + 1 : j >= 1}, stored intensionally as
    (partition, shift); the infinite tail is never materialized."""

    partition: Partition
    shift: Fraction

    def member(self, j: int) -> Fraction:
        lam_j = self.partition[j - 1] if j - 1 < len(self.partition) else 0
        return self.shift + lam_j - j + 1

    def members_down_to(self, floor: Fraction) -> list[Fraction]:
        """All members >= floor (finitely many)."""
        out = []
        j = 1
        while True:
            x = self.member(j)
            if x < floor and j > len(self.partition):
                break
            if x >= floor:
                out.append(x)
            j += 1
        return out

    @staticmethod
    def from_members(members: Sequence[Fraction], tail_floor: Fraction) -> "BetaSet":
        """Reconstruct (partition, shift) from the members >= tail_floor,
        assuming every number below tail_floor congruent to them mod 1 is a
        member.  The j-th member overall is lam_j + s - j + 1."""
        members = sorted(members, reverse=True)
        if len(set(members)) != len(members):
            raise ValueError("beta numbers must be distinct")
        count = len(members)
        # below the window, members continue tail_floor - 1, tail_floor - 2, ...
        shift = (tail_floor - 1) + (count + 1) - 1
        parts = []
        for j, x in enumerate(members, start=1):
            lam_j = x - shift + j - 1
            if lam_j.denominator != 1 or lam_j < 0:
                raise ValueError("not a valid beta set")
            parts.append(int(lam_j))
        return BetaSet(as_partition(parts), shift)


def beta_numbers(lam: Partition, s) -> BetaSet:
    return BetaSet(as_partition(lam), Fraction(s))


def quotient_component(shape: MultiPartition, i: int) -> Partition:
    """Gordon-indexed component lam^(i) = lam^{r-i} for 1 <= i <= r."""
    return shape.components[(shape.r - i) % shape.r]


def assemble(a: Sequence[int], shape: MultiPartition) -> Partition:
    """The partition whose 0-shift beta set is the union over 1 <= i <= r of
    {i + r(x-1) : x in B_{a_i}(lam^(i))}; requires sum(a) = 0."""
    r = shape.r
    a = tuple(int(x) for x in a)
    if len(a) != r:
        raise ValueError(f"expected {r} charges")
    members: list[int] = []
    floors = []
    for i in range(1, r + 1):
        comp = quotient_component(shape, i)
        # class-i members are i + r(x-1); the tail of B_{a_i} is consecutive
        # below a_i - len(comp), so the window floor must sit below that
        floors.append(i + r * (a[i - 1] - len(comp) - 1 - 1))
    window = min(min(floors), 0)
    for i in range(1, r + 1):
        comp = quotient_component(shape, i)
        bset = beta_numbers(comp, a[i - 1])
        x_floor = Fraction(window - i, r) + 1
        for x in bset.members_down_to(x_floor):
            members.append(i + r * (int(x) - 1))
    members.sort(reverse=True)
    if len(set(members)) != len(members):
        raise AssertionError("beta classes collided")
    # valid 0-shift beta set: count of members >= window must equal 1 - window
    if len(members) != 1 - window:
        raise ValueError("charges do not sum to zero (invalid beta set)")
    parts = [x + j - 1 for j, x in enumerate(members, start=1)]
    return as_partition(parts)


def disassemble(lam: Partition, r: int) -> tuple[tuple[int, ...], MultiPartition]:
    """Inverse of assemble: split the 0-shift beta set of lam into residue
    classes, read each class as a charged beta set."""
    lam = as_partition(lam)
    if r < 1:
        raise ValueError("r must be >= 1")
    bset = beta_numbers(lam, 0)
    window = -(len(lam) + r * (len(lam) + 2))
    members = [int(x) for x in bset.members_down_to(Fraction(window))]
    charges = []
    comps_gordon = []
    for i in range(1, r + 1):
        xs = [Fraction(m - i, r) + 1 for m in members if (m - i) % r == 0]
        x_floor = min(xs) if xs else Fraction(0)
        sub = BetaSet.from_members(xs, x_floor)
        if sub.shift.denominator != 1:
            raise AssertionError("non-integer charge from integer beta set")
        charges.append(int(sub.shift))
        comps_gordon.append(sub.partition)
    components = [comps_gordon[(r - l) % r - 1] for l in range(r)]
    shape = MultiPartition(r, tuple(components))
    return tuple(charges), shape


def geq_c_quotient(lam: MultiPartition, chi: MultiPartition, ctx: OrderContext) -> bool:
    """The order >='_c for integer charges: dominance of the assembled
    partitions."""
    if lam.size != chi.size:
        raise ValueError("shapes must have equal size")
    a = ctx.integer_charges()
    if a is None:
        raise ValueError("charges d_l/(r c0) must be integers")
    if sum(a) != 0:
        raise ValueError("charges must lie in the root lattice (sum zero); "
                         "normalize d to sum to zero")
    left = assemble(a, lam)
    right = assemble(a, chi)
    return dominance_compare(left, right) in (Comparison.GREATER, Comparison.EQUAL)


# ---------------------------------------------------------------------------
# the counting identity


def _neg(x: Fraction) -> Fraction:
    return x if x < 0 else Fraction(0)


def charge_offset(a: Sequence[int], j: Fraction, r: int) -> Fraction:
    """The shape-independent offset f(a, j):
    sum_{j <= k < 0} k
      - sum_{k >= j} [ sum_{1 <= l <= m_k} min(q_k + 1 - a_l, 0)
                       + sum_{m_k < l <= r} min(q_k - a_l, 0) ]
    with k = q_k r + m_k, 0 <= m_k < r.  All sums are finite."""
    a = tuple(int(x) for x in a)
    j_ceil = ceil(j)
    total = Fraction(0)
    for k in range(j_ceil, 0):
        total += k
    k_top = r * (max(a) + 2) + r if a else 0
    for k in range(j_ceil, max(j_ceil, k_top) + 1):
        q, m = divmod(k, r)
        for l in range(1, r + 1):
            if l <= m:
                total -= _neg(Fraction(q + 1 - a[l - 1]))
            else:
                total -= _neg(Fraction(q - a[l - 1]))
    return total


def counting_combination(shape: MultiPartition, a: Sequence[int], j: Fraction) -> int:
    """sum_{l=0}^{r-m-1} N(q, l) + sum_{l=r-m}^{r-1} N(q+1, l) where
    ceil(j) = q r + m and N uses the integer charges theta(b) = ct(b) +
    a_{r - beta(b)}."""
    r = shape.r
    a = tuple(int(x) for x in a)
    q, m = divmod(ceil(j), r)

    def n_count(level: int, l: int) -> int:
        total = 0
        for b in shape.boxes():
            theta = b.content + a[(r - b.component) % r - 1]
            if theta > level or (theta == level and b.component <= l):
                total += 1
        return total

    return (sum(n_count(q, l) for l in range(r - m))
            + sum(n_count(q + 1, l) for l in range(r - m, r)))


@dataclass(frozen=True)
class CountingIdentityReport:
    direct_count: int
    offset: Fraction
    combination: int

    @property
    def ok(self) -> bool:
        return self.direct_count - self.offset == self.combination


def counting_identity_check(shape: MultiPartition, a: Sequence[int], j) -> CountingIdentityReport:
    """Check |{b in assemble(a, shape) : ct(b) >= j}| - f(a, j) equals the
    displayed combination of counting functions, all three computed
    independently."""
    j = Fraction(j)
    lam = assemble(a, shape)
    direct = sum(1 for i, row in enumerate(lam, start=1)
                 for col in range(1, row + 1) if col - i >= j)
    return CountingIdentityReport(
        direct_count=direct,
        offset=charge_offset(a, j, shape.r),
        combination=counting_combination(shape, a, j),
    )
