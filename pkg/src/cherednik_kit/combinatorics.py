"""Partitions, r-partitions, compositions, permutations, tableaux, and the
orders among them.

Conventions:

- A partition is a tuple of positive integers in non-increasing order; the
  empty partition is ().  Trailing zeros are normalized away on construction.
- Boxes are addressed (component, row, column), all of row/column 1-based;
  iteration order is always lexicographic in (component, row, column).
- Permutations of {1..n} are tuples (w(1), ..., w(n)).
- Compositions are tuples of non-negative integers of a fixed length.

Text formats (used by the CLI):

- multipartition: components joined by '|', each a comma list, empty
  component = empty string (e.g. '3,3,1|2,1||5,5,2,1').
- tableau / shape assignment: like a multipartition but rows joined by '/'
  inside each component (e.g. '1,3,4/8,9|2,6/5,7').
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations as iter_permutations
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Permutation = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def as_partition(parts: Sequence[int]) -> Partition:
    """Normalize (drop trailing zeros) and validate a partition."""
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not non-increasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part: {parts}")
    return parts


def conjugate(part: Partition) -> Partition:
    """Conjugate partition: column counts of the diagram."""
    if not part:
        return ()
    return tuple(sum(1 for x in part if x >= j) for j in range(1, part[0] + 1))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in descending lexicographic order ((n) first)."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(total: int, cap: int) -> Iterator[Partition]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return list(gen(n, n))


def multipartition_count(r: int, n: int) -> int:
    """Number of r-partitions of n, via the generating function
    prod_k (1-q^k)^(-r) expanded to degree n."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for _ in range(r):
        for k in range(1, n + 1):
            for m in range(k, n + 1):
                coeffs[m] += coeffs[m - k]
    return coeffs[n]


# ---------------------------------------------------------------------------
# multipartitions and boxes


@dataclass(frozen=True)
class BoxRef:
    component: int
    row: int
    column: int

    @property
    def content(self) -> int:
        return self.column - self.row

    def sort_key(self) -> tuple[int, int, int]:
        return (self.component, self.row, self.column)


@dataclass(frozen=True)
class MultiPartition:
    r: int
    components: tuple[Partition, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be >= 1")
        comps = tuple(as_partition(c) for c in self.components)
        if len(comps) != self.r:
            raise ValueError(f"expected {self.r} components, got {len(comps)}")
        object.__setattr__(self, "components", comps)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def boxes(self) -> list[BoxRef]:
        out = []
        for l, comp in enumerate(self.components):
            for i, row_len in enumerate(comp, start=1):
                for j in range(1, row_len + 1):
                    out.append(BoxRef(l, i, j))
        return out

    def contains(self, b: BoxRef) -> bool:
        if not (0 <= b.component < self.r and b.row >= 1 and b.column >= 1):
            return False
        comp = self.components[b.component]
        return b.row <= len(comp) and b.column <= comp[b.row - 1]

    def with_box_added(self, b: BoxRef) -> "MultiPartition":
        comp = list(self.components[b.component])
        if b.row == len(comp) + 1:
            comp.append(0)
        comp[b.row - 1] += 1
        comps = list(self.components)
        comps[b.component] = as_partition(comp)
        return MultiPartition(self.r, tuple(comps))

    def as_text(self) -> str:
        return "|".join(",".join(str(x) for x in c) for c in self.components)

    def __str__(self):
        return self.as_text()


def box_stats(shape: MultiPartition, b: BoxRef) -> tuple[int, int]:
    """(content, component residue mod r) of a box; the box must be valid."""
    if not shape.contains(b):
        raise ValueError(f"box {b} not in shape {shape}")
    return (b.content, b.component % shape.r)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return as_partition([int(tok) for tok in text.split(",")])


def parse_multipartition(text: str, r: int | None = None) -> MultiPartition:
    comps = tuple(parse_partition(tok) for tok in text.split("|"))
    if r is not None:
        if len(comps) == 1 and not comps[0] and r > 1:
            comps = ((),) * r
        if len(comps) != r:
            raise ValueError(f"shape {text!r} has {len(comps)} components, expected {r}")
    return MultiPartition(len(comps), comps)


def enumerate_multipartitions(r: int, n: int) -> list[MultiPartition]:
    """All r-partitions of n, deterministic order (component sizes in
    lexicographically decreasing order, partitions of each size in descending
    lex order, leftmost component slowest)."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1, n >= 0")

    def splits(total: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in splits(total - first, slots - 1):
                yield (first,) + rest

    out = []
    for sizes in splits(n, r):
        choices = [partitions_of(k) for k in sizes]

        def assemble(idx: int, acc: tuple) -> Iterator[tuple]:
            if idx == r:
                yield acc
                return
            for c in choices[idx]:
                yield from assemble(idx + 1, acc + (c,))

        for comps in assemble(0, ()):
            out.append(MultiPartition(r, comps))
    return out


# ---------------------------------------------------------------------------
# permutations (one-line notation on {1..n})


def perm_identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def perm_longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def perm_inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def perm_mul(v: Permutation, w: Permutation) -> Permutation:
    """(v*w)(i) = v(w(i))."""
    return tuple(v[w[i] - 1] for i in range(len(w)))


def perm_length(w: Permutation) -> int:
    """Coxeter length = inversion count."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_act(w: Permutation, mu: Sequence[int]) -> tuple[int, ...]:
    """The left action (w.mu)_i = mu_{w^{-1}(i)}."""
    inv = perm_inverse(w)
    return tuple(mu[inv[i] - 1] for i in range(len(mu)))


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Bruhat order via the rank-matrix criterion:
    u <= w iff |{a<=i : u(a) >= j}| <= |{a<=i : w(a) >= j}| for all i, j."""
    n = len(u)
    if len(w) != n:
        raise ValueError("length mismatch")
    for i in range(1, n):
        for a, b in zip(sorted(u[:i]), sorted(w[:i])):
            if a > b:
                return False
    return True


def bruhat_interval_elements(w: Permutation) -> set[Permutation]:
    """Brute-force {u : u <= w}: closure of subwords of one reduced word."""
    word = reduced_word(w)
    n = len(w)
    elems = {perm_identity(n)}
    for i in word:
        s = simple_transposition(n, i)
        elems |= {perm_mul(u, s) for u in elems}
    return elems


def simple_transposition(n: int, i: int) -> Permutation:
    """s_i swapping i and i+1 (1 <= i <= n-1)."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word for w (bubble-sort: w = s_{i_1} ... s_{i_p})."""
    w = list(w)
    n = len(w)
    word = []
    # repeatedly remove descents from the right of the one-line word
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return tuple(word)


def sorting_data(mu: Sequence[int]) -> tuple[Partition, Composition, Permutation, Permutation]:
    """(mu+, mu-, w_mu, r_mu) for a composition mu.

    w_mu is the longest permutation with w_mu.mu = mu- (non-decreasing
    rearrangement), given entrywise by
        w_mu(i) = #{j < i : mu_j < mu_i} + #{j >= i : mu_j <= mu_i},
    and r_mu is the rank function, w_mu(i) + r_mu(i) = n + 1.
    """
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise ValueError("composition entries must be >= 0")
    n = len(mu)
    mu_plus = tuple(sorted(mu, reverse=True))
    mu_minus = tuple(sorted(mu))
    w = tuple(
        sum(1 for j in range(i) if mu[j] < mu[i])
        + sum(1 for j in range(i, n) if mu[j] <= mu[i])
        for i in range(n)
    )
    r = tuple(n + 1 - wi for wi in w)
    return as_partition(mu_plus), mu_minus, w, r


# ---------------------------------------------------------------------------
# dominance and the composition order


class Comparison(Enum):
    EQUAL = "equal"
    GREATER = "greater"
    LESS = "less"
    INCOMPARABLE = "incomparable"


def dominance_compare(lam: Partition, chi: Partition) -> Comparison:
    """Dominance order on partitions of the same size, by partial sums."""
    lam, chi = as_partition(lam), as_partition(chi)
    if sum(lam) != sum(chi):
        raise ValueError("dominance compares partitions of equal size")
    if lam == chi:
        return Comparison.EQUAL
    m = max(len(lam), len(chi))
    ge = le = True
    sa = sb = 0
    for i in range(m):
        sa += lam[i] if i < len(lam) else 0
        sb += chi[i] if i < len(chi) else 0
        if sa < sb:
            ge = False
        if sa > sb:
            le = False
    if ge:
        return Comparison.GREATER
    if le:
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def partition_contents(lam: Partition) -> list[int]:
    return [j - i for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def dominance_via_contents(lam: Partition, chi: Partition) -> bool:
    """lam >= chi iff for every j, lam has at least as many boxes of content
    >= j as chi does."""
    lam, chi = as_partition(lam), as_partition(chi)
    if sum(lam) != sum(chi):
        raise ValueError("dominance compares partitions of equal size")
    ca, cb = partition_contents(lam), partition_contents(chi)
    thresholds = set(ca) | set(cb)
    return all(
        sum(1 for c in ca if c >= j) >= sum(1 for c in cb if c >= j)
        for j in thresholds
    )


def composition_compare(mu: Sequence[int], nu: Sequence[int]) -> Comparison:
    """mu > nu iff mu+ strictly dominates nu+, or mu+ = nu+ and
    w_mu > w_nu in Bruhat order."""
    mu, nu = tuple(mu), tuple(nu)
    if len(mu) != len(nu):
        raise ValueError("compositions must have equal length")
    if mu == nu:
        return Comparison.EQUAL
    mu_plus, _, w_mu, _ = sorting_data(mu)
    nu_plus, _, w_nu, _ = sorting_data(nu)
    if sum(mu) != sum(nu):
        raise ValueError("compositions must have equal size")
    if mu_plus != nu_plus:
        cmp = dominance_compare(mu_plus, nu_plus)
        if cmp is Comparison.GREATER:
            return Comparison.GREATER
        if cmp is Comparison.LESS:
            return Comparison.LESS
        return Comparison.INCOMPARABLE
    if w_mu == w_nu:
        return Comparison.EQUAL
    if bruhat_leq(w_nu, w_mu):
        return Comparison.GREATER
    if bruhat_leq(w_mu, w_nu):
        return Comparison.LESS
    return Comparison.INCOMPARABLE


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class StandardTableau:
    """A bijective filling of an r-partition with 1..n, increasing along rows
    and down columns within each component."""

    shape: MultiPartition
    entries: tuple[tuple[tuple[int, ...], ...], ...]  # entries[comp][row][col]

    def __post_init__(self):
        seen = set()
        n = self.shape.size
        for l, comp in enumerate(self.shape.components):
            rows = self.entries[l]
            if len(rows) != len(comp):
                raise ValueError("entry rows do not match shape")
            for i, row_len in enumerate(comp):
                if len(rows[i]) != row_len:
                    raise ValueError("entry row length mismatch")
                for j in range(row_len):
                    v = rows[i][j]
                    if not (1 <= v <= n) or v in seen:
                        raise ValueError("entries must biject onto 1..n")
                    seen.add(v)
                    if j > 0 and rows[i][j - 1] >= v:
                        raise ValueError("rows must increase")
                    if i > 0 and j < len(rows[i - 1]) and rows[i - 1][j] >= v:
                        raise ValueError("columns must increase")

    def entry(self, b: BoxRef) -> int:
        return self.entries[b.component][b.row - 1][b.column - 1]

    def box_of(self, value: int) -> BoxRef:
        for l, rows in enumerate(self.entries):
            for i, row in enumerate(rows, start=1):
                for j, v in enumerate(row, start=1):
                    if v == value:
                        return BoxRef(l, i, j)
        raise ValueError(f"value {value} not present")

    def swap_adjacent(self, i: int) -> "StandardTableau":
        """The tableau with entries i and i+1 exchanged."""
        b, b2 = self.box_of(i), self.box_of(i + 1)
        rows = [list(map(list, comp)) for comp in self.entries]
        rows[b.component][b.row - 1][b.column - 1] = i + 1
        rows[b2.component][b2.row - 1][b2.column - 1] = i
        return StandardTableau(self.shape, tuple(
            tuple(tuple(row) for row in comp) for comp in rows))

    def as_text(self) -> str:
        return "|".join(
            "/".join(",".join(str(v) for v in row) for row in comp)
            for comp in self.entries
        )

    def __str__(self):
        return self.as_text()


def parse_tableau(text: str, shape: MultiPartition) -> StandardTableau:
    comps = []
    for tok in text.split("|"):
        rows = tuple(
            tuple(int(v) for v in row.split(",")) if row else ()
            for row in (tok.split("/") if tok else ())
        )
        comps.append(rows)
    return StandardTableau(shape, tuple(comps))


def enumerate_syt(shape: MultiPartition) -> list[StandardTableau]:
    """All standard Young tableaux on an r-partition, placing 1..n in lex box
    order of the growing sub-shape (deterministic)."""
    n = shape.size
    target = shape.components
    r = shape.r

    out: list[StandardTableau] = []
    filling = [[[] for _ in comp] for comp in target]

    def addable(l: int) -> Iterator[int]:
        comp = target[l]
        rows = filling[l]
        for i in range(len(comp)):
            cur = len(rows[i])
            if cur < comp[i] and (i == 0 or len(rows[i - 1]) > cur):
                yield i

    def place(value: int):
        if value > n:
            out.append(StandardTableau(shape, tuple(
                tuple(tuple(row) for row in comp) for comp in filling)))
            return
        for l in range(r):
            for i in addable(l):
                filling[l][i].append(value)
                place(value + 1)
                filling[l][i].pop()

    place(1)
    return out


# ---------------------------------------------------------------------------
# shape assignments S = S(mu, T)


@dataclass(frozen=True)
class ShapeAssignment:
    """A filling of an r-partition with non-negative integers, weakly
    increasing along rows and down columns."""

    shape: MultiPartition
    values: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        for l, comp in enumerate(self.shape.components):
            rows = self.values[l]
            if len(rows) != len(comp) or any(len(rows[i]) != comp[i] for i in range(len(comp))):
                raise ValueError("values do not match shape")
            for i, row in enumerate(rows):
                for j, v in enumerate(row):
                    if v < 0:
                        raise ValueError("values must be >= 0")
                    if j > 0 and row[j - 1] > v:
                        raise ValueError("rows must weakly increase")
                    if i > 0 and rows[i - 1][j] > v:
                        raise ValueError("columns must weakly increase")

    def value(self, b: BoxRef) -> int:
        return self.values[b.component][b.row - 1][b.column - 1]

    def is_column_strict(self) -> bool:
        """Strictly increasing down columns (rows stay weakly increasing)."""
        for rows in self.values:
            for i in range(1, len(rows)):
                for j in range(len(rows[i])):
                    if rows[i - 1][j] >= rows[i][j]:
                        return False
        return True

    def satisfies_residues(self) -> bool:
        """S(b) = beta(b) mod r for every box."""
        r = self.shape.r
        return all(self.value(b) % r == b.component % r for b in self.shape.boxes())

    def sorted_values(self) -> tuple[int, ...]:
        return tuple(sorted(self.value(b) for b in self.shape.boxes()))

    def as_text(self) -> str:
        return "|".join(
            "/".join(",".join(str(v) for v in row) for row in comp)
            for comp in self.values
        )

    def __str__(self):
        return self.as_text()


def parse_assignment(text: str, shape: MultiPartition) -> ShapeAssignment:
    comps = []
    for tok in text.split("|"):
        rows = tuple(
            tuple(int(v) for v in row.split(",")) if row else ()
            for row in (tok.split("/") if tok else ())
        )
        comps.append(rows)
    return ShapeAssignment(shape, tuple(comps))


def shape_assignment(mu: Sequence[int], T: StandardTableau) -> ShapeAssignment:
    """S(b) = mu_{w_mu^{-1}(T(b))}."""
    mu = tuple(mu)
    if len(mu) != T.shape.size:
        raise ValueError("composition length must equal shape size")
    _, _, w_mu, _ = sorting_data(mu)
    w_inv = perm_inverse(w_mu)
    values = tuple(
        tuple(
            tuple(mu[w_inv[T.entries[l][i][j] - 1] - 1] for j in range(len(T.entries[l][i])))
            for i in range(len(T.entries[l]))
        )
        for l in range(T.shape.r)
    )
    return ShapeAssignment(T.shape, values)


def assignment_pair(S: ShapeAssignment) -> tuple[Composition, StandardTableau]:
    """A non-decreasing composition mu and standard tableau T with
    shape_assignment(mu, T) = S.

    w_mu reverses each constant block of the non-decreasing mu, so boxes
    sharing an S-value are walked in reverse lex order; the resulting tableau
    entries then increase along rows, and the assignment round-trips.
    """
    boxes = sorted(
        S.shape.boxes(),
        key=lambda b: (S.value(b),) + tuple(-c for c in b.sort_key()),
    )
    mu = tuple(S.value(b) for b in boxes)
    _, _, w_mu, _ = sorting_data(mu)
    entries = [[[0] * row for row in comp] for comp in S.shape.components]
    for pos, b in enumerate(boxes, start=1):
        entries[b.component][b.row - 1][b.column - 1] = w_mu[pos - 1]
    T = StandardTableau(S.shape, tuple(
        tuple(tuple(row) for row in comp) for comp in entries))
    return mu, T
