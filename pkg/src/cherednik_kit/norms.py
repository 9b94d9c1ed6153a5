"""Closed-form spectra and norms for standard modules of G(r,1,n).

Everything here is a pure function of combinatorial data returning exact
AffineForm / FactoredScalar values:

- spectrum: joint eigenvalues of the cyclic generators and the commuting
  (Jucys-Murphy deformed) family z_i on the eigenbasis indexed by (mu, T);
- nonsymmetric_norm: contravariant norm of the eigenvector with leading term
  x^mu v_T^mu;
- symmetric_norm: norm of the symmetrized eigenvector attached to a
  column-strict assignment S with S(b) = beta(b) mod r;
- minimal_assignment / hook_product / extra_product / minimal_norm: the
  minimal-degree invariant and its hook x extra product factorization;
- pochhammer_products: the alternative Pochhammer-symbol expressions,
  proportional to hook/extra products by nonzero constants.

Empty products are 1 throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .combinatorics import (
    BoxRef,
    MultiPartition,
    ShapeAssignment,
    StandardTableau,
    conjugate,
    perm_inverse,
    sorting_data,
)
from .scalars import AffineForm, FactoredScalar, pochhammer


@dataclass(frozen=True)
class SpectralDatum:
    index: int                # 1-based position
    zeta_residue: int         # exponent of the root of unity, mod r
    z_eigenvalue: AffineForm


def _eig_form(r: int, const: int, beta_hi: int, beta_lo: int, ct: int) -> AffineForm:
    """const - (d_{beta_hi} - d_{beta_lo}) - r*ct*c0."""
    d: dict[int, int] = {}
    for idx, val in ((beta_hi % r, -1), (beta_lo % r, 1)):
        d[idx] = d.get(idx, 0) + val
    return AffineForm(r, const=const, c0=-r * ct, d=d)


def spectrum(mu: Sequence[int], T: StandardTableau) -> list[SpectralDatum]:
    """Per index i: the residue beta(T^{-1}(w_mu(i))) - mu_i mod r and the
    eigenvalue mu_i + 1 - (d_{beta(b)} - d_{beta(b)-mu_i-1}) - r*ct(b)*c0,
    with b = T^{-1}(w_mu(i))."""
    mu = tuple(mu)
    shape = T.shape
    r = shape.r
    if len(mu) != shape.size:
        raise ValueError("composition length must equal shape size")
    _, _, w_mu, _ = sorting_data(mu)
    out = []
    for i in range(1, len(mu) + 1):
        b = T.box_of(w_mu[i - 1])
        m = mu[i - 1]
        out.append(SpectralDatum(
            index=i,
            zeta_residue=(b.component - m) % r,
            z_eigenvalue=_eig_form(r, m + 1, b.component, b.component - m - 1, b.content),
        ))
    return out


def nonsymmetric_norm(mu: Sequence[int], T: StandardTableau) -> FactoredScalar:
    """Norm of the joint eigenvector with leading term x^mu v_T^mu, as a
    factored product of affine forms (squares kept as repeated factors,
    difference-of-squares split into two affine factors)."""
    mu = tuple(mu)
    shape = T.shape
    r = shape.r
    n = shape.size
    if len(mu) != n:
        raise ValueError("composition length must equal shape size")
    _, _, w_mu, _ = sorting_data(mu)
    boxes = [T.box_of(w_mu[i - 1]) for i in range(1, n + 1)]
    a = [b.content for b in boxes]
    beta = [b.component for b in boxes]

    result = FactoredScalar.one(r)
    for i in range(n):
        for k in range(1, mu[i] + 1):
            result = result * _eig_form(r, k, beta[i], beta[i] - k, a[i])

    rc0 = AffineForm(r, c0=r)

    def ratio_block(hi: int, lo: int, top: int):
        # prod over 1 <= k <= top, k = beta_hi - beta_lo mod r, of
        # ((X - r c0)(X + r c0)) / X^2 with X = k - (d_hi - d_lo) - r(a_hi - a_lo) c0
        block = FactoredScalar.one(r)
        for k in range(1, top + 1):
            if (k - (beta[hi] - beta[lo])) % r != 0:
                continue
            x = _eig_form(r, k, beta[hi], beta[lo], a[hi] - a[lo])
            block = block * (x - rc0) * (x + rc0)
            block = block / x / x
        return block

    for i in range(n):
        for j in range(i + 1, n):
            if mu[i] > mu[j]:
                result = result * ratio_block(i, j, mu[i] - mu[j])
            if mu[i] < mu[j] - 1:
                result = result * ratio_block(j, i, mu[j] - mu[i] - 1)
    return result


def symmetric_norm(S: ShapeAssignment) -> FactoredScalar:
    """Norm of the symmetrized eigenvector g attached to a column-strict,
    residue-compatible assignment S: n! times a product over boxes and a
    double product of ratios over ordered box pairs."""
    if not S.is_column_strict():
        raise ValueError("assignment must be column-strict")
    if not S.satisfies_residues():
        raise ValueError("assignment must satisfy S(b) = beta(b) mod r")
    shape = S.shape
    r = shape.r
    n = shape.size
    boxes = shape.boxes()

    result = FactoredScalar.from_rational(r, factorial(n))
    for b in boxes:
        for k in range(1, S.value(b) + 1):
            result = result * _eig_form(r, k, b.component, b.component - k, b.content)

    for b in boxes:
        for b2 in boxes:
            db = b.component - b2.component
            dct = b.content - b2.content
            top1 = S.value(b) - S.value(b2)
            for k in range(1, top1 + 1):
                if (k - db) % r != 0:
                    continue
                result = result * _eig_form(r, k, b.component, b2.component, dct - 1)
                result = result / _eig_form(r, k, b.component, b2.component, dct)
            for k in range(1, top1 - r + 1):
                if (k - db) % r != 0:
                    continue
                result = result * _eig_form(r, k, b.component, b2.component, dct + 1)
                result = result / _eig_form(r, k, b.component, b2.component, dct)
    return result


def symmetrization_block_factor(S: ShapeAssignment) -> FactoredScalar:
    """The scalar relating the closed product formula for the symmetrized
    eigenvector's norm to the norm of the symmetrization of the canonical
    monic eigenvector (assignment_pair's tableau choice).

    The symmetrized vector is only canonical up to a constant; the closed
    formula normalizes away the contribution of box pairs sharing an
    assignment value.  For the canonical tableau that contribution is
    prod over unordered pairs x < y (lex) with S(x) = S(y) of
    (D + r c0)/D, with D = (d_beta(y) - d_beta(x)) + r(ct(y) - ct(x)) c0;
    the oracle's norm of the symmetrized eigenvector equals
    gram(T) * this * closed formula.  For the minimal assignment this factor
    is the integer prod over rows of (row length)!."""
    shape = S.shape
    r = shape.r
    rc0 = AffineForm(r, c0=r)
    boxes = sorted(shape.boxes(), key=BoxRef.sort_key)
    result = FactoredScalar.one(r)
    for a in range(len(boxes)):
        for bidx in range(a + 1, len(boxes)):
            x, y = boxes[a], boxes[bidx]
            if S.value(x) != S.value(y):
                continue
            d = -_eig_form(r, 0, y.component, x.component, y.content - x.content)
            result = result * (d + rc0) / d
    return result


def minimal_assignment(shape: MultiPartition) -> ShapeAssignment:
    """The minimal column-strict assignment: S(b) = l + (row(b)-1)*r for
    boxes of component l."""
    r = shape.r
    values = tuple(
        tuple(tuple(l + (i - 1) * r for _ in range(row)) for i, row in enumerate(comp, start=1))
        for l, comp in enumerate(shape.components)
    )
    return ShapeAssignment(shape, values)


def lower_rim(shape: MultiPartition) -> list[BoxRef]:
    """Boxes not directly above another box of the same component."""
    out = []
    for l, comp in enumerate(shape.components):
        for i, row in enumerate(comp, start=1):
            below = comp[i] if i < len(comp) else 0
            for j in range(1, row + 1):
                if j > below:
                    out.append(BoxRef(l, i, j))
    return out


def right_rim(shape: MultiPartition) -> list[BoxRef]:
    """Boxes not directly to the left of another box of the same component."""
    return [BoxRef(l, i, row)
            for l, comp in enumerate(shape.components)
            for i, row in enumerate(comp, start=1)]


@dataclass(frozen=True)
class CornerDatum:
    """Lower-left corner data for one component; an empty component gets the
    convention box in row 0, column 1, so S_l = l - r and c_l = 1."""
    component: int
    s_value: int
    content: int


def corner_data(shape: MultiPartition) -> list[CornerDatum]:
    r = shape.r
    out = []
    for l, comp in enumerate(shape.components):
        length = len(comp)
        if length == 0:
            out.append(CornerDatum(l, l - r, 1))
        else:
            out.append(CornerDatum(l, l + (length - 1) * r, 1 - length))
    return out


def hook_product(shape: MultiPartition) -> FactoredScalar:
    """Product over (b in lower rim, b' in right rim) and
    1 <= k <= S(b)-S(b'), k = beta(b)-beta(b') mod r, of
    k - (d_beta(b) - d_beta(b')) - r(ct(b) - ct(b') - 1)c0,
    with S the minimal assignment."""
    r = shape.r
    S = minimal_assignment(shape)
    result = FactoredScalar.one(r)
    for b in lower_rim(shape):
        for b2 in right_rim(shape):
            db = b.component - b2.component
            for k in range(1, S.value(b) - S.value(b2) + 1):
                if (k - db) % r != 0:
                    continue
                result = result * _eig_form(r, k, b.component, b2.component,
                                            b.content - b2.content - 1)
    return result


def extra_product(shape: MultiPartition) -> FactoredScalar:
    """Product over boxes b and components l of the factors
    k - (d_beta(b) - d_l) - r(ct(b) - c_l + 1)c0
    for 1 <= k <= S(b) - S_l - r, k = beta(b) - l mod r."""
    r = shape.r
    S = minimal_assignment(shape)
    corners = corner_data(shape)
    result = FactoredScalar.one(r)
    for b in shape.boxes():
        for corner in corners:
            l = corner.component
            for k in range(1, S.value(b) - corner.s_value - r + 1):
                if (k - (b.component - l)) % r != 0:
                    continue
                result = result * _eig_form(r, k, b.component, l,
                                            b.content - corner.content + 1)
    return result


def minimal_norm(shape: MultiPartition) -> FactoredScalar:
    """n! * hook_product * extra_product, the norm of the minimal-degree
    invariant."""
    return (FactoredScalar.from_rational(shape.r, factorial(shape.size))
            * hook_product(shape) * extra_product(shape))


def removal_correction(shape: MultiPartition, b: BoxRef) -> FactoredScalar:
    """The single-box recurrence factor: with chi = shape minus b (b must
    carry the maximal minimal-assignment value), minimal_norm(shape) equals
    n * minimal_norm(chi) * removal_correction(shape, b)."""
    r = shape.r
    S = minimal_assignment(shape)
    sb = S.value(b)
    if any(S.value(b2) > sb for b2 in shape.boxes()):
        raise ValueError("box must carry a maximal assignment value")
    result = FactoredScalar.one(r)
    for k in range(1, sb + 1):
        result = result * _eig_form(r, k, b.component, b.component - k, b.content)
    others = [b2 for b2 in shape.boxes() if b2 != b]
    for b2 in others:
        db = b.component - b2.component
        dct = b.content - b2.content
        for k in range(1, sb - S.value(b2) + 1):
            if (k - db) % r != 0:
                continue
            result = result * _eig_form(r, k, b.component, b2.component, dct - 1)
            result = result / _eig_form(r, k, b.component, b2.component, dct)
        for k in range(1, sb - S.value(b2) - r + 1):
            if (k - db) % r != 0:
                continue
            result = result * _eig_form(r, k, b.component, b2.component, dct + 1)
            result = result / _eig_form(r, k, b.component, b2.component, dct)
    return result


def pochhammer_products(shape: MultiPartition) -> tuple[FactoredScalar, FactoredScalar]:
    """(H_alt, E_alt): quadruple products of Pochhammer symbols over
    conjugate-partition data, proportional to hook_product and extra_product
    by nonzero constants (powers of r up to sign).

    An empty component contributes conjugate (0), i.e. first column height 0.
    """
    r = shape.r
    comps = shape.components
    conj = [conjugate(c) for c in comps]

    def col_height(k: int, j: int) -> int:
        return conj[k][j - 1] if j - 1 < len(conj[k]) else 0

    def first_height(k: int) -> int:
        return conj[k][0] if conj[k] else 0

    def row_len(k: int, i: int) -> int:
        return comps[k][i - 1] if i - 1 < len(comps[k]) else 0

    h_alt = FactoredScalar.one(r)
    e_alt = FactoredScalar.one(r)
    for k in range(r):
        for l in range(r):
            dmap: dict[int, Fraction] = {k: Fraction(-1, r)}
            dmap[l] = dmap.get(l, Fraction(0)) + Fraction(1, r)
            dk_dl = AffineForm(r, d=dmap)
            if l < k:
                base_const = Fraction(k - l, r)
                shift = 1
            else:
                base_const = Fraction(r + k - l, r)
                shift = 0
            # hook part
            for i in range(1, min(first_height(k), first_height(l)) + 1):
                for j in range(1, row_len(k, i) + 1):
                    c0_coeff = col_height(k, j) + row_len(l, i) - i - j + 1
                    x = AffineForm(r, const=base_const, c0=c0_coeff) + dk_dl
                    h_alt = h_alt * pochhammer(x, col_height(k, j) - i + shift)
            # extra part
            lo = first_height(l) + (1 if l < k else 2)
            for i in range(lo, first_height(k) + 1):
                for j in range(1, row_len(k, i) + 1):
                    c0_coeff = i - j - first_height(l)
                    x = AffineForm(r, const=base_const, c0=c0_coeff) + dk_dl
                    e_alt = e_alt * pochhammer(x, i - first_height(l) - (1 - shift))
    return h_alt, e_alt
